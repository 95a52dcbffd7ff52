"""Homomorphism sets, Hom-objects over medial targets, congruences and quotients.

Homomorphisms are stored as 0-based image vectors and ordered
lexicographically; every Hom-object table indexes into that order.
"""
from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence, Union

from ._search import brute_force_homs, iter_homs
from .core import (
    AxiomError,
    FiniteBiquandle,
    FiniteQuandle,
    OperationTable,
    associated_quandle,
    is_medial_biquandle,
    is_medial_quandle,
    is_two_reductive,
)

Algebra = Union[FiniteQuandle, FiniteBiquandle]


class NotMedialError(ValueError):
    """Raised when a Hom-object is requested for a non-medial target."""


@dataclass(frozen=True, order=True)
class HomElement:
    images: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.images[x]

    def one_based(self) -> tuple[int, ...]:
        return tuple(v + 1 for v in self.images)

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.one_based()) + ")"


@dataclass(frozen=True)
class HomSet:
    source: Algebra
    target: Algebra
    elements: tuple[HomElement, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, f: object) -> bool:
        return f in self.index

    @property
    def index(self) -> dict[HomElement, int]:
        return {f: i for i, f in enumerate(self.elements)}

    def one_based(self) -> list[tuple[int, ...]]:
        return [f.one_based() for f in self.elements]

    def to_json(self) -> str:
        return json.dumps(self.one_based())


def hom_set_from_json(text: str) -> list[tuple[int, ...]]:
    return [tuple(v) for v in json.loads(text)]


def _threads(threads: int | None) -> int:
    if threads is not None:
        return max(1, threads)
    try:
        return max(1, int(os.environ.get("BIQUANDLE_THREADS", "1")))
    except ValueError:
        return 1


def _enumerate(x: Algebra, y: Algebra, threads: int | None) -> tuple[HomElement, ...]:
    n, m = x.n, y.n
    workers = _threads(threads)
    if workers == 1 or n == 0 or m <= 1:
        return tuple(HomElement(f) for f in iter_homs(x.ops, y.ops, n, m))
    # split on the image of the first element; branches are merged in order
    branches = [[[v]] + [list(range(m))] * (n - 1) for v in range(m)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(lambda c: list(iter_homs(x.ops, y.ops, n, m, candidates=c)), branches)
    return tuple(HomElement(f) for part in parts for f in part)


def enumerate_quandle_homs(x: FiniteQuandle, y: FiniteQuandle, threads: int | None = None) -> HomSet:
    return HomSet(x, y, _enumerate(x, y, threads))


def enumerate_biquandle_homs(
    x: FiniteBiquandle, y: FiniteBiquandle, threads: int | None = None
) -> HomSet:
    return HomSet(x, y, _enumerate(x, y, threads))


def brute_force_hom_set(x: Algebra, y: Algebra) -> list[tuple[int, ...]]:
    return brute_force_homs(x.ops, y.ops, x.n, y.n)


def _pointwise_table(h: HomSet, op) -> OperationTable:
    index = h.index
    elems = h.elements
    cells = []
    for f in elems:
        row = []
        for g in elems:
            fg = HomElement(tuple(op(f(a), g(a)) for a in range(h.source.n)))
            if fg not in index:
                raise AssertionError(f"pointwise value {fg} is not a homomorphism")
            row.append(index[fg])
        cells.append(row)
    return OperationTable(tuple(tuple(r) for r in cells))


def hom_quandle(x: FiniteQuandle, y: FiniteQuandle) -> tuple[FiniteQuandle, HomSet]:
    """Pointwise quandle on ``Hom_Q(x, y)``; needs a medial target."""
    if not is_medial_quandle(y):
        raise NotMedialError("target must be medial")
    h = enumerate_quandle_homs(x, y)
    if not len(h):
        raise ValueError("empty hom set")
    return FiniteQuandle(_pointwise_table(h, y.op)), h


def hom_biquandle(x: FiniteBiquandle, y: FiniteBiquandle) -> tuple[FiniteBiquandle, HomSet]:
    """Pointwise biquandle on ``Hom_B(x, y)``; needs a medial target.

    The result is validated as a biquandle; an empty hom set raises
    ``ValueError`` since there is no empty biquandle to return.
    """
    if not is_medial_biquandle(y):
        raise NotMedialError("target must be medial")
    h = enumerate_biquandle_homs(x, y)
    if not len(h):
        raise ValueError("empty hom set")
    b = FiniteBiquandle(_pointwise_table(h, y.up), _pointwise_table(h, y.dn))
    return b, h


def format_hom_object(obj: Algebra, h: HomSet) -> str:
    """Table text with a header comment listing element -> image vector."""
    from .textio import format_biquandle, format_table

    comment = "\n".join(f"{i + 1} = {f}" for i, f in enumerate(h.elements))
    if isinstance(obj, FiniteBiquandle):
        return format_biquandle(obj, comment)
    return format_table(obj.table, comment)


# -- lifting and functoriality -------------------------------------------------


def lift_check(x: FiniteBiquandle, y: FiniteBiquandle, f: Sequence[int]) -> bool:
    """Whether a quandle map of associated quandles is a biquandle map.

    It lifts exactly when it is a homomorphism of the associated quandles and
    ``f o alpha_a == beta_{f(a)} o f`` for every ``a`` (alpha, beta the
    structure maps ``y -> x ⊼ y`` columns of the source and target).
    """
    qx, qy = associated_quandle(x), associated_quandle(y)
    if any(f[qx.op(a, b)] != qy.op(f[a], f[b]) for a in range(x.n) for b in range(x.n)):
        return False
    return all(f[x.dn(z, a)] == y.dn(f[z], f[a]) for a in range(x.n) for z in range(x.n))


def hom_associated_quandle_check(x: FiniteBiquandle, y: FiniteBiquandle) -> bool:
    """``Hom_B(x, y)`` equals the lifting subset of ``Hom_Q(Q(x), Q(y))``."""
    bq = {f.images for f in enumerate_biquandle_homs(x, y)}
    qq = enumerate_quandle_homs(associated_quandle(x), associated_quandle(y))
    lifted = {f.images for f in qq if lift_check(x, y, f.images)}
    return bq == lifted


def compose(g: Sequence[int], f: Sequence[int]) -> tuple[int, ...]:
    """``g o f``."""
    return tuple(g[v] for v in f)


def precompose(h: HomSet, f: Sequence[int]) -> dict[HomElement, HomElement]:
    """``k -> k o f`` for ``f: W -> source``; lands in ``Hom(W, target)``."""
    return {k: HomElement(compose(k.images, f)) for k in h}


def postcompose(h: HomSet, g: Sequence[int]) -> dict[HomElement, HomElement]:
    """``k -> g o k`` for ``g: target -> Z``; lands in ``Hom(source, Z)``."""
    return {k: HomElement(compose(g, k.images)) for k in h}


def is_homomorphism(x: Algebra, y: Algebra, f: Sequence[int]) -> bool:
    return all(
        f[s[a][b]] == d[f[a]][f[b]]
        for s, d in zip(x.ops, y.ops)
        for a in range(x.n)
        for b in range(x.n)
    )


# -- generating sets and the power embedding -----------------------------------


def _closure(x: Algebra, gens: Iterable[int]) -> set[int]:
    """Subalgebra generated by ``gens``; inverse operations are included
    because subalgebras of finite (bi)quandles are closed under them anyway."""
    seen = set(gens)
    frontier = list(seen)
    while frontier:
        new = []
        for a in frontier:
            for b in list(seen):
                for op in x.ops:
                    for v in (op[a][b], op[b][a]):
                        if v not in seen:
                            seen.add(v)
                            new.append(v)
        frontier = new
    return seen


def minimal_generating_set(x: Algebra) -> tuple[int, ...]:
    """Lexicographically first generating set of least size (0-based)."""
    from itertools import combinations

    for k in range(1, x.n + 1):
        for gens in combinations(range(x.n), k):
            if len(_closure(x, gens)) == x.n:
                return gens
    return ()


@dataclass(frozen=True)
class PowerEmbedding:
    generators: tuple[int, ...]
    power: FiniteBiquandle
    image: FiniteBiquandle
    mapping: dict


def _power(y: FiniteBiquandle, k: int) -> tuple[FiniteBiquandle, list[tuple[int, ...]]]:
    tuples = list(product(range(y.n), repeat=k))
    index = {t: i for i, t in enumerate(tuples)}
    under = OperationTable.from_function(
        len(tuples), lambda a, b: index[tuple(y.up(p, q) for p, q in zip(tuples[a], tuples[b]))]
    )
    over = OperationTable.from_function(
        len(tuples), lambda a, b: index[tuple(y.dn(p, q) for p, q in zip(tuples[a], tuples[b]))]
    )
    return FiniteBiquandle(under, over), tuples


def embed_into_power(x: FiniteBiquandle, y: FiniteBiquandle) -> PowerEmbedding:
    """``f -> (f(x_1), ..., f(x_k))`` from ``Hom_B(x, y)`` into ``y^k``.

    ``x_1..x_k`` is :func:`minimal_generating_set`.  The image is returned as
    a sub-biquandle with elements in the lexicographic order of the hom set,
    so it can be compared directly with :func:`hom_biquandle`.
    """
    gens = minimal_generating_set(x)
    power, tuples = _power(y, len(gens))
    index = {t: i for i, t in enumerate(tuples)}
    h = enumerate_biquandle_homs(x, y)
    mapping = {f: index[tuple(f(g) for g in gens)] for f in h}
    if len(set(mapping.values())) != len(mapping):
        raise AssertionError("power embedding is not injective")
    points = [mapping[f] for f in h]
    local = {p: i for i, p in enumerate(points)}

    def restrict(cells):
        rows = []
        for p in points:
            row = []
            for q in points:
                v = cells[p][q]
                if v not in local:
                    raise AssertionError("image of the power embedding is not closed")
                row.append(local[v])
            rows.append(tuple(row))
        return OperationTable(tuple(rows))

    image = FiniteBiquandle(restrict(power.under.cells), restrict(power.over.cells))
    return PowerEmbedding(gens, power, image, mapping)


# -- terms, identities and congruences -----------------------------------------


@dataclass(frozen=True)
class Term:
    """A variable (``op is None``, ``var`` set) or ``left op right`` with op in ``up``/``dn``."""

    op: str | None = None
    left: "Term | None" = None
    right: "Term | None" = None
    var: int = 0

    def evaluate(self, x: FiniteBiquandle, env: Sequence[int]) -> int:
        if self.op is None:
            return env[self.var]
        a = self.left.evaluate(x, env)
        b = self.right.evaluate(x, env)
        return x.up(a, b) if self.op == "up" else x.dn(a, b)

    def variables(self) -> set[int]:
        if self.op is None:
            return {self.var}
        return self.left.variables() | self.right.variables()


def var(i: int) -> Term:
    return Term(var=i)


def up(a: Term, b: Term) -> Term:
    return Term("up", a, b)


def dn(a: Term, b: Term) -> Term:
    return Term("dn", a, b)


@dataclass(frozen=True)
class Identity:
    lhs: Term
    rhs: Term

    def arity(self) -> int:
        return max(self.lhs.variables() | self.rhs.variables()) + 1

    def holds(self, x: FiniteBiquandle) -> bool:
        return all(
            self.lhs.evaluate(x, env) == self.rhs.evaluate(x, env)
            for env in product(range(x.n), repeat=self.arity())
        )


_a, _b, _c = var(0), var(1), var(2)
TWO_REDUCTIVE_IDENTITIES = (
    Identity(up(_a, up(_b, _c)), up(_a, _b)),
    Identity(dn(_a, dn(_b, _c)), dn(_a, _b)),
    Identity(up(_a, dn(_b, _c)), up(_a, _b)),
    Identity(dn(_a, up(_b, _c)), dn(_a, _b)),
)


def instantiate_identities(x: FiniteBiquandle, ids: Sequence[Identity]) -> list[tuple[int, int]]:
    pairs = set()
    for ident in ids:
        for env in product(range(x.n), repeat=ident.arity()):
            pairs.add((ident.lhs.evaluate(x, env), ident.rhs.evaluate(x, env)))
    return sorted(pairs)


@dataclass(frozen=True)
class Congruence:
    """A partition of ``range(n)``; ``block_of[i]`` numbers blocks by least element order."""

    block_of: tuple[int, ...]

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "Congruence":
        ids: dict[int, int] = {}
        return cls(tuple(ids.setdefault(v, len(ids)) for v in labels))

    @property
    def n(self) -> int:
        return len(self.block_of)

    def blocks(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for i, b in enumerate(self.block_of):
            out.setdefault(b, []).append(i)
        return [out[k] for k in sorted(out)]

    def __len__(self) -> int:
        return len(set(self.block_of))

    def refines(self, other: "Congruence") -> bool:
        return all(
            other.block_of[i] == other.block_of[j]
            for i in range(self.n)
            for j in range(self.n)
            if self.block_of[i] == self.block_of[j]
        )


def is_congruence(x: FiniteBiquandle, c: Congruence) -> bool:
    blocks = c.block_of
    for op in x.ops:
        for a, a2 in product(range(x.n), repeat=2):
            if blocks[a] != blocks[a2]:
                continue
            for b in range(x.n):
                if blocks[op[a][b]] != blocks[op[a2][b]] or blocks[op[b][a]] != blocks[op[b][a2]]:
                    return False
    return True


def congruence_closure(x: FiniteBiquandle, pairs: Iterable[tuple[int, int]]) -> Congruence:
    """Smallest congruence containing ``pairs`` (union-find with a worklist).

    Each merge of ``a`` and ``b`` queues the pairs ``(a o c, b o c)`` and
    ``(c o a, c o b)`` for both operations and every ``c``; when the queue
    drains the partition is compatible with both operations.
    """
    parent = list(range(x.n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    work = list(pairs)
    while work:
        a, b = work.pop()
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        parent[max(ra, rb)] = min(ra, rb)
        for op in x.ops:
            for c in range(x.n):
                work.append((op[a][c], op[b][c]))
                work.append((op[c][a], op[c][b]))
    c = Congruence.from_labels([find(i) for i in range(x.n)])
    if not is_congruence(x, c):
        raise AssertionError("closure is not compatible with the operations")
    return c


def _partitions(n: int):
    def rec(i: int, labels: list[int], k: int):
        if i == n:
            yield tuple(labels)
            return
        for v in range(k + 1):
            labels.append(v)
            yield from rec(i + 1, labels, max(k, v + 1))
            labels.pop()

    yield from rec(0, [], 0)


def brute_force_congruence_closure(x: FiniteBiquandle, pairs: Iterable[tuple[int, int]]) -> Congruence:
    """Meet of all congruences containing ``pairs``, found by listing every partition."""
    pairs = list(pairs)
    meet = None
    for labels in _partitions(x.n):
        if any(labels[a] != labels[b] for a, b in pairs):
            continue
        c = Congruence(labels)
        if not is_congruence(x, c):
            continue
        if meet is None:
            meet = c
        else:
            meet = Congruence.from_labels(
                [(meet.block_of[i], c.block_of[i]) for i in range(x.n)]
            )
    return meet


@dataclass(frozen=True)
class Quotient:
    biquandle: FiniteBiquandle
    congruence: Congruence
    projection: HomElement


def quotient_biquandle(x: FiniteBiquandle, c: Congruence) -> Quotient:
    if c.n != x.n or not is_congruence(x, c):
        raise AxiomError("partition is not a congruence")
    blocks = c.blocks()
    k = len(blocks)

    def induced(op):
        cells = [[None] * k for _ in range(k)]
        for i, bi in enumerate(blocks):
            for j, bj in enumerate(blocks):
                vals = {c.block_of[op[a][b]] for a in bi for b in bj}
                if len(vals) != 1:
                    raise AssertionError("operation is not well defined on blocks")
                cells[i][j] = vals.pop()
        return OperationTable(tuple(tuple(r) for r in cells))

    q = FiniteBiquandle(induced(x.under.cells), induced(x.over.cells))
    return Quotient(q, c, HomElement(c.block_of))


def two_reductive_congruence(x: FiniteBiquandle) -> Congruence:
    return congruence_closure(x, instantiate_identities(x, TWO_REDUCTIVE_IDENTITIES))


def two_reductive_quotient(x: FiniteBiquandle) -> Quotient:
    q = quotient_biquandle(x, two_reductive_congruence(x))
    if not is_two_reductive(q.biquandle):
        raise AssertionError("quotient is not 2-reductive")
    return q


def factor_through(q: Quotient, f: HomElement) -> HomElement:
    """The map on blocks induced by ``f``; ``f`` must be constant on blocks."""
    images: dict[int, int] = {}
    for a, b in enumerate(q.congruence.block_of):
        if images.setdefault(b, f(a)) != f(a):
            raise ValueError("map does not factor through the quotient")
    return HomElement(tuple(images[b] for b in range(len(q.congruence))))


__all__ = [
    "Congruence",
    "HomElement",
    "HomSet",
    "Identity",
    "NotMedialError",
    "PowerEmbedding",
    "Quotient",
    "TWO_REDUCTIVE_IDENTITIES",
    "Term",
    "brute_force_congruence_closure",
    "brute_force_hom_set",
    "compose",
    "congruence_closure",
    "dn",
    "embed_into_power",
    "enumerate_biquandle_homs",
    "enumerate_quandle_homs",
    "factor_through",
    "format_hom_object",
    "hom_associated_quandle_check",
    "hom_biquandle",
    "hom_quandle",
    "instantiate_identities",
    "is_congruence",
    "is_homomorphism",
    "lift_check",
    "minimal_generating_set",
    "postcompose",
    "precompose",
    "quotient_biquandle",
    "two_reductive_congruence",
    "two_reductive_quotient",
    "up",
    "var",
]
