"""Finite quandles and biquandles given by operation tables.

Elements are stored 0-based; every text format and every ``one_based``
accessor uses the labels ``1..n`` of the usual table notation.  Objects are
immutable and validated when constructed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Sequence

from ._search import iter_homs
from .perm import Permutation, conjugacy_class_count


class FormatError(ValueError):
    """Malformed input: wrong shape, out-of-range cell, unparsable text."""


class AxiomError(ValueError):
    """A table is well formed but fails the axioms its type requires."""


@dataclass(frozen=True)
class OperationTable:
    """An ``n x n`` table; ``cells[i][j]`` is ``i o j`` (all 0-based)."""

    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.cells)
        for i, row in enumerate(self.cells):
            if len(row) != n:
                raise FormatError(f"row {i + 1} has {len(row)} entries, expected {n}")
            for j, v in enumerate(row):
                if not isinstance(v, int) or not 0 <= v < n:
                    raise FormatError(f"cell ({i + 1},{j + 1}) = {_one(v)} outside 1..{n}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "OperationTable":
        """Build from 1-based rows, as tables are written in files."""
        return cls(tuple(tuple(int(v) - 1 for v in row) for row in rows))

    @classmethod
    def from_function(cls, n: int, fn: Callable[[int, int], int]) -> "OperationTable":
        return cls(tuple(tuple(fn(i, j) for j in range(n)) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.cells)

    def __call__(self, i: int, j: int) -> int:
        return self.cells[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.cells)

    def rows(self) -> list[list[int]]:
        return [[v + 1 for v in row] for row in self.cells]

    def permuted(self, phi: Permutation) -> "OperationTable":
        """The table transported along ``phi``: ``phi(i) o' phi(j) = phi(i o j)``."""
        inv = phi.inverse()
        return OperationTable.from_function(self.n, lambda i, j: phi(self.cells[inv(i)][inv(j)]))


def _one(v: object) -> object:
    return v + 1 if isinstance(v, int) else v


@dataclass(frozen=True)
class PropertyReport:
    name: str
    holds: bool
    witness: tuple[int, ...] | None = None
    failed: str | None = None

    def __bool__(self) -> bool:
        return self.holds

    def __str__(self) -> str:
        if self.holds:
            return f"{self.name}: holds"
        return f"{self.name}: fails ({self.failed} at {self.witness})"


def _first_violation(n: int, arity: int, ok: Callable[..., bool]) -> tuple[int, ...] | None:
    for t in product(range(n), repeat=arity):
        if not ok(*t):
            return t
    return None


def _collision(n: int, fn: Callable[[int, int], int]) -> tuple[int, ...] | None:
    """Least ``(x1, x2, y)`` with ``x1 < x2`` and ``fn(x1, y) == fn(x2, y)``."""
    for x1 in range(n):
        for x2 in range(x1 + 1, n):
            for y in range(n):
                if fn(x1, y) == fn(x2, y):
                    return (x1, x2, y)
    return None


def _fail(name: str, axiom: str, t: tuple[int, ...]) -> PropertyReport:
    return PropertyReport(name, False, tuple(v + 1 for v in t), axiom)


def validate_quandle(t: OperationTable) -> PropertyReport:
    """Check idempotence, invertible right translations and right self-distributivity.

    The witness is 1-based: ``(x,)`` for idempotence, ``(x1, x2, y)`` with
    ``x1*y == x2*y`` for invertibility, ``(x, y, z)`` for distributivity.
    """
    if not isinstance(t, OperationTable):
        raise FormatError("expected an OperationTable")
    c = t.cells
    n = t.n
    w = _first_violation(n, 1, lambda x: c[x][x] == x)
    if w is not None:
        return _fail("quandle", "idempotence", w)
    w = _collision(n, lambda x, y: c[x][y])
    if w is not None:
        return _fail("quandle", "right invertibility", w)
    w = _first_violation(n, 3, lambda x, y, z: c[c[x][y]][z] == c[c[x][z]][c[y][z]])
    if w is not None:
        return _fail("quandle", "right self-distributivity", w)
    return PropertyReport("quandle", True)


def validate_biquandle(under: OperationTable, over: OperationTable) -> PropertyReport:
    if under.n != over.n:
        raise FormatError(f"order mismatch: {under.n} vs {over.n}")
    u, o = under.cells, over.cells
    n = under.n
    w = _first_violation(n, 1, lambda x: u[x][x] == o[x][x])
    if w is not None:
        return _fail("biquandle", "diagonal", w)
    w = _collision(n, lambda x, y: u[x][y])
    if w is not None:
        return _fail("biquandle", "alpha invertibility", w)
    w = _collision(n, lambda x, y: o[x][y])
    if w is not None:
        return _fail("biquandle", "beta invertibility", w)
    seen: dict[tuple[int, int], tuple[int, int]] = {}
    for x, y in product(range(n), repeat=2):
        img = (o[y][x], u[x][y])
        if img in seen:
            return _fail("biquandle", "pair map bijectivity", seen[img] + (x, y))
        seen[img] = (x, y)
    laws = (
        ("exchange law 1", lambda x, y, z: u[u[x][y]][u[z][y]] == u[u[x][z]][o[y][z]]),
        ("exchange law 2", lambda x, y, z: o[u[x][y]][u[z][y]] == u[o[x][z]][o[y][z]]),
        ("exchange law 3", lambda x, y, z: o[o[x][y]][o[z][y]] == o[o[x][z]][u[y][z]]),
    )
    for label, ok in laws:
        w = _first_violation(n, 3, ok)
        if w is not None:
            return _fail("biquandle", label, w)
    return PropertyReport("biquandle", True)


def _column_perms(t: OperationTable) -> tuple[Permutation, ...]:
    return tuple(Permutation(t.column(y)) for y in range(t.n))


def _inverse_table(t: OperationTable) -> tuple[tuple[int, ...], ...]:
    """``inv[z][y]`` is the unique ``x`` with ``x o y == z``."""
    n = t.n
    inv = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            inv[t.cells[x][y]][y] = x
    return tuple(tuple(r) for r in inv)


@dataclass(frozen=True, eq=False)
class FiniteQuandle:
    table: OperationTable
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        report = validate_quandle(self.table)
        if not report:
            raise AxiomError(str(report))
        object.__setattr__(self, "_inv", _inverse_table(self.table))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], name: str = "") -> "FiniteQuandle":
        return cls(OperationTable.from_rows(rows), name)

    @property
    def n(self) -> int:
        return self.table.n

    def op(self, x: int, y: int) -> int:
        return self.table.cells[x][y]

    def inv_op(self, x: int, y: int) -> int:
        """``x *^-1 y``, i.e. ``R_y^-1(x)``."""
        return self._inv[x][y]

    def right_translation(self, y: int) -> Permutation:
        return Permutation(self.table.column(y))

    @property
    def ops(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        return (self.table.cells,)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteQuandle) and self.table == other.table

    def __hash__(self) -> int:
        return hash(("Q", self.table))

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<FiniteQuandle{label} n={self.n}>"


@dataclass(frozen=True, eq=False)
class FiniteBiquandle:
    under: OperationTable
    over: OperationTable
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        report = validate_biquandle(self.under, self.over)
        if not report:
            raise AxiomError(str(report))
        object.__setattr__(self, "_over_inv", _inverse_table(self.over))

    @classmethod
    def from_rows(cls, under, over, name: str = "") -> "FiniteBiquandle":
        return cls(OperationTable.from_rows(under), OperationTable.from_rows(over), name)

    @property
    def n(self) -> int:
        return self.under.n

    def up(self, x: int, y: int) -> int:
        """Under operation ``x ⊻ y``."""
        return self.under.cells[x][y]

    def dn(self, x: int, y: int) -> int:
        """Over operation ``x ⊼ y``."""
        return self.over.cells[x][y]

    def alpha(self, y: int) -> Permutation:
        return Permutation(self.under.column(y))

    def beta(self, y: int) -> Permutation:
        return Permutation(self.over.column(y))

    def beta_inv(self, x: int, y: int) -> int:
        return self._over_inv[x][y]

    @property
    def ops(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        return (self.under.cells, self.over.cells)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FiniteBiquandle)
            and self.under == other.under
            and self.over == other.over
        )

    def __hash__(self) -> int:
        return hash(("B", self.under, self.over))

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<FiniteBiquandle{label} n={self.n}>"


def quandle_as_biquandle(q: FiniteQuandle) -> FiniteBiquandle:
    """``(Q, *, x ⊼ y = x)``."""
    return FiniteBiquandle(q.table, trivial_table(q.n), q.name)


def trivial_table(n: int) -> OperationTable:
    return OperationTable.from_function(n, lambda x, y: x)


def associated_quandle(b: FiniteBiquandle) -> FiniteQuandle:
    """``x * y = beta_y^-1(x ⊻ y)``."""
    t = OperationTable.from_function(b.n, lambda x, y: b.beta_inv(b.up(x, y), y))
    report = validate_quandle(t)
    if not report:
        raise AssertionError(f"associated quandle failed validation: {report}")
    return FiniteQuandle(t)


# -- isomorphism and automorphism ---------------------------------------------


def _quandle_profile(q: FiniteQuandle, x: int) -> tuple:
    row = q.table.cells[x]
    return (q.right_translation(x).cycle_type(), len(set(row)), row.count(x))


def _biquandle_profile(b: FiniteBiquandle, x: int) -> tuple:
    urow, orow = b.under.cells[x], b.over.cells[x]
    return (
        b.alpha(x).cycle_type(),
        b.beta(x).cycle_type(),
        b.up(x, x) == x,
        len(set(urow)),
        len(set(orow)),
        urow.count(x),
        orow.count(x),
    )


def _candidates(p1: list, p2: list) -> list[list[int]] | None:
    if sorted(p1) != sorted(p2):
        return None
    return [[y for y in range(len(p2)) if p2[y] == p] for p in p1]


def _isomorphisms(a, b, profile) -> Iterable[tuple[int, ...]]:
    if a.n != b.n:
        return iter(())
    cand = _candidates([profile(a, x) for x in range(a.n)], [profile(b, x) for x in range(b.n)])
    if cand is None:
        return iter(())
    return iter_homs(a.ops, b.ops, a.n, b.n, injective=True, candidates=cand)


def quandle_isomorphism(q1: FiniteQuandle, q2: FiniteQuandle) -> Permutation | None:
    """Lexicographically least isomorphism ``q1 -> q2``, or ``None``."""
    for f in _isomorphisms(q1, q2, _quandle_profile):
        return Permutation(f)
    return None


def biquandle_isomorphism(b1: FiniteBiquandle, b2: FiniteBiquandle) -> Permutation | None:
    for f in _isomorphisms(b1, b2, _biquandle_profile):
        return Permutation(f)
    return None


def automorphism_group(q: FiniteQuandle) -> list[Permutation]:
    group = [Permutation(f) for f in _isomorphisms(q, q, _quandle_profile)]
    # Sanity: must be a group; the search order makes the list sorted.
    elems = set(group)
    assert Permutation.identity(q.n) in elems
    assert all(p * r in elems for p in group for r in group)
    return group


def biquandle_automorphism_group(b: FiniteBiquandle) -> list[Permutation]:
    return [Permutation(f) for f in _isomorphisms(b, b, _biquandle_profile)]


def is_automorphism(q: FiniteQuandle, phi: Permutation) -> bool:
    c = q.table.cells
    return phi.n == q.n and all(
        phi(c[x][y]) == c[phi(x)][phi(y)] for x in range(q.n) for y in range(q.n)
    )


def aut_conjugacy_class_count(q: FiniteQuandle) -> int:
    return conjugacy_class_count(automorphism_group(q))


# -- structural predicates ----------------------------------------------------


def _holds(n: int, arity: int, ok: Callable[..., bool]) -> bool:
    return _first_violation(n, arity, ok) is None


def is_trivial_quandle(q: FiniteQuandle) -> bool:
    return q.table == trivial_table(q.n)


def is_medial_quandle(q: FiniteQuandle) -> bool:
    c = q.table.cells
    return _holds(q.n, 4, lambda x, y, z, w: c[c[x][y]][c[z][w]] == c[c[x][z]][c[y][w]])


def medial_report(b: FiniteBiquandle) -> PropertyReport:
    u, o = b.under.cells, b.over.cells
    laws = (
        ("medial law 1", lambda x, y, z, w: u[u[x][y]][u[z][w]] == u[u[x][z]][u[y][w]]),
        ("medial law 2", lambda x, y, z, w: o[u[x][y]][u[z][w]] == u[o[x][z]][o[y][w]]),
        ("medial law 3", lambda x, y, z, w: o[o[x][y]][o[z][w]] == o[o[x][z]][o[y][w]]),
    )
    for label, ok in laws:
        w = _first_violation(b.n, 4, ok)
        if w is not None:
            return _fail("medial", label, w)
    return PropertyReport("medial", True)


def is_medial_biquandle(b: FiniteBiquandle) -> bool:
    return medial_report(b).holds


def is_commutative_quandle(q: FiniteQuandle) -> bool:
    c = q.table.cells
    return _holds(q.n, 2, lambda x, y: c[x][y] == c[y][x])


def is_commutative_biquandle(b: FiniteBiquandle) -> bool:
    u, o = b.under.cells, b.over.cells
    return _holds(b.n, 2, lambda x, y: u[x][y] == u[y][x] and o[x][y] == o[y][x])


def is_involutory_biquandle(b: FiniteBiquandle) -> bool:
    u, o = b.under.cells, b.over.cells
    return _holds(
        b.n,
        2,
        lambda x, y: u[x][o[y][x]] == u[x][y]
        and o[x][u[y][x]] == o[x][y]
        and u[u[x][y]][y] == x
        and o[o[x][y]][y] == x,
    )


def constant_action_map(b: FiniteBiquandle) -> Permutation | None:
    """The bijection ``sigma`` with ``x ⊻ y = x ⊼ y = sigma(x)``, if there is one."""
    if b.n == 0:
        return None
    sigma = b.under.column(0)
    for y in range(b.n):
        if b.under.column(y) != sigma or b.over.column(y) != sigma:
            return None
    return Permutation(sigma)


def is_constant_action(b: FiniteBiquandle) -> bool:
    return constant_action_map(b) is not None


def is_two_reductive(b: FiniteBiquandle) -> bool:
    u, o = b.under.cells, b.over.cells
    return _holds(
        b.n,
        3,
        lambda a, x, c: u[a][u[x][c]] == u[a][x]
        and o[a][o[x][c]] == o[a][x]
        and u[a][o[x][c]] == u[a][x]
        and o[a][u[x][c]] == o[a][x],
    )


def _orbits(n: int, moves: Sequence[Sequence[Sequence[int]]]) -> list[list[int]]:
    """Classes of the equivalence generated by ``x ~ t[x][y]`` for each table ``t``."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for t in moves:
        for x in range(n):
            for y in range(n):
                a, b = find(x), find(t[x][y])
                if a != b:
                    parent[max(a, b)] = min(a, b)
    classes: dict[int, list[int]] = {}
    for x in range(n):
        classes.setdefault(find(x), []).append(x)
    return sorted(classes.values())


def quandle_components(q: FiniteQuandle) -> list[list[int]]:
    return _orbits(q.n, q.ops)


def is_connected_quandle(q: FiniteQuandle) -> bool:
    return len(quandle_components(q)) <= 1


def biquandle_components(b: FiniteBiquandle) -> list[list[int]]:
    return _orbits(b.n, b.ops)


def is_connected_biquandle(b: FiniteBiquandle) -> bool:
    return len(biquandle_components(b)) <= 1
