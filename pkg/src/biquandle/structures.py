"""Biquandle structures on a finite quandle.

A structure is a family ``(beta_1, ..., beta_n)`` of automorphisms of the
quandle such that

1. ``beta[beta_y(x*y)] o beta_y == beta[beta_x(y)] o beta_x`` for all x, y;
2. ``y -> beta_y(y)`` is a bijection.

It induces the biquandle ``x ⊻ y = beta_y(x*y)``, ``x ⊼ y = beta_y(x)``, and
every biquandle arises this way from its associated quandle.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .core import (
    AxiomError,
    FiniteBiquandle,
    FiniteQuandle,
    FormatError,
    OperationTable,
    PropertyReport,
    associated_quandle,
    automorphism_group,
    biquandle_isomorphism,
    is_automorphism,
    _biquandle_profile,
)
from .perm import Permutation, conjugacy_class_count


def validate_structure(q: FiniteQuandle, betas: Sequence[Permutation]) -> PropertyReport:
    """Witnesses (1-based): ``(y,)`` for a non-automorphism, ``(x, y)`` for
    condition 1, ``(y1, y2)`` for a collision in condition 2."""
    n = q.n
    if len(betas) != n or any(b.n != n for b in betas):
        raise FormatError(f"need {n} permutations of degree {n}")
    for y, b in enumerate(betas):
        if not is_automorphism(q, b):
            return PropertyReport("structure", False, (y + 1,), "automorphism")
    for x, y in product(range(n), repeat=2):
        lhs = betas[betas[y](q.op(x, y))] * betas[y]
        rhs = betas[betas[x](y)] * betas[x]
        if lhs != rhs:
            return PropertyReport("structure", False, (x + 1, y + 1), "condition 1")
    seen: dict[int, int] = {}
    for y, b in enumerate(betas):
        v = b(y)
        if v in seen:
            return PropertyReport("structure", False, (seen[v] + 1, y + 1), "condition 2")
        seen[v] = y
    return PropertyReport("structure", True)


@dataclass(frozen=True)
class BiquandleStructure:
    base: FiniteQuandle
    betas: tuple[Permutation, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "betas", tuple(self.betas))
        report = validate_structure(self.base, self.betas)
        if not report:
            raise AxiomError(str(report))

    @classmethod
    def from_cycles(cls, base: FiniteQuandle, cycles: Sequence[str]) -> "BiquandleStructure":
        return cls(base, tuple(Permutation.from_cycles(c, base.n) for c in cycles))

    @property
    def n(self) -> int:
        return self.base.n

    def key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(b.images for b in self.betas)

    def is_constant(self) -> bool:
        return len(set(self.betas)) <= 1

    def cycle_strings(self, compact: bool = True) -> tuple[str, ...]:
        return tuple(b.cycle_string(compact) for b in self.betas)

    def __str__(self) -> str:
        return "(" + ", ".join(self.cycle_strings()) + ")"


def induce_biquandle(s: BiquandleStructure) -> FiniteBiquandle:
    q, betas = s.base, s.betas
    under = OperationTable.from_function(q.n, lambda x, y: betas[y](q.op(x, y)))
    over = OperationTable.from_function(q.n, lambda x, y: betas[y](x))
    b = FiniteBiquandle(under, over)
    if associated_quandle(b).table != q.table:
        raise AssertionError("induced biquandle does not recover its base quandle")
    return b


def extract_structure(b: FiniteBiquandle) -> BiquandleStructure:
    return BiquandleStructure(associated_quandle(b), tuple(b.beta(y) for y in range(b.n)))


def enumerate_structures(q: FiniteQuandle) -> list[BiquandleStructure]:
    """All structures, in lexicographic order of ``(beta_1.images, ..., beta_n.images)``.

    Each ``beta_y`` is drawn from ``Aut(q)``; condition 1 is checked as soon
    as the four automorphisms it mentions are fixed.
    """
    n = q.n
    if n == 0:
        return []
    aut = automorphism_group(q)
    index = {g: i for i, g in enumerate(aut)}
    comp = [[index[g * h] for h in aut] for g in aut]
    c = q.table.cells
    chosen: list[int] = []
    diag: set[int] = set()
    out: list[BiquandleStructure] = []

    def consistent(k: int) -> bool:
        # pairs (x, y) with max(x, y) == k and all referenced betas known
        for x in range(k + 1):
            for y in (k,) if x < k else range(k + 1):
                for a, b in ((x, y), (y, x)):
                    i1 = aut[chosen[b]](c[a][b])
                    i2 = aut[chosen[a]](b)
                    if i1 <= k and i2 <= k:
                        if comp[chosen[i1]][chosen[b]] != comp[chosen[i2]][chosen[a]]:
                            return False
        return True

    def rec(k: int) -> None:
        if k == n:
            # pairs skipped during the search because an index was still open
            betas = tuple(aut[i] for i in chosen)
            if validate_structure(q, betas):
                out.append(BiquandleStructure(q, betas))
            return
        for gi, g in enumerate(aut):
            v = g(k)
            if v in diag:
                continue
            chosen.append(gi)
            diag.add(v)
            if consistent(k):
                rec(k + 1)
            diag.discard(v)
            chosen.pop()

    rec(0)
    return out


def brute_force_structures(q: FiniteQuandle) -> list[BiquandleStructure]:
    """Filter every tuple in ``Aut(q)^n``; the reference for :func:`enumerate_structures`."""
    aut = automorphism_group(q)
    return [
        BiquandleStructure(q, betas)
        for betas in product(aut, repeat=q.n)
        if validate_structure(q, betas)
    ]


def structures_equivalent(s1: BiquandleStructure, s2: BiquandleStructure) -> Permutation | None:
    """An automorphism ``phi`` of the common base with ``phi o beta_y = beta'_{phi(y)} o phi``."""
    if s1.base != s2.base:
        raise ValueError("structures live on different quandles")
    for phi in automorphism_group(s1.base):
        if all(phi * s1.betas[y] == s2.betas[phi(y)] * phi for y in range(s1.n)):
            return phi
    return None


def _signature(b: FiniteBiquandle) -> tuple:
    return tuple(sorted(_biquandle_profile(b, x) for x in range(b.n)))


def classify(structures: Sequence[BiquandleStructure]) -> list[tuple[BiquandleStructure, int]]:
    """Group structures whose induced biquandles are isomorphic.

    Representatives are the first member of each class in input order, so a
    lexicographically sorted input yields lexicographically least representatives.
    """
    classes: list[list] = []  # [rep, biquandle, signature, size]
    for s in structures:
        b = induce_biquandle(s)
        sig = _signature(b)
        for entry in classes:
            if entry[2] == sig and biquandle_isomorphism(entry[1], b) is not None:
                entry[3] += 1
                break
        else:
            classes.append([s, b, sig, 1])
    return [(rep, size) for rep, _, _, size in classes]


def classify_structures(q: FiniteQuandle) -> list[tuple[BiquandleStructure, int]]:
    return classify(enumerate_structures(q))


def count_constant_structures(q: FiniteQuandle) -> int:
    """Classes of constant structures; equals the number of conjugacy classes of ``Aut(q)``."""
    constant = [BiquandleStructure(q, (g,) * q.n) for g in automorphism_group(q)]
    count = len(classify(constant))
    expected = conjugacy_class_count(automorphism_group(q))
    if count != expected:
        raise AssertionError(f"{count} constant classes but {expected} conjugacy classes")
    return count


def class_index(
    classes: Sequence[tuple[BiquandleStructure, int]], s: BiquandleStructure
) -> int | None:
    """Position of the class containing ``s``."""
    b = induce_biquandle(s)
    for i, (rep, _) in enumerate(classes):
        if biquandle_isomorphism(induce_biquandle(rep), b) is not None:
            return i
    return None
