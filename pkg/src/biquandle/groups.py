"""Finite groups by Cayley table, and the standard (bi)quandles built from them."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import (
    AxiomError,
    FiniteBiquandle,
    FiniteQuandle,
    OperationTable,
)
from .perm import Permutation


@dataclass(frozen=True)
class FiniteGroup:
    cayley: OperationTable
    name: str = ""

    def __post_init__(self) -> None:
        c, n = self.cayley.cells, self.cayley.n
        if n == 0:
            raise AxiomError("empty group")
        if any(c[c[a][b]][d] != c[a][c[b][d]] for a, b, d in product(range(n), repeat=3)):
            raise AxiomError("Cayley table is not associative")
        ids = [e for e in range(n) if all(c[e][a] == a == c[a][e] for a in range(n))]
        if not ids:
            raise AxiomError("no identity element")
        e = ids[0]
        inverse = []
        for a in range(n):
            inv = [b for b in range(n) if c[a][b] == e]
            if not inv or c[inv[0]][a] != e:
                raise AxiomError(f"element {a + 1} has no inverse")
            inverse.append(inv[0])
        object.__setattr__(self, "identity", e)
        object.__setattr__(self, "inverse", tuple(inverse))

    @property
    def n(self) -> int:
        return self.cayley.n

    def mul(self, a: int, b: int) -> int:
        return self.cayley.cells[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def is_abelian(self) -> bool:
        c = self.cayley.cells
        return all(c[a][b] == c[b][a] for a in range(self.n) for b in range(self.n))

    def is_automorphism(self, phi: Permutation) -> bool:
        return phi.n == self.n and all(
            phi(self.mul(a, b)) == self.mul(phi(a), phi(b))
            for a in range(self.n)
            for b in range(self.n)
        )


def cyclic_group(n: int) -> FiniteGroup:
    """``Z_n`` with element ``k`` stored at index ``k`` (label ``k + 1``)."""
    return FiniteGroup(OperationTable.from_function(n, lambda a, b: (a + b) % n), f"Z{n}")


def symmetric_group(k: int) -> FiniteGroup:
    from itertools import permutations

    elems = [Permutation(p) for p in permutations(range(k))]
    index = {p: i for i, p in enumerate(elems)}
    return FiniteGroup(
        OperationTable.from_function(len(elems), lambda a, b: index[elems[a] * elems[b]]),
        f"S{k}",
    )


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    m = h.n
    return FiniteGroup(
        OperationTable.from_function(
            g.n * m, lambda a, b: g.mul(a // m, b // m) * m + h.mul(a % m, b % m)
        ),
        f"{g.name}x{h.name}",
    )


def multiplication_map(n: int, k: int) -> Permutation:
    """``x -> k x`` on ``Z_n``; a group automorphism when ``gcd(k, n) == 1``."""
    return Permutation((k * x) % n for x in range(n))


def _require_auto(g: FiniteGroup, phi: Permutation, label: str) -> None:
    if not g.is_automorphism(phi):
        raise AxiomError(f"{label} is not an automorphism of {g.name or 'G'}")


def core_quandle(g: FiniteGroup) -> FiniteQuandle:
    """``g * h = h g^-1 h``."""
    t = OperationTable.from_function(g.n, lambda a, b: g.mul(g.mul(b, g.inv(a)), b))
    return FiniteQuandle(t, f"Core({g.name})")


def affine_quandle(g: FiniteGroup, phi: Permutation) -> FiniteQuandle:
    """``g * h = phi(g) + h - phi(h)`` on an abelian group."""
    if not g.is_abelian():
        raise AxiomError("affine quandle needs an abelian group")
    _require_auto(g, phi, "phi")
    t = OperationTable.from_function(
        g.n, lambda a, b: g.mul(g.mul(phi(a), b), g.inv(phi(b)))
    )
    return FiniteQuandle(t, f"Aff({g.name})")


def wada_biquandle(g: FiniteGroup) -> FiniteBiquandle:
    """``g ⊻ h = h^-1 g^-1 h`` and ``g ⊼ h = h^-2 g``."""
    under = OperationTable.from_function(
        g.n, lambda a, b: g.mul(g.mul(g.inv(b), g.inv(a)), b)
    )
    over = OperationTable.from_function(
        g.n, lambda a, b: g.mul(g.inv(g.mul(b, b)), a)
    )
    return FiniteBiquandle(under, over, f"Wada({g.name})")


def affine_biquandle(g: FiniteGroup, phi: Permutation, psi: Permutation) -> FiniteBiquandle:
    """``g ⊻ h = psi(phi(g)) + psi(h) - psi(phi(h))`` and ``g ⊼ h = psi(g)``."""
    if not g.is_abelian():
        raise AxiomError("affine biquandle needs an abelian group")
    _require_auto(g, phi, "phi")
    _require_auto(g, psi, "psi")
    under = OperationTable.from_function(
        g.n, lambda a, b: g.mul(g.mul(psi(phi(a)), psi(b)), g.inv(psi(phi(b))))
    )
    over = OperationTable.from_function(g.n, lambda a, b: psi(a))
    return FiniteBiquandle(under, over, f"Aff({g.name})")


def product_biquandle(q: FiniteQuandle, k: FiniteQuandle) -> FiniteBiquandle:
    """``(x,y) ⊻ (z,w) = (x*z, y)`` and ``(x,y) ⊼ (z,w) = (x, y o^-1 w)``.

    The pair ``(x, y)`` is stored at index ``x * |K| + y``.
    """
    m = k.n
    size = q.n * m
    under = OperationTable.from_function(size, lambda a, b: q.op(a // m, b // m) * m + a % m)
    over = OperationTable.from_function(
        size, lambda a, b: (a // m) * m + k.inv_op(a % m, b % m)
    )
    return FiniteBiquandle(under, over, f"{q.name or 'Q'}x{k.name or 'K'}")


def trivial_quandle(n: int) -> FiniteQuandle:
    return FiniteQuandle(OperationTable.from_function(n, lambda x, y: x), f"T{n}")
