"""Permutations of {1..n}, stored 0-based.

Composition follows function notation: ``(p * q)(i) == p(q(i))``.
"""
from __future__ import annotations

import re
from typing import Iterable, Sequence


class Permutation:
    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def from_one_based(cls, images: Sequence[int]) -> "Permutation":
        return cls(i - 1 for i in images)

    @classmethod
    def from_cycles(cls, text: str, n: int) -> "Permutation":
        """Parse disjoint-cycle notation such as ``(1 2)(3)``, ``(123)`` or ``id``.

        Cycles written without separators are read digit by digit, which is
        only unambiguous for ``n < 10``.
        """
        text = text.strip()
        images = list(range(n))
        if text.lower() in ("id", "()", "e", ""):
            return cls(images)
        if not re.fullmatch(r"(\(\s*[\d\s,]*\))+", text):
            raise ValueError(f"bad cycle notation: {text!r}")
        seen: set[int] = set()
        for body in re.findall(r"\(([^)]*)\)", text):
            tokens = re.split(r"[\s,]+", body.strip())
            if len(tokens) == 1 and len(tokens[0]) > 1:
                if n >= 10:
                    raise ValueError(f"ambiguous cycle {body!r} for n={n}; separate entries")
                tokens = list(tokens[0])
            cycle = [int(t) - 1 for t in tokens if t]
            for point in cycle:
                if not 0 <= point < n:
                    raise ValueError(f"point {point + 1} out of range 1..{n}")
                if point in seen:
                    raise ValueError(f"point {point + 1} repeated in {text!r}")
                seen.add(point)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a] = b
        return cls(images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(self.images[j] for j in other.images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        out = Permutation.identity(self.n)
        for _ in range(abs(k)):
            out = out * base
        return out

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def order(self) -> int:
        p, k = self, 1
        while not p.is_identity():
            p, k = p * self, k + 1
        return k

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles (0-based), each starting at its least point."""
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cycle = []
            i = start
            while not seen[i]:
                seen[i] = True
                cycle.append(i)
                i = self.images[i]
            out.append(tuple(cycle))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def one_based(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in self.images)

    def cycle_string(self, compact: bool = False) -> str:
        """``id`` or the nontrivial cycles, e.g. ``(1 2 3)``; ``compact`` drops the spaces."""
        parts = [c for c in self.cycles() if len(c) > 1]
        if not parts:
            return "id"
        sep = "" if compact and self.n < 10 else " "
        return "".join("(" + sep.join(str(i + 1) for i in c) + ")" for c in parts)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()!s}, n={self.n})"

    def __str__(self) -> str:
        return self.cycle_string()


def is_group(perms: Iterable[Permutation]) -> bool:
    """True when the (finite, nonempty) set is closed under composition."""
    elems = set(perms)
    if not elems:
        return False
    return all(p * q in elems for p in elems for q in elems)


def conjugacy_classes(perms: Iterable[Permutation]) -> list[list[Permutation]]:
    elems = sorted(set(perms))
    if not is_group(elems):
        raise ValueError("permutations do not form a group")
    remaining = set(elems)
    classes = []
    for g in elems:
        if g not in remaining:
            continue
        cls = sorted({h * g * h.inverse() for h in elems})
        remaining.difference_update(cls)
        classes.append(cls)
    return classes


def conjugacy_class_count(perms: Iterable[Permutation]) -> int:
    return len(conjugacy_classes(perms))
