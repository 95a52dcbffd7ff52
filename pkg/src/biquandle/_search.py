"""Backtracking search for operation-preserving maps between finite algebras.

Images are assigned in element order with the smallest candidate first, and
every assignment is propagated through the closure ``f(a o b) = f(a) o' f(b)``.
Solutions therefore come out in lexicographic order of their image vectors.
"""
from __future__ import annotations

from typing import Iterator, Sequence

Table = Sequence[Sequence[int]]


def iter_homs(
    src_ops: Sequence[Table],
    dst_ops: Sequence[Table],
    n_src: int,
    n_dst: int,
    *,
    injective: bool = False,
    candidates: Sequence[Sequence[int]] | None = None,
) -> Iterator[tuple[int, ...]]:
    if len(src_ops) != len(dst_ops):
        raise ValueError("signature mismatch")
    if injective and n_src > n_dst:
        return
    pairs = list(zip(src_ops, dst_ops))
    allowed = None if candidates is None else [set(c) for c in candidates]
    f = [-1] * n_src
    used = [False] * n_dst
    assigned: list[int] = []

    def assign(a0: int, v0: int) -> bool:
        stack = [(a0, v0)]
        while stack:
            a, v = stack.pop()
            cur = f[a]
            if cur != -1:
                if cur != v:
                    return False
                continue
            if injective and used[v]:
                return False
            if allowed is not None and v not in allowed[a]:
                return False
            f[a] = v
            used[v] = True
            assigned.append(a)
            for b in assigned:
                w = f[b]
                for s, d in pairs:
                    stack.append((s[a][b], d[v][w]))
                    if b != a:
                        stack.append((s[b][a], d[w][v]))
        return True

    def undo(mark: int) -> None:
        while len(assigned) > mark:
            a = assigned.pop()
            used[f[a]] = False
            f[a] = -1

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        while i < n_src and f[i] != -1:
            i += 1
        if i == n_src:
            yield tuple(f)
            return
        options = candidates[i] if candidates is not None else range(n_dst)
        for v in options:
            mark = len(assigned)
            if assign(i, v):
                yield from rec(i + 1)
            undo(mark)

    if n_src == 0:
        yield ()
        return
    yield from rec(0)


def brute_force_homs(
    src_ops: Sequence[Table], dst_ops: Sequence[Table], n_src: int, n_dst: int
) -> list[tuple[int, ...]]:
    """Filter all ``n_dst ** n_src`` maps; the reference the search is checked against."""
    from itertools import product

    out = []
    for f in product(range(n_dst), repeat=n_src):
        if all(
            f[s[a][b]] == d[f[a]][f[b]]
            for s, d in zip(src_ops, dst_ops)
            for a in range(n_src)
            for b in range(n_src)
        ):
            out.append(f)
    return out
