"""Named quandles, listed biquandle structures, expected tables and small censuses.

Names used throughout the package:

* ``T2`` trivial quandle of order 2, ``A`` / ``B`` / ``C`` the three quandles
  of order 3 (trivial, the non-connected non-trivial one, the dihedral one),
  ``Y`` the order-4 quandle used for the knot tables;
* ``A1`` .. ``A5``, ``B1`` .. ``B4``, ``C1`` .. ``C6`` the biquandles induced
  by the listed structures, in listed order.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product

from .core import FiniteBiquandle, FiniteQuandle, OperationTable, quandle_isomorphism, validate_quandle
from .structures import BiquandleStructure, enumerate_structures, induce_biquandle, classify

QUANDLE_ROWS: dict[str, list[list[int]]] = {
    "T2": [[1, 1], [2, 2]],
    "A": [[1, 1, 1], [2, 2, 2], [3, 3, 3]],
    "B": [[1, 1, 1], [3, 2, 2], [2, 3, 3]],
    "C": [[1, 3, 2], [3, 2, 1], [2, 1, 3]],
    "Y": [[1, 3, 4, 2], [4, 2, 1, 3], [2, 4, 3, 1], [3, 1, 2, 4]],
}

LISTED_STRUCTURES: dict[str, list[tuple[str, ...]]] = {
    "T2": [("id", "id"), ("(12)", "(12)")],
    "A": [
        ("id", "id", "id"),
        ("id", "id", "(12)"),
        ("id", "(23)", "(23)"),
        ("(23)", "(23)", "(23)"),
        ("(123)", "(123)", "(123)"),
    ],
    "B": [
        ("id", "id", "id"),
        ("id", "(23)", "(23)"),
        ("(23)", "id", "id"),
        ("(23)", "(23)", "(23)"),
    ],
    "C": [
        ("id", "id", "id"),
        ("id", "(123)", "(132)"),
        ("(23)", "(23)", "(23)"),
        ("(23)", "(13)", "(12)"),
        ("(12)", "(23)", "(13)"),
        ("(123)", "(123)", "(123)"),
    ],
}

# expected numbers of nonisomorphic structures and of constant ones
EXPECTED_STRUCTURE_COUNTS = {"T2": 2, "A": 5, "B": 4, "C": 6, "Y": 9}
EXPECTED_CONSTANT_COUNTS = {"A": 3, "B": 2, "C": 3}

ORDER3_NAMES = [f"A{i}" for i in range(1, 6)] + [f"B{i}" for i in range(1, 5)] + [
    f"C{i}" for i in range(1, 7)
]

# |Hom_B(X, Y)|, rows X and columns Y both in ORDER3_NAMES order
EXPECTED_TABLE1 = [
    [27, 17, 9, 9, 0, 9, 1, 9, 1, 3, 1, 1, 3, 0, 0],
    [9, 9, 3, 3, 0, 5, 1, 5, 1, 3, 1, 1, 3, 0, 0],
    [27, 17, 9, 9, 0, 9, 1, 9, 1, 3, 1, 1, 3, 0, 0],
    [27, 17, 9, 9, 0, 9, 1, 9, 1, 3, 1, 1, 3, 0, 0],
    [9, 7, 7, 9, 9, 5, 5, 5, 5, 3, 1, 1, 3, 0, 0],
    [9, 7, 3, 3, 0, 7, 3, 7, 3, 3, 1, 1, 3, 0, 0],
    [9, 7, 3, 3, 0, 7, 3, 7, 3, 3, 1, 1, 3, 0, 0],
    [9, 7, 3, 3, 0, 7, 3, 7, 3, 3, 1, 1, 3, 0, 0],
    [9, 7, 3, 3, 0, 7, 3, 7, 3, 3, 1, 1, 3, 0, 0],
    [3, 3, 1, 1, 0, 3, 1, 3, 1, 9, 1, 3, 3, 0, 0],
    [3, 3, 1, 1, 0, 3, 1, 3, 1, 3, 3, 1, 3, 0, 0],
    [3, 3, 1, 1, 0, 3, 1, 3, 1, 9, 1, 3, 3, 0, 0],
    [3, 3, 1, 1, 0, 3, 1, 3, 1, 3, 1, 1, 9, 0, 0],
    [3, 3, 1, 1, 0, 3, 1, 3, 1, 3, 1, 1, 3, 3, 0],
    [3, 3, 1, 1, 0, 3, 1, 3, 1, 3, 1, 3, 3, 0, 3],
]

# |Hom_Q(Q1, Q2)| for Q1, Q2 in A, B, C
EXPECTED_TABLE2 = [[27, 9, 3], [9, 7, 3], [3, 3, 9]]

# knot -> (quandle count for Y, nine biquandle counts)
EXPECTED_CLASSICAL = {
    "4_1": (16, (16, 16, 4, 4, 4, 4, 0, 5, 4)),
    "5_1": (4, (4, 4, 4, 4, 1, 1, 0, 2, 0)),
    "5_2": (4, (4, 4, 4, 4, 4, 4, 4, 5, 4)),
    "6_1": (4, (4, 4, 4, 4, 1, 1, 0, 3, 0)),
    "6_2": (4, (4, 4, 4, 4, 4, 4, 4, 4, 4)),
    "6_3": (4, (4, 4, 4, 4, 4, 4, 4, 5, 4)),
}
EXPECTED_VIRTUAL = {
    "v3_1": (4, (4, 4, 4, 4, 1, 1, 4, 6, 0)),
    "v3_2": (4, (4, 4, 4, 4, 1, 1, 0, 4, 0)),
    "v3_3": (4, (4, 4, 4, 4, 4, 4, 0, 3, 0)),
    "v3_4": (4, (4, 4, 4, 4, 1, 1, 0, 3, 0)),
    "v3_5": (4, (4, 4, 4, 4, 1, 1, 4, 4, 4)),
    "v3_6": (16, (16,) * 9),
    "v3_7": (4, (4, 4, 4, 4, 1, 1, 4, 12, 4)),
}

# elements 1-based, as printed in the hom-set example
EXPECTED_HOM_B2_B2 = [(1, 1, 1), (1, 2, 3), (1, 3, 2)]
EXPECTED_HOM_B2_A3 = [(1, 1, 1), (1, 2, 2), (1, 3, 3)]


def quandle(name: str) -> FiniteQuandle:
    try:
        rows = QUANDLE_ROWS[name]
    except KeyError:
        raise KeyError(f"unknown quandle {name!r}; known: {', '.join(QUANDLE_ROWS)}") from None
    return FiniteQuandle.from_rows(rows, name)


def listed_structures(name: str) -> list[BiquandleStructure]:
    q = quandle(name)
    return [BiquandleStructure.from_cycles(q, c) for c in LISTED_STRUCTURES[name]]


@lru_cache(maxsize=None)
def order3_biquandles() -> dict[str, FiniteBiquandle]:
    """``A1`` .. ``C6`` in listed order."""
    out: dict[str, FiniteBiquandle] = {}
    for family in "ABC":
        for i, s in enumerate(listed_structures(family), start=1):
            b = induce_biquandle(s)
            out[f"{family}{i}"] = FiniteBiquandle(b.under, b.over, f"{family}{i}")
    return out


def biquandle(name: str) -> FiniteBiquandle:
    table = order3_biquandles()
    if name not in table:
        raise KeyError(f"unknown biquandle {name!r}; known: {', '.join(table)}")
    return table[name]


def _is_distributive(cols: tuple[tuple[int, ...], ...], n: int) -> bool:
    # cols[y][x] = x * y
    return all(
        cols[z][cols[y][x]] == cols[cols[z][y]][cols[z][x]]
        for x in range(n)
        for y in range(n)
        for z in range(n)
    )


@lru_cache(maxsize=None)
def quandle_census(n: int) -> tuple[FiniteQuandle, ...]:
    """One quandle per isomorphism class of order ``n``.

    Columns are right translations, so each is a permutation fixing its own
    index; every such choice is tested for distributivity and the survivors
    are reduced modulo isomorphism.  Practical up to ``n = 4``.
    """
    column_choices = []
    for y in range(n):
        column_choices.append(
            [p for p in permutations(range(n)) if p[y] == y]
        )
    found: list[FiniteQuandle] = []
    for cols in product(*column_choices):
        if not _is_distributive(cols, n):
            continue
        t = OperationTable(tuple(tuple(cols[y][x] for y in range(n)) for x in range(n)))
        if not validate_quandle(t):
            continue
        q = FiniteQuandle(t)
        if all(quandle_isomorphism(q, r) is None for r in found):
            found.append(q)
    return tuple(found)


@lru_cache(maxsize=None)
def biquandle_census(n: int) -> tuple[FiniteBiquandle, ...]:
    """One biquandle per isomorphism class of order ``n``, built from structures."""
    out: list[FiniteBiquandle] = []
    for q in quandle_census(n):
        out.extend(induce_biquandle(rep) for rep, _ in classify(enumerate_structures(q)))
    return tuple(out)
