"""Recompute every published number and compare it with the stored expectations.

Each check returns a :class:`Check`; nothing here decides what counts as
acceptable beyond exact equality.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import catalog
from .core import biquandle_isomorphism
from .homsets import enumerate_biquandle_homs, enumerate_quandle_homs, hom_biquandle
from .knots import build_diagram, load_fixture, quandle_colorings, structure_coloring_invariant
from .structures import (
    classify,
    classify_structures,
    count_constant_structures,
    induce_biquandle,
)


@dataclass
class Check:
    name: str
    passed: bool
    details: list[str] = field(default_factory=list)

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}"


def check_structure_counts() -> Check:
    details = []
    ok = True
    for name, expected in catalog.EXPECTED_STRUCTURE_COUNTS.items():
        classes = classify_structures(catalog.quandle(name))
        got = len(classes)
        if got != expected:
            ok = False
            details.append(f"{name}: expected {expected} classes, got {got}")
        if name in catalog.LISTED_STRUCTURES:
            listed = catalog.listed_structures(name)
            if len(classify(listed)) != len(listed):
                ok = False
                details.append(f"{name}: listed structures are not pairwise non-isomorphic")
            for s in listed:
                if not any(_same_class(s, rep) for rep, _ in classes):
                    ok = False
                    details.append(f"{name}: listed structure {s} not found")
    return Check("structure counts", ok, details)


def _same_class(s1, s2) -> bool:
    return biquandle_isomorphism(induce_biquandle(s1), induce_biquandle(s2)) is not None


def check_constant_counts() -> Check:
    details = []
    for name, expected in catalog.EXPECTED_CONSTANT_COUNTS.items():
        got = count_constant_structures(catalog.quandle(name))
        if got != expected:
            details.append(f"{name}: expected {expected}, got {got}")
    return Check("constant structure counts", not details, details)


def _knot_rows(expected: dict, label: str) -> Check:
    y = catalog.quandle("Y")
    details = []
    for knot, (phi_q, row) in expected.items():
        d = build_diagram(load_fixture(knot))
        got_q = quandle_colorings(d, y).value
        inv = structure_coloring_invariant(d, y)
        if got_q != phi_q:
            details.append(f"{knot}: quandle count expected {phi_q}, got {got_q}")
        if inv.multiset != tuple(sorted(row)):
            details.append(f"{knot}: multiset expected {sorted(row)}, got {list(inv.multiset)}")
    return Check(label, not details, details)


def check_classical_knots() -> Check:
    return _knot_rows(catalog.EXPECTED_CLASSICAL, "classical knot table")


def check_virtual_knots() -> Check:
    return _knot_rows(catalog.EXPECTED_VIRTUAL, "virtual knot table")


def hom_table1() -> list[list[int]]:
    b = catalog.order3_biquandles()
    names = catalog.ORDER3_NAMES
    return [[len(enumerate_biquandle_homs(b[x], b[y])) for y in names] for x in names]


def hom_table2() -> list[list[int]]:
    qs = [catalog.quandle(n) for n in "ABC"]
    return [[len(enumerate_quandle_homs(a, c)) for c in qs] for a in qs]


def check_hom_tables() -> Check:
    names = catalog.ORDER3_NAMES
    details = []
    t1 = hom_table1()
    for i, row in enumerate(t1):
        for j, v in enumerate(row):
            e = catalog.EXPECTED_TABLE1[i][j]
            if v != e:
                details.append(f"|Hom_B({names[i]},{names[j]})| expected {e}, got {v}")
    t2 = hom_table2()
    for i, row in enumerate(t2):
        for j, v in enumerate(row):
            e = catalog.EXPECTED_TABLE2[i][j]
            if v != e:
                details.append(f"|Hom_Q({'ABC'[i]},{'ABC'[j]})| expected {e}, got {v}")
    return Check("hom tables", not details, details)


def check_example3() -> Check:
    b = catalog.order3_biquandles()
    details = []
    h1 = enumerate_biquandle_homs(b["B2"], b["B2"]).one_based()
    h2 = enumerate_biquandle_homs(b["B2"], b["A3"]).one_based()
    if h1 != catalog.EXPECTED_HOM_B2_B2:
        details.append(f"Hom_B(B2,B2) expected {catalog.EXPECTED_HOM_B2_B2}, got {h1}")
    if h2 != catalog.EXPECTED_HOM_B2_A3:
        details.append(f"Hom_B(B2,A3) expected {catalog.EXPECTED_HOM_B2_A3}, got {h2}")
    o1, _ = hom_biquandle(b["B2"], b["B2"])
    o2, _ = hom_biquandle(b["B2"], b["A3"])
    if biquandle_isomorphism(o1, b["B2"]) is None:
        details.append("Hom_B(B2,B2) is not isomorphic to B2")
    if biquandle_isomorphism(o2, b["A3"]) is None:
        details.append("Hom_B(B2,A3) is not isomorphic to A3")
    if biquandle_isomorphism(o1, o2) is not None:
        details.append("the two Hom-biquandles are isomorphic")
    return Check("hom-biquandle example", not details, details)


CHECKS = (
    check_structure_counts,
    check_constant_counts,
    check_classical_knots,
    check_virtual_knots,
    check_hom_tables,
    check_example3,
)


def run_all() -> list[Check]:
    return [c() for c in CHECKS]


def report(checks: list[Check]) -> str:
    lines = []
    for c in checks:
        lines.append(c.line())
        lines.extend("  " + d for d in c.details)
    passed = sum(c.passed for c in checks)
    lines.append(f"{passed}/{len(checks)} checks passed")
    return "\n".join(lines) + "\n"
