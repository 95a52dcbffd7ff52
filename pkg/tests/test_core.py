import pytest

from biquandle import catalog
from biquandle.core import (
    AxiomError,
    FiniteBiquandle,
    FiniteQuandle,
    FormatError,
    OperationTable,
    aut_conjugacy_class_count,
    associated_quandle,
    automorphism_group,
    biquandle_components,
    biquandle_isomorphism,
    constant_action_map,
    is_connected_quandle,
    is_medial_quandle,
    is_trivial_quandle,
    quandle_as_biquandle,
    quandle_components,
    quandle_isomorphism,
    validate_biquandle,
    validate_quandle,
)
from biquandle.perm import Permutation


def test_table_rejects_out_of_range():
    with pytest.raises(FormatError):
        OperationTable.from_rows([[1, 3], [2, 2]])


def test_table_rejects_ragged():
    with pytest.raises(FormatError):
        OperationTable(((0, 0), (1,)))


@pytest.mark.parametrize("name", ["T2", "A", "B", "C", "Y"])
def test_named_quandles_validate(name):
    assert validate_quandle(OperationTable.from_rows(catalog.QUANDLE_ROWS[name]))


def test_quandle_witnesses():
    r = validate_quandle(OperationTable.from_rows([[2, 2], [1, 1]]))
    assert (r.failed, r.witness) == ("idempotence", (1,))
    r = validate_quandle(OperationTable.from_rows([[1, 1], [1, 2]]))
    assert (r.failed, r.witness) == ("right invertibility", (1, 2, 1))
    with pytest.raises(AxiomError):
        FiniteQuandle.from_rows([[2, 2], [1, 1]])


def test_distributivity_witness():
    # columns are permutations fixing their own index, but the table is not distributive
    rows = [[1, 3, 2], [2, 2, 1], [3, 1, 3]]
    r = validate_quandle(OperationTable.from_rows(rows))
    assert r.failed == "right self-distributivity"
    x, y, z = (v - 1 for v in r.witness)
    t = OperationTable.from_rows(rows).cells
    assert t[t[x][y]][z] != t[t[x][z]][t[y][z]]


def test_biquandle_order_mismatch():
    with pytest.raises(FormatError):
        validate_biquandle(OperationTable.from_rows([[1]]), OperationTable.from_rows([[1, 1], [2, 2]]))


def test_biquandle_diagonal_witness():
    under = OperationTable.from_rows([[1, 1], [2, 2]])
    over = OperationTable.from_rows([[2, 2], [1, 1]])
    r = validate_biquandle(under, over)
    assert (r.failed, r.witness) == ("diagonal", (1,))


def test_every_quandle_is_a_biquandle(small_quandles):
    for q in small_quandles:
        b = quandle_as_biquandle(q)
        assert associated_quandle(b) == q


def test_associated_quandle_of_listed(order3):
    for name, b in order3.items():
        assert associated_quandle(b) == catalog.quandle(name[0])


def test_automorphism_groups():
    assert len(automorphism_group(catalog.quandle("A"))) == 6
    assert len(automorphism_group(catalog.quandle("B"))) == 2
    assert len(automorphism_group(catalog.quandle("C"))) == 6
    assert len(automorphism_group(catalog.quandle("Y"))) == 12


def test_automorphism_group_sorted_and_brute_force():
    from itertools import permutations

    from biquandle.core import is_automorphism

    for q in catalog.quandle_census(4):
        brute = sorted(Permutation(p) for p in permutations(range(4)) if is_automorphism(q, Permutation(p)))
        assert automorphism_group(q) == brute


def test_conjugacy_class_counts():
    assert [aut_conjugacy_class_count(catalog.quandle(n)) for n in "ABC"] == [3, 2, 3]


def test_isomorphism_transport():
    q = catalog.quandle("B")
    phi = Permutation.from_cycles("(1 3)", 3)
    q2 = FiniteQuandle(q.table.permuted(phi))
    iso = quandle_isomorphism(q, q2)
    assert iso is not None
    assert all(iso(q.op(x, y)) == q2.op(iso(x), iso(y)) for x in range(3) for y in range(3))
    assert quandle_isomorphism(q, catalog.quandle("C")) is None


def test_biquandle_isomorphism_is_least(order3):
    b = order3["C2"]
    phi = Permutation.from_cycles("(1 2)", 3)
    b2 = FiniteBiquandle(b.under.permuted(phi), b.over.permuted(phi))
    iso = biquandle_isomorphism(b, b2)
    assert iso is not None
    assert biquandle_isomorphism(b, b) == Permutation.identity(3)


def test_predicates_on_named_quandles():
    assert is_trivial_quandle(catalog.quandle("A"))
    assert not is_trivial_quandle(catalog.quandle("B"))
    assert all(is_medial_quandle(catalog.quandle(n)) for n in "ABC")
    assert is_connected_quandle(catalog.quandle("C"))
    assert not is_connected_quandle(catalog.quandle("B"))
    assert quandle_components(catalog.quandle("B")) == [[0], [1, 2]]


def test_constant_action(order3):
    assert constant_action_map(order3["A5"]) == Permutation.from_cycles("(123)", 3)
    assert constant_action_map(order3["A4"]) == Permutation.from_cycles("(23)", 3)
    assert constant_action_map(order3["B1"]) is None


def test_biquandle_components(order3):
    assert biquandle_components(order3["A5"]) == [[0, 1, 2]]
    assert biquandle_components(order3["A1"]) == [[0], [1], [2]]
