import pytest

from biquandle import catalog
from biquandle.core import FormatError
from biquandle.structures import BiquandleStructure
from biquandle.textio import (
    format_biquandle,
    format_group,
    format_structure,
    format_table,
    load,
    parse_biquandle,
    parse_group_table,
    parse_quandle,
    parse_structure,
    parse_table,
    sniff_kind,
)
from biquandle.groups import cyclic_group


def test_table_round_trip():
    q = catalog.quandle("C")
    text = format_table(q.table, "the dihedral quandle")
    assert text.startswith("# the dihedral quandle\n3\n")
    assert parse_quandle(text) == q


def test_biquandle_round_trip(order3):
    for b in order3.values():
        assert parse_biquandle(format_biquandle(b)) == b
        assert sniff_kind(format_biquandle(b)) == "biquandle"


def test_group_round_trip():
    g = cyclic_group(4)
    text = format_group(g.cayley)
    assert sniff_kind(text) == "group"
    assert parse_group_table(text) == g.cayley


def test_structure_round_trip():
    s = catalog.listed_structures("C")[3]
    text = format_structure(s.base, s.betas)
    assert sniff_kind(text) == "structure"
    q, betas = parse_structure(text)
    assert BiquandleStructure(q, tuple(betas)) == s


@pytest.mark.parametrize(
    "text",
    ["", "x\n1\n", "2\n1 1\n", "2\n1 1\n2 x\n", "2\n1 1 1\n2 2 2\n", "2\n1 3\n2 2\n"],
)
def test_malformed_tables(text):
    with pytest.raises(FormatError):
        parse_table(text) if text else parse_table("\n")


def test_biquandle_needs_two_blocks():
    with pytest.raises(FormatError):
        parse_biquandle("2\n1 1\n2 2\n")


def test_load_sniffs(tmp_path):
    p = tmp_path / "c.txt"
    p.write_text(format_table(catalog.quandle("C").table))
    assert load(p) == catalog.quandle("C")


def test_json_to_text():
    from biquandle.textio import json_to_text

    assert json_to_text("2\n1 1\n2 2\n") == "2\n1 1\n2 2\n"
    assert json_to_text('{"table": [[1, 1], [2, 2]], "schema": 1}') == "2\n1 1\n2 2\n"
    two = json_to_text('{"under": [[1, 1], [2, 2]], "over": [[2, 2], [1, 1]]}')
    assert two == "2\n1 1\n2 2\n\n2\n2 2\n1 1\n"
    doc = '{"quandle": [[1, 1], [2, 2]], "structure": ["id", "(1 2)"]}'
    assert json_to_text(doc) == "2\n1 1\n2 2\n"
    assert json_to_text(doc, "structure") == "2\n1 1\n2 2\n\nid\n(1 2)\n"
    with pytest.raises(FormatError):
        json_to_text('{"count": 1}')
    with pytest.raises(FormatError):
        json_to_text('{"table": [["a"]]}')
