"""Plain-text formats for tables, biquandles, groups and structures.

Table block::

    3
    1 3 2
    3 2 1
    2 1 3

A biquandle file is the under block, one blank line, then the over block.
A group file is a table block preceded by a line ``group``.  A structure
file is a quandle block, a blank line, then ``n`` permutations in cycle
notation.  Lines starting with ``#`` are comments everywhere.

The JSON documents printed by the CLI are accepted too; :func:`json_to_text`
turns them back into the layouts above.
"""
from __future__ import annotations

import json
from pathlib import Path

from .core import (
    AxiomError,
    FiniteBiquandle,
    FiniteQuandle,
    FormatError,
    OperationTable,
)
from .perm import Permutation


def _lines(text: str) -> list[str]:
    return [ln.rstrip() for ln in text.splitlines() if not ln.lstrip().startswith("#")]


def _blocks(text: str) -> list[list[str]]:
    blocks: list[list[str]] = [[]]
    for ln in _lines(text):
        if ln.strip():
            blocks[-1].append(ln.strip())
        elif blocks[-1]:
            blocks.append([])
    return [b for b in blocks if b]


def _parse_block(lines: list[str]) -> OperationTable:
    try:
        n = int(lines[0])
    except ValueError:
        raise FormatError(f"expected the order on the first line, got {lines[0]!r}") from None
    rows = lines[1:]
    if len(rows) != n:
        raise FormatError(f"expected {n} rows, got {len(rows)}")
    cells = []
    for i, row in enumerate(rows):
        try:
            vals = [int(v) for v in row.split()]
        except ValueError:
            raise FormatError(f"row {i + 1} is not a list of integers: {row!r}") from None
        if len(vals) != n:
            raise FormatError(f"row {i + 1} has {len(vals)} entries, expected {n}")
        cells.append(vals)
    return OperationTable.from_rows(cells)


def parse_table(text: str) -> OperationTable:
    blocks = _blocks(text)
    if len(blocks) != 1:
        raise FormatError(f"expected one table block, found {len(blocks)}")
    return _parse_block(blocks[0])


def format_table(t: OperationTable, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend("# " + ln for ln in comment.splitlines())
    out.append(str(t.n))
    out.extend(" ".join(str(v) for v in row) for row in t.rows())
    return "\n".join(out) + "\n"


def parse_quandle(text: str) -> FiniteQuandle:
    return FiniteQuandle(parse_table(text))


def parse_biquandle_tables(text: str) -> tuple[OperationTable, OperationTable]:
    blocks = _blocks(text)
    if len(blocks) != 2:
        raise FormatError(f"expected under and over blocks, found {len(blocks)} block(s)")
    under, over = _parse_block(blocks[0]), _parse_block(blocks[1])
    if under.n != over.n:
        raise FormatError(f"order mismatch: {under.n} vs {over.n}")
    return under, over


def parse_biquandle(text: str) -> FiniteBiquandle:
    return FiniteBiquandle(*parse_biquandle_tables(text))


def format_biquandle(b: FiniteBiquandle, comment: str | None = None) -> str:
    return format_table(b.under, comment) + "\n" + format_table(b.over)


def parse_group_table(text: str) -> OperationTable:
    lines = [ln for ln in _lines(text) if ln.strip()]
    if not lines or lines[0].strip().lower() != "group":
        raise FormatError("group file must start with a 'group' header line")
    return _parse_block([ln.strip() for ln in lines[1:]])


def format_group(cayley: OperationTable) -> str:
    return "group\n" + format_table(cayley)


def parse_structure(text: str):
    """Return ``(quandle, betas)``."""
    blocks = _blocks(text)
    if len(blocks) != 2:
        raise FormatError("expected a quandle block and a permutation block")
    q = FiniteQuandle(_parse_block(blocks[0]))
    if len(blocks[1]) != q.n:
        raise FormatError(f"expected {q.n} permutations, got {len(blocks[1])}")
    try:
        betas = [Permutation.from_cycles(ln, q.n) for ln in blocks[1]]
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    return q, betas


def format_structure(q: FiniteQuandle, betas) -> str:
    return format_table(q.table) + "\n" + "\n".join(b.cycle_string() for b in betas) + "\n"


def _rows_block(rows) -> str:
    try:
        lines = [str(len(rows))] + [" ".join(str(int(v)) for v in row) for row in rows]
    except (TypeError, ValueError):
        raise FormatError("JSON table rows must be lists of integers") from None
    return "\n".join(lines) + "\n"


def json_to_text(text: str, kind: str | None = None) -> str:
    """Plain-text equivalent of a JSON document, or ``text`` unchanged if it is not JSON.

    ``under`` and ``over`` give a biquandle, ``table`` or ``quandle`` a quandle;
    with ``kind="structure"`` the ``quandle`` and ``structure`` keys are used.
    """
    if not text.lstrip().startswith("{"):
        return text
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if kind == "structure":
        if "quandle" not in doc or "structure" not in doc:
            raise FormatError("JSON structure needs 'quandle' and 'structure' keys")
        return _rows_block(doc["quandle"]) + "\n" + "\n".join(map(str, doc["structure"])) + "\n"
    if "under" in doc and "over" in doc and kind != "quandle":
        return _rows_block(doc["under"]) + "\n" + _rows_block(doc["over"])
    for key in ("table", "quandle"):
        if key in doc:
            return _rows_block(doc[key])
    raise FormatError("JSON document carries no table")


def sniff_kind(text: str) -> str:
    """Guess ``quandle``, ``biquandle`` or ``group`` from the layout of a file."""
    lines = [ln for ln in _lines(text) if ln.strip()]
    if lines and lines[0].strip().lower() == "group":
        return "group"
    blocks = _blocks(text)
    if len(blocks) == 2 and blocks[1] and blocks[1][0].strip().isdigit() and len(blocks[1][0].split()) == 1:
        return "biquandle"
    if len(blocks) == 2:
        return "structure"
    return "quandle"


def load(path: str | Path, kind: str | None = None):
    """Read a quandle, biquandle or structure file; ``kind`` defaults to sniffing."""
    text = json_to_text(Path(path).read_text(), kind)
    kind = kind or sniff_kind(text)
    if kind == "quandle":
        return parse_quandle(text)
    if kind == "biquandle":
        return parse_biquandle(text)
    if kind == "structure":
        from .structures import BiquandleStructure

        q, betas = parse_structure(text)
        return BiquandleStructure(q, tuple(betas))
    raise FormatError(f"unknown kind {kind!r}")


__all__ = [
    "AxiomError",
    "FormatError",
    "format_biquandle",
    "format_group",
    "format_structure",
    "format_table",
    "json_to_text",
    "load",
    "parse_biquandle",
    "parse_biquandle_tables",
    "parse_group_table",
    "parse_quandle",
    "parse_structure",
    "parse_table",
    "sniff_kind",
]
