"""Command line interface.

Exit codes: 0 success, 1 axiom failure (or a failed reproduction check),
2 unreadable or malformed input, 3 unknown knot fixture, 4 Hom-object
requested for a non-medial target.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from . import catalog
from .core import (
    AxiomError,
    FiniteBiquandle,
    FiniteQuandle,
    FormatError,
    associated_quandle,
    is_commutative_biquandle,
    is_commutative_quandle,
    is_connected_biquandle,
    is_connected_quandle,
    is_constant_action,
    is_involutory_biquandle,
    is_medial_biquandle,
    is_medial_quandle,
    is_trivial_quandle,
    is_two_reductive,
    validate_biquandle,
    validate_quandle,
)
from .homsets import (
    NotMedialError,
    congruence_closure,
    enumerate_biquandle_homs,
    enumerate_quandle_homs,
    format_hom_object,
    hom_biquandle,
    hom_quandle,
    quotient_biquandle,
    two_reductive_quotient,
)
from .knots import (
    FixtureNotFound,
    GaussCodeError,
    biquandle_colorings,
    build_diagram,
    fixture_table,
    load_fixture,
    parse_gauss_code,
    quandle_colorings,
    structure_coloring_invariant,
)
from .structures import (
    BiquandleStructure,
    classify_structures,
    count_constant_structures,
    extract_structure,
    induce_biquandle,
)
from .textio import (
    format_biquandle,
    format_structure,
    format_table,
    json_to_text,
    parse_biquandle_tables,
    parse_structure,
    parse_table,
    sniff_kind,
)

SCHEMA = 1

EXIT_AXIOM = 1
EXIT_FORMAT = 2
EXIT_FIXTURE = 3
EXIT_NOT_MEDIAL = 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("BIQUANDLE_THREADS", "1")))
    except ValueError:
        return 1


# -- input ----------------------------------------------------------------------


def _read(path: str, kind: str | None = None) -> str:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_FORMAT) from None
    try:
        return json_to_text(text, kind)
    except FormatError as exc:
        raise CliError(f"{path}: {exc}", EXIT_FORMAT) from None


def _load_quandle(path: str) -> FiniteQuandle:
    text = _read(path)
    try:
        table = parse_table(text)
    except FormatError as exc:
        raise CliError(f"{path}: {exc}", EXIT_FORMAT) from None
    report = validate_quandle(table)
    if not report:
        raise CliError(f"{path}: quandle: invalid ({report})", EXIT_AXIOM)
    return FiniteQuandle(table, Path(path).stem)


def _load_biquandle(path: str) -> FiniteBiquandle:
    text = _read(path)
    try:
        under, over = parse_biquandle_tables(text)
    except FormatError as exc:
        raise CliError(f"{path}: {exc}", EXIT_FORMAT) from None
    report = validate_biquandle(under, over)
    if not report:
        raise CliError(f"{path}: biquandle: invalid ({report})", EXIT_AXIOM)
    return FiniteBiquandle(under, over, Path(path).stem)


def _load_any(path: str, kind: str | None = None):
    text = _read(path)
    kind = kind or sniff_kind(text)
    if kind == "quandle":
        return _load_quandle(path)
    if kind == "biquandle":
        return _load_biquandle(path)
    raise CliError(f"{path}: expected a quandle or biquandle file, found {kind}", EXIT_FORMAT)


def _load_structure(path: str) -> BiquandleStructure:
    try:
        q, betas = parse_structure(_read(path, "structure"))
    except FormatError as exc:
        raise CliError(f"{path}: {exc}", EXIT_FORMAT) from None
    except AxiomError as exc:
        raise CliError(f"{path}: {exc}", EXIT_AXIOM) from None
    try:
        return BiquandleStructure(q, tuple(betas))
    except AxiomError as exc:
        raise CliError(f"{path}: structure: invalid ({exc})", EXIT_AXIOM) from None


def _load_knot(text: str):
    """A fixture name, or a Gauss code if it is not one."""
    table = fixture_table()
    if text in table:
        return text, table[text]
    if "+" in text or "-" in text:
        # anything carrying a crossing sign is read as a code, so typos report a position
        try:
            return text, parse_gauss_code(text)
        except GaussCodeError as exc:
            raise CliError(f"gauss code: {exc}", EXIT_FORMAT) from None
    try:
        load_fixture(text)
    except FixtureNotFound as exc:
        raise CliError(exc.args[0], EXIT_FIXTURE) from None
    raise AssertionError("unreachable")


# -- output ---------------------------------------------------------------------


def _emit(args, payload: dict, table_text: str) -> str:
    """Render ``payload`` as json or csv, or return ``table_text``."""
    if args.format == "json":
        return json.dumps({"schema": SCHEMA, **payload}, sort_keys=True) + "\n"
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["schema", "key", "value"])
        for key, value in payload.items():
            if isinstance(value, (list, tuple, dict)):
                value = json.dumps(value, sort_keys=True)
            w.writerow([SCHEMA, key, value])
        return buf.getvalue()
    return table_text


def _yes(v: bool) -> str:
    return "yes" if v else "no"


# -- subcommands -----------------------------------------------------------------


def cmd_check(args) -> str:
    obj = _load_any(args.path, args.kind)
    if isinstance(obj, FiniteQuandle):
        panel = {
            "medial": is_medial_quandle(obj),
            "connected": is_connected_quandle(obj),
            "commutative": is_commutative_quandle(obj),
            "trivial": is_trivial_quandle(obj),
        }
        kind = "quandle"
    else:
        panel = {
            "medial": is_medial_biquandle(obj),
            "commutative": is_commutative_biquandle(obj),
            "connected": is_connected_biquandle(obj),
            "involutory": is_involutory_biquandle(obj),
            "constant-action": is_constant_action(obj),
            "2-reductive": is_two_reductive(obj),
        }
        kind = "biquandle"
    text = "; ".join([f"{kind}: valid"] + [f"{k}: {_yes(v)}" for k, v in panel.items()]) + "\n"
    return _emit(args, {"kind": kind, "valid": True, "order": obj.n, **panel}, text)


def cmd_structures(args) -> str:
    q = _load_quandle(args.path)
    classes = classify_structures(q)
    constant = count_constant_structures(q)
    lines = [f"{len(classes)} nonisomorphic structures ({constant} constant)"]
    for i, (rep, size) in enumerate(classes, start=1):
        lines.append(f"{i}: {rep}  class size {size}")
    payload = {
        "classes": [{"representative": list(rep.cycle_strings(False)), "size": size} for rep, size in classes],
        "count": len(classes),
        "constant": constant,
    }
    return _emit(args, payload, "\n".join(lines) + "\n")


def cmd_induce(args) -> str:
    b = induce_biquandle(_load_structure(args.path))
    return _emit(args, {"under": b.under.rows(), "over": b.over.rows()}, format_biquandle(b))


def cmd_assoc(args) -> str:
    b = _load_biquandle(args.path)
    q = associated_quandle(b)
    s = extract_structure(b)
    text = format_table(q.table) if not args.structure else format_structure(q, s.betas)
    payload = {"quandle": q.table.rows(), "structure": list(s.cycle_strings(False))}
    return _emit(args, payload, text)


def cmd_color(args) -> str:
    name, code = _load_knot(args.knot)
    d = build_diagram(code)
    target = _load_any(args.target)
    mode = args.mode or ("quandle" if isinstance(target, FiniteQuandle) else "biquandle")
    if mode == "tuple":
        if not isinstance(target, FiniteQuandle):
            raise CliError("tuple mode needs a quandle target", EXIT_FORMAT)
        inv = structure_coloring_invariant(d, target, threads=_threads())
        lines = [f"{name}: multiset {{{', '.join(map(str, inv.multiset))}}}"]
        lines += [f"  {rep}: {count}" for rep, count in inv.entries]
        payload = {
            "knot": name,
            "multiset": list(inv.multiset),
            "counts": [{"structure": list(rep.cycle_strings(False)), "count": c} for rep, c in inv.entries],
        }
        return _emit(args, payload, "\n".join(lines) + "\n")
    if mode == "quandle":
        if isinstance(target, FiniteBiquandle):
            target = associated_quandle(target)
        result = quandle_colorings(d, target, list_colorings=args.list)
    else:
        if isinstance(target, FiniteQuandle):
            from .core import quandle_as_biquandle

            target = quandle_as_biquandle(target)
        result = biquandle_colorings(d, target, list_colorings=args.list)
    lines = [f"{name}: {result.value}"]
    if args.list:
        lines += [" ".join(map(str, c)) for c in result.colorings]
    payload = {"knot": name, "mode": mode, "count": result.value}
    if args.list:
        payload["colorings"] = [list(c) for c in result.colorings]
    return _emit(args, payload, "\n".join(lines) + "\n")


def _hom_all_pairs(args) -> str:
    if args.src:
        paths = sorted(p for p in Path(args.src).iterdir() if p.is_file())
        objs = [_load_any(str(p), args.kind) for p in paths]
        names = [p.stem for p in paths]
    else:
        table = catalog.order3_biquandles()
        names, objs = list(table), list(table.values())
    from concurrent.futures import ThreadPoolExecutor

    def row(x):
        return [
            len(enumerate_quandle_homs(x, y) if isinstance(x, FiniteQuandle) else enumerate_biquandle_homs(x, y))
            for y in objs
        ]

    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        matrix = list(pool.map(row, objs))
    width = max(len(n) for n in names) + 1
    lines = [" " * width + " ".join(f"{n:>3}" for n in names)]
    for n, r in zip(names, matrix):
        lines.append(f"{n:<{width}}" + " ".join(f"{v:>3}" for v in r))
    return _emit(args, {"names": names, "matrix": matrix}, "\n".join(lines) + "\n")


def cmd_hom(args) -> str:
    if args.all_pairs:
        return _hom_all_pairs(args)
    if not args.src or not args.dst:
        raise CliError("hom needs a source and a target file", EXIT_FORMAT)
    x = _load_any(args.src, args.kind)
    y = _load_any(args.dst, args.kind)
    if type(x) is not type(y):
        raise CliError("source and target must both be quandles or both biquandles", EXIT_FORMAT)
    quandles = isinstance(x, FiniteQuandle)
    h = enumerate_quandle_homs(x, y) if quandles else enumerate_biquandle_homs(x, y)
    lines = [f"|Hom| = {len(h)}"]
    payload: dict = {"count": len(h)}
    if args.list:
        lines += [str(f) for f in h]
        payload["homs"] = h.one_based()
    if args.table:
        try:
            obj, _ = hom_quandle(x, y) if quandles else hom_biquandle(x, y)
        except NotMedialError as exc:
            raise CliError(f"{exc}; Hom-object tables need a medial target", EXIT_NOT_MEDIAL) from None
        except ValueError as exc:
            raise CliError(str(exc), EXIT_AXIOM) from None
        lines.append(format_hom_object(obj, h).rstrip("\n"))
        if quandles:
            payload["table"] = obj.table.rows()
        else:
            payload["under"] = obj.under.rows()
            payload["over"] = obj.over.rows()
    return _emit(args, payload, "\n".join(lines) + "\n")


def _parse_pairs(text: str, n: int) -> list[tuple[int, int]]:
    pairs = []
    for chunk in text.replace(";", " ").split():
        try:
            a, b = (int(v) for v in chunk.split(","))
        except ValueError:
            raise CliError(f"bad pair {chunk!r}; expected a,b", EXIT_FORMAT) from None
        if not (1 <= a <= n and 1 <= b <= n):
            raise CliError(f"pair {chunk!r} out of range 1..{n}", EXIT_FORMAT)
        pairs.append((a - 1, b - 1))
    return pairs


def cmd_quotient(args) -> str:
    x = _load_biquandle(args.path)
    if args.pairs is None:
        q = two_reductive_quotient(x)
    else:
        q = quotient_biquandle(x, congruence_closure(x, _parse_pairs(args.pairs, x.n)))
    blocks = [[i + 1 for i in b] for b in q.congruence.blocks()]
    comment = "blocks: " + " ".join("{" + ",".join(map(str, b)) + "}" for b in blocks)
    payload = {
        "blocks": blocks,
        "under": q.biquandle.under.rows(),
        "over": q.biquandle.over.rows(),
        "projection": list(q.projection.one_based()),
    }
    return _emit(args, payload, format_biquandle(q.biquandle, comment))


def cmd_fixtures(args) -> str:
    table = fixture_table()
    lines = [f"{name}: {code}" if args.list else name for name, code in table.items()]
    payload = {"fixtures": {name: str(code) for name, code in table.items()}}
    return _emit(args, payload, "\n".join(lines) + "\n")


def cmd_reproduce(args) -> str:
    from .reproduce import report, run_all

    checks = run_all()
    payload = {"checks": [{"name": c.name, "passed": c.passed, "details": c.details} for c in checks]}
    out = _emit(args, payload, report(checks))
    if not all(c.passed for c in checks):
        sys.stdout.write(out)
        raise CliError("", EXIT_AXIOM)
    return out


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "table"], default="table")

    p = argparse.ArgumentParser(prog="biquandle", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="validate a table file and print its properties")
    s.add_argument("path")
    s.add_argument("--kind", choices=["quandle", "biquandle"])
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("structures", parents=[common], help="list biquandle structures on a quandle")
    s.add_argument("path")
    s.set_defaults(func=cmd_structures)

    s = sub.add_parser("induce", parents=[common], help="biquandle induced by a structure file")
    s.add_argument("path")
    s.set_defaults(func=cmd_induce)

    s = sub.add_parser("assoc", parents=[common], help="associated quandle of a biquandle")
    s.add_argument("path")
    s.add_argument("--structure", action="store_true", help="also print the structure maps")
    s.set_defaults(func=cmd_assoc)

    s = sub.add_parser("color", parents=[common], help="coloring counts of a knot")
    s.add_argument("knot", help="fixture name or signed Gauss code")
    s.add_argument("target")
    s.add_argument("mode", nargs="?", choices=["quandle", "biquandle", "tuple"])
    s.add_argument("--list", action="store_true")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("hom", parents=[common], help="homomorphism sets and Hom-objects")
    s.add_argument("src", nargs="?")
    s.add_argument("dst", nargs="?")
    s.add_argument("--kind", choices=["quandle", "biquandle"])
    s.add_argument("--list", action="store_true")
    s.add_argument("--table", action="store_true")
    s.add_argument("--all-pairs", action="store_true", help="count every pair in a directory (default: A1..C6)")
    s.set_defaults(func=cmd_hom)

    s = sub.add_parser("quotient", parents=[common], help="quotient by a generated congruence")
    s.add_argument("path")
    s.add_argument("--pairs", help="generating pairs 'a,b;c,d' (default: the 2-reductive congruence)")
    s.set_defaults(func=cmd_quotient)

    s = sub.add_parser("fixtures", parents=[common], help="built-in knot fixtures")
    s.add_argument("--list", action="store_true", help="print the codes too")
    s.set_defaults(func=cmd_fixtures)

    s = sub.add_parser("reproduce", parents=[common], help="recompute all published numbers")
    s.set_defaults(func=cmd_reproduce)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except CliError as exc:
        if str(exc):
            print(f"error: {exc}", file=sys.stderr)
        return exc.code
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
