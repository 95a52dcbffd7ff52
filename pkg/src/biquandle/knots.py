"""Signed Gauss codes, knot diagrams and (bi)quandle coloring counts.

A Gauss code lists the passages met while travelling along the knot, e.g.
``O1+U2+O3+U1+O2+U3+``.  Virtual crossings leave no trace in the code, so
classical and virtual knots are handled the same way.

Semiarc ``i`` runs from passage ``i`` to passage ``i + 1`` (cyclically).
Arcs are semiarcs glued across over-passages.

Biquandle crossing relations are read sideways.  Take ``x`` on the under
strand and ``y`` on the over strand, both on the same side of the crossing:

* positive crossing: ``x`` is the incoming under semiarc and ``y`` the
  outgoing over semiarc; then under-out is ``x ⊻ y`` and over-in is ``y ⊼ x``;
* negative crossing: ``x`` is the outgoing under semiarc and ``y`` the
  incoming over semiarc; then under-in is ``x ⊻ y`` and over-out is ``y ⊼ x``.

This is the only assignment of this shape that is invariant under all four
Reidemeister I moves for every biquandle.

For quandles this reads ``out = in * y`` at positive crossings and
``in = out * y`` at negative ones.  ``mirror=True`` swaps the two rules,
which is the same as colouring the mirror image.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .core import FiniteBiquandle, FiniteQuandle, FormatError


class GaussCodeError(FormatError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        where = f" (token {position})" if position is not None else ""
        super().__init__(message + where)


@dataclass(frozen=True)
class Passage:
    over: bool
    label: int
    sign: int

    def __str__(self) -> str:
        return f"{'O' if self.over else 'U'}{self.label}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class GaussCode:
    tokens: tuple[Passage, ...]

    def __str__(self) -> str:
        return "".join(str(t) for t in self.tokens)

    @property
    def crossing_count(self) -> int:
        return len(self.tokens) // 2

    def labels(self) -> list[int]:
        return sorted({t.label for t in self.tokens})


_TOKEN = re.compile(r"([OoUu])(\d+)([+-])")


def parse_gauss_code(text: str) -> GaussCode:
    """Parse ``((O|U)<label>(+|-))*``; case-insensitive, whitespace optional."""
    body = re.sub(r"\s+", "", text)
    tokens: list[Passage] = []
    pos = 0
    while pos < len(body):
        m = _TOKEN.match(body, pos)
        if m is None:
            raise GaussCodeError(f"cannot read a passage at {body[pos:pos + 8]!r}", len(tokens))
        tokens.append(Passage(m.group(1).upper() == "O", int(m.group(2)), 1 if m.group(3) == "+" else -1))
        pos = m.end()
    occurrences: dict[int, list[int]] = {}
    for i, t in enumerate(tokens):
        occ = occurrences.setdefault(t.label, [])
        if len(occ) == 2:
            raise GaussCodeError(f"crossing {t.label} appears more than twice", i)
        if occ:
            first = tokens[occ[0]]
            if first.over == t.over:
                kind = "over" if t.over else "under"
                raise GaussCodeError(f"crossing {t.label} passed {kind} twice", i)
            if first.sign != t.sign:
                raise GaussCodeError(f"crossing {t.label} has conflicting signs", i)
        occ.append(i)
    for label, occ in occurrences.items():
        if len(occ) == 1:
            raise GaussCodeError(f"crossing {label} appears only once", occ[0])
    return GaussCode(tuple(tokens))


@dataclass(frozen=True)
class Crossing:
    label: int
    sign: int
    under_in: int
    under_out: int
    over_in: int
    over_out: int


@dataclass(frozen=True)
class KnotDiagram:
    code: GaussCode
    crossings: tuple[Crossing, ...]
    semiarc_count: int
    arc_of: tuple[int, ...]

    @property
    def arc_count(self) -> int:
        return len(set(self.arc_of))

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)


def build_diagram(g: GaussCode) -> KnotDiagram:
    m = len(g.tokens)
    if m == 0:
        return KnotDiagram(g, (), 1, (0,))
    under: dict[int, int] = {}
    over: dict[int, int] = {}
    for i, t in enumerate(g.tokens):
        (over if t.over else under)[t.label] = i
    crossings = []
    for label in sorted(under, key=lambda k: min(under[k], over[k])):
        u, o = under[label], over[label]
        crossings.append(
            Crossing(label, g.tokens[u].sign, (u - 1) % m, u, (o - 1) % m, o)
        )
    # Arcs break only at under-passages.
    arc_of = [0] * m
    starts = sorted(under.values())
    for k, s in enumerate(starts):
        end = starts[k + 1] if k + 1 < len(starts) else starts[0] + m
        for i in range(s, end):
            arc_of[i % m] = k
    return KnotDiagram(g, tuple(crossings), m, tuple(arc_of))


def add_kink(g: GaussCode, position: int = 0, over_first: bool = True, sign: int = 1) -> GaussCode:
    """Insert a Reidemeister I curl before token ``position``."""
    label = max(g.labels(), default=0) + 1
    pair = [Passage(over_first, label, sign), Passage(not over_first, label, sign)]
    tokens = list(g.tokens)
    return GaussCode(tuple(tokens[:position] + pair + tokens[position:]))


def mirror_code(g: GaussCode) -> GaussCode:
    """Reflection in the projection plane: same passages, opposite signs."""
    return GaussCode(tuple(Passage(t.over, t.label, -t.sign) for t in g.tokens))


def surface_genus(d: KnotDiagram) -> int:
    """Genus of the closed surface carrying the diagram; 0 exactly for planar codes."""
    if not d.crossings:
        return 0
    # Half-edges: (semiarc, 0) = tail end, (semiarc, 1) = head end.
    rotation: dict[tuple[int, int], tuple[int, int]] = {}
    for c in d.crossings:
        ui, uo, oi, oo = (c.under_in, 1), (c.under_out, 0), (c.over_in, 1), (c.over_out, 0)
        ring = (ui, oo, uo, oi) if c.sign > 0 else (ui, oi, uo, oo)
        for k in range(4):
            rotation[ring[k]] = ring[(k + 1) % 4]
    seen = set()
    faces = 0
    for start in rotation:
        if start in seen:
            continue
        faces += 1
        h = start
        while h not in seen:
            seen.add(h)
            h = rotation[(h[0], 1 - h[1])]
    v, e = len(d.crossings), 2 * len(d.crossings)
    return (2 - v + e - faces) // 2


def is_classical(d: KnotDiagram) -> bool:
    return surface_genus(d) == 0


# -- coloring -----------------------------------------------------------------


@dataclass(frozen=True)
class ColoringCount:
    value: int
    colorings: tuple[tuple[int, ...], ...] | None = None

    def __int__(self) -> int:
        return self.value


Constraint = tuple[tuple[int, ...], frozenset]


def _solve(nvars: int, ncolors: int, constraints: Sequence[Constraint], keep: bool):
    """Count assignments satisfying table constraints; propagation keeps every
    constraint's variable domains arc consistent before each branching step."""
    touching: list[list[int]] = [[] for _ in range(nvars)]
    for ci, (vars_, _) in enumerate(constraints):
        for v in set(vars_):
            touching[v].append(ci)
    found: list[tuple[int, ...]] = []

    def propagate(domains: list[set[int]], queue: list[int]) -> bool:
        pending = set(queue)
        while queue:
            ci = queue.pop()
            pending.discard(ci)
            vars_, rel = constraints[ci]
            support: dict[int, set[int]] = {v: set() for v in vars_}
            for tup in rel:
                local: dict[int, int] = {}
                ok = True
                for v, val in zip(vars_, tup):
                    if val not in domains[v] or local.setdefault(v, val) != val:
                        ok = False
                        break
                if ok:
                    for v, val in local.items():
                        support[v].add(val)
            for v, vals in support.items():
                if not vals:
                    return False
                if vals != domains[v]:
                    domains[v] = vals
                    for cj in touching[v]:
                        if cj not in pending:
                            pending.add(cj)
                            queue.append(cj)
        return True

    def rec(domains: list[set[int]], start: int) -> int:
        i = start
        while i < nvars and len(domains[i]) == 1:
            i += 1
        if i == nvars:
            if keep:
                found.append(tuple(next(iter(d)) + 1 for d in domains))
            return 1
        total = 0
        for val in sorted(domains[i]):
            trial = [set(d) for d in domains]
            trial[i] = {val}
            if propagate(trial, list(touching[i])):
                total += rec(trial, i + 1)
        return total

    domains = [set(range(ncolors)) for _ in range(nvars)]
    if not propagate(domains, list(range(len(constraints)))):
        count = 0
    else:
        count = rec(domains, 0)
    return count, (tuple(found) if keep else None)


def _quandle_constraints(d: KnotDiagram, y: FiniteQuandle, mirror: bool) -> list[Constraint]:
    n = y.n
    pos = frozenset((a, b, y.op(a, b)) for a in range(n) for b in range(n))
    neg = frozenset((y.op(a, b), b, a) for a in range(n) for b in range(n))
    out = []
    for c in d.crossings:
        positive = (c.sign > 0) != mirror
        vars_ = (d.arc_of[c.under_in], d.arc_of[c.over_in], d.arc_of[c.under_out])
        out.append((vars_, pos if positive else neg))
    return out


def _arc_relabel(d: KnotDiagram) -> tuple[list[int], int]:
    ids: dict[int, int] = {}
    for a in d.arc_of:
        ids.setdefault(a, len(ids))
    return [ids[a] for a in d.arc_of], len(ids)


def quandle_colorings(
    d: KnotDiagram, y: FiniteQuandle, list_colorings: bool = False, mirror: bool = False
) -> ColoringCount:
    """Arc colorings by ``y``; the vector in ``colorings`` is indexed by arc."""
    nvars = len(set(d.arc_of))
    count, found = _solve(nvars, y.n, _quandle_constraints(d, y, mirror), list_colorings)
    return ColoringCount(count, found)


def _biquandle_constraints(d: KnotDiagram, z: FiniteBiquandle, mirror: bool) -> list[Constraint]:
    n = z.n
    # tuples ordered (under_in, over_in, under_out, over_out)
    pos = frozenset((x, z.dn(y, x), z.up(x, y), y) for x in range(n) for y in range(n))
    neg = frozenset((z.up(x, y), y, x, z.dn(y, x)) for x in range(n) for y in range(n))
    out = []
    for c in d.crossings:
        positive = (c.sign > 0) != mirror
        vars_ = (c.under_in, c.over_in, c.under_out, c.over_out)
        out.append((vars_, pos if positive else neg))
    return out


def biquandle_colorings(
    d: KnotDiagram, z: FiniteBiquandle, list_colorings: bool = False, mirror: bool = False
) -> ColoringCount:
    """Semiarc colorings by ``z``; the vector in ``colorings`` is indexed by semiarc."""
    count, found = _solve(
        d.semiarc_count, z.n, _biquandle_constraints(d, z, mirror), list_colorings
    )
    return ColoringCount(count, found)


def brute_force_biquandle_colorings(d: KnotDiagram, z: FiniteBiquandle, mirror: bool = False) -> int:
    """Check all ``n ** (2k)`` semiarc assignments directly against the crossing rules."""
    total = 0
    for col in product(range(z.n), repeat=d.semiarc_count):
        ok = True
        for c in d.crossings:
            x, w, u, o = col[c.under_in], col[c.over_in], col[c.under_out], col[c.over_out]
            if (c.sign > 0) != mirror:
                ok = u == z.up(x, o) and w == z.dn(o, x)
            else:
                ok = x == z.up(u, w) and o == z.dn(w, u)
            if not ok:
                break
        total += ok
    return total


def brute_force_quandle_colorings(d: KnotDiagram, y: FiniteQuandle, mirror: bool = False) -> int:
    arcs, narcs = _arc_relabel(d)
    total = 0
    for col in product(range(y.n), repeat=narcs):
        ok = True
        for c in d.crossings:
            x, w, u = col[arcs[c.under_in]], col[arcs[c.over_in]], col[arcs[c.under_out]]
            ok = (u == y.op(x, w)) if (c.sign > 0) != mirror else (x == y.op(u, w))
            if not ok:
                break
        total += ok
    return total


# -- fixtures and the structure invariant --------------------------------------


class FixtureNotFound(KeyError):
    pass


def _fixture_text() -> str:
    from importlib.resources import files

    return files("biquandle").joinpath("data/fixtures.txt").read_text()


def parse_fixtures(text: str) -> dict[str, GaussCode]:
    out: dict[str, GaussCode] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        name, sep, code = line.partition(":")
        if not sep:
            raise FormatError(f"line {lineno}: expected 'name: code'")
        out[name.strip()] = parse_gauss_code(code)
    return out


def fixture_table() -> dict[str, GaussCode]:
    """Built-in knots by name, in file order."""
    return parse_fixtures(_fixture_text())


def load_fixture(name: str) -> GaussCode:
    table = fixture_table()
    if name not in table:
        raise FixtureNotFound(f"no fixture {name!r}; available: {', '.join(table)}")
    return table[name]


@dataclass(frozen=True)
class StructureInvariant:
    entries: tuple  # (BiquandleStructure, count) pairs in classification order

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(c for _, c in self.entries)

    @property
    def multiset(self) -> tuple[int, ...]:
        return tuple(sorted(self.counts))


def structure_coloring_invariant(d: KnotDiagram, y: FiniteQuandle, threads: int | None = None) -> StructureInvariant:
    """Biquandle coloring counts of ``d`` by one biquandle per structure class on ``y``."""
    from concurrent.futures import ThreadPoolExecutor

    from .structures import classify_structures, induce_biquandle

    reps = [rep for rep, _ in classify_structures(y)]

    def count(rep):
        return biquandle_colorings(d, induce_biquandle(rep)).value

    workers = max(1, threads or 1)
    if workers == 1:
        values = [count(r) for r in reps]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(count, reps))
    return StructureInvariant(tuple(zip(reps, values)))
