"""Exhaustive property and oracle checks shared by the property tests and the
acceptance summary.  Each function returns a list of failure descriptions;
an empty list means the property held on every case examined."""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product

from biquandle import catalog
from biquandle._search import brute_force_homs
from biquandle.core import (
    FiniteBiquandle,
    associated_quandle,
    biquandle_isomorphism,
    constant_action_map,
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
)
from biquandle.homsets import (
    HomElement,
    brute_force_congruence_closure,
    compose,
    congruence_closure,
    embed_into_power,
    enumerate_biquandle_homs,
    enumerate_quandle_homs,
    factor_through,
    hom_associated_quandle_check,
    hom_biquandle,
    instantiate_identities,
    is_homomorphism,
    lift_check,
    postcompose,
    precompose,
    TWO_REDUCTIVE_IDENTITIES,
    two_reductive_quotient,
)
from biquandle.knots import (
    add_kink,
    biquandle_colorings,
    brute_force_biquandle_colorings,
    brute_force_quandle_colorings,
    build_diagram,
    fixture_table,
    quandle_colorings,
)
from biquandle.structures import (
    brute_force_structures,
    classify,
    enumerate_structures,
    extract_structure,
    induce_biquandle,
    structures_equivalent,
)


@lru_cache(maxsize=None)
def quandles(max_order: int = 4):
    return tuple(q for n in range(1, max_order + 1) for q in catalog.quandle_census(n))


@lru_cache(maxsize=None)
def biquandles(max_order: int = 3):
    return tuple(b for n in range(1, max_order + 1) for b in catalog.biquandle_census(n))


def order3_pairs():
    table = catalog.order3_biquandles()
    return [(a, b, table[a], table[b]) for a in table for b in table]


# -- structures ---------------------------------------------------------------------


def structure_round_trips():
    bad = []
    for q in quandles(4):
        for s in enumerate_structures(q):
            b = induce_biquandle(s)
            if associated_quandle(b) != q or extract_structure(b) != s:
                bad.append(f"structure {s} on order {q.n} does not round-trip")
    for b in biquandles(4):
        s = extract_structure(b)
        if induce_biquandle(s) != b:
            bad.append(f"biquandle {b.under.rows()} does not round-trip")
    return bad


def equal_operations_iff_trivial():
    bad = []
    for b in biquandles(4):
        if (b.under == b.over) != is_trivial_quandle(associated_quandle(b)):
            bad.append(f"{b.under.rows()}")
    return bad


def connected_structures():
    bad = []
    for q in quandles(4):
        if not is_connected_quandle(q):
            continue
        for s in enumerate_structures(q):
            if not is_connected_biquandle(induce_biquandle(s)):
                bad.append(str(s))
    return bad


def constant_structures_medial():
    bad = []
    for q in quandles(4):
        if not is_medial_quandle(q):
            continue
        for s in enumerate_structures(q):
            if s.is_constant() and not is_medial_biquandle(induce_biquandle(s)):
                bad.append(str(s))
    return bad


def no_commutative_over_commutative():
    bad = []
    for q in quandles(4):
        if q.n < 2 or not is_commutative_quandle(q):
            continue
        for s in enumerate_structures(q):
            if is_commutative_biquandle(induce_biquandle(s)):
                bad.append(str(s))
    return bad


def commutative_beta_quotients_order_two():
    bad = []
    for b in biquandles(4):
        if not is_commutative_biquandle(b):
            continue
        betas = [b.beta(y) for y in range(b.n)]
        for x, y in combinations(range(b.n), 2):
            if (betas[x] * betas[y].inverse()).order() != 2:
                bad.append(f"{b.under.rows()} at {x + 1},{y + 1}")
    return bad


def structure_equivalence_criteria_agree():
    """Isomorphism of induced biquandles and the direct automorphism criterion
    partition the structures of every quandle of order <= 4 the same way."""
    bad = []
    for q in quandles(4):
        ss = enumerate_structures(q)
        for s1, s2 in combinations(ss, 2):
            a = biquandle_isomorphism(induce_biquandle(s1), induce_biquandle(s2)) is not None
            b = structures_equivalent(s1, s2) is not None
            if a != b:
                bad.append(f"{s1} vs {s2}")
    return bad


# -- Hom-objects --------------------------------------------------------------------


def hom_object_medial():
    bad = []
    for a, b, x, y in order3_pairs():
        if not is_medial_biquandle(y) or not len(enumerate_biquandle_homs(x, y)):
            continue
        h, _ = hom_biquandle(x, y)
        if not validate_biquandle(h.under, h.over) or not is_medial_biquandle(h):
            bad.append(f"Hom({a},{b})")
    return bad


def lifting_criterion():
    bad = []
    for a, b, x, y in order3_pairs():
        if not hom_associated_quandle_check(x, y):
            bad.append(f"Hom({a},{b}) differs from the lifted quandle maps")
        # every biquandle map passes the lifting test, and nothing else does
        for f in product(range(3), repeat=3):
            if lift_check(x, y, f) != is_homomorphism(x, y, f):
                bad.append(f"lift_check({a},{b},{f})")
                break
    return bad


def hom_object_structure():
    """The associated quandle of the Hom-biquandle is pointwise ``*`` of Q(Y)
    and its structure maps are postcomposition by the structure of Y."""
    bad = []
    for a, b, x, y in order3_pairs():
        if not is_medial_biquandle(y) or not len(enumerate_biquandle_homs(x, y)):
            continue
        h, hs = hom_biquandle(x, y)
        qy = associated_quandle(y)
        qh = associated_quandle(h)
        idx = hs.index
        for i, f in enumerate(hs):
            for j, g in enumerate(hs):
                fg = HomElement(tuple(qy.op(f(t), g(t)) for t in range(x.n)))
                if idx.get(fg) != qh.op(i, j):
                    bad.append(f"Hom({a},{b}) quandle at {i},{j}")
            for k, g in enumerate(hs):
                image = HomElement(tuple(y.beta(g(t))(f(t)) for t in range(x.n)))
                if idx.get(image) != h.dn(i, k):
                    bad.append(f"Hom({a},{b}) beta at {i},{k}")
    return bad


def hom_object_inherits():
    bad = []
    for a, b, x, y in order3_pairs():
        if not is_medial_biquandle(y) or not len(enumerate_biquandle_homs(x, y)):
            continue
        h, _ = hom_biquandle(x, y)
        if is_involutory_biquandle(y) and not is_involutory_biquandle(h):
            bad.append(f"Hom({a},{b}) not involutory")
        if is_commutative_biquandle(y) and not is_commutative_biquandle(h):
            bad.append(f"Hom({a},{b}) not commutative")
    return bad


def constant_action_medial():
    return [f"{b.under.rows()}" for b in biquandles(4) if is_constant_action(b) and not is_medial_biquandle(b)]


def constant_action_hom_object():
    bad = []
    for a, b, x, y in order3_pairs():
        sigma = constant_action_map(y)
        if sigma is None or not len(enumerate_biquandle_homs(x, y)):
            continue
        h, hs = hom_biquandle(x, y)
        star = constant_action_map(h)
        if star is None:
            bad.append(f"Hom({a},{b}) not constant action")
            continue
        post = postcompose(hs, sigma.images)
        idx = hs.index
        if any(idx[post[f]] != star(i) for i, f in enumerate(hs)):
            bad.append(f"Hom({a},{b}) sigma* is not postcomposition")
    return bad


def _is_biquandle_map(h1: FiniteBiquandle, h2: FiniteBiquandle, m) -> bool:
    return is_homomorphism(h1, h2, m)


def functor_laws():
    bad = []
    table = catalog.order3_biquandles()
    medial = [n for n, z in table.items() if is_medial_biquandle(z)]
    for zname in medial:
        z = table[zname]
        for xn, x in table.items():
            for yn, yb in table.items():
                hxy = enumerate_biquandle_homs(x, yb)
                hyz = enumerate_biquandle_homs(yb, z)
                hxz = enumerate_biquandle_homs(x, z)
                if not len(hyz) or not len(hxz):
                    continue
                obj_yz, _ = hom_biquandle(yb, z)
                obj_xz, _ = hom_biquandle(x, z)
                for h in hxy:
                    pre = precompose(hyz, h.images)
                    m = [hxz.index[pre[f]] for f in hyz]
                    if not _is_biquandle_map(obj_yz, obj_xz, m):
                        bad.append(f"h_* for h={h}: Hom({yn},{zname}) -> Hom({xn},{zname})")
        # identity goes to identity
        for xn, x in table.items():
            hs = enumerate_biquandle_homs(x, z)
            ident = tuple(range(x.n))
            if any(v != k for k, v in precompose(hs, ident).items()):
                bad.append(f"identity on {xn}")
    # composition: (g o h)_* = h_* o g_*
    for zname in medial[:3]:
        z = table[zname]
        for x, yb, w in product(list(table.values())[::3], repeat=3):
            hz = enumerate_biquandle_homs(w, z)
            for h in enumerate_biquandle_homs(x, yb):
                for g in enumerate_biquandle_homs(yb, w):
                    gh = compose(g.images, h.images)
                    for f in hz:
                        lhs = compose(f.images, gh)
                        rhs = compose(compose(f.images, g.images), h.images)
                        if lhs != rhs:
                            bad.append("composition")
    # covariant: k_* for k: Z -> Z' between medial targets
    for zn, z in table.items():
        for zn2, z2 in table.items():
            if zn not in medial or zn2 not in medial:
                continue
            for k in enumerate_biquandle_homs(z, z2):
                for xn, x in list(table.items())[::2]:
                    hz, hz2 = enumerate_biquandle_homs(x, z), enumerate_biquandle_homs(x, z2)
                    if not len(hz):
                        continue
                    obj1, _ = hom_biquandle(x, z)
                    obj2, _ = hom_biquandle(x, z2)
                    post = postcompose(hz, k.images)
                    m = [hz2.index[post[f]] for f in hz]
                    if not _is_biquandle_map(obj1, obj2, m):
                        bad.append(f"k_* for k={k}: Hom({xn},{zn}) -> Hom({xn},{zn2})")
    return bad


def power_embedding():
    bad = []
    for x in biquandles(3):
        for y in biquandles(3):
            if not is_medial_biquandle(y) or not len(enumerate_biquandle_homs(x, y)):
                continue
            h, _ = hom_biquandle(x, y)
            e = embed_into_power(x, y)
            if biquandle_isomorphism(h, e.image) is None or h != e.image:
                bad.append(f"{x.under.rows()} -> {y.under.rows()}")
    return bad


def two_reductive_medial():
    return [f"{b.under.rows()}" for b in biquandles(4) if is_two_reductive(b) and not is_medial_biquandle(b)]


def quotient_hom_bijection():
    """Hom(X, Y) and Hom(X / gamma, Y) are in bijection via factoring, for 2-reductive Y."""
    bad = []
    for x in biquandles(3):
        q = two_reductive_quotient(x)
        if not is_two_reductive(q.biquandle):
            bad.append("quotient not 2-reductive")
        for y in biquandles(3):
            if not is_two_reductive(y):
                continue
            hx = enumerate_biquandle_homs(x, y)
            hq = enumerate_biquandle_homs(q.biquandle, y)
            if len(hx) != len(hq):
                bad.append(f"|Hom| {len(hx)} vs {len(hq)}")
                continue
            images = {factor_through(q, f) for f in hx}
            if images != set(hq.elements):
                bad.append("factoring is not a bijection")
    return bad


def quotient_hom_isomorphism():
    bad = []
    for x in biquandles(3):
        q = two_reductive_quotient(x)
        for y in biquandles(3):
            if not is_two_reductive(y) or not len(enumerate_biquandle_homs(x, y)):
                continue
            h1, _ = hom_biquandle(x, y)
            h2, _ = hom_biquandle(q.biquandle, y)
            if biquandle_isomorphism(h1, h2) is None:
                bad.append(f"{x.under.rows()} -> {y.under.rows()}")
    return bad


PROPERTY_CHECKS = {
    "structure round trips": structure_round_trips,
    "equal operations iff trivial associated quandle": equal_operations_iff_trivial,
    "connected quandle gives connected biquandles": connected_structures,
    "constant structure on medial quandle is medial": constant_structures_medial,
    "no commutative biquandle over a commutative quandle": no_commutative_over_commutative,
    "commutative biquandle structure quotients have order 2": commutative_beta_quotients_order_two,
    "structure equivalence criteria agree": structure_equivalence_criteria_agree,
    "Hom-biquandle over medial target is medial": hom_object_medial,
    "lifting criterion on all order-3 pairs": lifting_criterion,
    "Hom-biquandle structure is postcomposition": hom_object_structure,
    "involutory and commutative targets": hom_object_inherits,
    "constant action biquandles are medial": constant_action_medial,
    "constant action targets give constant action Hom": constant_action_hom_object,
    "Hom functor laws": functor_laws,
    "power embedding": power_embedding,
    "2-reductive biquandles are medial": two_reductive_medial,
    "quotient preserves hom sets": quotient_hom_bijection,
    "quotient preserves Hom-biquandles": quotient_hom_isomorphism,
}


# -- oracles --------------------------------------------------------------------------


def oracle_homs():
    bad = []
    for x in quandles(3):
        for y in quandles(3):
            if [f.images for f in enumerate_quandle_homs(x, y)] != brute_force_homs(x.ops, y.ops, x.n, y.n):
                bad.append("quandle homs")
    for x in biquandles(3):
        for y in biquandles(3):
            if [f.images for f in enumerate_biquandle_homs(x, y)] != brute_force_homs(x.ops, y.ops, x.n, y.n):
                bad.append("biquandle homs")
    return bad


def oracle_structures():
    bad = []
    for q in quandles(4):
        if [s.key() for s in enumerate_structures(q)] != [s.key() for s in brute_force_structures(q)]:
            bad.append(f"structures on order {q.n}")
    return bad


def small_diagrams():
    """Every fixture with at most three crossings, plus kinked unknots."""
    out = {name: g for name, g in fixture_table().items() if g.crossing_count <= 3}
    unknot = fixture_table()["unknot"]
    for over_first, sign in product((True, False), (1, -1)):
        k = add_kink(unknot, 0, over_first, sign)
        out[f"kink{int(over_first)}{sign:+d}"] = add_kink(k, 1, not over_first, -sign)
    return out


def oracle_colorings():
    bad = []
    targets = list(biquandles(3)) + [induce_biquandle(rep) for rep, _ in classify(enumerate_structures(catalog.quandle("Y")))]
    qtargets = list(quandles(4))
    for name, g in small_diagrams().items():
        d = build_diagram(g)
        for z in targets:
            for mirror in (False, True):
                if biquandle_colorings(d, z, mirror=mirror).value != brute_force_biquandle_colorings(d, z, mirror):
                    bad.append(f"{name} biquandle")
        for y in qtargets:
            if quandle_colorings(d, y).value != brute_force_quandle_colorings(d, y):
                bad.append(f"{name} quandle")
    return bad


def oracle_congruences():
    bad = []
    for x in biquandles(4):
        pair_sets = [[]] + [[p] for p in combinations(range(x.n), 2)]
        pair_sets.append(instantiate_identities(x, TWO_REDUCTIVE_IDENTITIES))
        for pairs in pair_sets:
            if congruence_closure(x, pairs) != brute_force_congruence_closure(x, pairs):
                bad.append(f"{x.under.rows()} {pairs}")
    return bad


ORACLE_CHECKS = {
    "hom enumeration": oracle_homs,
    "structure enumeration": oracle_structures,
    "coloring solver": oracle_colorings,
    "congruence closure": oracle_congruences,
}


@lru_cache(maxsize=None)
def run_check(name: str) -> tuple[str, ...]:
    """Run a named check once per session; results are shared between test modules."""
    fn = PROPERTY_CHECKS.get(name) or ORACLE_CHECKS[name]
    return tuple(fn())
