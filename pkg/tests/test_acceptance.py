import io
import itertools
import json
import random
import time

import pytest

from conftest import ACCEPTANCE
from prof_oracle import agrees

from dblcat import cartesian, cli, equivalence, fibrancy, karoubi as K, prof, tabulators
from dblcat.double import Cell, check_laws
from dblcat.finset import FinFn, FinRel, canonical_set
from dblcat.prof import prof_of_finset
from dblcat.rel import rel_double_category
from dblcat.span import FinSpan, span_double_category
from dblcat.vmat import vmat_double_category

INSTANCES = {"span": span_double_category, "rel": rel_double_category, "vmat": vmat_double_category}


def record(n, ok, detail):
    ACCEPTANCE[n] = (ok, detail)
    print("criterion %d: %s  %s" % (n, "PASS" if ok else "FAIL", detail))
    assert ok, detail


def test_criterion_01_law_suite():
    details, ok = [], True
    for name in ("span", "rel", "vmat"):
        t = time.perf_counter()
        vs = check_laws(INSTANCES[name](), max_size=2, samples=200, seed=0, sample_size=3)
        wall = time.perf_counter() - t
        good = all(v.passed for v in vs) and wall < 60
        ok = ok and good
        details.append("%s %s %.1fs" % (name, "ok" if good else [v.name for v in vs if not v.passed], wall))
    record(1, ok, "; ".join(details))


def test_criterion_02_fibrancy_span():
    t = time.perf_counter()
    d = span_double_category()
    vs = {c: fibrancy.check_fibrancy(d, max_size=3, check=c, cart_size=2)
          for c in ("companions", "adjunction", "fillings")}
    f = FinFn.from_indices(canonical_set(3), canonical_set(3), [0, 0, 2])
    comp = fibrancy.companion(d, f)
    low = comp.star_lower
    comp.star_lower = Cell(low.top, low.bottom, low.left, low.right,
                           FinFn.from_indices(low.payload.dom, low.payload.cod, [1, 0, 2]))
    mutant = not all(v.passed for v in fibrancy.check_binding(d, comp))
    wall = time.perf_counter() - t
    ok = all(v.passed for v in vs.values()) and mutant and wall < 120
    record(2, ok, "%s; mutation detected=%s; %.1fs"
           % (", ".join("%s %s" % (k, v.status) for k, v in vs.items()), mutant, wall))


def test_criterion_03_precartesian_pseudo_and_rel_meet():
    ok, parts = True, []
    for name in ("span", "rel", "vmat"):
        d = INSTANCES[name]()
        w = cartesian.build_cartesian(d)
        a = cartesian.check_precartesian(d, w, max_size=3, samples=100, seed=0)
        b = cartesian.check_pseudo(d, w, max_size=3, samples=100, seed=0)
        ok = ok and a.passed and b.passed
        parts.append("%s %s/%s" % (name, a.status, b.status))
    d = rel_double_category()
    w = cartesian.build_cartesian(d)
    rng = random.Random(0)
    checked, meet_ok = 0, True
    for n, k in itertools.product(range(4), repeat=2):
        A, B = canonical_set(n), canonical_set(k)
        cells = list(itertools.product(A, B))
        rels = [FinRel(A, B, {p for i, p in enumerate(cells) if bits >> i & 1}) for bits in range(1 << len(cells))]
        pairs = list(itertools.product(rels, repeat=2))
        if len(pairs) > 400:
            pairs = rng.sample(pairs, 400)
        for m, r in pairs:
            meet_ok = meet_ok and cartesian.rel_local_product_is_intersection(d, w, m, r)
            checked += 1
    record(3, ok and meet_ok, "%s; rel meet = intersection on %d pairs: %s" % (", ".join(parts), checked, meet_ok))


def test_criterion_04_unit_purity_table():
    expected = {"span": "pass", "rel": "pass", "vmat": "fail", "prof": "fail"}
    rows, ok = [], True
    for name, make in list(INSTANCES.items()) + [("prof", prof_of_finset)]:
        v = cartesian.check_unit_pure(make(), max_size=2)
        good = v.status == expected[name] and (v.status == "pass" or bool(v.counterexample))
        ok = ok and good
        rows.append("%s %s (expected %s)" % (name, v.status.upper(), expected[name].upper()))
    record(4, ok, "; ".join(rows))


def _random_span(rng, max_size=3):
    A, X = canonical_set(rng.randint(0, max_size)), canonical_set(rng.randint(0, max_size))
    R = canonical_set(rng.randint(0, max_size) if len(A) and len(X) else 0)
    return FinSpan(FinFn.from_indices(R, A, [rng.randrange(len(A)) for _ in R]),
                   FinFn.from_indices(R, X, [rng.randrange(len(X)) for _ in R]))


def test_criterion_05_tabulators():
    d = span_double_category()
    w = cartesian.build_cartesian(d)
    rng = random.Random(0)
    bad = 0
    for _ in range(60):
        F = _random_span(rng)
        t = tabulators.tabulator(d, w, F)
        if tabulators.apex_matches(t, F) is None or not tabulators.verify_strong_tabulator(d, t, F).passed:
            bad += 1
    record(5, bad == 0, "60 random spans, %d failures" % bad)


def test_criterion_06_beck_chevalley():
    v = equivalence.check_beck_chevalley(span_double_category(), max_size=3, cap=150, seed=0)
    record(6, v.passed and v.checked >= 100, "%d pullback squares, %s" % (v.checked, v.status))


def test_criterion_07_characterization():
    expected = {"span": ("pass", "pass"), "vmat": ("fail", "fail"), "prof": ("fail", "fail")}
    ok, rows = True, []
    for name, make in (("span", span_double_category), ("vmat", vmat_double_category), ("prof", prof_of_finset)):
        r = equivalence.characterization_report(make(), budget=3, samples=40, seed=0)
        got = (r["condition_2"]["status"], r["condition_3"]["status"])
        ok = ok and got == expected[name] and r["agree"]
        rows.append("%s %s/%s (expected %s/%s, agree=%s)" % ((name,) + got + expected[name] + (r["agree"],)))
    record(7, ok, "; ".join(rows))


def _kar_axioms(kb, rng):
    b = kb.base
    small = kb.objects(2)
    objs = kb.objects(3)
    for e in small:
        if kb.identity(e).R != e.a:
            return False
    for x, a in itertools.product(small, repeat=2):
        for F in b.hom(x.carrier, a.carrier):
            if kb.module(x, a, F).R != b.o(a.a, F, x.a) or b.o(a.a, kb.module(x, a, F).R, x.a) != kb.module(x, a, F).R:
                return False
    for _ in range(300):
        e1, e2, e3, e4 = (rng.choice(objs) for _ in range(4))
        m, n, k = kb.sample(rng, e1, e2), kb.sample(rng, e2, e3), kb.sample(rng, e3, e4)
        m2 = kb.meet(m, kb.sample(rng, e1, e2))
        ok = (kb.o(m, kb.identity(e1)) == m and kb.o(kb.identity(e2), m) == m
              and kb.o(k, kb.o(n, m)) == kb.o(kb.o(k, n), m)
              and b.o(e3.a, kb.o(n, m).R, e1.a) == kb.o(n, m).R
              and kb.le(kb.o(n, m2), kb.o(n, m)))
        if not ok:
            return False
    return True


def test_criterion_08_karoubi():
    b = K.rel_lobicat()
    kb, mb = K.karoubi(b), K.mod_lobicat(b)
    axioms = _kar_axioms(kb, random.Random(0))
    cart = K.kar_cartesian_check(kb, max_size=3, samples=100, seed=0)
    formula = K.check_product_formula(kb, max_size=3, samples=120, seed=0)
    bij = K.monads_are_preorders(mb, max_size=3)
    ok = axioms and cart.passed and formula.passed and formula.checked >= 100 and bij.passed
    record(8, ok, "axioms %s; kar cartesian %s; product formula %s on %d pairs; monads/preorders %s (%s)"
           % (axioms, cart.status, formula.status, formula.checked, bij.status, bij.note))


def test_criterion_09_prof():
    cats = prof.enumerate_categories(2, 4)
    rng = random.Random(0)
    comp_ok, n = True, 0
    for c in cats:
        h = prof.hom_profunctor(c)
        comp_ok = comp_ok and agrees(h, h, prof.compose_profunctors(h, h))
        n += 1
    for A, B in itertools.product(cats, repeat=2):
        C = rng.choice(cats)
        M, N = prof.random_profunctor(rng, A, B), prof.random_profunctor(rng, B, C)
        comp_ok = comp_ok and agrees(M, N, prof.compose_profunctors(M, N))
        n += 1
    cart = prof.check_prof_cartesian(max_size=2, samples=40, seed=0)
    from dblcat.finset import coequalizer
    kl_ok = True
    for c in cats:
        k = prof.kleisli_object(c)
        K_, v = coequalizer(c.src, c.tgt)
        good, _ = prof.verify_kleisli(c, k, max_size=2)
        kl_ok = kl_ok and good and k.obj == K_ and k.v == v
    ok = comp_ok and cart.passed and kl_ok
    record(9, ok, "composition vs oracle on %d pairs over %d categories: %s; cartesian %s; kleisli %s"
           % (n, len(cats), comp_ok, cart.status, kl_ok))


PIPELINE = [
    ["laws", "--instance", "span", "--max-size", "3", "--samples", "200"],
    ["laws", "--instance", "rel", "--max-size", "3", "--samples", "200"],
    ["laws", "--instance", "vmat", "--max-size", "3", "--samples", "200"],
    ["laws", "--instance", "prof", "--max-size", "2", "--samples", "20"],
    ["fibrancy", "--instance", "span", "--max-size", "3"],
    ["fibrancy", "--instance", "rel", "--max-size", "2"],
    ["fibrancy", "--instance", "vmat", "--max-size", "2"],
    ["cartesian", "--instance", "span", "--max-size", "3", "--samples", "100"],
    ["cartesian", "--instance", "rel", "--max-size", "3", "--samples", "100"],
    ["cartesian", "--instance", "vmat", "--max-size", "3", "--samples", "100"],
    ["cartesian", "--instance", "prof", "--max-size", "2", "--samples", "20"],
    ["tabulator", "--instance", "span", "--max-size", "3", "--samples", "60"],
    ["characterize", "--instance", "span", "--max-size", "3"],
    ["characterize", "--instance", "vmat", "--max-size", "3"],
    ["characterize", "--instance", "prof", "--max-size", "3"],
    ["karoubi", "--max-size", "3", "--samples", "100"],
    ["prof", "cartesian"],
    ["prof", "kleisli", "--max-size", "4"],
    ["prof", "discrete", "--max-size", "3"],
]


def _pipeline(seed):
    out = []
    for argv in PIPELINE:
        buf = io.StringIO()
        code = cli.run(argv + ["--seed", str(seed), "--out", "-", "--json"], buf)
        rep = json.loads(buf.getvalue())
        for r in rep["rows"]:
            r.pop("wall_time", None)
        out.append((code, rep))
    return out


def test_criterion_10_determinism_and_runtime():
    t = time.perf_counter()
    first = _pipeline(7)
    wall = time.perf_counter() - t
    second = _pipeline(7)
    same = json.dumps(first, sort_keys=True, default=str) == json.dumps(second, sort_keys=True, default=str)
    record(10, same and wall < 900, "identical reports=%s; pipeline %.0fs (%d commands)" % (same, wall, len(PIPELINE)))
