"""Beck-Chevalley cells, the comparison functor C: Span(D0) -> D, the
tabulator functor S, and the characterization report.

Spans in D0 are triples (apex, left, right) of vertical arrows, so the same
code serves instances whose vertical arrows are functions and instances
whose vertical arrows are internal functors.
"""
import itertools
import random

from . import fibrancy
from .double import Cell, UnsupportedInstance
from .finset import FinFn, pullback
from .verdict import FAIL, PARTIAL, PASS, Tally, Verdict, summarize


class VSpan:
    __slots__ = ("apex", "left", "right")

    def __init__(self, apex, left, right):
        self.apex = apex
        self.left = left
        self.right = right

    def __eq__(self, other):
        return isinstance(other, VSpan) and (self.left, self.right) == (other.left, other.right)

    def __hash__(self):
        return hash((self.left, self.right))


class SpanMorphism:
    """A cell of Span(D0): phi between apexes over verticals (f, g)."""
    __slots__ = ("top", "bottom", "phi", "f", "g")

    def __init__(self, top, bottom, phi, f, g):
        self.top, self.bottom, self.phi, self.f, self.g = top, bottom, phi, f, g


def vertical_pullback(d, f, g):
    if hasattr(d, "vertical_pullback"):
        return d.vertical_pullback(f, g)
    return pullback(f, g)


def is_pullback(d, q1, q2, f, g):
    """None if (q1, q2) is a pullback of (f, g); else a witness dict."""
    if d.vcomp(q1, f) != d.vcomp(q2, g):
        return {"reason": "square does not commute"}
    if hasattr(d, "is_pullback"):
        return d.is_pullback(q1, q2, f, g)
    P, p1, p2 = pullback(f, g)
    seen = {}
    for x in q1.dom:
        k = (q1(x), q2(x))
        if k in seen:
            return {"reason": "mediating map not injective", "elements": [seen[k], x]}
        seen[k] = x
    if len(seen) != len(P):
        missing = [(a, b) for a, b in zip(p1.images, p2.images) if (a, b) not in seen]
        return {"reason": "mediating map not surjective", "cone": missing[0]}
    return None


class BCSquare:
    def __init__(self, q1, q2, f, g, cell, inverse):
        self.q1, self.q2, self.f, self.g = q1, q2, f, g
        self.cell = cell
        self.inverse = inverse

    @property
    def invertible(self):
        return self.inverse is not None


class NotAPullback(ValueError):
    def __init__(self, witness):
        ValueError.__init__(self, "square is not a pullback: %s" % (witness,))
        self.witness = witness


def y_cell(d, q1, q2, f, g):
    """q1^* U_D q2_* => f_* U_C g^* over (1_A, 1_B)."""
    c1, c2 = fibrancy.companion(d, q1), fibrancy.companion(d, q2)
    cf, cg = fibrancy.companion(d, f), fibrancy.companion(d, g)
    left = d.vcompose(c1.conj_upper, cf.star_lower)
    mid = d.U_cell(d.vcomp(q1, f))
    right = d.vcompose(c2.star_upper, cg.conj_lower)
    return d.hcompose(d.hcompose(left, mid), right)


def beck_chevalley(d, q1, q2, f, g):
    w = is_pullback(d, q1, q2, f, g)
    if w is not None:
        raise NotAPullback(w)
    y = y_cell(d, q1, q2, f, g)
    inv = d.inverse_cell(y)
    if inv is not None and not (d.vcompose(y, inv) == d.cell_id(y.top)
                                and d.vcompose(inv, y) == d.cell_id(y.bottom)):
        inv = None
    return BCSquare(q1, q2, f, g, y, inv)


def cospans(d, max_size, cap=None, rng=None):
    objs = d.objects(max_size)
    out = []
    for A, B, C in itertools.product(objs, repeat=3):
        for f in d.verticals(A, C):
            for g in d.verticals(B, C):
                out.append((f, g))
    if cap is not None and len(out) > cap:
        rng = rng or random.Random(0)
        out = rng.sample(out, cap)
    return out


def check_beck_chevalley(d, max_size=2, cap=None, seed=0):
    t = Tally("beck_chevalley")
    for f, g in cospans(d, max_size, cap, random.Random(seed)):
        try:
            P, q1, q2 = vertical_pullback(d, f, g)
            sq = beck_chevalley(d, q1, q2, f, g)
            ok = sq.invertible
        except (ValueError, KeyError):
            ok = False
        t.record(ok, lambda: {"f": d.dump(f), "g": d.dump(g)})
    return t.verdict()


# -- the functor C ------------------------------------------------------------

class FunctorC:
    def __init__(self, d):
        self.d = d

    def on_horizontal(self, r):
        d = self.d
        return d.hcomp(fibrancy.companion(d, r.left).conj, fibrancy.companion(d, r.right).star)

    def zeta(self, r):
        """U_R => r1^* r2_* over (r1, r2)."""
        d = self.d
        c1, c2 = fibrancy.companion(d, r.left), fibrancy.companion(d, r.right)
        return d.vcompose(d.lunitor_inv(d.U(r.apex)), d.hcompose(c1.conj_lower, c2.star_lower))

    def on_cell(self, m, cap=20000):
        """All cells C(R) => C(S) over (f, g) through which U_phi factors."""
        d = self.d
        target = d.vcompose(d.U_cell(m.phi), self.zeta(m.bottom))
        zr = self.zeta(m.top)
        return [x for x in d.cells(self.on_horizontal(m.top), self.on_horizontal(m.bottom), m.f, m.g, cap=cap)
                if d.vcompose(zr, x) == target]

    def composite(self, r, s):
        d = self.d
        P, q1, q2 = vertical_pullback(d, r.right, s.left)
        return VSpan(P, d.vcomp(q1, r.left), d.vcomp(q2, s.right)), q1, q2

    def comparison(self, r, s, cap=20000):
        """The oplax comparison C(R then S) => C(R) then C(S), by its
        defining equation with the zeta cells."""
        d = self.d
        rs, q1, q2 = self.composite(r, s)
        a = d.vcompose(d.U_cell(q1), self.zeta(r))
        b = d.vcompose(d.U_cell(q2), self.zeta(s))
        tau = d.vcompose(d.lunitor_inv(d.U(rs.apex)), d.hcompose(a, b))
        zrs = self.zeta(rs)
        src, tgt = self.on_horizontal(rs), d.hcomp(self.on_horizontal(r), self.on_horizontal(s))
        ia, ib = d.vid(d.hsrc(src)), d.vid(d.htgt(src))
        return [x for x in d.cells(src, tgt, ia, ib, cap=cap) if d.vcompose(zrs, x) == tau]

    def unit_comparison(self, a):
        """C(1_A) ~ U_A, by iso search."""
        d = self.d
        i = d.vid(a)
        return d.iso_horizontal(self.on_horizontal(VSpan(a, i, i)), d.U(a))


def functor_C(d):
    return FunctorC(d)


class FunctorS:
    def __init__(self, d, w):
        from . import tabulators
        self.d, self.w, self._tab = d, w, tabulators

    def tabulator(self, F):
        return self._tab.tabulator(self.d, self.w, F)

    def on_horizontal(self, F):
        t = self.tabulator(F)
        return VSpan(t.obj, t.q1, t.q2)

    def on_cell(self, alpha):
        """Mediating arrows b with U_b then iota' = iota then alpha."""
        d = self.d
        t, t2 = self.tabulator(alpha.top), self.tabulator(alpha.bottom)
        target = d.vcompose(t.iota, alpha)
        return [b for b in d.verticals(t.obj, t2.obj) if d.vcompose(d.U_cell(b), t2.iota) == target]


def functor_S(d, w):
    return FunctorS(d, w)


# -- equivalence ----------------------------------------------------------------

def spans_between(d, a, x, apex_max):
    for R in d.objects(apex_max):
        for r1 in d.verticals(R, a):
            for r2 in d.verticals(R, x):
                yield VSpan(R, r1, r2)


def span_morphisms(d, r, s, f, g):
    for phi in d.verticals(r.apex, s.apex):
        if d.vcomp(phi, s.left) == d.vcomp(r.left, f) and d.vcomp(phi, s.right) == d.vcomp(r.right, g):
            yield SpanMorphism(r, s, phi, f, g)


def _frames(d, budget, apex_max, samples, rng):
    """Unit frames between all objects, plus seeded random span frames."""
    objs = d.objects(budget)
    out = []
    for A in objs:
        for B in objs:
            ia = d.vid(A)
            for f in itertools.islice(d.verticals(A, B), 4):
                for g in itertools.islice(d.verticals(A, B), 4):
                    out.append((VSpan(A, ia, ia), VSpan(B, d.vid(B), d.vid(B)), f, g))
    for _ in range(samples):
        A, X, A2, X2 = (rng.choice(objs) for _ in range(4))
        rs = list(spans_between(d, A, X, apex_max))
        ss = list(spans_between(d, A2, X2, apex_max))
        fs, gs = list(d.verticals(A, A2)), list(d.verticals(X, X2))
        if not (rs and ss and fs and gs):
            continue
        out.append((rng.choice(rs), rng.choice(ss), rng.choice(fs), rng.choice(gs)))
    return out


def check_equivalence(d, w=None, budget=2, apex_max=2, samples=60, seed=0, cap=20000):
    """C_1 essentially surjective, full and faithful at budget."""
    return summarize("equivalence", equivalence_parts(d, w, budget, apex_max, samples, seed, cap))


def equivalence_parts(d, w=None, budget=2, apex_max=2, samples=60, seed=0, cap=20000):
    rng = random.Random(seed)
    C = functor_C(d)
    ess, full, faith, wd = (Tally(n) for n in ("essentially_surjective", "full", "faithful", "well_defined"))
    objs = d.objects(budget)
    S = None
    if w is not None and d.name in ("span", "vmat", "rel"):
        S = functor_S(d, w)
    for A in objs:
        for X in objs:
            for F in d.horizontals(A, X, cap=6, rng=rng):
                if S is not None:
                    t = S.tabulator(F)
                    ok = d.iso_horizontal(C.on_horizontal(VSpan(t.obj, t.q1, t.q2)), F) is not None
                else:
                    ok = any(d.iso_horizontal(C.on_horizontal(r), F) is not None
                             for r in spans_between(d, A, X, apex_max))
                ess.record(ok, lambda: {"F": d.dump(F)})
    for r, s, f, g in _frames(d, budget, apex_max, samples, rng):
        cells = d.cells(C.on_horizontal(r), C.on_horizontal(s), f, g, cap=cap)
        if len(cells) >= cap:
            full.exhaustive = False
        hit = {}
        for m in span_morphisms(d, r, s, f, g):
            xs = C.on_cell(m, cap=cap)
            wd.record(len(xs) == 1, lambda: {"phi": d.dump(m.phi), "images": len(xs)})
            if len(xs) == 1:
                hit.setdefault(xs[0], []).append(m)
        frame = lambda: {"top": _dump_span(d, r), "bottom": _dump_span(d, s),
                         "left": d.dump(f), "right": d.dump(g)}
        for c in cells:
            full.record(c in hit, lambda: dict(frame(), cell=d.dump(c), preimages=0))
        for c, ms in hit.items():
            faith.record(len(ms) == 1, lambda: dict(frame(), preimages=[d.dump(m.phi) for m in ms]))
    return [ess.verdict(), wd.verdict(), full.verdict(), faith.verdict()]


def _dump_span(d, r):
    return {"apex": d.dump(r.apex), "left": d.dump(r.left), "right": d.dump(r.right)}


def check_c_pseudo(d, budget=2, apex_max=1, samples=30, seed=0):
    """Each C_comparison is unique and invertible; C(1_A) ~ U_A."""
    rng = random.Random(seed)
    C = functor_C(d)
    t = Tally("c_pseudo")
    objs = d.objects(budget)
    for A in objs:
        t.record(C.unit_comparison(A) is not None, {"object": d.dump(A)})
    for _ in range(samples):
        A, B, X = (rng.choice(objs) for _ in range(3))
        rs, ss = list(spans_between(d, A, B, apex_max)), list(spans_between(d, B, X, apex_max))
        if not rs or not ss:
            continue
        r, s = rng.choice(rs), rng.choice(ss)
        xs = C.comparison(r, s)
        ok = len(xs) == 1 and d.inverse_cell(xs[0]) is not None
        t.record(ok, lambda: {"R": _dump_span(d, r), "S": _dump_span(d, s), "solutions": len(xs)})
    return t.verdict()


# -- characterization ----------------------------------------------------------------

def _guard(name, fn):
    try:
        v = fn()
    except (NotImplementedError, UnsupportedInstance) as e:
        return Verdict(name, PARTIAL, None, 0, False, "not evaluated: %s" % e)
    v.name = name
    return v


def _fold(name, vs):
    if any(v.status == FAIL for v in vs):
        status = FAIL
    elif all(v.status == PASS for v in vs):
        status = PASS
    else:
        status = PARTIAL
    return status


def check_strong_em(d, w, budget=2, samples=6, seed=0):
    """Eilenberg-Moore objects for the co-pointed arrows G(F) and for
    co-pointed arrows found by enumeration; universality and strength."""
    from . import tabulators
    if d.name not in ("span", "vmat", "rel"):
        raise UnsupportedInstance("no Eilenberg-Moore constructor for %s" % d.name)
    rng = random.Random(seed)
    t = Tally("strong_em")
    objs = d.objects(budget)
    cops = []
    for A in objs:
        for P in d.horizontals(A, A, cap=4, rng=rng):
            ia = d.vid(A)
            for c in d.cells(P, d.U(A), ia, ia, cap=3):
                cops.append(tabulators.CopointedEndo(d, A, P, c))
    for _ in range(samples):
        A, X = rng.choice(objs), rng.choice(objs)
        F = d.sample_horizontal(rng, A, X)
        cops.append(tabulators.g_of(d, w, F).copointed(d))
    for p in cops:
        em = tabulators.em_object(d, p)
        v = tabulators.verify_em_universal(d, p, em, max_size=min(budget, 2))
        strong = tabulators.is_strong_em(d, em, p) is not None
        t.record(v.passed and strong, lambda: {"P": d.dump(p.arrow), "universal": v.status, "strong": strong})
        if not v.exhaustive:
            t.exhaustive = False
    return t.verdict()


def characterization_report(d, budget=2, seed=0, samples=40):
    """Condition (2): Cartesian, fibrant, unit-pure, strong EM objects.
    Condition (3): pullbacks with Beck-Chevalley, and C an equivalence."""
    from . import cartesian
    w = None
    try:
        w = cartesian.build_cartesian(d)
    except ValueError:
        pass

    def need_w():
        if w is None:
            raise NotImplementedError("no Cartesian witness")
        return w

    small = min(budget, 2)
    cond2 = [
        _guard("cartesian", lambda: summarize("cartesian", [
            cartesian.check_precartesian(d, need_w(), max_size=small, samples=samples, seed=seed),
            cartesian.check_pseudo(d, need_w(), max_size=small, samples=samples, seed=seed)])),
        _guard("fibrant", lambda: fibrancy.check_fibrancy(d, max_size=small, check="companions")),
        _guard("unit_pure", lambda: cartesian.check_unit_pure(d, max_size=budget)),
        _guard("strong_em", lambda: check_strong_em(d, need_w(), budget=small, seed=seed)),
    ]
    cond3 = [
        _guard("pullbacks_beck_chevalley", lambda: check_beck_chevalley(d, max_size=small, cap=150, seed=seed)),
    ]
    for v in equivalence_parts(d, w, budget=budget, samples=samples, seed=seed):
        v.name = "c1_" + v.name
        cond3.append(v)
    s2, s3 = _fold("condition_2", cond2), _fold("condition_3", cond3)
    return {
        "instance": d.name,
        "condition_2": {"status": s2, "checks": [v.to_json() for v in cond2]},
        "condition_3": {"status": s3, "checks": [v.to_json() for v in cond3]},
        "agree": s2 == s3 and s2 != PARTIAL,
    }
