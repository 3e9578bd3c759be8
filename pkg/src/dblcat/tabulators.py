"""Co-pointed endomorphisms, the functor G, Eilenberg-Moore objects and
tabulators.

For F: A -|-> X, G(F): AX -|-> AX is the Cartesian filling of
(U_A x F) x U_X: (AA)X -|-> (AX)X along d_A x X and <1, p2>. Its
Eilenberg-Moore object is the tabulator of F.
"""
from . import fibrancy
from .double import Cell, UnsupportedInstance
from .finset import FinFn, FinSet, all_functions, pair
from .verdict import FAIL, PASS, Tally, Verdict, summarize


class CopointedEndo:
    def __init__(self, d, carrier, arrow, counit):
        self.carrier = carrier
        self.arrow = arrow
        self.counit = counit
        if counit.top != arrow or counit.bottom != d.U(carrier):
            raise ValueError("counit must go from P to U_A")
        if not d.is_globular(counit):
            raise ValueError("counit must be globular")


class GWitness:
    def __init__(self, F, arrow, gamma, counit, niche):
        self.F = F
        self.arrow = arrow
        self.gamma = gamma
        self.counit = counit
        self.niche = niche

    def copointed(self, d):
        return CopointedEndo(d, d.hsrc(self.arrow), self.arrow, self.counit)


class EMObject:
    def __init__(self, obj, u, theta):
        self.obj = obj
        self.u = u
        self.theta = theta


class Tabulator:
    def __init__(self, obj, q1, q2, iota, g, em):
        self.obj = obj
        self.q1 = q1
        self.q2 = q2
        self.iota = iota
        self.g = g
        self.em = em


def _aux(d, w, F):
    A, X = d.hsrc(F), d.htgt(F)
    ax = w.prod_obj(A, X)
    left = w.prod_v(w.diag(A), d.vid(X))
    right = d.vcomp(w.diag(ax), w.prod_v(d.vid(ax), w.p2(A, X)))
    ua_f = w.prod_h(d.U(A), F)
    m = w.prod_h(ua_f, d.U(X))
    return A, X, ax, left, right, ua_f, m


def g_of(d, w, F):
    A, X, ax, left, right, ua_f, m = _aux(d, w, F)
    fil = fibrancy.cartesian_filling(d, left, right, m)
    # pi_{1,3}: (U_A x F) x U_X => U_A x U_X, then U_A x U_X => U_{AX}
    pi13 = d.vcompose(w.delta(m), w.prod_cell(d.vcompose(w.pi1(ua_f, d.U(X)), w.pi1(d.U(A), F)),
                                              w.pi2(ua_f, d.U(X))))
    counit = d.vcompose(fil.binding, pi13, w.unit_cmp_inv(A, X))
    counit = Cell(counit.top, counit.bottom, d.vid(ax), d.vid(ax), counit.payload)
    return GWitness(F, fil.arrow, fil.binding, counit, (left, right, m))


def g_on_cell(d, w, gf, gf2, alpha, cap=5000):
    """G(alpha): the unique cell G(F) => G(F') over f x g whose pasting with
    gamma_F' is gamma_F pasted with U_f x alpha x U_g."""
    f, g = alpha.left, alpha.right
    fg = w.prod_v(f, g)
    target = d.vcompose(gf.gamma, w.prod_cell(w.prod_cell(d.U_cell(f), alpha), d.U_cell(g)))
    found = [c for c in d.cells(gf.arrow, gf2.arrow, fg, fg, cap=cap)
             if d.vcompose(c, gf2.gamma) == target]
    return found


# -- Eilenberg-Moore objects ------------------------------------------------------

def em_object(d, p):
    """Universal cell theta: U_EM => P for a co-pointed P."""
    A, P = p.carrier, p.arrow
    if d.name == "span":
        e = p.counit.payload
        u = e
        em = P.apex
        return EMObject(em, u, Cell(d.U(em), P, u, u, FinFn.identity(em)))
    if d.name == "vmat":
        for (t, s), e in P.items():
            if t != s and len(e):
                raise ValueError("co-pointed matrix with off-diagonal entry")
        elems = {pair(a, x): (a, x) for a in A for x in P.entry(a, a)}
        em = FinSet(elems)
        u = FinFn(em, A, {k: v[0] for k, v in elems.items()})
        top = d.U(em)
        fns = []
        for (t, s), e in top.items():
            fns.append(FinFn(e, P.entry(u(t), u(s)), {z: elems[t][1] for z in e}))
        return EMObject(em, u, Cell(top, P, u, u, tuple(fns)))
    if d.name == "rel":
        if any(a != b for a, b in P.pairs):
            raise ValueError("co-pointed relation must lie inside the diagonal")
        em = FinSet({a for a, _ in P.pairs})
        u = FinFn(em, A, {a: a for a in em})
        return EMObject(em, u, Cell(d.U(em), P, u, u, None))
    raise UnsupportedInstance("no Eilenberg-Moore objects for %s" % d.name)


def verify_em_universal(d, p, em, max_size=2, cap=2000):
    """Every co-pointed morphism (h, beta): (U_H, 1) -> (P, eps), that is a
    cell beta: U_H => P over (h, h) with beta then eps = U_h, is U_b then
    theta for exactly one b: H -> EM(P)."""
    t = Tally("em_universal")
    A, P = p.carrier, p.arrow
    for H in d.objects(max_size):
        images = {}
        for b in all_functions(H, em.obj):
            c = d.vcompose(d.U_cell(b), em.theta)
            images[c] = images.get(c, 0) + 1
        for h in d.verticals(H, A):
            cs = d.cells(d.U(H), P, h, h, cap=cap)
            if len(cs) >= cap:
                t.exhaustive = False
            for c in cs:
                if d.vcompose(c, p.counit) != d.U_cell(h):
                    continue
                n = images.get(c, 0)
                t.record(n == 1, lambda: {"cell": d.dump(c), "factorizations": n})
    return t.verdict()


def is_strong_em(d, em, p):
    c = fibrancy.companion(d, em.u)
    return d.iso_horizontal(d.hcomp(c.conj, c.star), p.arrow)


# -- tabulators ---------------------------------------------------------------------

def tabulator(d, w, F):
    A, X = d.hsrc(F), d.htgt(F)
    gf = g_of(d, w, F)
    em = em_object(d, gf.copointed(d))
    q1 = d.vcomp(em.u, w.p1(A, X))
    q2 = d.vcomp(em.u, w.p2(A, X))
    _, _, _, _, _, ua_f, m = _aux(d, w, F)
    pi_mid = d.vcompose(w.pi1(ua_f, d.U(X)), w.pi2(d.U(A), F))
    iota = d.vcompose(em.theta, gf.gamma, pi_mid)
    iota = Cell(iota.top, iota.bottom, q1, q2, iota.payload)
    return Tabulator(em.obj, q1, q2, iota, gf, em)


def upsilon(d, t, F):
    """q1^* then q2_* => F, pasted from the binding cells and iota."""
    c1, c2 = fibrancy.companion(d, t.q1), fibrancy.companion(d, t.q2)
    mid = d.hcompose(d.hcompose(c1.conj_upper, t.iota), c2.star_upper)
    pre = d.hcompose(d.lunitor_inv(c1.conj), d.cell_id(c2.star))
    post = d.vcompose(d.lunitor(d.hcomp(d.U(d.hsrc(F)), F)), d.runitor(F))
    return d.vcompose(pre, mid, post)


def verify_strong_tabulator(d, t, F):
    out = []

    def run(name, fn):
        try:
            ok = bool(fn())
        except (ValueError, KeyError):
            ok = False
        out.append(Verdict(name, PASS if ok else FAIL, None if ok else {"F": d.dump(F)}, 1))
        return ok

    run("iota_valid", lambda: d.valid_cell(t.iota) and t.iota.top == d.U(t.obj) and t.iota.bottom == F)
    state = {}

    def build():
        state["u"] = upsilon(d, t, F)
        return d.valid_cell(state["u"])
    if run("upsilon_valid", build):
        u = state["u"]

        def inv():
            v = d.inverse_cell(u)
            return (v is not None and d.vcompose(u, v) == d.cell_id(u.top)
                    and d.vcompose(v, u) == d.cell_id(u.bottom))
        run("upsilon_invertible", inv)
    else:
        out.append(Verdict("upsilon_invertible", FAIL, {"F": d.dump(F)}, 0))
    return summarize("strong_tabulator", out)


def verify_tabulator_universal(d, t, F, max_size=2, cap=2000):
    """Every cell U_H => F factors as U_b then iota for exactly one b."""
    tl = Tally("tabulator_universal")
    A, X = d.hsrc(F), d.htgt(F)
    for H in d.objects(max_size):
        images = {}
        for b in all_functions(H, t.obj):
            c = d.vcompose(d.U_cell(b), t.iota)
            images[c] = images.get(c, 0) + 1
        for h1 in d.verticals(H, A):
            for h2 in d.verticals(H, X):
                cs = d.cells(d.U(H), F, h1, h2, cap=cap)
                if len(cs) >= cap:
                    tl.exhaustive = False
                for c in cs:
                    n = images.get(c, 0)
                    tl.record(n == 1, lambda: {"cell": d.dump(c), "factorizations": n})
    return tl.verdict()


def apex_matches(t, span):
    """A bijection T -> apex commuting with the legs, if one exists."""
    fib = {}
    for r in span.apex:
        fib.setdefault((span.left(r), span.right(r)), []).append(r)
    mp = {}
    for x in t.obj:
        k = (t.q1(x), t.q2(x))
        if not fib.get(k):
            return None
        mp[x] = fib[k].pop()
    if any(fib.values()):
        return None
    return FinFn(t.obj, span.apex, mp)


def check_g_functor(d, w, F, cells, cap=5000):
    """G(1_F) = 1_{G(F)} and G(beta alpha) = G(beta) G(alpha) for supplied
    composable pairs (alpha, beta) starting at F; each G(-) unique."""
    tl = Tally("g_functor")
    gf = g_of(d, w, F)
    ids = g_on_cell(d, w, gf, gf, d.cell_id(F), cap=cap)
    tl.record(ids == [d.cell_id(gf.arrow)], {"identity": d.dump(F)})
    for a, b in cells:
        g1, g2 = g_of(d, w, a.bottom), g_of(d, w, b.bottom)
        ga, gb = g_on_cell(d, w, gf, g1, a, cap), g_on_cell(d, w, g1, g2, b, cap)
        gab = g_on_cell(d, w, gf, g2, d.vcompose(a, b), cap)
        ok = len(ga) == len(gb) == len(gab) == 1 and gab[0] == d.vcompose(ga[0], gb[0])
        tl.record(ok, lambda: {"alpha": d.dump(a), "beta": d.dump(b)})
    return tl.verdict()


def corrupt_q2(d, t, h):
    """Tabulator with q2 post-composed by h (for mutation tests)."""
    q2 = d.vcomp(t.q2, h)
    return Tabulator(t.obj, t.q1, q2, Cell(t.iota.top, t.iota.bottom, t.q1, q2, t.iota.payload), t.g, t.em)
