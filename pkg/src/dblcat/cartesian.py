"""Cartesian structure: products of objects, arrows and cells, diagonals and
projections, the terminal object, the comparison cells of the product
functor, local products and unit-purity."""
import itertools
import random

from . import fibrancy
from .double import Cell, UnsupportedInstance
from .finset import TERMINAL, FinFn, FinRel, FinSet, fn_product, pair, pairing, product
from .rel import diagonal
from .span import FinSpan, compose_spans, identity_span
from .verdict import FAIL, PASS, Tally, Verdict, summarize
from .vmat import VMatrix, tag


class CartesianWitness:
    """Instance-native product structure. Subclasses fill in the arrow and
    cell constructors; everything checked lives in the functions below."""

    def __init__(self, d):
        self.d = d

    # objects and verticals
    def prod_obj(self, a, b):
        return product(a, b)[0]

    def p1(self, a, b):
        return product(a, b)[1]

    def p2(self, a, b):
        return product(a, b)[2]

    def prod_v(self, f, g):
        return fn_product(f, g)

    def diag(self, a):
        i = FinFn.identity(a)
        return pairing(i, i)

    @property
    def terminal(self):
        return TERMINAL

    def bang(self, a):
        return FinFn(a, TERMINAL, {x: "*" for x in a})

    @property
    def U_I(self):
        return self.d.U(self.terminal)


class SpanCartesian(CartesianWitness):
    def prod_h(self, m, n):
        return FinSpan(fn_product(m.left, n.left), fn_product(m.right, n.right))

    def prod_cell(self, a, b):
        return Cell(self.prod_h(a.top, b.top), self.prod_h(a.bottom, b.bottom),
                    fn_product(a.left, b.left), fn_product(a.right, b.right),
                    fn_product(a.payload, b.payload))

    def delta(self, m):
        i = FinFn.identity(m.apex)
        return Cell(m, self.prod_h(m, m), self.diag(m.src), self.diag(m.tgt), pairing(i, i))

    def pi1(self, m, n):
        return Cell(self.prod_h(m, n), m, self.p1(m.src, n.src), self.p1(m.tgt, n.tgt),
                    self.p1(m.apex, n.apex))

    def pi2(self, m, n):
        return Cell(self.prod_h(m, n), n, self.p2(m.src, n.src), self.p2(m.tgt, n.tgt),
                    self.p2(m.apex, n.apex))

    def tcell(self, m):
        return Cell(m, self.U_I, self.bang(m.src), self.bang(m.tgt), self.bang(m.apex))

    def _cmp_map(self, m, n, m2, n2):
        top, q1, q2 = compose_spans(self.prod_h(m, n), self.prod_h(m2, n2))
        _, a1, a2 = product(m.apex, n.apex)
        _, b1, b2 = product(m2.apex, n2.apex)
        return top, {z: pair(pair(a1(q1(z)), b1(q2(z))), pair(a2(q1(z)), b2(q2(z)))) for z in top.apex}

    def comp_cmp(self, m, n, m2, n2):
        """(M x N) then (M2 x N2)  =>  (M then M2) x (N then N2)."""
        top, mp = self._cmp_map(m, n, m2, n2)
        bottom = self.prod_h(self.d.hcomp(m, m2), self.d.hcomp(n, n2))
        return Cell(top, bottom, FinFn.identity(top.src), FinFn.identity(top.tgt),
                    FinFn(top.apex, bottom.apex, mp))

    def comp_cmp_inv(self, m, n, m2, n2):
        top, mp = self._cmp_map(m, n, m2, n2)
        bottom = self.prod_h(self.d.hcomp(m, m2), self.d.hcomp(n, n2))
        return Cell(bottom, top, FinFn.identity(top.src), FinFn.identity(top.tgt),
                    FinFn(bottom.apex, top.apex, {v: k for k, v in mp.items()}))

    def unit_cmp(self, a, b):
        top = self.d.U(self.prod_obj(a, b))
        bottom = self.prod_h(self.d.U(a), self.d.U(b))
        return Cell(top, bottom, FinFn.identity(top.src), FinFn.identity(top.tgt),
                    FinFn(top.apex, bottom.apex, {x: x for x in top.apex}))

    def unit_cmp_inv(self, a, b):
        c = self.unit_cmp(a, b)
        return Cell(c.bottom, c.top, c.left, c.right, FinFn(c.bottom.apex, c.top.apex, {x: x for x in c.bottom.apex}))


class RelCartesian(CartesianWitness):
    def prod_h(self, r, s):
        return FinRel(self.prod_obj(r.src, s.src), self.prod_obj(r.tgt, s.tgt),
                      {(pair(a, c), pair(b, d)) for a, b in r.pairs for c, d in s.pairs})

    def prod_cell(self, a, b):
        return Cell(self.prod_h(a.top, b.top), self.prod_h(a.bottom, b.bottom),
                    fn_product(a.left, b.left), fn_product(a.right, b.right), None)

    def delta(self, m):
        return Cell(m, self.prod_h(m, m), self.diag(m.src), self.diag(m.tgt), None)

    def pi1(self, m, n):
        return Cell(self.prod_h(m, n), m, self.p1(m.src, n.src), self.p1(m.tgt, n.tgt), None)

    def pi2(self, m, n):
        return Cell(self.prod_h(m, n), n, self.p2(m.src, n.src), self.p2(m.tgt, n.tgt), None)

    def tcell(self, m):
        return Cell(m, self.U_I, self.bang(m.src), self.bang(m.tgt), None)

    def _glob(self, top, bottom):
        return Cell(top, bottom, FinFn.identity(top.src), FinFn.identity(top.tgt), None)

    def comp_cmp(self, m, n, m2, n2):
        d = self.d
        return self._glob(d.hcomp(self.prod_h(m, n), self.prod_h(m2, n2)),
                          self.prod_h(d.hcomp(m, m2), d.hcomp(n, n2)))

    def comp_cmp_inv(self, m, n, m2, n2):
        c = self.comp_cmp(m, n, m2, n2)
        return self._glob(c.bottom, c.top)

    def unit_cmp(self, a, b):
        return self._glob(self.d.U(self.prod_obj(a, b)), self.prod_h(self.d.U(a), self.d.U(b)))

    def unit_cmp_inv(self, a, b):
        c = self.unit_cmp(a, b)
        return self._glob(c.bottom, c.top)


class VMatCartesian(CartesianWitness):
    def prod_h(self, m, n):
        src, tgt = self.prod_obj(m.src, n.src), self.prod_obj(m.tgt, n.tgt)
        ents = {}
        for t in m.tgt:
            for y in n.tgt:
                for s in m.src:
                    for x in n.src:
                        ents[(pair(t, y), pair(s, x))] = product(m.entry(t, s), n.entry(y, x))[0]
        return VMatrix(src, tgt, ents)

    def _family(self, top, bottom, left, right, fn):
        """Cell whose component at (t, s) sends x to fn(t, s, x)."""
        fns = []
        for (t, s), e in top.items():
            fns.append(FinFn(e, bottom.entry(right(t), left(s)), {x: fn(t, s, x) for x in e}))
        return Cell(top, bottom, left, right, tuple(fns))

    def _split(self, m, n):
        # label of (M x N)((t,y),(s,x)) element -> (t, s, y, x, m, n)
        out = {}
        for t in m.tgt:
            for y in n.tgt:
                for s in m.src:
                    for x in n.src:
                        for a in m.entry(t, s):
                            for b in n.entry(y, x):
                                out[(pair(t, y), pair(s, x), pair(a, b))] = (t, s, y, x, a, b)
        return out

    def prod_cell(self, a, b):
        d = self.d
        sp = self._split(a.top, b.top)
        left, right = fn_product(a.left, b.left), fn_product(a.right, b.right)

        def fn(k, j, x):
            t, s, y, xx, u, v = sp[(k, j, x)]
            return pair(d._component(a, t, s)(u), d._component(b, y, xx)(v))
        return self._family(self.prod_h(a.top, b.top), self.prod_h(a.bottom, b.bottom), left, right, fn)

    def delta(self, m):
        return self._family(m, self.prod_h(m, m), self.diag(m.src), self.diag(m.tgt),
                            lambda t, s, x: pair(x, x))

    def pi1(self, m, n):
        sp = self._split(m, n)
        return self._family(self.prod_h(m, n), m, self.p1(m.src, n.src), self.p1(m.tgt, n.tgt),
                            lambda k, j, x: sp[(k, j, x)][4])

    def pi2(self, m, n):
        sp = self._split(m, n)
        return self._family(self.prod_h(m, n), n, self.p2(m.src, n.src), self.p2(m.tgt, n.tgt),
                            lambda k, j, x: sp[(k, j, x)][5])

    def tcell(self, m):
        return self._family(m, self.U_I, self.bang(m.src), self.bang(m.tgt), lambda t, s, x: "*")

    def _cmp_pairs(self, m, n, m2, n2):
        # (element of hcomp(MxN, M2xN2), element of hcomp(M,M2) x hcomp(N,N2)) per entry
        out = []
        for u in m2.tgt:
            for v in n2.tgt:
                for s in m.src:
                    for x in n.src:
                        key = (pair(u, v), pair(s, x))
                        for t in m.tgt:
                            for y in n.tgt:
                                for a2 in m2.entry(u, t):
                                    for b2 in n2.entry(v, y):
                                        for a in m.entry(t, s):
                                            for b in n.entry(y, x):
                                                out.append((key, tag(pair(t, y), pair(a2, b2), pair(a, b)),
                                                            pair(tag(t, a2, a), tag(y, b2, b))))
        return out

    def comp_cmp(self, m, n, m2, n2):
        d = self.d
        top = d.hcomp(self.prod_h(m, n), self.prod_h(m2, n2))
        bottom = self.prod_h(d.hcomp(m, m2), d.hcomp(n, n2))
        mp = {(k[0], k[1], x): y for k, x, y in self._cmp_pairs(m, n, m2, n2)}
        return self._family(top, bottom, FinFn.identity(top.src), FinFn.identity(top.tgt),
                            lambda t, s, x: mp[(t, s, x)])

    def comp_cmp_inv(self, m, n, m2, n2):
        d = self.d
        top = d.hcomp(self.prod_h(m, n), self.prod_h(m2, n2))
        bottom = self.prod_h(d.hcomp(m, m2), d.hcomp(n, n2))
        mp = {(k[0], k[1], y): x for k, x, y in self._cmp_pairs(m, n, m2, n2)}
        return self._family(bottom, top, FinFn.identity(top.src), FinFn.identity(top.tgt),
                            lambda t, s, x: mp[(t, s, x)])

    def unit_cmp(self, a, b):
        top = self.d.U(self.prod_obj(a, b))
        bottom = self.prod_h(self.d.U(a), self.d.U(b))
        return self._family(top, bottom, FinFn.identity(top.src), FinFn.identity(top.tgt),
                            lambda t, s, x: pair("*", "*"))

    def unit_cmp_inv(self, a, b):
        top = self.d.U(self.prod_obj(a, b))
        bottom = self.prod_h(self.d.U(a), self.d.U(b))
        return self._family(bottom, top, FinFn.identity(top.src), FinFn.identity(top.tgt),
                            lambda t, s, x: "*")


def build_cartesian(d):
    if hasattr(d, "cartesian_witness"):
        return d.cartesian_witness()
    table = {"span": SpanCartesian, "rel": RelCartesian, "vmat": VMatCartesian}
    if d.name not in table:
        raise UnsupportedInstance("no Cartesian structure for %s" % d.name)
    return table[d.name](d)


# -- checks ---------------------------------------------------------------------

def _safe(fn):
    try:
        return bool(fn())
    except (ValueError, KeyError):
        return False


def _pairs_of_objects(d, max_size):
    objs = d.objects(max_size)
    return list(itertools.product(objs, repeat=2))


def check_precartesian(d, w, max_size=2, samples=100, seed=0, cap=6):
    """Naturality of d, p1, p2, t and of delta, pi1, pi2; the triangle
    identities of both adjunctions; functoriality of x; validity of the lax
    comparison cells."""
    rng = random.Random(seed)
    T = {k: Tally(k) for k in ("vertical_naturality", "vertical_triangles", "terminal",
                               "cell_naturality", "cell_triangles", "product_functor",
                               "comparison_cells")}
    objs = d.objects(max_size)
    for A in objs:
        for B in objs:
            fs = list(itertools.islice(d.verticals(A, B), cap))
            for f in fs:
                ok = _safe(lambda: d.vcomp(f, w.diag(B)) == d.vcomp(w.diag(A), w.prod_v(f, f)))
                T["vertical_naturality"].record(ok, lambda: {"vertical": d.dump(f)})
                ok = _safe(lambda: d.vcomp(f, w.bang(B)) == w.bang(A))
                T["terminal"].record(ok, lambda: {"vertical": d.dump(f)})
            C = rng.choice(objs)
            for f in fs[:2]:
                g = d.sample_vertical(rng, C, rng.choice(objs))
                if g is None:
                    continue
                D = d.vtgt(g)
                ok = _safe(lambda: d.vcomp(w.prod_v(f, g), w.p1(B, D)) == d.vcomp(w.p1(A, C), f)
                           and d.vcomp(w.prod_v(f, g), w.p2(B, D)) == d.vcomp(w.p2(A, C), g))
                T["vertical_naturality"].record(ok, lambda: {"f": d.dump(f), "g": d.dump(g)})
            ok = _safe(lambda: d.vcomp(w.diag(A), w.p1(A, A)) == d.vid(A)
                       and d.vcomp(w.diag(A), w.p2(A, A)) == d.vid(A)
                       and d.vcomp(w.diag(w.prod_obj(A, B)),
                                   w.prod_v(w.p1(A, B), w.p2(A, B))) == d.vid(w.prod_obj(A, B)))
            T["vertical_triangles"].record(ok, lambda: {"objects": [d.dump(A), d.dump(B)]})
    I = w.terminal
    T["terminal"].record(_safe(lambda: w.bang(I) == d.vid(I)), {"object": "I"})

    for _ in range(samples):
        A, B, C, D = (d.sample_object(rng, max_size) for _ in range(4))
        m = d.sample_horizontal(rng, A, B)
        n = d.sample_horizontal(rng, C, D)
        fa, fb = d.vertical_out(rng, A, max_size), d.vertical_out(rng, B, max_size)
        a = d.random_cell_from(rng, m, fa, fb, max_size)
        gc, gd = d.vertical_out(rng, C, max_size), d.vertical_out(rng, D, max_size)
        b = d.random_cell_from(rng, n, gc, gd, max_size)
        dump = lambda: {"M": d.dump(m), "N": d.dump(n)}

        ok = _safe(lambda: d.vcompose(a, w.delta(a.bottom)) == d.vcompose(w.delta(m), w.prod_cell(a, a)))
        ok = ok and _safe(lambda: d.vcompose(w.prod_cell(a, b), w.pi1(a.bottom, b.bottom)) == d.vcompose(w.pi1(m, n), a))
        ok = ok and _safe(lambda: d.vcompose(w.prod_cell(a, b), w.pi2(a.bottom, b.bottom)) == d.vcompose(w.pi2(m, n), b))
        ok = ok and _safe(lambda: d.vcompose(a, w.tcell(a.bottom)) == w.tcell(m))
        T["cell_naturality"].record(ok, dump)

        mn = w.prod_h(m, n)
        ok = _safe(lambda: d.vcompose(w.delta(m), w.pi1(m, m)) == d.cell_id(m)
                   and d.vcompose(w.delta(m), w.pi2(m, m)) == d.cell_id(m)
                   and d.vcompose(w.delta(mn), w.prod_cell(w.pi1(m, n), w.pi2(m, n))) == d.cell_id(mn))
        ok = ok and all(d.valid_cell(x) for x in (w.delta(m), w.pi1(m, n), w.pi2(m, n), w.tcell(m)))
        T["cell_triangles"].record(ok, dump)
        # terminal horizontal: exactly one cell into U_I over (t_A, t_B)
        ok = _safe(lambda: d.cells(m, w.U_I, w.bang(A), w.bang(B), cap=2) == [w.tcell(m)])
        T["terminal"].record(ok, dump)

        a2 = d.random_cell_from(rng, a.bottom, d.vertical_out(rng, d.vtgt(fa), max_size),
                                d.vertical_out(rng, d.vtgt(fb), max_size), max_size)
        b2 = d.random_cell_from(rng, b.bottom, d.vertical_out(rng, d.vtgt(gc), max_size),
                                d.vertical_out(rng, d.vtgt(gd), max_size), max_size)
        ok = _safe(lambda: w.prod_cell(d.vcompose(a, a2), d.vcompose(b, b2))
                   == d.vcompose(w.prod_cell(a, b), w.prod_cell(a2, b2)))
        ok = ok and _safe(lambda: w.prod_cell(d.cell_id(m), d.cell_id(n)) == d.cell_id(mn))
        ok = ok and _safe(lambda: w.prod_v(d.vcomp(fa, a2.left), d.vcomp(gc, b2.left))
                          == d.vcomp(w.prod_v(fa, gc), w.prod_v(a2.left, b2.left)))
        ok = ok and d.valid_cell(w.prod_cell(a, b))
        T["product_functor"].record(ok, dump)

        E, F = d.sample_object(rng, max_size), d.sample_object(rng, max_size)
        m2, n2 = d.sample_horizontal(rng, B, E), d.sample_horizontal(rng, D, F)
        ok = _safe(lambda: d.valid_cell(w.comp_cmp(m, n, m2, n2)) and d.valid_cell(w.unit_cmp(A, C)))
        T["comparison_cells"].record(ok, dump)
    return summarize("precartesian", [t.verdict() for t in T.values()])


def check_pseudo(d, w, max_size=2, samples=100, seed=0):
    """The comparison cells of x are invertible (with the supplied inverses)."""
    rng = random.Random(seed)
    t = Tally("pseudo")
    objs = d.objects(max_size)
    for A in objs:
        for C in objs:
            ok = _safe(lambda: d.vcompose(w.unit_cmp(A, C), w.unit_cmp_inv(A, C)) == d.cell_id(w.unit_cmp(A, C).top)
                       and d.vcompose(w.unit_cmp_inv(A, C), w.unit_cmp(A, C)) == d.cell_id(w.unit_cmp(A, C).bottom))
            t.record(ok, lambda: {"unit_comparison": [d.dump(A), d.dump(C)]})
    for i in range(samples):
        A, B, C, D, E, F = (objs[i % len(objs)] if k == 1 else d.sample_object(rng, max_size)
                            for k in range(6))
        m, n = d.sample_horizontal(rng, A, B), d.sample_horizontal(rng, C, D)
        m2, n2 = d.sample_horizontal(rng, B, E), d.sample_horizontal(rng, D, F)
        c, ci = w.comp_cmp(m, n, m2, n2), w.comp_cmp_inv(m, n, m2, n2)
        ok = _safe(lambda: d.valid_cell(c) and d.valid_cell(ci)
                   and d.vcompose(c, ci) == d.cell_id(c.top) and d.vcompose(ci, c) == d.cell_id(c.bottom))
        t.record(ok, lambda: {"M": d.dump(m), "N": d.dump(n), "M2": d.dump(m2), "N2": d.dump(n2)})
    return t.verdict()


class LocalProduct:
    def __init__(self, arrow, proj1, proj2, binding):
        self.arrow = arrow
        self.proj1 = proj1
        self.proj2 = proj2
        self.binding = binding


def local_product(d, w, m, n):
    """M ^ N as the Cartesian filling of M x N along the diagonals."""
    if d.hsrc(m) != d.hsrc(n) or d.htgt(m) != d.htgt(n):
        raise ValueError("local product of non-parallel arrows")
    A, B = d.hsrc(m), d.htgt(m)
    fil = fibrancy.cartesian_filling(d, w.diag(A), w.diag(B), w.prod_h(m, n))
    return LocalProduct(fil.arrow, d.vcompose(fil.binding, w.pi1(m, n)),
                        d.vcompose(fil.binding, w.pi2(m, n)), fil.binding)


def local_top(d, w, a, b):
    return fibrancy.cartesian_filling(d, w.bang(a), w.bang(b), w.U_I)


def check_local_product_universal(d, w, m, n, cap=30, seed=0):
    """Globular cells L => M and L => N pair up uniquely through M ^ N, and
    every L has exactly one globular cell into the top arrow."""
    rng = random.Random(seed)
    t = Tally("local_product_universal")
    lp = local_product(d, w, m, n)
    top = local_top(d, w, d.hsrc(m), d.htgt(m)).arrow
    A, B = d.hsrc(m), d.htgt(m)
    ia, ib = d.vid(A), d.vid(B)
    for L in d.horizontals(A, B, cap=cap, rng=rng):
        alphas = d.cells(L, m, ia, ib, cap=200)
        betas = d.cells(L, n, ia, ib, cap=200)
        gammas = d.cells(L, lp.arrow, ia, ib, cap=2000)
        image = {}
        for g in gammas:
            key = (d.vcompose(g, lp.proj1), d.vcompose(g, lp.proj2))
            image[key] = image.get(key, 0) + 1
        for a in alphas:
            for b in betas:
                t.record(image.get((a, b), 0) == 1, lambda: {"L": d.dump(L)})
        t.record(len(d.cells(L, top, ia, ib, cap=3)) == 1, lambda: {"L": d.dump(L), "top": True})
    return t.verdict()


def check_local_products(d, w, max_size=2, samples=30, seed=0):
    """Universality of M ^ N on sampled parallel pairs, and the product
    formula M x N ~ (p1^* M p1_*) ^ (p2^* N p2_*)."""
    rng = random.Random(seed)
    out = []
    t = Tally("local_products")
    f = Tally("product_formula")
    for _ in range(samples):
        A, B = d.sample_object(rng, max_size), d.sample_object(rng, max_size)
        m, n = d.sample_horizontal(rng, A, B), d.sample_horizontal(rng, A, B)
        v = check_local_product_universal(d, w, m, n, cap=8, seed=rng.randrange(10 ** 6))
        t.record(v.passed, lambda: v.counterexample)
    for _ in range(samples):
        A, B, C, D = (d.sample_object(rng, min(max_size, 2)) for _ in range(4))
        m, n = d.sample_horizontal(rng, A, B), d.sample_horizontal(rng, C, D)
        ok = product_formula_holds(d, w, m, n)
        f.record(ok, lambda: {"M": d.dump(m), "N": d.dump(n)})
    out = [t.verdict(), f.verdict()]
    return summarize("local_products", out)


def product_formula_holds(d, w, m, n):
    A, B, C, D = d.hsrc(m), d.htgt(m), d.hsrc(n), d.htgt(n)
    left = fibrancy.cartesian_filling(d, w.p1(A, C), w.p1(B, D), m).arrow
    right = fibrancy.cartesian_filling(d, w.p2(A, C), w.p2(B, D), n).arrow
    meet = local_product(d, w, left, right).arrow
    return d.iso_horizontal(meet, w.prod_h(m, n)) is not None


def rel_local_product_is_intersection(d, w, m, n):
    lp = local_product(d, w, m, n).arrow
    return lp.pairs == (m.pairs & n.pairs)


def check_unit_pure(d, max_size=2, cap=500):
    """Every cell U_A => U_B over (f, g) is U_f, with f = g."""
    t = Tally("unit_pure")
    for A in d.objects(max_size):
        for B in d.objects(max_size):
            vs = list(itertools.islice(d.verticals(A, B), cap))
            for f in vs:
                for g in vs:
                    cs = d.cells(d.U(A), d.U(B), f, g, cap=cap)
                    if len(cs) >= cap:
                        t.exhaustive = False
                    for c in cs:
                        ok = f == g and c == d.U_cell(f)
                        t.record(ok, lambda: {"cell": d.dump(c), "equals_unit_of_f": False,
                                              "f_equals_g": f == g})
                        if t.failed:
                            return t.verdict()
    return t.verdict()


def check_horizontal_naturality(d, w, F, B):
    """For F: A -|-> X and an object B, the four isomorphisms
        (F x U_B) then p1_*  ~  p1_* then F        (AB -|-> X)
        (U_B x F) then p2_*  ~  p2_* then F        (BA -|-> X)
        p1^* then (F x U_B)  ~  F then p1^*        (A -|-> XB)
        p2^* then (U_B x F)  ~  F then p2^*        (A -|-> BX)
    each witnessed by an invertible globular cell."""
    A, X = d.hsrc(F), d.htgt(F)
    UB = d.U(B)
    comp = lambda f: fibrancy.companion(d, f)
    pairs = [
        (d.hcomp(w.prod_h(F, UB), comp(w.p1(X, B)).star), d.hcomp(comp(w.p1(A, B)).star, F)),
        (d.hcomp(w.prod_h(UB, F), comp(w.p2(B, X)).star), d.hcomp(comp(w.p2(B, A)).star, F)),
        (d.hcomp(comp(w.p1(A, B)).conj, w.prod_h(F, UB)), d.hcomp(F, comp(w.p1(X, B)).conj)),
        (d.hcomp(comp(w.p2(B, A)).conj, w.prod_h(UB, F)), d.hcomp(F, comp(w.p2(B, X)).conj)),
    ]
    out = []
    for i, (lhs, rhs) in enumerate(pairs):
        c = d.iso_horizontal(lhs, rhs)
        ok = c is not None and d.inverse_cell(c) is not None
        out.append(Verdict("iso_%d" % (i + 1), PASS if ok else FAIL,
                           None if ok else {"F": d.dump(F), "B": d.dump(B)}, 1))
    return summarize("horizontal_naturality", out)
