"""Companions, conjoints, Cartesian and op-Cartesian fillings, and
enumerative checks of their universal properties.

For f: A -> B the companion f_*: A -|-> B comes with
    upper: f_* => U_B over (f, 1_B)      lower: U_A => f_* over (1_A, f)
and the conjoint f^*: B -|-> A with
    upper: f^* => U_B over (1_B, f)      lower: U_A => f^* over (f, 1_A).
"""
import itertools
import random

from .double import UnsupportedInstance
from .verdict import FAIL, PASS, Tally, Verdict, summarize


class Companion:
    def __init__(self, d, f):
        self.f = f
        self.star, self.star_upper, self.star_lower = d.companion(f)
        self.conj, self.conj_upper, self.conj_lower = d.conjoint(f)


class Filling:
    def __init__(self, arrow, binding):
        self.arrow = arrow
        self.binding = binding


def companion(d, f):
    if not hasattr(d, "companion"):
        raise UnsupportedInstance("%s has no companion constructor" % d.name)
    return Companion(d, f)


def check_binding(d, comp):
    """The four binding equations for f_* and f^*."""
    f = comp.f
    A, B = d.vsrc(f), d.vtgt(f)
    out = []
    checks = [
        ("companion_vertical", lambda: d.vcompose(comp.star_lower, comp.star_upper) == d.U_cell(f)),
        ("companion_horizontal", lambda: d.vcompose(
            d.runitor_inv(comp.star), d.hcompose(comp.star_lower, comp.star_upper),
            d.lunitor(comp.star)) == d.cell_id(comp.star)),
        ("conjoint_vertical", lambda: d.vcompose(comp.conj_lower, comp.conj_upper) == d.U_cell(f)),
        ("conjoint_horizontal", lambda: d.vcompose(
            d.lunitor_inv(comp.conj), d.hcompose(comp.conj_upper, comp.conj_lower),
            d.runitor(comp.conj)) == d.cell_id(comp.conj)),
        ("binding_cells_valid", lambda: all(d.valid_cell(c) for c in (
            comp.star_upper, comp.star_lower, comp.conj_upper, comp.conj_lower))),
    ]
    for name, fn in checks:
        try:
            ok = fn()
        except (ValueError, KeyError):
            ok = False
        out.append(Verdict(name, PASS if ok else FAIL,
                           None if ok else {"vertical": d.dump(f)}, 1))
    return out


def cartesian_filling(d, f, g, m):
    """g^* M f_* for the niche f: A -> X, g: B -> Y below M: X -|-> Y, as the
    composite A -f_*-> X -M-> Y -g^*-> B, with its binding cell."""
    cf, cg = companion(d, f), companion(d, g)
    arrow = d.hcomp(d.hcomp(cf.star, m), cg.conj)
    X, Y = d.vtgt(f), d.vtgt(g)
    c = d.hcompose(d.hcompose(cf.star_upper, d.cell_id(m)), cg.conj_upper)
    c = d.vcompose(c, d.lunitor(d.hcomp(d.U(X), m)), d.runitor(m))
    return Filling(arrow, c)


def opcartesian_filling(d, f, g, m):
    """g_* M f^* for the top niche M: X -|-> Y with f: X -> A, g: Y -> B."""
    cf, cg = companion(d, f), companion(d, g)
    arrow = d.hcomp(d.hcomp(cf.conj, m), cg.star)
    low = d.hcompose(d.hcompose(cf.conj_lower, d.cell_id(m)), cg.star_lower)
    c = d.vcompose(d.runitor_inv(m), d.lunitor_inv(d.hcomp(d.U(d.vsrc(f)), m)), low)
    return Filling(arrow, c)


def verify_cartesian(d, c, max_size=2, cap=20, cell_cap=2000, seed=0):
    """Every cell beta with bottom c.bottom and verticals (h;f, k;g) factors
    through c as gamma;c for exactly one gamma over (h, k)."""
    rng = random.Random(seed)
    t = Tally("cartesian")
    A, B = d.hsrc(c.top), d.htgt(c.top)
    for C in d.objects(max_size):
        for D in d.objects(max_size):
            hs = list(itertools.islice(d.verticals(C, A), cap))
            ks = list(itertools.islice(d.verticals(D, B), cap))
            if not hs or not ks:
                continue
            for L in d.horizontals(C, D, cap=cap, rng=rng):
                for h in hs:
                    for k in ks:
                        betas = d.cells(L, c.bottom, d.vcomp(h, c.left), d.vcomp(k, c.right), cap=cell_cap)
                        gammas = d.cells(L, c.top, h, k, cap=cell_cap)
                        if len(betas) >= cell_cap or len(gammas) >= cell_cap:
                            t.exhaustive = False
                        image = {}
                        for gm in gammas:
                            b = d.vcompose(gm, c)
                            image[b] = image.get(b, 0) + 1
                        for b in betas:
                            n = image.get(b, 0)
                            t.record(n == 1, lambda: {"beta": d.dump(b), "factorizations": n})
                            if t.failed:
                                return t.verdict()
    return t.verdict()


def verify_opcartesian(d, c, max_size=2, cap=20, cell_cap=2000, seed=0):
    """Every cell beta with top c.top and verticals (f;h, g;k) factors as
    c;gamma for exactly one gamma over (h, k)."""
    rng = random.Random(seed)
    t = Tally("opcartesian")
    A, B = d.hsrc(c.bottom), d.htgt(c.bottom)
    for C in d.objects(max_size):
        for D in d.objects(max_size):
            hs = list(itertools.islice(d.verticals(A, C), cap))
            ks = list(itertools.islice(d.verticals(B, D), cap))
            if not hs or not ks:
                continue
            for L in d.horizontals(C, D, cap=cap, rng=rng):
                for h in hs:
                    for k in ks:
                        betas = d.cells(c.top, L, d.vcomp(c.left, h), d.vcomp(c.right, k), cap=cell_cap)
                        gammas = d.cells(c.bottom, L, h, k, cap=cell_cap)
                        if len(betas) >= cell_cap or len(gammas) >= cell_cap:
                            t.exhaustive = False
                        image = {}
                        for gm in gammas:
                            b = d.vcompose(c, gm)
                            image[b] = image.get(b, 0) + 1
                        for b in betas:
                            n = image.get(b, 0)
                            t.record(n == 1, lambda: {"beta": d.dump(b), "factorizations": n})
                            if t.failed:
                                return t.verdict()
    return t.verdict()


def adjunction_cells(d, f):
    """Unit U_A => f_* then f^*, counit f^* then f_* => U_B."""
    comp = companion(d, f)
    A, B = d.vsrc(f), d.vtgt(f)
    eta = d.vcompose(d.lunitor_inv(d.U(A)), d.hcompose(comp.star_lower, comp.conj_lower))
    eps = d.vcompose(d.hcompose(comp.conj_upper, comp.star_upper), d.lunitor(d.U(B)))
    return comp, eta, eps


def verify_companion_adjunction(d, f):
    """Both triangle identities for f_* -| f^* in the horizontal bicategory."""
    comp, eta, eps = adjunction_cells(d, f)
    fs, fc = comp.star, comp.conj
    A, B = d.vsrc(f), d.vtgt(f)
    out = []
    try:
        t1 = d.vcompose(d.runitor_inv(fs), d.hcompose(eta, d.cell_id(fs)),
                        d.associator(fs, fc, fs), d.hcompose(d.cell_id(fs), eps), d.lunitor(fs))
        ok1 = t1 == d.cell_id(fs)
    except (ValueError, KeyError):
        ok1 = False
    try:
        t2 = d.vcompose(d.lunitor_inv(fc), d.hcompose(d.cell_id(fc), eta),
                        d.associator_inv(fc, fs, fc), d.hcompose(eps, d.cell_id(fc)), d.runitor(fc))
        ok2 = t2 == d.cell_id(fc)
    except (ValueError, KeyError):
        ok2 = False
    for name, ok in (("triangle_companion", ok1), ("triangle_conjoint", ok2)):
        out.append(Verdict(name, PASS if ok else FAIL, None if ok else {"vertical": d.dump(f)}, 1))
    return summarize("companion_adjunction", out)


def companion_composite_iso(d, f, g):
    """An invertible globular cell (f;g)_* => f_* then g_*, found by search."""
    fg = companion(d, d.vcomp(f, g)).star
    return d.iso_horizontal(fg, d.hcomp(companion(d, f).star, companion(d, g).star))


def conjoint_composite_iso(d, f, g):
    fg = companion(d, d.vcomp(f, g)).conj
    return d.iso_horizontal(fg, d.hcomp(companion(d, g).conj, companion(d, f).conj))


def identity_companion_iso(d, a):
    comp = companion(d, d.vid(a))
    return d.iso_horizontal(comp.star, d.U(a)), d.iso_horizontal(comp.conj, d.U(a))


def check_fibrancy(d, max_size=2, check="companions", cart_size=1, cap=20, seed=0):
    """Run one fibrancy family over every vertical arrow between objects of
    size <= max_size. check is one of companions, fillings, adjunction."""
    rng = random.Random(seed)
    t = Tally("fibrancy_" + check)
    for A in d.objects(max_size):
        for B in d.objects(max_size):
            for f in d.verticals(A, B):
                if check == "companions":
                    vs = check_binding(d, companion(d, f))
                    extra = [companion_composite_iso(d, d.vid(A), f) is not None,
                             all(x is not None for x in identity_companion_iso(d, A))]
                    ok = all(v.passed for v in vs) and all(extra)
                    t.record(ok, lambda: {"vertical": d.dump(f),
                                          "failed": [v.name for v in vs if not v.passed]})
                elif check == "adjunction":
                    v = verify_companion_adjunction(d, f)
                    t.record(v.passed, lambda: v.counterexample)
                elif check == "fillings":
                    g = d.sample_vertical(rng, rng.choice(d.objects(max_size)), B) or d.vid(B)
                    X, Y = d.vtgt(f), d.vtgt(g)
                    m = d.sample_horizontal(rng, X, Y)
                    fil = cartesian_filling(d, f, g, m)
                    v = verify_cartesian(d, fil.binding, max_size=cart_size, cap=cap, seed=seed)
                    t.record(v.status != FAIL, lambda: v.counterexample)
                    if not v.exhaustive:
                        t.exhaustive = False
                    op = opcartesian_filling(d, f, g, d.sample_horizontal(rng, A, d.vsrc(g)))
                    v2 = verify_opcartesian(d, op.binding, max_size=cart_size, cap=cap, seed=seed)
                    t.record(v2.status != FAIL, lambda: v2.counterexample)
                else:
                    raise ValueError("unknown fibrancy check %r" % check)
    return t.verdict()
