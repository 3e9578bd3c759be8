"""Locally ordered bicategories over Rel(FinSet): the Cartesian structure,
the Karoubi envelope of idempotents, and Mod (idempotents above the
identity, i.e. preorders).

Arrows compose in written order, as in `b.o(a, R, x)` for "x, then R,
then a". 2-cells are inclusions.
"""
import functools
import itertools
import random

from .finset import TERMINAL, FinRel, FinSet, all_functions, canonical_set, pair, product
from .rel import all_relations, compose_rels, converse, diagonal, graph
from .verdict import Tally, summarize


# -- the locally ordered bicategory Rel ------------------------------------------------

class RelLoBicat:
    name = "rel"
    I = TERMINAL

    def objects(self, max_size):
        return [canonical_set(n) for n in range(max_size + 1)]

    def hom(self, X, A):
        return all_relations(X, A)

    def sample(self, rng, X, A, density=None):
        p = rng.random() if density is None else density
        return FinRel(X, A, {(x, a) for x in X for a in A if rng.random() < p})

    def identity(self, X):
        return diagonal(X)

    def o(self, *arrows):
        """Composite in written order: o(g, f) is f followed by g."""
        out = arrows[-1]
        for g in reversed(arrows[:-1]):
            out = compose_rels(out, g)
        return out

    def le(self, F, G):
        return F.pairs <= G.pairs

    def meet(self, F, G):
        return FinRel(F.src, F.tgt, F.pairs & G.pairs)

    def top(self, X, A):
        return FinRel(X, A, {(x, a) for x in X for a in A})

    def tensor_obj(self, X, Y):
        return _product(X, Y)[0]

    def tensor(self, F, G):
        return _tensor(F, G)

    def p(self, A, B):
        return graph(_product(A, B)[1])

    def r(self, A, B):
        return graph(_product(A, B)[2])

    def d(self, X):
        XX = self.tensor_obj(X, X)
        return FinRel(X, XX, {(x, pair(x, x)) for x in X})

    def t(self, X):
        return FinRel(X, self.I, {(x, "*") for x in X})

    def rho(self, X):
        return FinRel(X, self.tensor_obj(X, self.I), {(x, pair(x, "*")) for x in X})

    def lam(self, X):
        return FinRel(X, self.tensor_obj(self.I, X), {(x, pair("*", x)) for x in X})

    def gamma(self, X, Y):
        return FinRel(self.tensor_obj(X, Y), self.tensor_obj(Y, X),
                      {(pair(x, y), pair(y, x)) for x in X for y in Y})

    def alpha(self, X, Y, Z):
        l = self.tensor_obj(self.tensor_obj(X, Y), Z)
        r = self.tensor_obj(X, self.tensor_obj(Y, Z))
        return FinRel(l, r, {(pair(pair(x, y), z), pair(x, pair(y, z)))
                             for x in X for y in Y for z in Z})

    def star(self, F):
        """Right adjoint of a map (the converse relation)."""
        return converse(F)

    def is_adjunction(self, F, G):
        return (self.le(self.identity(F.src), self.o(G, F))
                and self.le(self.o(F, G), self.identity(F.tgt)))

    def is_map(self, F):
        return self.is_adjunction(F, converse(F))

    def maps(self, X, A):
        return [graph(f) for f in all_functions(X, A)]


@functools.lru_cache(maxsize=None)
def _product(X, Y):
    return product(X, Y)


@functools.lru_cache(maxsize=100000)
def _tensor(F, G):
    return FinRel(_product(F.src, G.src)[0], _product(F.tgt, G.tgt)[0],
                  {(pair(x, y), pair(a, b)) for x, a in F.pairs for y, b in G.pairs})


def rel_lobicat():
    return RelLoBicat()


def _arrows(b, rng, X, A, exhaustive, samples):
    if exhaustive:
        return list(b.hom(X, A))
    return [b.sample(rng, X, A) for _ in range(samples)]


def _small(X, A, limit=4):
    return len(X) * len(A) <= limit


def check_cartesian_structure(b, max_size=3, samples=60, seed=0):
    """The tensor, comonoid and adjointness axioms of a Cartesian structure.
    Arrows are exhaustive on hom-sets with at most 4 pairs, sampled above."""
    rng = random.Random(seed)
    objs = b.objects(max_size)
    I = b.I
    out = []

    t = Tally("tensor_functor")
    for X, Y, A, B in itertools.product(objs, repeat=4):
        if len(X) + len(Y) + len(A) + len(B) > 2 * max_size + 1:
            continue
        t.record(b.tensor(b.identity(X), b.identity(Y)) == b.identity(b.tensor_obj(X, Y)),
                 {"X": X.to_json(), "Y": Y.to_json()})
        for _ in range(3):
            F, G = b.sample(rng, X, A), b.sample(rng, Y, B)
            F2, G2 = b.sample(rng, A, X), b.sample(rng, B, Y)
            ok = b.tensor(b.o(F2, F), b.o(G2, G)) == b.o(b.tensor(F2, G2), b.tensor(F, G))
            Fb = b.meet(F, b.sample(rng, X, A))
            ok = ok and b.le(b.tensor(Fb, G), b.tensor(F, G))
            t.record(ok, lambda: {"F": F.to_json(), "G": G.to_json()})
    out.append(t.verdict())

    t = Tally("coherence_naturality")
    for X, Y in itertools.product(objs, repeat=2):
        for _ in range(samples // 10 + 1):
            F = b.sample(rng, X, Y)
            Z = rng.choice(objs)
            G = b.sample(rng, Z, rng.choice(objs))
            H = b.sample(rng, rng.choice(objs), rng.choice(objs))
            ok = (b.o(b.rho(Y), F) == b.o(b.tensor(F, b.identity(I)), b.rho(X))
                  and b.o(b.lam(Y), F) == b.o(b.tensor(b.identity(I), F), b.lam(X))
                  and b.o(b.gamma(Y, G.tgt), b.tensor(F, G)) == b.o(b.tensor(G, F), b.gamma(X, Z))
                  and b.o(b.alpha(Y, G.tgt, H.tgt), b.tensor(b.tensor(F, G), H))
                  == b.o(b.tensor(F, b.tensor(G, H)), b.alpha(X, Z, H.src)))
            t.record(ok, lambda: {"F": F.to_json(), "G": G.to_json(), "H": H.to_json()})
    out.append(t.verdict())

    t = Tally("coherence_isos")
    small = b.objects(min(max_size, 2))
    for X, Y in itertools.product(small, repeat=2):
        for iso in (b.rho(X), b.lam(X), b.gamma(X, Y)):
            inv = converse(iso)
            t.record(b.o(inv, iso) == b.identity(iso.src) and b.o(iso, inv) == b.identity(iso.tgt),
                     {"iso": iso.to_json()})
        t.record(b.o(b.gamma(Y, X), b.gamma(X, Y)) == b.identity(b.tensor_obj(X, Y)),
                 {"X": X.to_json(), "Y": Y.to_json()})
        # triangle: (X ⊗ λ_Y) = α (ρ_X ⊗ Y)
        t.record(b.tensor(b.identity(X), b.lam(Y))
                 == b.o(b.alpha(X, I, Y), b.tensor(b.rho(X), b.identity(Y))),
                 {"triangle": [X.to_json(), Y.to_json()]})
        for Z in small:
            tx = b.tensor_obj
            hexa_l = b.o(b.alpha(Y, Z, X), b.gamma(X, tx(Y, Z)), b.alpha(X, Y, Z))
            hexa_r = b.o(b.tensor(b.identity(Y), b.gamma(X, Z)), b.alpha(Y, X, Z),
                         b.tensor(b.gamma(X, Y), b.identity(Z)))
            t.record(hexa_l == hexa_r, {"hexagon": [X.to_json(), Y.to_json(), Z.to_json()]})
            for W in small:
                pl = b.o(b.alpha(X, Y, tx(Z, W)), b.alpha(tx(X, Y), Z, W))
                pr = b.o(b.tensor(b.identity(X), b.alpha(Y, Z, W)), b.alpha(X, tx(Y, Z), W),
                         b.tensor(b.alpha(X, Y, Z), b.identity(W)))
                t.record(pl == pr, {"pentagon": [s.to_json() for s in (X, Y, Z, W)]})
    out.append(t.verdict())

    t = Tally("comonoid")
    for X in objs:
        d, tX, iX = b.d(X), b.t(X), b.identity(X)
        coassoc = b.o(b.alpha(X, X, X), b.tensor(d, iX), d) == b.o(b.tensor(iX, d), d)
        counit = (b.o(b.tensor(iX, tX), d) == b.rho(X) and b.o(b.tensor(tX, iX), d) == b.lam(X))
        cocomm = b.o(b.gamma(X, X), d) == d
        t.record(coassoc and counit and cocomm, {"X": X.to_json()})
    out.append(t.verdict())

    t = Tally("colax_homomorphisms")
    for X, Y in itertools.product(objs, repeat=2):
        for F in _arrows(b, rng, X, Y, _small(X, Y), samples):
            ok = (b.le(b.o(b.d(Y), F), b.o(b.tensor(F, F), b.d(X)))
                  and b.le(b.o(b.t(Y), F), b.t(X)))
            t.record(ok, lambda: {"F": F.to_json()})
    out.append(t.verdict())

    t = Tally("structure_adjoints")
    for X in objs:
        d, tX = b.d(X), b.t(X)
        t.record(b.is_adjunction(d, b.star(d)) and b.is_adjunction(tX, b.star(tX)), {"X": X.to_json()})
    out.append(t.verdict())
    return summarize("cartesian_structure", out)


def cw_round_trip(b, max_size=2, samples=60, seed=0):
    """Maps have finite products, homs have meets and tops, and
    F ⊗ G = (p* F p) ∧ (r* G r) with ⊤_{I,I} = 1_I; conversely the formula
    defines a functorial tensor that reproduces ⊗."""
    rng = random.Random(seed)
    objs = b.objects(max_size)
    out = []

    t = Tally("maps_are_left_adjoints")
    for X, A in itertools.product(objs, repeat=2):
        maps = set(b.maps(X, A))
        homs = list(b.hom(X, A))
        for F in homs:
            has_adj = any(b.is_adjunction(F, G) for G in b.hom(A, X))
            t.record(has_adj == (F in maps), lambda: {"F": F.to_json()})
    out.append(t.verdict())

    t = Tally("map_products")
    for Z, A, B in itertools.product(objs, repeat=3):
        AB = b.tensor_obj(A, B)
        cands = b.maps(Z, AB)
        for f in b.maps(Z, A):
            for g in b.maps(Z, B):
                n = sum(1 for h in cands if b.o(b.p(A, B), h) == f and b.o(b.r(A, B), h) == g)
                t.record(n == 1, lambda: {"f": f.to_json(), "g": g.to_json(), "mediators": n})
        t.record(len(b.maps(Z, b.I)) == 1, {"Z": Z.to_json()})
    out.append(t.verdict())

    t = Tally("local_products")
    for X, A in itertools.product(objs, repeat=2):
        if not _small(X, A):
            continue
        homs = list(b.hom(X, A))
        top = b.top(X, A)
        for F in homs:
            t.record(b.le(F, top), {"F": F.to_json()})
            for G in homs:
                m = b.meet(F, G)
                glb = [H for H in homs if b.le(H, F) and b.le(H, G)]
                t.record(all(b.le(H, m) for H in glb) and m in glb,
                         lambda: {"F": F.to_json(), "G": G.to_json()})
    out.append(t.verdict())

    t = Tally("tensor_formula")
    for X, Y, A, B in itertools.product(objs, repeat=4):
        for _ in range(max(1, samples // 20)):
            F, G = b.sample(rng, X, A), b.sample(rng, Y, B)
            t.record(b.tensor(F, G) == formula_tensor(b, F, G),
                     lambda: {"F": F.to_json(), "G": G.to_json()})
    t.record(b.top(b.I, b.I) == b.identity(b.I), {"top_II": True})
    out.append(t.verdict())

    t = Tally("formula_functorial")
    for _ in range(samples):
        X, Y, A, B, C, D = (rng.choice(objs) for _ in range(6))
        F, G = b.sample(rng, X, A), b.sample(rng, Y, B)
        F2, G2 = b.sample(rng, A, C), b.sample(rng, B, D)
        ok = (formula_tensor(b, b.o(F2, F), b.o(G2, G))
              == b.o(formula_tensor(b, F2, G2), formula_tensor(b, F, G))
              and formula_tensor(b, b.identity(X), b.identity(Y)) == b.identity(b.tensor_obj(X, Y)))
        t.record(ok, lambda: {"F": F.to_json(), "G": G.to_json()})
    out.append(t.verdict())
    return summarize("cw_round_trip", out)


def formula_tensor(b, F, G):
    X, Y, A, B = F.src, G.src, F.tgt, G.tgt
    p, r = b.p(X, Y), b.r(X, Y)
    pa, ra = b.p(A, B), b.r(A, B)
    return b.meet(b.o(b.star(pa), F, p), b.o(b.star(ra), G, r))


# -- the Karoubi envelope ----------------------------------------------------------------

class Idempotent:
    __slots__ = ("carrier", "a")

    def __init__(self, b, carrier, a, validate=True):
        self.carrier = carrier
        self.a = a
        if validate:
            if a.src != carrier or a.tgt != carrier:
                raise ValueError("idempotent must be an endo-arrow on its carrier")
            if b.o(a, a) != a:
                raise ValueError("arrow is not idempotent")

    def __eq__(self, other):
        return isinstance(other, Idempotent) and self.a == other.a

    def __hash__(self):
        return hash(self.a)

    def __repr__(self):
        return "Idem(%r)" % (self.a,)

    def to_json(self):
        out = self.a.to_json()
        out["carrier"] = self.carrier.to_json()
        return out

    @classmethod
    def from_json(cls, b, obj, monad=False):
        obj = dict(obj)
        carrier = FinSet.from_json(obj.pop("carrier"))
        a = FinRel.from_json(obj)
        return (LoMonad if monad else Idempotent)(b, carrier, a)


class LoMonad(Idempotent):
    __slots__ = ()

    def __init__(self, b, carrier, a, validate=True):
        super().__init__(b, carrier, a, validate)
        if validate and not b.le(b.identity(carrier), a):
            raise ValueError("monad must lie above the identity")


class IdemModule:
    __slots__ = ("src", "tgt", "R")

    def __init__(self, b, src, tgt, R, validate=True):
        self.src = src
        self.tgt = tgt
        self.R = R
        if validate and b.o(tgt.a, R, src.a) != R:
            raise ValueError("arrow is not a module between the idempotents")

    def __eq__(self, other):
        return isinstance(other, IdemModule) and (self.src, self.tgt, self.R) == (other.src, other.tgt, other.R)

    def __hash__(self):
        return hash((self.src, self.tgt, self.R))

    def __repr__(self):
        return "Mod(%r)" % (self.R,)

    def to_json(self):
        return {"src": self.src.to_json(), "tgt": self.tgt.to_json(), "arrow": self.R.to_json()}


class Karoubi:
    """Kar(b): idempotents and modules between them. With monads_only it is
    Mod(b), the idempotents lying above the identity."""

    def __init__(self, base, monads_only=False):
        self.base = base
        self.monads_only = monads_only
        self.name = ("mod_" if monads_only else "kar_") + base.name
        self._objs = {}

    def make(self, carrier, a):
        return (LoMonad if self.monads_only else Idempotent)(self.base, carrier, a)

    def objects_on(self, X):
        if X not in self._objs:
            b = self.base
            found = []
            for a in b.hom(X, X):
                if b.o(a, a) != a:
                    continue
                if self.monads_only and not b.le(b.identity(X), a):
                    continue
                found.append(self.make(X, a))
            self._objs[X] = found
        return self._objs[X]

    def objects(self, max_size):
        return [e for X in self.base.objects(max_size) for e in self.objects_on(X)]

    def trivial(self, X):
        return self.make(X, self.base.identity(X))

    def identity(self, e):
        return IdemModule(self.base, e, e, e.a, validate=False)

    def o(self, *ms):
        for m, n in zip(ms, ms[1:]):
            if n.tgt != m.src:
                raise ValueError("modules do not compose")
        return IdemModule(self.base, ms[-1].src, ms[0].tgt, self.base.o(*(m.R for m in ms)), validate=False)

    def module(self, src, tgt, F):
        """aFx, the module generated by an arbitrary arrow F."""
        return IdemModule(self.base, src, tgt, self.base.o(tgt.a, F, src.a), validate=False)

    def hom(self, src, tgt):
        b = self.base
        return [IdemModule(b, src, tgt, R, validate=False) for R in b.hom(src.carrier, tgt.carrier)
                if b.o(tgt.a, R, src.a) == R]

    def sample(self, rng, src, tgt):
        return self.module(src, tgt, self.base.sample(rng, src.carrier, tgt.carrier))

    def le(self, m, n):
        return self.base.le(m.R, n.R)

    def meet(self, m, n):
        return self.module(m.src, m.tgt, self.base.meet(m.R, n.R))

    def top(self, src, tgt):
        return self.module(src, tgt, self.base.top(src.carrier, tgt.carrier))

    def tensor_obj(self, e1, e2):
        b = self.base
        return self.make(b.tensor_obj(e1.carrier, e2.carrier), b.tensor(e1.a, e2.a))

    def tensor(self, m, n):
        return IdemModule(self.base, self.tensor_obj(m.src, n.src), self.tensor_obj(m.tgt, n.tgt),
                          self.base.tensor(m.R, n.R), validate=False)

    @property
    def I(self):
        return self.trivial(self.base.I)

    def p_sharp(self, e1, e2):
        b = self.base
        return self.module(self.tensor_obj(e1, e2), e1, b.p(e1.carrier, e2.carrier))

    def r_sharp(self, e1, e2):
        b = self.base
        return self.module(self.tensor_obj(e1, e2), e2, b.r(e1.carrier, e2.carrier))

    def p_sharp_star(self, e1, e2):
        b = self.base
        return self.module(e1, self.tensor_obj(e1, e2), b.star(b.p(e1.carrier, e2.carrier)))

    def r_sharp_star(self, e1, e2):
        b = self.base
        return self.module(e2, self.tensor_obj(e1, e2), b.star(b.r(e1.carrier, e2.carrier)))

    def d_sharp(self, e):
        return self.module(e, self.tensor_obj(e, e), self.base.d(e.carrier))

    def t_sharp(self, e):
        return self.module(e, self.I, self.base.t(e.carrier))

    def is_adjunction(self, m, n):
        return self.le(self.identity(m.src), self.o(n, m)) and self.le(self.o(m, n), self.identity(m.tgt))

    def right_adjoint(self, m):
        for n in self.hom(m.tgt, m.src):
            if self.is_adjunction(m, n):
                return n
        return None

    def meet_of_products(self, m, n):
        """(p#* F p#) ⊓ (r#* G r#) for F: (X,x) -> (A,a), G: (Y,y) -> (B,b)."""
        X, Y, A, B = m.src, n.src, m.tgt, n.tgt
        left = self.o(self.p_sharp_star(A, B), m, self.p_sharp(X, Y))
        right = self.o(self.r_sharp_star(A, B), n, self.r_sharp(X, Y))
        return self.meet(left, right)


def karoubi(b):
    return Karoubi(b)


def mod_lobicat(b):
    return Karoubi(b, monads_only=True)


def _pairs(kb, rng, max_size, n, small=2):
    """All object pairs on carriers <= small, then n random pairs up to max_size."""
    out = list(itertools.product(kb.objects(small), repeat=2))
    big = kb.objects(max_size)
    out += [(rng.choice(big), rng.choice(big)) for _ in range(n)]
    return out


def kar_cartesian_check(kb, max_size=3, samples=100, seed=0, base_check=True):
    rng = random.Random(seed)
    b = kb.base
    out = []
    if base_check:
        out.append(check_cartesian_structure(b, max_size=max_size, seed=seed))

    t = Tally("category_laws")
    for e1, e2 in _pairs(kb, rng, max_size, samples):
        m = kb.sample(rng, e1, e2)
        e3 = rng.choice(kb.objects(max_size))
        n = kb.sample(rng, e2, e3)
        k = kb.sample(rng, e3, rng.choice(kb.objects(max_size)))
        ok = (kb.o(m, kb.identity(e1)) == m and kb.o(kb.identity(e2), m) == m
              and kb.o(k, kb.o(n, m)) == kb.o(kb.o(k, n), m)
              and b.o(e3.a, kb.o(n, m).R, e1.a) == kb.o(n, m).R)
        t.record(ok, lambda: {"m": m.to_json()})
    out.append(t.verdict())

    t = Tally("local_terminal")
    tp = Tally("local_products")
    for e1, e2 in _pairs(kb, rng, max_size, samples // 4):
        hom = kb.hom(e1, e2)
        top = kb.top(e1, e2)
        t.record(top in hom and all(kb.le(m, top) for m in hom),
                 lambda: {"src": e1.to_json(), "tgt": e2.to_json()})
        pairs = [(m, n) for m in hom for n in hom]
        if len(pairs) > 40:
            pairs = rng.sample(pairs, 40)
        for m, n in pairs:
            mn = kb.meet(m, n)
            lower = [h for h in hom if kb.le(h, m) and kb.le(h, n)]
            tp.record(mn in lower and all(kb.le(h, mn) for h in lower),
                      lambda: {"F": m.to_json(), "G": n.to_json()})
    out += [t.verdict(), tp.verdict()]

    t = Tally("terminal_object")
    I = kb.I
    es = kb.objects(2) + rng.sample(kb.objects(max_size), min(samples // 4, len(kb.objects(max_size))))
    for e in es:
        ta = kb.module(e, I, b.t(e.carrier))
        ats = kb.module(I, e, b.star(b.t(e.carrier)))
        maps = [s for s in kb.hom(e, I) if kb.right_adjoint(s) is not None]
        t.record(kb.is_adjunction(ta, ats) and maps == [ta], lambda: {"object": e.to_json()})
    out.append(t.verdict())

    t = Tally("map_products")
    for e1, e2 in _pairs(kb, rng, min(max_size, 3), samples // 4, small=1):
        p, r = kb.p_sharp(e1, e2), kb.r_sharp(e1, e2)
        pe = kb.tensor_obj(e1, e2)
        d12 = kb.d_sharp(pe)
        ok = (kb.is_adjunction(p, kb.p_sharp_star(e1, e2)) and kb.is_adjunction(r, kb.r_sharp_star(e1, e2))
              and kb.o(kb.tensor(p, r), d12) == kb.identity(pe))
        for e in (e1, e2):
            de = kb.d_sharp(e)
            pp, rr = kb.p_sharp(e, e), kb.r_sharp(e, e)
            ok = ok and kb.o(pp, de) == kb.identity(e) and kb.o(rr, de) == kb.identity(e)
            ok = ok and kb.is_adjunction(de, kb.module(kb.tensor_obj(e, e), e, b.star(b.d(e.carrier))))
        t.record(ok, lambda: {"A": e1.to_json(), "B": e2.to_json()})
    out.append(t.verdict())

    t = Tally("tensor_functor")
    for _ in range(samples):
        objs = kb.objects(2)
        x, y, a, bb, c, dd = (rng.choice(objs) for _ in range(6))
        m, n = kb.sample(rng, x, a), kb.sample(rng, y, bb)
        m2, n2 = kb.sample(rng, a, c), kb.sample(rng, bb, dd)
        ok = (kb.tensor(kb.o(m2, m), kb.o(n2, n)) == kb.o(kb.tensor(m2, n2), kb.tensor(m, n))
              and kb.tensor(kb.identity(x), kb.identity(y)) == kb.identity(kb.tensor_obj(x, y)))
        t.record(ok, lambda: {"F": m.to_json(), "G": n.to_json()})
    out.append(t.verdict())

    t = Tally("colax_homomorphisms")
    for e1, e2 in _pairs(kb, rng, max_size, samples):
        m = kb.sample(rng, e1, e2)
        ok = (kb.le(kb.o(kb.d_sharp(e2), m), kb.o(kb.tensor(m, m), kb.d_sharp(e1)))
              and kb.le(kb.o(kb.t_sharp(e2), m), kb.t_sharp(e1)))
        t.record(ok, lambda: {"F": m.to_json()})
    out.append(t.verdict())

    out.append(check_product_formula(kb, max_size, samples, seed))
    return summarize("kar_cartesian", out)


def check_product_formula(kb, max_size=3, samples=100, seed=0):
    """F ⊗ G = (p#* F p#) ⊓ (r#* G r#) on sampled module pairs."""
    rng = random.Random(seed + 1)
    objs = kb.objects(max_size)
    t = Tally("product_formula")
    for _ in range(samples):
        x, y, a, bb = (rng.choice(objs) for _ in range(4))
        m, n = kb.sample(rng, x, a), kb.sample(rng, y, bb)
        t.record(kb.tensor(m, n) == kb.meet_of_products(m, n),
                 lambda: {"F": m.to_json(), "G": n.to_json()})
    return t.verdict()


def check_sharp_adj(kb, max_size=2):
    """For every map F: X -> A and idempotents with Fx <= aF, aFx -| xF*a."""
    b = kb.base
    t = Tally("sharp_adj")
    for X, A in itertools.product(b.objects(max_size), repeat=2):
        for F in b.maps(X, A):
            Fs = b.star(F)
            for x in kb.objects_on(X):
                for a in kb.objects_on(A):
                    if not b.le(b.o(F, x.a), b.o(a.a, F)):
                        continue
                    ok = kb.is_adjunction(kb.module(x, a, F), kb.module(a, x, Fs))
                    t.record(ok, lambda: {"F": F.to_json(), "x": x.to_json(), "a": a.to_json()})
    return t.verdict()


def check_sharp_iso(kb, max_size=3):
    """For a bijection R with Rx = aR, aRx and xR^-1a are inverse modules."""
    b = kb.base
    t = Tally("sharp_iso")
    for X in b.objects(max_size):
        for R in b.maps(X, X):
            Rinv = b.star(R)
            if b.o(Rinv, R) != b.identity(X) or b.o(R, Rinv) != b.identity(X):
                continue
            for x in kb.objects_on(X):
                for a in kb.objects_on(X):
                    if b.o(R, x.a) != b.o(a.a, R):
                        continue
                    m, n = kb.module(x, a, R), kb.module(a, x, Rinv)
                    ok = kb.o(m, n) == kb.identity(a) and kb.o(n, m) == kb.identity(x)
                    t.record(ok, lambda: {"R": R.to_json(), "x": x.to_json()})
    return t.verdict()


class TensorWith:
    """The strict functor - ⊗ C (or C ⊗ -) on Rel."""

    def __init__(self, b, C, left=False):
        self.b, self.C, self.left = b, C, left

    def obj(self, X):
        return self.b.tensor_obj(self.C, X) if self.left else self.b.tensor_obj(X, self.C)

    def arr(self, F):
        i = self.b.identity(self.C)
        return self.b.tensor(i, F) if self.left else self.b.tensor(F, i)


def sharp_functor(kb, F):
    """F#: Kar(b) -> Kar(b) induced by an endo-functor F of b."""
    def on_obj(e):
        return kb.make(F.obj(e.carrier), F.arr(e.a))

    def on_arr(m):
        return IdemModule(kb.base, on_obj(m.src), on_obj(m.tgt), F.arr(m.R))
    return on_obj, on_arr


def sharp_component(kb, F, G, phi, e):
    """phi#(A,a) = Ga phi_A Fa."""
    fo, _ = sharp_functor(kb, F)
    go, _ = sharp_functor(kb, G)
    return kb.module(fo(e), go(e), phi(e.carrier))


def check_sharp_laws(kb, C=None, max_size=2, samples=40, seed=0):
    """F# is a functor, phi# is natural and invertible for invertible phi,
    and (psi phi)# = psi# phi#, for F = H = - ⊗ C, G = C ⊗ - and the
    symmetries phi = gamma, psi = gamma."""
    b = kb.base
    C = C if C is not None else canonical_set(2)
    rng = random.Random(seed)
    F, G, H = TensorWith(b, C), TensorWith(b, C, left=True), TensorWith(b, C)
    phi = lambda X: b.gamma(X, C)
    psi = lambda X: b.gamma(C, X)
    fo, fa = sharp_functor(kb, F)
    go, ga = sharp_functor(kb, G)
    objs = kb.objects(max_size)
    t = Tally("sharp_laws")
    for _ in range(samples):
        x, a, c = rng.choice(objs), rng.choice(objs), rng.choice(objs)
        m, n = kb.sample(rng, x, a), kb.sample(rng, a, c)
        ok = fa(kb.o(n, m)) == kb.o(fa(n), fa(m)) and fa(kb.identity(a)) == kb.identity(fo(a))
        ok = ok and (not kb.le(m, kb.meet(m, m)) or kb.le(fa(kb.meet(m, m)), fa(m)))
        px, pa = sharp_component(kb, F, G, phi, x), sharp_component(kb, F, G, phi, a)
        ok = ok and kb.le(kb.o(ga(m), px), kb.o(pa, fa(m)))
        inv = sharp_component(kb, G, F, lambda X: b.star(phi(X)), a)
        ok = ok and kb.o(inv, pa) == kb.identity(fo(a)) and kb.o(pa, inv) == kb.identity(go(a))
        both = kb.o(sharp_component(kb, G, H, psi, a), pa)
        direct = sharp_component(kb, F, H, lambda X: b.o(psi(X), phi(X)), a)
        ok = ok and both == direct
        t.record(ok, lambda: {"m": m.to_json(), "n": n.to_json()})
    return t.verdict()


# -- Mod, preorders and ideals -------------------------------------------------------------

def check_mod_cartesian(mb, max_size=3, samples=100, seed=0):
    """Mod(b) is closed under ⊗: 1 <= a ⊗ b = (p* a p) ∧ (r* b r); then the
    Karoubi checks restricted to monads."""
    rng = random.Random(seed)
    b = mb.base
    t = Tally("monad_tensor")
    for e1, e2 in _pairs(mb, rng, max_size, samples):
        ab = b.tensor(e1.a, e2.a)
        ok = (b.le(b.identity(ab.src), ab) and ab == formula_tensor(b, e1.a, e2.a)
              and b.le(b.identity(ab.src), b.o(b.star(b.p(e1.carrier, e2.carrier)), e1.a, b.p(e1.carrier, e2.carrier))))
        t.record(ok, lambda: {"a": e1.to_json(), "b": e2.to_json()})
    return summarize("mod_cartesian", [t.verdict(), kar_cartesian_check(mb, max_size, samples, seed, base_check=False)])


def preorders(X):
    """Every preorder on X, as the reflexive-transitive closures of all
    relations (an independent route to the same set)."""
    seen = set()
    for R in all_relations(X, X):
        rel = {x: {y for (u, y) in R.pairs if u == x} | {x} for x in X}
        changed = True
        while changed:
            changed = False
            for x in X:
                reach = set(rel[x])
                for y in rel[x]:
                    reach |= rel[y]
                if reach != rel[x]:
                    rel[x] = reach
                    changed = True
        seen.add(frozenset((x, y) for x in X for y in rel[x]))
    return seen


def monads_are_preorders(mb, max_size=3):
    t = Tally("monads_preorders_bijection")
    counts = []
    for X in mb.base.objects(max_size):
        monads = [e.a.pairs for e in mb.objects_on(X)]
        pre = preorders(X)
        counts.append(len(monads))
        t.record(len(set(monads)) == len(monads) and set(monads) == pre,
                 lambda: {"carrier": X.to_json(), "monads": len(monads), "preorders": len(pre)})
    v = t.verdict()
    v.note = "monads per carrier size: %s" % counts
    return v


def ordered_ideals(s, t):
    """Relations S: A -> B with a' <= a, a S b, b <= b' implying a' S b'."""
    out = []
    for R in all_relations(s.carrier, t.carrier):
        ok = all((a2, b2) in R.pairs
                 for a, bb in R.pairs
                 for a2, a1 in s.a.pairs if a1 == a
                 for b1, b2 in t.a.pairs if b1 == bb)
        if ok:
            out.append(R)
    return out


def check_modules_are_ideals(mb, max_size=2):
    """Modules between monads in Rel are exactly the ordered ideals, and the
    inequality form (ma <= m, bm <= m) agrees with bma = m."""
    b = mb.base
    t = Tally("modules_are_ideals")
    for s, u in itertools.product(mb.objects(max_size), repeat=2):
        mods = {m.R for m in mb.hom(s, u)}
        t.record(mods == set(ordered_ideals(s, u)), lambda: {"s": s.to_json(), "t": u.to_json()})
        for R in b.hom(s.carrier, u.carrier):
            ineq = b.le(b.o(R, s.a), R) and b.le(b.o(u.a, R), R)
            t.record(ineq == (b.o(u.a, R, s.a) == R), lambda: {"R": R.to_json()})
    return t.verdict()


def check_idempotents_interpolative(b, max_size=3):
    """An endo-relation is idempotent iff transitive and interpolative."""
    t = Tally("idempotent_interpolative")
    for X in b.objects(max_size):
        for R in b.hom(X, X):
            ps = R.pairs
            trans = all((x, z) in ps for x, y in ps for y2, z in ps if y == y2)
            interp = all(any((x, z) in ps and (z, y) in ps for z in X) for x, y in ps)
            t.record((b.o(R, R) == R) == (trans and interp), lambda: {"R": R.to_json()})
    return t.verdict()


def bimodule_local_products(mb, s, u):
    """Meets of modules s -> t are modules carrying the induced actions, the
    top relation is a module, and m ∧ m = m."""
    b = mb.base
    t = Tally("bimodule_local_products")
    mods = mb.hom(s, u)
    top = b.top(s.carrier, u.carrier)
    t.record(any(m.R == top for m in mods), {"top": top.to_json()})
    for m in mods:
        t.record(b.meet(m.R, m.R) == m.R, {"m": m.R.to_json()})
        for n in mods:
            mn = b.meet(m.R, n.R)
            ok = (b.le(b.o(mn, s.a), mn) and b.le(b.o(u.a, mn), mn)
                  and mb.meet(m, n).R == mn)
            lower = [h for h in mods if b.le(h.R, m.R) and b.le(h.R, n.R)]
            ok = ok and all(b.le(h.R, mn) for h in lower)
            t.record(ok, lambda: {"m": m.R.to_json(), "n": n.R.to_json()})
    return t.verdict()


def check_bimodule_local_products(mb, max_size=2, samples=30, seed=0):
    rng = random.Random(seed)
    vs = [bimodule_local_products(mb, s, u) for s, u in _pairs(mb, rng, max_size, samples, small=max_size)]
    return summarize("bimodule_local_products", vs)


def karoubi_report(b=None, max_size=3, samples=100, seed=0):
    """Every Karoubi/Mod check as a list of verdicts."""
    b = b or rel_lobicat()
    kb, mb = karoubi(b), mod_lobicat(b)
    small = min(max_size, 2)
    return [
        check_cartesian_structure(b, max_size, seed=seed),
        cw_round_trip(b, small, seed=seed),
        check_idempotents_interpolative(b, max_size),
        kar_cartesian_check(kb, max_size, samples, seed, base_check=False),
        check_sharp_adj(kb, small),
        check_sharp_iso(kb, max_size),
        check_sharp_laws(kb, max_size=small, seed=seed),
        check_mod_cartesian(mb, max_size, samples, seed),
        monads_are_preorders(mb, max_size),
        check_modules_are_ideals(mb, small),
        check_bimodule_local_products(mb, small, seed=seed),
    ]
