"""Internal categories in finite sets, internal functors, profunctors and
equivariant maps: the double category Prof = Mod(Span(FinSet)).

An internal category is the span A0 <-s- A1 -t-> A0 with identities i and
composition c on composable pairs (f, g), t f = s g, written f then g.

A profunctor M: A -|-> B is a set P over A0 x B0 (legs m0, m1) whose
elements are read as heteromorphisms m0(p) ~> m1(p). A acts on the right by
precomposition, (f, p) -> p.f for t f = m0(p), and B on the left by
postcomposition, (p, g) -> g.p for s g = m1(p).
"""
import functools
import itertools
import random

from . import kernels
from .double import Cell, DoubleCategory
from .finset import (EMPTY, FinFn, FinSet, InvalidInput, _fields, all_functions, canonical_set, pair,
                     product, pullback)


# -- internal categories ----------------------------------------------------------

class InternalCategory:
    __slots__ = ("objects", "arrows", "src", "tgt", "ident", "comp", "_key", "_hom")

    def __init__(self, objects, arrows, src, tgt, ident, comp, validate=True):
        self.objects = objects
        self.arrows = arrows
        self.src = src
        self.tgt = tgt
        self.ident = ident
        self.comp = dict(comp)
        self._key = (objects, arrows, src.images, tgt.images, ident.images, tuple(sorted(self.comp.items())))
        self._hom = None
        if validate:
            self.validate()

    def __eq__(self, other):
        return isinstance(other, InternalCategory) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return "<cat %d objects, %d arrows>" % (len(self.objects), len(self.arrows))

    def hom(self, a, b):
        if self._hom is None:
            h = {}
            for f, x, y in zip(self.arrows.elements, self.src.images, self.tgt.images):
                h.setdefault((x, y), []).append(f)
            self._hom = h
        return self._hom.get((a, b), [])

    def then(self, f, g):
        return self.comp[(f, g)]

    def composable(self):
        return [(f, g) for f in self.arrows for g in self.arrows if self.tgt(f) == self.src(g)]

    def validate(self):
        s, t, i = self.src, self.tgt, self.ident
        if s.dom != self.arrows or t.dom != self.arrows or s.cod != self.objects or t.cod != self.objects:
            raise InvalidInput("source/target must map arrows to objects")
        if i.dom != self.objects or i.cod != self.arrows:
            raise InvalidInput("identities must map objects to arrows")
        pairs = self.composable()
        if set(self.comp) != set(pairs):
            raise InvalidInput("composition must be defined exactly on composable pairs")
        for x in self.objects:
            if s(i(x)) != x or t(i(x)) != x:
                raise InvalidInput("identity on %s has the wrong ends" % x)
        for (f, g), h in self.comp.items():
            if h not in self.arrows or s(h) != s(f) or t(h) != t(g):
                raise InvalidInput("composite of %s then %s has the wrong ends" % (f, g))
        for f in self.arrows:
            if self.comp[(i(s(f)), f)] != f or self.comp[(f, i(t(f)))] != f:
                raise InvalidInput("identity law fails at %s" % f)
        for f, g in pairs:
            fg = self.comp[(f, g)]
            for h in self.arrows:
                if s(h) == t(g) and self.comp[(fg, h)] != self.comp[(f, self.comp[(g, h)])]:
                    raise InvalidInput("associativity fails at %s, %s, %s" % (f, g, h))

    def is_discrete(self):
        return len(self.arrows) == len(self.objects)

    def to_json(self):
        return {"objects": list(self.objects), "arrows": list(self.arrows),
                "src": dict(zip(self.arrows.elements, self.src.images)),
                "tgt": dict(zip(self.arrows.elements, self.tgt.images)),
                "id": dict(zip(self.objects.elements, self.ident.images)),
                "comp": [[f, g, h] for (f, g), h in sorted(self.comp.items())]}

    @classmethod
    def from_json(cls, obj):
        _fields(obj, {"objects", "arrows", "src", "tgt", "id", "comp"}, "InternalCategory")
        objs, arrs = FinSet(obj["objects"]), FinSet(obj["arrows"])
        comp = {}
        for row in obj["comp"]:
            if not isinstance(row, list) or len(row) != 3:
                raise InvalidInput("comp rows must be [f, g, f-then-g]")
            comp[(row[0], row[1])] = row[2]
        return cls(objs, arrs, FinFn(arrs, objs, obj["src"]), FinFn(arrs, objs, obj["tgt"]),
                   FinFn(objs, arrs, obj["id"]), comp)


def discrete_category(a):
    arrs = FinSet(["1_" + x for x in a])
    s = FinFn(arrs, a, {"1_" + x: x for x in a})
    return InternalCategory(a, arrs, s, s, FinFn(a, arrs, {x: "1_" + x for x in a}),
                            {("1_" + x, "1_" + x): "1_" + x for x in a})


TERMINAL_CAT = discrete_category(FinSet(["*"]))


def monoid(elements, unit, mult):
    """One-object category from a multiplication table mult[(x, y)] = x then y."""
    objs = FinSet(["*"])
    arrs = FinSet(elements)
    s = FinFn(arrs, objs, lambda f: "*")
    return InternalCategory(objs, arrs, s, s, FinFn(objs, arrs, {"*": unit}), mult)


def z2():
    return monoid(["e", "c"], "e", {("e", "e"): "e", ("e", "c"): "c", ("c", "e"): "c", ("c", "c"): "e"})


def product_category(a, b):
    o, o1, o2 = product(a.objects, b.objects)
    r, r1, r2 = product(a.arrows, b.arrows)
    s = FinFn(r, o, lambda z: pair(a.src(r1(z)), b.src(r2(z))))
    t = FinFn(r, o, lambda z: pair(a.tgt(r1(z)), b.tgt(r2(z))))
    i = FinFn(o, r, lambda x: pair(a.ident(o1(x)), b.ident(o2(x))))
    comp = {}
    for f in r:
        for g in r:
            if t(f) == s(g):
                comp[(f, g)] = pair(a.then(r1(f), r1(g)), b.then(r2(f), r2(g)))
    P = InternalCategory(o, r, s, t, i, comp, validate=False)
    return P, Functor(P, a, o1, r1), Functor(P, b, o2, r2)


def _canonical_key(n, arrows, comp):
    """Isomorphism-invariant key: the least encoding over relabellings.
    arrows: list of (s, t) for the non-identity arrows; comp maps index
    pairs to an index (>= 0) or ('id', object)."""
    k = len(arrows)
    best = None
    for po in itertools.permutations(range(n)):
        for pa in itertools.permutations(range(k)):
            inv = [0] * k
            for old, new in enumerate(pa):
                inv[new] = old
            enc_arrows = tuple((po[arrows[inv[j]][0]], po[arrows[inv[j]][1]]) for j in range(k))
            enc_comp = []
            for x in range(k):
                for y in range(k):
                    v = comp.get((inv[x], inv[y]))
                    if v is None:
                        enc_comp.append(-2)
                    elif isinstance(v, tuple):
                        enc_comp.append(-10 - po[v[1]])
                    else:
                        enc_comp.append(pa[v])
            enc = (enc_arrows, tuple(enc_comp))
            if best is None or enc < best:
                best = enc
    return best


def enumerate_categories(max_objects=2, max_arrows=4):
    """Every internal category with at most max_objects objects and at most
    max_arrows arrows (identities included), one per isomorphism class, in a
    fixed order."""
    out = []
    for n in range(max_objects + 1):
        objs = canonical_set(n)
        for k in range(max(0, max_arrows - n) + 1):
            if n == 0 and k:
                continue
            seen = set()
            for ends in itertools.product(itertools.product(range(n), repeat=2), repeat=k):
                pairs = [(x, y) for x in range(k) for y in range(k) if ends[x][1] == ends[y][0]]
                choices = []
                for x, y in pairs:
                    a, b = ends[x][0], ends[y][1]
                    opts = [z for z in range(k) if ends[z] == (a, b)]
                    if a == b:
                        opts.append(("id", a))
                    choices.append(opts)
                for combo in itertools.product(*choices):
                    comp = dict(zip(pairs, combo))
                    if not _assoc_ok(k, ends, comp):
                        continue
                    key = _canonical_key(n, list(ends), comp)
                    if key in seen:
                        continue
                    seen.add(key)
                    out.append(_build(n, objs, ends, comp))
    return out


def _assoc_ok(k, ends, comp):
    def c(x, y):
        if isinstance(x, tuple):
            return y
        if isinstance(y, tuple):
            return x
        return comp[(x, y)]
    for (x, y), xy in comp.items():
        for z in range(k):
            if ends[y][1] == ends[z][0]:
                if c(xy, z) != c(x, comp[(y, z)]):
                    return False
    return True


def _build(n, objs, ends, comp):
    names = ["a%d" % j for j in range(len(ends))]
    idn = {x: "i%d" % x for x in range(n)}
    arrows = FinSet(names + list(idn.values()))
    s = {names[j]: str(ends[j][0]) for j in range(len(ends))}
    t = {names[j]: str(ends[j][1]) for j in range(len(ends))}
    for x, nm in idn.items():
        s[nm] = t[nm] = str(x)
    name = lambda v: idn[v[1]] if isinstance(v, tuple) else names[v]
    table = {}
    for f in arrows:
        for g in arrows:
            if t[f] != s[g]:
                continue
            if f in idn.values():
                table[(f, g)] = g
            elif g in idn.values():
                table[(f, g)] = f
            else:
                table[(f, g)] = name(comp[(names.index(f), names.index(g))])
    return InternalCategory(objs, arrows, FinFn(arrows, objs, s), FinFn(arrows, objs, t),
                            FinFn(objs, arrows, {str(x): nm for x, nm in idn.items()}), table)


# -- functors -------------------------------------------------------------------------

class Functor:
    __slots__ = ("dom", "cod", "obj", "arr", "_hash")

    def __init__(self, dom, cod, obj, arr):
        self.dom = dom
        self.cod = cod
        self.obj = obj
        self.arr = arr
        self._hash = None

    def __eq__(self, other):
        return (isinstance(other, Functor) and self.obj == other.obj and self.arr == other.arr
                and self.dom == other.dom and self.cod == other.cod)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.obj, self.arr))
        return self._hash

    def __repr__(self):
        return "<functor %s>" % dict(zip(self.arr.dom.elements, self.arr.images))

    def __call__(self, f):
        return self.arr(f)

    def then(self, g):
        return Functor(self.dom, g.cod, self.obj.then(g.obj), self.arr.then(g.arr))

    @classmethod
    def identity(cls, a):
        return cls(a, a, FinFn.identity(a.objects), FinFn.identity(a.arrows))

    def is_valid(self):
        a, b = self.dom, self.cod
        for f in a.arrows:
            g = self.arr(f)
            if b.src(g) != self.obj(a.src(f)) or b.tgt(g) != self.obj(a.tgt(f)):
                return False
        for x in a.objects:
            if self.arr(a.ident(x)) != b.ident(self.obj(x)):
                return False
        return all(self.arr(h) == b.then(self.arr(f), self.arr(g)) for (f, g), h in a.comp.items())

    def to_json(self):
        return {"objects": dict(zip(self.obj.dom.elements, self.obj.images)),
                "arrows": dict(zip(self.arr.dom.elements, self.arr.images))}


def functors(a, b):
    """Every internal functor a -> b."""
    non_id = [f for f in a.arrows if f not in set(a.ident.images)]
    for om in all_functions(a.objects, b.objects):
        opts = [b.hom(om(a.src(f)), om(a.tgt(f))) for f in non_id]
        for combo in itertools.product(*opts):
            m = dict(zip(non_id, combo))
            for x in a.objects:
                m[a.ident(x)] = b.ident(om(x))
            F = Functor(a, b, om, FinFn(a.arrows, b.arrows, m))
            if all(F.arr(h) == b.then(F.arr(f), F.arr(g)) for (f, g), h in a.comp.items()):
                yield F


# -- profunctors --------------------------------------------------------------------

class Profunctor:
    __slots__ = ("src", "tgt", "carrier", "m0", "m1", "ract", "lact", "_key", "_fib")

    def __init__(self, src, tgt, carrier, m0, m1, ract, lact, validate=True):
        self.src = src
        self.tgt = tgt
        self.carrier = carrier
        self.m0 = m0
        self.m1 = m1
        self.ract = ract
        self.lact = lact
        self._key = (carrier, m0.images, m1.images, tuple(sorted(ract.items())), tuple(sorted(lact.items())))
        self._fib = None
        if validate:
            self.validate()

    def __eq__(self, other):
        return (isinstance(other, Profunctor) and self._key == other._key
                and self.src == other.src and self.tgt == other.tgt)

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return "<profunctor |P|=%d>" % len(self.carrier)

    def fiber(self, a, b):
        if self._fib is None:
            fib = {}
            for p, x, y in zip(self.carrier.elements, self.m0.images, self.m1.images):
                fib.setdefault((x, y), []).append(p)
            self._fib = fib
        return self._fib.get((a, b), [])

    def right_acts(self, p):
        """(f, p.f) for every arrow f of the source ending at m0(p)."""
        A = self.src
        return [(f, self.ract[(f, p)]) for f in A.hom_into(self.m0(p))]

    def left_acts(self, p):
        B = self.tgt
        return [(g, self.lact[(p, g)]) for g in B.hom_from(self.m1(p))]

    def validate(self):
        A, B = self.src, self.tgt
        if self.m0.dom != self.carrier or self.m0.cod != A.objects:
            raise InvalidInput("m0 must map the carrier to the source objects")
        if self.m1.dom != self.carrier or self.m1.cod != B.objects:
            raise InvalidInput("m1 must map the carrier to the target objects")
        want_r = {(f, p) for p in self.carrier for f in A.arrows if A.tgt(f) == self.m0(p)}
        want_l = {(p, g) for p in self.carrier for g in B.arrows if B.src(g) == self.m1(p)}
        if set(self.ract) != want_r:
            raise InvalidInput("right action must be defined exactly where arrows end at m0")
        if set(self.lact) != want_l:
            raise InvalidInput("left action must be defined exactly where arrows start at m1")
        for (f, p), q in self.ract.items():
            if q not in self.carrier or self.m0(q) != A.src(f) or self.m1(q) != self.m1(p):
                raise InvalidInput("right action of %s on %s lands in the wrong fiber" % (f, p))
        for (p, g), q in self.lact.items():
            if q not in self.carrier or self.m1(q) != B.tgt(g) or self.m0(q) != self.m0(p):
                raise InvalidInput("left action of %s on %s lands in the wrong fiber" % (g, p))
        for p in self.carrier:
            if self.ract[(A.ident(self.m0(p)), p)] != p or self.lact[(p, B.ident(self.m1(p)))] != p:
                raise InvalidInput("identities must act trivially on %s" % p)
        for (f, p), q in self.ract.items():
            for h in A.arrows:
                if A.tgt(h) == A.src(f) and self.ract[(h, q)] != self.ract[(A.then(h, f), p)]:
                    raise InvalidInput("right action not associative at %s" % p)
            for g in B.arrows:
                if B.src(g) == self.m1(p) and self.lact[(q, g)] != self.ract[(f, self.lact[(p, g)])]:
                    raise InvalidInput("actions do not commute at %s" % p)
        for (p, g), q in self.lact.items():
            for h in B.arrows:
                if B.src(h) == B.tgt(g) and self.lact[(q, h)] != self.lact[(p, B.then(g, h))]:
                    raise InvalidInput("left action not associative at %s" % p)

    def to_json(self):
        return {"carrier": list(self.carrier),
                "over": {p: [x, y] for p, x, y in zip(self.carrier.elements, self.m0.images, self.m1.images)},
                "right": [[f, p, q] for (f, p), q in sorted(self.ract.items())],
                "left": [[p, g, q] for (p, g), q in sorted(self.lact.items())]}

    @classmethod
    def from_json(cls, obj, src, tgt):
        _fields(obj, {"carrier", "over", "right", "left"}, "Profunctor")
        car = FinSet(obj["carrier"])
        over = obj["over"]
        if not isinstance(over, dict) or set(over) != set(car):
            raise InvalidInput("over must give [a, b] for every carrier element")
        m0 = FinFn(car, src.objects, {p: v[0] for p, v in over.items()})
        m1 = FinFn(car, tgt.objects, {p: v[1] for p, v in over.items()})
        ract, lact = {}, {}
        for row in obj["right"]:
            if not isinstance(row, list) or len(row) != 3:
                raise InvalidInput("right rows must be [f, p, p.f]")
            ract[(row[0], row[1])] = row[2]
        for row in obj["left"]:
            if not isinstance(row, list) or len(row) != 3:
                raise InvalidInput("left rows must be [p, g, g.p]")
            lact[(row[0], row[1])] = row[2]
        return cls(src, tgt, car, m0, m1, ract, lact)


def _hom_into(self, x):
    return [f for f, t in zip(self.arrows.elements, self.tgt.images) if t == x]


def _hom_from(self, x):
    return [f for f, s in zip(self.arrows.elements, self.src.images) if s == x]


InternalCategory.hom_into = _hom_into
InternalCategory.hom_from = _hom_from


def hom_profunctor(a):
    ract = {(f, p): a.then(f, p) for p in a.arrows for f in a.arrows if a.tgt(f) == a.src(p)}
    lact = {(p, g): a.then(p, g) for p in a.arrows for g in a.arrows if a.tgt(p) == a.src(g)}
    return Profunctor(a, a, a.arrows, a.src, a.tgt, ract, lact, validate=False)


def companion_profunctor(F):
    """F_*: A -|-> B, elements (a, b: F a -> y)."""
    A, B = F.dom, F.cod
    els = {pair(x, b): (x, b) for x in A.objects for b in B.hom_from(F.obj(x))}
    car = FinSet(els)
    m0 = FinFn(car, A.objects, {k: v[0] for k, v in els.items()})
    m1 = FinFn(car, B.objects, {k: B.tgt(v[1]) for k, v in els.items()})
    ract, lact = {}, {}
    for k, (x, b) in els.items():
        for f in A.hom_into(x):
            ract[(f, k)] = pair(A.src(f), B.then(F(f), b))
        for g in B.hom_from(B.tgt(b)):
            lact[(k, g)] = pair(x, B.then(b, g))
    return Profunctor(A, B, car, m0, m1, ract, lact, validate=False)


def conjoint_profunctor(F):
    """F^*: B -|-> A, elements (b: y -> F a, a)."""
    A, B = F.dom, F.cod
    els = {pair(b, x): (b, x) for x in A.objects for b in B.hom_into(F.obj(x))}
    car = FinSet(els)
    m0 = FinFn(car, B.objects, {k: B.src(v[0]) for k, v in els.items()})
    m1 = FinFn(car, A.objects, {k: v[1] for k, v in els.items()})
    ract, lact = {}, {}
    for k, (b, x) in els.items():
        for g in B.hom_into(B.src(b)):
            ract[(g, k)] = pair(B.then(g, b), x)
        for f in A.hom_from(x):
            lact[(k, f)] = pair(B.then(b, F(f)), A.tgt(f))
    return Profunctor(B, A, car, m0, m1, ract, lact, validate=False)


def free_profunctor(A, B, gens):
    """Free profunctor on generators gens = [(name, a, b)]: elements
    g.x.f for f into a and g out of b."""
    els = {}
    for name, a, b in gens:
        for f in A.hom_into(a):
            for g in B.hom_from(b):
                els["%s.%s.%s" % (g, name, f)] = (f, name, g)
    car = FinSet(els)
    m0 = FinFn(car, A.objects, {k: A.src(v[0]) for k, v in els.items()})
    m1 = FinFn(car, B.objects, {k: B.tgt(v[2]) for k, v in els.items()})
    ract, lact = {}, {}
    for k, (f, name, g) in els.items():
        for h in A.hom_into(A.src(f)):
            ract[(h, k)] = "%s.%s.%s" % (g, name, A.then(h, f))
        for h in B.hom_from(B.tgt(g)):
            lact[(k, h)] = "%s.%s.%s" % (B.then(g, h), name, f)
    return Profunctor(A, B, car, m0, m1, ract, lact, validate=False)


def quotient_profunctor(M, pairs):
    """Quotient by the least congruence containing pairs (each pair in one
    fiber); classes are labelled by their least element."""
    els = M.carrier.elements
    ix = M.carrier.index
    parent = list(range(len(els)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        if ra < rb:
            parent[rb] = ra
        else:
            parent[ra] = rb
        return True

    for p, q in pairs:
        if (M.m0(p), M.m1(p)) != (M.m0(q), M.m1(q)):
            raise InvalidInput("cannot identify elements over different objects")
        union(ix[p], ix[q])
    changed = True
    while changed:
        changed = False
        groups = {}
        for i in range(len(els)):
            groups.setdefault(find(i), []).append(els[i])
        for grp in groups.values():
            base = grp[0]
            for other in grp[1:]:
                for f in M.src.hom_into(M.m0(base)):
                    changed |= union(ix[M.ract[(f, base)]], ix[M.ract[(f, other)]])
                for g in M.tgt.hom_from(M.m1(base)):
                    changed |= union(ix[M.lact[(base, g)]], ix[M.lact[(other, g)]])
    rep = {e: els[find(i)] for i, e in enumerate(els)}
    car = FinSet(set(rep.values()))
    m0 = FinFn(car, M.src.objects, {p: M.m0(p) for p in car})
    m1 = FinFn(car, M.tgt.objects, {p: M.m1(p) for p in car})
    ract = {(f, p): rep[q] for (f, p), q in M.ract.items() if p in car}
    lact = {(p, g): rep[q] for (p, g), q in M.lact.items() if p in car}
    return Profunctor(M.src, M.tgt, car, m0, m1, ract, lact, validate=False), \
        FinFn(M.carrier, car, rep)


def random_profunctor(rng, A, B, max_gens=2, max_rels=2):
    if not len(A.objects) or not len(B.objects):
        return free_profunctor(A, B, [])
    gens = [("x%d" % k, rng.choice(A.objects.elements), rng.choice(B.objects.elements))
            for k in range(rng.randint(0, max_gens))]
    M = free_profunctor(A, B, gens)
    pairs = []
    for _ in range(rng.randint(0, max_rels)):
        if not len(M.carrier):
            break
        p = rng.choice(M.carrier.elements)
        q = rng.choice(M.fiber(M.m0(p), M.m1(p)))
        pairs.append((p, q))
    return quotient_profunctor(M, pairs)[0]


def product_profunctor(M, N, pa, pb):
    """M x N over the product categories pa, pb (from product_category)."""
    car, c1, c2 = product(M.carrier, N.carrier)
    m0 = FinFn(car, pa.objects, lambda z: pair(M.m0(c1(z)), N.m0(c2(z))))
    m1 = FinFn(car, pb.objects, lambda z: pair(M.m1(c1(z)), N.m1(c2(z))))
    ract, lact = {}, {}
    A2, B2 = M.src, N.src
    for z in car:
        p, q = c1(z), c2(z)
        for f in M.src.hom_into(M.m0(p)):
            for g in N.src.hom_into(N.m0(q)):
                ract[(pair(f, g), z)] = pair(M.ract[(f, p)], N.ract[(g, q)])
        for f in M.tgt.hom_from(M.m1(p)):
            for g in N.tgt.hom_from(N.m1(q)):
                lact[(z, pair(f, g))] = pair(M.lact[(p, f)], N.lact[(q, g)])
    return Profunctor(pa, pb, car, m0, m1, ract, lact, validate=False)


# -- composition --------------------------------------------------------------------

class Composite:
    def __init__(self, module, cls, reps):
        self.module = module
        self.cls = cls      # (m, n) -> class label
        self.reps = reps    # class label -> least (m, n)


@functools.lru_cache(maxsize=20000)
def compose_profunctors(M, N):
    """M then N: matched pairs (m, n), m1(m) = n0(n), modulo
    (g.m, n) ~ (m, n.g) for g in the middle category."""
    if M.tgt != N.src:
        raise InvalidInput("profunctors are not composable")
    B = M.tgt
    pairs = sorted((m, n) for m in M.carrier for n in N.fiber_from(M.m1(m)))
    ix = {p: k for k, p in enumerate(pairs)}
    left, right = [], []
    for m in M.carrier:
        for g in B.hom_from(M.m1(m)):
            gm = M.lact[(m, g)]
            for n in N.fiber_from(B.tgt(g)):
                left.append(ix[(gm, n)])
                right.append(ix[(m, N.ract[(g, n)])])
    roots = kernels.quotient_classes(len(pairs), left, right)
    label = {p: pair(*pairs[roots[k]]) for k, p in enumerate(pairs)}
    reps = {label[p]: pairs[roots[k]] for k, p in enumerate(pairs)}
    car = FinSet(set(label.values()))
    m0 = FinFn(car, M.src.objects, {c: M.m0(reps[c][0]) for c in car})
    m1 = FinFn(car, N.tgt.objects, {c: N.m1(reps[c][1]) for c in car})
    ract, lact = {}, {}
    for c in car:
        m, n = reps[c]
        for f in M.src.hom_into(M.m0(m)):
            ract[(f, c)] = label[(M.ract[(f, m)], n)]
        for g in N.tgt.hom_from(N.m1(n)):
            lact[(c, g)] = label[(m, N.lact[(n, g)])]
    return Composite(Profunctor(M.src, N.tgt, car, m0, m1, ract, lact, validate=False), label, reps)


def _fiber_from(self, a):
    return [p for p, x in zip(self.carrier.elements, self.m0.images) if x == a]


Profunctor.fiber_from = _fiber_from


# -- equivariant maps -----------------------------------------------------------------

def equivariant_maps(P, Q, F, G, cap=None):
    """Every map phi: P -> Q over (F, G) with phi(p.f) = phi(p).F(f) and
    phi(g.p) = G(g).phi(p); backtracking with propagation along actions."""
    els = P.carrier.elements
    out = []

    def propagate(assign, p, q):
        stack = [(p, q)]
        while stack:
            p, q = stack.pop()
            if p in assign:
                if assign[p] != q:
                    return False
                continue
            if (Q.m0(q), Q.m1(q)) != (F.obj(P.m0(p)), G.obj(P.m1(p))):
                return False
            assign[p] = q
            for f in P.src.hom_into(P.m0(p)):
                stack.append((P.ract[(f, p)], Q.ract[(F(f), q)]))
            for g in P.tgt.hom_from(P.m1(p)):
                stack.append((P.lact[(p, g)], Q.lact[(q, G(g))]))
        return True

    def rec(assign):
        if cap is not None and len(out) >= cap:
            return
        free = next((p for p in els if p not in assign), None)
        if free is None:
            out.append(FinFn(P.carrier, Q.carrier, dict(assign)))
            return
        for q in Q.fiber(F.obj(P.m0(free)), G.obj(P.m1(free))):
            trial = dict(assign)
            if propagate(trial, free, q):
                rec(trial)

    rec({})
    return out


def is_equivariant(P, Q, F, G, phi):
    if phi.dom != P.carrier or phi.cod != Q.carrier:
        return False
    for p in P.carrier:
        q = phi(p)
        if (Q.m0(q), Q.m1(q)) != (F.obj(P.m0(p)), G.obj(P.m1(p))):
            return False
    if any(phi(r) != Q.ract[(F(f), phi(p))] for (f, p), r in P.ract.items()):
        return False
    return all(phi(r) == Q.lact[(phi(p), G(g))] for (p, g), r in P.lact.items())


# -- the double category ------------------------------------------------------------

class ProfDouble(DoubleCategory):
    """Objects are internal categories, vertical arrows internal functors,
    horizontal arrows profunctors, cells equivariant maps."""

    name = "prof"

    def __init__(self, max_arrows=None):
        self.max_arrows = max_arrows

    def objects(self, max_size):
        """Internal categories with at most two objects and at most
        max_size arrows, up to isomorphism."""
        return _objects_upto(max_size)

    def sample_object(self, rng, max_size):
        return rng.choice(self.objects(max_size))

    def vsrc(self, f):
        return f.dom

    def vtgt(self, f):
        return f.cod

    def vid(self, a):
        return Functor.identity(a)

    def vcomp(self, f, g):
        if f.cod != g.dom:
            raise InvalidInput("functors are not composable")
        return f.then(g)

    def verticals(self, a, b):
        return _functors(a, b)

    def hsrc(self, m):
        return m.src

    def htgt(self, m):
        return m.tgt

    def horizontals(self, a, b, cap=200, rng=None):
        rng = rng or random.Random(0)
        out = [free_profunctor(a, b, [])]
        if a == b:
            out.append(hom_profunctor(a))
        for F in itertools.islice(self.verticals(a, b), 3):
            out.append(companion_profunctor(F))
        for F in itertools.islice(self.verticals(b, a), 3):
            out.append(conjoint_profunctor(F))
        seen, uniq = set(), []
        for m in out:
            if m not in seen:
                seen.add(m)
                uniq.append(m)
        while len(uniq) < cap and len(uniq) < 12:
            uniq.append(random_profunctor(rng, a, b))
        return uniq[:cap]

    def sample_horizontal(self, rng, a, b):
        return random_profunctor(rng, a, b)

    def U(self, a):
        return hom_profunctor(a)

    def hcomp(self, m, n):
        return compose_profunctors(m, n).module

    def cells(self, top, bottom, left, right, cap=None):
        return [Cell(top, bottom, left, right, phi)
                for phi in equivariant_maps(top, bottom, left, right, cap=cap)]

    def valid_cell(self, c):
        return (self.frame_ok(c.top, c.bottom, c.left, c.right)
                and is_equivariant(c.top, c.bottom, c.left, c.right, c.payload))

    def random_cell_from(self, rng, top, left, right, max_size=2):
        from . import fibrancy
        return fibrancy.opcartesian_filling(self, left, right, top).binding

    def cell_id(self, m):
        return Cell(m, m, self.vid(m.src), self.vid(m.tgt), FinFn.identity(m.carrier))

    def U_cell(self, f):
        return Cell(self.U(f.dom), self.U(f.cod), f, f, f.arr)

    def _vpay(self, a, b):
        return a.payload.then(b.payload)

    def _hpay(self, a, b, top, bottom):
        ct = compose_profunctors(a.top, b.top)
        cb = compose_profunctors(a.bottom, b.bottom)
        return FinFn(top.carrier, bottom.carrier,
                     {c: cb.cls[(a.payload(m), b.payload(n))] for c, (m, n) in ct.reps.items()})

    def _glob(self, top, bottom, mapping):
        return Cell(top, bottom, self.vid(top.src), self.vid(top.tgt), FinFn(top.carrier, bottom.carrier, mapping))

    def associator(self, m, n, p):
        mn = compose_profunctors(m, n)
        left = compose_profunctors(mn.module, p)
        np_ = compose_profunctors(n, p)
        right = compose_profunctors(m, np_.module)
        mp = {}
        for c, (x, z) in left.reps.items():
            a, b = mn.reps[x]
            mp[c] = right.cls[(a, np_.cls[(b, z)])]
        return self._glob(left.module, right.module, mp)

    def associator_inv(self, m, n, p):
        a = self.associator(m, n, p)
        return self._glob(a.bottom, a.top, {y: x for x, y in zip(a.payload.dom.elements, a.payload.images)})

    def lunitor(self, m):
        c = compose_profunctors(m, self.U(m.tgt))
        return self._glob(c.module, m, {k: m.lact[(x, g)] for k, (x, g) in c.reps.items()})

    def lunitor_inv(self, m):
        c = compose_profunctors(m, self.U(m.tgt))
        return self._glob(m, c.module, {x: c.cls[(x, m.tgt.ident(m.m1(x)))] for x in m.carrier})

    def runitor(self, m):
        c = compose_profunctors(self.U(m.src), m)
        return self._glob(c.module, m, {k: m.ract[(f, x)] for k, (f, x) in c.reps.items()})

    def runitor_inv(self, m):
        c = compose_profunctors(self.U(m.src), m)
        return self._glob(m, c.module, {x: c.cls[(m.src.ident(m.m0(x)), x)] for x in m.carrier})

    def companion(self, F):
        fs = companion_profunctor(F)
        A, B = F.dom, F.cod
        upper = Cell(fs, self.U(B), F, self.vid(B),
                     FinFn(fs.carrier, B.arrows, {k: b for k, (x, b) in _comp_elems(F).items()}))
        lower = Cell(self.U(A), fs, self.vid(A), F,
                     FinFn(A.arrows, fs.carrier, {f: pair(A.src(f), F(f)) for f in A.arrows}))
        return fs, upper, lower

    def conjoint(self, F):
        fc = conjoint_profunctor(F)
        A, B = F.dom, F.cod
        upper = Cell(fc, self.U(B), self.vid(B), F,
                     FinFn(fc.carrier, B.arrows, {k: b for k, (b, x) in _conj_elems(F).items()}))
        lower = Cell(self.U(A), fc, F, self.vid(A),
                     FinFn(A.arrows, fc.carrier, {f: pair(F(f), A.tgt(f)) for f in A.arrows}))
        return fc, upper, lower

    def inverse_cell(self, c, cap=None):
        phi = c.payload
        if not (phi.is_injective() and phi.is_surjective()):
            return None
        inv = Cell(c.bottom, c.top, c.left, c.right,
                   FinFn(phi.cod, phi.dom, {y: x for x, y in zip(phi.dom.elements, phi.images)}))
        if not self.valid_cell(inv):
            return None
        if self.vcompose(c, inv) == self.cell_id(c.top) and self.vcompose(inv, c) == self.cell_id(c.bottom):
            return inv
        return None

    def iso_horizontal(self, m, n, cap=None):
        if m.src != n.src or m.tgt != n.tgt or len(m.carrier) != len(n.carrier):
            return None
        for c in self.cells(m, n, self.vid(m.src), self.vid(m.tgt), cap=cap):
            if self.inverse_cell(c) is not None:
                return c
        return None

    # vertical pullbacks: computed on objects and on arrows
    def vertical_pullback(self, f, g):
        if f.cod != g.cod:
            raise InvalidInput("pullback of functors with different codomains")
        A, B = f.dom, g.dom
        o, o1, o2 = pullback(f.obj, g.obj)
        r, r1, r2 = pullback(f.arr, g.arr)
        s = FinFn(r, o, lambda z: pair(A.src(r1(z)), B.src(r2(z))))
        t = FinFn(r, o, lambda z: pair(A.tgt(r1(z)), B.tgt(r2(z))))
        i = FinFn(o, r, lambda x: pair(A.ident(o1(x)), B.ident(o2(x))))
        comp = {}
        for x in r:
            for y in r:
                if t(x) == s(y):
                    comp[(x, y)] = pair(A.then(r1(x), r1(y)), B.then(r2(x), r2(y)))
        P = InternalCategory(o, r, s, t, i, comp, validate=False)
        return P, Functor(P, A, o1, r1), Functor(P, B, o2, r2)

    def is_pullback(self, q1, q2, f, g):
        P, p1, p2 = self.vertical_pullback(f, g)
        for part in ("obj", "arr"):
            a, b = getattr(q1, part), getattr(q2, part)
            seen = {}
            for x in a.dom:
                k = (a(x), b(x))
                if k in seen:
                    return {"reason": "mediating functor not injective on %s" % part}
                seen[k] = x
            if len(seen) != len(getattr(p1, part).dom):
                return {"reason": "mediating functor not surjective on %s" % part}
        return None

    def cartesian_witness(self):
        return ProfCartesian(self)

    def dump(self, x):
        if isinstance(x, InternalCategory):
            return x.to_json()
        return DoubleCategory.dump(self, x)


def _comp_elems(F):
    A, B = F.dom, F.cod
    return {pair(x, b): (x, b) for x in A.objects for b in B.hom_from(F.obj(x))}


def _conj_elems(F):
    A, B = F.dom, F.cod
    return {pair(b, x): (b, x) for x in A.objects for b in B.hom_into(F.obj(x))}


@functools.lru_cache(maxsize=None)
def _objects_upto(max_size):
    return [c for c in enumerate_categories(min(max_size, 2), max_size) if len(c.arrows) <= max_size]


@functools.lru_cache(maxsize=20000)
def _functors_cached(a, b):
    return tuple(functors(a, b))


def _functors(a, b):
    return iter(_functors_cached(a, b))


def prof_of_finset():
    return ProfDouble()


# -- Cartesian structure ---------------------------------------------------------------

class ProfCartesian:
    """Products of internal categories, functors and profunctors, computed
    componentwise."""

    def __init__(self, d):
        self.d = d

    def _prod(self, a, b):
        return _product_cat(a, b)

    def prod_obj(self, a, b):
        return self._prod(a, b)[0]

    def p1(self, a, b):
        P, f, _ = self._prod(a, b)
        return Functor(P, a, f.obj, f.arr)

    def p2(self, a, b):
        P, _, g = self._prod(a, b)
        return Functor(P, b, g.obj, g.arr)

    def prod_v(self, f, g):
        P = self.prod_obj(f.dom, g.dom)
        Q = self.prod_obj(f.cod, g.cod)
        po, pa = product(f.dom.objects, g.dom.objects), product(f.dom.arrows, g.dom.arrows)
        obj = FinFn(P.objects, Q.objects, lambda z: pair(f.obj(po[1](z)), g.obj(po[2](z))))
        arr = FinFn(P.arrows, Q.arrows, lambda z: pair(f.arr(pa[1](z)), g.arr(pa[2](z))))
        return Functor(P, Q, obj, arr)

    def diag(self, a):
        P = self.prod_obj(a, a)
        return Functor(a, P, FinFn(a.objects, P.objects, lambda x: pair(x, x)),
                       FinFn(a.arrows, P.arrows, lambda f: pair(f, f)))

    @property
    def terminal(self):
        return TERMINAL_CAT

    def bang(self, a):
        return Functor(a, TERMINAL_CAT, FinFn(a.objects, TERMINAL_CAT.objects, lambda x: "*"),
                       FinFn(a.arrows, TERMINAL_CAT.arrows, lambda f: "1_*"))

    @property
    def U_I(self):
        return self.d.U(TERMINAL_CAT)

    def prod_h(self, m, n):
        return _product_prof(m, n)

    def prod_cell(self, a, b):
        top, bottom = self.prod_h(a.top, b.top), self.prod_h(a.bottom, b.bottom)
        pc = product(a.top.carrier, b.top.carrier)
        phi = FinFn(top.carrier, bottom.carrier, lambda z: pair(a.payload(pc[1](z)), b.payload(pc[2](z))))
        return Cell(top, bottom, self.prod_v(a.left, b.left), self.prod_v(a.right, b.right), phi)

    def delta(self, m):
        mm = self.prod_h(m, m)
        return Cell(m, mm, self.diag(m.src), self.diag(m.tgt), FinFn(m.carrier, mm.carrier, lambda p: pair(p, p)))

    def pi1(self, m, n):
        mn = self.prod_h(m, n)
        pc = product(m.carrier, n.carrier)
        return Cell(mn, m, self.p1(m.src, n.src), self.p1(m.tgt, n.tgt), pc[1])

    def pi2(self, m, n):
        mn = self.prod_h(m, n)
        pc = product(m.carrier, n.carrier)
        return Cell(mn, n, self.p2(m.src, n.src), self.p2(m.tgt, n.tgt), pc[2])

    def tcell(self, m):
        return Cell(m, self.U_I, self.bang(m.src), self.bang(m.tgt),
                    FinFn(m.carrier, TERMINAL_CAT.arrows, lambda p: "1_*"))

    def _cmp(self, m, n, m2, n2):
        d = self.d
        top_c = compose_profunctors(self.prod_h(m, n), self.prod_h(m2, n2))
        a, b = compose_profunctors(m, m2), compose_profunctors(n, n2)
        bottom = self.prod_h(a.module, b.module)
        pc, pc2 = product(m.carrier, n.carrier), product(m2.carrier, n2.carrier)
        mp = {}
        for c, (x, y) in top_c.reps.items():
            mp[c] = pair(a.cls[(pc[1](x), pc2[1](y))], b.cls[(pc[2](x), pc2[2](y))])
        return top_c.module, bottom, mp

    def comp_cmp(self, m, n, m2, n2):
        top, bottom, mp = self._cmp(m, n, m2, n2)
        return Cell(top, bottom, self.d.vid(top.src), self.d.vid(top.tgt), FinFn(top.carrier, bottom.carrier, mp))

    def comp_cmp_inv(self, m, n, m2, n2):
        top, bottom, mp = self._cmp(m, n, m2, n2)
        inv = {v: k for k, v in mp.items()}
        return Cell(bottom, top, self.d.vid(top.src), self.d.vid(top.tgt), FinFn(bottom.carrier, top.carrier, inv))

    def unit_cmp(self, a, b):
        top = self.d.U(self.prod_obj(a, b))
        bottom = self.prod_h(self.d.U(a), self.d.U(b))
        return Cell(top, bottom, self.d.vid(top.src), self.d.vid(top.tgt),
                    FinFn(top.carrier, bottom.carrier, lambda z: z))

    def unit_cmp_inv(self, a, b):
        c = self.unit_cmp(a, b)
        return Cell(c.bottom, c.top, c.left, c.right, FinFn(c.bottom.carrier, c.top.carrier, lambda z: z))


@functools.lru_cache(maxsize=20000)
def _product_cat(a, b):
    return product_category(a, b)


@functools.lru_cache(maxsize=20000)
def _product_prof(m, n):
    return product_profunctor(m, n, _product_cat(m.src, n.src)[0], _product_cat(m.tgt, n.tgt)[0])


# -- monads in Span and their Kleisli objects -----------------------------------------

def category_as_monad(c):
    """The internal category as a monad in Span(FinSet): S = (s, t), unit i,
    multiplication c on the composite span."""
    from .span import SpanDouble, compose_spans
    from .finset import FinSpan
    d = SpanDouble()
    S = FinSpan(c.src, c.tgt)
    SS, q1, q2 = compose_spans(S, S)
    eta = Cell(d.U(c.objects), S, FinFn.identity(c.objects), FinFn.identity(c.objects), c.ident)
    idn = FinFn.identity(c.objects)
    mu = Cell(SS, S, idn, idn, FinFn(SS.apex, c.arrows, lambda z: c.then(q1(z), q2(z))))
    return d, S, eta, mu


def monad_laws(d, S, eta, mu):
    """Unit and associativity equations of a monad in a double category."""
    out = {}
    out["cells_valid"] = all(d.valid_cell(x) for x in (eta, mu))
    out["left_unit"] = d.vcompose(d.runitor_inv(S), d.hcompose(eta, d.cell_id(S)), mu) == d.cell_id(S)
    out["right_unit"] = d.vcompose(d.lunitor_inv(S), d.hcompose(d.cell_id(S), eta), mu) == d.cell_id(S)
    lhs = d.vcompose(d.hcompose(mu, d.cell_id(S)), mu)
    rhs = d.vcompose(d.associator(S, S, S), d.hcompose(d.cell_id(S), mu), mu)
    out["associativity"] = lhs == rhs
    return out


def monad_to_category(objects, S, eta, mu):
    """Read an internal category off a monad in Span(FinSet)."""
    from .span import compose_spans
    SS, q1, q2 = compose_spans(S, S)
    comp = {(q1(z), q2(z)): mu.payload(z) for z in SS.apex}
    return InternalCategory(objects, S.apex, S.left, S.right, eta.payload, comp)


class Kleisli:
    def __init__(self, obj, v, cell):
        self.obj = obj
        self.v = v
        self.cell = cell


def kleisli_object(c):
    """Kleisli object of the monad c in Span(FinSet): the coequalizer of
    s and t (connected components) with its quotient map."""
    from .finset import coequalizer
    from .span import SpanDouble
    from .finset import FinSpan
    d = SpanDouble()
    K, v = coequalizer(c.src, c.tgt)
    S = FinSpan(c.src, c.tgt)
    cell = Cell(S, d.U(K), v, v, FinFn(c.arrows, K, lambda f: v(c.src(f))))
    return Kleisli(K, v, cell)


def verify_kleisli(c, k, max_size=2):
    """Every v': A0 -> K' carrying a monad-compatible cell S => U_K' factors
    through v by exactly one map K -> K'."""
    from .finset import FinSpan
    from .span import SpanDouble
    d, S, eta, mu = category_as_monad(c)
    ok, checked = True, 0
    if not (d.valid_cell(k.cell) and _kleisli_compatible(d, S, eta, mu, k.cell)):
        return False, 0
    for n in range(max_size + 1):
        K2 = canonical_set(n)
        for v2 in all_functions(c.objects, K2):
            cells = [x for x in d.cells(S, d.U(K2), v2, v2) if _kleisli_compatible(d, S, eta, mu, x)]
            for x in cells:
                checked += 1
                hits = [h for h in all_functions(k.obj, K2)
                        if d.vcompose(k.cell, d.U_cell(h)) == x]
                if len(hits) != 1:
                    ok = False
    return ok, checked


def _kleisli_compatible(d, S, eta, mu, x):
    """x: S => U_K over (v, v) is a monad morphism into the trivial monad."""
    v = x.left
    unit_ok = d.vcompose(eta, x) == d.U_cell(v)
    mult_ok = d.vcompose(mu, x) == d.vcompose(d.hcompose(x, x), d.lunitor(d.U(x.bottom.src)))
    return unit_ok and mult_ok


# -- discreteness ----------------------------------------------------------------

def discrete_squares(w, a):
    """The two squares whose Beck-Chevalley condition defines a discrete
    object: (d, d; d x A, A x d) into AAA, and (1, 1; d, d) into AA."""
    d = w.d
    dA = w.diag(a)
    aa = w.prod_obj(a, a)
    left = w.prod_v(dA, d.vid(a))          # A x A -> (A x A) x A
    right = d.vcomp(w.prod_v(d.vid(a), dA), _reassoc(w, a))   # A x A -> A x (A x A) -> (A x A) x A
    return [(dA, dA, left, right), (d.vid(a), d.vid(a), dA, dA)]


def _reassoc(w, a):
    """A x (A x A) -> (A x A) x A."""
    d = w.d
    src = w.prod_obj(a, w.prod_obj(a, a))
    tgt = w.prod_obj(w.prod_obj(a, a), a)
    p1, p2 = w.p1(a, w.prod_obj(a, a)), w.p2(a, w.prod_obj(a, a))
    x, y = d.vcomp(p2, w.p1(a, a)), d.vcomp(p2, w.p2(a, a))
    return _pair_v(w, _pair_v(w, p1, x), y)


def _pair_v(w, f, g):
    d = w.d
    return d.vcomp(w.diag(d.vsrc(f)), w.prod_v(f, g))


def check_discrete(d, w, a):
    from .equivalence import beck_chevalley, NotAPullback
    from .verdict import FAIL, PASS, Verdict, summarize
    out = []
    for name, (q1, q2, f, g) in zip(("diagonal_square", "identity_square"), discrete_squares(w, a)):
        try:
            sq = beck_chevalley(d, q1, q2, f, g)
            ok, cx = sq.invertible, None if sq.invertible else {"cell": d.dump(sq.cell)}
        except NotAPullback as e:
            ok, cx = False, {"not_a_pullback": e.witness}
        out.append(Verdict(name, PASS if ok else FAIL, cx, 1))
    return summarize("discrete", out)


# -- modules in Span(FinSet), the Mod construction and the Cartesian check ----------

def profunctor_as_module(M):
    """The profunctor M as a module in Span(FinSet) between the monads of its
    source and target: returns (d, S, eta_S, mu_S, T, eta_T, mu_T, span, rho, lam)."""
    from .finset import FinSpan
    from .span import compose_spans
    d, S, eta_s, mu_s = category_as_monad(M.src)
    _, T, eta_t, mu_t = category_as_monad(M.tgt)
    span = FinSpan(M.m0, M.m1)
    sm, a1, a2 = compose_spans(S, span)
    mt, b1, b2 = compose_spans(span, T)
    rho = Cell(sm, span, FinFn.identity(M.src.objects), FinFn.identity(M.tgt.objects),
               FinFn(sm.apex, M.carrier, lambda z: M.ract[(a1(z), a2(z))]))
    lam = Cell(mt, span, FinFn.identity(M.src.objects), FinFn.identity(M.tgt.objects),
               FinFn(mt.apex, M.carrier, lambda z: M.lact[(b1(z), b2(z))]))
    return d, (S, eta_s, mu_s), (T, eta_t, mu_t), span, rho, lam


def module_laws(d, s, t, M, rho, lam):
    """Unit, associativity and compatibility pastings for a module
    M: A -|-> B over monads s on A and t on B (actions rho, lam)."""
    S, eta_s, mu_s = s
    T, eta_t, mu_t = t
    iM, iS, iT = d.cell_id(M), d.cell_id(S), d.cell_id(T)
    out = {"cells_valid": all(d.valid_cell(x) for x in (rho, lam))}
    out["right_unit"] = d.vcompose(d.runitor_inv(M), d.hcompose(eta_s, iM), rho) == iM
    out["left_unit"] = d.vcompose(d.lunitor_inv(M), d.hcompose(iM, eta_t), lam) == iM
    out["right_assoc"] = (d.vcompose(d.hcompose(mu_s, iM), rho)
                          == d.vcompose(d.associator(S, S, M), d.hcompose(iS, rho), rho))
    out["left_assoc"] = (d.vcompose(d.hcompose(iM, mu_t), lam)
                         == d.vcompose(d.associator_inv(M, T, T), d.hcompose(lam, iT), lam))
    out["compatible"] = (d.vcompose(d.hcompose(rho, iT), lam)
                         == d.vcompose(d.associator(S, M, T), d.hcompose(iS, lam), rho))
    return out


def module_to_profunctor(A, B, span, rho, lam):
    from .span import compose_spans
    _, S, _, _ = category_as_monad(A)
    _, T, _, _ = category_as_monad(B)
    sm, a1, a2 = compose_spans(S, span)
    mt, b1, b2 = compose_spans(span, T)
    ract = {(a1(z), a2(z)): rho.payload(z) for z in sm.apex}
    lact = {(b1(z), b2(z)): lam.payload(z) for z in mt.apex}
    return Profunctor(A, B, span.apex, span.left, span.right, ract, lact)


def mod_double_category(d):
    """Mod(d). Only d = Span(FinSet) is constructed; the result is Prof."""
    from .double import UnsupportedInstance
    if d.name != "span":
        raise UnsupportedInstance("Mod(%s) is only constructed for span" % d.name)
    return prof_of_finset()


def check_prof_cartesian(max_size=2, samples=40, seed=0):
    from . import cartesian, fibrancy
    from .verdict import Tally, summarize
    d = prof_of_finset()
    w = d.cartesian_witness()
    out = [cartesian.check_precartesian(d, w, max_size=max_size, samples=samples, seed=seed),
           cartesian.check_pseudo(d, w, max_size=max_size, samples=samples, seed=seed)]
    t = Tally("products_componentwise")
    objs = d.objects(max_size)
    for a in objs:
        for b in objs:
            P = w.prod_obj(a, b)
            ok = (len(P.objects) == len(a.objects) * len(b.objects)
                  and len(P.arrows) == len(a.arrows) * len(b.arrows))
            for (f, g), h in P.comp.items():
                pf, pg = w.p1(a, b), w.p2(a, b)
                ok = ok and pf.arr(h) == a.then(pf.arr(f), pf.arr(g)) and pg.arr(h) == b.then(pg.arr(f), pg.arr(g))
            t.record(ok, lambda: {"a": a.to_json(), "b": b.to_json()})
    out.append(t.verdict())
    t = Tally("companions")
    rng = random.Random(seed)
    for _ in range(samples):
        a, b = rng.choice(objs), rng.choice(objs)
        fs = list(d.verticals(a, b))
        if not fs:
            continue
        f = rng.choice(fs)
        t.record(bool(fibrancy.verify_companion_adjunction(d, f)), lambda: {"functor": f.to_json()})
    out.append(t.verdict())
    return summarize("prof_cartesian", out)


class EvidenceReport:
    """Rows of evidence for (or against) the conjectures; never a proof."""

    def __init__(self, rows, warnings):
        self.rows = rows
        self.warnings = warnings

    @property
    def against(self):
        return [r for r in self.rows if r["evidence"] == "against"]

    @property
    def status(self):
        from .verdict import FAIL, PASS
        return FAIL if self.against else PASS

    def to_json(self):
        return {"status": self.status, "label": "evidence", "rows": self.rows, "warnings": self.warnings}


def conjecture_report(budget=2, samples=10, seed=0):
    from .cartesian import check_unit_pure
    d = prof_of_finset()
    w = d.cartesian_witness()
    rng = random.Random(seed)
    rows, warnings = [], []
    objs = d.objects(budget)
    disc = [a for a in objs if a.is_discrete()]

    class _Disc:
        name = "disc"

        def objects(self, n):
            return disc

        def __getattr__(self, k):
            return getattr(d, k)

    v = check_unit_pure(_Disc(), budget)
    rows.append({"conjecture": "discrete objects are unit-pure", "subject": "%d discrete objects" % len(disc),
                 "evidence": "for" if v.passed else "against", "checked": v.checked,
                 "counterexample": v.counterexample})
    cats = [rng.choice(objs) for _ in range(samples)] if objs else []
    if not cats:
        warnings.append("empty sample: rows (ii) and (iii) are vacuous")
    for c in cats:
        k = kleisli_object(c)
        K = discrete_category(k.obj)
        dv = check_discrete(d, w, K)
        rows.append({"conjecture": "Kleisli objects are discrete", "subject": c.to_json(),
                     "evidence": "for" if dv.passed else "against", "checked": dv.checked,
                     "counterexample": dv.counterexample})
    for _ in range(samples if objs else 0):
        a, b = rng.choice(objs), rng.choice(objs)
        M = random_profunctor(rng, a, b)
        dd, s, t, span, rho, lam = profunctor_as_module(M)
        laws = module_laws(dd, s, t, span, rho, lam)
        back = module_to_profunctor(a, b, span, rho, lam)
        ok = all(laws.values()) and back.ract == M.ract and back.lact == M.lact
        rows.append({"conjecture": "profunctors are modules over spans of discrete objects",
                     "subject": M.to_json(), "evidence": "for" if ok else "against",
                     "checked": 1, "counterexample": None if ok else {k: v for k, v in laws.items() if not v}})
    return EvidenceReport(rows, warnings)
