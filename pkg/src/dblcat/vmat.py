"""The double category V-Mat for V = finite sets with x and tagged disjoint
union.

A matrix M: S -|-> T has an entry M(t, s) for each t in T, s in S. The
composite of M: S -|-> T and N: T -|-> U has entries
    NM(u, s) = sum over t of N(u, t) x M(t, s),
with elements labelled "t:(n,m)". A cell over (f, g) is a family of functions
M(t, s) -> N(g t, f s).
"""
import functools
import itertools

from .double import Cell, DoubleCategory
from .finset import EMPTY, TERMINAL, FinFn, FinSet, InvalidInput, _fields, all_functions, canonical_set


def tag(t, n, m):
    return t + ":(" + n + "," + m + ")"


class VMatrix:
    __slots__ = ("src", "tgt", "_entries", "_hash")

    def __init__(self, src, tgt, entries):
        """entries: mapping (t, s) -> FinSet; missing keys mean the empty set."""
        for (t, s) in entries:
            if t not in tgt or s not in src:
                raise InvalidInput("entry (%s,%s) outside tgt x src" % (t, s))
        self.src = src
        self.tgt = tgt
        self._entries = tuple(entries.get((t, s), EMPTY) for t in tgt for s in src)
        self._hash = None

    def entry(self, t, s):
        return self._entries[self.tgt.index[t] * len(self.src) + self.src.index[s]]

    def keys(self):
        return [(t, s) for t in self.tgt for s in self.src]

    def items(self):
        return zip(self.keys(), self._entries)

    def __eq__(self, other):
        return (isinstance(other, VMatrix) and self._entries == other._entries
                and self.src == other.src and self.tgt == other.tgt)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.src, self.tgt, self._entries))
        return self._hash

    def __repr__(self):
        return "VMatrix(%s)" % ", ".join("%s|%s:%d" % (t, s, len(e)) for (t, s), e in self.items())

    def to_json(self):
        return {"src": self.src.to_json(), "tgt": self.tgt.to_json(),
                "entries": {t + "|" + s: e.to_json() for (t, s), e in self.items() if len(e)}}

    @classmethod
    def from_json(cls, obj):
        _fields(obj, {"src", "tgt", "entries"}, "VMatrix")
        src, tgt = FinSet.from_json(obj["src"]), FinSet.from_json(obj["tgt"])
        ents = {}
        for key, val in obj["entries"].items():
            if key.count("|") != 1:
                raise InvalidInput("VMatrix entry key %r must look like 't|s'" % key)
            t, s = key.split("|")
            ents[(t, s)] = FinSet.from_json(val)
        return cls(src, tgt, ents)


@functools.lru_cache(maxsize=200000)
def compose_vmats(m, n):
    if m.tgt != n.src:
        raise InvalidInput("matrices are not composable")
    ents = {}
    for u in n.tgt:
        for s in m.src:
            ents[(u, s)] = FinSet([tag(t, x, y) for t in m.tgt
                                   for x in n.entry(u, t) for y in m.entry(t, s)])
    return VMatrix(m.src, n.tgt, ents)


def unit_matrix(a):
    return VMatrix(a, a, {(x, x): TERMINAL for x in a})


def entry_candidates(top, bottom, f, g):
    """Per (key, element of top's entry): allowed images in bottom."""
    out = []
    for (t, s), e in top.items():
        tgt = bottom.entry(g(t), f(s))
        for _ in e:
            out.append(tgt.elements)
    return out


class VMatDouble(DoubleCategory):
    name = "vmat"

    def __init__(self, entry_max=1):
        self.entry_max = entry_max

    def objects(self, max_size):
        return [canonical_set(n) for n in range(max_size + 1)]

    def sample_object(self, rng, max_size):
        return canonical_set(rng.randint(0, max_size))

    def vid(self, a):
        return FinFn.identity(a)

    def vcomp(self, f, g):
        return f.then(g)

    def verticals(self, a, b):
        return all_functions(a, b)

    def sample_vertical(self, rng, a, b):
        if len(a) and not len(b):
            return None
        return FinFn.from_indices(a, b, [rng.randrange(len(b)) for _ in range(len(a))])

    def vertical_out(self, rng, a, max_size):
        b = canonical_set(rng.randint(1 if len(a) else 0, max(max_size, 1)))
        return self.sample_vertical(rng, a, b)

    def hsrc(self, m):
        return m.src

    def htgt(self, m):
        return m.tgt

    def horizontals(self, a, b, cap=200, rng=None):
        keys = [(t, s) for t in b for s in a]
        sizes = range(self.entry_max + 1)
        total = len(sizes) ** len(keys)
        if total > cap:
            return [self.sample_horizontal(rng, a, b) for _ in range(cap)]
        return [VMatrix(a, b, {k: canonical_set(n, "e") for k, n in zip(keys, combo)})
                for combo in itertools.product(sizes, repeat=len(keys))]

    def sample_horizontal(self, rng, a, b, entry_max=None):
        top = self.entry_max if entry_max is None else entry_max
        return VMatrix(a, b, {(t, s): canonical_set(rng.randint(0, top), "e") for t in b for s in a})

    def U(self, a):
        return unit_matrix(a)

    def hcomp(self, m, n):
        return compose_vmats(m, n)

    def _cell(self, top, bottom, f, g, fns):
        return Cell(top, bottom, f, g, tuple(fns))

    def cells(self, top, bottom, left, right, cap=None):
        keys = top.keys()
        per_key = []
        for (t, s) in keys:
            per_key.append(list(all_functions(top.entry(t, s), bottom.entry(right(t), left(s)))))
        out = []
        for combo in itertools.product(*per_key):
            out.append(Cell(top, bottom, left, right, tuple(combo)))
            if cap is not None and len(out) >= cap:
                break
        return out

    def count_cells(self, top, bottom, left, right):
        n = 1
        for c in entry_candidates(top, bottom, left, right):
            n *= len(c)
        return n

    def valid_cell(self, c):
        if not self.frame_ok(c.top, c.bottom, c.left, c.right):
            return False
        fns = c.payload
        if not isinstance(fns, tuple) or len(fns) != len(c.top.keys()):
            return False
        for ((t, s), e), phi in zip(c.top.items(), fns):
            if phi.dom != e or phi.cod != c.bottom.entry(c.right(t), c.left(s)):
                return False
        return True

    def random_cell_from(self, rng, top, left, right, max_size=2):
        # bottom entries: a random quotient of the pushed-forward elements plus extras
        pushed = {}
        for (t, s), e in top.items():
            key = (right(t), left(s))
            for x in e:
                pushed.setdefault(key, []).append(((t, s), x))
        ents, where = {}, {}
        for key in [(t, s) for t in right.cod for s in left.cod]:
            items = pushed.get(key, [])
            k = rng.randint(1, len(items)) if items else 0
            k += rng.randint(0, 1) if rng.random() < 0.3 else 0
            ents[key] = canonical_set(k, "e")
            for it in items:
                where[it] = "e" + str(rng.randrange(len(items) if k > len(items) else k))
        bottom = VMatrix(left.cod, right.cod, ents)
        fns = []
        for (t, s), e in top.items():
            cod = bottom.entry(right(t), left(s))
            fns.append(FinFn(e, cod, {x: where[((t, s), x)] for x in e}))
        return Cell(top, bottom, left, right, tuple(fns))

    def cell_id(self, m):
        return Cell(m, m, FinFn.identity(m.src), FinFn.identity(m.tgt),
                    tuple(FinFn.identity(e) for _, e in m.items()))

    def U_cell(self, f):
        top, bottom = self.U(f.dom), self.U(f.cod)
        fns = []
        for (t, s), e in top.items():
            fns.append(FinFn(e, bottom.entry(f(t), f(s)), {x: x for x in e}))
        return Cell(top, bottom, f, f, tuple(fns))

    def _vpay(self, a, b):
        out = []
        for ((t, s), _), phi in zip(a.top.items(), a.payload):
            k = a.bottom.tgt.index[a.right(t)] * len(a.bottom.src) + a.bottom.src.index[a.left(s)]
            out.append(phi.then(b.payload[k]))
        return tuple(out)

    def _component(self, c, t, s):
        return c.payload[c.top.tgt.index[t] * len(c.top.src) + c.top.src.index[s]]

    def _hpay(self, a, b, top, bottom):
        # a: M -> M' over (f, g), b: N -> N' over (g, h); composite NM -> N'M'
        f, g, h = a.left, a.right, b.right
        m, n = a.top, b.top
        out = []
        for (u, s), e in top.items():
            img = {}
            for t in m.tgt:
                bn = self._component(b, u, t)
                am = self._component(a, t, s)
                for x in n.entry(u, t):
                    for y in m.entry(t, s):
                        img[tag(t, x, y)] = tag(g(t), bn(x), am(y))
            out.append(FinFn(e, bottom.entry(h(u), f(s)), img))
        return tuple(out)

    def _glob(self, top, bottom, mapping):
        fns = []
        for (t, s), e in top.items():
            fns.append(FinFn(e, bottom.entry(t, s), {x: mapping[(t, s, x)] for x in e}))
        return Cell(top, bottom, FinFn.identity(top.src), FinFn.identity(top.tgt), tuple(fns))

    def _assoc_map(self, m, n, p, forward):
        mp = {}
        for d in p.tgt:
            for a in m.src:
                for c in n.tgt:
                    for b in m.tgt:
                        for x in p.entry(d, c):
                            for y in n.entry(c, b):
                                for z in m.entry(b, a):
                                    left = tag(c, x, tag(b, y, z))
                                    right = tag(b, tag(c, x, y), z)
                                    if forward:
                                        mp[(d, a, left)] = right
                                    else:
                                        mp[(d, a, right)] = left
        return mp

    def associator(self, m, n, p):
        l = self.hcomp(self.hcomp(m, n), p)
        r = self.hcomp(m, self.hcomp(n, p))
        return self._glob(l, r, self._assoc_map(m, n, p, True))

    def associator_inv(self, m, n, p):
        l = self.hcomp(self.hcomp(m, n), p)
        r = self.hcomp(m, self.hcomp(n, p))
        return self._glob(r, l, self._assoc_map(m, n, p, False))

    def _lmap(self, m, forward):
        mp = {}
        for (t, s), e in m.items():
            for x in e:
                k = tag(t, "*", x)
                if forward:
                    mp[(t, s, k)] = x
                else:
                    mp[(t, s, x)] = k
        return mp

    def _rmap(self, m, forward):
        mp = {}
        for (t, s), e in m.items():
            for x in e:
                k = tag(s, x, "*")
                if forward:
                    mp[(t, s, k)] = x
                else:
                    mp[(t, s, x)] = k
        return mp

    def lunitor(self, m):
        return self._glob(self.hcomp(m, self.U(m.tgt)), m, self._lmap(m, True))

    def lunitor_inv(self, m):
        return self._glob(m, self.hcomp(m, self.U(m.tgt)), self._lmap(m, False))

    def runitor(self, m):
        return self._glob(self.hcomp(self.U(m.src), m), m, self._rmap(m, True))

    def runitor_inv(self, m):
        return self._glob(m, self.hcomp(self.U(m.src), m), self._rmap(m, False))

    def _point_cell(self, top, bottom, left, right):
        # every component maps into a singleton (or from the empty set)
        fns = []
        for (t, s), e in top.items():
            cod = bottom.entry(right(t), left(s))
            if len(e) and len(cod) != 1:
                raise InvalidInput("component is not a map into a singleton")
            fns.append(FinFn(e, cod, {x: cod.elements[0] for x in e}))
        return Cell(top, bottom, left, right, tuple(fns))

    def graph_matrix(self, f):
        return VMatrix(f.dom, f.cod, {(f(a), a): TERMINAL for a in f.dom})

    def cograph_matrix(self, f):
        return VMatrix(f.cod, f.dom, {(a, f(a)): TERMINAL for a in f.dom})

    def companion(self, f):
        a, b = f.dom, f.cod
        fs = self.graph_matrix(f)
        return (fs, self._point_cell(fs, self.U(b), f, FinFn.identity(b)),
                self._point_cell(self.U(a), fs, FinFn.identity(a), f))

    def conjoint(self, f):
        a, b = f.dom, f.cod
        fc = self.cograph_matrix(f)
        return (fc, self._point_cell(fc, self.U(b), FinFn.identity(b), f),
                self._point_cell(self.U(a), fc, f, FinFn.identity(a)))

    def inverse_cell(self, c, cap=None):
        for phi in c.payload:
            if not (phi.is_injective() and phi.is_surjective()):
                return None
        if not self.is_globular(c):
            return DoubleCategory.inverse_cell(self, c, cap)
        inv = tuple(FinFn(phi.cod, phi.dom, {y: x for x, y in zip(phi.dom.elements, phi.images)})
                    for phi in c.payload)
        return Cell(c.bottom, c.top, c.left, c.right, inv)

    def iso_horizontal(self, m, n, cap=None):
        if m.src != n.src or m.tgt != n.tgt:
            return None
        fns = []
        for (k, e), (_, e2) in zip(m.items(), n.items()):
            if len(e) != len(e2):
                return None
            fns.append(FinFn(e, e2, dict(zip(e.elements, e2.elements))))
        return Cell(m, n, FinFn.identity(m.src), FinFn.identity(m.tgt), tuple(fns))


def vmat_double_category(**kw):
    return VMatDouble(**kw)
