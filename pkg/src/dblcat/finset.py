"""Finite sets, functions, spans and relations, with the finite limits and
colimits the double categories are built from.

Elements are text labels. Composite constructions produce canonical labels:
pairs are "(x,y)", coproduct tags are "L:x" / "R:y", and a quotient class is
named by its lexicographically least member.
"""
import itertools

from . import kernels


class InvalidInput(ValueError):
    """Malformed data: a broken invariant or a bad JSON form."""


def pair(x, y):
    return "(" + x + "," + y + ")"


def _label(x):
    if isinstance(x, str):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return str(x)
    raise InvalidInput("element labels must be text, got %r" % (x,))


class FinSet:
    __slots__ = ("elements", "_index", "_hash")

    def __init__(self, elements=()):
        elems = sorted(_label(x) for x in elements)
        for a, b in zip(elems, elems[1:]):
            if a == b:
                raise InvalidInput("duplicate element %r" % a)
        self.elements = tuple(elems)
        self._index = None
        self._hash = None

    @classmethod
    def _trusted(cls, sorted_elems):
        s = cls.__new__(cls)
        s.elements = tuple(sorted_elems)
        s._index = None
        s._hash = None
        return s

    @property
    def index(self):
        if self._index is None:
            self._index = {x: i for i, x in enumerate(self.elements)}
        return self._index

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.index

    def __eq__(self, other):
        return isinstance(other, FinSet) and self.elements == other.elements

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("FinSet", self.elements))
        return self._hash

    def __repr__(self):
        return "{" + ",".join(self.elements) + "}"

    def to_json(self):
        return {"elements": list(self.elements)}

    @classmethod
    def from_json(cls, obj):
        _fields(obj, {"elements"}, "FinSet")
        if not isinstance(obj["elements"], list):
            raise InvalidInput("FinSet.elements must be a list")
        return cls(obj["elements"])


def _fields(obj, allowed, what, required=None):
    if not isinstance(obj, dict):
        raise InvalidInput("%s must be a JSON object" % what)
    extra = set(obj) - set(allowed)
    if extra:
        raise InvalidInput("%s: unknown field(s) %s" % (what, sorted(extra)))
    missing = set(allowed if required is None else required) - set(obj)
    if missing:
        raise InvalidInput("%s: missing field(s) %s" % (what, sorted(missing)))


class FinFn:
    """A total function dom -> cod, stored as the image of each element of dom
    in dom's canonical order."""

    __slots__ = ("dom", "cod", "images", "_idx", "_hash")

    def __init__(self, dom, cod, mapping):
        if callable(mapping) and not isinstance(mapping, dict):
            imgs = tuple(mapping(x) for x in dom.elements)
        else:
            try:
                imgs = tuple(_label(mapping[x]) for x in dom.elements)
            except KeyError as e:
                raise InvalidInput("function not total: no image for %r" % e.args[0])
            if len(mapping) != len(dom):
                bad = [k for k in mapping if k not in dom]
                raise InvalidInput("function maps elements outside its domain: %r" % bad)
        idx = cod.index
        for y in imgs:
            if y not in idx:
                raise InvalidInput("image %r not in codomain" % (y,))
        self.dom = dom
        self.cod = cod
        self.images = imgs
        self._idx = None
        self._hash = None

    @classmethod
    def from_indices(cls, dom, cod, idx):
        f = cls.__new__(cls)
        f.dom = dom
        f.cod = cod
        els = cod.elements
        f.images = tuple(els[i] for i in idx)
        f._idx = list(idx)
        f._hash = None
        return f

    @classmethod
    def identity(cls, a):
        return cls.from_indices(a, a, range(len(a)))

    @property
    def idx(self):
        if self._idx is None:
            ci = self.cod.index
            self._idx = [ci[y] for y in self.images]
        return self._idx

    @property
    def map(self):
        return dict(zip(self.dom.elements, self.images))

    def __call__(self, x):
        return self.images[self.dom.index[x]]

    def then(self, g):
        """g after self."""
        if self.cod != g.dom:
            raise InvalidInput("cannot compose: codomain %r != domain %r" % (self.cod, g.dom))
        return FinFn.from_indices(self.dom, g.cod, kernels.compose_idx(self.idx, g.idx))

    def __eq__(self, other):
        return (isinstance(other, FinFn) and self.images == other.images
                and self.dom == other.dom and self.cod == other.cod)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dom, self.cod, self.images))
        return self._hash

    def __repr__(self):
        return "FinFn(" + ", ".join("%s->%s" % kv for kv in zip(self.dom.elements, self.images)) + ")"

    def is_identity(self):
        return self.dom == self.cod and self.images == self.dom.elements

    def is_injective(self):
        return len(set(self.images)) == len(self.images)

    def is_surjective(self):
        return len(set(self.images)) == len(self.cod)

    def fibers(self):
        """Preimage lists, indexed by codomain position."""
        return kernels.fibers_idx(self.idx, len(self.cod))

    def to_json(self):
        return {"dom": self.dom.to_json(), "cod": self.cod.to_json(), "map": self.map}

    @classmethod
    def from_json(cls, obj):
        _fields(obj, {"dom", "cod", "map"}, "FinFn")
        if not isinstance(obj["map"], dict):
            raise InvalidInput("FinFn.map must be an object")
        return cls(FinSet.from_json(obj["dom"]), FinSet.from_json(obj["cod"]), obj["map"])


def identity(a):
    return FinFn.identity(a)


def compose(*fns):
    """Diagrammatic composite: compose(f, g) = g after f."""
    out = fns[0]
    for g in fns[1:]:
        out = out.then(g)
    return out


class FinSpan:
    """A span A <- R -> B; left: R -> A, right: R -> B."""

    __slots__ = ("left", "right", "_hash")

    def __init__(self, left, right):
        if left.dom != right.dom:
            raise InvalidInput("span legs have different apexes")
        self.left = left
        self.right = right
        self._hash = None

    @property
    def apex(self):
        return self.left.dom

    @property
    def src(self):
        return self.left.cod

    @property
    def tgt(self):
        return self.right.cod

    def __eq__(self, other):
        return isinstance(other, FinSpan) and self.left == other.left and self.right == other.right

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.left, self.right))
        return self._hash

    def __repr__(self):
        return "Span(%r <- %r -> %r)" % (self.src, self.apex, self.tgt)

    def to_json(self):
        return {"left": self.left.to_json(), "right": self.right.to_json()}

    @classmethod
    def from_json(cls, obj):
        _fields(obj, {"left", "right"}, "FinSpan")
        return cls(FinFn.from_json(obj["left"]), FinFn.from_json(obj["right"]))


class FinRel:
    __slots__ = ("src", "tgt", "pairs", "_hash")

    def __init__(self, src, tgt, pairs):
        ps = frozenset((_label(a), _label(b)) for a, b in pairs)
        for a, b in ps:
            if a not in src or b not in tgt:
                raise InvalidInput("pair (%s,%s) outside src x tgt" % (a, b))
        self.src = src
        self.tgt = tgt
        self.pairs = ps
        self._hash = None

    def holds(self, a, b):
        return (a, b) in self.pairs

    def __le__(self, other):
        return self.pairs <= other.pairs

    def __eq__(self, other):
        return (isinstance(other, FinRel) and self.pairs == other.pairs
                and self.src == other.src and self.tgt == other.tgt)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.src, self.tgt, self.pairs))
        return self._hash

    def __repr__(self):
        return "Rel(%s)" % ",".join("%s~%s" % p for p in sorted(self.pairs))

    def to_json(self):
        return {"src": self.src.to_json(), "tgt": self.tgt.to_json(),
                "pairs": [list(p) for p in sorted(self.pairs)]}

    @classmethod
    def from_json(cls, obj):
        _fields(obj, {"src", "tgt", "pairs"}, "FinRel")
        pairs = obj["pairs"]
        if not isinstance(pairs, list) or any(not isinstance(p, list) or len(p) != 2 for p in pairs):
            raise InvalidInput("FinRel.pairs must be a list of [x, y] pairs")
        return cls(FinSet.from_json(obj["src"]), FinSet.from_json(obj["tgt"]), pairs)


# -- limits and colimits ------------------------------------------------------

def product(a, b):
    elems = [(pair(x, y), x, y) for x in a.elements for y in b.elements]
    elems.sort()
    p = FinSet._trusted([e[0] for e in elems])
    return (p, FinFn(p, a, {e[0]: e[1] for e in elems}),
            FinFn(p, b, {e[0]: e[2] for e in elems}))


def pullback(f, g):
    """Pullback of f: X -> Z and g: Y -> Z; apex {(x,y) : f(x) = g(y)}."""
    if f.cod != g.cod:
        raise InvalidInput("pullback of functions with different codomains")
    xs, ys = f.dom.elements, g.dom.elements
    triples = [(pair(xs[i], ys[j]), i, j)
               for i, j in kernels.matching_pairs(f.idx, g.idx, len(f.cod))]
    triples.sort()
    p = FinSet._trusted([t[0] for t in triples])
    return (p, FinFn.from_indices(p, f.dom, [t[1] for t in triples]),
            FinFn.from_indices(p, g.dom, [t[2] for t in triples]))


def mediating(cone_h, cone_k, q1, q2):
    """The map into a pullback apex induced by a cone (h, k)."""
    lookup = {(a, b): z for z, a, b in zip(q1.dom.elements, q1.images, q2.images)}
    return FinFn(cone_h.dom, q1.dom, {c: lookup[(cone_h(c), cone_k(c))] for c in cone_h.dom})


def coequalizer(f, g):
    if f.dom != g.dom or f.cod != g.cod:
        raise InvalidInput("coequalizer of a non-parallel pair")
    return quotient(f.cod, list(zip(f.images, g.images)))


def quotient(a, pairs):
    """Quotient of a by the equivalence generated by pairs; returns (Q, q)."""
    ix = a.index
    reps = kernels.quotient_classes(len(a), [ix[x] for x, _ in pairs], [ix[y] for _, y in pairs])
    els = a.elements
    q = FinSet._trusted(sorted({els[r] for r in reps}))
    return q, FinFn(a, q, {els[i]: els[r] for i, r in enumerate(reps)})


def reflexive_coequalizer(f, g, s):
    if f.dom != g.dom or f.cod != g.cod:
        raise InvalidInput("reflexive coequalizer of a non-parallel pair")
    if s.dom != f.cod or s.cod != f.dom:
        raise InvalidInput("section has the wrong type")
    if not s.then(f).is_identity() or not s.then(g).is_identity():
        raise InvalidInput("s is not a common section of f and g")
    return coequalizer(f, g)


def image_factorization(f):
    img = FinSet(set(f.images))
    return FinFn(f.dom, img, dict(zip(f.dom.elements, f.images))), FinFn(img, f.cod, {y: y for y in img})


def coproduct(a, b):
    c = FinSet(["L:" + x for x in a] + ["R:" + y for y in b])
    return c, FinFn(a, c, {x: "L:" + x for x in a}), FinFn(b, c, {y: "R:" + y for y in b})


def pairing(f, g, prod=None):
    """<f, g>: C -> A x B for f: C -> A and g: C -> B."""
    if f.dom != g.dom:
        raise InvalidInput("pairing of maps with different domains")
    p = prod or product(f.cod, g.cod)[0]
    return FinFn(f.dom, p, {c: pair(f(c), g(c)) for c in f.dom})


def fn_product(f, g):
    """f x g: A x C -> B x D."""
    src = product(f.dom, g.dom)
    tgt = product(f.cod, g.cod)[0]
    return FinFn(src[0], tgt, {z: pair(f(src[1](z)), g(src[2](z))) for z in src[0]})


def all_functions(a, b):
    """Every function a -> b, in a fixed order."""
    n = len(b)
    if len(a) and not n:
        return
    for combo in itertools.product(range(n), repeat=len(a)):
        yield FinFn.from_indices(a, b, combo)


def count_functions(a, b):
    return len(b) ** len(a)


def inverse(f):
    if not (f.is_injective() and f.is_surjective()):
        raise InvalidInput("not a bijection")
    return FinFn(f.cod, f.dom, {y: x for x, y in zip(f.dom.elements, f.images)})


def canonical_set(n, prefix=""):
    """{0, ..., n-1} (as text labels, optionally prefixed)."""
    return FinSet([prefix + str(i) for i in range(n)])


TERMINAL = FinSet(["*"])
EMPTY = FinSet([])
