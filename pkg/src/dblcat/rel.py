"""The double category of finite sets, functions and relations.

A cell in the frame (R, S, f, g) is a bare witness: it exists iff
a R b implies f(a) S g(b), and then it is unique. Composition of relations
is strictly associative and unital, so the coherence cells are identities.
"""
import functools
import itertools

from .double import Cell, DoubleCategory
from .finset import FinFn, FinRel, all_functions, canonical_set


@functools.lru_cache(maxsize=200000)
def compose_rels(r, s):
    """r then s: a (r;s) c iff some b has a r b and b s c."""
    by_mid = {}
    for b, c in s.pairs:
        by_mid.setdefault(b, []).append(c)
    return FinRel(r.src, s.tgt, {(a, c) for a, b in r.pairs for c in by_mid.get(b, ())})


def diagonal(a):
    return FinRel(a, a, {(x, x) for x in a})


def converse(r):
    return FinRel(r.tgt, r.src, {(b, a) for a, b in r.pairs})


def graph(f):
    return FinRel(f.dom, f.cod, set(zip(f.dom.elements, f.images)))


def holds_over(r, s, f, g):
    return all((f(a), g(b)) in s.pairs for a, b in r.pairs)


def all_relations(a, b):
    cells = [(x, y) for x in a for y in b]
    for bits in itertools.product((0, 1), repeat=len(cells)):
        yield FinRel(a, b, {c for c, bit in zip(cells, bits) if bit})


class RelDouble(DoubleCategory):
    name = "rel"

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
        n = len(a) * len(b)
        if 2 ** n <= cap:
            return list(all_relations(a, b))
        return [self.sample_horizontal(rng, a, b) for _ in range(cap)]

    def sample_horizontal(self, rng, a, b):
        return FinRel(a, b, {(x, y) for x in a for y in b if rng.random() < 0.5})

    def U(self, a):
        return diagonal(a)

    def hcomp(self, m, n):
        return compose_rels(m, n)

    def cells(self, top, bottom, left, right, cap=None):
        if holds_over(top, bottom, left, right):
            return [Cell(top, bottom, left, right, None)]
        return []

    def count_cells(self, top, bottom, left, right):
        return 1 if holds_over(top, bottom, left, right) else 0

    def valid_cell(self, c):
        return (c.payload is None and self.frame_ok(c.top, c.bottom, c.left, c.right)
                and holds_over(c.top, c.bottom, c.left, c.right))

    def random_cell_from(self, rng, top, left, right, max_size=2):
        img = {(left(a), right(b)) for a, b in top.pairs}
        extra = {(x, y) for x in left.cod for y in right.cod if rng.random() < 0.25}
        return Cell(top, FinRel(left.cod, right.cod, img | extra), left, right, None)

    def cell_id(self, m):
        return Cell(m, m, FinFn.identity(m.src), FinFn.identity(m.tgt), None)

    def U_cell(self, f):
        return Cell(diagonal(f.dom), diagonal(f.cod), f, f, None)

    def _vpay(self, a, b):
        return None

    def _hpay(self, a, b, top, bottom):
        return None

    def _glob(self, top, bottom):
        return Cell(top, bottom, FinFn.identity(top.src), FinFn.identity(top.tgt), None)

    def associator(self, m, n, p):
        return self._glob(self.hcomp(self.hcomp(m, n), p), self.hcomp(m, self.hcomp(n, p)))

    def associator_inv(self, m, n, p):
        return self._glob(self.hcomp(m, self.hcomp(n, p)), self.hcomp(self.hcomp(m, n), p))

    def lunitor(self, m):
        return self._glob(self.hcomp(m, self.U(m.tgt)), m)

    def lunitor_inv(self, m):
        return self._glob(m, self.hcomp(m, self.U(m.tgt)))

    def runitor(self, m):
        return self._glob(self.hcomp(self.U(m.src), m), m)

    def runitor_inv(self, m):
        return self._glob(m, self.hcomp(self.U(m.src), m))

    def companion(self, f):
        fs = graph(f)
        return (fs, Cell(fs, self.U(f.cod), f, FinFn.identity(f.cod), None),
                Cell(self.U(f.dom), fs, FinFn.identity(f.dom), f, None))

    def conjoint(self, f):
        fc = converse(graph(f))
        return (fc, Cell(fc, self.U(f.cod), FinFn.identity(f.cod), f, None),
                Cell(self.U(f.dom), fc, f, FinFn.identity(f.dom), None))

    def iso_horizontal(self, m, n, cap=None):
        if m.src == n.src and m.tgt == n.tgt and m.pairs == n.pairs:
            return self.cell_id(m)
        return None


def rel_double_category():
    return RelDouble()
