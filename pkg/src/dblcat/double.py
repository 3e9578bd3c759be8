"""Generic double categories and the law suite.

Conventions used throughout the package:

* vertical composition `vcomp(f, g)` is diagrammatic: first f, then g;
* horizontal composition `hcomp(M, N)` is diagrammatic too: for M: A -|-> B
  and N: B -|-> C it returns the composite A -|-> C (often written N (.) M);
* `vcompose(a, b)` stacks cell a on top of cell b, `hcompose(a, b)` puts a to
  the left of b;
* the associator goes hcomp(hcomp(M, N), P) -> hcomp(M, hcomp(N, P)),
  `lunitor(M)` is hcomp(M, U_B) -> M and `runitor(M)` is hcomp(U_A, M) -> M.
"""
import itertools
import random

from .verdict import LawReport, Tally


class FrameError(ValueError):
    pass


class UnsupportedInstance(ValueError):
    """The instance lacks a constructor the check needs."""


class Cell:
    __slots__ = ("top", "bottom", "left", "right", "payload", "_hash")

    def __init__(self, top, bottom, left, right, payload=None):
        self.top = top
        self.bottom = bottom
        self.left = left
        self.right = right
        self.payload = payload
        self._hash = None

    @property
    def frame(self):
        return (self.top, self.bottom, self.left, self.right)

    def __eq__(self, other):
        return (isinstance(other, Cell) and self.payload == other.payload
                and self.left == other.left and self.right == other.right
                and self.top == other.top and self.bottom == other.bottom)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.top, self.bottom, self.left, self.right, self.payload))
        return self._hash

    def __repr__(self):
        return "Cell(%r => %r)" % (self.top, self.bottom)


class DoubleCategory:
    """Base presentation. Instances supply objects, arrows, cells, the unit,
    horizontal composition and the coherence witnesses; the structural
    composites below are shared."""

    name = "double"
    fibrant = True

    # -- objects and vertical arrows ----------------------------------------
    def objects(self, max_size):
        raise NotImplementedError

    def sample_object(self, rng, max_size):
        return rng.choice(self.objects(max_size))

    def vsrc(self, f):
        return f.dom

    def vtgt(self, f):
        return f.cod

    def vid(self, a):
        raise NotImplementedError

    def vcomp(self, f, g):
        raise NotImplementedError

    def verticals(self, a, b):
        raise NotImplementedError

    def sample_vertical(self, rng, a, b):
        vs = list(itertools.islice(self.verticals(a, b), 500))
        return rng.choice(vs) if vs else None

    def vertical_out(self, rng, a, max_size):
        """Some vertical arrow out of a, with a random codomain."""
        for _ in range(50):
            b = self.sample_object(rng, max_size)
            f = self.sample_vertical(rng, a, b)
            if f is not None:
                return f
        return self.vid(a)

    # -- horizontal arrows --------------------------------------------------
    def hsrc(self, m):
        raise NotImplementedError

    def htgt(self, m):
        raise NotImplementedError

    def horizontals(self, a, b, cap=200, rng=None):
        raise NotImplementedError

    def sample_horizontal(self, rng, a, b):
        raise NotImplementedError

    def U(self, a):
        raise NotImplementedError

    def hcomp(self, m, n):
        raise NotImplementedError

    # -- cells ----------------------------------------------------------------
    def cells(self, top, bottom, left, right, cap=None):
        """All cells in the frame (at most cap of them)."""
        raise NotImplementedError

    def count_cells(self, top, bottom, left, right):
        """Upper bound on the number of candidate payloads for the frame."""
        return len(self.cells(top, bottom, left, right))

    def valid_cell(self, c):
        raise NotImplementedError

    def random_cell_from(self, rng, top, left, right, max_size=2):
        """Some cell with the given top and verticals (bottom is chosen)."""
        raise NotImplementedError

    def cell_id(self, m):
        raise NotImplementedError

    def U_cell(self, f):
        raise NotImplementedError

    def _vpay(self, a, b):
        raise NotImplementedError

    def _hpay(self, a, b, top, bottom):
        raise NotImplementedError

    def frame_ok(self, top, bottom, left, right):
        return (self.vsrc(left) == self.hsrc(top) and self.vtgt(left) == self.hsrc(bottom)
                and self.vsrc(right) == self.htgt(top) and self.vtgt(right) == self.htgt(bottom))

    def vcompose(self, a, *rest):
        for b in rest:
            if a.bottom != b.top:
                raise FrameError("vertical composite: bottom of upper cell is not top of lower cell")
            a = Cell(a.top, b.bottom, self.vcomp(a.left, b.left), self.vcomp(a.right, b.right),
                     self._vpay(a, b))
        return a

    def hcompose(self, a, *rest):
        for b in rest:
            if a.right != b.left:
                raise FrameError("horizontal composite: shared vertical boundary differs")
            top = self.hcomp(a.top, b.top)
            bottom = self.hcomp(a.bottom, b.bottom)
            a = Cell(top, bottom, a.left, b.right, self._hpay(a, b, top, bottom))
        return a

    def is_globular(self, c):
        return (c.left == self.vid(self.hsrc(c.top)) and c.right == self.vid(self.htgt(c.top)))

    # -- coherence ------------------------------------------------------------
    def associator(self, m, n, p):
        raise NotImplementedError

    def associator_inv(self, m, n, p):
        raise NotImplementedError

    def lunitor(self, m):
        raise NotImplementedError

    def lunitor_inv(self, m):
        raise NotImplementedError

    def runitor(self, m):
        raise NotImplementedError

    def runitor_inv(self, m):
        raise NotImplementedError

    # -- invertibility ------------------------------------------------------
    def inverse_cell(self, c, cap=None):
        """A two-sided inverse of a globular cell, searched among the cells of
        the reversed frame; None if there is none."""
        for d in self.cells(c.bottom, c.top, c.left, c.right, cap=cap):
            if (self.vcompose(c, d) == self.cell_id(c.top)
                    and self.vcompose(d, c) == self.cell_id(c.bottom)):
                return d
        return None

    def iso_horizontal(self, m, n, cap=None):
        """An invertible globular cell m -> n, or None."""
        a, b = self.vid(self.hsrc(m)), self.vid(self.htgt(m))
        if self.hsrc(n) != self.hsrc(m) or self.htgt(n) != self.htgt(m):
            return None
        for c in self.cells(m, n, a, b, cap=cap):
            if self.inverse_cell(c, cap=cap) is not None:
                return c
        return None

    # -- dumps for reports ------------------------------------------------
    def dump(self, x):
        if isinstance(x, Cell):
            return {"top": self.dump(x.top), "bottom": self.dump(x.bottom),
                    "left": self.dump(x.left), "right": self.dump(x.right),
                    "payload": self.dump_payload(x.payload)}
        if hasattr(x, "to_json"):
            return x.to_json()
        return repr(x)

    def dump_payload(self, p):
        if p is None:
            return None
        if hasattr(p, "to_json"):
            return p.to_json()
        if isinstance(p, tuple):
            return [self.dump_payload(q) for q in p]
        return repr(p)


# -- law suite ------------------------------------------------------------------

LAWS = ("pentagon", "triangle", "associator_naturality", "left_unitor_naturality",
        "right_unitor_naturality", "witnesses_globular_invertible", "unit_functoriality",
        "composition_functoriality", "vertical_category", "interchange", "cell_validity")


class _Scenario:
    """Four composable horizontal arrows with three layers of cells below."""

    def __init__(self, d, rng, objs, arrows, max_size):
        self.objs = objs
        self.M = arrows
        self.layers = []
        tops = list(arrows)
        cur = list(objs)
        for _ in range(3):
            vs = [d.vertical_out(rng, a, max_size) for a in cur]
            cells = [d.random_cell_from(rng, tops[i], vs[i], vs[i + 1], max_size)
                     for i in range(len(tops))]
            self.layers.append((vs, cells))
            tops = [c.bottom for c in cells]
            cur = [d.vtgt(f) for f in vs]

    def dump(self, d, k=4):
        return {"horizontals": [d.dump(m) for m in self.M[:k]]}


def _pentagon(d, sc):
    m1, m2, m3, m4 = sc.M
    h = d.hcomp
    lhs = d.vcompose(d.associator(h(m1, m2), m3, m4), d.associator(m1, m2, h(m3, m4)))
    rhs = d.vcompose(d.hcompose(d.associator(m1, m2, m3), d.cell_id(m4)),
                     d.associator(m1, h(m2, m3), m4),
                     d.hcompose(d.cell_id(m1), d.associator(m2, m3, m4)))
    return lhs == rhs


def _triangle(d, sc):
    m1, m2 = sc.M[0], sc.M[1]
    lhs = d.vcompose(d.associator(m1, d.U(d.htgt(m1)), m2), d.hcompose(d.cell_id(m1), d.runitor(m2)))
    return lhs == d.hcompose(d.lunitor(m1), d.cell_id(m2))


def _assoc_nat(d, sc):
    a1, a2, a3 = sc.layers[0][1][:3]
    m1, m2, m3 = sc.M[:3]
    lhs = d.vcompose(d.hcompose(d.hcompose(a1, a2), a3), d.associator(a1.bottom, a2.bottom, a3.bottom))
    rhs = d.vcompose(d.associator(m1, m2, m3), d.hcompose(a1, d.hcompose(a2, a3)))
    return lhs == rhs


def _lunitor_nat(d, sc):
    a1 = sc.layers[0][1][0]
    lhs = d.vcompose(d.hcompose(a1, d.U_cell(a1.right)), d.lunitor(a1.bottom))
    return lhs == d.vcompose(d.lunitor(a1.top), a1)


def _runitor_nat(d, sc):
    a1 = sc.layers[0][1][0]
    lhs = d.vcompose(d.hcompose(d.U_cell(a1.left), a1), d.runitor(a1.bottom))
    return lhs == d.vcompose(d.runitor(a1.top), a1)


def _witnesses(d, sc):
    m1, m2, m3 = sc.M[:3]
    for w, wi in ((d.associator(m1, m2, m3), d.associator_inv(m1, m2, m3)),
                  (d.lunitor(m1), d.lunitor_inv(m1)), (d.runitor(m1), d.runitor_inv(m1))):
        if not (d.is_globular(w) and d.is_globular(wi) and d.valid_cell(w) and d.valid_cell(wi)):
            return False
        if d.vcompose(w, wi) != d.cell_id(w.top) or d.vcompose(wi, w) != d.cell_id(w.bottom):
            return False
    return True


def _unit_functor(d, sc):
    A = sc.objs[0]
    f0, g0 = sc.layers[0][0][0], sc.layers[1][0][0]
    return (d.hsrc(d.U(A)) == A and d.htgt(d.U(A)) == A
            and d.U_cell(d.vid(A)) == d.cell_id(d.U(A))
            and d.U_cell(d.vcomp(f0, g0)) == d.vcompose(d.U_cell(f0), d.U_cell(g0))
            and d.valid_cell(d.U_cell(f0)))


def _composition_functor(d, sc):
    m1, m2 = sc.M[:2]
    a1, a2 = sc.layers[0][1][:2]
    m12 = d.hcomp(m1, m2)
    ok = (d.hsrc(m12) == d.hsrc(m1) and d.htgt(m12) == d.htgt(m2)
          and d.hcompose(d.cell_id(m1), d.cell_id(m2)) == d.cell_id(m12))
    ac = d.hcompose(a1, a2)
    return ok and ac.left == a1.left and ac.right == a2.right and d.valid_cell(ac)


def _vertical_category(d, sc):
    a1, b1, c1 = (layer[1][0] for layer in sc.layers)
    ok = (d.vcompose(d.vcompose(a1, b1), c1) == d.vcompose(a1, d.vcompose(b1, c1))
          and d.vcompose(d.cell_id(a1.top), a1) == a1 and d.vcompose(a1, d.cell_id(a1.bottom)) == a1)
    ab = d.vcompose(a1, b1)
    ok = ok and ab.left == d.vcomp(a1.left, b1.left) and ab.right == d.vcomp(a1.right, b1.right)
    f0 = sc.layers[0][0][0]
    return ok and d.vcomp(d.vid(d.vsrc(f0)), f0) == f0 and d.vcomp(f0, d.vid(d.vtgt(f0))) == f0


def _interchange(d, sc):
    a, b = sc.layers[0][1], sc.layers[1][1]
    lhs = d.hcompose(d.vcompose(a[0], b[0]), d.vcompose(a[1], b[1]))
    rhs = d.vcompose(d.hcompose(a[0], a[1]), d.hcompose(b[0], b[1]))
    return lhs == rhs


def _cell_validity(d, sc):
    return all(d.valid_cell(x) for layer in sc.layers for x in layer[1])


_LAW_FUNCS = dict(zip(LAWS, (_pentagon, _triangle, _assoc_nat, _lunitor_nat, _runitor_nat,
                             _witnesses, _unit_functor, _composition_functor,
                             _vertical_category, _interchange, _cell_validity)))


def _law_checks(d, sc, tallies):
    for name, fn in _LAW_FUNCS.items():
        try:
            ok, err = fn(d, sc), None
        except (ValueError, KeyError) as e:
            ok, err = False, "%s: %s" % (type(e).__name__, e)

        def witness():
            w = sc.dump(d)
            if err:
                w["error"] = err
            return w
        tallies[name].record(ok, witness)


def check_laws(d, max_size=2, samples=200, seed=0, frame_cap=12, sample_size=3):
    """Run the law suite: every tuple of objects of size <= max_size (with up
    to frame_cap horizontal choices per tuple), then `samples` seeded frames
    over objects of size sample_size. Returns a list of LawReports."""
    rng = random.Random(seed)
    tallies = {name: Tally(name, LawReport) for name in LAWS}
    objs = d.objects(max_size)
    for tup in itertools.product(objs, repeat=5):
        homs = [d.horizontals(tup[i], tup[i + 1], cap=frame_cap, rng=rng) for i in range(4)]
        if any(not hs for hs in homs):
            continue
        total = 1
        for hs in homs:
            total *= len(hs)
        if total <= frame_cap:
            combos = list(itertools.product(*homs))
        else:
            combos = [tuple(rng.choice(hs) for hs in homs) for _ in range(frame_cap)]
        for arrows in combos:
            _law_checks(d, _Scenario(d, rng, tup, arrows, max_size), tallies)
    big = [o for o in d.objects(sample_size) if _size(o) == sample_size] or d.objects(sample_size)
    for _ in range(samples):
        tup = [rng.choice(big) for _ in range(5)]
        arrows = [d.sample_horizontal(rng, tup[i], tup[i + 1]) for i in range(4)]
        _law_checks(d, _Scenario(d, rng, tup, arrows, sample_size), tallies)
    return [tallies[name].verdict() for name in LAWS]


def _size(o):
    try:
        return len(o)
    except TypeError:
        return 0
