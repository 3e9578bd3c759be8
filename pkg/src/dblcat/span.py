"""The double category Span(FinSet)."""
import functools
import itertools

from .double import Cell, DoubleCategory
from .finset import (FinFn, FinSet, FinSpan, InvalidInput, all_functions, canonical_set, inverse, pair,
                     pullback)


@functools.lru_cache(maxsize=200000)
def compose_spans(m, n):
    """Composite of m: A -|-> B and n: B -|-> C with the pullback projections."""
    if m.tgt != n.src:
        raise InvalidInput("spans are not composable")
    p, q1, q2 = pullback(m.right, n.left)
    return FinSpan(q1.then(m.left), q2.then(n.right)), q1, q2


def identity_span(a):
    i = FinFn.identity(a)
    return FinSpan(i, i)


def span_from_pairs(a, b, pairs, prefix="r"):
    """Span whose apex element k sits over pairs[k]."""
    width = len(str(max(len(pairs) - 1, 0)))
    apex = FinSet([prefix + str(k).zfill(width) for k in range(len(pairs))])
    els = [prefix + str(k).zfill(width) for k in range(len(pairs))]
    return FinSpan(FinFn(apex, a, {e: p[0] for e, p in zip(els, pairs)}),
                   FinFn(apex, b, {e: p[1] for e, p in zip(els, pairs)}))


def span_cell_candidates(top, bottom, f, g):
    """For each apex element of top, the apex elements of bottom it may go to."""
    fib = {}
    for s, x, y in zip(bottom.apex.elements, bottom.left.images, bottom.right.images):
        fib.setdefault((x, y), []).append(s)
    return [fib.get((f(x), g(y)), []) for x, y in zip(top.left.images, top.right.images)]


class SpanDouble(DoubleCategory):
    name = "span"

    def __init__(self, apex_max=2, corrupt=None):
        self.apex_max = apex_max
        self.corrupt = corrupt

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
        """Spans up to apex relabelling with apex size <= apex_max."""
        cells = [(x, y) for x in a for y in b]
        out = []
        for k in range(self.apex_max + 1):
            for combo in itertools.combinations_with_replacement(cells, k):
                out.append(span_from_pairs(a, b, list(combo)))
        if len(out) > cap:
            out = rng.sample(out, cap) if rng else out[:cap]
        return out

    def sample_horizontal(self, rng, a, b, apex_max=3):
        cells = [(x, y) for x in a for y in b]
        if not cells:
            return span_from_pairs(a, b, [])
        k = rng.randint(0, apex_max)
        return span_from_pairs(a, b, [rng.choice(cells) for _ in range(k)])

    def U(self, a):
        return identity_span(a)

    def hcomp(self, m, n):
        return compose_spans(m, n)[0]

    # cells: payload is the apex function
    def cells(self, top, bottom, left, right, cap=None):
        cands = span_cell_candidates(top, bottom, left, right)
        out = []
        for combo in itertools.product(*cands):
            out.append(Cell(top, bottom, left, right, FinFn(top.apex, bottom.apex, dict(zip(top.apex.elements, combo)))))
            if cap is not None and len(out) >= cap:
                break
        return out

    def count_cells(self, top, bottom, left, right):
        n = 1
        for c in span_cell_candidates(top, bottom, left, right):
            n *= len(c)
        return n

    def make_cell(self, top, bottom, left, right, phi):
        return Cell(top, bottom, left, right, phi)

    def valid_cell(self, c):
        phi = c.payload
        if not self.frame_ok(c.top, c.bottom, c.left, c.right):
            return False
        if phi.dom != c.top.apex or phi.cod != c.bottom.apex:
            return False
        return (phi.then(c.bottom.left) == c.top.left.then(c.left)
                and phi.then(c.bottom.right) == c.top.right.then(c.right))

    def random_cell_from(self, rng, top, left, right, max_size=2):
        groups = {}
        for r, x, y in zip(top.apex.elements, top.left.images, top.right.images):
            groups.setdefault((left(x), right(y)), []).append(r)
        pairs, phi = [], {}
        for key in sorted(groups):
            members = groups[key]
            k = rng.randint(1, len(members))
            base = len(pairs)
            pairs.extend([key] * k)
            for r in members:
                phi[r] = base + rng.randrange(k)
        C, D = left.cod, right.cod
        extra = [(x, y) for x in C for y in D]
        if extra:
            pairs.extend(rng.choice(extra) for _ in range(rng.randint(0, 1)))
        bottom = span_from_pairs(C, D, pairs, prefix="s")
        els = bottom.apex.elements
        return Cell(top, bottom, left, right, FinFn(top.apex, bottom.apex, {r: els[i] for r, i in phi.items()}))

    def cell_id(self, m):
        i = FinFn.identity(m.left.cod)
        j = FinFn.identity(m.right.cod)
        return Cell(m, m, i, j, FinFn.identity(m.apex))

    def U_cell(self, f):
        return Cell(self.U(f.dom), self.U(f.cod), f, f, f)

    def _vpay(self, a, b):
        return a.payload.then(b.payload)

    def _hpay(self, a, b, top, bottom):
        _, q1, q2 = compose_spans(a.top, b.top)
        pa, pb = a.payload, b.payload
        return FinFn(top.apex, bottom.apex,
                     {z: pair(pa(x), pb(y)) for z, x, y in zip(q1.dom.elements, q1.images, q2.images)})

    # coherence: re-bracketing bijections
    def _triples(self, m, n, p, left_nested):
        if left_nested:
            mn, a1, a2 = compose_spans(m, n)
            whole, b1, b2 = compose_spans(mn, p)
            return whole, {z: (a1(b1(z)), a2(b1(z)), b2(z)) for z in whole.apex}
        np_, a1, a2 = compose_spans(n, p)
        whole, b1, b2 = compose_spans(m, np_)
        return whole, {z: (b1(z), a1(b2(z)), a2(b2(z))) for z in whole.apex}

    def _rebracket(self, src, srct, dst, dstt):
        back = {v: k for k, v in dstt.items()}
        phi = {z: back[t] for z, t in srct.items()}
        if self.corrupt == "associator" and len(phi) >= 2:
            ks = sorted(phi)
            phi[ks[0]], phi[ks[1]] = phi[ks[1]], phi[ks[0]]
        return FinFn(src.apex, dst.apex, phi)

    def associator(self, m, n, p):
        l, lt = self._triples(m, n, p, True)
        r, rt = self._triples(m, n, p, False)
        return Cell(l, r, FinFn.identity(m.src), FinFn.identity(p.tgt), self._rebracket(l, lt, r, rt))

    def associator_inv(self, m, n, p):
        l, lt = self._triples(m, n, p, True)
        r, rt = self._triples(m, n, p, False)
        back = {v: k for k, v in lt.items()}
        return Cell(r, l, FinFn.identity(m.src), FinFn.identity(p.tgt),
                    FinFn(r.apex, l.apex, {z: back[t] for z, t in rt.items()}))

    def lunitor(self, m):
        whole, q1, _ = compose_spans(m, self.U(m.tgt))
        return Cell(whole, m, FinFn.identity(m.src), FinFn.identity(m.tgt), q1)

    def lunitor_inv(self, m):
        whole, _, _ = compose_spans(m, self.U(m.tgt))
        return Cell(m, whole, FinFn.identity(m.src), FinFn.identity(m.tgt),
                    FinFn(m.apex, whole.apex, {r: pair(r, m.right(r)) for r in m.apex}))

    def runitor(self, m):
        whole, _, q2 = compose_spans(self.U(m.src), m)
        return Cell(whole, m, FinFn.identity(m.src), FinFn.identity(m.tgt), q2)

    def runitor_inv(self, m):
        whole, _, _ = compose_spans(self.U(m.src), m)
        return Cell(m, whole, FinFn.identity(m.src), FinFn.identity(m.tgt),
                    FinFn(m.apex, whole.apex, {r: pair(m.left(r), r) for r in m.apex}))

    # companions and conjoints: f_* = (1, A, f), f^* = (f, A, 1)
    def companion(self, f):
        a, b = f.dom, f.cod
        fs = FinSpan(FinFn.identity(a), f)
        upper = Cell(fs, self.U(b), f, FinFn.identity(b), f)
        lower = Cell(self.U(a), fs, FinFn.identity(a), f, FinFn.identity(a))
        return fs, upper, lower

    def conjoint(self, f):
        a, b = f.dom, f.cod
        fc = FinSpan(f, FinFn.identity(a))
        upper = Cell(fc, self.U(b), FinFn.identity(b), f, f)
        lower = Cell(self.U(a), fc, f, FinFn.identity(a), FinFn.identity(a))
        return fc, upper, lower

    def iso_horizontal(self, m, n, cap=None):
        # a globular iso of spans is a bijection of apexes over the legs
        # match the fibres over each pair of endpoints in order
        if m.src != n.src or m.tgt != n.tgt or len(m.apex) != len(n.apex):
            return None
        fib = {}
        for s, x, y in zip(n.apex.elements, n.left.images, n.right.images):
            fib.setdefault((x, y), []).append(s)
        phi = {}
        for r, x, y in zip(m.apex.elements, m.left.images, m.right.images):
            bucket = fib.get((x, y))
            if not bucket:
                return None
            phi[r] = bucket.pop(0)
        return Cell(m, n, FinFn.identity(m.src), FinFn.identity(m.tgt), FinFn(m.apex, n.apex, phi))

    def inverse_cell(self, c, cap=None):
        # the only candidate is the inverse function
        phi = c.payload
        if not (phi.is_injective() and phi.is_surjective()):
            return None
        d = Cell(c.bottom, c.top, c.left, c.right, inverse(phi))
        if not self.valid_cell(d):
            return None
        if self.vcompose(c, d) == self.cell_id(c.top) and self.vcompose(d, c) == self.cell_id(c.bottom):
            return d
        return None


def span_double_category(**kw):
    return SpanDouble(**kw)
