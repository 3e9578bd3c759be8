import itertools
import random

import pytest

from dblcat import cartesian
from dblcat.double import Cell
from dblcat.finset import FinFn, FinRel, canonical_set
from dblcat.prof import prof_of_finset
from dblcat.rel import rel_double_category
from dblcat.span import span_double_category
from dblcat.vmat import vmat_double_category

INSTANCES = {"span": span_double_category, "rel": rel_double_category, "vmat": vmat_double_category}


@pytest.mark.parametrize("name", sorted(INSTANCES))
def test_precartesian_and_pseudo(name):
    d = INSTANCES[name]()
    w = cartesian.build_cartesian(d)
    assert cartesian.check_precartesian(d, w, max_size=2, samples=20, seed=1).passed
    assert cartesian.check_pseudo(d, w, max_size=2, samples=20, seed=1).passed


def _all_relations(a, b):
    cells = list(itertools.product(a, b))
    for bits in range(1 << len(cells)):
        yield FinRel(a, b, {p for i, p in enumerate(cells) if bits >> i & 1})


def test_rel_local_product_is_intersection():
    d = rel_double_category()
    w = cartesian.build_cartesian(d)
    for n, k in [(1, 2), (2, 1), (2, 2)]:
        A, B = canonical_set(n), canonical_set(k)
        rels = list(_all_relations(A, B))
        for m, r in itertools.product(rels, repeat=2):
            assert cartesian.rel_local_product_is_intersection(d, w, m, r)


def test_local_product_universal_span():
    d = span_double_category()
    w = cartesian.build_cartesian(d)
    assert cartesian.check_local_products(d, w, max_size=2, samples=6, seed=3).passed


def test_unit_purity_span_rel():
    assert cartesian.check_unit_pure(span_double_category(), max_size=2).passed
    assert cartesian.check_unit_pure(rel_double_category(), max_size=2).passed


def test_vmat_over_finite_sets_is_unit_pure():
    # U_A has a singleton on the diagonal and empty sets elsewhere, so a cell
    # U_A => U_B over (f, g) forces f = g and is U_f.
    assert cartesian.check_unit_pure(vmat_double_category(), max_size=2).passed


def test_prof_not_unit_pure():
    v = cartesian.check_unit_pure(prof_of_finset(), max_size=2)
    assert v.status == "fail" and v.counterexample


class _SwappedPi1(cartesian.SpanCartesian):
    def pi1(self, m, n):
        c = super().pi1(m, n)
        els = list(m.apex)
        if len(els) < 2:
            return c
        swap = {els[0]: els[1], els[1]: els[0]}
        return Cell(c.top, c.bottom, c.left, c.right,
                    FinFn(c.payload.dom, c.payload.cod, {z: swap.get(c.payload(z), c.payload(z)) for z in c.payload.dom}))


class _BadDelta(cartesian.SpanCartesian):
    def delta(self, m):
        c = super().delta(m)
        els = sorted(m.apex)
        if not els:
            return c
        e = els[0]
        return Cell(c.top, c.bottom, c.left, c.right,
                    FinFn(c.payload.dom, c.payload.cod, {z: c.payload(e) for z in c.payload.dom}))


@pytest.mark.parametrize("cls", [_SwappedPi1, _BadDelta])
def test_mutated_structure_cells_fail(cls):
    d = span_double_category()
    v = cartesian.check_precartesian(d, cls(d), max_size=2, samples=40, seed=0)
    assert v.status == "fail"


def test_horizontal_naturality_span():
    d = span_double_category()
    w = cartesian.build_cartesian(d)
    rng = random.Random(0)
    for _ in range(5):
        A, X, B = (d.sample_object(rng, 2) for _ in range(3))
        assert cartesian.check_horizontal_naturality(d, w, d.sample_horizontal(rng, A, X), B).passed
