import pytest

from dblcat import fibrancy
from dblcat.double import Cell
from dblcat.finset import FinFn, canonical_set
from dblcat.prof import prof_of_finset, z2, discrete_category, Functor
from dblcat.rel import rel_double_category
from dblcat.span import span_double_category
from dblcat.vmat import vmat_double_category

INSTANCES = {"span": span_double_category, "rel": rel_double_category, "vmat": vmat_double_category}


@pytest.mark.parametrize("name", sorted(INSTANCES))
@pytest.mark.parametrize("check", ["companions", "adjunction"])
def test_fibrancy_families(name, check):
    v = fibrancy.check_fibrancy(INSTANCES[name](), max_size=2, check=check)
    assert v.passed, v.counterexample


@pytest.mark.parametrize("name", sorted(INSTANCES))
def test_fillings_are_cartesian(name):
    v = fibrancy.check_fibrancy(INSTANCES[name](), max_size=1, check="fillings", cart_size=1)
    assert v.status != "fail", v.counterexample


def test_span_companion_is_the_graph_span():
    d = span_double_category()
    f = FinFn.from_indices(canonical_set(3), canonical_set(2), [0, 1, 1])
    c = fibrancy.companion(d, f)
    assert c.star.left == FinFn.identity(f.dom) and c.star.right == f
    assert c.conj.left == f and c.conj.right == FinFn.identity(f.dom)


def test_corrupted_binding_cell_is_detected():
    d = span_double_category()
    f = FinFn.from_indices(canonical_set(2), canonical_set(2), [0, 0])
    c = fibrancy.companion(d, f)
    low = c.star_lower
    c.star_lower = Cell(low.top, low.bottom, low.left, low.right,
                        FinFn.from_indices(low.payload.dom, low.payload.cod, [1, 0]))
    verdicts = {v.name: v for v in fibrancy.check_binding(d, c)}
    assert not verdicts["companion_horizontal"].passed
    assert verdicts["conjoint_vertical"].passed
    assert not verdicts["binding_cells_valid"].passed


def test_prof_companions_of_functors():
    d = prof_of_finset()
    m = z2()
    flip = Functor(m, m, FinFn.identity(m.objects), FinFn(m.arrows, m.arrows, {"e": "e", "c": "c"}))
    assert fibrancy.verify_companion_adjunction(d, flip).passed
    one = discrete_category(canonical_set(1))
    for f in d.verticals(one, m):
        assert all(v.passed for v in fibrancy.check_binding(d, fibrancy.companion(d, f)))
