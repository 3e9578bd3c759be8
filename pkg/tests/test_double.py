import random

import pytest

from dblcat.double import FrameError, check_laws
from dblcat.finset import FinFn, canonical_set
from dblcat.prof import prof_of_finset
from dblcat.rel import rel_double_category
from dblcat.span import SpanDouble, span_double_category
from dblcat.vmat import vmat_double_category

INSTANCES = {"span": span_double_category, "rel": rel_double_category, "vmat": vmat_double_category}


@pytest.mark.parametrize("name", sorted(INSTANCES))
def test_law_suite_small_budget(name):
    reports = check_laws(INSTANCES[name](), max_size=1, samples=20, seed=3, sample_size=2)
    assert {r.name for r in reports} >= {"pentagon", "triangle", "interchange", "unit_functoriality",
                                        "composition_functoriality"}
    bad = [(r.name, r.counterexample) for r in reports if not r.passed]
    assert not bad


def test_law_suite_on_profunctors():
    reports = check_laws(prof_of_finset(), max_size=1, samples=10, seed=0, sample_size=2)
    assert all(r.passed for r in reports)


def test_corrupted_associator_is_detected():
    reports = {r.name: r for r in check_laws(SpanDouble(corrupt="associator"), max_size=2, samples=0)}
    assert not reports["pentagon"].passed and reports["pentagon"].counterexample
    assert not reports["associator_naturality"].passed
    assert reports["interchange"].passed


def test_vertical_composite_checks_the_frame():
    d = span_double_category()
    a, b = canonical_set(1), canonical_set(2)
    c1 = d.cell_id(d.U(a))
    c2 = d.cell_id(d.U(b))
    with pytest.raises(FrameError):
        d.vcompose(c1, c2)


def test_interchange_on_unit_cells():
    d = span_double_category()
    rng = random.Random(0)
    a, b, c = canonical_set(2), canonical_set(2), canonical_set(1)
    f = FinFn.from_indices(a, b, [1, 0])
    g = FinFn.from_indices(b, c, [0, 0])
    lhs = d.hcompose(d.vcompose(d.U_cell(f), d.U_cell(g)), d.vcompose(d.U_cell(f), d.U_cell(g)))
    rhs = d.vcompose(d.hcompose(d.U_cell(f), d.U_cell(f)), d.hcompose(d.U_cell(g), d.U_cell(g)))
    assert lhs == rhs
    m = d.sample_horizontal(rng, a, a)
    assert d.vcompose(d.cell_id(m), d.cell_id(m)) == d.cell_id(m)
