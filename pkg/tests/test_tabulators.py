import random

import pytest

from dblcat import cartesian, tabulators
from dblcat.finset import FinFn, canonical_set
from dblcat.span import FinSpan, span_double_category


def _random_span(rng, max_size=3):
    A, X = canonical_set(rng.randint(0, max_size)), canonical_set(rng.randint(0, max_size))
    R = canonical_set(rng.randint(0, max_size) if A and X else 0)
    left = FinFn.from_indices(R, A, [rng.randrange(len(A)) for _ in R])
    right = FinFn.from_indices(R, X, [rng.randrange(len(X)) for _ in R])
    return FinSpan(left, right)


@pytest.fixture(scope="module")
def span_w():
    d = span_double_category()
    return d, cartesian.build_cartesian(d)


def test_tabulator_apex_matches_span(span_w):
    d, w = span_w
    rng = random.Random(7)
    for _ in range(20):
        F = _random_span(rng)
        t = tabulators.tabulator(d, w, F)
        assert tabulators.apex_matches(t, F) is not None
        assert tabulators.verify_strong_tabulator(d, t, F).passed


def test_tabulator_universal_small(span_w):
    d, w = span_w
    rng = random.Random(1)
    for _ in range(4):
        F = _random_span(rng, 2)
        t = tabulators.tabulator(d, w, F)
        assert tabulators.verify_tabulator_universal(d, t, F, max_size=2).passed


def test_corrupted_leg_breaks_tabulator(span_w):
    d, w = span_w
    A, X = canonical_set(2), canonical_set(2)
    R = canonical_set(2)
    F = FinSpan(FinFn.identity(R), FinFn.from_indices(R, X, [0, 1]))
    t = tabulators.tabulator(d, w, F)
    swap = FinFn.from_indices(X, X, [1, 0])
    bad = tabulators.corrupt_q2(d, t, swap)
    assert tabulators.apex_matches(bad, F) is None
    assert not tabulators.verify_strong_tabulator(d, bad, F).passed


def test_em_object_universal(span_w):
    d, w = span_w
    rng = random.Random(2)
    F = _random_span(rng, 2)
    p = tabulators.g_of(d, w, F).copointed(d)
    em = tabulators.em_object(d, p)
    assert tabulators.verify_em_universal(d, p, em, max_size=2).passed
    assert tabulators.is_strong_em(d, em, p) is not None
