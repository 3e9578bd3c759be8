import itertools

import pytest

from dblcat import equivalence
from dblcat.finset import FinFn, all_functions, canonical_set
from dblcat.prof import prof_of_finset
from dblcat.span import span_double_category


def _brute_pullback_size(f, g):
    return sum(1 for a in f.dom for b in g.dom if f(a) == g(b))


def test_vertical_pullback_matches_brute_force():
    d = span_double_category()
    for f, g in equivalence.cospans(d, 2):
        P, q1, q2 = equivalence.vertical_pullback(d, f, g)
        assert len(P) == _brute_pullback_size(f, g)
        assert equivalence.is_pullback(d, q1, q2, f, g) is None


def test_non_pullback_square_rejected():
    d = span_double_category()
    one, two = canonical_set(1), canonical_set(2)
    f = g = FinFn.from_indices(two, one, [0, 0])
    q = FinFn.from_indices(one, two, [0])
    with pytest.raises(equivalence.NotAPullback):
        equivalence.beck_chevalley(d, q, q, f, g)


def test_beck_chevalley_span_exhaustive_small():
    d = span_double_category()
    v = equivalence.check_beck_chevalley(d, max_size=2)
    assert v.passed and v.checked == 59 and v.exhaustive


def test_beck_chevalley_fails_in_prof():
    v = equivalence.check_beck_chevalley(prof_of_finset(), max_size=2, cap=60)
    assert v.status == "fail"


def test_characterization_span_small():
    rep = equivalence.characterization_report(span_double_category(), budget=2, samples=10)
    assert rep["condition_2"]["status"] == "pass"
    assert rep["condition_3"]["status"] == "pass"
    assert rep["agree"]
