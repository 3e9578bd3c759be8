import itertools
import json

import pytest
from hypothesis import given, settings, strategies as st

from dblcat import _pykernels, kernels
from dblcat.finset import (FinFn, FinRel, FinSet, FinSpan, InvalidInput, all_functions, canonical_set,
                           coequalizer, count_functions, product, pullback, quotient)


def fn(dom, cod, images):
    return FinFn.from_indices(dom, cod, images)


@st.composite
def functions(draw, max_dom=4, max_cod=4, cod=None):
    a = canonical_set(draw(st.integers(0, max_dom)), "a")
    b = cod if cod is not None else canonical_set(draw(st.integers(1, max_cod)), "b")
    if not len(b):
        a = canonical_set(0, "a")
    idx = draw(st.lists(st.integers(0, max(len(b) - 1, 0)), min_size=len(a), max_size=len(a)))
    return fn(a, b, idx)


def components(n, edges):
    """Connected components by breadth-first search (oracle)."""
    adj = {i: set() for i in range(n)}
    for x, y in edges:
        adj[x].add(y)
        adj[y].add(x)
    comp = {}
    for s in range(n):
        if s in comp:
            continue
        stack = [s]
        comp[s] = s
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in comp:
                    comp[y] = s
                    stack.append(y)
    return comp


def test_finset_rejects_duplicates():
    with pytest.raises(InvalidInput):
        FinSet(["x", "x"])


def test_finfn_rejects_partial_and_foreign_values():
    a, b = canonical_set(2), canonical_set(1)
    with pytest.raises(InvalidInput):
        FinFn(a, b, {"0": "0"})
    with pytest.raises(InvalidInput):
        FinFn(a, b, {"0": "0", "1": "9"})


def test_json_round_trips():
    a, b = canonical_set(3), canonical_set(2)
    f = fn(a, b, [0, 1, 1])
    s = FinSpan(f, fn(a, a, [2, 0, 1]))
    r = FinRel(a, b, {("0", "1"), ("2", "0")})
    for x in (a, f, s, r):
        assert type(x).from_json(json.loads(json.dumps(x.to_json()))) == x


def test_json_rejects_unknown_fields():
    with pytest.raises(InvalidInput):
        FinSet.from_json({"elements": ["a"], "extra": 1})


def test_count_functions_matches_enumeration():
    for n in range(4):
        for m in range(4):
            a, b = canonical_set(n), canonical_set(m)
            assert len(list(all_functions(a, b))) == count_functions(a, b) == m ** n


@settings(max_examples=60, deadline=None)
@given(functions(), st.data())
def test_pullback_is_the_matching_pairs(f, data):
    g = data.draw(functions(cod=f.cod))
    p, q1, q2 = pullback(f, g)
    brute = {(x, y) for x in f.dom for y in g.dom if f(x) == g(y)}
    got = {(q1(z), q2(z)) for z in p}
    assert got == brute and len(p) == len(brute)
    assert q1.then(f) == q2.then(g)


@settings(max_examples=60, deadline=None)
@given(functions(), st.data())
def test_coequalizer_matches_components(f, data):
    g = fn(f.dom, f.cod, data.draw(st.lists(st.integers(0, len(f.cod) - 1),
                                            min_size=len(f.dom), max_size=len(f.dom))))
    q_obj, q = coequalizer(f, g)
    comp = components(len(f.cod), list(zip(f.idx, g.idx)))
    els = f.cod.elements
    for i, j in itertools.combinations(range(len(els)), 2):
        assert (q(els[i]) == q(els[j])) == (comp[i] == comp[j])
    assert len(q_obj) == len(set(comp.values()))
    assert f.then(q) == g.then(q)


def test_quotient_labels_are_least_representatives():
    a = canonical_set(4)
    _, q = quotient(a, [("3", "1"), ("2", "3")])
    assert [q(x) for x in a] == ["0", "1", "1", "1"]


def test_product_projections():
    a, b = canonical_set(2), canonical_set(3)
    p, p1, p2 = product(a, b)
    assert len(p) == 6
    assert {(p1(z), p2(z)) for z in p} == set(itertools.product(a, b))


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(0, 5), max_size=12), st.lists(st.integers(0, 5), max_size=12))
def test_kernels_agree_with_pure_python(xs, ys):
    assert kernels.compose_idx(list(xs), list(range(6))) == _pykernels.compose_idx(list(xs), list(range(6)))
    assert sorted(kernels.matching_pairs(list(xs), list(ys), 6)) == sorted(_pykernels.matching_pairs(xs, ys, 6))
    k = min(len(xs), len(ys))
    assert list(kernels.quotient_classes(6, list(xs[:k]), list(ys[:k]))) == \
        _pykernels.quotient_classes(6, xs[:k], ys[:k])
    assert [list(b) for b in kernels.fibers_idx(list(xs), 6)] == _pykernels.fibers_idx(xs, 6)


@settings(max_examples=60, deadline=None)
@given(functions(max_cod=3), st.data())
def test_composition_is_associative(f, data):
    g = data.draw(functions(cod=canonical_set(data.draw(st.integers(1, 3)), "c")).map(
        lambda h: fn(f.cod, h.cod, [data.draw(st.integers(0, len(h.cod) - 1)) for _ in f.cod])))
    h = fn(g.cod, canonical_set(2, "d"), [data.draw(st.integers(0, 1)) for _ in g.cod])
    assert f.then(g).then(h) == f.then(g.then(h))
    assert f.then(FinFn.identity(f.cod)) == f == FinFn.identity(f.dom).then(f)
