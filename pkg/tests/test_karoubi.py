import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from dblcat import karoubi as K
from dblcat.finset import FinRel, canonical_set


def _compose_bits(r, s, n):
    # r then s, relations as n*n bit matrices
    out = 0
    for i in range(n):
        for j in range(n):
            if r >> (i * n + j) & 1:
                for k in range(n):
                    if s >> (j * n + k) & 1:
                        out |= 1 << (i * n + k)
    return out


def _brute_counts(n):
    idem = pre = 0
    diag = sum(1 << (i * n + i) for i in range(n))
    for r in range(1 << (n * n)):
        if _compose_bits(r, r, n) == r:
            idem += 1
            if r & diag == diag:
                pre += 1
    return idem, pre


@pytest.fixture(scope="module")
def rel():
    return K.rel_lobicat()


def test_idempotent_and_preorder_counts(rel):
    kb, mb = K.karoubi(rel), K.mod_lobicat(rel)
    frozen = [(1, 1), (2, 1), (11, 4), (123, 29)]
    for n in range(4):
        assert _brute_counts(n) == frozen[n]
        X = canonical_set(n)
        assert (len(kb.objects_on(X)), len(mb.objects_on(X))) == frozen[n]


def test_monads_are_preorders(rel):
    assert K.monads_are_preorders(K.mod_lobicat(rel), max_size=3).passed


def test_idempotent_iff_transitive_interpolative(rel):
    assert K.check_idempotents_interpolative(rel, max_size=3).passed


def test_dense_order_is_idempotent_not_monad(rel):
    # strict order on {0,1}: transitive but 0 < 1 has no interpolant
    X = canonical_set(2)
    lt = FinRel(X, X, {("0", "1")})
    with pytest.raises(ValueError):
        K.Idempotent(rel, X, lt)
    empty = FinRel(X, X, set())
    K.Idempotent(rel, X, empty)
    with pytest.raises(ValueError):
        K.LoMonad(rel, X, empty)


def test_modules_between_monads_are_ideals(rel):
    assert K.check_modules_are_ideals(K.mod_lobicat(rel), max_size=2).passed


def test_identity_module_is_the_idempotent(rel):
    kb = K.karoubi(rel)
    for e in kb.objects(2):
        for m in kb.hom(e, e):
            assert kb.o(kb.identity(e), m) == m == kb.o(m, kb.identity(e))


def test_kar_cartesian_small(rel):
    v = K.kar_cartesian_check(K.karoubi(rel), max_size=2, samples=30, seed=4, base_check=False)
    assert v.passed, v.counterexample


def test_sharp_lemmas(rel):
    kb = K.karoubi(rel)
    assert K.check_sharp_adj(kb, max_size=2).passed
    assert K.check_sharp_iso(kb, max_size=2).passed


class _JoinFormula(K.Karoubi):
    def meet_of_products(self, m, n):
        v = super().meet_of_products(m, n)
        X, Y, A, B = m.src, n.src, m.tgt, n.tgt
        left = self.o(self.p_sharp_star(A, B), m, self.p_sharp(X, Y))
        right = self.o(self.r_sharp_star(A, B), n, self.r_sharp(X, Y))
        return self.module(v.src, v.tgt, FinRel(v.R.src, v.R.tgt, left.R.pairs | right.R.pairs))


def test_wrong_product_formula_detected(rel):
    v = K.check_product_formula(_JoinFormula(rel), max_size=2, samples=60, seed=0)
    assert v.status == "fail"


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 2 ** 32))
def test_generated_module_is_a_module(n, k, seed):
    rel = K.rel_lobicat()
    kb = K.karoubi(rel)
    rng = random.Random(seed)
    x = rng.choice(kb.objects_on(canonical_set(n)))
    a = rng.choice(kb.objects_on(canonical_set(k)))
    m = kb.sample(rng, x, a)
    assert rel.o(a.a, m.R, x.a) == m.R


def test_idempotent_json_round_trip(rel):
    kb = K.karoubi(rel)
    for e in kb.objects(2):
        assert K.Idempotent.from_json(rel, e.to_json()) == e
