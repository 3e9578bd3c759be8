import itertools
import json
import random

import pytest

from dblcat import prof
from dblcat.double import Cell
from dblcat.finset import FinFn, InvalidInput

from prof_oracle import agrees


@pytest.fixture(scope="module")
def cats():
    return prof.enumerate_categories(2, 4)


def _brute_monoids(n):
    # identity is element 0; iso classes under permutations fixing it
    others = list(range(1, n))
    seen = set()
    for vals in itertools.product(range(n), repeat=len(others) ** 2):
        t = {(a, b): vals[(a - 1) * len(others) + (b - 1)] for a in others for b in others}
        for a in range(n):
            t[(0, a)] = t[(a, 0)] = a
        if any(t[(t[(a, b)], c)] != t[(a, t[(b, c)])] for a in range(n) for b in range(n) for c in range(n)):
            continue
        keys = []
        for perm in itertools.permutations(others):
            p = dict(zip(others, perm))
            p[0] = 0
            keys.append(tuple(sorted((p[a], p[b], p[v]) for (a, b), v in t.items())))
        seen.add(min(keys))
    return len(seen)


def test_category_counts(cats):
    assert len(cats) == 66
    counts = {}
    for c in cats:
        k = (len(c.objects), len(c.arrows))
        counts[k] = counts.get(k, 0) + 1
    assert counts == {(0, 0): 1, (1, 1): 1, (1, 2): 2, (1, 3): 7, (1, 4): 35,
                      (2, 2): 1, (2, 3): 3, (2, 4): 16}
    assert [len(prof.ProfDouble().objects(n)) for n in range(5)] == [1, 2, 5, 15, 66]


@pytest.mark.parametrize("n,known", [(1, 1), (2, 2), (3, 7), (4, 35)])
def test_monoid_counts_brute_force(cats, n, known):
    assert _brute_monoids(n) == known
    assert sum(1 for c in cats if len(c.objects) == 1 and len(c.arrows) == n) == known


def test_hom_composite_matches_oracle(cats):
    for c in cats:
        h = prof.hom_profunctor(c)
        comp = prof.compose_profunctors(h, h)
        assert agrees(h, h, comp)
        assert len(comp.module.carrier) == len(c.arrows)


def test_random_composites_match_oracle(cats):
    rng = random.Random(11)
    for _ in range(300):
        A, B, C = rng.choice(cats), rng.choice(cats), rng.choice(cats)
        M = prof.random_profunctor(rng, A, B, max_gens=3)
        N = prof.random_profunctor(rng, B, C, max_gens=3)
        assert agrees(M, N, prof.compose_profunctors(M, N))


def test_category_and_profunctor_json_round_trip(cats):
    rng = random.Random(5)
    for c in cats:
        assert prof.InternalCategory.from_json(json.loads(json.dumps(c.to_json()))) == c
        M = prof.random_profunctor(rng, c, c)
        assert prof.Profunctor.from_json(json.loads(json.dumps(M.to_json())), c, c) == M


def test_broken_category_rejected():
    obj = prof.z2().to_json()
    obj["comp"] = [[f, g, "e"] for f, g, _ in obj["comp"]]
    with pytest.raises(InvalidInput):
        prof.InternalCategory.from_json(obj)


def _components(c):
    parent = {x: x for x in c.objects}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x
    for f in c.arrows:
        parent[find(c.src(f))] = find(c.tgt(f))
    return len({find(x) for x in c.objects})


def test_kleisli_is_coequalizer(cats):
    for c in cats:
        k = prof.kleisli_object(c)
        assert len(k.obj) == _components(c)
        ok, _ = prof.verify_kleisli(c, k, max_size=2)
        assert ok


def test_profunctor_module_laws(cats):
    rng = random.Random(3)
    for c in cats[:30]:
        M = prof.random_profunctor(rng, c, c)
        d, s, t, span, rho, lam = prof.profunctor_as_module(M)
        assert all(prof.module_laws(d, s, t, span, rho, lam).values())
        assert prof.module_to_profunctor(c, c, span, rho, lam) == M


def test_corrupted_action_breaks_module_laws():
    c = prof.z2()
    M = prof.hom_profunctor(c)
    d, s, t, span, rho, lam = prof.profunctor_as_module(M)
    swapped = {"e": "c", "c": "e"}
    rho2 = Cell(rho.top, rho.bottom, rho.left, rho.right,
                FinFn(rho.payload.dom, rho.payload.cod, {z: swapped.get(v, v) for z, v in zip(rho.payload.dom.elements, rho.payload.images)}))
    laws = prof.module_laws(d, s, t, span, rho2, lam)
    assert not all(laws.values())


def test_prof_cartesian():
    assert prof.check_prof_cartesian(max_size=2, samples=20).passed
