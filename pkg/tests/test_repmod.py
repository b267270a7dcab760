import random

import pytest
from hypothesis import given, settings, strategies as st

from clusterchar.errors import HypothesisViolated
from clusterchar.exactalg import GF, QQ
from clusterchar.quiver import ExchangeQuiver
from clusterchar.repmod import (
    Rep,
    ar_translate,
    ar_translate_inverse,
    count_subreps,
    direct_sum,
    dim_vectors_below,
    euler_form,
    ext_dim,
    ext_space,
    grassmannian_euler,
    hom_dim,
    indecomposables,
    is_isomorphic,
    middle_term,
    quiver_arrows,
)
from oracles import brute_hom_count_f2, brute_subrep_count, interval_module_dims

A2 = ((0, 1),)
P1 = Rep(A2, (1, 1), [[[1]]])
S1 = Rep.simple(A2, 2, 0)
S2 = Rep.simple(A2, 2, 1)
D4_SINK = quiver_arrows(ExchangeQuiver.from_arrows(4, [(0, 1, 1), (2, 1, 1), (3, 1, 1)]))


def test_hom_projective_to_simple():
    assert hom_dim(P1, S2) == 0
    assert hom_dim(S2, P1) == 1
    # oracle: count all morphisms over F_2
    assert brute_hom_count_f2(P1.dims, [[[1]]], S2.dims, [[]], A2) == 2 ** hom_dim(P1, S2)
    assert brute_hom_count_f2(S2.dims, [[]], P1.dims, [[[1]]], A2) == 2 ** hom_dim(S2, P1)


def test_hom_between_simples():
    assert hom_dim(S1, S2) == 0


def test_hom_to_self_nonzero():
    for x in (P1, S1, S2):
        assert hom_dim(x, x) >= 1


def test_ext_simples():
    assert ext_dim(S1, S2) == 1
    assert ext_dim(S2, S1) == 0
    assert euler_form(A2, (1, 0), (0, 1)) == -1


def test_ext_from_projective_vanishes():
    for y in (P1, S1, S2):
        assert ext_dim(P1, y) == 0


def test_middle_term_split_and_nonsplit():
    space = ext_space(S1, S2)
    split = middle_term(space.element([0]))
    assert is_isomorphic(split, direct_sum([S1, S2], A2, 2))
    e = middle_term(space.element([1]))
    assert is_isomorphic(e, P1) and hom_dim(e, e) == 1
    assert is_isomorphic(middle_term(space.element([5])), e)


def test_count_subreps_examples():
    x = P1.reduce(GF(2))
    assert count_subreps(x, (0, 0)) == 1
    assert count_subreps(x, (1, 1)) == 1
    assert count_subreps(x, (0, 1)) == 1
    assert count_subreps(x, (1, 0)) == 0


def test_grassmannian_euler_examples():
    assert [grassmannian_euler(P1, e) for e in ((0, 1), (1, 1), (0, 0), (1, 0))] == [1, 1, 1, 0]
    s11 = direct_sum([S1, S1], A2, 2)
    assert grassmannian_euler(s11, (1, 0)) == 2
    zero = Rep(A2, (0, 0), [[]])
    assert grassmannian_euler(zero, (0, 0)) == 1


def test_ar_translate_a2():
    assert is_isomorphic(ar_translate(S1), S2)
    assert is_isomorphic(ar_translate_inverse(S2), S1)
    with pytest.raises(HypothesisViolated):
        ar_translate(P1)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_ar_translate_shifts_intervals(n):
    # oracle: on 1 -> 2 -> ... -> n, tau of the interval [i, j] is [i+1, j+1]
    arrows = tuple((i, i + 1) for i in range(n - 1))
    cache = indecomposables(arrows, n)
    for i in range(1, n + 1):
        for j in range(i, n):
            rep = cache.rep(cache.index_of[interval_module_dims(n, i, j)])
            assert ar_translate(rep).dims == interval_module_dims(n, i + 1, j + 1)


@pytest.mark.parametrize("arrows,n,count", [(A2, 2, 3), (((0, 1), (1, 2)), 3, 6), (((0, 1), (2, 1)), 3, 6), (D4_SINK, 4, 12)])
def test_indecomposables_are_bricks(arrows, n, count):
    cache = indecomposables(arrows, n)
    assert len(cache) == count
    for rep in cache.reps:
        assert hom_dim(rep, rep) == 1
        assert euler_form(arrows, rep.dims, rep.dims) == 1


def test_d4_reductions_keep_hom_dimensions():
    cache = indecomposables(D4_SINK, 4)
    for p in (2, 3, 5, 7):
        reps = cache.reps_over(GF(p))
        assert [[hom_dim(a, b) for b in reps] for a in reps] == cache.hom_matrix


def _random_rep(rng, arrows, n, maxdim=2):
    dims = tuple(rng.randint(0, maxdim) for _ in range(n))
    maps = [[[rng.randint(0, 1) for _ in range(dims[s])] for _ in range(dims[t])] for s, t in arrows]
    return Rep(arrows, dims, maps)


QUIVERS = [(A2, 2), (((0, 1), (1, 2)), 3), (((1, 0), (1, 2)), 3)]


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(range(len(QUIVERS))))
def test_hom_minus_ext_is_euler_form(seed, qi):
    rng = random.Random(seed)
    arrows, n = QUIVERS[qi]
    x, y = _random_rep(rng, arrows, n), _random_rep(rng, arrows, n)
    assert hom_dim(x, y) - ext_dim(x, y) == euler_form(arrows, x.dims, y.dims)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(range(len(QUIVERS))))
def test_hom_dim_field_independent(seed, qi):
    rng = random.Random(seed)
    arrows, n = QUIVERS[qi]
    cache = indecomposables(arrows, n)
    a, b = rng.choice(cache.reps), rng.choice(cache.reps)
    d = hom_dim(a, b)
    for p in (2, 3, 5):
        assert hom_dim(a.reduce(GF(p)), b.reduce(GF(p))) == d


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([2, 3]))
def test_count_subreps_matches_brute_force(seed, p):
    rng = random.Random(seed)
    arrows, n = QUIVERS[rng.randrange(len(QUIVERS))]
    x = _random_rep(rng, arrows, n).reduce(GF(p))
    total = 0
    for e in dim_vectors_below(x.dims):
        c = count_subreps(x, e)
        assert c == brute_subrep_count(x.dims, arrows, [[[v % p for v in r] for r in m] for m in x.maps], p, e)
        total += c
    assert total >= 2 or x.total_dim == 0


def test_one_dim_ext_middle_term_independent_of_class():
    for arrows, n in QUIVERS:
        cache = indecomposables(arrows, n)
        for a in cache.reps:
            for b in cache.reps:
                space = ext_space(a, b)
                if space.dim == 1:
                    assert is_isomorphic(middle_term(space.element([1])), middle_term(space.element([-2])))


def test_rep_text_round_trip():
    text = P1.format()
    assert text == "dims 1 1\narrow 1 2\n1\n"
    back = Rep.parse(text, QQ, A2)
    assert back.dims == P1.dims and back.maps == P1.maps
