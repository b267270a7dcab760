import pytest
from hypothesis import given, settings, strategies as st

from clusterchar.errors import MalformedInput, NotClosed
from clusterchar.exactalg import LaurentPoly
from clusterchar.quiver import (
    ExchangeQuiver,
    Seed,
    enumerate_cluster_variables,
    enumerate_seeds,
    expand_in_cluster_monomials,
    mutate,
)


def P(text, n):
    return LaurentPoly.parse(text, n)


def test_mutation_flips_signs(a2):
    assert a2.mutate(0).B == ((0, -1), (1, 0))


def test_first_exchange_in_a2(a2):
    seed = mutate(Seed.initial(a2), 0)
    assert seed.cluster[0] == P("x1^-1*x2 + x1^-1", 2)


def test_mutation_involution(a2):
    seed = Seed.initial(a2)
    assert mutate(mutate(seed, 1), 1) == seed


def test_a2_variables(a2):
    got = enumerate_cluster_variables(a2)
    x1, x2 = LaurentPoly.var(0, 2), LaurentPoly.var(1, 2)
    expected = {
        x1,
        x2,
        (x2 + 1).divide_exact(x1),
        (x1 + x2 + 1).divide_exact(x1 * x2),
        (x1 + 1).divide_exact(x2),
    }
    assert got == expected


def test_a1_variables():
    q = ExchangeQuiver(((0,),))
    assert enumerate_cluster_variables(q) == {LaurentPoly.var(0, 1), P("2*x1^-1", 1)}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_type_a_count(n):
    assert len(enumerate_cluster_variables(ExchangeQuiver.linear_a(n))) == n * (n + 3) // 2


def test_d4_count():
    q = ExchangeQuiver.from_arrows(4, [(0, 1, 1), (2, 1, 1), (3, 1, 1)])
    assert len(enumerate_cluster_variables(q)) == 16


def test_laurent_phenomenon_denominators_are_monomials():
    for v in enumerate_cluster_variables(ExchangeQuiver.linear_a(3)):
        lo = v.min_exponents()
        shifted = v * LaurentPoly.monomial(tuple(-a for a in lo))
        assert all(min(e) >= 0 for e in shifted.terms)
        assert v.coefficients_nonnegative()


def test_not_closed_for_kronecker():
    q = ExchangeQuiver.from_arrows(2, [(0, 1, 2)])
    with pytest.raises(NotClosed):
        enumerate_seeds(q, depth_limit=6)


def test_expand_hand_identity():
    variables = {LaurentPoly.var(0, 1), P("2*x1^-1", 1)}
    out = expand_in_cluster_monomials(P("1 + 2*x1^-1", 1), variables, 2)
    assert out is not None
    assert out[()] == 1
    assert out[(P("2*x1^-1", 1),)] == 1


def test_expand_variable_itself():
    x = LaurentPoly.var(0, 2)
    out = expand_in_cluster_monomials(x, {x, LaurentPoly.var(1, 2)}, 2)
    assert out == {(x,): 1}


def test_expand_impossible():
    x = LaurentPoly.var(0, 1)
    assert expand_in_cluster_monomials(P("x1^-1", 1), {x}, 3) is None


def test_quiver_text_round_trip():
    q = ExchangeQuiver.from_arrows(3, [(0, 1, 1), (2, 1, 2)])
    assert ExchangeQuiver.parse(q.format()) == q


@pytest.mark.parametrize("text", ["", "x\n", "2\n1 3 1\n", "2\n1 2 1\n2 1 1\n", "2\n1 2\n"])
def test_malformed_quiver(text):
    with pytest.raises(MalformedInput):
        ExchangeQuiver.parse(text)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3, 4]), st.lists(st.integers(0, 3), max_size=6), st.integers(0, 3))
def test_mutation_involutive_everywhere(n, path, k):
    seed = Seed.initial(ExchangeQuiver.linear_a(n))
    for v in path:
        seed = mutate(seed, v % n)
    k %= n
    again = mutate(mutate(seed, k), k)
    assert again.quiver == seed.quiver and again.cluster == seed.cluster
