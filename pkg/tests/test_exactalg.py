from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from clusterchar.errors import FieldMismatch, NonPolynomialCount
from clusterchar.exactalg import (
    GF,
    QQ,
    LaurentPoly,
    interpolate,
    interpolate_and_eval_at_one,
    laurent_mul,
    laurent_specialize,
    rank,
    solve_linear,
)


def P(text, n=2):
    return LaurentPoly.parse(text, n)


x1 = LaurentPoly.var(0, 2)
x2 = LaurentPoly.var(1, 2)


# laurent_mul


def test_mul_distributes():
    assert laurent_mul(x1 + x2, P("x1^-1")) == P("x1^-1*x2 + 1")


def test_mul_identity():
    p = P("x1^2*x2^-1 + 3")
    assert laurent_mul(p, LaurentPoly.constant(1, 2)) == p


def test_mul_cancels():
    assert laurent_mul((x2 + 1).divide_exact(x1), x1) == x2 + 1


def test_mul_variable_mismatch():
    with pytest.raises(ValueError):
        laurent_mul(LaurentPoly.var(0, 1), x1)


def test_zero_coefficients_are_dropped():
    assert (x1 - x1).terms == {}
    assert x1 + x2 - x2 == x1


# laurent_specialize


def test_specialize_drops_variable():
    assert laurent_specialize(P("x1*x2^-1 + x2"), 1, 1) == P("x1 + 1", 1)


def test_specialize_hand_expansion():
    p = (x1 + x2 + 1).divide_exact(x1 * x2)
    assert laurent_specialize(p, 1, 1) == P("1 + 2*x1^-1", 1)


def test_specialize_constant():
    assert laurent_specialize(LaurentPoly.constant(5, 2), 0, 1) == LaurentPoly.constant(5, 1)


def test_specialize_zero_into_negative_power():
    with pytest.raises(ZeroDivisionError):
        laurent_specialize(P("x2^-1"), 1, 0)


def test_format_round_trip():
    p = P("x1^-1*x2 + 1 + 3*x1^2")
    assert p.format() == "x1^-1*x2 + 1 + 3*x1^2"
    assert LaurentPoly.parse(p.format(), 2) == p


# solve_linear


def test_solve_identity():
    eye = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    sol = solve_linear(eye, [1, 0, 0])
    assert sol.rank == 3 and sol.particular == [1, 0, 0]


def test_solve_zero_matrix():
    sol = solve_linear([[0, 0], [0, 0]], [0, 0])
    assert len(sol.nullspace) == 2


def test_solve_over_f2():
    sol = solve_linear([[1, 1], [1, 1]], [1, 1], GF(2))
    assert sol.rank == 1
    assert sol.particular == [1, 0]
    # oracle: enumerate all four candidate vectors
    hits = [(a, b) for a in (0, 1) for b in (0, 1) if (a + b) % 2 == 1]
    assert tuple(sol.particular) in hits


def test_solve_inconsistent():
    assert solve_linear([[1], [1]], [0, 1]).particular is None


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatch):
        GF(3)(Fraction(1, 3))


# interpolation


def test_interpolate_projective_line():
    assert interpolate_and_eval_at_one([(q, q + 1) for q in (2, 3, 5)], 2) == 2


def test_interpolate_point():
    assert interpolate_and_eval_at_one([(2, 1), (3, 1)], 0) == 1


def test_interpolate_projective_plane():
    assert interpolate_and_eval_at_one([(q, q * q + q + 1) for q in (2, 3, 5, 7)], 2) == 3


def test_interpolate_inconsistent():
    with pytest.raises(NonPolynomialCount):
        interpolate([(2, 1), (3, 5), (5, 2)], 1)


# properties

coeff = st.integers(-3, 3)
exps = st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2))
polys = st.dictionaries(exps, coeff, max_size=4).map(lambda d: LaurentPoly(d, 3))


@settings(max_examples=100, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@settings(max_examples=100, deadline=None)
@given(polys, polys, st.integers(0, 2), st.sampled_from([1, -1, 2]))
def test_specialize_is_ring_homomorphism(a, b, i, v):
    s = lambda p: laurent_specialize(p, i, v)
    if v == 2 and any(e[i] < 0 for p in (a, b, a * b) for e in p.terms):
        return  # leaves the Laurent ring over Z
    assert s(a * b) == s(a) * s(b)
    assert s(a + b) == s(a) + s(b)


small = st.integers(-4, 4)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=4),
       st.lists(small, min_size=3, max_size=3), st.sampled_from([None, 2, 3, 7]))
def test_solve_resubstitutes(mat, x, p):
    field = QQ if p is None else GF(p)
    rhs = [sum(a * b for a, b in zip(row, x)) for row in mat]
    sol = solve_linear(mat, rhs, field, 3)
    assert sol.particular is not None
    back = [field.norm(sum(field(a) * s for a, s in zip(row, sol.particular))) for row in mat]
    assert back == [field(b) for b in rhs]
    for v in sol.nullspace:
        assert all(field.norm(sum(field(a) * s for a, s in zip(row, v))) == 0 for row in mat)
    assert sol.rank + len(sol.nullspace) == 3
    assert rank(mat, field, 3) == sol.rank


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=1, max_size=4), st.integers(0, 3))
def test_interpolation_stable_under_extra_primes(coeffs, extra):
    f = lambda q: sum(c * q**k for k, c in enumerate(coeffs))
    bound = len(coeffs) - 1
    primes = [2, 3, 5, 7, 11, 13, 17, 19][: bound + 1 + extra]
    assert interpolate_and_eval_at_one([(q, f(q)) for q in primes], bound) == f(1)
