import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degenbell.polyalg import (
    Poly,
    as_rational,
    binomial,
    degenerate_falling_eval,
    degenerate_falling_factorial,
    degenerate_falling_product,
    falling_factorial,
)

SAMPLE_LAMBDAS = [F(0), F(1), F(-1), F(1, 2), F(-2, 3), F(3)]
SAMPLE_POINTS = [F(0), F(1), F(-1), F(1, 2), F(3), F(-2, 3)]

rationals = st.builds(F, st.integers(-20, 20), st.integers(1, 20))
polys = st.builds(Poly, st.lists(rationals, max_size=9))


def test_as_rational_rejects_floats():
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(TypeError):
        Poly((0.5,))


def test_trailing_zeros_trimmed():
    assert Poly((1, 2, 0, 0)).coeffs == (F(1), F(2))
    assert Poly((0, 0)).coeffs == ()
    assert Poly((0, 0)) == Poly.ZERO
    assert Poly((1, 2)).degree == 1
    assert Poly.ZERO.degree == -1


def test_add_examples():
    x, one = Poly.X, Poly.ONE
    assert (x + one) + (-x) == one
    assert Poly.ZERO + (x + one) == x + one
    assert Poly.monomial(2) + x == Poly((0, 1, 1))


def test_mul_examples():
    x, one = Poly.X, Poly.ONE
    assert (x - one) * (x + one) == Poly((-1, 0, 1))
    assert Poly.ZERO * (x + one) == Poly.ZERO
    assert x * (x - one) == Poly((0, -1, 1))


def test_eval_examples():
    p = Poly((0, -1, 1))  # x^2 - x
    assert p(1) == 0
    assert p(F(1, 2)) == F(-1, 4)
    assert Poly.ZERO(F(7, 3)) == 0


def test_derivative_examples():
    assert Poly.monomial(3).derivative() == Poly((0, 0, 3))
    assert Poly.constant(5).derivative() == Poly.ZERO
    assert Poly((0, -1, 1)).derivative() == Poly((-1, 2))


def test_falling_factorial_values():
    assert falling_factorial(0) == Poly.ONE
    assert falling_factorial(2) == Poly((0, -1, 1))
    assert falling_factorial(3) == Poly((0, 2, -3, 1))


def test_degenerate_falling_factorial_values():
    assert degenerate_falling_factorial(0, F(7)) == Poly.ONE
    assert degenerate_falling_factorial(2, F(1, 2)) == Poly((0, F(-1, 2), 1))
    assert degenerate_falling_factorial(2, 0) == Poly.monomial(2)


def test_zero_lambda_gives_plain_powers():
    for n in range(13):
        assert degenerate_falling_factorial(n, 0) == Poly.monomial(n)


def test_lambda_one_gives_falling_factorial():
    for n in range(9):
        assert degenerate_falling_factorial(n, 1) == falling_factorial(n)


def test_degenerate_falling_eval_examples():
    assert degenerate_falling_eval(1, 2, F(1, 2)) == F(1, 2)
    assert degenerate_falling_eval(1, 3, 0) == 1
    assert degenerate_falling_eval(3, 2, 1) == 6


def test_degenerate_falling_eval_matches_polynomial():
    for n in range(9):
        for lam in SAMPLE_LAMBDAS:
            p = degenerate_falling_factorial(n, lam)
            for x0 in SAMPLE_POINTS:
                assert degenerate_falling_eval(x0, n, lam) == p(x0)


def test_falling_product_substitutes_any_base():
    base = Poly((2, 1))  # x + 2
    for n in range(6):
        for lam in SAMPLE_LAMBDAS:
            expected = Poly.ONE
            for i in range(n):
                expected = expected * (base - Poly.constant(i * lam))
            assert degenerate_falling_product(base, n, lam) == expected


@given(polys, polys)
def test_add_commutes(a, b):
    assert a + b == b + a


@given(polys, polys, polys)
def test_add_associates(a, b, c):
    assert (a + b) + c == a + (b + c)


@given(polys, polys)
def test_mul_commutes(a, b):
    assert a * b == b * a


@given(polys, polys, polys)
@settings(max_examples=50)
def test_mul_associates(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(polys, polys, polys)
@settings(max_examples=50)
def test_mul_distributes_over_add(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(polys, polys)
def test_product_degree(a, b):
    if not a.is_zero() and not b.is_zero():
        assert (a * b).degree == a.degree + b.degree


def test_binomial_matches_math_comb():
    for n in range(16):
        for k in range(-1, n + 2):
            expected = math.comb(n, k) if 0 <= k <= n else 0
            assert binomial(n, k) == expected
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_vandermonde_convolution_for_deformed_powers():
    # (x+y)_n = sum_k C(n,k) (x)_k (y)_{n-k}, all with the same deformation
    for n in range(13):
        for lam in SAMPLE_LAMBDAS:
            for x0 in SAMPLE_POINTS[:4]:
                for y0 in SAMPLE_POINTS[:4]:
                    lhs = degenerate_falling_eval(x0 + y0, n, lam)
                    rhs = sum(
                        binomial(n, k)
                        * degenerate_falling_eval(x0, k, lam)
                        * degenerate_falling_eval(y0, n - k, lam)
                        for k in range(n + 1)
                    )
                    assert lhs == rhs
