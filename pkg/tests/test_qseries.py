from fractions import Fraction as F

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from _strategies import rationals, unit_q
from fusedhecke.errors import DegenerateError
from fusedhecke.qseries import (
    QHahnParams,
    QParams,
    baxter_coefficient,
    baxter_coefficient_recursive,
    baxter_coefficients,
    exact,
    q_binomial,
    q_factorial,
    q_hahn_weight,
    q_integer,
    q_pochhammer,
)

HALF = F(1, 2)


def brute_binomial(n, m, q):
    # count inversions over 0/1 words: sum over words with m ones of t^inv
    from itertools import combinations

    t = F(q) ** 2
    total = F(0)
    for ones in combinations(range(n), m):
        inv = sum(1 for a in ones for b in range(a + 1, n) if b not in ones)
        total += t**inv
    return total


def test_integer_examples():
    assert q_integer(1, F(3, 7)) == 1
    assert q_integer(4, 1) == 4
    assert q_integer(3, HALF) == F(21, 16)


def test_factorial_examples():
    assert q_factorial(0, HALF) == 1
    assert q_factorial(2, HALF) == F(5, 4)
    assert q_factorial(3, HALF) == F(105, 64)


def test_binomial_examples():
    assert q_binomial(7, 0, HALF) == 1
    assert q_binomial(4, 2, HALF) == F(357, 256)
    assert q_binomial(3, 5, HALF) == 0
    assert q_binomial(3, -1, HALF) == 0


def test_pochhammer_examples():
    assert q_pochhammer(F(5, 3), F(1, 9), 0) == 1
    assert q_pochhammer(F(5, 3), F(1, 9), 1) == F(-2, 3)
    assert q_pochhammer(HALF, F(1, 4), 2) == F(7, 16)


def test_float_rejected():
    with pytest.raises(TypeError):
        exact(0.5)
    with pytest.raises(TypeError):
        baxter_coefficient(1, 1, 0, 2.0, HALF)
    with pytest.raises(ValueError):
        QParams(F(0))


@given(st.integers(0, 6), st.integers(0, 6), rationals(nonzero=True))
def test_binomial_counts_inversions(n, m, q):
    assume(m <= n)
    assert q_binomial(n, m, q) == brute_binomial(n, m, q)


@given(st.integers(0, 8), rationals(nonzero=True))
def test_integer_quotient_form(n, q):
    t = q * q
    assume(t != 1)
    assert q_integer(n, q) == (1 - t**n) / (1 - t)


@given(st.integers(1, 8), rationals(nonzero=True))
def test_pascal(k, q):
    t = q * q
    for p in range(k + 1):
        b = q_binomial(k, p, q)
        assert b == q_binomial(k - 1, p - 1, q) * t ** (k - p) + q_binomial(k - 1, p, q)
        assert b == q_binomial(k - 1, p - 1, q) + q_binomial(k - 1, p, q) * t**p


@given(st.integers(0, 5), st.integers(0, 5), rationals(nonzero=True))
def test_chu_vandermonde(m, n, q):
    t = q * q
    for k in range(m + n + 1):
        rhs = sum(q_binomial(n, j, q) * q_binomial(m, k - j, q) * t ** (j * (m - k + j)) for j in range(k + 1))
        assert q_binomial(m + n, k, q) == rhs


def test_baxter_examples():
    assert baxter_coefficient(1, 1, 0, 2, HALF) == F(3, 7)
    assert baxter_coefficient(1, 1, 1, 2, HALF) == F(4, 7)
    assert baxter_coefficient(2, 2, 2, 8, HALF) == F(1792, 3937)
    assert baxter_coefficients(1, 1, F(1, 3), HALF).values == [9, -8]


def test_recursion_examples():
    assert baxter_coefficient_recursive(1, 1, 0, 2, HALF) == F(3, 7)
    assert baxter_coefficient_recursive(1, 2, 1, 2, HALF) == baxter_coefficient(1, 2, 1, 2, HALF)
    for p in range(4):
        assert baxter_coefficient_recursive(3, 3, p, 27, F(1, 3)) == baxter_coefficient(3, 3, p, 27, F(1, 3))


def test_baxter_guard_names_factor():
    # z = q^(2l - 2j) kills the j-th denominator factor
    with pytest.raises(DegenerateError) as e:
        baxter_coefficient(2, 2, 0, F(1, 4), HALF)
    assert e.value.where == "j=1"
    with pytest.raises(ValueError):
        baxter_coefficient(3, 2, 0, 2, HALF)


@st.composite
def coeff_point(draw):
    l = draw(st.integers(1, 6))
    k = draw(st.integers(1, l))
    q = draw(unit_q())
    z = draw(rationals())
    t = q * q
    assume(all(t**l != z * t**j for j in range(k)))
    assume(all(t**j != z for j in range(-l, l + 1)))
    return k, l, q, z


@given(coeff_point())
def test_coefficients_sum_to_one(pt):
    k, l, q, z = pt
    assert sum(baxter_coefficients(k, l, z, q).values) == 1


@given(coeff_point())
def test_closed_form_matches_recursion(pt):
    k, l, q, z = pt
    for p in range(k + 1):
        assert baxter_coefficient(k, l, p, z, q) == baxter_coefficient_recursive(k, l, p, z, q)


@given(coeff_point())
def test_coefficients_are_q_hahn(pt):
    k, l, q, z = pt
    t = q * q
    params = QHahnParams(t ** (-l), z * t ** (-l), q)
    for p in range(k + 1):
        assert baxter_coefficient(k, l, p, z, q) == q_hahn_weight(p, k, params)


def test_hahn_examples():
    mu, q = F(2, 3), F(1, 3)
    eq = QHahnParams(mu, mu, q)
    assert [q_hahn_weight(p, 3, eq) for p in range(4)] == [1, 0, 0, 0]
    one = QHahnParams(F(1), F(2, 7), q)
    assert [q_hahn_weight(p, 3, one) for p in range(4)] == [0, 0, 0, 1]
    gen = QHahnParams(F(1, 3), F(1, 5), HALF)
    assert sum(q_hahn_weight(p, 3, gen) for p in range(4)) == 1


def test_hahn_mu_zero_and_guard():
    w = [q_hahn_weight(p, 2, QHahnParams(F(0), F(1, 3), HALF)) for p in range(3)]
    assert sum(w) == 1
    with pytest.raises(DegenerateError):
        q_hahn_weight(0, 2, QHahnParams(F(1, 2), F(4), HALF))


@given(st.integers(1, 6), unit_q(), rationals(), rationals())
def test_hahn_sums_to_one(k, q, mu, nu):
    t = q * q
    assume(all(1 != nu * t**j for j in range(k)))
    assert sum(q_hahn_weight(p, k, QHahnParams(mu, nu, q)) for p in range(k + 1)) == 1
