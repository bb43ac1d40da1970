import math
from fractions import Fraction

import numpy as np
import pytest

from oracle_values import GREGORY_ABS
from zetakit.errors import CapacityError, DomainError
from zetakit.special_numbers import (
    MAX_BERNOULLI,
    MAX_TABLE,
    PolynomialQ,
    bernoulli_number,
    bernoulli_polynomial,
    binomial,
    cauchy_numbers_2nd,
    cauchy_numbers_float,
    eulerian_number,
    eulerian_row,
    gregory_abs_float,
    gregory_coefficients,
)


def test_bernoulli_known_values():
    assert bernoulli_number(0) == 1
    assert bernoulli_number(1) == Fraction(-1, 2)
    assert bernoulli_number(2) == Fraction(1, 6)
    assert bernoulli_number(3) == 0
    assert bernoulli_number(12) == Fraction(-691, 2730)
    assert all(bernoulli_number(k) == 0 for k in range(3, MAX_BERNOULLI + 1, 2))


def test_bernoulli_zeta_even():
    # zeta(2k) = (-1)^(k+1) B_2k (2 pi)^(2k) / (2 (2k)!)
    for k in (1, 2, 5):
        val = (-1) ** (k + 1) * float(bernoulli_number(2 * k)) * (2 * math.pi) ** (2 * k) / (2 * math.factorial(2 * k))
        assert val == pytest.approx(sum(n ** (-2.0 * k) for n in range(1, 200000)), rel=1e-5)


@pytest.mark.parametrize("k", [1, 2, 5, 10])
def test_bernoulli_polynomial_difference(k):
    # B_k(x+1) - B_k(x) = k x^(k-1)
    b = bernoulli_polynomial(k)
    for x in (Fraction(0), Fraction(1, 3), Fraction(-5, 2)):
        assert b(x + 1) - b(x) == k * x ** (k - 1)
    assert b(Fraction(0)) == bernoulli_number(k)


def test_tables_capacity():
    with pytest.raises(CapacityError):
        bernoulli_number(MAX_BERNOULLI + 1)
    with pytest.raises(CapacityError):
        gregory_coefficients(MAX_TABLE + 1)
    with pytest.raises(DomainError):
        bernoulli_number(-1)


def test_eulerian_rows():
    assert eulerian_row(0) == (1,)
    assert eulerian_row(3) == (1, 4, 1)
    assert eulerian_row(4) == (1, 11, 11, 1)
    for k in range(1, 12):
        row = eulerian_row(k)
        assert sum(row) == math.factorial(k)
        assert row == row[::-1]
    assert eulerian_number(5, 2) == 66
    assert eulerian_number(5, 7) == 0


def test_gregory_and_cauchy_prefix():
    g = gregory_coefficients(5)
    assert g == (Fraction(1, 2), Fraction(-1, 12), Fraction(1, 24), Fraction(-19, 720), Fraction(3, 160))
    c = cauchy_numbers_2nd(4)
    assert c == (Fraction(1, 2), Fraction(5, 12), Fraction(3, 8), Fraction(251, 720))


def test_gregory_sum_rule():
    # sum_n |G_n| = 1, so C_n -> 0 from above
    c = cauchy_numbers_2nd(MAX_TABLE)
    assert all(x > 0 for x in c)
    assert all(a > b for a, b in zip(c, c[1:]))


@pytest.mark.parametrize("n", sorted(GREGORY_ABS))
def test_gregory_float_beyond_table(n):
    assert gregory_abs_float(n)[n - 1] == pytest.approx(GREGORY_ABS[n], rel=1e-10)


def test_float_tables_agree_with_exact():
    exact = [float(abs(g)) for g in gregory_coefficients(MAX_TABLE)]
    assert np.array_equal(gregory_abs_float(MAX_TABLE), np.array(exact))
    c = cauchy_numbers_float(MAX_TABLE + 20)
    assert c[MAX_TABLE - 1] == float(cauchy_numbers_2nd(MAX_TABLE)[-1])
    assert np.all(np.diff(c) < 0)


def test_polynomial_q():
    p = PolynomialQ([1, 2, 0, 0])
    assert p.degree == 1 and p(Fraction(3)) == 7 and p(0.5) == 2.0
    assert p.integral() == PolynomialQ([0, 1, 1])
    assert PolynomialQ([]).degree == -1


def test_binomial():
    assert binomial(10, 3) == 120 and binomial(4, 7) == 0 and binomial(4, -1) == 0
    with pytest.raises(DomainError):
        binomial(-1, 0)
