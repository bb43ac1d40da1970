import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import close
from oracle_values import GAMMA
from zetakit.core_numeric import (
    branched_power,
    gamma,
    is_nonpositive_integer,
    principal_log,
    principal_pow,
    reciprocal_gamma,
    sinpi,
)
from zetakit.errors import DomainError, NumericOverflowError, PoleError

finite = st.floats(min_value=-30, max_value=30, allow_nan=False)


@pytest.mark.parametrize("s", list(GAMMA))
def test_gamma_matches_oracle(s):
    # at least 12 significant digits for |s| <= 50
    assert close(gamma(s), GAMMA[s], rel=1e-12)


@pytest.mark.parametrize("k", [0, -1, -2, -10])
def test_gamma_poles(k):
    with pytest.raises(PoleError):
        gamma(k)
    assert reciprocal_gamma(k) == 0


def test_gamma_overflow():
    with pytest.raises(NumericOverflowError):
        gamma(200.0)


def test_reciprocal_gamma_is_inverse():
    for s in (0.5 + 3j, -2.5 + 0.1j, 7.25):
        assert close(reciprocal_gamma(s) * gamma(s), 1.0, rel=1e-14)


@settings(max_examples=60, deadline=None)
@given(finite, st.floats(min_value=-20, max_value=20, allow_nan=False))
def test_gamma_recurrence(a, b):
    s = complex(a, b)
    if is_nonpositive_integer(s) or is_nonpositive_integer(s + 1):
        return
    try:
        lhs, rhs = gamma(s + 1), s * gamma(s)
    except NumericOverflowError:
        return
    assert close(lhs, rhs, rel=1e-12, abs_=1e-300)


@settings(max_examples=60, deadline=None)
@given(finite, st.floats(min_value=-20, max_value=20, allow_nan=False))
def test_gamma_conjugate_symmetry(a, b):
    s = complex(a, b)
    if is_nonpositive_integer(s):
        return
    try:
        g = gamma(s)
    except NumericOverflowError:
        return
    assert gamma(s.conjugate()) == pytest.approx(g.conjugate(), rel=1e-15, abs=1e-300)


def test_sinpi_exact_zeros_and_values():
    for k in range(-6, 7):
        assert sinpi(k) == 0
    assert sinpi(0.5) == 1
    assert close(sinpi(0.25 + 1j), cmath.sin(math.pi * (0.25 + 1j)), rel=1e-15)


def test_principal_log_branch():
    assert principal_log(-1) == complex(0, math.pi)
    assert principal_log(complex(-2, -0.0)).imag == math.pi
    # just below the cut the argument approaches -pi
    assert principal_log(complex(-2, -1e-10)).imag == pytest.approx(-math.pi + 5e-11, abs=1e-15)
    with pytest.raises(DomainError):
        principal_log(0)


def test_principal_pow_special_cases():
    assert principal_pow(0, 2 + 1j) == 0
    with pytest.raises(DomainError):
        principal_pow(0, -1 + 1j)
    with pytest.raises(DomainError):
        principal_pow(0, 1j)
    assert principal_pow(5 + 2j, 0) == 1
    assert close(principal_pow(-1, 0.5), 1j, rel=1e-15)
    bp = branched_power(-8, 1 / 3)
    assert bp.base == -8 and close(bp.value, 2 * cmath.exp(1j * math.pi / 3), rel=1e-15)


def test_is_nonpositive_integer():
    assert is_nonpositive_integer(0) and is_nonpositive_integer(-3.0)
    assert not is_nonpositive_integer(1) and not is_nonpositive_integer(-3 + 1e-12j)
    assert not is_nonpositive_integer(-2.5)
