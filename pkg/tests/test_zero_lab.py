import cmath
import math

import pytest

from conftest import FIRST_ZERO, ZERO_GRID, close
from oracle_values import ZERO_HEIGHTS
from zetakit import z_value, zeta_reference
from zetakit.core_numeric import gamma
from zetakit.errors import DomainError, NonConvergenceError
from zetakit.param_zeta import log_ratio_L
from zetakit.zero_lab import (
    critical_zeros,
    default_scan_points,
    functional_ratio,
    functional_ratio_check,
    hardy_z,
    hurwitz_expansion_check,
    hurwitz_profile,
    log_power_factor,
    necessary_conditions,
    ratio_scan,
    refine_zero,
    riemann_siegel_theta,
    tail_profile,
)


def _x_with_L(value):
    # L(x) = log(x / (1 - x)) = value
    return 1.0 / (1.0 + math.exp(-value))


class TestFunctionalRatio:
    @pytest.mark.parametrize("t", [3.0, 14.134725141734695, 40.0])
    def test_unit_modulus_on_line(self, t):
        assert abs(abs(functional_ratio(complex(0.5, t))) - 1) < 1e-13

    def test_matches_zeta_quotient(self):
        r, resid = functional_ratio_check(0.3 + 3j)
        assert resid < 1e-8
        assert close(r, zeta_reference(0.3 + 3j) / zeta_reference(0.7 - 3j), rel=1e-8)

    def test_real_on_real_axis(self):
        assert functional_ratio(0.5).imag == 0


class TestLogPowerFactor:
    def test_half_is_one(self):
        assert log_power_factor(0.5, 0.9) == 1.0
        assert log_power_factor(0.5, 1 - 1e-8) == 1.0

    def test_three_cases(self):
        x = _x_with_L(10.0)
        assert abs(log_power_factor(0.3, x) - 10 ** -0.4) < 1e-12
        assert abs(log_power_factor(0.7, x) - 10 ** 0.4) < 1e-12

    def test_domain(self):
        with pytest.raises(DomainError):
            log_power_factor(0.3, 0.4)


class TestRatioScan:
    def test_first_zero_row(self):
        (row,) = ratio_scan(FIRST_ZERO, [1 - 1e-6])
        assert abs(row.ratio - 1) < 1e-10
        assert abs(row.target - 1) < 1e-12
        # prediction and target coincide on the line
        assert abs(row.predicted_factor - row.target) < 1e-6

    def test_off_line_predicted_factor(self):
        s0 = 0.3 + 3j
        x = 1 - 1e-8
        const = abs(gamma(1 - s0) * (1 - s0) / (gamma(s0) * s0))
        (row,) = ratio_scan(s0, [x])
        assert abs(log_ratio_L(x) - 18.42) < 0.01
        assert close(row.predicted_factor, const * log_ratio_L(x) ** -0.4, rel=1e-12)
        assert abs(log_ratio_L(x) ** -0.4 - 0.312) < 1e-3

    def test_default_points(self):
        assert default_scan_points() == [1 - 10.0 ** -k for k in range(2, 9)]

    def test_rejects_bad_points(self):
        with pytest.raises(DomainError):
            ratio_scan(FIRST_ZERO, [0.9, 0.8])
        with pytest.raises(DomainError):
            ratio_scan(FIRST_ZERO, [0.3])
        with pytest.raises(DomainError):
            ratio_scan(FIRST_ZERO, [1 - 1e-13])
        with pytest.raises(DomainError):
            ratio_scan(1.5 + 3j, [0.9])


def test_repeated_limit_off_zero():
    s = 0.3 + 3j
    target = abs((s - 1) * zeta_reference(s) / (-s * zeta_reference(1 - s)))
    devs = []
    for k in range(2, 7):
        x = 1 - 10.0 ** -k
        ratio = abs(z_value(s, x, method="integral") / z_value(1 - s, x, method="integral"))
        devs.append(abs(ratio - target))
    assert all(b < a for a, b in zip(devs, devs[1:]))


class TestNecessaryConditions:
    def test_exponent_on_line(self):
        s0 = 0.5 + 3j
        _, exp_res = necessary_conditions(s0, tail_profile(s0), tail_profile(1 - s0))
        assert exp_res == 0

    def test_amplitude_at_first_zero(self):
        s0 = FIRST_ZERO
        amp, _ = necessary_conditions(s0, tail_profile(s0), tail_profile(1 - s0))
        assert amp < 1e-6

    def test_hurwitz_exponent(self):
        s0 = 0.3 + 5j
        _, exp_res = necessary_conditions(s0, hurwitz_profile(s0), hurwitz_profile(1 - s0))
        assert exp_res == 0


class TestHurwitzExpansion:
    @staticmethod
    def scale(s):
        s = complex(s)
        return abs(s * (s + 1) * (s - 1) * zeta_reference(s + 2) / 2)

    def test_s_two(self):
        r = hurwitz_expansion_check(2, 0.999)
        assert 0.5 * self.scale(2) <= r <= 1.5 * self.scale(2)

    def test_complex_s(self):
        assert hurwitz_expansion_check(0.5 + 3j, 0.995) < 10 * self.scale(2)

    def test_bounded_towards_one(self):
        vals = [hurwitz_expansion_check(0.5 + 3j, 1 - 10.0 ** -k) for k in (2, 3, 4)]
        assert max(vals) < 2 * min(vals)

    def test_excluded(self):
        with pytest.raises(DomainError):
            hurwitz_expansion_check(2, 1.0)
        with pytest.raises(DomainError):
            hurwitz_expansion_check(1, 0.9)


class TestZeros:
    def test_refined_zeros_match_oracle(self):
        zs = critical_zeros(3)
        for z, t in zip(zs, ZERO_HEIGHTS):
            assert z.real == 0.5
            assert abs(z.imag - t) < 1e-9

    def test_zero_values_vanish(self):
        for z in ZERO_GRID:
            assert abs(zeta_reference(z)) < 1e-12

    def test_theta_branches_agree(self):
        # Stirling and log-gamma forms meet at t = 5
        t = 5.0
        direct = cmath.phase(gamma(0.25 + 0.5j * t))
        assert abs(riemann_siegel_theta(t) - (direct - 0.5 * t * math.log(math.pi))) < 1e-6

    def test_hardy_real_and_sign_change(self):
        assert hardy_z(14.0) * hardy_z(14.3) < 0

    def test_bad_bracket(self):
        with pytest.raises(NonConvergenceError):
            refine_zero(15.0, 16.0)

    def test_count(self):
        with pytest.raises(DomainError):
            critical_zeros(0)
