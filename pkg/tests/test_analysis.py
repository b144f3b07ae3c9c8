"""Tendency analysis tests.

Reference derivatives are the analytic ones of the closed forms, e.g. for
the Coulomb case E = -1/(4 N^2), N = n + q + |k+mu0| + 1 (reduced units):
dE/dn = 1/(2 N^3), d2E/dn2 = -3/(2 N^4); for the oscillator with coupling
1 (omega = 2): dE/dn = 4; for the linear case dE/dn = pi ((3pi/2) U)^(-1/3).
"""

import math
import random

import pytest

from abwkb import (
    InfiniteWell,
    PowerLaw,
    build_tendency_report,
    derivative_ratios,
    flux_slope_effect,
    spectral_derivative,
    tendency_classify,
)
from abwkb.analysis import BENDS_DOWN, BENDS_UP, LINEAR

COULOMB = PowerLaw(-1.0, -1.0)
LINEAR_POT = PowerLaw(1.0, 1.0)
OSC = PowerLaw(1.0, 2.0)
WELL = InfiniteWell(1.0)


class TestSpectralDerivative:
    def test_oscillator_slopes(self):
        # 2 hbar omega with omega = 2, i.e. 4 in reduced units
        d1 = spectral_derivative(OSC, 0.0, (1.0, 1.0, 0.5), "n", 1)
        assert d1 == pytest.approx(4.0, rel=1e-8)
        d2 = spectral_derivative(OSC, 0.0, (1.0, 1.0, 0.5), "n", 2)
        assert abs(d2) < 1e-6

    def test_coulomb_ground_point(self):
        # N = 1 at the origin of quantum numbers: dE/dn = 1/2, d2E/dn2 = -3/2
        d1 = spectral_derivative(COULOMB, 0.0, (0.0, 0.0, 0.0), "n", 1)
        assert d1 == pytest.approx(0.5, rel=1e-6)
        d2 = spectral_derivative(COULOMB, 0.0, (0.0, 0.0, 0.0), "n", 2)
        assert d2 == pytest.approx(-1.5, rel=1e-5)

    def test_linear_case_formula(self):
        # dE/dn = pi ((3 pi/2) U)^(-1/3), U = n + (q + kmu)/2 + 3/4
        n, q, kmu = 2.0, 1.0, 0.5
        u = n + 0.5 * (q + kmu) + 0.75
        expected = math.pi * (1.5 * math.pi * u) ** (-1.0 / 3.0)
        d1 = spectral_derivative(LINEAR_POT, 0.0, (n, q, kmu), "n", 1)
        assert d1 == pytest.approx(expected, rel=1e-5)
        expected2 = -(math.pi**2 / 2.0) * (1.5 * math.pi * u) ** (-4.0 / 3.0)
        d2 = spectral_derivative(LINEAR_POT, 0.0, (n, q, kmu), "n", 2)
        assert d2 == pytest.approx(expected2, rel=1e-4)

    def test_well_curvature(self):
        # reduced units with a = 1: E = pi^2 (n + gamma/2 + 1)^2, so
        # d2E/dn2 = 2 pi^2
        d2 = spectral_derivative(WELL, 0.0, (1.0, 1.0, 0.5), "n", 2)
        assert d2 == pytest.approx(2.0 * math.pi**2, rel=1e-5)
        assert d2 > 0.0

    def test_q_and_kmu_derivatives_match_coulomb(self):
        for which in ("q", "kmu"):
            d1 = spectral_derivative(COULOMB, 0.3, (1.0, 1.0, 1.0), which, 1)
            big_n = 1.0 + 1.0 + 1.3 + 1.0
            assert d1 == pytest.approx(0.5 / big_n**3, rel=1e-6)

    def test_kmu_kink_rejected(self):
        with pytest.raises(ValueError):
            spectral_derivative(COULOMB, 0.0, (1.0, 1.0, 0.0), "kmu", 1)

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            spectral_derivative(COULOMB, 0.0, (1.0, 1.0, 1.0), "m", 1)
        with pytest.raises(ValueError):
            spectral_derivative(COULOMB, 0.0, (1.0, 1.0, 1.0), "n", 3)

    @pytest.mark.parametrize("pot", [COULOMB, PowerLaw(-1.0, -0.5), LINEAR_POT, OSC, PowerLaw(1.0, 4.0), WELL])
    def test_first_derivatives_positive(self, pot):
        for point in [(0.0, 0.0, 0.5), (1.0, 2.0, 1.5), (3.0, 0.0, 0.25)]:
            for which in ("n", "q", "kmu"):
                assert spectral_derivative(pot, 0.0, point, which, 1) > 0.0


class TestTendencyClassify:
    def test_named_cases(self):
        assert tendency_classify(2.0) == LINEAR
        assert tendency_classify(-1.0) == BENDS_DOWN
        assert tendency_classify(1.0) == BENDS_DOWN
        assert tendency_classify(4.0) == BENDS_UP
        assert tendency_classify(math.inf) == BENDS_UP

    def test_domain(self):
        with pytest.raises(ValueError):
            tendency_classify(0.0)
        with pytest.raises(ValueError):
            tendency_classify(-2.0)
        with pytest.raises(ValueError):
            tendency_classify(-3.0)

    def test_classification_matches_measured_curvature(self):
        rng = random.Random(7)
        for nu in (-1.0, -0.5, 1.0, 2.0, 3.0, 6.0, math.inf):
            pot = InfiniteWell(1.0) if nu == math.inf else PowerLaw(-1.0 if nu < 0 else 1.0, nu)
            for _ in range(5):
                point = (rng.uniform(0.0, 4.0), rng.uniform(0.0, 3.0), rng.uniform(0.3, 2.0))
                d2 = spectral_derivative(pot, 0.0, point, "n", 2)
                d1 = spectral_derivative(pot, 0.0, point, "n", 1)
                cls = tendency_classify(nu)
                if cls == LINEAR:
                    assert abs(d2) <= 1e-6 * abs(d1)
                elif cls == BENDS_UP:
                    assert d2 > 0.0
                else:
                    assert d2 < 0.0


class TestDerivativeRatios:
    def test_named_cases(self):
        assert derivative_ratios(2.0) == (2.0, 2.0, 1.0)
        assert derivative_ratios(-1.0) == (1.0, 1.0, 1.0)
        assert derivative_ratios(-0.5) == (1.5, 1.5, 1.0)

    def test_domain(self):
        with pytest.raises(ValueError):
            derivative_ratios(0.0)
        with pytest.raises(ValueError):
            derivative_ratios(-2.5)

    @pytest.mark.parametrize("nu", [-1.5, -1.0, -0.5, 0.5, 1.0, 2.0, 4.0])
    def test_ratios_match_finite_differences(self, nu):
        pot = PowerLaw(-1.0 if nu < 0 else 1.0, nu)
        rn_rq, rn_rk, rq_rk = derivative_ratios(nu)
        for point in [(0.0, 1.0, 0.5), (2.0, 0.0, 1.25)]:
            dn = spectral_derivative(pot, 0.0, point, "n", 1)
            dq = spectral_derivative(pot, 0.0, point, "q", 1)
            dk = spectral_derivative(pot, 0.0, point, "kmu", 1)
            assert dn / dq == pytest.approx(rn_rq, abs=1e-6)
            assert dn / dk == pytest.approx(rn_rk, abs=1e-6)
            assert dq / dk == pytest.approx(rq_rk, abs=1e-6)

    def test_positive_branch_ratio_is_two_pointwise(self):
        # E depends on the single combination n + gamma/2 + 3/4, so the
        # finite-difference ratio is 2 at every point, not asymptotically
        for nu in (0.5, 1.0, 2.0, 4.0):
            pot = PowerLaw(1.0, nu)
            for point in [(0.0, 0.0, 0.5), (1.0, 3.0, 1.5), (5.0, 1.0, 0.3)]:
                dn = spectral_derivative(pot, 0.0, point, "n", 1)
                dq = spectral_derivative(pot, 0.0, point, "q", 1)
                assert dn / dq == pytest.approx(2.0, abs=1e-8)


class TestFluxSlope:
    def test_signs(self):
        assert flux_slope_effect(-1.0) == -1
        assert flux_slope_effect(1.0) == -1
        assert flux_slope_effect(2.0) == 0
        assert flux_slope_effect(4.0) == 1
        assert flux_slope_effect(math.inf) == 1

    def test_slope_change_between_low_and_high_flux_grids(self):
        # cranking |k+mu0| from 0.5 to 12 must depress the n-slope below
        # nu = 2, leave it untouched at nu = 2 and steepen it beyond
        for pot, expect in ((COULOMB, -1), (LINEAR_POT, -1), (OSC, 0), (WELL, 1)):
            low = spectral_derivative(pot, 0.0, (1.0, 1.0, 0.5), "n", 1)
            high = spectral_derivative(pot, 0.0, (1.0, 1.0, 12.0), "n", 1)
            if expect == 0:
                assert high == pytest.approx(low, rel=1e-9)
            elif expect < 0:
                assert high < low
            else:
                assert high > low


class TestTendencyReport:
    def test_oscillator_report(self):
        rep = build_tendency_report(OSC, 0.5)
        assert rep.curvature == LINEAR
        assert rep.first_derivative_signs == ("+", "+", "+")
        assert rep.ratios[0] == pytest.approx(2.0, abs=1e-8)
        assert rep.ratios[1] == pytest.approx(1.0, abs=1e-8)
        assert rep.flux_slope_sign == "0"

    def test_coulomb_report(self):
        rep = build_tendency_report(COULOMB, 0.5)
        assert rep.curvature == BENDS_DOWN
        assert rep.flux_slope_sign == "-"

    def test_well_report(self):
        rep = build_tendency_report(WELL, 0.5)
        assert rep.curvature == BENDS_UP
        assert rep.flux_slope_sign == "+"
