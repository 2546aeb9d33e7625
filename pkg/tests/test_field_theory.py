"""Closed-form field quantities: values, limits, singular-point behavior, and
cross-identities between the expansions and the integral-equation scales."""

import math

import pytest

from lechain import field_theory as ft
from lechain.field_theory import Regime
from lechain.model import make_model

PI = math.pi


class TestCriticalField:
    def test_values(self):
        assert ft.critical_field(make_model("xxx", 1.0)) == 4.0
        assert ft.critical_field(make_model("xxz", 0.5)) == pytest.approx(2.0, abs=1e-14)
        assert ft.critical_field(make_model("xxz", 2.0 / 3.0)) == pytest.approx(3.0, abs=1e-14)


class TestSusceptibility:
    def test_free_fermion_point(self):
        assert ft.susceptibility(0.5) == pytest.approx(1.0 / PI, rel=1e-14)

    def test_isotropic_limit(self):
        assert ft.susceptibility(1.0) == 1.0 / PI**2
        assert ft.susceptibility(0.9999) == pytest.approx(1.0 / PI**2, abs=1e-3)

    def test_divergence_toward_ferromagnet(self):
        assert ft.susceptibility(1e-4) > ft.susceptibility(1e-3) > 100.0

    def test_domain(self):
        for eta in (0.0, -0.1, 1.2):
            with pytest.raises(ValueError):
                ft.susceptibility(eta)


class TestMagnetization:
    def test_small_field(self):
        assert ft.magnetization_small_field(1.0, 0.1) == pytest.approx(0.1 / PI**2, rel=1e-14)
        assert ft.magnetization_small_field(0.5, 0.01) == pytest.approx(0.01 / PI, rel=1e-14)
        assert ft.magnetization_small_field(0.7, 0.0) == 0.0

    def test_near_critical(self):
        xxx = make_model("xxx", 1.0)
        assert ft.magnetization_near_critical(xxx, 4.0) == 1.0
        assert ft.magnetization_near_critical(xxx, 4.0 - PI**2 / 4.0) == pytest.approx(0.0, abs=1e-14)
        assert ft.magnetization_near_critical(xxx, 3.99) == pytest.approx(1.0 - 0.2 / PI, rel=1e-12)
        with pytest.raises(ValueError):
            ft.magnetization_near_critical(xxx, 4.2)


class TestScales:
    def test_h0_special_values(self):
        # closed-form anchors of the weak-field scale
        assert ft.h0(0.5) == pytest.approx(4.0, rel=1e-12)
        assert ft.h0(2.0 / 3.0) == pytest.approx(2.0 * PI, rel=1e-12)
        # continuously matches the isotropic-chain scale at the endpoint
        assert ft.h0(0.9999995) == pytest.approx(ft.SMALL_FIELD_SCALE_XXX, rel=1e-4)

    def test_h0_positive_on_grid(self):
        for eta in (0.05, 0.2, 0.4, 0.6, 0.8, 0.95):
            assert ft.h0(eta) > 0.0

    def test_beta(self):
        assert ft.beta_coefficient(0.5) == pytest.approx(-math.log(2.0), rel=1e-14)


class TestThetaXXX:
    def test_small_field_values(self):
        t = ft.theta_xxx_small_field(1e-3)
        assert t.regime is Regime.SMALL_FIELD
        assert t.theta == pytest.approx(1.0 + 1.0 / (2.0 * math.log(ft.SMALL_FIELD_SCALE_XXX / 1e-3)), rel=1e-14)
        # h -> 0 pushes theta to 1
        assert ft.theta_xxx_small_field(1e-12).theta < ft.theta_xxx_small_field(1e-6).theta < 1.1

    def test_small_field_formula_outside_validity(self):
        t = ft.theta_xxx_small_field(ft.SMALL_FIELD_SCALE_XXX / math.sqrt(math.e))
        assert t.theta == pytest.approx(2.0, rel=1e-12)
        assert t.regime is Regime.SMALL_FIELD

    @pytest.mark.parametrize("h", [1e-3, 1e-4])
    def test_log_scale_identity(self, h):
        # 2 ln(h_x/h) equals 2 pi Lambda with Lambda = ln((2 pi)^3/(e h^2)) / (2 pi)
        lam = math.log((2.0 * PI) ** 3 / (math.e * h * h)) / (2.0 * PI)
        assert 2.0 * math.log(ft.SMALL_FIELD_SCALE_XXX / h) == pytest.approx(2.0 * PI * lam, abs=1e-12)

    def test_near_critical(self):
        assert ft.theta_xxx_near_critical(4.0).theta == 2.0
        assert ft.theta_xxx_near_critical(4.0 - PI**2).theta == pytest.approx(0.0, abs=1e-12)
        t = ft.theta_xxx_near_critical(3.99)
        assert t.theta == pytest.approx(2.0 * (1.0 - 0.1 / PI), rel=1e-12)
        assert t.regime is Regime.NEAR_CRITICAL
        # algebraic identity theta = 2 - 4 Lambda / pi with Lambda = sqrt(h_c - h)/2
        lam = math.sqrt(4.0 - 3.99) / 2.0
        assert t.theta == pytest.approx(2.0 - 4.0 * lam / PI, abs=1e-12)
        with pytest.raises(ValueError):
            ft.theta_xxx_near_critical(4.5)

    def test_small_field_domain(self):
        with pytest.raises(ValueError):
            ft.theta_xxx_small_field(0.0)


class TestAlpha1:
    def test_zero_at_free_fermion_point(self):
        assert abs(ft.alpha1(0.5)) < 1e-15

    def test_limit_toward_ferromagnet(self):
        # the printed coefficient behaves as 1/(2 pi^4 eta^4) for eta -> 0
        eta = 1e-3
        assert ft.alpha1(eta) * eta**4 == pytest.approx(1.0 / (2.0 * PI**4), rel=1e-2)

    def test_limit_at_two_thirds(self):
        eta = 2.0 / 3.0 - 1e-3
        assert ft.alpha1(eta) * (eta - 2.0 / 3.0) == pytest.approx(1.0 / (81.0 * PI**2), rel=0.05)
        assert ft.alpha1(eta) < 0.0

    def test_double_evaluation(self):
        eta = 0.31
        direct = ft.alpha1(eta)
        # same formula, different association order
        reordered = (1.0 - eta) * (1.0 - eta) / math.tan(PI * eta / (2.0 - 2.0 * eta)) / (
            4.0 * PI * eta
        ) / math.sin(PI * eta) / math.sin(PI * eta)
        assert direct == pytest.approx(reordered, rel=1e-12)

    def test_domain(self):
        for eta in (0.0, 2.0 / 3.0, 0.9):
            with pytest.raises(ValueError):
                ft.alpha1(eta)


class TestAlpha2:
    def test_limit_at_two_thirds(self):
        eta = 2.0 / 3.0 + 1e-3
        assert ft.alpha2(eta) * (eta - 2.0 / 3.0) == pytest.approx(1.0 / (81.0 * PI**2), rel=0.05)

    def test_frozen_regression_value(self):
        # double evaluation during development froze this value
        assert ft.alpha2(0.8) == pytest.approx(0.08778741103602664, rel=1e-10)

    def test_positive_on_domain(self):
        for eta in (0.7, 0.75, 0.85, 0.95):
            assert ft.alpha2(eta) > 0.0

    def test_domain(self):
        for eta in (0.5, 2.0 / 3.0, 1.0):
            with pytest.raises(ValueError):
                ft.alpha2(eta)


class TestThetaXXZ:
    def test_zero_field_exact(self):
        for eta in (0.2, 0.5, 2.0 / 3.0, 0.8):
            assert ft.theta_xxz_small_field(eta, 0.0).theta == 1.0 / eta

    def test_branch_exponent_endpoints(self):
        exponent = lambda eta: 4.0 * (1.0 / eta - 1.0)
        assert exponent(2.0 / 3.0) == pytest.approx(2.0, abs=1e-12)
        assert exponent(1.0) == pytest.approx(0.0, abs=1e-12)

    def test_quadratic_branch_value(self):
        eta, h = 0.5, 0.1
        t = ft.theta_xxz_small_field(eta, h)
        assert t.theta == pytest.approx((1.0 + ft.alpha1(eta) * h * h) / eta, rel=1e-14)

    def test_anomalous_branch_value(self):
        eta, h = 0.8, 0.05
        t = ft.theta_xxz_small_field(eta, h)
        assert t.theta == pytest.approx((1.0 + ft.alpha2(eta) * h ** (4.0 * (1.0 / eta - 1.0))) / eta, rel=1e-14)

    def test_singular_point_rejected_for_nonzero_field(self):
        with pytest.raises(ValueError):
            ft.theta_xxz_small_field(2.0 / 3.0, 0.01)

    def test_near_critical(self):
        eta = 0.8
        hc = 2.0 * (1.0 - math.cos(PI * eta))
        assert ft.theta_xxz_near_critical(eta, hc).theta == 2.0
        t = ft.theta_xxz_near_critical(eta, hc - 0.01)
        # tan(pi eta / 2) > 0, tan(pi eta) < 0 on (1/2, 1): correction is negative
        assert t.theta < 2.0
        assert t.regime is Regime.NEAR_CRITICAL and not t.degenerate
        with pytest.raises(ValueError):
            ft.theta_xxz_near_critical(eta, hc + 0.1)

    def test_near_critical_degenerate_at_half(self):
        t = ft.theta_xxz_near_critical(0.5, 1.99)
        assert t.theta == 2.0 and t.degenerate

    def test_sign_above_and_below_half(self):
        hc_04 = 2.0 * (1.0 - math.cos(PI * 0.4))
        assert ft.theta_xxz_near_critical(0.4, hc_04 - 0.01).theta > 2.0
