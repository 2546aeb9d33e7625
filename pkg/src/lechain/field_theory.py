"""Closed-form field-dependent quantities: critical fields, magnetization
limits, susceptibility, and the analytic expansions of the correlation
exponent theta near zero field and near saturation.

Validity windows are not policed numerically: each formula evaluates wherever
it is defined and carries a regime flag, so callers always know which
expansion produced a number.  Exact theta values come from the Bethe module,
never from here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .model import ChainModel, Family, make_model
from .numerics import gamma_fn


class Regime(str, Enum):
    SMALL_FIELD = "small_field"
    NEAR_CRITICAL = "near_critical"
    EXACT = "exact"


@dataclass(frozen=True)
class ThetaEstimate:
    """Correlation exponent theta with the regime that produced it.

    `degenerate` marks points where the printed correction has a divergent
    denominator and the finite limiting value was returned instead.
    """

    theta: float
    regime: Regime
    model: ChainModel
    degenerate: bool = False


#: Field scale of the weak-field exponent expansion on the isotropic chain.
SMALL_FIELD_SCALE_XXX = math.sqrt(8.0 * math.pi**3 / math.e)


def critical_field(model: ChainModel) -> float:
    """Saturation field: 4 for XXX, 2*(1 - cos(pi*eta)) for XXZ."""
    return model.critical_field


def susceptibility(eta: float) -> float:
    """Zero-field magnetic susceptibility (1-eta) / (pi eta sin(pi eta)).

    Finite limit 1/pi^2 at the isotropic endpoint eta = 1; diverges as
    eta -> 0+ where an infinitesimal field aligns the ferromagnet.
    """
    eta = float(eta)
    if not 0.0 < eta <= 1.0:
        raise ValueError("susceptibility requires 0 < eta <= 1")
    if eta == 1.0:
        return 1.0 / math.pi**2
    return (1.0 - eta) / (math.pi * eta * math.sin(math.pi * eta))


def magnetization_small_field(eta: float, h: float) -> float:
    """Linear-response magnetization chi(eta) * h (equals h/pi^2 for XXX)."""
    return susceptibility(eta) * float(h)


def magnetization_near_critical(model: ChainModel, h: float) -> float:
    """Magnetization 1 - (2/pi) sqrt(h_c - h) just below saturation."""
    h = float(h)
    hc = model.critical_field
    if h > hc:
        raise ValueError(f"h = {h} exceeds the saturation field h_c = {hc}")
    return min(1.0, 1.0 - (2.0 / math.pi) * math.sqrt(hc - h))


def theta_xxx_small_field(h: float) -> ThetaEstimate:
    """Weak-field exponent 1 + [2 ln(h_x / h)]^(-1) on the isotropic chain."""
    h = float(h)
    if h <= 0.0:
        raise ValueError("small-field expansion requires h > 0")
    denom = 2.0 * math.log(SMALL_FIELD_SCALE_XXX / h)
    if denom == 0.0:
        raise ValueError("expansion undefined at h equal to the field scale")
    model = make_model(Family.XXX, 1.0, h, allow_saturated=True)
    return ThetaEstimate(theta=1.0 + 1.0 / denom, regime=Regime.SMALL_FIELD, model=model)


def theta_xxx_near_critical(h: float) -> ThetaEstimate:
    """Near-saturation exponent 2*(1 - sqrt(h_c - h)/pi) on the isotropic chain.

    Evaluates wherever defined (any h <= h_c), even far outside validity; the
    regime flag is how callers learn that this is an expansion, not a solve.
    """
    h = float(h)
    if h > 4.0:
        raise ValueError("near-critical expansion requires h <= h_c = 4")
    model = ChainModel(Family.XXX, 1.0, h)
    return ThetaEstimate(
        theta=2.0 * (1.0 - math.sqrt(4.0 - h) / math.pi),
        regime=Regime.NEAR_CRITICAL,
        model=model,
    )


def beta_coefficient(eta: float) -> float:
    """Entropy-like combination (1-eta) ln(1-eta) + eta ln(eta)."""
    eta = float(eta)
    if not 0.0 < eta < 1.0:
        raise ValueError("beta requires 0 < eta < 1")
    return (1.0 - eta) * math.log(1.0 - eta) + eta * math.log(eta)


def h0(eta: float) -> float:
    """Field scale of the weak-field XXZ expansions (all factors positive).

    The Gamma ratio is evaluated in log space: its arguments grow like
    1/(1 - eta) and would otherwise overflow near the isotropic endpoint.
    """
    eta = float(eta)
    if not 0.0 < eta < 1.0:
        raise ValueError("h0 requires 0 < eta < 1")
    one = 1.0 - eta
    log_gamma_ratio = math.lgamma((3.0 - 2.0 * eta) / (2.0 * one)) - math.lgamma(
        (2.0 - eta) / (2.0 * one)
    )
    return (
        4.0
        * eta
        * math.sqrt(math.pi)
        * math.sin(math.pi * eta)
        / one
        * math.exp(beta_coefficient(eta) / (2.0 * one) + log_gamma_ratio)
    )


def alpha1(eta: float) -> float:
    """Quadratic-in-field coefficient of theta for 0 < eta < 2/3.

    Vanishes at eta = 1/2 (free-fermion point, where theta(h) is flat) and
    diverges at both domain endpoints.
    """
    eta = float(eta)
    if not 0.0 < eta < 2.0 / 3.0:
        raise ValueError("alpha1 is defined on 0 < eta < 2/3")
    return (1.0 - eta) ** 2 / (
        4.0
        * math.pi
        * eta
        * math.tan(math.pi * eta / (2.0 * (1.0 - eta)))
        * math.sin(math.pi * eta) ** 2
    )


def alpha2(eta: float) -> float:
    """Weak-field coefficient of theta for 2/3 < eta < 1 (anomalous power)."""
    eta = float(eta)
    if not 2.0 / 3.0 < eta < 1.0:
        raise ValueError("alpha2 is defined on 2/3 < eta < 1")
    inv = 1.0 / eta
    return (
        2.0
        * eta
        * math.exp(2.0 * beta_coefficient(eta) / eta)
        * h0(eta) ** (4.0 * (1.0 - inv))
        * math.tan(math.pi * inv)
        * gamma_fn(1.0 + inv) ** 2
        / gamma_fn(0.5 + inv) ** 2
    )


def theta_xxz_small_field(eta: float, h: float) -> ThetaEstimate:
    """Weak-field exponent for XXZ; the expansion branch switches at eta = 2/3.

    Below 2/3 the correction is quadratic in h; above, the power of h is
    4*(1/eta - 1), interpolating from 2 down to 0 as eta -> 1.  At h = 0 both
    branches collapse to the exact value 1/eta.  Exactly at eta = 2/3 the
    coefficients are singular, so only h = 0 is accepted there.
    """
    eta = float(eta)
    h = float(h)
    if not 0.0 < eta < 1.0:
        raise ValueError("weak-field expansion requires 0 < eta < 1")
    if h < 0.0:
        raise ValueError("magnetic field must be >= 0")
    model = make_model(Family.XXZ, eta, h, allow_saturated=True)
    if h == 0.0:
        return ThetaEstimate(theta=1.0 / eta, regime=Regime.SMALL_FIELD, model=model)
    if eta == 2.0 / 3.0:
        raise ValueError("weak-field coefficients are singular at eta = 2/3")
    if eta < 2.0 / 3.0:
        theta = (1.0 + alpha1(eta) * h * h) / eta
    else:
        theta = (1.0 + alpha2(eta) * h ** (4.0 * (1.0 / eta - 1.0))) / eta
    return ThetaEstimate(theta=theta, regime=Regime.SMALL_FIELD, model=model)


def theta_xxz_near_critical(eta: float, h: float) -> ThetaEstimate:
    """Near-saturation exponent 2 + 4 sqrt(h_c - h) / (pi tan(pi eta/2) tan(pi eta)).

    At eta = 1/2 the tangent product diverges, the correction vanishes in the
    limit, and theta = 2 is returned with the degenerate flag set.
    """
    eta = float(eta)
    h = float(h)
    if not 0.0 < eta < 1.0:
        raise ValueError("near-critical expansion requires 0 < eta < 1")
    model = ChainModel(Family.XXZ, eta, h)
    hc = model.critical_field
    if h > hc:
        raise ValueError(f"h = {h} exceeds the saturation field h_c = {hc}")
    denom = math.tan(math.pi * eta / 2.0) * math.tan(math.pi * eta)
    if abs(denom) > 1e12:
        return ThetaEstimate(theta=2.0, regime=Regime.NEAR_CRITICAL, model=model, degenerate=True)
    theta = 2.0 + 4.0 * math.sqrt(hc - h) / (math.pi * denom)
    return ThetaEstimate(theta=theta, regime=Regime.NEAR_CRITICAL, model=model)
