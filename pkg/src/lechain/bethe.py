"""Exact correlation exponent from the Fermi-sea integral equations.

The magnon dressed energy eps(lambda) and the fractional charge Z(lambda)
both solve linear integral equations on [-Lambda, Lambda] that differ only in
their right-hand side.  Discretizing on Gauss-Legendre nodes (Nystrom) turns
each into a dense linear system; the Fermi boundary Lambda is then fixed by an
outer bracketed root-find on the edge energy eps(Lambda), and the exponent is
theta = 2 * Z(Lambda)^2.

The XXZ kernel and bare energy are printed in the literature with complex
arguments; here they are coded through the real identities

    sinh(x + ia) sinh(x - ia) = sinh(x)^2 + sin(a)^2
    cosh(x + ia) cosh(x - ia) = cosh(x)^2 - sin(a)^2

(unit-tested against direct complex evaluation).  The XXZ rapidity scale does
not reduce to the XXX one at eta -> 1, so the two families keep independent
code paths and are never blended.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import ChainModel, Family, make_model
from .numerics import NonConvergenceError, find_root, gauss_legendre
from . import field_theory


@dataclass(frozen=True)
class BetheSolution:
    """Fermi boundary, edge charge, exponent, and solver diagnostics."""

    lambda_f: float
    z_edge: float
    theta: float
    grid_order: int
    residual_eps_edge: float
    residual_ie: float


def kernel(model: ChainModel, lam, mu):
    """Integral-equation kernel K(lambda, mu); real and symmetric."""
    lam = np.asarray(lam, dtype=float)
    mu = np.asarray(mu, dtype=float)
    x = lam - mu
    if model.family is Family.XXX:
        return -2.0 / (1.0 + x * x)
    s = math.sin(math.pi * model.eta)
    return math.sin(2.0 * math.pi * model.eta) / (np.sinh(x) ** 2 + s * s)


def bare_energy(model: ChainModel, lam):
    """Bare magnon energy eps0(lambda) including the field term 2h."""
    lam = np.asarray(lam, dtype=float)
    if model.family is Family.XXX:
        return 2.0 * model.h - 2.0 / (0.25 + lam * lam)
    s = math.sin(math.pi * model.eta / 2.0)
    return 2.0 * model.h - 2.0 * math.sin(math.pi * model.eta) ** 2 / (np.cosh(lam) ** 2 - s * s)


class NystromSolution:
    """Solution of one Fermi-sea integral equation on Gauss-Legendre nodes.

    Calling the object evaluates the natural interpolant
    rhs(lambda) + (1/2pi) * sum_j K(lambda, x_j) w_j f_j, which satisfies the
    integral equation identically once the nodal values f_j solve the dense
    system; accuracy is therefore judged by node-doubling, not by plugging the
    interpolant back in.
    """

    def __init__(self, model, lambda_f, nodes, weights, values, rhs, residual_ie):
        self.model = model
        self.lambda_f = float(lambda_f)
        self.nodes = nodes
        self.weights = weights
        self.values = values
        self._rhs = rhs
        self.residual_ie = float(residual_ie)

    def __call__(self, lam):
        lam = np.atleast_1d(np.asarray(lam, dtype=float))
        base = np.asarray(self._rhs(lam), dtype=float) * np.ones_like(lam)
        if self.nodes.size:
            k = kernel(self.model, lam[:, None], self.nodes[None, :])
            base = base + k @ (self.weights * self.values) / (2.0 * math.pi)
        if base.shape == (1,):
            return float(base[0])
        return base


def _solve_fermi_sea(model: ChainModel, lambda_f: float, order: int, rhs) -> NystromSolution:
    if lambda_f < 0.0:
        raise ValueError("Fermi boundary must be >= 0")
    if order < 8:
        raise ValueError("quadrature order must be >= 8")
    if lambda_f == 0.0:
        empty = np.empty(0)
        return NystromSolution(model, 0.0, empty, empty, empty, rhs, 0.0)
    rule = gauss_legendre(order, -lambda_f, lambda_f)
    k = kernel(model, rule.nodes[:, None], rule.nodes[None, :])
    a = np.eye(order) - k * rule.weights[None, :] / (2.0 * math.pi)
    b = np.asarray(rhs(rule.nodes), dtype=float) * np.ones(order)
    try:
        values = np.linalg.solve(a, b)
    except np.linalg.LinAlgError as exc:
        raise NonConvergenceError(f"singular Nystrom system at Lambda = {lambda_f}") from exc
    residual = float(np.max(np.abs(a @ values - b)))
    return NystromSolution(model, lambda_f, rule.nodes, rule.weights, values, rhs, residual)


def solve_dressed_energy(model: ChainModel, lambda_f: float, order: int = 200) -> NystromSolution:
    """Dressed energy eps on [-Lambda, Lambda]; eps == eps0 when Lambda = 0."""
    return _solve_fermi_sea(model, lambda_f, order, lambda lam: bare_energy(model, lam))


def fractional_charge(model: ChainModel, lambda_f: float, order: int = 200) -> float:
    """Fractional charge Z evaluated at the Fermi edge (unit right-hand side)."""
    solution = _solve_fermi_sea(model, lambda_f, order, lambda lam: np.ones_like(np.asarray(lam, float)))
    if lambda_f == 0.0:
        return 1.0
    return float(solution(lambda_f))


def _with_field(model: ChainModel, h: float) -> ChainModel:
    return make_model(model.family, model.eta, h, allow_saturated=True)


def _bracket_estimate(model: ChainModel, h: float) -> float:
    """Generous upper bound for the Fermi boundary from the known limits."""
    hc = model.critical_field
    guesses = [0.1, 1.0]
    if h < hc:
        if model.family is Family.XXX:
            guesses.append(math.sqrt(hc - h) / 2.0)
            guesses.append(math.log((2.0 * math.pi) ** 3 / (math.e * h * h)) / (2.0 * math.pi))
        else:
            guesses.append(math.sqrt(hc - h) / (2.0 * math.tan(math.pi * model.eta / 2.0)))
            scale = field_theory.h0(model.eta)
            if h < scale:
                guesses.append((1.0 - model.eta) * math.log(scale / h))
    return 3.0 * max(guesses)


def find_fermi_boundary(model: ChainModel, h: float, order: int = 200) -> float:
    """Fermi boundary Lambda(h): the dressed energy vanishes at the sea edge.

    Returns 0 for h >= h_c (empty sea / saturated chain).  The outer solve is
    a bracketed root-find on the edge energy, with the bracket grown
    geometrically if the asymptotic-based first guess is too small.
    """
    h = float(h)
    if h <= 0.0:
        raise ValueError("find_fermi_boundary requires h > 0")
    m = _with_field(model, h)
    if h >= m.critical_field:
        return 0.0

    def edge_energy(lam: float) -> float:
        if lam == 0.0:
            return float(bare_energy(m, 0.0))
        return float(solve_dressed_energy(m, lam, order)(lam))

    hi = _bracket_estimate(m, h)
    for _ in range(60):
        if edge_energy(hi) > 0.0:
            break
        hi *= 2.0
    else:
        raise NonConvergenceError("could not bracket the Fermi boundary; raise the order")
    return find_root(edge_energy, 0.0, hi, tol=1e-12)


def theta_exact(model: ChainModel, h: float, order: int = 200) -> BetheSolution:
    """Exact exponent theta(h) = 2 Z(Lambda)^2 with full solver diagnostics."""
    h = float(h)
    m = _with_field(model, h)
    if not 0.0 < h <= m.critical_field:
        raise ValueError(f"theta_exact requires 0 < h <= h_c = {m.critical_field}")
    lam = find_fermi_boundary(model, h, order)
    energy = solve_dressed_energy(m, lam, order)
    residual_edge = abs(energy(lam)) if lam > 0.0 else 0.0
    if lam > 0.0 and residual_edge > 1e-8:
        raise NonConvergenceError(f"edge energy residual {residual_edge:.2e} exceeds 1e-8")
    z = fractional_charge(m, lam, order)
    return BetheSolution(
        lambda_f=lam,
        z_edge=z,
        theta=2.0 * z * z,
        grid_order=order,
        residual_eps_edge=residual_edge,
        residual_ie=energy.residual_ie,
    )


def theta_curve(model: ChainModel, h_grid, order: int = 200) -> list[BetheSolution]:
    """theta_exact along a field grid inside (0, h_c]; order of points preserved."""
    hc = model.critical_field
    grid = [float(h) for h in h_grid]
    for h in grid:
        if not 0.0 < h <= hc:
            raise ValueError(f"grid point h = {h} outside (0, h_c = {hc}]")
    return [theta_exact(model, h, order) for h in grid]
