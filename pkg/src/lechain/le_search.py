"""Direct localizable-entanglement evaluation on small chains.

A measurement plan assigns each assisting site a projective basis from two
Bloch angles.  Enumerating the 2^(n-2) outcome strings leaves the marked pair
in a pure state each time; the localizable entanglement is the plan that
maximizes the probability-weighted average pure-state concurrence.

The optimizer is restricted to rank-1 product projective measurements (two
angles per site) and to a single fixed plan, which lower-bounds any adaptive
scheme.  It is deterministic: restarts walk a seeded low-discrepancy sequence
through angle space, preceded by the all-X, all-Y and all-Z plans, and
coordinate ascent sweeps the sites in order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .quantum import concurrence_pure

_PROB_FLOOR = 1e-14


@dataclass(frozen=True)
class MeasurementPlan:
    """Projective bases for the assisting sites: polar/azimuth per site."""

    sites: tuple
    theta: np.ndarray
    phi: np.ndarray

    def __post_init__(self):
        theta = np.asarray(self.theta, dtype=float)
        phi = np.asarray(self.phi, dtype=float)
        if theta.shape != (len(self.sites),) or phi.shape != (len(self.sites),):
            raise ValueError("need one (theta, phi) pair per assisting site")
        if np.any(theta < 0.0) or np.any(theta > math.pi):
            raise ValueError("polar angles must lie in [0, pi]")
        if np.any(phi < 0.0) or np.any(phi >= 2.0 * math.pi):
            raise ValueError("azimuths must lie in [0, 2 pi)")
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "phi", phi)


@dataclass(frozen=True)
class OutcomeEnsemble:
    """(probability, pair state) per outcome string; zero-probability outcomes
    carry state None and contribute nothing."""

    outcomes: tuple


@dataclass(frozen=True)
class LEResult:
    value: float
    plan: MeasurementPlan
    restarts_used: int
    converged: bool


def ghz_state(n_sites: int) -> np.ndarray:
    """(|0...0> + |1...1>) / sqrt(2) on n_sites qubits."""
    if n_sites < 2:
        raise ValueError("need at least 2 sites")
    v = np.zeros(1 << n_sites, dtype=complex)
    v[0] = v[-1] = 1.0 / math.sqrt(2.0)
    return v


def _check_state_vector(state) -> tuple[np.ndarray, int]:
    v = np.asarray(state, dtype=complex).reshape(-1)
    n = int(round(math.log2(v.size)))
    if 1 << n != v.size:
        raise ValueError("state length must be a power of two")
    if abs(float(np.vdot(v, v).real) - 1.0) > 1e-10:
        raise ValueError("state must be normalized")
    return v, n


def assisting_sites(n_sites: int, pair: tuple[int, int]) -> tuple:
    i, j = pair
    if not (0 <= i < j < n_sites):
        raise ValueError("need 0 <= i < j < n_sites")
    return tuple(k for k in range(n_sites) if k not in (i, j))


def _apply_site_matrix(v: np.ndarray, m: np.ndarray, site: int, n: int) -> np.ndarray:
    """Apply a 2x2 matrix on one site of a full 2^n amplitude vector."""
    lo = 1 << site
    hi = v.size // (2 * lo)
    t = v.reshape(hi, 2, lo)
    return np.einsum("ab,hbl->hal", m, t).reshape(v.size)

def _default_plan_matrix(theta: float, phi: float) -> np.ndarray:
    """Rows are the conjugated basis vectors <u| and <u_perp|."""
    c = math.cos(0.5 * theta)
    s = math.sin(0.5 * theta)
    e = np.exp(-1.0j * phi)
    return np.array([[c, e * s], [s, -e * c]], dtype=complex)


def _pair_order(n: int, pair: tuple[int, int]) -> np.ndarray:
    """Basis permutation grouping amplitudes by (outcome string, pair bits)."""
    i, j = pair
    assist = assisting_sites(n, pair)
    idx = np.arange(1 << n, dtype=np.int64)
    s = np.zeros(idx.size, dtype=np.int64)
    for rank, site in enumerate(assist):
        s |= ((idx >> site) & 1) << rank
    a = (idx >> i) & 1
    b = (idx >> j) & 1
    t_index = ((s << 1) | a) << 1 | b
    order = np.empty(idx.size, dtype=np.int64)
    order[t_index] = idx
    return order


def _outcome_tensor(state: np.ndarray, n: int, plan: MeasurementPlan, order: np.ndarray) -> np.ndarray:
    """All post-measurement (unnormalized) pair amplitudes, shape (2^(n-2), 2, 2)."""
    v = state
    for site, theta, phi in zip(plan.sites, plan.theta, plan.phi):
        v = _apply_site_matrix(v, _default_plan_matrix(theta, phi), site, n)
    return v[order].reshape(-1, 2, 2)


def enumerate_outcomes(state, plan: MeasurementPlan, pair: tuple[int, int]) -> OutcomeEnsemble:
    """Project the assisting sites onto the plan bases, outcome by outcome."""
    v, n = _check_state_vector(state)
    if len(plan.sites) != n - 2 or plan.sites != assisting_sites(n, pair):
        raise ValueError("plan must cover exactly the assisting sites in order")
    if n - 2 > 12:
        raise ValueError("outcome enumeration capped at 12 assisting sites")
    t = _outcome_tensor(v, n, plan, _pair_order(n, pair))
    probs = np.sum(np.abs(t) ** 2, axis=(1, 2))
    outcomes = []
    for p, amp in zip(probs, t):
        if p < _PROB_FLOOR:
            outcomes.append((float(p), None))
        else:
            outcomes.append((float(p), (amp / math.sqrt(p)).reshape(4)))
    return OutcomeEnsemble(outcomes=tuple(outcomes))


def average_concurrence(ensemble: OutcomeEnsemble) -> float:
    """Probability-weighted average pure-state concurrence of an ensemble."""
    total = 0.0
    p_sum = 0.0
    for p, psi in ensemble.outcomes:
        p_sum += p
        if psi is not None:
            total += p * concurrence_pure(psi)
    if abs(p_sum - 1.0) > 1e-10:
        raise ValueError("outcome probabilities do not sum to 1")
    return total


def _objective(state, n, plan_angles, sites, order) -> float:
    """Average concurrence without per-outcome normalization.

    p * 2|ad - bc| of the normalized state equals 2|ad - bc| of the raw
    projected amplitudes, so zero-probability outcomes need no special casing.
    """
    v = state
    for site, theta, phi in zip(sites, plan_angles[0::2], plan_angles[1::2]):
        v = _apply_site_matrix(v, _default_plan_matrix(theta, phi), site, n)
    t = v[order].reshape(-1, 2, 2)
    det = t[:, 0, 0] * t[:, 1, 1] - t[:, 0, 1] * t[:, 1, 0]
    return float(2.0 * np.sum(np.abs(det)))


def _line_maximize(f, k, angles, upper, coarse=9, refine=18):
    """Maximize along coordinate k: coarse scan then golden-section refine."""
    grid = np.linspace(0.0, upper, coarse, endpoint=False)
    best_val = -1.0
    best_x = angles[k]
    for x in grid:
        angles[k] = x
        val = f(angles)
        if val > best_val:
            best_val, best_x = val, x
    step = upper / coarse
    lo, hi = best_x - step, best_x + step
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    c = hi - invphi * (hi - lo)
    d = lo + invphi * (hi - lo)
    angles[k] = c
    fc = f(angles)
    angles[k] = d
    fd = f(angles)
    for _ in range(refine):
        if fc > fd:
            hi, d, fd = d, c, fc
            c = hi - invphi * (hi - lo)
            angles[k] = c
            fc = f(angles)
        else:
            lo, c, fc = c, d, fd
            d = lo + invphi * (hi - lo)
            angles[k] = d
            fd = f(angles)
    x = c if fc > fd else d
    x %= upper
    angles[k] = x
    val = f(angles)
    if val < best_val:
        angles[k] = best_x
        val = best_val
    return val


def _start_angles(m: int, n_angles: int, rng_offsets: np.ndarray) -> np.ndarray:
    """Deterministic start plans: X, Y, Z bases, then a Kronecker sequence."""
    if m == 0:
        angles = np.tile([math.pi / 2.0, 0.0], n_angles // 2)
    elif m == 1:
        angles = np.tile([math.pi / 2.0, math.pi / 2.0], n_angles // 2)
    elif m == 2:
        angles = np.zeros(n_angles)
    else:
        # additive low-discrepancy sequence with irrational strides
        strides = np.array([(math.sqrt(p) % 1.0) for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)])
        strides = np.resize(strides, n_angles)
        frac = ((m - 2) * strides + rng_offsets) % 1.0
        angles = frac * np.tile([math.pi, 2.0 * math.pi], n_angles // 2)
    return angles.astype(float)


def optimize_le(state, pair: tuple[int, int], restarts: int = 32, tol: float = 1e-6,
                seed: int = 0, max_cycles: int = 60) -> LEResult:
    """Maximize the average pair concurrence over product projective plans.

    Coordinate-wise ascent (coarse scan plus golden-section refinement on each
    angle, sites swept in order) from `restarts` deterministic starting plans.
    Always returns the best plan found; `converged` reports whether the two
    best restarts agree within tol.
    """
    v, n = _check_state_vector(state)
    sites = assisting_sites(n, pair)
    if n - 2 > 12:
        raise ValueError("outcome enumeration capped at 12 assisting sites")
    order = _pair_order(n, pair)
    n_angles = 2 * len(sites)
    rng_offsets = np.random.default_rng(seed).random(n_angles)
    uppers = np.tile([math.pi, 2.0 * math.pi], len(sites))

    def f(angles):
        return _objective(v, n, angles, sites, order)

    results = []
    for m in range(max(1, restarts)):
        angles = _start_angles(m, n_angles, rng_offsets)
        best = f(angles)
        for _ in range(max_cycles):
            previous = best
            for k in range(n_angles):
                best = _line_maximize(f, k, angles, uppers[k])
            if best - previous < tol:
                break
        results.append((best, angles.copy()))
    results.sort(key=lambda r: -r[0])
    value, angles = results[0]
    converged = len(results) >= 2 and (results[0][0] - results[1][0]) <= tol
    plan = MeasurementPlan(sites=sites, theta=angles[0::2], phi=angles[1::2] % (2.0 * math.pi))
    return LEResult(value=min(value, 1.0), plan=plan, restarts_used=max(1, restarts), converged=converged)
