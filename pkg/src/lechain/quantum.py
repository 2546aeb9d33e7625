"""Two-spin density matrices, Wootters concurrence, and entanglement bounds.

States and density matrices are plain numpy arrays in the product basis
|00>, |01>, |10>, |11>, with |0> the sigma_z = +1 state; validation helpers
enforce normalization, Hermiticity and positivity at the documented slack.
The spin-flip spectrum is computed from the eigenvalues of rho * rho_tilde
(numerically better conditioned than matrix square roots); a direct
square-root path is kept behind a flag for cross-checking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import svdvals

from . import correlators
from .model import check_separation

PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
_YY = np.kron(PAULI_Y, PAULI_Y)

_PSD_SLACK = 1e-10


@dataclass(frozen=True)
class LEBounds:
    """Lower/upper localizable-entanglement bounds for one pair; lower <= upper."""

    lower: float
    upper: float

    def __post_init__(self):
        if not 0.0 <= self.lower <= 1.0 + 1e-12 or not 0.0 <= self.upper <= 1.0 + 1e-12:
            raise ValueError("bounds must lie in [0, 1]")
        if self.lower > self.upper + 1e-12:
            raise ValueError("lower bound exceeds upper bound")


def le_bounds(qxx: float, qyy: float, qzz: float, qzz_raw: float, sigma_i: float, sigma_j: float) -> LEBounds:
    """Bundle both bounds from connected correlators plus the raw zz data."""
    return LEBounds(
        lower=le_lower_bound(qxx, qyy, qzz),
        upper=le_upper_bound(qzz_raw, sigma_i, sigma_j),
    )


@dataclass(frozen=True)
class CorrelatorTriple:
    """(transverse, longitudinal, magnetization) of a marked spin pair.

    gx is the common <sigma_x sigma_x> = <sigma_y sigma_y>, big_g the raw
    <sigma_z sigma_z>, and sigma the per-site <sigma_z>.  Physicality (a PSD
    assembled density matrix) is checked, never assumed.
    """

    gx: float
    big_g: float
    sigma: float


def check_state(state) -> np.ndarray:
    """Validate a two-spin pure state (length 4, unit norm)."""
    psi = np.asarray(state, dtype=complex).reshape(-1)
    if psi.shape != (4,):
        raise ValueError("two-spin state must have 4 amplitudes")
    norm = float(np.vdot(psi, psi).real)
    if abs(norm - 1.0) > 1e-10:
        raise ValueError(f"state norm^2 = {norm} is not 1")
    return psi


def check_density(rho) -> np.ndarray:
    """Validate a two-spin density matrix (Hermitian, unit trace, PSD)."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError("density matrix must be 4x4")
    if np.max(np.abs(rho - rho.conj().T)) > 1e-12:
        raise ValueError("density matrix is not Hermitian")
    if abs(np.trace(rho).real - 1.0) > 1e-12:
        raise ValueError("density matrix trace is not 1")
    if float(np.linalg.eigvalsh(rho)[0]) < -_PSD_SLACK:
        raise ValueError("density matrix is not positive semidefinite")
    return rho


def concurrence_pure(state) -> float:
    """Concurrence 2|ad - bc| of a normalized two-spin pure state."""
    a, b, c, d = check_state(state)
    return float(2.0 * abs(a * d - b * c))


def density_from_correlators(triple: CorrelatorTriple) -> np.ndarray:
    """Assemble the translation-invariant pair density matrix.

    rho = (1/4) [I + gx (XX + YY) + G ZZ + sigma (IZ + ZI)].  Triples whose
    matrix fails positivity are rejected as unphysical rather than clipped,
    so caller bugs cannot hide behind silent projection.
    """
    gx, big_g, sigma = triple.gx, triple.big_g, triple.sigma
    for name, value in (("gx", gx), ("G", big_g), ("sigma", sigma)):
        if abs(value) > 1.0 + 1e-12:
            raise ValueError(f"|{name}| must be <= 1")
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = 1.0 + big_g + 2.0 * sigma
    rho[1, 1] = 1.0 - big_g
    rho[2, 2] = 1.0 - big_g
    rho[3, 3] = 1.0 + big_g - 2.0 * sigma
    rho[1, 2] = rho[2, 1] = 2.0 * gx
    rho /= 4.0
    if float(np.linalg.eigvalsh(rho)[0]) < -_PSD_SLACK:
        raise ValueError("correlator triple is unphysical (assembled matrix not PSD)")
    return rho


def _spin_flip(rho: np.ndarray) -> np.ndarray:
    return _YY @ rho.conj() @ _YY


def _principal_root(rho: np.ndarray) -> np.ndarray:
    w, v = np.linalg.eigh(rho)
    return (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T


def wootters_concurrence(rho, method: str = "product") -> float:
    """Wootters concurrence max{0, l1 - l2 - l3 - l4} of a two-spin matrix.

    The spin-flip values l_k are the square roots of the eigenvalues of
    rho * rho_tilde.  The default "product" method obtains them as the
    singular values of X^T (sigma_y x sigma_y) X with rho = X X^dagger (the
    same spectrum, but without taking square roots of eigenvalue round-off,
    which matters for nearly pure states).  Method "sqrt" is the diagnostic
    path through sqrt(sqrt(rho) rho_tilde sqrt(rho)).
    """
    rho = check_density(rho)
    if method == "product":
        x = _principal_root(rho)
        lam = svdvals(x.T @ _YY @ x)
    elif method == "sqrt":
        root = _principal_root(rho)
        tilde = _spin_flip(rho)
        lam = np.sqrt(np.clip(np.linalg.eigvalsh(root @ tilde @ root), 0.0, None))
    else:
        raise ValueError("method must be 'product' or 'sqrt'")
    lam = np.sort(lam)[::-1]
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def r_eigenvalues_closed(triple: CorrelatorTriple):
    """Closed-form spin-flip spectrum of the assembled pair matrix.

    Returns (values, sorted_desc); the first two entries are the degenerate
    pair sqrt((1+G)^2 - 4 sigma^2)/4, the last two (1-G)/4 +- gx/2.  Requires
    (1+G)^2 >= 4 sigma^2, which holds for every physical triple.
    """
    gx, big_g, sigma = triple.gx, triple.big_g, triple.sigma
    disc = (1.0 + big_g) ** 2 - 4.0 * sigma * sigma
    if disc < -1e-12:
        raise ValueError("unphysical triple: (1+G)^2 < 4 sigma^2")
    pair = 0.25 * math.sqrt(max(disc, 0.0))
    values = np.array(
        [pair, pair, 0.25 * (1.0 - big_g) + 0.5 * gx, 0.25 * (1.0 - big_g) - 0.5 * gx]
    )
    return values, np.sort(values)[::-1]


def concurrence_from_spectrum(lam) -> float:
    """max{0, 2*max - sum} over a spin-flip spectrum (any order)."""
    lam = np.asarray(lam, dtype=float)
    return float(max(0.0, 2.0 * np.max(lam) - np.sum(lam)))


def concurrence_xxx(n: int) -> float:
    """Pre-measurement concurrence of an isotropic-chain pair at separation n.

    Uses the isotropic closed form with g = <sigma_z sigma_z>(n): the odd
    branch max{0, (-3g-1)/4} and the even branch max{0, -(1-g)/2}.  Only
    nearest neighbors come out nonzero (g < -1/3 requires n = 1).
    """
    n = check_separation(n)
    g = correlators.xxx_zz(n).value
    if n % 2:
        return max(0.0, (-3.0 * g - 1.0) / 4.0)
    return max(0.0, -(1.0 - g) / 2.0)


def concurrence_xxx_field(gx: float, gz: float, sigma: float) -> float:
    """In-field closed form max{0, |gx| - (1-s^2)/2 - gz (1+s^2) / (2(1-s^2))}.

    gz is the connected longitudinal correlator G - sigma^2.  Valid under the
    usual smallness conditions at large separation; no regime auto-detection.
    """
    if abs(sigma) >= 1.0:
        raise ValueError("|sigma| must be < 1")
    s2 = sigma * sigma
    return max(0.0, abs(gx) - 0.5 * (1.0 - s2) - 0.5 * gz * (1.0 + s2) / (1.0 - s2))


def vanishing_distance_xxz(eta: float, amplitude: float | None = None) -> float:
    """Separation (2F)^(1/eta) beyond which zero-field XXZ concurrence dies.

    `amplitude` overrides the computed transverse amplitude F(eta); useful for
    symbolic checks.
    """
    eta = float(eta)
    if not 0.0 < eta < 1.0:
        raise ValueError("requires 0 < eta < 1")
    f_val = correlators.amplitude_F(eta) if amplitude is None else float(amplitude)
    return (2.0 * f_val) ** (1.0 / eta)


def vanishing_distance_field(transverse_amplitude: float, sigma: float, theta: float) -> float:
    """Separation |2 A / (1 - sigma^2)|^theta beyond which in-field concurrence dies.

    The transverse amplitude A(h) is not known in closed form and must be
    supplied by the caller.
    """
    if abs(sigma) >= 1.0:
        raise ValueError("|sigma| must be < 1")
    if theta < 0.0:
        raise ValueError("theta must be >= 0")
    return abs(2.0 * transverse_amplitude / (1.0 - sigma * sigma)) ** theta


def le_lower_bound(qxx: float, qyy: float, qzz: float) -> float:
    """Correlation lower bound max_alpha |Q_aa| on localizable entanglement."""
    for q in (qxx, qyy, qzz):
        if abs(q) > 1.0 + 1e-12:
            raise ValueError("connected correlators must lie in [-1, 1]")
    return max(abs(qxx), abs(qyy), abs(qzz))


def le_upper_bound(qzz_raw: float, sigma_i: float, sigma_j: float) -> float:
    """Assistance upper bound (sqrt(s+) + sqrt(s-)) / 2 on localizable entanglement.

    s_pm = (1 +- <sigma_z sigma_z>)^2 - (sigma_i +- sigma_j)^2 must be
    nonnegative; values within round-off below zero are clamped, anything
    worse is rejected as unphysical.
    """
    for q in (qzz_raw, sigma_i, sigma_j):
        if abs(q) > 1.0 + 1e-12:
            raise ValueError("inputs must lie in [-1, 1]")
    s_plus = (1.0 + qzz_raw) ** 2 - (sigma_i + sigma_j) ** 2
    s_minus = (1.0 - qzz_raw) ** 2 - (sigma_i - sigma_j) ** 2
    for s in (s_plus, s_minus):
        if s < -_PSD_SLACK:
            raise ValueError("unphysical inputs: negative s_pm")
    s_plus = max(s_plus, 0.0)
    s_minus = max(s_minus, 0.0)
    return 0.5 * (math.sqrt(s_plus) + math.sqrt(s_minus))


def assistance_concurrence(rho) -> float:
    """Entanglement of assistance: trace norm of X^T (sigma_y x sigma_y) X.

    X is any factor with rho = X X^dagger; the principal (Hermitian) square
    root is used.  The result is invariant under the gauge freedom X -> X U.
    """
    rho = check_density(rho)
    x = _principal_root(rho)
    return float(np.sum(svdvals(x.T @ _YY @ x)))


def formation_entropy(concurrence: float) -> float:
    """Entanglement of formation H((1 + sqrt(1 - C^2)) / 2) from a concurrence."""
    if not 0.0 <= concurrence <= 1.0:
        raise ValueError("concurrence must lie in [0, 1]")
    x = 0.5 * (1.0 + math.sqrt(max(0.0, 1.0 - concurrence * concurrence)))
    if x in (0.0, 1.0):
        return 0.0
    return float(-x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x))
