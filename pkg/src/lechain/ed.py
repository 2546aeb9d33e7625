"""Exact diagonalization of finite chains: the trust anchor for everything else.

Hamiltonians are assembled with bit operations in the sigma_z product basis
(bit k of the index is site k; bit value 0 is the sigma_z = +1 state) and
conserve total sigma_z, so the ground state is found by dense diagonalization
sector by sector.  At 14 sites the largest sector holds 3432 states; dense
solves there are cheap and bit-exact reproducible, which matters more for an
oracle than speed.

Conventions implemented verbatim:
  XXX:  H = sum_m (XX + YY + ZZ) - h sum_m Z
  XXZ:  H = -sum_m (XX + YY + Delta (ZZ - 1)) - h sum_m Z
A regression test pins the Delta -> 1 relation between the two (overall sign
plus constant shift) so convention drift cannot pass silently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np
import scipy.sparse as sp

from .model import ChainModel, Family


class Boundary(str, Enum):
    OPEN = "open"
    PERIODIC = "periodic"


MAX_SITES = 14


@dataclass(frozen=True)
class FiniteChain:
    """A finite chain small enough for dense-per-sector diagonalization."""

    model: ChainModel
    n_sites: int
    boundary: Boundary = Boundary.OPEN

    def __post_init__(self):
        if not 2 <= self.n_sites <= MAX_SITES:
            raise ValueError(f"n_sites must be in 2..{MAX_SITES}")


@dataclass(frozen=True)
class GroundState:
    """Normalized ground-state vector with its energy and sigma_z sector."""

    energy: float
    vector: np.ndarray
    sz_sector: int | None


class CorrelatorResult(NamedTuple):
    raw: float
    connected: float


def _bonds(n_sites: int, boundary: Boundary):
    bonds = [(m, m + 1) for m in range(n_sites - 1)]
    if boundary is Boundary.PERIODIC:
        bonds.append((n_sites - 1, 0))
    return bonds


def _assemble(n_sites, bonds, diag_bond, offdiag_bond, h):
    """Generic sigma_z-conserving two-body assembly via bit masks."""
    dim = 1 << n_sites
    idx = np.arange(dim, dtype=np.int64)
    sz = np.zeros(dim)
    diag = np.zeros(dim)
    for k in range(n_sites):
        sz += 1.0 - 2.0 * ((idx >> k) & 1)
    diag += -h * sz
    rows = [idx]
    cols = [idx]
    vals_diag = diag
    data = []
    for (i, j) in bonds:
        bi = (idx >> i) & 1
        bj = (idx >> j) & 1
        szsz = (1.0 - 2.0 * bi) * (1.0 - 2.0 * bj)
        vals_diag = vals_diag + diag_bond(szsz)
        mask = bi != bj
        flip = idx[mask] ^ ((1 << i) | (1 << j))
        rows.append(idx[mask])
        cols.append(flip)
        data.append(np.full(flip.shape, offdiag_bond))
    rows = np.concatenate(rows)
    cols = np.concatenate(cols)
    vals = np.concatenate([vals_diag] + data)
    return sp.csr_matrix((vals, (rows, cols)), shape=(dim, dim))


def _xxx_matrix(n_sites, boundary, h):
    return _assemble(n_sites, _bonds(n_sites, boundary), lambda szsz: szsz, 2.0, h)


def _xxz_matrix(n_sites, boundary, delta, h):
    return _assemble(
        n_sites, _bonds(n_sites, boundary), lambda szsz: -delta * (szsz - 1.0), -2.0, h
    )


def build_hamiltonian(chain: FiniteChain) -> sp.csr_matrix:
    """Sparse Hamiltonian of the chain; Hermitian, conserves total sigma_z."""
    model = chain.model
    if model.family is Family.XXX:
        return _xxx_matrix(chain.n_sites, chain.boundary, model.h)
    return _xxz_matrix(chain.n_sites, chain.boundary, model.delta, model.h)


def _sector_indices(n_sites: int):
    """Basis indices grouped by number of down spins (bit popcount)."""
    dim = 1 << n_sites
    idx = np.arange(dim, dtype=np.int64)
    pop = np.zeros(dim, dtype=np.int64)
    for k in range(n_sites):
        pop += (idx >> k) & 1
    return [idx[pop == n_down] for n_down in range(n_sites + 1)]


def _fix_phase(vec: np.ndarray) -> np.ndarray:
    k = int(np.argmax(np.abs(vec)))
    phase = vec[k] / abs(vec[k])
    return vec * np.conj(phase)


def ground_state(chain: FiniteChain, method: str = "sector") -> GroundState:
    """Lowest eigenpair, deterministic across runs.

    method "sector" diagonalizes each total-sigma_z block densely and, among
    degenerate minima, prefers the smallest |sigma_z| sector with ties going
    to the nonnegative one.  method "dense" diagonalizes the full matrix
    (n_sites <= 12) and serves as the independent second path.
    """
    h_mat = build_hamiltonian(chain)
    n = chain.n_sites
    if method == "dense":
        if n > 12:
            raise ValueError("dense method supported for n_sites <= 12")
        w, v = np.linalg.eigh(h_mat.toarray())
        vec = _fix_phase(v[:, 0].astype(complex))
        sz_val = _total_sz_expectation(vec, n)
        sector = int(round(sz_val)) if abs(sz_val - round(sz_val)) < 1e-8 else None
        return GroundState(energy=float(w[0]), vector=vec, sz_sector=sector)
    if method != "sector":
        raise ValueError("method must be 'sector' or 'dense'")
    best = None
    sectors = _sector_indices(n)
    order = sorted(range(n + 1), key=lambda nd: (abs(n - 2 * nd), 1 if n - 2 * nd < 0 else 0))
    for n_down in order:
        idx = sectors[n_down]
        block = h_mat[np.ix_(idx, idx)].toarray()
        w, v = np.linalg.eigh(block)
        if best is None or w[0] < best[0] - 1e-12:
            best = (float(w[0]), idx, v[:, 0], n - 2 * n_down)
    energy, idx, block_vec, sector = best
    vec = np.zeros(1 << n, dtype=complex)
    vec[idx] = block_vec
    return GroundState(energy=energy, vector=_fix_phase(vec), sz_sector=sector)


def _n_sites_of(gs: GroundState) -> int:
    n = int(round(math.log2(gs.vector.size)))
    if 1 << n != gs.vector.size:
        raise ValueError("state vector length is not a power of two")
    return n


def _bit_table(n_sites: int) -> np.ndarray:
    idx = np.arange(1 << n_sites, dtype=np.int64)
    return np.stack([(idx >> k) & 1 for k in range(n_sites)], axis=1)


def _total_sz_expectation(vec: np.ndarray, n_sites: int) -> float:
    prob = np.abs(vec) ** 2
    bits = _bit_table(n_sites)
    return float(np.sum(prob[:, None] * (1.0 - 2.0 * bits)))


def expectation_sigma(gs: GroundState, alpha: str, i: int) -> float:
    """Single-site <sigma_alpha> on site i."""
    n = _n_sites_of(gs)
    if not 0 <= i < n:
        raise IndexError("site index out of range")
    v = gs.vector
    idx = np.arange(v.size, dtype=np.int64)
    bi = (idx >> i) & 1
    if alpha == "z":
        return float(np.sum((np.abs(v) ** 2) * (1.0 - 2.0 * bi)))
    flip = idx ^ (1 << i)
    if alpha == "x":
        return float(np.real(np.sum(np.conj(v[flip]) * v)))
    if alpha == "y":
        phase = 1.0j * (1.0 - 2.0 * bi)
        return float(np.real(np.sum(np.conj(v[flip]) * phase * v)))
    raise ValueError("alpha must be one of 'x', 'y', 'z'")


def correlator(gs: GroundState, alpha: str, i: int, j: int) -> CorrelatorResult:
    """Raw <sigma_a sigma_a> and connected Q_aa for sites i < j."""
    n = _n_sites_of(gs)
    if not (0 <= i < j < n):
        raise IndexError("need 0 <= i < j < n_sites")
    v = gs.vector
    idx = np.arange(v.size, dtype=np.int64)
    bi = (idx >> i) & 1
    bj = (idx >> j) & 1
    if alpha == "z":
        raw = float(np.sum((np.abs(v) ** 2) * (1.0 - 2.0 * bi) * (1.0 - 2.0 * bj)))
    elif alpha in ("x", "y"):
        flip = idx ^ ((1 << i) | (1 << j))
        if alpha == "x":
            raw = float(np.real(np.sum(np.conj(v[flip]) * v)))
        else:
            sign = -(1.0 - 2.0 * bi) * (1.0 - 2.0 * bj)
            raw = float(np.real(np.sum(np.conj(v[flip]) * sign * v)))
    else:
        raise ValueError("alpha must be one of 'x', 'y', 'z'")
    connected = raw - expectation_sigma(gs, alpha, i) * expectation_sigma(gs, alpha, j)
    return CorrelatorResult(raw=raw, connected=connected)


def reduced_density(gs: GroundState, i: int, j: int) -> np.ndarray:
    """Partial trace onto sites (i, j); rows ordered |s_i s_j> = 00,01,10,11."""
    n = _n_sites_of(gs)
    if not (0 <= i < j < n):
        raise IndexError("need 0 <= i < j < n_sites")
    v = gs.vector
    idx = np.arange(v.size, dtype=np.int64)
    bi = (idx >> i) & 1
    bj = (idx >> j) & 1
    low = idx & ((1 << i) - 1)
    mid = (idx >> (i + 1)) & ((1 << (j - i - 1)) - 1)
    high = idx >> (j + 1)
    rest = low | (mid << i) | (high << (j - 1))
    m = np.zeros((4, 1 << (n - 2)), dtype=complex)
    m[2 * bi + bj, rest] = v
    return m @ m.conj().T
