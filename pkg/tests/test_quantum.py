"""Concurrence paths (pure, spectral closed form, general spin-flip),
entanglement bounds, and the assistance trace-norm formula, cross-checked
against each other on random physical inputs."""

import math

import numpy as np
import pytest

from lechain import quantum as q

BELL_PHI = np.array([1.0, 0.0, 0.0, 1.0]) / math.sqrt(2.0)
LN2 = math.log(2.0)


def random_physical_triple(rng) -> q.CorrelatorTriple:
    """Uniform draw from the exact positivity region of the assembled matrix."""
    sigma = rng.uniform(-0.9, 0.9)
    big_g = rng.uniform(2.0 * abs(sigma) - 1.0, 1.0)
    gx_max = 0.5 * (1.0 - big_g)
    return q.CorrelatorTriple(gx=rng.uniform(-gx_max, gx_max), big_g=big_g, sigma=sigma)


def random_pure_state(rng) -> np.ndarray:
    psi = rng.normal(size=4) + 1j * rng.normal(size=4)
    return psi / np.linalg.norm(psi)


class TestConcurrencePure:
    def test_bell(self):
        assert q.concurrence_pure(BELL_PHI) == pytest.approx(1.0, abs=1e-12)

    def test_product(self):
        assert q.concurrence_pure([0.0, 1.0, 0.0, 0.0]) == 0.0

    def test_partially_entangled(self):
        assert q.concurrence_pure([0.8, 0.0, 0.0, 0.6]) == pytest.approx(0.96, abs=1e-12)

    def test_rejects_unnormalized(self):
        with pytest.raises(ValueError):
            q.concurrence_pure([1.0, 1.0, 0.0, 0.0])


class TestDensityAssembly:
    def test_maximally_mixed(self):
        rho = q.density_from_correlators(q.CorrelatorTriple(0.0, 0.0, 0.0))
        assert np.allclose(rho, np.eye(4) / 4.0)

    def test_isotropic_nearest_neighbor(self):
        g = (1.0 - 4.0 * LN2) / 3.0
        rho = q.density_from_correlators(q.CorrelatorTriple(g, g, 0.0))
        assert np.trace(rho).real == pytest.approx(1.0, abs=1e-14)
        # matches the direct Pauli expansion
        paulis = [np.eye(2), q.PAULI_X, q.PAULI_Y, q.PAULI_Z]
        direct = 0.25 * (
            np.kron(paulis[0], paulis[0])
            + g * (np.kron(q.PAULI_X, q.PAULI_X) + np.kron(q.PAULI_Y, q.PAULI_Y))
            + g * np.kron(q.PAULI_Z, q.PAULI_Z)
        )
        assert np.max(np.abs(rho - direct)) < 1e-15

    def test_fully_polarized_projector(self):
        rho = q.density_from_correlators(q.CorrelatorTriple(0.0, 1.0, 1.0))
        expected = np.zeros((4, 4))
        expected[0, 0] = 1.0
        assert np.allclose(rho, expected, atol=1e-14)

    def test_unphysical_triple_rejected(self):
        # (1 - G)/4 - gx/2 < 0 in the first, (1 + G)/4 - sigma/2 < 0 in the second
        with pytest.raises(ValueError):
            q.density_from_correlators(q.CorrelatorTriple(0.9, 0.9, 0.0))
        with pytest.raises(ValueError):
            q.density_from_correlators(q.CorrelatorTriple(0.0, 0.0, 0.8))


class TestWootters:
    def test_bell(self):
        rho = np.outer(BELL_PHI, BELL_PHI)
        assert q.wootters_concurrence(rho) == pytest.approx(1.0, abs=1e-10)

    def test_maximally_mixed(self):
        assert q.wootters_concurrence(np.eye(4) / 4.0) == 0.0

    def test_werner_against_eigendecomposition_oracle(self):
        p = 0.8
        rho = p * np.outer(BELL_PHI, BELL_PHI) + (1.0 - p) * np.eye(4) / 4.0
        # direct oracle: spin-flip spectrum by brute eigendecomposition
        tilde = q._spin_flip(rho)
        lam = np.sort(np.sqrt(np.clip(np.linalg.eigvals(rho @ tilde).real, 0.0, None)))[::-1]
        oracle = max(0.0, lam[0] - lam[1] - lam[2] - lam[3])
        assert oracle == pytest.approx((3.0 * p - 1.0) / 2.0, abs=1e-12)
        assert q.wootters_concurrence(rho) == pytest.approx(0.7, abs=1e-12)

    def test_sqrt_method_agrees(self):
        rng = np.random.default_rng(2)
        for _ in range(50):
            rho = q.density_from_correlators(random_physical_triple(rng))
            assert q.wootters_concurrence(rho, "sqrt") == pytest.approx(
                q.wootters_concurrence(rho, "product"), abs=1e-9
            )

    def test_rejects_non_psd(self):
        bad = np.diag([0.7, 0.5, -0.1, -0.1])
        with pytest.raises(ValueError):
            q.wootters_concurrence(bad)


class TestClosedFormSpectrum:
    def test_maximally_mixed_quadruple(self):
        vals, _ = q.r_eigenvalues_closed(q.CorrelatorTriple(0.0, 0.0, 0.0))
        assert np.allclose(vals, 0.25)

    def test_isotropic_case_structure(self):
        g = -0.59
        vals, ordered = q.r_eigenvalues_closed(q.CorrelatorTriple(g, g, 0.0))
        assert sorted(vals) == pytest.approx(sorted([(1 + g) / 4] * 3 + [(1 - 3 * g) / 4]), abs=1e-15)
        assert ordered[0] == pytest.approx((1 - 3 * g) / 4, abs=1e-15)

    def test_closed_vs_general_on_random_triples(self):
        rng = np.random.default_rng(7)
        worst = 0.0
        for _ in range(1000):
            t = random_physical_triple(rng)
            general = q.wootters_concurrence(q.density_from_correlators(t))
            closed = q.concurrence_from_spectrum(q.r_eigenvalues_closed(t)[0])
            worst = max(worst, abs(general - closed))
        assert worst <= 1e-10

    def test_unphysical_discriminant(self):
        with pytest.raises(ValueError):
            q.r_eigenvalues_closed(q.CorrelatorTriple(0.0, -0.5, 0.9))


class TestPureVsMixedPaths:
    def test_rank_one_consistency(self):
        rng = np.random.default_rng(21)
        for _ in range(1000):
            psi = random_pure_state(rng)
            rho = np.outer(psi, psi.conj())
            assert q.wootters_concurrence(rho) == pytest.approx(
                q.concurrence_pure(psi), abs=1e-10
            )


class TestIsotropicClosedForm:
    def test_nearest_neighbor_value(self):
        assert q.concurrence_xxx(1) == pytest.approx(LN2 - 0.5, abs=1e-12)

    @pytest.mark.parametrize("n", list(range(2, 11)))
    def test_vanishes_beyond_nearest_neighbor(self, n):
        assert q.concurrence_xxx(n) == 0.0

    def test_odd_branch_threshold(self):
        # the odd-separation branch max{0, (-3g-1)/4} turns on only for g < -1/3
        assert (-3.0 * (-1.0 / 3.0) - 1.0) / 4.0 == 0.0
        for g in (-0.2, -0.33):
            assert max(0.0, (-3.0 * g - 1.0) / 4.0) == 0.0
        assert max(0.0, (-3.0 * -0.4 - 1.0) / 4.0) > 0.0


class TestVanishingDistances:
    def test_symbolic_amplitude(self):
        assert q.vanishing_distance_xxz(0.5, amplitude=1.0) == pytest.approx(4.0, abs=1e-14)

    def test_computed_amplitude_stability(self):
        from lechain import correlators as corr

        a = (2.0 * corr.amplitude_F.__wrapped__(0.5, 1e-10, 48)) ** 2
        b = (2.0 * corr.amplitude_F.__wrapped__(0.5, 1e-10, 96)) ** 2
        assert abs(a - b) <= 1e-6
        assert q.vanishing_distance_xxz(0.5) == pytest.approx(a, abs=1e-6)

    def test_grows_toward_isotropic_point(self):
        vals = [q.vanishing_distance_xxz(e) for e in (0.85, 0.9, 0.95, 0.99)]
        assert all(b > a for a, b in zip(vals, vals[1:]))

    def test_field_variant(self):
        assert q.vanishing_distance_field(0.5 * (1.0 - 0.3**2), 0.3, 1.7) == pytest.approx(1.0, abs=1e-14)
        assert q.vanishing_distance_field(1.0, 0.0, 2.0) == pytest.approx(4.0, abs=1e-14)
        assert q.vanishing_distance_field(7.3, 0.2, 0.0) == pytest.approx(1.0, abs=1e-14)
        with pytest.raises(ValueError):
            q.vanishing_distance_field(1.0, 1.0, 2.0)

    def test_in_field_closed_form(self):
        assert q.concurrence_xxx_field(0.9, 0.0, 0.0) == pytest.approx(0.4, abs=1e-14)
        assert q.concurrence_xxx_field(0.1, 0.0, 0.0) == 0.0


class TestBounds:
    def test_lower_bound_values(self):
        v = 0.5908629072
        assert q.le_lower_bound(-v, -v, -v) == pytest.approx(v, abs=1e-12)
        assert q.le_lower_bound(0.0, 0.0, 0.0) == 0.0
        assert q.le_lower_bound(0.2, -0.7, 0.1) == pytest.approx(0.7, abs=1e-15)

    def test_upper_bound_is_one_without_magnetization(self):
        for qzz in (-1.0, -0.3, 0.0, 0.42, 1.0):
            assert q.le_upper_bound(qzz, 0.0, 0.0) == pytest.approx(1.0, abs=1e-15)

    def test_upper_bound_fully_polarized(self):
        assert q.le_upper_bound(1.0, 1.0, 1.0) == 0.0

    def test_upper_bound_far_separation_limit(self):
        for s in (0.2, 0.6, 0.9):
            assert q.le_upper_bound(s * s, s, s) == pytest.approx(1.0 - s * s, abs=1e-10)

    def test_ordering_on_random_physical_states(self):
        rng = np.random.default_rng(13)
        for _ in range(1000):
            t = random_physical_triple(rng)
            lower = q.le_lower_bound(t.gx, t.gx, t.big_g - t.sigma**2)
            upper = q.le_upper_bound(t.big_g, t.sigma, t.sigma)
            assert lower <= upper + 1e-12
            # the bundled type enforces the same ordering invariant
            b = q.le_bounds(t.gx, t.gx, t.big_g - t.sigma**2, t.big_g, t.sigma, t.sigma)
            assert (b.lower, b.upper) == (lower, upper)

    def test_bounds_type_rejects_inverted_pair(self):
        with pytest.raises(ValueError):
            q.LEBounds(lower=0.8, upper=0.2)
        with pytest.raises(ValueError):
            q.LEBounds(lower=-0.1, upper=0.5)

    def test_unphysical_inputs(self):
        # s_minus = (1 - 0.9)^2 - (0.9 + 0.9)^2 < 0
        with pytest.raises(ValueError):
            q.le_upper_bound(0.9, 0.9, -0.9)
        with pytest.raises(ValueError):
            q.le_lower_bound(1.5, 0.0, 0.0)


class TestAssistance:
    def test_bell(self):
        assert q.assistance_concurrence(np.outer(BELL_PHI, BELL_PHI)) == pytest.approx(1.0, abs=1e-10)

    def test_maximally_mixed(self):
        # direct singular-value oracle: X = I/2, so the norm is tr|YY|/4 = 1
        yy = np.kron(q.PAULI_Y, q.PAULI_Y)
        x = (np.eye(4) / 2.0).T @ yy @ (np.eye(4) / 2.0)
        oracle = float(np.sum(np.linalg.svd(x, compute_uv=False)))
        assert oracle == pytest.approx(1.0, abs=1e-12)
        assert q.assistance_concurrence(np.eye(4) / 4.0) == pytest.approx(1.0, abs=1e-10)

    def test_gauge_invariance(self):
        rng = np.random.default_rng(17)
        yy = np.kron(q.PAULI_Y, q.PAULI_Y)
        for _ in range(25):
            t = random_physical_triple(rng)
            rho = q.density_from_correlators(t)
            base = q.assistance_concurrence(rho)
            # Cholesky-like factor (regularized) and a random-unitary gauge
            w, v = np.linalg.eigh(rho)
            x = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T
            z = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
            u, _ = np.linalg.qr(z)
            xu = x @ u
            alt = float(np.sum(np.linalg.svd(xu.T @ yy @ xu, compute_uv=False)))
            assert alt == pytest.approx(base, abs=1e-10)
            chol = np.linalg.cholesky(rho + 1e-13 * np.eye(4))
            alt2 = float(np.sum(np.linalg.svd(chol.T @ yy @ chol, compute_uv=False)))
            assert alt2 == pytest.approx(base, abs=1e-5)

    def test_matches_upper_bound_at_zero_magnetization(self):
        rng = np.random.default_rng(19)
        for _ in range(50):
            t = random_physical_triple(rng)
            t0 = q.CorrelatorTriple(gx=t.gx, big_g=t.big_g, sigma=0.0)
            rho = q.density_from_correlators(t0)
            assert q.assistance_concurrence(rho) == pytest.approx(
                q.le_upper_bound(t0.big_g, 0.0, 0.0), abs=1e-10
            )


def test_formation_entropy():
    assert q.formation_entropy(0.0) == 0.0
    assert q.formation_entropy(1.0) == pytest.approx(1.0, abs=1e-12)
    assert 0.0 < q.formation_entropy(0.5) < 1.0
