import math
from itertools import combinations

import numpy as np
import pytest

from eurbounds.bounds import (
    de_vicente,
    full_report,
    ladder,
    maassen_uffink,
    majorization_bound,
    majorization_vector,
    s_sequence,
    s_sequence_spectral,
    s_sequence_spectral_general,
)
from eurbounds.generators import haar_random, qft, qft_power, qubit_rotation, spin_rotation
from eurbounds.linalg import eigh_real_symmetric
from eurbounds.stochastic import shannon_entropy, unistochastic

# symmetric bistochastic 3x3 with spectrum (1, -1/2, -1/2); the argmax of its
# powers alternates between off-diagonal (odd n) and diagonal (even n)
NEGATIVE_EIG_UBAR = np.array([[0.0, 0.5, 0.5], [0.5, 0.0, 0.5], [0.5, 0.5, 0.0]])


def qubit_s_closed_form(theta, n):
    """Largest-entry closed form for powers of the 2x2 squared rotation."""
    return ((1 + abs(math.cos(2 * theta)) ** n) / 2) ** 2


class TestSSequence:
    def test_identity(self):
        assert np.array_equal(s_sequence(np.eye(5), 6), np.ones(6))

    @pytest.mark.parametrize("theta", [0.15, 0.45, math.pi / 4])
    def test_qubit_closed_form(self, theta):
        ubar = unistochastic(qubit_rotation(theta))
        got = s_sequence(ubar, 12)
        expected = [qubit_s_closed_form(theta, n) for n in range(1, 13)]
        assert np.abs(got - expected).max() <= 1e-12

    def test_flat_matrix(self):
        # all entries 1/M: every product stays flat, so s_n = 1/M^2 for all n,
        # consistent with the first-rung bound -log(1/M) = log M
        m = 6
        ubar = unistochastic(qft(m))
        got = s_sequence(ubar, 8)
        assert np.abs(got - 1 / m**2).max() <= 1e-12
        assert maassen_uffink(ubar) == pytest.approx(math.log(m), abs=1e-12)

    @pytest.mark.parametrize("seed", range(4))
    def test_non_symmetric_matches_spectral_path(self, seed):
        ubar = unistochastic(haar_random(5, 70 + seed))
        assert np.abs(ubar - ubar.T).max() > 1e-6  # genuinely non-symmetric
        direct = s_sequence(ubar, 8)
        spectral = s_sequence_spectral_general(ubar, 8)
        assert np.abs(direct - spectral).max() <= 1e-10

    def test_non_increasing_and_in_unit_interval(self):
        for seed in range(4):
            ubar = unistochastic(haar_random(4, seed))
            s = s_sequence(ubar, 16)
            assert np.all(s > 0) and np.all(s <= 1)
            assert np.all(np.diff(s) <= 1e-12)

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            s_sequence(np.ones((3, 3)), 4)
        with pytest.raises(ValueError):
            s_sequence(np.eye(3), 0)


class TestSSequenceSpectral:
    def test_qubit_matches_closed_form(self):
        theta = 0.45
        ubar = unistochastic(qubit_rotation(theta))
        got = s_sequence_spectral(ubar, 10)
        expected = [qubit_s_closed_form(theta, n) for n in range(1, 11)]
        assert np.abs(got - expected).max() <= 1e-12

    def test_negative_eigenvalue_argmax_moves(self):
        # oracle: direct matrix powers
        expected = [np.linalg.matrix_power(NEGATIVE_EIG_UBAR, n).max() ** 2
                    for n in range(1, 9)]
        got = s_sequence_spectral(NEGATIVE_EIG_UBAR, 8)
        assert np.abs(got - expected).max() <= 1e-10
        # odd powers peak off the diagonal, even powers on it
        assert NEGATIVE_EIG_UBAR.max() == NEGATIVE_EIG_UBAR[0, 1]
        p2 = np.linalg.matrix_power(NEGATIVE_EIG_UBAR, 2)
        assert p2.max() == p2[0, 0]

    def test_flat_matrix_unit_eigenvector(self):
        m = 4
        ubar = unistochastic(qft(m))
        dec = eigh_real_symmetric(ubar)
        # single unit eigenvalue whose eigenvector is uniform
        assert dec.eigenvalues[0] == pytest.approx(1.0, abs=1e-12)
        assert np.abs(np.abs(dec.eigenvectors[:, 0]) - 1 / np.sqrt(m)).max() <= 1e-10
        assert np.abs(s_sequence_spectral(ubar, 6) - 1 / m**2).max() <= 1e-12

    def test_rejects_non_symmetric(self):
        ubar = unistochastic(haar_random(4, 2))
        with pytest.raises(ValueError, match="symmetric"):
            s_sequence_spectral(ubar, 4)

    def test_symmetric_bistochastic_spectrum_in_unit_interval(self):
        for seed in range(4):
            ubar = unistochastic(haar_random(5, 30 + seed))
            sym = (ubar + ubar.T) / 2
            dec = eigh_real_symmetric(sym)
            assert dec.eigenvalues[0] == pytest.approx(1.0, abs=1e-10)
            assert np.all(dec.eigenvalues >= -1 - 1e-12)


class TestLadder:
    def test_identity_reaches_asymptote(self):
        lad = ladder(np.eye(4), 0.5)
        assert lad.best_value == pytest.approx(1.0, abs=1e-12)
        assert math.isinf(lad.best_n)
        assert lad.asymptote == pytest.approx(1.0)

    def test_mub_qubit_first_rung_wins(self):
        lad = ladder(unistochastic(qubit_rotation(math.pi / 4)), 0.0)
        assert lad.best_n == 1
        assert lad.best_value == pytest.approx(math.log(2), abs=1e-12)

    def test_second_rung_wins_below_crossover(self):
        lad = ladder(unistochastic(qubit_rotation(0.5)), 0.0)
        u1, u2 = lad.entries[0].u_n, lad.entries[1].u_n
        assert u2 > u1

    def test_entry_relations(self):
        lad = ladder(unistochastic(haar_random(4, 5)), 0.7, n_max=12)
        for e in lad.entries:
            assert e.u_n == -math.log(e.s_n) / (e.n + 1)
            assert e.entropy_term == 2 * e.n / (e.n + 1) * 0.7
            assert e.l_n == e.u_n + e.entropy_term
        values = [e.l_n for e in lad.entries] + [lad.asymptote]
        assert lad.best_value == max(values)

    def test_first_rung_consistent_with_maassen_uffink(self):
        for seed in range(4):
            ubar = unistochastic(haar_random(6, 50 + seed))
            lad = ladder(ubar, 0.9)
            assert abs(lad.entries[0].l_n - (maassen_uffink(ubar) + 0.9)) <= 1e-12

    def test_rung_decay_near_flat(self):
        for u in (qft(8), qft_power(8, 0.97)):
            lad = ladder(unistochastic(u), 0.0, n_max=64)
            u_vals = {e.n: e.u_n for e in lad.entries}
            assert u_vals[64] < 0.05 * u_vals[1]

    def test_early_stop_when_nothing_left_to_gain(self):
        # identity map, pure state: u_n = 0 and the entropy term cannot grow
        lad = ladder(np.eye(3), 0.0, n_max=64, early_stop_tol=1e-9)
        assert len(lad.entries) == 1
        assert lad.best_value == 0.0
        # a positive entropy keeps the rungs alive up to n_max
        assert len(ladder(np.eye(3), 0.5, n_max=64).entries) == 64

    def test_rejects_negative_entropy(self):
        with pytest.raises(ValueError):
            ladder(np.eye(2), -0.1)


class TestMaassenUffink:
    def test_flat(self):
        assert maassen_uffink(unistochastic(qft(7))) == pytest.approx(math.log(7), abs=1e-12)

    def test_identity(self):
        assert maassen_uffink(np.eye(3)) == 0.0

    @pytest.mark.parametrize("theta", [0.3, 1.0, 1.4])
    def test_qubit(self, theta):
        got = maassen_uffink(unistochastic(qubit_rotation(theta)))
        expected = -math.log(max(math.cos(theta) ** 2, math.sin(theta) ** 2))
        assert got == pytest.approx(expected, abs=1e-12)


class TestDeVicente:
    def test_identity_vanishes(self):
        assert de_vicente(np.eye(4)) == 0.0

    def test_flat(self):
        m = 9
        s = 1 / m
        hi, lo = (1 + math.sqrt(s)) / 2, (1 - math.sqrt(s)) / 2
        expected = -2 * (hi * math.log(hi) + lo * math.log(lo))
        assert de_vicente(unistochastic(qft(m))) == pytest.approx(expected, abs=1e-12)

    def test_mub_qubit(self):
        r = math.sqrt(0.5)
        hi, lo = (1 + r) / 2, (1 - r) / 2
        expected = -2 * (hi * math.log(hi) + lo * math.log(lo))
        got = de_vicente(unistochastic(qubit_rotation(math.pi / 4)))
        assert got == pytest.approx(expected, abs=1e-12)


def peak_singular_value_oracle(u, k):
    """Exhaustive enumeration of every submatrix with n_rows + n_cols = k + 1."""
    m = u.shape[0]
    best = 0.0
    for n_rows in range(1, min(k, m) + 1):
        n_cols = k + 1 - n_rows
        if not 1 <= n_cols <= m:
            continue
        for rows in combinations(range(m), n_rows):
            for cols in combinations(range(m), n_cols):
                sub = u[np.ix_(rows, cols)]
                best = max(best, float(np.linalg.svd(sub, compute_uv=False)[0]))
    return best


class TestMajorizationBound:
    def test_identity(self):
        assert majorization_bound(np.eye(4), 2) == 0.0

    @pytest.mark.parametrize("theta", [0.2, 0.5, 0.7])
    def test_qubit_binary_entropy(self, theta):
        u = qubit_rotation(theta)
        assert peak_singular_value_oracle(u, 1) == pytest.approx(math.cos(theta))
        assert peak_singular_value_oracle(u, 2) == pytest.approx(1.0)
        c = math.cos(theta)
        expected = -(c * math.log(c) + (1 - c) * math.log(1 - c))
        assert majorization_bound(u, 1) == pytest.approx(expected, abs=1e-12)

    def test_qft3_coefficients(self):
        u = qft(3)
        assert peak_singular_value_oracle(u, 1) == pytest.approx(1 / math.sqrt(3))
        assert peak_singular_value_oracle(u, 2) == pytest.approx(math.sqrt(2 / 3))
        w = majorization_vector(u, 2)
        assert w[0] == pytest.approx(1 / math.sqrt(3), abs=1e-12)
        assert w[1] == pytest.approx(math.sqrt(2 / 3) - 1 / math.sqrt(3), abs=1e-12)
        assert w[2] == pytest.approx(1 - math.sqrt(2 / 3), abs=1e-12)

    @pytest.mark.parametrize("seed", range(3))
    def test_matches_exhaustive_oracle(self, seed):
        u = haar_random(5, 200 + seed)
        for k_star in (1, 2, 3):
            w = np.array([peak_singular_value_oracle(u, k) for k in range(1, k_star + 1)])
            vec = np.zeros(5)
            vec[0] = w[0]
            vec[1:k_star] = np.diff(w)
            vec[k_star] = 1 - w[-1]
            expected = shannon_entropy(np.clip(vec, 0, 1))
            assert majorization_bound(u, k_star) == pytest.approx(expected, abs=1e-12)

    def test_monotone_in_k_star(self):
        for seed in range(3):
            u = haar_random(6, 300 + seed)
            values = [majorization_bound(u, k) for k in range(1, 6)]
            assert np.all(np.diff(values) >= -1e-12)

    def test_k_star_validation(self):
        with pytest.raises(ValueError):
            majorization_bound(qft(4), 0)
        with pytest.raises(ValueError):
            majorization_bound(qft(4), 4)
        with pytest.raises(ValueError, match="exhaustive"):
            majorization_bound(qft(16), 3)


class TestFullReport:
    def test_identity_all_zero(self):
        r = full_report(np.eye(4), 0.0)
        assert r.ladder.best_value == 0.0
        assert r.l_1 == r.l_mu == r.l_dev == r.l_maj == 0.0
        assert r.coherence.ladder == r.coherence.l_1 == 0.0

    def test_qft128_pure_state_first_rung_best(self):
        r = full_report(qft(128), 0.0)
        assert r.l_1 == pytest.approx(math.log(128), abs=1e-10)
        assert r.ladder.best_n == 1
        assert r.ladder.best_value == pytest.approx(r.l_1, abs=1e-12)

    def test_spin128_mixed_ladder_beats_first_rung(self):
        r = full_report(spin_rotation(128, 0.3), 1.0)
        assert r.ladder.best_value > r.l_1

    def test_structural_relations(self):
        r = full_report(haar_random(5, 77), 0.8, k_star=2, family="haar", param=0.0, seed=77)
        assert r.l_1 == pytest.approx(r.l_mu + 0.8, abs=1e-12)
        assert r.coherence.ladder == max(0.0, r.ladder.best_value - 1.6)
        assert r.coherence.l_maj == max(0.0, r.l_maj - 1.6)
        assert all(np.isfinite([r.l_1, r.l_mu, r.l_dev, r.l_maj, r.ladder.best_value]))

    def test_rejects_entropy_out_of_range(self):
        with pytest.raises(ValueError):
            full_report(qft(3), 2.0)


class TestPermutationInvariance:
    def test_all_bounds_invariant_under_basis_relabeling(self):
        rng = np.random.default_rng(12)
        u = haar_random(5, 500)
        p1 = np.eye(5)[rng.permutation(5)]
        p2 = np.eye(5)[rng.permutation(5)]
        v = p1 @ u @ p2
        ru, rv = full_report(u, 0.6), full_report(v, 0.6)
        assert rv.ladder.best_value == pytest.approx(ru.ladder.best_value, abs=1e-12)
        assert rv.l_mu == pytest.approx(ru.l_mu, abs=1e-12)
        assert rv.l_dev == pytest.approx(ru.l_dev, abs=1e-12)
        assert rv.l_maj == pytest.approx(ru.l_maj, abs=1e-12)
