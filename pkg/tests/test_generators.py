import math

import numpy as np
import pytest

from eurbounds.generators import (
    Spectrum,
    haar_random,
    qft,
    qft_power,
    qubit_rotation,
    spectrum_for_entropy,
    spin_rotation,
    spin_y,
    thermal_spectrum,
)
from eurbounds.stochastic import shannon_entropy


class TestQubitRotation:
    def test_zero_angle(self):
        assert np.abs(qubit_rotation(0.0) - np.eye(2)).max() == 0.0

    def test_mutually_unbiased_at_quarter_pi(self):
        u = qubit_rotation(np.pi / 4)
        assert np.allclose(np.abs(u), 1 / np.sqrt(2))

    def test_half_pi_antidiagonal(self):
        u = qubit_rotation(np.pi / 2)
        assert np.allclose(u, [[0, -1], [1, 0]], atol=1e-15)


class TestQft:
    def test_dim_two(self):
        expected = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
        assert np.abs(qft(2) - expected).max() <= 1e-15

    def test_entry_magnitudes(self):
        assert np.allclose(np.abs(qft(3)), 1 / np.sqrt(3))

    @pytest.mark.parametrize("m", [2, 3, 7, 16])
    def test_unitary(self, m):
        f = qft(m)
        assert np.abs(f @ f.conj().T - np.eye(m)).max() <= 1e-12

    def test_rejects_small_dim(self):
        with pytest.raises(ValueError):
            qft(1)


class TestQftPower:
    def test_zero_power_is_identity(self):
        assert np.abs(qft_power(3, 0.0) - np.eye(3)).max() <= 1e-10

    def test_unit_power_is_qft(self):
        assert np.abs(qft_power(3, 1.0) - qft(3)).max() <= 1e-10

    def test_square_matches_direct_product(self):
        assert np.abs(qft_power(3, 2.0) - qft(3) @ qft(3)).max() <= 1e-10

    @pytest.mark.parametrize("beta", [0.25, 0.9, 1.5])
    def test_unitary(self, beta):
        u = qft_power(5, beta)
        assert np.abs(u.conj().T @ u - np.eye(5)).max() <= 1e-10

    def test_continuity_in_beta(self):
        eps = 1e-6
        for beta in (0.3, 1.0, 1.7):
            delta = np.abs(qft_power(4, beta + eps) - qft_power(4, beta)).max()
            assert delta <= 1e-4


class TestSpinRotation:
    def test_matches_qubit_closed_form(self):
        # oracle: the 2x2 exponential of the spin-1/2 generator in closed form
        for theta in (0.2, 0.9, 1.4):
            c, s = np.cos(theta), np.sin(theta)
            assert np.abs(spin_rotation(2, theta) - np.array([[c, -s], [s, c]])).max() <= 1e-10

    def test_zero_angle(self):
        assert np.abs(spin_rotation(7, 0.0) - np.eye(7)).max() <= 1e-12

    def test_one_parameter_group(self):
        u1, u2 = spin_rotation(6, 0.4), spin_rotation(6, 0.75)
        assert np.abs(u1 @ u2 - spin_rotation(6, 1.15)).max() <= 1e-9

    @pytest.mark.parametrize("m", [2, 3, 8, 128])
    def test_unitary(self, m):
        u = spin_rotation(m, 0.3)
        assert np.abs(u.conj().T @ u - np.eye(m)).max() <= 1e-10

    def test_spin_y_hermitian(self):
        jy = spin_y(5)
        assert np.abs(jy - jy.conj().T).max() == 0.0

    def test_rejects_small_dim(self):
        with pytest.raises(ValueError):
            spin_rotation(1, 0.1)


class TestHaarRandom:
    def test_deterministic(self):
        assert np.array_equal(haar_random(4, 99), haar_random(4, 99))

    def test_distinct_for_distinct_seeds(self):
        assert np.abs(haar_random(4, 1) - haar_random(4, 2)).max() > 1e-3

    @pytest.mark.parametrize("m", [1, 2, 5, 32])
    def test_unitary(self, m):
        u = haar_random(m, 5)
        assert np.abs(u.conj().T @ u - np.eye(m)).max() <= 1e-10

    def test_overlap_uniform_on_sphere(self):
        # |U_00|^2 of a Haar 2x2 unitary is uniform on [0, 1]; chi-square
        # against 10 equiprobable bins at the 0.001 level (chi2_{9} = 27.88).
        draws = np.array([abs(haar_random(2, 1000 + t)[0, 0]) ** 2 for t in range(1000)])
        counts, _ = np.histogram(draws, bins=10, range=(0.0, 1.0))
        chi2 = float(((counts - 100.0) ** 2 / 100.0).sum())
        assert chi2 < 27.88


class TestThermalSpectrum:
    def test_beta_zero_uniform(self):
        sp = thermal_spectrum(6, 0.0)
        assert np.allclose(sp.values, 1 / 6)
        assert shannon_entropy(sp.values) == pytest.approx(math.log(6))

    def test_large_negative_beta_degenerate(self):
        sp = thermal_spectrum(5, -200.0)
        assert sp.values[0] == pytest.approx(1.0)
        assert shannon_entropy(sp.values) == pytest.approx(0.0, abs=1e-12)

    def test_direct_formula(self):
        sp = thermal_spectrum(3, 1.0)
        expected = np.exp([3.0, 2.0, 1.0])
        expected /= expected.sum()
        assert np.allclose(sp.values, expected, atol=1e-15)

    def test_overflow_safe(self):
        for beta in (300.0, -300.0):
            sp = thermal_spectrum(512, beta)
            assert np.all(np.isfinite(sp.values))

    def test_entropy_monotone_in_abs_beta(self):
        betas = [0.0, -0.5, -1.0, -2.0, -4.0, -8.0]
        entropies = [shannon_entropy(thermal_spectrum(16, b).values) for b in betas]
        assert np.all(np.diff(entropies) < 0)


class TestSpectrumForEntropy:
    def test_max_entropy_uniform(self):
        sp = spectrum_for_entropy(8, math.log(8))
        assert sp.beta == 0.0
        assert np.allclose(sp.values, 1 / 8)

    def test_zero_entropy_degenerate(self):
        sp = spectrum_for_entropy(8, 0.0)
        assert np.allclose(sp.values, np.eye(8)[0])

    def test_hits_target(self):
        sp = spectrum_for_entropy(128, 1.25)
        assert sp.beta < 0
        assert shannon_entropy(sp.values) == pytest.approx(1.25, abs=1e-6)

    @pytest.mark.parametrize("target", [-0.1, 10.0])
    def test_rejects_out_of_range(self, target):
        with pytest.raises(ValueError):
            spectrum_for_entropy(16, target)


class TestSpectrumType:
    def test_rejects_unsorted(self):
        with pytest.raises(ValueError, match="sorted"):
            Spectrum(np.array([0.2, 0.8]))

    def test_rejects_bad_sum(self):
        with pytest.raises(ValueError, match="sums"):
            Spectrum(np.array([0.6, 0.5]))

    def test_rejects_negative(self):
        with pytest.raises(ValueError, match="negative"):
            Spectrum(np.array([1.2, -0.2]))
