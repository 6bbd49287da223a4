"""Unitary families and state spectra used throughout the library.

Generators for the basis-connecting unitaries studied here (planar qubit
rotation, fractional discrete Fourier transform, spin-y rotation, Haar-random
ensembles) plus thermal eigenvalue profiles whose von Neumann entropy can be
dialed to a target value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import linalg

PROBABILITY_SUM_TOL = 1e-12


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalue profile of a density operator, sorted non-increasing.

    ``beta`` records the thermal parameter when the spectrum was generated by
    :func:`thermal_spectrum`; it is None for externally supplied profiles.
    """

    values: np.ndarray
    beta: float | None = None

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 1 or values.size == 0:
            raise ValueError("spectrum must be a nonempty 1-d vector")
        if np.any(values < -PROBABILITY_SUM_TOL):
            raise ValueError("spectrum has negative entries")
        if abs(float(values.sum()) - 1.0) > PROBABILITY_SUM_TOL:
            raise ValueError(f"spectrum sums to {values.sum()!r}, expected 1")
        if np.any(np.diff(values) > PROBABILITY_SUM_TOL):
            raise ValueError("spectrum must be sorted non-increasing")
        values = np.clip(values, 0.0, None)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def dim(self) -> int:
        return self.values.size


def qubit_rotation(theta: float) -> np.ndarray:
    """Planar rotation [[cos t, -sin t], [sin t, cos t]] as a 2x2 unitary."""
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]], dtype=complex)


def qft(m: int) -> np.ndarray:
    """Discrete Fourier transform matrix F_{k,h} = exp(2 pi i k h / m) / sqrt(m)."""
    if m < 2:
        raise ValueError(f"dimension must be >= 2, got {m}")
    k = np.arange(m)
    return np.exp(2j * np.pi * np.outer(k, k) / m) / np.sqrt(m)


def qft_power(m: int, beta: float) -> np.ndarray:
    """Fractional power F^beta of the Fourier matrix via spectral calculus.

    Eigenphases are taken on the principal branch, so beta=0 gives the
    identity, beta=1 gives F itself, and F^beta is continuous in beta.
    """
    return linalg.unitary_function(qft(m), lambda phi: np.exp(1j * beta * phi))


def spin_y(m: int) -> np.ndarray:
    """Spin-y operator for j = (m-1)/2 in the standard |j, m_z> basis.

    Basis states are ordered m_z = j, j-1, ..., -j; matrix elements follow
    from the usual raising/lowering coefficients.
    """
    if m < 2:
        raise ValueError(f"dimension must be >= 2, got {m}")
    a = np.arange(1, m)
    c = np.sqrt(a * (m - a))  # <m_z+1| J_+ |m_z> down the superdiagonal
    jy = np.zeros((m, m), dtype=complex)
    jy[a - 1, a] = c / 2j
    jy[a, a - 1] = -c / 2j
    return jy


def spin_rotation(m: int, theta: float) -> np.ndarray:
    """Rotation exp(-2i theta J_y) of an m-level system about the y axis."""
    w, v = linalg.eigh_hermitian(spin_y(m))
    return (v * np.exp(-2j * theta * w)) @ v.conj().T


def haar_random(m: int, seed: int) -> np.ndarray:
    """Haar-distributed m x m unitary, deterministic for a fixed seed.

    QR decomposition of a complex Ginibre matrix with the R-diagonal phase
    fix; the counter-based Philox generator makes draws reproducible across
    platforms.
    """
    if m < 1:
        raise ValueError(f"dimension must be >= 1, got {m}")
    rng = np.random.Generator(np.random.Philox(seed))
    z = (rng.standard_normal((m, m)) + 1j * rng.standard_normal((m, m))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r).copy()
    d[d == 0] = 1.0
    return q * (d / np.abs(d)).conj()


def thermal_spectrum(m: int, beta: float) -> Spectrum:
    """Thermal eigenvalue profile lambda_k proportional to exp(beta k).

    Evaluated in log space so large |beta| * m cannot overflow; the result is
    normalized and sorted non-increasing.
    """
    if m < 1:
        raise ValueError(f"dimension must be >= 1, got {m}")
    if math.isinf(beta):
        values = np.zeros(m)
        values[0] = 1.0
        return Spectrum(values, beta=beta)
    logw = beta * np.arange(1, m + 1, dtype=float)
    logw -= logw.max()
    w = np.exp(logw)
    w /= w.sum()
    return Spectrum(np.sort(w)[::-1], beta=beta)


def _spectrum_entropy(values: np.ndarray) -> float:
    nz = values[values > 0]
    return float(-np.sum(nz * np.log(nz)))


def spectrum_for_entropy(m: int, target_entropy: float, tol: float = 1e-6,
                         max_iter: int = 200) -> Spectrum:
    """Thermal spectrum whose von Neumann entropy matches a target in nats.

    Bisects on beta <= 0; the entropy of the thermal profile decreases
    monotonically from log(m) at beta=0 toward 0 as beta -> -inf.
    """
    if m < 1:
        raise ValueError(f"dimension must be >= 1, got {m}")
    smax = math.log(m)
    if not 0.0 <= target_entropy <= smax + 1e-12:
        raise ValueError(f"target entropy {target_entropy} outside [0, log {m}] = [0, {smax:.6g}]")
    if target_entropy <= 0.0:
        return thermal_spectrum(m, -math.inf)
    if abs(target_entropy - smax) <= tol:
        return thermal_spectrum(m, 0.0)

    lo = -1.0  # beta bracket [lo, hi] with entropy(lo) < target < entropy(hi)
    while _spectrum_entropy(thermal_spectrum(m, lo).values) > target_entropy:
        lo *= 2.0
        if lo < -1e6:
            raise ValueError("failed to bracket the target entropy")
    hi = 0.0
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        s = _spectrum_entropy(thermal_spectrum(m, mid).values)
        if abs(s - target_entropy) <= tol:
            return thermal_spectrum(m, mid)
        if s > target_entropy:
            hi = mid
        else:
            lo = mid
    raise ValueError(f"entropy bisection did not converge within {max_iter} iterations")
