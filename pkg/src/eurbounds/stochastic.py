"""Unistochastic maps, measurement-chain propagation, entropic functionals.

The squared-modulus image of a unitary is a bistochastic matrix; applying it
and its transpose alternately transports outcome distributions through chains
of projective measurements in two bases.  This module owns that transport
plus the Shannon/von Neumann entropy, KL divergence, and cross-entropy used
to compare the resulting distributions.

All entropic quantities are in nats; 0 log 0 is taken as 0 throughout.
KL divergence and cross-entropy return math.inf (not an error) when the
support condition fails, so oracle comparisons stay total.
"""

from __future__ import annotations

import math

import numpy as np

from . import linalg
from .generators import Spectrum

BISTOCHASTIC_TOL = 1e-10
PROBABILITY_SUM_TOL = 1e-12


def require_probability_vector(p: np.ndarray, tol: float = PROBABILITY_SUM_TOL) -> np.ndarray:
    """Return ``p`` as a float vector, raising if it is not a distribution."""
    p = np.asarray(p, dtype=float)
    if p.ndim != 1 or p.size == 0:
        raise ValueError("expected a nonempty 1-d probability vector")
    if np.any(p < -tol):
        raise ValueError(f"negative probability entry: min = {p.min():.3e}")
    if abs(float(p.sum()) - 1.0) > tol:
        raise ValueError(f"probabilities sum to {p.sum()!r}, expected 1")
    return np.clip(p, 0.0, None)


def is_bistochastic(a: np.ndarray, tol: float = BISTOCHASTIC_TOL) -> bool:
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    if np.any(a < -tol) or np.any(a > 1 + tol):
        return False
    ones = np.ones(a.shape[0])
    return (
        linalg.max_abs(a.sum(axis=0) - ones) <= tol
        and linalg.max_abs(a.sum(axis=1) - ones) <= tol
    )


def require_bistochastic(a: np.ndarray, tol: float = BISTOCHASTIC_TOL) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    if not is_bistochastic(a, tol):
        raise ValueError("matrix is not bistochastic (nonnegative with unit row/column sums)")
    return a


def unistochastic(u: np.ndarray) -> np.ndarray:
    """Entrywise squared magnitudes |U_ij|^2 of a unitary.

    The result is bistochastic: its rows and columns are the squared norms of
    the rows/columns of U.
    """
    u = linalg.require_unitary(u)
    ubar = np.abs(u) ** 2
    return require_bistochastic(ubar)


def chain_propagate(ubar: np.ndarray, p0: np.ndarray, start_basis: str, steps: int) -> np.ndarray:
    """Propagate a distribution through ``steps`` alternating measurement stages.

    ``p0`` is the outcome distribution of a first measurement in
    ``start_basis`` ("A" or "B").  Each subsequent stage measures the other
    basis: the transport A -> B applies Ubar^T, the transport B -> A applies
    Ubar.  Two stages starting from A therefore give (Ubar Ubar^T) p0, the
    bistochastic filter behind the A-B-A measurement sequence.
    """
    ubar = require_bistochastic(ubar)
    p = require_probability_vector(p0)
    if p.size != ubar.shape[0]:
        raise ValueError(f"dimension mismatch: matrix {ubar.shape} vs vector {p.shape}")
    basis = str(start_basis).lower()
    if basis not in ("a", "b"):
        raise ValueError(f"start_basis must be 'A' or 'B', got {start_basis!r}")
    if steps < 0:
        raise ValueError(f"steps must be >= 0, got {steps}")
    for _ in range(steps):
        if basis == "a":
            p = ubar.T @ p
            basis = "b"
        else:
            p = ubar @ p
            basis = "a"
    if steps:
        p = p / p.sum()  # absorb float drift from long chains
    return p


def shannon_entropy(p: np.ndarray) -> float:
    """Shannon entropy -sum p_i log p_i in nats."""
    p = require_probability_vector(p)
    nz = p[p > 0]
    return float(-np.sum(nz * np.log(nz)))


def kl_divergence(p: np.ndarray, q: np.ndarray) -> float:
    """Kullback-Leibler divergence D(p||q) in nats; math.inf on support violation."""
    p = require_probability_vector(p)
    q = require_probability_vector(q)
    if p.size != q.size:
        raise ValueError(f"dimension mismatch: {p.size} vs {q.size}")
    mask = p > 0
    if np.any(q[mask] == 0):
        return math.inf
    return float(np.sum(p[mask] * (np.log(p[mask]) - np.log(q[mask]))))


def cross_entropy(p: np.ndarray, q: np.ndarray) -> float:
    """Cross-entropy -sum p_i log q_i in nats; math.inf on support violation."""
    p = require_probability_vector(p)
    q = require_probability_vector(q)
    if p.size != q.size:
        raise ValueError(f"dimension mismatch: {p.size} vs {q.size}")
    mask = p > 0
    if np.any(q[mask] == 0):
        return math.inf
    return float(-np.sum(p[mask] * np.log(q[mask])))


def von_neumann_entropy(spectrum: Spectrum) -> float:
    """Von Neumann entropy of a state with the given eigenvalue profile."""
    return shannon_entropy(spectrum.values)


def frame_matrix(u: np.ndarray, frame, validate: bool = True) -> np.ndarray:
    """Resolve an eigenbasis selector to a unitary whose columns are the frame.

    ``frame`` may be "a" (eigenvectors = basis A, the computational basis),
    "b" (eigenvectors = basis B, the columns of U), or an explicit unitary.
    """
    if isinstance(frame, str):
        name = frame.lower()
        if name in ("a", "a-diagonal"):
            return np.eye(u.shape[0], dtype=complex)
        if name in ("b", "b-diagonal"):
            return np.asarray(u, dtype=complex)
        raise ValueError(f"unknown frame {frame!r}; use 'a', 'b', or a unitary matrix")
    v = np.asarray(frame, dtype=complex)
    if validate:
        v = linalg.require_unitary(v)
    if v.shape != np.asarray(u).shape:
        raise ValueError(f"frame shape {v.shape} does not match unitary shape {np.asarray(u).shape}")
    return v


def measurement_probabilities(u: np.ndarray, spectrum: Spectrum, basis: str,
                              frame="a") -> np.ndarray:
    """Outcome distribution of one projective measurement.

    The state is rho = sum_k lambda_k |v_k><v_k| with eigenvalues from
    ``spectrum`` and eigenvectors the columns of the resolved ``frame``;
    measuring basis "A" (computational) or "B" (columns of ``u``) gives
    p_i = sum_k lambda_k |<x_i|v_k>|^2.
    """
    u = linalg.require_unitary(u)
    if spectrum.dim != u.shape[0]:
        raise ValueError(f"spectrum dimension {spectrum.dim} does not match unitary {u.shape}")
    v = frame_matrix(u, frame)
    name = str(basis).lower()
    if name == "a":
        overlaps = np.abs(v) ** 2
    elif name == "b":
        overlaps = np.abs(u.conj().T @ v) ** 2
    else:
        raise ValueError(f"basis must be 'A' or 'B', got {basis!r}")
    return require_probability_vector(overlaps @ spectrum.values)
