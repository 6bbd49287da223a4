"""Dense complex/real matrix algebra helpers.

Small wrappers around LAPACK-backed numpy/scipy routines that add the
validation this library relies on everywhere: symmetry/Hermiticity checks
before eigendecompositions, unitarity checks before spectral calculus, and
descending eigenvalue order throughout.  All tolerances are entrywise
max-norm.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

#: Default entrywise tolerance for structural checks (symmetry, unitarity).
STRUCTURE_TOL = 1e-10


def max_abs(a: np.ndarray) -> float:
    """Entrywise max-norm of an array."""
    return float(np.max(np.abs(a))) if np.asarray(a).size else 0.0


def is_unitary(u: np.ndarray, tol: float = STRUCTURE_TOL) -> bool:
    u = np.asarray(u)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        return False
    return max_abs(u.conj().T @ u - np.eye(u.shape[0])) <= tol


def require_unitary(u: np.ndarray, tol: float = STRUCTURE_TOL) -> np.ndarray:
    """Return ``u`` as a complex array, raising ValueError if not unitary."""
    u = np.asarray(u, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {u.shape}")
    if not np.all(np.isfinite(u.view(float))):
        raise ValueError("matrix contains non-finite entries")
    residual = max_abs(u.conj().T @ u - np.eye(u.shape[0]))
    if residual > tol:
        raise ValueError(f"matrix is not unitary: max |U^dag U - I| = {residual:.3e}")
    return u


def multiply(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product of two square matrices of identical dimension."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"left factor is not square: shape {a.shape}")
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a @ b


@dataclass(frozen=True)
class RealSymmetricEigenDecomposition:
    """Eigendecomposition A = V diag(w) V^T of a real symmetric matrix.

    ``eigenvalues`` are sorted non-increasing and ``eigenvectors`` holds the
    matching orthonormal eigenvectors as columns.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return (self.eigenvectors * self.eigenvalues) @ self.eigenvectors.T


def eigh_real_symmetric(a: np.ndarray, tol: float = STRUCTURE_TOL) -> RealSymmetricEigenDecomposition:
    """Eigendecomposition of a real symmetric matrix, eigenvalues descending.

    Raises ValueError if ``a`` is not symmetric within ``tol`` or if the
    reconstruction residual exceeds 1e-10.
    """
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    asym = max_abs(a - a.T)
    if asym > tol:
        raise ValueError(f"matrix is not symmetric: max |A - A^T| = {asym:.3e}")
    try:
        w, v = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise ValueError(f"eigendecomposition failed to converge: {exc}") from exc
    order = np.argsort(w)[::-1]
    dec = RealSymmetricEigenDecomposition(w[order], v[:, order])
    residual = max_abs(dec.reconstruct() - a)
    if residual > 1e-10:
        raise ValueError(f"eigendecomposition residual too large: {residual:.3e}")
    return dec


def eigh_hermitian(a: np.ndarray, tol: float = STRUCTURE_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Returns ``(w, v)`` with real eigenvalues ``w`` sorted non-increasing and
    unitary ``v`` whose columns are the matching eigenvectors.
    """
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    aherm = max_abs(a - a.conj().T)
    if aherm > tol:
        raise ValueError(f"matrix is not Hermitian: max |A - A^dag| = {aherm:.3e}")
    try:
        w, v = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise ValueError(f"eigendecomposition failed to converge: {exc}") from exc
    order = np.argsort(w)[::-1]
    w, v = w[order], v[:, order]
    residual = max_abs((v * w) @ v.conj().T - a)
    if residual > 1e-10:
        raise ValueError(f"eigendecomposition residual too large: {residual:.3e}")
    return w, v


def unitary_function(u: np.ndarray, phase_map) -> np.ndarray:
    """Apply a function to a unitary through its eigenphases.

    The input is decomposed as U = Z diag(exp(i phi_k)) Z^dag with principal
    eigenphases phi_k in (-pi, pi], and the result is
    Z diag(phase_map(phi_k)) Z^dag.  If ``phase_map`` sends the unit circle to
    itself the result is again unitary.  Used for fractional powers
    (phase_map = exp(i beta phi)) and similar spectral calculus.
    """
    u = require_unitary(u)
    # A unitary matrix is normal, so its complex Schur form is diagonal and
    # the Schur basis is an orthonormal eigenbasis (degeneracies included).
    t, z = scipy.linalg.schur(u, output="complex")
    phases = np.angle(np.diag(t))
    values = np.asarray([complex(phase_map(phi)) for phi in phases])
    return (z * values) @ z.conj().T


def largest_singular_value(block: np.ndarray) -> float:
    """Largest singular value of a rectangular block.

    For a single row or column this is just its Euclidean norm.
    """
    block = np.asarray(block, dtype=complex)
    if block.size == 0:
        raise ValueError("empty block has no singular values")
    if block.ndim == 1 or 1 in block.shape:
        return float(np.linalg.norm(block))
    return float(np.linalg.svd(block, compute_uv=False)[0])
