"""Lower bounds for the entropy sum H(A) + H(B) of two-basis measurements.

The central object is the bound ladder: for each chain depth n, the largest
entry of the n-fold alternating product of the unistochastic matrix Ubar and
its transpose yields a state-independent term

    u_n = -log(s_n) / (n + 1),

which combines with the entropy term 2n/(n+1) * S(rho) into the bound
l_n = u_n + 2n/(n+1) S(rho).  The best bound is the maximum over n, always
including the asymptotic candidate 2 S(rho) that the sequence approaches as
n grows.  Competitor bounds (Maassen-Uffink, de Vicente, direct-sum
majorization from submatrix singular values) are provided for comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, islice
from typing import Iterator

import numpy as np

from . import linalg
from .stochastic import require_bistochastic, shannon_entropy, unistochastic

SYMMETRY_TOL = 1e-10

#: Largest dimension for which exhaustive submatrix enumeration is allowed.
EXHAUSTIVE_MAJORIZATION_MAX_DIM = 8


@dataclass(frozen=True)
class LadderEntry:
    """One rung of the bound ladder at finite chain depth n."""

    n: int
    s_n: float
    u_n: float
    entropy_term: float
    l_n: float


@dataclass(frozen=True)
class BoundLadder:
    """Bound ladder {l_n} plus the selected best bound.

    ``best_n`` is math.inf when the asymptotic candidate 2 S(rho) beats every
    finite rung (that candidate is always considered; the finite entries only
    approach it from below when Ubar is the identity).
    """

    entries: tuple[LadderEntry, ...]
    best_n: float
    best_value: float
    symmetric_path_used: bool
    asymptote: float

    @property
    def s_values(self) -> np.ndarray:
        return np.array([e.s_n for e in self.entries])


@dataclass(frozen=True)
class CoherenceBounds:
    """Bounds on the coherence sum: each entropy-sum bound minus 2 S(rho), floored at 0."""

    ladder: float
    l_1: float
    l_dev: float
    l_maj: float


@dataclass(frozen=True)
class BoundReport:
    """All bounds at one parameter point, ready for CSV/JSON emission."""

    family: str
    dim: int
    param: float
    entropy: float
    ladder: BoundLadder
    l_mu: float
    l_1: float
    l_dev: float
    l_maj: float
    k_star: int
    coherence: CoherenceBounds
    seed: int | None = None


def is_symmetric(a: np.ndarray, tol: float = SYMMETRY_TOL) -> bool:
    a = np.asarray(a)
    return linalg.max_abs(a - a.T) <= tol


def _s_terms(ubar: np.ndarray, symmetric: bool) -> Iterator[float]:
    """Yield s_1, s_2, ... by iterative products with a running max.

    Symmetric Ubar: s_n = (max entry of Ubar^n)^2.  Otherwise s_n is the
    product of the largest entries of the two alternating n-factor products
    Ubar Ubar^T Ubar ... and Ubar^T Ubar Ubar^T ...
    """
    if symmetric:
        power = ubar
        while True:
            yield float(power.max()) ** 2
            power = power @ ubar
    else:
        prod_a = ubar
        prod_b = ubar.T
        n = 1
        while True:
            yield float(prod_a.max()) * float(prod_b.max())
            # factor k of the A-leading product is Ubar for odd k
            n += 1
            if n % 2 == 0:
                prod_a = prod_a @ ubar.T
                prod_b = prod_b @ ubar
            else:
                prod_a = prod_a @ ubar
                prod_b = prod_b @ ubar.T


def s_sequence(ubar: np.ndarray, n_max: int) -> np.ndarray:
    """Largest-entry sequence s_1 .. s_{n_max} of the alternating products."""
    ubar = require_bistochastic(ubar)
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    return np.array(list(islice(_s_terms(ubar, is_symmetric(ubar)), n_max)))


def s_sequence_spectral(ubar: np.ndarray, n_max: int) -> np.ndarray:
    """Spectral fast path for s_n when Ubar is symmetric.

    Ubar^n is reconstructed from one eigendecomposition as
    sum_k w_k^n v_k v_k^T; the maximum is re-located over all (i, j) at every
    n because negative eigenvalues can move the argmax between even and odd
    powers.
    """
    ubar = require_bistochastic(ubar)
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if not is_symmetric(ubar):
        raise ValueError("spectral path requires a symmetric bistochastic matrix")
    dec = linalg.eigh_real_symmetric(ubar)
    v, w = dec.eigenvectors, dec.eigenvalues
    out = np.empty(n_max)
    for n in range(1, n_max + 1):
        power = (v * w**n) @ v.T
        out[n - 1] = float(power.max()) ** 2
    return out


def s_sequence_spectral_general(ubar: np.ndarray, n_max: int) -> np.ndarray:
    """Spectral path for s_n valid for any (also non-symmetric) Ubar.

    Both Gram matrices Ubar Ubar^T and Ubar^T Ubar are symmetric with
    nonnegative spectrum, so even depths n = 2m come from their m-th spectral
    powers directly, and odd depths n = 2m + 1 from one extra multiplication:
    (Ubar Ubar^T)^m Ubar and (Ubar^T Ubar)^m Ubar^T.
    """
    ubar = require_bistochastic(ubar)
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    dec_a = linalg.eigh_real_symmetric(ubar @ ubar.T)
    dec_b = linalg.eigh_real_symmetric(ubar.T @ ubar)
    out = np.empty(n_max)
    for n in range(1, n_max + 1):
        m, odd = divmod(n, 2)
        gram_a = (dec_a.eigenvectors * dec_a.eigenvalues**m) @ dec_a.eigenvectors.T
        gram_b = (dec_b.eigenvectors * dec_b.eigenvalues**m) @ dec_b.eigenvectors.T
        if odd:
            prod_a = gram_a @ ubar
            prod_b = gram_b @ ubar.T
        else:
            prod_a, prod_b = gram_a, gram_b
        out[n - 1] = float(prod_a.max()) * float(prod_b.max())
    return out


def ladder(ubar: np.ndarray, entropy: float, n_max: int = 64,
           early_stop_tol: float = 1e-9) -> BoundLadder:
    """Compute the bound ladder and select the best bound.

    Iteration may stop before ``n_max`` once u_n has dropped below
    ``early_stop_tol`` and the entropy term has at most that much room left
    to grow; the asymptotic candidate 2 * entropy always participates in the
    maximum regardless.
    """
    ubar = require_bistochastic(ubar)
    if entropy < 0:
        raise ValueError(f"entropy must be >= 0, got {entropy}")
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    symmetric = is_symmetric(ubar)
    entries = []
    best_n: float = 1
    best_value = -math.inf
    for n, s_n in enumerate(_s_terms(ubar, symmetric), start=1):
        u_n = -math.log(s_n) / (n + 1)
        entropy_term = 2 * n / (n + 1) * entropy
        l_n = u_n + entropy_term
        entries.append(LadderEntry(n, s_n, u_n, entropy_term, l_n))
        if l_n > best_value:
            best_n, best_value = n, l_n
        if n >= n_max:
            break
        if u_n < early_stop_tol and 2 * entropy / (n + 2) < early_stop_tol:
            break
    asymptote = 2 * entropy
    if asymptote > best_value:
        best_n, best_value = math.inf, asymptote
    return BoundLadder(tuple(entries), best_n, best_value, symmetric, asymptote)


def maassen_uffink(ubar: np.ndarray) -> float:
    """Maassen-Uffink bound -log(max_ij Ubar_ij)."""
    ubar = require_bistochastic(ubar)
    return float(-math.log(float(ubar.max())))


def _xlogx(x: float) -> float:
    return x * math.log(x) if x > 0 else 0.0


def de_vicente(ubar: np.ndarray) -> float:
    """Two-point bound from the largest transition probability.

    With s the largest entry of Ubar, the bound is twice the binary entropy
    of (1 + sqrt(s)) / 2.
    """
    ubar = require_bistochastic(ubar)
    root = math.sqrt(float(ubar.max()))
    return -2.0 * (_xlogx((1 - root) / 2) + _xlogx((1 + root) / 2))


def _submatrix_peak(u: np.ndarray, k: int) -> float:
    """Largest singular value over all submatrices with n_rows + n_cols = k + 1."""
    m = u.shape[0]
    if k == 1:
        return float(np.abs(u).max())
    if k == 2:
        # The best 1x2 (2x1) block of a fixed row (column) takes its two
        # largest-magnitude entries, so no pairwise enumeration is needed.
        sq = np.abs(u) ** 2
        top2_rows = np.sort(sq, axis=1)[:, -2:].sum(axis=1)
        top2_cols = np.sort(sq, axis=0)[-2:, :].sum(axis=0)
        return float(np.sqrt(max(top2_rows.max(), top2_cols.max())))
    best = 0.0
    for n_rows in range(max(1, k + 1 - m), min(k, m) + 1):
        n_cols = k + 1 - n_rows
        for rows in combinations(range(m), n_rows):
            sub = u[list(rows), :]
            for cols in combinations(range(m), n_cols):
                best = max(best, linalg.largest_singular_value(sub[:, list(cols)]))
    return best


def majorization_vector(u: np.ndarray, k_star: int) -> np.ndarray:
    """Distribution W_{k*} of successive singular-value increments.

    Entries are (w_1, w_2 - w_1, ..., w_{k*} - w_{k*-1}, 1 - w_{k*}, 0, ...)
    padded to the matrix dimension and clamped to [0, 1]; w_k is the largest
    singular value over all submatrices of U with n_rows + n_cols = k + 1.
    """
    u = linalg.require_unitary(u)
    m = u.shape[0]
    if not 1 <= k_star <= m - 1:
        raise ValueError(f"k_star must be in [1, {m - 1}], got {k_star}")
    if k_star > 2 and m > EXHAUSTIVE_MAJORIZATION_MAX_DIM:
        raise ValueError(
            f"k_star > 2 requires exhaustive submatrix enumeration, "
            f"only supported for dimension <= {EXHAUSTIVE_MAJORIZATION_MAX_DIM}"
        )
    w = np.array([_submatrix_peak(u, k) for k in range(1, k_star + 1)])
    vec = np.zeros(m)
    vec[0] = w[0]
    vec[1:k_star] = np.diff(w)
    vec[k_star] = 1.0 - w[-1]
    return np.clip(vec, 0.0, 1.0)


def majorization_bound(u: np.ndarray, k_star: int) -> float:
    """Direct-sum majorization bound: Shannon entropy of W_{k*}."""
    return shannon_entropy(majorization_vector(u, k_star))


def full_report(u: np.ndarray, entropy: float, *, n_max: int = 64, k_star: int = 2,
                early_stop_tol: float = 1e-9, family: str = "custom",
                param: float = math.nan, seed: int | None = None) -> BoundReport:
    """Evaluate every bound at one parameter point.

    The coherence record restates each bound for the coherence sum,
    max(0, bound - 2 * entropy).
    """
    u = linalg.require_unitary(u)
    m = u.shape[0]
    if not 0 <= entropy <= math.log(m) + 1e-12:
        raise ValueError(f"entropy {entropy} outside [0, log {m}]")
    ubar = unistochastic(u)
    rungs = ladder(ubar, entropy, n_max=n_max, early_stop_tol=early_stop_tol)
    l_mu = maassen_uffink(ubar)
    l_1 = l_mu + entropy
    l_dev = de_vicente(ubar)
    l_maj = majorization_bound(u, k_star)
    coherence = CoherenceBounds(
        ladder=max(0.0, rungs.best_value - 2 * entropy),
        l_1=max(0.0, l_1 - 2 * entropy),
        l_dev=max(0.0, l_dev - 2 * entropy),
        l_maj=max(0.0, l_maj - 2 * entropy),
    )
    return BoundReport(
        family=family,
        dim=m,
        param=param,
        entropy=entropy,
        ladder=rungs,
        l_mu=l_mu,
        l_1=l_1,
        l_dev=l_dev,
        l_maj=l_maj,
        k_star=k_star,
        coherence=coherence,
        seed=seed,
    )
