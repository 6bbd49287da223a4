"""Independent brute-force verification of chains and bounds.

:func:`simulate_chain` recomputes measurement chains stage by stage from
basis-vector amplitudes (projector algebra), without going through the
transport conventions of :mod:`eurbounds.stochastic`; that makes it the
arbiter for operand-order questions.  The inequality sweep extends the
alternating products incrementally (one matrix product per depth, equivalence
with the amplitude path is covered by the test suite) and referees every
inequality the bound derivation rests on:

    (a)  H(A) + H(B) >= [D(p^a || p^{ab..a}) + D(p^b || p^{ba..b})] / n + 2 S
    (b)  H(A) + H(B) >= [C(p^a || p^{ab..a}) + C(p^b || p^{ba..b})] / (n+1)
                        + 2n/(n+1) S
    (c)  the chain value in (b) dominates the ladder rung l_n (the bound
         replaces each cross-entropy by -log of a max probability).

Infinite divergences (support violations, possible only through numerical
underflow) count as trivially satisfied with slack +inf.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .bounds import ladder
from .generators import Spectrum, haar_random, spectrum_for_entropy
from .stochastic import (
    cross_entropy,
    frame_matrix,
    kl_divergence,
    measurement_probabilities,
    shannon_entropy,
    unistochastic,
    von_neumann_entropy,
)

SLACK_TOL = 1e-9


@dataclass(frozen=True)
class ChainTrace:
    """Per-stage outcome distributions of one measurement chain."""

    pattern: tuple[str, ...]
    stages: tuple[np.ndarray, ...]

    @property
    def final(self) -> np.ndarray:
        return self.stages[-1]


@dataclass(frozen=True)
class DerivationCheck:
    """Booleans and slacks for the chain inequalities at one depth n.

    ``bound_*`` is the end-to-end statement H(A) + H(B) >= l_n implied by
    chaining (b) and (c).
    """

    n: int
    relative_holds: bool
    relative_slack: float
    cross_holds: bool
    cross_slack: float
    ladder_holds: bool
    ladder_slack: float
    bound_holds: bool
    bound_slack: float

    @property
    def all_hold(self) -> bool:
        return (self.relative_holds and self.cross_holds
                and self.ladder_holds and self.bound_holds)


@dataclass(frozen=True)
class LadderCheck:
    """Sampling statistics from checking H(A)+H(B) against the best ladder bound."""

    trials: int
    violations: int
    worst_slack: float
    bound: float


def chain_pattern(terminal: str, n: int) -> tuple[str, ...]:
    """Alternating pattern of n+1 measurement labels ending in ``terminal``."""
    terminal = terminal.lower()
    if terminal not in ("a", "b"):
        raise ValueError(f"terminal basis must be 'A' or 'B', got {terminal!r}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    other = "b" if terminal == "a" else "a"
    labels = [terminal if k % 2 == 0 else other for k in range(n + 1)]
    return tuple(reversed(labels))


def simulate_chain(u: np.ndarray, spectrum: Spectrum, frame="a",
                   pattern=("a", "b", "a")) -> ChainTrace:
    """Simulate a measurement chain by explicit projector algebra.

    After measuring basis X the state is sum_i q_i |x_i><x_i|, so the next
    stage distribution follows by the |<y_j|x_i>|^2 transport; the first
    stage comes from the state's eigenvalues and eigenbasis (``frame``).
    """
    u = linalg.require_unitary(u)
    labels = tuple(str(c).lower() for c in pattern)
    if not labels:
        raise ValueError("pattern must contain at least one measurement label")
    if any(c not in ("a", "b") for c in labels):
        raise ValueError(f"pattern labels must be 'A' or 'B', got {pattern!r}")
    if spectrum.dim != u.shape[0]:
        raise ValueError(f"spectrum dimension {spectrum.dim} does not match unitary {u.shape}")
    v = frame_matrix(u, frame)
    basis = {"a": np.eye(u.shape[0], dtype=complex), "b": u}
    q = np.abs(basis[labels[0]].conj().T @ v) ** 2 @ spectrum.values
    q = q / q.sum()
    stages = [q]
    for prev, cur in zip(labels, labels[1:]):
        transport = np.abs(basis[cur].conj().T @ basis[prev]) ** 2
        q = transport @ q
        q = q / q.sum()
        stages.append(q)
    return ChainTrace(labels, tuple(stages))


def _check(lhs: float, rhs: float, tol: float = SLACK_TOL) -> tuple[bool, float]:
    if math.isinf(rhs):
        return True, math.inf
    slack = lhs - rhs
    return slack >= -tol, slack


def derivation_chain_checks(u: np.ndarray, spectrum: Spectrum, frame="a",
                            n_max: int = 16) -> list[DerivationCheck]:
    """Verify the chain inequalities for every depth n = 1 .. n_max.

    The alternating chain products are extended one factor at a time, so the
    whole sweep costs one matrix product per depth.
    """
    u = linalg.require_unitary(u)
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    v = frame_matrix(u, frame)
    p_a = measurement_probabilities(u, spectrum, "a", v)
    p_b = measurement_probabilities(u, spectrum, "b", v)
    entropy_sum = shannon_entropy(p_a) + shannon_entropy(p_b)
    s_rho = von_neumann_entropy(spectrum)
    ubar = unistochastic(u)
    rungs = ladder(ubar, s_rho, n_max=n_max, early_stop_tol=0.0)

    checks = []
    prod_a = ubar  # n-factor product Ubar Ubar^T ... (A-terminated chains)
    prod_b = ubar.T
    for n in range(1, n_max + 1):
        final_a = prod_a @ (p_a if n % 2 == 0 else p_b)
        final_b = prod_b @ (p_b if n % 2 == 0 else p_a)
        d_sum = kl_divergence(p_a, final_a) + kl_divergence(p_b, final_b)
        c_sum = cross_entropy(p_a, final_a) + cross_entropy(p_b, final_b)
        chain_value = c_sum / (n + 1) + 2 * n / (n + 1) * s_rho
        rel_holds, rel_slack = _check(entropy_sum, d_sum / n + 2 * s_rho)
        cross_holds, cross_slack = _check(entropy_sum, chain_value)
        l_n = rungs.entries[n - 1].l_n
        if math.isinf(chain_value):
            lad_holds, lad_slack = True, math.inf
        else:
            lad_slack = chain_value - l_n
            lad_holds = lad_slack >= -SLACK_TOL
        bound_holds, bound_slack = _check(entropy_sum, l_n)
        checks.append(DerivationCheck(n, rel_holds, rel_slack, cross_holds,
                                      cross_slack, lad_holds, lad_slack,
                                      bound_holds, bound_slack))
        if n % 2 == 1:
            prod_a = prod_a @ ubar.T
            prod_b = prod_b @ ubar
        else:
            prod_a = prod_a @ ubar
            prod_b = prod_b @ ubar.T
    return checks


def verify_derivation_chain(u: np.ndarray, spectrum: Spectrum, frame="a",
                            n: int = 1) -> DerivationCheck:
    """Verify the chain inequalities at a single depth n."""
    return derivation_chain_checks(u, spectrum, frame, n_max=n)[-1]


def random_case(dim: int, seed: int) -> tuple[np.ndarray, Spectrum, np.ndarray]:
    """Draw a Haar unitary, a random spectrum, and a Haar eigenframe.

    Sub-seeds are derived so the three draws come from independent Philox
    streams while remaining fully determined by ``seed``.
    """
    u = haar_random(dim, 2 * seed)
    frame = haar_random(dim, 2 * seed + 1)
    rng = np.random.Generator(np.random.Philox(seed))
    lam = np.sort(rng.dirichlet(np.ones(dim)))[::-1]
    return u, Spectrum(lam), frame


def verify_ladder_bound(u: np.ndarray, entropy: float, trials: int,
                        seed: int, n_max: int = 64) -> LadderCheck:
    """Sample random-frame states and check H(A)+H(B) against the best bound.

    States share the thermal spectrum matching ``entropy``; each trial draws
    a fresh Haar eigenframe with the derived seed ``seed + trial``.  Returns
    the violation count and the worst (smallest) slack observed.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    u = linalg.require_unitary(u)
    m = u.shape[0]
    spectrum = spectrum_for_entropy(m, entropy)
    best = ladder(unistochastic(u), entropy).best_value
    violations = 0
    worst = math.inf
    for trial in range(trials):
        v = haar_random(m, seed + trial)
        total = (shannon_entropy(measurement_probabilities(u, spectrum, "a", v))
                 + shannon_entropy(measurement_probabilities(u, spectrum, "b", v)))
        slack = total - best
        worst = min(worst, slack)
        if slack < -SLACK_TOL:
            violations += 1
    return LadderCheck(trials, violations, worst, best)
