"""Entropic uncertainty bounds from powers of unistochastic matrices.

Given two orthonormal bases connected by a unitary U, alternating chains of
projective measurements map to products of the unistochastic matrix
|U_ij|^2 and its transpose.  The largest entries of those products yield a
sequence of lower bounds on H(A) + H(B), evaluated here alongside the
classical competitors (Maassen-Uffink, de Vicente, direct-sum majorization)
for the standard test families and random ensembles.
"""

__version__ = "0.1.0"

from .bounds import (
    BoundLadder,
    BoundReport,
    CoherenceBounds,
    LadderEntry,
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
from .generators import (
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
from .linalg import (
    RealSymmetricEigenDecomposition,
    eigh_hermitian,
    eigh_real_symmetric,
    largest_singular_value,
    multiply,
    unitary_function,
)
from .oracle import (
    ChainTrace,
    DerivationCheck,
    LadderCheck,
    chain_pattern,
    derivation_chain_checks,
    random_case,
    simulate_chain,
    verify_derivation_chain,
    verify_ladder_bound,
)
from .stochastic import (
    chain_propagate,
    cross_entropy,
    kl_divergence,
    measurement_probabilities,
    shannon_entropy,
    unistochastic,
    von_neumann_entropy,
)

__all__ = [
    "__version__",
    "BoundLadder", "BoundReport", "CoherenceBounds", "LadderEntry",
    "de_vicente", "full_report", "ladder", "maassen_uffink",
    "majorization_bound", "majorization_vector",
    "s_sequence", "s_sequence_spectral", "s_sequence_spectral_general",
    "Spectrum", "haar_random", "qft", "qft_power", "qubit_rotation",
    "spectrum_for_entropy", "spin_rotation", "spin_y", "thermal_spectrum",
    "RealSymmetricEigenDecomposition", "eigh_hermitian", "eigh_real_symmetric",
    "largest_singular_value", "multiply", "unitary_function",
    "ChainTrace", "DerivationCheck", "LadderCheck", "chain_pattern",
    "derivation_chain_checks", "random_case", "simulate_chain",
    "verify_derivation_chain", "verify_ladder_bound",
    "chain_propagate", "cross_entropy", "kl_divergence",
    "measurement_probabilities", "shannon_entropy", "unistochastic",
    "von_neumann_entropy",
]
