"""Brute-force sanity pass: chain order and the full inequality suite.

Runs the amplitude-level simulation against the matrix transport to settle
the operand order of the alternating chain, then sweeps random draws through
every inequality the bounds rest on.
"""

import numpy as np

import eurbounds as eb

# --- which product order does the A-B-A chain realize? -----------------------
u, spectrum, frame = eb.random_case(3, 2024)
ubar = eb.unistochastic(u)
p_a = eb.measurement_probabilities(u, spectrum, "a", frame)
final = eb.simulate_chain(u, spectrum, frame, "aba").final

err_left = np.abs(final - ubar @ ubar.T @ p_a).max()
err_right = np.abs(final - ubar.T @ ubar @ p_a).max()
print("A-B-A chain vs Ubar Ubar^T p^a :", f"{err_left:.2e}")
print("A-B-A chain vs Ubar^T Ubar p^a :", f"{err_right:.2e}")
print("=> the chain applies Ubar^T first (A to B), then Ubar (B to A)\n")

# --- inequality suite over random draws --------------------------------------
worst = np.inf
total = 0
for dim in (2, 3, 4, 5):
    for trial in range(200):
        u, spectrum, frame = eb.random_case(dim, 10_000 * dim + trial)
        for check in eb.derivation_chain_checks(u, spectrum, frame, n_max=12):
            assert check.all_hold, f"violation: dim={dim} trial={trial} n={check.n}"
            worst = min(worst, check.relative_slack, check.cross_slack,
                        check.ladder_slack, check.bound_slack)
            total += 1
print(f"{total} inequality checks across 800 random draws, worst slack {worst:.2e}")

# --- sampling check of the best bound itself ---------------------------------
result = eb.verify_ladder_bound(eb.qft_power(3, 0.5), 0.914, trials=5000, seed=1)
print(f"\nqft_power(3, 0.5), S=0.914: bound {result.bound:.4f} nats, "
      f"{result.trials} random states, {result.violations} violations, "
      f"worst slack {result.worst_slack:.4f}")
