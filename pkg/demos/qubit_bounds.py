"""Two-dimensional walkthrough: rungs, crossover, and bound comparison.

The qubit is the one case where everything is available in closed form, so
this script checks the library against hand-derived results before
reproducing the pure-state and fixed-entropy comparisons.
"""

import math
from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

import eurbounds as eb
from eurbounds.cli import find_crossover

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

# --- closed-form check ------------------------------------------------------
# For U = [[cos t, -sin t], [sin t, cos t]] the squared-modulus matrix has
# eigenvalues (1, cos 2t), and the largest entry of its n-th power is
# (1 + |cos 2t|^n) / 2.
theta = 0.45
ubar = eb.unistochastic(eb.qubit_rotation(theta))
s = eb.s_sequence(ubar, 6)
closed = [((1 + abs(math.cos(2 * theta)) ** n) / 2) ** 2 for n in range(1, 7)]
print("s_n computed:   ", np.round(s, 10))
print("s_n closed form:", np.round(closed, 10))

# --- where does the second rung overtake the first? -------------------------
theta_star = find_crossover("qubit", 2, (1, 2), tol=1e-8)
print(f"\nu_2 > u_1 for theta below {theta_star:.6f} rad")

# --- pure states: ladder vs Maassen-Uffink vs majorization ------------------
thetas = np.linspace(0.02, math.pi / 2 - 0.02, 300)
pure = [eb.full_report(eb.qubit_rotation(t), 0.0, k_star=1) for t in thetas]

fig, axes = plt.subplots(1, 2, figsize=(11, 4.2))
axes[0].plot(thetas, [r.ladder.best_value for r in pure], ":", color="tab:blue",
             label="L (ladder best)")
axes[0].plot(thetas, [r.l_maj for r in pure], color="tab:orange", label="L_Maj")
axes[0].plot(thetas, [r.l_1 for r in pure], "--", color="tab:green", label="L_1")
axes[0].axvline(theta_star, color="gray", lw=0.8)
axes[0].set_xlabel("theta")
axes[0].set_ylabel("bound (nats)")
axes[0].set_title("pure states")
axes[0].legend()

# --- mixed states at S(rho) = 0.32: bounds on the coherence sum -------------
entropy = 0.32
mixed = [eb.full_report(eb.qubit_rotation(t), entropy, k_star=1) for t in thetas]
axes[1].plot(thetas, [r.coherence.ladder for r in mixed], ":", color="tab:blue",
             label="L - 2S")
axes[1].plot(thetas, [r.coherence.l_maj for r in mixed], color="tab:orange",
             label="L_Maj - 2S")
axes[1].plot(thetas, [r.coherence.l_1 for r in mixed], "--", color="tab:green",
             label="L_1 - 2S")
axes[1].set_xlabel("theta")
axes[1].set_ylabel("coherence-sum bound (nats)")
axes[1].set_title(f"S(rho) = {entropy}")
axes[1].legend()

fig.tight_layout()
target = OUT / "qubit_bounds.svg"
fig.savefig(target)
print(f"\nwrote {target}")

# Near theta = 0 the bases nearly coincide and the deep rungs approach the
# asymptote 2 S(rho); near pi/4 the bases become mutually unbiased and the
# first rung takes over.
r0 = eb.full_report(eb.qubit_rotation(0.05), entropy, k_star=1)
r1 = eb.full_report(eb.qubit_rotation(math.pi / 4), entropy, k_star=1)
print(f"theta=0.05:  best rung n={r0.ladder.best_n}, L={r0.ladder.best_value:.4f} "
      f"(2S = {2 * entropy:.4f})")
print(f"theta=pi/4: best rung n={r1.ladder.best_n}, L={r1.ladder.best_value:.4f} "
      f"(log 2 + S = {math.log(2) + entropy:.4f})")
