"""Spin rotations at M = 128: the regime where only the ladder says anything.

For exp(-2i theta J_y) with a mixed state the deeper rungs dominate the
first one at every angle, and once S(rho) is large enough the ladder gives
the only positive bound on the coherence sum among the cheap ones.
"""

import math
from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

import eurbounds as eb

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

thetas = np.linspace(0.05, math.pi / 2 - 0.05, 60)
reports = [eb.full_report(eb.spin_rotation(128, float(t)), 1.0, k_star=2,
                          family="spin", param=float(t)) for t in thetas]

fig, axes = plt.subplots(1, 2, figsize=(11, 4.2))
axes[0].plot(thetas, [r.coherence.ladder for r in reports], ":", color="tab:blue",
             label="L - 2S")
axes[0].plot(thetas, [r.coherence.l_maj for r in reports], color="tab:orange",
             label="L_Maj - 2S")
axes[0].plot(thetas, [r.coherence.l_1 for r in reports], "--", color="tab:green",
             label="L_1 - 2S")
axes[0].plot(thetas, [r.coherence.l_dev for r in reports], "--", color="black",
             label="L_deV - 2S")
axes[0].set_xlabel("theta")
axes[0].set_ylabel("coherence-sum bound (nats)")
axes[0].set_title("M=128 spin, S(rho)=1")
axes[0].legend()

# Raise the entropy: u_n is state independent, so each angle's rungs can be
# reused while S varies.
entropies = np.linspace(1.0, 3.5, 26)
theta_probe = 0.6
lad = eb.ladder(eb.unistochastic(eb.spin_rotation(128, theta_probe)), 0.0)
l_mu = -math.log(math.sqrt(lad.entries[0].s_n))
l_dev = eb.de_vicente(eb.unistochastic(eb.spin_rotation(128, theta_probe)))
coh_ladder = [max(max(e.u_n - 2 * s / (e.n + 1) for e in lad.entries), 0.0)
              for s in entropies]
coh_l1 = [max(l_mu - s, 0.0) for s in entropies]
coh_dev = [max(l_dev - 2 * s, 0.0) for s in entropies]

axes[1].plot(entropies, coh_ladder, ":", color="tab:blue", label="L - 2S")
axes[1].plot(entropies, coh_l1, "--", color="tab:green", label="L_1 - 2S")
axes[1].plot(entropies, coh_dev, "--", color="black", label="L_deV - 2S")
axes[1].set_xlabel("S(rho)")
axes[1].set_ylabel("coherence-sum bound (nats)")
axes[1].set_title(f"M=128 spin, theta={theta_probe}")
axes[1].legend()

fig.tight_layout()
fig.savefig(OUT / "spin128_bounds.svg")
print(f"wrote {OUT / 'spin128_bounds.svg'}")

gaps = [r.ladder.best_value - r.l_1 for r in reports]
print(f"\nS=1: ladder improvement over the first rung: "
      f"min {min(gaps):.4f}, max {max(gaps):.4f} nats")

# the entropy where each competitor's coherence bound dies at theta_probe
s_l1_dead = next(s for s, v in zip(entropies, coh_l1) if v == 0.0)
print(f"theta={theta_probe}: L_1 coherence bound vanishes for S >= {s_l1_dead:.2f}; "
      f"the ladder bound is positive on the whole scan "
      f"(still {coh_ladder[-1]:.4f} nats at S = {entropies[-1]:.2f})")
