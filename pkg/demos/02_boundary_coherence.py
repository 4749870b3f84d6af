# Coherence and entropy of the staggered walk on five surfaces (d = 100).
#
# Same parameters as the coherence/entropy figures: 1000 steps, kappa*tau =
# pi/3, omega*tau = 2*pi, walker starting at site (d^2 - d)/2.  Takes a
# couple of seconds.

import math

import matplotlib.pyplot as plt
import numpy as np

from sqwalk import LatticeSpec, normalize_series, run_sqw

curves = [("T2", "torus", "axis"), ("KB", "klein", "axis"), ("RP2", "rp2", "axis"),
          ("T2p", "torus", "interleaved"), ("S2", "sphere", "axis")]

runs = {}
for label, topology, scheme in curves:
    spec = LatticeSpec(100, topology, scheme, omega_tau=2 * math.pi, kappa_tau=math.pi / 3)
    runs[label] = normalize_series(run_sqw(spec, 1000))

print("mean over steps 100-1000   coherence  entropy")
for label, s in runs.items():
    print(f"  {label:4s}                    {s.coherence[100:].mean():.4f}    {s.entropy[100:].mean():.4f}")

# Until the wave packet reaches a seam (about d/4 steps) the axis-aligned
# surfaces cannot be told apart.
gap = max(np.abs(runs[k].coherence[:25] - runs["T2"].coherence[:25]).max() for k in ("KB", "RP2", "S2"))
print("largest difference in the first 25 steps:", gap)

fig, axes = plt.subplots(1, 2, figsize=(11, 4))
for label, s in runs.items():
    axes[0].plot(s.steps, s.coherence, lw=0.7, label=label)
    axes[1].plot(s.steps, s.entropy, lw=0.7, label=label)
axes[0].set_ylabel("normalized coherence")
axes[1].set_ylabel("normalized entropy")
for ax in axes:
    ax.set_xlabel("step")
    ax.legend(frameon=False)
fig.tight_layout()
fig.savefig("boundary_coherence.png", dpi=120)
print("saved boundary_coherence.png")
