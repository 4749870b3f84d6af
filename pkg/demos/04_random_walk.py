# Classical limit: replace every 2x2 block by its squared moduli.
#
# The averaged map is doubly stochastic, so the uniform distribution is a
# fixed point and every surface relaxes to the maximal entropy 2 log2 d.

import math

import numpy as np

from sqwalk import LatticeSpec, normalize_series, run_rw, stochastic_block

print("block at kappa*tau = pi/3:\n", stochastic_block(math.pi / 3))

d, steps = 40, 4000
curves = [("torus", "axis"), ("klein", "axis"), ("rp2", "axis"), ("torus", "interleaved"), ("sphere", "axis")]
E = {LatticeSpec(d, t, s).label: normalize_series(run_rw(LatticeSpec(d, t, s), steps, sample_every=100)).entropy
     for t, s in curves}
stack = np.array(list(E.values()))
print("largest spread between surfaces:", np.ptp(stack, axis=0).max())
print("final normalized entropies:", {k: round(float(v[-1]), 6) for k, v in E.items()})
