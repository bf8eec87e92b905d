"""
Distances in the energy space
=============================

The energy norm needs a reference spectral parameter lambda_ref; different
choices give equivalent norms. Estimate the equivalence constants on a set
of standing-wave pairs.
"""
import itertools

import numpy as np

from cnls2d import make_params, standing_wave, vnorm_distance

p = make_params(1.0, -1.0)
waves = [standing_wave(p, w) for w in (1.4, 2.0, 3.0, 5.0, 16.0)]
print("branches:", [w.branch.value for w in waves])

pairs = list(itertools.combinations(waves, 2))
base = np.array([vnorm_distance(p, a, b, 1.0) for a, b in pairs])
for lam in (0.25, 2.5, 10.0):
    ratio = np.array([vnorm_distance(p, a, b, lam) for a, b in pairs]) / base
    print(f"lambda_ref={lam:<5g} c_low={ratio.min():.4f} c_high={ratio.max():.4f}")
