"""
Ground states and fixed-mass standing waves
===========================================

Repulsive case: solve for the ground-state frequency at a given mass and
check that it minimizes the lower-bound function. Attractive case: invert
the mass curve on both of its branches.
"""
import numpy as np

from cnls2d import (
    classify_stability,
    critical_constants,
    defocusing_lower_bound_gap,
    ground_state_frequency,
    invert_mass_focusing,
    make_params,
    mass_of_frequency,
)

d = make_params(1.0, 1.0)
for mu in (1e-3, 1e-2, 0.1, 1.0, 10.0):
    r = ground_state_frequency(d, mu)
    print(f"mu={mu:<6g} omega_mu={r.omega_mu:.12f} q={r.charge:.6f} E={r.energy:.6e} residual={r.residual:.1e}")

# %%
# The gap to the lower bound is zero at the ground-state charge only.
r = ground_state_frequency(d, 0.01)
q = np.linspace(r.charge / 10, 3 * r.charge, 7)
print(np.c_[q, defocusing_lower_bound_gap(d, 0.01, q, ground=r)])

# %%
# Attractive case: two frequencies share each mass below mu_bar.
f = make_params(1.0, -1.0)
mu_bar = critical_constants(f).mu_bar
for mu in (1e-4, 1e-3, 0.99 * mu_bar):
    inv = invert_mass_focusing(f, mu)
    print(f"mu={mu:.3e}: low {inv.omega_low:.6f} ({classify_stability(f, inv.omega_low).value}), "
          f"high {inv.omega_high:.6f} ({classify_stability(f, inv.omega_high).value}), "
          f"check {mass_of_frequency(f, inv.omega_low):.3e} {mass_of_frequency(f, inv.omega_high):.3e}")
