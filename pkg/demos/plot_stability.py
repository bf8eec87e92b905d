"""
Stability of the standing waves
===============================

Walk along the focusing branch and compare three views of stability: the
sign of dM/domega, the isolated eigenvalue of the linearization, and the
verdict itself.
"""
import numpy as np

from cnls2d import (
    OMEGA_TILDE,
    classify_stability,
    critical_constants,
    linearization_spectrum,
    make_params,
    mass_slope_indicator,
)

p = make_params(1.0, -1.0)
omega_bar = critical_constants(p).omega_bar
print(f"omega_bar = {omega_bar:.6f}")

# %%
# Below omega_bar the mass grows with the frequency and the wave is stable.
# Past it the mass falls and the wave is unstable.
print(f"{'omega':>8} {'h(omega)':>10} {'neg. eig.':>12} verdict")
for omega in np.geomspace(OMEGA_TILDE * 1.05, 40.0, 12):
    rep = linearization_spectrum(p, omega)
    print(f"{omega:8.3f} {mass_slope_indicator(p, omega):10.4f} {rep.negative_eigenvalue:12.4f} {rep.verdict.value}")

# %%
# The eigenvalue at omega_bar has a closed form, but the verdict is left open.
rep = linearization_spectrum(p, omega_bar)
print("at omega_bar:", rep.negative_eigenvalue, "=", omega_bar * (1 - np.e**2), "verdict:", rep.verdict)

# %%
# Repulsive case: no negative eigenvalue, every wave is stable.
d = make_params(1.0, 1.0)
for omega in (0.01, 0.3, 1.0, 1.25):
    rep = linearization_spectrum(d, omega)
    print(omega, rep.isolated_eigenvalue, classify_stability(d, omega).value)
