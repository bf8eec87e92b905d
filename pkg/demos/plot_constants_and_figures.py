"""
Critical constants and the five standing-wave figures
======================================================

Tabulate the critical constants for a few nonlinearity powers, then write
the data tables and gnuplot scripts behind the five standing-wave figures.
"""
import sys
import tempfile
from pathlib import Path

import numpy as np

from cnls2d import critical_constants, make_params
from cnls2d.report import figure_tables, reproduce_figures

# %%
# The endpoint frequency does not depend on the nonlinearity. The critical
# frequency, charge, energy floor and maximal mass only exist when focusing.
for sigma in (0.5, 1.0, 2.0):
    cc = critical_constants(make_params(sigma, -1.0))
    print(f"sigma={sigma:<4g} omega_tilde={cc.omega_tilde:.6f} omega_bar={cc.omega_bar:.6f} "
          f"q_bar={cc.q_bar:.6f} Lambda={cc.lambda_threshold:.3e} mu_bar={cc.mu_bar:.3e}")

print(critical_constants(make_params(1.0, 1.0)))

# %%
# Each figure has two panels. The energy panel of figure 1 is a single well
# whose bottom sits at (omega_bar, Lambda).
q_panel, e_panel = figure_tables(1, n=400)
i = int(np.argmin(e_panel.y))
print("figure 1 energy minimum on the grid:", e_panel.x[i], e_panel.y[i])
print("marker:", e_panel.markers)

# %%
# Write everything to disk; pass a directory to keep the files.
outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp(prefix="figures_"))
for path in reproduce_figures(outdir):
    print("wrote", path)
print("render with: cd", outdir, "&& gnuplot fig1.gp")
