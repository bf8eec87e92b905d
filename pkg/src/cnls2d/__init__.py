"""Standing waves and their orbital stability for the planar Schrodinger
equation with a nonlinearity concentrated at one point."""
from .errors import BracketError, ConvergenceError, DomainError, UnclassifiedError
from .model import OMEGA_TILDE, CriticalConstants, ModelParams, Regime, critical_constants, frequency_interval, make_params
from .report import CurveId, CurveTable, Spacing, figure_tables, read_table, sample_curve, write_plot_script, write_table
from .solve import (
    GroundStateResult,
    MassInversionResult,
    defocusing_lower_bound_gap,
    escape_sequence_energy,
    escape_sequence_functional_energy,
    ground_state_frequency,
    invert_mass_focusing,
)
from .specfun import EULER_GAMMA, QuadratureResult, green_function, macdonald_k0, radial_fourier_quadrature
from .stability import SpectrumReport, Verdict, classify_stability, linearization_spectrum, point_interaction_eigenvalue
from .waves import (
    Branch,
    GreenPairing,
    StandingWave,
    charge_of_frequency,
    energy_of_charge,
    energy_of_frequency,
    frequency_of_charge,
    green_l2_pairing,
    mass_of_charge,
    mass_of_frequency,
    mass_slope_indicator,
    standing_wave,
    vnorm_distance,
)

__version__ = "0.1.0"
