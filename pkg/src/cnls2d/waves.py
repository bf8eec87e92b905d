"""The standing-wave family ``u = q(omega) G_omega`` and its mass and energy.

Every standing wave is fixed by its frequency ``omega`` and charge ``q``;
profiles are never tabulated. The two parametrizations, by frequency and by
charge, are supplied side by side so each can check the other.

All frequency and charge functions accept scalars or numpy arrays.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .model import OMEGA_TILDE, ModelParams, critical_constants
from .specfun import EULER_GAMMA, QuadratureResult, green_function, radial_fourier_quadrature

TWO_PI = 2.0 * math.pi
FOUR_PI = 4.0 * math.pi


def _unwrap(arr: np.ndarray):
    return float(arr) if arr.ndim == 0 else arr


def _check_frequency(p: ModelParams, omega) -> np.ndarray:
    w = np.asarray(omega, dtype=float)
    if p.focusing:
        ok = (w > OMEGA_TILDE) & np.isfinite(w)
        interval = f"({OMEGA_TILDE:.12g}, inf)"
    else:
        ok = (w > 0) & (w < OMEGA_TILDE)
        interval = f"(0, {OMEGA_TILDE:.12g})"
    if not np.all(ok):
        bad = w if w.ndim == 0 else w[~ok][0]
        raise DomainError(f"omega={float(bad)!r} outside the {p.regime.value} frequency interval {interval}")
    return w


def _check_charge(q) -> np.ndarray:
    q = np.asarray(q, dtype=float)
    ok = (q > 0) & np.isfinite(q)
    if not np.all(ok):
        bad = q if q.ndim == 0 else q[~ok][0]
        raise DomainError(f"charge must be finite and > 0, got {float(bad)!r}")
    return q


def log_excess(omega):
    """``log(sqrt(omega)/2) + gamma``, written as ``log(omega/omega_tilde)/2``.

    Near ``omega_tilde`` the log1p form keeps full relative accuracy.
    """
    w = np.asarray(omega, dtype=float)
    ratio = w / OMEGA_TILDE
    with np.errstate(divide="ignore", invalid="ignore"):
        near = np.log1p((w - OMEGA_TILDE) / OMEGA_TILDE)
        far = np.log(ratio)
    return 0.5 * np.where(np.abs(ratio - 1.0) < 0.5, near, far)


def _q_power(p: ModelParams, w: np.ndarray) -> np.ndarray:
    # q^(2 sigma) as a function of frequency
    return -log_excess(w) / (TWO_PI * p.beta)


def charge_of_frequency(p: ModelParams, omega):
    w = _check_frequency(p, omega)
    return _unwrap(_q_power(p, w) ** (1.0 / (2.0 * p.sigma)))


def frequency_of_charge(p: ModelParams, q):
    q = _check_charge(q)
    with np.errstate(under="ignore"):
        return _unwrap(OMEGA_TILDE * np.exp(-FOUR_PI * p.beta * q ** (2.0 * p.sigma)))


def energy_of_frequency(p: ModelParams, omega):
    w = _check_frequency(p, omega)
    s = p.sigma
    L = log_excess(w)
    return _unwrap((s * L / (TWO_PI * (s + 1.0)) - 1.0 / FOUR_PI) * _q_power(p, w) ** (1.0 / s))


def energy_of_charge(p: ModelParams, q):
    q = _check_charge(q)
    s = p.sigma
    return _unwrap(-(q * q) / FOUR_PI - s * p.beta * q ** (2.0 * s + 2.0) / (s + 1.0))


def mass_of_frequency(p: ModelParams, omega):
    w = _check_frequency(p, omega)
    return _unwrap(_q_power(p, w) ** (1.0 / p.sigma) / (FOUR_PI * w))


def mass_of_charge(p: ModelParams, q):
    q = _check_charge(q)
    with np.errstate(over="ignore"):
        growth = np.exp(2.0 * EULER_GAMMA + FOUR_PI * p.beta * q ** (2.0 * p.sigma))
    return _unwrap(q * q * growth / (16.0 * math.pi))


def mass_slope_indicator(p: ModelParams, omega):
    """The factor ``h`` in ``M'(omega) = q^2 / (4 pi omega^2) * h(omega)``.

    The prefactor is positive, so ``h`` carries the sign of the mass slope.
    """
    w = _check_frequency(p, omega)
    return _unwrap(1.0 / (2.0 * p.sigma * log_excess(w)) - 1.0)


def mass_derivative(p: ModelParams, omega):
    """Exact derivative of the mass along the family, ``dM/domega``."""
    w = _check_frequency(p, omega)
    h = 1.0 / (2.0 * p.sigma * log_excess(w)) - 1.0
    return _unwrap(_q_power(p, w) ** (1.0 / p.sigma) / (FOUR_PI * w * w) * h)


class Branch(enum.Enum):
    FOCUSING_STABLE = "focusing-stable"
    FOCUSING_UNSTABLE = "focusing-unstable"
    FOCUSING_CRITICAL = "focusing-critical"
    DEFOCUSING = "defocusing"


@dataclass(frozen=True)
class StandingWave:
    omega: float
    q: float
    mass: float
    energy: float
    branch: Branch

    def profile(self, r):
        """Pointwise value ``q * G_omega(r)`` at radius ``r > 0``."""
        return self.q * np.asarray(green_function(self.omega, r))


def standing_wave(p: ModelParams, omega: float) -> StandingWave:
    omega = float(omega)
    q = charge_of_frequency(p, omega)
    if p.focusing:
        omega_bar = critical_constants(p).omega_bar
        if omega < omega_bar:
            branch = Branch.FOCUSING_STABLE
        elif omega > omega_bar:
            branch = Branch.FOCUSING_UNSTABLE
        else:
            branch = Branch.FOCUSING_CRITICAL
    else:
        branch = Branch.DEFOCUSING
    return StandingWave(omega, q, mass_of_frequency(p, omega), energy_of_frequency(p, omega), branch)


@dataclass(frozen=True)
class GreenPairing:
    lambda1: float
    lambda2: float
    l2_inner: float


def green_l2_pairing(lambda1: float, lambda2: float) -> GreenPairing:
    """Closed-form ``<G_lambda1, G_lambda2>`` in L2 of the plane.

    Equals ``log(lambda2/lambda1) / (4 pi (lambda2 - lambda1))``, with the
    removable singularity filled by ``1/(4 pi lambda)``.
    """
    l1, l2 = float(lambda1), float(lambda2)
    if not (l1 > 0 and l2 > 0 and math.isfinite(l1) and math.isfinite(l2)):
        raise DomainError(f"pairing needs positive finite lambdas, got {lambda1!r}, {lambda2!r}")
    lo, hi = min(l1, l2), max(l1, l2)
    d = (hi - lo) / lo
    ratio = 1.0 if d == 0 else math.log1p(d) / d  # = lo * log(hi/lo) / (hi - lo)
    return GreenPairing(l1, l2, ratio / (FOUR_PI * lo))


def green_pairing_quadrature(lambda1: float, lambda2: float, tol: float = 1e-9) -> QuadratureResult:
    """``<G_lambda1, G_lambda2>`` from its Fourier integral, by quadrature."""
    l1, l2 = float(lambda1), float(lambda2)
    if not (l1 > 0 and l2 > 0):
        raise DomainError(f"pairing needs positive lambdas, got {lambda1!r}, {lambda2!r}")
    return radial_fourier_quadrature(lambda k: 1.0 / ((k * k + l1) * (k * k + l2) * TWO_PI), -3.0, tol=tol)


def vnorm_distance(
    p: ModelParams, w1: StandingWave, w2: StandingWave, lambda_ref: float = 1.0
) -> float:
    """Distance between two standing waves in the energy-space norm.

    Each wave is split as ``q (G_omega - G_ref) + q G_ref`` with ``G_ref`` the
    Green's function at ``lambda_ref``. The squared norm is the H1 norm of
    the regular part of the difference plus ``|q1 - q2|^2 / (4 pi lambda_ref)``.
    The H1 part is a radial Fourier quadrature.
    """
    lam = float(lambda_ref)
    if not lam > 0:
        raise DomainError(f"lambda_ref must be > 0, got {lambda_ref!r}")
    for w in (w1, w2):
        _check_frequency(p, w.omega)
    q1, o1, q2, o2 = w1.q, w1.omega, w2.q, w2.omega

    def regular_sq(k):
        k2 = k * k
        chi = (q1 * (lam - o1) / (k2 + o1) - q2 * (lam - o2) / (k2 + o2)) / (k2 + lam)
        return (1.0 + k2) * chi * chi / TWO_PI

    r = radial_fourier_quadrature(regular_sq, -5.0)
    h1_sq = r.value
    if 0 < h1_sq < 1e-3:
        h1_sq = radial_fourier_quadrature(regular_sq, -5.0, tol=1e-6 * h1_sq).value
    return math.sqrt(max(h1_sq, 0.0) + (q1 - q2) ** 2 / (FOUR_PI * lam))


def singular_state_energy(p: ModelParams, q, lam):
    """Energy of the purely singular state ``q G_lam`` (zero regular part).

    With the decomposition parameter set to ``lam`` the regular part
    vanishes, leaving ``-q^2/(4 pi) + (beta q^(2 sigma)/(sigma+1)
    + (log(sqrt(lam)/2) + gamma)/(2 pi)) q^2``.
    """
    q = _check_charge(q)
    lam = np.asarray(lam, dtype=float)
    if not np.all(lam > 0):
        raise DomainError(f"lam must be > 0, got {lam!r}")
    s = p.sigma
    q2 = q * q
    return _unwrap(-q2 / FOUR_PI + (p.beta * q ** (2.0 * s) / (s + 1.0) + log_excess(lam) / TWO_PI) * q2)
