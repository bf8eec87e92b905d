"""Spectrum of the linearization at a standing wave and the stability verdict.

The Hessian of the action at ``u_omega`` splits into two point-interaction
Hamiltonians ``H_alpha1 + omega`` and ``H_alpha2 + omega`` acting on the real
and imaginary parts. Each ``H_alpha`` on the plane has exactly one bound
state; its energy is :func:`point_interaction_eigenvalue`.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import UnclassifiedError
from .model import ModelParams, critical_constants
from .specfun import EULER_GAMMA
from .waves import _check_frequency, _q_power, mass_slope_indicator


class Verdict(enum.Enum):
    STABLE = "Stable"
    UNSTABLE = "Unstable"


def point_interaction_eigenvalue(alpha):
    """Bound-state energy ``-4 exp(-4 pi alpha - 2 gamma)`` of ``H_alpha``.

    ``-lam`` is an eigenvalue exactly when ``G_lam`` meets the boundary
    condition, i.e. ``alpha + (log(sqrt(lam)/2) + gamma) / (2 pi) = 0``.
    """
    a = np.asarray(alpha, dtype=float)
    with np.errstate(over="ignore", under="ignore"):
        out = -4.0 * np.exp(-4.0 * math.pi * a - 2.0 * EULER_GAMMA)
    return float(out) if out.ndim == 0 else out


def couplings(p: ModelParams, omega):
    """``(alpha1, alpha2) = ((2 sigma + 1) beta q^(2 sigma), beta q^(2 sigma))``."""
    w = _check_frequency(p, omega)
    alpha2 = p.beta * _q_power(p, w)
    alpha1 = (2.0 * p.sigma + 1.0) * alpha2
    if alpha2.ndim == 0:
        return float(alpha1), float(alpha2)
    return alpha1, alpha2


@dataclass(frozen=True)
class SpectrumReport:
    omega: float
    alpha1: float
    alpha2: float
    #: ``omega (1 - exp(-8 pi beta sigma q^(2 sigma)))``, from the real-part block
    isolated_eigenvalue: float
    negative_eigenvalue: Optional[float]
    zero_mode_present: bool
    essential_threshold: float
    vk_slope_sign: int
    verdict: Optional[Verdict]

    @property
    def negative_count(self) -> int:
        return int(self.negative_eigenvalue is not None)


def _verdict(p: ModelParams, omega: float) -> Optional[Verdict]:
    if not p.focusing:
        return Verdict.STABLE
    omega_bar = critical_constants(p).omega_bar
    if omega < omega_bar:
        return Verdict.STABLE
    if omega > omega_bar:
        return Verdict.UNSTABLE
    return None


def linearization_spectrum(p: ModelParams, omega: float) -> SpectrumReport:
    """Isolated points and essential threshold of the linearized operator.

    Shifting each block by ``omega`` moves its bound state to
    ``omega + point_interaction_eigenvalue(alpha_j)``: the imaginary block
    gives the zero mode, the real block the isolated eigenvalue. The
    essential spectrum starts at ``omega``.
    """
    omega = float(omega)
    alpha1, alpha2 = couplings(p, omega)
    # 8 pi beta sigma q^(2 sigma) == 8 pi sigma alpha2
    isolated = -omega * math.expm1(-8.0 * math.pi * p.sigma * alpha2)
    h = mass_slope_indicator(p, omega)
    return SpectrumReport(
        omega=omega,
        alpha1=alpha1,
        alpha2=alpha2,
        isolated_eigenvalue=isolated,
        negative_eigenvalue=isolated if isolated < 0 else None,
        zero_mode_present=True,
        essential_threshold=omega,
        vk_slope_sign=int(np.sign(h)),
        verdict=_verdict(p, omega),
    )


def classify_stability(p: ModelParams, omega: float) -> Verdict:
    """Orbital stability of ``u_omega``.

    Focusing waves are stable below ``omega_bar`` and unstable above, where
    the mass slope changes sign; defocusing waves are all stable.

    Raises
    ------
    UnclassifiedError
        At ``omega == omega_bar``, where no verdict is available.
    """
    omega = float(omega)
    _check_frequency(p, omega)
    verdict = _verdict(p, omega)
    if verdict is None:
        raise UnclassifiedError(f"omega={omega!r} is the critical frequency; stability is not decided there")
    return verdict
