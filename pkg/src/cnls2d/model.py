"""Model parameters and the critical constants of the standing-wave theory."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError
from .specfun import EULER_GAMMA

#: Endpoint frequency where the charge of a standing wave vanishes.
OMEGA_TILDE = 4.0 * math.exp(-2.0 * EULER_GAMMA)


class Regime(enum.Enum):
    FOCUSING = "focusing"
    DEFOCUSING = "defocusing"


@dataclass(frozen=True)
class ModelParams:
    """Power ``sigma`` and coupling ``beta`` of the point nonlinearity.

    Build with :func:`make_params`, which validates and derives the regime.
    """

    sigma: float
    beta: float
    regime: Regime

    def __post_init__(self):
        if not self.sigma > 0:
            raise DomainError(f"sigma must be > 0, got {self.sigma!r}")
        if not (self.beta != 0 and math.isfinite(self.beta)):
            raise DomainError(f"beta must be finite and nonzero, got {self.beta!r}")
        expected = Regime.FOCUSING if self.beta < 0 else Regime.DEFOCUSING
        if self.regime is not expected:
            raise DomainError(f"beta={self.beta} implies {expected.value} regime")

    @property
    def focusing(self) -> bool:
        return self.regime is Regime.FOCUSING

    @property
    def well_posed(self) -> bool:
        """Whether sigma >= 1/2, the power range with a local Cauchy theory."""
        return self.sigma >= 0.5


def make_params(sigma: float, beta: float) -> ModelParams:
    sigma = float(sigma)
    beta = float(beta)
    if not sigma > 0 or not math.isfinite(sigma):
        raise DomainError(f"sigma must be finite and > 0, got {sigma!r}")
    if beta == 0 or not math.isfinite(beta):
        raise DomainError(f"beta must be finite and nonzero, got {beta!r}")
    regime = Regime.FOCUSING if beta < 0 else Regime.DEFOCUSING
    return ModelParams(sigma, beta, regime)


@dataclass(frozen=True)
class CriticalConstants:
    """``omega_tilde`` always; the other fields exist only when focusing.

    omega_bar
        Frequency separating the stable and unstable focusing branches;
        maximizer of the mass and minimizer of the energy along the family.
    q_bar
        Charge of the standing wave at ``omega_bar``.
    lambda_threshold
        Infimum of the standing-wave energy, reached at ``omega_bar``.
    mu_bar
        Largest mass carried by a standing wave.
    """

    omega_tilde: float
    omega_bar: Optional[float] = None
    q_bar: Optional[float] = None
    lambda_threshold: Optional[float] = None
    mu_bar: Optional[float] = None


def critical_constants(p: ModelParams) -> CriticalConstants:
    if not p.focusing:
        return CriticalConstants(OMEGA_TILDE)
    s, b = p.sigma, p.beta
    base = -4.0 * math.pi * s * b
    return CriticalConstants(
        omega_tilde=OMEGA_TILDE,
        omega_bar=4.0 * math.exp(-2.0 * EULER_GAMMA + 1.0 / s),
        q_bar=base ** (-1.0 / (2.0 * s)),
        lambda_threshold=-s / (4.0 * math.pi * (s + 1.0) * base ** (1.0 / s)),
        mu_bar=math.exp(2.0 * EULER_GAMMA - 1.0 / s) / (16.0 * math.pi * base ** (1.0 / s)),
    )


def frequency_interval(p: ModelParams) -> tuple[float, float]:
    """Open interval of admissible standing-wave frequencies."""
    if p.focusing:
        return OMEGA_TILDE, math.inf
    return 0.0, OMEGA_TILDE
