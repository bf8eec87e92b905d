"""Root solves along the standing-wave family.

* the defocusing ground-state frequency at prescribed mass,
* the two focusing frequencies sharing a prescribed mass,
* the fixed-mass escape sequence whose energy is unbounded below.
"""
from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import BracketError, ConvergenceError, DomainError
from .model import OMEGA_TILDE, ModelParams, critical_constants
from .specfun import EULER_GAMMA
from .waves import (
    FOUR_PI,
    TWO_PI,
    _check_charge,
    charge_of_frequency,
    energy_of_frequency,
    log_excess,
    mass_of_frequency,
    singular_state_energy,
)

EPS = sys.float_info.epsilon


def bracketed_root(
    f: Callable[[float], float],
    a: float,
    b: float,
    xtol: float = 1e-13,
    rtol: float = 4 * EPS,
    maxiter: int = 400,
) -> float:
    """Root of ``f`` in ``[a, b]`` by false-position steps guarded by bisection.

    A bisection replaces the secant step whenever the previous step failed
    to halve the bracket, so the bracket at least halves every two steps.
    Iteration stops when the bracket is below ``min(xtol, rtol*|x|)`` or no
    float lies strictly inside it. An absolute floor of ``xtol*eps`` keeps a
    root at zero reachable.
    """
    lo, hi = (a, b) if a < b else (b, a)
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if np.sign(flo) == np.sign(fhi):
        raise BracketError(f"no sign change on [{lo!r}, {hi!r}]: f={flo!r}, {fhi!r}")
    bisect = False
    width = hi - lo
    floor = xtol * EPS
    for _ in range(maxiter):
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi or hi - lo <= max(min(xtol, rtol * abs(mid)), floor):
            return lo if abs(flo) <= abs(fhi) else hi
        x = mid
        if not bisect:
            secant = hi - fhi * (hi - lo) / (fhi - flo)
            if lo < secant < hi:
                x = secant
        fx = f(x)
        if fx == 0:
            return x
        if np.sign(fx) == np.sign(flo):
            lo, flo = x, fx
        else:
            hi, fhi = x, fx
        bisect = (hi - lo) > 0.5 * width
        width = hi - lo
    raise ConvergenceError(f"no convergence in {maxiter} iterations on [{lo!r}, {hi!r}]")


def _require(p: ModelParams, focusing: bool):
    if p.focusing is not focusing:
        want = "focusing (beta < 0)" if focusing else "defocusing (beta > 0)"
        raise DomainError(f"operation needs the {want} regime, got beta={p.beta}")


def _check_mass(mu) -> float:
    mu = float(mu)
    if not (mu > 0 and math.isfinite(mu)):
        raise DomainError(f"mass must be finite and > 0, got {mu!r}")
    return mu


@dataclass(frozen=True)
class GroundStateResult:
    mu: float
    omega_mu: float
    energy: float
    charge: float
    #: ``lhs - rhs`` of the frequency equation at ``omega_mu``
    residual: float


def ground_state_equation(p: ModelParams, mu: float, omega: float) -> tuple[float, float]:
    """Both sides of ``log(2/sqrt(omega)) - gamma = 2 pi beta (4 pi omega mu)^sigma``."""
    lhs = math.log(2.0 / math.sqrt(omega)) - EULER_GAMMA
    rhs = TWO_PI * p.beta * (FOUR_PI * omega * mu) ** p.sigma
    return lhs, rhs


def ground_state_frequency(p: ModelParams, mu: float) -> GroundStateResult:
    """Frequency of the unique defocusing ground state of mass ``mu``.

    Solves the ground-state frequency equation, equivalent to
    ``M(omega) = mu``, on ``(0, omega_tilde)``. The mass decreases strictly
    on that interval, so the root is unique.

    Raises
    ------
    DomainError
        In the focusing regime or for ``mu <= 0``.
    BracketError
        If no bracket is found before the lower end underflows.
    """
    _require(p, focusing=False)
    mu = _check_mass(mu)

    def g(omega):
        lhs, rhs = ground_state_equation(p, mu, omega)
        return lhs - rhs

    hi = OMEGA_TILDE
    if not g(hi) < 0:
        raise BracketError(f"mu={mu!r} too small to separate the root from omega_tilde")
    lo = 0.5 * hi
    with np.errstate(over="raise"):
        try:
            while g(lo) <= 0:
                lo *= 0.5
                if lo < 1e-300:
                    raise BracketError(f"no bracket for mu={mu!r} above omega=1e-300")
        except (OverflowError, FloatingPointError) as exc:
            raise BracketError(f"frequency equation overflowed for mu={mu!r}") from exc
    omega = bracketed_root(g, lo, hi)
    lhs, rhs = ground_state_equation(p, mu, omega)
    return GroundStateResult(
        mu=mu,
        omega_mu=omega,
        energy=energy_of_frequency(p, omega),
        charge=charge_of_frequency(p, omega),
        residual=lhs - rhs,
    )


@dataclass(frozen=True)
class MassInversionResult:
    mu: float
    omega_low: float
    omega_high: float
    #: relative residuals ``M(omega)/mu - 1``
    residual_low: float
    residual_high: float


def invert_mass_focusing(p: ModelParams, mu: float) -> MassInversionResult:
    """The two focusing frequencies whose standing waves have mass ``mu``.

    One root lies on each side of ``omega_bar``. The upper bracket starts at
    ``omega_bar`` and its right end doubles until the mass falls below ``mu``.
    """
    _require(p, focusing=True)
    mu = _check_mass(mu)
    cc = critical_constants(p)
    if mu >= cc.mu_bar:
        if mu == cc.mu_bar:
            raise DomainError(f"mu equals mu_bar={cc.mu_bar!r}: degenerate double root at omega_bar={cc.omega_bar!r}")
        raise DomainError(f"mu={mu!r} exceeds the largest standing-wave mass mu_bar={cc.mu_bar!r}")

    def r(omega):
        # M(omega)/mu - 1, continued by -1 at omega_tilde where the charge vanishes
        L = max(float(log_excess(omega)), 0.0)
        return (L / (-TWO_PI * p.beta)) ** (1.0 / p.sigma) / (FOUR_PI * omega) / mu - 1.0

    low = bracketed_root(r, OMEGA_TILDE, cc.omega_bar)
    right = 2.0 * cc.omega_bar
    while r(right) >= 0:
        right *= 2.0
        if not math.isfinite(right):
            raise BracketError(f"upper branch bracket diverged for mu={mu!r}")
    high = bracketed_root(r, cc.omega_bar, right)
    return MassInversionResult(
        mu=mu,
        omega_low=low,
        omega_high=high,
        residual_low=mass_of_frequency(p, low) / mu - 1.0,
        residual_high=mass_of_frequency(p, high) / mu - 1.0,
    )


def _check_index(n) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise DomainError(f"sequence index must be an integer, got {n!r}")
    if n < 1:
        raise DomainError(f"sequence index must be >= 1, got {n!r}")
    return int(n)


def _escape_energy(p: ModelParams, mu: float, n):
    s, b = p.sigma, p.beta
    n = np.asarray(n, dtype=float)
    value = -np.sqrt(n) * mu + (
        b * (FOUR_PI * mu * n) ** s / (s + 1.0) + (np.log(0.5 * np.sqrt(n)) + EULER_GAMMA) / TWO_PI
    ) * np.sqrt(math.pi * mu * n)
    return float(value) if value.ndim == 0 else value


def escape_sequence_energy(p: ModelParams, mu: float, n: int) -> float:
    """Closed-form energy attached to the ``n``-th member of the escape sequence.

    ``-sqrt(n) mu + (beta (4 pi mu n)^sigma / (sigma+1)
    + (log(sqrt(n)/2) + gamma) / (2 pi)) sqrt(pi mu n)``; it tends to
    ``-inf`` for ``beta < 0``. :func:`escape_sequence_functional_energy`
    evaluates the energy functional on the same state directly.
    """
    _require(p, focusing=True)
    mu = _check_mass(mu)
    return _escape_energy(p, mu, _check_index(n))


def escape_sequence_charge(mu: float, n: int) -> float:
    """Charge ``2 sqrt(pi mu n)`` of ``u_n = 2 sqrt(pi mu n) G_1(sqrt(n) x) = q G_n(x)``."""
    return 2.0 * math.sqrt(math.pi * _check_mass(mu) * _check_index(n))


def escape_sequence_functional_energy(p: ModelParams, mu: float, n: int) -> float:
    """Energy functional evaluated on ``u_n`` with decomposition parameter ``n``."""
    _require(p, focusing=True)
    n = _check_index(n)
    return singular_state_energy(p, escape_sequence_charge(mu, n), float(n))


def defocusing_lower_bound_gap(p: ModelParams, mu: float, q, ground: GroundStateResult | None = None):
    """``f(q) - f(q(omega_mu))`` for the fixed-mass energy lower bound ``f``.

    ``f(q) = -omega_mu mu + (beta q^(2 sigma)/(sigma+1)
    + (log(sqrt(omega_mu)/2) + gamma)/(2 pi)) q^2`` is minimized by the
    ground-state charge, so the gap is nonnegative. Pass ``ground`` to reuse
    an existing solve.
    """
    _require(p, focusing=False)
    mu = _check_mass(mu)
    q = _check_charge(q)
    if ground is None:
        ground = ground_state_frequency(p, mu)
    f = lower_bound_function(p, ground)
    out = f(q) - f(ground.charge)
    return float(out) if np.ndim(out) == 0 else out


def lower_bound_function(p: ModelParams, ground: GroundStateResult) -> Callable:
    """The function ``f`` bounding the energy from below on the mass-``mu`` sphere."""
    w, mu, s = ground.omega_mu, ground.mu, p.sigma
    linear = float(log_excess(w)) / TWO_PI

    def f(q):
        q = np.asarray(q, dtype=float)
        return -w * mu + (p.beta * q ** (2.0 * s) / (s + 1.0) + linear) * q * q

    return f
