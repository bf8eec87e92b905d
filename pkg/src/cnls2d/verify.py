"""Runtime self-checks: every closed form against an independent route.

:func:`run_checks` returns one :class:`Check` per invariant; the ``verify``
subcommand prints them and fails on any miss.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from . import solve, stability, waves
from .model import OMEGA_TILDE, ModelParams, critical_constants
from .specfun import k0_series, k0e_integral, macdonald_k0, radial_fourier_quadrature

# K0 reference values, checked against the integral cos(x t)/sqrt(1+t^2).
K0_REFERENCE = {1.0: 0.42102443824070834, 0.1: 2.4270690247020166}


@dataclass(frozen=True)
class Check:
    module: str
    name: str
    passed: bool
    detail: str


def sample_frequencies(p: ModelParams, n: int) -> np.ndarray:
    """``n`` log-spaced frequencies strictly inside the regime's interval."""
    if p.focusing:
        return np.geomspace(OMEGA_TILDE * 1.001, 60.0, n)
    return np.geomspace(1e-6, OMEGA_TILDE * 0.999, n)


def sample_charges(p: ModelParams, n: int) -> np.ndarray:
    """``n`` log-spaced charges with ``4 pi |beta| q^(2 sigma)`` in ``[0.05, 300]``.

    The range keeps ``omega(q)`` a normal float in both regimes.
    """
    lo, hi = ((x / (4 * math.pi * abs(p.beta))) ** (1 / (2 * p.sigma)) for x in (0.05, 300.0))
    return np.geomspace(lo, hi, n)


def _rel(a, b) -> float:
    a, b = np.asarray(a, float), np.asarray(b, float)
    return float(np.max(np.abs(a - b) / np.maximum(np.abs(b), 1e-300)))


def _check(module, name, err, tol) -> Check:
    return Check(module, name, bool(err <= tol), f"max error {err:.3g} (tol {tol:.0e})")


def _specfun(p: ModelParams) -> Iterator[Check]:
    x = np.geomspace(0.01, 20.0, 400)
    k = macdonald_k0(x)
    yield Check("specfun", "k0 strictly decreasing", bool(np.all(np.diff(k) < 0)), "400-point grid on [0.01, 20]")
    # log-convexity in x: second divided difference of log K0 on a uniform grid
    xu = np.linspace(0.01, 20.0, 400)
    yield Check("specfun", "k0 log-convex", bool(np.all(np.diff(np.log(macdonald_k0(xu)), 2) > 0)), "400-point grid")
    xc = np.linspace(1.5, 2.5, 101)
    yield _check("specfun", "k0 series/integral crossover", _rel(k0_series(xc), np.exp(-xc) * k0e_integral(xc)), 1e-9)
    err = max(abs(macdonald_k0(x0) / v - 1) for x0, v in K0_REFERENCE.items())
    yield _check("specfun", "k0 reference values", err, 1e-10)
    yield _check("specfun", "k0 large-x asymptote", abs(macdonald_k0(50.0) * math.exp(50.0) * math.sqrt(100 / math.pi) - 1), 1e-2)
    err = 0.0
    for lam in (0.5, 1.0, 3.0):
        r = radial_fourier_quadrature(lambda kk: (kk * kk + lam) ** -2.0, -3.0)
        err = max(err, abs(r.value - 1 / (2 * lam)))
    yield _check("specfun", "quadrature resolvent integral", err, 1e-9)


def _model(p: ModelParams) -> Iterator[Check]:
    cc = critical_constants(p)
    if not p.focusing:
        yield Check("model", "defocusing constants", cc.omega_bar is None and cc.omega_tilde > 0, "only omega_tilde populated")
        return
    yield _check("model", "omega_bar/omega_tilde = e^(1/sigma)", _rel(cc.omega_bar / cc.omega_tilde, math.exp(1 / p.sigma)), 1e-14)
    yield _check("model", "Lambda = E(q_bar)", _rel(waves.energy_of_charge(p, cc.q_bar), cc.lambda_threshold), 1e-12)
    yield _check("model", "mu_bar = M(omega_bar)", _rel(waves.mass_of_frequency(p, cc.omega_bar), cc.mu_bar), 1e-12)
    yield _check("model", "q(omega_bar) = q_bar", _rel(waves.charge_of_frequency(p, cc.omega_bar), cc.q_bar), 1e-12)


def _waves(p: ModelParams) -> Iterator[Check]:
    w = sample_frequencies(p, 100)
    q = waves.charge_of_frequency(p, w)
    yield _check("waves", "omega(q(omega)) = omega", _rel(waves.frequency_of_charge(p, q), w), 1e-12)
    qs = sample_charges(p, 100)
    yield _check("waves", "q(omega(q)) = q", _rel(waves.charge_of_frequency(p, waves.frequency_of_charge(p, qs)), qs), 1e-12)
    yield _check("waves", "E(q(omega)) = E(omega)", _rel(waves.energy_of_charge(p, q), waves.energy_of_frequency(p, w)), 1e-12)
    yield _check("waves", "M(q(omega)) = M(omega)", _rel(waves.mass_of_charge(p, q), waves.mass_of_frequency(p, w)), 1e-12)
    h = waves.mass_slope_indicator(p, w)
    if p.focusing:
        ob = critical_constants(p).omega_bar
        left = np.geomspace(OMEGA_TILDE * 1.001, ob * 0.999, 50)
        right = np.geomspace(ob * 1.001, 100.0, 50)
        ok = np.all(waves.mass_slope_indicator(p, left) > 0) and np.all(waves.mass_slope_indicator(p, right) < 0)
        yield Check("waves", "h > 0 below omega_bar, < 0 above", bool(ok), "50 points per side")
        grid = np.geomspace(OMEGA_TILDE * 1.0001, 50.0, 20001)
        e = waves.energy_of_frequency(p, grid)
        i = int(np.argmin(e))
        cc = critical_constants(p)
        inner = 0 < i < grid.size - 1
        yield Check(
            "waves", "E(omega) grid minimum at (omega_bar, Lambda)",
            bool(inner and abs(grid[i] / ob - 1) < 1e-3 and abs(e[i] / cc.lambda_threshold - 1) < 1e-6),
            f"argmin omega={grid[i]:.6g}, E={e[i]:.6g}",
        )
    else:
        m = waves.mass_of_frequency(p, w)
        yield Check("waves", "defocusing M strictly decreasing", bool(np.all(np.diff(m) < 0)), "100-point grid")
        yield Check("waves", "defocusing h < 0", bool(np.all(h < 0)), "100-point grid")
        e = waves.energy_of_frequency(p, np.geomspace(1e-300, OMEGA_TILDE * 0.999, 200))
        m_reach = waves.mass_of_frequency(p, np.array([1e-300, OMEGA_TILDE * (1 - 1e-12)]))
        yield Check("waves", "defocusing M spans (1e-6, 1e6)", bool(m_reach[1] < 1e-6 and m_reach[0] > 1e6), f"range {m_reach[1]:.3g} .. {m_reach[0]:.3g}")
        yield Check("waves", "defocusing E unbounded below", bool(e.min() < -10), f"min E={e.min():.4g}")
    lams = (0.5, 1.0, 2.0, 10.0)
    err = max(
        abs(waves.green_l2_pairing(a, b).l2_inner - waves.green_pairing_quadrature(a, b).value)
        for a in lams for b in lams
    )
    yield _check("waves", "Green pairings vs quadrature", err, 1e-8)
    w5 = sample_frequencies(p, 5)
    err = max(
        abs(waves.mass_of_frequency(p, x) - waves.charge_of_frequency(p, x) ** 2 * waves.green_pairing_quadrature(x, x).value)
        for x in w5
    )
    yield _check("waves", "M(omega) vs quadrature norm of q G_omega", err, 1e-8)


def _stability(p: ModelParams) -> Iterator[Check]:
    w = sample_frequencies(p, 100)
    a1, a2 = stability.couplings(p, w)
    yield _check("stability", "alpha1/alpha2 = 2 sigma + 1", _rel(a1 / a2, 2 * p.sigma + 1), 1e-14)
    w50 = sample_frequencies(p, 50)
    _, a2 = stability.couplings(p, w50)
    yield _check("stability", "bound state of H_alpha2 at -omega", _rel(-stability.point_interaction_eigenvalue(a2), w50), 1e-12)
    reports = [stability.linearization_spectrum(p, x) for x in w]
    if p.focusing:
        ob = critical_constants(p).omega_bar
        bad = 0
        for x, rep in zip(w, reports):
            v = stability.classify_stability(p, x)
            expect = stability.Verdict.STABLE if x < ob else stability.Verdict.UNSTABLE
            slope = stability.Verdict.STABLE if waves.mass_slope_indicator(p, x) > 0 else stability.Verdict.UNSTABLE
            bad += not (v is expect is slope and rep.negative_eigenvalue is not None)
        yield Check("stability", "verdict = sign(omega_bar - omega) = sign(h)", bad == 0, f"{bad} disagreements in 100")
    else:
        ok = all(rep.negative_eigenvalue is None and rep.isolated_eigenvalue > 0 for rep in reports)
        ok = ok and all(stability.classify_stability(p, x) is stability.Verdict.STABLE for x in w)
        yield Check("stability", "defocusing: no negative eigenvalue, all stable", ok, "100 frequencies")


def _solve(p: ModelParams) -> Iterator[Check]:
    if p.focusing:
        cc = critical_constants(p)
        bad = 0
        worst = 0.0
        for frac in (0.05, 0.25, 0.5, 0.9, 0.99):
            r = solve.invert_mass_focusing(p, frac * cc.mu_bar)
            worst = max(worst, abs(r.residual_low), abs(r.residual_high))
            bad += not (r.omega_low < cc.omega_bar < r.omega_high)
            bad += stability.classify_stability(p, r.omega_low) is not stability.Verdict.STABLE
            bad += stability.classify_stability(p, r.omega_high) is not stability.Verdict.UNSTABLE
        yield _check("solve", "two-branch mass inversion residuals", worst, 1e-10)
        yield Check("solve", "branches straddle omega_bar, stable/unstable", bad == 0, "5 masses")
        e = [solve.escape_sequence_energy(p, 1.0, 2**k) for k in range(13)]
        d = np.diff(e)
        start = int(np.argmax(d < 0))
        ok = bool(np.any(d < 0) and np.all(d[start:] < 0))
        yield Check("solve", "escape energy eventually decreasing", ok, f"E(u_4096)={e[-1]:.4g}")
        err = max(
            abs(solve.escape_sequence_charge(1.0, n) ** 2 * waves.green_l2_pairing(n, n).l2_inner - 1.0)
            for n in (1, 4, 16, 4096)
        )
        yield _check("solve", "escape sequence mass = mu", err, 1e-10)
    else:
        masses = (1e-3, 1e-2, 0.1, 1.0, 10.0)
        res = [solve.ground_state_frequency(p, mu) for mu in masses]
        worst = max(abs(r.residual) / (1 + abs(solve.ground_state_equation(p, r.mu, r.omega_mu)[1])) for r in res)
        yield _check("solve", "ground-state equation residual", worst, 1e-12)
        worst = max(abs(waves.mass_of_frequency(p, r.omega_mu) / r.mu - 1) for r in res)
        yield _check("solve", "M(omega_mu) = mu", worst, 1e-10)
        om = [r.omega_mu for r in res]
        yield Check("solve", "omega_mu decreasing in mu", bool(np.all(np.diff(om) < 0)), "5 masses")
        r = res[1]
        qs = np.linspace(r.charge / 5000, 5 * r.charge, 10000)
        gap = solve.defocusing_lower_bound_gap(p, r.mu, qs, ground=r)
        yield Check("solve", "lower-bound gap nonnegative", bool(gap.min() >= -1e-14), f"min gap {gap.min():.3g}")
        f = solve.lower_bound_function(p, r)
        yield _check("solve", "f(q(omega_mu)) = E(u_omega_mu)", abs(f(r.charge) - waves.energy_of_charge(p, r.charge)), 1e-12)


SUITES: dict[str, Callable[[ModelParams], Iterator[Check]]] = {
    "specfun": _specfun,
    "model": _model,
    "waves": _waves,
    "stability": _stability,
    "solve": _solve,
}


def run_checks(p: ModelParams) -> list[Check]:
    out: list[Check] = []
    for name, suite in SUITES.items():
        try:
            out.extend(suite(p))
        except Exception as exc:  # a crashing suite is a failed suite
            out.append(Check(name, "suite raised", False, f"{type(exc).__name__}: {exc}"))
    return out
