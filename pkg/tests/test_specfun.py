import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate, special

from cnls2d import ConvergenceError, DomainError, green_function, macdonald_k0, radial_fourier_quadrature
from cnls2d.specfun import (
    EULER_GAMMA,
    GAUSS_WEIGHTS,
    KRONROD_NODES,
    KRONROD_WEIGHTS,
    QuadratureResult,
    k0_series,
    k0e_integral,
)


@pytest.fixture(autouse=True)
def _quiet_quadpack():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        yield


def k0_cosine_integral(x):
    # K0(x) = int_0^inf cos(x t) / sqrt(t^2 + 1) dt, Fourier-weighted QUADPACK
    value, _ = integrate.quad(lambda t: 1 / math.sqrt(t * t + 1), 0, np.inf, weight="cos", wvar=x, epsabs=1e-14)
    return value


@pytest.mark.parametrize("x, expected", [(1.0, 0.42102443824070834), (0.1, 2.4270690247020166)])
def test_k0_reference_values(x, expected):
    assert k0_cosine_integral(x) == pytest.approx(expected, rel=1e-12)
    assert macdonald_k0(x) == pytest.approx(expected, rel=1e-10)


@pytest.mark.parametrize("x", [0.3, 2.0, 2.5, 7.0])
def test_k0_matches_cosine_integral(x):
    assert macdonald_k0(x) == pytest.approx(k0_cosine_integral(x), rel=1e-10)


def test_k0_against_scipy_on_wide_grid():
    x = np.geomspace(1e-4, 700, 3000)
    np.testing.assert_allclose(macdonald_k0(x), special.k0(x), rtol=1e-13)


def test_k0_large_argument_asymptote():
    x = 50.0
    assert macdonald_k0(x) * math.exp(x) * math.sqrt(2 * x / math.pi) == pytest.approx(1.0, abs=1e-2)


def test_k0_underflows_to_zero():
    assert macdonald_k0(800.0) == 0.0


@pytest.mark.parametrize("x", [0.0, -1.0, float("nan")])
def test_k0_domain(x):
    with pytest.raises(DomainError):
        macdonald_k0(x)


def test_k0_decreasing_and_log_convex():
    x = np.linspace(0.01, 20, 2000)
    k = macdonald_k0(x)
    assert np.all(np.diff(k) < 0)
    assert np.all(np.diff(np.log(k), 2) > 0)


def test_branches_agree_in_crossover_window():
    x = np.linspace(1.5, 2.5, 201)
    np.testing.assert_allclose(k0_series(x), np.exp(-x) * k0e_integral(x), rtol=1e-9)


def test_euler_gamma_digits():
    assert EULER_GAMMA == np.euler_gamma


def test_green_function_values():
    assert green_function(1.0, 1.0) == pytest.approx(0.42102443824070834 / (2 * math.pi), rel=1e-12)
    assert green_function(4.0, 0.5) == green_function(1.0, 1.0)
    r = np.geomspace(1, 200, 50)
    g = green_function(1.0, r)
    assert np.all(np.diff(g) < 0) and g[-1] < 1e-80


@pytest.mark.parametrize("lam, r", [(0.0, 1.0), (1.0, 0.0), (-1.0, 1.0)])
def test_green_function_domain(lam, r):
    with pytest.raises(DomainError):
        green_function(lam, r)


def test_kronrod_rules_exact_for_polynomials():
    for d in range(0, 23):
        exact = 2 / (d + 1) if d % 2 == 0 else 0.0
        assert KRONROD_NODES**d @ KRONROD_WEIGHTS == pytest.approx(exact, abs=1e-15)
    for d in range(0, 14):
        exact = 2 / (d + 1) if d % 2 == 0 else 0.0
        assert KRONROD_NODES**d @ GAUSS_WEIGHTS == pytest.approx(exact, abs=1e-15)
    # Gauss rule is not exact one degree higher
    assert abs(KRONROD_NODES**14 @ GAUSS_WEIGHTS - 2 / 15) > 1e-6


def test_quadrature_elementary():
    r = radial_fourier_quadrature(lambda k: (k * k + 1) ** -2.0, -3)
    assert isinstance(r, QuadratureResult)
    assert r.value == pytest.approx(0.5, abs=1e-9)
    assert 0 <= r.abs_error_estimate <= 1e-9
    assert r.evaluations > 0


def test_quadrature_partial_fractions():
    # 1/((k^2+1)(k^2+2)) = 1/(k^2+1) - 1/(k^2+2); with the k weight the antiderivative is log(...)/2
    r = radial_fourier_quadrature(lambda k: 1 / ((k * k + 1) * (k * k + 2)), -3)
    assert r.value == pytest.approx(0.5 * math.log(2), abs=1e-9)


@pytest.mark.parametrize("p", [-1.0, -0.5])
def test_quadrature_rejects_divergent_tail(p):
    with pytest.raises(ConvergenceError):
        radial_fourier_quadrature(lambda k: 1 / (k * k + 1), p)


def test_quadrature_budget_exhaustion():
    with pytest.raises(ConvergenceError):
        radial_fourier_quadrature(lambda k: (k * k + 1) ** -2.0, -3, tol=1e-9, max_evaluations=50)


def test_quadrature_against_scipy_for_oscillatory_weight():
    f = lambda k: np.cos(k) ** 2 / (k * k + 1) ** 2
    ref, _ = integrate.quad(lambda k: f(k) * k, 0, np.inf, limit=500, epsabs=1e-13)
    r = radial_fourier_quadrature(f, -3)
    assert r.value == pytest.approx(ref, abs=1e-9)


@settings(max_examples=40, deadline=None)
@given(st.floats(min_value=0.05, max_value=50.0))
def test_quadrature_resolvent_identity(lam):
    r = radial_fourier_quadrature(lambda k: (k * k + lam) ** -2.0, -3)
    assert abs(r.value - 1 / (2 * lam)) <= 1e-9


@settings(max_examples=60, deadline=None)
@given(st.floats(min_value=1e-3, max_value=600.0))
def test_k0_property_matches_scipy(x):
    assert macdonald_k0(x) == pytest.approx(special.k0(x), rel=1e-12)


def test_quadrature_result_invariants():
    with pytest.raises(ValueError):
        QuadratureResult(1.0, -1.0, 1)
    with pytest.raises(ValueError):
        QuadratureResult(1.0, 0.0, 0)
