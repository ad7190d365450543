import math

import numpy as np
import pytest

from bctk.errors import QuadratureFailure
from bctk.quadrature import QuadConfig, integrate_0_inf, tanh_sinh


def test_polynomial():
    r = tanh_sinh(lambda t: t**3 - 2 * t, 0.0, 2.0)
    assert abs(r.value - 0.0) < 1e-14
    assert r.error < 1e-12


def test_endpoint_singularity():
    r = tanh_sinh(lambda t: 1 / np.sqrt(t), 0.0, 1.0)
    assert abs(r.value - 2) < 1e-12


def test_complex_integrand():
    r = tanh_sinh(lambda t: np.exp(1j * t), 0.0, math.pi)
    assert abs(r.value - 2j) < 1e-13


def test_semi_infinite():
    assert abs(integrate_0_inf(lambda t: np.exp(-t)).value - 1) < 1e-13
    assert abs(integrate_0_inf(lambda t: t**4 * np.exp(-t), decay_from=4).value - 24) < 1e-11
    bose = integrate_0_inf(lambda t: t / np.expm1(t)).value
    assert abs(bose - math.pi**2 / 6) < 1e-12


def test_budget_exhaustion():
    cfg = QuadConfig(tol=1e-15, max_levels=3, min_levels=1)
    with pytest.raises(QuadratureFailure):
        tanh_sinh(lambda t: np.sin(40 * t), 0.0, 10.0, tol=1e-15, cfg=cfg)


def test_non_finite_values_fail():
    with np.errstate(over="ignore", invalid="ignore"), pytest.raises(QuadratureFailure):
        integrate_0_inf(lambda t: np.exp(t))
