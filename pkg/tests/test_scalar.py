import cmath
import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bctk.errors import NearPole, PoleError
from bctk.quadrature import integrate_0_inf
from bctk.scalar import (
    EULER_GAMMA,
    cexpm1,
    complex_gamma,
    complex_zeta,
    cospi_real,
    sinpi,
    sinpi_real,
)

# mpmath's default 15 digits are not enough near the removable points of
# eta(s) / (1 - 2^(1-s)), so the oracle runs at 30 digits.
mpmath.mp.dps = 30


def mp_gamma(s: complex) -> complex:
    return complex(mpmath.gamma(mpmath.mpc(s.real, s.imag)))


def mp_zeta(s: complex) -> complex:
    return complex(mpmath.zeta(mpmath.mpc(s.real, s.imag)))


def rel_err(x: complex, y: complex) -> float:
    return abs(x - y) / max(abs(y), 1e-300)


def _grid(re_lo, re_hi, im_lo, im_hi, n=25, seed=0):
    rng = np.random.default_rng(seed)
    return [complex(a, b) for a, b in zip(rng.uniform(re_lo, re_hi, n * n), rng.uniform(im_lo, im_hi, n * n))]


class TestHelpers:
    @pytest.mark.parametrize("n", range(-6, 7))
    def test_exact_zeros(self, n):
        assert sinpi_real(float(n)) == 0.0
        assert cospi_real(n + 0.5) == 0.0
        assert sinpi(complex(n, 0)) == 0

    @given(st.floats(-50, 50))
    def test_match_math(self, x):
        assert abs(sinpi_real(x) - math.sin(math.pi * x)) < 1e-13
        assert abs(cospi_real(x) - math.cos(math.pi * x)) < 1e-13

    @given(st.complex_numbers(max_magnitude=1e-3))
    def test_expm1_small(self, z):
        ref = complex(mpmath.expm1(mpmath.mpc(z.real, z.imag)))
        assert abs(cexpm1(z) - ref) <= 1e-15 * max(abs(ref), 1e-300) + 1e-300

    def test_euler_gamma_constant(self):
        assert EULER_GAMMA == float(mpmath.euler)


class TestGamma:
    def test_classical_values(self):
        assert complex_gamma(1) == pytest.approx(1, rel=1e-14)
        assert complex_gamma(5) == pytest.approx(24, rel=1e-14)
        assert complex_gamma(-0.5) == pytest.approx(-2 * math.sqrt(math.pi), rel=1e-13)

    def test_half_against_quadrature(self):
        integral = integrate_0_inf(lambda t: np.exp(-t) / np.sqrt(t)).value
        assert abs(integral - math.sqrt(math.pi)) < 1e-12
        assert abs(complex_gamma(0.5) - integral) < 1e-12

    def test_relative_error_on_box(self):
        worst = max(rel_err(complex_gamma(s), mp_gamma(s)) for s in _grid(-6, 8, -12, 12))
        assert worst < 1e-10

    @pytest.mark.parametrize("n", [0, -1, -4])
    def test_poles(self, n):
        with pytest.raises(PoleError):
            complex_gamma(n)
        with pytest.raises(NearPole):
            complex_gamma(n + 1e-7)
        assert math.isfinite(abs(complex_gamma(n + 1e-5)))

    @settings(max_examples=200)
    @given(st.floats(-8, 8), st.floats(-10, 10))
    def test_recurrence(self, x, y):
        s = complex(x, y)
        if min(abs(s - round(x)), abs(s + 1 - round(x + 1))) < 1e-3:
            return
        lhs, rhs = complex_gamma(s + 1), s * complex_gamma(s)
        assert abs(lhs - rhs) <= 1e-12 * max(abs(lhs), 1e-300)


class TestZeta:
    def test_classical_values(self):
        assert abs(complex_zeta(2) - math.pi**2 / 6) < 1e-14
        assert abs(complex_zeta(-1) + 1 / 12) < 1e-14
        assert abs(complex_zeta(0) + 0.5) < 1e-14
        assert complex_zeta(-2) == 0
        assert complex_zeta(-10) == 0

    def test_zeta2_against_euler_maclaurin_oracle(self):
        n = 1000
        head = math.fsum(1 / k**2 for k in range(1, n))
        tail = 1 / n + 1 / (2 * n**2) + 1 / (6 * n**3) - 1 / (30 * n**5)
        assert abs(complex_zeta(2) - (head + tail)) < 1e-15

    def test_minus_one_from_functional_equation(self):
        rhs = 2 * (2 * math.pi) ** -2 * math.sin(-math.pi / 2) * complex_gamma(2) * complex_zeta(2)
        assert abs(complex_zeta(-1) - rhs) < 1e-15

    def test_zero_from_eta(self):
        # eta(0) = 1/2 by Abel summation, zeta(0) = eta(0) / (1 - 2)
        assert abs(complex_zeta(0) - 0.5 / (1 - 2)) < 1e-14

    @pytest.mark.parametrize(
        "box",
        [(0.5, 8, -20, 20), (-6, 0.5, -12, 12), (0.9, 1.1, -3, 3), (-0.1, 0.1, -0.1, 0.1)],
        ids=["right", "left", "near-pole-strip", "near-origin"],
    )
    def test_relative_error_on_box(self, box):
        worst = max(rel_err(complex_zeta(s), mp_zeta(s)) for s in _grid(*box, n=15) if abs(s - 1) > 1e-5)
        assert worst < 1e-9

    @pytest.mark.parametrize("m", [1, -1, 3])
    def test_removable_points_of_eta_quotient(self, m):
        s = 1 + 2j * math.pi * m / math.log(2)
        assert rel_err(complex_zeta(s), mp_zeta(s)) < 1e-12

    def test_pole(self):
        with pytest.raises(PoleError):
            complex_zeta(1)
        with pytest.raises(NearPole):
            complex_zeta(1 + 1e-7j)

    @given(st.floats(-6, 6), st.floats(-10, 10))
    def test_conjugate_symmetry(self, x, y):
        s = complex(x, y)
        if abs(s - 1) < 1e-3:
            return
        assert abs(complex_zeta(s.conjugate()) - complex_zeta(s).conjugate()) <= 1e-13 * max(1, abs(complex_zeta(s)))

    def test_trivial_zeros_small(self):
        for n in range(1, 11):
            assert abs(complex_zeta(-2 * n)) < 1e-10
        assert abs(complex_zeta(-3) - 1 / 120) < 1e-15
        assert cmath.isclose(complex_zeta(0.5 + 14.134725141734693j), 0, abs_tol=1e-12)
