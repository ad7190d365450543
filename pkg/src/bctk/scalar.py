"""Complex-scalar gamma and zeta backends for the bicomplex lifts."""

from __future__ import annotations

import cmath
import math

from .errors import NearPole, PoleError

TAU_INT = 1e-9
POLE_GUARD = 1e-6
EULER_GAMMA = 0.5772156649015329

# Lanczos approximation, g = 7, n = 9
LANCZOS_G = 7
LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_2PI = math.sqrt(2 * math.pi)
_LN2 = math.log(2.0)
_LNPI = math.log(math.pi)

# B_2, B_4, ..., B_20
_BERNOULLI_EVEN = (
    1 / 6,
    -1 / 30,
    1 / 42,
    -1 / 30,
    5 / 66,
    -691 / 2730,
    7 / 6,
    -3617 / 510,
    43867 / 798,
    -174611 / 330,
)


def sinpi_real(x: float) -> float:
    """``sin(pi x)`` with exact zeros at the integers."""
    r = math.fmod(x, 2.0)
    if r < 0:
        r += 2.0
    if r <= 0.25:
        return math.sin(math.pi * r)
    if r <= 0.75:
        return math.cos(math.pi * (r - 0.5))
    if r <= 1.25:
        return math.sin(math.pi * (1.0 - r))
    if r <= 1.75:
        return -math.cos(math.pi * (r - 1.5))
    return -math.sin(math.pi * (2.0 - r))


def cospi_real(x: float) -> float:
    """``cos(pi x)`` with exact zeros at the half integers."""
    r = math.fmod(abs(x), 2.0)
    if r <= 0.25:
        return math.cos(math.pi * r)
    if r <= 0.75:
        return -math.sin(math.pi * (r - 0.5))
    if r <= 1.25:
        return -math.cos(math.pi * (r - 1.0))
    if r <= 1.75:
        return math.sin(math.pi * (r - 1.5))
    return math.cos(math.pi * (2.0 - r))


def sinpi(z: complex) -> complex:
    """``sin(pi z)`` for complex ``z``."""
    z = complex(z)
    y = math.pi * z.imag
    return complex(sinpi_real(z.real) * math.cosh(y), cospi_real(z.real) * math.sinh(y))


def cexpm1(z: complex) -> complex:
    """``exp(z) - 1`` without cancellation for small ``z``."""
    x, y = z.real, z.imag
    s = math.sin(y / 2)
    return complex(math.expm1(x) * math.cos(y) - 2 * s * s, math.exp(x) * math.sin(y))


def _nearest_nonpositive_integer(s: complex) -> int | None:
    n = round(s.real)
    return n if n <= 0 else None


def _pole_guard(s: complex, pole: int, what: str) -> None:
    dist = abs(s - pole)
    if dist <= TAU_INT:
        raise PoleError(f"{what} has a pole at {pole}")
    if dist < POLE_GUARD:
        raise NearPole(f"{what} evaluated {dist:.3g} away from its pole at {pole}")


def _lanczos(s: complex) -> complex:
    z = s - 1
    x = LANCZOS_COEFFS[0]
    for i, c in enumerate(LANCZOS_COEFFS[1:], start=1):
        x += c / (z + i)
    t = z + LANCZOS_G + 0.5
    return _SQRT_2PI * cmath.exp((z + 0.5) * cmath.log(t) - t) * x


def complex_gamma(s: complex) -> complex:
    """Gamma by Lanczos (g=7, n=9) with reflection for ``Re s < 1/2``."""
    s = complex(s)
    n = _nearest_nonpositive_integer(s)
    if n is not None:
        _pole_guard(s, n, "gamma")
    if s.real < 0.5:
        return math.pi / (sinpi(s) * _lanczos(1 - s))
    return _lanczos(s)


def _eta_cvz(s: complex) -> complex:
    """Dirichlet eta by Cohen-Rodriguez Villegas-Zagier acceleration."""
    n = min(30 + math.ceil(0.9 * abs(s.imag)), 380)
    d = (3 + math.sqrt(8)) ** n
    d = (d + 1 / d) / 2
    b = -1.0
    c = -d
    total = 0j
    for k in range(n):
        c = b - c
        total += c * cmath.exp(-s * math.log(k + 1))
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1))
    return total / d


def _zeta_euler_maclaurin(s: complex) -> complex:
    N = 20 + math.ceil(abs(s))
    head = sum(cmath.exp(-s * math.log(n)) for n in range(1, N))
    N_pow = cmath.exp(-s * math.log(N))
    total = head + N * N_pow / (s - 1) + N_pow / 2
    rising = s  # s (s+1) ... (s + 2k - 2)
    fact = 2.0  # (2k)!
    npow = N_pow / N  # N^{-s-2k+1}
    for k, b2k in enumerate(_BERNOULLI_EVEN, start=1):
        total += b2k / fact * rising * npow
        rising *= (s + 2 * k - 1) * (s + 2 * k)
        fact *= (2 * k + 1) * (2 * k + 2)
        npow /= N * N
    return total


def _zeta_right(s: complex) -> complex:
    denom = -cexpm1((1 - s) * _LN2)  # 1 - 2^(1-s)
    if abs(denom) < 1e-3 and abs(s - 1) > 0.5:
        # removable 0/0 of eta/denominator on Re s = 1
        return _zeta_euler_maclaurin(s)
    return _eta_cvz(s) / denom


def complex_zeta(s: complex) -> complex:
    """Riemann zeta; eta series for ``Re s >= 1/2``, functional equation below."""
    s = complex(s)
    _pole_guard(s, 1, "zeta")
    if s.real >= 0.5 or abs(s) < 0.1:
        return _zeta_right(s)
    factor = cmath.exp(s * _LN2 + (s - 1) * _LNPI)
    return factor * sinpi(s / 2) * complex_gamma(1 - s) * _zeta_right(1 - s)
