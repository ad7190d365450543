"""Bicomplex zeta and gamma functions and their functional equations.

Every function is lifted from the complex backend through the idempotent
components, ``F(z1 e1 + z2 e2) = F(z1) e1 + F(z2) e2``.  Series, products and
integrals are evaluated directly so they can be checked against the lift.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bicomplex import (
    Bicomplex,
    as_bicomplex,
    i_R,
    power,
    riesz_subnorm,
    s_R,
)
from .errors import DomainError, OnSingularSet, OutOfDomain, PoleError
from .quadrature import QuadConfig, integrate_0_inf
from .scalar import EULER_GAMMA, TAU_INT, complex_gamma, complex_zeta
from .trig import sin_pi_b

TWO_PI = 2 * math.pi


def _is_integer(z: complex, tol: float = TAU_INT) -> bool:
    return abs(z.imag) <= tol and abs(z.real - round(z.real)) <= tol


def _is_nonpositive_integer(z: complex, tol: float = TAU_INT) -> bool:
    return _is_integer(z, tol) and round(z.real) <= 0


@dataclass(frozen=True)
class DomainFlags:
    in_U: bool
    in_Omega: bool
    in_Omega_minus: bool
    in_one_plus_Bstar: bool


def domain_flags(w: Bicomplex, tol: float = TAU_INT) -> DomainFlags:
    comps = (w.z1, w.z2)
    return DomainFlags(
        in_U=i_R(w) > 1,
        in_Omega=not any(_is_integer(z, tol) for z in comps),
        in_Omega_minus=not any(_is_nonpositive_integer(z, tol) for z in comps),
        in_one_plus_Bstar=all(abs(z - 1) > tol for z in comps),
    )


# ---------------------------------------------------------------------------
# zeta


@dataclass(frozen=True)
class SeriesReport:
    value: Bicomplex
    terms_used: int
    subnorm_bound: float
    residual_estimate: float


def _require_U(w: Bicomplex, what: str) -> None:
    if not i_R(w) > 1:
        raise OutOfDomain(f"{what} needs i_R(w) > 1, got {i_R(w)}")


def zeta_b_series(w, max_terms: int = 100_000) -> SeriesReport:
    """Partial sum ``sum_{n <= N} n^(-w)`` on ``U = {i_R > 1}``.

    Since ``Log n = ln n``, each term is ``exp(-w ln n)``, evaluated on both
    idempotent components at once.  ``||n^(-w)||_j = n^(-i_R(w))`` gives the
    bound ``zeta(i_R)`` and the integral tail estimate.
    """
    w = as_bicomplex(w)
    _require_U(w, "the zeta series")
    if max_terms < 1:
        raise ValueError("max_terms must be positive")
    log_n = np.log(np.arange(1, max_terms + 1, dtype=float))
    z1 = complex(np.exp(-w.z1 * log_n).sum())
    z2 = complex(np.exp(-w.z2 * log_n).sum())
    sigma = i_R(w)
    bound = complex_zeta(sigma).real
    tail = max_terms ** (1 - sigma) / (sigma - 1)
    return SeriesReport(Bicomplex(z1, z2), max_terms, bound, tail)


def _check_zeta_pole(w: Bicomplex) -> None:
    for z in (w.z1, w.z2):
        if abs(z - 1) <= TAU_INT:
            raise OnSingularSet(f"an idempotent component of the argument is 1 ({z})")


def zeta_b(w) -> Bicomplex:
    """Continued bicomplex zeta on ``1 + B*``."""
    w = as_bicomplex(w)
    _check_zeta_pole(w)
    return Bicomplex(complex_zeta(w.z1), complex_zeta(w.z2))


def primes_upto(n: int) -> np.ndarray:
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.flatnonzero(sieve)


def euler_product(w, prime_bound: int) -> Bicomplex:
    """``prod_{p <= bound} (1 - p^(-w))^(-1)`` over primes, on ``U``."""
    w = as_bicomplex(w)
    _require_U(w, "the Euler product")
    log_p = np.log(primes_upto(prime_bound).astype(float))
    comps = [complex(np.prod(1.0 / (1.0 - np.exp(-z * log_p)))) for z in (w.z1, w.z2)]
    return Bicomplex(*comps)


def is_trivial_zero(w, tol: float = TAU_INT) -> bool:
    """``w = -2h`` with ``h`` a hyperbolic integer ``>= 1``."""
    w = as_bicomplex(w)
    for z in (w.z1, w.z2):
        if not _is_integer(z, tol):
            return False
        n = round(z.real)
        if n >= 0 or n % 2:
            return False
    return True


# ---------------------------------------------------------------------------
# gamma


def gamma_b(w) -> Bicomplex:
    """Continued bicomplex gamma on ``Omega_-``."""
    w = as_bicomplex(w)
    for z in (w.z1, w.z2):
        if _is_nonpositive_integer(z):
            raise PoleError(f"gamma has a pole at the idempotent component {z}")
    return Bicomplex(complex_gamma(w.z1), complex_gamma(w.z2))


def _component_integral(integrand_for, w: Bicomplex, cfg: QuadConfig) -> tuple[Bicomplex, float]:
    r1 = integrate_0_inf(integrand_for(w.z1), cfg, decay_from=max(w.z1.real, 1.0))
    r2 = integrate_0_inf(integrand_for(w.z2), cfg, decay_from=max(w.z2.real, 1.0))
    return Bicomplex(r1.value, r2.value), max(r1.error, r2.error)


def _gamma_integrand(z: complex):
    return lambda t: np.exp((z - 1) * np.log(t) - t)


def gamma_b_integral(w, quad_config: QuadConfig = QuadConfig()) -> Bicomplex:
    """``int_0^inf exp(-t) t^(w-1) dt`` for ``Re_j(w) >> 0``."""
    w = as_bicomplex(w)
    if not i_R(w) > 0:
        raise OutOfDomain(f"the gamma integral needs i_R(w) > 0, got {i_R(w)}")
    value, _ = _component_integral(_gamma_integrand, w, quad_config)
    return value


def gamma_majorant(w, quad_config: QuadConfig = QuadConfig()) -> float:
    """``int_0^inf ||exp(-t) t^(w-1)||_j dt``, an upper bound for ``||Gamma(w)||_j``.

    Uses ``t^(i_R - 1)`` on ``(0, 1]`` and ``t^(s_R - 1)`` on ``[1, inf)``.
    """
    w = as_bicomplex(w)
    lo, hi = i_R(w), s_R(w)
    if not lo > 0:
        raise OutOfDomain(f"the gamma integral needs i_R(w) > 0, got {lo}")

    def f(t):
        return np.exp(np.where(t <= 1, lo - 1, hi - 1) * np.log(t) - t)

    return integrate_0_inf(f, quad_config, decay_from=max(hi, 1.0)).value.real


def _log1p_minus_x(u: np.ndarray) -> np.ndarray:
    """``log(1 + u) - u`` for complex ``u``; series for small ``|u|``."""
    out = np.empty_like(u)
    small = np.abs(u) < 1e-2
    us = u[small]
    acc = np.zeros_like(us)
    for k in range(9, 1, -1):
        acc = acc * us + (-1) ** (k + 1) / k
    out[small] = acc * us * us
    ub = u[~small]
    out[~small] = np.log1p(ub) - ub
    return out


def weierstrass_gamma(w, n_terms: int = 1_000_000) -> Bicomplex:
    """Truncated Weierstrass product ``exp(-g w) / (w prod_{n<=N} (1 + w/n) exp(-w/n))``."""
    w = as_bicomplex(w)
    for z in (w.z1, w.z2):
        if _is_nonpositive_integer(z):
            raise OutOfDomain(f"the Weierstrass product vanishes at the component {z}")
    n = np.arange(1, n_terms + 1, dtype=float)
    comps = []
    for z in (w.z1, w.z2):
        log_prod = complex(_log1p_minus_x(z / n.astype(complex)).sum())
        comps.append(np.exp(-EULER_GAMMA * z - log_prod) / z)
    return Bicomplex(complex(comps[0]), complex(comps[1]))


def _bose_integrand(z: complex):
    return lambda t: np.exp((z - 1) * np.log(t)) / np.expm1(t)


def mellin_check(w, quad_config: QuadConfig = QuadConfig()) -> tuple[Bicomplex, Bicomplex, float]:
    """``zeta(w) Gamma(w)`` against ``int_0^inf t^(w-1) / (e^t - 1) dt``."""
    w = as_bicomplex(w)
    _require_U(w, "the Mellin integral")
    lhs = zeta_b(w) * gamma_b(w)
    rhs, _ = _component_integral(_bose_integrand, w, quad_config)
    return lhs, rhs, riesz_subnorm(lhs - rhs)


# ---------------------------------------------------------------------------
# functional equations


def gamma_recurrence_residual(w) -> float:
    """``||Gamma(1 + w) - w Gamma(w)||_j`` on ``Omega_-``."""
    w = as_bicomplex(w)
    if not domain_flags(w).in_Omega_minus:
        raise DomainError("recurrence needs w in Omega_-")
    return riesz_subnorm(gamma_b(1 + w) - w * gamma_b(w))


def gamma_reflection_residual(w) -> float:
    """``||Gamma(1 - w) Gamma(w) sin(pi w) - pi||_j`` on ``Omega``."""
    w = as_bicomplex(w)
    if not domain_flags(w).in_Omega:
        raise DomainError("reflection needs w in Omega")
    return riesz_subnorm(gamma_b(1 - w) * gamma_b(w) * sin_pi_b(w) - math.pi)


def zeta_functional_sides(w) -> tuple[Bicomplex, Bicomplex]:
    """Both sides of ``zeta(w) = 2 (2pi)^(w-1) sin(pi w / 2) Gamma(1-w) zeta(1-w)``."""
    w = as_bicomplex(w)
    if not domain_flags(w).in_one_plus_Bstar or not domain_flags(1 - w).in_one_plus_Bstar:
        raise DomainError("functional equation needs w and 1 - w in 1 + B*")
    if not domain_flags(1 - w).in_Omega_minus:
        raise DomainError("functional equation needs 1 - w in Omega_- (gamma factor)")
    lhs = zeta_b(w)
    rhs = 2 * power(TWO_PI, w - 1) * sin_pi_b(w / 2) * gamma_b(1 - w) * zeta_b(1 - w)
    return lhs, rhs


def zeta_functional_residual(w) -> float:
    lhs, rhs = zeta_functional_sides(w)
    return riesz_subnorm(lhs - rhs)
