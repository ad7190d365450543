"""Residual sweeps of the gamma/zeta identities over bicomplex grids."""

from __future__ import annotations

import csv
import io
import json
import math
import os
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .bicomplex import Bicomplex, i_R, riesz_subnorm
from .errors import DomainError, PoleError
from .special import (
    domain_flags,
    mellin_check,
    zeta_functional_residual,
    gamma_recurrence_residual,
    gamma_reflection_residual,
    zeta_b_series,
)
from .scalar import complex_zeta

SCHEMA_VERSION = 1
CSV_COLUMNS = ("omega_z1_re", "omega_z1_im", "omega_z2_re", "omega_z2_im", "residual")

DEFAULT_TOLERANCES = {
    "recurrence": 1e-9,
    "reflection": 1e-8,
    "functional": 1e-7,
    "mellin": 1e-8,
    "series_bound": 1e-6,
    "unity": 1e-12,
}


@dataclass(frozen=True)
class GridSpec:
    """Complex grid ``G`` (row-major) paired into bicomplex points.

    Point ``m`` is ``G[m] e1 + G[(stride * m + offset) mod N] e2``.  With
    ``stride`` coprime to ``N`` each grid value appears once in each
    component, so ``N`` points exercise both components independently.
    """

    re_lo: float = -2.5
    re_hi: float = 4.0
    im_lo: float = -3.0
    im_hi: float = 3.0
    n_re: int = 20
    n_im: int = 20
    stride: int = 7
    offset: int = 3

    def complex_grid(self) -> np.ndarray:
        re = np.linspace(self.re_lo, self.re_hi, self.n_re)
        im = np.linspace(self.im_lo, self.im_hi, self.n_im)
        return (re[:, None] + 1j * im[None, :]).ravel()

    def points(self) -> list[Bicomplex]:
        g = self.complex_grid()
        n = g.size
        if math.gcd(self.stride, n) != 1:
            raise ValueError(f"stride {self.stride} must be coprime to the grid size {n}")
        return [Bicomplex(complex(g[m]), complex(g[(self.stride * m + self.offset) % n])) for m in range(n)]


STANDARD_GRID = GridSpec()
# 100 points for the functional equation; real parts straddle the critical strip.
FUNCTIONAL_GRID = GridSpec(re_lo=-3.3, re_hi=3.7, im_lo=-2.0, im_hi=2.0, n_re=10, n_im=10, stride=3, offset=1)
MELLIN_POINTS = (
    Bicomplex(2, 2),
    Bicomplex(3, 3),
    Bicomplex(4, 4),
    Bicomplex(3, 2),
    Bicomplex(2 + 0.5j, 2 - 0.5j),
)


@dataclass
class SweepResult:
    name: str
    tolerance: float
    rows: list[tuple[Bicomplex, float]] = field(default_factory=list)
    excluded: list[tuple[Bicomplex, str]] = field(default_factory=list)

    @property
    def max_residual(self) -> float:
        return max((r for _, r in self.rows), default=0.0)

    @property
    def mean_residual(self) -> float:
        return math.fsum(r for _, r in self.rows) / len(self.rows) if self.rows else 0.0

    @property
    def passed(self) -> bool:
        return bool(self.rows) and self.max_residual < self.tolerance

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for w, r in self.rows:
            writer.writerow([repr(w.z1.real), repr(w.z1.imag), repr(w.z2.real), repr(w.z2.imag), repr(r)])
        return buf.getvalue()

    def summary(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "check": self.name,
            "tolerance": self.tolerance,
            "max_residual": self.max_residual,
            "mean_residual": self.mean_residual,
            "evaluated": len(self.rows),
            "excluded": len(self.excluded),
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.summary())


def sweep(
    name: str,
    residual: Callable[[Bicomplex], float],
    points: list[Bicomplex],
    tolerance: float,
    admissible: Callable[[Bicomplex], str | None] = lambda w: None,
) -> SweepResult:
    """Evaluate ``residual`` on every admissible point.

    Points rejected by ``admissible`` (which returns a reason) or raising a
    pole/domain error are recorded as excluded rather than evaluated.
    """
    result = SweepResult(name, tolerance)
    for w in points:
        reason = admissible(w)
        if reason is not None:
            result.excluded.append((w, reason))
            continue
        try:
            result.rows.append((w, residual(w)))
        except (PoleError, DomainError) as exc:
            result.excluded.append((w, f"{type(exc).__name__}: {exc}"))
    return result


def _functional_admissible(w: Bicomplex) -> str | None:
    """Exclude components that are integers >= 0, where the gamma factor or a zeta pole appears."""
    for z in (w.z1, w.z2):
        if abs(z.imag) <= 1e-9 and abs(z.real - round(z.real)) <= 1e-9 and round(z.real) >= 0:
            return f"component {z} is a non-negative integer"
    return None


def random_series_points(count: int = 200, seed: int = 0) -> list[Bicomplex]:
    """Points with ``i_R`` uniform in ``(1.1, 5)``; the other real part lies above it."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        lo = rng.uniform(1.1, 5.0)
        hi = lo + rng.uniform(0.0, 3.0)
        re1, re2 = (lo, hi) if rng.random() < 0.5 else (hi, lo)
        im1, im2 = rng.uniform(-10, 10, size=2)
        out.append(Bicomplex(complex(re1, im1), complex(re2, im2)))
    return out


def series_bound_excess(w: Bicomplex, max_terms: int = 100_000) -> float:
    """``||partial sum||_j - zeta(i_R(w))``; non-positive when the bound holds."""
    report = zeta_b_series(w, max_terms)
    return riesz_subnorm(report.value) - complex_zeta(i_R(w)).real


def resolve_tolerances(overrides: dict[str, float] | None = None, global_tol: float | None = None) -> dict[str, float]:
    """Defaults, then ``BCTK_TOL`` / ``global_tol`` for every check, then per-check overrides."""
    tols = dict(DEFAULT_TOLERANCES)
    env = os.environ.get("BCTK_TOL")
    if env:
        tols = {k: float(env) for k in tols}
    if global_tol is not None:
        tols = {k: global_tol for k in tols}
    tols.update(overrides or {})
    return tols


def verify_all(
    tolerances: dict[str, float] | None = None,
    grid: GridSpec = STANDARD_GRID,
    functional_grid: GridSpec = FUNCTIONAL_GRID,
    series_samples: int = 200,
) -> dict[str, SweepResult]:
    tols = tolerances or resolve_tolerances()
    points = grid.points()
    results = {
        "recurrence": sweep(
            "recurrence",
            gamma_recurrence_residual,
            points,
            tols["recurrence"],
            lambda w: None if domain_flags(w).in_Omega_minus else "outside Omega_-",
        ),
        "reflection": sweep(
            "reflection",
            gamma_reflection_residual,
            points,
            tols["reflection"],
            lambda w: None if domain_flags(w).in_Omega else "outside Omega",
        ),
        "functional": sweep(
            "functional",
            zeta_functional_residual,
            functional_grid.points(),
            tols["functional"],
            _functional_admissible,
        ),
        "mellin": sweep("mellin", lambda w: mellin_check(w)[2], list(MELLIN_POINTS), tols["mellin"]),
    }
    # the excess is <= 0 when the bound holds, so compare it against the slack
    bound = sweep("series_bound", series_bound_excess, random_series_points(series_samples), tols["series_bound"])
    results["series_bound"] = bound
    return results


def any_failed(results: dict[str, SweepResult]) -> bool:
    return any(not r.passed for r in results.values())


__all__ = [
    "CSV_COLUMNS",
    "DEFAULT_TOLERANCES",
    "FUNCTIONAL_GRID",
    "GridSpec",
    "MELLIN_POINTS",
    "SCHEMA_VERSION",
    "STANDARD_GRID",
    "SweepResult",
    "any_failed",
    "random_series_points",
    "resolve_tolerances",
    "series_bound_excess",
    "sweep",
    "verify_all",
]
