"""Hyperbolic (split-complex) numbers as an Archimedean f-algebra.

Values are stored in the idempotent basis ``e1 = (1+j)/2``, ``e2 = (1-j)/2``
so that every ring and lattice operation is a pair of real operations.
The Cartesian pair ``(x, y)`` of ``x + j*y`` is a derived view.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Union

from .errors import DomainError, NotInvertible, NotPositive

Real = Union[int, float]

TAU_INT = 1e-9


def _check_finite(*values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise ValueError(f"non-finite component {v!r}")


def fmt_real(x: float) -> str:
    """Shortest round-trip text for a float (``repr``), normalising ``-0.0``."""
    x = float(x)
    if x == 0.0:
        x = 0.0
    return repr(x)


def fmt_signed(x: float) -> str:
    """``x`` rendered with an explicit leading sign, e.g. ``+1.5`` / ``-2.0``."""
    x = float(x)
    if x < 0:
        return "-" + fmt_real(-x)
    return "+" + fmt_real(x)


@dataclass(frozen=True, slots=True)
class Hyperbolic:
    """``p1*e1 + p2*e2``; immutable, finite components only."""

    p1: float
    p2: float

    def __post_init__(self):
        _check_finite(self.p1, self.p2)

    @classmethod
    def from_cartesian(cls, x: Real, y: Real = 0.0) -> "Hyperbolic":
        return cls(float(x) + float(y), float(x) - float(y))

    @classmethod
    def real(cls, x: Real) -> "Hyperbolic":
        x = float(x)
        return cls(x, x)

    @property
    def x(self) -> float:
        return (self.p1 + self.p2) / 2

    @property
    def y(self) -> float:
        return (self.p1 - self.p2) / 2

    def is_real(self) -> bool:
        return self.p1 == self.p2

    # ring structure -----------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Hyperbolic(self.p1 + o.p1, self.p2 + o.p2)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Hyperbolic(self.p1 - o.p1, self.p2 - o.p2)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Hyperbolic(o.p1 - self.p1, o.p2 - self.p2)

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Hyperbolic(self.p1 * o.p1, self.p2 * o.p2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * invert(o)

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * invert(self)

    def __neg__(self):
        return Hyperbolic(-self.p1, -self.p2)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return invert(self) ** (-n)
        return Hyperbolic(self.p1**n, self.p2**n)

    def __abs__(self):
        return abs_h(self)

    def conjugate(self) -> "Hyperbolic":
        return Hyperbolic(self.p2, self.p1)

    # display / serialisation --------------------------------------------

    def __str__(self):
        return f"{fmt_real(self.x)}{fmt_signed(self.y)}j"

    def to_json(self) -> dict:
        return {"p1": self.p1, "p2": self.p2}

    @classmethod
    def from_json(cls, data: dict) -> "Hyperbolic":
        return cls(float(data["p1"]), float(data["p2"]))


def _coerce(v) -> Hyperbolic | None:
    if isinstance(v, Hyperbolic):
        return v
    if isinstance(v, (int, float)) and not isinstance(v, bool):
        return Hyperbolic.real(v)
    return None


def as_hyperbolic(v) -> Hyperbolic:
    h = _coerce(v)
    if h is None:
        raise TypeError(f"cannot interpret {v!r} as a hyperbolic number")
    return h


ZERO = Hyperbolic(0.0, 0.0)
ONE = Hyperbolic(1.0, 1.0)
J = Hyperbolic(1.0, -1.0)
E1 = Hyperbolic(1.0, 0.0)
E2 = Hyperbolic(0.0, 1.0)


class SignElement(enum.Enum):
    """The Klein four-group of signs ``{1, -1, j, -j}``.

    Each value is the pair of idempotent signs.
    """

    ONE = (1, 1)
    MINUS_ONE = (-1, -1)
    J = (1, -1)
    MINUS_J = (-1, 1)

    @classmethod
    def from_signs(cls, s1: int, s2: int) -> "SignElement":
        return cls((s1, s2))

    def as_hyperbolic(self) -> Hyperbolic:
        s1, s2 = self.value
        return Hyperbolic(float(s1), float(s2))

    def __mul__(self, other):
        if isinstance(other, SignElement):
            return SignElement((self.value[0] * other.value[0], self.value[1] * other.value[1]))
        if isinstance(other, (Hyperbolic, int, float)):
            return self.as_hyperbolic() * other
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self):
        return {"ONE": "1", "MINUS_ONE": "-1", "J": "j", "MINUS_J": "-j"}[self.name]


INTERVAL_KINDS = ("closed", "open", "half_open_left", "half_open_right")


@dataclass(frozen=True)
class HyperbolicInterval:
    """Order interval of D.

    ``half_open_left`` is ``(lo, hi]`` and ``half_open_right`` is ``[lo, hi)``;
    open ends use ``<<`` (strict on both idempotent components).
    """

    lo: Hyperbolic
    hi: Hyperbolic
    kind: str = "closed"

    def __post_init__(self):
        if self.kind not in INTERVAL_KINDS:
            raise ValueError(f"unknown interval kind {self.kind!r}")
        ok = partial_leq(self.lo, self.hi) if self.kind == "closed" else strictly_dominates(self.lo, self.hi)
        if not ok:
            raise DomainError(f"invalid bounds for {self.kind} interval: {self.lo} .. {self.hi}")

    @classmethod
    def of(cls, lo, hi, kind: str = "closed") -> "HyperbolicInterval":
        return cls(as_hyperbolic(lo), as_hyperbolic(hi), kind)

    def __contains__(self, z) -> bool:
        return interval_contains(self, as_hyperbolic(z))


# ---------------------------------------------------------------------------
# operations


def hyperbolic_square_modulus(z: Hyperbolic) -> float:
    """``z * conj(z) = x^2 - y^2``."""
    return z.p1 * z.p2


def is_unit(z: Hyperbolic) -> bool:
    return z.p1 != 0.0 and z.p2 != 0.0


def invert(z: Hyperbolic) -> Hyperbolic:
    if not is_unit(z):
        raise NotInvertible(f"{z} is a zero divisor")
    return Hyperbolic(1.0 / z.p1, 1.0 / z.p2)


def lattice_sup(z: Hyperbolic, w: Hyperbolic) -> Hyperbolic:
    return Hyperbolic(max(z.p1, w.p1), max(z.p2, w.p2))


def lattice_inf(z: Hyperbolic, w: Hyperbolic) -> Hyperbolic:
    return Hyperbolic(min(z.p1, w.p1), min(z.p2, w.p2))


def sup_of(values: Iterable[Hyperbolic]) -> Hyperbolic:
    values = list(values)
    if not values:
        raise ValueError("supremum of an empty set")
    return Hyperbolic(max(v.p1 for v in values), max(v.p2 for v in values))


def inf_of(values: Iterable[Hyperbolic]) -> Hyperbolic:
    values = list(values)
    if not values:
        raise ValueError("infimum of an empty set")
    return Hyperbolic(min(v.p1 for v in values), min(v.p2 for v in values))


def abs_h(z: Hyperbolic) -> Hyperbolic:
    """``|z| = z v (-z)``."""
    return Hyperbolic(abs(z.p1), abs(z.p2))


def positive_part(z: Hyperbolic) -> Hyperbolic:
    return lattice_sup(z, ZERO)


def negative_part(z: Hyperbolic) -> Hyperbolic:
    return lattice_sup(-z, ZERO)


def partial_leq(z: Hyperbolic, w: Hyperbolic, tol: float = 0.0) -> bool:
    return z.p1 <= w.p1 + tol and z.p2 <= w.p2 + tol


def strict_lt(z: Hyperbolic, w: Hyperbolic, tol: float = 0.0) -> bool:
    """``z < w``: ``w - z`` positive and nonzero."""
    d1, d2 = w.p1 - z.p1, w.p2 - z.p2
    return d1 >= -tol and d2 >= -tol and max(d1, d2) > tol


def strictly_dominates(z: Hyperbolic, w: Hyperbolic, tol: float = 0.0) -> bool:
    """``z << w``: ``w - z`` is a positive unit."""
    return w.p1 - z.p1 > tol and w.p2 - z.p2 > tol


def is_positive(z: Hyperbolic, tol: float = 0.0) -> bool:
    return z.p1 >= -tol and z.p2 >= -tol


def riesz_norm(z: Hyperbolic) -> float:
    """``min{a >= 0 : a*1 >= |z|}``."""
    return max(abs(z.p1), abs(z.p2))


def sqrt_positive(u: Hyperbolic, tol: float = 0.0) -> Hyperbolic:
    """Unique positive square root of a positive hyperbolic number."""
    if u.p1 < -tol or u.p2 < -tol:
        raise NotPositive(f"{u} is not in the positive cone")
    return Hyperbolic(math.sqrt(max(u.p1, 0.0)), math.sqrt(max(u.p2, 0.0)))


def exp_h(z: Hyperbolic) -> Hyperbolic:
    return Hyperbolic(math.exp(z.p1), math.exp(z.p2))


def ln_h(u: Hyperbolic) -> Hyperbolic:
    if not (u.p1 > 0 and u.p2 > 0):
        raise DomainError(f"ln is defined on positive units only, got {u}")
    return Hyperbolic(math.log(u.p1), math.log(u.p2))


def _sign(x: float) -> int:
    return 1 if x > 0 else -1


def sign_decompose(z: Hyperbolic) -> tuple[SignElement, Hyperbolic]:
    """Write a unit as ``eps * |z|`` with ``eps`` in the group of signs."""
    if not is_unit(z):
        raise NotInvertible(f"sign of the zero divisor {z} is not unique")
    return SignElement.from_signs(_sign(z.p1), _sign(z.p2)), abs_h(z)


def interval_contains(interval: HyperbolicInterval, z: Hyperbolic, tol: float = 0.0) -> bool:
    lo, hi, kind = interval.lo, interval.hi, interval.kind
    left_open = kind in ("open", "half_open_left")
    right_open = kind in ("open", "half_open_right")
    left = strictly_dominates(lo, z, tol) if left_open else partial_leq(lo, z, tol)
    right = strictly_dominates(z, hi, tol) if right_open else partial_leq(z, hi, tol)
    return left and right


def is_in_cone(z: Hyperbolic, eps: SignElement, tol: float = 0.0) -> bool:
    """Membership of the eps-cone ``{z : |z| = eps*z}``."""
    s1, s2 = eps.value
    return abs(abs(z.p1) - s1 * z.p1) <= tol and abs(abs(z.p2) - s2 * z.p2) <= tol


def is_hyperbolic_integer(z: Hyperbolic, tol: float = TAU_INT) -> bool:
    return abs(z.p1 - round(z.p1)) <= tol and abs(z.p2 - round(z.p2)) <= tol


def cos_h(z: Hyperbolic) -> Hyperbolic:
    return Hyperbolic(math.cos(z.p1), math.cos(z.p2))


def sin_h(z: Hyperbolic) -> Hyperbolic:
    return Hyperbolic(math.sin(z.p1), math.sin(z.p2))


_UNIT_INTERVAL = HyperbolicInterval(-ONE, ONE, "closed")


def arccos_h(u: Hyperbolic) -> Hyperbolic:
    """Inverse of cos restricted to ``[0, pi]_D``."""
    if not interval_contains(_UNIT_INTERVAL, u):
        raise DomainError(f"arccos needs {u} in [-1, 1]_D")
    return Hyperbolic(math.acos(u.p1), math.acos(u.p2))


def arcsin_h(u: Hyperbolic) -> Hyperbolic:
    """Inverse of sin restricted to ``[-pi/2, pi/2]_D``."""
    if not interval_contains(_UNIT_INTERVAL, u):
        raise DomainError(f"arcsin needs {u} in [-1, 1]_D")
    return Hyperbolic(math.asin(u.p1), math.asin(u.p2))
