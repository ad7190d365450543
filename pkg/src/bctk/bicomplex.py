"""Bicomplex numbers ``B = D + iD`` stored as idempotent pairs of complex scalars.

``w = z1*e1 + z2*e2``.  The Cartesian view ``a + b i + c j + d k`` follows the
multiplication rules ``i^2 = k^2 = -1``, ``j^2 = 1``, ``ik = ki = j``, which
give ``z1 = (a+c) + i(b-d)`` and ``z2 = (a-c) + i(b+d)``.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence, Union

from .errors import DomainError, NotInvertible, ZeroInput
from .hyperbolic import (
    Hyperbolic,
    SignElement,
    fmt_real,
    fmt_signed,
    hyperbolic_square_modulus,
    lattice_inf,
    partial_leq,
    riesz_norm,
    strictly_dominates,
)

Scalar = Union[int, float, complex]
UNITS = ("i", "j", "k")
# u -> pi(u) in  w = Re_u(w) + pi(u) Im_u(w)
PERMUTATION = {"i": "k", "j": "i", "k": "j"}


@dataclass(frozen=True, slots=True)
class Bicomplex:
    z1: complex
    z2: complex

    def __post_init__(self):
        z1, z2 = complex(self.z1), complex(self.z2)
        for z in (z1, z2):
            if not (math.isfinite(z.real) and math.isfinite(z.imag)):
                raise ValueError(f"non-finite component {z!r}")
        object.__setattr__(self, "z1", z1)
        object.__setattr__(self, "z2", z2)

    # constructors -------------------------------------------------------

    @classmethod
    def from_cartesian(cls, a: float = 0.0, b: float = 0.0, c: float = 0.0, d: float = 0.0) -> "Bicomplex":
        return cls(complex(a + c, b - d), complex(a - c, b + d))

    @classmethod
    def scalar(cls, s: Scalar) -> "Bicomplex":
        """Embed a real or a complex number of ``R(i)``."""
        s = complex(s)
        return cls(s, s)

    @classmethod
    def from_hyperbolic(cls, h: Hyperbolic) -> "Bicomplex":
        return cls(complex(h.p1), complex(h.p2))

    @classmethod
    def from_parts_j(cls, re: Hyperbolic, im: Hyperbolic) -> "Bicomplex":
        """``re + i*im`` with ``re, im`` in D."""
        return cls(complex(re.p1, im.p1), complex(re.p2, im.p2))

    # views --------------------------------------------------------------

    @property
    def cartesian(self) -> tuple[float, float, float, float]:
        z1, z2 = self.z1, self.z2
        return (
            (z1.real + z2.real) / 2,
            (z1.imag + z2.imag) / 2,
            (z1.real - z2.real) / 2,
            (z2.imag - z1.imag) / 2,
        )

    def is_invertible(self) -> bool:
        return self.z1 != 0 and self.z2 != 0

    def is_zero(self) -> bool:
        return self.z1 == 0 and self.z2 == 0

    def conjugate(self, u: str = "j") -> "Bicomplex":
        return conjugate_u(self, u)

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Bicomplex(self.z1 + o.z1, self.z2 + o.z2)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Bicomplex(self.z1 - o.z1, self.z2 - o.z2)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Bicomplex(o.z1 - self.z1, o.z2 - self.z2)

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Bicomplex(self.z1 * o.z1, self.z2 * o.z2)

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
        return Bicomplex(-self.z1, -self.z2)

    def __pos__(self):
        return self

    def __pow__(self, n):
        if isinstance(n, int) and not isinstance(n, bool):
            if n < 0:
                return invert(self) ** (-n)
            return Bicomplex(self.z1**n, self.z2**n)
        return power(self, n)

    # text / json --------------------------------------------------------

    def __str__(self):
        return format_cartesian(self)

    def to_json(self) -> dict:
        return {"z1": [self.z1.real, self.z1.imag], "z2": [self.z2.real, self.z2.imag]}

    @classmethod
    def from_json(cls, data: dict) -> "Bicomplex":
        (a, b), (c, d) = data["z1"], data["z2"]
        return cls(complex(float(a), float(b)), complex(float(c), float(d)))


def _coerce(v) -> Bicomplex | None:
    if isinstance(v, Bicomplex):
        return v
    if isinstance(v, Hyperbolic):
        return Bicomplex.from_hyperbolic(v)
    if isinstance(v, (int, float, complex)) and not isinstance(v, bool):
        return Bicomplex.scalar(v)
    return None


def as_bicomplex(v) -> Bicomplex:
    b = _coerce(v)
    if b is None:
        raise TypeError(f"cannot interpret {v!r} as a bicomplex number")
    return b


ZERO = Bicomplex(0j, 0j)
ONE = Bicomplex(1 + 0j, 1 + 0j)
I = Bicomplex(1j, 1j)
J = Bicomplex(1 + 0j, -1 + 0j)
K = Bicomplex(-1j, 1j)
E1 = Bicomplex(1 + 0j, 0j)
E2 = Bicomplex(0j, 1 + 0j)


def format_cartesian(w: Bicomplex) -> str:
    a, b, c, d = w.cartesian
    return f"{fmt_real(a)}{fmt_signed(b)}i{fmt_signed(c)}j{fmt_signed(d)}k"


def _fmt_complex(z: complex) -> str:
    return f"{fmt_real(z.real)}{fmt_signed(z.imag)}i"


def format_idempotent(w: Bicomplex) -> str:
    return f"[{_fmt_complex(w.z1)}, {_fmt_complex(w.z2)}]e"


# ---------------------------------------------------------------------------
# representations, conjugations, moduli


def re_j(w: Bicomplex) -> Hyperbolic:
    return Hyperbolic(w.z1.real, w.z2.real)


def im_j(w: Bicomplex) -> Hyperbolic:
    return Hyperbolic(w.z1.imag, w.z2.imag)


def _check_unit(u: str) -> None:
    if u not in UNITS:
        raise ValueError(f"unit must be one of {UNITS}, got {u!r}")


def representations(w: Bicomplex, u: str) -> tuple[Bicomplex, Bicomplex]:
    """``(Re_u(w), Im_u(w))``, both in ``R(u)``, with ``w = Re_u + pi(u) Im_u``."""
    _check_unit(u)
    a, b, c, d = w.cartesian
    if u == "i":
        return Bicomplex.from_cartesian(a, b), Bicomplex.from_cartesian(d, c)
    if u == "j":
        return Bicomplex.from_cartesian(a, 0, c), Bicomplex.from_cartesian(b, 0, -d)
    return Bicomplex.from_cartesian(a, 0, 0, d), Bicomplex.from_cartesian(c, 0, 0, -b)


def unit_element(u: str) -> Bicomplex:
    _check_unit(u)
    return {"i": I, "j": J, "k": K}[u]


def conjugate_u(w: Bicomplex, u: str) -> Bicomplex:
    """``Re_u(w) - pi(u) Im_u(w)``, computed on idempotent components."""
    _check_unit(u)
    if u == "i":
        return Bicomplex(w.z2, w.z1)
    if u == "j":
        return Bicomplex(w.z1.conjugate(), w.z2.conjugate())
    return Bicomplex(w.z2.conjugate(), w.z1.conjugate())


def j_modulus(w: Bicomplex) -> Hyperbolic:
    return Hyperbolic(abs(w.z1), abs(w.z2))


def euclidean_norm(w: Bicomplex) -> float:
    return math.sqrt((abs(w.z1) ** 2 + abs(w.z2) ** 2) / 2)


def riesz_subnorm(w: Bicomplex) -> float:
    """``||w||_j``: the Riesz subnorm of the j-modulus."""
    return max(abs(w.z1), abs(w.z2))


def invert(w: Bicomplex) -> Bicomplex:
    if not w.is_invertible():
        raise NotInvertible(f"{format_idempotent(w)} is not a unit")
    return Bicomplex(1 / w.z1, 1 / w.z2)


def s_R(w: Bicomplex) -> float:
    return max(w.z1.real, w.z2.real)


def i_R(w: Bicomplex) -> float:
    return min(w.z1.real, w.z2.real)


# ---------------------------------------------------------------------------
# D-norms


@dataclass(frozen=True)
class DNorm:
    """A hyperbolic-valued norm given by a side-effect free callable."""

    eval: Callable[[Bicomplex], Hyperbolic]
    label: str = "N"

    def __call__(self, w: Bicomplex) -> Hyperbolic:
        return self.eval(w)

    def subnorm(self) -> Callable[[Bicomplex], float]:
        return subnorm_of(self)


J_MODULUS = DNorm(j_modulus, "j-modulus")


def componentwise_dnorm(n1: Callable[[Bicomplex], float], n2: Callable[[Bicomplex], float], label: str = "N1e1+N2e2") -> DNorm:
    """``N1*e1 + N2*e2`` from two real (semi)norms."""
    return DNorm(lambda w: Hyperbolic(n1(w), n2(w)), label)


EUCLIDEAN_DNORM = componentwise_dnorm(euclidean_norm, euclidean_norm, "euclidean")


def subnorm_of(norm: DNorm) -> Callable[[Bicomplex], float]:
    """Riesz subnorm ``w -> ||N(w)||_R``."""

    def ceil_norm(w: Bicomplex) -> float:
        return riesz_norm(norm(w))

    ceil_norm.__name__ = f"ceil_{norm.label}"
    return ceil_norm


@dataclass
class Violation:
    axiom: str
    witness: tuple
    detail: str = ""


@dataclass
class AxiomReport:
    label: str
    checked: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def by_axiom(self, axiom: str) -> list:
        return [v for v in self.violations if v.axiom == axiom]


def _leq_tol(x: Hyperbolic, y: Hyperbolic, rtol: float, atol: float) -> bool:
    return (x.p1 <= y.p1 + atol + rtol * abs(y.p1)) and (x.p2 <= y.p2 + atol + rtol * abs(y.p2))


def _close_h(x: Hyperbolic, y: Hyperbolic, rtol: float, atol: float) -> bool:
    return math.isclose(x.p1, y.p1, rel_tol=rtol, abs_tol=atol) and math.isclose(x.p2, y.p2, rel_tol=rtol, abs_tol=atol)


def check_dnorm_axioms(
    norm: DNorm,
    samples: Sequence[Bicomplex],
    scalars: Sequence[float] = (0.0, -1.0, 2.5),
    *,
    rtol: float = 1e-12,
    atol: float = 1e-12,
    pairs: Iterable[tuple[int, int]] | None = None,
) -> AxiomReport:
    """Sampled check of definiteness, homogeneity and both triangle inequalities.

    ``pairs`` restricts the pairwise checks to given index pairs; by default
    every unordered pair (including ``i == j``) is checked.
    """
    samples = list(samples)
    if not samples:
        raise ValueError("at least one sample is required")
    report = AxiomReport(norm.label)
    values = [norm(w) for w in samples]

    zero_val = norm(ZERO)
    if zero_val != Hyperbolic(0.0, 0.0):
        report.violations.append(Violation("definiteness", (ZERO,), f"N(0) = {zero_val}"))
    for w, n in zip(samples, values):
        if n.p1 < -atol or n.p2 < -atol:
            report.violations.append(Violation("positivity", (w,), f"N(w) = {n}"))
        if not w.is_zero() and n == Hyperbolic(0.0, 0.0):
            report.violations.append(Violation("definiteness", (w,), "N(w) = 0 for w != 0"))
    report.checked["definiteness"] = len(samples) + 1

    count = 0
    for w, n in zip(samples, values):
        for lam in scalars:
            lhs = norm(w * float(lam))
            rhs = n * abs(float(lam))
            count += 1
            if not _close_h(lhs, rhs, rtol, atol):
                report.violations.append(Violation("homogeneity", (w, lam), f"{lhs} != {rhs}"))
    report.checked["homogeneity"] = count

    if pairs is None:
        pairs = itertools.combinations_with_replacement(range(len(samples)), 2)
    count = 0
    for a, b in pairs:
        w, p = samples[a], samples[b]
        nw, np_ = values[a], values[b]
        count += 1
        if not _leq_tol(norm(w + p), nw + np_, rtol, atol):
            report.violations.append(Violation("triangle", (w, p), ""))
        if not _leq_tol(abs(nw - np_), norm(w - p), rtol, atol):
            report.violations.append(Violation("second_triangle", (w, p), ""))
    report.checked["triangle"] = count
    report.checked["second_triangle"] = count
    return report


@dataclass
class IntegralityCheck:
    integral: bool
    witness: Bicomplex | None = None

    def __bool__(self):
        return self.integral


def is_integral_dnorm(norm: DNorm, samples: Iterable[Bicomplex]) -> IntegralityCheck:
    """Sampled test of ``||N(w)||_h = 0  =>  w = 0``."""
    if norm(ZERO) != Hyperbolic(0.0, 0.0):
        return IntegralityCheck(False, ZERO)
    for w in samples:
        if not w.is_zero() and hyperbolic_square_modulus(norm(w)) == 0.0:
            return IntegralityCheck(False, w)
    return IntegralityCheck(True)


# ---------------------------------------------------------------------------
# normality, polar form, exponential and logarithm


def normal_split(w: Bicomplex, phi: Bicomplex, psi: Bicomplex) -> tuple[Bicomplex, Bicomplex]:
    """Split ``w = phi1 + psi1`` with ``phi1 _|_ phi`` and ``psi1 _|_ psi``.

    Requires ``|phi|_j ^ |psi|_j = 0``.
    """
    if lattice_inf(j_modulus(phi), j_modulus(psi)) != Hyperbolic(0.0, 0.0):
        raise DomainError("phi and psi are not disjoint")
    comps_phi1, comps_psi1 = [], []
    for wk, fk in ((w.z1, phi.z1), (w.z2, phi.z2)):
        if fk == 0:
            comps_phi1.append(wk)
            comps_psi1.append(0j)
        else:
            comps_phi1.append(0j)
            comps_psi1.append(wk)
    return Bicomplex(*comps_phi1), Bicomplex(*comps_psi1)


def polar_decompose(w: Bicomplex) -> tuple[Bicomplex, Hyperbolic]:
    """``w = u * |w|_j`` with ``u`` unimodular; null components of ``u`` are 1."""
    if w.is_zero():
        raise ZeroInput("polar decomposition of 0")
    u1 = w.z1 / abs(w.z1) if w.z1 != 0 else 1 + 0j
    u2 = w.z2 / abs(w.z2) if w.z2 != 0 else 1 + 0j
    return Bicomplex(u1, u2), j_modulus(w)


def exp_b(w: Bicomplex) -> Bicomplex:
    return Bicomplex(cmath.exp(w.z1), cmath.exp(w.z2))


def principal_arg(z: complex) -> float:
    """Complex argument in ``(-pi, pi]``."""
    # atan2 rather than cmath.phase, which raises when the angle underflows
    t = math.atan2(z.imag, z.real)
    return math.pi if t == -math.pi else t


def arg_principal(w: Bicomplex) -> Hyperbolic:
    """Principal D-argument, the unique value in ``(-pi, pi]_D``."""
    if not w.is_invertible():
        raise NotInvertible("the principal D-argument needs an invertible argument")
    return Hyperbolic(principal_arg(w.z1), principal_arg(w.z2))


def log_principal(w: Bicomplex) -> Bicomplex:
    if not w.is_invertible():
        raise NotInvertible("Log is defined on units only")
    return Bicomplex(
        complex(math.log(abs(w.z1)), principal_arg(w.z1)),
        complex(math.log(abs(w.z2)), principal_arg(w.z2)),
    )


def power(w, alpha) -> Bicomplex:
    """``w ** alpha = exp(alpha * Log w)`` for a unit ``w``."""
    return exp_b(as_bicomplex(alpha) * log_principal(as_bicomplex(w)))


def inner_product_j(a: Bicomplex, b: Bicomplex) -> Hyperbolic:
    """``<a, b>_j = Re_j(a * conj_j(b))``."""
    return re_j(a * conjugate_u(b, "j"))


def _clamp(x: float) -> float:
    return min(1.0, max(-1.0, x))


def d_angle(a: Bicomplex, b: Bicomplex) -> Hyperbolic:
    if not (a.is_invertible() and b.is_invertible()):
        raise NotInvertible("the D-angle needs invertible arguments")
    ip = inner_product_j(a, b)
    return Hyperbolic(
        math.acos(_clamp(ip.p1 / (abs(a.z1) * abs(b.z1)))),
        math.acos(_clamp(ip.p2 / (abs(a.z2) * abs(b.z2)))),
    )


def cone_classify(w: Bicomplex, tol: float = 1e-12) -> SignElement | None:
    """The sign ``eps`` with ``Arg_D(w) = (1 - eps) pi / 2``, if any."""
    phi = arg_principal(w)
    for eps in SignElement:
        s1, s2 = eps.value
        target = Hyperbolic((1 - s1) * math.pi / 2, (1 - s2) * math.pi / 2)
        if abs(phi.p1 - target.p1) <= tol and abs(phi.p2 - target.p2) <= tol:
            return eps
    return None


# ---------------------------------------------------------------------------
# D-balls


@dataclass(frozen=True)
class DBall:
    center: Bicomplex
    radius: Hyperbolic
    norm: DNorm = J_MODULUS
    kind: str = "closed"

    def __post_init__(self):
        if self.kind not in ("open", "closed"):
            raise ValueError(f"unknown ball kind {self.kind!r}")
        if not strictly_dominates(Hyperbolic(0.0, 0.0), self.radius):
            raise DomainError(f"ball radius {self.radius} is not a positive unit")

    def __contains__(self, w) -> bool:
        return dball_contains(self, as_bicomplex(w))


def dball_contains(ball: DBall, w: Bicomplex) -> bool:
    d = ball.norm(w - ball.center)
    if ball.kind == "open":
        return strictly_dominates(d, ball.radius)
    return partial_leq(d, ball.radius)
