"""D-trigonometric form, nth roots, roots of unity and their torus picture."""

from __future__ import annotations

import cmath
import itertools
import json
import math
from dataclasses import dataclass

from .bicomplex import (
    Bicomplex,
    arg_principal,
    euclidean_norm,
    j_modulus,
    principal_arg,
)
from .errors import BadParameters, NotOnSphere, ZeroInput
from .scalar import cospi_real, sinpi, sinpi_real
from .hyperbolic import (
    Hyperbolic,
    arccos_h,
    arcsin_h,
    cos_h,
    fmt_real,
    riesz_norm,
    sin_h,
)

__all__ = [
    "TrigForm",
    "ToroidMesh",
    "arccos_h",
    "arcsin_h",
    "chord_length",
    "cos_b",
    "cos_h",
    "from_trig_form",
    "nth_roots",
    "roots_of_unity",
    "sin_b",
    "sin_h",
    "sin_pi_b",
    "to_trig_form",
    "toroid_mesh",
    "torus_coordinates",
    "unit_dsphere_contains",
]

TWO_PI = 2 * math.pi


def sin_b(w: Bicomplex) -> Bicomplex:
    return Bicomplex(cmath.sin(w.z1), cmath.sin(w.z2))


def cos_b(w: Bicomplex) -> Bicomplex:
    return Bicomplex(cmath.cos(w.z1), cmath.cos(w.z2))


def sin_pi_b(w: Bicomplex) -> Bicomplex:
    """``sin(pi w)`` with exact zeros on the hyperbolic integers."""
    return Bicomplex(sinpi(w.z1), sinpi(w.z2))


@dataclass(frozen=True)
class TrigForm:
    """``modulus * (cos(argument) + i sin(argument))``."""

    modulus: Hyperbolic
    argument: Hyperbolic


def to_trig_form(w: Bicomplex) -> TrigForm:
    """D-trigonometric form; zero divisors get the real argument of their live component."""
    if w.is_zero():
        raise ZeroInput("0 has no trigonometric form")
    if w.is_invertible():
        return TrigForm(j_modulus(w), arg_principal(w))
    phi = principal_arg(w.z1 if w.z1 != 0 else w.z2)
    return TrigForm(j_modulus(w), Hyperbolic(phi, phi))


def from_trig_form(t: TrigForm) -> Bicomplex:
    m, phi = t.modulus, t.argument
    return Bicomplex(cmath.rect(m.p1, phi.p1), cmath.rect(m.p2, phi.p2))


def _component_roots(z: complex, n: int) -> list[complex]:
    if z == 0:
        return [0j]
    r = abs(z) ** (1.0 / n)
    # angles in half turns so that real and imaginary axes come out exact
    turns = principal_arg(z) / math.pi
    out = []
    for h in range(n):
        t = (2 * h + turns) / n
        out.append(complex(r * cospi_real(t), r * sinpi_real(t)))
    return out


def nth_roots(w: Bicomplex, n: int) -> list[Bicomplex]:
    """All ``n**(2 - nu)`` nth roots, ``nu`` = number of zero idempotent components.

    Ordered lexicographically in ``(h1, h2)``.
    """
    if not isinstance(n, int) or n < 1:
        raise BadParameters(f"root order must be a positive integer, got {n!r}")
    return [Bicomplex(a, b) for a, b in itertools.product(_component_roots(w.z1, n), _component_roots(w.z2, n))]


def roots_of_unity(n: int) -> list[Bicomplex]:
    """``U_n = {exp(2 i pi h / n) : h in Z e1 + Z e2, 0 <= h <= n-1}``."""
    return nth_roots(Bicomplex(1 + 0j, 1 + 0j), n)


def unit_dsphere_contains(w: Bicomplex, tol: float = 1e-12) -> bool:
    if tol < 0:
        raise ValueError("tolerance must be non-negative")
    return riesz_norm(j_modulus(w) - 1.0) <= tol


def chord_length(p: Hyperbolic, q: Hyperbolic, n: int) -> float:
    """``2 ||sin((p - q) pi / n)||`` with the Euclidean norm of B."""
    s = sin_h((p - q) * (math.pi / n))
    return 2 * euclidean_norm(Bicomplex.from_hyperbolic(s))


def _angle_0_2pi(theta: float) -> float:
    t = theta % TWO_PI
    return 0.0 if t >= TWO_PI else t


def torus_coordinates(w: Bicomplex, tol: float = 1e-9) -> tuple[float, float]:
    """Angles ``(t1, t2)`` in ``[0, 2pi)`` with ``w = exp(i (t1 e1 + t2 e2))``."""
    if not unit_dsphere_contains(w, tol):
        raise NotOnSphere(f"|w|_j = {j_modulus(w)} is not 1")
    return _angle_0_2pi(principal_arg(w.z1)), _angle_0_2pi(principal_arg(w.z2))


def torus_embedding(theta1: float, theta2: float, R: float, r: float) -> tuple[float, float, float]:
    ring = R + r * math.cos(theta2)
    return (ring * math.cos(theta1), ring * math.sin(theta1), r * math.sin(theta2))


@dataclass(frozen=True)
class ToroidMesh:
    """Quadrilateral class-T2 toroid; vertex ``h1*n + h2`` is the root ``(h1, h2)``."""

    vertices: list
    edges: list
    faces: list
    n: int
    R: float
    r: float

    @property
    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.faces)

    def vertex_degrees(self) -> list[int]:
        deg = [0] * len(self.vertices)
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def face_edge_counts(self) -> list[int]:
        edge_set = {frozenset(e) for e in self.edges}
        counts = []
        for f in self.faces:
            sides = [frozenset((f[i], f[(i + 1) % len(f)])) for i in range(len(f))]
            counts.append(sum(s in edge_set for s in sides))
        return counts

    def to_obj(self) -> str:
        lines = [f"# class-T2 toroid for U_{self.n}, R={fmt_real(self.R)} r={fmt_real(self.r)}"]
        lines += [f"v {fmt_real(x)} {fmt_real(y)} {fmt_real(z)}" for x, y, z in self.vertices]
        lines += [f"l {a + 1} {b + 1}" for a, b in self.edges]
        lines += ["f " + " ".join(str(i + 1) for i in f) for f in self.faces]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(
            {
                "schema_version": 1,
                "n": self.n,
                "R": self.R,
                "r": self.r,
                "vertices": [list(v) for v in self.vertices],
                "edges": [list(e) for e in self.edges],
                "faces": [list(f) for f in self.faces],
            }
        )


def toroid_mesh(n: int, R: float = 2.0, r: float = 1.0) -> ToroidMesh:
    """Vertices are the images of ``U_n`` under the standard torus embedding."""
    if not isinstance(n, int) or n < 3:
        raise BadParameters(f"a class-T2 toroid needs n >= 3, got {n!r}")
    if not (r > 0 and R > r):
        raise BadParameters(f"need R > r > 0, got R={R}, r={r}")
    vertices = [torus_embedding(*torus_coordinates(u), R, r) for u in roots_of_unity(n)]

    def idx(h1: int, h2: int) -> int:
        return (h1 % n) * n + (h2 % n)

    edges, faces = [], []
    for h1, h2 in itertools.product(range(n), repeat=2):
        edges.append((idx(h1, h2), idx(h1 + 1, h2)))
        edges.append((idx(h1, h2), idx(h1, h2 + 1)))
        faces.append((idx(h1, h2), idx(h1 + 1, h2), idx(h1 + 1, h2 + 1), idx(h1, h2 + 1)))
    return ToroidMesh(vertices, edges, faces, n, float(R), float(r))
