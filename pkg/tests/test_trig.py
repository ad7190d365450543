import cmath
import itertools
import json
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracle
from bctk.bicomplex import E1, E2, I, J, ONE, ZERO, Bicomplex
from bctk.errors import BadParameters, NotOnSphere, ZeroInput
from bctk.hyperbolic import Hyperbolic, SignElement, cos_h, sin_h
from bctk.trig import (
    TrigForm,
    chord_length,
    cos_b,
    from_trig_form,
    nth_roots,
    roots_of_unity,
    sin_b,
    sin_pi_b,
    to_trig_form,
    toroid_mesh,
    torus_coordinates,
    unit_dsphere_contains,
)
from strategies import small_bicomplexes, small_hyperbolics, units

B = Bicomplex
H = Hyperbolic
PI = math.pi


def close(w, v, rtol=1e-10, atol=1e-12):
    return all(abs(x - y) <= atol + rtol * max(abs(x), abs(y)) for x, y in ((w.z1, v.z1), (w.z2, v.z2)))


def ipow(w: Bicomplex, n: int) -> Bicomplex:
    acc = ONE
    for _ in range(n):
        acc = acc * w
    return acc


class TestCircularD:
    def test_examples(self):
        assert cos_h(H(0, 0)) == H(1, 1) and sin_h(H(0, 0)) == H(0, 0)
        assert cos_h(H(0, PI)) == H(1, -1)

    @given(small_hyperbolics, st.integers(-5, 5), st.integers(-5, 5))
    def test_periodicity(self, z, h1, h2):
        shifted = z + H(2 * PI * h1, 2 * PI * h2)
        for f in (sin_h, cos_h):
            assert abs(f(shifted).p1 - f(z).p1) < 1e-12 and abs(f(shifted).p2 - f(z).p2) < 1e-12

    @given(small_hyperbolics)
    def test_pythagoras(self, z):
        s = cos_h(z) * cos_h(z) + sin_h(z) * sin_h(z)
        assert abs(s.p1 - 1) < 1e-15 and abs(s.p2 - 1) < 1e-15

    @given(small_hyperbolics, st.sampled_from(list(SignElement)))
    def test_parity_under_signs(self, z, eps):
        ez = eps * z
        assert cos_h(ez) == cos_h(z)
        assert sin_h(ez) == eps * sin_h(z)

    @given(small_hyperbolics)
    def test_euler_formula(self, z):
        lhs = Bicomplex(cmath.exp(1j * z.p1), cmath.exp(1j * z.p2))
        rhs = Bicomplex.from_hyperbolic(cos_h(z)) + I * Bicomplex.from_hyperbolic(sin_h(z))
        assert close(lhs, rhs)

    @given(st.floats(-10, 10), st.floats(-10, 10))
    def test_unit_circle_pairs_are_cos_sin(self, t1, t2):
        c, s = H(math.cos(t1), math.cos(t2)), H(math.sin(t1), math.sin(t2))
        theta = H(math.atan2(s.p1, c.p1), math.atan2(s.p2, c.p2))
        assert abs(cos_h(theta).p1 - c.p1) < 1e-12 and abs(sin_h(theta).p2 - s.p2) < 1e-12


class TestCircularB:
    def test_examples(self):
        assert sin_b(ZERO) == ZERO
        assert close(sin_b(B(PI / 2, PI / 2)), ONE)
        assert close(sin_b(PI * B(3, 0.5)), E2)
        s = sin_pi_b(B(3, 0.5))
        assert s == E2 and not s.is_invertible()

    @given(st.integers(-6, 6), st.integers(-6, 6), st.floats(-3, 3), st.booleans())
    def test_sin_pi_invertible_iff_no_integer_component(self, n, m, y, shift):
        w = B(complex(n + (0.25 if shift else 0.0), y if shift else 0.0), m + 0.5)
        assert sin_pi_b(w).is_invertible() == shift

    @given(small_bicomplexes)
    def test_match_oracle(self, w):
        w = w * 0.25
        assert oracle.close(oracle.Q(*sin_b(w).cartesian), oracle.sin(oracle.Q(*w.cartesian)), rtol=1e-10, atol=1e-10)
        assert oracle.close(oracle.Q(*cos_b(w).cartesian), oracle.cos(oracle.Q(*w.cartesian)), rtol=1e-10, atol=1e-10)


class TestTrigForm:
    def test_examples(self):
        assert to_trig_form(2 * I) == TrigForm(H(2, 2), H(PI / 2, PI / 2))
        assert to_trig_form(-ONE) == TrigForm(H(1, 1), H(PI, PI))
        assert to_trig_form(3 * E1) == TrigForm(H(3, 0), H(0, 0))
        with pytest.raises(ZeroInput):
            to_trig_form(ZERO)

    def test_zero_divisor_uses_real_argument(self):
        t = to_trig_form(-2j * E2)
        assert t.argument == H(-PI / 2, -PI / 2)
        assert close(from_trig_form(t), -2j * E2)

    @given(units)
    def test_round_trip(self, w):
        assert close(from_trig_form(to_trig_form(w)), w)


class TestRoots:
    def test_square_roots_of_one(self):
        roots = nth_roots(ONE, 2)
        assert roots == [ONE, J, -J, -ONE]
        assert {SignElement.from_signs(int(r.z1.real), int(r.z2.real)) for r in roots} == set(SignElement)

    def test_zero_divisor_root_count(self):
        roots = nth_roots(E2, 3)
        assert len(roots) == 3
        assert all(r.z1 == 0 for r in roots)
        assert all(close(ipow(r, 3), E2) for r in roots)

    def test_zero(self):
        assert nth_roots(ZERO, 5) == [ZERO]

    def test_bad_order(self):
        for n in (0, -2, 2.5):
            with pytest.raises(BadParameters):
                nth_roots(ONE, n)

    def test_lexicographic_order(self):
        w = B(2 + 1j, -3j)
        roots = nth_roots(w, 3)
        base1 = nth_roots(B(2 + 1j, 2 + 1j), 3)[::3]
        base2 = nth_roots(B(-3j, -3j), 3)[:3]
        assert roots == [B(a.z1, b.z2) for a, b in itertools.product(base1, base2)]

    @given(units, st.integers(1, 6))
    def test_roots_are_distinct_and_correct(self, w, n):
        roots = nth_roots(w, n)
        assert len(roots) == n * n
        assert len(set(roots)) == n * n
        for r in roots:
            assert close(ipow(r, n), w, rtol=1e-9, atol=0)


class TestUnity:
    def test_n1(self):
        assert roots_of_unity(1) == [ONE]

    def test_n2_is_sign_group(self):
        assert roots_of_unity(2) == [ONE, J, -J, -ONE]

    def test_n3(self):
        u = roots_of_unity(3)
        assert len(u) == 9
        total = B(sum(v.z1 for v in u), sum(v.z2 for v in u))
        assert max(abs(total.z1), abs(total.z2)) < 1e-12
        prod = ONE
        for v in u:
            prod = prod * v
        assert close(prod, ONE, atol=1e-12)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_group_axioms(self, n):
        u = roots_of_unity(n)

        def member(x):
            return any(close(x, v, atol=1e-12) for v in u)

        assert member(ONE)
        for a in u:
            assert member(a.conjugate("j"))  # inverse on the sphere
            assert close(a * a.conjugate("j"), ONE, atol=1e-12)
            for b in u[:: max(1, n // 2)]:
                assert member(a * b)

    def test_sphere_membership(self):
        assert unit_dsphere_contains(I)
        assert not unit_dsphere_contains(E1)
        assert all(unit_dsphere_contains(v) for v in roots_of_unity(5))
        with pytest.raises(ValueError):
            unit_dsphere_contains(ONE, -1)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_chord_identity(self, n):
        u = roots_of_unity(n)
        idx = list(itertools.product(range(n), repeat=2))
        for (p, up), (qq, uq) in itertools.product(zip(idx, u), repeat=2):
            lhs = math.sqrt((abs(up.z1 - uq.z1) ** 2 + abs(up.z2 - uq.z2) ** 2) / 2)
            assert abs(lhs - chord_length(H(*p), H(*qq), n)) < 1e-10


class TestTorus:
    def test_examples(self):
        assert torus_coordinates(ONE) == (0.0, 0.0)
        t1, t2 = torus_coordinates(I)
        assert math.isclose(t1, PI / 2) and math.isclose(t2, PI / 2)
        assert torus_coordinates(J) == (0.0, PI)
        assert torus_coordinates(-I) == (3 * PI / 2, 3 * PI / 2)
        with pytest.raises(NotOnSphere):
            torus_coordinates(2 * ONE)

    @given(st.floats(0, 2 * PI, exclude_max=True), st.floats(0, 2 * PI, exclude_max=True))
    def test_inverse_of_exponential(self, t1, t2):
        w = B(cmath.exp(1j * t1), cmath.exp(1j * t2))
        s1, s2 = torus_coordinates(w)
        assert 0 <= s1 < 2 * PI and 0 <= s2 < 2 * PI
        assert close(B(cmath.exp(1j * s1), cmath.exp(1j * s2)), w)


class TestToroid:
    @pytest.mark.parametrize("n", [3, 4, 5, 8])
    def test_combinatorics(self, n):
        mesh = toroid_mesh(n)
        assert len(mesh.vertices) == n * n
        assert len(mesh.edges) == 2 * n * n
        assert len(mesh.faces) == n * n
        assert mesh.euler_characteristic == 0
        assert set(mesh.vertex_degrees()) == {4}
        assert set(mesh.face_edge_counts()) == {4}
        assert len({frozenset(e) for e in mesh.edges}) == len(mesh.edges)

    def test_vertices_on_torus(self):
        R, r = 3.0, 0.5
        mesh = toroid_mesh(4, R, r)
        for x, y, z in mesh.vertices:
            assert abs((math.hypot(x, y) - R) ** 2 + z * z - r * r) < 1e-12
        assert mesh.vertices[0] == (R + r, 0.0, 0.0)

    def test_bad_parameters(self):
        with pytest.raises(BadParameters):
            toroid_mesh(2)
        with pytest.raises(BadParameters):
            toroid_mesh(3, R=1.0, r=1.0)
        with pytest.raises(BadParameters):
            toroid_mesh(3, R=2.0, r=0.0)

    def test_obj_export(self):
        text = toroid_mesh(3).to_obj()
        lines = text.splitlines()
        assert sum(1 for ln in lines if ln.startswith("v ")) == 9
        assert sum(1 for ln in lines if ln.startswith("l ")) == 18
        faces = [ln for ln in lines if ln.startswith("f ")]
        assert len(faces) == 9 and all(len(f.split()) == 5 for f in faces)
        indices = [int(i) for f in faces for i in f.split()[1:]]
        assert min(indices) == 1 and max(indices) == 9
        assert text == toroid_mesh(3).to_obj()

    def test_json_export(self):
        data = json.loads(toroid_mesh(4).to_json())
        assert data["schema_version"] == 1
        assert len(data["vertices"]) == 16 and len(data["faces"]) == 16
