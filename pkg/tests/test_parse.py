import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bctk.bicomplex import J, Bicomplex, format_cartesian, format_idempotent
from bctk.errors import ParseError
from bctk.parse import parse_literal

B = Bicomplex


def _random_values(count: int, seed: int) -> list[Bicomplex]:
    rng = np.random.default_rng(seed)
    mags = 10.0 ** rng.uniform(-8, 8, size=(count, 4))
    signs = rng.choice([-1.0, 1.0], size=(count, 4))
    vals = mags * signs
    vals[rng.random((count, 4)) < 0.1] = 0.0
    return [B(complex(a, b), complex(c, d)) for a, b, c, d in vals]


class TestExamples:
    def test_cartesian(self):
        assert parse_literal("1+2i-3j+0.5k").cartesian == (1, 2, -3, 0.5)

    def test_idempotent(self):
        assert parse_literal("[1+0i, -1+0i]e") == J

    def test_bad_sign_offset(self):
        with pytest.raises(ParseError) as exc:
            parse_literal("1++i")
        assert exc.value.position == 2
        assert "offset 2" in str(exc.value)

    @pytest.mark.parametrize(
        "text,cart",
        [
            ("-k", (0, 0, 0, -1)),
            ("2.5", (2.5, 0, 0, 0)),
            (" 3 j - i ", (0, -1, 3, 0)),
            ("1e3i+.5", (0.5, 1000, 0, 0)),
            ("+j+k", (0, 0, 1, 1)),
            ("4.", (4, 0, 0, 0)),
        ],
    )
    def test_cartesian_variants(self, text, cart):
        assert parse_literal(text).cartesian == cart

    def test_idempotent_variants(self):
        assert parse_literal("[ 2 , -i ] e") == B(2, -1j)
        assert parse_literal("[i+3,0]e") == B(3 + 1j, 0)

    @pytest.mark.parametrize(
        "text,pos",
        [
            ("", 0),
            ("1+", 2),
            ("1 2", 2),
            ("i+i", 2),
            ("[1, 2]", 6),
            ("[1 2]e", 3),
            ("[1+j, 2]e", 3),
            ("1+2ix", 4),
            ("1+2", 2),
            ("1e999", 0),
            ("[1, 2]e x", 8),
        ],
    )
    def test_errors_report_position(self, text, pos):
        with pytest.raises(ParseError) as exc:
            parse_literal(text)
        assert exc.value.position == pos

    def test_non_string(self):
        with pytest.raises(TypeError):
            parse_literal(3.0)


class TestTotality:
    @settings(max_examples=500)
    @given(st.text())
    def test_arbitrary_text(self, text):
        try:
            assert isinstance(parse_literal(text), Bicomplex)
        except ParseError as exc:
            assert 0 <= exc.position <= len(text)

    @settings(max_examples=1000)
    @given(st.text(alphabet="0123456789.+-eEijk[], ", max_size=20))
    def test_grammar_alphabet(self, text):
        try:
            w = parse_literal(text)
        except ParseError as exc:
            assert 0 <= exc.position <= len(text)
        else:
            assert all(math.isfinite(x) for x in w.cartesian)


class TestRoundTrip:
    def test_idempotent_is_exact(self):
        for w in _random_values(1000, seed=1):
            s = format_idempotent(w)
            v = parse_literal(s)
            assert v == w
            assert format_idempotent(v) == s

    def test_cartesian_within_ulps(self):
        for w in _random_values(1000, seed=2):
            v = parse_literal(format_cartesian(w))
            # converting between bases rounds; the error is a few ulps of the larger part
            for x, y in ((v.z1, w.z1), (v.z2, w.z2)):
                scale = max(abs(w.z1), abs(w.z2))
                assert abs(x - y) <= 4 * math.ulp(scale)
            again = parse_literal(format_cartesian(v))
            assert max(abs(again.z1 - v.z1), abs(again.z2 - v.z2)) <= 4 * math.ulp(max(abs(v.z1), abs(v.z2)))

    @given(st.tuples(*[st.floats(-1e6, 1e6)] * 4))
    def test_cartesian_coefficients_are_exact(self, cart):
        text = "{!r}+{!r}i+{!r}j+{!r}k".format(*cart).replace("+-", "-")
        w = parse_literal(text)
        assert w == B.from_cartesian(*cart)
