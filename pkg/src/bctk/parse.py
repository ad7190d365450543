"""Bicomplex literal parser.

Two grammars are accepted, with whitespace allowed between tokens::

    cartesian   := term (sign term)*                 e.g.  1+2i-3j+0.5k, -k, 2.5
    idempotent  := "[" complex "," complex "]" "e"   e.g.  [1+0i, -1+0i]e
    complex     := term (sign term)*                 units limited to i
    term        := [sign] (number [unit] | unit)

Each unit may appear at most once per sum; terms may come in any order.
"""

from __future__ import annotations

import re

from .bicomplex import Bicomplex
from .errors import ParseError

_NUMBER = re.compile(r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_UNITS = "ijk"


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, expected: str) -> ParseError:
        found = repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"
        return ParseError(f"expected {expected}, found {found}", self.pos, self.text)

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.fail(repr(ch))
        self.pos += 1

    def sign(self) -> int | None:
        ch = self.peek()
        if ch in ("+", "-"):
            self.pos += 1
            return 1 if ch == "+" else -1
        return None

    def number(self) -> float | None:
        self.skip_ws()
        m = _NUMBER.match(self.text, self.pos)
        if m is None:
            return None
        value = float(m.group())
        if value == float("inf"):
            raise ParseError(f"number {m.group()!r} overflows", self.pos, self.text)
        self.pos = m.end()
        return value


def _sum(sc: _Scanner, units: str, stop: str) -> dict[str, float]:
    """Parse ``term (sign term)*`` into coefficients keyed by unit ("" is the real part)."""
    coeffs: dict[str, float] = {}
    sign = sc.sign() or 1
    while True:
        start = sc.pos
        value = sc.number()
        unit = ""
        if sc.peek() and sc.peek() in units:
            unit = sc.peek()
            sc.pos += 1
        elif value is None:
            expected = "a number" + (f" or one of {', '.join(units)}" if units else "")
            raise sc.fail(expected)
        if unit in coeffs:
            raise ParseError(f"repeated {'real' if not unit else unit} term", start, sc.text)
        coeffs[unit] = sign * (1.0 if value is None else value)
        ch = sc.peek()
        if ch == "" or ch in stop:
            return coeffs
        sign = sc.sign()
        if sign is None:
            raise sc.fail("'+' or '-'" + (f" or {stop[0]!r}" if stop else " or end of input"))


def _complex(sc: _Scanner, stop: str) -> complex:
    c = _sum(sc, "i", stop)
    return complex(c.get("", 0.0), c.get("i", 0.0))


def parse_literal(text: str) -> Bicomplex:
    """Parse a Cartesian or idempotent bicomplex literal.

    Raises ParseError carrying the 0-based offset of the offending character.
    """
    if not isinstance(text, str):
        raise TypeError("literal must be a string")
    sc = _Scanner(text)
    if sc.peek() == "[":
        sc.pos += 1
        z1 = _complex(sc, ",")
        sc.expect(",")
        z2 = _complex(sc, "]")
        sc.expect("]")
        sc.expect("e")
        value = Bicomplex(z1, z2)
    else:
        c = _sum(sc, _UNITS, "")
        value = Bicomplex.from_cartesian(c.get("", 0.0), c.get("i", 0.0), c.get("j", 0.0), c.get("k", 0.0))
    if sc.peek() != "":
        raise sc.fail("end of input")
    return value
