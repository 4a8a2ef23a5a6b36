"""Exact complex rationals."""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd

from ..errors import ModelError

_RAT_RE = re.compile(r"^(-?\d+)/(\d+)$")


class QQi:
    """A complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    def __add__(self, o: "QQi") -> "QQi":
        return QQi(self.re + o.re, self.im + o.im)

    def __sub__(self, o: "QQi") -> "QQi":
        return QQi(self.re - o.re, self.im - o.im)

    def __mul__(self, o: "QQi") -> "QQi":
        if not self.im and not o.im:
            return QQi(self.re * o.re)
        return QQi(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    def __neg__(self) -> "QQi":
        return QQi(-self.re, -self.im)

    def conjugate(self) -> "QQi":
        return QQi(self.re, -self.im)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, o) -> bool:
        if isinstance(o, QQi):
            return self.re == o.re and self.im == o.im
        if isinstance(o, (int, Fraction)):
            return self.im == 0 and self.re == o
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        if not self.im:
            return str(self.re)
        return f"({self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i)"

    def to_json(self) -> dict:
        return {"re": format_rational(self.re), "im": format_rational(self.im)}


ONE = QQi(1)
ZERO = QQi(0)


def parse_rational(s) -> Fraction:
    """Parse ``"p/q"`` with ``q > 0`` and ``gcd(p, q) = 1``."""
    if not isinstance(s, str):
        raise ModelError(f"malformed rational {s!r}: expected a string 'p/q'")
    m = _RAT_RE.match(s.strip())
    if m is None:
        raise ModelError(f"malformed rational {s!r}: expected 'p/q'")
    p, q = int(m.group(1)), int(m.group(2))
    if q <= 0:
        raise ModelError(f"malformed rational {s!r}: denominator must be positive")
    if gcd(p, q) != 1:
        raise ModelError(f"malformed rational {s!r}: not in lowest terms")
    return Fraction(p, q)


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_complex(obj) -> QQi:
    if not isinstance(obj, dict) or "re" not in obj:
        raise ModelError(f"malformed entry {obj!r}: expected {{'re': 'p/q', 'im': 'p/q'}}")
    return QQi(parse_rational(obj["re"]), parse_rational(obj.get("im", "0/1")))
