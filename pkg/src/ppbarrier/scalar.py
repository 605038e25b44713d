"""Exact arithmetic in the field Q(i, sqrt 2).

An element is stored as ``(a_re + i a_im) + (b_re + i b_im) * sqrt(2)`` with
four arbitrary-precision rational components (``gmpy2.mpq`` when available,
otherwise :class:`fractions.Fraction`).  Both keep every component in lowest
terms with a positive denominator, so the representation is canonical and
equality is plain component comparison.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

Number = Union[int, Fraction, "ExactScalar"]

_KEYS = ("a_re", "a_im", "b_re", "b_im")


class ExactScalar:
    __slots__ = ("a_re", "a_im", "b_re", "b_im")

    def __init__(self, a_re=0, a_im=0, b_re=0, b_im=0):
        for key, value in zip(_KEYS, (a_re, a_im, b_re, b_im)):
            if not isinstance(value, (int, Rational)):
                raise TypeError(f"{key} must be an int or Fraction, got {type(value).__name__}")
            object.__setattr__(self, key, _Q(value))

    def __setattr__(self, name, value):
        raise AttributeError("ExactScalar is immutable")

    @classmethod
    def coerce(cls, value: Number) -> ExactScalar:
        if isinstance(value, ExactScalar):
            return value
        if isinstance(value, (int, Rational)):
            return cls(value)
        raise TypeError(f"cannot convert {type(value).__name__} to ExactScalar")

    # Gaussian-rational halves: x = A + B sqrt2
    def _parts(self):
        return (self.a_re, self.a_im), (self.b_re, self.b_im)

    @property
    def components(self) -> tuple:
        return (self.a_re, self.a_im, self.b_re, self.b_im)

    def is_zero(self) -> bool:
        return not (self.a_re or self.a_im or self.b_re or self.b_im)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        try:
            other = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        if not (self.a_im or self.b_re or self.b_im):
            return hash(self.a_re)
        return hash(self.components)

    def __add__(self, other):
        try:
            other = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return ExactScalar(
            self.a_re + other.a_re,
            self.a_im + other.a_im,
            self.b_re + other.b_re,
            self.b_im + other.b_im,
        )

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar(-self.a_re, -self.a_im, -self.b_re, -self.b_im)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            other = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        (a, b), (c, d) = self._parts()
        (e, f), (g, h) = other._parts()
        if not (c or d or g or h):
            re, im = _gmul(a, b, e, f)
            return ExactScalar(re, im)
        # (A + B r)(C + D r) = (AC + 2BD) + (AD + BC) r,  r = sqrt 2
        ac = _gmul(a, b, e, f)
        bd = _gmul(c, d, g, h)
        ad = _gmul(a, b, g, h)
        bc = _gmul(c, d, e, f)
        return ExactScalar(
            ac[0] + 2 * bd[0],
            ac[1] + 2 * bd[1],
            ad[0] + bc[0],
            ad[1] + bc[1],
        )

    __rmul__ = __mul__

    def conjugate(self) -> ExactScalar:
        """Complex conjugation; the sqrt 2 part is left alone."""
        return ExactScalar(self.a_re, -self.a_im, self.b_re, -self.b_im)

    def sqrt2_conjugate(self) -> ExactScalar:
        return ExactScalar(self.a_re, self.a_im, -self.b_re, -self.b_im)

    def inverse(self) -> ExactScalar:
        """Multiplicative inverse.

        Rationalizes over the sqrt 2 conjugate first, which leaves a Gaussian
        rational, then over the complex conjugate.
        """
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero ExactScalar")
        bar = self.sqrt2_conjugate()
        g = self * bar  # Gaussian rational, never zero since sqrt 2 is irrational
        norm = g.a_re * g.a_re + g.a_im * g.a_im
        return bar * ExactScalar(g.a_re / norm, -g.a_im / norm)

    def __truediv__(self, other):
        try:
            other = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return ExactScalar.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_rational(self) -> bool:
        return not (self.a_im or self.b_re or self.b_im)

    def to_json(self) -> dict[str, str]:
        return {key: _frac_str(value) for key, value in zip(_KEYS, self.components)}

    @classmethod
    def from_json(cls, data) -> ExactScalar:
        if isinstance(data, dict):
            values = [data[key] for key in _KEYS]
        else:
            values = list(data)
            if len(values) != 4:
                raise ValueError("expected four rational components")
        return cls(*(parse_rational(v) for v in values))

    def __repr__(self):
        return "ExactScalar({})".format(", ".join(f"{k}={_frac_str(v)}" for k, v in zip(_KEYS, self.components)))

    def __str__(self):
        terms = []
        gauss = _gauss_str(self.a_re, self.a_im)
        if gauss:
            terms.append(gauss)
        rad = _gauss_str(self.b_re, self.b_im)
        if rad:
            if rad == "1":
                terms.append("√2")
            elif rad == "-1":
                terms.append("-√2")
            elif self.b_re and self.b_im:
                terms.append(f"({rad})√2")
            else:
                terms.append(f"{rad}√2")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += t if t.startswith("-") else "+" + t
        return out

    def latex(self) -> str:
        return str(self).replace("√2", r"\sqrt{2}")


def _gmul(a, b, c, d):
    if not (b or d):
        return a * c, 0
    return a * c - b * d, a * d + b * c


def _frac_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _gauss_str(re: Fraction, im: Fraction) -> str:
    if not im:
        return str(re) if re else ""
    if im == 1:
        ims = "i"
    elif im == -1:
        ims = "-i"
    else:
        ims = f"{im}i"
    if not re:
        return ims
    if ims.startswith("-"):
        return f"{re}{ims}"
    return f"{re}+{ims}"


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; ints and Fractions pass through."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    s = str(text).strip()
    num, sep, den = s.partition("/")
    try:
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc


ZERO = ExactScalar()
ONE = ExactScalar(1)
I = ExactScalar(0, 1)
SQRT2 = ExactScalar(0, 0, 1)
INV_SQRT2 = ExactScalar(0, 0, Fraction(1, 2))


def add(x: Number, y: Number) -> ExactScalar:
    return ExactScalar.coerce(x) + y


def mul(x: Number, y: Number) -> ExactScalar:
    return ExactScalar.coerce(x) * y


def inverse(x: Number) -> ExactScalar:
    return ExactScalar.coerce(x).inverse()


def conjugate(x: Number) -> ExactScalar:
    return ExactScalar.coerce(x).conjugate()
