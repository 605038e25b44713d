"""Dense polynomials in xi over Q(i, sqrt 2), and the barrier polynomials.

The barrier polynomials are

    H^{+-}_n(xi) = (-+ i)^n exp(-+ i xi^2) d^n/dxi^n exp(+- i xi^2)

built either by the first-order recurrence

    H_0 = 1,  H_{n+1} = 2 xi H_n -+ i H_n'

or directly from the derivative formula (:func:`hermite_ppb_rodrigues`),
which is kept as an independent check on the recurrence.
"""

from __future__ import annotations

import csv
import io
from typing import Iterable, Sequence

from .scalar import ONE, ZERO, I, ExactScalar, Number


def parse_sign(sign) -> int:
    if sign in (1, "+"):
        return 1
    if sign in (-1, "-"):
        return -1
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


class PolyC:
    """Immutable dense polynomial; ``coeffs[k]`` multiplies ``xi**k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [ExactScalar.coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("PolyC is immutable")

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> PolyC:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k: int) -> ExactScalar:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ZERO

    def __eq__(self, other):
        if isinstance(other, PolyC):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, ExactScalar)):
            return self.coeffs == PolyC([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, PolyC):
            try:
                other = PolyC([other])
            except TypeError:
                return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyC(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return PolyC(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, PolyC):
            other = PolyC([other])
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, PolyC):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        if not self.coeffs or not other.coeffs:
            return PolyC()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return PolyC(out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c: Number) -> PolyC:
        c = ExactScalar.coerce(c)
        return PolyC(c * a for a in self.coeffs)

    def shift(self, k: int = 1) -> PolyC:
        """Multiply by xi**k."""
        if not self.coeffs:
            return self
        return PolyC([ZERO] * k + list(self.coeffs))

    def differentiate(self) -> PolyC:
        return PolyC(k * c for k, c in enumerate(self.coeffs) if k)

    def reflect(self) -> PolyC:
        """Substitute xi -> -xi."""
        return PolyC(-c if k % 2 else c for k, c in enumerate(self.coeffs))

    def conjugate(self) -> PolyC:
        return PolyC(c.conjugate() for c in self.coeffs)

    def leading(self) -> ExactScalar:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __call__(self, x: Number) -> ExactScalar:
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"PolyC({list(self.coeffs)!r})"

    def __str__(self):
        return _render(self, "ξ", str)

    def latex(self, var: str = r"\xi") -> str:
        return _render(self, var, ExactScalar.latex)

    def to_json(self) -> list[dict[str, str]]:
        return [c.to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> PolyC:
        return cls(ExactScalar.from_json(c) for c in data)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["degree", "a_re", "a_im", "b_re", "b_im"])
        for k, c in enumerate(self.coeffs):
            writer.writerow([k, *c.to_json().values()])
        return buf.getvalue()


def _render(p: PolyC, var: str, fmt) -> str:
    if not p.coeffs:
        return "0"
    terms = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c.is_zero():
            continue
        s = fmt(c)
        compound = ("+" in s[1:] or "-" in s[1:]) and not c.is_rational()
        if compound:
            s = f"({s})"
        if k == 0:
            terms.append(s)
            continue
        if k == 1:
            mono = var
        elif "\\" in var:
            mono = f"{var}^{{{k}}}"
        else:
            mono = f"{var}^{k}"
        if s == "1":
            terms.append(mono)
        elif s == "-1":
            terms.append("-" + mono)
        else:
            terms.append(s + mono)
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def poly_add(p: PolyC, q: PolyC) -> PolyC:
    return p + q


def poly_mul(p: PolyC, q: PolyC) -> PolyC:
    return p * q


def poly_scale(p: PolyC, c: Number) -> PolyC:
    return p.scale(c)


def poly_differentiate(p: PolyC) -> PolyC:
    return p.differentiate()


def poly_reflect(p: PolyC) -> PolyC:
    return p.reflect()


XI = PolyC.monomial(1)


def hermite_step(h: PolyC, sign) -> PolyC:
    """One recurrence step: ``2 xi h -+ i h'``."""
    s = parse_sign(sign)
    return 2 * h.shift() + h.differentiate().scale(I * (-s))


def hermite_ppb(sign, n: int) -> PolyC:
    """Barrier polynomial H^{sign}_n by recurrence.

    >>> str(hermite_ppb("+", 2))
    '4ξ^2 - 2i'
    """
    return hermite_ppb_sequence(sign, n)[-1]


def hermite_ppb_sequence(sign, n_max: int) -> list[PolyC]:
    """``[H_0, ..., H_{n_max}]`` for one sign."""
    if n_max < 0:
        raise ValueError("n must be nonnegative")
    out = [PolyC([ONE])]
    for _ in range(n_max):
        out.append(hermite_step(out[-1], sign))
    return out


def hermite_ppb_rodrigues(sign, n: int) -> PolyC:
    """Barrier polynomial from the derivative formula.

    Differentiates ``exp(+- i xi^2)`` (phase rate +-2) ``n`` times inside the
    phase-polynomial family, drops the phase and multiplies by ``(-+ i)^n``.
    """
    from .states import PhasePolyFunction, differentiate

    if n < 0:
        raise ValueError("n must be nonnegative")
    s = parse_sign(sign)
    f = PhasePolyFunction(2 * s, PolyC([ONE]))
    for _ in range(n):
        f = differentiate(f)
    return f.poly.scale((I * (-s)) ** n)
