"""Phase-polynomial functions ``P(xi) exp(i r xi^2 / 2)`` and the operators on them.

Units are hbar = m = gamma = 1, so xi = x and Hamiltonian eigenvalues come
out in units of hbar*gamma.  Representatives use unit numerical coefficients;
states built by the ladder and states built from the barrier polynomials
then differ by an exact scalar that :func:`proportionality_scalar` recovers.

The family is closed under d/dxi, multiplication by xi, the ladder operators
``b+- = (xi -+ i d/dxi) / sqrt 2``, parity and time reversal.  Superpositions
of different phase rates are not representable and adding them raises
:class:`PhaseRateError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .poly import PolyC, hermite_ppb, parse_sign
from .scalar import INV_SQRT2, ONE, ZERO, I, ExactScalar, Number, parse_rational


class PhaseRateError(ValueError):
    """Operation not defined for the phase rate(s) involved."""


class PhasePolyFunction:
    """``poly(xi) * exp(i * phase_rate * xi**2 / 2)``.

    The zero function always carries ``phase_rate == 0``.
    """

    __slots__ = ("phase_rate", "poly")

    def __init__(self, phase_rate: Number | Fraction, poly: PolyC | list = ()):
        if not isinstance(poly, PolyC):
            poly = PolyC(poly)
        rate = Fraction(phase_rate) if poly else Fraction(0)
        object.__setattr__(self, "phase_rate", rate)
        object.__setattr__(self, "poly", poly)

    def __setattr__(self, name, value):
        raise AttributeError("PhasePolyFunction is immutable")

    @classmethod
    def zero(cls) -> PhasePolyFunction:
        return cls(0, PolyC())

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def __eq__(self, other):
        if not isinstance(other, PhasePolyFunction):
            return NotImplemented
        return self.phase_rate == other.phase_rate and self.poly == other.poly

    def __hash__(self):
        return hash((self.phase_rate, self.poly))

    def _common_rate(self, other: PhasePolyFunction) -> Fraction:
        if self.is_zero():
            return other.phase_rate
        if other.is_zero() or self.phase_rate == other.phase_rate:
            return self.phase_rate
        raise PhaseRateError(
            f"cannot combine phase rates {self.phase_rate} and {other.phase_rate} in one function"
        )

    def __add__(self, other):
        if not isinstance(other, PhasePolyFunction):
            return NotImplemented
        rate = self._common_rate(other)
        return PhasePolyFunction(rate, self.poly + other.poly)

    def __neg__(self):
        return PhasePolyFunction(self.phase_rate, -self.poly)

    def __sub__(self, other):
        if not isinstance(other, PhasePolyFunction):
            return NotImplemented
        return self + (-other)

    def __mul__(self, c):
        if isinstance(c, PhasePolyFunction):
            return NotImplemented
        try:
            c = ExactScalar.coerce(c)
        except TypeError:
            return NotImplemented
        return PhasePolyFunction(self.phase_rate, self.poly.scale(c))

    __rmul__ = __mul__

    def times_xi(self) -> PhasePolyFunction:
        return PhasePolyFunction(self.phase_rate, self.poly.shift())

    def with_rate(self, rate) -> PhasePolyFunction:
        """Same polynomial, different phase rate (multiplies by a Gaussian phase)."""
        return PhasePolyFunction(rate, self.poly)

    def __call__(self, xi: float) -> complex:
        from .numeric import evaluate

        return complex(evaluate(self, xi))

    def to_json(self) -> dict:
        r = self.phase_rate
        return {
            "phase_rate": f"{r.numerator}/{r.denominator}",
            "coeffs": self.poly.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> PhasePolyFunction:
        return cls(parse_rational(data["phase_rate"]), PolyC.from_json(data["coeffs"]))

    def __repr__(self):
        return f"PhasePolyFunction({self.phase_rate!s}, {self.poly!r})"

    def __str__(self):
        if self.is_zero():
            return "0"
        p = str(self.poly)
        if len(self.poly.coeffs) > 1 or "+" in p[1:] or "-" in p[1:]:
            p = f"({p})"
        r = self.phase_rate
        if r == 0:
            return p
        if r == 1:
            ph = "e^{iξ²/2}"
        elif r == -1:
            ph = "e^{-iξ²/2}"
        else:
            ph = f"e^{{{r}iξ²/2}}"
        return ph if p == "1" else f"{p}·{ph}"


@dataclass(frozen=True)
class EigenReport:
    is_eigen: bool
    eigenvalue: Optional[ExactScalar] = None

    def __post_init__(self):
        if self.is_eigen != (self.eigenvalue is not None):
            raise ValueError("eigenvalue must be given exactly when is_eigen")


def standard_state(sign) -> PhasePolyFunction:
    """``u0 = exp(+- i xi^2/2)``, annihilated by the opposite ladder operator."""
    return PhasePolyFunction(parse_sign(sign), PolyC([ONE]))


def differentiate(f: PhasePolyFunction) -> PhasePolyFunction:
    """d/dxi of ``P exp(i r xi^2/2)`` is ``(P' + i r xi P) exp(i r xi^2/2)``."""
    r = f.phase_rate
    return PhasePolyFunction(r, f.poly.differentiate() + f.poly.shift().scale(I * r))


def _check_ladder_rate(f: PhasePolyFunction) -> None:
    if abs(f.phase_rate) not in (0, 1):
        raise PhaseRateError(f"ladder operators act on phase rates 0, +1, -1; got {f.phase_rate}")


def apply_ladder(sign, f: PhasePolyFunction) -> PhasePolyFunction:
    """``b+- f = (xi f -+ i f') / sqrt 2``."""
    _check_ladder_rate(f)
    s = parse_sign(sign)
    return (f.times_xi() + differentiate(f) * (I * (-s))) * INV_SQRT2


def apply_number(f: PhasePolyFunction) -> PhasePolyFunction:
    """``N = (b+ b- + b- b+) / 2``."""
    up_down = apply_ladder("+", apply_ladder("-", f))
    down_up = apply_ladder("-", apply_ladder("+", f))
    return (up_down + down_up) * Fraction(1, 2)


def apply_hamiltonian(f: PhasePolyFunction) -> PhasePolyFunction:
    """``H = -N`` in units of hbar*gamma."""
    return -apply_number(f)


def nth_state_ladder(sign, n: int) -> PhasePolyFunction:
    """``(b+-)^n u0+-``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    f = standard_state(sign)
    for _ in range(n):
        f = apply_ladder(sign, f)
    return f


def nth_state_poly(sign, n: int) -> PhasePolyFunction:
    """``H+-_n(xi) exp(+- i xi^2/2)`` with unit coefficient."""
    s = parse_sign(sign)
    return PhasePolyFunction(s, hermite_ppb(s, n))


def proportionality_scalar(f: PhasePolyFunction, g: PhasePolyFunction) -> Optional[ExactScalar]:
    """The scalar ``c`` with ``f == c * g``, or ``None`` when there is none."""
    if g.is_zero():
        raise ZeroDivisionError("proportionality against the zero function")
    if f.is_zero():
        return ZERO
    if f.phase_rate != g.phase_rate or f.poly.degree != g.poly.degree:
        return None
    c = f.poly.leading() / g.poly.leading()
    if f.poly != g.poly.scale(c):
        return None
    return c


_OPERATORS = {
    "number": lambda f: apply_number(f),
    "hamiltonian": lambda f: apply_hamiltonian(f),
}


def eigen_check(f: PhasePolyFunction, op: str = "hamiltonian") -> EigenReport:
    if f.is_zero():
        raise ValueError("eigen_check needs a nonzero function")
    try:
        apply = _OPERATORS[op]
    except KeyError:
        raise ValueError(f"unknown operator {op!r}; expected 'number' or 'hamiltonian'") from None
    c = proportionality_scalar(apply(f), f)
    if c is None:
        return EigenReport(False)
    return EigenReport(True, c)


def eigenvalue_number(sign, n: int) -> ExactScalar:
    """``+- i (n + 1/2)``."""
    return I * (parse_sign(sign) * Fraction(2 * n + 1, 2))


def eigenvalue_energy(sign, n: int) -> ExactScalar:
    """``E+-_n = -+ i (n + 1/2)`` in units of hbar*gamma."""
    return -eigenvalue_number(sign, n)


def parity(f: PhasePolyFunction) -> PhasePolyFunction:
    return PhasePolyFunction(f.phase_rate, f.poly.reflect())


def time_reverse(f: PhasePolyFunction) -> PhasePolyFunction:
    """Complex conjugation of the representative."""
    return PhasePolyFunction(-f.phase_rate, f.poly.conjugate())


def ladder_power(sign, n: int, f: PhasePolyFunction) -> PhasePolyFunction:
    for _ in range(n):
        f = apply_ladder(sign, f)
    return f


def commutator_identity_check(n: int, sign, probe: PhasePolyFunction) -> bool:
    """Check ``[b-+, (b+-)^n] probe == +- i n (b+-)^(n-1) probe`` exactly."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    s = parse_sign(sign)
    if probe.is_zero():
        return True
    lhs = apply_ladder(-s, ladder_power(s, n, probe)) - ladder_power(s, n, apply_ladder(-s, probe))
    rhs = ladder_power(s, n - 1, probe) * (I * (s * n))
    return lhs == rhs


def ladder_commutator(f: PhasePolyFunction) -> PhasePolyFunction:
    """``[b+, b-] f``."""
    return apply_ladder("+", apply_ladder("-", f)) - apply_ladder("-", apply_ladder("+", f))
