"""Heisenberg-picture evolution of observables linear in x and p.

Time enters through ``lam = exp(gamma t)``.  For rational ``lam`` the
hyperbolic functions

    cosh = (lam + 1/lam) / 2,   sinh = (lam - 1/lam) / 2

are rational too, so evolution stays exact.  A float mode carrying
``gamma t`` directly exists for finite-difference rate checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .poly import parse_sign
from .scalar import INV_SQRT2, ZERO, I, ExactScalar, parse_rational


@dataclass(frozen=True)
class LinearObservable:
    """``c_x * x + c_p * p``."""

    c_x: ExactScalar = ZERO
    c_p: ExactScalar = ZERO

    def __post_init__(self):
        object.__setattr__(self, "c_x", ExactScalar.coerce(self.c_x))
        object.__setattr__(self, "c_p", ExactScalar.coerce(self.c_p))

    def __add__(self, other):
        if not isinstance(other, LinearObservable):
            return NotImplemented
        return LinearObservable(self.c_x + other.c_x, self.c_p + other.c_p)

    def __neg__(self):
        return LinearObservable(-self.c_x, -self.c_p)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        try:
            c = ExactScalar.coerce(c)
        except TypeError:
            return NotImplemented
        return LinearObservable(c * self.c_x, c * self.c_p)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.c_x.is_zero() and self.c_p.is_zero()

    def to_json(self) -> dict:
        return {"c_x": self.c_x.to_json(), "c_p": self.c_p.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> LinearObservable:
        return cls(ExactScalar.from_json(data["c_x"]), ExactScalar.from_json(data["c_p"]))

    def __str__(self):
        return f"({self.c_x})x + ({self.c_p})p"


X = LinearObservable(1, 0)
P = LinearObservable(0, 1)


def ladder_observable(sign) -> LinearObservable:
    """``b+- = (x +- p) / sqrt 2``."""
    s = parse_sign(sign)
    return LinearObservable(INV_SQRT2, INV_SQRT2 * s)


@dataclass(frozen=True)
class EvolutionParameter:
    """Either an exact ``lam = exp(gamma t)`` or a float ``gamma_t``."""

    lam: Optional[Fraction] = None
    gamma_t: Optional[float] = None

    def __post_init__(self):
        if (self.lam is None) == (self.gamma_t is None):
            raise ValueError("give exactly one of lam or gamma_t")
        if self.lam is not None:
            lam = parse_rational(self.lam)
            if lam <= 0:
                raise ValueError(f"lambda must be positive, got {lam}")
            object.__setattr__(self, "lam", lam)

    @classmethod
    def exact(cls, lam) -> EvolutionParameter:
        return cls(lam=lam)

    @classmethod
    def at_time(cls, gamma_t: float) -> EvolutionParameter:
        return cls(gamma_t=float(gamma_t))

    @property
    def is_exact(self) -> bool:
        return self.lam is not None

    def hyperbolic(self) -> tuple[Fraction, Fraction]:
        lam = self.lam
        return (lam + 1 / lam) / 2, (lam - 1 / lam) / 2


def evolve(obs: LinearObservable, param: EvolutionParameter) -> LinearObservable:
    """``x -> x cosh + p sinh``, ``p -> x sinh + p cosh`` (exact mode)."""
    if not param.is_exact:
        raise ValueError("exact evolve needs a rational lambda; use evolve_float")
    ch, sh = param.hyperbolic()
    return LinearObservable(ch * obs.c_x + sh * obs.c_p, sh * obs.c_x + ch * obs.c_p)


def evolve_float(obs: LinearObservable, gamma_t: float) -> tuple[complex, complex]:
    from .numeric import to_complex

    ch, sh = math.cosh(gamma_t), math.sinh(gamma_t)
    cx, cp = to_complex(obs.c_x), to_complex(obs.c_p)
    return ch * cx + sh * cp, sh * cx + ch * cp


def commutator_scalar(a: LinearObservable, b: LinearObservable) -> ExactScalar:
    """``[a, b] = i (a_x b_p - a_p b_x)`` from ``[x, p] = i``."""
    return I * (a.c_x * b.c_p - a.c_p * b.c_x)


def fd_rate(obs: LinearObservable, step: float = 1e-5, t: float = 0.0) -> tuple[complex, complex]:
    """Central-difference d/dt of the evolved coefficients at ``gamma t = t``."""
    fwd = evolve_float(obs, t + step)
    bwd = evolve_float(obs, t - step)
    return tuple((a - b) / (2 * step) for a, b in zip(fwd, bwd))


def heisenberg_rate_check(sign, step: float = 1e-5, tol: float = 1e-8,
                          obs: Optional[LinearObservable] = None) -> bool:
    """``d b+-/dt = +- b+-`` at t = 0, by central differences."""
    from .numeric import to_complex

    s = parse_sign(sign)
    obs = ladder_observable(s) if obs is None else obs
    rate = fd_rate(obs, step)
    target = (s * to_complex(obs.c_x), s * to_complex(obs.c_p))
    return all(abs(r - e) <= tol for r, e in zip(rate, target))


def velocity_check(step: float = 1e-5, tol: float = 1e-8, t: float = 0.0) -> bool:
    """``p(t) = dx(t)/dt`` (m = 1) by central differences."""
    rate = fd_rate(X, step, t)
    p_t = evolve_float(P, t)
    return all(abs(r - e) <= tol for r, e in zip(rate, p_t))
