"""2x2 realization of the anticommuting pair d+, d-.

    {d+, d-} = 1,  {d+, d+} = 0,  {d-, d-} = 0,  N = (i/2) [d+, d-]

The representation ``d+ = [[0, 1], [0, 0]]``, ``d- = [[0, 0], [1, 0]]`` is
the smallest one carrying these relations.  It realizes the algebra only:
nilpotent matrices cannot also be self-adjoint.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .scalar import ONE, ZERO, I, ExactScalar, Number


class NotTriangularError(ValueError):
    pass


class Matrix2:
    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[Number]):
        es = tuple(ExactScalar.coerce(e) for e in entries)
        if len(es) != 4:
            raise ValueError("Matrix2 needs four entries (row-major)")
        object.__setattr__(self, "entries", es)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix2 is immutable")

    @classmethod
    def rows(cls, r0, r1) -> Matrix2:
        return cls((*r0, *r1))

    def __getitem__(self, ij: tuple[int, int]) -> ExactScalar:
        i, j = ij
        return self.entries[2 * i + j]

    def __eq__(self, other):
        if not isinstance(other, Matrix2):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other):
        if not isinstance(other, Matrix2):
            return NotImplemented
        return Matrix2(a + b for a, b in zip(self.entries, other.entries))

    def __neg__(self):
        return Matrix2(-a for a in self.entries)

    def __sub__(self, other):
        return self + (-other)

    def __matmul__(self, other):
        if not isinstance(other, Matrix2):
            return NotImplemented
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return Matrix2((a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h))

    def scale(self, c: Number) -> Matrix2:
        c = ExactScalar.coerce(c)
        return Matrix2(c * a for a in self.entries)

    def trace(self) -> ExactScalar:
        return self.entries[0] + self.entries[3]

    def to_json(self) -> list[list[dict]]:
        e = [x.to_json() for x in self.entries]
        return [e[:2], e[2:]]

    def __repr__(self):
        a, b, c, d = (str(x) for x in self.entries)
        return f"Matrix2([[{a}, {b}], [{c}, {d}]])"


IDENTITY = Matrix2((ONE, ZERO, ZERO, ONE))
ZERO2 = Matrix2((ZERO,) * 4)


def mat_mul(a: Matrix2, b: Matrix2) -> Matrix2:
    return a @ b


def mat_add(a: Matrix2, b: Matrix2) -> Matrix2:
    return a + b


def mat_scale(a: Matrix2, c: Number) -> Matrix2:
    return a.scale(c)


def anticommutator(a: Matrix2, b: Matrix2) -> Matrix2:
    return a @ b + b @ a


def commutator(a: Matrix2, b: Matrix2) -> Matrix2:
    return a @ b - b @ a


def d_plus() -> Matrix2:
    return Matrix2((0, 1, 0, 0))


def d_minus() -> Matrix2:
    return Matrix2((0, 0, 1, 0))


def fermionic_number() -> Matrix2:
    """``(i/2) [d+, d-]``, which is ``diag(i/2, -i/2)``."""
    return commutator(d_plus(), d_minus()).scale(I * Fraction(1, 2))


def eigenvalues_triangular(m: Matrix2) -> tuple[ExactScalar, ExactScalar]:
    """Diagonal of a triangular matrix; general 2x2 spectra are out of reach exactly."""
    if not (m[0, 1].is_zero() or m[1, 0].is_zero()):
        raise NotTriangularError("matrix is neither upper nor lower triangular")
    return m[0, 0], m[1, 1]
