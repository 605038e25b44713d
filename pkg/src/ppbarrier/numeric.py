"""Floating-point oracle: sample family members and apply the
coordinate-space Hamiltonian ``-(1/2) d^2/dxi^2 - (1/2) xi^2`` by central
differences.  Nothing here touches the ladder operators, so it checks the
exact algebra from the outside.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

import numpy as np

from .poly import parse_sign
from .scalar import ExactScalar
from .states import PhasePolyFunction, nth_state_poly

SQRT2_F = math.sqrt(2.0)

DEFAULT_XMIN = -4.0
DEFAULT_XMAX = 4.0
DEFAULT_POINTS = 8193


def to_complex(x: ExactScalar) -> complex:
    """Float image of an exact scalar; each rational component is correctly rounded."""
    x = ExactScalar.coerce(x)
    return complex(float(x.a_re), float(x.a_im)) + SQRT2_F * complex(float(x.b_re), float(x.b_im))


@dataclass(frozen=True)
class GridSpec:
    xmin: float = DEFAULT_XMIN
    xmax: float = DEFAULT_XMAX
    points: int = DEFAULT_POINTS

    def __post_init__(self):
        if not self.xmin < self.xmax:
            raise ValueError("xmin must be less than xmax")
        if self.points < 3:
            raise ValueError("a grid needs at least 3 points")

    @property
    def step(self) -> float:
        return (self.xmax - self.xmin) / (self.points - 1)

    def nodes(self) -> np.ndarray:
        return np.linspace(self.xmin, self.xmax, self.points)

    def refined(self) -> GridSpec:
        """Same interval, half the spacing."""
        return GridSpec(self.xmin, self.xmax, 2 * self.points - 1)


@dataclass(frozen=True)
class SampledFunction:
    grid: GridSpec
    values: np.ndarray

    def __post_init__(self):
        if len(self.values) != self.grid.points:
            raise ValueError("values length must equal grid.points")

    @property
    def nodes(self) -> np.ndarray:
        return self.grid.nodes()

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["xi", "re", "im", "abs2"])
        for x, v in zip(self.nodes, self.values):
            writer.writerow([repr(float(x)), repr(float(v.real)), repr(float(v.imag)), repr(float(abs(v) ** 2))])
        return buf.getvalue()


def evaluate(f: PhasePolyFunction, xi):
    xi = np.asarray(xi, dtype=float)
    acc = np.zeros_like(xi, dtype=complex)
    for c in reversed(f.poly.coeffs):
        acc = acc * xi + to_complex(c)
    return acc * np.exp(0.5j * float(f.phase_rate) * xi * xi)


def sample(f: PhasePolyFunction, grid: GridSpec = GridSpec()) -> SampledFunction:
    return SampledFunction(grid, evaluate(f, grid.nodes()))


def apply_hamiltonian_fd(s: SampledFunction) -> SampledFunction:
    """Central-difference Hamiltonian; endpoint values are NaN (not computed)."""
    g = s.grid
    if g.points < 3:
        raise ValueError("finite differences need at least 3 points")
    v = np.asarray(s.values, dtype=complex)
    x = g.nodes()
    out = np.full_like(v, np.nan + 1j * np.nan)
    d2 = (v[2:] - 2 * v[1:-1] + v[:-2]) / (g.step * g.step)
    out[1:-1] = -0.5 * d2 - 0.5 * x[1:-1] ** 2 * v[1:-1]
    return SampledFunction(g, out)


def relative_residual(a: np.ndarray, b: np.ndarray) -> float:
    """``||a - b|| / ||b||`` over interior nodes."""
    a, b = a[1:-1], b[1:-1]
    diff, ref = np.linalg.norm(a - b), np.linalg.norm(b)
    if ref == 0:
        return 0.0 if diff == 0 else math.inf
    return float(diff / ref)


def eigen_residual(sign, n: int, grid: GridSpec = GridSpec()) -> float:
    """Relative L2 norm of ``(H_fd - E_n) psi`` with ``E_n = -+ i (n + 1/2)``."""
    s = parse_sign(sign)
    psi = sample(nth_state_poly(s, n), grid)
    h_psi = apply_hamiltonian_fd(psi)
    energy = -1j * s * (n + 0.5)
    inner = slice(1, -1)
    diff = h_psi.values[inner] - energy * psi.values[inner]
    return float(np.linalg.norm(diff) / np.linalg.norm(psi.values[inner]))


def convergence_ratio(sign, n: int, grid: GridSpec = GridSpec()) -> float:
    """Residual on ``grid`` divided by residual with half the spacing."""
    return eigen_residual(sign, n, grid) / eigen_residual(sign, n, grid.refined())


def exact_vs_fd_residual(f: PhasePolyFunction, grid: GridSpec = GridSpec()) -> float:
    """Compare sampled exact ``H f`` with the finite-difference ``H`` of sampled ``f``."""
    from .states import apply_hamiltonian

    exact = sample(apply_hamiltonian(f), grid).values
    fd = apply_hamiltonian_fd(sample(f, grid)).values
    return relative_residual(fd, exact)
