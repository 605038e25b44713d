"""Exact ladder-operator algebra for the one-dimensional parabolic potential barrier."""

from .poly import PolyC, hermite_ppb, hermite_ppb_rodrigues
from .scalar import ExactScalar
from .states import (
    EigenReport,
    PhasePolyFunction,
    apply_hamiltonian,
    apply_ladder,
    apply_number,
    eigen_check,
    nth_state_ladder,
    nth_state_poly,
    parity,
    proportionality_scalar,
    standard_state,
    time_reverse,
)

__version__ = "0.1.0"
