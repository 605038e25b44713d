import json
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from ppbarrier.poly import PolyC, hermite_ppb
from ppbarrier.scalar import INV_SQRT2, SQRT2, ZERO, I
from ppbarrier.states import (
    EigenReport,
    PhasePolyFunction,
    PhaseRateError,
    apply_hamiltonian,
    apply_ladder,
    apply_number,
    commutator_identity_check,
    differentiate,
    eigen_check,
    eigenvalue_energy,
    eigenvalue_number,
    ladder_commutator,
    nth_state_ladder,
    nth_state_poly,
    parity,
    proportionality_scalar,
    standard_state,
    time_reverse,
)
from strategies import family, nonzero_family, poly_to_sympy, rationals, sympy_equal, polys

xi_sym = sympy.Symbol("xi", real=True)
HALF = Fraction(1, 2)


def as_sympy(f: PhasePolyFunction):
    r = sympy.Rational(f.phase_rate.numerator, f.phase_rate.denominator)
    return poly_to_sympy(f.poly, xi_sym) * sympy.exp(sympy.I * r * xi_sym**2 / 2)


def sympy_ladder(sign: int, expr):
    return (xi_sym * expr - sign * sympy.I * sympy.diff(expr, xi_sym)) / sympy.sqrt(2)


def u(sign, n):
    return nth_state_poly(sign, n)


# --- family basics -------------------------------------------------------


def test_zero_function_is_canonical():
    z = PhasePolyFunction(1, PolyC())
    assert z.phase_rate == 0 and z == PhasePolyFunction.zero()
    assert (u("+", 1) - u("+", 1)) == PhasePolyFunction.zero()


def test_mixed_phase_rates_cannot_be_combined():
    with pytest.raises(PhaseRateError):
        standard_state("+") + standard_state("-")
    assert standard_state("+") + PhasePolyFunction.zero() == standard_state("+")


def test_json_roundtrip():
    f = nth_state_ladder("-", 3)
    data = json.loads(json.dumps(f.to_json()))
    assert list(data) == ["phase_rate", "coeffs"]
    assert data["phase_rate"] == "-1/1"
    assert PhasePolyFunction.from_json(data) == f


# --- standard states and differentiation ---------------------------------


@pytest.mark.parametrize("sign", [1, -1])
def test_standard_state(sign):
    f = standard_state(sign)
    assert f.phase_rate == sign and f.poly == PolyC([1])


def test_differentiate_examples():
    assert differentiate(standard_state("+")) == PhasePolyFunction(1, PolyC([0, I]))
    f = PhasePolyFunction(-1, PolyC([0, 1]))
    assert differentiate(f) == PhasePolyFunction(-1, PolyC([1, 0, -I]))
    assert differentiate(PhasePolyFunction.zero()).is_zero()


@settings(max_examples=40, deadline=None)
@given(rationals, polys)
def test_differentiate_matches_sympy(r, p):
    f = PhasePolyFunction(r, p)
    assert sympy_equal(as_sympy(differentiate(f)), sympy.diff(as_sympy(f), xi_sym))


# --- ladder, number, Hamiltonian -------------------------------------------


def test_ladder_examples():
    u0 = standard_state("+")
    assert apply_ladder("-", u0).is_zero()
    assert apply_ladder("-", standard_state("-")).is_zero() is False
    assert apply_ladder("+", standard_state("-")).is_zero()
    raised = apply_ladder("+", u0)
    assert raised == PhasePolyFunction(1, PolyC([0, SQRT2]))
    assert apply_ladder("-", raised) == u0 * I


@settings(max_examples=40, deadline=None)
@given(family, st.sampled_from([1, -1]))
def test_ladder_matches_sympy(f, sign):
    assert sympy_equal(as_sympy(apply_ladder(sign, f)), sympy_ladder(sign, as_sympy(f)))


@given(family, st.sampled_from([1, -1]))
def test_ladder_closed_form(f, sign):
    r = f.phase_rate
    closed = ((f.poly.shift() * (1 + sign * r)) + f.poly.differentiate() * (-sign * I)) * INV_SQRT2
    assert apply_ladder(sign, f) == PhasePolyFunction(r, closed)


def test_ladder_rejects_other_rates():
    with pytest.raises(PhaseRateError):
        apply_ladder("+", PhasePolyFunction(2, PolyC([1])))
    with pytest.raises(PhaseRateError):
        apply_number(PhasePolyFunction(Fraction(1, 2), PolyC([1])))


def test_number_examples():
    assert apply_number(standard_state("+")) == standard_state("+") * (I * HALF)
    assert apply_number(standard_state("-")) == standard_state("-") * (-I * HALF)
    f = PhasePolyFunction(1, PolyC([0, SQRT2]))
    assert apply_number(f) == f * (I * Fraction(3, 2))


def test_hamiltonian_examples():
    assert apply_hamiltonian(standard_state("+")) == standard_state("+") * (-I * HALF)
    assert apply_hamiltonian(standard_state("-")) == standard_state("-") * (I * HALF)
    assert apply_hamiltonian(u("+", 3)) == u("+", 3) * (-I * Fraction(7, 2))


@settings(max_examples=40, deadline=None)
@given(family)
def test_hamiltonian_is_coordinate_operator(f):
    # H = -(1/2) d^2/dxi^2 - (1/2) xi^2, checked symbolically
    g = as_sympy(f)
    want = -sympy.diff(g, xi_sym, 2) / 2 - xi_sym**2 * g / 2
    assert sympy_equal(as_sympy(apply_hamiltonian(f)), want)


# --- nth states -------------------------------------------------------------


def test_nth_state_examples():
    assert nth_state_ladder("+", 0) == standard_state("+")
    assert nth_state_ladder("+", 1) == PhasePolyFunction(1, PolyC([0, SQRT2]))
    assert nth_state_ladder("+", 2) == PhasePolyFunction(1, PolyC([-I, 0, 2]))
    assert nth_state_ladder("+", 2) == PhasePolyFunction(1, hermite_ppb("+", 2) * HALF)
    assert nth_state_poly("+", 1) == PhasePolyFunction(1, PolyC([0, 2]))
    assert nth_state_poly("-", 2) == PhasePolyFunction(-1, PolyC([2 * I, 0, 4]))
    assert proportionality_scalar(nth_state_ladder("+", 1), nth_state_poly("+", 1)) == INV_SQRT2


@pytest.mark.parametrize("sign", [1, -1])
def test_constructions_agree(sign):
    for n in range(13):
        c = proportionality_scalar(nth_state_ladder(sign, n), nth_state_poly(sign, n))
        assert c is not None and not c.is_zero()
        assert c == INV_SQRT2**n


def test_proportionality_examples():
    f = u("+", 2)
    assert proportionality_scalar(f * 2, f) == 2
    assert proportionality_scalar(PhasePolyFunction.zero(), f) == ZERO
    assert proportionality_scalar(u("+", 1), u("+", 0)) is None
    assert proportionality_scalar(u("-", 1), u("+", 1)) is None
    assert proportionality_scalar(u("+", 2) + u("+", 0), u("+", 2)) is None
    with pytest.raises(ZeroDivisionError):
        proportionality_scalar(f, PhasePolyFunction.zero())


@given(nonzero_family, st.builds(lambda a, b: a * I + b, rationals, rationals).filter(bool))
def test_proportionality_recovers_scalar(f, c):
    assert proportionality_scalar(f * c, f) == c


# --- eigenvalues --------------------------------------------------------------


@pytest.mark.parametrize("sign", [1, -1])
def test_eigenvalue_ladder(sign):
    for n in range(13):
        f = nth_state_ladder(sign, n)
        assert eigen_check(f, "number") == EigenReport(True, I * (sign * Fraction(2 * n + 1, 2)))
        assert eigen_check(f, "hamiltonian") == EigenReport(True, I * (-sign * Fraction(2 * n + 1, 2)))
        assert eigen_check(u(sign, n), "hamiltonian").eigenvalue == eigenvalue_energy(sign, n)
        assert eigen_check(u(sign, n), "number").eigenvalue == eigenvalue_number(sign, n)


def test_eigen_check_examples_and_errors():
    assert eigen_check(u("-", 4), "hamiltonian").eigenvalue == I * Fraction(9, 2)
    assert eigen_check(u("+", 2) + u("+", 0), "number") == EigenReport(False)
    with pytest.raises(ValueError):
        eigen_check(PhasePolyFunction.zero())
    with pytest.raises(ValueError):
        eigen_check(u("+", 0), "momentum")
    with pytest.raises(ValueError):
        EigenReport(True)


# --- commutators ------------------------------------------------------------------


@given(family)
def test_ladder_commutator_is_minus_i(f):
    assert ladder_commutator(f) == f * (-I)


@pytest.mark.parametrize("sign", [1, -1])
def test_power_commutator_on_basis(sign):
    for k in range(1, 9):
        for m in range(9):
            assert commutator_identity_check(k, sign, u(sign, m))


def test_power_commutator_examples():
    u0 = standard_state("+")
    assert commutator_identity_check(1, "+", u0)
    assert commutator_identity_check(2, "+", u0)
    lhs = apply_ladder("-", apply_ladder("+", apply_ladder("+", u0)))
    assert lhs == apply_ladder("+", u0) * (2 * I)
    assert commutator_identity_check(5, "-", PhasePolyFunction.zero())
    with pytest.raises(ValueError):
        commutator_identity_check(0, "+", u0)


@given(family, st.integers(min_value=1, max_value=4), st.sampled_from([1, -1]))
def test_power_commutator_on_random_members(f, k, sign):
    assert commutator_identity_check(k, sign, f)


@given(family, st.sampled_from([1, -1]))
def test_number_ladder_commutator(f, sign):
    # [N, b+-] = +- i b+-
    lhs = apply_number(apply_ladder(sign, f)) - apply_ladder(sign, apply_number(f))
    assert lhs == apply_ladder(sign, f) * (I * sign)


@given(st.sampled_from([1, -1]), rationals, polys)
def test_intertwining_identity(sign, r, p):
    # (-+ i d/dxi + xi) f == exp(-+ i xi^2/2) (-+ i d/dxi) (exp(+- i xi^2/2) f)
    f = PhasePolyFunction(r, p)
    lhs = differentiate(f) * (-sign * I) + f.times_xi()
    shifted = PhasePolyFunction(r + sign, p)
    rhs = (differentiate(shifted) * (-sign * I)).with_rate(r)
    assert lhs == rhs


# --- closure and symmetries ---------------------------------------------------------


@given(nonzero_family)
def test_family_closure(f):
    r = f.phase_rate
    for g in (apply_ladder("+", f), apply_ladder("-", f), apply_number(f), parity(f)):
        assert g.is_zero() or g.phase_rate == r
    assert time_reverse(f).phase_rate == -r


def test_parity_examples():
    assert parity(u("+", 0)) == u("+", 0)
    assert parity(u("+", 1)) == -u("+", 1)


def test_time_reverse_examples():
    assert time_reverse(u("+", 0)) == u("-", 0)


@pytest.mark.parametrize("sign", [1, -1])
def test_symmetries_on_states(sign):
    for n in range(13):
        assert parity(u(sign, n)) == u(sign, n) * (-1) ** n
        assert time_reverse(u(sign, n)) == u(-sign, n)
        assert time_reverse(nth_state_ladder(sign, n)) == nth_state_ladder(-sign, n)


@given(family)
def test_symmetries_are_involutions(f):
    assert parity(parity(f)) == f
    assert time_reverse(time_reverse(f)) == f


@given(family, st.sampled_from([1, -1]))
def test_symmetries_conjugate_ladders(f, sign):
    # Pi b Pi^-1 = -b ; Theta b+- Theta^-1 = b-+
    assert parity(apply_ladder(sign, parity(f))) == -apply_ladder(sign, f)
    assert time_reverse(apply_ladder(sign, time_reverse(f))) == apply_ladder(-sign, f)


def test_str():
    assert str(nth_state_ladder("+", 2)) == "(2ξ^2 - i)·e^{iξ²/2}"
    assert str(standard_state("-")) == "e^{-iξ²/2}"
    assert str(PhasePolyFunction.zero()) == "0"
