"""The verification suite behind ``ppbarrier verify``.

Every check is recorded as ``{"check", "equation", "status", "detail"}``;
the ``equation`` field holds the identity being tested in plain text.
Exceptions raised inside a check are recorded as failures rather than
propagated, so a broken operator still yields a complete report.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .. import fermionic, heisenberg, numeric, poly, states
from ..scalar import INV_SQRT2, I

SIGNS = (1, -1)
COMMUTATOR_POWER_MAX = 8
NUMERIC_N_MAX = 5
LAMBDAS = (Fraction(2), Fraction(1, 3), Fraction(7, 5), Fraction(11, 2), Fraction(1))


def _s(sign: int) -> str:
    return "+" if sign > 0 else "-"


@dataclass
class VerifyReport:
    entries: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(e["status"] == "pass" for e in self.entries)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def failures(self) -> list:
        return [e for e in self.entries if e["status"] != "pass"]

    def record(self, check: str, equation: str, passed: bool, detail: str = "") -> None:
        self.entries.append({
            "check": check,
            "equation": equation,
            "status": "pass" if passed else "fail",
            "detail": detail,
        })

    def run(self, check: str, equation: str, fn) -> None:
        try:
            result = fn()
        except Exception as exc:  # a failing check must not abort the suite
            self.record(check, equation, False, f"{type(exc).__name__}: {exc}")
            return
        if isinstance(result, tuple):
            passed, detail = result
        else:
            passed, detail = bool(result), ""
        self.record(check, equation, passed, detail)

    def to_json(self) -> str:
        return json.dumps(self.entries, indent=2)


def _standard_states(report: VerifyReport) -> None:
    for s in SIGNS:
        u0 = states.standard_state(s)
        report.run(f"annihilation[{_s(s)}]", f"b{_s(-s)} u{_s(s)}0 = 0",
                   lambda: states.apply_ladder(-s, u0).is_zero())
        report.run(f"standard_number[{_s(s)}]", f"N u{_s(s)}0 = {_s(s)}(i/2) u{_s(s)}0",
                   lambda: states.apply_number(u0) == u0 * (I * Fraction(s, 2)))
        report.run(f"raise_standard[{_s(s)}]", f"b{_s(s)} u{_s(s)}0 = sqrt2 xi u{_s(s)}0",
                   lambda: states.apply_ladder(s, u0) == u0.times_xi() * (2 * INV_SQRT2))
        report.run(f"ladder_commutator_u0[{_s(s)}]", "[b+, b-] f = -i f",
                   lambda: states.ladder_commutator(u0) == u0 * (-I))


def _eigen(report: VerifyReport, max_n: int) -> None:
    for s in SIGNS:
        for n in range(max_n + 1):
            f = states.nth_state_ladder(s, n)

            def number_check(f=f, n=n):
                rep = states.eigen_check(f, "number")
                want = states.eigenvalue_number(s, n)
                return rep.is_eigen and rep.eigenvalue == want, f"got {rep.eigenvalue}, want {want}"

            def energy_check(f=f, n=n):
                rep = states.eigen_check(f, "hamiltonian")
                want = I * (-s * Fraction(2 * n + 1, 2))
                return rep.is_eigen and rep.eigenvalue == want, f"got {rep.eigenvalue}, want {want}"

            report.run(f"number_eigenvalue[{_s(s)},{n}]",
                       f"N (b{_s(s)})^n u{_s(s)}0 = {_s(s)}i(n+1/2) (b{_s(s)})^n u{_s(s)}0", number_check)
            report.run(f"energy_eigenvalue[{_s(s)},{n}]",
                       f"H u{_s(s)}n = {_s(-s)}i(n+1/2) u{_s(s)}n", energy_check)


def _constructions(report: VerifyReport, max_n: int) -> None:
    for s in SIGNS:
        rec = poly.hermite_ppb_sequence(s, max_n)
        for n in range(max_n + 1):
            def rodrigues(n=n):
                rod = poly.hermite_ppb_rodrigues(s, n)
                return rec[n] == rod, f"recurrence {rec[n]} vs rodrigues {rod}"

            def ladder_vs_poly(n=n):
                c = states.proportionality_scalar(states.nth_state_ladder(s, n), states.nth_state_poly(s, n))
                want = INV_SQRT2 ** n
                return c == want, f"ratio {c}, want {want}"

            report.run(f"recurrence_vs_rodrigues[{_s(s)},{n}]",
                       f"H{_s(s)}n = ({_s(-s)}i)^n exp({_s(-s)}i xi^2) d^n/dxi^n exp({_s(s)}i xi^2)",
                       rodrigues)
            report.run(f"ladder_vs_poly[{_s(s)},{n}]",
                       f"(b{_s(s)})^n u{_s(s)}0 = (1/sqrt2)^n H{_s(s)}n exp({_s(s)}i xi^2/2)",
                       ladder_vs_poly)
        report.run(f"conjugate_symmetry[{_s(s)}]", "H-n = conj(H+n)",
                   lambda: all(p.conjugate() == q for p, q in
                               zip(poly.hermite_ppb_sequence(s, max_n), poly.hermite_ppb_sequence(-s, max_n))))


def _commutators(report: VerifyReport, max_n: int) -> None:
    for s in SIGNS:
        for n in range(max_n + 1):
            u = states.nth_state_poly(s, n)
            report.run(f"ladder_commutator[{_s(s)},{n}]", "[b+, b-] f = -i f",
                       lambda u=u: states.ladder_commutator(u) == u * (-I))
        for k in range(1, min(max_n, COMMUTATOR_POWER_MAX) + 1):
            for m in range(min(max_n, COMMUTATOR_POWER_MAX) + 1):
                probe = states.nth_state_poly(s, m)
                report.run(f"power_commutator[{_s(s)},k={k},u{_s(s)}{m}]",
                           f"[b{_s(-s)}, (b{_s(s)})^k] = {_s(s)}ik (b{_s(s)})^(k-1)",
                           lambda k=k, probe=probe: states.commutator_identity_check(k, s, probe))


def _symmetries(report: VerifyReport, max_n: int) -> None:
    for s in SIGNS:
        for n in range(max_n + 1):
            u = states.nth_state_poly(s, n)
            report.run(f"parity[{_s(s)},{n}]", f"Pi u{_s(s)}n = (-1)^n u{_s(s)}n",
                       lambda u=u, n=n: states.parity(u) == u * (-1) ** n)
            report.run(f"time_reversal[{_s(s)},{n}]", f"Theta u{_s(s)}n = u{_s(-s)}n",
                       lambda u=u, n=n: states.time_reverse(u) == states.nth_state_poly(-s, n))
            report.run(f"ladder_parity[{_s(s)},{n}]", f"Pi (b{_s(s)})^n u{_s(s)}0 = (-1)^n (b{_s(s)})^n u{_s(s)}0",
                       lambda n=n: states.parity(states.nth_state_ladder(s, n))
                       == states.nth_state_ladder(s, n) * (-1) ** n)
            report.run(f"ladder_time_reversal[{_s(s)},{n}]",
                       f"Theta (b{_s(s)})^n u{_s(s)}0 = (b{_s(-s)})^n u{_s(-s)}0",
                       lambda n=n: states.time_reverse(states.nth_state_ladder(s, n))
                       == states.nth_state_ladder(-s, n))


def _heisenberg(report: VerifyReport) -> None:
    H = heisenberg
    for s in SIGNS:
        b = H.ladder_observable(s)
        report.run(f"eigen_evolution[{_s(s)}]", f"b{_s(s)}(t) = b{_s(s)} exp({_s(s)}gamma t)",
                   lambda b=b: all(H.evolve(b, H.EvolutionParameter.exact(lam)) == b * lam ** s
                                   for lam in LAMBDAS))
        report.run(f"rate[{_s(s)}]", f"d b{_s(s)}/dt = {_s(s)}gamma b{_s(s)}",
                   lambda s=s: H.heisenberg_rate_check(s))
    report.run("ladder_observable_commutator", "[b+, b-] = -i",
               lambda: H.commutator_scalar(H.ladder_observable(1), H.ladder_observable(-1)) == -I)
    report.run("canonical_invariance", "[x(t), p(t)] = i",
               lambda: all(H.commutator_scalar(H.evolve(H.X, p), H.evolve(H.P, p)) == I
                           for p in map(H.EvolutionParameter.exact, LAMBDAS)))
    report.run("group_law", "U(l1) U(l2) = U(l1 l2)",
               lambda: all(H.evolve(H.evolve(H.X, H.EvolutionParameter.exact(a)), H.EvolutionParameter.exact(b))
                           == H.evolve(H.X, H.EvolutionParameter.exact(a * b))
                           for a in LAMBDAS for b in LAMBDAS))
    report.run("velocity", "p(t) = m dx(t)/dt", lambda: H.velocity_check() and H.velocity_check(t=0.7))


def _fermionic(report: VerifyReport) -> None:
    F = fermionic
    dp, dm = F.d_plus(), F.d_minus()
    report.run("anticommutator_pm", "{d+, d-} = 1", lambda: F.anticommutator(dp, dm) == F.IDENTITY)
    report.run("anticommutator_pp", "{d+, d+} = 0", lambda: F.anticommutator(dp, dp) == F.ZERO2)
    report.run("anticommutator_mm", "{d-, d-} = 0", lambda: F.anticommutator(dm, dm) == F.ZERO2)

    def spectrum():
        ev = F.eigenvalues_triangular(F.fermionic_number())
        want = (I * Fraction(1, 2), I * Fraction(-1, 2))
        return set(ev) == set(want), f"eigenvalues {[str(e) for e in ev]}"

    report.run("fermionic_spectrum", "N = (i/2)[d+, d-] has eigenvalues {i/2, -i/2}", spectrum)
    report.run("fermionic_number_ladder", "[N, d+-] = +-i d+-",
               lambda: F.commutator(F.fermionic_number(), dp) == dp.scale(I)
               and F.commutator(F.fermionic_number(), dm) == dm.scale(-I))


def _numeric(report: VerifyReport, max_n: int, grid: numeric.GridSpec) -> None:
    for s in SIGNS:
        for n in range(min(max_n, NUMERIC_N_MAX) + 1):
            tol = 1e-4 if n <= 2 else 1e-3

            def residual(n=n, tol=tol):
                r = numeric.eigen_residual(s, n, grid)
                return r < tol, f"residual {r:.3e} (tol {tol:g})"

            def order(n=n):
                q = numeric.convergence_ratio(s, n, grid)
                return 3.5 <= q <= 4.5, f"ratio {q:.4f}"

            def agreement(n=n):
                f = states.nth_state_ladder(s, n)
                r = numeric.exact_vs_fd_residual(f, grid)
                return r < tol, f"residual {r:.3e} (tol {tol:g})"

            report.run(f"fd_residual[{_s(s)},{n}]", f"(-d2/2 - xi^2/2) u{_s(s)}n = {_s(-s)}i(n+1/2) u{_s(s)}n",
                       residual)
            report.run(f"fd_order[{_s(s)},{n}]", "halving h divides the residual by ~4", order)
            report.run(f"fd_vs_ladder[{_s(s)},{n}]", "sampled exact H f = finite-difference H f", agreement)


def run_verify(max_n: int = 12, include_numeric: bool = True,
               grid: numeric.GridSpec | None = None) -> VerifyReport:
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    grid = numeric.GridSpec() if grid is None else grid
    report = VerifyReport()
    _standard_states(report)
    _eigen(report, max_n)
    _constructions(report, max_n)
    _commutators(report, max_n)
    _symmetries(report, max_n)
    _heisenberg(report)
    _fermionic(report)
    if include_numeric:
        _numeric(report, max_n, grid)
    return report
