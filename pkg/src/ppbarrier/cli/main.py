"""``ppbarrier`` command line.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .. import fermionic, heisenberg, numeric, poly, states
from ..scalar import parse_rational
from .expression import ExpressionError, evaluate_expression
from .verify import run_verify

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _sign_arg(text: str) -> int:
    try:
        return poly.parse_sign(text)
    except ValueError:
        raise argparse.ArgumentTypeError("sign must be + or -") from None


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        n = -1
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return n


def _lambda_arg(text: str):
    try:
        lam = parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if lam <= 0:
        raise argparse.ArgumentTypeError("lambda must be positive")
    return lam


def _grid(args) -> numeric.GridSpec:
    return numeric.GridSpec(args.xmin, args.xmax, args.points)


def _dump(obj) -> None:
    print(json.dumps(obj, indent=2, ensure_ascii=False))


def latex_table(sign: int, n_max: int) -> str:
    label = "+" if sign > 0 else "-"
    lines = [r"\begin{tabular}{rl}", r"$n$ & $H^{%s}_n(\xi)$ \\" % label, r"\hline"]
    for n, p in enumerate(poly.hermite_ppb_sequence(sign, n_max)):
        lines.append(f"{n} & ${p.latex()}$ \\\\")
    lines.append(r"\end{tabular}")
    return "\n".join(lines)


def cmd_poly(args) -> int:
    p = poly.hermite_ppb(args.sign, args.n)
    if args.format == "csv":
        sys.stdout.write(p.to_csv())
    elif args.format == "latex":
        print(latex_table(args.sign, args.n))
    else:
        _dump({"sign": "+" if args.sign > 0 else "-", "n": args.n, "text": str(p), "coeffs": p.to_json()})
    return EXIT_OK


def cmd_state(args) -> int:
    grid = _grid(args)
    build = states.nth_state_ladder if args.ladder else states.nth_state_poly
    f = build(args.sign, args.n)
    if args.format == "csv":
        sys.stdout.write(numeric.sample(f, grid).to_csv())
        return EXIT_OK
    energy = states.eigenvalue_energy(args.sign, args.n)
    _dump({
        "sign": "+" if args.sign > 0 else "-",
        "n": args.n,
        "construction": "ladder" if args.ladder else "poly",
        "state": f.to_json(),
        "text": str(f),
        "energy": energy.to_json(),
        "energy_text": str(energy),
    })
    return EXIT_OK


def cmd_apply(args) -> int:
    grid = _grid(args)
    try:
        ev = evaluate_expression(" ".join(args.expression))
    except ExpressionError as exc:
        print(f"ppbarrier apply: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "csv":
        sys.stdout.write(numeric.sample(ev.result, grid).to_csv())
    else:
        _dump(ev.to_json())
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_verify(args.max_n, include_numeric=not args.no_numeric, grid=_grid(args))
    print(report.to_json())
    fails = report.failures()
    print(f"{len(report.entries) - len(fails)}/{len(report.entries)} checks passed", file=sys.stderr)
    return report.exit_code


_OBSERVABLES = {
    "x": heisenberg.X,
    "p": heisenberg.P,
    "b+": heisenberg.ladder_observable(1),
    "b-": heisenberg.ladder_observable(-1),
}


def cmd_evolve(args) -> int:
    param = heisenberg.EvolutionParameter.exact(args.lam)
    names = [args.observable] if args.observable else list(_OBSERVABLES)
    out = {"lambda": f"{param.lam.numerator}/{param.lam.denominator}"}
    for name in names:
        evolved = heisenberg.evolve(_OBSERVABLES[name], param)
        out[name] = {**evolved.to_json(), "text": str(evolved)}
    _dump(out)
    return EXIT_OK


def cmd_fermi(args) -> int:
    n_op = fermionic.fermionic_number()
    ev = fermionic.eigenvalues_triangular(n_op)
    _dump({
        "d_plus": fermionic.d_plus().to_json(),
        "d_minus": fermionic.d_minus().to_json(),
        "number": n_op.to_json(),
        "eigenvalues": [e.to_json() for e in ev],
        "eigenvalues_text": [str(e) for e in ev],
    })
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ppbarrier",
                                 description="Exact ladder-operator algebra of the parabolic potential barrier.")
    sub = ap.add_subparsers(dest="command", required=True)

    def grid_flags(p):
        p.add_argument("--xmin", type=float, default=numeric.DEFAULT_XMIN)
        p.add_argument("--xmax", type=float, default=numeric.DEFAULT_XMAX)
        p.add_argument("--points", type=int, default=numeric.DEFAULT_POINTS)

    p = sub.add_parser("poly", help="barrier polynomial H_n")
    p.add_argument("--sign", type=_sign_arg, default=1)
    p.add_argument("--n", type=_nonneg, default=0)
    p.add_argument("--format", choices=("json", "csv", "latex"), default="json")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("state", help="nth quantum state (exact JSON or sampled CSV)")
    p.add_argument("--sign", type=_sign_arg, default=1)
    p.add_argument("--n", type=_nonneg, default=0)
    p.add_argument("--ladder", action="store_true", help="build by repeated ladder operators")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    grid_flags(p)
    p.set_defaults(func=cmd_state)

    p = sub.add_parser("apply", help="evaluate an operator expression such as 'N b+ u+0'")
    p.add_argument("expression", nargs="+")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    grid_flags(p)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("verify", help="run the identity and numeric suites")
    p.add_argument("--max-n", dest="max_n", type=_nonneg, default=12)
    p.add_argument("--no-numeric", action="store_true")
    grid_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("evolve", help="Heisenberg evolution at lambda = exp(gamma t)")
    p.add_argument("--lambda", dest="lam", type=_lambda_arg, default=parse_rational(1))
    p.add_argument("--observable", choices=tuple(_OBSERVABLES))
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("fermi", help="fermionic 2x2 realization and its spectrum")
    p.set_defaults(func=cmd_fermi)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"ppbarrier {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
