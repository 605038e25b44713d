"""A flat operator-expression language.

    expr  := op* state
    op    := "b+" | "b-" | "N" | "H" | "P" | "T"
    state := "u" ("+" | "-") digits

Tokens are whitespace separated and operators apply right to left, so
``"N b+ u+0"`` means N(b+(u+0)).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .. import states
from ..scalar import ExactScalar
from ..states import PhasePolyFunction

OPERATORS = ("b+", "b-", "N", "H", "P", "T")

_STATE_RE = re.compile(r"u([+-])(\d+)\Z")


class ExpressionError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


class ExpressionSyntaxError(ExpressionError):
    pass


class UnknownTokenError(ExpressionError):
    pass


@dataclass(frozen=True)
class OperatorExpression:
    ops: tuple[str, ...]
    sign: int
    n: int

    def __str__(self):
        state = f"u{'+' if self.sign > 0 else '-'}{self.n}"
        return " ".join((*self.ops, state))


def _tokens(text: str):
    for m in re.finditer(r"\S+", text):
        yield m.group(), len(text[: m.start()].encode("utf-8"))


def parse_expression(text: str) -> OperatorExpression:
    toks = list(_tokens(text))
    if not toks:
        raise ExpressionSyntaxError("empty expression; expected a state such as u+0", 0)
    ops = []
    for k, (tok, off) in enumerate(toks):
        last = k == len(toks) - 1
        if tok in OPERATORS:
            if last:
                raise ExpressionSyntaxError(f"expression ends with operator {tok!r}; expected a state",
                                            off + len(tok.encode("utf-8")))
            ops.append(tok)
            continue
        if tok.startswith("u"):
            m = _STATE_RE.match(tok)
            if m is None:
                if len(tok) == 1 or tok[1] not in "+-":
                    raise ExpressionSyntaxError(f"state {tok!r} needs a sign", off + 1)
                raise ExpressionSyntaxError(f"state {tok!r} needs a nonnegative integer index", off + 2)
            if not last:
                raise ExpressionSyntaxError("a state must be the last token", toks[k + 1][1])
            return OperatorExpression(tuple(ops), 1 if m.group(1) == "+" else -1, int(m.group(2)))
        raise UnknownTokenError(f"unknown token {tok!r}", off)
    raise AssertionError("unreachable")


def _apply(op: str, f: PhasePolyFunction) -> PhasePolyFunction:
    if op == "b+":
        return states.apply_ladder("+", f)
    if op == "b-":
        return states.apply_ladder("-", f)
    if op == "N":
        return states.apply_number(f)
    if op == "H":
        return states.apply_hamiltonian(f)
    if op == "P":
        return states.parity(f)
    if op == "T":
        return states.time_reverse(f)
    raise ValueError(f"unknown operator {op!r}")


@dataclass(frozen=True)
class Recognition:
    """``result == scalar * u^{sign}_n`` with the polynomial-built state."""

    sign: int
    n: int
    scalar: ExactScalar


@dataclass(frozen=True)
class Evaluation:
    result: PhasePolyFunction
    recognized: Optional[Recognition] = None

    def to_json(self) -> dict:
        out = {"result": self.result.to_json(), "text": str(self.result), "recognized": None}
        if self.recognized is not None:
            r = self.recognized
            out["recognized"] = {
                "state": f"u{'+' if r.sign > 0 else '-'}{r.n}",
                "scalar": r.scalar.to_json(),
                "scalar_text": str(r.scalar),
            }
        return out


def recognize(f: PhasePolyFunction) -> Optional[Recognition]:
    if f.is_zero() or f.phase_rate not in (1, -1):
        return None
    sign = int(f.phase_rate)
    for n in range(f.poly.degree + 1):
        c = states.proportionality_scalar(f, states.nth_state_poly(sign, n))
        if c is not None:
            return Recognition(sign, n, c)
    return None


def evaluate_expression(e: OperatorExpression | str) -> Evaluation:
    if isinstance(e, str):
        e = parse_expression(e)
    f = states.nth_state_poly(e.sign, e.n)
    for op in reversed(e.ops):
        f = _apply(op, f)
    return Evaluation(f, recognize(f))
