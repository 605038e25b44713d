from .expression import (
    Evaluation,
    ExpressionError,
    ExpressionSyntaxError,
    OperatorExpression,
    Recognition,
    UnknownTokenError,
    evaluate_expression,
    parse_expression,
)
from .main import main
from .verify import VerifyReport, run_verify

__all__ = [
    "Evaluation",
    "ExpressionError",
    "ExpressionSyntaxError",
    "OperatorExpression",
    "Recognition",
    "UnknownTokenError",
    "VerifyReport",
    "evaluate_expression",
    "main",
    "parse_expression",
    "run_verify",
]
