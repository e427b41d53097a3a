"""Safe single-variable expression parsing for the service and CLI.

Callables cannot cross an HTTP boundary, so the fit endpoint accepts a
small arithmetic language instead: the variable ``x``, numeric literals,
``+ - * / **``, parentheses and a whitelist of numpy-backed functions.
Anything else is rejected before evaluation.
"""

from __future__ import annotations

import ast
from typing import Callable

import numpy as np

from .errors import InvalidInputError

_FUNCTIONS = {
    "sin": np.sin,
    "cos": np.cos,
    "tan": np.tan,
    "asin": np.arcsin,
    "acos": np.arccos,
    "atan": np.arctan,
    "sinh": np.sinh,
    "cosh": np.cosh,
    "tanh": np.tanh,
    "exp": np.exp,
    "log": np.log,
    "log2": np.log2,
    "log10": np.log10,
    "sqrt": np.sqrt,
    "abs": np.abs,
    "floor": np.floor,
    "ceil": np.ceil,
    "sign": np.sign,
}

_CONSTANTS = {"pi": np.pi, "e": np.e, "tau": 2.0 * np.pi}

_ALLOWED_BINOPS = (ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow)
_ALLOWED_UNARY = (ast.UAdd, ast.USub)


def _check(node: ast.AST) -> None:
    if isinstance(node, ast.Expression):
        _check(node.body)
    elif isinstance(node, ast.BinOp) and isinstance(node.op, _ALLOWED_BINOPS):
        _check(node.left)
        _check(node.right)
    elif isinstance(node, ast.UnaryOp) and isinstance(node.op, _ALLOWED_UNARY):
        _check(node.operand)
    elif isinstance(node, ast.Constant):
        if not isinstance(node.value, (int, float)):
            raise InvalidInputError(f"literal {node.value!r} is not numeric")
    elif isinstance(node, ast.Name):
        if node.id != "x" and node.id not in _CONSTANTS:
            raise InvalidInputError(f"unknown name {node.id!r}")
    elif isinstance(node, ast.Call):
        if not isinstance(node.func, ast.Name) or node.func.id not in _FUNCTIONS:
            raise InvalidInputError("only whitelisted function calls are allowed")
        if node.keywords:
            raise InvalidInputError("keyword arguments are not allowed")
        for arg in node.args:
            _check(arg)
    else:
        raise InvalidInputError(f"disallowed syntax: {type(node).__name__}")


def parse_function(expression: str) -> Callable:
    """Compile an expression in the variable x into a vectorized callable."""
    if not expression.strip():
        raise InvalidInputError("empty function expression")
    try:
        tree = ast.parse(expression, mode="eval")
    except SyntaxError as exc:
        raise InvalidInputError(f"cannot parse expression: {exc}") from exc
    _check(tree)
    code = compile(tree, "<function>", "eval")
    namespace = {**_FUNCTIONS, **_CONSTANTS}

    def f(x):
        return eval(code, {"__builtins__": {}}, {**namespace, "x": x})

    f.__doc__ = f"user expression: {expression}"
    return f
