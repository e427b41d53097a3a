"""Quadrature helpers: Gauss-Legendre rules and adaptive Simpson.

Gauss-Legendre nodes come from numpy; the adaptive Simpson routine is the
plain recursive bisection scheme with the usual 15x Richardson acceptance
test, used for the sine integral and as an independent oracle in tests.
"""

from __future__ import annotations

import functools
import math
from typing import Callable

import numpy as np

from .errors import EvaluationError, InvalidInputError


@functools.lru_cache(maxsize=128)
def gauss_legendre_rule(order: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of the order-point Gauss-Legendre rule on [-1, 1]."""
    if order < 1:
        raise InvalidInputError("quadrature order must be at least 1")
    nodes, weights = np.polynomial.legendre.leggauss(order)
    return nodes, weights


def evaluate_callable(f: Callable, xs: np.ndarray) -> np.ndarray:
    """Evaluate f on an array, accepting scalar-only callables, and check finiteness."""
    try:
        vals = np.asarray(f(xs), dtype=float)
        if vals.shape != xs.shape:
            raise ValueError
    except (TypeError, ValueError):
        vals = np.array([float(f(x)) for x in xs])
    if not np.all(np.isfinite(vals)):
        bad = xs[~np.isfinite(vals)][0]
        raise EvaluationError(f"function returned a non-finite value at x={bad!r}", float(bad))
    return vals


def gauss_legendre_integral(f: Callable, a: float, b: float, order: int) -> float:
    """Gauss-Legendre integral of f over [a, b]; exact for degree <= 2*order - 1."""
    nodes, weights = gauss_legendre_rule(order)
    half = 0.5 * (b - a)
    xs = half * nodes + 0.5 * (a + b)
    return float(half * np.dot(weights, evaluate_callable(f, xs)))


def _simpson(fa: float, fm: float, fb: float, h: float) -> float:
    return h / 6.0 * (fa + 4.0 * fm + fb)


def _adaptive(f, a, b, fa, fm, fb, whole, tol, depth):
    m = 0.5 * (a + b)
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm = f(lm)
    frm = f(rm)
    left = _simpson(fa, flm, fm, m - a)
    right = _simpson(fm, frm, fb, b - m)
    delta = left + right - whole
    if depth <= 0 or abs(delta) <= 15.0 * tol:
        return left + right + delta / 15.0
    return _adaptive(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) + _adaptive(
        f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1
    )


def adaptive_simpson(
    f: Callable[[float], float], a: float, b: float, tol: float = 1e-13, max_depth: int = 48
) -> float:
    """Adaptive Simpson quadrature with absolute local tolerance ``tol``."""
    if not (math.isfinite(a) and math.isfinite(b)):
        raise InvalidInputError("integration endpoints must be finite")
    if a == b:
        return 0.0
    fa, fm, fb = f(a), f(0.5 * (a + b)), f(b)
    whole = _simpson(fa, fm, fb, b - a)
    return _adaptive(f, a, b, fa, fm, fb, whole, tol, max_depth)
