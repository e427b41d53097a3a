"""Solving the histopolation problem.

Given a function f and a family of d segments, find the degree-(d-1)
polynomial whose integral over every segment matches that of f.  Moments
are computed by Gauss-Legendre quadrature (order 32 by default, exact far
beyond any degree used here) and the linear system is solved by pivoted LU
with one step of iterative refinement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .bases import BasisKind, eval_basis_columns
from .conditioning import kappa2_svd
from .errors import IllConditionedError, InvalidInputError, UnisolvenceError
from .quadrature import gauss_legendre_integral
from .segments import SegmentFamily
from .vandermonde import DEFAULT_CONDITION_CAP, assemble

DEFAULT_QUAD_ORDER = 32


@dataclass(frozen=True)
class FitResult:
    """Histopolant in the chosen basis plus residual diagnostics."""

    coeffs: np.ndarray
    kind: BasisKind
    family: SegmentFamily
    residual_max: float
    cond_estimate: float


def moments(f: Callable, family: SegmentFamily, quad_order: int = DEFAULT_QUAD_ORDER) -> np.ndarray:
    """Segment integrals of f, one Gauss-Legendre rule per segment.

    Exact for polynomial f of degree <= 2*quad_order - 1; an order-1 rule
    degenerates to the midpoint rule.
    """
    if quad_order < 1:
        raise InvalidInputError("quad_order must be at least 1")
    return np.array(
        [gauss_legendre_integral(f, s.alpha, s.beta, quad_order) for s in family]
    )


def fit(
    f: Callable,
    family: SegmentFamily,
    kind: BasisKind,
    quad_order: int = DEFAULT_QUAD_ORDER,
    cond_cap: float = DEFAULT_CONDITION_CAP,
) -> FitResult:
    """Solve the histopolation system V c = m for the coefficient vector c.

    The residual reported is max_i of the integral of (f - p) over segment
    i, recomputed with a higher-order quadrature than the moments used for
    the solve.
    """
    V = assemble(family, kind)
    report = kappa2_svd(V)
    if math.isinf(report.kappa2):
        raise UnisolvenceError("family is not unisolvent: singular Vandermonde matrix")
    if report.kappa2 > cond_cap:
        raise IllConditionedError(
            f"condition estimate {report.kappa2:.3e} exceeds cap {cond_cap:.3e}",
            estimate=report.kappa2,
        )
    m = moments(f, family, quad_order)
    coeffs = np.linalg.solve(V, m)
    # One step of iterative refinement recovers a digit near the cap.
    coeffs = coeffs + np.linalg.solve(V, m - V @ coeffs)

    check = np.array(
        [gauss_legendre_integral(f, s.alpha, s.beta, quad_order + 8) for s in family]
    )
    residual_max = float(np.max(np.abs(check - V @ coeffs)))
    return FitResult(
        coeffs=coeffs,
        kind=kind,
        family=family,
        residual_max=residual_max,
        cond_estimate=report.kappa2,
    )


def eval_fit(result: FitResult, x):
    """Evaluate the histopolant at x (scalar or array-like)."""
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    values = eval_basis_columns(result.kind, len(result.coeffs), xs) @ result.coeffs
    return float(values[0]) if np.isscalar(x) or np.ndim(x) == 0 else values
