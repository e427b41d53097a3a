"""Segmental Vandermonde matrices: assembly, determinants, inverses.

Matrices are plain float64 numpy arrays of shape (d, d), row i holding the
integrals of the basis members over segment i.  A ``RationalMatrix`` is a
list of Fraction rows, used only by the exact determinant backend for the
monomial basis with rational endpoints.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import conditioning
from .bases import BasisKind, eval_basis_columns, integral_basis_columns
from .errors import (
    ContractViolationError,
    IllConditionedError,
    InvalidInputError,
    SingularFormulaError,
    UnisolvenceError,
)
from .segments import SegmentFamily, chebyshev_angles

DEFAULT_CONDITION_CAP = 1e14


def assemble(family: SegmentFamily, kind: BasisKind) -> np.ndarray:
    """Matrix of basis integrals: entry (i, j) integrates member j over segment i."""
    if family.has_degenerate():
        raise InvalidInputError(
            "family contains degenerate segments; use assemble_normalized for the collapse limit"
        )
    d = family.d
    return integral_basis_columns(kind, d, family.alphas(), family.betas())


def assemble_normalized(family: SegmentFamily, kind: BasisKind) -> np.ndarray:
    """Row-normalized assembly: row i is divided by |s_i|.

    Degenerate rows take their pointwise limit, the basis values at the
    collapsed endpoint, so the matrix tends entrywise to the nodal
    Vandermonde matrix as all segments shrink onto distinct nodes.
    """
    d = family.d
    alphas = np.asarray(family.alphas())
    betas = np.asarray(family.betas())
    lengths = betas - alphas
    V = integral_basis_columns(kind, d, alphas, betas)
    out = np.empty_like(V)
    live = lengths > 0.0
    if np.any(live):
        out[live] = V[live] / lengths[live, None]
    if np.any(~live):
        out[~live] = eval_basis_columns(kind, d, alphas[~live])
    return out


def gram(V: np.ndarray) -> np.ndarray:
    """Gram matrix V^T V (symmetric positive semidefinite)."""
    V = np.asarray(V, dtype=float)
    if V.ndim != 2 or V.shape[0] != V.shape[1]:
        raise InvalidInputError("gram expects a square matrix")
    return V.T @ V


def det_closed_form_c3(alpha: float, betas: Sequence[float]) -> float:
    """Closed-form determinant for a shared-left-endpoint family, monomial basis.

    Equals (1/d!) * prod(beta_i - alpha) * prod_{j<k} (beta_k - beta_j);
    positive whenever the betas are strictly increasing above alpha.
    """
    bs = [float(b) for b in betas]
    d = len(bs)
    if d < 1:
        raise InvalidInputError("need at least one endpoint")
    for b in bs:
        if b <= alpha:
            raise InvalidInputError(f"endpoint {b} does not exceed alpha={alpha}")
    for x, y in zip(bs, bs[1:]):
        if x >= y:
            raise InvalidInputError("endpoints must be strictly increasing")
    value = 1.0 / math.factorial(d)
    for b in bs:
        value *= b - alpha
    for k in range(d):
        for j in range(k):
            value *= bs[k] - bs[j]
    return value


def det_closed_form_c2(d: int, rho: float) -> float:
    """Closed-form determinant magnitude for Chebyshev-arc segments, second-kind basis.

    Evaluates sqrt((2d)^d / (d!)^2 * prod_i sin^2(i rho)) in log space.  The
    rho = pi/(2d) specialization is the same formula.  Compare against the
    LU determinant: the measured ratio is reported by the verification
    suite rather than asserted.
    """
    if d < 1:
        raise InvalidInputError("d must be at least 1")
    if rho <= 0.0:
        raise InvalidInputError(f"rho must be positive, got {rho}")
    taus = chebyshev_angles(d)
    if taus[-1] + rho > math.pi * (1.0 + 1e-12):
        raise InvalidInputError("tau_d + rho exceeds pi; require rho <= pi/(2d)")
    log_sum = d * math.log(2 * d) - 2.0 * math.lgamma(d + 1)
    for i in range(1, d + 1):
        s = abs(math.sin(i * rho))
        if s == 0.0:
            return 0.0
        log_sum += 2.0 * math.log(s)
    return math.exp(0.5 * log_sum)


def det_numeric(V: np.ndarray) -> float:
    """Determinant by pivoted LU; an exactly zero column short-circuits to 0."""
    V = np.asarray(V, dtype=float)
    if V.ndim != 2 or V.shape[0] != V.shape[1]:
        raise InvalidInputError("determinant expects a square matrix")
    if np.any(np.all(V == 0.0, axis=0)):
        return 0.0
    return float(np.linalg.det(V))


def _as_fraction(x) -> Fraction:
    if isinstance(x, float):
        return Fraction(x)  # floats are exact binary rationals
    return Fraction(x)


def _bareiss_int_det(M: list[list[int]]) -> int:
    """Fraction-free (Bareiss) determinant of an integer matrix."""
    n = len(M)
    M = [row[:] for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for r in range(k + 1, n):
                if M[r][k] != 0:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def rational_vandermonde_c3(alpha, betas) -> list[list[Fraction]]:
    """Exact monomial-basis matrix for segments [alpha, beta_i], rational endpoints."""
    a = _as_fraction(alpha)
    bs = [_as_fraction(b) for b in betas]
    d = len(bs)
    if d < 1:
        raise InvalidInputError("need at least one endpoint")
    return [[(b ** j - a ** j) / j for j in range(1, d + 1)] for b in bs]


def det_exact_rational_c3(alpha, betas) -> Fraction:
    """Exact determinant of the rational C3 Vandermonde matrix.

    The matrix is cleared to integers with a common denominator and reduced
    by fraction-free elimination over arbitrary-precision integers.
    """
    A = rational_vandermonde_c3(alpha, betas)
    d = len(A)
    denom = 1
    for row in A:
        for x in row:
            denom = denom * x.denominator // math.gcd(denom, x.denominator)
    M = [[int(x * denom) for x in row] for row in A]
    return Fraction(_bareiss_int_det(M), denom ** d)


def inverse_c2_gram(V: np.ndarray, diag_tol: float = 1e-10) -> np.ndarray:
    """Inverse via the diagonal Gram matrix: V^{-1} = W^{-1} V^T with W = V^T V.

    Requires W to be numerically diagonal (off-diagonal within ``diag_tol``
    of the largest entry); the numerically computed diagonal is used, never
    a closed form.
    """
    V = np.asarray(V, dtype=float)
    W = gram(V)
    diag = np.diag(W).copy()
    scale = np.max(np.abs(W))
    off = np.max(np.abs(W - np.diag(diag))) if W.shape[0] > 1 else 0.0
    if off > diag_tol * scale:
        raise ContractViolationError(
            f"Gram matrix is not diagonal: max off-diagonal {off:g} vs scale {scale:g}"
        )
    if np.any(diag <= 0.0):
        raise UnisolvenceError("Gram matrix has a non-positive diagonal entry")
    return (V / diag[None, :]).T


def inverse_entry_reference_formula(d: int, rho: float, i: int, j: int) -> float:
    """Explicit inverse entry i*sin(i*tau_j) / (d*sin(i*rho)).

    This is the entry implied by the closed-form Gram diagonal.  Provided
    for comparison with :func:`inverse_c2_gram` only, never used in
    solving; the verification suite reports where the two disagree (the
    last row carries half the value this expression gives).
    """
    if not (1 <= i <= d and 1 <= j <= d):
        raise InvalidInputError("indices must satisfy 1 <= i, j <= d")
    s = math.sin(i * rho)
    if s == 0.0:
        raise SingularFormulaError(f"sin(i*rho) vanishes for i={i}, rho={rho}")
    tau_j = (2 * j - 1) * math.pi / (2 * d)
    return i * math.sin(i * tau_j) / (d * s)


def lagrange_coefficients(
    family: SegmentFamily,
    kind: BasisKind,
    cond_cap: float = DEFAULT_CONDITION_CAP,
) -> np.ndarray:
    """Coefficient vectors of the Lagrange-type basis, one per column.

    Column j expands the unique polynomial whose integral over segment i is
    the Kronecker delta.  Refuses matrices whose condition estimate exceeds
    ``cond_cap``: beyond that the delta property is numerically vacuous.
    """
    V = assemble(family, kind)
    report = conditioning.kappa2_svd(V)
    if math.isinf(report.kappa2):
        raise UnisolvenceError("family is not unisolvent: singular Vandermonde matrix")
    if report.kappa2 > cond_cap:
        raise IllConditionedError(
            f"condition estimate {report.kappa2:.3e} exceeds cap {cond_cap:.3e}",
            estimate=report.kappa2,
        )
    return np.linalg.solve(V, np.eye(family.d))


def dump_matrix(V: np.ndarray) -> str:
    """Plain-text dump: first line d, then d space-separated rows."""
    V = np.asarray(V, dtype=float)
    lines = [str(V.shape[0])]
    for row in V:
        lines.append(" ".join(repr(float(x)) for x in row))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> np.ndarray:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    try:
        d = int(lines[0])
        rows = [[float(tok) for tok in ln.split()] for ln in lines[1 : d + 1]]
    except (IndexError, ValueError) as exc:
        raise InvalidInputError(f"malformed matrix dump: {exc}") from exc
    if len(rows) != d or any(len(r) != d for r in rows):
        raise InvalidInputError("matrix dump does not contain d rows of d entries")
    return np.array(rows)
