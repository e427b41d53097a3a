"""Degree-graded polynomial bases and their exact antiderivatives.

Column j (1-based) of any Vandermonde matrix built from a ``BasisKind``
uses the degree-(j-1) member: x^(j-1), T_{j-1} or U_{j-1}.  Chebyshev
values are computed by the three-term recurrence, which stays valid for
|x| > 1; the trigonometric forms appear only in tests.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import InvalidInputError


class BasisKind(enum.Enum):
    MONOMIAL = "monomial"
    CHEBYSHEV_FIRST = "chebyshev-t"
    CHEBYSHEV_SECOND = "chebyshev-u"

    @classmethod
    def from_name(cls, name: str) -> "BasisKind":
        key = name.strip().lower().replace("_", "-")
        aliases = {
            "monomial": cls.MONOMIAL,
            "mono": cls.MONOMIAL,
            "chebyshev-t": cls.CHEBYSHEV_FIRST,
            "chebyshev-first": cls.CHEBYSHEV_FIRST,
            "t": cls.CHEBYSHEV_FIRST,
            "chebyshev-u": cls.CHEBYSHEV_SECOND,
            "chebyshev-second": cls.CHEBYSHEV_SECOND,
            "u": cls.CHEBYSHEV_SECOND,
        }
        try:
            return aliases[key]
        except KeyError:
            raise InvalidInputError(f"unknown basis {name!r}") from None


def _power_table(x: np.ndarray, jmax: int) -> np.ndarray:
    """P[k] = x^k for k = 0..jmax, built by repeated multiplication."""
    P = np.empty((jmax + 1, x.size))
    P[0] = 1.0
    for k in range(1, jmax + 1):
        P[k] = P[k - 1] * x
    return P


def _chebyshev_t_table(x: np.ndarray, jmax: int) -> np.ndarray:
    T = np.empty((jmax + 1, x.size))
    T[0] = 1.0
    if jmax >= 1:
        T[1] = x
    for k in range(2, jmax + 1):
        T[k] = 2.0 * x * T[k - 1] - T[k - 2]
    return T


def _chebyshev_u_table(x: np.ndarray, jmax: int) -> np.ndarray:
    U = np.empty((jmax + 1, x.size))
    U[0] = 1.0
    if jmax >= 1:
        U[1] = 2.0 * x
    for k in range(2, jmax + 1):
        U[k] = 2.0 * x * U[k - 1] - U[k - 2]
    return U


def eval_basis_columns(kind: BasisKind, jmax: int, x: Sequence[float]) -> np.ndarray:
    """Values of the first jmax basis members at the points x.

    Returns an array of shape (len(x), jmax) whose column j-1 holds the
    degree-(j-1) member.
    """
    if jmax < 1:
        raise InvalidInputError("jmax must be at least 1")
    xv = np.atleast_1d(np.asarray(x, dtype=float))
    if kind == BasisKind.MONOMIAL:
        table = _power_table(xv, jmax - 1)
    elif kind == BasisKind.CHEBYSHEV_FIRST:
        table = _chebyshev_t_table(xv, jmax - 1)
    else:
        table = _chebyshev_u_table(xv, jmax - 1)
    return table.T.copy()


def integral_basis_columns(
    kind: BasisKind, jmax: int, alpha: Sequence[float], beta: Sequence[float]
) -> np.ndarray:
    """Integrals of the first jmax basis members over the intervals [alpha_i, beta_i].

    Shape (len(alpha), jmax); entry (i, j-1) is the integral of the
    degree-(j-1) member over [alpha_i, beta_i], by the closed forms:

    * monomial:  (beta^j - alpha^j) / j
    * second kind:  (T_j(beta) - T_j(alpha)) / j,  since T_j' = j U_{j-1}
    * first kind:  T_j/(2j) - T_{j-2}/(2(j-2)) evaluated at the endpoints,
      with the degree-0 and degree-1 members handled explicitly.
    """
    if jmax < 1:
        raise InvalidInputError("jmax must be at least 1")
    av = np.atleast_1d(np.asarray(alpha, dtype=float))
    bv = np.atleast_1d(np.asarray(beta, dtype=float))
    if av.shape != bv.shape:
        raise InvalidInputError("alpha and beta must have the same length")
    out = np.empty((av.size, jmax))
    if kind == BasisKind.MONOMIAL:
        Pa = _power_table(av, jmax)
        Pb = _power_table(bv, jmax)
        for j in range(1, jmax + 1):
            out[:, j - 1] = (Pb[j] - Pa[j]) / j
    elif kind == BasisKind.CHEBYSHEV_SECOND:
        Ta = _chebyshev_t_table(av, jmax)
        Tb = _chebyshev_t_table(bv, jmax)
        for j in range(1, jmax + 1):
            out[:, j - 1] = (Tb[j] - Ta[j]) / j
    else:
        Ta = _chebyshev_t_table(av, max(jmax, 2))
        Tb = _chebyshev_t_table(bv, max(jmax, 2))
        out[:, 0] = bv - av
        if jmax >= 2:
            out[:, 1] = (bv * bv - av * av) / 2.0
        for j in range(3, jmax + 1):
            out[:, j - 1] = (Tb[j] - Ta[j]) / (2.0 * j) - (Tb[j - 2] - Ta[j - 2]) / (
                2.0 * (j - 2)
            )
    return out


def eval_basis(kind: BasisKind, j: int, x: float) -> float:
    """Value of the degree-(j-1) member of the basis at x (j is 1-based).

    Scalar fast path running the same recurrences as the table builders,
    one float at a time; results are bit-identical to the vectorized form.
    """
    if j < 1:
        raise InvalidInputError("column index j must be at least 1")
    x = float(x)
    n = j - 1
    if kind == BasisKind.MONOMIAL:
        value = 1.0
        for _ in range(n):
            value = value * x
        return value
    if n == 0:
        return 1.0
    prev = 1.0
    cur = x if kind == BasisKind.CHEBYSHEV_FIRST else 2.0 * x
    for _ in range(2, n + 1):
        prev, cur = cur, 2.0 * x * cur - prev
    return cur


def integral_basis(kind: BasisKind, j: int, alpha: float, beta: float) -> float:
    """Exact integral of the degree-(j-1) member over [alpha, beta]."""
    if j < 1:
        raise InvalidInputError("column index j must be at least 1")
    return float(integral_basis_columns(kind, j, [alpha], [beta])[0, j - 1])


def _chebyshev_t_int_coeffs(n: int) -> list[int]:
    """Integer monomial coefficients of T_n, ascending degree."""
    if n == 0:
        return [1]
    prev, cur = [1], [0, 1]
    for _ in range(2, n + 1):
        nxt = [0] + [2 * c for c in cur]
        for k, c in enumerate(prev):
            nxt[k] -= c
        prev, cur = cur, nxt
    return cur


def monic_chebyshev_coeffs(n: int) -> np.ndarray:
    """Monomial coefficients (ascending) of the monic degree-n Chebyshev polynomial.

    For n >= 1 this is T_n / 2^(n-1): leading coefficient exactly 1 and
    sup-norm 2^(1-n) on [-1, 1].  Degree 0 gives the constant 1.
    """
    if n < 0:
        raise InvalidInputError("degree must be non-negative")
    if n == 0:
        return np.array([1.0])
    ints = _chebyshev_t_int_coeffs(n)
    scale = 1 << (n - 1)
    # Exact rational division, then one correctly rounded conversion each.
    return np.array([float(Fraction(c, scale)) for c in ints])
