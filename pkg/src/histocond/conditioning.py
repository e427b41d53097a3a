"""Condition numbers of segmental Vandermonde matrices.

Spectral quantities come from a dense SVD; the Frobenius condition number
pairs the Frobenius norm with an LU-based inverse.  Alongside the numeric
routines live the closed-form expressions for Chebyshev-arc families (the
bounded-kappa2 limit, the Frobenius-norm limit through the sine integral)
and the exponential lower bound for the monomial basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError, NumericalFailureError, SingularFormulaError
from .quadrature import adaptive_simpson

_EPS = float(np.finfo(np.float64).eps)


@dataclass(frozen=True)
class ConditioningReport:
    """Spectral summary of one matrix; infinities mark numerical singularity."""

    d: int
    kappa2: float
    kappaF: float
    sigma_max: float
    sigma_min: float
    bound_lower_monomial: float | None = None
    closed_form_c2: float | None = None
    limit_value: float | None = None


def singular_threshold(d: int, sigma_max: float) -> float:
    """Below this, the smallest singular value counts as zero."""
    return d * _EPS * sigma_max


def kappaF(V: np.ndarray) -> float:
    """Frobenius condition number ||V||_F * ||V^{-1}||_F; inf when singular."""
    V = np.asarray(V, dtype=float)
    if V.ndim != 2 or V.shape[0] != V.shape[1]:
        raise InvalidInputError("kappaF expects a square matrix")
    try:
        inv = np.linalg.solve(V, np.eye(V.shape[0]))
    except np.linalg.LinAlgError:
        return math.inf
    value = float(np.linalg.norm(V, "fro") * np.linalg.norm(inv, "fro"))
    return value if math.isfinite(value) else math.inf


def kappa2_svd(V: np.ndarray) -> ConditioningReport:
    """Spectral condition number via dense SVD.

    A smallest singular value below d*eps*sigma_max triggers the +inf
    sentinel for both kappa2 and kappaF.
    """
    V = np.asarray(V, dtype=float)
    if V.ndim != 2 or V.shape[0] != V.shape[1]:
        raise InvalidInputError("kappa2_svd expects a square matrix")
    if not np.all(np.isfinite(V)):
        raise InvalidInputError("matrix entries must be finite")
    d = V.shape[0]
    try:
        sigma = np.linalg.svd(V, compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailureError(f"SVD failed to converge: {exc}") from exc
    smax = float(sigma[0])
    smin = float(sigma[-1])
    if smin <= singular_threshold(d, smax):
        return ConditioningReport(d=d, kappa2=math.inf, kappaF=math.inf, sigma_max=smax, sigma_min=smin)
    return ConditioningReport(
        d=d, kappa2=smax / smin, kappaF=kappaF(V), sigma_max=smax, sigma_min=smin
    )


def kappa2_closed_form_c2(d: int, rho: float) -> float:
    """Simplified closed-form expression |d sin(rho) / sin(d rho)|.

    Follows from taking the closed-form Gram diagonal at its first and
    last index.  Exposed verbatim for comparison with the SVD value; the
    verification suite reports their measured relation at small d.
    """
    if d < 1:
        raise InvalidInputError("d must be at least 1")
    s = math.sin(d * rho)
    if s == 0.0:
        raise SingularFormulaError(f"sin(d*rho) vanishes for d={d}, rho={rho}")
    return abs(d * math.sin(rho) / s)


def kappa2_limit_c2(a: float) -> float:
    """Large-d limit |a| / |sin a| of kappa2 for arcs with rho = a/d.

    Continuously extended to 1 at a = 0.
    """
    if a == 0.0:
        return 1.0
    s = math.sin(a)
    if s == 0.0:
        raise SingularFormulaError(f"sin(a) vanishes for a={a}")
    return abs(a) / abs(s)


def kappa2_lower_bound_monomial(c: float, d: int, conservative: bool = True) -> float:
    """Exponential lower bound (c / sqrt(d)) * 2^(d-2) for the monomial basis.

    ``conservative`` drops one power of two (2^(d-3)): the monic Chebyshev
    polynomial of degree d-1 has sup-norm 2^(2-d) on [-1, 1], not 2^(1-d),
    so only the smaller exponent is rigorously backed.  The verification
    report states which exponent measured data satisfies.
    """
    if c <= 0.0:
        raise InvalidInputError(f"c must be positive, got {c}")
    if d < 2:
        raise InvalidInputError("d must be at least 2")
    exponent = d - 3 if conservative else d - 2
    return c / math.sqrt(d) * 2.0 ** exponent


def sine_integral_series(z: float) -> float:
    """Si(z) by the alternating power series; accurate for moderate |z|."""
    total = 0.0
    term = z
    k = 0
    while True:
        total += term / (2 * k + 1)
        k += 1
        term *= -z * z / ((2 * k) * (2 * k + 1))
        if abs(term) < 1e-18 * max(1.0, abs(total)):
            return total


def sine_integral_quadrature(z: float) -> float:
    """Si(z) by adaptive Simpson on the continuously extended integrand."""

    def sinc(t: float) -> float:
        return math.sin(t) / t if t != 0.0 else 1.0

    return adaptive_simpson(sinc, 0.0, z, tol=1e-14)


def sine_integral(z: float) -> float:
    """Sine integral Si(z), absolute accuracy about 1e-12.

    Series for |z| <= 4 (fast, no cancellation trouble there), adaptive
    Simpson otherwise; the two routes are cross-checked in the tests.
    """
    if not math.isfinite(z):
        raise InvalidInputError("argument must be finite")
    if abs(z) <= 4.0:
        return sine_integral_series(z)
    return sine_integral_quadrature(z)


def frob_norm_limit_c2(a: float) -> float:
    """Large-d limit sqrt(2a Si(2a) + cos(2a) - 1) of the Frobenius norm."""
    if a <= 0.0:
        raise InvalidInputError(f"a must be positive, got {a}")
    radicand = 2.0 * a * sine_integral(2.0 * a) + math.cos(2.0 * a) - 1.0
    if radicand < 0.0:
        raise NumericalFailureError(f"negative radicand {radicand} for a={a}")
    return math.sqrt(radicand)


def frob_inv_upper_c2(d: int, a: float) -> float:
    """Reference upper bound d / (sqrt(2) a) for the inverse Frobenius norm.

    Kept verbatim as the comparison value; measurements in the
    verification suite show it is exceeded in practice (the constant the
    data supports at a = pi/2 is about 0.53, not sqrt(2)/pi ~ 0.45).
    """
    if d < 1:
        raise InvalidInputError("d must be at least 1")
    if not (0.0 < a <= math.pi / 2.0):
        raise InvalidInputError(f"a must lie in (0, pi/2], got {a}")
    return d / (math.sqrt(2.0) * a)


def sin_product(n: int) -> float:
    """prod_{i=1}^{n-1} sin(i pi / n); identity value is n / 2^(n-1)."""
    if n < 2:
        raise InvalidInputError("n must be at least 2")
    value = 1.0
    for i in range(1, n):
        value *= math.sin(i * math.pi / n)
    return value
