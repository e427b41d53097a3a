"""Conditioning sweeps over the matrix size and the shared-endpoint Fekete search.

A sweep instantiates a family spec at every d in a range, assembles the
Vandermonde matrix and records condition numbers, determinants and bounds
as one CSV row per d.  Rows are deterministic functions of the config;
with identical configs, the CSV is byte-identical.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path

import numpy as np

from . import conditioning, vandermonde
from .bases import BasisKind
from .errors import HistocondError, InvalidInputError, UnsupportedError
from .familyspec import FamilySpec
from .segments import ClassTag

CSV_HEADER = "d,kappa2,kappaF,det_numeric,det_closed,bound_lower,kappa2_closed,saturated"
ALL_OUTPUTS = frozenset({"kappa2", "kappaF", "det", "bounds"})

# Monomial-basis kappa2 values beyond this cannot be certified in double
# precision; sweep rows above it carry the saturated flag.
SATURATION_KAPPA = 1e14

THREADS_ENV_VAR = "HISTOCOND_THREADS"


@dataclass(frozen=True)
class SweepConfig:
    spec: FamilySpec
    kind: BasisKind
    d_start: int
    d_stop: int
    d_stride: int = 1
    outputs: frozenset[str] = ALL_OUTPUTS
    output_path: str | None = None
    jobs: int = 1

    def __post_init__(self):
        if self.d_start < 1 or self.d_stop < self.d_start or self.d_stride < 1:
            raise InvalidInputError("need 1 <= d_start <= d_stop and stride >= 1")
        unknown = set(self.outputs) - ALL_OUTPUTS
        if unknown:
            raise InvalidInputError(f"unknown outputs: {sorted(unknown)}")
        if not self.outputs:
            raise InvalidInputError("outputs must not be empty")

    def d_values(self) -> list[int]:
        return list(range(self.d_start, self.d_stop + 1, self.d_stride))


@dataclass(frozen=True)
class SweepRow:
    d: int
    kappa2: float | None = None
    kappaF: float | None = None
    det_numeric: float | None = None
    det_closed: float | None = None
    bound_lower: float | None = None
    kappa2_closed: float | None = None
    saturated: bool = False
    error: str | None = None


def _closed_det(spec: FamilySpec, family, d: int) -> float | None:
    if spec.family_class in ("c3", "c3_integer"):
        alphas = family.alphas()
        betas = sorted(family.betas())
        try:
            return vandermonde.det_closed_form_c3(alphas[0], betas)
        except HistocondError:
            return None
    if spec.family_class == "c2":
        rho = family.params.get("rho")
        if rho is not None:
            return vandermonde.det_closed_form_c2(d, rho)
    return None


def _sweep_one(cfg: SweepConfig, d: int) -> SweepRow:
    try:
        family = cfg.spec.build(d)
        V = vandermonde.assemble(family, cfg.kind)
    except HistocondError as exc:
        return SweepRow(d=d, error=str(exc))

    kappa2 = kappaF_val = det_num = det_closed = bound = kappa2_closed = None
    saturated = False

    if cfg.outputs & {"kappa2", "kappaF"}:
        report = conditioning.kappa2_svd(V)
        if "kappa2" in cfg.outputs:
            kappa2 = report.kappa2
        if "kappaF" in cfg.outputs:
            kappaF_val = report.kappaF
        # A structurally zero column is a *certified* infinity (singular
        # family), not a saturated measurement.
        structurally_singular = bool(np.any(np.all(V == 0.0, axis=0)))
        saturated = (
            cfg.kind == BasisKind.MONOMIAL
            and not structurally_singular
            and (not math.isfinite(report.kappa2) or report.kappa2 > SATURATION_KAPPA)
        )
    if "det" in cfg.outputs:
        det_num = vandermonde.det_numeric(V)
        det_closed = _closed_det(cfg.spec, family, d)
    if "bounds" in cfg.outputs and cfg.kind == BasisKind.MONOMIAL and d >= 2:
        c = max(family.lengths())
        bound = conditioning.kappa2_lower_bound_monomial(c, d, conservative=True)
    if "kappa2" in cfg.outputs and family.class_tag == ClassTag.C2:
        rho = family.params.get("rho")
        if rho is not None and math.sin(d * rho) != 0.0:
            kappa2_closed = conditioning.kappa2_closed_form_c2(d, rho)

    return SweepRow(
        d=d,
        kappa2=kappa2,
        kappaF=kappaF_val,
        det_numeric=det_num,
        det_closed=det_closed,
        bound_lower=bound,
        kappa2_closed=kappa2_closed,
        saturated=saturated,
    )


def _worker_count(jobs: int) -> int:
    cap = os.environ.get(THREADS_ENV_VAR)
    if cap is not None:
        try:
            jobs = min(jobs, max(1, int(cap)))
        except ValueError:
            raise InvalidInputError(f"{THREADS_ENV_VAR} must be an integer, got {cap!r}")
    return max(1, jobs)


def run_sweep(cfg: SweepConfig) -> list[SweepRow]:
    """One row per d; construction failures become row-level errors.

    Rows are computed (possibly concurrently) and always emitted in d
    order; the CSV is written when ``output_path`` is set.
    """
    ds = cfg.d_values()
    workers = _worker_count(cfg.jobs)
    if workers > 1 and len(ds) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda d: _sweep_one(cfg, d), ds))
    else:
        rows = [_sweep_one(cfg, d) for d in ds]
    if cfg.output_path is not None:
        Path(cfg.output_path).write_text(rows_to_csv(rows))
    return rows


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return repr(float(value))  # shortest round-trip; infinity prints as 'inf'


def rows_to_csv(rows: list[SweepRow]) -> str:
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(
            ",".join(
                (
                    str(r.d),
                    _cell(r.kappa2),
                    _cell(r.kappaF),
                    _cell(r.det_numeric),
                    _cell(r.det_closed),
                    _cell(r.bound_lower),
                    _cell(r.kappa2_closed),
                    "" if r.error is not None else _cell(r.saturated),
                )
            )
        )
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class FeketeResult:
    betas: tuple[float, ...]
    det_normalized: float
    pairwise_product_over_dfactorial: float
    boundary_attained: bool
    grid_step: float


# Enumerating C(grid_n, d) tuples gets out of hand quickly for d = 4.
_MAX_TUPLES = 6_000_000
_DET_CHUNK = 200_000


def _normalized_c3_rows(alpha: float, grid: np.ndarray, d: int) -> np.ndarray:
    """Row of the normalized shared-endpoint matrix for every grid point."""
    rows = np.empty((grid.size, d))
    live = grid > alpha
    if np.any(live):
        b = grid[live]
        pow_b = np.ones_like(b)
        pow_a = 1.0
        for j in range(1, d + 1):
            pow_b = pow_b * b
            pow_a = pow_a * alpha
            rows[live, j - 1] = (pow_b - pow_a) / (j * (b - alpha))
    if np.any(~live):
        # Collapsed segment: the row is the plain nodal one.
        rows[~live] = [alpha ** (j - 1) for j in range(1, d + 1)]
    return rows


def fekete_c3_search(d: int, alpha: float, grid_n: int) -> FeketeResult:
    """Exhaustive grid search maximizing the normalized shared-endpoint determinant.

    Scans every increasing d-tuple from a uniform grid on [alpha, 1]; the
    left boundary is included so the degenerate first segment is eligible,
    and the result records whether the optimum lands on it.  Ties resolve
    to the lexicographically largest tuple.  Alongside the determinant the
    scale-free cross-check prod_{j<k}(beta_k - beta_j) / d! is returned.
    """
    if d < 1:
        raise InvalidInputError("d must be at least 1")
    if d > 4:
        raise UnsupportedError("grid search supports d <= 4 only")
    if grid_n < 50:
        raise InvalidInputError("grid_n must be at least 50")
    if not alpha < 1.0:
        raise InvalidInputError("alpha must lie below the right endpoint 1")
    if math.comb(grid_n, d) > _MAX_TUPLES:
        raise InvalidInputError(
            f"{math.comb(grid_n, d)} candidate tuples exceed the supported "
            f"{_MAX_TUPLES}; reduce grid_n"
        )

    grid = np.linspace(alpha, 1.0, grid_n)
    rows = _normalized_c3_rows(alpha, grid, d)

    best_val = -1.0
    best_tuple: tuple[int, ...] | None = None
    # Materialize index tuples (bounded by _MAX_TUPLES, checked above).
    idx = np.array(list(combinations(range(grid_n), d)), dtype=np.intp)
    for start in range(0, idx.shape[0], _DET_CHUNK):
        block = idx[start : start + _DET_CHUNK]
        mats = rows[block]  # (n, d, d): row k is the grid row of beta_k
        dets = np.abs(np.linalg.det(mats))
        rev_best = dets.size - 1 - int(np.argmax(dets[::-1]))
        if dets[rev_best] >= best_val:
            best_val = float(dets[rev_best])
            best_tuple = tuple(int(i) for i in block[rev_best])

    assert best_tuple is not None
    betas = tuple(float(grid[i]) for i in best_tuple)
    cross = 1.0
    for k in range(d):
        for j in range(k):
            cross *= betas[k] - betas[j]
    cross /= math.factorial(d)
    return FeketeResult(
        betas=betas,
        det_normalized=best_val,
        pairwise_product_over_dfactorial=cross,
        boundary_attained=bool(betas[0] == float(grid[0])),
        grid_step=float(grid[1] - grid[0]) if grid_n > 1 else 0.0,
    )
