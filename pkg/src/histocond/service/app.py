"""FastAPI application exposing the histopolation toolkit.

Every endpoint is a pure computation on its request body; there is no
server-side state.  Domain errors map to HTTP 400 with a ``kind`` field
that distinguishes bad input from numerical failure, which the CLI turns
into its exit codes.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import HistocondError, InvalidInputError, NumericalFailureError
from ..expressions import parse_function
from ..histofit import fit
from ..segments import family_to_dict, validate_family
from ..sweep import SweepConfig, fekete_c3_search, rows_to_csv, run_sweep
from ..vandermonde import assemble, assemble_normalized, dump_matrix
from ..verify import verify_all
from . import schemas


def _error_kind(exc: HistocondError) -> str:
    if isinstance(exc, NumericalFailureError):
        return "numerical-failure"
    return "invalid-input"


def create_app() -> FastAPI:
    app = FastAPI(title="histocond", version=__version__)

    @app.exception_handler(HistocondError)
    async def _domain_error(request: Request, exc: HistocondError) -> JSONResponse:
        body = schemas.ErrorBody(kind=_error_kind(exc), message=str(exc))
        return JSONResponse(status_code=400, content=body.model_dump())

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/families/build", response_model=schemas.BuildFamilyResponse)
    def build_family(req: schemas.BuildFamilyRequest) -> schemas.BuildFamilyResponse:
        family = req.spec.to_core().build(req.d)
        report = validate_family(family, req.min_length)
        return schemas.BuildFamilyResponse(
            family=schemas.FamilyModel.model_validate(family_to_dict(family)),
            validation=schemas.ValidationModel(
                passed=report.passed,
                distinct_ok=report.distinct_ok,
                min_length_ok=report.min_length_ok,
                class_ok=report.class_ok,
                min_length_observed=report.min_length_observed,
                messages=list(report.messages),
            ),
        )

    @app.post("/assemble", response_model=schemas.AssembleResponse)
    def assemble_endpoint(req: schemas.AssembleRequest) -> schemas.AssembleResponse:
        family = req.spec.to_core().build(req.d)
        kind = schemas.basis_from_name(req.basis)
        V = assemble_normalized(family, kind) if req.normalized else assemble(family, kind)
        return schemas.AssembleResponse(
            d=family.d,
            rows=V.tolist(),
            dump=dump_matrix(V),
            family=schemas.FamilyModel.model_validate(family_to_dict(family)),
        )

    @app.post("/sweep", response_model=schemas.SweepResponse)
    def sweep_endpoint(req: schemas.SweepRequest) -> schemas.SweepResponse:
        cfg = SweepConfig(
            spec=req.spec.to_core(),
            kind=schemas.basis_from_name(req.basis),
            d_start=req.d_start,
            d_stop=req.d_stop,
            d_stride=req.d_stride,
            outputs=frozenset(req.outputs),
            jobs=req.jobs,
        )
        rows = run_sweep(cfg)
        return schemas.SweepResponse(
            rows=[schemas.SweepRowModel(**row.__dict__) for row in rows],
            csv=rows_to_csv(rows),
        )

    @app.post("/fit", response_model=schemas.FitResponse)
    def fit_endpoint(req: schemas.FitRequest) -> schemas.FitResponse:
        family = req.spec.to_core().build(req.d)
        f = parse_function(req.function)
        result = fit(f, family, schemas.basis_from_name(req.basis), quad_order=req.quad_order)
        return schemas.FitResponse(
            coeffs=result.coeffs.tolist(),
            basis=req.basis,
            residual_max=result.residual_max,
            cond_estimate=result.cond_estimate,
            family=schemas.FamilyModel.model_validate(family_to_dict(family)),
        )

    @app.post("/fekete", response_model=schemas.FeketeResponse)
    def fekete_endpoint(req: schemas.FeketeRequest) -> schemas.FeketeResponse:
        result = fekete_c3_search(req.d, req.alpha, req.grid_n)
        return schemas.FeketeResponse(
            betas=list(result.betas),
            det_normalized=result.det_normalized,
            pairwise_product_over_dfactorial=result.pairwise_product_over_dfactorial,
            boundary_attained=result.boundary_attained,
            grid_step=result.grid_step,
        )

    @app.post("/verify", response_model=schemas.VerifyResponse)
    def verify_endpoint() -> schemas.VerifyResponse:
        report = verify_all()
        data = report.to_dict()
        return schemas.VerifyResponse(
            passed=data["passed"],
            groups=[schemas.VerifyGroupModel(**g) for g in data["groups"]],
            informational=_jsonable(data["informational"]),
            runtime_s=data["runtime_s"],
        )

    return app


def _jsonable(obj):
    """Replace non-finite floats so strict JSON encoding cannot fail."""
    import math

    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, float) and not math.isfinite(obj):
        return repr(obj)
    return obj
