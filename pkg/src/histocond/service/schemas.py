"""Pydantic request/response models for the histocond service.

Condition numbers can legitimately be infinite (singular matrices carry a
+inf sentinel), and strict JSON has no representation for that, so every
possibly-infinite float field serializes through ``LooseFloat``: finite
values stay numbers, infinities become the strings "inf" / "-inf" and are
coerced back to floats on validation.
"""

from __future__ import annotations

import math
from typing import Annotated, Any, Literal

from pydantic import BaseModel, ConfigDict, Field, PlainSerializer, field_validator

from ..bases import BasisKind
from ..familyspec import KNOWN_CLASSES, FamilySpec

BasisName = Literal["monomial", "chebyshev-t", "chebyshev-u"]


def _serialize_loose(v: float | None):
    if v is None or math.isfinite(v):
        return v
    return "inf" if v > 0 else "-inf"


LooseFloat = Annotated[float, PlainSerializer(_serialize_loose)]


def basis_from_name(name: str) -> BasisKind:
    return BasisKind.from_name(name)


class FamilySpecModel(BaseModel):
    """Wire form of :class:`histocond.FamilySpec` (flat, class-discriminated)."""

    model_config = ConfigDict(populate_by_name=True, extra="forbid")

    family_class: str = Field(alias="class")
    a: float | None = None
    b: float | None = None
    rho: float | None = None
    arc: float | None = None
    alpha: float | None = None
    side: Literal["left", "right"] | None = None
    betas: list[float] | None = None
    breakpoints: list[float] | None = None
    length: float | None = None
    segment: tuple[float, float] | None = None
    xis: list[float] | None = None
    xi_min: float | None = None
    xi_max: float | None = None
    segments: list[tuple[float, float]] | None = None

    @field_validator("family_class")
    @classmethod
    def _known_class(cls, v: str) -> str:
        if v not in KNOWN_CLASSES:
            raise ValueError(f"unknown family class {v!r}; known: {', '.join(KNOWN_CLASSES)}")
        return v

    def to_core(self) -> FamilySpec:
        params = self.model_dump(exclude={"family_class"}, exclude_none=True)
        return FamilySpec(self.family_class, params)


class FamilyModel(BaseModel):
    """Built family in the canonical JSON format; params stay at top level."""

    model_config = ConfigDict(populate_by_name=True, extra="allow")

    family_class: str = Field(alias="class")
    d: int
    segments: list[tuple[float, float]]


class BuildFamilyRequest(BaseModel):
    spec: FamilySpecModel
    d: int | None = None
    min_length: float = 0.0


class ValidationModel(BaseModel):
    passed: bool
    distinct_ok: bool
    min_length_ok: bool
    class_ok: bool
    min_length_observed: float
    messages: list[str]


class BuildFamilyResponse(BaseModel):
    family: FamilyModel
    validation: ValidationModel


class AssembleRequest(BaseModel):
    spec: FamilySpecModel
    d: int | None = None
    basis: BasisName
    normalized: bool = False


class AssembleResponse(BaseModel):
    d: int
    rows: list[list[float]]
    dump: str
    family: FamilyModel


class SweepRequest(BaseModel):
    spec: FamilySpecModel
    basis: BasisName
    d_start: int
    d_stop: int
    d_stride: int = 1
    outputs: list[Literal["kappa2", "kappaF", "det", "bounds"]] = Field(
        default=["kappa2", "kappaF", "det", "bounds"]
    )
    jobs: int = 1


class SweepRowModel(BaseModel):
    d: int
    kappa2: LooseFloat | None = None
    kappaF: LooseFloat | None = None
    det_numeric: LooseFloat | None = None
    det_closed: LooseFloat | None = None
    bound_lower: LooseFloat | None = None
    kappa2_closed: LooseFloat | None = None
    saturated: bool = False
    error: str | None = None


class SweepResponse(BaseModel):
    rows: list[SweepRowModel]
    csv: str


class FitRequest(BaseModel):
    spec: FamilySpecModel
    d: int | None = None
    basis: BasisName
    function: str
    quad_order: int = 32


class FitResponse(BaseModel):
    coeffs: list[float]
    basis: BasisName
    residual_max: float
    cond_estimate: LooseFloat
    family: FamilyModel


class FeketeRequest(BaseModel):
    d: int
    alpha: float
    grid_n: int


class FeketeResponse(BaseModel):
    betas: list[float]
    det_normalized: float
    pairwise_product_over_dfactorial: float
    boundary_attained: bool
    grid_step: float


class VerifyGroupModel(BaseModel):
    name: str
    passed: bool
    detail: str
    measurements: dict[str, Any] | None = None


class VerifyResponse(BaseModel):
    passed: bool
    groups: list[VerifyGroupModel]
    informational: dict[str, Any]
    runtime_s: float


class ErrorBody(BaseModel):
    kind: Literal["invalid-input", "numerical-failure"]
    message: str
