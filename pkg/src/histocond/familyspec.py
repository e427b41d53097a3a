"""Declarative family specifications, shared by the sweep engine, service and CLI.

A spec names a construction class plus its parameters and can be
instantiated at any matrix size d (for d-parametric classes) or at its
intrinsic size.  Supported classes:

* ``equidistributed_c1``  -- interval [a, b] split into d equal pieces
* ``c1``                  -- explicit breakpoints
* ``c2``                  -- Chebyshev arcs, fixed ``rho`` or ``arc`` (rho = arc/d)
* ``c3``                  -- shared endpoint ``alpha`` with explicit ``betas``
* ``c3_integer``          -- shared endpoint ``alpha`` with betas 1..d
* ``c4``                  -- ``length`` (or ``segment``) translated to explicit
                             ``xis`` or d offsets equispaced in [xi_min, xi_max]
* ``counterexample``      -- the symmetric family [-i, i]
* ``custom``              -- explicit segments
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidInputError
from .segments import (
    SegmentFamily,
    family_from_segments,
    make_c3,
    make_c4_translates,
    make_chain_c1,
    make_chebyshev_c2,
    make_counterexample_symmetric,
    make_equidistributed_c1,
)

KNOWN_CLASSES = (
    "equidistributed_c1",
    "c1",
    "c2",
    "c3",
    "c3_integer",
    "c4",
    "counterexample",
    "custom",
)


@dataclass(frozen=True)
class FamilySpec:
    family_class: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.family_class not in KNOWN_CLASSES:
            raise InvalidInputError(
                f"unknown family class {self.family_class!r}; known: {', '.join(KNOWN_CLASSES)}"
            )

    @property
    def intrinsic_d(self) -> int | None:
        """Size implied by the parameters, or None for d-parametric classes."""
        p = self.params
        if self.family_class == "c1":
            return len(p.get("breakpoints", ())) - 1
        if self.family_class == "c3":
            return len(p.get("betas", ()))
        if self.family_class == "c4" and p.get("xis") is not None:
            return len(p["xis"])
        if self.family_class == "custom":
            return len(p.get("segments", ()))
        return None

    def _need(self, *names):
        missing = [n for n in names if self.params.get(n) is None]
        if missing:
            raise InvalidInputError(
                f"family class {self.family_class!r} needs parameter(s): {', '.join(missing)}"
            )
        return [self.params[n] for n in names]

    def build(self, d: int | None = None) -> SegmentFamily:
        """Instantiate the spec at size d (required for d-parametric classes)."""
        intrinsic = self.intrinsic_d
        if intrinsic is not None:
            if d is not None and d != intrinsic:
                raise InvalidInputError(
                    f"spec has intrinsic size {intrinsic}, cannot build at d={d}"
                )
            d = intrinsic
        elif d is None:
            raise InvalidInputError(f"family class {self.family_class!r} needs d")
        if d < 1:
            raise InvalidInputError("d must be at least 1")

        p = self.params
        cls = self.family_class
        if cls == "equidistributed_c1":
            a, b = self._need("a", "b")
            return make_equidistributed_c1(float(a), float(b), d)
        if cls == "c1":
            (bp,) = self._need("breakpoints")
            return make_chain_c1(bp)
        if cls == "c2":
            if p.get("rho") is not None:
                return make_chebyshev_c2(d, float(p["rho"]))
            (arc,) = self._need("arc")
            return make_chebyshev_c2(d, float(arc) / d)
        if cls == "c3":
            alpha, betas = self._need("alpha", "betas")
            return make_c3(float(alpha), betas, side=p.get("side", "left"))
        if cls == "c3_integer":
            alpha = float(p.get("alpha", 0.0))
            return make_c3(alpha, [alpha + i for i in range(1, d + 1)], side="left")
        if cls == "c4":
            if p.get("segment") is not None:
                seg = tuple(float(v) for v in p["segment"])
            else:
                (length,) = self._need("length")
                seg = (0.0, float(length))
            if p.get("xis") is not None:
                xis = [float(x) for x in p["xis"]]
            else:
                lo, hi = self._need("xi_min", "xi_max")
                lo, hi = float(lo), float(hi)
                if d == 1:
                    xis = [lo]
                else:
                    xis = [lo + (hi - lo) * k / (d - 1) for k in range(d)]
            return make_c4_translates(seg, xis)
        if cls == "counterexample":
            return make_counterexample_symmetric(d)
        # custom
        (segments,) = self._need("segments")
        return family_from_segments([tuple(map(float, s)) for s in segments])

    def to_dict(self) -> dict:
        out = {"class": self.family_class}
        out.update({k: v for k, v in self.params.items() if v is not None})
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "FamilySpec":
        if "class" not in data:
            raise InvalidInputError("family spec needs a 'class' key")
        params = {k: v for k, v in data.items() if k != "class"}
        return cls(str(data["class"]), params)
