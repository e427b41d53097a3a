"""Segment families for polynomial histopolation.

A segment is a closed interval [alpha, beta]; a family is an ordered
collection of d of them tagged with the construction class it came from:

* C1   -- chains of intervals: consecutive segments share an endpoint;
* C2   -- projections of equal arcs of the unit semicircle onto [-1, 1];
* C3   -- common left (or right) endpoint, distinct opposite endpoints;
* C4   -- translated copies of a single reference segment.

The symmetric family { [-i, i] : i = 1..d } is kept around as an explicit
counterexample: it is not unisolvent, every even-degree moment vanishes.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import InvalidInputError

# Absolute tolerance used when checking class invariants on families that
# went through serialization or arithmetic (constructor output is exact).
CLASS_TOL = 1e-12


class ClassTag(enum.Enum):
    C1 = "C1"
    C2 = "C2"
    C3_LEFT = "C3left"
    C3_RIGHT = "C3right"
    C4 = "C4"
    CUSTOM = "custom"
    COUNTEREXAMPLE = "counterexample"


@dataclass(frozen=True)
class Segment:
    """Closed interval [alpha, beta] with alpha <= beta, both finite."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and math.isfinite(self.beta)):
            raise InvalidInputError("segment endpoints must be finite")
        if self.alpha > self.beta:
            raise InvalidInputError(
                f"segment endpoints out of order: [{self.alpha}, {self.beta}]"
            )

    @property
    def length(self) -> float:
        return self.beta - self.alpha

    @property
    def is_degenerate(self) -> bool:
        return self.alpha == self.beta

    def as_tuple(self) -> tuple[float, float]:
        return (self.alpha, self.beta)


@dataclass(frozen=True)
class SegmentFamily:
    """Ordered collection of segments plus its construction class.

    ``params`` records the constructor inputs that are not recoverable from
    the endpoints alone (e.g. ``rho`` for C2 families); it is carried into
    the JSON serialization.
    """

    segments: tuple[Segment, ...]
    class_tag: ClassTag = ClassTag.CUSTOM
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(self.segments) < 1:
            raise InvalidInputError("a segment family needs at least one segment")

    @property
    def d(self) -> int:
        return len(self.segments)

    def __len__(self) -> int:
        return len(self.segments)

    def __iter__(self) -> Iterator[Segment]:
        return iter(self.segments)

    def __getitem__(self, i: int) -> Segment:
        return self.segments[i]

    def alphas(self) -> list[float]:
        return [s.alpha for s in self.segments]

    def betas(self) -> list[float]:
        return [s.beta for s in self.segments]

    def lengths(self) -> list[float]:
        return [s.length for s in self.segments]

    def has_degenerate(self) -> bool:
        return any(s.is_degenerate for s in self.segments)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of :func:`validate_family`; failures are content, not errors."""

    passed: bool
    distinct_ok: bool
    min_length_ok: bool
    class_ok: bool
    min_length_observed: float
    messages: tuple[str, ...] = ()


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvalidInputError(message)


def family_from_segments(
    segments: Sequence[Segment | tuple[float, float]],
    class_tag: ClassTag = ClassTag.CUSTOM,
    params: dict | None = None,
    allow_degenerate: bool = False,
) -> SegmentFamily:
    """Wrap raw segments into a family, rejecting degenerate ones by default."""
    segs = tuple(s if isinstance(s, Segment) else Segment(*s) for s in segments)
    if not allow_degenerate:
        for s in segs:
            _require(not s.is_degenerate, f"degenerate segment [{s.alpha}, {s.beta}]")
    return SegmentFamily(segs, class_tag, dict(params or {}))


def make_chain_c1(breakpoints: Sequence[float]) -> SegmentFamily:
    """Chain of d intervals from d+1 strictly increasing breakpoints."""
    pts = [float(p) for p in breakpoints]
    _require(len(pts) >= 2, "need at least two breakpoints")
    for a, b in zip(pts, pts[1:]):
        _require(a < b, f"breakpoints must be strictly increasing, got {a} >= {b}")
    segs = tuple(Segment(a, b) for a, b in zip(pts, pts[1:]))
    return SegmentFamily(segs, ClassTag.C1)


def make_equidistributed_c1(a: float, b: float, d: int) -> SegmentFamily:
    """Chain of d equal-length intervals covering [a, b]."""
    _require(d >= 1, "d must be at least 1")
    _require(a < b, f"need a < b, got a={a}, b={b}")
    pts = [a + (b - a) * i / d for i in range(d + 1)]
    fam = make_chain_c1(pts)
    return SegmentFamily(fam.segments, ClassTag.C1, {"equidistributed": True})


def chebyshev_angles(d: int) -> list[float]:
    """Angles tau_i = (2i - 1) pi / (2d), i = 1..d, in (0, pi)."""
    return [(2 * i - 1) * math.pi / (2 * d) for i in range(1, d + 1)]


def make_chebyshev_c2(d: int, rho: float) -> SegmentFamily:
    """Cosine projections of arcs of half-width rho centred at the Chebyshev angles.

    Segment i is [cos(tau_i + rho), cos(tau_i - rho)].  Admissibility requires
    rho > 0 and tau_d + rho <= pi, i.e. rho <= pi/(2d), so that the leftmost
    segment stays inside [-1, 1].
    """
    _require(d >= 1, "d must be at least 1")
    _require(rho > 0.0, f"rho must be positive, got {rho}")
    taus = chebyshev_angles(d)
    # Tiny relative slack so rho = pi/(2d) survives its own rounding.
    _require(
        taus[-1] + rho <= math.pi * (1.0 + 1e-12),
        f"tau_d + rho = {taus[-1] + rho} exceeds pi; require rho <= pi/(2d)",
    )
    segs = tuple(Segment(math.cos(t + rho), math.cos(t - rho)) for t in taus)
    return SegmentFamily(segs, ClassTag.C2, {"rho": float(rho)})


def make_c3(alpha: float, betas: Sequence[float], side: str = "left") -> SegmentFamily:
    """Family with a shared endpoint: [alpha, beta_i] (left) or [beta_i, alpha] (right)."""
    alpha = float(alpha)
    bs = [float(b) for b in betas]
    _require(len(bs) >= 1, "need at least one free endpoint")
    _require(len(set(bs)) == len(bs), "free endpoints must be pairwise distinct")
    if side == "left":
        for b in bs:
            _require(b > alpha, f"free endpoint {b} must exceed alpha={alpha}")
        segs = tuple(Segment(alpha, b) for b in bs)
        tag = ClassTag.C3_LEFT
    elif side == "right":
        for b in bs:
            _require(b < alpha, f"free endpoint {b} must be below alpha={alpha}")
        segs = tuple(Segment(b, alpha) for b in bs)
        tag = ClassTag.C3_RIGHT
    else:
        raise InvalidInputError(f"side must be 'left' or 'right', got {side!r}")
    return SegmentFamily(segs, tag, {"alpha": alpha, "side": side})


def make_c4_translates(s: Segment | tuple[float, float], xis: Sequence[float]) -> SegmentFamily:
    """Translates of a reference segment s by pairwise distinct offsets."""
    if not isinstance(s, Segment):
        s = Segment(*s)
    _require(not s.is_degenerate, "reference segment must be non-degenerate")
    offsets = [float(x) for x in xis]
    _require(len(offsets) >= 1, "need at least one translate")
    _require(len(set(offsets)) == len(offsets), "translation offsets must be pairwise distinct")
    segs = tuple(Segment(s.alpha + x, s.beta + x) for x in offsets)
    return SegmentFamily(
        segs, ClassTag.C4, {"segment": [s.alpha, s.beta], "xis": offsets}
    )


def make_counterexample_symmetric(d: int) -> SegmentFamily:
    """The non-unisolvent family [-i, i], i = 1..d."""
    _require(d >= 1, "d must be at least 1")
    segs = tuple(Segment(-float(i), float(i)) for i in range(1, d + 1))
    return SegmentFamily(segs, ClassTag.COUNTEREXAMPLE)


def _class_invariant_messages(family: SegmentFamily) -> list[str]:
    """Check the invariants implied by the family's class tag."""
    msgs: list[str] = []
    segs = family.segments
    d = family.d
    tag = family.class_tag

    if tag == ClassTag.C1:
        for i in range(d - 1):
            gap = abs(segs[i].beta - segs[i + 1].alpha)
            if gap > CLASS_TOL:
                msgs.append(f"chain broken between segments {i + 1} and {i + 2} (gap {gap:g})")
    elif tag == ClassTag.C2:
        rho = family.params.get("rho")
        if rho is None:
            # Recover the arc half-width from the endpoint angles; the
            # comparison below happens in value space, so acos noise near
            # +-1 does not get amplified.
            half = sorted(
                (math.acos(max(-1.0, min(1.0, s.alpha))) - math.acos(max(-1.0, min(1.0, s.beta)))) / 2.0
                for s in segs
            )
            rho = half[d // 2]
        if rho <= 0.0:
            msgs.append(f"non-positive arc half-width rho={rho}")
        taus = chebyshev_angles(d)
        if taus[-1] + rho > math.pi * (1.0 + 1e-12):
            msgs.append("tau_d + rho exceeds pi")
        dev = max(
            max(abs(s.alpha - math.cos(t + rho)), abs(s.beta - math.cos(t - rho)))
            for s, t in zip(segs, taus)
        )
        if dev > CLASS_TOL:
            msgs.append(f"endpoints deviate from cos(tau_i -+ rho) by {dev:g}")
    elif tag in (ClassTag.C3_LEFT, ClassTag.C3_RIGHT):
        if tag == ClassTag.C3_LEFT:
            shared = [s.alpha for s in segs]
            free = [s.beta for s in segs]
        else:
            shared = [s.beta for s in segs]
            free = [s.alpha for s in segs]
        if max(shared) - min(shared) > CLASS_TOL:
            msgs.append("shared endpoint is not constant across the family")
        if len(set(free)) != len(free):
            msgs.append("free endpoints are not pairwise distinct")
    elif tag == ClassTag.C4:
        lens = family.lengths()
        ref = max(lens)
        if ref > 0 and (max(lens) - min(lens)) / ref > CLASS_TOL:
            msgs.append("translate lengths differ beyond tolerance")
        mids = [(s.alpha + s.beta) / 2.0 for s in segs]
        if len(set(mids)) != len(mids):
            msgs.append("translation offsets are not pairwise distinct")
    elif tag == ClassTag.COUNTEREXAMPLE:
        for i, s in enumerate(segs, start=1):
            if abs(s.alpha + i) > CLASS_TOL or abs(s.beta - i) > CLASS_TOL:
                msgs.append(f"segment {i} is not [-{i}, {i}]")
                break
    return msgs


def validate_family(family: SegmentFamily, min_length: float = 0.0) -> ValidationReport:
    """Report on distinctness, minimal length and class invariants.

    Never raises: every defect is recorded as a message and reflected in the
    per-check booleans and the overall flag.
    """
    msgs: list[str] = []

    pairs = [s.as_tuple() for s in family.segments]
    distinct_ok = len(set(pairs)) == len(pairs)
    if not distinct_ok:
        msgs.append("segments are not pairwise distinct as intervals")

    min_len = min(family.lengths())
    min_length_ok = min_len >= min_length
    if not min_length_ok:
        msgs.append(f"minimal segment length {min_len:g} is below required {min_length:g}")

    class_msgs = _class_invariant_messages(family)
    msgs.extend(class_msgs)
    class_ok = not class_msgs

    return ValidationReport(
        passed=distinct_ok and min_length_ok and class_ok,
        distinct_ok=distinct_ok,
        min_length_ok=min_length_ok,
        class_ok=class_ok,
        min_length_observed=min_len,
        messages=tuple(msgs),
    )


def family_to_dict(family: SegmentFamily) -> dict:
    out: dict = {"class": family.class_tag.value, "d": family.d}
    out.update(family.params)
    out["segments"] = [[s.alpha, s.beta] for s in family.segments]
    return out


def family_to_json(family: SegmentFamily) -> str:
    """Serialize to JSON; floats use the shortest round-trip decimals."""
    return json.dumps(family_to_dict(family))


def family_from_dict(data: dict, allow_degenerate: bool = False) -> SegmentFamily:
    try:
        tag = ClassTag(data["class"])
        raw = data["segments"]
    except (KeyError, ValueError) as exc:
        raise InvalidInputError(f"malformed family payload: {exc}") from exc
    params = {k: v for k, v in data.items() if k not in ("class", "d", "segments")}
    fam = family_from_segments(
        [(float(a), float(b)) for a, b in raw],
        class_tag=tag,
        params=params,
        allow_degenerate=allow_degenerate,
    )
    if "d" in data and int(data["d"]) != fam.d:
        raise InvalidInputError(f"declared d={data['d']} but {fam.d} segments given")
    return fam


def family_from_json(text: str, allow_degenerate: bool = False) -> SegmentFamily:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"family payload is not valid JSON: {exc}") from exc
    return family_from_dict(data, allow_degenerate=allow_degenerate)
