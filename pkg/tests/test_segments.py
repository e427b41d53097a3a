import json
import math

import pytest
from hypothesis import given, strategies as st

from histocond import (
    ClassTag,
    InvalidInputError,
    Segment,
    family_from_json,
    family_to_json,
    make_c3,
    make_c4_translates,
    make_chain_c1,
    make_chebyshev_c2,
    make_counterexample_symmetric,
    make_equidistributed_c1,
    validate_family,
)

PI = math.pi


def endpoints(family):
    return [(s.alpha, s.beta) for s in family]


class TestChainC1:
    def test_two_segments(self):
        fam = make_chain_c1([-1.0, 0.0, 1.0])
        assert endpoints(fam) == [(-1.0, 0.0), (0.0, 1.0)]
        assert fam.class_tag == ClassTag.C1

    def test_unit_lengths(self):
        fam = make_chain_c1([0.0, 1.0, 2.0, 3.0])
        assert fam.lengths() == [1.0, 1.0, 1.0]

    def test_single_breakpoint_rejected(self):
        with pytest.raises(InvalidInputError):
            make_chain_c1([0.0])

    def test_non_increasing_rejected(self):
        with pytest.raises(InvalidInputError):
            make_chain_c1([0.0, 1.0, 1.0])


class TestEquidistributedC1:
    def test_two_halves(self):
        fam = make_equidistributed_c1(-1.0, 1.0, 2)
        assert endpoints(fam) == [(-1.0, 0.0), (0.0, 1.0)]

    def test_quarter_lengths(self):
        fam = make_equidistributed_c1(-1.0, 1.0, 4)
        assert fam.lengths() == pytest.approx([0.5] * 4, abs=1e-15)

    def test_reversed_interval_rejected(self):
        with pytest.raises(InvalidInputError):
            make_equidistributed_c1(1.0, -1.0, 3)

    def test_zero_count_rejected(self):
        with pytest.raises(InvalidInputError):
            make_equidistributed_c1(-1.0, 1.0, 0)


class TestChebyshevC2:
    def test_single_arc_covers_reference_interval(self):
        fam = make_chebyshev_c2(1, PI / 2)
        (seg,) = fam.segments
        assert seg.alpha == pytest.approx(-1.0, abs=1e-15)
        assert seg.beta == pytest.approx(1.0, abs=1e-15)

    def test_two_arcs_direct_cosines(self):
        fam = make_chebyshev_c2(2, PI / 4)
        # tau = pi/4, 3pi/4: cosines of tau -+ pi/4 give [0,1] and [-1,0].
        expected = [
            (math.cos(PI / 2), math.cos(0.0)),
            (math.cos(PI), math.cos(PI / 2)),
        ]
        for (a, b), (ea, eb) in zip(endpoints(fam), expected):
            assert a == ea and b == eb
        assert fam[0].alpha == pytest.approx(0.0, abs=1e-15)
        assert fam[1].beta == pytest.approx(0.0, abs=1e-15)

    def test_arc_too_wide_rejected(self):
        with pytest.raises(InvalidInputError):
            make_chebyshev_c2(2, PI)

    def test_nonpositive_rho_rejected(self):
        with pytest.raises(InvalidInputError):
            make_chebyshev_c2(3, 0.0)

    @pytest.mark.parametrize("d", [2, 3, 8, 33])
    def test_boundary_rho_chains_after_reversal(self, d):
        # rho = pi/(2d) makes consecutive arcs share endpoints.
        fam = make_chebyshev_c2(d, PI / (2 * d))
        for i in range(d - 1):
            assert fam[i].alpha == pytest.approx(fam[i + 1].beta, abs=1e-12)


class TestC3:
    def test_shared_left_endpoint(self):
        fam = make_c3(0.0, (1.0, 2.0, 3.0), side="left")
        assert endpoints(fam) == [(0.0, 1.0), (0.0, 2.0), (0.0, 3.0)]
        assert fam.class_tag == ClassTag.C3_LEFT

    def test_duplicate_endpoints_rejected(self):
        with pytest.raises(InvalidInputError):
            make_c3(0.0, (1.0, 1.0, 2.0), side="left")

    def test_shared_right_endpoint(self):
        fam = make_c3(1.0, (0.0, -1.0), side="right")
        assert endpoints(fam) == [(0.0, 1.0), (-1.0, 1.0)]
        assert fam.class_tag == ClassTag.C3_RIGHT

    def test_ordering_violation_rejected(self):
        with pytest.raises(InvalidInputError):
            make_c3(0.0, (1.0, -1.0), side="left")


class TestC4Translates:
    def test_integer_offsets_make_a_chain(self):
        fam = make_c4_translates((0.0, 1.0), (0.0, 1.0, 2.0))
        assert endpoints(fam) == [(0.0, 1.0), (1.0, 2.0), (2.0, 3.0)]

    def test_overlapping_translates_are_valid(self):
        fam = make_c4_translates((0.0, 0.3), (0.0, 0.1))
        assert fam.d == 2
        assert validate_family(fam).passed

    def test_duplicate_offsets_rejected(self):
        with pytest.raises(InvalidInputError):
            make_c4_translates((0.0, 1.0), (0.0, 0.0))

    def test_degenerate_reference_rejected(self):
        with pytest.raises(InvalidInputError):
            make_c4_translates((0.5, 0.5), (0.0, 1.0))

    @given(
        a=st.floats(-1.0, 1.0),
        length=st.floats(1.0, 2.0),
        xis=st.lists(st.floats(-2.0, 2.0), min_size=2, max_size=8, unique=True),
    )
    def test_lengths_identical(self, a, length, xis):
        fam = make_c4_translates((a, a + length), xis)
        lens = fam.lengths()
        assert (max(lens) - min(lens)) / max(lens) <= 1e-15


class TestCounterexample:
    def test_three_nested(self):
        fam = make_counterexample_symmetric(3)
        assert endpoints(fam) == [(-1.0, 1.0), (-2.0, 2.0), (-3.0, 3.0)]
        assert fam.class_tag == ClassTag.COUNTEREXAMPLE

    def test_single(self):
        assert endpoints(make_counterexample_symmetric(1)) == [(-1.0, 1.0)]

    def test_zero_rejected(self):
        with pytest.raises(InvalidInputError):
            make_counterexample_symmetric(0)


class TestValidateFamily:
    def test_min_length_pass(self):
        report = validate_family(make_equidistributed_c1(-1.0, 1.0, 4), 0.4)
        assert report.passed and report.min_length_ok

    def test_min_length_fail(self):
        report = validate_family(make_equidistributed_c1(-1.0, 1.0, 4), 0.6)
        assert not report.passed
        assert not report.min_length_ok
        assert report.distinct_ok and report.class_ok
        assert report.min_length_observed == pytest.approx(0.5)

    def test_c2_unit_lengths(self):
        report = validate_family(make_chebyshev_c2(2, PI / 4), 0.5)
        assert report.passed
        assert report.min_length_observed == pytest.approx(1.0, abs=1e-15)

    @pytest.mark.parametrize(
        "family",
        [
            make_chain_c1([0.0, 0.5, 2.0]),
            make_equidistributed_c1(-1.0, 1.0, 5),
            make_chebyshev_c2(6, PI / 16),
            make_c3(-0.5, (0.0, 0.25, 1.0)),
            make_c3(2.0, (1.0, 0.0), side="right"),
            make_c4_translates((0.0, 0.4), (-1.0, -0.3, 0.7)),
            make_counterexample_symmetric(4),
        ],
        ids=lambda f: f.class_tag.value,
    )
    def test_every_constructor_satisfies_its_class(self, family):
        assert validate_family(family, 0.0).passed


class TestJsonRoundTrip:
    def test_c2_payload_shape(self):
        fam = make_chebyshev_c2(8, PI / 16)
        data = json.loads(family_to_json(fam))
        assert data["class"] == "C2"
        assert data["d"] == 8
        assert data["rho"] == PI / 16
        assert len(data["segments"]) == 8

    @pytest.mark.parametrize(
        "family",
        [
            make_chain_c1([-1.0, -0.25, 0.5]),
            make_chebyshev_c2(5, 0.19),
            make_c3(0.0, (1.0, 2.0, 3.0)),
            make_c4_translates((0.0, 0.3), (0.0, 0.1)),
            make_counterexample_symmetric(2),
        ],
        ids=lambda f: f.class_tag.value,
    )
    def test_exact_round_trip(self, family):
        clone = family_from_json(family_to_json(family))
        assert clone.class_tag == family.class_tag
        assert [s.as_tuple() for s in clone] == [s.as_tuple() for s in family]
        assert validate_family(clone).passed

    def test_declared_d_mismatch_rejected(self):
        with pytest.raises(InvalidInputError):
            family_from_json('{"class": "C1", "d": 3, "segments": [[0, 1], [1, 2]]}')


def test_segment_rejects_reversed_endpoints():
    with pytest.raises(InvalidInputError):
        Segment(1.0, 0.0)


def test_segment_rejects_non_finite():
    with pytest.raises(InvalidInputError):
        Segment(0.0, math.inf)
