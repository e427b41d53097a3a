import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from histocond import (
    BasisKind,
    EvaluationError,
    IllConditionedError,
    InvalidInputError,
    UnisolvenceError,
    eval_basis,
    eval_fit,
    fit,
    lagrange_coefficients,
    make_chain_c1,
    make_chebyshev_c2,
    make_counterexample_symmetric,
    make_equidistributed_c1,
    moments,
)
from histocond.histofit import FitResult

PI = math.pi


class TestMoments:
    def test_constant(self):
        fam = make_chain_c1([0.0, 2.0])
        np.testing.assert_allclose(moments(lambda x: np.ones_like(x), fam, 4), [2.0])

    def test_linear_two_segments(self):
        fam = make_chain_c1([-1.0, 0.0, 1.0])
        np.testing.assert_allclose(moments(lambda x: x, fam, 2), [-0.5, 0.5], atol=1e-15)

    def test_order_one_is_midpoint_rule(self):
        fam = make_chain_c1([0.0, 1.0])
        got = moments(lambda x: x * x, fam, 1)
        np.testing.assert_allclose(got, [0.25])  # exact value is 1/3

    def test_scalar_only_callable_supported(self):
        fam = make_chain_c1([0.0, 1.0])
        np.testing.assert_allclose(moments(math.sin, fam, 16), [1.0 - math.cos(1.0)])

    def test_non_finite_value_reported_with_abscissa(self):
        fam = make_chain_c1([0.0, 1.0])
        with pytest.raises(EvaluationError) as info:
            moments(lambda x: np.where(x > 0.4, np.nan, x), fam, 8)
        assert 0.0 <= info.value.abscissa <= 1.0

    def test_zero_order_rejected(self):
        with pytest.raises(InvalidInputError):
            moments(lambda x: x, make_chain_c1([0.0, 1.0]), 0)


class TestFit:
    def test_identity_function_is_its_own_histopolant(self):
        result = fit(lambda x: x, make_chain_c1([-1.0, 0.0, 1.0]), BasisKind.MONOMIAL)
        np.testing.assert_allclose(result.coeffs, [0.0, 1.0], atol=1e-14)
        assert result.residual_max <= 1e-12

    def test_degree_three_chebyshev_reproduced_exactly(self):
        f = lambda x: eval_basis(BasisKind.CHEBYSHEV_FIRST, 4, x)  # degree 3
        result = fit(f, make_chebyshev_c2(4, PI / 8), BasisKind.CHEBYSHEV_SECOND)
        assert result.residual_max <= 1e-10

    def test_counterexample_raises_unisolvence(self):
        with pytest.raises(UnisolvenceError):
            fit(lambda x: x, make_counterexample_symmetric(2), BasisKind.MONOMIAL)

    def test_condition_cap_carries_estimate(self):
        fam = make_equidistributed_c1(-1.0, 1.0, 8)
        with pytest.raises(IllConditionedError) as info:
            fit(lambda x: x, fam, BasisKind.MONOMIAL, cond_cap=5.0)
        assert info.value.estimate > 5.0

    @given(
        coeffs=st.lists(st.floats(-1.0, 1.0), min_size=1, max_size=12),
        family_kind=st.sampled_from(["c1", "c2"]),
    )
    def test_polynomial_reproduction_property(self, coeffs, family_kind):
        d = len(coeffs)
        poly = np.polynomial.Polynomial(coeffs)
        if family_kind == "c1":
            fam, kind = make_equidistributed_c1(-1.0, 1.0, d), BasisKind.MONOMIAL
        else:
            fam, kind = make_chebyshev_c2(d, PI / (2 * d)), BasisKind.CHEBYSHEV_SECOND
        result = fit(poly, fam, kind)
        grid = np.linspace(-1.0, 1.0, 500)
        assert np.max(np.abs(eval_fit(result, grid) - poly(grid))) <= 1e-8

    def test_linearity_of_coefficients(self):
        fam = make_chebyshev_c2(6, PI / 12)
        kind = BasisKind.CHEBYSHEV_SECOND
        f = lambda x: np.sin(2.0 * x)
        g = lambda x: np.exp(0.5 * x)
        combo = fit(lambda x: 2.0 * f(x) - 3.0 * g(x), fam, kind)
        separate = 2.0 * fit(f, fam, kind).coeffs - 3.0 * fit(g, fam, kind).coeffs
        np.testing.assert_allclose(combo.coeffs, separate, atol=1e-10)

    def test_coefficients_match_lagrange_expansion(self):
        fam = make_equidistributed_c1(-1.0, 1.0, 5)
        kind = BasisKind.MONOMIAL
        f = lambda x: np.cos(3.0 * x)
        L = lagrange_coefficients(fam, kind)
        np.testing.assert_allclose(
            fit(f, fam, kind).coeffs, L @ moments(f, fam), atol=1e-9
        )

    def test_basis_independence_pointwise(self):
        f = lambda x: np.tanh(2.0 * x) + 0.1 * x
        grid = np.linspace(-1.0, 1.0, 400)
        for d in (4, 8, 12):
            fam = make_equidistributed_c1(-1.0, 1.0, d)
            fits = {}
            for kind in (BasisKind.MONOMIAL, BasisKind.CHEBYSHEV_SECOND):
                fits[kind] = fit(f, fam, kind)
            if all(r.cond_estimate < 1e10 for r in fits.values()):
                vals = [eval_fit(r, grid) for r in fits.values()]
                assert np.max(np.abs(vals[0] - vals[1])) <= 1e-7


class TestEvalFit:
    def _result(self, coeffs, kind):
        return FitResult(
            coeffs=np.asarray(coeffs, dtype=float),
            kind=kind,
            family=make_chain_c1([0.0, 1.0, 2.0][: len(coeffs) + 1]),
            residual_max=0.0,
            cond_estimate=1.0,
        )

    def test_monomial_linear(self):
        assert eval_fit(self._result([0.0, 1.0], BasisKind.MONOMIAL), 3.0) == 3.0

    def test_second_kind_constant(self):
        r = FitResult(
            coeffs=np.array([1.0, 0.0, 0.0]),
            kind=BasisKind.CHEBYSHEV_SECOND,
            family=make_chain_c1([0.0, 1.0, 2.0, 3.0]),
            residual_max=0.0,
            cond_estimate=1.0,
        )
        for x in (-2.0, 0.0, 0.7):
            assert eval_fit(r, x) == 1.0

    def test_second_kind_linear(self):
        assert eval_fit(self._result([0.0, 1.0], BasisKind.CHEBYSHEV_SECOND), 0.5) == 1.0

    def test_array_evaluation(self):
        r = self._result([0.0, 1.0], BasisKind.MONOMIAL)
        np.testing.assert_array_equal(eval_fit(r, np.array([0.0, 2.0])), [0.0, 2.0])
