"""Segmental polynomial histopolation and the conditioning of its matrices."""

from .bases import (
    BasisKind,
    eval_basis,
    eval_basis_columns,
    integral_basis,
    integral_basis_columns,
    monic_chebyshev_coeffs,
)
from .conditioning import (
    ConditioningReport,
    frob_inv_upper_c2,
    frob_norm_limit_c2,
    kappa2_closed_form_c2,
    kappa2_limit_c2,
    kappa2_lower_bound_monomial,
    kappa2_svd,
    kappaF,
    sin_product,
    sine_integral,
)
from .errors import (
    ContractViolationError,
    EvaluationError,
    HistocondError,
    IllConditionedError,
    InvalidInputError,
    NumericalFailureError,
    SingularFormulaError,
    UnisolvenceError,
    UnsupportedError,
)
from .familyspec import FamilySpec
from .histofit import FitResult, eval_fit, fit, moments
from .segments import (
    ClassTag,
    Segment,
    SegmentFamily,
    ValidationReport,
    family_from_dict,
    family_from_json,
    family_from_segments,
    family_to_dict,
    family_to_json,
    make_c3,
    make_c4_translates,
    make_chain_c1,
    make_chebyshev_c2,
    make_counterexample_symmetric,
    make_equidistributed_c1,
    validate_family,
)
from .sweep import (
    FeketeResult,
    SweepConfig,
    SweepRow,
    fekete_c3_search,
    rows_to_csv,
    run_sweep,
)
from .vandermonde import (
    assemble,
    assemble_normalized,
    det_closed_form_c2,
    det_closed_form_c3,
    det_exact_rational_c3,
    det_numeric,
    dump_matrix,
    gram,
    inverse_c2_gram,
    inverse_entry_reference_formula,
    lagrange_coefficients,
    parse_matrix,
)
from .verify import VerifyReport, verify_all

__version__ = "0.1.0"
