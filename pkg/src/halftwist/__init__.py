"""Exact eigenspace-graded Hodge data of cyclic covers of projective
space, the half-twist calculus on CM Hodge structures, and a ledger of
recorded dimension claims verified by recomputation."""

from .cyclotomic import (
    CyclotomicData,
    InvalidDegreeError,
    InvalidEmbeddingError,
    all_cm_types,
    conjugate,
    make_cyclotomic,
)
from .hodge import (
    AbelianSummary,
    CMHodgeStructure,
    EmptyStructureError,
    FieldMismatchError,
    MalformedStructureError,
    NoHalfTwistError,
    NotWeightOneError,
    TwistRangeError,
    abelian_summary,
    collapse_residues,
    direct_sum,
    has_positive_half_twist,
    invariant_part,
    k_minus_half,
    level,
    neg_half_twist,
    pos_half_twist,
    tate_twist,
    tensor,
    tensor_invariants,
    trivial_on_units,
    unit_structure,
)
from .jacobian import (
    GradedQuotient,
    MonomialCountQuery,
    SquareFreeElement,
    UnsupportedCaseError,
    build_w_quotient,
    count_bounded_monomials,
    count_bounded_monomials_enumerated,
    eigenspace_dims,
    exact_rank,
    hypersurface_hodge_numbers,
    primitive_middle_rank,
    sf_multiply,
    shioda_tuple_count,
    torelli_deformation_dimension,
    torelli_differential_rank,
    torelli_witness_nonzero,
    verify_cover_parametrization,
    w_ladder_steps,
)
from .covers import (
    CorollaryCheck,
    CoverSpec,
    DecompositionPart,
    DecompositionReport,
    QTDecomposition,
    build_W,
    corollary_check,
    curve_h1,
    dim_identity_check,
    euler_recursion_rank,
    fermat_gamma_invariants,
    gamma_invariant_h1_dimension,
    half_twist_any_cmtype,
    half_twist_exists_derived,
    half_twist_exists_direct,
    half_twist_exists_printed,
    ks_invariant_space,
    order_part_as_substructure,
    primitive_V,
    primitive_cohomology,
    qt_decompose,
    quartic_W_split,
    quartic_isogeny_report,
    secondary_parts,
    z_decomposition,
)
from .claims import Claim, VerificationReport, all_claims, run_verification

__version__ = "0.1.0"
