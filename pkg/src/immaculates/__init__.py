"""Skew immaculate noncommutative symmetric functions, exactly.

Exact H-basis expansions via noncommutative determinants, zero/nonzero
classification of composition pairs with matching certificates, and a
commutative Schur-polynomial bridge for cross-validation.
"""

from .compositions import (
    enumerate_compositions,
    format_parts,
    hat,
    is_composition,
    is_partition,
    is_weak_composition,
    is_zero_padded_partition,
    pad_to_length,
    parse_parts,
    strip_trailing_zeros,
    unhat,
)
from .errors import DimensionCapError, GreedyPreconditionError, LengthMismatchError
from .hwords import HExpansion, concat, normalize_word
from .matrix import (
    SubscriptMatrix,
    build_matrix,
    check_partition_row_monotonicity,
    has_negative_crossing_violation,
    row_nonneg_counts,
    sign_pattern,
)
from .ndet import (
    DEFAULT_DIM_CAP,
    SignedSelection,
    immaculate,
    ndet_laplace,
    ndet_permutation_sum,
    permutation_sign,
    skew_immaculate,
    term_of_selection,
)
from .predicates import (
    Classification,
    Outcome,
    certificate_agrees_with_condition,
    classify,
    find_matching_certificate,
    format_certificate,
    greedy_h0_term,
    necessary_condition_holds,
    no_all_negative_row,
    nocancel_conditions_hold,
)
from .symfunc import (
    Poly,
    Tableau,
    forgetful,
    generate_ssyt,
    h_poly,
    m_poly,
    schur_decompose,
    schur_via_jacobi_trudi,
    schur_via_tableaux,
)

__version__ = "0.1.0"
