"""Exact computations with tree modules over the n-Kronecker quiver."""

from .cover import (
    LabeledSubtree,
    canonical_code,
    canonical_construction,
    cover_thin_tree,
    default_composition,
    dualize,
    enumerate_subtrees,
    overlap_alignments,
    permute_labels,
    small_case_construction,
)
from .errors import (
    ArithmeticRangeError,
    BudgetExceededError,
    DomainError,
    FieldMismatchError,
    KronrepError,
    UnsupportedIndexError,
)
from .linalg import F2, F3, QQ, FieldSpec
from .representation import (
    KroneckerModule,
    coefficient_quiver_report,
    end_is_local,
    hom_dim_via_overlaps,
    hom_space,
    iso_cover_thin,
    pushdown,
)
from .roots import (
    CoxeterConvention,
    DimVector,
    classify,
    coxeter,
    cover_thin_exists,
    in_fundamental_domain,
    preinjective_dims,
    preprojective_dims,
    reduce_to_fundamental_domain,
    reflect_sink,
    reflect_source,
    tits_form,
)
from .verify import verify_theorem_window

__version__ = "0.1.0"
