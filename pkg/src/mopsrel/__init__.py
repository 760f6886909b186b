"""Exact rational computation with monic orthogonal polynomial sequences,
moment functionals, and 2-3 linear structure relations between families."""

from .casebook import (
    ChebyshevCaseReport,
    JacobiChainReport,
    chebyshev_case,
    half_case_closed_forms,
    jacobi_chain,
)
from .errors import ContractError, DepthError, DomainError, FormatError
from .families import (
    JacobiParams,
    chebyshev_kind,
    jacobi_norm_ratio,
    jacobi_recurrence,
)
from .functional import (
    MomentFunctional,
    RecurrencePair,
    RecurrenceReport,
    check_simple_set,
    moments_from_recurrence,
    mops_from_recurrence,
    norm_squared,
    recurrence_from_moments,
)
from .poly import Polynomial
from .rational import as_scalar, format_rational, parse_rational
from .relation23 import (
    AuxiliarySequences,
    Failure,
    FunctionalRelation,
    InverseVerdict,
    Relation23,
    RelationCase,
    RelationTag,
    auxiliary_sequences,
    check_by_constants,
    check_by_equations,
    classify,
    constant_sequences,
    generate_q,
    induced_recurrence,
    regularity_criterion,
    relation_constants,
    v_moments_from_relation,
    verify_functional_relation,
)

__version__ = "0.1.0"

__all__ = [
    "AuxiliarySequences",
    "ChebyshevCaseReport",
    "ContractError",
    "DepthError",
    "DomainError",
    "Failure",
    "FormatError",
    "FunctionalRelation",
    "InverseVerdict",
    "JacobiChainReport",
    "JacobiParams",
    "MomentFunctional",
    "Polynomial",
    "RecurrencePair",
    "RecurrenceReport",
    "Relation23",
    "RelationCase",
    "RelationTag",
    "as_scalar",
    "auxiliary_sequences",
    "chebyshev_case",
    "chebyshev_kind",
    "check_by_constants",
    "check_by_equations",
    "check_simple_set",
    "classify",
    "constant_sequences",
    "format_rational",
    "generate_q",
    "half_case_closed_forms",
    "induced_recurrence",
    "jacobi_chain",
    "jacobi_norm_ratio",
    "jacobi_recurrence",
    "moments_from_recurrence",
    "mops_from_recurrence",
    "norm_squared",
    "parse_rational",
    "recurrence_from_moments",
    "regularity_criterion",
    "relation_constants",
    "v_moments_from_relation",
    "verify_functional_relation",
]
