"""Frobenius problem for Lucas-shifted numerical semigroup families.

Closed forms for the S(a)/T(a) families cross-checked against a generic
numerical-semigroup oracle.
"""

from .backend import BACKEND
from .families import (
    FamilyReport,
    apery_closed_form,
    build_S,
    build_T,
    check_S_T_decomposition,
    embedding_dimension_closed,
    frobenius_S_closed,
    frobenius_T_closed,
    genus_S_binomial,
    genus_S_closed,
    genus_T_closed,
    genus_beta_sum,
    oracle_report,
    report,
)
from .semigroup import (
    DEFAULT_TABLE_BOUND,
    AperyTable,
    NotNumericalSemigroupError,
    NumericalSemigroup,
    TableBoundExceeded,
    from_generators,
)
from .sequences import SequenceCache, fibonacci, lucas, lucas_tilde
from .zeckendorf import (
    SparseSubset,
    ZeckendorfDecomposition,
    beta,
    beta_bruteforce,
    count_sparse_subsets,
    decompose,
    enumerate_L,
    enumerate_sparse_subsets,
    gamma,
)

__version__ = "0.1.0"

__all__ = [
    "AperyTable",
    "BACKEND",
    "DEFAULT_TABLE_BOUND",
    "FamilyReport",
    "NotNumericalSemigroupError",
    "NumericalSemigroup",
    "SequenceCache",
    "SparseSubset",
    "TableBoundExceeded",
    "ZeckendorfDecomposition",
    "apery_closed_form",
    "beta",
    "beta_bruteforce",
    "build_S",
    "build_T",
    "check_S_T_decomposition",
    "count_sparse_subsets",
    "decompose",
    "embedding_dimension_closed",
    "enumerate_L",
    "enumerate_sparse_subsets",
    "fibonacci",
    "from_generators",
    "frobenius_S_closed",
    "frobenius_T_closed",
    "gamma",
    "genus_S_binomial",
    "genus_S_closed",
    "genus_T_closed",
    "genus_beta_sum",
    "lucas",
    "lucas_tilde",
    "oracle_report",
    "report",
]
