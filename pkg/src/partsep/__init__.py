"""Parity- and residue-separated partitions: bijection, class counts, q-series checks."""

from .bijection import BijectionReport, phi, psi, psi_trace, verify_bijection
from .classes import (
    ClassSpec,
    Kind,
    SignedCount,
    classify_B,
    count_class,
    is_in_A,
    is_in_AP_class,
    is_in_D,
    is_in_distinct_residue_class,
    is_in_O,
    signed_count_B,
)
from .errors import (
    DivergentProduct,
    ForeignResidue,
    IntegerOverflow,
    InternalConsistencyError,
    NegativeEntry,
    NegativePart,
    NonUnitConstantTerm,
    NotInClass,
    PartsepError,
)
from .partitions import (
    Partition,
    ResidueSplit,
    componentwise_diff,
    componentwise_sum,
    decompose_by_residue,
    make_partition,
    multiset_union,
    parse_partition,
    partitions_of,
    staircase,
)
from .qseries import Monomial, QSeries

__version__ = "0.1.0"
