"""Lengths of factorizations in numerical semigroups and the Delta-nu function."""

from .bounds import (
    BelowBound,
    BoundsProfile,
    EmbeddingDimensionTooSmall,
    compute_bounds,
    compute_d,
    zone_classify,
)
from .core import (
    Degenerate,
    NotPrimitive,
    NumericalSemigroup,
    SemigroupError,
    contains,
    gaps_of,
    new_semigroup,
    parse_generators,
)
from .factorization import (
    Factorization,
    LengthSet,
    delta_nu_naive,
    delta_of_element,
    factorizations,
    length_set,
    nu,
    w_set,
)
from .fastdnu import (
    BelowN0,
    DeltaNuRecord,
    ZoneDecomposition,
    decompose,
    delta_nu_fast,
    delta_nu_record,
    window_w_set,
)
from .periodicity import (
    PeriodReport,
    PeriodViolation,
    WindowTooSmall,
    delta_nu_table,
    lcm_period,
    minimal_period_report,
    verify_shift_invariance,
)
from .scan import ScanEntry, ScanFilter, genus_tree_scan, is_generalized_arithmetic

__version__ = "0.1.0"
