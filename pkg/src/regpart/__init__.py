"""Restricted partition families, the merge correspondence between them,
part statistics, and exact generating function checks."""

from .classes import (
    ALL,
    CLASS_REGULAR,
    INFERIOR_REGULAR,
    REGULAR,
    EmptyTuple,
    ModulusTuple,
    NotCoprime,
    PartitionClass,
    TooSmall,
    count_class,
    enumerate_class,
    is_member,
    validate_tuple,
)
from .glaisher import (
    MERGE,
    SPLIT,
    BijectionTriple,
    GlaisherTrace,
    InvalidTriple,
    NotRegular,
    factor_out,
    glaisher_forward,
    glaisher_inverse,
    insertion_map,
    insertion_preimages,
)
from .partition import NotSubMultiset, Partition
from .qseries import (
    NonInvertible,
    SeriesCheck,
    TruncatedSeries,
    euler_product,
    geometric_tail,
    gf_class,
    gf_tuple_inferior,
    verify_series_vs_enumeration,
)
from .stats import (
    LengthCheck,
    XYCReport,
    XYCRow,
    aggregate,
    count_congruent_parts,
    count_repeated_sizes,
    verify_length_identity,
    verify_xyc,
)

__version__ = "0.1.0"

__all__ = [
    "ALL",
    "CLASS_REGULAR",
    "INFERIOR_REGULAR",
    "REGULAR",
    "MERGE",
    "SPLIT",
    "BijectionTriple",
    "EmptyTuple",
    "GlaisherTrace",
    "InvalidTriple",
    "LengthCheck",
    "ModulusTuple",
    "NonInvertible",
    "NotCoprime",
    "NotRegular",
    "NotSubMultiset",
    "Partition",
    "PartitionClass",
    "SeriesCheck",
    "TooSmall",
    "TruncatedSeries",
    "XYCReport",
    "XYCRow",
    "aggregate",
    "count_class",
    "count_congruent_parts",
    "count_repeated_sizes",
    "enumerate_class",
    "euler_product",
    "factor_out",
    "geometric_tail",
    "gf_class",
    "gf_tuple_inferior",
    "glaisher_forward",
    "glaisher_inverse",
    "insertion_map",
    "insertion_preimages",
    "is_member",
    "validate_tuple",
    "verify_length_identity",
    "verify_series_vs_enumeration",
    "verify_xyc",
    "__version__",
]
