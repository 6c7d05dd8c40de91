"""Integer partitions as ascending compositions."""

from fractions import Fraction

from ._core import (
    CapacityError,
    DomainError,
    check_op_counts,
    compositions,
    decode_path,
    for_each_composition,
    op_counts,
    partition_count,
    r1_exact,
    r2_exact,
    ratio_count,
    restricted_count,
    tree_dot,
    verify,
)

__version__ = "0.1.0"


def r1(n):
    """Assignment-count ratio of version 3 to version 2, as a Fraction."""
    return Fraction(*r1_exact(n))


def r2(n):
    """Boolean-evaluation ratio of version 3 to version 2, as a Fraction."""
    return Fraction(*r2_exact(n))


__all__ = [
    "CapacityError",
    "DomainError",
    "check_op_counts",
    "compositions",
    "decode_path",
    "for_each_composition",
    "op_counts",
    "partition_count",
    "r1",
    "r2",
    "ratio_count",
    "restricted_count",
    "tree_dot",
    "verify",
]
