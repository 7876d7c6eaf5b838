"""On-line longest common extension queries under exact comparison accounting."""

from ._backend import BACKEND, available_backends
from .covers import (DifferenceCover, MonotoneCoverFamily, TCover, build_difference_cover,
                     build_t_cover, find_shift, monotone_member, monotone_shift,
                     verify_difference_cover)
from .errors import UsageError
from .lce import (BatchResult, LceIndex, QueryError, build_index, default_block_length, lce,
                  lce_unordered)
from .runs import Run, compute_runs
from .text import ORDERED, UNORDERED, ComparisonStats, Ordering, Text

__all__ = [
    "BACKEND", "BatchResult", "ComparisonStats", "DifferenceCover", "LceIndex",
    "MonotoneCoverFamily", "ORDERED", "Ordering", "QueryError", "Run", "TCover", "Text",
    "UNORDERED", "UsageError", "available_backends", "build_difference_cover", "build_index",
    "build_t_cover", "compute_runs", "default_block_length", "find_shift", "lce",
    "lce_unordered", "monotone_member", "monotone_shift", "verify_difference_cover",
]
