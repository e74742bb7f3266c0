"""Longest-repeat queries over every position of a text.

Pipeline: suffix/rank/LCP arrays -> raw array of left-bounded longest
repeats -> optional stream compaction -> per-position leftmost or all-ties
queries, sequentially or data-parallel across threads.
"""

from repeatscan._backend import BACKEND
from repeatscan.engine import ExecPolicy, parallel_for, parallel_scan
from repeatscan.llr import (
    CompactLlr,
    LlrEntry,
    build_compact_llr,
    build_raw_llr,
    compact_llr_sequential,
    compute_flags,
    prefix_sum,
    scatter_compact,
)
from repeatscan.oracle import is_repeat, oracle_all_lr, oracle_llr
from repeatscan.query import (
    AllAnswers,
    LeftmostAnswers,
    LrAnswer,
    NO_LR,
    all_lr_compact,
    all_lr_raw,
    all_positions,
    find_start_index,
    leftmost_lr_compact,
    leftmost_lr_raw,
)
from repeatscan.stats import WalkStats, compute_walk_stats
from repeatscan.suffixes import (
    SuffixStructures,
    build_suffix_structures,
    verify_suffix_structures,
)
from repeatscan.text import Text

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ExecPolicy",
    "parallel_for",
    "parallel_scan",
    "CompactLlr",
    "LlrEntry",
    "build_compact_llr",
    "build_raw_llr",
    "compact_llr_sequential",
    "compute_flags",
    "prefix_sum",
    "scatter_compact",
    "is_repeat",
    "oracle_all_lr",
    "oracle_llr",
    "AllAnswers",
    "LeftmostAnswers",
    "LrAnswer",
    "NO_LR",
    "all_lr_compact",
    "all_lr_raw",
    "all_positions",
    "find_start_index",
    "leftmost_lr_compact",
    "leftmost_lr_raw",
    "WalkStats",
    "compute_walk_stats",
    "SuffixStructures",
    "build_suffix_structures",
    "verify_suffix_structures",
    "Text",
]
