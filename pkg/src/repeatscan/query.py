"""Longest-repeat queries per text position.

Two interchangeable paths: a leftward linear walk over the raw LLR array,
or a binary search plus rightward walk over the compact array.  Both answer
either the leftmost longest repeat covering a position or all tied ones.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from repeatscan._backend import kernels
from repeatscan.engine import ExecPolicy, parallel_for, parallel_scan
from repeatscan.llr import CompactLlr, LlrEntry, build_compact_llr, build_raw_llr
from repeatscan.suffixes import SuffixStructures, build_suffix_structures
from repeatscan.text import Text

RAW = "raw"
COMPACT = "compact"
LEFTMOST = "leftmost"
ALL = "all"


class LrAnswer(NamedTuple):
    start: int
    length: int

    @property
    def exists(self) -> bool:
        return self.start != -1


NO_LR = LrAnswer(-1, 0)


def _check_pos(k: int, n: int) -> None:
    if not 1 <= k <= n:
        raise IndexError(f"position {k} out of range 1..{n}")


def leftmost_lr_raw(raw: np.ndarray, k: int) -> LrAnswer:
    """Leftmost longest repeat covering k via a leftward walk from k."""
    _check_pos(k, raw.size - 1)
    best = NO_LR
    for i in range(k, 0, -1):
        if i + raw[i] - 1 < k:
            break
        if raw[i] >= best.length:
            best = LrAnswer(i, int(raw[i]))
    return best


def all_lr_raw(raw: np.ndarray, k: int) -> list[LrAnswer]:
    """All longest repeats covering k, in increasing start order."""
    _check_pos(k, raw.size - 1)
    best_len = 0
    for i in range(k, 0, -1):
        if i + raw[i] - 1 < k:
            break
        if raw[i] > best_len:
            best_len = int(raw[i])
    if best_len == 0:
        return []
    hits = []
    for i in range(k, 0, -1):
        if i + raw[i] - 1 < k:
            break
        if raw[i] == best_len:
            hits.append(LrAnswer(i, best_len))
    hits.reverse()
    return hits


def find_start_index(c: CompactLlr, k: int) -> int | None:
    """Smallest 1-based entry index whose right end is >= k, or None."""
    if k < 1:
        raise IndexError(f"position {k} out of range")
    t = bisect_left(c.ends, k)
    return t + 1 if t < c.size else None


def leftmost_lr_compact(c: CompactLlr, k: int, n: int | None = None) -> LrAnswer:
    """Leftmost longest repeat covering k via binary search + rightward walk."""
    if n is not None:
        _check_pos(k, n)
    elif k < 1:
        raise IndexError(f"position {k} out of range")
    t = find_start_index(c, k)
    best = NO_LR
    if t is None:
        return best
    for idx in range(t - 1, c.size):
        if c.starts[idx] > k:
            break
        if c.lengths[idx] > best.length:
            best = LrAnswer(int(c.starts[idx]), int(c.lengths[idx]))
    return best


def all_lr_compact(c: CompactLlr, k: int, n: int | None = None) -> list[LrAnswer]:
    """All longest repeats covering k from the compact array."""
    if n is not None:
        _check_pos(k, n)
    elif k < 1:
        raise IndexError(f"position {k} out of range")
    t = find_start_index(c, k)
    if t is None:
        return []
    best_len = 0
    for idx in range(t - 1, c.size):
        if c.starts[idx] > k:
            break
        if c.lengths[idx] > best_len:
            best_len = int(c.lengths[idx])
    if best_len == 0:
        return []
    hits = []
    for idx in range(t - 1, c.size):
        if c.starts[idx] > k:
            break
        if c.lengths[idx] == best_len:
            hits.append(LrAnswer(int(c.starts[idx]), best_len))
    return hits


@dataclass(frozen=True)
class LeftmostAnswers:
    """Leftmost answer per position; starts/lengths are 1-based padded."""

    starts: np.ndarray = field(repr=False)
    lengths: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        return int(self.starts.size) - 1

    def answer(self, k: int) -> LrAnswer:
        _check_pos(k, self.n)
        return LrAnswer(int(self.starts[k]), int(self.lengths[k]))


@dataclass(frozen=True)
class AllAnswers:
    """All tied answers per position in CSR layout.

    Position k's starts live in flat_starts[offsets[k]:offsets[k+1]], all
    with the common length lengths[k].
    """

    lengths: np.ndarray = field(repr=False)
    offsets: np.ndarray = field(repr=False)
    flat_starts: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        return int(self.lengths.size) - 1

    def answers(self, k: int) -> list[LrAnswer]:
        _check_pos(k, self.n)
        length = int(self.lengths[k])
        if length == 0:
            return []
        lo, hi = int(self.offsets[k]), int(self.offsets[k + 1])
        return [LrAnswer(int(s), length) for s in self.flat_starts[lo:hi]]


def _leftmost_all_positions(
    n: int, path: str, raw: np.ndarray, c: CompactLlr | None, policy: ExecPolicy | None
) -> LeftmostAnswers:
    starts = np.full(n + 1, -1, dtype=np.int64)
    lengths = np.zeros(n + 1, dtype=np.int64)
    if path == RAW:
        body = lambda lo, hi: kernels.leftmost_raw_chunk(lo, hi, raw, starts, lengths)
    else:
        body = lambda lo, hi: kernels.leftmost_compact_chunk(
            lo, hi, c.starts, c.lengths, c.ends, starts, lengths
        )
    parallel_for(1, n + 1, body, policy)
    starts[0] = -1
    return LeftmostAnswers(starts=starts, lengths=lengths)


def _all_all_positions(
    n: int, path: str, raw: np.ndarray, c: CompactLlr | None, policy: ExecPolicy | None
) -> AllAnswers:
    lengths = np.zeros(n + 1, dtype=np.int64)
    counts = np.zeros(n + 1, dtype=np.int64)
    if path == RAW:
        count_body = lambda lo, hi: kernels.all_raw_count_chunk(
            lo, hi, raw, lengths, counts
        )
    else:
        count_body = lambda lo, hi: kernels.all_compact_count_chunk(
            lo, hi, c.starts, c.lengths, c.ends, lengths, counts
        )
    parallel_for(1, n + 1, count_body, policy)
    offsets = np.zeros(n + 2, dtype=np.int64)
    if n > 0:
        offsets[2:] = parallel_scan(counts[1:], policy)
        offsets[1] = 0
    flat = np.empty(int(offsets[n + 1]), dtype=np.int64)
    if path == RAW:
        fill_body = lambda lo, hi: kernels.all_raw_fill_chunk(
            lo, hi, raw, lengths, offsets, flat
        )
    else:
        fill_body = lambda lo, hi: kernels.all_compact_fill_chunk(
            lo, hi, c.starts, c.lengths, c.ends, lengths, offsets, flat
        )
    parallel_for(1, n + 1, fill_body, policy)
    return AllAnswers(lengths=lengths, offsets=offsets, flat_starts=flat)


def all_positions(
    text: Text,
    mode: str = LEFTMOST,
    path: str = COMPACT,
    policy: ExecPolicy | None = None,
    structures: SuffixStructures | None = None,
) -> LeftmostAnswers | AllAnswers:
    """Answers for every position k = 1..n.

    Identical output for every path/exec combination; parallel policies
    partition positions across workers over read-only shared arrays.
    """
    if mode not in (LEFTMOST, ALL):
        raise ValueError(f"unknown mode {mode!r}")
    if path not in (RAW, COMPACT):
        raise ValueError(f"unknown path {path!r}")
    s = structures if structures is not None else build_suffix_structures(text)
    raw = build_raw_llr(s, policy)
    c = build_compact_llr(raw, policy) if path == COMPACT else None
    if mode == LEFTMOST:
        return _leftmost_all_positions(s.n, path, raw, c, policy)
    return _all_all_positions(s.n, path, raw, c, policy)
