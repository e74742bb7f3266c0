"""Raw and compact arrays of left-bounded longest repeats (LLRs).

The raw array stores, per position i, the length of the longest repeat
starting at i (0 when none).  Compaction drops entries whose interval is
contained in another entry's interval, leaving start- and end-sorted
<start, length> tuples; it is available both as a one-pass sequential loop
and as the data-parallel flag / prefix-sum / scatter pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

import numpy as np

from repeatscan._backend import kernels
from repeatscan.engine import ExecPolicy, parallel_for, parallel_scan
from repeatscan.suffixes import SuffixStructures


class LlrEntry(NamedTuple):
    start: int
    length: int

    @property
    def end(self) -> int:
        return self.start + self.length - 1


@dataclass(frozen=True)
class CompactLlr:
    """Useful LLRs, sorted by strictly increasing start and end points."""

    starts: np.ndarray = field(repr=False)
    lengths: np.ndarray = field(repr=False)
    ends: np.ndarray = field(repr=False)

    @classmethod
    def from_arrays(cls, starts: np.ndarray, lengths: np.ndarray) -> "CompactLlr":
        starts = np.ascontiguousarray(starts, dtype=np.int64)
        lengths = np.ascontiguousarray(lengths, dtype=np.int64)
        return cls(starts=starts, lengths=lengths, ends=starts + lengths - 1)

    @property
    def size(self) -> int:
        return int(self.starts.size)

    def entry(self, t: int) -> LlrEntry:
        """Entry at 1-based index t."""
        if not 1 <= t <= self.size:
            raise IndexError(f"entry index {t} out of range 1..{self.size}")
        return LlrEntry(int(self.starts[t - 1]), int(self.lengths[t - 1]))

    def __iter__(self) -> Iterator[LlrEntry]:
        for s, l in zip(self.starts.tolist(), self.lengths.tolist()):
            yield LlrEntry(s, l)

    def entries(self) -> list[LlrEntry]:
        return list(self)


def build_raw_llr(
    s: SuffixStructures, policy: ExecPolicy | None = None
) -> np.ndarray:
    """Raw LLR lengths: out[i] = max(lcp[rank[i]], lcp[rank[i]+1])."""
    n = s.n
    out = np.zeros(n + 1, dtype=np.int64)
    parallel_for(
        1, n + 1, lambda lo, hi: kernels.fill_raw_llr(lo, hi, s.rank, s.lcp, out), policy
    )
    return out


def compact_llr_sequential(raw: np.ndarray) -> CompactLlr:
    """One-pass compaction: keep entry i iff len[i] > 0 and len[i] >= len[i-1]."""
    n = raw.size - 1
    starts = np.empty(n, dtype=np.int64)
    lengths = np.empty(n, dtype=np.int64)
    size = int(kernels.compact_sequential(raw, starts, lengths))
    return CompactLlr.from_arrays(starts[:size].copy(), lengths[:size].copy())


def compute_flags(raw: np.ndarray, policy: ExecPolicy | None = None) -> np.ndarray:
    """Per-slot keep flags; flag[i] depends only on raw[i-1] and raw[i]."""
    n = raw.size - 1
    out = np.zeros(n + 1, dtype=np.int64)
    parallel_for(1, n + 1, lambda lo, hi: kernels.fill_flags(lo, hi, raw, out), policy)
    return out


def prefix_sum(flags: np.ndarray, policy: ExecPolicy | None = None) -> np.ndarray:
    """Inclusive prefix sum over the 1-based flag array."""
    ps = np.zeros_like(flags)
    ps[1:] = parallel_scan(flags[1:], policy)
    return ps


def scatter_compact(
    raw: np.ndarray,
    flags: np.ndarray,
    ps: np.ndarray,
    policy: ExecPolicy | None = None,
) -> CompactLlr:
    """Write each flagged entry i to output slot ps[i] (disjoint writes)."""
    n = raw.size - 1
    size = int(ps[n]) if n > 0 else 0
    starts = np.empty(size, dtype=np.int64)
    lengths = np.empty(size, dtype=np.int64)
    parallel_for(
        1,
        n + 1,
        lambda lo, hi: kernels.scatter_chunk(lo, hi, raw, flags, ps, starts, lengths),
        policy,
    )
    return CompactLlr.from_arrays(starts, lengths)


def build_compact_llr(raw: np.ndarray, policy: ExecPolicy | None = None) -> CompactLlr:
    """Flag -> prefix-sum -> scatter pipeline over the raw array."""
    flags = compute_flags(raw, policy)
    ps = prefix_sum(flags, policy)
    return scatter_compact(raw, flags, ps, policy)
