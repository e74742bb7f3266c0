"""Walk-step statistics for the per-position queries.

A step is one covering LLR entry examined during a query walk; the entry
that triggers the break is not counted, and positions without a longest
repeat contribute nothing.  Because both walks visit exactly the entries
that cover the queried position (right ends are nondecreasing on the raw
array and strictly increasing on the compact one), the step count per
position equals a covering-interval count and is computed here in closed
form; tests cross-check it against instrumented walks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from repeatscan.llr import CompactLlr


@dataclass(frozen=True)
class WalkStats:
    path: str
    min_steps: int
    max_steps: int
    avg_steps: float
    positions: int  # positions where a longest repeat exists


def walk_steps_raw(raw: np.ndarray) -> np.ndarray:
    """Steps per position for the raw-array walk (1-based padded, 0 = no LR)."""
    n = raw.size - 1
    steps = np.zeros(n + 1, dtype=np.int64)
    if n == 0:
        return steps
    # Right end per start; i - 1 when no LLR exists there, so the array is
    # nondecreasing and entries with end < k are exactly the ones the walk
    # from k never examines as covering.
    ends = np.arange(1, n + 1, dtype=np.int64) + raw[1:] - 1
    ks = np.arange(1, n + 1, dtype=np.int64)
    below = np.searchsorted(ends, ks, side="left")
    steps[1:] = ks - below
    return steps


def walk_steps_compact(c: CompactLlr, n: int) -> np.ndarray:
    """Steps per position for the compact-array walk."""
    steps = np.zeros(n + 1, dtype=np.int64)
    if n == 0 or c.size == 0:
        return steps
    ks = np.arange(1, n + 1, dtype=np.int64)
    upto = np.searchsorted(c.starts, ks, side="right")
    below = np.searchsorted(c.ends, ks, side="left")
    steps[1:] = np.maximum(upto - below, 0)
    return steps


def summarize_steps(steps: np.ndarray, path: str) -> WalkStats:
    covered = steps[steps > 0]
    if covered.size == 0:
        return WalkStats(path=path, min_steps=0, max_steps=0, avg_steps=0.0, positions=0)
    return WalkStats(
        path=path,
        min_steps=int(covered.min()),
        max_steps=int(covered.max()),
        avg_steps=float(covered.mean()),
        positions=int(covered.size),
    )


def compute_walk_stats(raw: np.ndarray, c: CompactLlr, path: str) -> WalkStats:
    if path == "raw":
        return summarize_steps(walk_steps_raw(raw), "raw")
    if path == "compact":
        return summarize_steps(walk_steps_compact(c, raw.size - 1), "compact")
    raise ValueError(f"unknown path {path!r}")
