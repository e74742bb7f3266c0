"""Deterministic shared-memory execution: chunked parallel-for and scan.

This is the package's concurrency boundary.  Callers hand in per-index pure
computations with disjoint writes over immutable shared arrays; the engine
may run them on any number of threads and the result must be identical to a
sequential run.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

import numpy as np

SEQUENTIAL = "sequential"
PARALLEL = "parallel"


@dataclass(frozen=True)
class ExecPolicy:
    """How to run a data-parallel region: mode plus worker count."""

    mode: str = SEQUENTIAL
    workers: int = 1

    def __post_init__(self):
        if self.mode not in (SEQUENTIAL, PARALLEL):
            raise ValueError(f"unknown exec mode {self.mode!r}")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")

    @classmethod
    def sequential(cls) -> "ExecPolicy":
        return cls(SEQUENTIAL, 1)

    @classmethod
    def parallel(cls, workers: int) -> "ExecPolicy":
        return cls(PARALLEL, workers)


def _chunks(lo: int, hi: int, parts: int):
    """Contiguous split of the half-open range [lo, hi) into <= parts chunks."""
    total = hi - lo
    parts = min(parts, total)
    base, extra = divmod(total, parts)
    start = lo
    for p in range(parts):
        stop = start + base + (1 if p < extra else 0)
        yield start, stop
        start = stop


def parallel_for(
    lo: int,
    hi: int,
    body: Callable[[int, int], None],
    policy: ExecPolicy | None = None,
) -> None:
    """Run body(lo, hi) over the half-open index range, possibly chunked.

    body must only write to slots of the indices it is given.
    """
    policy = policy or ExecPolicy.sequential()
    if hi <= lo:
        return
    if policy.mode == SEQUENTIAL or policy.workers == 1:
        body(lo, hi)
        return
    with ThreadPoolExecutor(max_workers=policy.workers) as pool:
        futures = [pool.submit(body, a, b) for a, b in _chunks(lo, hi, policy.workers)]
        for f in futures:
            f.result()


def parallel_scan(values: np.ndarray, policy: ExecPolicy | None = None) -> np.ndarray:
    """Inclusive prefix sum, bit-identical for any worker count."""
    policy = policy or ExecPolicy.sequential()
    values = np.asarray(values, dtype=np.int64)
    n = values.size
    if n == 0:
        return values.copy()
    if policy.mode == SEQUENTIAL or policy.workers == 1:
        return np.cumsum(values)
    bounds = list(_chunks(0, n, policy.workers))
    out = np.empty(n, dtype=np.int64)

    def scan_chunk(a: int, b: int) -> None:
        np.cumsum(values[a:b], out=out[a:b])

    with ThreadPoolExecutor(max_workers=policy.workers) as pool:
        for f in [pool.submit(scan_chunk, a, b) for a, b in bounds]:
            f.result()
    # Sequential carry of chunk totals, then a second parallel offset pass.
    offset = 0
    offsets = []
    for a, b in bounds:
        offsets.append(offset)
        offset += int(out[b - 1])

    def add_offset(idx: int) -> None:
        a, b = bounds[idx]
        if offsets[idx]:
            out[a:b] += offsets[idx]

    with ThreadPoolExecutor(max_workers=policy.workers) as pool:
        for f in [pool.submit(add_offset, i) for i in range(len(bounds))]:
            f.result()
    return out
