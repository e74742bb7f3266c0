"""Suffix array, rank array, and LCP array construction and validation.

All public arrays are 1-based with slot 0 unused:

* ``sa[1..n]``   -- 1-based start positions of the sorted suffixes
* ``rank[1..n]`` -- inverse of ``sa``
* ``lcp[1..n+1]`` -- common-prefix lengths with zero sentinels at 1 and n+1
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from repeatscan._backend import kernels
from repeatscan.text import Text


@dataclass(frozen=True)
class SuffixStructures:
    sa: np.ndarray = field(repr=False)
    rank: np.ndarray = field(repr=False)
    lcp: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        return int(self.sa.size) - 1


def _suffix_array_0based(data: np.ndarray) -> np.ndarray:
    """Suffix sorting by prefix doubling on numpy arrays, O(n log n)."""
    n = data.size
    order = np.argsort(data, kind="stable")
    rank = np.empty(n, dtype=np.int64)
    rank[order] = np.cumsum(
        np.concatenate(([False], data[order][1:] != data[order][:-1]))
    )
    k = 1
    while rank[order[-1]] != n - 1:
        key2 = np.full(n, -1, dtype=np.int64)
        key2[: n - k] = rank[k:]
        order = np.lexsort((key2, rank))
        changed = np.empty(n, dtype=bool)
        changed[0] = False
        changed[1:] = (rank[order[1:]] != rank[order[:-1]]) | (
            key2[order[1:]] != key2[order[:-1]]
        )
        new_rank = np.empty(n, dtype=np.int64)
        new_rank[order] = np.cumsum(changed)
        rank = new_rank
        k *= 2
    return order


def build_suffix_structures(text: Text) -> SuffixStructures:
    """Build SA, rank, and LCP arrays for the text (empty text allowed)."""
    n = text.n
    sa = np.zeros(n + 1, dtype=np.int64)
    rank = np.zeros(n + 1, dtype=np.int64)
    lcp = np.zeros(n + 2, dtype=np.int64)
    if n > 0:
        sa[1:] = _suffix_array_0based(text.data) + 1
        rank[sa[1:]] = np.arange(1, n + 1)
        kernels.kasai_lcp(text.data, sa, rank, lcp)
    return SuffixStructures(sa=sa, rank=rank, lcp=lcp)


def verify_suffix_structures(text: Text, s: SuffixStructures) -> bool:
    """Check every structural invariant by direct character comparison.

    O(n^2) worst case; intended for tests and the CLI --verify flag.
    """
    n = text.n
    if s.sa.size != n + 1 or s.rank.size != n + 1 or s.lcp.size != n + 2:
        return False
    if s.lcp[1] != 0 or s.lcp[n + 1] != 0:
        return False
    if n == 0:
        return True
    sa = s.sa
    if sorted(sa[1:].tolist()) != list(range(1, n + 1)):
        return False
    for j in range(1, n + 1):
        if s.rank[sa[j]] != j:
            return False
    data = text.data
    for i in range(2, n + 1):
        a = int(sa[i - 1]) - 1
        b = int(sa[i]) - 1
        h = 0
        while a + h < n and b + h < n and data[a + h] == data[b + h]:
            h += 1
        if s.lcp[i] != h:
            return False
        # Strict lexicographic order: mismatch char decides, else the
        # shorter suffix (the one that ran out) must come first.
        if a + h < n and b + h < n:
            if data[a + h] >= data[b + h]:
                return False
        elif a + h < n:  # suffix a longer but equal prefix -> a > b
            return False
    return True
