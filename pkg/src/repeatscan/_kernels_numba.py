"""Numba-compiled hot kernels.

All kernels operate on 1-based padded arrays (slot 0 unused) except the raw
text bytes, which stay 0-based.  Chunked kernels take a half-open 1-based
range [lo, hi) so the engine can split work across threads; every kernel
releases the GIL.
"""

import numpy as np
from numba import njit

_OPTS = dict(nogil=True, cache=True)


@njit(**_OPTS)
def kasai_lcp(data, sa, rank, lcp):
    """Fill lcp[2..n] from the suffix and rank arrays in O(n)."""
    n = sa.size - 1
    h = 0
    for i in range(1, n + 1):
        r = rank[i]
        if r == 1:
            h = 0
            continue
        j = sa[r - 1]
        while i + h <= n and j + h <= n and data[i + h - 1] == data[j + h - 1]:
            h += 1
        lcp[r] = h
        if h > 0:
            h -= 1


@njit(**_OPTS)
def fill_raw_llr(lo, hi, rank, lcp, out):
    for i in range(lo, hi):
        a = lcp[rank[i]]
        b = lcp[rank[i] + 1]
        out[i] = a if a > b else b


@njit(**_OPTS)
def fill_flags(lo, hi, llr, out):
    # llr[0] is a zero pad, so the i == 1 case needs no special branch.
    for i in range(lo, hi):
        length = llr[i]
        out[i] = 1 if (length > 0 and length >= llr[i - 1]) else 0


@njit(**_OPTS)
def scatter_chunk(lo, hi, llr, flags, ps, starts, lengths):
    for i in range(lo, hi):
        if flags[i] == 1:
            t = ps[i] - 1
            starts[t] = i
            lengths[t] = llr[i]


@njit(**_OPTS)
def compact_sequential(llr, starts, lengths):
    """One-pass compaction; returns the number of entries written."""
    n = llr.size - 1
    j = 0
    prev = 0
    for i in range(1, n + 1):
        length = llr[i]
        if length > 0 and length >= prev:
            starts[j] = i
            lengths[j] = length
            j += 1
        prev = length
    return j


@njit(**_OPTS)
def _first_end_at_or_after(ends, k):
    """Smallest index t with ends[t] >= k (ends strictly increasing)."""
    lo = 0
    hi = ends.size
    while lo < hi:
        mid = (lo + hi) // 2
        if ends[mid] < k:
            lo = mid + 1
        else:
            hi = mid
    return lo


@njit(**_OPTS)
def leftmost_raw_chunk(lo, hi, llr, out_start, out_len):
    for k in range(lo, hi):
        best_start = -1
        best_len = 0
        i = k
        while i >= 1:
            if i + llr[i] - 1 < k:
                break
            if llr[i] >= best_len:
                best_len = llr[i]
                best_start = i
            i -= 1
        out_start[k] = best_start
        out_len[k] = best_len


@njit(**_OPTS)
def leftmost_compact_chunk(lo, hi, starts, lengths, ends, out_start, out_len):
    size = starts.size
    for k in range(lo, hi):
        best_start = -1
        best_len = 0
        t = _first_end_at_or_after(ends, k)
        while t < size and starts[t] <= k:
            if lengths[t] > best_len:
                best_len = lengths[t]
                best_start = starts[t]
            t += 1
        out_start[k] = best_start
        out_len[k] = best_len


@njit(**_OPTS)
def all_raw_count_chunk(lo, hi, llr, out_len, out_cnt):
    for k in range(lo, hi):
        best_len = 0
        i = k
        while i >= 1 and i + llr[i] - 1 >= k:
            if llr[i] > best_len:
                best_len = llr[i]
            i -= 1
        cnt = 0
        if best_len > 0:
            i = k
            while i >= 1 and i + llr[i] - 1 >= k:
                if llr[i] == best_len:
                    cnt += 1
                i -= 1
        out_len[k] = best_len
        out_cnt[k] = cnt


@njit(**_OPTS)
def all_raw_fill_chunk(lo, hi, llr, best_len, offsets, flat_starts):
    # The walk visits starts in decreasing order; writing backwards from the
    # end of position k's block leaves the block sorted by increasing start.
    for k in range(lo, hi):
        length = best_len[k]
        if length == 0:
            continue
        idx = offsets[k + 1]
        i = k
        while i >= 1 and i + llr[i] - 1 >= k:
            if llr[i] == length:
                idx -= 1
                flat_starts[idx] = i
            i -= 1


@njit(**_OPTS)
def all_compact_count_chunk(lo, hi, starts, lengths, ends, out_len, out_cnt):
    size = starts.size
    for k in range(lo, hi):
        best_len = 0
        t0 = _first_end_at_or_after(ends, k)
        t = t0
        while t < size and starts[t] <= k:
            if lengths[t] > best_len:
                best_len = lengths[t]
            t += 1
        cnt = 0
        if best_len > 0:
            t = t0
            while t < size and starts[t] <= k:
                if lengths[t] == best_len:
                    cnt += 1
                t += 1
        out_len[k] = best_len
        out_cnt[k] = cnt


@njit(**_OPTS)
def all_compact_fill_chunk(
    lo, hi, starts, lengths, ends, best_len, offsets, flat_starts
):
    size = starts.size
    for k in range(lo, hi):
        length = best_len[k]
        if length == 0:
            continue
        idx = offsets[k]
        t = _first_end_at_or_after(ends, k)
        while t < size and starts[t] <= k:
            if lengths[t] == length:
                flat_starts[idx] = starts[t]
                idx += 1
            t += 1
