"""Pure numpy/Python fallback kernels.

Same signatures and semantics as the numba backend.  Per-slot maps are
vectorized; the walk kernels fall back to plain Python loops, which keeps
this backend correct (and testable) everywhere numba is unavailable, just
slower on large inputs.
"""

from bisect import bisect_left

import numpy as np


def kasai_lcp(data, sa, rank, lcp):
    n = sa.size - 1
    data_l = data.tolist()
    sa_l = sa.tolist()
    rank_l = rank.tolist()
    h = 0
    for i in range(1, n + 1):
        r = rank_l[i]
        if r == 1:
            h = 0
            continue
        j = sa_l[r - 1]
        while i + h <= n and j + h <= n and data_l[i + h - 1] == data_l[j + h - 1]:
            h += 1
        lcp[r] = h
        if h > 0:
            h -= 1


def fill_raw_llr(lo, hi, rank, lcp, out):
    r = rank[lo:hi]
    np.maximum(lcp[r], lcp[r + 1], out=out[lo:hi])


def fill_flags(lo, hi, llr, out):
    cur = llr[lo:hi]
    prev = llr[lo - 1 : hi - 1]  # llr[0] is a zero pad
    out[lo:hi] = (cur > 0) & (cur >= prev)


def scatter_chunk(lo, hi, llr, flags, ps, starts, lengths):
    idx = np.nonzero(flags[lo:hi])[0] + lo
    dest = ps[idx] - 1
    starts[dest] = idx
    lengths[dest] = llr[idx]


def compact_sequential(llr, starts, lengths):
    n = llr.size - 1
    llr_l = llr.tolist()
    j = 0
    prev = 0
    for i in range(1, n + 1):
        length = llr_l[i]
        if length > 0 and length >= prev:
            starts[j] = i
            lengths[j] = length
            j += 1
        prev = length
    return j


def leftmost_raw_chunk(lo, hi, llr, out_start, out_len):
    llr_l = llr.tolist()
    for k in range(lo, hi):
        best_start = -1
        best_len = 0
        i = k
        while i >= 1:
            if i + llr_l[i] - 1 < k:
                break
            if llr_l[i] >= best_len:
                best_len = llr_l[i]
                best_start = i
            i -= 1
        out_start[k] = best_start
        out_len[k] = best_len


def leftmost_compact_chunk(lo, hi, starts, lengths, ends, out_start, out_len):
    starts_l = starts.tolist()
    lengths_l = lengths.tolist()
    ends_l = ends.tolist()
    size = len(starts_l)
    for k in range(lo, hi):
        best_start = -1
        best_len = 0
        t = bisect_left(ends_l, k)
        while t < size and starts_l[t] <= k:
            if lengths_l[t] > best_len:
                best_len = lengths_l[t]
                best_start = starts_l[t]
            t += 1
        out_start[k] = best_start
        out_len[k] = best_len


def all_raw_count_chunk(lo, hi, llr, out_len, out_cnt):
    llr_l = llr.tolist()
    for k in range(lo, hi):
        best_len = 0
        i = k
        while i >= 1 and i + llr_l[i] - 1 >= k:
            if llr_l[i] > best_len:
                best_len = llr_l[i]
            i -= 1
        cnt = 0
        if best_len > 0:
            i = k
            while i >= 1 and i + llr_l[i] - 1 >= k:
                if llr_l[i] == best_len:
                    cnt += 1
                i -= 1
        out_len[k] = best_len
        out_cnt[k] = cnt


def all_raw_fill_chunk(lo, hi, llr, best_len, offsets, flat_starts):
    llr_l = llr.tolist()
    for k in range(lo, hi):
        length = best_len[k]
        if length == 0:
            continue
        idx = int(offsets[k + 1])
        i = k
        while i >= 1 and i + llr_l[i] - 1 >= k:
            if llr_l[i] == length:
                idx -= 1
                flat_starts[idx] = i
            i -= 1


def all_compact_count_chunk(lo, hi, starts, lengths, ends, out_len, out_cnt):
    starts_l = starts.tolist()
    lengths_l = lengths.tolist()
    ends_l = ends.tolist()
    size = len(starts_l)
    for k in range(lo, hi):
        best_len = 0
        t0 = bisect_left(ends_l, k)
        t = t0
        while t < size and starts_l[t] <= k:
            if lengths_l[t] > best_len:
                best_len = lengths_l[t]
            t += 1
        cnt = 0
        if best_len > 0:
            t = t0
            while t < size and starts_l[t] <= k:
                if lengths_l[t] == best_len:
                    cnt += 1
                t += 1
        out_len[k] = best_len
        out_cnt[k] = cnt


def all_compact_fill_chunk(
    lo, hi, starts, lengths, ends, best_len, offsets, flat_starts
):
    starts_l = starts.tolist()
    lengths_l = lengths.tolist()
    ends_l = ends.tolist()
    size = len(starts_l)
    for k in range(lo, hi):
        length = best_len[k]
        if length == 0:
            continue
        idx = int(offsets[k])
        t = bisect_left(ends_l, k)
        while t < size and starts_l[t] <= k:
            if lengths_l[t] == length:
                flat_starts[idx] = starts_l[t]
                idx += 1
            t += 1
