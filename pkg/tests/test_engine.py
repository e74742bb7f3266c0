import numpy as np
import pytest

from repeatscan._backend import kernels
from repeatscan.engine import ExecPolicy, parallel_for, parallel_scan


def test_policy_validation():
    with pytest.raises(ValueError):
        ExecPolicy("parallel", 0)
    with pytest.raises(ValueError):
        ExecPolicy("gpu", 1)
    assert ExecPolicy.parallel(4).workers == 4
    assert ExecPolicy.sequential().mode == "sequential"


def test_parallel_for_raw_llr_fill_matches_sequential():
    rank = np.array([0, 5, 4, 3, 11, 9, 10, 8, 2, 7, 6, 1], dtype=np.int64)
    lcp = np.array([0, 0, 1, 1, 4, 0, 0, 1, 0, 2, 1, 3, 0], dtype=np.int64)
    seq = np.zeros(12, dtype=np.int64)
    kernels.fill_raw_llr(1, 12, rank, lcp, seq)
    par = np.zeros(12, dtype=np.int64)
    parallel_for(
        1, 12,
        lambda lo, hi: kernels.fill_raw_llr(lo, hi, rank, lcp, par),
        ExecPolicy.parallel(4),
    )
    assert np.array_equal(seq, par)


def test_parallel_for_empty_range():
    called = []
    parallel_for(5, 5, lambda lo, hi: called.append((lo, hi)), ExecPolicy.parallel(4))
    assert called == []


def test_parallel_for_flag_fill_figure_row():
    llr = np.array([0, 3, 2, 1, 1, 3, 2, 1, 1], dtype=np.int64)
    out = np.zeros(9, dtype=np.int64)
    parallel_for(
        1, 9,
        lambda lo, hi: kernels.fill_flags(lo, hi, llr, out),
        ExecPolicy.parallel(8),
    )
    assert out[1:].tolist() == [1, 0, 0, 1, 1, 0, 0, 1]


def test_parallel_for_covers_every_index_once():
    hits = np.zeros(101, dtype=np.int64)

    def body(lo, hi):
        hits[lo:hi] += 1

    parallel_for(1, 101, body, ExecPolicy.parallel(7))
    assert np.array_equal(hits[1:], np.ones(100, dtype=np.int64))


def test_scan_figure_row():
    flags = np.array([1, 0, 0, 1, 1, 0, 0, 1], dtype=np.int64)
    assert parallel_scan(flags).tolist() == [1, 1, 1, 2, 3, 3, 3, 4]
    assert parallel_scan(flags, ExecPolicy.parallel(3)).tolist() == [1, 1, 1, 2, 3, 3, 3, 4]


def test_scan_empty():
    assert parallel_scan(np.array([], dtype=np.int64)).tolist() == []
    assert parallel_scan(np.array([], dtype=np.int64), ExecPolicy.parallel(4)).tolist() == []


def test_scan_random_matches_sequential(rng):
    for _ in range(30):
        n = int(rng.integers(0, 1000))
        values = rng.integers(0, 2, size=n).astype(np.int64)
        want = np.cumsum(values)
        for workers in (1, 2, 7):
            got = parallel_scan(values, ExecPolicy.parallel(workers))
            assert np.array_equal(got, want)
