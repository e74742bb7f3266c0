import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from repeatscan.llr import (
    LlrEntry,
    build_compact_llr,
    build_raw_llr,
    compact_llr_sequential,
    compute_flags,
    prefix_sum,
    scatter_compact,
)
from repeatscan.oracle import is_repeat
from repeatscan.suffixes import build_suffix_structures
from repeatscan.text import Text

from conftest import brute_raw_llr

small_strings = st.text(alphabet="abc", min_size=0, max_size=12)


def padded(values):
    return np.array([0] + list(values), dtype=np.int64)


FIG_RAW = padded([3, 2, 1, 1, 3, 2, 1, 1])


def raw_of(s: str) -> np.ndarray:
    return build_raw_llr(build_suffix_structures(Text.from_str(s)))


class TestBuildRawLlr:
    def test_mississippi(self):
        assert raw_of("mississippi")[1:].tolist() == [0, 4, 3, 2, 4, 3, 2, 1, 1, 1, 1]

    def test_all_singletons(self):
        assert raw_of("abc")[1:].tolist() == [0, 0, 0]

    def test_all_equal(self):
        assert raw_of("aaaa")[1:].tolist() == [3, 3, 2, 1]

    @given(small_strings)
    @settings(max_examples=150, deadline=None)
    def test_matches_brute_force(self, sample):
        t = Text.from_str(sample)
        got = build_raw_llr(build_suffix_structures(t))
        assert np.array_equal(got, brute_raw_llr(t))

    @given(small_strings)
    @settings(max_examples=150, deadline=None)
    def test_length_monotonicity(self, sample):
        raw = raw_of(sample)
        n = raw.size - 1
        for i in range(1, n):
            assert raw[i] <= raw[i + 1] + 1


class TestSequentialCompaction:
    def test_figure_example(self):
        c = compact_llr_sequential(FIG_RAW)
        assert c.entries() == [
            LlrEntry(1, 3),
            LlrEntry(4, 1),
            LlrEntry(5, 3),
            LlrEntry(8, 1),
        ]

    def test_all_zero(self):
        assert compact_llr_sequential(padded([0, 0, 0])).size == 0

    def test_mississippi(self):
        c = compact_llr_sequential(raw_of("mississippi"))
        assert c.entries() == [
            LlrEntry(2, 4),
            LlrEntry(5, 4),
            LlrEntry(9, 1),
            LlrEntry(10, 1),
            LlrEntry(11, 1),
        ]


class TestFlags:
    def test_figure_example(self):
        assert compute_flags(FIG_RAW)[1:].tolist() == [1, 0, 0, 1, 1, 0, 0, 1]

    def test_all_zero(self):
        assert compute_flags(padded([0, 0, 0]))[1:].tolist() == [0, 0, 0]

    def test_all_equal_string(self):
        assert compute_flags(raw_of("aaaa"))[1:].tolist() == [1, 1, 0, 0]


class TestPrefixSum:
    def test_figure_example(self):
        flags = padded([1, 0, 0, 1, 1, 0, 0, 1])
        assert prefix_sum(flags)[1:].tolist() == [1, 1, 1, 2, 3, 3, 3, 4]

    def test_empty(self):
        assert prefix_sum(np.zeros(1, dtype=np.int64))[1:].tolist() == []

    def test_aaaa_flags(self):
        assert prefix_sum(padded([1, 1, 0, 0]))[1:].tolist() == [1, 2, 2, 2]


class TestScatter:
    def test_figure_example(self):
        flags = compute_flags(FIG_RAW)
        ps = prefix_sum(flags)
        c = scatter_compact(FIG_RAW, flags, ps)
        assert c.entries() == [
            LlrEntry(1, 3),
            LlrEntry(4, 1),
            LlrEntry(5, 3),
            LlrEntry(8, 1),
        ]

    def test_all_zero_flags(self):
        raw = padded([0, 0, 0])
        flags = compute_flags(raw)
        assert scatter_compact(raw, flags, prefix_sum(flags)).size == 0

    def test_mississippi_matches_sequential(self):
        raw = raw_of("mississippi")
        assert build_compact_llr(raw).entries() == compact_llr_sequential(raw).entries()


@given(small_strings)
@settings(max_examples=300, deadline=None)
def test_pipeline_equals_sequential(sample):
    raw = raw_of(sample)
    assert build_compact_llr(raw).entries() == compact_llr_sequential(raw).entries()


@given(small_strings)
@settings(max_examples=200, deadline=None)
def test_compact_invariants(sample):
    c = compact_llr_sequential(raw_of(sample))
    starts = c.starts.tolist()
    ends = c.ends.tolist()
    assert starts == sorted(set(starts))
    assert ends == sorted(set(ends))
    # strict double-sortedness implies no interval contains another
    for a in range(c.size):
        for b in range(c.size):
            if a != b:
                assert not (
                    starts[a] <= starts[b] and ends[b] <= ends[a]
                )


@given(small_strings)
@settings(max_examples=200, deadline=None)
def test_compact_completeness(sample):
    raw = raw_of(sample)
    c = compact_llr_sequential(raw)
    intervals = list(zip(c.starts.tolist(), c.ends.tolist()))
    for i in range(1, raw.size):
        if raw[i] > 0:
            lo, hi = i, i + int(raw[i]) - 1
            assert any(a <= lo and hi <= b for a, b in intervals)


@given(st.text(alphabet="ab", min_size=1, max_size=10))
@settings(max_examples=200, deadline=None)
def test_compact_entries_are_maximal_repeats(sample):
    t = Text.from_str(sample)
    for e in compact_llr_sequential(raw_of(sample)):
        assert is_repeat(t, e.start, e.length)
        if e.end < t.n:  # one-char right extension is unique
            assert not is_repeat(t, e.start, e.length + 1)
