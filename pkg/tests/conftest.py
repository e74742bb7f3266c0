"""Shared test helpers: brute-force references independent of the library paths."""

from __future__ import annotations

import numpy as np
import pytest

from repeatscan.llr import CompactLlr
from repeatscan.suffixes import SuffixStructures
from repeatscan.text import Text


def brute_suffix_structures(text: Text) -> SuffixStructures:
    """Suffix/rank/LCP arrays by literal suffix sorting and comparison."""
    s = text.to_bytes()
    n = len(s)
    order = sorted(range(1, n + 1), key=lambda i: s[i - 1 :])
    sa = np.zeros(n + 1, dtype=np.int64)
    rank = np.zeros(n + 1, dtype=np.int64)
    lcp = np.zeros(n + 2, dtype=np.int64)
    for j, p in enumerate(order, start=1):
        sa[j] = p
        rank[p] = j
    for j in range(2, n + 1):
        a = s[sa[j - 1] - 1 :]
        b = s[sa[j] - 1 :]
        h = 0
        while h < len(a) and h < len(b) and a[h] == b[h]:
            h += 1
        lcp[j] = h
    return SuffixStructures(sa=sa, rank=rank, lcp=lcp)


def brute_raw_llr(text: Text) -> np.ndarray:
    """Raw LLR lengths straight from the repeat definition (no SA/LCP)."""
    s = text.to_bytes()
    n = len(s)
    out = np.zeros(n + 1, dtype=np.int64)
    for i in range(1, n + 1):
        for length in range(n - i + 1, 0, -1):
            sub = s[i - 1 : i - 1 + length]
            if s.find(sub) != s.rfind(sub):
                out[i] = length
                break
    return out


def instrumented_steps_raw(raw: np.ndarray, k: int) -> int:
    """Covering entries examined by the raw walk at position k."""
    steps = 0
    for i in range(k, 0, -1):
        if i + raw[i] - 1 < k:
            break
        steps += 1
    return steps


def instrumented_steps_compact(c: CompactLlr, k: int) -> int:
    """Covering entries examined by the compact walk at position k."""
    from bisect import bisect_left

    steps = 0
    t = bisect_left(c.ends, k)
    while t < c.size and c.starts[t] <= k:
        steps += 1
        t += 1
    return steps


def random_text(rng: np.random.Generator, n: int, sigma: int) -> Text:
    alphabet = b"abcd"[:sigma]
    return Text.from_bytes(rng.choice(np.frombuffer(alphabet, np.uint8), size=n).tobytes())


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(0xC0FFEE)
