"""Brute-force ground truth for repeats and longest-repeat queries.

Everything here works directly on the text bytes by substring searching,
independent of the suffix-array pipeline.  Intended for tests and the CLI
selftest; complexity is polynomial and guarded by a size cap there.
"""

from __future__ import annotations

from repeatscan.query import LrAnswer, NO_LR
from repeatscan.text import Text

DEFAULT_SIZE_CAP = 4096


def is_repeat(text: Text, start: int, length: int) -> bool:
    """True iff the substring occurs at >= 2 distinct starts (overlaps count)."""
    if length < 1 or start < 1 or start + length - 1 > text.n:
        raise IndexError(
            f"substring ({start},{length}) out of range for n={text.n}"
        )
    s = text.to_bytes()
    sub = s[start - 1 : start - 1 + length]
    return s.find(sub) != s.rfind(sub)


def _longest_repeat_from(s: bytes, i: int) -> int:
    """Length of the longest repeated substring starting at 1-based i, else 0.

    Repeat-ness is monotone in the length for a fixed start, so scan
    lengths downward and stop at the first hit.
    """
    n = len(s)
    for length in range(n - i + 1, 0, -1):
        sub = s[i - 1 : i - 1 + length]
        if s.find(sub) != s.rfind(sub):
            return length
    return 0


def oracle_llr(text: Text, i: int) -> LrAnswer:
    """Longest repeat starting exactly at i, by descending-length scan."""
    if not 1 <= i <= text.n:
        raise IndexError(f"position {i} out of range 1..{text.n}")
    length = _longest_repeat_from(text.to_bytes(), i)
    return LrAnswer(i, length) if length else NO_LR


def oracle_all_lr(text: Text, k: int) -> list[LrAnswer]:
    """All maximal-length repeats covering k, in increasing start order.

    Enumerates every candidate interval [i, i+L-1] covering k; by
    monotonicity such an interval is a repeat iff L <= the longest repeat
    length starting at i.
    """
    if not 1 <= k <= text.n:
        raise IndexError(f"position {k} out of range 1..{text.n}")
    s = text.to_bytes()
    reach = {i: _longest_repeat_from(s, i) for i in range(1, k + 1)}
    best = 0
    for i, r in reach.items():
        if r >= k - i + 1 and r > best:
            best = r
    if best == 0:
        return []
    return [
        LrAnswer(i, best)
        for i in sorted(reach)
        if reach[i] >= best and i + best - 1 >= k
    ]


def oracle_leftmost_lr(text: Text, k: int) -> LrAnswer:
    answers = oracle_all_lr(text, k)
    return answers[0] if answers else NO_LR


def oracle_all_positions(text: Text, mode: str = "leftmost"):
    """Per-position oracle answers for the whole text.

    Shares the per-start longest-repeat scan across positions, but stays a
    pure brute-force enumeration.
    """
    s = text.to_bytes()
    n = len(s)
    reach = [0] * (n + 1)
    for i in range(1, n + 1):
        reach[i] = _longest_repeat_from(s, i)
    out = []
    for k in range(1, n + 1):
        best = 0
        for i in range(1, k + 1):
            if reach[i] >= k - i + 1 and reach[i] > best:
                best = reach[i]
        if best == 0:
            out.append(NO_LR if mode == "leftmost" else [])
            continue
        hits = [
            LrAnswer(i, best)
            for i in range(1, k + 1)
            if reach[i] >= best and i + best - 1 >= k
        ]
        out.append(hits[0] if mode == "leftmost" else hits)
    return out
