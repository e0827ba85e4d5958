"""Levenshtein distance and the derived similarity ratio.

The distance counts single-character insertions, deletions and
substitutions over Unicode scalar values. Two implementations are
provided: the plain two-row dynamic program, and a banded variant that
answers "is the distance at most k" quickly; both return identical
values whenever the bounded variant's limit is not exceeded, which the
test suite enforces against an independent recursive oracle.
"""
from __future__ import annotations


def _strip_common(a: str, b: str) -> tuple[str, str]:
    """Drop the shared prefix and suffix; edit distance is unchanged."""
    start = 0
    end_a, end_b = len(a), len(b)
    while start < end_a and start < end_b and a[start] == b[start]:
        start += 1
    while end_a > start and end_b > start and a[end_a - 1] == b[end_b - 1]:
        end_a -= 1
        end_b -= 1
    return a[start:end_a], b[start:end_b]


def levenshtein_distance(a: str, b: str) -> int:
    """Exact minimal edit count between `a` and `b`.

    Symmetric, zero iff the strings are equal. O(len(a) * len(b)) time,
    two rows of memory.
    """
    if a == b:
        return 0
    a, b = _strip_common(a, b)
    if len(a) > len(b):
        a, b = b, a
    m, n = len(a), len(b)
    if m == 0:
        return n
    previous = list(range(m + 1))
    current = [0] * (m + 1)
    for j in range(1, n + 1):
        current[0] = j
        cb = b[j - 1]
        for i in range(1, m + 1):
            if a[i - 1] == cb:
                current[i] = previous[i - 1]
            else:
                current[i] = 1 + min(previous[i], current[i - 1], previous[i - 1])
        previous, current = current, previous
    return previous[m]


def levenshtein_within(a: str, b: str, limit: int) -> int:
    """Exact distance if it is <= `limit`, otherwise `limit + 1`.

    Computes only the diagonal band that can stay within `limit` and
    abandons the scan as soon as every cell of a row exceeds it.
    """
    if limit < 0:
        return 0 if a == b else 1
    if a == b:
        return 0
    if abs(len(a) - len(b)) > limit:
        return limit + 1
    a, b = _strip_common(a, b)
    if len(a) > len(b):
        a, b = b, a
    m, n = len(a), len(b)
    big = limit + 1
    if m == 0:
        return n if n <= limit else big
    previous = [j if j <= limit else big for j in range(m + 1)]
    current = [big] * (m + 1)
    for j in range(1, n + 1):
        lo = max(1, j - limit)
        hi = min(m, j + limit)
        current[0] = j if j <= limit else big
        row_min = current[0] if lo == 1 else big
        if lo > 1:
            current[lo - 1] = big
        cb = b[j - 1]
        for i in range(lo, hi + 1):
            if a[i - 1] == cb:
                value = previous[i - 1]
            else:
                value = 1 + min(previous[i], current[i - 1], previous[i - 1])
            current[i] = value if value <= limit else big
            if current[i] < row_min:
                row_min = current[i]
        if hi < m:
            current[hi + 1] = big
        if row_min > limit:
            return big
        previous, current = current, previous
    return previous[m] if previous[m] <= limit else big


def pattern_masks(pattern: str) -> dict[str, int]:
    """Per-character position bitmasks of `pattern` for masked_distance."""
    masks: dict[str, int] = {}
    bit = 1
    for ch in pattern:
        masks[ch] = masks.get(ch, 0) | bit
        bit <<= 1
    return masks


def masked_distance(masks: dict[str, int], m: int, text: str) -> int:
    """Distance between the length-m pattern behind `masks` and `text`.

    Bit-parallel formulation: the whole DP column lives in one integer, so
    each text character costs a handful of word operations instead of m
    cells. Exact; equals levenshtein_distance on every input (enforced by
    the test suite), just much faster for the window scans.
    """
    if m == 0:
        return len(text)
    mask = (1 << m) - 1
    high = 1 << (m - 1)
    vp = mask
    vn = 0
    score = m
    for ch in text:
        eq = masks.get(ch, 0)
        d0 = (((eq & vp) + vp) ^ vp) | eq | vn
        hp = vn | (~(d0 | vp) & mask)
        hn = vp & d0
        if hp & high:
            score += 1
        elif hn & high:
            score -= 1
        x = ((hp << 1) | 1) & mask
        vp = ((hn << 1) & mask) | (~(x | d0) & mask)
        vn = x & d0
    return score


def levenshtein_ratio(a: str, b: str) -> float:
    """Length-normalised similarity in [0, 1]: 1 - distance / max length.

    Inputs are case-folded first, so redaction that merely changes case
    scores as no change at all. Lengths in the denominator are those of
    the folded strings, keeping the result in [0, 1] even for characters
    whose fold expands (for example the sharp s).
    """
    fa, fb = a.casefold(), b.casefold()
    longest = max(len(fa), len(fb))
    if longest == 0:
        raise ValueError("undefined ratio: both strings are empty")
    return 1.0 - levenshtein_distance(fa, fb) / longest
