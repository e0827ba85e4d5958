"""Rule-based sentence segmentation.

Boundaries are '.', '!', '?' (only when followed by whitespace or the end
of the text, so decimals, URLs and email addresses stay whole) and
newline. A short guard list of clinical abbreviations keeps their
trailing period from ending a sentence. Spans are half-open [start, end)
character offsets that never begin or end on whitespace and jointly
cover every non-whitespace character of the text.
"""
from __future__ import annotations

import re

TERMINATORS = frozenset(".!?")

# Periods inside these never terminate a sentence.
DEFAULT_ABBREVIATIONS = ("Dr.", "Mr.", "Mrs.", "vs.", "e.g.", "i.e.")


def _protected_periods(text: str, abbreviations: tuple[str, ...]) -> set[int]:
    protected: set[int] = set()
    for abbr in abbreviations:
        pattern = re.compile(r"(?<![A-Za-z])" + re.escape(abbr), re.IGNORECASE)
        for match in pattern.finditer(text):
            for i in range(match.start(), match.end()):
                if text[i] == ".":
                    protected.add(i)
    return protected


def split_sentences(
    text: str, abbreviations: tuple[str, ...] = DEFAULT_ABBREVIATIONS
) -> list[tuple[int, int]]:
    """Return ordered, non-overlapping sentence spans over `text`.

    Terminator punctuation is included in its sentence span; newlines act
    as boundaries but, being whitespace, are excluded from spans. Empty or
    all-whitespace text yields an empty list.
    """
    if not text:
        return []
    protected = _protected_periods(text, abbreviations)
    spans: list[tuple[int, int]] = []
    start: int | None = None
    last_nonspace = -1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            if start is not None:
                spans.append((start, last_nonspace + 1))
                start = None
            i += 1
            continue
        if ch.isspace():
            i += 1
            continue
        if start is None:
            start = i
        last_nonspace = i
        if ch in TERMINATORS and not (ch == "." and i in protected):
            # absorb a run of terminators ("...", "?!") into one boundary
            j = i + 1
            while j < n and text[j] in TERMINATORS and not (text[j] == "." and j in protected):
                j += 1
            # only close the sentence at whitespace or end of text, so
            # "36.8", "a.b@c.org" and URLs stay in one piece
            if j == n or text[j].isspace():
                spans.append((start, j))
                start = None
                i = j
                continue
            last_nonspace = j - 1
            i = j
            continue
        i += 1
    if start is not None:
        spans.append((start, last_nonspace + 1))
    return spans


def sentence_containing(
    spans: list[tuple[int, int]], position: int
) -> tuple[int, int] | None:
    """The span containing `position`, or the nearest span if it falls in a gap."""
    if not spans:
        return None
    for span in spans:
        if span[0] <= position < span[1]:
            return span
    # position sits in whitespace between sentences; take the next span,
    # or the last one when past the end
    for span in spans:
        if span[0] > position:
            return span
    return spans[-1]
