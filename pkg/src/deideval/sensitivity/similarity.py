"""Windowed entity similarity and sentence alignment.

`lsi` slides a window of the entity's length across a text with a step of
one character and reports the best Levenshtein ratio between the entity
and any window. `align_sentence` picks the sentence of the anonymized
note most similar to the entity's original sentence, and `entity_lsi`
composes the two so that each entity is only searched for inside its
aligned sentence.

All comparisons are case-folded. The scans use exact-arithmetic pruning
(integer cross-multiplied ratio comparisons, character-bag lower bounds,
banded distance with early abort), so results are identical to a naive
full scan; the test suite checks that equivalence against independent
oracles.
"""
from __future__ import annotations

from ..corpus.sentences import sentence_containing, split_sentences
from ..corpus.types import EntityAnnotation, NotePair
from .edit_distance import levenshtein_distance, masked_distance, pattern_masks

Span = tuple[int, int]

EMPTY_SPAN: Span = (0, 0)


def _char_counts(text: str) -> dict[str, int]:
    counts: dict[str, int] = {}
    for ch in text:
        counts[ch] = counts.get(ch, 0) + 1
    return counts


def _bag_overlap(a: dict[str, int], b: dict[str, int]) -> int:
    if len(b) < len(a):
        a, b = b, a
    total = 0
    for ch, cnt in a.items():
        other = b.get(ch, 0)
        total += cnt if cnt < other else other
    return total


def lsi(entity: str, haystack: str) -> float:
    """Best Levenshtein ratio between `entity` and any equal-length window.

    Windows of length len(entity) slide across `haystack` one character at
    a time. A haystack shorter than the entity is compared whole; an empty
    haystack scores 0 (deletion never looks worse than replacement).
    """
    folded_entity = entity.casefold()
    if not folded_entity:
        raise ValueError("entity must be non-empty")
    folded_hay = haystack.casefold()
    if not folded_hay:
        return 0.0
    e = len(folded_entity)
    if len(folded_hay) < e:
        return 1.0 - levenshtein_distance(folded_entity, folded_hay) / e
    if folded_entity in folded_hay:
        return 1.0
    # bag-of-characters lower bound on each window's distance, maintained
    # with O(1) sliding updates
    need = _char_counts(folded_entity)
    have: dict[str, int] = {}
    overlap = 0
    for ch in folded_hay[:e]:
        cnt = have.get(ch, 0)
        if cnt < need.get(ch, 0):
            overlap += 1
        have[ch] = cnt + 1
    bounds = [e - overlap]
    for j in range(1, len(folded_hay) - e + 1):
        gone = folded_hay[j - 1]
        have[gone] -= 1
        if have[gone] < need.get(gone, 0):
            overlap -= 1
        came = folded_hay[j + e - 1]
        cnt = have.get(came, 0)
        if cnt < need.get(came, 0):
            overlap += 1
        have[came] = cnt + 1
        bounds.append(e - overlap)
    # most promising window first; once the next lower bound cannot beat
    # the best distance found, no later window can either
    best = e
    masks = pattern_masks(folded_entity)
    for j in sorted(range(len(bounds)), key=lambda idx: (bounds[idx], idx)):
        if bounds[j] >= best:
            break
        distance = masked_distance(masks, e, folded_hay[j : j + e])
        if distance < best:
            best = distance
            if best == 0:
                break
    return 1.0 - best / e


def _best_candidate(
    folded_reference: str,
    candidates: list[tuple[Span, str, dict[str, int]]],
) -> Span:
    """Span of the candidate maximising the ratio against the reference.

    Equal ratios resolve to the earliest span. Candidates are tried most
    promising first (by bag-bound ratio ceiling) so that expensive exact
    distances are mostly skipped; the comparison itself is done in exact
    integer arithmetic, keeping the outcome order-independent.
    """
    ref_counts = _char_counts(folded_reference)
    ref_len = len(folded_reference)
    scored = []
    for span, folded, counts in candidates:
        longest = max(ref_len, len(folded))
        if longest == 0:
            continue
        # distance >= longest - bag overlap caps the achievable ratio
        lower_bound = longest - _bag_overlap(ref_counts, counts)
        scored.append((lower_bound / longest, lower_bound, span, folded, longest))
    scored.sort(key=lambda item: (item[0], item[2][0]))
    best_span: Span | None = None
    best_d = 0
    best_m = 1
    ref_masks = pattern_masks(folded_reference)
    for _, lower_bound, span, folded, longest in scored:
        if best_span is None:
            best_d = levenshtein_distance(folded_reference, folded)
            best_m, best_span = longest, span
            continue
        # integer-exact pruning: skip when even the bound cannot beat the
        # best ratio, or can at most tie it from a later span
        crossed_bound = lower_bound * best_m
        crossed_best = best_d * longest
        if crossed_bound > crossed_best:
            continue
        if crossed_bound == crossed_best and span[0] > best_span[0]:
            continue
        # admit d with d/longest < best_d/best_m, or a tie from an earlier span
        distance = masked_distance(ref_masks, ref_len, folded)
        if distance * best_m < crossed_best or (
            distance * best_m == crossed_best and span[0] < best_span[0]
        ):
            best_d, best_m, best_span = distance, longest, span
    return best_span if best_span is not None else EMPTY_SPAN


def align_sentence(
    on_sentence: str, anonymized_text: str, an_sentences: list[Span]
) -> Span:
    """Pick the anonymized-note sentence most similar to `on_sentence`.

    Returns the span with the highest Levenshtein ratio, earliest span on
    ties, or the empty span when the anonymized note has no sentences.
    """
    if not an_sentences:
        return EMPTY_SPAN
    candidates = []
    for span in an_sentences:
        folded = anonymized_text[span[0] : span[1]].casefold()
        candidates.append((span, folded, _char_counts(folded)))
    return _best_candidate(on_sentence.casefold(), candidates)


class PairAligner:
    """Caches sentence segmentation and alignments for one note pair.

    Sharing one instance across the annotations of a note avoids
    re-segmenting and re-aligning when several entities sit in the same
    sentence.
    """

    def __init__(self, pair: NotePair):
        self.pair = pair
        self.on_spans = split_sentences(pair.original.text)
        self.an_spans = split_sentences(pair.anonymized.text)
        an_text = pair.anonymized.text
        self._candidates = []
        for span in self.an_spans:
            folded = an_text[span[0] : span[1]].casefold()
            self._candidates.append((span, folded, _char_counts(folded)))
        self._aligned: dict[Span, Span] = {}

    def aligned_sentence_text(self, annotation: EntityAnnotation) -> str:
        """Anonymized-note sentence aligned with the annotation's sentence."""
        note = self.pair.original
        if annotation.char_end > len(note.text) or annotation.char_start < 0:
            raise ValueError(
                f"annotation [{annotation.char_start}, {annotation.char_end}) "
                f"outside note {note.id!r} bounds"
            )
        on_span = sentence_containing(self.on_spans, annotation.char_start)
        if on_span is None:
            return ""
        cached = self._aligned.get(on_span)
        if cached is None:
            if not self._candidates:
                cached = EMPTY_SPAN
            else:
                folded = note.text[on_span[0] : on_span[1]].casefold()
                cached = _best_candidate(folded, self._candidates)
            self._aligned[on_span] = cached
        return self.pair.anonymized.text[cached[0] : cached[1]]


def entity_lsi(pair: NotePair, annotation: EntityAnnotation) -> float:
    """Similarity of one entity against its aligned anonymized sentence."""
    return lsi(annotation.entity_text, PairAligner(pair).aligned_sentence_text(annotation))
