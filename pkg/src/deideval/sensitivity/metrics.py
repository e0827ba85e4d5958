"""Sensitivity metrics over per-entity similarity scores.

All metrics are percentages. Functions return None ("not applicable")
when given no scores, so that corpus-level aggregation can skip notes
without direct or quasi identifiers instead of averaging in zeros.
"""
from __future__ import annotations

from typing import Sequence

from ..corpus.types import EntityAnnotation
from ..validation import check_threshold

DEFAULT_SIMILARITY_THRESHOLD = 0.85


def alid(scores: Sequence[float]) -> float | None:
    """Average dissimilarity: (1 - mean(scores)) * 100."""
    if not scores:
        return None
    return (1.0 - sum(scores) / len(scores)) * 100.0


def levenshtein_recall(
    scores: Sequence[float], th_s: float = DEFAULT_SIMILARITY_THRESHOLD
) -> float | None:
    """Share of entities counted as de-identified: score strictly below th_s."""
    check_threshold("th_s", th_s, inclusive_upper=True)
    if not scores:
        return None
    below = sum(1 for s in scores if s < th_s)
    return below / len(scores) * 100.0


def lrdi(
    direct_scores: Sequence[float], th_s: float = DEFAULT_SIMILARITY_THRESHOLD
) -> float | None:
    """All-or-nothing recall for direct identifiers: 100 only if every score is below th_s."""
    check_threshold("th_s", th_s, inclusive_upper=True)
    if not direct_scores:
        return None
    return 100.0 if all(s < th_s for s in direct_scores) else 0.0


def lrqi(
    quasi_scores: Sequence[float], th_s: float = DEFAULT_SIMILARITY_THRESHOLD
) -> float | None:
    """Levenshtein recall restricted to quasi-identifier scores."""
    return levenshtein_recall(quasi_scores, th_s)


def string_matching_recall(
    entities: Sequence[EntityAnnotation], anonymized_text: str
) -> float | None:
    """Share of entities whose exact text is absent from the anonymized note.

    Case-folded substring search over the whole anonymized text; each
    annotation occurrence counts separately.
    """
    if not entities:
        return None
    folded_text = anonymized_text.casefold()
    removed = sum(
        1 for entity in entities if entity.entity_text.casefold() not in folded_text
    )
    return removed / len(entities) * 100.0
