"""Per-note sensitivity evaluation: one report per (original, anonymized) pair."""
from __future__ import annotations

from dataclasses import dataclass

from ..corpus.types import NotePair
from .metrics import (
    DEFAULT_SIMILARITY_THRESHOLD,
    alid,
    levenshtein_recall,
    lrdi,
    lrqi,
    string_matching_recall,
)
from .similarity import PairAligner, lsi


@dataclass(frozen=True)
class LsiBreakdown:
    """Per-entity similarity scores of one note, partitioned by identifier class."""

    per_entity: tuple[tuple[int, float], ...]  # (annotation index, score)
    scores: tuple[float, ...]
    direct: tuple[float, ...]
    quasi: tuple[float, ...]

    def __post_init__(self):
        if len(self.scores) != len(self.direct) + len(self.quasi):
            raise ValueError("direct and quasi scores must partition all scores")


@dataclass(frozen=True)
class SensitivityReport:
    """Sensitivity metrics of one anonymized note; None marks a metric that
    does not apply (no entities of the relevant identifier class)."""

    note_id: str
    th_s: float
    alid: float | None
    lr: float | None
    lrdi: float | None
    lrqi: float | None
    smr: float | None
    breakdown: LsiBreakdown


def evaluate_sensitivity(
    pair: NotePair, th_s: float = DEFAULT_SIMILARITY_THRESHOLD
) -> SensitivityReport:
    """Score every entity of the pair's original note against the anonymized text.

    Each entity is compared, within its aligned sentence, against all
    windows of its own length; the resulting scores feed the aggregate
    sensitivity metrics. Pure function of its inputs.
    """
    aligner = PairAligner(pair)
    per_entity: list[tuple[int, float]] = []
    direct: list[float] = []
    quasi: list[float] = []
    for index, annotation in enumerate(pair.original.annotations):
        score = lsi(annotation.entity_text, aligner.aligned_sentence_text(annotation))
        per_entity.append((index, score))
        if annotation.is_direct:
            direct.append(score)
        else:
            quasi.append(score)
    scores = tuple(score for _, score in per_entity)
    breakdown = LsiBreakdown(
        per_entity=tuple(per_entity),
        scores=scores,
        direct=tuple(direct),
        quasi=tuple(quasi),
    )
    return SensitivityReport(
        note_id=pair.original.id,
        th_s=th_s,
        alid=alid(scores),
        lr=levenshtein_recall(scores, th_s),
        lrdi=lrdi(breakdown.direct, th_s),
        lrqi=lrqi(breakdown.quasi, th_s),
        smr=string_matching_recall(pair.original.annotations, pair.anonymized.text),
        breakdown=breakdown,
    )
