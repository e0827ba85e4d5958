from .edit_distance import levenshtein_distance, levenshtein_ratio, levenshtein_within
from .metrics import (
    DEFAULT_SIMILARITY_THRESHOLD,
    alid,
    levenshtein_recall,
    lrdi,
    lrqi,
    string_matching_recall,
)
from .similarity import EMPTY_SPAN, PairAligner, align_sentence, entity_lsi, lsi
from .evaluate import LsiBreakdown, SensitivityReport, evaluate_sensitivity

__all__ = [
    "DEFAULT_SIMILARITY_THRESHOLD",
    "EMPTY_SPAN",
    "LsiBreakdown",
    "PairAligner",
    "SensitivityReport",
    "alid",
    "align_sentence",
    "entity_lsi",
    "evaluate_sensitivity",
    "levenshtein_distance",
    "levenshtein_ratio",
    "levenshtein_recall",
    "levenshtein_within",
    "lrdi",
    "lrqi",
    "lsi",
    "string_matching_recall",
]
