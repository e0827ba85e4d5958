"""Information-retention metrics over classifier logit vectors.

Two notes (original and anonymized) are each scored by the same
classifier; these functions compare the two logit vectors. JSC compares
the sets of classes whose softmax probability clears a threshold; NSDCG
compares the class rankings, weighting each rank position by the softmax
of the original logits instead of a logarithmic discount.
"""
from __future__ import annotations

import math
import warnings
from typing import Sequence

from ..validation import (
    check_finite_vector,
    check_rank_cutoff,
    check_same_length,
    check_threshold,
)

DEFAULT_BINARIZATION_THRESHOLD = 0.05

# exp() overflows past ~709; clamp and warn rather than crash.
_EXP_CLAMP = 700.0


def softmax(values: Sequence[float]) -> list[float]:
    """Numerically stable softmax (max-subtraction); output sums to 1."""
    values = check_finite_vector("logits", values)
    highest = max(values)
    exps = [math.exp(v - highest) for v in values]
    total = sum(exps)
    return [v / total for v in exps]


def binarize(
    probabilities: Sequence[float], th_b: float = DEFAULT_BINARIZATION_THRESHOLD
) -> set[int]:
    """Indices with probability strictly greater than th_b.

    A value exactly equal to the threshold maps to 0 (absent).
    """
    check_threshold("th_b", th_b)
    return {i for i, p in enumerate(probabilities) if p > th_b}


def jsc(
    original: Sequence[float],
    anonymized: Sequence[float],
    th_b: float = DEFAULT_BINARIZATION_THRESHOLD,
) -> float:
    """Jaccard similarity (percent) of the thresholded softmax outputs.

    Both sets empty counts as 100: neither note triggered any category,
    so no divergence was measured.
    """
    original = check_finite_vector("original", original)
    anonymized = check_finite_vector("anonymized", anonymized)
    check_same_length("original", original, "anonymized", anonymized)
    set_original = binarize(softmax(original), th_b)
    set_anonymized = binarize(softmax(anonymized), th_b)
    union = len(set_original | set_anonymized)
    if union == 0:
        return 100.0
    return len(set_original & set_anonymized) / union * 100.0


def _descending_order(values: Sequence[float]) -> list[int]:
    # stable: equal logits rank by ascending class index
    return sorted(range(len(values)), key=lambda i: (-values[i], i))


def _clamped_exp(value: float) -> float:
    if value > _EXP_CLAMP or value < -_EXP_CLAMP:
        warnings.warn(
            f"logit magnitude {value!r} clamped to +/-{_EXP_CLAMP} before exponentiation",
            RuntimeWarning,
            stacklevel=3,
        )
        value = _EXP_CLAMP if value > 0 else -_EXP_CLAMP
    return math.exp(value)


def nsdcg(
    original: Sequence[float],
    anonymized: Sequence[float],
    k: int | None = None,
) -> float:
    """Ranking-agreement retention score in (0, 100].

    The original logits sorted descending define both the per-rank
    discount (their softmax) and the ideal ordering. The anonymized
    logits contribute only their ranking: the original logits are
    re-ordered by it, exponentiated into relevances, and the discounted
    sum is normalised by the ideal (self-ordered) sum. `k` limits the sum
    to the top ranks; None means all classes.
    """
    original = check_finite_vector("original", original)
    anonymized = check_finite_vector("anonymized", anonymized)
    check_same_length("original", original, "anonymized", anonymized)
    k = check_rank_cutoff(k, len(original))
    ideal = [original[i] for i in _descending_order(original)]
    ranked = [original[i] for i in _descending_order(anonymized)]
    discounts = softmax(ideal)
    achieved = sum(discounts[i] * _clamped_exp(ranked[i]) for i in range(k))
    best = sum(discounts[i] * _clamped_exp(ideal[i]) for i in range(k))
    return achieved / best * 100.0
