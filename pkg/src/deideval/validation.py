"""Input validation helpers shared across the toolkit."""
from __future__ import annotations

import math
from typing import Sequence


def check_threshold(name: str, value: float, inclusive_upper: bool = False) -> float:
    """Require 0 < value < 1 (or <= 1 when inclusive_upper)."""
    upper_ok = value <= 1.0 if inclusive_upper else value < 1.0
    if not (value > 0.0 and upper_ok):
        bound = "(0, 1]" if inclusive_upper else "(0, 1)"
        raise ValueError(f"{name} must be in {bound}, got {value!r}")
    return value


def check_positive_int(name: str, value: int) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value!r}")
    return value


def check_finite_vector(name: str, values: Sequence[float]) -> tuple[float, ...]:
    out = tuple(float(v) for v in values)
    if not out:
        raise ValueError(f"{name} must be non-empty")
    if not all(math.isfinite(v) for v in out):
        raise ValueError(f"{name} must contain only finite values")
    return out


def check_same_length(name_a: str, a: Sequence, name_b: str, b: Sequence) -> None:
    if len(a) != len(b):
        raise ValueError(
            f"{name_a} and {name_b} must have equal length, got {len(a)} and {len(b)}"
        )


def check_rank_cutoff(k: int | None, n_classes: int) -> int:
    """Resolve the top-K cutoff; None means all classes."""
    if k is None:
        return n_classes
    check_positive_int("k", k)
    if k > n_classes:
        raise ValueError(f"k must be at most the number of classes ({n_classes}), got {k}")
    return k
