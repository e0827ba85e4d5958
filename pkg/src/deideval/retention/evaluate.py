"""Per-note retention evaluation over a logit provider."""
from __future__ import annotations

from dataclasses import dataclass

from ..corpus.types import NotePair
from .functions import DEFAULT_BINARIZATION_THRESHOLD, jsc, nsdcg
from .providers import LogitProvider

# A pair shares one note id, yet needs one logit vector per side. Id-keyed
# providers (the precomputed-file one) store the anonymized side under
# "<id>#anonymized"; text-keyed providers ignore the id entirely.
ANONYMIZED_ID_SUFFIX = "#anonymized"


@dataclass(frozen=True)
class RetentionReport:
    """Information-retention metrics of one anonymized note."""

    note_id: str
    jsc: float
    nsdcg: float
    th_b: float
    k: int


def evaluate_retention(
    pair: NotePair,
    provider: LogitProvider,
    th_b: float = DEFAULT_BINARIZATION_THRESHOLD,
    k: int | None = None,
) -> RetentionReport:
    """Fetch logits for both sides of the pair and compare them."""
    original = provider.get_logits(pair.original.id, pair.original.text)
    anonymized = provider.get_logits(
        pair.anonymized.id + ANONYMIZED_ID_SUFFIX, pair.anonymized.text
    )
    used_k = k if k is not None else len(original)
    return RetentionReport(
        note_id=pair.original.id,
        jsc=jsc(original.values, anonymized.values, th_b),
        nsdcg=nsdcg(original.values, anonymized.values, k),
        th_b=th_b,
        k=used_k,
    )
