"""Corpus-level evaluation: pairing, worker fan-out, report assembly.

Per-note evaluation is a pure function, so the run may fan out across a
thread pool; results are keyed and re-sorted by note id, making the
output byte-identical for any worker count.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from sklearn.base import BaseEstimator

from ..corpus.types import AnonymizedNote, ClinicalNote, CorpusError, NotePair
from ..retention.evaluate import evaluate_retention
from ..retention.providers import LogitProvider, ProviderError
from ..sensitivity.evaluate import evaluate_sensitivity
from .aggregate import AggregateReport, NoteReport, aggregate, aggregate_to_dict
from .config import EvaluationConfig, make_provider


@dataclass(frozen=True)
class CorpusEvaluation:
    """Result of evaluating one anonymized corpus against its originals."""

    notes: list[NoteReport]
    aggregates: dict[str, AggregateReport]
    skipped: int  # originals without an anonymized counterpart
    failures: int  # notes whose provider call failed


class CorpusEvaluator(BaseEstimator):
    """Evaluates anonymized corpora; parameters mirror EvaluationConfig."""

    def __init__(
        self,
        th_s: float = 0.85,
        th_b: float = 0.05,
        k: int | None = None,
        provider: LogitProvider | str | None = None,
        workers: int = 1,
    ):
        self.th_s = th_s
        self.th_b = th_b
        self.k = k
        self.provider = provider
        self.workers = workers

    @classmethod
    def from_config(cls, config: EvaluationConfig) -> "CorpusEvaluator":
        return cls(
            th_s=config.th_s,
            th_b=config.th_b,
            k=config.k,
            provider=config.provider,
            workers=config.workers,
        )

    def _resolve_provider(self) -> LogitProvider:
        if self.provider is None:
            return make_provider("toy:30,0")
        if isinstance(self.provider, str):
            return make_provider(self.provider)
        return self.provider

    def _evaluate_pair(self, pair: NotePair, provider: LogitProvider) -> NoteReport:
        sensitivity = None
        if pair.original.annotations:
            sensitivity = evaluate_sensitivity(pair, th_s=self.th_s)
        try:
            retention = evaluate_retention(pair, provider, th_b=self.th_b, k=self.k)
            error = None
        except ProviderError as exc:
            retention = None
            error = str(exc)
        return NoteReport(
            note_id=pair.original.id,
            method=pair.anonymized.method_tag,
            sensitivity=sensitivity,
            retention=retention,
            error=error,
        )

    def evaluate(
        self,
        notes: list[ClinicalNote],
        anonymized: list[AnonymizedNote],
    ) -> CorpusEvaluation:
        by_id = {note.id: note for note in notes}
        pairs = []
        for anon in anonymized:
            original = by_id.get(anon.id)
            if original is None:
                raise CorpusError(f"anonymized note id {anon.id!r} not present in corpus")
            pairs.append(NotePair(original=original, anonymized=anon))
        skipped = len(notes) - len({p.original.id for p in pairs})
        provider = self._resolve_provider()
        if self.workers > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                reports = list(pool.map(lambda p: self._evaluate_pair(p, provider), pairs))
        else:
            reports = [self._evaluate_pair(pair, provider) for pair in pairs]
        reports.sort(key=lambda r: r.note_id)
        by_method: dict[str, list[NoteReport]] = {}
        for report in reports:
            by_method.setdefault(report.method, []).append(report)
        aggregates = {method: aggregate(group) for method, group in sorted(by_method.items())}
        failures = sum(1 for r in reports if r.error is not None)
        return CorpusEvaluation(
            notes=reports, aggregates=aggregates, skipped=skipped, failures=failures
        )


def evaluation_to_dict(evaluation: CorpusEvaluation) -> dict:
    """Shape the evaluation as the documented report JSON."""
    notes = []
    for report in evaluation.notes:
        entry: dict = {"id": report.note_id, "method": report.method}
        if report.sensitivity is not None:
            sens = report.sensitivity
            entry["sensitivity"] = {
                "th_s": sens.th_s,
                "alid": sens.alid,
                "lr": sens.lr,
                "lrdi": sens.lrdi,
                "lrqi": sens.lrqi,
                "smr": sens.smr,
                "scores": list(sens.breakdown.scores),
                "direct_scores": list(sens.breakdown.direct),
                "quasi_scores": list(sens.breakdown.quasi),
            }
        else:
            entry["sensitivity"] = None
        if report.retention is not None:
            ret = report.retention
            entry["retention"] = {
                "th_b": ret.th_b,
                "k": ret.k,
                "jsc": ret.jsc,
                "nsdcg": ret.nsdcg,
            }
        else:
            entry["retention"] = None
        if report.error is not None:
            entry["error"] = report.error
        notes.append(entry)
    return {
        "aggregate": {
            method: aggregate_to_dict(agg) for method, agg in evaluation.aggregates.items()
        },
        "notes": notes,
    }
