"""Corpus-level aggregation and report rendering.

Aggregation is macro (unweighted per-note mean), computed only over the
notes where a metric applies; LRDI averages its per-note 0/100 values,
so the aggregate reads as "percent of notes with every direct identifier
protected". Pooled per-entity (micro) variants ride along in the JSON
for research use.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from ..retention.evaluate import RetentionReport
from ..sensitivity.evaluate import SensitivityReport

METRIC_KEYS = ("smr", "alid", "lr", "lrdi", "lrqi", "jsc", "nsdcg")

CSV_HEADER = "method,smr,alid,lr,lrdi,lrqi,jsc,nsdcg,notes"


@dataclass(frozen=True)
class NoteReport:
    """Everything measured for one note under one method."""

    note_id: str
    method: str
    sensitivity: SensitivityReport | None
    retention: RetentionReport | None
    error: str | None = None


@dataclass(frozen=True)
class AggregateReport:
    method_tag: str
    note_count: int
    smr: float | None
    alid: float | None
    lr: float | None
    lrdi: float | None
    lrqi: float | None
    jsc: float | None
    nsdcg: float | None
    not_applicable: dict[str, int] = field(default_factory=dict)
    micro: dict[str, float | None] = field(default_factory=dict)


def _metric_values(reports: Sequence[NoteReport], key: str) -> list[float]:
    values = []
    for report in reports:
        source = report.sensitivity if key in ("smr", "alid", "lr", "lrdi", "lrqi") else report.retention
        if source is None:
            continue
        value = getattr(source, key)
        if value is not None:
            values.append(value)
    return values


def _mean(values: Sequence[float]) -> float | None:
    if not values:
        return None
    return sum(values) / len(values)


def _micro_metrics(reports: Sequence[NoteReport]) -> dict[str, float | None]:
    """Pooled per-entity metrics across the whole corpus."""
    all_scores: list[float] = []
    direct: list[float] = []
    quasi: list[float] = []
    th_s = None
    removed = 0
    total_entities = 0
    for report in reports:
        sens = report.sensitivity
        if sens is None:
            continue
        th_s = sens.th_s
        all_scores.extend(sens.breakdown.scores)
        direct.extend(sens.breakdown.direct)
        quasi.extend(sens.breakdown.quasi)
        if sens.smr is not None:
            count = len(sens.breakdown.scores)
            removed += round(sens.smr * count / 100.0)
            total_entities += count
    if not all_scores or th_s is None:
        return {"alid": None, "lr": None, "lrdi": None, "lrqi": None, "smr": None}
    return {
        "alid": (1.0 - sum(all_scores) / len(all_scores)) * 100.0,
        "lr": sum(1 for s in all_scores if s < th_s) / len(all_scores) * 100.0,
        "lrdi": (100.0 if all(s < th_s for s in direct) else 0.0) if direct else None,
        "lrqi": (sum(1 for s in quasi if s < th_s) / len(quasi) * 100.0) if quasi else None,
        "smr": removed / total_entities * 100.0 if total_entities else None,
    }


def aggregate(reports: Sequence[NoteReport]) -> AggregateReport:
    """Macro-average the per-note reports of one method."""
    if not reports:
        raise ValueError("cannot aggregate an empty report list")
    methods = {r.method for r in reports}
    if len(methods) > 1:
        raise ValueError(f"aggregate expects a single method, got {sorted(methods)}")
    means: dict[str, float | None] = {}
    not_applicable: dict[str, int] = {}
    usable = [r for r in reports if r.error is None]
    for key in METRIC_KEYS:
        values = _metric_values(usable, key)
        means[key] = _mean(values)
        not_applicable[key] = len(usable) - len(values)
    return AggregateReport(
        method_tag=next(iter(methods)),
        note_count=len(usable),
        not_applicable=not_applicable,
        micro=_micro_metrics(usable),
        **means,
    )


def aggregate_to_dict(report: AggregateReport) -> dict:
    out = {"method": report.method_tag, "notes": report.note_count}
    for key in METRIC_KEYS:
        out[key] = getattr(report, key)
    out["not_applicable"] = dict(report.not_applicable)
    out["micro"] = dict(report.micro)
    return out


def _fmt(value: float | None, absent: str) -> str:
    return absent if value is None else f"{value:.2f}"


def render(aggregates: AggregateReport | Sequence[AggregateReport], fmt: str) -> str:
    """Render one table row per method in json, csv, or markdown."""
    if isinstance(aggregates, AggregateReport):
        aggregates = [aggregates]
    rows = sorted(aggregates, key=lambda a: a.method_tag)
    if fmt == "json":
        return json.dumps(
            {a.method_tag: aggregate_to_dict(a) for a in rows},
            indent=2,
            ensure_ascii=False,
        )
    if fmt == "csv":
        lines = [CSV_HEADER]
        for a in rows:
            cells = [a.method_tag]
            cells += [_fmt(getattr(a, key), "") for key in METRIC_KEYS]
            cells.append(str(a.note_count))
            lines.append(",".join(cells))
        return "\n".join(lines) + "\n"
    if fmt == "markdown":
        header = "| Method | SMR | ALID | LR | LRDI | LRQI | JSC | NSDCG | Notes |"
        rule = "|" + "---|" * 9
        lines = [header, rule]
        for a in rows:
            cells = [a.method_tag]
            cells += [_fmt(getattr(a, key), "n/a") for key in METRIC_KEYS]
            cells.append(str(a.note_count))
            lines.append("| " + " | ".join(cells) + " |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}; use json, csv, or markdown")
