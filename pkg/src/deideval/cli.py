"""Command-line interface: generate, anonymize, evaluate, report.

Exit codes: 0 success, 1 partial per-note failures during evaluation,
2 usage or configuration error.
"""
from __future__ import annotations

import json
import sys

import click

from .anonymizers.methods import (
    MASK_STYLES,
    GoldSpanRedactor,
    IdentityAnonymizer,
    KneoAnonymizer,
    RegexNerAnonymizer,
)
from .corpus.generator import DEFAULT_MIN_ENTITY_LENGTH, generate_synthetic_note
from .corpus.io import load_anonymized, load_corpus, load_templates, save_anonymized, save_corpus
from .corpus.types import CorpusError
from .reporting.aggregate import AggregateReport, render
from .reporting.config import build_config, load_config_file, parse_k
from .reporting.runner import CorpusEvaluator, evaluation_to_dict


@click.group()
def main():
    """Evaluation toolkit for clinical text anonymization."""


@main.command()
@click.option("--templates", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--count", type=int, required=True, help="number of notes to generate")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--min-entity-length", type=int, default=DEFAULT_MIN_ENTITY_LENGTH, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), required=True)
def generate(templates, count, seed, min_entity_length, out):
    """Generate a synthetic annotated corpus from placeholder templates."""
    if count < 0:
        raise click.UsageError("--count must be non-negative")
    try:
        template_list = load_templates(templates)
    except CorpusError as exc:
        raise click.UsageError(str(exc))
    if count > 0 and not template_list:
        raise click.UsageError(f"{templates}: no templates found")
    notes = []
    for i in range(count):
        template = template_list[i % len(template_list)]
        notes.append(
            generate_synthetic_note(
                template,
                seed=seed + i,
                note_id=f"{template.id}-{i:06d}",
                min_entity_length=min_entity_length,
            )
        )
    save_corpus(notes, out)
    click.echo(f"wrote {len(notes)} notes to {out}")


@main.command()
@click.option("--corpus", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option(
    "--method",
    type=click.Choice(["redact", "regex", "kneo", "identity"]),
    required=True,
)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), required=True)
@click.option("--embeddings", type=click.Path(exists=True, dir_okay=False), default=None,
              help="word2vec text file (kneo only)")
@click.option("--rules", type=click.Path(exists=True, dir_okay=False), default=None,
              help="rule JSONL file (regex only; defaults to the built-in set)")
@click.option("--mask-style", type=click.Choice(list(MASK_STYLES)), default="[REDACTED]",
              show_default=True, help="redact only")
def anonymize(corpus, method, out, embeddings, rules, mask_style):
    """Run a reference anonymizer over a corpus."""
    try:
        notes = load_corpus(corpus)
    except CorpusError as exc:
        raise click.UsageError(str(exc))
    if method == "redact":
        transformer = GoldSpanRedactor(mask_style=mask_style)
    elif method == "regex":
        transformer = RegexNerAnonymizer(rules=rules)
    elif method == "kneo":
        if embeddings is None:
            raise click.UsageError("--embeddings is required for method=kneo")
        transformer = KneoAnonymizer(embeddings=embeddings)
    else:
        transformer = IdentityAnonymizer()
    try:
        anonymized = transformer.fit(notes).transform(notes)
    except (ValueError, OSError) as exc:
        raise click.UsageError(str(exc))
    save_anonymized(anonymized, out)
    click.echo(f"wrote {len(anonymized)} anonymized notes to {out}")


@main.command()
@click.option("--corpus", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--anonymized", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), required=True)
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), default=None,
              help="key=value config file; flags override it")
@click.option("--th-s", type=float, default=None, help="similarity threshold (default 0.85)")
@click.option("--th-b", type=float, default=None, help="binarization threshold (default 0.05)")
@click.option("--k", "k_raw", type=str, default=None, help="rank cutoff or 'all'")
@click.option("--provider", type=str, default=None,
              help="file:<path> | toy:<N>[,<seed>] | remote:<url>")
@click.option("--workers", type=int, default=None, help="worker threads (default 1)")
def evaluate(corpus, anonymized, out, config_path, th_s, th_b, k_raw, provider, workers):
    """Score an anonymized corpus against its originals and write a JSON report."""
    try:
        file_values = load_config_file(config_path) if config_path else None
        overrides = {}
        if th_s is not None:
            overrides["th_s"] = th_s
        if th_b is not None:
            overrides["th_b"] = th_b
        if k_raw is not None:
            overrides["k"] = parse_k(k_raw)
        if provider is not None:
            overrides["provider"] = provider
        if workers is not None:
            overrides["workers"] = workers
        config = build_config(file_values, **overrides)
        notes = load_corpus(corpus)
        anon_notes = load_anonymized(anonymized)
        evaluator = CorpusEvaluator.from_config(config)
        evaluation = evaluator.evaluate(notes, anon_notes)
    except (CorpusError, ValueError, OSError) as exc:
        raise click.UsageError(str(exc))
    if evaluation.skipped:
        click.echo(
            f"warning: {evaluation.skipped} original notes had no anonymized counterpart",
            err=True,
        )
    with open(out, "w", encoding="utf-8", newline="\n") as handle:
        json.dump(evaluation_to_dict(evaluation), handle, indent=2, ensure_ascii=False)
        handle.write("\n")
    click.echo(f"wrote report for {len(evaluation.notes)} notes to {out}")
    if evaluation.failures:
        click.echo(f"error: {evaluation.failures} notes failed during evaluation", err=True)
        sys.exit(1)


@main.command()
@click.option("--report", "report_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "markdown"]), default="markdown",
              show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None,
              help="write here instead of stdout")
def report(report_path, fmt, out):
    """Render the aggregate table of an evaluation report."""
    try:
        with open(report_path, encoding="utf-8") as handle:
            payload = json.load(handle)
        aggregates = [
            AggregateReport(
                method_tag=entry["method"],
                note_count=entry["notes"],
                smr=entry["smr"],
                alid=entry["alid"],
                lr=entry["lr"],
                lrdi=entry["lrdi"],
                lrqi=entry["lrqi"],
                jsc=entry["jsc"],
                nsdcg=entry["nsdcg"],
                not_applicable=entry.get("not_applicable", {}),
                micro=entry.get("micro", {}),
            )
            for entry in payload["aggregate"].values()
        ]
    except (OSError, KeyError, TypeError, json.JSONDecodeError) as exc:
        raise click.UsageError(f"{report_path}: not a valid report file: {exc}")
    text = render(aggregates, fmt)
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")
    else:
        click.echo(text, nl=not text.endswith("\n"))


if __name__ == "__main__":
    main()
