from __future__ import annotations

import json

import pytest
from click.testing import CliRunner

from conftest import write_jsonl
from deideval.cli import main
from deideval.corpus.io import load_anonymized, load_corpus


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def template_file(tmp_path):
    return write_jsonl(
        tmp_path / "templates.jsonl",
        [
            {
                "id": "t1",
                "body": (
                    "Patient ⟦NAME⟧ was admitted on ⟦DATE⟧. "
                    "Contact ⟦EMAIL⟧ for records."
                ),
            }
        ],
    )


def generate_corpus(runner, template_file, tmp_path, count=6, seed=11):
    out = tmp_path / "corpus.jsonl"
    result = runner.invoke(
        main,
        [
            "generate",
            "--templates", str(template_file),
            "--count", str(count),
            "--seed", str(seed),
            "--out", str(out),
        ],
    )
    assert result.exit_code == 0, result.output
    return out


class TestGenerate:
    def test_deterministic_across_runs(self, runner, template_file, tmp_path):
        first = generate_corpus(runner, template_file, tmp_path)
        first_bytes = first.read_bytes()
        first.unlink()
        second = generate_corpus(runner, template_file, tmp_path)
        assert second.read_bytes() == first_bytes

    def test_count_zero_writes_empty_file(self, runner, template_file, tmp_path):
        out = tmp_path / "empty.jsonl"
        result = runner.invoke(
            main,
            ["generate", "--templates", str(template_file), "--count", "0", "--out", str(out)],
        )
        assert result.exit_code == 0
        assert out.read_text() == ""

    def test_missing_template_file_exits_2(self, runner, tmp_path):
        result = runner.invoke(
            main,
            [
                "generate",
                "--templates", str(tmp_path / "nope.jsonl"),
                "--count", "1",
                "--out", str(tmp_path / "out.jsonl"),
            ],
        )
        assert result.exit_code == 2

    def test_notes_cycle_templates_with_unique_ids(self, runner, template_file, tmp_path):
        out = generate_corpus(runner, template_file, tmp_path, count=4)
        notes = load_corpus(out)
        assert len({n.id for n in notes}) == 4


class TestAnonymize:
    def test_identity_round_trip(self, runner, template_file, tmp_path):
        corpus = generate_corpus(runner, template_file, tmp_path)
        out = tmp_path / "anon.jsonl"
        result = runner.invoke(
            main,
            ["anonymize", "--corpus", str(corpus), "--method", "identity", "--out", str(out)],
        )
        assert result.exit_code == 0
        notes = load_corpus(corpus)
        anon = load_anonymized(out)
        assert [a.text for a in anon] == [n.text for n in notes]
        assert all(a.method_tag == "identity" for a in anon)

    def test_redact_masks_gold_spans(self, runner, template_file, tmp_path):
        corpus = generate_corpus(runner, template_file, tmp_path)
        out = tmp_path / "anon.jsonl"
        result = runner.invoke(
            main,
            ["anonymize", "--corpus", str(corpus), "--method", "redact", "--out", str(out)],
        )
        assert result.exit_code == 0
        notes = load_corpus(corpus)
        anon = {a.id: a for a in load_anonymized(out)}
        for note in notes:
            for annotation in note.annotations:
                assert annotation.entity_text not in anon[note.id].text

    def test_kneo_without_embeddings_exits_2(self, runner, template_file, tmp_path):
        corpus = generate_corpus(runner, template_file, tmp_path)
        result = runner.invoke(
            main,
            ["anonymize", "--corpus", str(corpus), "--method", "kneo",
             "--out", str(tmp_path / "anon.jsonl")],
        )
        assert result.exit_code == 2
        assert "--embeddings" in result.output

    def test_regex_method_runs_with_default_rules(self, runner, template_file, tmp_path):
        corpus = generate_corpus(runner, template_file, tmp_path)
        out = tmp_path / "anon.jsonl"
        result = runner.invoke(
            main,
            ["anonymize", "--corpus", str(corpus), "--method", "regex", "--out", str(out)],
        )
        assert result.exit_code == 0
        assert all("@" not in a.text for a in load_anonymized(out))  # emails masked


class TestEvaluate:
    def run_evaluate(self, runner, corpus, anon, out, *extra):
        return runner.invoke(
            main,
            [
                "evaluate",
                "--corpus", str(corpus),
                "--anonymized", str(anon),
                "--out", str(out),
                "--provider", "toy:8,3",
                *extra,
            ],
        )

    def test_identity_aggregates(self, runner, template_file, tmp_path):
        corpus = generate_corpus(runner, template_file, tmp_path)
        anon = tmp_path / "anon.jsonl"
        runner.invoke(main, ["anonymize", "--corpus", str(corpus), "--method", "identity",
                             "--out", str(anon)])
        report = tmp_path / "report.json"
        result = self.run_evaluate(runner, corpus, anon, report)
        assert result.exit_code == 0, result.output
        payload = json.loads(report.read_text())
        agg = payload["aggregate"]["identity"]
        assert agg["smr"] == 0.0
        assert agg["jsc"] == 100.0
        assert agg["nsdcg"] == 100.0

    def test_empty_anonymizations(self, runner, template_file, tmp_path):
        corpus = generate_corpus(runner, template_file, tmp_path)
        notes = load_corpus(corpus)
        anon = write_jsonl(
            tmp_path / "anon.jsonl",
            [{"id": n.id, "text": "", "method": "erase"} for n in notes],
        )
        report = tmp_path / "report.json"
        result = self.run_evaluate(runner, corpus, anon, report)
        assert result.exit_code == 0, result.output
        agg = json.loads(report.read_text())["aggregate"]["erase"]
        assert agg["lr"] == 100.0
        assert agg["lrdi"] == 100.0
        assert agg["lrqi"] == 100.0
        assert agg["smr"] == 100.0

    def test_unmatched_id_exits_2(self, runner, template_file, tmp_path):
        corpus = generate_corpus(runner, template_file, tmp_path)
        anon = write_jsonl(
            tmp_path / "anon.jsonl", [{"id": "ghost", "text": "", "method": "m"}]
        )
        result = self.run_evaluate(runner, corpus, anon, tmp_path / "r.json")
        assert result.exit_code == 2

    def test_provider_failure_exits_1(self, runner, template_file, tmp_path):
        corpus = generate_corpus(runner, template_file, tmp_path)
        notes = load_corpus(corpus)
        anon = tmp_path / "anon.jsonl"
        runner.invoke(main, ["anonymize", "--corpus", str(corpus), "--method", "identity",
                             "--out", str(anon)])
        # logits file lacks the anonymized-side ids: every note fails retention
        logits = write_jsonl(
            tmp_path / "logits.jsonl",
            [{"id": n.id, "logits": [1.0, 0.0]} for n in notes],
        )
        report = tmp_path / "report.json"
        result = runner.invoke(
            main,
            ["evaluate", "--corpus", str(corpus), "--anonymized", str(anon),
             "--out", str(report), "--provider", f"file:{logits}"],
        )
        assert result.exit_code == 1
        assert report.exists()  # report still written

    def test_config_file_applies(self, runner, template_file, tmp_path):
        corpus = generate_corpus(runner, template_file, tmp_path)
        anon = tmp_path / "anon.jsonl"
        runner.invoke(main, ["anonymize", "--corpus", str(corpus), "--method", "identity",
                             "--out", str(anon)])
        cfg = tmp_path / "eval.cfg"
        cfg.write_text("th_s = 0.5\nprovider = toy:6,1\n", encoding="utf-8")
        report = tmp_path / "report.json"
        result = runner.invoke(
            main,
            ["evaluate", "--corpus", str(corpus), "--anonymized", str(anon),
             "--out", str(report), "--config", str(cfg)],
        )
        assert result.exit_code == 0, result.output
        payload = json.loads(report.read_text())
        assert payload["notes"][0]["sensitivity"]["th_s"] == 0.5

    def test_k_all_flag_overrides_config_file(self, runner, template_file, tmp_path):
        corpus = generate_corpus(runner, template_file, tmp_path)
        anon = tmp_path / "anon.jsonl"
        runner.invoke(main, ["anonymize", "--corpus", str(corpus), "--method", "identity",
                             "--out", str(anon)])
        cfg = tmp_path / "eval.cfg"
        cfg.write_text("k = 3\nprovider = toy:8,1\n", encoding="utf-8")
        report = tmp_path / "report.json"
        result = runner.invoke(
            main,
            ["evaluate", "--corpus", str(corpus), "--anonymized", str(anon),
             "--out", str(report), "--config", str(cfg), "--k", "all"],
        )
        assert result.exit_code == 0, result.output
        payload = json.loads(report.read_text())
        assert payload["notes"][0]["retention"]["k"] == 8  # all classes, not 3

    def test_bad_threshold_exits_2(self, runner, template_file, tmp_path):
        corpus = generate_corpus(runner, template_file, tmp_path)
        anon = tmp_path / "anon.jsonl"
        runner.invoke(main, ["anonymize", "--corpus", str(corpus), "--method", "identity",
                             "--out", str(anon)])
        result = self.run_evaluate(
            runner, corpus, anon, tmp_path / "r.json", "--th-s", "2.0"
        )
        assert result.exit_code == 2


class TestReport:
    def test_renders_csv_and_markdown(self, runner, template_file, tmp_path):
        corpus = generate_corpus(runner, template_file, tmp_path)
        anon = tmp_path / "anon.jsonl"
        runner.invoke(main, ["anonymize", "--corpus", str(corpus), "--method", "identity",
                             "--out", str(anon)])
        report = tmp_path / "report.json"
        runner.invoke(
            main,
            ["evaluate", "--corpus", str(corpus), "--anonymized", str(anon),
             "--out", str(report), "--provider", "toy:8,3"],
        )
        csv_result = runner.invoke(main, ["report", "--report", str(report), "--format", "csv"])
        assert csv_result.exit_code == 0
        assert csv_result.output.splitlines()[0] == "method,smr,alid,lr,lrdi,lrqi,jsc,nsdcg,notes"
        md_result = runner.invoke(main, ["report", "--report", str(report), "--format", "markdown"])
        assert md_result.exit_code == 0
        assert "| identity |" in md_result.output

    def test_invalid_report_exits_2(self, runner, tmp_path):
        bogus = tmp_path / "r.json"
        bogus.write_text("{}", encoding="utf-8")
        result = runner.invoke(main, ["report", "--report", str(bogus)])
        assert result.exit_code == 2
