from __future__ import annotations

import pytest

from conftest import make_note, make_pair
from deideval.corpus.types import EntityCategory
from deideval.sensitivity.evaluate import evaluate_sensitivity
from deideval.sensitivity.metrics import (
    alid,
    levenshtein_recall,
    lrdi,
    lrqi,
    string_matching_recall,
)


class TestAlid:
    def test_fully_retained_entity(self):
        assert alid([1.0]) == 0.0

    def test_mean_complement(self):
        assert alid([0.2, 0.4]) == pytest.approx(70.0)

    def test_total_dissimilarity(self):
        assert alid([0.0, 0.0]) == 100.0

    def test_empty_not_applicable(self):
        assert alid([]) is None


class TestLevenshteinRecall:
    def test_strict_inequality_counting(self):
        assert levenshtein_recall([0.9, 0.5, 0.84999], 0.85) == pytest.approx(200 / 3)

    def test_all_zero_scores(self):
        assert levenshtein_recall([0.0, 0.0, 0.0], 0.85) == 100.0

    def test_exactly_at_threshold_is_not_below(self):
        assert levenshtein_recall([0.85], 0.85) == 0.0

    def test_empty_not_applicable(self):
        assert levenshtein_recall([], 0.85) is None

    def test_threshold_validated(self):
        with pytest.raises(ValueError):
            levenshtein_recall([0.5], 0.0)
        with pytest.raises(ValueError):
            levenshtein_recall([0.5], 1.5)
        assert levenshtein_recall([0.5], 1.0) == 100.0  # inclusive upper bound


class TestLrdi:
    def test_one_leak_zeroes_it(self):
        assert lrdi([0.1, 0.2, 0.9], 0.85) == 0.0

    def test_all_below_threshold(self):
        assert lrdi([0.1, 0.2], 0.85) == 100.0

    def test_no_direct_identifiers(self):
        assert lrdi([], 0.85) is None

    def test_only_two_values_possible(self):
        for scores in ([0.5], [0.9], [0.1, 0.99], [0.84, 0.84]):
            assert lrdi(scores, 0.85) in (0.0, 100.0)


class TestLrqi:
    def test_half_leaked(self):
        assert lrqi([0.9, 0.1], 0.85) == 50.0

    def test_empty_not_applicable(self):
        assert lrqi([], 0.85) is None

    def test_below_threshold(self):
        assert lrqi([0.84], 0.85) == 100.0


class TestStringMatchingRecall:
    def test_all_absent(self, simple_note):
        assert string_matching_recall(simple_note.annotations, "nothing to see") == 100.0

    def test_verbatim_leak_counts(self, simple_note):
        text = "Ana Reis left the building"
        assert string_matching_recall(simple_note.annotations, text) == 50.0

    def test_case_folded_search(self, simple_note):
        assert string_matching_recall(simple_note.annotations, "ANA REIS") == 50.0

    def test_substring_inside_longer_word_leaks(self):
        # "tim" sits inside "time": both this metric and the windowed
        # similarity flag it, by design
        note = make_note("n1", "Tim called.", [(0, 3, EntityCategory.NAME)])
        assert string_matching_recall(note.annotations, "no time left") == 0.0

    def test_empty_not_applicable(self):
        assert string_matching_recall([], "text") is None

    def test_each_occurrence_counted_separately(self):
        note = make_note(
            "n1",
            "Ana Reis met Ana Reis.",
            [(0, 8, EntityCategory.NAME), (13, 21, EntityCategory.NAME)],
        )
        # both duplicate annotations leak together or are removed together
        assert string_matching_recall(note.annotations, "ana reis spotted") == 0.0
        assert string_matching_recall(note.annotations, "nobody here") == 100.0


class TestEvaluateSensitivity:
    def test_identity_subject_leaks_everything(self, simple_note):
        report = evaluate_sensitivity(make_pair(simple_note, simple_note.text))
        assert report.smr == 0.0
        assert report.lr == 0.0
        assert report.alid == 0.0
        assert report.lrdi == 0.0  # has a NAME entity
        assert report.lrqi == 0.0

    def test_empty_output_hides_everything(self, simple_note):
        report = evaluate_sensitivity(make_pair(simple_note, ""))
        assert report.lr == 100.0
        assert report.lrqi == 100.0
        assert report.lrdi == 100.0
        assert report.smr == 100.0
        assert report.alid == 100.0

    def test_breakdown_partition(self, simple_note):
        report = evaluate_sensitivity(make_pair(simple_note, "other text entirely."))
        b = report.breakdown
        assert len(b.scores) == len(b.direct) + len(b.quasi)
        assert len(b.scores) == len(simple_note.annotations)
        assert len(b.direct) == 1 and len(b.quasi) == 1

    def test_note_without_entities_all_not_applicable(self):
        note = make_note("n0", "No entities here at all.", [])
        report = evaluate_sensitivity(make_pair(note, "No entities here at all."))
        assert report.alid is None
        assert report.lr is None
        assert report.lrdi is None
        assert report.lrqi is None
        assert report.smr is None

    def test_quasi_only_note_has_no_lrdi(self):
        note = make_note("n1", "Visited on Monday.", [(11, 17, EntityCategory.DATE)])
        report = evaluate_sensitivity(make_pair(note, "Visited on [DATE]."))
        assert report.lrdi is None
        assert report.lrqi == 100.0

    def test_threshold_recorded(self, simple_note):
        report = evaluate_sensitivity(make_pair(simple_note, ""), th_s=0.7)
        assert report.th_s == 0.7

    def test_verbatim_entity_flagged_by_both_metrics(self):
        # an entity surviving verbatim in its aligned sentence trips SMR
        # and the windowed recall alike
        note = make_note("n1", "Ana Reis was seen.", [(0, 8, EntityCategory.NAME)])
        report = evaluate_sensitivity(make_pair(note, "Ana Reis was seen."))
        assert report.smr == 0.0
        assert report.lr == 0.0

    def test_redacted_synthetic_note_scores_full_recall(self):
        from deideval.anonymizers.methods import redact_gold
        from deideval.corpus.generator import generate_synthetic_note
        from deideval.corpus.types import NotePair, NoteTemplate

        template = NoteTemplate(
            id="t",
            body=(
                "Patient ⟦NAME⟧ of ⟦LOCATION⟧ came in on ⟦DATE⟧. "
                "Ring ⟦CONTACT_NUMBER⟧ with the results."
            ),
        )
        note = generate_synthetic_note(template, seed=12)
        report = evaluate_sensitivity(NotePair(note, redact_gold(note)))
        assert report.smr == 100.0
        assert report.lr == 100.0
        assert report.lrdi == 100.0
        assert report.lrqi == 100.0
