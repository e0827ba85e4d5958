from __future__ import annotations

from hypothesis import given, settings, strategies as st

from deideval.corpus.sentences import sentence_containing, split_sentences


def spans_text(text):
    return [text[s:e] for s, e in split_sentences(text)]


def test_three_delimiters():
    assert spans_text("A. B? C") == ["A.", "B?", "C"]


def test_abbreviation_guard():
    assert spans_text("Seen by Dr. Reis today.") == ["Seen by Dr. Reis today."]


def test_all_guarded_abbreviations():
    text = "Dr. Mr. Mrs. vs. e.g. i.e. end."
    assert spans_text(text) == [text]


def test_empty_text():
    assert split_sentences("") == []


def test_whitespace_only():
    assert split_sentences("  \n\t ") == []


def test_newline_boundary():
    assert spans_text("alpha\nbeta") == ["alpha", "beta"]


def test_terminator_runs_stay_together():
    assert spans_text("Hmm... ok?! sure") == ["Hmm...", "ok?!", "sure"]


def test_exclamation_and_question():
    assert spans_text("Stop! Why? Go now.") == ["Stop!", "Why?", "Go now."]


def test_spans_trimmed():
    for start, end in split_sentences("  padded sentence.   another  "):
        text = "  padded sentence.   another  "
        assert not text[start].isspace()
        assert not text[end - 1].isspace()


def test_guard_is_case_insensitive():
    assert spans_text("seen by DR. Reis today.") == ["seen by DR. Reis today."]


def test_inner_word_periods_do_not_split():
    assert spans_text("Temp was 36.8 C today.") == ["Temp was 36.8 C today."]
    assert spans_text("write a.b@c.org now. done") == ["write a.b@c.org now.", "done"]
    assert spans_text("see https://x.io/path today.") == ["see https://x.io/path today."]


texts = st.text(alphabet="abN .!?\ne", max_size=40)


@settings(max_examples=300)
@given(texts)
def test_partition_properties(text):
    spans = split_sentences(text)
    # ordered and non-overlapping
    for (s1, e1), (s2, e2) in zip(spans, spans[1:]):
        assert e1 <= s2
    covered = set()
    for start, end in spans:
        assert 0 <= start < end <= len(text)
        covered.update(range(start, end))
    # every non-whitespace character is covered exactly once
    for i, ch in enumerate(text):
        if not ch.isspace():
            assert i in covered
    # concatenating spans plus gaps reconstructs the text
    rebuilt = []
    cursor = 0
    for start, end in spans:
        rebuilt.append(text[cursor:start])
        rebuilt.append(text[start:end])
        cursor = end
    rebuilt.append(text[cursor:])
    assert "".join(rebuilt) == text


def test_sentence_containing():
    text = "One here. Two there."
    spans = split_sentences(text)
    assert sentence_containing(spans, 0) == spans[0]
    assert sentence_containing(spans, 12) == spans[1]
    # gap position resolves to the following span
    assert sentence_containing(spans, 9) == spans[1]
    assert sentence_containing([], 3) is None
