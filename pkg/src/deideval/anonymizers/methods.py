"""Reference anonymization methods used as evaluation subjects.

Four methods: gold-span redaction (uses the gold annotations), a
regex/dictionary masker, nearest-neighbour token replacement over word
embeddings, and an identity passthrough as the worst-case control. Each
is available both as a plain function and as an sklearn-style
transformer mapping lists of notes to lists of anonymized notes.
"""
from __future__ import annotations

import os
import re
from typing import Iterable, Sequence

from sklearn.base import BaseEstimator, TransformerMixin

from ..corpus.types import AnonymizedNote, ClinicalNote
from .embeddings import NUM_TOKEN, EmbeddingTable, nearest_neighbor
from .rules import PatternRule, default_rules, load_rules

MASK_STYLES = ("[REDACTED]", "[CATEGORY]", "*")

# spans already masked as [SOMETHING] must not re-match rules
_MASKED_REGION = re.compile(r"\[[A-Z_]+\]")


def redact_gold(note: ClinicalNote, mask_style: str = "[REDACTED]") -> AnonymizedNote:
    """Replace every gold annotation span with a mask.

    Styles: "[REDACTED]" (fixed token), "[CATEGORY]" (the span's category
    name in brackets), "*" (an asterisk per character, length-preserving).
    Spans are replaced right to left so earlier offsets stay valid.
    """
    if mask_style not in MASK_STYLES:
        raise ValueError(f"mask_style must be one of {MASK_STYLES}, got {mask_style!r}")
    text = note.text
    for annotation in reversed(note.annotations):
        if mask_style == "[CATEGORY]":
            mask = f"[{annotation.category.value}]"
        elif mask_style == "*":
            mask = "*" * (annotation.char_end - annotation.char_start)
        else:
            mask = mask_style
        text = text[: annotation.char_start] + mask + text[annotation.char_end :]
    return AnonymizedNote(id=note.id, text=text, method_tag="redact")


def regex_ner_anonymize(
    text: str, rules: Sequence[PatternRule], note_id: str = ""
) -> AnonymizedNote:
    """Mask every rule match with its category name in brackets.

    Overlapping matches resolve leftmost-longest, with the earlier rule
    winning exact ties. Existing bracketed-uppercase tokens are excluded
    from matching, which makes the transform idempotent on its output.
    """
    masked_regions = [m.span() for m in _MASKED_REGION.finditer(text)]

    def in_masked_region(start: int, end: int) -> bool:
        return any(start < r_end and r_start < end for r_start, r_end in masked_regions)

    matches: list[tuple[int, int, int, PatternRule]] = []
    for rule_index, rule in enumerate(rules):
        for m in rule.pattern.finditer(text):
            if m.start() == m.end():
                continue
            if not in_masked_region(m.start(), m.end()):
                matches.append((m.start(), -(m.end() - m.start()), rule_index, rule))
    matches.sort()
    chosen: list[tuple[int, int, PatternRule]] = []
    last_end = 0
    for start, neg_length, _, rule in matches:
        end = start - neg_length
        if start >= last_end:
            chosen.append((start, end, rule))
            last_end = end
    for start, end, rule in reversed(chosen):
        text = text[:start] + f"[{rule.category.value}]" + text[end:]
    return AnonymizedNote(id=note_id, text=text, method_tag="regex")


def _split_affixes(token: str) -> tuple[str, str, str]:
    start, end = 0, len(token)
    while start < end and not token[start].isalnum():
        start += 1
    while end > start and not token[end - 1].isalnum():
        end -= 1
    return token[:start], token[start:end], token[end:]


def _replace_token(core: str, table: EmbeddingTable, cache: dict[str, str]) -> str:
    if core.isdigit():
        return NUM_TOKEN
    replacement = cache.get(core)
    if replacement is None:
        replacement = nearest_neighbor(core, table)
        cache[core] = replacement
    return replacement


def kneo_anonymize(
    text: str,
    table: EmbeddingTable,
    note_id: str = "",
    _cache: dict[str, str] | None = None,
) -> AnonymizedNote:
    """Replace every word with its nearest embedding neighbour.

    Whitespace and detached punctuation survive unchanged; purely numeric
    tokens become the NUM marker; out-of-vocabulary words become the UNK
    marker. Because a token never maps to itself, no in-vocabulary word
    survives in place.
    """
    cache: dict[str, str] = _cache if _cache is not None else {}
    pieces = re.split(r"(\s+)", text)
    out: list[str] = []
    for piece in pieces:
        if not piece or piece.isspace():
            out.append(piece)
            continue
        lead, core, trail = _split_affixes(piece)
        if not core:
            out.append(piece)
            continue
        out.append(lead + _replace_token(core, table, cache) + trail)
    return AnonymizedNote(id=note_id, text="".join(out), method_tag="kneo")


def identity_anonymize(text: str, note_id: str = "") -> AnonymizedNote:
    """Worst-case control subject: output equals input."""
    return AnonymizedNote(id=note_id, text=text, method_tag="identity")


class _NoteTransformer(BaseEstimator, TransformerMixin):
    """Common sklearn plumbing: X is a list of ClinicalNote objects."""

    method_tag = ""

    def fit(self, X=None, y=None):
        return self

    def transform(self, X: Iterable[ClinicalNote]) -> list[AnonymizedNote]:
        return [self.anonymize(note) for note in X]

    def anonymize(self, note: ClinicalNote) -> AnonymizedNote:
        raise NotImplementedError


class IdentityAnonymizer(_NoteTransformer):
    method_tag = "identity"

    def anonymize(self, note: ClinicalNote) -> AnonymizedNote:
        return identity_anonymize(note.text, note_id=note.id)


class GoldSpanRedactor(_NoteTransformer):
    """Masks the gold annotation spans; the strongest sensible subject."""

    method_tag = "redact"

    def __init__(self, mask_style: str = "[REDACTED]"):
        self.mask_style = mask_style

    def anonymize(self, note: ClinicalNote) -> AnonymizedNote:
        return redact_gold(note, self.mask_style)


class RegexNerAnonymizer(_NoteTransformer):
    """Rule-based masker; `rules` may be a rule list, a rule file path, or
    None for the built-in default set."""

    method_tag = "regex"

    def __init__(self, rules=None):
        self.rules = rules

    def fit(self, X=None, y=None):
        if self.rules is None:
            self.rules_ = default_rules()
        elif isinstance(self.rules, (str, os.PathLike)):
            self.rules_ = load_rules(self.rules)
        else:
            self.rules_ = list(self.rules)
        return self

    def anonymize(self, note: ClinicalNote) -> AnonymizedNote:
        if not hasattr(self, "rules_"):
            self.fit()
        return regex_ner_anonymize(note.text, self.rules_, note_id=note.id)


class KneoAnonymizer(_NoteTransformer):
    """Nearest-neighbour token replacement; `embeddings` may be a table or
    a word2vec text file path."""

    method_tag = "kneo"

    def __init__(self, embeddings=None):
        self.embeddings = embeddings

    def fit(self, X=None, y=None):
        if self.embeddings is None:
            raise ValueError("KneoAnonymizer requires an embedding table or file path")
        if isinstance(self.embeddings, EmbeddingTable):
            self.table_ = self.embeddings
        else:
            self.table_ = EmbeddingTable.from_word2vec_text(self.embeddings)
        self._cache: dict[str, str] = {}
        return self

    def anonymize(self, note: ClinicalNote) -> AnonymizedNote:
        if not hasattr(self, "table_"):
            self.fit()
        return kneo_anonymize(note.text, self.table_, note_id=note.id, _cache=self._cache)
