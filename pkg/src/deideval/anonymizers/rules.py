"""Pattern rules for the regex/dictionary anonymizer.

A rule is either a regular expression or a word list, tagged with the
entity category its matches are masked as. The shipped default set
covers the same value shapes the synthetic generator produces, making
it a lightweight stand-in for a full NER analyzer.
"""
from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field

from ..corpus import wordlists as words
from ..corpus.types import EntityCategory


class RuleError(ValueError):
    """Raised when a rule file or rule definition is invalid."""


@dataclass(frozen=True)
class PatternRule:
    category: EntityCategory
    kind: str  # "regex" | "dict"
    value: str | tuple[str, ...]
    pattern: re.Pattern = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.kind == "regex":
            if not isinstance(self.value, str):
                raise RuleError("regex rule value must be a string")
            try:
                compiled = re.compile(self.value)
            except re.error as exc:
                raise RuleError(f"invalid regex for {self.category.value}: {exc}") from None
        elif self.kind == "dict":
            if isinstance(self.value, str):
                object.__setattr__(self, "value", (self.value,))
            terms = tuple(self.value)
            if not terms or not all(isinstance(t, str) and t for t in terms):
                raise RuleError("dict rule needs a non-empty list of non-empty terms")
            # longest alternative first so regex alternation is leftmost-longest
            ordered = sorted(terms, key=len, reverse=True)
            alternation = "|".join(re.escape(t) for t in ordered)
            compiled = re.compile(r"(?<!\w)(?:" + alternation + r")(?!\w)")
        else:
            raise RuleError(f"unknown rule kind {self.kind!r}")
        object.__setattr__(self, "pattern", compiled)


def load_rules(path: str | os.PathLike) -> list[PatternRule]:
    """Load rules from JSONL: {"category": str, "kind": "regex"|"dict", "value": ...}."""
    rules: list[PatternRule] = []
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise RuleError(f"{path}: line {lineno}: malformed JSON: {exc}") from None
            try:
                category = EntityCategory(record["category"])
                value = record["value"]
                rules.append(
                    PatternRule(
                        category=category,
                        kind=record["kind"],
                        value=tuple(value) if isinstance(value, list) else value,
                    )
                )
            except (KeyError, ValueError) as exc:
                raise RuleError(f"{path}: line {lineno}: {exc}") from None
    return rules


def default_rules() -> list[PatternRule]:
    """Built-in rule set covering the synthetic generator's value shapes."""
    return [
        PatternRule(
            EntityCategory.EMAIL,
            "regex",
            r"\b[A-Za-z0-9._%+-]+@[A-Za-z0-9.-]+\.[A-Za-z]{2,}\b",
        ),
        PatternRule(
            EntityCategory.URL,
            "regex",
            r"https?://[A-Za-z0-9.-]+(?:/[A-Za-z0-9._~%/-]*)?",
        ),
        PatternRule(
            EntityCategory.CONTACT_NUMBER,
            "regex",
            r"(?:\+1-)?(?:\(\d{3}\)\s?|\d{3}-)\d{3}-\d{4}",
        ),
        PatternRule(
            EntityCategory.DATE,
            "regex",
            r"\b\d{4}-\d{2}-\d{2}\b"
            r"|\b\d{2}/\d{2}/\d{4}\b"
            r"|\b(?:" + "|".join(words.MONTHS) + r")\s+\d{1,2},\s+\d{4}\b"
            r"|\b\d{1,2}\s+(?:" + "|".join(words.MONTHS_SHORT) + r")\s+\d{4}\b",
        ),
        PatternRule(
            EntityCategory.ID,
            "regex",
            r"\bMRN-\d{7}\b|\b[A-Z]{2}\d{6}\b|\b\d{8}\b",
        ),
        PatternRule(EntityCategory.NAME, "dict", words.FIRST_NAMES + words.LAST_NAMES),
        PatternRule(EntityCategory.INSTITUTION, "dict", words.INSTITUTIONS),
        PatternRule(EntityCategory.LOCATION, "dict", words.CITIES),
        PatternRule(EntityCategory.HOLIDAY, "dict", words.HOLIDAYS),
    ]
