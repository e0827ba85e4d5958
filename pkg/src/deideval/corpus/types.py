"""Data model for annotated clinical-note corpora.

All indices are 0-based offsets over Unicode scalar values (Python string
indices), never bytes, so span arithmetic matches character-level edit
distances downstream. Every type is immutable after construction and safe
to share across worker threads.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum


class CorpusError(ValueError):
    """Raised when corpus data violates the format or an invariant."""


class IdentifierClass(Enum):
    DIRECT = "direct"
    QUASI = "quasi"


class EntityCategory(Enum):
    """The ten sensitive-entity categories recognised by the toolkit."""

    NAME = "NAME"
    CONTACT_NUMBER = "CONTACT_NUMBER"
    ID = "ID"
    EMAIL = "EMAIL"
    LOCATION = "LOCATION"
    DATE = "DATE"
    URL = "URL"
    AGE_ABOVE_89 = "AGE_ABOVE_89"
    INSTITUTION = "INSTITUTION"
    HOLIDAY = "HOLIDAY"

    @property
    def identifier_class(self) -> IdentifierClass:
        return _IDENTIFIER_CLASS[self]

    @property
    def is_direct(self) -> bool:
        """True for categories that identify a person on their own."""
        return _IDENTIFIER_CLASS[self] is IdentifierClass.DIRECT


# Names, phone numbers, record ids and email addresses identify a person
# directly; the remaining categories only do so in combination.
_IDENTIFIER_CLASS = {
    EntityCategory.NAME: IdentifierClass.DIRECT,
    EntityCategory.CONTACT_NUMBER: IdentifierClass.DIRECT,
    EntityCategory.ID: IdentifierClass.DIRECT,
    EntityCategory.EMAIL: IdentifierClass.DIRECT,
    EntityCategory.LOCATION: IdentifierClass.QUASI,
    EntityCategory.DATE: IdentifierClass.QUASI,
    EntityCategory.URL: IdentifierClass.QUASI,
    EntityCategory.AGE_ABOVE_89: IdentifierClass.QUASI,
    EntityCategory.INSTITUTION: IdentifierClass.QUASI,
    EntityCategory.HOLIDAY: IdentifierClass.QUASI,
}


@dataclass(frozen=True)
class EntityAnnotation:
    """A gold sensitive-entity span within a clinical note."""

    entity_text: str
    category: EntityCategory
    char_start: int
    char_end: int

    def __post_init__(self):
        if self.char_start < 0 or self.char_end <= self.char_start:
            raise CorpusError(
                f"empty span: [{self.char_start}, {self.char_end}) is not a valid entity span"
            )
        if not self.entity_text:
            raise CorpusError("entity_text must be non-empty")

    @property
    def is_direct(self) -> bool:
        return self.category.is_direct


@dataclass(frozen=True)
class ClinicalNote:
    """An original note with its gold annotations, validated on construction."""

    id: str
    text: str
    annotations: tuple[EntityAnnotation, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "annotations", tuple(self.annotations))
        last_end = 0
        for ann in self.annotations:
            if ann.char_start < last_end:
                raise CorpusError(
                    f"note {self.id!r}: annotations overlap or are unsorted at offset {ann.char_start}"
                )
            if ann.char_end > len(self.text):
                raise CorpusError(
                    f"note {self.id!r}: span [{ann.char_start}, {ann.char_end}) exceeds text length {len(self.text)}"
                )
            actual = self.text[ann.char_start : ann.char_end]
            if actual != ann.entity_text:
                raise CorpusError(
                    f"note {self.id!r}: entity_text {ann.entity_text!r} does not match "
                    f"text slice {actual!r} at [{ann.char_start}, {ann.char_end})"
                )
            last_end = ann.char_end

    @classmethod
    def from_spans(
        cls,
        note_id: str,
        text: str,
        spans: list[tuple[int, int, EntityCategory]],
    ) -> "ClinicalNote":
        """Build a note deriving each entity_text from the text slice."""
        annotations = []
        for start, end, category in spans:
            if start < 0 or end > len(text) or end <= start:
                raise CorpusError(
                    f"note {note_id!r}: empty span or out-of-bounds span [{start}, {end})"
                )
            annotations.append(
                EntityAnnotation(
                    entity_text=text[start:end],
                    category=category,
                    char_start=start,
                    char_end=end,
                )
            )
        annotations.sort(key=lambda a: a.char_start)
        return cls(id=note_id, text=text, annotations=tuple(annotations))

    @property
    def direct_annotations(self) -> tuple[EntityAnnotation, ...]:
        return tuple(a for a in self.annotations if a.is_direct)

    @property
    def quasi_annotations(self) -> tuple[EntityAnnotation, ...]:
        return tuple(a for a in self.annotations if not a.is_direct)


@dataclass(frozen=True)
class AnonymizedNote:
    """Output text of an anonymization method, linked to an original by id."""

    id: str
    text: str
    method_tag: str = ""


@dataclass(frozen=True)
class NotePair:
    """An original note together with one anonymized version of it."""

    original: ClinicalNote
    anonymized: AnonymizedNote

    def __post_init__(self):
        if self.original.id != self.anonymized.id:
            raise CorpusError(
                f"note pair ids differ: {self.original.id!r} vs {self.anonymized.id!r}"
            )


PLACEHOLDER_PATTERN = re.compile(r"⟦([A-Z0-9_]+)⟧")  # e.g. ⟦NAME⟧

# any bracketed chunk at all, used to reject typos like ⟦name⟧ up front
_ANY_PLACEHOLDER = re.compile(r"⟦([^⟦⟧]*)⟧")


@dataclass(frozen=True)
class NoteTemplate:
    """A note body with ⟦CATEGORY⟧ placeholders to be filled with fake entities."""

    id: str
    body: str
    placeholders: tuple[EntityCategory, ...] = field(init=False)

    def __post_init__(self):
        cats = []
        for match in _ANY_PLACEHOLDER.finditer(self.body):
            name = match.group(1)
            try:
                cats.append(EntityCategory(name))
            except ValueError:
                raise CorpusError(
                    f"template {self.id!r}: unknown category {name!r} in placeholder"
                ) from None
        object.__setattr__(self, "placeholders", tuple(cats))
