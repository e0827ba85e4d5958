"""JSONL serialization for corpora, anonymized outputs, and templates.

One JSON object per line, UTF-8, LF line endings. Entity text is always
derived from the note text at load time, never stored.
"""
from __future__ import annotations

import json
import os
from typing import Iterable

from .types import (
    AnonymizedNote,
    ClinicalNote,
    CorpusError,
    EntityCategory,
    NoteTemplate,
)


def _iter_jsonl(path: str | os.PathLike) -> Iterable[tuple[int, dict]]:
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusError(f"{path}: line {lineno}: malformed JSON: {exc}") from None
            if not isinstance(record, dict):
                raise CorpusError(f"{path}: line {lineno}: expected an object")
            yield lineno, record


def _require(record: dict, key: str, path, lineno: int):
    if key not in record:
        raise CorpusError(f"{path}: line {lineno}: missing field {key!r}")
    return record[key]


def load_corpus(path: str | os.PathLike) -> list[ClinicalNote]:
    """Load and validate an annotated corpus from JSONL.

    Each line: {"id": str, "text": str, "entities": [{"start", "end", "category"}]}.
    Raises CorpusError with the offending line number on malformed records,
    duplicate ids, overlapping spans, or span/text mismatches.
    """
    notes: list[ClinicalNote] = []
    seen: set[str] = set()
    for lineno, record in _iter_jsonl(path):
        note_id = _require(record, "id", path, lineno)
        text = _require(record, "text", path, lineno)
        entities = record.get("entities", [])
        if not isinstance(note_id, str) or not isinstance(text, str):
            raise CorpusError(f"{path}: line {lineno}: 'id' and 'text' must be strings")
        if note_id in seen:
            raise CorpusError(f"{path}: line {lineno}: duplicate id {note_id!r}")
        seen.add(note_id)
        spans = []
        for ent in entities:
            category_name = _require(ent, "category", path, lineno)
            try:
                category = EntityCategory(category_name)
            except ValueError:
                raise CorpusError(
                    f"{path}: line {lineno}: unknown category {category_name!r}"
                ) from None
            spans.append((_require(ent, "start", path, lineno),
                          _require(ent, "end", path, lineno),
                          category))
        try:
            notes.append(ClinicalNote.from_spans(note_id, text, spans))
        except CorpusError as exc:
            raise CorpusError(f"{path}: line {lineno}: {exc}") from None
    return notes


def save_corpus(notes: Iterable[ClinicalNote], path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        for note in notes:
            record = {
                "id": note.id,
                "text": note.text,
                "entities": [
                    {"start": a.char_start, "end": a.char_end, "category": a.category.value}
                    for a in note.annotations
                ],
            }
            handle.write(json.dumps(record, ensure_ascii=False) + "\n")


def load_anonymized(path: str | os.PathLike) -> list[AnonymizedNote]:
    """Load anonymized notes: {"id": str, "text": str, "method": str} per line."""
    notes: list[AnonymizedNote] = []
    seen: set[str] = set()
    for lineno, record in _iter_jsonl(path):
        note_id = _require(record, "id", path, lineno)
        text = _require(record, "text", path, lineno)
        method = record.get("method", "")
        if note_id in seen:
            raise CorpusError(f"{path}: line {lineno}: duplicate id {note_id!r}")
        seen.add(note_id)
        notes.append(AnonymizedNote(id=note_id, text=text, method_tag=method))
    return notes


def save_anonymized(notes: Iterable[AnonymizedNote], path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        for note in notes:
            record = {"id": note.id, "text": note.text, "method": note.method_tag}
            handle.write(json.dumps(record, ensure_ascii=False) + "\n")


def load_templates(path: str | os.PathLike) -> list[NoteTemplate]:
    """Load note templates: {"id": str, "body": str} per line."""
    templates: list[NoteTemplate] = []
    for lineno, record in _iter_jsonl(path):
        template_id = _require(record, "id", path, lineno)
        body = _require(record, "body", path, lineno)
        try:
            templates.append(NoteTemplate(id=template_id, body=body))
        except CorpusError as exc:
            raise CorpusError(f"{path}: line {lineno}: {exc}") from None
    return templates
