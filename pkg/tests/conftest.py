from __future__ import annotations

import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from deideval.corpus.types import (
    AnonymizedNote,
    ClinicalNote,
    EntityCategory,
    NotePair,
    NoteTemplate,
)


def make_note(note_id: str, text: str, spans) -> ClinicalNote:
    return ClinicalNote.from_spans(note_id, text, spans)


def make_pair(note: ClinicalNote, anonymized_text: str, method: str = "test") -> NotePair:
    return NotePair(
        original=note,
        anonymized=AnonymizedNote(id=note.id, text=anonymized_text, method_tag=method),
    )


@pytest.fixture
def simple_note() -> ClinicalNote:
    text = "Patient Ana Reis was admitted on Monday. Follow up at the clinic."
    return make_note("n1", text, [(8, 16, EntityCategory.NAME), (33, 39, EntityCategory.DATE)])


@pytest.fixture
def rich_template() -> NoteTemplate:
    body = (
        "Patient ⟦NAME⟧ was admitted to ⟦INSTITUTION⟧ on ⟦DATE⟧. "
        "Reached at ⟦CONTACT_NUMBER⟧ or ⟦EMAIL⟧. "
        "Record ⟦ID⟧ lists residence in ⟦LOCATION⟧. "
        "The subject is ⟦AGE_ABOVE_89⟧. "
        "Chart stored at ⟦URL⟧ since ⟦HOLIDAY⟧."
    )
    return NoteTemplate(id="rich", body=body)


def write_jsonl(path: Path, records: list[dict]) -> Path:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        for record in records:
            handle.write(json.dumps(record, ensure_ascii=False) + "\n")
    return path
