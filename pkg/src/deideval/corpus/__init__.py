from .types import (
    AnonymizedNote,
    ClinicalNote,
    CorpusError,
    EntityAnnotation,
    EntityCategory,
    IdentifierClass,
    NotePair,
    NoteTemplate,
)
from .io import (
    load_anonymized,
    load_corpus,
    load_templates,
    save_anonymized,
    save_corpus,
)
from .generator import (
    DEFAULT_MIN_ENTITY_LENGTH,
    generate_entity_value,
    generate_synthetic_note,
)
from .sentences import DEFAULT_ABBREVIATIONS, sentence_containing, split_sentences

__all__ = [
    "AnonymizedNote",
    "ClinicalNote",
    "CorpusError",
    "DEFAULT_ABBREVIATIONS",
    "DEFAULT_MIN_ENTITY_LENGTH",
    "EntityAnnotation",
    "EntityCategory",
    "IdentifierClass",
    "NotePair",
    "NoteTemplate",
    "generate_entity_value",
    "generate_synthetic_note",
    "load_anonymized",
    "load_corpus",
    "load_templates",
    "save_anonymized",
    "save_corpus",
    "sentence_containing",
    "split_sentences",
]
