from .embeddings import (
    NUM_TOKEN,
    UNK_TOKEN,
    EmbeddingError,
    EmbeddingTable,
    cosine_similarity,
    nearest_neighbor,
    save_word2vec_text,
)
from .rules import PatternRule, RuleError, default_rules, load_rules
from .methods import (
    MASK_STYLES,
    GoldSpanRedactor,
    IdentityAnonymizer,
    KneoAnonymizer,
    RegexNerAnonymizer,
    identity_anonymize,
    kneo_anonymize,
    redact_gold,
    regex_ner_anonymize,
)

__all__ = [
    "EmbeddingError",
    "EmbeddingTable",
    "GoldSpanRedactor",
    "IdentityAnonymizer",
    "KneoAnonymizer",
    "MASK_STYLES",
    "NUM_TOKEN",
    "PatternRule",
    "RegexNerAnonymizer",
    "RuleError",
    "UNK_TOKEN",
    "cosine_similarity",
    "default_rules",
    "identity_anonymize",
    "kneo_anonymize",
    "load_rules",
    "nearest_neighbor",
    "redact_gold",
    "regex_ner_anonymize",
    "save_word2vec_text",
]
