"""deideval: evaluation toolkit for clinical text anonymization.

Scores any anonymization method's output against the original notes:
entity-level similarity metrics (windowed Levenshtein ratios, threshold
recalls, string-matching recall) for sensitivity, and classifier-logit
comparison metrics (Jaccard over thresholded softmax, softmax-discounted
ranking gain) for clinical information retention. Ships a deterministic
synthetic corpus generator and reference anonymizers to test against.
"""

from .corpus import (
    AnonymizedNote,
    ClinicalNote,
    CorpusError,
    EntityAnnotation,
    EntityCategory,
    IdentifierClass,
    NotePair,
    NoteTemplate,
    generate_synthetic_note,
    load_anonymized,
    load_corpus,
    load_templates,
    save_anonymized,
    save_corpus,
    split_sentences,
)
from .sensitivity import (
    SensitivityReport,
    alid,
    align_sentence,
    entity_lsi,
    evaluate_sensitivity,
    levenshtein_distance,
    levenshtein_ratio,
    levenshtein_recall,
    lrdi,
    lrqi,
    lsi,
    string_matching_recall,
)
from .retention import (
    FileProvider,
    LogitProvider,
    LogitVector,
    ProviderError,
    RemoteClassifier,
    RetentionReport,
    ToyClassifier,
    binarize,
    evaluate_retention,
    get_logits,
    jsc,
    nsdcg,
    softmax,
    toy_classifier_logits,
)
from .anonymizers import (
    EmbeddingTable,
    GoldSpanRedactor,
    IdentityAnonymizer,
    KneoAnonymizer,
    RegexNerAnonymizer,
    identity_anonymize,
    kneo_anonymize,
    nearest_neighbor,
    redact_gold,
    regex_ner_anonymize,
)
from .reporting import (
    AggregateReport,
    CorpusEvaluator,
    EvaluationConfig,
    NoteReport,
    aggregate,
    render,
)

__version__ = "0.1.0"

__all__ = [
    "AggregateReport",
    "AnonymizedNote",
    "ClinicalNote",
    "CorpusError",
    "CorpusEvaluator",
    "EmbeddingTable",
    "EntityAnnotation",
    "EntityCategory",
    "EvaluationConfig",
    "FileProvider",
    "GoldSpanRedactor",
    "IdentifierClass",
    "IdentityAnonymizer",
    "KneoAnonymizer",
    "LogitProvider",
    "LogitVector",
    "NotePair",
    "NoteReport",
    "NoteTemplate",
    "ProviderError",
    "RegexNerAnonymizer",
    "RemoteClassifier",
    "RetentionReport",
    "SensitivityReport",
    "ToyClassifier",
    "aggregate",
    "alid",
    "align_sentence",
    "binarize",
    "entity_lsi",
    "evaluate_retention",
    "evaluate_sensitivity",
    "generate_synthetic_note",
    "get_logits",
    "identity_anonymize",
    "jsc",
    "kneo_anonymize",
    "levenshtein_distance",
    "levenshtein_ratio",
    "levenshtein_recall",
    "load_anonymized",
    "load_corpus",
    "load_templates",
    "lrdi",
    "lrqi",
    "lsi",
    "nearest_neighbor",
    "nsdcg",
    "redact_gold",
    "regex_ner_anonymize",
    "render",
    "save_anonymized",
    "save_corpus",
    "softmax",
    "split_sentences",
    "string_matching_recall",
    "toy_classifier_logits",
]
