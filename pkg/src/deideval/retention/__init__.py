from .functions import (
    DEFAULT_BINARIZATION_THRESHOLD,
    binarize,
    jsc,
    nsdcg,
    softmax,
)
from .providers import (
    FileProvider,
    LogitProvider,
    LogitVector,
    ProviderError,
    RemoteClassifier,
    ToyClassifier,
    get_logits,
    toy_classifier_logits,
)
from .evaluate import ANONYMIZED_ID_SUFFIX, RetentionReport, evaluate_retention

__all__ = [
    "ANONYMIZED_ID_SUFFIX",
    "DEFAULT_BINARIZATION_THRESHOLD",
    "FileProvider",
    "LogitProvider",
    "LogitVector",
    "ProviderError",
    "RemoteClassifier",
    "RetentionReport",
    "ToyClassifier",
    "binarize",
    "evaluate_retention",
    "get_logits",
    "jsc",
    "nsdcg",
    "softmax",
    "toy_classifier_logits",
]
