from .aggregate import (
    CSV_HEADER,
    METRIC_KEYS,
    AggregateReport,
    NoteReport,
    aggregate,
    aggregate_to_dict,
    render,
)
from .config import (
    DEFAULT_PROVIDER_SPEC,
    REMOTE_URL_ENV,
    EvaluationConfig,
    build_config,
    load_config_file,
    make_provider,
    parse_k,
)
from .runner import CorpusEvaluation, CorpusEvaluator, evaluation_to_dict

__all__ = [
    "AggregateReport",
    "CSV_HEADER",
    "CorpusEvaluation",
    "CorpusEvaluator",
    "DEFAULT_PROVIDER_SPEC",
    "EvaluationConfig",
    "METRIC_KEYS",
    "NoteReport",
    "REMOTE_URL_ENV",
    "aggregate",
    "aggregate_to_dict",
    "build_config",
    "evaluation_to_dict",
    "load_config_file",
    "make_provider",
    "parse_k",
    "render",
]
