"""Evaluation configuration and provider wiring."""
from __future__ import annotations

import os
from dataclasses import dataclass

from ..retention.providers import (
    FileProvider,
    LogitProvider,
    RemoteClassifier,
    ToyClassifier,
)
from ..validation import check_positive_int, check_threshold

REMOTE_URL_ENV = "DEIDEVAL_REMOTE_URL"

DEFAULT_PROVIDER_SPEC = "toy:30,0"


@dataclass
class EvaluationConfig:
    th_s: float = 0.85
    th_b: float = 0.05
    k: int | None = None  # None means all classes
    provider: str = DEFAULT_PROVIDER_SPEC
    workers: int = 1

    def __post_init__(self):
        check_threshold("th_s", self.th_s, inclusive_upper=True)
        check_threshold("th_b", self.th_b)
        if self.k is not None:
            check_positive_int("k", self.k)
        check_positive_int("workers", self.workers)


def make_provider(spec: str) -> LogitProvider:
    """Build a provider from a spec string.

    Forms: "file:<path>", "toy:<n_classes>[,<seed>]", "remote:<url>".
    A bare "remote" falls back to the DEIDEVAL_REMOTE_URL environment
    variable.
    """
    kind, _, rest = spec.partition(":")
    if kind == "file":
        if not rest:
            raise ValueError("file provider needs a path: file:<path>")
        return FileProvider(rest)
    if kind == "toy":
        n_classes, seed = 30, 0
        if rest:
            parts = rest.split(",")
            try:
                n_classes = int(parts[0])
                if len(parts) > 1:
                    seed = int(parts[1])
            except ValueError:
                raise ValueError(f"bad toy provider spec {spec!r}; use toy:<N>[,<seed>]") from None
        return ToyClassifier(n_classes=n_classes, seed=seed)
    if kind == "remote":
        url = rest or os.environ.get(REMOTE_URL_ENV, "")
        if not url:
            raise ValueError(
                f"remote provider needs a url (remote:<url> or {REMOTE_URL_ENV})"
            )
        return RemoteClassifier(url)
    raise ValueError(f"unknown provider spec {spec!r}")


_CONFIG_KEYS = {"th_s", "th_b", "k", "provider", "workers"}


def load_config_file(path: str | os.PathLike) -> dict[str, str]:
    """Parse a key=value config file (one pair per line, '#' comments)."""
    values: dict[str, str] = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            if "=" not in stripped:
                raise ValueError(f"{path}: line {lineno}: expected key = value")
            key, _, value = stripped.partition("=")
            key = key.strip()
            value = value.strip().strip("\"'")
            if key not in _CONFIG_KEYS:
                raise ValueError(f"{path}: line {lineno}: unknown key {key!r}")
            values[key] = value
    return values


def parse_k(raw: str) -> int | None:
    if raw.lower() == "all":
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"k must be an integer or 'all', got {raw!r}") from None


def build_config(file_values: dict[str, str] | None = None, **overrides) -> EvaluationConfig:
    """Merge config-file values and explicit overrides over the defaults.

    Every keyword passed in `overrides` counts as explicitly provided,
    including k=None (meaning "all classes"), so flags always beat the
    config file.
    """
    merged: dict = {}
    if file_values:
        converters = {
            "th_s": float,
            "th_b": float,
            "k": parse_k,
            "provider": str,
            "workers": int,
        }
        for key, raw in file_values.items():
            merged[key] = converters[key](raw)
    merged.update(overrides)
    return EvaluationConfig(**merged)
