"""Sources of classifier logit vectors.

The retention metrics do not care where logits come from; a provider
yields one fixed-length vector per note. Three implementations:
precomputed vectors from a JSONL file, a deterministic hash-based toy
classifier, and a client for a remote inference service.
"""
from __future__ import annotations

import json
import math
import os
import threading
from abc import ABC, abstractmethod
from dataclasses import dataclass

import requests

from .._hashing import stable_hash64, unit_interval
from ..validation import check_finite_vector, check_positive_int


class ProviderError(RuntimeError):
    """Raised when a provider cannot produce a valid logit vector."""


@dataclass(frozen=True)
class LogitVector:
    """Fixed-length real vector of classifier outputs for one note."""

    note_id: str
    values: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", check_finite_vector("logits", self.values))

    def __len__(self) -> int:
        return len(self.values)


class LogitProvider(ABC):
    """Abstract source of logit vectors; implementations must be deterministic
    (same text, same vector) within one evaluation run."""

    @abstractmethod
    def get_logits(self, note_id: str, text: str) -> LogitVector:
        raise NotImplementedError


def get_logits(provider: LogitProvider, note_id: str, text: str) -> LogitVector:
    return provider.get_logits(note_id, text)


class FileProvider(LogitProvider):
    """Precomputed logits from JSONL: {"id": str, "logits": [float, ...]}.

    The vector length is fixed by the first record and enforced on the rest.
    """

    def __init__(self, path: str | os.PathLike):
        self.path = str(path)
        self._vectors: dict[str, LogitVector] = {}
        self.n_classes: int | None = None
        with open(path, encoding="utf-8") as handle:
            for lineno, line in enumerate(handle, start=1):
                if not line.strip():
                    continue
                try:
                    record = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise ProviderError(f"{path}: line {lineno}: malformed JSON: {exc}") from None
                if "id" not in record or "logits" not in record:
                    raise ProviderError(f"{path}: line {lineno}: need 'id' and 'logits'")
                vector = LogitVector(note_id=record["id"], values=tuple(record["logits"]))
                if self.n_classes is None:
                    self.n_classes = len(vector)
                elif len(vector) != self.n_classes:
                    raise ProviderError(
                        f"{path}: line {lineno}: logit length {len(vector)} != {self.n_classes}"
                    )
                if vector.note_id in self._vectors:
                    raise ProviderError(f"{path}: line {lineno}: duplicate id {vector.note_id!r}")
                self._vectors[vector.note_id] = vector

    def get_logits(self, note_id: str, text: str) -> LogitVector:
        try:
            return self._vectors[note_id]
        except KeyError:
            raise ProviderError(f"no logits for note id {note_id!r} in {self.path}") from None


def toy_classifier_logits(text: str, n_classes: int = 30, seed: int = 0) -> list[float]:
    """Deterministic bag-of-words logits from seeded token hashes.

    Tokens are whitespace-split, case-folded and stripped of surrounding
    punctuation; each token contributes a weight in [-1, 1] per class that
    depends only on (token, class, seed), so the output is independent of
    token order.
    """
    if n_classes < 2:
        raise ValueError("n_classes must be at least 2")
    logits = [0.0] * n_classes
    tokens = [_strip_punctuation(raw.casefold()) for raw in text.split()]
    # canonical accumulation order, so the sum is bit-identical for any
    # permutation of the tokens (float addition is not associative)
    for token in sorted(t for t in tokens if t):
        for c in range(n_classes):
            logits[c] += 2.0 * unit_interval(stable_hash64("toy", token, str(c), seed=seed)) - 1.0
    return logits


def _strip_punctuation(token: str) -> str:
    start, end = 0, len(token)
    while start < end and not token[start].isalnum():
        start += 1
    while end > start and not token[end - 1].isalnum():
        end -= 1
    return token[start:end]


class ToyClassifier(LogitProvider):
    """Built-in deterministic classifier stand-in (hash-based bag of words)."""

    def __init__(self, n_classes: int = 30, seed: int = 0):
        if n_classes < 2:
            raise ValueError("n_classes must be at least 2")
        self.n_classes = n_classes
        self.seed = seed

    def get_logits(self, note_id: str, text: str) -> LogitVector:
        return LogitVector(
            note_id=note_id,
            values=tuple(toy_classifier_logits(text, self.n_classes, self.seed)),
        )


class RemoteClassifier(LogitProvider):
    """Client for a logit-serving HTTP sidecar.

    POSTs {"texts": [text]} to <base_url>/v1/logits and validates the
    response shape. In-flight requests are capped by a semaphore so that
    concurrent evaluation cannot overload the service.
    """

    def __init__(self, base_url: str, max_in_flight: int = 4, timeout: float = 60.0):
        if not base_url:
            raise ValueError("base_url must be non-empty")
        check_positive_int("max_in_flight", max_in_flight)
        self.base_url = base_url.rstrip("/")
        self.timeout = timeout
        self.n_classes: int | None = None
        self._semaphore = threading.Semaphore(max_in_flight)
        self._lock = threading.Lock()
        self._session = requests.Session()

    def get_logits(self, note_id: str, text: str) -> LogitVector:
        with self._semaphore:
            try:
                response = self._session.post(
                    f"{self.base_url}/v1/logits",
                    json={"texts": [text]},
                    timeout=self.timeout,
                )
            except requests.RequestException as exc:
                raise ProviderError(f"logit service request failed: {exc}") from exc
        if response.status_code != 200:
            raise ProviderError(
                f"logit service returned HTTP {response.status_code}: {response.text[:200]}"
            )
        try:
            payload = response.json()
            vectors = payload["logits"]
            n_classes = int(payload["n_classes"])
        except (ValueError, KeyError, TypeError) as exc:
            raise ProviderError(f"malformed logit service response: {exc}") from exc
        if len(vectors) != 1:
            raise ProviderError(f"expected 1 logit vector, got {len(vectors)}")
        values = vectors[0]
        if len(values) != n_classes or not all(math.isfinite(v) for v in values):
            raise ProviderError("logit length mismatch or non-finite values in response")
        with self._lock:
            if self.n_classes is None:
                self.n_classes = n_classes
            elif self.n_classes != n_classes:
                raise ProviderError(
                    f"logit length mismatch: service reported {n_classes}, expected {self.n_classes}"
                )
        return LogitVector(note_id=note_id, values=tuple(values))
