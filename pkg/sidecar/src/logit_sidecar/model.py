"""Classifier checkpoint loading and inference.

Two checkpoint kinds are supported, decided by the path:

- a JSON file holding a linear bag-of-words classifier (token weight
  vectors plus a bias vector): tiny, dependency-free, and bit-exactly
  deterministic, which makes it the natural backend for tests and demos;
- a directory holding a Hugging Face sequence-classification checkpoint
  (a BioBERT-class model), used when `transformers` and `torch` are
  installed.

Both run in deterministic inference mode and return raw, pre-softmax
logits.
"""
from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Protocol, Sequence


class ModelError(RuntimeError):
    """Raised when a checkpoint cannot be loaded or inference fails."""


class LogitModel(Protocol):
    model_id: str
    n_classes: int

    def logits(self, texts: Sequence[str]) -> list[list[float]]: ...


def _tokenize(text: str) -> list[str]:
    tokens = []
    for raw in text.split():
        start, end = 0, len(raw)
        while start < end and not raw[start].isalnum():
            start += 1
        while end > start and not raw[end - 1].isalnum():
            end -= 1
        if end > start:
            tokens.append(raw[start:end].casefold())
    return tokens


class LinearBagOfWords:
    """Linear text classifier: logits = bias + sum of per-token weights."""

    def __init__(self, model_id: str, bias: Sequence[float], vocab: dict[str, Sequence[float]]):
        self.model_id = model_id
        self.n_classes = len(bias)
        if self.n_classes < 2:
            raise ModelError("checkpoint needs at least 2 classes")
        self._bias = [float(v) for v in bias]
        self._vocab: dict[str, list[float]] = {}
        for token, weights in vocab.items():
            if len(weights) != self.n_classes:
                raise ModelError(
                    f"weight vector for token {token!r} has length {len(weights)}, "
                    f"expected {self.n_classes}"
                )
            self._vocab[token] = [float(w) for w in weights]
        if not all(math.isfinite(v) for row in self._vocab.values() for v in row):
            raise ModelError("checkpoint weights must be finite")

    def logits(self, texts: Sequence[str]) -> list[list[float]]:
        out = []
        for text in texts:
            row = list(self._bias)
            # sorted token order keeps float accumulation canonical
            for token in sorted(_tokenize(text)):
                weights = self._vocab.get(token)
                if weights is None:
                    continue
                for i, w in enumerate(weights):
                    row[i] += w
            out.append(row)
        return out


def write_linear_checkpoint(
    path: str | Path,
    bias: Sequence[float],
    vocab: dict[str, Sequence[float]],
    model_id: str = "linear-bow",
) -> None:
    """Write a linear bag-of-words checkpoint JSON (the test/demo format)."""
    payload = {
        "kind": "linear_bag_of_words",
        "model_id": model_id,
        "bias": list(bias),
        "vocab": {token: list(weights) for token, weights in vocab.items()},
    }
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(payload, handle, ensure_ascii=False)


def _load_linear(path: Path) -> LinearBagOfWords:
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ModelError(f"cannot read checkpoint {path}: {exc}") from exc
    if payload.get("kind") != "linear_bag_of_words":
        raise ModelError(f"{path}: unknown checkpoint kind {payload.get('kind')!r}")
    try:
        return LinearBagOfWords(
            model_id=payload.get("model_id", "linear-bow"),
            bias=payload["bias"],
            vocab=payload["vocab"],
        )
    except KeyError as exc:
        raise ModelError(f"{path}: missing checkpoint field {exc}") from None


class _TransformersModel:
    """Hugging Face sequence-classification checkpoint in eval mode."""

    def __init__(self, path: Path):
        try:
            import torch
            from transformers import AutoModelForSequenceClassification, AutoTokenizer
        except ImportError as exc:
            raise ModelError(
                "loading a transformers checkpoint requires the optional "
                "'transformers' extra (pip install logit-sidecar[transformers])"
            ) from exc
        self._torch = torch
        try:
            self._tokenizer = AutoTokenizer.from_pretrained(str(path))
            self._model = AutoModelForSequenceClassification.from_pretrained(str(path))
        except Exception as exc:  # transformers raises a zoo of types here
            raise ModelError(f"cannot load checkpoint from {path}: {exc}") from exc
        self._model.eval()
        self.model_id = path.name or str(path)
        self.n_classes = int(self._model.config.num_labels)
        if self.n_classes < 2:
            raise ModelError("checkpoint needs at least 2 classes")

    def logits(self, texts: Sequence[str]) -> list[list[float]]:
        encoded = self._tokenizer(
            list(texts), padding=True, truncation=True, return_tensors="pt"
        )
        with self._torch.no_grad():
            output = self._model(**encoded)
        return [[float(v) for v in row] for row in output.logits]


def load_model(path: str | Path) -> LogitModel:
    """Load a checkpoint: JSON file -> linear model, directory -> transformers."""
    path = Path(path)
    if not path.exists():
        raise ModelError(f"checkpoint path {path} does not exist")
    if path.is_dir():
        return _TransformersModel(path)
    return _load_linear(path)
