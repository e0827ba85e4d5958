"""Environment-based configuration."""
from __future__ import annotations

import os

MODEL_PATH_ENV = "SIDECAR_MODEL_PATH"
PORT_ENV = "SIDECAR_PORT"

DEFAULT_PORT = 8741

MAX_BATCH_SIZE = 64
MAX_TEXT_LENGTH = 32768


def model_path() -> str | None:
    return os.environ.get(MODEL_PATH_ENV) or None


def port() -> int:
    raw = os.environ.get(PORT_ENV, "")
    if not raw:
        return DEFAULT_PORT
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{PORT_ENV} must be an integer, got {raw!r}") from None
