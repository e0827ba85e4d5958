"""Run the sidecar: python -m logit_sidecar [checkpoint-path]."""
from __future__ import annotations

import sys

import uvicorn

from .app import create_app
from .config import port


def main() -> None:
    checkpoint = sys.argv[1] if len(sys.argv) > 1 else None
    uvicorn.run(create_app(checkpoint), host="127.0.0.1", port=port(), log_level="info")


if __name__ == "__main__":
    main()
