from __future__ import annotations

import pytest

from logit_sidecar.model import write_linear_checkpoint


def demo_vocab(n_classes: int = 6) -> dict[str, list[float]]:
    words = [
        "patient", "admitted", "discharge", "fever", "cough", "fracture",
        "cardiac", "renal", "therapy", "chronic", "acute", "stable",
    ]
    vocab = {}
    for i, word in enumerate(words):
        vocab[word] = [((i * 7 + c * 13) % 11 - 5) / 3.0 for c in range(n_classes)]
    return vocab


@pytest.fixture
def checkpoint_path(tmp_path):
    path = tmp_path / "model.json"
    write_linear_checkpoint(
        path,
        bias=[0.1, -0.2, 0.0, 0.3, -0.1, 0.05],
        vocab=demo_vocab(6),
        model_id="linear-bow-demo",
    )
    return path
