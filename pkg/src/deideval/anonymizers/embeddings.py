"""Word-embedding table and cosine nearest-neighbour lookup.

The table loads from the widespread word2vec text format: a header line
"count dim" followed by one "token v1 ... vd" line per entry. Tables are
immutable after construction and safe to share across workers.
"""
from __future__ import annotations

import os
from typing import Iterable, Mapping, Sequence

import numpy as np

UNK_TOKEN = "⟨UNK⟩"  # ⟨UNK⟩
NUM_TOKEN = "⟨NUM⟩"  # ⟨NUM⟩


class EmbeddingError(ValueError):
    """Raised for malformed embedding files or invalid tables."""


class EmbeddingTable:
    def __init__(self, vectors: Mapping[str, Sequence[float]]):
        if len(vectors) < 2:
            raise EmbeddingError("embedding table needs at least 2 entries")
        self.tokens: tuple[str, ...] = tuple(vectors.keys())
        dims = {len(v) for v in vectors.values()}
        if len(dims) != 1:
            raise EmbeddingError(f"inconsistent vector dimensions: {sorted(dims)}")
        self.dimension = dims.pop()
        if self.dimension < 1:
            raise EmbeddingError("vector dimension must be positive")
        self._matrix = np.asarray([vectors[t] for t in self.tokens], dtype=np.float64)
        if not np.all(np.isfinite(self._matrix)):
            raise EmbeddingError("embedding vectors must be finite")
        self._norms = np.linalg.norm(self._matrix, axis=1)
        if np.any(self._norms == 0.0):
            zero = self.tokens[int(np.argmin(self._norms))]
            raise EmbeddingError(f"zero vector for token {zero!r} (cosine undefined)")
        self._index = {token: i for i, token in enumerate(self.tokens)}

    def __len__(self) -> int:
        return len(self.tokens)

    def __contains__(self, token: str) -> bool:
        return token in self._index

    def vector(self, token: str) -> np.ndarray:
        return self._matrix[self._index[token]]

    @classmethod
    def from_word2vec_text(cls, path: str | os.PathLike) -> "EmbeddingTable":
        vectors: dict[str, list[float]] = {}
        with open(path, encoding="utf-8") as handle:
            header = handle.readline().split()
            if len(header) != 2:
                raise EmbeddingError(f"{path}: expected header 'count dim'")
            try:
                count, dim = int(header[0]), int(header[1])
            except ValueError:
                raise EmbeddingError(f"{path}: non-numeric header {header!r}") from None
            for lineno, line in enumerate(handle, start=2):
                parts = line.rstrip("\n").split(" ")
                if len(parts) < 2:
                    continue
                token, values = parts[0], parts[1:]
                if len(values) != dim:
                    raise EmbeddingError(
                        f"{path}: line {lineno}: expected {dim} values, got {len(values)}"
                    )
                if token in vectors:
                    raise EmbeddingError(f"{path}: line {lineno}: duplicate token {token!r}")
                vectors[token] = [float(v) for v in values]
        if len(vectors) != count:
            raise EmbeddingError(f"{path}: header says {count} entries, found {len(vectors)}")
        return cls(vectors)


def save_word2vec_text(
    vectors: Mapping[str, Sequence[float]] | EmbeddingTable, path: str | os.PathLike
) -> None:
    if isinstance(vectors, EmbeddingTable):
        items: Iterable[tuple[str, Sequence[float]]] = (
            (t, vectors.vector(t).tolist()) for t in vectors.tokens
        )
        count, dim = len(vectors), vectors.dimension
    else:
        items = vectors.items()
        count = len(vectors)
        dim = len(next(iter(vectors.values())))
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(f"{count} {dim}\n")
        for token, values in items:
            handle.write(token + " " + " ".join(repr(float(v)) for v in values) + "\n")


def cosine_similarity(u: Sequence[float], v: Sequence[float]) -> float:
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    nu, nv = np.linalg.norm(u), np.linalg.norm(v)
    if nu == 0.0 or nv == 0.0:
        raise EmbeddingError("cosine similarity undefined for zero vectors")
    return float(np.dot(u, v) / (nu * nv))


def nearest_neighbor(token: str, table: EmbeddingTable) -> str:
    """Most cosine-similar table token, excluding the token itself.

    Out-of-vocabulary tokens map to the UNK marker; exact similarity ties
    resolve to the lexicographically smallest token.
    """
    if token not in table:
        return UNK_TOKEN
    query = table.vector(token)
    sims = table._matrix @ query / (table._norms * np.linalg.norm(query))
    self_index = table._index[token]
    sims[self_index] = -np.inf
    best = sims.max()
    candidates = np.flatnonzero(sims == best)
    return min(table.tokens[i] for i in candidates)
