"""Input validation: coerce user-facing word collections into encoded words."""

from __future__ import annotations

import numpy as np

from .bitword import MAX_LENGTH, Word, WordLengthError, parse
from .family import DaisyCube, VertexSet


def _row_to_bits(row) -> int:
    bits = 0
    for c in row:
        if c not in (0, 1):
            raise ValueError(f"word entries must be 0 or 1, got {c!r}")
        bits = (bits << 1) | int(c)
    return bits


def check_word(u, n: int | None = None) -> Word:
    """Coerce ``u`` (Word, 0/1 string or 0/1 sequence) to a :class:`Word`."""
    if isinstance(u, Word):
        w = u
    elif isinstance(u, str):
        w = parse(u)
    else:
        row = np.asarray(u).ravel().tolist()
        if not row or len(row) > MAX_LENGTH:
            raise ValueError(f"word length must be in [1, {MAX_LENGTH}], got {len(row)}")
        w = Word(len(row), _row_to_bits(row))
    if n is not None and w.n != n:
        raise WordLengthError(f"expected a word of length {n}, got {w.n}")
    return w


def check_words(X, n: int | None = None) -> tuple[int, list[int]]:
    """Coerce ``X`` into ``(n, encoded words)``, preserving input order.

    Accepted inputs: :class:`VertexSet`, :class:`DaisyCube`, an iterable of
    :class:`Word` or 0/1 strings, or a 2-D array-like of 0/1 entries with one
    word per row (leftmost column is coordinate 1).
    """
    if isinstance(X, DaisyCube):
        X = X.vertices
    if isinstance(X, VertexSet):
        if n is not None and X.n != n:
            raise WordLengthError(f"expected words of length {n}, got {X.n}")
        return X.n, list(X.values)
    items = list(X) if not isinstance(X, np.ndarray) else None
    if items is not None and items and all(isinstance(x, (Word, str)) for x in items):
        words = [check_word(x) for x in items]
        m = n if n is not None else words[0].n
        for w in words:
            if w.n != m:
                raise WordLengthError(f"expected words of length {m}, got {w.n}")
        return m, [w.bits for w in words]
    arr = np.asarray(X if items is None else items)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D array of 0/1 words, got shape {arr.shape}")
    if arr.shape[0] == 0:
        raise ValueError("no words given")
    if arr.shape[1] > MAX_LENGTH:
        raise ValueError(f"word length {arr.shape[1]} exceeds {MAX_LENGTH}")
    if n is not None and arr.shape[1] != n:
        raise WordLengthError(f"expected words of length {n}, got {arr.shape[1]}")
    if not np.isin(arr, (0, 1)).all():
        raise ValueError("word entries must be 0 or 1")
    return arr.shape[1], [_row_to_bits(row) for row in arr.astype(np.int64).tolist()]


def words_to_array(n: int, values) -> np.ndarray:
    """Encoded words as an ``(m, n)`` uint8 array, coordinate 1 in column 0."""
    values = list(values)
    out = np.zeros((len(values), n), dtype=np.uint8)
    for i, v in enumerate(values):
        for j in range(n):
            out[i, j] = (v >> (n - 1 - j)) & 1
    return out
