"""Vertex sets of induced subgraphs of Q_n and daisy cubes.

A daisy cube ``Q_n(X)`` is the subgraph of ``Q_n`` induced by every word that
lies below some generator ``x in X`` in the coordinatewise order. Vertex sets
are kept as sorted tuples of integer encodings (see :mod:`daisycube.bitword`).
"""

from __future__ import annotations

import io
import os
from typing import Iterable, Iterator

from .bitword import MAX_LENGTH, Word, WordLengthError, parse, submasks


class VertexSet:
    """Deduplicated set of equal-length words in ascending numeric order.

    Immutable and hashable. Membership accepts either a :class:`Word` or its
    integer encoding.
    """

    __slots__ = ("n", "values", "_members", "_hash")

    def __init__(self, n: int, values: Iterable[int] = ()):
        if not 0 <= n <= MAX_LENGTH:
            raise ValueError(f"word length must be in [0, {MAX_LENGTH}], got {n}")
        members = frozenset(values)
        limit = 1 << n
        for v in members:
            if not 0 <= v < limit:
                raise ValueError(f"value {v} is not a word of length {n}")
        self.n = n
        self.values = tuple(sorted(members))
        self._members = members
        self._hash = None

    @classmethod
    def from_words(cls, words: Iterable[Word | str], n: int | None = None) -> VertexSet:
        ws = [parse(w) if isinstance(w, str) else w for w in words]
        if n is None:
            if not ws:
                raise ValueError("cannot infer word length of an empty collection")
            n = ws[0].n
        for w in ws:
            if w.n != n:
                raise WordLengthError(f"word {w} has length {w.n}, expected {n}")
        return cls(n, (w.bits for w in ws))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[Word]:
        n = self.n
        return (Word(n, v) for v in self.values)

    def __contains__(self, item) -> bool:
        if isinstance(item, Word):
            return item.n == self.n and item.bits in self._members
        return item in self._members

    def __eq__(self, other) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.n == other.n and self.values == other.values

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.values))
        return self._hash

    def __repr__(self) -> str:
        shown = ", ".join(str(w) for w in list(self)[:6])
        more = ", ..." if len(self) > 6 else ""
        return f"VertexSet(n={self.n}, [{shown}{more}], size={len(self)})"

    @property
    def members(self) -> frozenset[int]:
        return self._members

    def words(self) -> list[Word]:
        return list(self)

    def strings(self) -> list[str]:
        return [str(w) for w in self]

    def edge_count(self) -> int:
        """Number of edges of the induced subgraph of Q_n."""
        members = self._members
        n = self.n
        count = 0
        for v in self.values:
            for i in range(n):
                bit = 1 << i
                if not v & bit and v | bit in members:
                    count += 1
        return count

    def is_downward_closed(self) -> bool:
        members = self._members
        for v in self.values:
            rest = v
            while rest:
                low = rest & -rest
                if v ^ low not in members:
                    return False
                rest ^= low
        return True


class DaisyCube:
    """Downward-closed vertex set together with its maximal vertices.

    Use :func:`downward_closure` or one of the named constructors rather
    than instantiating directly.
    """

    __slots__ = ("vertices", "maximal", "name")

    def __init__(self, vertices: VertexSet, maximal: VertexSet, name: str | None = None):
        if vertices.n != maximal.n:
            raise WordLengthError("vertex set and antichain lengths differ")
        self.vertices = vertices
        self.maximal = maximal
        self.name = name

    @classmethod
    def from_vertex_set(cls, vertices: VertexSet, name: str | None = None) -> DaisyCube:
        """Wrap a vertex set that is already downward closed."""
        if not vertices.is_downward_closed():
            raise ValueError("vertex set is not downward closed")
        return cls(vertices, _maximal_of_closed(vertices), name)

    @property
    def n(self) -> int:
        return self.vertices.n

    @property
    def is_empty(self) -> bool:
        return len(self.vertices) == 0

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, item) -> bool:
        return item in self.vertices

    def __iter__(self) -> Iterator[Word]:
        return iter(self.vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DaisyCube):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        label = self.name or "DaisyCube"
        return f"<{label}: n={self.n}, |V|={len(self.vertices)}, |X^|={len(self.maximal)}>"


def _as_values(X, n: int | None) -> tuple[int, list[int]]:
    if isinstance(X, VertexSet):
        return X.n, list(X.values)
    words = [parse(x) if isinstance(x, str) else x for x in X]
    if n is None:
        if not words:
            raise ValueError("word length is required for an empty generator set")
        n = words[0].n
    for w in words:
        if w.n != n:
            raise WordLengthError(f"generator {w} has length {w.n}, expected {n}")
    return n, [w.bits for w in words]


def maximal_antichain(X, n: int | None = None) -> VertexSet:
    """Elements of ``X`` not strictly below another element of ``X``."""
    n, values = _as_values(X, n)
    kept: list[int] = []
    # Heavier words first: a word can only lie below words of larger weight.
    for v in sorted(set(values), key=lambda b: (-b.bit_count(), b)):
        if not any(v & ~m == 0 for m in kept):
            kept.append(v)
    return VertexSet(n, kept)


def _closure_values(generators: Iterable[int]) -> set[int]:
    seen = set(generators)
    frontier = list(seen)
    while frontier:
        v = frontier.pop()
        rest = v
        while rest:
            low = rest & -rest
            w = v ^ low
            if w not in seen:
                seen.add(w)
                frontier.append(w)
            rest ^= low
    return seen


def _maximal_of_closed(vertices: VertexSet) -> VertexSet:
    members = vertices.members
    full = (1 << vertices.n) - 1
    out = []
    for v in vertices.values:
        free = full & ~v
        up = False
        while free:
            low = free & -free
            if v | low in members:
                up = True
                break
            free ^= low
        if not up:
            out.append(v)
    return VertexSet(vertices.n, out)


def downward_closure(X, n: int | None = None, name: str | None = None) -> DaisyCube:
    """Daisy cube ``Q_n(X)`` generated by ``X``.

    ``X`` may be a :class:`VertexSet` or an iterable of words / 0-1 strings.
    An empty ``X`` yields an empty daisy cube (``is_empty`` is true); ``n``
    must then be given.
    """
    n, values = _as_values(X, n)
    hat = maximal_antichain(VertexSet(n, values))
    return DaisyCube(VertexSet(n, _closure_values(hat.values)), hat, name)


def _check_n(n: int, minimum: int = 1) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"n must be an int, got {type(n).__name__}")
    if not minimum <= n <= MAX_LENGTH:
        raise ValueError(f"n must be in [{minimum}, {MAX_LENGTH}], got {n}")


def _run_free_values(n: int, k: int) -> list[int]:
    # words with no run of k consecutive 1s, built left to right
    out = []
    stack = [(0, 0, 0)]  # (prefix value, prefix length, trailing run of 1s)
    while stack:
        v, length, run = stack.pop()
        if length == n:
            out.append(v)
            continue
        stack.append((v << 1, length + 1, 0))
        if run + 1 < k:
            stack.append(((v << 1) | 1, length + 1, run + 1))
    return out


def hypercube(n: int) -> DaisyCube:
    """``Q_n``: all ``2^n`` words."""
    _check_n(n)
    if n > 26:
        raise ValueError(f"Q_{n} has 2^{n} vertices; refusing to materialize")
    return DaisyCube(VertexSet(n, range(1 << n)), VertexSet(n, [(1 << n) - 1]), f"Q_{n}")


def fibonacci(n: int) -> DaisyCube:
    """Fibonacci cube: words without two consecutive 1s. ``n = 0`` gives ``K_1``."""
    _check_n(n, minimum=0)
    return DaisyCube.from_vertex_set(VertexSet(n, _run_free_values(n, 2)), f"Gamma_{n}")


def lucas(n: int) -> DaisyCube:
    """Lucas cube: Fibonacci words with ``u_1 * u_n = 0``. ``n = 0`` gives ``K_1``."""
    _check_n(n, minimum=0)
    if n == 0:
        values = [0]
    else:
        first = 1 << (n - 1)
        values = [v for v in _run_free_values(n, 2) if not (v & first and v & 1)]
    return DaisyCube.from_vertex_set(VertexSet(n, values), f"Lambda_{n}")


def vertex_deleted(n: int) -> DaisyCube:
    """``Q_n^-``: every word except ``1^n``."""
    _check_n(n)
    if n > 26:
        raise ValueError(f"Q_{n}^- has 2^{n}-1 vertices; refusing to materialize")
    full = (1 << n) - 1
    return DaisyCube.from_vertex_set(VertexSet(n, range(full)), f"Q_{n}^-")


def bipartite_wheel_generators(n: int) -> VertexSet:
    """``110^{n-2}, 0110^{n-3}, ..., 0^{n-2}11, 10^{n-1}1``."""
    _check_n(n, minimum=3)
    gens = [Word.from_coordinates(n, (i, i + 1)).bits for i in range(1, n)]
    gens.append(Word.from_coordinates(n, (1, n)).bits)
    return VertexSet(n, gens)


def bipartite_wheel(n: int) -> DaisyCube:
    """Bipartite wheel (gear graph) ``BW_n``, ``n >= 3``."""
    return downward_closure(bipartite_wheel_generators(n), name=f"BW_{n}")


def run_free(n: int, k: int) -> DaisyCube:
    """Words of length ``n`` containing no ``1^k``; ``k = 2`` is the Fibonacci cube."""
    _check_n(n)
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"k must be an integer >= 2, got {k!r}")
    return DaisyCube.from_vertex_set(VertexSet(n, _run_free_values(n, k)), f"Gamma_{n}^({k})")


FAMILIES = {
    "hypercube": hypercube,
    "fibonacci": fibonacci,
    "lucas": lucas,
    "vertex-deleted": vertex_deleted,
    "bipartite-wheel": bipartite_wheel,
    "run-free": run_free,
}


def named_family(name: str, n: int, k: int | None = None) -> DaisyCube:
    """Look up a family by its CLI name (underscores are accepted too)."""
    key = name.replace("_", "-").lower()
    if key not in FAMILIES:
        raise ValueError(f"unknown family {name!r}; expected one of {sorted(FAMILIES)}")
    if key == "run-free":
        if k is None:
            raise ValueError("run-free family needs k")
        return run_free(n, k)
    return FAMILIES[key](n)


def cartesian_product(G: DaisyCube, H: DaisyCube) -> DaisyCube:
    """``G □ H`` realised by concatenation, ``G``'s coordinates first."""
    n = G.n + H.n
    if n > MAX_LENGTH:
        raise ValueError(f"product word length {n} exceeds {MAX_LENGTH}")
    shift = H.n
    verts = VertexSet(n, (g << shift | h for g in G.vertices.values for h in H.vertices.values))
    maximal = VertexSet(n, (g << shift | h for g in G.maximal.values for h in H.maximal.values))
    name = f"{G.name} x {H.name}" if G.name and H.name else None
    return DaisyCube(verts, maximal, name)


def recenter(V: VertexSet, u: Word) -> VertexSet:
    """Translate ``V`` by XOR with ``u``, an automorphism of ``Q_n`` sending 0^n to u."""
    if u.n != V.n:
        raise WordLengthError(f"length mismatch: {u.n} != {V.n}")
    b = u.bits
    return VertexSet(V.n, (v ^ b for v in V.values))


def interval(u: Word, v: Word) -> VertexSet:
    """Interval ``I(u, v)`` of ``Q_n``: words on some shortest ``u, v``-path."""
    if u.n != v.n:
        raise WordLengthError(f"length mismatch: {u.n} != {v.n}")
    diff = u.bits ^ v.bits
    base = u.bits & ~diff
    return VertexSet(u.n, (base | s for s in submasks(diff)))


# -- vertex-set files -------------------------------------------------------

def read_vertex_file(source) -> VertexSet:
    """Read one 0/1 word per line; blank lines and ``#`` comments are skipped.

    ``source`` is a path or an open text stream.
    """
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8") as fh:
            return _read_vertex_stream(fh, str(source))
    return _read_vertex_stream(source, getattr(source, "name", "<stream>"))


def _read_vertex_stream(fh, label: str) -> VertexSet:
    words = []
    for lineno, line in enumerate(fh, 1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        try:
            words.append(parse(text))
        except ValueError as exc:
            raise ValueError(f"{label}:{lineno}: {exc}") from None
    if not words:
        raise ValueError(f"{label}: no words found")
    n = words[0].n
    for w in words:
        if w.n != n:
            raise WordLengthError(f"{label}: mixed word lengths {n} and {w.n}")
    return VertexSet(n, (w.bits for w in words))


def format_vertex_file(V: VertexSet, header: Iterable[str] = ()) -> str:
    buf = io.StringIO()
    for line in header:
        buf.write(f"# {line}\n" if line else "#\n")
    for w in V:
        buf.write(f"{w}\n")
    return buf.getvalue()


def write_vertex_file(path, V: VertexSet, header: Iterable[str] = ()) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_vertex_file(V, header))
