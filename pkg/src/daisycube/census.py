"""Induced-hypercube censuses and the cube, distance cube and distance-weight polynomials.

Two independent engines produce a :class:`CubeCensus`:

* :func:`census_oracle` works for any induced subgraph of ``Q_n``. It takes
  geodesic distances from a breadth-first search inside the subgraph and
  checks every vertex of every candidate cube.
* :func:`census_daisy_fast` is valid only for downward-closed vertex sets.
  A cube belongs to the graph iff its top vertex does, and its distance from
  the anchor is a single popcount because daisy cubes are isometric in ``Q_n``.
"""

from __future__ import annotations

import os
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

import numpy as np

from .bitword import Word, WordLengthError, submasks
from .family import DaisyCube, VertexSet
from .poly import (
    BiPoly,
    RationalSeries,
    UniPoly,
    binomial,
    series_coefficients,
    substitute_sum,
    substitute_univariate_shift,
)

# Largest n for which the oracle materializes the 3^n table of subcubes.
DENSE_MAX_N = 14


class AnchorError(ValueError):
    """The anchor vertex is not a vertex of the graph."""


class CensusMismatch(AssertionError):
    """The oracle and the fast path disagree."""


@dataclass(frozen=True, slots=True)
class CubeHandle:
    """Induced subcube of ``Q_n`` given by its base vertex and free coordinates."""

    base: Word
    mask: Word

    def __post_init__(self):
        if self.base.n != self.mask.n:
            raise WordLengthError("base and mask lengths differ")
        if self.base.bits & self.mask.bits:
            raise ValueError("base must be 0 on the free coordinates")

    @property
    def dimension(self) -> int:
        return self.mask.weight

    @property
    def top(self) -> Word:
        return self.base | self.mask

    def vertices(self) -> list[Word]:
        n, b = self.base.n, self.base.bits
        return [Word(n, b | s) for s in submasks(self.mask.bits)]


@dataclass
class CubeCensus:
    """Counts ``c[k, d]`` of induced ``k``-cubes at distance ``d`` from ``anchor``.

    ``unreachable`` holds, per dimension, cubes lying in a different connected
    component than the anchor; they carry no finite distance and are left out
    of ``counts``.
    """

    anchor: Word
    counts: dict[tuple[int, int], int] = field(default_factory=dict)
    unreachable: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        self.counts = {kd: c for kd, c in self.counts.items() if c}
        self.unreachable = {k: c for k, c in self.unreachable.items() if c}

    def __getitem__(self, kd: tuple[int, int]) -> int:
        return self.counts.get(kd, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CubeCensus):
            return NotImplemented
        return (
            self.anchor == other.anchor
            and self.counts == other.counts
            and self.unreachable == other.unreachable
        )

    def rows(self) -> list[tuple[int, int, int]]:
        return [(k, d, c) for (k, d), c in sorted(self.counts.items())]

    def to_csv(self) -> str:
        lines = ["k,d,count"]
        lines.extend(f"{k},{d},{c}" for k, d, c in self.rows())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_csv(cls, text: str, anchor: Word) -> CubeCensus:
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        if not lines or lines[0].replace(" ", "") != "k,d,count":
            raise ValueError("census CSV must start with header 'k,d,count'")
        counts = {}
        for ln in lines[1:]:
            k, d, c = (int(x) for x in ln.split(","))
            counts[(k, d)] = c
        return cls(anchor, counts)

    def diff(self, other: CubeCensus) -> dict[tuple[int, int], tuple[int, int]]:
        """Cells where the two censuses differ, as ``(self, other)`` pairs."""
        keys = set(self.counts) | set(other.counts)
        return {kd: (self[kd], other[kd]) for kd in sorted(keys) if self[kd] != other[kd]}


# -- graph primitives ----------------------------------------------------------

def _check_anchor(V: VertexSet, u: Word) -> None:
    if u.n != V.n:
        raise WordLengthError(f"anchor length {u.n} != word length {V.n}")
    if u.bits not in V.members:
        raise AnchorError(f"anchor {u} is not a vertex of the graph")


def bfs_distances(V: VertexSet, u: Word) -> dict[Word, int]:
    """Geodesic distances from ``u`` inside the subgraph of ``Q_n`` induced by ``V``.

    Vertices in other connected components are absent from the result.
    """
    _check_anchor(V, u)
    n = V.n
    return {Word(n, v): d for v, d in _bfs(V.members, n, u.bits).items()}


def _bfs(members, n: int, start: int) -> dict[int, int]:
    dist = {start: 0}
    queue = deque([start])
    bits = [1 << i for i in range(n)]
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        for b in bits:
            w = v ^ b
            if w in members and w not in dist:
                dist[w] = dv
                queue.append(w)
    return dist


def _bfs_dense(member: np.ndarray, n: int, start: int) -> np.ndarray:
    """BFS over a boolean membership table of length ``2^n``; -1 marks unreachable."""
    dist = np.full(member.shape[0], -1, dtype=np.int32)
    dist[start] = 0
    flips = (np.int64(1) << np.arange(n, dtype=np.int64))
    frontier = np.array([start], dtype=np.int64)
    level = 0
    while frontier.size:
        level += 1
        nb = np.unique((frontier[:, None] ^ flips[None, :]).ravel())
        nb = nb[member[nb] & (dist[nb] < 0)]
        dist[nb] = level
        frontier = nb
    return dist


# -- cube enumeration ----------------------------------------------------------

def _cube_pairs(V: VertexSet) -> Iterator[tuple[int, int]]:
    """``(base, mask)`` of every induced subcube of ``<V>``, once each.

    Candidate tops are the members; masks run over subsets of the top's
    support, and every vertex of the candidate is checked.
    """
    members = V.members
    for t in V.values:
        for s in submasks(t):
            base = t ^ s
            ok = True
            for r in submasks(s):
                if base | r not in members:
                    ok = False
                    break
            if ok:
                yield base, s


def enumerate_cubes(V: VertexSet) -> Iterator[CubeHandle]:
    """Every induced hypercube of ``<V>`` (vertices included), each exactly once."""
    n = V.n
    for base, mask in _cube_pairs(V):
        yield CubeHandle(Word(n, base), Word(n, mask))


def _ternary(arr: np.ndarray, n: int, combine) -> np.ndarray:
    """Extend a table on ``{0,1}^n`` to ``{0,1,*}^n``.

    Along each coordinate the third slot holds ``combine`` of the 0 and 1
    slots, so a cell with free coordinates aggregates over its whole subcube.
    """
    t = arr.reshape((2,) * n) if n else arr.reshape(())
    for axis in range(n):
        lo = np.take(t, 0, axis=axis)
        hi = np.take(t, 1, axis=axis)
        t = np.stack([lo, hi, combine(lo, hi)], axis=axis)
    return t.ravel()


@lru_cache(maxsize=16)
def _dense_cubes(V: VertexSet) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Anchor-independent part of the dense oracle.

    Returns the membership table on ``{0,1}^n``, and for every cell of
    ``{0,1,*}^n`` whether it is a subcube of ``<V>`` and its dimension.
    """
    n = V.n
    member = np.zeros(1 << n, dtype=bool)
    member[list(V.values)] = True
    exists = _ternary(member, n, np.logical_and)
    dims = _ternary(np.zeros(1 << n, dtype=np.int8), n, lambda a, b: a + 1)
    return member, exists, dims.astype(np.int64)


def _census_dense(V: VertexSet, u: Word) -> CubeCensus:
    n = V.n
    member, exists, dims = _dense_cubes(V)
    dist = _bfs_dense(member, n, u.bits)
    far = np.int32(1 << 20)
    dist = np.where(dist < 0, far, dist)
    dmin = _ternary(dist, n, np.minimum)[exists]
    k = dims[exists]
    reach = dmin < far
    # geodesics in a non-isometric subgraph can exceed n
    stride = int(dmin[reach].max(initial=0)) + 1
    cells = np.bincount(k[reach] * stride + dmin[reach], minlength=(n + 1) * stride)
    counts = {(int(i) // stride, int(i) % stride): int(cells[i]) for i in np.flatnonzero(cells)}
    lost = np.bincount(k[~reach], minlength=n + 1)
    return CubeCensus(u, counts, {int(i): int(lost[i]) for i in np.flatnonzero(lost)})


def _census_sparse(V: VertexSet, u: Word) -> CubeCensus:
    dist = _bfs(V.members, V.n, u.bits)
    counts: dict[tuple[int, int], int] = {}
    lost: dict[int, int] = {}
    for base, mask in _cube_pairs(V):
        k = mask.bit_count()
        ds = [dist.get(base | r) for r in submasks(mask)]
        ds = [d for d in ds if d is not None]
        if not ds:
            lost[k] = lost.get(k, 0) + 1
            continue
        key = (k, min(ds))
        counts[key] = counts.get(key, 0) + 1
    return CubeCensus(u, counts, lost)


def census_oracle(V: VertexSet | DaisyCube, u: Word, method: str = "auto") -> CubeCensus:
    """Census of any induced subgraph of ``Q_n`` from BFS geodesics.

    ``method`` is ``"dense"`` (3^n table, ``n <= DENSE_MAX_N``), ``"sparse"``
    (explicit cube enumeration) or ``"auto"``.
    """
    if isinstance(V, DaisyCube):
        V = V.vertices
    _check_anchor(V, u)
    if method == "auto":
        method = "dense" if V.n <= DENSE_MAX_N else "sparse"
    if method == "dense":
        if V.n > DENSE_MAX_N:
            raise ValueError(f"dense oracle supports n <= {DENSE_MAX_N}, got {V.n}")
        return _census_dense(V, u)
    if method == "sparse":
        return _census_sparse(V, u)
    raise ValueError(f"unknown oracle method {method!r}")


# -- daisy-cube fast path --------------------------------------------------------

@lru_cache(maxsize=16)
def _daisy_cubes(V: VertexSet) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    # every (top, subset of its support) is a subcube of a downward-closed set
    bases, masks = [], []
    for t in V.values:
        for s in submasks(t):
            bases.append(t ^ s)
            masks.append(s)
    base = np.array(bases, dtype=np.uint64)
    mask = np.array(masks, dtype=np.uint64)
    return base, mask, np.bitwise_count(mask).astype(np.int64)


def census_daisy_fast(G: DaisyCube, u: Word) -> CubeCensus:
    """Census of a daisy cube using the top-vertex criterion and Hamming distances."""
    V = G.vertices
    _check_anchor(V, u)
    n = V.n
    base, mask, k = _daisy_cubes(V)
    d = np.bitwise_count((np.uint64(u.bits) ^ base) & ~mask).astype(np.int64)
    cells = np.bincount(k * (n + 1) + d, minlength=(n + 1) ** 2)
    counts = {(int(i) // (n + 1), int(i) % (n + 1)): int(cells[i]) for i in np.flatnonzero(cells)}
    return CubeCensus(u, counts)


def census_subcube(top: Word, u: Word) -> CubeCensus:
    """Census of the subcube ``<I(0^n, top)>`` seen from an arbitrary word ``u``.

    ``u`` need not lie in the subcube; distances are measured in ``Q_n``.
    This is the only place where external anchors are supported.
    """
    if top.n != u.n:
        raise WordLengthError(f"length mismatch: {top.n} != {u.n}")
    counts: dict[tuple[int, int], int] = {}
    for t in submasks(top.bits):
        for s in submasks(t):
            key = (s.bit_count(), ((u.bits ^ (t ^ s)) & ~s).bit_count())
            counts[key] = counts.get(key, 0) + 1
    return CubeCensus(u, counts)


def projection(u: Word, top: Word) -> Word:
    """Closest vertex of ``<I(0^n, top)>`` to ``u``, namely ``u AND top``."""
    return u & top


def distance_to_subcube(u: Word, top: Word) -> int:
    """Distance in ``Q_n`` from ``u`` to ``<I(0^n, top)>``."""
    if top.n != u.n:
        raise WordLengthError(f"length mismatch: {top.n} != {u.n}")
    return (u.bits & ~top.bits).bit_count()


# -- engine selection ------------------------------------------------------------

ENGINES = ("oracle", "fast", "both", "auto")


def compute_census(graph: VertexSet | DaisyCube, u: Word, engine: str = "auto") -> tuple[CubeCensus, str]:
    """Run the requested engine and return ``(census, engine_used)``.

    ``auto`` means ``both`` for daisy cubes with ``n <= 8``, ``fast`` for
    larger daisy cubes and ``oracle`` for arbitrary vertex sets. ``both``
    raises :class:`CensusMismatch` if the two engines disagree.
    """
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}; expected one of {ENGINES}")
    if isinstance(graph, VertexSet):
        if engine in ("fast", "both"):
            if not graph.is_downward_closed():
                raise ValueError(f"engine {engine!r} needs a downward-closed vertex set")
            graph = DaisyCube.from_vertex_set(graph)
        elif engine == "auto" and graph.is_downward_closed():
            graph = DaisyCube.from_vertex_set(graph)
    if engine == "auto":
        if isinstance(graph, DaisyCube):
            engine = "both" if graph.n <= 8 else "fast"
        else:
            engine = "oracle"
    if engine == "oracle":
        return census_oracle(graph, u), engine
    if engine == "fast":
        return census_daisy_fast(graph, u), engine
    fast = census_daisy_fast(graph, u)
    slow = census_oracle(graph, u)
    if fast != slow:
        raise CensusMismatch(f"oracle and fast path disagree at anchor {u}: {slow.diff(fast)}")
    return fast, engine


def worker_count() -> int:
    """Worker cap from ``DAISY_THREADS`` (default 1)."""
    raw = os.environ.get("DAISY_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def census_all_anchors(graph: VertexSet | DaisyCube, engine: str = "auto",
                       workers: int | None = None) -> list[CubeCensus]:
    """Census at every vertex, in canonical vertex order."""
    V = graph.vertices if isinstance(graph, DaisyCube) else graph
    anchors = list(V)
    workers = workers or worker_count()
    if workers == 1:
        return [compute_census(graph, u, engine)[0] for u in anchors]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda u: compute_census(graph, u, engine)[0], anchors))


# -- polynomials -----------------------------------------------------------------

def cube_poly(census: CubeCensus) -> UniPoly:
    """``C(x) = sum_k c_k x^k`` with ``c_k`` summed over every distance."""
    out: dict[int, int] = {}
    for (k, _), c in census.counts.items():
        out[k] = out.get(k, 0) + c
    for k, c in census.unreachable.items():
        out[k] = out.get(k, 0) + c
    return UniPoly(out)


def distance_poly(census: CubeCensus) -> BiPoly:
    """``D(x, y) = sum c_{k,d} x^k y^d``."""
    return BiPoly(census.counts)


def weight_poly(census: CubeCensus) -> UniPoly:
    """``W(x) = sum_d (vertices at distance d) x^d``, the ``k = 0`` row."""
    return UniPoly({d: c for (k, d), c in census.counts.items() if k == 0})


def cube_polynomial(graph: VertexSet | DaisyCube) -> UniPoly:
    """Cube polynomial from a distance-blind enumeration of induced subcubes."""
    V = graph.vertices if isinstance(graph, DaisyCube) else graph
    if V.n <= DENSE_MAX_N:
        _, exists, dims = _dense_cubes(V)
        hist = np.bincount(dims[exists], minlength=V.n + 1)
        return UniPoly({int(k): int(hist[k]) for k in np.flatnonzero(hist)})
    out: dict[int, int] = {}
    for _, mask in _cube_pairs(V):
        k = mask.bit_count()
        out[k] = out.get(k, 0) + 1
    return UniPoly(out)


def closed_form_W(family: str, n: int) -> UniPoly:
    """Distance-weight polynomial at ``0^n`` from the known closed forms.

    ``fibonacci``: ``sum_k C(n-k+1, k) x^k``; ``lucas``:
    ``sum_k [2 C(n-k, k) - C(n-k-1, k)] x^k``; ``hypercube``: ``(1+x)^n``.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    key = family.replace("_", "-").lower()
    if key == "fibonacci":
        return UniPoly({k: binomial(n - k + 1, k) for k in range((n + 1) // 2 + 1)})
    if key == "lucas":
        return UniPoly({k: 2 * binomial(n - k, k) - binomial(n - k - 1, k) for k in range(n // 2 + 1)})
    if key == "hypercube":
        return UniPoly({k: binomial(n, k) for k in range(n + 1)})
    raise ValueError(f"no closed form for family {family!r}")


def generating_functions(family: str) -> dict[str, RationalSeries] | None:
    """Rational ``f, g, h`` for ``hypercube`` and ``lucas``; ``None`` for ``fibonacci``.

    ``f`` generates ``W`` at ``0^n`` (coefficients in ``x``), ``g`` the cube
    polynomials and ``h`` the distance cube polynomials at ``0^n``.
    """
    key = family.replace("_", "-").lower()
    x = UniPoly.x()
    s = BiPoly.x() + BiPoly.y()
    if key == "hypercube":
        return {
            "f": RationalSeries([1], [1, -(1 + x)]),
            "g": RationalSeries([1], [1, -(2 + x)]),
            "h": RationalSeries([1], [1, -(1 + s)]),
        }
    if key == "lucas":
        return {
            "f": RationalSeries([1, 0, x], [1, -1, -x]),
            "g": RationalSeries([1, 0, x + 1], [1, -1, -(x + 1)]),
            "h": RationalSeries([1, 0, s], [1, -1, -s]),
        }
    if key == "fibonacci":
        return None
    raise ValueError(f"no generating functions for family {family!r}")


def series_table(family: str, m: int) -> list[dict[str, UniPoly | BiPoly]]:
    """Per-``n`` polynomials ``f_n = W``, ``g_n = C``, ``h_n = D`` for ``n = 0 .. m``.

    Rational families expand their printed generating functions; Fibonacci
    cubes use the closed form of ``W`` and the two substitutions.
    """
    gfs = generating_functions(family)
    if gfs is not None:
        cols = {name: series_coefficients(S, m) for name, S in gfs.items()}
        return [{name: cols[name][i] for name in ("f", "g", "h")} for i in range(m + 1)]
    rows = []
    for n in range(m + 1):
        W = closed_form_W(family, n) if n else UniPoly(1)
        rows.append({"f": W, "g": substitute_univariate_shift(W), "h": substitute_sum(W)})
    return rows
