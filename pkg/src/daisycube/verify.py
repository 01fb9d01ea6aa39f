"""Machine checks of the daisy-cube identities on concrete instances.

Every check returns a :class:`CheckReport`. A failing report always carries a
witness that can be re-checked by hand: a vertex pair with both distances, a
list of differing polynomial coefficients, or a census cell.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from .bitword import Word
from .census import (
    _bfs_dense,
    census_daisy_fast,
    census_oracle,
    census_subcube,
    closed_form_W,
    cube_polynomial,
    distance_poly,
    weight_poly,
    worker_count,
)
from .family import (
    DaisyCube,
    VertexSet,
    bipartite_wheel,
    cartesian_product,
    downward_closure,
    fibonacci,
    hypercube,
    interval,
    lucas,
    recenter,
    vertex_deleted,
)
from .poly import (
    BiPoly,
    UniPoly,
    substitute_neg,
    substitute_shift,
    substitute_sum,
    substitute_univariate_shift,
    swap_vars,
)


@dataclass
class CheckReport:
    check: str
    instance: dict[str, Any]
    verdict: str
    witness: Any = None
    info: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self) -> dict:
        out = {
            "check": self.check,
            "instance": self.instance,
            "verdict": self.verdict,
            "witness": self.witness,
        }
        if self.info:
            out["info"] = self.info
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        inst = " ".join(f"{k}={_short(v)}" for k, v in self.instance.items())
        line = f"{self.verdict.upper():4} {self.check} {inst}".rstrip()
        if self.info:
            line += " " + " ".join(f"{k}={_short(v)}" for k, v in self.info.items())
        if self.witness is not None:
            line += f" witness={json.dumps(self.witness, sort_keys=True)}"
        return line


def _short(v) -> str:
    if isinstance(v, (list, tuple)):
        return "[" + ",".join(str(x) for x in v) + "]"
    return str(v)


def _report(check: str, instance: dict, ok: bool, witness=None, **info) -> CheckReport:
    return CheckReport(check, instance, "pass" if ok else "fail", None if ok else witness, info)


def describe(G: DaisyCube | VertexSet, **extra) -> dict[str, Any]:
    """Instance description used in reports."""
    if isinstance(G, DaisyCube):
        inst: dict[str, Any] = {"graph": G.name or "daisy", "n": G.n}
        if not G.name or G.name.startswith("random"):
            inst["generators"] = G.maximal.strings()
    else:
        inst = {"graph": "vertex-set", "n": G.n, "size": len(G)}
    inst.update({k: v for k, v in extra.items() if v is not None})
    return inst


def poly_diff(lhs: UniPoly | BiPoly, rhs: UniPoly | BiPoly) -> list[dict]:
    """Coefficients that differ, as JSON-friendly records."""
    a = lhs.to_bipoly() if isinstance(lhs, UniPoly) else lhs
    b = rhs.to_bipoly() if isinstance(rhs, UniPoly) else rhs
    keys = sorted(set(a.coeffs) | set(b.coeffs), key=lambda kd: (kd[0] + kd[1], kd[0]))
    return [
        {"x": k, "y": d, "lhs": str(a[k, d]), "rhs": str(b[k, d])}
        for k, d in keys
        if a[k, d] != b[k, d]
    ]


def _zero(G: DaisyCube | VertexSet) -> Word:
    return Word.zeros(G.n)


def _vertices(G: DaisyCube | VertexSet) -> VertexSet:
    return G.vertices if isinstance(G, DaisyCube) else G


# -- individual checks -----------------------------------------------------------

def check_partial_cube(V: VertexSet | DaisyCube, anchor: Word | None = None) -> CheckReport:
    """Geodesic distance inside ``<V>`` equals Hamming distance for every pair.

    With ``anchor`` only the anchor's connected component is examined;
    otherwise unreachable pairs count as violations.
    """
    V = _vertices(V)
    inst = describe(V, anchor=str(anchor) if anchor is not None else None)
    n = V.n
    member = np.zeros(1 << n, dtype=bool)
    member[list(V.values)] = True
    values = np.array(V.values, dtype=np.int64)
    if anchor is not None:
        reach = _bfs_dense(member, n, anchor.bits)
        values = values[reach[values] >= 0]
    for s in values.tolist():
        dist = _bfs_dense(member, n, s)[values]
        ham = np.bitwise_count(values ^ s)
        bad = np.flatnonzero(dist != ham)
        if bad.size:
            t = int(values[bad[0]])
            d = int(dist[bad[0]])
            witness = {
                "u": str(Word(n, s)),
                "v": str(Word(n, t)),
                "bfs": d if d >= 0 else None,
                "hamming": int(ham[bad[0]]),
            }
            return _report("partial-cube", inst, False, witness)
    return _report("partial-cube", inst, True)


def check_theorem_DfromC(G: DaisyCube) -> CheckReport:
    """``D_{G,0^n}(x, y) = C_G(x + y - 1)``."""
    D = distance_poly(census_oracle(G, _zero(G)))
    C = cube_polynomial(G)
    rhs = substitute_shift(C, -1)
    return _report("distance-from-cube", describe(G), D == rhs, poly_diff(D, rhs))


def check_symmetry(G: DaisyCube, anchor: Word | None = None) -> CheckReport:
    """``D_{G,0^n}(x, y) = D_{G,0^n}(y, x)``.

    At other anchors symmetry is not claimed; the report is informational
    and always passes.
    """
    u = anchor if anchor is not None else _zero(G)
    D = distance_poly(census_oracle(G, u))
    symmetric = swap_vars(D) == D
    inst = describe(G, anchor=str(u))
    if u.bits:
        return _report("symmetry", inst, True, symmetric="yes" if symmetric else "no")
    return _report("symmetry", inst, symmetric, poly_diff(D, swap_vars(D)))


def check_W_relations(G: DaisyCube, family: str | None = None) -> CheckReport:
    """``D = W(x + y)`` and ``C = W(x + 1)`` at ``0^n``; optionally ``W`` against its closed form."""
    census = census_oracle(G, _zero(G))
    W, D = weight_poly(census), distance_poly(census)
    C = cube_polynomial(G)
    inst = describe(G, family=family)
    lhs_d = substitute_sum(W)
    if D != lhs_d:
        return _report("w-relations", inst, False, {"identity": "D=W(x+y)", "diff": poly_diff(D, lhs_d)})
    lhs_c = substitute_univariate_shift(W)
    if C != lhs_c:
        return _report("w-relations", inst, False, {"identity": "C=W(x+1)", "diff": poly_diff(C, lhs_c)})
    if family is not None and G.n >= 1:
        closed = closed_form_W(family, G.n)
        if W != closed:
            return _report("w-relations", inst, False, {"identity": "closed-form W", "diff": poly_diff(W, closed)})
    return _report("w-relations", inst, True)


def check_tree_like(G: DaisyCube, engine: str = "oracle") -> CheckReport:
    """``D_{G,u}(x, -x) = 1`` at every vertex ``u``."""
    inst = describe(G, engine=engine)
    run = census_oracle if engine == "oracle" else census_daisy_fast
    for u in G.vertices:
        value = substitute_neg(distance_poly(run(G, u)))
        if value != 1:
            return _report("tree-like", inst, False, {"anchor": str(u), "D(x,-x)": str(value)})
    return _report("tree-like", inst, True, anchors=len(G.vertices))


def check_cube_poly_minus1(G: DaisyCube) -> CheckReport:
    """``C_G(-1) = 1``."""
    C = cube_polynomial(G)
    value = C.evaluate(-1)
    return _report("cube-minus1", describe(G), value == 1, {"C": str(C), "C(-1)": value})


def check_product(G: DaisyCube, H: DaisyCube, g: Word, h: Word) -> CheckReport:
    """``D_{G x H,(g,h)} = D_{G,g} * D_{H,h}``."""
    if g not in G.vertices or h not in H.vertices:
        raise ValueError("product anchors must be vertices of their factors")
    P = cartesian_product(G, H)
    lhs = distance_poly(census_oracle(P, g.concat(h)))
    rhs = distance_poly(census_oracle(G, g)) * distance_poly(census_oracle(H, h))
    inst = {"graph": "product", "left": G.name or G.maximal.strings(), "right": H.name or H.maximal.strings(),
            "n": P.n, "anchor": f"{g}|{h}"}
    return _report("product", inst, lhs == rhs, poly_diff(lhs, rhs))


def check_lemma9(top: Word, u: Word) -> CheckReport:
    """``D_{G,u}(x, -x) = (-x)^{d(u, G)}`` for the subcube ``G = <I(0^n, top)>``."""
    D = distance_poly(census_subcube(top, u))
    dist = (u.bits & ~top.bits).bit_count()
    expected = UniPoly({dist: (-1) ** dist})
    value = substitute_neg(D)
    inst = {"graph": "subcube", "n": top.n, "top": str(top), "anchor": str(u)}
    return _report("subcube-alternating", inst, value == expected, {"D(x,-x)": str(value), "expected": str(expected)})


def check_kleitman(X, Y, n: int | None = None) -> CheckReport:
    """``|V(X) & V(Y)| * 2^n >= |V(X)| * |V(Y)|`` for the downward closures."""
    A = downward_closure(X, n)
    B = downward_closure(Y, n)
    if A.n != B.n:
        raise ValueError("generator sets have different word lengths")
    inter = len(A.vertices.members & B.vertices.members)
    lhs = inter << A.n
    rhs = len(A.vertices) * len(B.vertices)
    inst = {"graph": "hereditary-pair", "n": A.n, "X": A.maximal.strings(), "Y": B.maximal.strings()}
    witness = {"intersection": inter, "left": len(A.vertices), "right": len(B.vertices)}
    return _report("kleitman", inst, lhs >= rhs, witness)


def check_interval_union(G: DaisyCube) -> CheckReport:
    """Vertex set equals the union of the intervals ``I(0^n, x)`` over maximal ``x``."""
    zero = _zero(G)
    union: set[int] = set()
    for x in G.maximal:
        union |= interval(zero, x).members
    missing = sorted(G.vertices.members ^ union)
    witness = {"symmetric_difference": [str(Word(G.n, v)) for v in missing[:10]]}
    return _report("interval-union", describe(G), not missing, witness)


def check_recenter(V: VertexSet | DaisyCube, shift: Word, anchor: Word) -> CheckReport:
    """Translating the graph by ``shift`` relabels the census at ``anchor``."""
    V = _vertices(V)
    before = census_oracle(V, anchor)
    after = census_oracle(recenter(V, shift), anchor ^ shift)
    inst = describe(V, shift=str(shift), anchor=str(anchor))
    diff = [{"k": k, "d": d, "before": a, "after": b} for (k, d), (a, b) in before.diff(after).items()]
    return _report("recenter", inst, before.counts == after.counts, diff)


def check_engines(G: DaisyCube) -> CheckReport:
    """Fast path equals the oracle at every anchor."""
    for u in G.vertices:
        slow = census_oracle(G, u)
        fast = census_daisy_fast(G, u)
        if slow != fast:
            cells = [{"k": k, "d": d, "oracle": a, "fast": b} for (k, d), (a, b) in slow.diff(fast).items()]
            return _report("engines", describe(G), False, {"anchor": str(u), "cells": cells})
    return _report("engines", describe(G), True, anchors=len(G.vertices))


# -- instance generation -----------------------------------------------------------

def random_generator_set(rng: random.Random, n: int, max_generators: int = 20) -> VertexSet:
    m = rng.randint(1, max_generators)
    return VertexSet(n, (rng.getrandbits(n) for _ in range(m)))


def random_daisy_cubes(count: int, max_n: int = 8, seed: int = 0,
                       max_generators: int = 20) -> list[DaisyCube]:
    """``count`` seeded random daisy cubes with ``1 <= n <= max_n``."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(1, max_n)
        gens = random_generator_set(rng, n, max_generators)
        out.append(downward_closure(gens, name=f"random-s{seed}-{i}"))
    return out


def named_instances(max_n: int) -> list[tuple[str, DaisyCube]]:
    """``(family, graph)`` for fibonacci, lucas, vertex-deleted and bipartite-wheel."""
    out: list[tuple[str, DaisyCube]] = []
    for n in range(1, max_n + 1):
        out.append(("fibonacci", fibonacci(n)))
        out.append(("lucas", lucas(n)))
        out.append(("vertex-deleted", vertex_deleted(n)))
        if n >= 3:
            out.append(("bipartite-wheel", bipartite_wheel(n)))
    return out


PRODUCT_FACTORS = ("Q_1", "Q_2", "Gamma_2", "Gamma_3", "Lambda_3")


def product_factors() -> list[DaisyCube]:
    return [hypercube(1), hypercube(2), fibonacci(2), fibonacci(3), lucas(3)]


# -- suite runner --------------------------------------------------------------------

Task = tuple[Callable[..., CheckReport], tuple, dict]

SINGLE_GRAPH_CHECKS: dict[str, Callable[..., CheckReport]] = {
    "partial-cube": check_partial_cube,
    "distance-from-cube": check_theorem_DfromC,
    "symmetry": check_symmetry,
    "w-relations": check_W_relations,
    "tree-like": check_tree_like,
    "cube-minus1": check_cube_poly_minus1,
    "interval-union": check_interval_union,
    "engines": check_engines,
}


def paper_tasks(max_n: int = 8, seed: int = 0, n_random: int = 100,
                n_kleitman: int = 100, max_random_n: int = 8) -> list[Task]:
    """Every identity on the named families up to ``max_n`` plus seeded random instances."""
    tasks: list[Task] = []
    graphs: list[tuple[str | None, DaisyCube]] = list(named_instances(max_n))
    graphs += [(None, G) for G in random_daisy_cubes(n_random, min(max_random_n, max_n), seed)]
    for family, G in graphs:
        tasks.append((check_partial_cube, (G,), {}))
        tasks.append((check_interval_union, (G,), {}))
        tasks.append((check_theorem_DfromC, (G,), {}))
        tasks.append((check_symmetry, (G,), {}))
        closed = family if family in ("fibonacci", "lucas") else None
        tasks.append((check_W_relations, (G,), {"family": closed}))
        tasks.append((check_tree_like, (G,), {}))
        tasks.append((check_cube_poly_minus1, (G,), {}))
        tasks.append((check_engines, (G,), {}))
    for n in range(1, max_n + 1):
        tasks.append((check_W_relations, (hypercube(n),), {"family": "hypercube"}))
        tasks.append((check_tree_like, (hypercube(n),), {}))
    factors = product_factors()
    for G in factors:
        for H in factors:
            for g in G.vertices:
                for h in H.vertices:
                    tasks.append((check_product, (G, H, g, h), {}))
    n_sub = min(max_n, 6)
    for b in range(1 << n_sub):
        for u in range(1 << n_sub):
            tasks.append((check_lemma9, (Word(n_sub, b), Word(n_sub, u)), {}))
    rng = random.Random(seed + 1)
    kn = min(max_n, 8)
    for _ in range(n_kleitman):
        tasks.append((check_kleitman, (random_generator_set(rng, kn), random_generator_set(rng, kn)), {}))
    q3 = vertex_deleted(3)
    for s in q3.vertices:
        for a in q3.vertices:
            tasks.append((check_recenter, (q3, s, a), {}))
    return tasks


def run_tasks(tasks: list[Task], workers: int | None = None) -> list[CheckReport]:
    """Run checks, optionally on a thread pool; reports keep task order."""
    workers = workers or worker_count()
    if workers == 1:
        return [fn(*args, **kwargs) for fn, args, kwargs in tasks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda t: t[0](*t[1], **t[2]), tasks))


def run_paper_suite(max_n: int = 8, seed: int = 0, n_random: int = 100,
                    n_kleitman: int = 100, workers: int | None = None) -> list[CheckReport]:
    return run_tasks(paper_tasks(max_n, seed, n_random, n_kleitman), workers)


def summarize(reports: list[CheckReport]) -> dict[str, dict[str, int]]:
    """Pass/fail counts per check name, in first-seen order."""
    out: dict[str, dict[str, int]] = {}
    for r in reports:
        slot = out.setdefault(r.check, {"pass": 0, "fail": 0})
        slot[r.verdict] += 1
    return out
