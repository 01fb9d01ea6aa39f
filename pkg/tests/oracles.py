"""Brute-force references, deliberately independent of the library's engines."""

from itertools import product
from math import comb

INF = float("inf")


def all_words(n):
    return [int("".join(bits), 2) if n else 0 for bits in product("01", repeat=n)]


def floyd_warshall(values, n):
    """All-pairs geodesics of the subgraph of Q_n induced by ``values``."""
    idx = {v: i for i, v in enumerate(values)}
    m = len(values)
    dist = [[0 if i == j else INF for j in range(m)] for i in range(m)]
    for v in values:
        for j in range(n):
            w = v ^ (1 << j)
            if w in idx:
                dist[idx[v]][idx[w]] = 1
    for k in range(m):
        dk = dist[k]
        for i in range(m):
            dik = dist[i][k]
            if dik == INF:
                continue
            di = dist[i]
            for j in range(m):
                if dik + dk[j] < di[j]:
                    di[j] = dik + dk[j]
    return idx, dist


def brute_census(values, n, anchor):
    """{(k, d): count} by scanning every subcube of Q_n (all 3^n of them)."""
    members = set(values)
    idx, dist = floyd_warshall(sorted(members), n)
    row = dist[idx[anchor]]
    counts = {}
    for pattern in product("01*", repeat=n):
        verts = [0]
        for ch in pattern:
            if ch == "*":
                verts = [v << 1 for v in verts] + [(v << 1) | 1 for v in verts]
            else:
                verts = [(v << 1) | int(ch) for v in verts]
        if all(v in members for v in verts):
            d = min(row[idx[v]] for v in verts)
            if d == INF:
                continue
            key = (pattern.count("*"), d)
            counts[key] = counts.get(key, 0) + 1
    return counts


def brute_closure(gens, n):
    return {u for u in all_words(n) if any(u & ~x == 0 for x in gens)}


def fibonacci_filter(n):
    return [u for u in all_words(n) if not any((u >> i) & 3 == 3 for i in range(max(n - 1, 0)))]


def lucas_filter(n):
    out = []
    for u in fibonacci_filter(n):
        if n >= 1 and (u >> (n - 1)) & 1 and u & 1:
            continue
        out.append(u)
    return out


def weight_histogram(values):
    hist = {}
    for v in values:
        w = bin(v).count("1")
        hist[w] = hist.get(w, 0) + 1
    return hist


def anchor0_formula(values):
    """c_{k,d} at 0^n for a downward-closed set: sum over v with w(v)=k+d of C(k+d, k)."""
    counts = {}
    for v in values:
        w = bin(v).count("1")
        for k in range(w + 1):
            counts[(k, w - k)] = counts.get((k, w - k), 0) + comb(w, k)
    return counts
