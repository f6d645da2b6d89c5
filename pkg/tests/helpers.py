"""Reference implementations and samplers shared by the test modules.

Everything here is written directly from the definitions, independently of
the package internals, so the tests compare two routes to the same answer.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from metriclines import MetricSpace, validate_metric


def oracle_line_sets(dist) -> set[frozenset[int]]:
    """Distinct lines of a distance matrix, straight from the definition."""
    n = len(dist)
    sets = set()
    for u in range(n):
        for v in range(u + 1, n):
            pts = {u, v}
            for p in range(n):
                if p == u or p == v:
                    continue
                if (
                    dist[p][u] + dist[u][v] == dist[p][v]
                    or dist[u][p] + dist[p][v] == dist[u][v]
                    or dist[u][v] + dist[v][p] == dist[u][p]
                ):
                    pts.add(p)
            sets.add(frozenset(pts))
    return sets


def oracle_triples(dist) -> set[tuple[int, int, int]]:
    """Betweenness triples of a distance matrix, from the definition."""
    n = len(dist)
    out = set()
    for a, b, c in itertools.combinations(range(n), 3):
        if (
            dist[a][b] + dist[b][c] == dist[a][c]
            or dist[b][a] + dist[a][c] == dist[b][c]
            or dist[a][c] + dist[c][b] == dist[a][b]
        ):
            out.add((a, b, c))
    return out


def floyd_closure(rows):
    """Shortest-path closure of a symmetric nonnegative matrix."""
    n = len(rows)
    d = [list(r) for r in rows]
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            row = d[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < row[j]:
                    row[j] = alt
    return d


def random_int_space(rng, n, lo=1, hi=5) -> MetricSpace:
    """Metric with distances in {lo..hi}: closure of a random symmetric matrix."""
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rows[i][j] = rows[j][i] = rng.randint(lo, hi)
    return validate_metric(floyd_closure(rows))


def random_rational_space(rng, n, max_num=6, max_den=4) -> MetricSpace:
    """Random rational metric via shortest-path closure."""
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            q = Fraction(rng.randint(1, max_num), rng.randint(1, max_den))
            rows[i][j] = rows[j][i] = q
    return validate_metric(floyd_closure(rows))


def labeled_graph_rows(n):
    """All 2**C(n,2) labeled graphs as adjacency-matrix row tuples."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        rows = [[0] * n for _ in range(n)]
        for k, (i, j) in enumerate(pairs):
            if bits >> k & 1:
                rows[i][j] = rows[j][i] = 1
        yield rows

