"""Graphs, their shortest-path metrics, and the machinery of 1-2 spaces.

Adjacency is kept as bitmask rows, which keeps breadth-first search, twin
detection, and the per-pair line computations cheap; the searches over all
graphs of a given order lean on that.

A 1-2 space (every off-diagonal distance 1 or 2) is the same thing as a
graph: adjacent means distance 1.  Lines in such a space reduce to bitmask
formulas on adjacency rows, and the case analysis in distinct_line_case
spells out when two generating pairs are forced to give different lines.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    ArityMismatch,
    BadParams,
    DegeneratePair,
    DisconnectedGraph,
    IndexOutOfRange,
    NotOneTwoSpace,
)
from .metric import LineFamily, MetricSpace, line_family, validate_metric


@dataclass(frozen=True)
class Graph:
    """Undirected graph on 0..n-1; adj[u] is the neighbor set of u as a bitmask."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise BadParams(f"graph needs at least one vertex, got n={self.n}")
        if len(self.adj) != self.n:
            raise BadParams("adjacency rows do not match n")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise BadParams(f"adjacency row {u} mentions vertices past n")
            if row >> u & 1:
                raise BadParams(f"self-loop at {u}")
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if (self.adj[u] >> v & 1) != (self.adj[v] >> u & 1):
                    raise BadParams(f"adjacency not symmetric at ({u},{v})")

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if self.adj[u] >> v & 1
        )


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise BadParams(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise BadParams(f"self-loop at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def adjacency_from_rows(rows: Sequence[Sequence[int]]) -> Graph:
    n = len(rows)
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rows[i][j]
    ]
    return graph_from_edges(n, edges)


def bfs_distances(adj: Sequence[int], n: int, src: int) -> list[int]:
    """Hop counts from src; -1 marks unreachable vertices."""
    dist = [-1] * n
    dist[src] = 0
    seen = 1 << src
    frontier = 1 << src
    d = 0
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = (f & -f).bit_length() - 1
            f &= f - 1
            nxt |= adj[v]
        nxt &= ~seen
        d += 1
        f = nxt
        while f:
            v = (f & -f).bit_length() - 1
            f &= f - 1
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def is_connected(G: Graph) -> bool:
    if G.n == 1:
        return True
    return reachable_mask(G.adj, G.n, 0) == (1 << G.n) - 1


def reachable_mask(adj: Sequence[int], n: int, src: int) -> int:
    seen = 1 << src
    frontier = 1 << src
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = (f & -f).bit_length() - 1
            f &= f - 1
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def graph_dist_rows(G: Graph) -> list[list[int]]:
    """All-pairs hop counts; raises DisconnectedGraph on the first gap found."""
    rows = []
    for u in range(G.n):
        d = bfs_distances(G.adj, G.n, u)
        for v in range(G.n):
            if d[v] < 0:
                raise DisconnectedGraph(u, v)
        rows.append(d)
    return rows


def graph_metric(G: Graph) -> MetricSpace:
    """The shortest-path metric of a connected graph."""
    rows = graph_dist_rows(G)
    return validate_metric([[Fraction(x) for x in row] for row in rows])


def diameter(G: Graph) -> int:
    rows = graph_dist_rows(G)
    return max(max(row) for row in rows)


def geodesic_path(G: Graph) -> tuple[int, ...]:
    """A diametral shortest path v_0..v_t with d(v_i, v_j) = j - i throughout.

    Deterministic: the lexicographically smallest diametral (source, target)
    pair, then the path whose every step takes the smallest-labeled
    predecessor in the source's breadth-first tree.
    """
    rows = graph_dist_rows(G)
    t = max(max(row) for row in rows)
    s: int | None = None
    g: int | None = None
    for u in range(G.n):
        for v in range(u + 1, G.n):
            if rows[u][v] == t:
                s, g = u, v
                break
        if s is not None:
            break
    if s is None:
        # single vertex: the trivial path
        return (0,)
    ds = rows[s]
    path = [g]
    cur = g
    while cur != s:
        nxt = min(
            w for w in range(G.n) if G.adj[cur] >> w & 1 and ds[w] == ds[cur] - 1
        )
        path.append(nxt)
        cur = nxt
    path.reverse()
    for i in range(len(path)):
        for j in range(i + 1, len(path)):
            if rows[path[i]][path[j]] != j - i:
                raise AssertionError("geodesic property failed on returned path")
    return tuple(path)


def is_one_two(S: MetricSpace) -> bool:
    return all(
        S.dist[i][j] == 1 or S.dist[i][j] == 2
        for i in range(S.n)
        for j in range(i + 1, S.n)
    )


def _require_one_two(S: MetricSpace) -> None:
    for i in range(S.n):
        for j in range(i + 1, S.n):
            if S.dist[i][j] != 1 and S.dist[i][j] != 2:
                raise NotOneTwoSpace(i, j)


def graph_to_space(S_or_G: Graph) -> MetricSpace:
    """Edges become distance 1, non-edges distance 2.  Any graph qualifies."""
    G = S_or_G
    one, two, zero = Fraction(1), Fraction(2), Fraction(0)
    rows = [
        [
            zero if i == j else (one if G.adj[i] >> j & 1 else two)
            for j in range(G.n)
        ]
        for i in range(G.n)
    ]
    return MetricSpace(G.n, tuple(tuple(r) for r in rows))


def space_to_graph(S: MetricSpace) -> Graph:
    _require_one_two(S)
    edges = [
        (i, j)
        for i in range(S.n)
        for j in range(i + 1, S.n)
        if S.dist[i][j] == 1
    ]
    return graph_from_edges(S.n, edges)


def one_two_correspondence(direction: str, value) -> MetricSpace | Graph:
    """Dispatch between the two sides of the graph ↔ 1-2 space bijection."""
    if direction == "forward":
        if not isinstance(value, Graph):
            raise BadParams("forward direction expects a Graph")
        return graph_to_space(value)
    if direction == "backward":
        if not isinstance(value, MetricSpace):
            raise BadParams("backward direction expects a MetricSpace")
        return space_to_graph(value)
    raise BadParams(f"unknown direction {direction!r}")


def _twin_adj(S: MetricSpace) -> tuple[int, ...]:
    return space_to_graph(S).adj


def are_twins(S: MetricSpace, u: int, v: int) -> bool:
    """d(u,v) = 2 and u, v agree with every other point."""
    for p in (u, v):
        if not 0 <= p < S.n:
            raise IndexOutOfRange(p, S.n)
    if u == v:
        raise DegeneratePair(u)
    _require_one_two(S)
    if S.dist[u][v] != 2:
        return False
    return all(
        S.dist[u][w] == S.dist[v][w] for w in range(S.n) if w != u and w != v
    )


def find_twins(S: MetricSpace) -> frozenset[tuple[int, int]]:
    """All twin pairs, each as (u, v) with u < v."""
    _require_one_two(S)
    adj = _twin_adj(S)
    out = set()
    for u in range(S.n):
        for v in range(u + 1, S.n):
            if adj[u] >> v & 1:
                continue
            keep = ~((1 << u) | (1 << v))
            if adj[u] & keep == adj[v] & keep:
                out.add((u, v))
    return frozenset(out)


def maximal_twin_free(S: MetricSpace) -> frozenset[int]:
    """Greedy maximal twin-free subset, scanning labels in increasing order."""
    twins = find_twins(S)
    twin_of: dict[int, set[int]] = {}
    for u, v in twins:
        twin_of.setdefault(u, set()).add(v)
        twin_of.setdefault(v, set()).add(u)
    kept: set[int] = set()
    for p in range(S.n):
        if not (twin_of.get(p, set()) & kept):
            kept.add(p)
    return frozenset(kept)


_CASE_ARITY = {"i": 4, "ii": 4, "iii": 4, "iv": 3, "v": 3, "vi": 3}


def _has_other_twin(S: MetricSpace, p: int, excluded: int) -> bool:
    return any(
        w != p and w != excluded and are_twins(S, p, w) for w in range(S.n)
    )


def distinct_line_case(
    S: MetricSpace, case_id: str, points: tuple[int, ...]
) -> tuple[bool, bool]:
    """Evaluate one of the six sufficient conditions for two lines to differ.

    Cases i-iii take four distinct points and compare the lines of (p1,p2)
    and (p3,p4); cases iv-vi take three and compare (p1,p2) with (p2,p3):

      i.   all six distances 1
      ii.  d(p1,p2) = 1 and d(p3,p4) = 2
      iii. d(p1,p2) = d(p3,p4) = 2 and p4 has a twin other than p3
      iv.  d(p1,p2) = d(p2,p3) = 1 and p1, p3 are not twins
      v.   d(p1,p2) = 1, d(p2,p3) = 2, and p3 has a twin other than p2
      vi.  d(p1,p2) = d(p2,p3) = 2

    Returns (applies, conclusion_holds): whether the hypothesis is met, and
    whether the two lines really are different point sets.
    """
    if case_id not in _CASE_ARITY:
        raise BadParams(f"unknown case {case_id!r}")
    want = _CASE_ARITY[case_id]
    if len(points) != want:
        raise ArityMismatch(case_id, want, len(points))
    for p in points:
        if not 0 <= p < S.n:
            raise IndexOutOfRange(p, S.n)
    if len(set(points)) != want:
        raise BadParams(f"points must be distinct, got {points}")
    _require_one_two(S)
    d = S.dist
    if case_id == "i":
        u1, u2, u3, u4 = points
        applies = all(d[a][b] == 1 for a, b in combinations(points, 2))
        pair_a, pair_b = (u1, u2), (u3, u4)
    elif case_id == "ii":
        u1, u2, u3, u4 = points
        applies = d[u1][u2] == 1 and d[u3][u4] == 2
        pair_a, pair_b = (u1, u2), (u3, u4)
    elif case_id == "iii":
        u1, u2, u3, u4 = points
        applies = (
            d[u1][u2] == 2 and d[u3][u4] == 2 and _has_other_twin(S, u4, u3)
        )
        pair_a, pair_b = (u1, u2), (u3, u4)
    elif case_id == "iv":
        u1, u2, u3 = points
        applies = d[u1][u2] == 1 and d[u2][u3] == 1 and not are_twins(S, u1, u3)
        pair_a, pair_b = (u1, u2), (u2, u3)
    elif case_id == "v":
        u1, u2, u3 = points
        applies = (
            d[u1][u2] == 1 and d[u2][u3] == 2 and _has_other_twin(S, u3, u2)
        )
        pair_a, pair_b = (u1, u2), (u2, u3)
    else:  # vi
        u1, u2, u3 = points
        applies = d[u1][u2] == 2 and d[u2][u3] == 2
        pair_a, pair_b = (u1, u2), (u2, u3)
    adj = _twin_adj(S)
    la = _onetwo_line_mask(adj, *pair_a)
    lb = _onetwo_line_mask(adj, *pair_b)
    return applies, la != lb


def _onetwo_line_mask(adj: Sequence[int], u: int, v: int) -> int:
    """Bitmask of the line of u, v in the 1-2 space with adjacency adj.

    When d(u,v) = 1 the line is everything at odd adjacency parity with the
    pair (the XOR of the rows, which contains u and v themselves); when
    d(u,v) = 2 it is the pair plus their common neighbors.
    """
    if adj[u] >> v & 1:
        return adj[u] ^ adj[v]
    return (adj[u] & adj[v]) | (1 << u) | (1 << v)


def onetwo_line_masks(n: int, adj: Sequence[int]) -> list[int]:
    """Line bitmasks of the 1-2 space of a graph, one per pair u < v."""
    out = []
    for u in range(n):
        au = adj[u]
        bu = 1 << u
        for v in range(u + 1, n):
            av = adj[v]
            if au >> v & 1:
                out.append(au ^ av)
            else:
                out.append((au & av) | bu | (1 << v))
    return out


def int_metric_line_masks(n: int, rows: Sequence[Sequence[int]]) -> list[int]:
    """Line bitmasks for an integer-distance metric, one per pair u < v."""
    out = []
    for u in range(n):
        du = rows[u]
        base = (1 << u)
        for v in range(u + 1, n):
            dv = rows[v]
            duv = du[v]
            mask = base | (1 << v)
            for w in range(n):
                if w == u or w == v:
                    continue
                a, b = du[w], dv[w]
                if a + b == duv or a + duv == b or b + duv == a:
                    mask |= 1 << w
            out.append(mask)
    return out


def onetwo_line_family(G: Graph) -> LineFamily:
    """Line family of the 1-2 space of G, via the exact generic path."""
    return line_family(graph_to_space(G))


def max_clique_size(n: int, adj: Sequence[int], candidates: int | None = None) -> int:
    """Size of the largest clique within the candidate set (default: all)."""
    if candidates is None:
        candidates = (1 << n) - 1

    best = 0

    def grow(clique_size: int, cand: int) -> None:
        nonlocal best
        if clique_size + cand.bit_count() <= best:
            return
        if not cand:
            best = max(best, clique_size)
            return
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            if clique_size + 1 + cand.bit_count() <= best:
                return
            grow(clique_size + 1, cand & adj[v])

    grow(0, candidates)
    return best
