"""Isomorph-free enumeration of small graphs and triple systems.

Structures are canonicalized by relabeling: a placement of the vertices
into slots 0..n-1 reads out, level by level, the adjacency of each new
slot to the earlier ones as a bit column, and the canonical form is the
lexicographically smallest tuple of columns over all placements.  The
search for that minimum proceeds slot by slot, keeping only candidates
whose column attains the level minimum, skipping candidates that are
interchangeable with an already-explored one, and bounding later branches
with the best completion found so far.  Enumeration then extends canonical
representatives on n-1 vertices by a new vertex in every possible way and
deduplicates by canonical form, which visits every isomorphism class
exactly once without ever materializing the labeled universe.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .errors import SizeCap
from .graphs import Graph, is_connected
from .triples import TripleSystem

MAX_GRAPH_N = 8
MAX_TRIPLES_N = 6


def _min_placement(n: int, col_of, interchangeable) -> tuple[int, ...]:
    """Smallest column tuple over all ways to place n vertices into slots.

    col_of(v, placed) gives the column of vertex v when appended after the
    placed tuple; interchangeable(u, v) says a transposition of the two
    unplaced vertices is an automorphism, letting the search keep one.
    """

    def dfs(placed: tuple[int, ...], used: int, bound: tuple[int, ...] | None):
        k = len(placed)
        if k == n:
            return ()
        items = sorted(
            (col_of(v, placed), v) for v in range(n) if not used >> v & 1
        )
        mincol = items[0][0]
        if bound is not None and mincol > bound[0]:
            return None
        best: tuple[int, ...] | None = None
        reps: list[int] = []
        for col, v in items:
            if col != mincol:
                break
            if any(interchangeable(u, v) for u in reps):
                continue
            reps.append(v)
            if best is not None:
                child_bound = best[1:]
            elif bound is not None and mincol == bound[0]:
                child_bound = bound[1:]
            else:
                child_bound = None
            sub = dfs(placed + (v,), used | 1 << v, child_bound)
            if sub is None:
                continue
            cand = (mincol, *sub)
            if best is None or cand < best:
                best = cand
        return best

    out = dfs((), 0, None)
    assert out is not None
    return out


def canonical_graph_cols(n: int, adj: Sequence[int]) -> tuple[int, ...]:
    """Canonical form of a graph: per-slot adjacency columns, minimized."""
    if n == 1:
        return ()

    def col_of(v: int, placed: tuple[int, ...]) -> int:
        row = adj[v]
        k = len(placed)
        col = 0
        for j, w in enumerate(placed):
            col |= (row >> w & 1) << (k - 1 - j)
        return col

    def interchangeable(u: int, v: int) -> bool:
        return adj[u] & ~(1 << v) == adj[v] & ~(1 << u)

    cols = _min_placement(n, col_of, interchangeable)
    return cols[1:]  # the level-0 column is always empty


def graph_from_cols(n: int, cols: tuple[int, ...]) -> Graph:
    adj = [0] * n
    for k in range(1, n):
        col = cols[k - 1]
        for j in range(k):
            if col >> (k - 1 - j) & 1:
                adj[k] |= 1 << j
                adj[j] |= 1 << k
    return Graph(n, tuple(adj))


@lru_cache(maxsize=None)
def _graph_classes(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 1:
        return ((),)
    prev = _graph_classes(n - 1)
    found: set[tuple[int, ...]] = set()
    for cols in prev:
        base = graph_from_cols(n - 1, cols).adj
        for nb in range(1 << (n - 1)):
            adj = [row | ((nb >> u & 1) << (n - 1)) for u, row in enumerate(base)]
            adj.append(nb)
            found.add(canonical_graph_cols(n, adj))
    return tuple(sorted(found))


def enum_graphs(n: int, connected: bool = False) -> list[Graph]:
    """All graphs on n vertices up to isomorphism, in canonical order."""
    if not 1 <= n <= MAX_GRAPH_N:
        raise SizeCap(f"graph enumeration supports 1 <= n <= {MAX_GRAPH_N}, got {n}")
    graphs = [graph_from_cols(n, cols) for cols in _graph_classes(n)]
    if connected:
        graphs = [G for G in graphs if is_connected(G)]
    return graphs


def _triple_bit(i: int, j: int, k: int) -> int:
    """Position of pair (i, j) within the column of level k (0 = LSB side)."""
    # pairs (i,j) with i < j < k, ordered lexicographically; first pair most
    # significant so smaller columns mean sparser early slots
    npairs = k * (k - 1) // 2
    rank = i * k - i * (i + 1) // 2 + (j - i - 1)
    return npairs - 1 - rank


def canonical_triples_cols(
    n: int, edges: frozenset[tuple[int, int, int]]
) -> tuple[int, ...]:
    """Canonical form of a triple system, analogous to the graph columns."""
    if n <= 2:
        return ()
    eset = edges

    def col_of(v: int, placed: tuple[int, ...]) -> int:
        k = len(placed)
        col = 0
        for i in range(k):
            for j in range(i + 1, k):
                t = tuple(sorted((placed[i], placed[j], v)))
                if t in eset:
                    col |= 1 << _triple_bit(i, j, k)
        return col

    def interchangeable(u: int, v: int) -> bool:
        a, b = (u, v) if u < v else (v, u)
        for t in eset:
            if u in t or v in t:
                rest = [x for x in t if x != u and x != v]
                if len(rest) == 1:
                    continue  # contains both u and v: fixed by the swap
                swapped = tuple(
                    sorted(v if x == u else (u if x == v else x) for x in t)
                )
                if swapped not in eset:
                    return False
        return True

    cols = _min_placement(n, col_of, interchangeable)
    return cols[2:]  # levels 0 and 1 carry no triples


def triples_from_cols(n: int, cols: tuple[int, ...]) -> TripleSystem:
    edges = set()
    for k in range(2, n):
        col = cols[k - 2]
        for i in range(k):
            for j in range(i + 1, k):
                if col >> _triple_bit(i, j, k) & 1:
                    edges.add((i, j, k))
    return TripleSystem(n, frozenset(edges))


@lru_cache(maxsize=None)
def _triple_classes(n: int) -> tuple[tuple[int, ...], ...]:
    if n <= 2:
        return ((),)
    prev = _triple_classes(n - 1)
    pair_list = list(combinations(range(n - 1), 2))
    found: set[tuple[int, ...]] = set()
    for cols in prev:
        base = triples_from_cols(n - 1, cols).edges
        for sub in range(1 << len(pair_list)):
            edges = set(base)
            for t, (i, j) in enumerate(pair_list):
                if sub >> t & 1:
                    edges.add((i, j, n - 1))
            found.add(canonical_triples_cols(n, frozenset(edges)))
    return tuple(sorted(found))


def enum_triple_systems(n: int) -> list[TripleSystem]:
    """All 3-uniform hypergraphs on n vertices up to isomorphism."""
    if not 1 <= n <= MAX_TRIPLES_N:
        raise SizeCap(
            f"triple-system enumeration supports 1 <= n <= {MAX_TRIPLES_N}, got {n}"
        )
    return [triples_from_cols(n, cols) for cols in _triple_classes(n)]
