"""3-uniform hypergraphs and the lines they induce.

A triple system on vertices 0..n-1 abstracts the betweenness relation of a
metric space: an edge {a,b,c} says the three points are collinear, without
remembering which one sits in the middle.  The line of a pair u, v collects
u, v and every w forming an edge with them, so a space and its betweenness
triples always induce the same family of lines.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import BadParams, DegeneratePair, IndexOutOfRange, TooFewPoints, XInsideT
from .metric import Line, LineFamily, MetricSpace, between


@dataclass(frozen=True)
class TripleSystem:
    """A 3-uniform hypergraph; edges are stored as sorted tuples."""

    n: int
    edges: frozenset[tuple[int, int, int]]

    def __post_init__(self):
        if self.n < 1:
            raise TooFewPoints(self.n, 1)
        canon = set()
        for e in self.edges:
            t = tuple(sorted(e))
            if len(t) != 3 or len(set(t)) != 3:
                raise BadParams(f"not a triple: {e}")
            if not (0 <= t[0] and t[2] < self.n):
                raise BadParams(f"triple {e} out of range for n={self.n}")
            canon.add(t)
        object.__setattr__(self, "edges", frozenset(canon))

    def sorted_edges(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(sorted(self.edges))

    def has_edge(self, a: int, b: int, c: int) -> bool:
        return tuple(sorted((a, b, c))) in self.edges


def triple_system(n: int, edges) -> TripleSystem:
    return TripleSystem(n, frozenset(tuple(e) for e in edges))


def betweenness_triples(S: MetricSpace) -> TripleSystem:
    """The triples {a,b,c} of S in which some point lies between the others."""
    if S.n < 3:
        raise TooFewPoints(S.n, 3)
    edges = set()
    for a, b, c in combinations(range(S.n), 3):
        if between(S, a, b, c) or between(S, b, a, c) or between(S, a, c, b):
            edges.add((a, b, c))
    return TripleSystem(S.n, frozenset(edges))


def _check_pair(T: TripleSystem, u: int, v: int) -> None:
    for p in (u, v):
        if not 0 <= p < T.n:
            raise IndexOutOfRange(p, T.n)
    if u == v:
        raise DegeneratePair(u)


def hyper_line(T: TripleSystem, u: int, v: int) -> Line:
    """u, v, and every w such that {u,v,w} is an edge."""
    _check_pair(T, u, v)
    pts = {u, v}
    for w in range(T.n):
        if w != u and w != v and T.has_edge(u, v, w):
            pts.add(w)
    key = (u, v) if u < v else (v, u)
    return Line(frozenset(pts), frozenset({key}))


def hyper_line_family(T: TripleSystem) -> LineFamily:
    by_points: dict[frozenset[int], set[tuple[int, int]]] = {}
    pair_count = 0
    for u, v in combinations(range(T.n), 2):
        pair_count += 1
        ln = hyper_line(T, u, v)
        by_points.setdefault(ln.points, set()).update(ln.generators)
    lines = tuple(
        Line(pts, frozenset(gens))
        for pts, gens in sorted(by_points.items(), key=lambda kv: tuple(sorted(kv[0])))
    )
    return LineFamily(T.n, lines, pair_count)


def vertex_signatures(T: TripleSystem) -> tuple[dict[int, frozenset[int]], bool]:
    """Map each vertex to the indices of the lines containing it.

    Indices refer to hyper_line_family(T), whose order is canonical.  The
    second value says whether the map is injective; it always is when no
    line is universal, and injectivity forces at least lg n distinct lines
    because n distinct subsets of the lines must exist.
    """
    fam = hyper_line_family(T)
    sig: dict[int, frozenset[int]] = {}
    for x in range(T.n):
        sig[x] = frozenset(i for i, ln in enumerate(fam.lines) if x in ln.points)
    distinct = len(set(sig.values())) == T.n
    return sig, distinct


def k34_condition(T: TripleSystem, x: int, tset) -> bool:
    """No three vertices of tset form a complete quadruple with x.

    True iff there is no {u,v,w} inside tset with all four of {x,u,v},
    {x,u,w}, {x,v,w}, {u,v,w} present as edges.  x must lie outside tset.
    """
    pts = sorted(set(tset))
    for p in [x, *pts]:
        if not 0 <= p < T.n:
            raise IndexOutOfRange(p, T.n)
    if x in pts:
        raise XInsideT(x)
    for u, v, w in combinations(pts, 3):
        if (
            T.has_edge(u, v, w)
            and T.has_edge(x, u, v)
            and T.has_edge(x, u, w)
            and T.has_edge(x, v, w)
        ):
            return False
    return True


def fano() -> TripleSystem:
    """The 7-point system with edges {i, i+1 mod 7, i+3 mod 7}."""
    edges = [tuple(sorted((i, (i + 1) % 7, (i + 3) % 7))) for i in range(7)]
    return TripleSystem(7, frozenset(edges))


def complete_quadruple() -> TripleSystem:
    """All four triples on four vertices."""
    return TripleSystem(4, frozenset(combinations(range(4), 3)))
