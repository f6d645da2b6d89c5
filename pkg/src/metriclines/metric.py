"""Finite metric spaces and the lines their betweenness relation induces.

Points are 0..n-1.  All distances are exact rationals (fractions.Fraction),
and betweenness means exact equality d(a,b) + d(b,c) == d(a,c); nothing here
ever goes through floats.

A line is identified by its point set alone.  The generating pairs are kept
as metadata because reports want them, but two pairs generating the same set
give one line.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import (
    AsymmetryError,
    BadParams,
    DegeneratePair,
    IndexOutOfRange,
    NonpositiveDistance,
    NonzeroDiagonal,
    TooFewPoints,
    TriangleViolation,
)

Rational = Fraction


@dataclass(frozen=True)
class MetricSpace:
    """A validated finite metric space with exact rational distances."""

    n: int
    dist: tuple[tuple[Fraction, ...], ...]

    def d(self, i: int, j: int) -> Fraction:
        return self.dist[i][j]

    def points(self) -> range:
        return range(self.n)


@dataclass(frozen=True)
class Line:
    """A line of a space: its point set, plus every pair that generated it."""

    points: frozenset[int]
    generators: frozenset[tuple[int, int]]

    def sorted_points(self) -> tuple[int, ...]:
        return tuple(sorted(self.points))

    def __contains__(self, p: int) -> bool:
        return p in self.points

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class LineFamily:
    """All distinct lines of a space, in a canonical order.

    Lines are sorted by their sorted point tuples, so the same family always
    comes out in the same order regardless of how it was accumulated.
    """

    n: int
    lines: tuple[Line, ...]
    pair_count: int

    def __len__(self) -> int:
        return len(self.lines)

    def __iter__(self):
        return iter(self.lines)

    @property
    def count(self) -> int:
        return len(self.lines)

    def universal_lines(self) -> tuple[Line, ...]:
        return tuple(ln for ln in self.lines if len(ln.points) == self.n)

    def has_universal(self) -> bool:
        return any(len(ln.points) == self.n for ln in self.lines)

    def point_sets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(ln.sorted_points() for ln in self.lines)


def validate_metric(rows: Sequence[Sequence[Fraction | int | str]]) -> MetricSpace:
    """Check the metric axioms on a square table and build a MetricSpace.

    Entries may be Fractions, ints, or strings Fraction() accepts.  Checks
    run in a fixed order: shape, diagonal/positivity/symmetry swept row by
    row, then triangle inequalities over pairs i < j (lexicographic) with
    the intermediate point k ascending.
    """
    n = len(rows)
    if n < 1:
        raise TooFewPoints(n, 1)
    dist: list[list[Fraction]] = []
    for i, row in enumerate(rows):
        if len(row) != n:
            raise BadParams(f"row {i} has {len(row)} entries, expected {n}")
        dist.append([Fraction(x) for x in row])
    for i in range(n):
        if dist[i][i] != 0:
            raise NonzeroDiagonal(i)
        for j in range(i + 1, n):
            if dist[i][j] != dist[j][i]:
                raise AsymmetryError(i, j)
            if dist[i][j] <= 0:
                raise NonpositiveDistance(i, j)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                if k == i or k == j:
                    continue
                if dist[i][j] > dist[i][k] + dist[k][j]:
                    raise TriangleViolation(i, j, k)
    return MetricSpace(n, tuple(tuple(r) for r in dist))


def metric_from_ints(rows: Sequence[Sequence[int]]) -> MetricSpace:
    """Shorthand for validate_metric on an integer table."""
    return validate_metric(rows)


def _check_point(S: MetricSpace, p: int) -> None:
    if not 0 <= p < S.n:
        raise IndexOutOfRange(p, S.n)


def _check_pair(S: MetricSpace, u: int, v: int) -> None:
    _check_point(S, u)
    _check_point(S, v)
    if u == v:
        raise DegeneratePair(u)


def between(S: MetricSpace, a: int, b: int, c: int) -> bool:
    """True when b lies between a and c: all distinct and d(a,b)+d(b,c)==d(a,c)."""
    for p in (a, b, c):
        _check_point(S, p)
    if a == b or b == c or a == c:
        return False
    return S.dist[a][b] + S.dist[b][c] == S.dist[a][c]


def line_of(S: MetricSpace, u: int, v: int) -> Line:
    """The line through the pair u, v.

    It contains u and v, every p with [puv], every p with [upv], and every
    p with [uvp].
    """
    _check_pair(S, u, v)
    d = S.dist
    duv = d[u][v]
    pts = {u, v}
    for p in range(S.n):
        if p == u or p == v:
            continue
        dpu, dpv = d[p][u], d[p][v]
        if dpu + duv == dpv or dpu + dpv == duv or duv + dpv == dpu:
            pts.add(p)
    key = (u, v) if u < v else (v, u)
    return Line(frozenset(pts), frozenset({key}))


def line_family(S: MetricSpace) -> LineFamily:
    """Every distinct line of S, one per distinct point set."""
    if S.n < 2:
        raise TooFewPoints(S.n, 2)
    by_points: dict[frozenset[int], set[tuple[int, int]]] = {}
    pair_count = 0
    for u, v in combinations(range(S.n), 2):
        pair_count += 1
        ln = line_of(S, u, v)
        by_points.setdefault(ln.points, set()).update(ln.generators)
    lines = tuple(
        Line(pts, frozenset(gens))
        for pts, gens in sorted(by_points.items(), key=lambda kv: tuple(sorted(kv[0])))
    )
    return LineFamily(S.n, lines, pair_count)


def extremes(S: MetricSpace) -> tuple[Fraction, Fraction, Fraction]:
    """(smallest distance, largest distance, their ratio) over distinct pairs."""
    if S.n < 2:
        raise TooFewPoints(S.n, 2)
    vals = [S.dist[i][j] for i, j in combinations(range(S.n), 2)]
    lo, hi = min(vals), max(vals)
    return lo, hi, hi / lo


def uniform_space(n: int, c: Fraction | int = 1) -> MetricSpace:
    """All pairwise distances equal to c."""
    c = Fraction(c)
    rows = [[Fraction(0) if i == j else c for j in range(n)] for i in range(n)]
    return validate_metric(rows)
