"""Exception types shared across the package.

Everything raised on purpose derives from MetricLinesError, so callers can
catch one base class.  Validation errors carry the offending indices as
attributes and in a predictable order (the order in which the checks scan
the input), which the tests rely on.
"""

from __future__ import annotations


class MetricLinesError(Exception):
    pass


class AsymmetryError(MetricLinesError):
    """dist[i][j] != dist[j][i] for the first such pair (i < j)."""

    def __init__(self, i: int, j: int):
        self.i, self.j = i, j
        super().__init__(f"dist[{i}][{j}] != dist[{j}][{i}]")


class NonzeroDiagonal(MetricLinesError):
    def __init__(self, i: int):
        self.i = i
        super().__init__(f"dist[{i}][{i}] is not zero")


class NonpositiveDistance(MetricLinesError):
    def __init__(self, i: int, j: int):
        self.i, self.j = i, j
        super().__init__(f"dist[{i}][{j}] must be positive")


class TriangleViolation(MetricLinesError):
    """d(i,j) > d(i,k) + d(k,j) for the first violating (i, j, k).

    Pairs (i, j) with i < j are scanned lexicographically, then k ascending.
    """

    def __init__(self, i: int, j: int, k: int):
        self.i, self.j, self.k = i, j, k
        super().__init__(f"d({i},{j}) > d({i},{k}) + d({k},{j})")


class IndexOutOfRange(MetricLinesError):
    def __init__(self, index: int, n: int):
        self.index, self.n = index, n
        super().__init__(f"point {index} out of range for {n} points")


class DegeneratePair(MetricLinesError):
    def __init__(self, u: int):
        self.u = u
        super().__init__(f"pair ({u},{u}) is degenerate; two distinct points required")


class TooFewPoints(MetricLinesError):
    def __init__(self, n: int, need: int):
        self.n, self.need = n, need
        super().__init__(f"need at least {need} points, got {n}")


class XInsideT(MetricLinesError):
    def __init__(self, x: int):
        self.x = x
        super().__init__(f"point {x} must lie outside the given triple")


class ArityMismatch(MetricLinesError):
    def __init__(self, case: str, expected: int, got: int):
        self.case, self.expected, self.got = case, expected, got
        super().__init__(f"case {case} takes {expected} points, got {got}")


class NotOneTwoSpace(MetricLinesError):
    def __init__(self, i: int, j: int):
        self.i, self.j = i, j
        super().__init__(f"d({i},{j}) is neither 1 nor 2")


class DisconnectedGraph(MetricLinesError):
    def __init__(self, u: int, v: int):
        self.u, self.v = u, v
        super().__init__(f"no path between {u} and {v}")


class BadParams(MetricLinesError):
    pass


class PreconditionUnmet(MetricLinesError):
    pass


class SizeCap(MetricLinesError):
    pass


class EmptyUniverse(MetricLinesError):
    pass


class TooManyAssignments(MetricLinesError):
    def __init__(self, m: int, cap: int):
        self.m, self.cap = m, cap
        super().__init__(f"{m} triples means 3**{m} assignments, over the cap of {cap}")


class SolverFailure(MetricLinesError):
    pass


class ParseError(MetricLinesError):
    """Malformed input file.  line and column are 1-based."""

    def __init__(self, source: str, line: int, column: int, message: str):
        self.source, self.line, self.column = source, line, column
        self.message = message
        super().__init__(f"{source}:{line}:{column}: {message}")
