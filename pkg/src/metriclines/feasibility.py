"""Deciding whether a triple system is the betweenness relation of a metric.

Each edge {a,b,c} asserts that one of its vertices sits metrically between
the other two, so a candidate metric must satisfy one of three equalities
per edge.  Enumerating a middle per edge leaves, per assignment, a linear
feasibility problem over the pair distances: the chosen equalities, all
three strict triangle inequalities on every non-edge triple, strict
positivity, and an upper cap that removes scale freedom.  Strictness is
bought with a shared margin variable that gets maximized; the assignment
is feasible exactly when the optimal margin is positive.

Branches are decided exactly.  A cheap presolve first looks for a cycle in
the forced strict orderings (the outer pair of an edge must exceed both
inner pairs); a cycle certifies margin 0 without touching the simplex.
The remaining branches are eliminated down to their free coordinates and
handed to the integer-pivoting solver.  Branch order is the base-3 counter
over the sorted edge list (edge 0 in the least significant digit), and the
first feasible branch supplies the witness, so results never depend on how
the work is scheduled.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from .errors import BadParams, SolverFailure, TooFewPoints, TooManyAssignments
from .lp import maximize_scaled
from .metric import MetricSpace, validate_metric
from .triples import TripleSystem, betweenness_triples

_DEFAULT_EDGE_CAP = 12
_POOL_THRESHOLD = 243
_CHUNK = 243


@dataclass(frozen=True)
class FeasibilityResult:
    metrizable: bool
    witness: MetricSpace | None
    assignments_tried: int
    best_margin: Fraction


def worker_count() -> int:
    """Worker cap from METRIC_LINES_THREADS, defaulting to the machine's."""
    raw = os.environ.get("METRIC_LINES_THREADS", "").strip()
    if raw:
        try:
            k = int(raw)
        except ValueError:
            raise BadParams(f"METRIC_LINES_THREADS must be an integer, got {raw!r}")
        if k < 1:
            raise BadParams("METRIC_LINES_THREADS must be at least 1")
        return k
    return os.cpu_count() or 1


@dataclass(frozen=True)
class _Problem:
    n: int
    cap: Fraction
    edges: tuple[tuple[int, int, int], ...]


def _pairs(n: int) -> tuple[list[tuple[int, int]], dict[tuple[int, int], int]]:
    ps = list(combinations(range(n), 2))
    return ps, {p: i for i, p in enumerate(ps)}


def _edge_options(
    prob: _Problem, pidx: dict[tuple[int, int], int]
) -> list[tuple[tuple[int, int, int], ...]]:
    """Per edge, per digit: pair indices (inner1, inner2, outer) for the middle choice."""
    opts = []
    for a, b, c in prob.edges:
        per_digit = []
        for mid in (a, b, c):
            p, q = sorted({a, b, c} - {mid})
            i1 = pidx[tuple(sorted((p, mid)))]
            i2 = pidx[tuple(sorted((mid, q)))]
            out = pidx[(p, q)]
            per_digit.append((i1, i2, out))
        opts.append(tuple(per_digit))
    return opts


def _ordering_cycle(choices: list[tuple[int, int, int]]) -> bool:
    """Does the forced 'outer > inner' relation contain a cycle?

    Each chosen equality d(p,q) = d(p,m) + d(m,q) forces d(p,q) strictly
    above both summands once all distances must stay >= the margin, so a
    cycle proves the margin cannot be positive.
    """
    arcs: dict[int, list[int]] = {}
    for i1, i2, out in choices:
        arcs.setdefault(out, []).append(i1)
        arcs[out].append(i2)
    color: dict[int, int] = {}
    for start in arcs:
        if color.get(start, 0):
            continue
        stack = [(start, iter(arcs.get(start, ())))]
        color[start] = 1
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                c = color.get(nxt, 0)
                if c == 1:
                    return True
                if c == 0:
                    color[nxt] = 1
                    stack.append((nxt, iter(arcs.get(nxt, ()))))
                    advanced = True
                    break
            if not advanced:
                color[node] = 2
                stack.pop()
    return False


def _eliminate(
    npairs: int, eq_rows: list[list[int]]
) -> tuple[list[int], list[list[Fraction]]]:
    """Reduce the homogeneous equalities, expressing every pair over free pairs.

    Returns the free pair indices and, for each pair, its coefficient
    vector over the free pairs.  Outer-pair columns are preferred as pivots
    so that expressions tend to stay nonnegative combinations.
    """
    rows = [[Fraction(v) for v in r] for r in eq_rows]
    pivots: dict[int, list[Fraction]] = {}
    for row in rows:
        for col, prow in pivots.items():
            f = row[col]
            if f:
                for j in range(npairs):
                    row[j] -= f * prow[j]
        col = -1
        for j in range(npairs - 1, -1, -1):
            if row[j] < 0:
                col = j
                break
        if col < 0:
            for j in range(npairs):
                if row[j]:
                    col = j
                    break
        if col < 0:
            continue  # redundant equality
        piv = row[col]
        prow = [v / piv for v in row]
        for other_col, other in pivots.items():
            f = other[col]
            if f:
                for j in range(npairs):
                    other[j] -= f * prow[j]
        pivots[col] = prow
    free = [j for j in range(npairs) if j not in pivots]
    fpos = {j: k for k, j in enumerate(free)}
    exprs: list[list[Fraction]] = []
    zero = Fraction(0)
    for p in range(npairs):
        if p in fpos:
            vec = [zero] * len(free)
            vec[fpos[p]] = Fraction(1)
        else:
            prow = pivots[p]
            vec = [-prow[j] for j in free]
        exprs.append(vec)
    return free, exprs


def _decide_branch(
    prob: _Problem,
    opts: list[tuple[tuple[int, int, int], ...]],
    pairs: list[tuple[int, int]],
    pidx: dict[tuple[int, int], int],
    nonedge: list[tuple[int, int, int]],
    assignment: int,
) -> tuple[Fraction, list[Fraction] | None]:
    """Optimal margin of one middle assignment, plus distances when positive."""
    m = len(prob.edges)
    choices = []
    a = assignment
    for k in range(m):
        choices.append(opts[k][a % 3])
        a //= 3
    zero = Fraction(0)
    if _ordering_cycle(choices):
        return zero, None

    npairs = len(pairs)
    eq_rows = []
    for i1, i2, out in choices:
        row = [0] * npairs
        row[i1] += 1
        row[i2] += 1
        row[out] -= 1
        eq_rows.append(row)
    free, fexprs = _eliminate(npairs, eq_rows)
    k = len(free)

    # scale every expression by one common denominator so all the rows the
    # solver sees are integers from the start
    scale = 1
    for vec in fexprs:
        for v in vec:
            scale = scale * v.denominator // gcd(scale, v.denominator)
    exprs = [[int(v * scale) for v in vec] for vec in fexprs]

    # substitute z_f = x_f - margin:  x_p = sum_f C_pf z_f + S_p * margin
    # with S_p = sum_f C_pf, so z >= 0 absorbs the free positivity rows
    sums = [sum(vec) for vec in exprs]

    M: list[list[int]] = []
    b: list[int] = []
    seen: set[tuple[int, ...]] = set()

    def add(vec: list[int], rhs: int) -> None:
        key = (*vec, rhs)
        if key not in seen:
            seen.add(key)
            M.append(vec)
            b.append(rhs)

    def margin_row(expr: list[int], s: int) -> bool:
        """Require expr + s*margin >= margin.  False when that sinks the branch."""
        ecoef = scale - s
        if not any(expr):
            return ecoef <= 0  # constant slack: either trivial or margin <= 0
        if ecoef <= 0 and all(v >= 0 for v in expr):
            return True  # nonnegative left side, nothing to enforce
        add([-v for v in expr] + [ecoef], 0)
        return True

    for p in range(npairs):
        if not margin_row(exprs[p], sums[p]):
            return zero, None
    for a3, b3, c3 in nonedge:
        lo = pidx[(a3, b3)]
        hi = pidx[(b3, c3)]
        far = pidx[(a3, c3)]
        for i1, i2, i3 in ((lo, hi, far), (lo, far, hi), (far, hi, lo)):
            e1, e2, e3 = exprs[i1], exprs[i2], exprs[i3]
            expr = [x + y - w for x, y, w in zip(e1, e2, e3)]
            if not margin_row(expr, sums[i1] + sums[i2] - sums[i3]):
                return zero, None
    cp, cq = prob.cap.numerator, prob.cap.denominator
    for p in range(npairs):
        expr = exprs[p]
        s = sums[p]
        if s <= 0 and not any(v > 0 for v in expr):
            continue  # cannot exceed the cap
        add([cq * v for v in expr] + [cq * s], cp * scale)

    objective = [0] * k + [1]
    sol = maximize_scaled(objective, M, b)
    if sol.value <= 0:
        return sol.value, None
    eps = sol.value
    zfree = sol.x[:k]
    dists = [
        Fraction(
            sum(c * zfree[j] for j, c in enumerate(exprs[p]) if c) + sums[p] * eps,
            scale,
        )
        for p in range(npairs)
    ]
    return sol.value, dists


def _scan_chunk(
    prob: _Problem, start: int, stop: int
) -> tuple[int | None, Fraction, list[Fraction] | None]:
    """Decide assignments [start, stop): first feasible index, best margin, distances."""
    pairs, pidx = _pairs(prob.n)
    opts = _edge_options(prob, pidx)
    eset = set(prob.edges)
    nonedge = [t for t in combinations(range(prob.n), 3) if t not in eset]
    best = Fraction(0)
    for a in range(start, stop):
        margin, dists = _decide_branch(prob, opts, pairs, pidx, nonedge, a)
        if margin > best:
            best = margin
        if dists is not None:
            return a, best, dists
    return None, best, None


def _witness_from(prob: _Problem, dists: list[Fraction]) -> MetricSpace:
    pairs, _ = _pairs(prob.n)
    table = [[Fraction(0)] * prob.n for _ in range(prob.n)]
    for (i, j), d in zip(pairs, dists):
        table[i][j] = table[j][i] = d
    space = validate_metric(table)
    if betweenness_triples(space).edges != frozenset(prob.edges):
        raise SolverFailure("witness failed the betweenness round trip")
    return space


def metrizable(
    T: TripleSystem,
    normalization_cap: Fraction | int = 1,
    max_edges: int = _DEFAULT_EDGE_CAP,
) -> FeasibilityResult:
    """Decide whether some metric space induces exactly these triples.

    Tries every per-edge middle assignment in base-3 counter order until
    one admits a metric; the witness comes from the first feasible branch
    and is verified by recomputing its betweenness triples.
    """
    if T.n < 3:
        raise TooFewPoints(T.n, 3)
    cap = Fraction(normalization_cap)
    if cap <= 0:
        raise BadParams("normalization_cap must be positive")
    edges = T.sorted_edges()
    if len(edges) > max_edges:
        raise TooManyAssignments(len(edges), max_edges)
    prob = _Problem(T.n, cap, edges)
    total = 3 ** len(edges)

    nworkers = worker_count()
    if nworkers > 1 and total >= _POOL_THRESHOLD:
        return _run_pooled(prob, total, nworkers)

    first, best, dists = _scan_chunk(prob, 0, total)
    if first is None:
        return FeasibilityResult(False, None, total, best)
    return FeasibilityResult(True, _witness_from(prob, dists), first + 1, best)


def _run_pooled(prob: _Problem, total: int, nworkers: int) -> FeasibilityResult:
    spans = [(s, min(s + _CHUNK, total)) for s in range(0, total, _CHUNK)]
    best = Fraction(0)
    with ProcessPoolExecutor(max_workers=nworkers) as pool:
        futures = [pool.submit(_scan_chunk, prob, s, e) for s, e in spans]
        for fut in futures:
            first, chunk_best, dists = fut.result()
            if chunk_best > best:
                best = chunk_best
            if first is not None:
                for later in futures:
                    later.cancel()
                return FeasibilityResult(
                    True, _witness_from(prob, dists), first + 1, best
                )
    return FeasibilityResult(False, None, total, best)
