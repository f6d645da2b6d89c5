"""Exact linear programming over the rationals.

maximize() solves  max c.x  subject to  A.x <= b, x >= 0  with b >= 0, so
the slack basis is feasible and no phase-1 is needed.  That restricted form
is all the feasibility reductions here generate.

The solver keeps the simplex dictionary as an integer matrix with one
shared denominator and pivots fraction-free (the two-term Bareiss update),
which avoids Fraction overhead in the hot loop.  Entering columns follow
Dantzig's rule until the iteration stalls on degenerate pivots, then switch
to Bland's rule, which cannot cycle.  Everything is exact; the result is
reported in Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import SolverFailure

_STALL_LIMIT = 30


@dataclass(frozen=True)
class SimplexSolution:
    value: Fraction
    x: tuple[Fraction, ...]


def _scale_row(coeffs: Sequence[Fraction], rhs: Fraction | None) -> tuple[list[int], int | None]:
    """Clear denominators of one row (and rhs) by its positive lcm."""
    dens = [c.denominator for c in coeffs]
    if rhs is not None:
        dens.append(rhs.denominator)
    mul = lcm(*dens) if dens else 1
    ints = [int(c * mul) for c in coeffs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if rhs is not None:
        r = int(rhs * mul)
        g = gcd(g, r)
        if g > 1:
            ints = [v // g for v in ints]
            r //= g
        return ints, r
    if g > 1:
        ints = [v // g for v in ints]
    return ints, None


def maximize(
    objective: Sequence[Fraction | int],
    rows: Sequence[tuple[Sequence[Fraction | int], Fraction | int]],
    max_pivots: int = 100_000,
) -> SimplexSolution:
    """Solve max c.x s.t. A.x <= b, x >= 0, where every b entry is >= 0."""
    c = [Fraction(v) for v in objective]
    nvars = len(c)

    obj_ints, _ = _scale_row(c, None)
    obj_mul = Fraction(1)
    for orig, scaled in zip(c, obj_ints):
        if orig != 0:
            obj_mul = Fraction(scaled) / orig
            break

    M: list[list[int]] = []
    b: list[int] = []
    for coeffs, rhs in rows:
        fr = [Fraction(v) for v in coeffs]
        if len(fr) != nvars:
            raise SolverFailure("row width does not match objective")
        ints, r = _scale_row(fr, Fraction(rhs))
        M.append(ints)
        b.append(r)  # type: ignore[arg-type]
    sol = maximize_scaled(obj_ints, M, b, max_pivots)
    return SimplexSolution(sol.value / obj_mul, sol.x)


def maximize_scaled(
    obj_ints: Sequence[int],
    M: list[list[int]],
    b: list[int],
    max_pivots: int = 100_000,
) -> SimplexSolution:
    """maximize() for callers that already hold integer rows.

    M and b are consumed (mutated in place).  The objective is used as
    given, so the reported value is exact for these coefficients.
    """
    nvars = len(obj_ints)
    m = len(M)
    if any(r < 0 for r in b):
        raise SolverFailure("negative rhs; slack basis would be infeasible")

    # dictionary: basic[i] = (b[i] - sum_j M[i][j] * y_j) / den
    # objective row stores z = (zb - sum_j zrow[j] * y_j) / den
    zrow = [-v for v in obj_ints]
    zb = 0
    den = 1

    nonbasic = list(range(nvars))          # column labels
    basic = [nvars + i for i in range(m)]  # row labels (slacks)

    stall = 0
    pivots = 0
    while True:
        if pivots > max_pivots:
            raise SolverFailure("pivot limit exceeded")
        use_bland = stall >= _STALL_LIMIT
        col = -1
        if use_bland:
            lab = None
            for j in range(nvars):
                if zrow[j] < 0 and (lab is None or nonbasic[j] < lab):
                    lab, col = nonbasic[j], j
        else:
            best = 0
            for j in range(nvars):
                if zrow[j] < best:
                    best, col = zrow[j], j
        if col < 0:
            break  # optimal

        # ratio test: min b[i]/M[i][col] over positive entries, exact
        row = -1
        rb = rc = 0
        for i in range(m):
            a = M[i][col]
            if a <= 0:
                continue
            bi = b[i]
            if row < 0 or bi * rc < rb * a or (
                bi * rc == rb * a
                and (use_bland and basic[i] < basic[row])
            ):
                row, rb, rc = i, bi, a
        if row < 0:
            raise SolverFailure("objective unbounded")

        p = M[row][col]
        degenerate = b[row] == 0
        mrow = M[row]
        br = b[row]
        same_den = p == den
        for i in range(m):
            if i == row:
                continue
            ai = M[i]
            f = ai[col]
            if f:
                ai[:] = [(x * p - f * y) // den for x, y in zip(ai, mrow)]
                ai[col] = -f
                b[i] = (b[i] * p - f * br) // den
            elif not same_den:
                ai[:] = [x * p // den for x in ai]
                b[i] = b[i] * p // den
        f = zrow[col]
        if f:
            zrow = [(x * p - f * y) // den for x, y in zip(zrow, mrow)]
            zrow[col] = -f
            zb = (zb * p - f * br) // den
        elif not same_den:
            zrow = [x * p // den for x in zrow]
            zb = zb * p // den
        mrow[col] = den
        basic[row], nonbasic[col] = nonbasic[col], basic[row]
        den = p
        pivots += 1
        stall = stall + 1 if degenerate else 0

    xs = [Fraction(0)] * nvars
    for i in range(m):
        if basic[i] < nvars:
            xs[basic[i]] = Fraction(b[i], den)
    return SimplexSolution(Fraction(zb, den), tuple(xs))
