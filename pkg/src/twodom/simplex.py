"""Two-phase simplex over a pluggable number type.

One tableau implementation serves two roles: a fast float pass used as a
presolve to locate the optimal basis, and an exact Fraction pass (eps = 0,
Bland's anti-cycling rule) used when rational certification of a float basis
fails.  Problems are given in the form

    minimize c.x  subject to  A x <= b,  x >= 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"
STALLED = "stalled"


@dataclass
class SimplexResult:
    status: str
    x: list | None
    objective: object | None
    basis: list | None  # basic column per row over [structurals | slacks]


def simplex_min(c, A, b, *, exact: bool, rule: str = "bland",
                max_iter: int = 50_000) -> SimplexResult:
    """Solve min c.x s.t. A x <= b, x >= 0 by the two-phase method.

    exact=True runs on Fractions with exact comparisons; exact=False runs on
    floats with a small tolerance.  ``rule`` picks the entering column:
    "bland" (smallest index, anti-cycling) or "dantzig" (most negative
    reduced cost; intended for the float presolve).
    """
    m, nv = len(A), len(c)
    if exact:
        zero, one, eps = Fraction(0), Fraction(1), Fraction(0)
        conv = Fraction
    else:
        zero, one, eps = 0.0, 1.0, 1e-9
        conv = float

    ncols = nv + m  # structurals then slacks; artificials appended after
    art_rows = {i for i in range(m) if conv(b[i]) < zero}
    n_art = len(art_rows)
    total = ncols + n_art

    rows = []
    basis = []
    art_index = {}
    for i in range(m):
        row = [conv(v) for v in A[i]] + [zero] * (m + n_art) + [conv(b[i])]
        row[nv + i] = one
        if i in art_rows:
            row = [-v for v in row]
            k = len(art_index)
            art_index[i] = ncols + k
            row[ncols + k] = one
            basis.append(ncols + k)
        else:
            basis.append(nv + i)
        rows.append(row)
    art_cols = set(art_index.values())

    def pivot(cost, pi, pj):
        prow = rows[pi]
        piv = prow[pj]
        rows[pi] = prow = [v / piv for v in prow]
        for r in range(m):
            if r != pi:
                f = rows[r][pj]
                if f != zero:
                    rows[r] = [a - f * p for a, p in zip(rows[r], prow)]
        f = cost[pj]
        if f != zero:
            cost[:] = [a - f * p for a, p in zip(cost, prow)]
        basis[pi] = pj

    def run_phase(cost, allowed):
        for _ in range(max_iter):
            enter = -1
            if rule == "dantzig":
                best = -eps
                for j in allowed:
                    if cost[j] < best:
                        best, enter = cost[j], j
            else:
                for j in allowed:
                    if cost[j] < -eps:
                        enter = j
                        break
            if enter < 0:
                return OPTIMAL
            leave = -1
            best_ratio = None
            for i in range(m):
                aij = rows[i][enter]
                if aij > eps:
                    ratio = rows[i][-1] / aij
                    if (best_ratio is None or ratio < best_ratio
                            or (ratio == best_ratio and basis[i] < basis[leave])):
                        best_ratio, leave = ratio, i
            if leave < 0:
                return UNBOUNDED
            pivot(cost, leave, enter)
        return STALLED

    if n_art:
        cost = [zero] * (total + 1)
        for j in art_cols:
            cost[j] = one
        for i in range(m):
            if basis[i] in art_cols:
                cost = [a - r for a, r in zip(cost, rows[i])]
        status = run_phase(cost, range(total))
        if status != OPTIMAL:
            return SimplexResult(status, None, None, None)
        if -cost[-1] > eps:
            return SimplexResult(INFEASIBLE, None, None, None)
        # Degenerate leftovers: pivot artificials out where a real column
        # is available; rows with none are redundant and stay put at zero.
        for i in range(m):
            if basis[i] in art_cols:
                for j in range(ncols):
                    if abs(rows[i][j]) > eps:
                        pivot(cost, i, j)
                        break

    cost = [zero] * (total + 1)
    for j in range(nv):
        cost[j] = conv(c[j])
    for i in range(m):
        bi = basis[i]
        if bi < nv and cost[bi] != zero:
            f = cost[bi]
            cost = [a - f * r for a, r in zip(cost, rows[i])]
    allowed = [j for j in range(ncols) if j not in art_cols]
    status = run_phase(cost, allowed)
    if status != OPTIMAL:
        return SimplexResult(status, None, None, None)

    x = [zero] * nv
    for i in range(m):
        if basis[i] < nv:
            x[basis[i]] = rows[i][-1]
    obj = sum((conv(c[j]) * x[j] for j in range(nv)), zero)
    return SimplexResult(OPTIMAL, x, obj, list(basis))


def solve_square_exact(A, b):
    """Solve the square system A x = b in Fractions; None when singular."""
    n = len(A)
    M = [[Fraction(v) for v in row] + [Fraction(b[i])] for i, row in enumerate(A)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if M[r][col] != 0:
                piv = r
                break
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        prow = M[col]
        inv = Fraction(1) / prow[col]
        M[col] = prow = [v * inv for v in prow]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * p for a, p in zip(M[r], prow)]
    return [M[i][-1] for i in range(n)]
