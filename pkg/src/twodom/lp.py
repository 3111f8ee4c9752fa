"""Bound optimization: assemble the feasibility system as an LP with s = 1,
minimize a exactly, and evaluate the probabilistic reference bound.

The solver runs a float presolve to locate an optimal basis, then recovers
the vertex exactly in rational arithmetic and certifies it with an exact
dual solution (feasibility, dual feasibility, and strong duality are all
checked in Fractions).  If certification fails it falls back to a fully
exact Bland-rule simplex.  Either way the reported optimum satisfies every
constraint exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .conditions import condition_rows, variable_names
from .simplex import OPTIMAL, simplex_min, solve_square_exact
from .weights import CoefficientSet, builtin_coefficients, check_conditions


@dataclass(frozen=True)
class LinearConstraint:
    """One LP row: sum(coeffs[v] * v) relation rhs."""

    coeffs: dict[str, Fraction]
    relation: str  # ">=", "<=", "="
    rhs: Fraction
    label: str

    def evaluate(self, values: dict[str, Fraction]) -> Fraction:
        return sum((values[k] * v for k, v in self.coeffs.items()), Fraction(0))

    def satisfied(self, values: dict[str, Fraction]) -> bool:
        lhs = self.evaluate(values)
        if self.relation == ">=":
            return lhs >= self.rhs
        if self.relation == "<=":
            return lhs <= self.rhs
        return lhs == self.rhs


@dataclass(frozen=True)
class LpSolution:
    d: int
    status: str
    objective: Fraction | None
    assignment: dict[str, Fraction]
    verified: bool
    method: str  # "presolve+certify" or "exact-simplex"


def build_constraints(d: int) -> list[LinearConstraint]:
    """All condition rows rendered as LP constraints with s fixed to 1.

    Denominators are cleared row by row (scaling by a positive integer keeps
    the feasible set).  The single strict comparison s > a is rendered as
    a <= 1; strictness is re-verified at the optimum.  Non-negativity rows
    close the list.
    """
    if d < 6:
        raise ValueError("the bound LP is built for d >= 6")
    out = []
    for row in condition_rows(d):
        if row.strict:
            out.append(LinearConstraint({"a": Fraction(1)}, "<=", Fraction(1),
                                        row.label))
            continue
        coeffs = {k: v for k, v in row.expr.terms.items() if k != "s"}
        rhs = -row.expr.terms.get("s", Fraction(0))
        scale = math.lcm(*[v.denominator for v in coeffs.values()],
                         rhs.denominator)
        coeffs = {k: v * scale for k, v in coeffs.items()}
        out.append(LinearConstraint(coeffs, ">=", rhs * scale, row.label))
    for name in variable_names(d):
        out.append(LinearConstraint({name: Fraction(1)}, ">=", Fraction(0),
                                    f"nonneg {name}"))
    return out


def _dense_ge_system(d: int):
    """Constraints as a dense matrix in the orientation G x >= h.

    Single-variable non-negativity rows are left out of the matrix (the
    simplex treats x >= 0 implicitly); they are still part of
    build_constraints for external consumers.
    """
    names = variable_names(d)
    index = {name: j for j, name in enumerate(names)}
    G, h, labels = [], [], []
    for con in build_constraints(d):
        if con.label.startswith("nonneg"):
            continue
        dense = [Fraction(0)] * len(names)
        for k, v in con.coeffs.items():
            dense[index[k]] = v
        if con.relation == ">=":
            G.append(dense)
            h.append(con.rhs)
        elif con.relation == "<=":
            G.append([-v for v in dense])
            h.append(-con.rhs)
        else:
            G.append(dense)
            h.append(con.rhs)
            G.append([-v for v in dense])
            h.append(-con.rhs)
        labels.append(con.label)
    return names, G, h


def _certify_basis(G, h, c, basis, nv):
    """Exact vertex + exact dual certificate from a float simplex basis.

    Returns the exact primal solution when the basis reproduces a feasible
    point that is provably optimal (strong duality in Fractions), else None.
    """
    m = len(G)
    basic = set(basis)
    tight = [i for i in range(m) if (nv + i) not in basic]
    free = [j for j in range(nv) if j in basic]
    zero_vars = [j for j in range(nv) if j not in basic]
    if len(tight) != len(free):
        return None
    sys_rows = [[G[i][j] for j in free] for i in tight]
    xf = solve_square_exact(sys_rows, [h[i] for i in tight])
    if xf is None:
        return None
    x = [Fraction(0)] * nv
    for j, val in zip(free, xf):
        x[j] = val
    if any(v < 0 for v in x):
        return None
    for i in range(m):
        if sum(G[i][j] * x[j] for j in range(nv) if G[i][j]) < h[i]:
            return None
    # Dual: support on tight rows, reduced cost zero on basic structurals.
    trans = [[G[i][j] for i in tight] for j in free]
    y = solve_square_exact(trans, [c[j] for j in free])
    if y is None or any(v < 0 for v in y):
        return None
    for j in zero_vars:
        reduced = c[j] - sum(yi * G[i][j] for yi, i in zip(y, tight))
        if reduced < 0:
            return None
    primal_obj = sum(c[j] * x[j] for j in range(nv))
    dual_obj = sum(yi * h[i] for yi, i in zip(y, tight))
    if primal_obj != dual_obj:
        return None
    return x


def solve_min_a(d: int) -> LpSolution:
    """Minimize a over the condition system with s = 1, exactly."""
    names, G, h = _dense_ge_system(d)
    nv = len(names)
    c = [Fraction(1) if name == "a" else Fraction(0) for name in names]
    A_ub = [[-v for v in row] for row in G]
    b_ub = [-v for v in h]

    x_exact = None
    method = "presolve+certify"
    float_res = simplex_min([float(v) for v in c],
                            [[float(v) for v in row] for row in A_ub],
                            [float(v) for v in b_ub],
                            exact=False, rule="dantzig")
    if float_res.status == OPTIMAL:
        x_exact = _certify_basis(G, h, c, float_res.basis, nv)

    if x_exact is None:
        method = "exact-simplex"
        res = simplex_min(c, A_ub, b_ub, exact=True, rule="bland")
        if res.status != OPTIMAL:
            return LpSolution(d, res.status, None, {}, False, method)
        x_exact = res.x

    assignment = dict(zip(names, x_exact))
    objective = assignment["a"]
    verified = _verify_solution(d, assignment)
    return LpSolution(d, OPTIMAL, objective, assignment, verified, method)


def _verify_solution(d: int, assignment: dict[str, Fraction]) -> bool:
    """Exact row-by-row re-check plus the full condition checker with the
    strict comparison honored (the optimum must keep a strictly below 1)."""
    values = dict(assignment)
    values["s"] = Fraction(1)
    for con in build_constraints(d):
        if con.label == "(1).1":
            if not assignment["a"] < 1:
                return False
            continue
        if not con.satisfied(values):
            return False
    coeff = CoefficientSet(
        d, Fraction(1), assignment["a"],
        tuple(assignment[f"y{i}"] for i in range(d + 2)),
        tuple([Fraction(0)] + [assignment[f"b{i}"] for i in range(1, d + 2)]),
    )
    return check_conditions(coeff).overall


def solution_coefficients(sol: LpSolution) -> CoefficientSet:
    """Transport an optimal LP assignment into a coefficient set (s = 1)."""
    if sol.status != OPTIMAL:
        raise ValueError("no optimal assignment to transport")
    d = sol.d
    return CoefficientSet(
        d, Fraction(1), sol.assignment["a"],
        tuple(sol.assignment[f"y{i}"] for i in range(d + 2)),
        tuple([Fraction(0)] + [sol.assignment[f"b{i}"] for i in range(1, d + 2)]),
    )


class ReferenceBound(NamedTuple):
    value: float  # with the 0.5 cap applied for minimum degree >= 3
    raw: float    # the bare formula value


def reference_bound(delta: int) -> ReferenceBound:
    """Probabilistic reference bound (2 ln(delta+1) + 1) / (delta+1).

    For minimum degree at least 3 the 0.5 bound applies as well, so the
    reported value is capped there; the raw formula value is kept alongside.
    """
    if delta < 0:
        raise ValueError("minimum degree must be non-negative")
    raw = (2 * math.log(delta + 1) + 1) / (delta + 1)
    value = min(raw, 0.5) if delta >= 3 else raw
    return ReferenceBound(value, raw)


# Published target ratios for the built-in coefficient columns, used by the
# verify-corollary check.
COROLLARY_RATIOS = {
    6: Fraction(456883, 918298),
    7: Fraction(140835095, 301690439),
    8: Fraction(292954593, 665571713),
    9: Fraction(60805963517, 145812382205),
}


def corollary_fractions() -> list[tuple[int, Fraction]]:
    """Reduced a/s for each built-in coefficient column."""
    return [(delta, builtin_coefficients(delta).ratio) for delta in sorted(COROLLARY_RATIOS)]


def verify_corollary() -> list[tuple[int, Fraction, Fraction, bool]]:
    """(delta, computed, expected, match) for each built-in column."""
    out = []
    for delta, got in corollary_fractions():
        want = COROLLARY_RATIOS[delta]
        out.append((delta, got, want, got == want))
    return out
