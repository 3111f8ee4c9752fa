"""Symbolic feasibility conditions on a coefficient set.

Every inequality is expressed once, as a linear form over the symbols
``s, a, y0..y{d+1}, b1..b{d+1}`` normalized to ``form >= 0`` (strict for the
single ``s > a`` comparison).  The exact checker evaluates these forms with
rational arithmetic; the LP builder renders the same forms as constraint rows
with s fixed to 1.  Chain conditions are expanded into their elementary
comparisons, labeled ``(1).1``, ``(1).2``, etc.  Half-integer coefficients
(written 0.5 and d-1.5 in the source inequalities) are the exact rationals
1/2 and (2d-3)/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

HALF = Fraction(1, 2)


class LinExpr:
    """Linear combination of named symbols with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[str, Fraction] = dict(terms) if terms else {}

    @classmethod
    def var(cls, name: str) -> "LinExpr":
        return cls({name: Fraction(1)})

    def __add__(self, other: "LinExpr") -> "LinExpr":
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, Fraction(0)) + v
        return LinExpr({k: v for k, v in terms.items() if v})

    def __sub__(self, other: "LinExpr") -> "LinExpr":
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, Fraction(0)) - v
        return LinExpr({k: v for k, v in terms.items() if v})

    def __mul__(self, k) -> "LinExpr":
        k = Fraction(k)
        if k == 0:
            return LinExpr()
        return LinExpr({name: v * k for name, v in self.terms.items()})

    __rmul__ = __mul__

    def evaluate(self, values: dict[str, Fraction]) -> Fraction:
        return sum((values[name] * coef for name, coef in self.terms.items()),
                   Fraction(0))


@dataclass(frozen=True)
class ConditionRow:
    """One elementary inequality ``expr >= 0`` (``> 0`` when strict)."""

    label: str
    family: int
    text: str
    expr: LinExpr
    strict: bool = False


def variable_names(d: int) -> list[str]:
    """Symbol order used throughout: a, then y0..y{d+1}, then b1..b{d+1}."""
    return (["a"]
            + [f"y{i}" for i in range(d + 2)]
            + [f"b{i}" for i in range(1, d + 2)])


def condition_rows(d: int) -> list[ConditionRow]:
    """All elementary comparisons of the 41 condition families, in order."""
    if d < 4:
        raise ValueError("conditions are defined for d >= 4")
    S = LinExpr.var("s")
    A = LinExpr.var("a")
    Y = [LinExpr.var(f"y{i}") for i in range(d + 2)]
    B = [LinExpr()] + [LinExpr.var(f"b{i}") for i in range(1, d + 2)]

    rows: list[ConditionRow] = []

    def add(label, family, text, expr, strict=False):
        rows.append(ConditionRow(label, family, text, expr, strict))

    # (1)  s > a >= y_{d+1} >= ... >= y_0 >= 0
    k = 1
    add(f"(1).{k}", 1, "s > a", S - A, strict=True)
    k += 1
    add(f"(1).{k}", 1, f"a >= y{d + 1}", A - Y[d + 1])
    for i in range(d, -1, -1):
        k += 1
        add(f"(1).{k}", 1, f"y{i + 1} >= y{i}", Y[i + 1] - Y[i])
    k += 1
    add(f"(1).{k}", 1, "y0 >= 0", Y[0])

    # (2)  0 <= b_{d+1}-b_d <= b_d-b_{d-1} <= ... <= b_2-b_1 <= b_1
    db = lambda i: B[i] - B[i - 1]
    k = 1
    add(f"(2).{k}", 2, f"b{d + 1} - b{d} >= 0", db(d + 1))
    for i in range(d, 1, -1):
        k += 1
        add(f"(2).{k}", 2, f"b{i} - b{i - 1} >= b{i + 1} - b{i}", db(i) - db(i + 1))
    k += 1
    add(f"(2).{k}", 2, "b1 >= b2 - b1", B[1] - db(2))

    # (3)  0 <= y_{d+1}-b_{d+1} <= y_d-b_d <= ... <= y_1-b_1 <= y_0
    e = lambda i: Y[i] - B[i]
    k = 1
    add(f"(3).{k}", 3, f"y{d + 1} - b{d + 1} >= 0", e(d + 1))
    for i in range(d, 0, -1):
        k += 1
        add(f"(3).{k}", 3, f"y{i} - b{i} >= y{i + 1} - b{i + 1}", e(i) - e(i + 1))
    k += 1
    add(f"(3).{k}", 3, "y0 >= y1 - b1", Y[0] - e(1))

    # (4)-(8)  upper caps; stored as margin = RHS - LHS >= 0
    gap = S - A
    add("(4)", 4, f"y{d + 1} <= a - (s-a)/{d + 2}",
        A - Fraction(1, d + 2) * gap - Y[d + 1])
    add("(5)", 5, f"y{d} <= a - (s-a)/{d + 1}",
        A - Fraction(1, d + 1) * gap - Y[d])
    add("(6)", 6, f"b{d + 1} <= a - (s-a)/{d + 3} - (s-a)/{d + 1}",
        A - Fraction(1, d + 3) * gap - Fraction(1, d + 1) * gap - B[d + 1])
    add("(7)", 7, f"b{d} <= a - (s-a)/{d + 2} - (s-a)/{d + 1}",
        A - Fraction(1, d + 2) * gap - Fraction(1, d + 1) * gap - B[d])
    add("(8)", 8, f"b{d - 1} <= a - 2(s-a)/{d + 1}",
        A - Fraction(2, d + 1) * gap - B[d - 1])

    # (9)-(35)  fixed lower bounds against s
    fixed = [
        (9, f"a + {d}(a - y{d - 1}) >= s",
         A + d * (A - Y[d - 1])),
        (10, f"a + {d}(y{d + 1} - b{d}) >= s",
         A + d * (Y[d + 1] - B[d])),
        (11, f"y{d + 1} + {d + 1}(a - y{d - 2}) >= s",
         Y[d + 1] + (d + 1) * (A - Y[d - 2])),
        (12, f"y{d + 1} + {d + 1}(y{d + 1} - b{d}) >= s",
         Y[d + 1] + (d + 1) * (Y[d + 1] - B[d])),
        (13, f"a + {d - 1}(a - y{d - 2}) >= s",
         A + (d - 1) * (A - Y[d - 2])),
        (14, f"a + {d - 1}(y{d} - b{d - 1}) >= s",
         A + (d - 1) * (Y[d] - B[d - 1])),
        (15, f"y{d} + {d}(a - y{d - 3}) >= s",
         Y[d] + d * (A - Y[d - 3])),
        (16, f"y{d} + {d}(y{d} - b{d - 1}) >= s",
         Y[d] + d * (Y[d] - B[d - 1])),
        (17, f"b{d + 1} + {d + 1}(a - y{d - 2}) >= s",
         B[d + 1] + (d + 1) * (A - Y[d - 2])),
        (18, f"b{d + 1} + {d + 1}(y{d - 1} - b{d - 1}) >= s",
         B[d + 1] + (d + 1) * (Y[d - 1] - B[d - 1])),
        (19, f"a + {d - 1}(b3 - b2) + (y2 - b1) + {d - 3}(b3 - b2) >= s",
         A + (d - 1) * (B[3] - B[2]) + (Y[2] - B[1]) + (d - 3) * (B[3] - B[2])),
        (20, f"y2 + {d - 3}(b3 - b2) + 2(y2 - b1 + {d - 3}(b3 - b2)) >= s",
         Y[2] + (d - 3) * (B[3] - B[2])
         + 2 * (Y[2] - B[1] + (d - 3) * (B[3] - B[2]))),
        (21, f"a + b3/2 + ({2 * d - 3}/2)(b3 - b2) + (a - y1) >= s",
         A + HALF * B[3] + (d - Fraction(3, 2)) * (B[3] - B[2]) + (A - Y[1])),
        (22, f"a + b3/2 + ({2 * d - 3}/2)(b3 - b2) + (y1 - b1 + {d - 3}(b3 - b2)) >= s",
         A + HALF * B[3] + (d - Fraction(3, 2)) * (B[3] - B[2])
         + (Y[1] - B[1] + (d - 3) * (B[3] - B[2]))),
        (23, f"3a/2 + b3/2 - y0/2 + {d - 2}(b2 - b1) >= s",
         Fraction(3, 2) * A + HALF * B[3] - HALF * Y[0] + (d - 2) * (B[2] - B[1])),
        (24, f"a + b3/2 + y1/2 - b1/2 + {d - 2}(b2 - b1) + ({d - 3}/2)(b3 - b2) >= s",
         A + HALF * B[3] + HALF * Y[1] - HALF * B[1]
         + (d - 2) * (B[2] - B[1]) + HALF * (d - 3) * (B[3] - B[2])),
        (25, f"3a/2 + b3 + ({d - 3}/2)(b3 - b1) + ({d - 2}/2)(b3 - b2) >= s",
         Fraction(3, 2) * A + B[3]
         + HALF * (d - 3) * (B[3] - B[1]) + HALF * (d - 2) * (B[3] - B[2])),
        (26, f"a + b3 + y1/2 - b1/2 + ({d - 3}/2)(b3 - b1) + ({d - 4}/2)(b3 - b2) >= s",
         A + B[3] + HALF * Y[1] - HALF * B[1]
         + HALF * (d - 3) * (B[3] - B[1]) + HALF * (d - 4) * (B[3] - B[2])),
        (27, "b3 + 3(a - y0) >= s",
         B[3] + 3 * (A - Y[0])),
        (28, f"b3 + 3(y1 - b1 + {d - 3}(b3 - b2)) >= s",
         B[3] + 3 * (Y[1] - B[1] + (d - 3) * (B[3] - B[2]))),
        (29, f"2y1 + 2*{d - 2}(b2 - b1) >= s",
         2 * Y[1] + 2 * (d - 2) * (B[2] - B[1])),
        (30, f"a + b2/2 + ({2 * d - 3}/2)(b2 - b1) + (a - y1)/2 >= s",
         A + HALF * B[2] + (d - Fraction(3, 2)) * (B[2] - B[1]) + HALF * (A - Y[1])),
        (31, f"a + b2/2 + ({2 * d - 3}/2)(b2 - b1) + (y1 - b1 + {d - 3}(b2 - b1))/2 >= s",
         A + HALF * B[2] + (d - Fraction(3, 2)) * (B[2] - B[1])
         + HALF * (Y[1] - B[1] + (d - 3) * (B[2] - B[1]))),
        (32, f"a + ({d - 1}/2)b2 >= s",
         A + HALF * (d - 1) * B[2]),
        (33, f"b2 + 2y0 + 2*{d - 2}(b2 - b1) >= s",
         B[2] + 2 * Y[0] + 2 * (d - 2) * (B[2] - B[1])),
        (34, f"b2 + y0 + {d - 2}(b2 - b1) + (a - y0) >= s",
         B[2] + Y[0] + (d - 2) * (B[2] - B[1]) + (A - Y[0])),
        (35, f"y0 + {d - 1}b1 >= s",
         Y[0] + (d - 1) * B[1]),
    ]
    for num, text, lhs in fixed:
        add(f"({num})", num, text, lhs - S)

    # (36)-(41)  instantiated for every 2 <= i <= d-2
    for i in range(2, d - 1):
        bgap = B[i + 2] - B[i + 1]
        fam = [
            (36, f"a + {d - i}(b{i + 2} - b{i + 1}) + {i}(a - y{i - 1}) >= s",
             A + (d - i) * bgap + i * (A - Y[i - 1])),
            (37, f"a + {d - i}(b{i + 2} - b{i + 1})"
                 f" + {i}(y{i + 1} - b{i} + {d - i - 2}(b{i + 2} - b{i + 1})) >= s",
             A + (d - i) * bgap + i * (Y[i + 1] - B[i] + (d - i - 2) * bgap)),
            (38, f"y{i + 1} + {d - i - 2}(b{i + 2} - b{i + 1})"
                 f" + {i + 1}(a - y{i - 2}) >= s",
             Y[i + 1] + (d - i - 2) * bgap + (i + 1) * (A - Y[i - 2])),
            (39, f"y{i + 1} + {d - i - 2}(b{i + 2} - b{i + 1})"
                 f" + {i + 1}(y{i + 1} - b{i} + {d - i - 2}(b{i + 2} - b{i + 1})) >= s",
             Y[i + 1] + (d - i - 2) * bgap
             + (i + 1) * (Y[i + 1] - B[i] + (d - i - 2) * bgap)),
            (40, f"b{i + 2} + {i + 2}(a - y{i - 1}) >= s",
             B[i + 2] + (i + 2) * (A - Y[i - 1])),
            (41, f"b{i + 2} + {i + 2}(y{i} - b{i} + {d - i - 2}(b{i + 2} - b{i + 1})) >= s",
             B[i + 2] + (i + 2) * (Y[i] - B[i] + (d - i - 2) * bgap)),
        ]
        for num, text, lhs in fam:
            add(f"({num}) i={i}", num, text, lhs - S)

    return rows


FAMILY_COUNT = 41
