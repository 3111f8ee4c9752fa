"""Coefficient sets, vertex weight tables, and the exact condition checker.

All arithmetic in this module is exact rational arithmetic via
``fractions.Fraction``; nothing here rounds.  The built-in coefficient
columns are large integers (magnitudes around 10^10 to 10^14), so products
would overflow fixed-width arithmetic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .coloring import Color, ColoredState, StateType
from .conditions import condition_rows, FAMILY_COUNT


def _frac(x) -> Fraction:
    """Accept int, Fraction, or a 'num/den' string."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def frac_str(x: Fraction):
    """JSON-friendly exact form: plain int when integral, else 'num/den'."""
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class CoefficientSet:
    """Weights (s, a, y_0..y_{d+1}, b_0..b_{d+1}) for degree parameter d.

    Entries are non-negative, s is positive, and b_0 is pinned to 0.  Whether
    the full inequality system holds is not an invariant; ask
    check_conditions.
    """

    d: int
    s: Fraction
    a: Fraction
    y: tuple[Fraction, ...]
    b: tuple[Fraction, ...]

    def __post_init__(self):
        if self.d < 4:
            raise ValueError("coefficient sets need d >= 4")
        if self.s <= 0:
            raise ValueError("s must be positive")
        if len(self.y) != self.d + 2 or len(self.b) != self.d + 2:
            raise ValueError(f"y and b must have {self.d + 2} entries (indices 0..d+1)")
        if self.b[0] != 0:
            raise ValueError("b_0 must be 0")
        if self.a < 0 or any(v < 0 for v in self.y) or any(v < 0 for v in self.b):
            raise ValueError("all entries must be non-negative")

    @staticmethod
    def make(d, s, a, y, b) -> "CoefficientSet":
        return CoefficientSet(d, _frac(s), _frac(a),
                              tuple(_frac(v) for v in y),
                              tuple(_frac(v) for v in b))

    @property
    def ratio(self) -> Fraction:
        """The bound coefficient a/s, reduced."""
        return self.a / self.s

    def symbol_values(self) -> dict[str, Fraction]:
        vals = {"s": self.s, "a": self.a}
        for i, v in enumerate(self.y):
            vals[f"y{i}"] = v
        for i, v in enumerate(self.b):
            if i > 0:
                vals[f"b{i}"] = v
        return vals

    def replace(self, **kv) -> "CoefficientSet":
        """Copy with named entries overridden, e.g. replace(b1=0)."""
        s, a = self.s, self.a
        y, b = list(self.y), list(self.b)
        for key, val in kv.items():
            val = _frac(val)
            if key == "s":
                s = val
            elif key == "a":
                a = val
            elif key[0] == "y":
                y[int(key[1:])] = val
            elif key[0] == "b":
                b[int(key[1:])] = val
            else:
                raise KeyError(key)
        return CoefficientSet(self.d, s, a, tuple(y), tuple(b))


# Built-in integer coefficient columns for minimum degrees 6..9.  The y and b
# rows are listed from index d+1 down to 0 (b_0 = 0 is implicit).
_BUILTIN = {
    6: {
        "a": 502562162340,
        "s": 1010109434040,
        "y": [422846061750, 422846061750, 409645123200, 401052708000,
              387969820875, 357968691360, 296456709780, 254021681340],
        "b": [338254849800, 338254849800, 313665896880, 289076943960,
              264487991040, 226888474680, 151217550540],
    },
    7: {
        "a": 9858456650,
        "s": 21118330730,
        "y": [8265018290, 8265018290, 8093880725, 7981810970, 7754608778,
              7321226150, 6598921770, 5196793700, 4492799990],
        "b": [6656464850, 6656464850, 6286147490, 5915830130, 5545512770,
              5021360750, 4278173340, 2770921790],
    },
    8: {
        "a": 215321625855,
        "s": 489195209055,
        "y": [180637395519, 180637395519, 180637395519, 176196828255,
              170236790715, 164408232975, 153359038875, 138571857655,
              105895928425, 87943795415],
        "b": [146353194015, 146353194015, 139847385195, 133341576375,
              126835767555, 118110911835, 107061717735, 89997559750,
              57321630520],
    },
    9: {
        "a": 93641183816180,
        "s": 224551068595700,
        "y": [78747157548500, 78747157548500, 78747157548500, 77277448218740,
              75612599739380, 73000318746740, 69343125357044, 64634747985500,
              57524154844772, 43483590947181, 33987088151324],
        "b": [64166766443780, 64166766443780, 61811868322820, 59456970201860,
              57102072080900, 54125243789540, 50365444145324, 45588781601132,
              37861061453138, 23820497555547],
    },
}


def builtin_coefficients(delta: int) -> CoefficientSet:
    """The built-in exact integer coefficient column for delta in {6,7,8,9}."""
    if delta not in _BUILTIN:
        raise ValueError(f"no built-in coefficients for minimum degree {delta}")
    col = _BUILTIN[delta]
    y = list(reversed(col["y"]))
    b = [0] + list(reversed(col["b"]))
    return CoefficientSet.make(delta, col["s"], col["a"], y, b)


@dataclass(frozen=True)
class ConditionVerdict:
    label: str
    family: int
    expression: str
    satisfied: bool
    slack: Fraction


@dataclass(frozen=True)
class ConditionReport:
    d: int
    verdicts: tuple[ConditionVerdict, ...]

    @property
    def overall(self) -> bool:
        return all(v.satisfied for v in self.verdicts)

    def failed(self) -> list[ConditionVerdict]:
        return [v for v in self.verdicts if not v.satisfied]

    def family_ok(self, family: int) -> bool:
        return all(v.satisfied for v in self.verdicts if v.family == family)

    def families_satisfied(self) -> int:
        return sum(1 for f in range(1, FAMILY_COUNT + 1) if self.family_ok(f))

    def verdict(self, label: str) -> ConditionVerdict:
        for v in self.verdicts:
            if v.label == label:
                return v
        raise KeyError(label)

    def to_json(self) -> dict:
        return {
            "version": 1,
            "d": self.d,
            "overall": self.overall,
            "families": FAMILY_COUNT,
            "verdicts": [
                {"label": v.label, "family": v.family, "expression": v.expression,
                 "satisfied": v.satisfied,
                 "slack": f"{v.slack.numerator}/{v.slack.denominator}"}
                for v in self.verdicts
            ],
        }


def check_conditions(c: CoefficientSet) -> ConditionReport:
    """Evaluate every elementary inequality exactly.

    A failing condition is a report entry, never an exception.  Slack is the
    left-hand side minus the right-hand side of each comparison, so a
    satisfied non-strict condition has slack >= 0.
    """
    values = c.symbol_values()
    verdicts = []
    for row in condition_rows(c.d):
        slack = row.expr.evaluate(values)
        ok = slack > 0 if row.strict else slack >= 0
        verdicts.append(ConditionVerdict(row.label, row.family, row.text, ok, slack))
    return ConditionReport(c.d, tuple(verdicts))


def weight_of_class(color: Color, wy_degree: int, state_type: StateType,
                    c: CoefficientSet) -> Fraction:
    """Weight of any vertex of the given color and WY-degree."""
    if color == Color.RED:
        return Fraction(0)
    if color == Color.WHITE:
        return c.a
    d, a, s = c.d, c.a, c.s
    i = wy_degree
    if state_type == StateType.TYPE2:
        if color == Color.YELLOW:
            return c.y[i]
        return c.b[i] if i <= d else c.b[d + 1]
    gap = s - a
    if color == Color.YELLOW:
        if i >= d:
            return a - gap / (i + 1)
        return a - gap / (d + 1)
    if i > d:
        return a - gap / (i + 2) - gap / i
    if i == d:
        return a - gap / (d + 2) - gap / (d + 1)
    return a - 2 * gap / (d + 1)


def vertex_weight(state: ColoredState, v: int, c: CoefficientSet) -> Fraction:
    return weight_of_class(state.color[v], state.wy[v], state.classify_type(c.d), c)


def total_weight(state: ColoredState, c: CoefficientSet) -> Fraction:
    """Sum of vertex weights, computed from the class buckets."""
    st = state.classify_type(c.d)
    total = c.a * state.n_white
    for color in (Color.YELLOW, Color.BLUE):
        for i, members in state.buckets[color].items():
            if members:
                total += weight_of_class(color, i, st, c) * len(members)
    return total


def coefficients_to_json(c: CoefficientSet) -> dict:
    return {
        "version": 1,
        "d": c.d,
        "s": frac_str(c.s),
        "a": frac_str(c.a),
        "y": [frac_str(v) for v in c.y],
        "b": [frac_str(v) for v in c.b],
    }


def coefficients_from_json(obj: dict) -> CoefficientSet:
    """Parse {d, s, a, y: [...], b: [...]} with ints or 'num/den' strings."""
    try:
        return CoefficientSet.make(int(obj["d"]), obj["s"], obj["a"],
                                   obj["y"], obj["b"])
    except KeyError as exc:
        raise ValueError(f"coefficient file missing key {exc}") from None


def load_coefficients(path: str) -> CoefficientSet:
    with open(path, "r", encoding="utf-8") as fh:
        return coefficients_from_json(json.load(fh))
