"""Selection state over a graph: color partition, WY-degrees, class buckets.

A vertex is White while no selected vertex is in its closed neighborhood,
Yellow once exactly one neighbor is selected, Blue once two or more are, and
Red when it is selected itself.  The WY-degree of v counts the neighbors of v
that are currently White or Yellow.  Colors only ever advance
White -> Yellow -> Blue, with Red absorbing, and WY-degrees never increase,
which is what makes incremental maintenance sound.
"""

from __future__ import annotations

import json
from enum import IntEnum

from .graph import Graph


class Color(IntEnum):
    WHITE = 0
    YELLOW = 1
    BLUE = 2
    RED = 3


class StateType(IntEnum):
    """Weight-table regime of a state for a given degree parameter d."""

    TYPE1 = 1
    TYPE2 = 2


_COLOR_NAMES = ("white", "yellow", "blue", "red")


class ColoredState:
    """Mutable selection state over an immutable Graph.

    Single writer per instance; clone() for lookahead.  ``buckets[c][i]`` is
    the set of vertices of color c (White/Yellow/Blue) with WY-degree i;
    selected (Red) vertices are not bucketed.
    """

    __slots__ = ("graph", "in_d", "color", "wy", "buckets",
                 "n_white", "n_yellow", "n_selected")

    def __init__(self, g: Graph):
        self.graph = g
        n = g.n
        self.in_d = [False] * n
        self.color = [Color.WHITE] * n
        self.wy = [len(g.adjacency[v]) for v in range(n)]
        self.buckets: dict[Color, dict[int, set[int]]] = {
            Color.WHITE: {}, Color.YELLOW: {}, Color.BLUE: {},
        }
        for v in range(n):
            self.buckets[Color.WHITE].setdefault(self.wy[v], set()).add(v)
        self.n_white = n
        self.n_yellow = 0
        self.n_selected = 0

    def clone(self) -> "ColoredState":
        other = ColoredState.__new__(ColoredState)
        other.graph = self.graph
        other.in_d = self.in_d.copy()
        other.color = self.color.copy()
        other.wy = self.wy.copy()
        other.buckets = {
            c: {i: s.copy() for i, s in by_level.items() if s}
            for c, by_level in self.buckets.items()
        }
        other.n_white = self.n_white
        other.n_yellow = self.n_yellow
        other.n_selected = self.n_selected
        return other

    def _bucket_remove(self, c: Color, level: int, v: int):
        level_set = self.buckets[c][level]
        level_set.discard(v)
        if not level_set:
            del self.buckets[c][level]

    def _bucket_add(self, c: Color, level: int, v: int):
        self.buckets[c].setdefault(level, set()).add(v)

    def select(self, v: int) -> "ColoredState":
        """Put v into the selected set and propagate recoloring.

        White neighbors turn Yellow, Yellow neighbors turn Blue, and the
        WY-degree of every vertex adjacent to a vertex that left the
        White-or-Yellow pool drops accordingly.  Returns self.
        """
        if self.in_d[v]:
            raise ValueError(f"vertex {v} is already selected")
        adj = self.graph.adjacency
        color = self.color

        leavers = []
        if color[v] != Color.BLUE:
            leavers.append(v)

        old: dict[int, tuple[Color, int]] = {v: (color[v], self.wy[v])}
        transitions = []
        for u in adj[v]:
            cu = color[u]
            if cu == Color.WHITE:
                transitions.append((u, Color.YELLOW))
                old.setdefault(u, (cu, self.wy[u]))
            elif cu == Color.YELLOW:
                transitions.append((u, Color.BLUE))
                old.setdefault(u, (cu, self.wy[u]))
                leavers.append(u)

        delta: dict[int, int] = {}
        for x in leavers:
            for t in adj[x]:
                delta[t] = delta.get(t, 0) + 1
                if t not in old:
                    old[t] = (color[t], self.wy[t])

        for x, (c0, w0) in old.items():
            if c0 != Color.RED:
                self._bucket_remove(c0, w0, x)

        if color[v] == Color.WHITE:
            self.n_white -= 1
        elif color[v] == Color.YELLOW:
            self.n_yellow -= 1
        color[v] = Color.RED
        self.in_d[v] = True
        self.n_selected += 1

        for u, cnew in transitions:
            if cnew == Color.YELLOW:
                self.n_white -= 1
                self.n_yellow += 1
            else:
                self.n_yellow -= 1
            color[u] = cnew

        for t, dec in delta.items():
            self.wy[t] -= dec

        for x in old:
            if color[x] != Color.RED:
                self._bucket_add(color[x], self.wy[x], x)
        return self

    def is_2_dominating(self) -> bool:
        """True when every unselected vertex has at least two selected neighbors."""
        return self.n_white == 0 and self.n_yellow == 0

    def max_wy_index(self):
        """max{i : W_i or Y_{i+1} nonempty}, or None if no White/Yellow vertex."""
        best = None
        for i, s in self.buckets[Color.WHITE].items():
            if s and (best is None or i > best):
                best = i
        for i, s in self.buckets[Color.YELLOW].items():
            if s and (best is None or i - 1 > best):
                best = i - 1
        return best

    def max_wyb_index(self):
        """max{i : W_i, Y_{i+1}, or B_{i+2} nonempty}, or None if all empty."""
        best = self.max_wy_index()
        for i, s in self.buckets[Color.BLUE].items():
            if s and (best is None or i - 2 > best):
                best = i - 2
        return best

    def classify_type(self, d: int) -> StateType:
        """TYPE1 when some White vertex has WY-degree >= d+1 or some Yellow
        vertex has WY-degree >= d+2; TYPE2 otherwise (including the empty max)."""
        if d < 4:
            raise ValueError("type classification needs d >= 4")
        k = self.max_wy_index()
        return StateType.TYPE1 if k is not None and k >= d + 1 else StateType.TYPE2

    def level_set(self, c: Color, i: int) -> set[int]:
        """Vertices of color c with WY-degree exactly i (empty set if none)."""
        return self.buckets[c].get(i, set())

    def color_members(self, c: Color):
        """All vertices currently of color c, ascending."""
        out = []
        for s in self.buckets[c].values():
            out.extend(s)
        out.sort()
        return out

    def selected(self) -> list[int]:
        return [v for v in range(self.graph.n) if self.in_d[v]]

    def recompute_from_scratch(self):
        """Colors and WY-degrees recomputed directly from the graph and in_d."""
        adj = self.graph.adjacency
        n = self.graph.n
        colors = []
        for v in range(n):
            if self.in_d[v]:
                colors.append(Color.RED)
                continue
            k = sum(1 for u in adj[v] if self.in_d[u])
            colors.append(Color.WHITE if k == 0 else Color.YELLOW if k == 1 else Color.BLUE)
        wy = [sum(1 for u in adj[v] if colors[u] <= Color.YELLOW) for v in range(n)]
        return colors, wy

    def verify_consistent(self) -> bool:
        """Incrementally maintained (color, wy) equals the from-scratch values."""
        colors, wy = self.recompute_from_scratch()
        return list(self.color) == colors and self.wy == wy

    def snapshot(self) -> dict:
        """JSON-able view of the state (colors, WY-degrees, selected set)."""
        return {
            "version": 1,
            "n": self.graph.n,
            "colors": [_COLOR_NAMES[c] for c in self.color],
            "wy_degree": list(self.wy),
            "selected": self.selected(),
        }

    def snapshot_json(self) -> str:
        return json.dumps(self.snapshot(), indent=2, sort_keys=True)
