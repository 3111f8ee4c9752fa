"""Simple undirected graphs: parsing, serialization, named families, random regular."""

from __future__ import annotations

import random
import re
from bisect import bisect_left
from dataclasses import dataclass


class EdgeListParseError(ValueError):
    """Malformed edge-list input.  Carries the offending 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    ``adjacency[v]`` is the sorted tuple of neighbors of v.  Instances are
    safe to share between threads and between concurrent algorithm runs.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        """Build a graph from an iterable of (u, v) pairs, merging duplicates."""
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        nbrs = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        row = self.adjacency[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("minimum degree is undefined for the empty graph")
    return min(len(row) for row in g.adjacency)


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text: one ``u v`` pair per line.

    Lines starting with ``#`` and blank lines are ignored.  An optional first
    significant line ``n <count>`` declares the vertex count, which allows
    trailing isolated vertices.  Duplicate and reversed-duplicate edges merge.
    """
    declared_n = None
    edges = []
    max_seen = -1
    first_significant = True
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if first_significant and parts[0] == "n":
            first_significant = False
            if len(parts) != 2:
                raise EdgeListParseError(line_no, "header must be 'n <count>'")
            try:
                declared_n = int(parts[1])
            except ValueError:
                raise EdgeListParseError(line_no, f"bad vertex count {parts[1]!r}") from None
            if declared_n < 0:
                raise EdgeListParseError(line_no, "vertex count must be non-negative")
            continue
        first_significant = False
        if len(parts) != 2:
            raise EdgeListParseError(line_no, f"expected two integers, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(line_no, f"expected two integers, got {line!r}") from None
        if u < 0 or v < 0:
            raise EdgeListParseError(line_no, "vertex indices must be non-negative")
        if u == v:
            raise EdgeListParseError(line_no, f"self-loop at vertex {u}")
        if declared_n is not None and (u >= declared_n or v >= declared_n):
            raise EdgeListParseError(line_no, f"vertex index exceeds declared count {declared_n}")
        max_seen = max(max_seen, u, v)
        edges.append((u, v))
    n = declared_n if declared_n is not None else max_seen + 1
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    """Serialize in the same format parse_edge_list accepts (round-trips)."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


_NAMED_RE = re.compile(r"^([KCP])(\d+)$")


def gen_named(name: str) -> Graph:
    """Standard constructions: K<n>, C<n>, P<n>, and K4xK2.

    K4xK2 is two disjoint copies of K4 on {0..3} and {4..7} joined by the
    matching (i, i+4); it is 4-regular on 8 vertices.
    """
    if name == "K4xK2":
        edges = [(i, j) for i in range(4) for j in range(i + 1, 4)]
        edges += [(i + 4, j + 4) for i in range(4) for j in range(i + 1, 4)]
        edges += [(i, i + 4) for i in range(4)]
        return Graph.from_edges(8, edges)
    m = _NAMED_RE.match(name)
    if not m:
        raise ValueError(f"unknown graph name {name!r}")
    kind, n = m.group(1), int(m.group(2))
    if kind == "K":
        if n < 1:
            raise ValueError("K<n> needs n >= 1")
        return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if kind == "C":
        if n < 3:
            raise ValueError("C<n> needs n >= 3")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if n < 1:
        raise ValueError("P<n> needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def gen_random_regular(n: int, d: int, seed: int, max_tries: int = 10_000) -> Graph:
    """Random d-regular simple graph on n vertices via stub pairing.

    Stubs are shuffled and paired; pairs that would create a loop or a
    duplicate edge are thrown back and re-paired in the next round.  If a
    round gets stuck (no suitable pair exists among the leftovers) the whole
    attempt restarts.  Deterministic for a fixed seed.
    """
    if n * d % 2 != 0:
        raise ValueError(f"n*d must be even, got n={n}, d={d}")
    if d < 0 or d >= max(n, 1):
        raise ValueError(f"need 0 <= d < n, got n={n}, d={d}")
    rng = random.Random(seed)
    for _ in range(max_tries):
        edges = _pairing_attempt(n, d, rng)
        if edges is not None:
            return Graph.from_edges(n, edges)
    raise RuntimeError(f"regular graph generation exceeded {max_tries} attempts (n={n}, d={d})")


def _pairing_attempt(n, d, rng, max_rounds=500):
    edges = set()
    stubs = [v for v in range(n) for _ in range(d)]
    rounds = 0
    while stubs:
        rounds += 1
        if rounds > max_rounds:
            return None
        rng.shuffle(stubs)
        leftover = []
        it = iter(stubs)
        for u, v in zip(it, it):
            if u > v:
                u, v = v, u
            if u == v or (u, v) in edges:
                leftover.append(u)
                leftover.append(v)
            else:
                edges.add((u, v))
        if len(leftover) == len(stubs) and not _suitable_pair_exists(leftover, edges):
            return None
        stubs = leftover
    return edges


def _suitable_pair_exists(stubs, edges):
    distinct = sorted(set(stubs))
    for i, u in enumerate(distinct):
        for v in distinct[i + 1:]:
            if (u, v) not in edges:
                return True
    return False
