"""Constructive 2-domination algorithms, the exact oracle, and certification.

Two constructions aim at the (a/s)*n size bound for minimum degree >= 6: a
rule-driven greedy that walks a fixed 18-instruction priority list, and a
weight-driven greedy that always takes the selection with the largest exact
weight decrease (single vertex when it drops at least s, a nearby pair when
a combined drop of 2s is available, otherwise all remaining white vertices
in one batch).  certify_run replays any batch sequence with exact rational
arithmetic and checks the per-batch drop requirement, final 2-domination,
and the size bound.  partition_swap covers minimum degree >= 3, and
exact_gamma2 is the brute-force oracle for small instances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .coloring import Color, ColoredState, StateType
from .graph import Graph, min_degree
from .weights import CoefficientSet, check_conditions, frac_str, total_weight

# Weight magnitudes admitted to the integer kernels; drops are bounded by the
# initial total weight n*a, and 2**61 leaves a factor-two margin in int64.
_KERNEL_BUDGET = 2 ** 61


@dataclass
class StepRecord:
    batch: list[int]
    weight_before: Fraction
    weight_after: Fraction
    drop_ok: bool
    rule: str

    @property
    def drop(self) -> Fraction:
        return self.weight_before - self.weight_after


@dataclass
class RunCertificate:
    """Per-batch record of a replayed run plus the final verdicts.

    drop_ok of a step means the batch decreased the total weight by at least
    batch-size times s.  bound_ok means the final selection has size at most
    (a/s)*n.  final_sweep_ok reports the aggregate count for an all-white
    closing batch (None when the run has no such batch).
    """

    steps: list[StepRecord]
    final_d: list[int]
    valid_2dom: bool
    bound_ok: bool
    final_sweep_ok: bool | None
    n: int
    d: int
    bound: Fraction

    @property
    def all_drops_ok(self) -> bool:
        return all(s.drop_ok for s in self.steps)

    @property
    def ok(self) -> bool:
        return (self.valid_2dom and self.bound_ok and self.all_drops_ok
                and self.final_sweep_ok is not False)

    def trace_lines(self) -> list[str]:
        return [
            f"step {t}: rule {s.rule}, batch {s.batch}, drop {frac_str(s.drop)}"
            for t, s in enumerate(self.steps, start=1)
        ]

    def to_json(self) -> dict:
        return {
            "version": 1,
            "n": self.n,
            "d": self.d,
            "steps": [
                {"batch": s.batch,
                 "weight_before": frac_str(s.weight_before),
                 "weight_after": frac_str(s.weight_after),
                 "drop_ok": s.drop_ok,
                 "rule": s.rule}
                for s in self.steps
            ],
            "final_D": self.final_d,
            "size": len(self.final_d),
            "bound": frac_str(self.bound),
            "valid_2dom": self.valid_2dom,
            "bound_ok": self.bound_ok,
            "final_sweep_ok": self.final_sweep_ok,
            "ok": self.ok,
        }


class ReplayError(ValueError):
    """A batch sequence cannot be replayed on a fresh state."""


def certify_run(g: Graph, c: CoefficientSet, batches, labels=None,
                check_states: bool = True) -> RunCertificate:
    """Replay batches on a fresh state and verify the weight accounting.

    Exact rational arithmetic throughout, independent of whichever engine
    produced the batches.  With check_states, the incrementally maintained
    colors and WY-degrees are compared against a from-scratch recomputation
    after every batch.
    """
    state = ColoredState(g)
    if labels is None:
        labels = ["greedy"] * len(batches)
    if len(labels) != len(batches):
        raise ValueError("labels and batches must have equal length")
    steps: list[StepRecord] = []
    w_before = total_weight(state, c)
    final_sweep_ok = None
    for t, batch in enumerate(batches):
        batch = list(batch)
        if not batch:
            raise ReplayError(f"batch {t} is empty")
        sweep_counts = None
        if t == len(batches) - 1 and set(batch) == set(state.color_members(Color.WHITE)):
            sweep_counts = (len(state.level_set(Color.WHITE, 0)),
                            len(state.level_set(Color.BLUE, 2)),
                            len(state.level_set(Color.BLUE, 1)))
        for v in batch:
            if not (0 <= v < g.n):
                raise ReplayError(f"batch {t}: vertex {v} out of range")
            if state.in_d[v]:
                raise ReplayError(f"batch {t}: vertex {v} selected twice")
            state.select(v)
        if check_states and not state.verify_consistent():
            raise RuntimeError(
                f"incremental state diverged from scratch recomputation after batch {t}")
        w_after = total_weight(state, c)
        drop_ok = w_before - w_after >= len(batch) * c.s
        steps.append(StepRecord(batch, w_before, w_after, drop_ok,
                                labels[t] if labels else "greedy"))
        if sweep_counts is not None:
            x, z2, z1 = sweep_counts
            final_sweep_ok = x * c.a + z2 * c.b[2] + z1 * c.b[1] >= x * c.s
        w_before = w_after
    final_d = state.selected()
    bound = Fraction(c.a, c.s) * g.n
    return RunCertificate(
        steps=steps,
        final_d=final_d,
        valid_2dom=state.is_2_dominating(),
        bound_ok=len(final_d) <= bound,
        final_sweep_ok=final_sweep_ok,
        n=g.n,
        d=c.d,
        bound=bound,
    )


# ---------------------------------------------------------------------------
# Rule-driven greedy


def rule_greedy(g: Graph, d: int):
    """2-dominating set via the first applicable rule of the priority list.

    Returns (D, trace) where trace is the list of (rule number, batch) pairs
    in firing order.  Ties always break toward the lowest vertex index, so
    the run is deterministic.  Requires minimum degree at least d >= 6.
    """
    if d < 6:
        raise ValueError("rule-driven greedy needs d >= 6")
    if min_degree(g) < d:
        raise ValueError(f"graph minimum degree {min_degree(g)} is below d={d}")
    state = ColoredState(g)
    trace: list[tuple[int, list[int]]] = []
    while not state.is_2_dominating():
        label, batch = _first_rule(state, g, d)
        for v in batch:
            state.select(v)
        trace.append((label, batch))
    return state.selected(), trace


def _first_rule(state: ColoredState, g: Graph, d: int):
    """The first applicable instruction and its batch.

    Rules 1-8, 12, 13, 16, 17 pick one vertex; 9, 10, 11, 14, 15 pick two;
    18 picks every remaining white vertex.
    """
    adj = g.adjacency
    color = state.color

    mx = state.max_wy_index()
    if mx is not None and mx >= d - 1:
        wk = state.level_set(Color.WHITE, mx)
        if wk:
            return 1, [min(wk)]
        return 2, [min(state.level_set(Color.YELLOW, mx + 1))]

    blue_levels = [i for i, s in state.buckets[Color.BLUE].items() if s]
    mb = max(blue_levels, default=None)
    if mb is not None and mb >= d + 1:
        return 3, [min(state.level_set(Color.BLUE, mb))]

    k = state.max_wyb_index()
    if k is not None and 2 <= k <= d - 2:
        wk = state.level_set(Color.WHITE, k)
        if wk:
            return 4, [min(wk)]
        yk = state.level_set(Color.YELLOW, k + 1)
        if yk:
            return 5, [min(yk)]
        return 6, [min(state.level_set(Color.BLUE, k + 2))]

    whites = state.color_members(Color.WHITE)
    for v in whites:
        if any(color[u] == Color.YELLOW for u in adj[v]):
            return 7, [v]

    y2 = state.level_set(Color.YELLOW, 2)
    if y2:
        return 8, [min(y2)]

    b3 = state.level_set(Color.BLUE, 3)
    if b3:
        for v1 in whites:
            wn = [u for u in adj[v1] if color[u] == Color.WHITE]
            if not wn:
                continue
            bn = [u for u in adj[v1] if u in b3]
            for v2 in wn:
                for u in bn:
                    if not g.has_edge(u, v2):
                        return 9, [v2, u]
        w1 = sorted(state.level_set(Color.WHITE, 1))
        for v in w1:
            bn = [u for u in adj[v] if u in b3]
            if len(bn) == 1:
                return 10, [v, bn[0]]
        for v in w1:
            bn = [u for u in adj[v] if u in b3]
            if len(bn) >= 2:
                return 11, [bn[0], bn[1]]
        return 12, [min(b3)]

    y1 = state.level_set(Color.YELLOW, 1)
    if y1:
        return 13, [min(y1)]

    b2 = state.level_set(Color.BLUE, 2)
    if b2:
        for v1 in whites:
            wn = [u for u in adj[v1] if color[u] == Color.WHITE]
            if not wn:
                continue
            bn = [u for u in adj[v1] if u in b2]
            for v2 in wn:
                for u in bn:
                    if not g.has_edge(u, v2):
                        return 14, [v2, u]

    for v1 in whites:
        for u in adj[v1]:
            if color[u] == Color.WHITE:
                return 15, [v1, u]

    if b2:
        for v in sorted(b2):
            if any(color[u] == Color.YELLOW for u in adj[v]):
                return 16, [v]

    yellows = state.color_members(Color.YELLOW)
    if yellows:
        return 17, [yellows[0]]

    if whites:
        return 18, list(whites)

    raise RuntimeError("no instruction applies to a non-2-dominated state")


# ---------------------------------------------------------------------------
# Weight-driven greedy


def weight_greedy(g: Graph, c: CoefficientSet, *, kernel: str | None = None,
                  check_states: bool = True):
    """2-dominating set by repeatedly taking the largest exact weight drop.

    A single vertex is selected while the best single drop is at least s;
    otherwise pairs at graph distance at most two are searched for a
    combined drop of at least 2s; otherwise all remaining white vertices go
    in as one closing batch.  Returns (D, certificate), where the
    certificate is produced by an independent exact replay.

    The hot loop runs on an integer kernel (compiled when available) as soon
    as the state enters the flat-table regime and the scaled weights fit the
    kernel's 64-bit budget; otherwise an exact rational path is used.
    """
    d = c.d
    if d < 6:
        raise ValueError("weight-driven greedy needs d >= 6")
    if min_degree(g) < d:
        raise ValueError(f"graph minimum degree {min_degree(g)} is below d={d}")
    if not check_conditions(c).overall:
        raise ValueError("coefficient set fails its feasibility conditions")

    state = ColoredState(g)
    batches: list[list[int]] = []
    labels: list[str] = []

    while not state.is_2_dominating() and state.classify_type(d) == StateType.TYPE1:
        batch, label = _exact_step(state, c)
        for v in batch:
            state.select(v)
        batches.append(batch)
        labels.append(label)

    if not state.is_2_dominating():
        made = _make_engine(g, c, state, kernel)
        if made is None:
            while not state.is_2_dominating():
                batch, label = _exact_step(state, c)
                for v in batch:
                    state.select(v)
                batches.append(batch)
                labels.append(label)
        else:
            engine, s_scaled = made
            while not engine.is_done():
                v, drop = engine.best_single()
                if drop >= s_scaled:
                    engine.apply(v)
                    batches.append([v])
                    labels.append("greedy")
                    continue
                p, q, pdrop = engine.best_pair()
                if p >= 0 and pdrop >= 2 * s_scaled:
                    engine.apply(p)
                    engine.apply(q)
                    batches.append([p, q])
                    labels.append("greedy-pair")
                    continue
                whites = engine.whites()
                if whites:
                    for w in whites:
                        engine.apply(w)
                    batches.append(whites)
                    labels.append("sweep")
                else:
                    engine.apply(v)
                    batches.append([v])
                    labels.append("greedy")

    cert = certify_run(g, c, batches, labels=labels, check_states=check_states)
    return cert.final_d, cert


def _make_engine(g: Graph, c: CoefficientSet, state: ColoredState,
                 kernel: str | None):
    """Integer kernel seeded from the current state, or None if the scaled
    weights would not fit the kernel budget."""
    denoms = [c.s.denominator, c.a.denominator]
    denoms += [v.denominator for v in c.y] + [v.denominator for v in c.b]
    scale = math.lcm(*denoms)
    aw = int(c.a * scale)
    sw = int(c.s * scale)
    if max(g.n, 1) * max(aw, sw) >= _KERNEL_BUDGET:
        return None
    ys = [int(v * scale) for v in c.y]
    bs = [int(v * scale) for v in c.b]
    module = kernels if kernel is None else kernels.load(kernel)
    engine = module.GreedyEngine(g.adjacency, c.d, aw, ys, bs)
    engine.seed([int(col) for col in state.color], list(state.wy))
    return engine, sw


def _exact_step(state: ColoredState, c: CoefficientSet):
    """One greedy decision with exact rational drops (clone-based lookahead)."""
    g = state.graph
    base = total_weight(state, c)
    best_v, best_drop = -1, None
    for v in range(g.n):
        if state.in_d[v]:
            continue
        drop = base - total_weight(state.clone().select(v), c)
        if best_drop is None or drop > best_drop:
            best_v, best_drop = v, drop
    if best_drop is not None and best_drop >= c.s:
        return [best_v], "greedy"

    adj = g.adjacency
    best_pair, best_pdrop = None, None
    for p in range(g.n):
        if state.in_d[p]:
            continue
        partners = set()
        for u in adj[p]:
            if u > p and not state.in_d[u]:
                partners.add(u)
            for w2 in adj[u]:
                if w2 > p and not state.in_d[w2]:
                    partners.add(w2)
        for q in sorted(partners):
            drop = base - total_weight(state.clone().select(p).select(q), c)
            if best_pdrop is None or drop > best_pdrop:
                best_pair, best_pdrop = [p, q], drop
    if best_pdrop is not None and best_pdrop >= 2 * c.s:
        return best_pair, "greedy-pair"

    whites = state.color_members(Color.WHITE)
    if whites:
        return whites, "sweep"
    return [best_v], "greedy"


# ---------------------------------------------------------------------------
# Bipartition local search


def partition_swap(g: Graph):
    """Two disjoint 2-dominating sets by local moves on a bipartition.

    Starting from the even/odd split, any vertex with strictly more
    neighbors on its own side moves to the other side; the cut grows with
    every move, so this terminates.  On exit each vertex has at least half
    of its neighbors on the opposite side, which makes each part
    2-dominating when the minimum degree is at least 3.
    """
    if g.n == 0:
        raise ValueError("partition swap needs a non-empty graph")
    if min_degree(g) < 3:
        raise ValueError("partition swap needs minimum degree >= 3")
    adj = g.adjacency
    side = [v % 2 for v in range(g.n)]
    moved = True
    while moved:
        moved = False
        for v in range(g.n):
            own = sum(1 for u in adj[v] if side[u] == side[v])
            if 2 * own > len(adj[v]):
                side[v] ^= 1
                moved = True
    part_a = [v for v in range(g.n) if side[v] == 0]
    part_b = [v for v in range(g.n) if side[v] == 1]
    return part_a, part_b


# ---------------------------------------------------------------------------
# Exact oracle


def exact_gamma2(g: Graph, limit_n: int = 24) -> int:
    """Exact minimum size of a 2-dominating set, by increasing-cardinality
    search with pruning.  Exponential; refuses graphs larger than limit_n."""
    n = g.n
    if n > limit_n:
        raise ValueError(f"exact search is capped at {limit_n} vertices, got {n}")
    if n == 0:
        return 0
    adj = g.adjacency

    for k in range(n + 1):
        if _exists_2dom_of_size(n, adj, k):
            return k
    raise RuntimeError("unreachable: the full vertex set always 2-dominates")


def _exists_2dom_of_size(n, adj, k):
    in_set = [False] * n
    dom = [0] * n
    undec = [len(adj[v]) for v in range(n)]

    def dfs(idx, used):
        if idx == n:
            return True
        v = idx
        if used < k:
            # Include v: dom+undec stays the same for every neighbor, so no
            # vertex can become newly infeasible on this branch.
            in_set[v] = True
            for u in adj[v]:
                dom[u] += 1
                undec[u] -= 1
            if dfs(idx + 1, used + 1):
                return True
            for u in adj[v]:
                dom[u] -= 1
                undec[u] += 1
            in_set[v] = False
        # Exclude v.
        for u in adj[v]:
            undec[u] -= 1
        feasible = dom[v] + undec[v] >= 2
        if feasible:
            for u in adj[v]:
                if u < v and not in_set[u] and dom[u] + undec[u] < 2:
                    feasible = False
                    break
        if feasible and dfs(idx + 1, used):
            return True
        for u in adj[v]:
            undec[u] += 1
        return False

    return dfs(0, 0)
