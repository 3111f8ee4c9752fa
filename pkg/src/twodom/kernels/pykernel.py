"""Pure-Python greedy selection kernel.

Same contract as the compiled kernel in _ckernel.pyx: exact integer
arithmetic on pre-scaled weights, identical tie-breaking, so both kernels
produce identical selection sequences.  Only valid while the state stays in
the regime where the flat weight table applies (no White vertex of WY-degree
above d and no Yellow vertex above d+1); drops and selections never push a
state out of that regime, so callers check it once on entry.

Weight magnitudes must satisfy n * max(weight, s) < 2**62 so the compiled
twin can use 64-bit accumulators; the caller enforces the same budget here
for parity.
"""

from __future__ import annotations

WHITE, YELLOW, BLUE, RED = 0, 1, 2, 3

IMPL = "python"


class GreedyEngine:
    """Array-backed selection state plus exact scaled-integer drop scans."""

    def __init__(self, adjacency, d, a_scaled, y_scaled, b_scaled):
        n = len(adjacency)
        self.n = n
        self.adj = [list(row) for row in adjacency]
        maxdeg = max((len(row) for row in adjacency), default=0)
        size = max(maxdeg, d + 1) + 1
        self.aw = a_scaled
        # Yellow classes above d+1 cannot occur here; blue classes above d+1
        # take the top blue weight by definition of the table.
        self.yw = [y_scaled[min(i, d + 1)] for i in range(size)]
        self.bw = [b_scaled[min(i, d + 1)] for i in range(size)]
        self.color = [WHITE] * n
        self.wyd = [len(row) for row in adjacency]
        self.n_white = n
        self.n_wy = n
        self.stamp = 0
        self.mark = [0] * n
        self.delta = [0] * n
        self.touched = [0] * n
        self.cmark = [0] * n
        self.cnt = [0] * n
        self.ctouched = [0] * n
        self.pr = [0] * n
        self.pmark = [0] * n

    def seed(self, colors, wyds):
        """Resume from an externally maintained state."""
        self.color = [int(c) for c in colors]
        self.wyd = list(wyds)
        self.n_white = sum(1 for c in self.color if c == WHITE)
        self.n_wy = self.n_white + sum(1 for c in self.color if c == YELLOW)

    def is_done(self):
        return self.n_wy == 0

    def whites(self):
        color = self.color
        return [v for v in range(self.n) if color[v] == WHITE]

    def snapshot(self):
        return list(self.color), list(self.wyd)

    def _weight(self, c, i):
        if c == WHITE:
            return self.aw
        if c == YELLOW:
            return self.yw[i]
        if c == BLUE:
            return self.bw[i]
        return 0

    def single_drop(self, v):
        """Exact total-weight decrease caused by selecting v."""
        color = self.color
        wyd = self.wyd
        adj = self.adj
        aw, yw, bw = self.aw, self.yw, self.bw
        cv = color[v]
        if cv == RED:
            raise ValueError(f"vertex {v} is already selected")
        if cv == WHITE:
            drop = aw
        elif cv == YELLOW:
            drop = yw[wyd[v]]
        else:
            drop = bw[wyd[v]]

        self.stamp += 1
        stamp = self.stamp
        mark, delta, touched = self.mark, self.delta, self.touched
        tcount = 0
        if cv != BLUE:
            for t in adj[v]:
                if mark[t] != stamp:
                    mark[t] = stamp
                    delta[t] = 1
                    touched[tcount] = t
                    tcount += 1
                else:
                    delta[t] += 1
        for u in adj[v]:
            if color[u] == YELLOW:
                for t in adj[u]:
                    if mark[t] != stamp:
                        mark[t] = stamp
                        delta[t] = 1
                        touched[tcount] = t
                        tcount += 1
                    else:
                        delta[t] += 1

        pr = self.pr
        pr[v] = stamp
        for u in adj[v]:
            pr[u] = stamp
            cu = color[u]
            if cu == RED:
                continue
            du = delta[u] if mark[u] == stamp else 0
            w2 = wyd[u] - du
            if cu == WHITE:
                drop += aw - yw[w2]
            elif cu == YELLOW:
                drop += yw[wyd[u]] - bw[w2]
            else:
                drop += bw[wyd[u]] - bw[w2]
        for idx in range(tcount):
            t = touched[idx]
            if pr[t] == stamp:
                continue
            ct = color[t]
            if ct == YELLOW:
                drop += yw[wyd[t]] - yw[wyd[t] - delta[t]]
            elif ct == BLUE:
                drop += bw[wyd[t]] - bw[wyd[t] - delta[t]]
        return drop

    def best_single(self):
        """(vertex, drop) maximizing the drop; lowest index wins ties."""
        color = self.color
        best_v, best_drop = -1, -1
        for v in range(self.n):
            if color[v] == RED:
                continue
            drop = self.single_drop(v)
            if drop > best_drop:
                best_v, best_drop = v, drop
        return best_v, best_drop

    def pair_drop(self, p, q):
        """Exact total-weight decrease of selecting both p and q as one batch."""
        color = self.color
        wyd = self.wyd
        adj = self.adj
        aw, yw, bw = self.aw, self.yw, self.bw
        cp, cq = color[p], color[q]
        drop = self._weight(cp, wyd[p]) + self._weight(cq, wyd[q])

        self.stamp += 1
        stamp = self.stamp
        cmark, cnt, ctouched = self.cmark, self.cnt, self.ctouched
        ccount = 0
        for r in (p, q):
            for t in adj[r]:
                if t == p or t == q:
                    continue
                if cmark[t] != stamp:
                    cmark[t] = stamp
                    cnt[t] = 1
                    ctouched[ccount] = t
                    ccount += 1
                else:
                    cnt[t] += 1

        # Everything that leaves the White-or-Yellow pool lowers the
        # WY-degree of each of its neighbors by one.
        mark, delta, touched = self.mark, self.delta, self.touched
        tcount = 0

        def spread(x):
            nonlocal tcount
            for t in adj[x]:
                if mark[t] != stamp:
                    mark[t] = stamp
                    delta[t] = 1
                    touched[tcount] = t
                    tcount += 1
                else:
                    delta[t] += 1

        if cp != BLUE:
            spread(p)
        if cq != BLUE:
            spread(q)
        for idx in range(ccount):
            t = ctouched[idx]
            ct = color[t]
            if ct == YELLOW or (ct == WHITE and cnt[t] >= 2):
                spread(t)

        pr = self.pr
        pr[p] = stamp
        pr[q] = stamp
        for idx in range(ccount):
            t = ctouched[idx]
            pr[t] = stamp
            ct = color[t]
            if ct == RED:
                continue
            du = delta[t] if mark[t] == stamp else 0
            w2 = wyd[t] - du
            if ct == WHITE:
                new = yw[w2] if cnt[t] == 1 else bw[w2]
                drop += aw - new
            elif ct == YELLOW:
                drop += yw[wyd[t]] - bw[w2]
            else:
                drop += bw[wyd[t]] - bw[w2]
        for idx in range(tcount):
            t = touched[idx]
            if pr[t] == stamp:
                continue
            ct = color[t]
            if ct == YELLOW:
                drop += yw[wyd[t]] - yw[wyd[t] - delta[t]]
            elif ct == BLUE:
                drop += bw[wyd[t]] - bw[wyd[t] - delta[t]]
        return drop

    def best_pair(self):
        """Best unordered pair at graph distance <= 2, lexicographic on ties.

        Returns (p, q, drop), or (-1, -1, -1) when no candidate pair exists.
        """
        color = self.color
        adj = self.adj
        pmark = self.pmark
        best_p = best_q = -1
        best_drop = -1
        for p in range(self.n):
            if color[p] == RED:
                continue
            self.stamp += 1
            stamp = self.stamp
            partners = []
            for u in adj[p]:
                if u > p and color[u] != RED and pmark[u] != stamp:
                    pmark[u] = stamp
                    partners.append(u)
                for w2 in adj[u]:
                    if w2 > p and w2 != p and color[w2] != RED and pmark[w2] != stamp:
                        pmark[w2] = stamp
                        partners.append(w2)
            for q in partners:
                drop = self.pair_drop(p, q)
                if drop > best_drop or (drop == best_drop and p == best_p and q < best_q):
                    best_p, best_q, best_drop = p, q, drop
        return best_p, best_q, best_drop

    def apply(self, v):
        """Select v: recolor, update WY-degrees, maintain counters."""
        color = self.color
        wyd = self.wyd
        adj = self.adj
        cv = color[v]
        if cv == RED:
            raise ValueError(f"vertex {v} is already selected")
        color[v] = RED
        if cv == WHITE:
            self.n_white -= 1
            self.n_wy -= 1
        elif cv == YELLOW:
            self.n_wy -= 1
        leavers = [v] if cv != BLUE else []
        for u in adj[v]:
            cu = color[u]
            if cu == WHITE:
                color[u] = YELLOW
                self.n_white -= 1
            elif cu == YELLOW:
                color[u] = BLUE
                self.n_wy -= 1
                leavers.append(u)
        for x in leavers:
            for t in adj[x]:
                wyd[t] -= 1
