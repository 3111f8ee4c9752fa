# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled greedy selection kernel.

Exact translation of pykernel.GreedyEngine onto C integer arrays.  Weight
magnitudes are pre-checked by the caller so every accumulator fits in 64
bits; both kernels therefore compute identical drops and make identical
selections.
"""

import array

from cpython cimport array

IMPL = "c"

cdef enum:
    WHITE = 0
    YELLOW = 1
    BLUE = 2
    RED = 3


cdef class GreedyEngine:
    cdef int n
    cdef long long aw
    cdef array.array _indptr, _indices, _wyd, _mark, _delta, _touched
    cdef array.array _cmark, _cnt, _ctouched, _pr, _pmark, _color, _yw, _bw
    cdef int[:] indptr
    cdef int[:] indices
    cdef int[:] wyd
    cdef int[:] mark
    cdef int[:] delta
    cdef int[:] touched
    cdef int[:] cmark
    cdef int[:] cnt
    cdef int[:] ctouched
    cdef int[:] pr
    cdef int[:] pmark
    cdef signed char[:] color
    cdef long long[:] yw
    cdef long long[:] bw
    cdef int stamp
    cdef public int n_white, n_wy

    def __init__(self, adjacency, int d, a_scaled, y_scaled, b_scaled):
        cdef int n = len(adjacency)
        cdef int v, idx, maxdeg, size, i
        self.n = n
        self.aw = a_scaled
        self._indptr = array.array("i", [0] * (n + 1))
        self.indptr = self._indptr
        maxdeg = 0
        idx = 0
        flat = []
        for v in range(n):
            row = adjacency[v]
            if len(row) > maxdeg:
                maxdeg = len(row)
            flat.extend(row)
            idx += len(row)
            self.indptr[v + 1] = idx
        self._indices = array.array("i", flat) if flat else array.array("i", [0])
        self.indices = self._indices
        size = max(maxdeg, d + 1) + 1
        self._yw = array.array("q", [y_scaled[min(i, d + 1)] for i in range(size)])
        self._bw = array.array("q", [b_scaled[min(i, d + 1)] for i in range(size)])
        self.yw = self._yw
        self.bw = self._bw
        self._color = array.array("b", [WHITE] * max(n, 1))
        self.color = self._color
        self._wyd = array.array("i", [len(adjacency[v]) for v in range(n)] or [0])
        self.wyd = self._wyd
        self._mark = array.array("i", [0] * max(n, 1))
        self._delta = array.array("i", [0] * max(n, 1))
        self._touched = array.array("i", [0] * max(n, 1))
        self._cmark = array.array("i", [0] * max(n, 1))
        self._cnt = array.array("i", [0] * max(n, 1))
        self._ctouched = array.array("i", [0] * max(n, 1))
        self._pr = array.array("i", [0] * max(n, 1))
        self._pmark = array.array("i", [0] * max(n, 1))
        self.mark = self._mark
        self.delta = self._delta
        self.touched = self._touched
        self.cmark = self._cmark
        self.cnt = self._cnt
        self.ctouched = self._ctouched
        self.pr = self._pr
        self.pmark = self._pmark
        self.stamp = 0
        self.n_white = n
        self.n_wy = n

    def seed(self, colors, wyds):
        cdef int v, nw = 0, ny = 0
        for v in range(self.n):
            self.color[v] = colors[v]
            self.wyd[v] = wyds[v]
            if self.color[v] == WHITE:
                nw += 1
            elif self.color[v] == YELLOW:
                ny += 1
        self.n_white = nw
        self.n_wy = nw + ny

    def is_done(self):
        return self.n_wy == 0

    def whites(self):
        cdef int v
        return [v for v in range(self.n) if self.color[v] == WHITE]

    def snapshot(self):
        cdef int v
        return ([self.color[v] for v in range(self.n)],
                [self.wyd[v] for v in range(self.n)])

    cdef inline long long _w(self, int c, int i) nogil:
        if c == WHITE:
            return self.aw
        if c == YELLOW:
            return self.yw[i]
        if c == BLUE:
            return self.bw[i]
        return 0

    cdef inline int _spread(self, int x, int stamp, int tcount) nogil:
        cdef int j, t
        for j in range(self.indptr[x], self.indptr[x + 1]):
            t = self.indices[j]
            if self.mark[t] != stamp:
                self.mark[t] = stamp
                self.delta[t] = 1
                self.touched[tcount] = t
                tcount += 1
            else:
                self.delta[t] += 1
        return tcount

    cdef long long _single_drop(self, int v) nogil:
        cdef int cv = self.color[v]
        cdef long long drop
        cdef int stamp, tcount, j, u, t, idx, cu, ct, du, w2
        if cv == WHITE:
            drop = self.aw
        elif cv == YELLOW:
            drop = self.yw[self.wyd[v]]
        else:
            drop = self.bw[self.wyd[v]]

        self.stamp += 1
        stamp = self.stamp
        tcount = 0
        if cv != BLUE:
            tcount = self._spread(v, stamp, tcount)
        for j in range(self.indptr[v], self.indptr[v + 1]):
            u = self.indices[j]
            if self.color[u] == YELLOW:
                tcount = self._spread(u, stamp, tcount)

        self.pr[v] = stamp
        for j in range(self.indptr[v], self.indptr[v + 1]):
            u = self.indices[j]
            self.pr[u] = stamp
            cu = self.color[u]
            if cu == RED:
                continue
            du = self.delta[u] if self.mark[u] == stamp else 0
            w2 = self.wyd[u] - du
            if cu == WHITE:
                drop += self.aw - self.yw[w2]
            elif cu == YELLOW:
                drop += self.yw[self.wyd[u]] - self.bw[w2]
            else:
                drop += self.bw[self.wyd[u]] - self.bw[w2]
        for idx in range(tcount):
            t = self.touched[idx]
            if self.pr[t] == stamp:
                continue
            ct = self.color[t]
            if ct == YELLOW:
                drop += self.yw[self.wyd[t]] - self.yw[self.wyd[t] - self.delta[t]]
            elif ct == BLUE:
                drop += self.bw[self.wyd[t]] - self.bw[self.wyd[t] - self.delta[t]]
        return drop

    def single_drop(self, int v):
        if self.color[v] == RED:
            raise ValueError(f"vertex {v} is already selected")
        return self._single_drop(v)

    def best_single(self):
        cdef int v, best_v = -1
        cdef long long drop, best_drop = -1
        for v in range(self.n):
            if self.color[v] == RED:
                continue
            drop = self._single_drop(v)
            if drop > best_drop:
                best_v = v
                best_drop = drop
        return best_v, best_drop

    cdef long long _pair_drop(self, int p, int q) nogil:
        cdef int cp = self.color[p]
        cdef int cq = self.color[q]
        cdef long long drop = self._w(cp, self.wyd[p]) + self._w(cq, self.wyd[q])
        cdef int stamp, ccount, tcount, j, t, idx, ct, du, w2, r, rr

        self.stamp += 1
        stamp = self.stamp
        ccount = 0
        for rr in range(2):
            r = p if rr == 0 else q
            for j in range(self.indptr[r], self.indptr[r + 1]):
                t = self.indices[j]
                if t == p or t == q:
                    continue
                if self.cmark[t] != stamp:
                    self.cmark[t] = stamp
                    self.cnt[t] = 1
                    self.ctouched[ccount] = t
                    ccount += 1
                else:
                    self.cnt[t] += 1

        tcount = 0
        if cp != BLUE:
            tcount = self._spread(p, stamp, tcount)
        if cq != BLUE:
            tcount = self._spread(q, stamp, tcount)
        for idx in range(ccount):
            t = self.ctouched[idx]
            ct = self.color[t]
            if ct == YELLOW or (ct == WHITE and self.cnt[t] >= 2):
                tcount = self._spread(t, stamp, tcount)

        self.pr[p] = stamp
        self.pr[q] = stamp
        for idx in range(ccount):
            t = self.ctouched[idx]
            self.pr[t] = stamp
            ct = self.color[t]
            if ct == RED:
                continue
            du = self.delta[t] if self.mark[t] == stamp else 0
            w2 = self.wyd[t] - du
            if ct == WHITE:
                if self.cnt[t] == 1:
                    drop += self.aw - self.yw[w2]
                else:
                    drop += self.aw - self.bw[w2]
            elif ct == YELLOW:
                drop += self.yw[self.wyd[t]] - self.bw[w2]
            else:
                drop += self.bw[self.wyd[t]] - self.bw[w2]
        for idx in range(tcount):
            t = self.touched[idx]
            if self.pr[t] == stamp:
                continue
            ct = self.color[t]
            if ct == YELLOW:
                drop += self.yw[self.wyd[t]] - self.yw[self.wyd[t] - self.delta[t]]
            elif ct == BLUE:
                drop += self.bw[self.wyd[t]] - self.bw[self.wyd[t] - self.delta[t]]
        return drop

    def pair_drop(self, int p, int q):
        return self._pair_drop(p, q)

    def best_pair(self):
        cdef int p, q, u, w2, j, jj, stamp, pcount, idx
        cdef int best_p = -1, best_q = -1
        cdef long long drop, best_drop = -1
        for p in range(self.n):
            if self.color[p] == RED:
                continue
            self.stamp += 1
            stamp = self.stamp
            pcount = 0
            for j in range(self.indptr[p], self.indptr[p + 1]):
                u = self.indices[j]
                if u > p and self.color[u] != RED and self.pmark[u] != stamp:
                    self.pmark[u] = stamp
                    self.ctouched[pcount] = u
                    pcount += 1
                for jj in range(self.indptr[u], self.indptr[u + 1]):
                    w2 = self.indices[jj]
                    if w2 > p and self.color[w2] != RED and self.pmark[w2] != stamp:
                        self.pmark[w2] = stamp
                        self.ctouched[pcount] = w2
                        pcount += 1
            # ctouched doubles as the partner list; _pair_drop reuses it, so
            # copy the partners out first.
            partners = [self.ctouched[idx] for idx in range(pcount)]
            for q in partners:
                drop = self._pair_drop(p, q)
                if drop > best_drop or (drop == best_drop and p == best_p and q < best_q):
                    best_p = p
                    best_q = q
                    best_drop = drop
        return best_p, best_q, best_drop

    def apply(self, int v):
        cdef int cv = self.color[v]
        cdef int j, jj, u, cu, x
        if cv == RED:
            raise ValueError(f"vertex {v} is already selected")
        self.color[v] = RED
        if cv == WHITE:
            self.n_white -= 1
            self.n_wy -= 1
        elif cv == YELLOW:
            self.n_wy -= 1
        if cv != BLUE:
            for j in range(self.indptr[v], self.indptr[v + 1]):
                self.wyd[self.indices[j]] -= 1
        for j in range(self.indptr[v], self.indptr[v + 1]):
            u = self.indices[j]
            cu = self.color[u]
            if cu == WHITE:
                self.color[u] = YELLOW
                self.n_white -= 1
            elif cu == YELLOW:
                self.color[u] = BLUE
                self.n_wy -= 1
                for jj in range(self.indptr[u], self.indptr[u + 1]):
                    self.wyd[self.indices[jj]] -= 1
