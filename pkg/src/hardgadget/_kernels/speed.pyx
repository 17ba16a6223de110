# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; a faster twin of hardgadget._kernels.pure.

Entry points take the same Python-level arguments (int bitmask adjacency)
and follow the same traversal order, so both backends return identical
verdicts and witnesses.
"""

import time

import numpy as np

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

FEASIBLE = 0
INFEASIBLE = 1
TIMEOUT = 2

DEF MAXN = 1024
DEF MAXW = 16  # MAXN / 64

ctypedef unsigned long long u64


def _to_words(int n, adj):
    cdef int W = (n + 63) >> 6
    arr = np.zeros((n, W), dtype=np.uint64)
    cdef int v, w
    for v in range(n):
        m = adj[v]
        w = 0
        while m:
            arr[v, w] = m & 0xFFFFFFFFFFFFFFFF
            m >>= 64
            w += 1
    return arr


cdef class _LinfSearch:
    cdef int n, W, t, ncl
    cdef long long nodes
    cdef double deadline
    cdef u64[:, ::1] adj, cl_mask, cl_adj
    cdef u64[::1] assigned
    cdef int[::1] order, posdeg, labels, committed, cl_cap, cl_size
    cdef int[::1] bump_stack
    cdef int bump_top

    cdef inline bint lb_exceeds(self, int w):
        cdef int lost_all = 0, best, c, m, cand, k
        for k in range(self.W):
            lost_all += __builtin_popcountll(self.adj[w, k] & self.assigned[k])
        if lost_all <= self.t:
            return False
        best = lost_all
        for c in range(self.ncl):
            m = 0
            for k in range(self.W):
                m += __builtin_popcountll(self.adj[w, k] & self.cl_mask[c, k])
            if m:
                cand = (lost_all - m) + (self.cl_size[c] - m)
                if cand < best:
                    if cand <= self.t:
                        return False
                    best = cand
        return best > self.t

    cdef inline bint forward_fail(self, int u):
        # u is already assigned; scan its still-unassigned positive neighbours
        cdef int k, w
        cdef u64 word
        for k in range(self.W):
            word = self.adj[u, k] & ~self.assigned[k]
            while word:
                w = (k << 6) + __builtin_ctzll(word)
                word &= word - 1
                if self.lb_exceeds(w):
                    return True
        return False

    cdef int place(self, int pos):
        cdef int u, c, k, m, commit_u, lost_all, res, v, i
        cdef int ncl0, old_cap, bump_mark, nbump
        cdef bint fresh, bridged
        cdef int u_word, u_has_future
        cdef u64 word, bit_u
        cdef u64 old_adj[MAXW]
        self.nodes += 1
        if self.deadline > 0 and (self.nodes & 0x3FF) == 0:
            if time.monotonic() > self.deadline:
                return TIMEOUT
        if pos == self.n:
            return FEASIBLE
        u = self.order[pos]
        u_word = u >> 6
        bit_u = (<u64>1) << (u & 63)

        lost_all = 0
        u_has_future = 0
        for k in range(self.W):
            lost_all += __builtin_popcountll(self.adj[u, k] & self.assigned[k])
            if self.adj[u, k] & ~self.assigned[k]:
                u_has_future = 1

        ncl0 = self.ncl
        for c in range(ncl0 + 1):
            fresh = c == ncl0
            if not fresh:
                if self.cl_size[c] >= self.cl_cap[c]:
                    continue
                m = 0
                for k in range(self.W):
                    m += __builtin_popcountll(self.adj[u, k] & self.cl_mask[c, k])
                if m == 0:
                    # only joinable if both sides can still be bridged
                    if not u_has_future:
                        continue
                    bridged = False
                    for k in range(self.W):
                        word = self.cl_adj[c, k] & ~self.assigned[k]
                        if k == u_word:
                            word &= ~bit_u
                        if word:
                            bridged = True
                            break
                    if not bridged:
                        continue
                commit_u = (lost_all - m) + (self.cl_size[c] - m)
                if commit_u > self.t:
                    continue
            else:
                if lost_all > self.t:
                    break
                commit_u = lost_all

            # collect vertices whose committed count increases
            bump_mark = self.bump_top
            nbump = 0
            for k in range(self.W):
                if not fresh:
                    word = (self.cl_mask[c, k] & ~self.adj[u, k]) | \
                           (self.adj[u, k] & self.assigned[k] & ~self.cl_mask[c, k])
                else:
                    word = self.adj[u, k] & self.assigned[k]
                while word:
                    v = (k << 6) + __builtin_ctzll(word)
                    word &= word - 1
                    if self.committed[v] >= self.t:
                        nbump = -1
                        break
                    self.bump_stack[bump_mark + nbump] = v
                    nbump += 1
                if nbump < 0:
                    break
            if nbump < 0:
                continue

            for i in range(nbump):
                self.committed[self.bump_stack[bump_mark + i]] += 1
            self.bump_top = bump_mark + nbump
            self.labels[u] = c
            self.committed[u] = commit_u
            old_cap = 0
            if not fresh:
                for k in range(self.W):
                    old_adj[k] = self.cl_adj[c, k]
                    self.cl_adj[c, k] |= self.adj[u, k]
                old_cap = self.cl_cap[c]
                if self.posdeg[u] + self.t + 1 < old_cap:
                    self.cl_cap[c] = self.posdeg[u] + self.t + 1
                self.cl_mask[c, u_word] |= bit_u
                self.cl_size[c] += 1
            else:
                for k in range(self.W):
                    self.cl_mask[c, k] = 0
                    self.cl_adj[c, k] = self.adj[u, k]
                self.cl_mask[c, u_word] = bit_u
                self.cl_cap[c] = self.posdeg[u] + self.t + 1
                self.cl_size[c] = 1
                self.ncl = ncl0 + 1
            self.assigned[u_word] |= bit_u

            if not self.forward_fail(u):
                res = self.place(pos + 1)
                if res != INFEASIBLE:
                    return res

            self.assigned[u_word] &= ~bit_u
            if not fresh:
                self.cl_size[c] -= 1
                self.cl_mask[c, u_word] &= ~bit_u
                self.cl_cap[c] = old_cap
                for k in range(self.W):
                    self.cl_adj[c, k] = old_adj[k]
            else:
                self.ncl = ncl0
            self.labels[u] = -1
            for i in range(nbump):
                self.committed[self.bump_stack[bump_mark + i]] -= 1
            self.bump_top = bump_mark
        return INFEASIBLE


def linf_feasible(int n, adj, int t, order, budget=None):
    """Exact l_inf <= t feasibility decision; see the pure twin for the contract."""
    if n == 0:
        return FEASIBLE, []
    if n > MAXN:
        raise ValueError(f"compiled kernel supports n <= {MAXN}, got {n}")
    cdef _LinfSearch s = _LinfSearch()
    s.n = n
    s.W = (n + 63) >> 6
    s.t = t
    s.ncl = 0
    s.nodes = 0
    s.deadline = -1.0 if budget is None else time.monotonic() + float(budget)
    s.adj = _to_words(n, adj)
    s.cl_mask = np.zeros((n, s.W), dtype=np.uint64)
    s.cl_adj = np.zeros((n, s.W), dtype=np.uint64)
    s.assigned = np.zeros(s.W, dtype=np.uint64)
    s.order = np.asarray(order, dtype=np.int32)
    s.posdeg = np.asarray([int(a).bit_count() for a in adj], dtype=np.int32)
    s.labels = np.full(n, -1, dtype=np.int32)
    s.committed = np.zeros(n, dtype=np.int32)
    s.cl_cap = np.zeros(n, dtype=np.int32)
    s.cl_size = np.zeros(n, dtype=np.int32)
    s.bump_stack = np.zeros(n * n, dtype=np.int32)
    s.bump_top = 0
    cdef int status = s.place(0)
    if status == FEASIBLE:
        return FEASIBLE, [int(s.labels[v]) for v in range(n)]
    return status, None


cdef class _OptSearch:
    cdef int n
    cdef double q
    cdef bint use_inf, has_best
    cdef int best_max
    cdef double best_sum
    cdef u64[::1] adj, cl_masks
    cdef int[::1] labels, best_labels

    cdef void evaluate(self):
        cdef int u, d, val
        cdef double total
        cdef u64 bit
        if self.use_inf:
            val = 0
            for u in range(self.n):
                bit = (<u64>1) << u
                d = __builtin_popcountll(self.adj[u] ^ (self.cl_masks[self.labels[u]] & ~bit))
                if d > val:
                    val = d
                    if self.has_best and val >= self.best_max:
                        return
            if not self.has_best or val < self.best_max:
                self.best_max = val
                self.has_best = True
                for u in range(self.n):
                    self.best_labels[u] = self.labels[u]
        else:
            total = 0.0
            for u in range(self.n):
                bit = (<u64>1) << u
                d = __builtin_popcountll(self.adj[u] ^ (self.cl_masks[self.labels[u]] & ~bit))
                total += (<double>d) ** self.q
                if self.has_best and total >= self.best_sum:
                    return
            if not self.has_best or total < self.best_sum:
                self.best_sum = total
                self.has_best = True
                for u in range(self.n):
                    self.best_labels[u] = self.labels[u]

    cdef void rec(self, int v, int k):
        cdef int c
        cdef u64 bit
        if v == self.n:
            self.evaluate()
            return
        bit = (<u64>1) << v
        for c in range(k):
            self.labels[v] = c
            self.cl_masks[c] |= bit
            self.rec(v + 1, k)
            self.cl_masks[c] &= ~bit
        self.labels[v] = k
        self.cl_masks[k] = bit
        self.rec(v + 1, k + 1)


def partition_opt(int n, adj, q):
    """Exhaustive l_q-optimal partition (q=None for l_inf); n <= 64 supported."""
    if n == 0:
        return 0, []
    if n > 64:
        raise ValueError("partition_opt kernel supports n <= 64")
    cdef _OptSearch s = _OptSearch()
    s.n = n
    s.use_inf = q is None
    s.q = 0.0 if q is None else float(q)
    s.has_best = False
    s.best_max = 0
    s.best_sum = 0.0
    s.adj = np.asarray([int(a) for a in adj], dtype=np.uint64)
    s.cl_masks = np.zeros(n, dtype=np.uint64)
    s.labels = np.zeros(n, dtype=np.int32)
    s.best_labels = np.zeros(n, dtype=np.int32)
    s.rec(0, 0)
    value = s.best_max if s.use_inf else s.best_sum
    return value, [int(s.best_labels[v]) for v in range(n)]
