"""Pure-Python search kernels (fallback twin of the compiled extension).

Both backends expose the same two entry points with identical semantics and
identical traversal order, so verdicts and witnesses agree bit-for-bit:

* ``linf_feasible``: exact decision "is there a clustering with at most t
  mistakes per vertex", by backtracking over canonical partition prefixes.
* ``partition_opt``: exhaustive minimization of the l_q disagreement norm
  over all set partitions (restricted-growth-string enumeration).

Vertices are 0-based here; adjacency is one Python int bitmask per vertex.
"""

from __future__ import annotations

import time

FEASIBLE = 0
INFEASIBLE = 1
TIMEOUT = 2

_TIME_CHECK_MASK = 0x3FF  # consult the clock every 1024 search nodes


def linf_feasible(
    n: int,
    adj: list[int],
    t: int,
    order: list[int],
    budget: float | None = None,
) -> tuple[int, list[int] | None]:
    """Decide whether some clustering has at most t mistakes at every vertex.

    Vertices are assigned along `order`; each is tried in every existing
    cluster (creation order) and then in a fresh cluster.  A partial
    assignment is abandoned as soon as any vertex's already-certain mistakes
    exceed t.  Clusters are capped at min over members of (posdeg + t + 1),
    and are kept positively connectable: a vertex may only join a cluster
    it has a positive neighbour in, or one both sides of which can still be
    bridged by unassigned vertices (splitting a positively disconnected
    cluster never increases any vertex's mistakes, so this loses nothing).
    """
    if n == 0:
        return FEASIBLE, []
    deadline = None if budget is None else time.monotonic() + budget
    posdeg = [a.bit_count() for a in adj]
    labels = [-1] * n
    committed = [0] * n
    cl_mask: list[int] = []
    cl_adj: list[int] = []
    cl_cap: list[int] = []
    cl_size: list[int] = []
    assigned = 0
    nodes = 0

    def lb_exceeds(w: int) -> bool:
        # lower bound on the final mistakes of unassigned w, over all its options
        aw = adj[w]
        lost_all = (aw & assigned).bit_count()
        if lost_all <= t:
            return False
        best = lost_all
        for c in range(len(cl_mask)):
            m = (aw & cl_mask[c]).bit_count()
            if m:
                cand = (lost_all - m) + (cl_size[c] - m)
                if cand < best:
                    if cand <= t:
                        return False
                    best = cand
        return best > t

    def place(pos: int) -> int:
        nonlocal assigned, nodes
        nodes += 1
        if deadline is not None and nodes & _TIME_CHECK_MASK == 0:
            if time.monotonic() > deadline:
                return TIMEOUT
        if pos == n:
            return FEASIBLE
        u = order[pos]
        au = adj[u]
        bit_u = 1 << u
        unassigned = ~assigned
        lost_all = (au & assigned).bit_count()
        u_has_future = bool(au & unassigned & ~bit_u)

        for c in range(len(cl_mask)):
            if cl_size[c] >= cl_cap[c]:
                continue
            inter = au & cl_mask[c]
            if not inter and not (u_has_future and cl_adj[c] & unassigned & ~bit_u):
                continue
            m = inter.bit_count()
            commit_u = (lost_all - m) + (cl_size[c] - m)
            if commit_u > t:
                continue
            bump = (cl_mask[c] & ~au) | (au & assigned & ~cl_mask[c])
            bb, bumped, ok = bump, [], True
            while bb:
                v = (bb & -bb).bit_length() - 1
                bb &= bb - 1
                if committed[v] >= t:
                    ok = False
                    break
                bumped.append(v)
            if not ok:
                continue
            for v in bumped:
                committed[v] += 1
            labels[u] = c
            committed[u] = commit_u
            old_adj, old_cap = cl_adj[c], cl_cap[c]
            cl_mask[c] |= bit_u
            cl_adj[c] |= au
            cl_cap[c] = min(old_cap, posdeg[u] + t + 1)
            cl_size[c] += 1
            assigned |= bit_u

            fb, fail = au & ~assigned, False
            while fb:
                w = (fb & -fb).bit_length() - 1
                fb &= fb - 1
                if lb_exceeds(w):
                    fail = True
                    break
            if not fail:
                res = place(pos + 1)
                if res != INFEASIBLE:
                    return res

            assigned &= ~bit_u
            cl_size[c] -= 1
            cl_cap[c] = old_cap
            cl_adj[c] = old_adj
            cl_mask[c] &= ~bit_u
            labels[u] = -1
            for v in bumped:
                committed[v] -= 1

        # fresh cluster
        bb, bumped, ok = au & assigned, [], True
        while bb:
            v = (bb & -bb).bit_length() - 1
            bb &= bb - 1
            if committed[v] >= t:
                ok = False
                break
            bumped.append(v)
        if ok and lost_all <= t:
            for v in bumped:
                committed[v] += 1
            labels[u] = len(cl_mask)
            committed[u] = lost_all
            cl_mask.append(bit_u)
            cl_adj.append(au)
            cl_cap.append(posdeg[u] + t + 1)
            cl_size.append(1)
            assigned |= bit_u

            fb, fail = au & ~assigned, False
            while fb:
                w = (fb & -fb).bit_length() - 1
                fb &= fb - 1
                if lb_exceeds(w):
                    fail = True
                    break
            if not fail:
                res = place(pos + 1)
                if res != INFEASIBLE:
                    return res

            assigned &= ~bit_u
            cl_size.pop()
            cl_cap.pop()
            cl_adj.pop()
            cl_mask.pop()
            labels[u] = -1
            for v in bumped:
                committed[v] -= 1
        return INFEASIBLE

    status = place(0)
    return status, (labels if status == FEASIBLE else None)


def partition_opt(n: int, adj: list[int], q: float | None) -> tuple[float, list[int]]:
    """Exhaustively minimize the l_q norm of the disagreement vector.

    q = None means l_infinity (the returned value is the integer max count);
    finite q returns the sum of counts**q, leaving the 1/q root to the
    caller.  The first optimal partition in restricted-growth order wins.
    """
    if n == 0:
        return 0, []
    best_val: float | None = None
    best_labels: list[int] | None = None
    labels = [0] * n
    cl_masks: list[int] = []

    def evaluate() -> None:
        nonlocal best_val, best_labels
        if q is None:
            val = 0
            for u in range(n):
                d = (adj[u] ^ (cl_masks[labels[u]] & ~(1 << u))).bit_count()
                if d > val:
                    val = d
                    if best_val is not None and val >= best_val:
                        return
            if best_val is None or val < best_val:
                best_val, best_labels = val, labels.copy()
        else:
            total = 0.0
            for u in range(n):
                d = (adj[u] ^ (cl_masks[labels[u]] & ~(1 << u))).bit_count()
                total += float(d) ** q
                if best_val is not None and total >= best_val:
                    return
            if best_val is None or total < best_val:
                best_val, best_labels = total, labels.copy()

    def rec(v: int, k: int) -> None:
        if v == n:
            evaluate()
            return
        bit = 1 << v
        for c in range(k):
            labels[v] = c
            cl_masks[c] |= bit
            rec(v + 1, k)
            cl_masks[c] &= ~bit
        labels[v] = k
        cl_masks.append(bit)
        rec(v + 1, k + 1)
        cl_masks.pop()

    rec(0, 0)
    assert best_val is not None and best_labels is not None
    return best_val, best_labels
