"""Pure-Python twin of the compiled solver kernel.

Selected at import time when the compiled extension is unavailable;
also used directly by the benchmark.  Same inputs, same outputs, same
algorithm: backward-induction attractor computation with per-state
remaining-successor counters, processing each state once through a
rank-monotone FIFO queue.

Backward pass instead of forward enumeration: a cop-move state is
labelled cop-win the first time any successor turns cop-win, so the
expensive combined-cop-move enumeration runs only once per cop-win
robber-move state (in reverse), never per cop-move state.
"""

from __future__ import annotations

from itertools import product

import numpy as np

BACKEND_NAME = "python"

_STATUS_OK = 0
_STATUS_BUDGET = 1


def solve_kernel(n, k, attacking, indptr, indices, budget):
    """Label every state of the (n, k, variant) game.

    Returns (status, labels, ranks, valid_states, transitions) where
    labels[sid] is 1 for cop-win states and ranks[sid] is the optimal
    number of moves to capture (-1 for robber-win or unused slots).
    """
    nbrs = [tuple(int(x) for x in indices[indptr[v] : indptr[v + 1]]) for v in range(n)]
    j_levels = list(range(k + 1)) if attacking else [k]

    rows = n + k + 1
    binom = [[0] * (k + 2) for _ in range(rows)]
    for a in range(rows):
        binom[a][0] = 1
        for b in range(1, min(a, k + 1) + 1):
            binom[a][b] = binom[a - 1][b - 1] + binom[a - 1][b]

    mcount = {j: (binom[n + j - 1][j] if j else 1) for j in j_levels}
    base = {}
    total = 0
    for j in j_levels:
        base[j] = total
        total += mcount[j] * n * 2

    label = bytearray(total)
    rank = [-1] * total
    counter = [0] * total
    queue: list[int] = []
    transitions = 0
    valid = 0

    def mrank_of(ms):
        r = 0
        for i, v in enumerate(ms):
            r += binom[v + i][i + 1]
        return r

    def unrank(j, mrank):
        out = [0] * j
        rem = mrank
        hi = n - 1 + j - 1
        for i in range(j - 1, -1, -1):
            c = hi
            while binom[c][i + 1] > rem:
                c -= 1
            out[i] = c - i
            rem -= binom[c][i + 1]
            hi = c - 1
        return out

    def _partial():
        return (
            _STATUS_BUDGET,
            np.frombuffer(bytes(label), dtype=np.uint8).copy(),
            np.array(rank, dtype=np.int32),
            valid,
            transitions,
        )

    # Phase 1: successor counters for robber-move states, capture seeds
    # for cop-move states.
    cnt = [0] * n
    for j in j_levels:
        b = base[j]
        ms = [0] * j
        mrank = 0
        while True:
            for v in ms:
                cnt[v] += 1
            row = b + mrank * n * 2
            for r in range(n):
                if cnt[r]:
                    continue
                valid += 2
                c = 1
                capture = False
                for u in nbrs[r]:
                    cu = cnt[u]
                    if cu == 0 or (attacking and cu == 1):
                        c += 1
                    if cu:
                        capture = True
                srob = row + r * 2 + 1
                counter[srob] = c
                transitions += 1 + len(nbrs[r])
                if j and capture:
                    scop = srob - 1
                    label[scop] = 1
                    rank[scop] = 1
                    queue.append(scop)
            for v in ms:
                cnt[v] -= 1
            if transitions > budget:
                return _partial()
            # advance the multiset odometer (colex order = rank order)
            i = 0
            while i < j:
                cap = ms[i + 1] if i + 1 < j else n - 1
                if ms[i] < cap:
                    break
                i += 1
            if i == j:
                break
            ms[i] += 1
            for t in range(i):
                ms[t] = 0
            mrank += 1

    # Phase 2: rank-monotone backward propagation.
    head = 0
    while head < len(queue):
        s = queue[head]
        head += 1
        rho = rank[s]
        for j in reversed(j_levels):
            if s >= base[j]:
                break
        rem = s - base[j]
        turn = rem & 1
        rem >>= 1
        r = rem % n
        mrank = rem // n
        ms = unrank(j, mrank)

        if turn == 1:
            # cop-move predecessors: every multiset that can step onto ms
            if j == 0:
                continue
            opts = [(v,) + nbrs[v] for v in ms]
            b = base[j]
            for cand in product(*opts):
                transitions += 1
                if r in cand:
                    continue
                p = b + (mrank_of(sorted(cand)) * n + r) * 2
                if not label[p]:
                    label[p] = 1
                    rank[p] = rho + 1
                    queue.append(p)
        else:
            # robber-move predecessors: pass, ordinary moves, attacks
            row = base[j] + mrank * n * 2
            preds = [row + r * 2 + 1]
            for rp in nbrs[r]:
                if rp not in ms:
                    preds.append(row + rp * 2 + 1)
            if attacking and j < k:
                plus = sorted(ms + [r])
                rowp = base[j + 1] + mrank_of(plus) * n * 2
                for rp in nbrs[r]:
                    if rp not in ms:
                        preds.append(rowp + rp * 2 + 1)
            transitions += len(preds)
            for p in preds:
                counter[p] -= 1
                if counter[p] == 0 and not label[p]:
                    label[p] = 1
                    rank[p] = rho + 1
                    queue.append(p)
        if transitions > budget:
            return _partial()

    return (
        _STATUS_OK,
        np.frombuffer(bytes(label), dtype=np.uint8).copy(),
        np.array(rank, dtype=np.int32),
        valid,
        transitions,
    )


def diam2_clawfree_masks(n):
    """Edge-bitmasks of all labelled n-vertex graphs with diameter
    exactly 2 and no induced claw, ascending."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    npairs = len(pairs)
    full = (1 << npairs) - 1
    out = []
    for em in range(1 << npairs):
        if em == full:
            continue  # complete graph has diameter 1
        adj = [0] * n
        t = em
        while t:
            i = (t & -t).bit_length() - 1
            u, v = pairs[i]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            t &= t - 1
        ok = True
        for u in range(n):
            au = adj[u]
            for v in range(u + 1, n):
                if not (au >> v & 1) and not (au & adj[v]):
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        claw = False
        for v in range(n):
            nb = [u for u in range(n) if adj[v] >> u & 1]
            d = len(nb)
            if d < 3:
                continue
            for x in range(d):
                ax = adj[nb[x]]
                for y in range(x + 1, d):
                    if ax >> nb[y] & 1:
                        continue
                    ay = adj[nb[y]]
                    for z in range(y + 1, d):
                        if not (ax >> nb[z] & 1) and not (ay >> nb[z] & 1):
                            claw = True
                            break
                    if claw:
                        break
                if claw:
                    break
            if claw:
                break
        if not claw:
            out.append(em)
    return np.array(out, dtype=np.int64)
