# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled solver kernel.

Same algorithm and same outputs as _pykernel.py (the pure-Python twin
selected when this extension is missing); see there for the algorithm
notes.  Hot loops only: everything is flat arrays and C integers.
"""

import numpy as np

BACKEND_NAME = "compiled"

MAXK = 16

_STATUS_OK = 0
_STATUS_BUDGET = 1


def solve_kernel(int n, int k, bint attacking, int[:] indptr, int[:] indices,
                 long long budget):
    """Label every state of the (n, k, variant) game; see the twin."""
    if k > MAXK:
        raise ValueError(f"kernel supports at most {MAXK} cops, got {k}")

    cdef int rows = n + k + 1
    cdef int cols = k + 2
    binom_arr = np.zeros((rows, cols), dtype=np.int64)
    cdef long long[:, :] binom = binom_arr
    cdef int a, b
    for a in range(rows):
        binom[a, 0] = 1
        for b in range(1, min(a, k + 1) + 1):
            binom[a, b] = binom[a - 1, b - 1] + binom[a - 1, b]

    cdef int j_lo = 0 if attacking else k
    cdef long long base_arr[18]
    cdef long long total = 0
    cdef int j
    for j in range(j_lo, k + 1):
        base_arr[j] = total
        total += (binom[n + j - 1, j] if j > 0 else 1) * n * 2

    labels_np = np.zeros(total, dtype=np.uint8)
    ranks_np = np.full(total, -1, dtype=np.int32)
    counter_np = np.zeros(total, dtype=np.int32)
    queue_np = np.zeros(total, dtype=np.int64)
    cdef unsigned char[:] label = labels_np
    cdef int[:] rank = ranks_np
    cdef int[:] counter = counter_np
    cdef long long[:] queue = queue_np

    cnt_np = np.zeros(n, dtype=np.int32)
    cdef int[:] cnt = cnt_np

    cdef long long transitions = 0
    cdef long long valid = 0
    cdef long long tail = 0, head = 0
    cdef long long mrank, row, srob, scop, s, rem, p, pm, rowp
    cdef int ms[18]
    cdef int cand[18]
    cdef int tmp[18]
    cdef int idx[18]
    cdef int i, t, r, u, v, d, rp, cu, deg_r, rho, turn, capture, c, hi, cc
    cdef int done, contains_r

    # Phase 1: successor counters for robber-move states, capture seeds
    # for cop-move states.
    for j in range(j_lo, k + 1):
        for i in range(j):
            ms[i] = 0
        mrank = 0
        while True:
            for i in range(j):
                cnt[ms[i]] += 1
            row = base_arr[j] + mrank * n * 2
            for r in range(n):
                if cnt[r]:
                    continue
                valid += 2
                c = 1
                capture = 0
                for t in range(indptr[r], indptr[r + 1]):
                    cu = cnt[indices[t]]
                    if cu == 0 or (attacking and cu == 1):
                        c += 1
                    if cu:
                        capture = 1
                srob = row + r * 2 + 1
                counter[srob] = c
                transitions += 1 + indptr[r + 1] - indptr[r]
                if j > 0 and capture:
                    scop = srob - 1
                    label[scop] = 1
                    rank[scop] = 1
                    queue[tail] = scop
                    tail += 1
            for i in range(j):
                cnt[ms[i]] -= 1
            if transitions > budget:
                return (_STATUS_BUDGET, labels_np, ranks_np, valid, transitions)
            i = 0
            while i < j:
                cc = ms[i + 1] if i + 1 < j else n - 1
                if ms[i] < cc:
                    break
                i += 1
            if i == j:
                break
            ms[i] += 1
            for t in range(i):
                ms[t] = 0
            mrank += 1

    # Phase 2: rank-monotone backward propagation.
    while head < tail:
        s = queue[head]
        head += 1
        rho = rank[s]
        j = k
        while j > j_lo and s < base_arr[j]:
            j -= 1
        rem = s - base_arr[j]
        turn = rem & 1
        rem >>= 1
        r = <int> (rem % n)
        mrank = rem // n

        # unrank the multiset
        rem = mrank
        hi = n - 1 + j - 1
        for i in range(j - 1, -1, -1):
            cc = hi
            while binom[cc, i + 1] > rem:
                cc -= 1
            ms[i] = cc - i
            rem -= binom[cc, i + 1]
            hi = cc - 1

        if turn == 1:
            # cop-move predecessors of a robber-move state
            if j == 0:
                continue
            for d in range(j):
                idx[d] = 0
                cand[d] = ms[d]
            while True:
                transitions += 1
                contains_r = 0
                for d in range(j):
                    if cand[d] == r:
                        contains_r = 1
                        break
                if not contains_r:
                    for d in range(j):
                        v = cand[d]
                        t = d
                        while t > 0 and tmp[t - 1] > v:
                            tmp[t] = tmp[t - 1]
                            t -= 1
                        tmp[t] = v
                    pm = 0
                    for i in range(j):
                        pm += binom[tmp[i] + i, i + 1]
                    p = base_arr[j] + (pm * n + r) * 2
                    if label[p] == 0:
                        label[p] = 1
                        rank[p] = rho + 1
                        queue[tail] = p
                        tail += 1
                d = 0
                while d < j:
                    v = ms[d]
                    if idx[d] < indptr[v + 1] - indptr[v]:
                        idx[d] += 1
                        cand[d] = indices[indptr[v] + idx[d] - 1]
                        break
                    idx[d] = 0
                    cand[d] = v
                    d += 1
                if d == j:
                    break
        else:
            # robber-move predecessors of a cop-move state
            for i in range(j):
                cnt[ms[i]] += 1
            row = base_arr[j] + mrank * n * 2
            p = row + r * 2 + 1
            transitions += 1
            counter[p] -= 1
            if counter[p] == 0 and label[p] == 0:
                label[p] = 1
                rank[p] = rho + 1
                queue[tail] = p
                tail += 1
            for t in range(indptr[r], indptr[r + 1]):
                rp = indices[t]
                if cnt[rp]:
                    continue
                p = row + rp * 2 + 1
                transitions += 1
                counter[p] -= 1
                if counter[p] == 0 and label[p] == 0:
                    label[p] = 1
                    rank[p] = rho + 1
                    queue[tail] = p
                    tail += 1
            if attacking and j < k:
                # predecessor had one extra cop standing on r
                for i in range(j):
                    tmp[i] = ms[i]
                t = j
                while t > 0 and tmp[t - 1] > r:
                    tmp[t] = tmp[t - 1]
                    t -= 1
                tmp[t] = r
                pm = 0
                for i in range(j + 1):
                    pm += binom[tmp[i] + i, i + 1]
                rowp = base_arr[j + 1] + pm * n * 2
                for t in range(indptr[r], indptr[r + 1]):
                    rp = indices[t]
                    if cnt[rp]:
                        continue
                    p = rowp + rp * 2 + 1
                    transitions += 1
                    counter[p] -= 1
                    if counter[p] == 0 and label[p] == 0:
                        label[p] = 1
                        rank[p] = rho + 1
                        queue[tail] = p
                        tail += 1
            for i in range(j):
                cnt[ms[i]] -= 1
        if transitions > budget:
            return (_STATUS_BUDGET, labels_np, ranks_np, valid, transitions)

    return (_STATUS_OK, labels_np, ranks_np, valid, transitions)


def diam2_clawfree_masks(int n):
    """Edge-bitmasks of all labelled n-vertex graphs with diameter
    exactly 2 and no induced claw, ascending."""
    if n > 8:
        raise ValueError(f"mask enumeration supports n <= 8, got {n}")
    cdef int npairs = n * (n - 1) // 2
    cdef long long full = (<long long> 1 << npairs) - 1
    cdef int pu[28]
    cdef int pv[28]
    cdef int i = 0
    cdef int u, v, x, y, z
    for u in range(n):
        for v in range(u + 1, n):
            pu[i] = u
            pv[i] = v
            i += 1
    cdef int adj[8]
    cdef int nb[8]
    cdef long long em
    cdef long long bit
    cdef int ok, claw, d, au, ay
    out = []
    for em in range(full + 1):
        if em == full:
            continue
        for u in range(n):
            adj[u] = 0
        for i in range(npairs):
            if em >> i & 1:
                adj[pu[i]] |= 1 << pv[i]
                adj[pv[i]] |= 1 << pu[i]
        ok = 1
        for u in range(n):
            au = adj[u]
            for v in range(u + 1, n):
                if not (au >> v & 1) and not (au & adj[v]):
                    ok = 0
                    break
            if not ok:
                break
        if not ok:
            continue
        claw = 0
        for v in range(n):
            d = 0
            for u in range(n):
                if adj[v] >> u & 1:
                    nb[d] = u
                    d += 1
            if d < 3:
                continue
            for x in range(d):
                au = adj[nb[x]]
                for y in range(x + 1, d):
                    if au >> nb[y] & 1:
                        continue
                    ay = adj[nb[y]]
                    for z in range(y + 1, d):
                        if not (au >> nb[z] & 1) and not (ay >> nb[z] & 1):
                            claw = 1
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
