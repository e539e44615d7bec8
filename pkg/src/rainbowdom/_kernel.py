"""Compiled depth-first branch-and-bound for k-rainbow domination.

Same search as ``solver._Search.minimize`` (index order, (cardinality, bitmask)
candidates, disjoint-supply packing bound, lowest-fresh-colour symmetry rule),
written as an explicit-stack loop so numba can compile it.
"""
import numpy as np
from numba import njit


@njit(cache=True)
def _bound(i, n, full, masks, seen, nbrmask, closed, card):
    free = ((1 << n) - 1) & ~((1 << i) - 1)
    bit = 1 << i
    required = 0
    # pass 0 detects dead ends and forced colours; passes 1..3 pack demands 3, 2, 1
    for w in range(i):
        if masks[w] == 0:
            miss = full & ~seen[w]
            if miss != 0:
                s = nbrmask[w] & free
                if s == 0:
                    return -1, 0
                if s == bit:
                    required |= miss
    lb = 0
    covered = 0
    for want in (3, 2, 1):
        for w in range(i):
            if masks[w] == 0:
                miss = full & ~seen[w]
                if miss != 0:
                    d = card[miss]
                    if (d >= 3 and want == 3) or d == want:
                        s = nbrmask[w] & free
                        if s & covered == 0:
                            lb += d
                            covered |= s
    for v in range(i, n):
        if full & ~seen[v] != 0:
            s = closed[v] & free
            if s & covered == 0:
                lb += 1
                covered |= s
    return lb, required


@njit(cache=True)
def minimize(n, k, indptr, indices, upper, symmetry):
    """Return (best weight, best masks, node count); best == upper means none below it."""
    full = (1 << k) - 1
    ncand = full + 1
    card = np.zeros(ncand, dtype=np.int64)
    for m in range(ncand):
        c = 0
        x = m
        while x:
            c += x & 1
            x >>= 1
        card[m] = c
    cands = np.zeros(ncand, dtype=np.int64)
    pos = 0
    for c in range(k + 1):
        for m in range(ncand):
            if card[m] == c:
                cands[pos] = m
                pos += 1
    lowest = np.zeros((ncand, k + 1), dtype=np.int64)
    for free in range(ncand):
        acc = 0
        j = 0
        for c in range(k):
            if (free >> c) & 1:
                j += 1
                acc |= 1 << c
                lowest[free, j] = acc
    nbrmask = np.zeros(n, dtype=np.int64)
    closed = np.zeros(n, dtype=np.int64)
    for v in range(n):
        m = 0
        for p in range(indptr[v], indptr[v + 1]):
            m |= 1 << indices[p]
        nbrmask[v] = m
        closed[v] = m | (1 << v)

    masks = np.zeros(n + 1, dtype=np.int64)
    best_masks = np.zeros(n, dtype=np.int64)
    seen = np.zeros((n + 1, n), dtype=np.int64)
    partial = np.zeros(n + 1, dtype=np.int64)
    used = np.zeros(n + 1, dtype=np.int64)
    req = np.zeros(n + 1, dtype=np.int64)
    ci = np.zeros(n + 1, dtype=np.int64)
    best = upper
    nodes = 0

    i = 0
    entering = True
    while i >= 0:
        if entering:
            nodes += 1
            lb, r = _bound(i, n, full, masks, seen[i], nbrmask, closed, card)
            if lb < 0 or partial[i] + lb >= best:
                i -= 1
                entering = False
                continue
            if i == n:
                best = partial[i]
                for v in range(n):
                    best_masks[v] = masks[v]
                i -= 1
                entering = False
                continue
            req[i] = r
            ci[i] = 0
        found = False
        s = 0
        while ci[i] < ncand:
            s = cands[ci[i]]
            ci[i] += 1
            if partial[i] + card[s] >= best:
                ci[i] = ncand
                break
            if s & req[i] != req[i]:
                continue
            if symmetry:
                fc = full & ~used[i]
                fresh = s & fc
                if fresh != 0 and fresh != lowest[fc, card[fresh]]:
                    continue
            found = True
            break
        if not found:
            i -= 1
            entering = False
            continue
        masks[i] = s
        for v in range(n):
            seen[i + 1, v] = seen[i, v]
        for p in range(indptr[i], indptr[i + 1]):
            seen[i + 1, indices[p]] |= s
        partial[i + 1] = partial[i] + card[s]
        used[i + 1] = used[i] | s
        i += 1
        entering = True
    return best, best_masks, nodes
