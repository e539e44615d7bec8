"""Frontier dynamic program for middle graphs of paths and cycles.

Elements are swept in the order v_1, e(v_1 v_2), v_2, ..., so every middle-graph
adjacency spans at most two positions. The state keeps, for each element
whose neighbourhood is still open, its colour set and the colours it has
already seen (an element with a non-empty set is simply satisfied). An
element leaves the state once its last neighbour is placed and is checked
then. For cycles the first two elements stay open until the closing edge
arrives, which plays the role of conditioning on the boundary window.
States are reduced modulo colour permutations.
"""
from __future__ import annotations

from itertools import permutations

from .errors import DomainError
from .graph import Edge, Graph, MiddleGraph, Vertex, generate, middle_graph
from .rainbow import check_k, full_mask, popcount

_MAX_N = 10**5


def _perm_tables(k: int) -> list[list[int]]:
    if k > 4:
        return [list(range(1 << k))]
    tables = []
    for perm in permutations(range(k)):
        table = []
        for m in range(1 << k):
            out = 0
            for c in range(k):
                if m >> c & 1:
                    out |= 1 << perm[c]
            table.append(out)
        tables.append(table)
    return tables


def frontier_dp(h: Graph, order: list[int], k: int) -> int:
    """γ_rk(H) by sweeping host vertices in ``order``; cost grows with the frontier width."""
    check_k(k)
    n = h.order
    if sorted(order) != list(range(n)):
        raise DomainError("order must be a permutation of the host vertices")
    full = full_mask(k)
    base = full + 1
    pos = {v: p for p, v in enumerate(order)}
    nbrs = [[pos[w] for w in h.adjacency[v]] for v in order]
    last = [max([t] + nbrs[t]) for t in range(n)]
    tables = _perm_tables(k)
    card = [popcount(m) for m in range(base)]

    def canon(entries):
        return min(tuple(tb[e // base] * base + tb[e % base] for e in entries) for tb in tables)

    # step signatures depend only on the order, so compute them up front
    sigs = []
    frontier: list[int] = []
    for t in range(n):
        back = tuple(frontier.index(p) for p in nbrs[t] if p < t)
        keep = tuple(last[f] > t for f in frontier)
        stays = last[t] > t
        sigs.append((back, keep, stays))
        frontier = [f for f, kept in zip(frontier, keep) if kept] + ([t] if stays else [])

    layer = {(): 0}
    offset = 0
    history: dict = {}
    cache: dict = {}
    t = 0
    while t < n:
        # a repeated normalised layer under a repeating signature run repeats forever
        snap = (sigs[t], frozenset(layer.items()))
        if snap in history:
            t0, off0 = history.pop(snap)
            p = t - t0
            reps = 0
            while t + (reps + 1) * p <= n and sigs[t + reps * p : t + (reps + 1) * p] == sigs[t0:t]:
                reps += 1
            if reps:
                offset += reps * (offset - off0)
                t += reps * p
                history.clear()
                continue
        history[snap] = (t, offset)
        sig = sigs[t]
        back, keep, stays = sig
        nxt: dict = {}
        for state, cost in layer.items():
            key = (sig, state)
            moves = cache.get(key)
            if moves is None:
                moves = []
                for s in range(base):
                    entries = list(state)
                    seen_t = 0
                    for j in back:
                        m, sn = divmod(entries[j], base)
                        seen_t |= m
                        if m == 0:
                            entries[j] = sn | s
                    mine = s * base + (full if s else seen_t)
                    ok = True
                    out = []
                    for e, kept in zip(entries, keep):
                        if kept:
                            out.append(e)
                        elif e // base == 0 and e % base != full:
                            ok = False
                            break
                    if not ok:
                        continue
                    if stays:
                        out.append(mine)
                    elif s == 0 and seen_t != full:
                        continue
                    moves.append((canon(out), card[s]))
                cache[key] = moves
            for ns, w in moves:
                c = cost + w
                if c < nxt.get(ns, c + 1):
                    nxt[ns] = c
        low = min(nxt.values())
        layer = {st: c - low for st, c in nxt.items()}
        offset += low
        t += 1
    return offset + min(layer.values())


def sweep_order(g: Graph, mg: MiddleGraph | None = None) -> list[int]:
    """Host order v, e, v, e, ... along a path or cycle graph (0-based labels)."""
    if g.order == 0:
        return []
    if g.max_degree > 2 or not g.is_connected():
        raise DomainError("sweep order needs a connected graph of maximum degree 2")
    mg = mg or middle_graph(g)
    start = min(range(g.order), key=lambda v: (g.degree(v), v))
    walk = [start]
    visited = {start}
    while True:
        nxt = [w for w in g.adjacency[walk[-1]] if w not in visited]
        if not nxt:
            break
        walk.append(min(nxt))
        visited.add(walk[-1])
    order = []
    for a, b in zip(walk, walk[1:]):
        order += [mg.index[Vertex(a)], mg.index[Edge(min(a, b), max(a, b))]]
    order.append(mg.index[Vertex(walk[-1])])
    if g.m == g.order and g.order >= 3:  # closing edge of a cycle
        a, b = walk[-1], walk[0]
        order.append(mg.index[Edge(min(a, b), max(a, b))])
    return order


def dp_gamma_middle(g: Graph, k: int = 3) -> int:
    """γ*_rk of a connected graph with maximum degree ≤ 2 (a path or a cycle)."""
    mg = middle_graph(g)
    return frontier_dp(mg.host, sweep_order(g, mg), k)


def dp_middle(kind: str, n: int, k: int = 3) -> int:
    """γ*_rk(P_n) or γ*_rk(C_n) by the frontier dynamic program."""
    if kind == "path":
        if not 2 <= n <= _MAX_N:
            raise DomainError(f"path requires 2 ≤ n ≤ {_MAX_N}")
    elif kind == "cycle":
        if not 3 <= n <= _MAX_N:
            raise DomainError(f"cycle requires 3 ≤ n ≤ {_MAX_N}")
    else:
        raise DomainError(f"dp_middle handles 'path' or 'cycle', not {kind!r}")
    return dp_gamma_middle(generate(kind, n), k)
