"""Exact k-rainbow domination: branch-and-bound, all-optima enumeration, brute force.

Search order is fixed: host vertices in index order, candidate color sets by
(cardinality, bitmask), depth first. The returned certificate is therefore the
lexicographically first optimal assignment under that order, whatever the
bounding function prunes. Colour-symmetry breaking keeps that property: a
candidate may only introduce colours unused so far by taking the lowest ones,
and the lex-first optimum always has that shape.
"""
from __future__ import annotations

import math
import os
import time
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from . import _kernel
from .errors import CapacityError
from .graph import Graph, middle_graph
from .rainbow import (
    RainbowAssignment,
    check_k,
    from_host,
    full_mask,
    plain_assignment,
    popcount,
)

DEFAULT_SOLVER_CAP = 24
CAP_ENV = "RAINBOWDOM_SOLVER_CAP"
BRUTE_BUDGET = 10**8
MAX_HOST = 62  # vertex sets are int64 bitmasks in the compiled search
_INF = float("inf")


def solver_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get(CAP_ENV)
    return int(env) if env else DEFAULT_SOLVER_CAP


def brute_cap(k: int) -> int:
    """Largest vertex count with (2^k)^N within the brute-force budget."""
    return int(math.log(BRUTE_BUDGET) // (k * math.log(2)))


@dataclass
class SolveStats:
    nodes: int = 0
    elapsed: float = 0.0


@dataclass(frozen=True)
class SolveResult:
    value: int
    certificate: RainbowAssignment
    stats: SolveStats = field(default_factory=SolveStats, compare=False)


class _Search:
    """Pure-Python depth-first search over host vertices in index order."""

    def __init__(self, h: Graph, k: int, symmetry: bool = True):
        self.n = n = h.order
        self.k = k
        self.full = full = full_mask(k)
        self.nbrs = [list(a) for a in h.adjacency]
        self.nbrmask = [sum(1 << w for w in a) for a in self.nbrs]
        self.closed = [self.nbrmask[p] | 1 << p for p in range(n)]
        self.unassigned = [((1 << n) - 1) & ~((1 << i) - 1) for i in range(n + 1)]
        self.cands = sorted(range(full + 1), key=lambda m: (popcount(m), m))
        self.card = [popcount(m) for m in range(full + 1)]
        self.symmetry = symmetry
        # lowest[F][j]: the j lowest colours of the free-colour mask F
        self.lowest = [[0] * (k + 1) for _ in range(full + 1)]
        for free in range(full + 1):
            acc, j = 0, 0
            for c in range(k):
                if free >> c & 1:
                    j += 1
                    acc |= 1 << c
                    self.lowest[free][j] = acc
        self.masks = [0] * n
        self.seen = [0] * n
        self.nodes = 0

    def bound(self, i: int) -> tuple[float, int]:
        """Admissible lower bound on the remaining weight at depth ``i``.

        Packs demands with pairwise-disjoint supply sets: an assigned empty
        element missing c colours needs c units from its unassigned neighbours,
        an unassigned unsatisfied element needs one unit from its closed
        unassigned neighbourhood. Also returns colours forced onto position i.
        """
        full, masks, seen, card = self.full, self.masks, self.seen, self.card
        free = self.unassigned[i]
        bit = 1 << i
        required = 0
        big, mid, small = [], [], []
        nbrmask = self.nbrmask
        for w in range(i):
            if masks[w] == 0:
                miss = full & ~seen[w]
                if miss:
                    s = nbrmask[w] & free
                    if not s:
                        return _INF, 0
                    if s == bit:
                        required |= miss
                    d = card[miss]
                    (big if d >= 3 else mid if d == 2 else small).append((d, s))
        lb = 0
        covered = 0
        for bucket in (big, mid, small):
            for d, s in bucket:
                if not s & covered:
                    lb += d
                    covered |= s
        closed = self.closed
        for v in range(i, self.n):
            if full & ~seen[v]:
                s = closed[v] & free
                if not s & covered:
                    lb += 1
                    covered |= s
        return lb, required

    def _assign(self, i: int, mask: int) -> list[int]:
        self.masks[i] = mask
        seen = self.seen
        saved = [seen[y] for y in self.nbrs[i]]
        for y in self.nbrs[i]:
            seen[y] |= mask
        return saved

    def _undo(self, i: int, saved: list[int]):
        self.masks[i] = 0
        for y, old in zip(self.nbrs[i], saved):
            self.seen[y] = old

    def _canonical(self, s: int, used: int) -> bool:
        if not self.symmetry:
            return True
        free_colors = self.full & ~used
        fresh = s & free_colors
        return not fresh or fresh == self.lowest[free_colors][self.card[fresh]]

    def minimize(self, upper: int) -> tuple[int, list[int] | None]:
        """Best weight below ``upper`` (or ``upper`` if none) and its host masks."""
        self.best = upper
        self.best_masks = None
        self._rec(0, 0, 0)
        return self.best, self.best_masks

    def _rec(self, i: int, partial: int, used: int):
        self.nodes += 1
        lb, required = self.bound(i)
        if partial + lb >= self.best:
            return
        if i == self.n:
            self.best = partial
            self.best_masks = list(self.masks)
            return
        card = self.card
        for s in self.cands:
            c = card[s]
            if partial + c >= self.best:
                break
            if s & required != required or not self._canonical(s, used):
                continue
            saved = self._assign(i, s)
            self._rec(i + 1, partial + c, used | s)
            self._undo(i, saved)

    def all_at_most(self, target: int) -> Iterator[list[int]]:
        """Every assignment of weight at most ``target`` (host masks), in search order."""
        yield from self._enum(0, 0, 0, target)

    def _enum(self, i: int, partial: int, used: int, target: int):
        self.nodes += 1
        lb, required = self.bound(i)
        if partial + lb > target:
            return
        if i == self.n:
            yield list(self.masks)
            return
        card = self.card
        for s in self.cands:
            c = card[s]
            if partial + c > target:
                break
            if s & required != required or not self._canonical(s, used):
                continue
            saved = self._assign(i, s)
            yield from self._enum(i + 1, partial + c, used | s, target)
            self._undo(i, saved)


def _check_cap(size: int, cap: int | None, what: str):
    limit = solver_cap(cap)
    if size > limit:
        raise CapacityError(f"{what} has {size} vertices, over the solver cap {limit}")


def _csr(h: Graph) -> tuple[np.ndarray, np.ndarray]:
    indptr = np.zeros(h.order + 1, dtype=np.int64)
    for v, a in enumerate(h.adjacency):
        indptr[v + 1] = indptr[v] + len(a)
    indices = np.array([w for a in h.adjacency for w in a], dtype=np.int64)
    return indptr, indices


def solve_krdf(h: Graph, k: int, cap: int | None = None) -> SolveResult:
    """Exact γ_rk(H) with the lexicographically first optimal certificate.

    "Lexicographically first" is over host vertices in index order with colour
    sets ranked by (cardinality, bitmask): the first optimum a depth-first
    branch-and-bound in that order reaches.
    """
    check_k(k)
    _check_cap(h.order, cap, "host graph")
    if h.order > MAX_HOST:
        raise CapacityError(f"host graph has {h.order} vertices; the search supports at most {MAX_HOST}")
    start = time.perf_counter()
    indptr, indices = _csr(h)
    # a singleton on every vertex is always valid, so weight n + 1 is a safe start
    value, masks, nodes = _kernel.minimize(h.order, k, indptr, indices, h.order + 1, True)
    keys = plain_assignment(h, k).keys
    cert = RainbowAssignment(k, "plain", keys, tuple(int(m) for m in masks))
    stats = SolveStats(int(nodes), time.perf_counter() - start)
    return SolveResult(int(value), cert, stats)


def reference_minimize(h: Graph, k: int) -> tuple[int, list[int], int]:
    """The same search in plain Python: (value, host masks, node count)."""
    search = _Search(h, k)
    value, masks = search.minimize(h.order + 1)
    return value, masks, search.nodes


def solve_middle(g: Graph, k: int, cap: int | None = None) -> SolveResult:
    """Exact γ*_rk(G) = γ_rk(M(G)); certificate keyed by the elements of G."""
    check_k(k)
    _check_cap(g.order + g.m, cap, "middle graph (n + m)")
    mg = middle_graph(g)
    res = solve_krdf(mg.host, k, cap=max(solver_cap(cap), mg.host.order))
    return SolveResult(res.value, from_host(res.certificate, mg), res.stats)


def enumerate_optimal(h: Graph, k: int, cap: int | None = None) -> list[RainbowAssignment]:
    """Every minimum-weight kRDF of H, sorted lexicographically in host order."""
    value = solve_krdf(h, k, cap).value
    search = _Search(h, k, symmetry=False)
    rank = {m: (popcount(m), m) for m in range(full_mask(k) + 1)}
    found = sorted(search.all_at_most(value), key=lambda ms: [rank[m] for m in ms])
    keys = plain_assignment(h, k).keys
    return [RainbowAssignment(k, "plain", keys, tuple(m)) for m in found]


def enumerate_optimal_middle(g: Graph, k: int, cap: int | None = None) -> list[RainbowAssignment]:
    check_k(k)
    _check_cap(g.order + g.m, cap, "middle graph (n + m)")
    mg = middle_graph(g)
    big = max(solver_cap(cap), mg.host.order)
    return [from_host(f, mg) for f in enumerate_optimal(mg.host, k, big)]


# ---------------------------------------------------------------------------
# brute force oracle
# ---------------------------------------------------------------------------

_POP = np.array([popcount(m) for m in range(1 << 8)], dtype=np.int64)


def brute_force_krdf(h: Graph, k: int, what: str = "vertices") -> int:
    """γ_rk(H) by scoring every one of the (2^k)^N assignments."""
    check_k(k)
    n = h.order
    if (1 << k) ** n > BRUTE_BUDGET:
        raise CapacityError(f"{n} {what} > brute cap {brute_cap(k)} (k={k})")
    if n == 0:
        return 0
    full = full_mask(k)
    total = 1 << (k * n)
    chunk = 1 << 20
    best = None
    for start in range(0, total, chunk):
        a = np.arange(start, min(start + chunk, total), dtype=np.int64)
        cols = [(a >> (k * j)) & full for j in range(n)]
        w = sum(_POP[c] for c in cols)
        ok = np.ones(a.shape, dtype=bool)
        for j in range(n):
            union = np.zeros(a.shape, dtype=np.int64)
            for nb in h.adjacency[j]:
                union |= cols[nb]
            ok &= (cols[j] != 0) | (union == full)
        if ok.any():
            m = int(w[ok].min())
            best = m if best is None else min(best, m)
    return best


def brute_force_middle(g: Graph, k: int) -> int:
    return brute_force_krdf(middle_graph(g).host, k, what="elements")
