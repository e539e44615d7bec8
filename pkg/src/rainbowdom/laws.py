"""Executable checks of the inequalities and characterizations for γ*_rk.

Every check recomputes all values from scratch with the exact solver and
returns a :class:`LawReport` whose ``holds`` is derived from the recorded
chain of numbers, never stored separately.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import DomainError
from .graph import Edge, Graph, Vertex, complement, maximum_matching
from .rainbow import verify_mkrdf
from .solver import solve_middle

_OPS = {"<=": lambda a, b: a <= b, "==": lambda a, b: a == b}


@dataclass(frozen=True)
class LawReport:
    """A chain ``chain[0] rel chain[1] rel ...``; an empty chain holds vacuously."""

    law: str
    instance: str
    chain: tuple = ()
    relation: str = "<="
    witness: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.relation not in _OPS:
            raise DomainError(f"unknown relation {self.relation!r}")

    @property
    def holds(self) -> bool:
        op = _OPS[self.relation]
        return all(op(a, b) for a, b in zip(self.chain, self.chain[1:]))

    def to_text(self) -> str:
        lines = [
            f"law: {self.law}",
            f"instance: {self.instance}",
            f"chain: {f' {self.relation} '.join(str(x) for x in self.chain)}",
            f"holds: {str(self.holds).lower()}",
        ]
        lines += [f"{key}: {value}" for key, value in self.witness.items()]
        return "\n".join(lines) + "\n"


def _describe(g: Graph) -> str:
    return f"n={g.order} edges={[list(e) for e in g.edges]}"


def _gamma(g: Graph, k: int) -> int:
    return solve_middle(g, k).value


def check_observation_lower(g: Graph, k: int) -> LawReport:
    """γ*_rk(G) ≥ k whenever G has at least k elements."""
    if g.order + g.m < k:
        raise DomainError(f"need |V|+|E| ≥ k, got {g.order + g.m} < {k}")
    res = solve_middle(g, k)
    return LawReport("lower-bound", _describe(g), (k, res.value), witness={"certificate": res.certificate.support()})


def labeled_graphs(n: int):
    """Every simple graph on vertex set 0..n-1, in edge-subset bitmask order."""
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph(n, tuple(p for i, p in enumerate(pairs) if bits >> i & 1))


def _is_weight_three_target(g: Graph) -> bool:
    # only the edgeless graph on 3 vertices and the single edge have these fingerprints
    return (g.order, g.m) in ((3, 0), (2, 1))


def characterize_weight_three(max_n: int) -> LawReport:
    """Scan all labeled graphs on 2..max_n vertices: γ*_r3 = 3 exactly on P_2 and the edgeless K̄_3."""
    if max_n > 5:
        raise DomainError(f"max_n must be ≤ 5, got {max_n}")
    scanned = {}
    mismatches = []
    attaining = set()
    for n in range(2, max_n + 1):
        count = 0
        for g in labeled_graphs(n):
            count += 1
            three = _gamma(g, 3) == 3
            if three:
                attaining.add((g.order, g.m))
            if three != _is_weight_three_target(g):
                mismatches.append(_describe(g))
        scanned[n] = count
    return LawReport(
        "weight-three",
        f"all labeled graphs on 2..{max_n} vertices",
        (len(mismatches), 0),
        "==",
        witness={
            "graphs scanned": scanned,
            "classes attaining 3": len(attaining),
            "mismatches": mismatches,
        },
    )


def check_vertex_deletion(g: Graph, v: int, k: int) -> LawReport:
    """γ*(G) − min(Δ(G)+1, k) ≤ γ*(G − v) ≤ γ*(G)."""
    if not 0 <= v < g.order:
        raise DomainError(f"vertex {v} not in graph of order {g.order}")
    whole = _gamma(g, k)
    less = _gamma(g.remove_vertex(v), k)
    drop = min(g.max_degree + 1, k)
    return LawReport(
        "vertex-deletion",
        f"{_describe(g)} minus v{v}, k={k}",
        (whole - drop, less, whole),
        witness={"max degree": g.max_degree},
    )


def check_edge_perturbation(g: Graph, e: tuple[int, int], k: int, mode: str) -> LawReport:
    """Adding an edge: γ* − k ≤ γ*(G+e) ≤ γ* + 1. Deleting: γ* − 1 ≤ γ*(G−e) ≤ γ* + k."""
    u, v = sorted(e)
    if mode == "add":
        if (u, v) not in complement(g).edge_set:
            raise DomainError(f"edge ({u}, {v}) is not a non-edge of G")
        other = g.add_edge(u, v)
        low, high = k, 1
    elif mode == "delete":
        if not g.has_edge(u, v):
            raise DomainError(f"edge ({u}, {v}) is not in G")
        other = g.remove_edge(u, v)
        low, high = 1, k
    else:
        raise DomainError(f"mode must be 'add' or 'delete', got {mode!r}")
    base = _gamma(g, k)
    moved = _gamma(other, k)
    return LawReport(
        f"edge-{mode}",
        f"{_describe(g)} {mode} ({u}, {v}), k={k}",
        (base - low, moved, base + high),
    )


def check_tree_bounds(t: Graph) -> LawReport:
    """5α'/2 ≤ γ*_r3(T) ≤ min(3n/2, n + α'), compared as exact rationals."""
    if not t.is_tree():
        raise DomainError("input is not a tree")
    alpha = len(maximum_matching(t))
    value = _gamma(t, 3)
    lower = Fraction(5 * alpha, 2)
    upper = min(Fraction(3 * t.order, 2), Fraction(t.order + alpha))
    return LawReport(
        "tree-bounds",
        _describe(t),
        (lower, Fraction(value), upper),
        witness={
            "matching number": alpha,
            # an integer clears a rational lower bound iff it clears its ceiling
            "ceil consistent": (value >= lower) == (value >= math.ceil(lower)),
        },
    )


def pendant_paths(t: Graph) -> list[tuple[int, int, int]]:
    """Every (u, v, w) with u–v–w a path, deg v = 2 and w a leaf."""
    out = []
    for w in range(t.order):
        if t.degree(w) != 1:
            continue
        v = t.adjacency[w][0]
        if t.degree(v) == 2:
            u = next(x for x in t.adjacency[v] if x != w)
            out.append((u, v, w))
    return out


def check_pendant_path_lemma(t: Graph, f) -> LawReport:
    """Under an optimal M3RDF, each pendant u–v–w (deg v = 2, w a leaf) carries weight ≥ 3 on uv, v, vw, w."""
    if not t.is_tree():
        raise DomainError("input is not a tree")
    if f.k != 3 or not verify_mkrdf(t, f).valid:
        raise DomainError("certificate is not a valid M3RDF")
    best = _gamma(t, 3)
    if f.weight != best:
        raise DomainError(f"certificate weight {f.weight} is not optimal ({best})")
    sums = {}
    for u, v, w in pendant_paths(t):
        parts = (Edge(min(u, v), max(u, v)), Vertex(v), Edge(min(v, w), max(v, w)), Vertex(w))
        sums[(u, v, w)] = sum(len(f[x]) for x in parts)
    chain = (3, min(sums.values())) if sums else ()
    return LawReport("pendant-path", _describe(t), chain, witness={"path sums": sums})
