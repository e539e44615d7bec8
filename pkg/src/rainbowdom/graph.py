"""Simple undirected graphs, named families, middle graphs and matchings.

Vertices are 0-based integers. Edges are stored canonically as ``(u, v)`` with
``u < v`` in lexicographic order; every element enumeration in the package
(middle-graph labels, solver branching order, certificate layout) follows
that order.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import NamedTuple, Sequence, Union

from .errors import CapacityError, DomainError, ParseError

EXHAUSTIVE_MATCHING_MAX_EDGES = 16


@dataclass(frozen=True)
class Graph:
    order: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.order < 0:
            raise DomainError(f"order must be non-negative, got {self.order}")
        canon = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            if not (0 <= u < self.order and 0 <= v < self.order):
                raise DomainError(f"edge ({u}, {v}) has an endpoint outside 0..{self.order - 1}")
            canon.append((min(u, v), max(u, v)))
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise DomainError(f"duplicate edge {a}")
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def n(self) -> int:
        return self.order

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.order)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_set

    def is_connected(self) -> bool:
        if self.order == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for w in self.adjacency[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.order

    def is_forest(self) -> bool:
        parent = list(range(self.order))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True

    def is_tree(self) -> bool:
        return self.order >= 1 and self.m == self.order - 1 and self.is_connected()

    def add_edge(self, u: int, v: int) -> Graph:
        if self.has_edge(u, v):
            raise DomainError(f"edge ({u}, {v}) already present")
        return Graph(self.order, self.edges + ((u, v),))

    def remove_edge(self, u: int, v: int) -> Graph:
        e = (min(u, v), max(u, v))
        if e not in self.edge_set:
            raise DomainError(f"edge {e} not present")
        return Graph(self.order, tuple(x for x in self.edges if x != e))

    def remove_vertex(self, v: int) -> Graph:
        """Delete ``v`` and its edges; vertices above ``v`` shift down by one."""
        if not 0 <= v < self.order:
            raise DomainError(f"vertex {v} not in graph of order {self.order}")

        def shift(x):
            return x - 1 if x > v else x

        kept = tuple((shift(a), shift(b)) for a, b in self.edges if v not in (a, b))
        return Graph(self.order - 1, kept)


def complement(g: Graph) -> Graph:
    return Graph(g.order, tuple(e for e in combinations(range(g.order), 2) if e not in g.edge_set))


# ---------------------------------------------------------------------------
# named families
# ---------------------------------------------------------------------------

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 (Steele, Lea, Flood 2014); chosen so trees are reproducible anywhere.

    ``below(n)`` draws by rejection on the top of the 64-bit range, then reduces mod n.
    """

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        limit = ((1 << 64) // n) * n
        while True:
            z = self.next()
            if z < limit:
                return z % n


def prufer_sequence(n: int, seed: int) -> list[int]:
    rng = SplitMix64(seed)
    return [rng.below(n) for _ in range(max(n - 2, 0))]


def prufer_decode(seq: Sequence[int], n: int) -> Graph:
    if n == 1:
        return Graph(1)
    if len(seq) != n - 2:
        raise DomainError(f"Prüfer sequence for n={n} must have length {n - 2}")
    remaining = [0] * n
    for s in seq:
        remaining[s] += 1
    leaves = [v for v in range(n) if remaining[v] == 0]
    heapq.heapify(leaves)
    edges = []
    for s in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, s))
        remaining[s] -= 1
        if remaining[s] == 0:
            heapq.heappush(leaves, s)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph(n, tuple(edges))


def _need(cond: bool, message: str):
    if not cond:
        raise DomainError(message)


def _arity(kind: str, params: tuple, count: int):
    if len(params) != count:
        raise DomainError(f"{kind} takes {count} integer parameter(s), got {len(params)}")


def generate(kind: str, *params: int, seed: int | None = None) -> Graph:
    """Build a named graph.

    Kinds: ``path n``, ``cycle n``, ``complete n``, ``star t`` (K_{1,t}, center 0),
    ``double_star p q`` (centers 0 and 1), ``spider t r`` (K_{1,t} with the first
    ``r`` legs subdivided), ``empty n`` and ``random_tree n`` (needs ``seed``).
    """
    if kind in ("path", "cycle", "complete", "empty", "random_tree"):
        _arity(kind, params, 1)
        (n,) = params
        if kind == "path":
            _need(n >= 1, "path requires n ≥ 1")
            return Graph(n, tuple((i, i + 1) for i in range(n - 1)))
        if kind == "cycle":
            _need(n >= 3, "cycle requires n ≥ 3")
            return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))
        if kind == "complete":
            _need(n >= 1, "complete requires n ≥ 1")
            return Graph(n, tuple(combinations(range(n), 2)))
        if kind == "empty":
            _need(n >= 1, "empty requires n ≥ 1")
            return Graph(n)
        _need(n >= 1, "random_tree requires n ≥ 1")
        _need(seed is not None, "random_tree requires a seed")
        return prufer_decode(prufer_sequence(n, seed), n)
    if kind == "star":
        _arity(kind, params, 1)
        (t,) = params
        _need(t >= 2, "star requires t ≥ 2")
        return Graph(t + 1, tuple((0, i) for i in range(1, t + 1)))
    if kind == "double_star":
        _arity(kind, params, 2)
        p, q = params
        _need(p >= 1 and q >= 1, "double_star requires p ≥ 1 and q ≥ 1")
        edges = [(0, 1)]
        edges += [(0, 2 + i) for i in range(p)]
        edges += [(1, 2 + p + j) for j in range(q)]
        return Graph(p + q + 2, tuple(edges))
    if kind == "spider":
        _arity(kind, params, 2)
        t, r = params
        _need(t >= 1, "spider requires t ≥ 1")
        _need(0 <= r <= t, "spider requires 0 ≤ r ≤ t")
        edges = []
        for leg in range(1, t + 1):
            if leg <= r:
                mid = t + leg
                edges += [(0, mid), (mid, leg)]
            else:
                edges.append((0, leg))
        return Graph(1 + t + r, tuple(edges))
    raise DomainError(f"unknown graph kind {kind!r}")


# ---------------------------------------------------------------------------
# middle graph
# ---------------------------------------------------------------------------


class Vertex(NamedTuple):
    index: int

    def __str__(self):
        return f"v{self.index}"


class Edge(NamedTuple):
    u: int
    v: int

    def __str__(self):
        return f"e{self.u}-{self.v}"


Element = Union[Vertex, Edge]


def elements(g: Graph) -> tuple[Element, ...]:
    """V(G) ∪ E(G) in canonical order: all vertices, then edges."""
    return tuple(Vertex(i) for i in range(g.order)) + tuple(Edge(u, v) for u, v in g.edges)


def has_element(g: Graph, x) -> bool:
    if isinstance(x, Vertex):
        return 0 <= x.index < g.order
    if isinstance(x, Edge):
        return (x.u, x.v) in g.edge_set
    return False


@dataclass(frozen=True)
class MiddleGraph:
    host: Graph
    labels: tuple[Element, ...]
    source: Graph

    @cached_property
    def index(self) -> dict:
        return {x: i for i, x in enumerate(self.labels)}


def middle_graph(g: Graph) -> MiddleGraph:
    n = g.order
    host_edges = []
    incident: list[list[int]] = [[] for _ in range(n)]
    for j, (u, v) in enumerate(g.edges):
        host_edges += [(u, n + j), (v, n + j)]
        incident[u].append(n + j)
        incident[v].append(n + j)
    for inc in incident:
        host_edges += combinations(inc, 2)
    host = Graph(n + g.m, tuple(host_edges))
    return MiddleGraph(host=host, labels=elements(g), source=g)


# ---------------------------------------------------------------------------
# matchings
# ---------------------------------------------------------------------------


def leaf_greedy_matching(g: Graph) -> list[tuple[int, int]]:
    """Maximum matching of a forest: match the smallest current leaf to its neighbor."""
    if not g.is_forest():
        raise DomainError("leaf-greedy matching needs a forest")
    adj = [set(a) for a in g.adjacency]
    alive = set(range(g.order))
    matching = []
    while True:
        leaf = next((v for v in sorted(alive) if len(adj[v]) == 1), None)
        if leaf is None:
            break
        (w,) = adj[leaf]
        matching.append((min(leaf, w), max(leaf, w)))
        for x in (leaf, w):
            for y in adj[x]:
                adj[y].discard(x)
            adj[x].clear()
            alive.discard(x)
    return sorted(matching)


def exhaustive_matching(g: Graph) -> list[tuple[int, int]]:
    if g.m > EXHAUSTIVE_MATCHING_MAX_EDGES:
        raise CapacityError(
            f"exhaustive matching limited to {EXHAUSTIVE_MATCHING_MAX_EDGES} edges, graph has {g.m}"
        )
    for r in range(min(g.m, g.order // 2), 0, -1):
        for combo in combinations(g.edges, r):
            ends = [x for e in combo for x in e]
            if len(set(ends)) == len(ends):
                return list(combo)
    return []


def maximum_matching(g: Graph) -> list[tuple[int, int]]:
    """One maximum matching; forests use leaf-greedy, other graphs need ≤ 16 edges."""
    if g.is_forest():
        return leaf_greedy_matching(g)
    return exhaustive_matching(g)


def matching_number(g: Graph) -> int:
    return len(maximum_matching(g))


# ---------------------------------------------------------------------------
# edge-list text format
# ---------------------------------------------------------------------------


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _ints(line: str, lineno: int, what: str) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise ParseError(f"{what} needs exactly two integers, got {line!r}", lineno)
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"{what} is not integral: {line!r}", lineno) from None


def parse_graph(text: str) -> Graph:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("missing 'n m' header", 1)
    hl, header = lines[0]
    n, m = _ints(header, hl, "header")
    if n < 0 or m < 0:
        raise ParseError("header values must be non-negative", hl)
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else hl)
        raise ParseError(f"header declares {m} edges, found {len(body)}", where)
    seen = set()
    edges = []
    for lineno, line in body:
        u, v = _ints(line, lineno, "edge line")
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex index out of range 0..{n - 1}: {line!r}", lineno)
        e = (min(u, v), max(u, v))
        if e in seen:
            raise ParseError(f"duplicate edge {e}", lineno)
        seen.add(e)
        edges.append(e)
    return Graph(n, tuple(edges))


def serialize_graph(g: Graph) -> str:
    lines = [f"{g.order} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"
