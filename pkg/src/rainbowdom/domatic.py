"""k-rainbow domatic families: construction, verification and bounds.

A family is a list of kRDFs on one host graph whose colour-set sizes add up to
at most k on every vertex. Its size is sandwiched between a witness family
and the smaller of δ(H) + k and floor(k·|V(H)| / γ_rk(H)).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .dp import dp_gamma_middle
from .errors import CapacityError, DomainError, ParseError
from .graph import Edge, Graph, Vertex, generate, middle_graph
from .rainbow import (
    RainbowAssignment,
    VerificationReport,
    check_k,
    format_assignment,
    full_mask,
    middle_assignment,
    parse_assignment,
    popcount,
    to_host,
    verify_krdf,
)
from .solver import BRUTE_BUDGET, solve_krdf

TINY_LIMIT = 8


@dataclass(frozen=True)
class RainbowFamily:
    host: Graph
    k: int
    members: tuple[RainbowAssignment, ...] = ()

    def __len__(self):
        return len(self.members)

    def load(self) -> list[int]:
        """Σ_i |f_i(v)| for each host vertex v."""
        return [sum(popcount(f.masks[v]) for f in self.members) for v in range(self.host.order)]


@dataclass(frozen=True)
class DomaticBounds:
    lower: int
    upper: int
    upper_source: str  # "degree", "product" or "degree=product"
    gamma: int
    family: RainbowFamily | None = field(default=None, compare=False)

    @property
    def exact(self) -> int | None:
        return self.lower if self.lower == self.upper else None


def verify_family(fam: RainbowFamily) -> VerificationReport:
    """Each member must be a kRDF of the host and no vertex may carry more than k colours in total."""
    bad = []
    for i, f in enumerate(fam.members):
        if f.k != fam.k or f.domain != "plain" or len(f.keys) != fam.host.order:
            raise DomainError(f"member {i} is not keyed by the host vertices with k={fam.k}")
        for x, seen in verify_krdf(fam.host, f).violations:
            bad.append((f"member {i}", x, seen))
    for v, total in enumerate(fam.load()):
        if total > fam.k:
            bad.append(("capacity", Vertex(v), total))
    return VerificationReport(tuple(bad))


def _path_members(n: int, offset: int = 0) -> list[dict]:
    """The four path functions on vertices offset..offset+n-1 (n even)."""
    edge = lambda i: Edge(offset + i, offset + i + 1)  # noqa: E731
    first = {edge(2 * i): (1, 2, 3) for i in range(n // 2)}
    members = [first]
    for a, b, c in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        f = {Vertex(offset + i): {a if i % 2 == 0 else b} for i in range(n)}
        f.update({edge(2 * i + 1): {c} for i in range(n // 2 - 1)})
        members.append(f)
    return members


def construct_family(kind: str, n: int) -> RainbowFamily:
    """Four disjoint-capacity M3RDFs on P_n (n even) or C_n, as plain kRDFs on the middle-graph host."""
    if kind == "path":
        if n < 4 or n % 2:
            raise DomainError("path family requires even n ≥ 4")
        members = _path_members(n)
    elif kind == "cycle":
        if n < 4:
            raise DomainError("cycle family requires n ≥ 4")
        close = Edge(0, n - 1)
        if n % 2 == 0:
            members = _path_members(n)
            for i, f in enumerate(members):
                f[close] = set() if i == 0 else {1}
        else:
            members = _path_members(n - 1)
            last, tail = Vertex(n - 1), Edge(n - 2, n - 1)
            ends = [
                (set(), {1}, set()),
                ({3}, {2}, set()),
                ({1}, {3}, set()),
                (set(), set(), (1, 2, 3)),
            ]
            for f, (a, b, c) in zip(members, ends):
                f[tail], f[last], f[close] = a, b, c
    else:
        raise DomainError(f"no family construction for {kind!r}")
    g = generate(kind, n)
    mg = middle_graph(g)
    return RainbowFamily(mg.host, 3, tuple(to_host(middle_assignment(g, 3, f), mg) for f in members))


def _host_gamma(g: Graph, k: int) -> int:
    if g.order >= 2 and g.max_degree <= 2 and g.is_connected():
        return dp_gamma_middle(g, k)
    return solve_krdf(middle_graph(g).host, k).value


def sandwich(h: Graph, k: int, gamma: int, family: RainbowFamily | None = None) -> DomaticBounds:
    check_k(k)
    lower = k
    if family is not None:
        if family.host != h or family.k != k:
            raise DomainError("family is not over this host with this k")
        report = verify_family(family)
        if not report.valid:
            raise DomainError(f"invalid family: {report.violations[:3]}")
        lower = max(lower, len(family))
    degree = h.min_degree + k
    product = k * h.order // gamma if gamma else degree
    upper = min(degree, product)
    source = "degree=product" if degree == product else ("degree" if degree < product else "product")
    return DomaticBounds(lower, upper, source, gamma, family)


def domatic_bounds(g: Graph, k: int, family: RainbowFamily | None = None) -> DomaticBounds:
    """Bounds on d_rk(M(G)); γ_rk(M(G)) comes from the DP for paths and cycles, the solver otherwise."""
    return sandwich(middle_graph(g).host, k, _host_gamma(g, k), family)


def _valid_load_vectors(h: Graph, k: int) -> list[tuple[int, ...]]:
    """Distinct per-vertex cardinality vectors of all kRDFs of h, by exhaustive enumeration."""
    n = h.order
    full = full_mask(k)
    pop = np.array([popcount(m) for m in range(full + 1)], dtype=np.int64)
    total = 1 << (k * n)
    chunk = 1 << 20
    found = set()
    for start in range(0, total, chunk):
        a = np.arange(start, min(start + chunk, total), dtype=np.int64)
        cols = [(a >> (k * j)) & full for j in range(n)]
        ok = np.ones(a.shape, dtype=bool)
        for j in range(n):
            union = np.zeros(a.shape, dtype=np.int64)
            for w in h.adjacency[j]:
                union |= cols[w]
            ok &= (cols[j] != 0) | (union == full)
        code = np.zeros(int(ok.sum()), dtype=np.int64)
        for j in range(n):
            code = code * (k + 1) + pop[cols[j][ok]]
        found.update(np.unique(code).tolist())
    vectors = []
    for c in sorted(found):
        v = []
        for _ in range(n):
            c, r = divmod(c, k + 1)
            v.append(r)
        vectors.append(tuple(reversed(v)))
    return vectors


def domatic_exact_tiny(h: Graph, k: int) -> int:
    """Exact d_rk(H) for |V(H)| ≤ 8 by search over load vectors of valid functions."""
    check_k(k)
    if h.order > TINY_LIMIT or (1 << k) ** h.order > BRUTE_BUDGET:
        raise CapacityError(f"{h.order} vertices > domatic search cap {TINY_LIMIT} (k={k})")
    if h.order == 0:
        raise DomainError("empty host has no domatic number")
    vectors = _valid_load_vectors(h, k)
    # a member can always be shrunk to a pointwise-minimal load vector
    minimal = []
    for v in sorted(vectors, key=lambda v: (sum(v), v)):
        if not any(all(a <= b for a, b in zip(w, v)) for w in minimal):
            minimal.append(v)
    best = 0

    def grow(start: int, room: list[int], size: int):
        nonlocal best
        best = max(best, size)
        if size + sum(room) // sum(minimal[0]) <= best:
            return
        for i in range(start, len(minimal)):
            v = minimal[i]
            if all(a <= r for a, r in zip(v, room)):
                grow(i, [r - a for a, r in zip(v, room)], size + 1)

    grow(0, [k] * h.order, 0)
    return best


def format_family(fam: RainbowFamily) -> str:
    blocks = [format_assignment(f) for f in fam.members]
    return f"family k {fam.k} size {len(fam)}\n" + "---\n".join(blocks)


def parse_family(text: str, host: Graph) -> RainbowFamily:
    lines = text.splitlines()
    if not lines:
        raise ParseError("missing 'family k <k> size <d>' header", 1)
    parts = lines[0].split()
    if len(parts) != 5 or parts[0] != "family" or parts[1] != "k" or parts[3] != "size":
        raise ParseError(f"malformed header {lines[0]!r}", 1)
    try:
        k, size = int(parts[2]), int(parts[4])
    except ValueError:
        raise ParseError(f"malformed header {lines[0]!r}", 1) from None
    members = []
    block, first = [], 2
    for lineno, line in enumerate(lines[1:] + ["---"], start=2):
        if line.strip() == "---":
            if block:
                members.append(parse_assignment("\n".join(block), host, first_line=first))
            block, first = [], lineno + 1
        else:
            block.append(line)
    if len(members) != size:
        raise ParseError(f"header declares {size} members, found {len(members)}", 1)
    if any(f.k != k for f in members):
        raise ParseError("member k differs from the family header", 1)
    return RainbowFamily(host, k, tuple(members))
