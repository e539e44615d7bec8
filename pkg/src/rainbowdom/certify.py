"""Closed-form γ*_r3 values and explicit M3RDF certificates for standard families.

Vertex labels here are 0-based: the i-th vertex along a path is ``Vertex(i - 1)``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .graph import Edge, Graph, Vertex, generate, maximum_matching
from .rainbow import RainbowAssignment, middle_assignment

FULL = (1, 2, 3)

_RANGES = {
    "path": (("n", 2),),
    "cycle": (("n", 3),),
    "complete": (("n", 2),),
    "star": (("t", 2),),
    "double_star": (("p", 1), ("q", 1)),
}


@dataclass(frozen=True)
class FormulaFamily:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in _RANGES:
            raise DomainError(f"no closed form for {self.kind!r}; choose from {sorted(_RANGES)}")
        ranges = _RANGES[self.kind]
        if len(self.params) != len(ranges):
            raise DomainError(f"{self.kind} takes {len(ranges)} parameter(s), got {len(self.params)}")
        for (name, low), value in zip(ranges, self.params):
            if value < low:
                raise DomainError(f"{self.kind} requires {name} ≥ {low}")

    def graph(self) -> Graph:
        return generate(self.kind, *self.params)


def _family(family, params) -> FormulaFamily:
    if isinstance(family, FormulaFamily):
        return family
    return FormulaFamily(family, tuple(params))


def formula_gamma_star_r3(family: FormulaFamily | str, *params: int) -> int:
    """Closed-form γ*_r3 for paths, cycles, complete graphs, stars and double stars."""
    fam = _family(family, params)
    kind = fam.kind
    if kind == "star":
        return fam.params[0] + 2
    if kind == "double_star":
        p, q = fam.params
        return p + q + 3
    n = fam.params[0]
    if kind == "complete":
        return 3 * n // 2 if n % 2 == 0 else (3 * n - 1) // 2
    r = n % 3
    if kind == "path":
        return {1: (4 * n - 1) // 3, 2: (4 * n + 1) // 3, 0: 4 * n // 3}[r]
    return {1: (4 * n + 2) // 3, 2: (4 * n + 1) // 3, 0: 4 * n // 3}[r]


def _path_values(n: int) -> dict:
    """{1} on every third vertex from the first, [3] on the edge in the middle of each gap."""
    values = {Vertex(3 * i): {1} for i in range((n - 1) // 3 + 1)}
    r = n % 3
    gaps = {1: (n - 1) // 3, 2: (n - 2) // 3, 0: n // 3}[r]
    for i in range(gaps):
        values[Edge(1 + 3 * i, 2 + 3 * i)] = FULL
    if r == 2:
        values[Vertex(n - 1)] = {2, 3}
    return values


def construct_m3rdf(kind: str, n: int) -> RainbowAssignment:
    """An M3RDF on P_n, C_n or K_n whose weight equals the closed form."""
    fam = FormulaFamily(kind, (n,))
    if kind not in ("path", "cycle", "complete"):
        raise DomainError(f"no construction for {kind!r}")
    g = fam.graph()
    if kind == "path":
        values = _path_values(n)
    elif kind == "cycle":
        values = _path_values(n)
        if n % 3 == 1:
            values[Edge(0, n - 1)] = {1}
    else:
        if n % 2:
            values = {Vertex(0): {1}}
            values.update({Edge(2 * i - 1, 2 * i): FULL for i in range(1, (n - 1) // 2 + 1)})
        else:
            values = {Edge(2 * i, 2 * i + 1): FULL for i in range(n // 2)}
    return middle_assignment(g, 3, values)


def construct_tree_matching(t: Graph) -> RainbowAssignment:
    """[3] on a maximum matching, {1} on every unmatched vertex; weight n + α'(T)."""
    if not t.is_tree():
        raise DomainError("input is not a tree")
    matching = maximum_matching(t)
    values = {Edge(u, v): FULL for u, v in matching}
    saturated = {x for e in matching for x in e}
    values.update({Vertex(v): {1} for v in range(t.order) if v not in saturated})
    return middle_assignment(t, 3, values)
