"""Color-set assignments and (middle) k-rainbow domination verification.

A color set is a subset of ``{1..k}`` with ``k <= 8``; internally it is an int
bitmask with bit ``c - 1`` standing for color ``c``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .errors import DomainError, ParseError
from .graph import Edge, Element, Graph, MiddleGraph, Vertex, elements, has_element

MAX_K = 8


def full_mask(k: int) -> int:
    return (1 << k) - 1


def check_k(k: int):
    if not 1 <= k <= MAX_K:
        raise DomainError(f"k must lie in 1..{MAX_K}, got {k}")


def colorset(colors: Iterable[int], k: int) -> int:
    mask = 0
    for c in colors:
        if not 1 <= c <= k:
            raise DomainError(f"color {c} outside 1..{k}")
        mask |= 1 << (c - 1)
    return mask


def colors_of(mask: int) -> frozenset[int]:
    return frozenset(c + 1 for c in range(mask.bit_length()) if mask >> c & 1)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def _as_key(key) -> Element:
    if isinstance(key, (Vertex, Edge)):
        return key
    if isinstance(key, int):
        return Vertex(key)
    raise DomainError(f"not an element key: {key!r}")


@dataclass(frozen=True)
class RainbowAssignment:
    """Total map from a domain (middle: V ∪ E of a source graph; plain: host vertices) to color sets."""

    k: int
    domain: str
    keys: tuple[Element, ...]
    masks: tuple[int, ...]
    _pos: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        check_k(self.k)
        if self.domain not in ("middle", "plain"):
            raise DomainError(f"domain must be 'middle' or 'plain', got {self.domain!r}")
        if len(self.keys) != len(self.masks):
            raise DomainError("keys and values differ in length")
        top = full_mask(self.k)
        for mask in self.masks:
            if mask & ~top or mask < 0:
                raise DomainError(f"color set {sorted(colors_of(mask))} exceeds k={self.k}")
        object.__setattr__(self, "_pos", {x: i for i, x in enumerate(self.keys)})

    @property
    def weight(self) -> int:
        return sum(popcount(m) for m in self.masks)

    def __getitem__(self, key) -> frozenset[int]:
        return colors_of(self.masks[self._pos[_as_key(key)]])

    def mask(self, key) -> int:
        return self.masks[self._pos[_as_key(key)]]

    def items(self) -> Iterator[tuple[Element, frozenset[int]]]:
        for x, m in zip(self.keys, self.masks):
            yield x, colors_of(m)

    def support(self) -> dict[Element, frozenset[int]]:
        return {x: c for x, c in self.items() if c}

    def replace(self, values: Mapping) -> RainbowAssignment:
        masks = list(self.masks)
        for key, colors in values.items():
            key = _as_key(key)
            if key not in self._pos:
                raise DomainError(f"{key} is not in the assignment domain")
            masks[self._pos[key]] = colorset(colors, self.k)
        return RainbowAssignment(self.k, self.domain, self.keys, tuple(masks))

    def permute_colors(self, perm: Mapping[int, int]) -> RainbowAssignment:
        """Rename colors by ``perm`` (a bijection on 1..k)."""
        masks = tuple(colorset((perm[c] for c in colors_of(m)), self.k) for m in self.masks)
        return RainbowAssignment(self.k, self.domain, self.keys, masks)


def weight(f: RainbowAssignment) -> int:
    return f.weight


def _build(keys: tuple, k: int, domain: str, values: Mapping | None) -> RainbowAssignment:
    check_k(k)
    pos = {x: i for i, x in enumerate(keys)}
    masks = [0] * len(keys)
    for key, colors in (values or {}).items():
        key = _as_key(key)
        if key not in pos:
            raise DomainError(f"{key} is not in the assignment domain")
        masks[pos[key]] = colorset(colors, k)
    return RainbowAssignment(k, domain, keys, tuple(masks))


def middle_assignment(g: Graph, k: int, values: Mapping | None = None) -> RainbowAssignment:
    """Assignment on V(G) ∪ E(G); omitted elements get the empty set."""
    return _build(elements(g), k, "middle", values)


def plain_assignment(h: Graph, k: int, values: Mapping | None = None) -> RainbowAssignment:
    return _build(tuple(Vertex(i) for i in range(h.order)), k, "plain", values)


def to_host(f: RainbowAssignment, mg: MiddleGraph) -> RainbowAssignment:
    """Relabel a middle assignment onto the vertices of the middle graph's host."""
    if f.domain != "middle" or f.keys != mg.labels:
        raise DomainError("assignment is not keyed by this middle graph's elements")
    masks = tuple(f.mask(x) for x in mg.labels)
    return RainbowAssignment(f.k, "plain", tuple(Vertex(i) for i in range(mg.host.order)), masks)


def from_host(f: RainbowAssignment, mg: MiddleGraph) -> RainbowAssignment:
    if f.domain != "plain" or len(f.keys) != mg.host.order:
        raise DomainError("assignment is not keyed by this middle graph's host")
    return RainbowAssignment(f.k, "middle", mg.labels, tuple(f.masks))


# ---------------------------------------------------------------------------
# neighborhoods and verification
# ---------------------------------------------------------------------------


def middle_neighborhood(g: Graph, x) -> frozenset[Element]:
    """Edges incident to a vertex; for an edge, its endpoints and every edge sharing one."""
    if not has_element(g, x):
        raise DomainError(f"{x!r} is not an element of the graph")
    if isinstance(x, Vertex):
        v = x.index
        return frozenset(Edge(min(v, w), max(v, w)) for w in g.adjacency[v])
    out = {Vertex(x.u), Vertex(x.v)}
    for a, b in ((x.u, x.v), (x.v, x.u)):
        for w in g.adjacency[a]:
            if w != b:
                out.add(Edge(min(a, w), max(a, w)))
    return frozenset(out)


@dataclass(frozen=True)
class VerificationReport:
    violations: tuple = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.valid


def verify_mkrdf(g: Graph, f: RainbowAssignment) -> VerificationReport:
    """Check every empty element sees all k colors on its middle neighborhood."""
    if f.domain != "middle" or f.keys != elements(g):
        raise DomainError("assignment domain does not match V(G) ∪ E(G)")
    full = full_mask(f.k)
    bad = []
    for x, mask in zip(f.keys, f.masks):
        if mask:
            continue
        seen = 0
        for y in middle_neighborhood(g, x):
            seen |= f.mask(y)
        if seen != full:
            bad.append((x, colors_of(seen)))
    return VerificationReport(tuple(bad))


def verify_krdf(h: Graph, f: RainbowAssignment) -> VerificationReport:
    if f.domain != "plain" or len(f.keys) != h.order:
        raise DomainError("assignment domain does not match the vertices of H")
    full = full_mask(f.k)
    bad = []
    for v, mask in enumerate(f.masks):
        if mask:
            continue
        seen = 0
        for w in h.adjacency[v]:
            seen |= f.masks[w]
        if seen != full:
            bad.append((Vertex(v), colors_of(seen)))
    return VerificationReport(tuple(bad))


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------


def format_colors(mask: int) -> str:
    cs = sorted(colors_of(mask))
    return ",".join(map(str, cs)) if cs else "-"


def format_assignment(f: RainbowAssignment) -> str:
    lines = [f"k {f.k} {f.domain}"]
    lines += [f"{x} {format_colors(m)}" for x, m in zip(f.keys, f.masks)]
    return "\n".join(lines) + "\n"


def parse_key(token: str) -> Element:
    try:
        if token.startswith("v"):
            return Vertex(int(token[1:]))
        if token.startswith("e"):
            u, v = token[1:].split("-")
            u, v = int(u), int(v)
            return Edge(min(u, v), max(u, v))
    except ValueError:
        pass
    raise ValueError(f"bad element key {token!r}")


def parse_assignment(text: str, g: Graph, first_line: int = 1) -> RainbowAssignment:
    """Parse the assignment format against ``g`` (the source graph, or the host for plain)."""
    lines = [
        (i, raw.strip())
        for i, raw in enumerate(text.splitlines(), start=first_line)
        if raw.strip() and not raw.strip().startswith("#")
    ]
    if not lines:
        raise ParseError("missing 'k <k> <middle|plain>' header", first_line)
    hl, header = lines[0]
    parts = header.split()
    if len(parts) != 3 or parts[0] != "k" or parts[2] not in ("middle", "plain"):
        raise ParseError(f"malformed header {header!r}", hl)
    try:
        k = int(parts[1])
        check_k(k)
    except (ValueError, DomainError) as exc:
        raise ParseError(f"bad k in header: {exc}", hl) from None
    domain = parts[2]
    keys = elements(g) if domain == "middle" else tuple(Vertex(i) for i in range(g.order))
    pos = {x: i for i, x in enumerate(keys)}
    masks = [0] * len(keys)
    seen = set()
    for lineno, line in lines[1:]:
        toks = line.split()
        if len(toks) != 2:
            raise ParseError(f"expected '<key> <colors>', got {line!r}", lineno)
        try:
            key = parse_key(toks[0])
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
        if key not in pos:
            raise ParseError(f"{toks[0]} is not in the {domain} domain", lineno)
        if key in seen:
            raise ParseError(f"{toks[0]} listed twice", lineno)
        seen.add(key)
        if toks[1] == "-":
            continue
        try:
            masks[pos[key]] = colorset((int(c) for c in toks[1].split(",")), k)
        except (ValueError, DomainError) as exc:
            raise ParseError(f"bad color set {toks[1]!r}: {exc}", lineno) from None
    return RainbowAssignment(k, domain, keys, tuple(masks))
