"""Bitset graphs: construction, products, distance-two squares, components.

Vertices are 0..n-1. Vertex sets are Python ints used as bit masks, and
``adj[v]`` is the open-neighborhood mask of v. Graph products number their
vertices row-major: vertex (i, j) of a product of g and h gets index
``i * h.n + j``, so a witness index on a product decodes as
``divmod(index, h.n)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .config import max_width
from .errors import CapacityError, ParameterError

CARTESIAN = "cartesian"
STRONG = "strong"
PRODUCT_KINDS = (CARTESIAN, STRONG)


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        lsb = mask & -mask
        yield lsb.bit_length() - 1
        mask ^= lsb


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1 with bit-mask adjacency."""

    n: int
    adj: tuple[int, ...]
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ParameterError("graph needs at least one vertex")
        width = max_width()
        if self.n > width:
            raise CapacityError(
                f"graph on {self.n} vertices exceeds the configured width {width}"
            )
        if len(self.adj) != self.n:
            raise ParameterError("adjacency row count differs from vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ParameterError(f"neighbor of vertex {v} out of range")
            if row >> v & 1:
                raise ParameterError(f"loop at vertex {v}")
        for v, row in enumerate(self.adj):
            t = row
            while t:
                lsb = t & -t
                t ^= lsb
                u = lsb.bit_length() - 1
                if not self.adj[u] >> v & 1:
                    raise ParameterError(f"edge {v}-{u} is not symmetric")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            t = self.adj[v] >> (v + 1) << (v + 1)
            for u in bits(t):
                out.append((v, u))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def closed(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def closed_adj(self) -> list[int]:
        return [row | (1 << v) for v, row in enumerate(self.adj)]

    def name(self) -> str:
        """Printable descriptor: the label if set, else a graph6 string."""
        if self.label:
            return self.label
        from .graph6 import write_graph6

        return write_graph6(self)


def from_edges(n: int, edges: Iterable[tuple[int, int]], label: str = "") -> Graph:
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise ParameterError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParameterError(f"edge {u}-{v} out of range for n={n}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), label)


def product(g: Graph, h: Graph, kind: str) -> Graph:
    """Cartesian or strong product with row-major vertex numbering.

    Cartesian edges join pairs that agree in one coordinate and are adjacent
    in the other; the strong product keeps those and adds pairs adjacent in
    both coordinates.
    """
    if kind not in PRODUCT_KINDS:
        raise ParameterError(f"unknown product kind {kind!r}")
    n = g.n * h.n
    width = max_width()
    if n > width:
        raise CapacityError(
            f"product on {n} vertices exceeds the configured width {width}"
        )
    strong = kind == STRONG
    n2 = h.n
    adj = []
    for i in range(g.n):
        base = i * n2
        row_g = g.adj[i]
        for j in range(n2):
            m = h.adj[j] << base
            t = row_g
            while t:
                lsb = t & -t
                t ^= lsb
                ii = lsb.bit_length() - 1
                m |= 1 << (ii * n2 + j)
                if strong:
                    m |= h.adj[j] << (ii * n2)
            adj.append(m)
    label = f"{g.name()} x {h.name()} {kind}"
    return Graph(n, tuple(adj), label)


def square(g: Graph) -> Graph:
    """Graph on the same vertices joining pairs at distance one or two."""
    adj = []
    for v in range(g.n):
        m = g.adj[v]
        t = g.adj[v]
        while t:
            lsb = t & -t
            t ^= lsb
            m |= g.adj[lsb.bit_length() - 1]
        m &= ~(1 << v)
        adj.append(m)
    label = f"square({g.label})" if g.label else ""
    return Graph(g.n, tuple(adj), label)


def components(g: Graph) -> list[int]:
    """Connected components as bit masks, ordered by smallest member vertex."""
    out = []
    remaining = g.full_mask
    while remaining:
        comp = 0
        frontier = remaining & -remaining
        while frontier:
            comp |= frontier
            nxt = 0
            t = frontier
            while t:
                lsb = t & -t
                t ^= lsb
                nxt |= g.adj[lsb.bit_length() - 1]
            frontier = nxt & ~comp
        out.append(comp)
        remaining &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def is_path_graph(g: Graph) -> bool:
    """True when g is a path on n >= 1 vertices (in any labeling)."""
    if not is_connected(g):
        return False
    if g.edge_count() != g.n - 1:
        return False
    return max(g.degrees()) <= 2


def is_cycle_graph(g: Graph) -> bool:
    """True when g is a cycle on n >= 3 vertices (in any labeling)."""
    if g.n < 3 or not is_connected(g):
        return False
    return all(d == 2 for d in g.degrees())
