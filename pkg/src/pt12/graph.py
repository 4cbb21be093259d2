"""Simple undirected graphs on at most 64 vertices.

Adjacency is stored as one integer bitmask per vertex, so edge tests and
neighbourhood intersections are single integer operations.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

MAX_ORDER = 64


class GraphError(ValueError):
    """Raised for malformed graph input or violated preconditions."""


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph with vertices ``0..order-1``.

    ``adj[v]`` is the neighbour bitmask of ``v``.  Build instances with
    :func:`make_graph` rather than the constructor.
    """

    order: int
    adj: tuple[int, ...]

    @cached_property
    def size(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (u, v) for u in range(self.order) for v in _bits(self.adj[u]) if u < v
        )

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    @property
    def all_mask(self) -> int:
        return (1 << self.order) - 1

    def is_connected(self, removed: int = 0) -> bool:
        """Connectivity of the graph with the vertices in ``removed`` deleted."""
        return len(components(self, removed)) <= 1

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = list(self.adj)
        for u, v in edges:
            if not adj[u] >> v & 1:
                raise GraphError(f"edge ({u}, {v}) not present")
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return Graph(self.order, tuple(adj))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return make_graph(self.order, [(perm[u], perm[v]) for u, v in self.edges])

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, size={self.size})"


def make_graph(order: int, edges: Iterable[Sequence[int]]) -> Graph:
    if not 1 <= order <= MAX_ORDER:
        raise GraphError(f"order {order} outside 1..{MAX_ORDER}")
    adj = [0] * order
    for pair in edges:
        u, v = pair
        if not (0 <= u < order and 0 <= v < order):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{order - 1}")
        if u == v:
            raise GraphError(f"loop edge ({u}, {v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(order, tuple(adj))


def complete_graph(n: int) -> Graph:
    return make_graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return make_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cycle_graph(n: int) -> Graph:
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def wheel_graph(rim: int) -> Graph:
    """Hub ``0`` joined to a rim cycle on ``1..rim``."""
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return make_graph(rim + 1, edges)


def icosahedron() -> Graph:
    # two poles, two staggered pentagons
    edges = []
    for i in range(5):
        top, bot = 1 + i, 6 + i
        edges += [(0, top), (11, bot)]
        edges += [(top, 1 + (i + 1) % 5), (bot, 6 + (i + 1) % 5)]
        edges += [(top, bot), (top, 6 + (i + 4) % 5)]
    return make_graph(12, edges)


def complement(g: Graph) -> Graph:
    full = g.all_mask
    return Graph(g.order, tuple(full & ~m & ~(1 << v) for v, m in enumerate(g.adj)))


@dataclass(frozen=True)
class DegreeSequence:
    """Vertex degrees sorted in descending order."""

    degrees: tuple[int, ...]

    @property
    def min(self) -> int:
        return self.degrees[-1] if self.degrees else 0

    @property
    def max(self) -> int:
        return self.degrees[0] if self.degrees else 0

    def __len__(self) -> int:
        return len(self.degrees)

    def power_notation(self) -> dict[int, int]:
        """``{degree: multiplicity}``, i.e. ``d^r`` notation."""
        out: dict[int, int] = {}
        for d in self.degrees:
            out[d] = out.get(d, 0) + 1
        return dict(sorted(out.items()))

    @classmethod
    def from_powers(cls, powers: dict[int, int]) -> "DegreeSequence":
        return cls(tuple(sorted((d for d, r in powers.items() for _ in range(r)), reverse=True)))


def degree_sequence(g: Graph) -> DegreeSequence:
    return DegreeSequence(tuple(sorted((m.bit_count() for m in g.adj), reverse=True)))


def count_triangles(g: Graph) -> int:
    """Number of vertex triples inducing a triangle (full triple scan)."""
    adj = g.adj
    total = 0
    for u, v, w in combinations(range(g.order), 3):
        if adj[u] >> v & 1 and adj[u] >> w & 1 and adj[v] >> w & 1:
            total += 1
    return total


def goodman_total(ds: DegreeSequence, n: int, m: int) -> int:
    """t(G) + t(complement G) computed from the degree sequence alone."""
    if len(ds) != n or sum(ds.degrees) != 2 * m or (n and not 0 <= ds.min <= ds.max <= n - 1):
        raise GraphError(f"degree sequence inconsistent with n={n}, m={m}")
    return comb(n, 3) - (n - 2) * m + sum(comb(d, 2) for d in ds.degrees)


def is_independent_set(g: Graph, s: Iterable[int]) -> bool:
    mask = 0
    for v in s:
        if not 0 <= v < g.order:
            raise GraphError(f"vertex {v} not in graph")
        mask |= 1 << v
    return all(not (g.adj[v] & mask) for v in _bits(mask))


def components(g: Graph, removed: int = 0) -> list[int]:
    """Vertex bitmasks of the connected components of ``g`` minus ``removed``."""
    remaining = g.all_mask & ~removed
    comps = []
    while remaining:
        seed = remaining & -remaining
        comp = frontier = seed
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & remaining & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


@dataclass(frozen=True)
class SeparatorWitness:
    separator: tuple[int, ...]
    kind: str  # "triangle" | "four-cycle" | "clique-four-cycle"
    component_orders: tuple[int, ...]  # sorted ascending

    def verify(self, g: Graph) -> bool:
        mask = sum(1 << v for v in self.separator)
        orders = sorted(c.bit_count() for c in components(g, mask))
        return len(orders) >= 2 and tuple(orders) == self.component_orders


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise GraphError("separating-set detection requires a connected graph")


def _separation(g: Graph, verts: Sequence[int]) -> tuple[int, ...] | None:
    mask = sum(1 << v for v in verts)
    comps = components(g, mask)
    if len(comps) < 2:
        return None
    return tuple(sorted(c.bit_count() for c in comps))


def list_separating_triangles(g: Graph) -> list[SeparatorWitness]:
    _require_connected(g)
    out = []
    adj = g.adj
    for u, v, w in combinations(range(g.order), 3):
        if adj[u] >> v & 1 and adj[u] >> w & 1 and adj[v] >> w & 1:
            orders = _separation(g, (u, v, w))
            if orders:
                out.append(SeparatorWitness((u, v, w), "triangle", orders))
    return out


def _has_spanning_4cycle(g: Graph, a: int, b: int, c: int, d: int) -> bool:
    e = g.has_edge
    # the three distinct 4-cycles on {a,b,c,d}
    return (
        (e(a, b) and e(b, c) and e(c, d) and e(d, a))
        or (e(a, b) and e(b, d) and e(d, c) and e(c, a))
        or (e(a, c) and e(c, b) and e(b, d) and e(d, a))
    )


def list_separating_4cycles(g: Graph) -> list[SeparatorWitness]:
    _require_connected(g)
    out = []
    for quad in combinations(range(g.order), 4):
        if not _has_spanning_4cycle(g, *quad):
            continue
        orders = _separation(g, quad)
        if orders:
            clique = all(g.has_edge(x, y) for x, y in combinations(quad, 2))
            out.append(SeparatorWitness(quad, "clique-four-cycle" if clique else "four-cycle", orders))
    return out


def can_split_sides(orders: Sequence[int], sides: tuple[int, int]) -> bool:
    """Whether the components can be grouped into two sides of the given orders."""
    if sum(orders) != sum(sides) or len(orders) < 2:
        return False
    target = sides[0]
    reachable = {0}
    # subset-sum over components; each side must be nonempty, guaranteed by target > 0
    for o in orders:
        reachable |= {r + o for r in reachable}
    return target in reachable and 0 < target < sum(orders)
