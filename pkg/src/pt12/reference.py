"""Reference triangulations of order 12 whose complements nearly embed on
the torus: removing the two listed ``dotted`` edges from the complement
leaves a toroidal graph.

Edge lists below are 1-based; :func:`load_reference` returns 0-based graphs after checking that each is a planar triangulation
with a connected complement.
"""
from __future__ import annotations

from dataclasses import dataclass

from .genus_search import embed_in_genus
from .graph import Graph, GraphError, complement, make_graph


@dataclass(frozen=True)
class ReferencePair:
    name: str
    triangulation: Graph
    dotted: tuple[tuple[int, int], ...]  # 0-based, edges of the complement

    @property
    def near_toroidal(self) -> Graph:
        return complement(self.triangulation).remove_edges(self.dotted)


_RAW = {
    "figure1": (
        "2-6 2-7 2-8 2-9 2-4 2-3 2-1 6-7 7-12 7-8 12-8 8-9 9-4 4-3 3-1 1-6 4-1 9-5 4-5 6-5 "
        "1-5 12-11 11-8 11-7 9-11 6-11 9-6 9-10 6-10 5-10",
        "11-1 11-4",
    ),
    "figure2": (
        "2-5 2-6 2-7 2-8 2-9 2-10 2-3 2-1 5-6 6-7 7-8 8-9 9-10 10-3 3-1 3-4 1-5 1-4 8-11 "
        "9-11 10-11 7-12 10-5 4-10 5-4 12-8 12-6 5-12 5-8 11-5",
        "8-3 8-4",
    ),
}

# complement edges as drawn on the torus (dotted edges excluded), 1-based
TORUS_DRAWINGS = {
    "figure1": "1-9 1-12 1-10 1-8 1-7 2-11 2-10 2-12 2-5 3-12 3-9 3-7 3-10 3-11 3-5 3-8 3-6 4-10 "
               "4-7 4-12 4-6 4-8 5-8 5-11 5-12 5-7 6-8 6-12 7-10 7-9 8-10 9-12 10-12 10-11",
    "figure2": "1-8 1-6 1-11 1-7 1-9 1-12 1-10 2-4 2-11 2-12 3-12 3-11 3-6 3-9 3-5 3-7 4-12 4-9 "
               "4-6 4-7 4-11 5-9 5-7 6-9 6-11 6-8 6-10 8-10 9-12 9-7 10-12 10-7 11-7 11-12",
}


def _pairs(text: str) -> list[tuple[int, int]]:
    return [tuple(int(x) - 1 for x in tok.split("-")) for tok in text.split()]


def names() -> list[str]:
    return sorted(_RAW)


def load_reference(name: str) -> ReferencePair:
    edges, dotted = _RAW[name]
    g = make_graph(12, _pairs(edges))
    if g.size != 30:
        raise GraphError(f"{name}: expected 30 edges, got {g.size}")
    if not embed_in_genus(g, 0).found:
        raise GraphError(f"{name}: triangulation is not planar")
    c = complement(g)
    if not c.is_connected():
        raise GraphError(f"{name}: complement is disconnected")
    dots = tuple(tuple(sorted(e)) for e in _pairs(dotted))
    if not all(c.has_edge(u, v) for u, v in dots):
        raise GraphError(f"{name}: dotted edges must belong to the complement")
    return ReferencePair(name, g, dots)


def torus_drawing(name: str) -> Graph:
    return make_graph(12, _pairs(TORUS_DRAWINGS[name]))
