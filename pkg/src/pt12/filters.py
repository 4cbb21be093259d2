"""Necessary conditions on a planar triangulation G of order 12 for its
complement to triangulate the torus.

Each filter returns True (pass) or False (fail).  :func:`run_filters`
applies them in :data:`FILTER_ORDER`, stopping at the first failure.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .graph import (
    DegreeSequence,
    Graph,
    GraphError,
    can_split_sides,
    complement,
    count_triangles,
    degree_sequence,
    is_independent_set,
    list_separating_4cycles,
    list_separating_triangles,
)

ORDER = 12
SIZE = 30

FORBIDDEN_SEQUENCES: tuple[DegreeSequence, ...] = tuple(
    DegreeSequence.from_powers(p)
    for p in (
        {5: 12},
        {4: 1, 5: 10, 6: 1},
        {4: 2, 5: 8, 6: 2},
        {4: 3, 5: 6, 6: 3},
        {3: 1, 5: 9, 6: 2},
        {4: 2, 5: 9, 7: 1},
        {3: 1, 5: 10, 7: 1},
    )
)

# faces of a triangulated torus on 12 vertices
TORUS_FACES = 24


def _check(g: Graph) -> None:
    if g.order != ORDER or g.size != SIZE:
        raise GraphError(f"expected a triangulation with 12 vertices and 30 edges, got n={g.order} m={g.size}")


def filter_max_degree(g: Graph) -> bool:
    _check(g)
    ds = degree_sequence(g)
    if ds.min < 3:
        raise GraphError("a sphere triangulation of order 12 has minimum degree at least 3")
    return ds.max <= 8


def filter_deg8_independence(g: Graph) -> bool:
    _check(g)
    full = g.all_mask
    deg8 = [v for v in range(ORDER) if g.degree(v) == 8]
    for v in deg8:
        outside = full & ~g.adj[v] & ~(1 << v)
        if not is_independent_set(g, [u for u in range(ORDER) if outside >> u & 1]):
            return False
    return all(g.has_edge(a, b) for i, a in enumerate(deg8) for b in deg8[i + 1:])


def filter_forbidden_degree_sequences(g: Graph) -> bool:
    _check(g)
    return degree_sequence(g) not in FORBIDDEN_SEQUENCES


def filter_triangle_budget(g: Graph) -> bool:
    _check(g)
    c = complement(g)
    if not c.is_connected():
        return False
    return count_triangles(c) - len(list_separating_triangles(c)) >= TORUS_FACES


def _separating_triangle_sides(g: Graph, sides: tuple[int, int]) -> bool:
    _check(g)
    return not any(can_split_sides(w.component_orders, sides) for w in list_separating_triangles(g))


def filter_separating_3_6(g: Graph) -> bool:
    return _separating_triangle_sides(g, (3, 6))


def filter_separating_4_5(g: Graph) -> bool:
    return _separating_triangle_sides(g, (4, 5))


def filter_separating_4cycle_4_4(g: Graph) -> bool:
    _check(g)
    return not any(can_split_sides(w.component_orders, (4, 4)) for w in list_separating_4cycles(g))


FILTERS: dict[str, Callable[[Graph], bool]] = {
    "maxDegree": filter_max_degree,
    "deg8Independence": filter_deg8_independence,
    "forbiddenDegreeSequence": filter_forbidden_degree_sequences,
    "triangleBudget": filter_triangle_budget,
    "separating36": filter_separating_3_6,
    "separating45": filter_separating_4_5,
    "separating4cycle44": filter_separating_4cycle_4_4,
}
FILTER_ORDER: tuple[str, ...] = tuple(FILTERS)


@dataclass
class FilterReport:
    graph_id: int
    outcomes: dict[str, bool] = field(default_factory=dict)  # filters actually run
    first_failure: str | None = None

    @property
    def survivor(self) -> bool:
        return self.first_failure is None and all(self.outcomes.values())

    def to_line(self) -> str:
        cells = []
        for name in FILTER_ORDER:
            val = self.outcomes.get(name)
            cells.append(f"{name}={'-' if val is None else ('pass' if val else 'fail')}")
        status = "survivor" if self.survivor else f"rejected:{self.first_failure}"
        return f"{self.graph_id}\t{status}\t" + " ".join(cells)


def run_filters(g: Graph, graph_id: int = 0, order: tuple[str, ...] = FILTER_ORDER,
                short_circuit: bool = True) -> FilterReport:
    rep = FilterReport(graph_id)
    for name in order:
        ok = FILTERS[name](g)
        rep.outcomes[name] = ok
        if not ok and rep.first_failure is None:
            rep.first_failure = name
            if short_circuit:
                break
    return rep
