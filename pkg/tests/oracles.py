"""Independent brute-force oracles used by the tests.

Nothing here imports the search or generation code paths it checks.
"""
from __future__ import annotations

from itertools import combinations, permutations, product
from math import factorial, prod


def rotation_count(adj: list[set[int]]) -> int:
    return prod(factorial(max(len(a) - 1, 0)) for a in adj)


def all_rotations(adj: list[set[int]]):
    """Every rotation system: first neighbour fixed, rest permuted."""
    per_vertex = []
    for nbrs in adj:
        nb = sorted(nbrs)
        if len(nb) <= 2:
            per_vertex.append([tuple(nb)])
        else:
            per_vertex.append([(nb[0],) + p for p in permutations(nb[1:])])
    return product(*per_vertex)


def count_faces(rot) -> int:
    succ = {}
    for v, r in enumerate(rot):
        for i, u in enumerate(r):
            succ[(v, u)] = r[(i + 1) % len(r)]
    seen = set()
    faces = 0
    for dart in succ:
        if dart in seen:
            continue
        faces += 1
        d = dart
        while d not in seen:
            seen.add(d)
            a, b = d
            d = (b, succ[(b, a)])
    return faces


def brute_min_genus(n: int, edges) -> int:
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    m = len(edges)
    if m == 0:
        return 0
    best = None
    for rot in all_rotations(adj):
        f = count_faces(rot)
        g = (2 - n + m - f) // 2
        if best is None or g < best:
            best = g
            if best == 0:
                break
    return best


def brute_genus_set(n: int, edges) -> dict[int, int]:
    """Number of rotation systems (first neighbour fixed) per genus."""
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    m = len(edges)
    out: dict[int, int] = {}
    for rot in all_rotations(adj):
        g = (2 - n + m - count_faces(rot)) // 2
        out[g] = out.get(g, 0) + 1
    return out


def is_connected(n: int, edges) -> bool:
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def connected_graphs(n: int):
    """All connected labelled graphs on n vertices (small n only)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
        if is_connected(n, edges):
            yield edges


def canonical_graph(n: int, edges) -> tuple:
    """Isomorphism-invariant form by trying every permutation."""
    best = None
    for perm in permutations(range(n)):
        form = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or form < best:
            best = form
    return best


def is_planar_brute(n: int, edges) -> bool:
    return brute_min_genus(n, edges) == 0


def maximal_planar_graphs(n: int) -> set[tuple]:
    """Isomorphism classes of graphs with 3n-6 edges that are planar."""
    pairs = list(combinations(range(n), 2))
    m = 3 * n - 6
    classes = set()
    for chosen in combinations(pairs, m):
        degs = [0] * n
        for u, v in chosen:
            degs[u] += 1
            degs[v] += 1
        if min(degs) < 3:
            continue
        form = canonical_graph(n, chosen)
        if form in classes:
            continue
        if is_connected(n, chosen) and is_planar_brute(n, chosen):
            classes.add(form)
    return classes


def brute_triangles(n: int, edges) -> int:
    es = {frozenset(e) for e in edges}
    return sum(1 for a, b, c in combinations(range(n), 3)
               if {frozenset((a, b)), frozenset((a, c)), frozenset((b, c))} <= es)
