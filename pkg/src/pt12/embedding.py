"""Rotation systems on orientable surfaces.

An :class:`Embedding` stores, for each vertex, the cyclic order of its
neighbours.  Faces are traced with one fixed rule: the dart following
``(u, v)`` is ``(v, w)`` where ``w`` comes right after ``u`` in the rotation
at ``v``.  Reversing every rotation (``reflect``) yields the mirror image.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .graph import Graph, GraphError, make_graph

Dart = tuple[int, int]


class EmbeddingError(ValueError):
    pass


@dataclass(frozen=True)
class FaceSet:
    faces: tuple[tuple[Dart, ...], ...]

    @property
    def lengths(self) -> list[int]:
        return sorted(len(f) for f in self.faces)

    def __len__(self) -> int:
        return len(self.faces)

    def vertex_cycles(self) -> list[tuple[int, ...]]:
        return [tuple(d[0] for d in f) for f in self.faces]


@dataclass(frozen=True)
class Embedding:
    """A rotation system: ``rotation[v]`` is the cyclic neighbour list of ``v``."""

    rotation: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rot = self.rotation
        n = len(rot)
        for v, nbrs in enumerate(rot):
            if len(set(nbrs)) != len(nbrs):
                raise EmbeddingError(f"rotation at {v} repeats a neighbour")
            for u in nbrs:
                if not 0 <= u < n or u == v:
                    raise EmbeddingError(f"rotation at {v} lists invalid neighbour {u}")
                if v not in rot[u]:
                    raise EmbeddingError(f"asymmetric adjacency: {u} in rotation of {v} but not vice versa")

    @classmethod
    def from_lists(cls, lists: Iterable[Sequence[int]]) -> "Embedding":
        return cls(tuple(tuple(x) for x in lists))

    @property
    def order(self) -> int:
        return len(self.rotation)

    @cached_property
    def size(self) -> int:
        return sum(len(r) for r in self.rotation) // 2

    @cached_property
    def graph(self) -> Graph:
        return make_graph(self.order, ((v, u) for v, r in enumerate(self.rotation) for u in r if v < u))

    @cached_property
    def successor(self) -> dict[Dart, int]:
        """``successor[(v, u)]`` is the neighbour after ``u`` in the rotation at ``v``."""
        out = {}
        for v, r in enumerate(self.rotation):
            d = len(r)
            for i, u in enumerate(r):
                out[(v, u)] = r[(i + 1) % d]
        return out

    @cached_property
    def faces(self) -> FaceSet:
        return trace_faces(self)

    def relabel(self, perm: Sequence[int]) -> "Embedding":
        """Embedding with vertex ``v`` renamed to ``perm[v]``."""
        rot: list[tuple[int, ...]] = [()] * self.order
        for v, r in enumerate(self.rotation):
            rot[perm[v]] = tuple(perm[u] for u in r)
        return Embedding(tuple(rot))

    def rotated(self, shifts: Sequence[int]) -> "Embedding":
        """Same embedding with each cyclic list started at a different position."""
        return Embedding(tuple(r[s % len(r):] + r[:s % len(r)] if r else r
                               for r, s in zip(self.rotation, shifts)))

    def same_cyclic(self, other: "Embedding") -> bool:
        """Equal rotation systems, ignoring where each cyclic list starts."""
        if self.order != other.order:
            return False
        return all(_cyclic_equal(a, b) for a, b in zip(self.rotation, other.rotation))


def _cyclic_equal(a: Sequence[int], b: Sequence[int]) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    try:
        i = b.index(a[0])
    except ValueError:
        return False
    return all(a[k] == b[(i + k) % len(b)] for k in range(len(a)))


def trace_faces(e: Embedding) -> FaceSet:
    succ = e.successor
    seen: set[Dart] = set()
    faces = []
    for v, r in enumerate(e.rotation):
        for u in r:
            start = (v, u)
            if start in seen:
                continue
            face = []
            dart = start
            while dart not in seen:
                seen.add(dart)
                face.append(dart)
                a, b = dart
                dart = (b, succ[(b, a)])
            if dart != start:
                raise EmbeddingError("face walk did not close; rotation is malformed")
            faces.append(tuple(face))
    return FaceSet(tuple(faces))


def genus(e: Embedding) -> int:
    g = e.graph
    if not g.is_connected():
        raise GraphError("genus via Euler's formula needs a connected graph")
    n, m = e.order, e.size
    if m == 0:
        return 0
    f = len(e.faces)
    euler = 2 - n + m - f
    if euler % 2 or euler < 0:
        raise EmbeddingError(f"Euler characteristic inconsistent: n={n} m={m} f={f}")
    return euler // 2


def is_triangulation(e: Embedding) -> bool:
    return e.size > 0 and all(len(f) == 3 for f in e.faces.faces)


def count_triangular_faces(e: Embedding) -> int:
    return sum(1 for f in e.faces.faces if len(f) == 3)


def reflect(e: Embedding) -> Embedding:
    return Embedding(tuple(tuple(reversed(r)) for r in e.rotation))


def canonical_code(e: Embedding) -> bytes:
    """Code identifying ``e`` up to relabelling, list rotation and reflection.

    For each start dart ``(v, w)`` and each orientation, vertices are
    numbered in breadth-first order, each vertex's list being read from the
    neighbour that discovered it.  The code for a start is
    ``deg(v), deg(w)`` followed by the relabelled lists (1-based, each
    terminated by 0); the canonical code is the smallest over all starts.
    The degree prefix lets starts that cannot win be skipped unread.
    """
    if e.order > 1 and not e.graph.is_connected():
        raise GraphError("canonical code needs a connected graph")
    return bytes(_min_code(e.rotation))


def _min_code(rot: Sequence[Sequence[int]]) -> list[int]:
    n = len(rot)
    if n == 1:
        return [0, 0, 0]
    deg = [len(r) for r in rot]
    pos = [{u: i for i, u in enumerate(r)} for r in rot]
    best_pair = min((deg[v], deg[w]) for v in range(n) for w in rot[v])
    best: list[int] | None = None
    for v0 in range(n):
        if deg[v0] != best_pair[0]:
            continue
        for w0 in rot[v0]:
            if deg[w0] != best_pair[1]:
                continue
            for step in (1, -1):
                best = _bfs_code(rot, pos, deg, v0, w0, step, best)
    return best


def _bfs_code(rot, pos, deg, v0, w0, step, best):
    """BFS code from (v0, w0); returns the new best, aborting once larger."""
    n = len(rot)
    label = [0] * n
    label[v0] = 1
    first = [0] * n
    first[v0] = w0
    queue = [v0]
    code = [deg[v0], deg[w0]]
    # compare incrementally: k = index, equal = still tied with best
    equal = best is not None
    if equal:
        if code[0] > best[0] or (code[0] == best[0] and code[1] > best[1]):
            return best
        if code[0] < best[0] or code[1] < best[1]:
            equal = False
    k = 2
    nxt = 2
    qi = 0
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        r = rot[x]
        d = len(r)
        i = pos[x][first[x]]
        for _ in range(d):
            y = r[i]
            i = (i + step) % d
            ly = label[y]
            if not ly:
                ly = label[y] = nxt
                nxt += 1
                first[y] = x
                queue.append(y)
            if equal:
                b = best[k]
                if ly > b:
                    return best
                if ly < b:
                    equal = False
            code.append(ly)
            k += 1
        if equal:
            if best[k] != 0:
                # best has a longer list here; a terminator sorts first
                equal = False
        code.append(0)
        k += 1
    if equal:
        return best
    return code


def embedding_from_faces(order: int, faces: Iterable[Sequence[int]]) -> Embedding:
    """Rebuild a rotation system from oriented vertex cycles of its faces.

    Each face ``(a, b, c, ...)`` is a closed walk following the tracing rule
    used throughout this module.
    """
    succ: dict[Dart, int] = {}
    for face in faces:
        L = len(face)
        for i in range(L):
            a, b, c = face[i], face[(i + 1) % L], face[(i + 2) % L]
            # dart (a,b) is followed by (b,c): c is successor of a at b
            if (b, a) in succ:
                raise EmbeddingError(f"dart ({a}, {b}) appears in two faces")
            succ[(b, a)] = c
    rot: list[tuple[int, ...]] = []
    for v in range(order):
        nbrs = [u for (x, u) in succ if x == v]
        if not nbrs:
            rot.append(())
            continue
        cyc = [nbrs[0]]
        while len(cyc) < len(nbrs):
            cyc.append(succ[(v, cyc[-1])])
        if succ[(v, cyc[-1])] != cyc[0] or len(set(cyc)) != len(nbrs):
            raise EmbeddingError(f"faces around vertex {v} do not close into one disc")
        rot.append(tuple(cyc))
    return Embedding(tuple(rot))
