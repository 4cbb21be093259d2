"""Exhaustive embedding search: does a graph embed with genus at most ``g``?

The embedding is grown one edge at a time, keeping the embedded subgraph
connected.  An edge to a new vertex is hung in one of the corners of its
placed endpoint (these edges form a spanning tree); an edge between placed
vertices is routed through a corner at each end.  If both corners lie on one
face the face splits and genus is unchanged; otherwise two faces merge and
genus rises by one.  Every rotation system is reached exactly once.

Two necessary conditions prune the tree, both driven by the genus budget
``b = g - current genus``:

* cofaciality: every pending edge between placed vertices, and every
  component of unplaced vertices (through its placed neighbours), must end up
  inside a single face.  Only a merge can create new cofacial pairs, so with
  ``b == 0`` every requirement must already hold, and with ``b == 1`` one
  face or pair of faces must cover all unmet requirements.
* face excess: with ``f`` faces at genus ``g`` the final faces carry total
  excess ``E = 2m - 3f`` over triangles.  A face of length ``L`` needs about
  ``L - 3 - E`` chords from pending edges with both ends on it.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Sequence

from .embedding import Embedding, canonical_code, genus as embedding_genus
from .graph import Graph, GraphError, components

log = logging.getLogger(__name__)


@dataclass
class EmbedOutcome:
    """Result of :func:`embed_in_genus`: a witness or proof of exhaustion."""

    graph: Graph
    max_genus: int
    witness: Embedding | None
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.witness is not None

    @property
    def exhausted(self) -> bool:
        return self.witness is None


@dataclass
class EmbeddingList:
    embeddings: list[Embedding] = field(default_factory=list)
    truncated: bool = False

    def __len__(self) -> int:
        return len(self.embeddings)

    def __iter__(self):
        return iter(self.embeddings)


def insertion_order(g: Graph, order: str | Sequence[tuple[int, int]] = "growth") -> list[tuple[int, int]]:
    """Edges in the order they are inserted, oriented ``(placed, other)``.

    ``"growth"`` adds vertices one at a time, each time picking the vertex
    with most neighbours already placed (then higher degree, lower index),
    and inserts all its edges back to placed vertices.  ``"degree-sum"``
    sorts edges by decreasing endpoint degree sum.  An explicit edge list is
    also accepted.  Edges that would not touch the embedded part yet are
    deferred until they do.
    """
    n = g.order
    if isinstance(order, str):
        if order == "growth":
            seq = _growth_order(g)
        elif order == "degree-sum":
            seq = sorted(g.edges, key=lambda e: (-(g.degree(e[0]) + g.degree(e[1])), e))
        else:
            raise ValueError(f"unknown insertion order {order!r}")
    else:
        seq = [tuple(e) for e in order]
        if sorted(tuple(sorted(e)) for e in seq) != sorted(g.edges):
            raise ValueError("explicit order must list every edge exactly once")
    out: list[tuple[int, int]] = []
    pending = list(seq)
    placed = 0
    while pending:
        for idx, (a, b) in enumerate(pending):
            if not placed:
                placed = 1 << a
            if placed >> a & 1:
                out.append((a, b))
                break
            if placed >> b & 1:
                out.append((b, a))
                break
        else:  # pragma: no cover - guarded by the connectivity check
            raise GraphError("graph is disconnected")
        pending.pop(idx)
        placed |= 1 << out[-1][1]
    assert n >= 1
    return out


def _growth_order(g: Graph) -> list[tuple[int, int]]:
    n = g.order
    start = max(range(n), key=lambda v: (g.degree(v), -v))
    placed = 1 << start
    seq = []
    for _ in range(n - 1):
        best = max(
            (v for v in range(n) if not placed >> v & 1 and g.adj[v] & placed),
            key=lambda v: ((g.adj[v] & placed).bit_count(), g.degree(v), -v),
        )
        nbrs = [u for u in range(n) if placed >> u & 1 and g.adj[best] >> u & 1]
        # hang the new vertex from its highest-degree placed neighbour first
        nbrs.sort(key=lambda u: (-g.degree(u), u))
        seq.extend((u, best) for u in nbrs)
        placed |= 1 << best
    return seq


class _Search:
    def __init__(self, g: Graph, max_genus: int, order, collect: bool = False, limit: int | None = None,
                 prune: bool = True):
        self.g = g
        self.prune = prune
        self.n = g.order
        self.m = g.size
        self.max_genus = max_genus
        self.seq = insertion_order(g, order) if self.m else []
        # excess of the final faces over triangles at the largest allowed genus
        f_final = 2 - 2 * max_genus - self.n + self.m
        self.excess = 2 * self.m - 3 * f_final
        self.deg = [g.degree(v) for v in range(self.n)]
        self.rot: list[list[int]] = [[] for _ in range(self.n)]
        self.nodes = 0
        self.collect = collect
        self.limit = limit
        self.found: list[Embedding] = []
        self.codes: set[bytes] = set()
        self.truncated = False
        # placed-vertex masks and pending-edge lists after k insertions
        self.placed_after = []
        placed = 1 << self.seq[0][0] if self.seq else 1
        for u, v in self.seq:
            placed |= 1 << v
            self.placed_after.append(placed)

    # -- faces -----------------------------------------------------------
    def _faces(self):
        rot = self.rot
        face_of: dict[tuple[int, int], int] = {}
        lengths: list[int] = []
        masks: list[int] = []
        for a in range(self.n):
            for b in rot[a]:
                if (a, b) in face_of:
                    continue
                fid = len(lengths)
                mask = 0
                L = 0
                x, y = a, b
                while (x, y) not in face_of:
                    face_of[(x, y)] = fid
                    mask |= 1 << x
                    L += 1
                    ry = rot[y]
                    x, y = y, ry[(ry.index(x) + 1) % len(ry)]
                lengths.append(L)
                masks.append(mask)
        return face_of, lengths, masks

    # -- pruning ---------------------------------------------------------
    def _feasible(self, k: int, placed: int, n_placed: int, lengths, masks) -> bool:
        f = len(lengths)
        genus2 = 2 - n_placed + k - f if k else 0
        budget = self.max_genus - genus2 // 2
        if budget < 0:
            return False
        if budget >= 2 or self.m < 2 or not self.prune:
            return True
        adj = self.g.adj
        reqs = []
        inner = []  # pending edges with both ends placed
        for u, v in self.seq[k:]:
            e = (1 << u) | (1 << v)
            if e & placed == e:
                inner.append(e)
        reqs.extend(inner)
        unplaced = self.g.all_mask & ~placed
        slack = 0
        if unplaced:
            for comp in components(self.g, placed):
                nb = 0
                for w in _iter_bits(comp):
                    nb |= adj[w]
                    if self.deg[w] > 3:
                        slack += self.deg[w] - 3
                nb &= placed
                if nb & (nb - 1):
                    reqs.append(nb)
        unmet = [r for r in reqs if not any(r & ~fm == 0 for fm in masks)]
        E = self.excess

        def chords(mask: int) -> int:
            return sum(1 for r in inner if r & ~mask == 0)

        deficient = []
        for i in range(f):
            need = lengths[i] - 3 - E
            if need > 0 and chords(masks[i]) + slack < need:
                deficient.append(i)
        if budget == 0:
            return not unmet and not deficient
        if not unmet and not deficient:
            return True
        if len(deficient) > 2:
            return False
        # the merge joins two faces that descend from current faces i and j;
        # i == j is allowed (both pieces of one face) and then costs 3 more
        if len(deficient) == 2:
            pairs = [tuple(deficient)]
        elif deficient:
            d = deficient[0]
            pairs = [(d, j) for j in range(f)]
        else:
            pairs = combinations_with_replacement(range(f), 2)
        for i, j in pairs:
            mask = masks[i] | masks[j]
            if any(r & ~mask for r in unmet):
                continue
            need = lengths[i] + lengths[j] - E if i != j else lengths[i] + 3 - E
            if chords(mask) + slack < need:
                continue
            return True
        return False

    # -- search ----------------------------------------------------------
    def run(self) -> bool:
        if self.m == 0:
            self._leaf()
            return True
        if self.excess < 0 and self.m >= 2:
            return False
        u0 = self.seq[0][0]
        return self._rec(0, 1 << u0, 1)

    def _leaf(self) -> bool:
        """Record a complete embedding; True means stop searching."""
        emb = Embedding(tuple(tuple(r) for r in self.rot))
        if not self.collect:
            self.found.append(emb)
            return True
        code = canonical_code(emb)
        if code not in self.codes:
            self.codes.add(code)
            self.found.append(emb)
            if self.limit is not None and len(self.found) >= self.limit:
                self.truncated = True
                return True
        return False

    def _rec(self, k: int, placed: int, n_placed: int) -> bool:
        self.nodes += 1
        face_of, lengths, masks = self._faces()
        if not self._feasible(k, placed, n_placed, lengths, masks):
            return False
        if k == len(self.seq):
            if self.collect:
                genus2 = 2 - n_placed + k - len(lengths)
                if genus2 // 2 != self.max_genus:
                    return False
            return self._leaf()
        rot = self.rot
        u, v = self.seq[k]
        ru = rot[u]
        if not placed >> v & 1:
            for i in range(max(1, len(ru))):
                p = i + 1 if ru else 0
                ru.insert(p, v)
                rot[v].append(u)
                stop = self._rec(k + 1, placed | (1 << v), n_placed + 1)
                rot[v].pop()
                ru.pop(p)
                if stop:
                    return True
            return False
        rv = rot[v]
        du, dv = len(ru), len(rv)
        same, cross = [], []
        for i in range(du):
            fu = face_of[(ru[i], u)]
            for j in range(dv):
                (same if face_of[(rv[j], v)] == fu else cross).append((i, j))
        for i, j in same + cross:
            ru.insert(i + 1, v)
            rv.insert(j + 1, u)
            stop = self._rec(k + 1, placed, n_placed)
            rv.pop(j + 1)
            ru.pop(i + 1)
            if stop:
                return True
        return False


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_connected(g: Graph) -> None:
    if not g.is_connected():
        raise GraphError("embedding search needs a connected graph; embed components separately")


def embed_in_genus(g: Graph, max_genus: int, *, order="growth", prune: bool = True) -> EmbedOutcome:
    """Find an embedding of genus at most ``max_genus`` or prove none exists.

    ``prune=False`` keeps only the genus bound; it is slower and exists for
    cross-checking the pruning rules.
    """
    _check_connected(g)
    if max_genus < 0:
        raise ValueError("max_genus must be nonnegative")
    s = _Search(g, max_genus, order, prune=prune)
    s.run()
    witness = s.found[0] if s.found else None
    if witness is not None:
        assert embedding_genus(witness) <= max_genus and witness.graph == g
    return EmbedOutcome(g, max_genus, witness, s.nodes)


def min_genus(g: Graph, bound: int, *, order="growth") -> int | None:
    """Smallest genus ``<= bound`` admitting an embedding, else ``None``."""
    _check_connected(g)
    for gamma in range(bound + 1):
        if embed_in_genus(g, gamma, order=order).found:
            return gamma
    return None


def embeddings_up_to_equivalence(g: Graph, genus: int, limit: int | None = None, *, order="growth",
                                 prune: bool = True) -> EmbeddingList:
    """Pairwise inequivalent embeddings of exactly the given genus."""
    _check_connected(g)
    s = _Search(g, genus, order, collect=True, limit=limit, prune=prune)
    s.run()
    if s.m == 0:
        s.found = s.found if genus == 0 else []
    return EmbeddingList(s.found, s.truncated)


def embed_with_removals(
    g: Graph, k: int, genus: int, *, start: int = 0, stop: int | None = None, order="growth"
) -> list[tuple[tuple[tuple[int, int], ...], Embedding]]:
    """Embed ``g`` minus each ``k``-subset of its edges; return all successes.

    Subsets are taken in lexicographic order over ``g.edges``; ``start`` and
    ``stop`` select a contiguous block of that sequence.
    """
    _check_connected(g)
    if not 0 <= k <= g.size:
        raise ValueError(f"cannot remove {k} of {g.size} edges")
    found = []
    for idx, removed in enumerate(combinations(g.edges, k)):
        if idx < start:
            continue
        if stop is not None and idx >= stop:
            break
        h = g.remove_edges(removed)
        if not h.is_connected():
            log.info("skipping removal %s: graph becomes disconnected", removed)
            continue
        out = embed_in_genus(h, genus, order=order)
        if out.witness is not None:
            found.append((removed, out.witness))
    return found
