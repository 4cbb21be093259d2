"""Sphere triangulations (maximal planar graphs) by vertex splitting.

Every sphere triangulation on ``n + 1 >= 5`` vertices contracts to one on
``n`` vertices, so splitting vertices level by level from K4 reaches all of
them.  Each level is deduplicated by :func:`canonical_code` and stored in
canonical labelling, sorted by code.
"""
from __future__ import annotations

from dataclasses import dataclass

from .embedding import Embedding, _min_code, genus, is_triangulation

K4_SURFTRI = "4 bcd,adc,abd,acb"


class GenerationError(ValueError):
    pass


@dataclass(frozen=True)
class GenerationLevel:
    order: int
    embeddings: tuple[Embedding, ...]
    codes: tuple[bytes, ...]

    def __len__(self) -> int:
        return len(self.embeddings)


def k4() -> Embedding:
    return Embedding(((1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1)))


def decode_code(code: bytes | list[int]) -> Embedding:
    """Embedding whose vertex ``i`` is BFS label ``i + 1`` of the code."""
    body = list(code[2:])
    rot: list[tuple[int, ...]] = []
    cur: list[int] = []
    for x in body:
        if x == 0:
            rot.append(tuple(cur))
            cur = []
        else:
            cur.append(x - 1)
    return Embedding(tuple(rot))


def _splits(rot: list[list[int]]):
    """Yield rotation lists for every vertex split of a sphere triangulation."""
    n = len(rot)
    w = n
    for v in range(n):
        r = rot[v]
        d = len(r)
        for t in range(1, d // 2 + 1):
            for i in range(d if 2 * t < d else d // 2):
                arc = [r[(i + k) % d] for k in range(t + 1)]
                keep = [r[(i + t + k) % d] for k in range(d - t + 1)]
                a0, at = arc[0], arc[-1]
                new = [list(x) for x in rot]
                new[v] = keep + [w]
                new.append(arc + [v])
                for k in range(1, t):
                    x = new[arc[k]]
                    x[x.index(v)] = w
                x = new[a0]
                p = x.index(v)
                x.insert(p, w)
                x = new[at]
                p = x.index(v)
                x.insert(p + 1, w)
                yield new


def expand(e: Embedding) -> list[Embedding]:
    """All vertex splits of a sphere triangulation, one per split (no dedup)."""
    if not is_triangulation(e) or genus(e) != 0:
        raise GenerationError("expand needs a sphere triangulation")
    return [Embedding(tuple(tuple(x) for x in new)) for new in _splits([list(r) for r in e.rotation])]


def _next_level(parents) -> dict[bytes, None]:
    seen: dict[bytes, None] = {}
    for parent in parents:
        for new in _splits([list(r) for r in parent.rotation]):
            seen[bytes(_min_code(new))] = None
    return seen


def generate(n: int, *, progress=None) -> GenerationLevel:
    """All sphere triangulations of order ``n`` up to flip-isomorphism."""
    if n < 4:
        raise GenerationError("sphere triangulations need at least 4 vertices")
    if n > 14:
        raise GenerationError("orders above 14 are not supported")
    codes = [bytes(_min_code(k4().rotation))]
    for order in range(5, n + 1):
        codes = sorted(_next_level(decode_code(c) for c in codes))
        if progress:
            progress(order, len(codes))
    return GenerationLevel(n, tuple(decode_code(c) for c in codes), tuple(codes))


def generate_counts(n: int) -> list[int]:
    counts = []
    generate(n, progress=lambda order, c: counts.append(c))
    return [1] + counts
