"""Readers and writers for embedding formats.

* surftri ascii: ``"4 bcd,adc,abd,acb"`` - order, then one comma-separated
  cyclic neighbour list per vertex with ``a`` as the first vertex.
* planar_code: optional ``>>planar_code<<`` header, then per graph the order
  byte and, per vertex, its 1-based neighbours in rotation order ending in 0.
* embedding text: ``"order genus"`` on the first line, then one line
  ``"v: n1 n2 ..."`` per vertex.  The genus is checked on read.
"""
from __future__ import annotations

from typing import Iterable, Iterator

from .embedding import Embedding, EmbeddingError, genus

PLANAR_CODE_HEADER = b">>planar_code<<"


class FormatError(ValueError):
    """Parse failure carrying a position (line/column or byte offset)."""

    def __init__(self, message: str, *, line: int | None = None, column: int | None = None,
                 offset: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        if offset is not None:
            where.append(f"byte {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.line, self.column, self.offset = line, column, offset


def _check_symmetric(rot: list[list[int]], err) -> None:
    for v, r in enumerate(rot):
        seen = set()
        for idx, u in enumerate(r):
            if u in seen:
                raise err(f"vertex {v} lists neighbour {u} twice", v, idx)
            seen.add(u)
            if u == v:
                raise err(f"vertex {v} lists itself", v, idx)
            if v not in rot[u]:
                raise err(f"asymmetric adjacency: {u} listed at {v} but not {v} at {u}", v, idx)


# -- surftri ----------------------------------------------------------------

def parse_surftri_line(text: str, line_no: int | None = None) -> Embedding:
    text = text.strip()
    head, sep, body = text.partition(" ")
    if not sep or not head.isdigit():
        raise FormatError("expected '<order> <lists>'", line=line_no, column=1)
    n = int(head)
    lists = body.strip().split(",")
    if len(lists) != n:
        raise FormatError(f"order {n} but {len(lists)} adjacency lists", line=line_no, column=len(head) + 2)
    starts = []
    col = len(head) + 2
    rot: list[list[int]] = []
    for s in lists:
        starts.append(col)
        r = []
        for ch in s:
            idx = ord(ch) - ord("a")
            if not 0 <= idx < n:
                raise FormatError(f"label {ch!r} outside a..{chr(ord('a') + n - 1)}", line=line_no,
                                  column=col + len(r))
            r.append(idx)
        rot.append(r)
        col += len(s) + 1

    def err(msg, v, idx):
        return FormatError(msg, line=line_no, column=starts[v] + idx)

    _check_symmetric(rot, err)
    return Embedding(tuple(tuple(r) for r in rot))


def write_surftri_line(e: Embedding) -> str:
    if e.order > 26:
        raise ValueError(f"surftri labels cover at most 26 vertices, got {e.order}")
    return f"{e.order} " + ",".join("".join(chr(ord("a") + u) for u in r) for r in e.rotation)


def read_surftri(lines: Iterable[str]) -> Iterator[Embedding]:
    for i, line in enumerate(lines, 1):
        if line.strip():
            yield parse_surftri_line(line, i)


# -- planar_code ------------------------------------------------------------

def parse_planar_code(data: bytes) -> list[Embedding]:
    return list(iter_planar_code(data))


def iter_planar_code(data: bytes) -> Iterator[Embedding]:
    pos = len(PLANAR_CODE_HEADER) if data.startswith(PLANAR_CODE_HEADER) else 0
    end = len(data)
    while pos < end:
        rec = pos
        n = data[pos]
        pos += 1
        if n == 0:
            raise FormatError("orders above 255 (two-byte entries) are not supported", offset=rec)
        rot: list[list[int]] = []
        offsets: list[list[int]] = []
        for v in range(n):
            r, offs = [], []
            while True:
                if pos >= end:
                    raise FormatError(f"truncated record for vertex {v + 1}", offset=pos)
                b = data[pos]
                if b == 0:
                    pos += 1
                    break
                if b > n:
                    raise FormatError(f"neighbour {b} exceeds order {n}", offset=pos)
                r.append(b - 1)
                offs.append(pos)
                pos += 1
            rot.append(r)
            offsets.append(offs)

        def err(msg, v, idx):
            return FormatError(msg, offset=offsets[v][idx])

        _check_symmetric(rot, err)
        yield Embedding(tuple(tuple(r) for r in rot))


def write_planar_code(embeddings: Iterable[Embedding], header: bool = True) -> bytes:
    out = bytearray(PLANAR_CODE_HEADER if header else b"")
    for e in embeddings:
        if e.order > 255:
            raise ValueError("one-byte planar_code holds at most 255 vertices")
        out.append(e.order)
        for r in e.rotation:
            out.extend(u + 1 for u in r)
            out.append(0)
    return bytes(out)


# -- own text format --------------------------------------------------------

def write_embedding_text(e: Embedding) -> str:
    lines = [f"{e.order} {genus(e)}"]
    lines += [f"{v}: " + " ".join(map(str, r)) if r else f"{v}:" for v, r in enumerate(e.rotation)]
    return "\n".join(lines) + "\n"


def parse_embedding_text(text: str, first_line: int = 1) -> Embedding:
    lines = [ln for ln in text.splitlines()]
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise FormatError("empty embedding record", line=first_line)
    head = lines[0].split()
    if len(head) != 2 or not all(x.isdigit() for x in head):
        raise FormatError("header must be '<order> <genus>'", line=first_line, column=1)
    n, stated = int(head[0]), int(head[1])
    if len(lines) - 1 != n:
        raise FormatError(f"order {n} but {len(lines) - 1} vertex lines", line=first_line)
    rot: list[list[int]] = []
    for v in range(n):
        ln = first_line + 1 + v
        label, sep, rest = lines[v + 1].partition(":")
        if not sep or label.strip() != str(v):
            raise FormatError(f"expected '{v}: ...'", line=ln, column=1)
        try:
            rot.append([int(x) for x in rest.split()])
        except ValueError:
            raise FormatError("non-integer neighbour", line=ln, column=len(label) + 2) from None
        for idx, u in enumerate(rot[-1]):
            if not 0 <= u < n:
                raise FormatError(f"neighbour {u} outside 0..{n - 1}", line=ln, column=len(label) + 2)

    def err(msg, v, idx):
        return FormatError(msg, line=first_line + 1 + v)

    _check_symmetric(rot, err)
    e = Embedding(tuple(tuple(r) for r in rot))
    try:
        actual = genus(e)
    except (EmbeddingError, ValueError) as exc:
        raise FormatError(f"cannot verify genus: {exc}", line=first_line) from None
    if actual != stated:
        raise FormatError(f"stated genus {stated} but rotation has genus {actual}", line=first_line, column=len(head[0]) + 2)
    return e
