"""Checkpointed search for torus embeddings of triangulation complements.

For each triangulation G of the input catalog the search embeds the
complement of G with ``k`` edges removed, over every ``k``-subset of the
complement's edges.  Work is split into tasks ``(graph, block of subsets)``.

Files written (all line-oriented text):

checkpoint
    ``# pt12-checkpoint v1``, ``config <json>``, ``hash <sha256>``, then one
    line per finished task, in task order::

        task <task_id> <graph_idx> <start> <stop> <status> <codes|->

    ``status`` is ``exhausted``, ``witness-found`` or ``failed``; ``codes``
    are the hex canonical codes of the witnesses, comma separated.
witnesses
    one record per witness, blank-line separated::

        witness task=<t> graph=<i> subset=<s> removed=<u-v;...> code=<hex>
        <embedding text>

report
    ``key<TAB>value`` lines; see :meth:`SearchReport.to_text`.

Output ordering depends only on task and subset indices, never on worker
count or completion order.
"""
from __future__ import annotations

import hashlib
import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations, islice
from math import comb
from pathlib import Path
from typing import Iterable, Sequence

from .embedding import Embedding, canonical_code, genus
from .filters import FILTER_ORDER, run_filters
from .formats import (
    PLANAR_CODE_HEADER,
    FormatError,
    parse_embedding_text,
    parse_planar_code,
    read_surftri,
    write_embedding_text,
    write_surftri_line,
)
from .genus_search import embed_in_genus
from .graph import Graph, complement
from .triangulations import generate

log = logging.getLogger(__name__)

CHECKPOINT_MAGIC = "# pt12-checkpoint v1"
STATUSES = ("exhausted", "witness-found", "failed")


class CheckpointError(RuntimeError):
    pass


class ConfigError(ValueError):
    pass


# -- catalogs ---------------------------------------------------------------

def load_catalog(source: str | os.PathLike) -> list[Embedding]:
    """Embeddings from ``gen:N``, a surftri file or a planar_code file,
    sorted by canonical code."""
    src = str(source)
    if src.startswith("gen:"):
        return list(generate(int(src[4:])).embeddings)
    data = Path(src).read_bytes()
    if data.startswith(PLANAR_CODE_HEADER) or (data and data[0] < 32 and data[0] not in b"\n\r\t"):
        embs = parse_planar_code(data)
    else:
        embs = list(read_surftri(data.decode("ascii").splitlines()))
    return sorted(embs, key=canonical_code)


def write_catalog(path: str | os.PathLike, embeddings: Iterable[Embedding]) -> int:
    lines = [write_surftri_line(e) for e in embeddings]
    Path(path).write_text("".join(line + "\n" for line in lines))
    return len(lines)


def catalog_digest(embeddings: Sequence[Embedding]) -> str:
    h = hashlib.sha256()
    for e in embeddings:
        h.update(canonical_code(e))
        h.update(b"\n")
    return h.hexdigest()


# -- config / report --------------------------------------------------------

@dataclass
class SearchConfig:
    input: str
    witnesses: str
    checkpoint: str
    report: str | None = None
    order: int = 12
    remove_edges: int = 0
    genus: int = 1
    filters: bool = True
    workers: int = 1
    block_size: int = 64

    def __post_init__(self) -> None:
        if self.remove_edges < 0:
            raise ConfigError("remove_edges must be nonnegative")
        if self.genus < 0:
            raise ConfigError("genus must be nonnegative")
        if self.workers < 1:
            raise ConfigError("workers must be at least 1")
        if self.block_size < 1:
            raise ConfigError("block_size must be at least 1")
        if self.remove_edges >= 1:
            # the filters assume the complement is a full torus triangulation
            self.filters = False

    def semantic(self) -> dict:
        d = asdict(self)
        del d["workers"], d["checkpoint"]
        return d


@dataclass
class SearchReport:
    input_count: int = 0
    stages: list[tuple[str, int]] = field(default_factory=list)
    tasks: int = 0
    tasks_completed: int = 0
    tasks_failed: int = 0
    witnesses: int = 0
    unique_classes: int = 0
    tripwires: int = 0
    wall_time: float = 0.0

    def to_text(self) -> str:
        """Deterministic report body (wall time is left out on purpose)."""
        rows = [("input", self.input_count)]
        rows += [(f"stage:{name}", count) for name, count in self.stages]
        rows += [
            ("tasks", self.tasks),
            ("tasks_completed", self.tasks_completed),
            ("tasks_failed", self.tasks_failed),
            ("witnesses", self.witnesses),
            ("unique_classes", self.unique_classes),
            ("tripwires", self.tripwires),
        ]
        return "".join(f"{k}\t{v}\n" for k, v in rows)


# -- tasks ------------------------------------------------------------------

@dataclass(frozen=True)
class Task:
    task_id: int
    graph_idx: int
    start: int
    stop: int


@dataclass
class TaskResult:
    task: Task
    status: str
    witnesses: list[tuple[int, tuple[tuple[int, int], ...], Embedding]] = field(default_factory=list)
    error: str | None = None


def _run_task(args) -> TaskResult:
    task, adj, order, k, target = args
    try:
        g = Graph(order, adj)
        found = []
        subsets = islice(combinations(g.edges, k), task.start, task.stop)
        for idx, removed in enumerate(subsets, task.start):
            h = g.remove_edges(removed)
            if not h.is_connected():
                log.info("graph %d subset %d disconnects; skipped", task.graph_idx, idx)
                continue
            out = embed_in_genus(h, target)
            if out.witness is not None:
                found.append((idx, removed, out.witness))
        return TaskResult(task, "witness-found" if found else "exhausted", found)
    except Exception as exc:  # a failing task must not stop the others
        return TaskResult(task, "failed", error=f"{type(exc).__name__}: {exc}")


def _plan(graphs: Sequence[tuple[int, Graph]], k: int, block: int) -> list[Task]:
    tasks = []
    for idx, g in graphs:
        total = comb(g.size, k)
        for start in range(0, max(total, 1), block):
            tasks.append(Task(len(tasks), idx, start, min(start + block, total)))
    return tasks


# -- checkpoint / witness files ---------------------------------------------

def _config_hash(cfg: dict, digest: str) -> str:
    blob = json.dumps({"config": cfg, "catalog": digest}, sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


def _write_checkpoint_header(path: Path, cfg: SearchConfig, digest: str) -> None:
    sem = cfg.semantic()
    path.write_text(
        f"{CHECKPOINT_MAGIC}\n"
        f"config {json.dumps(sem, sort_keys=True)}\n"
        f"catalog {digest}\n"
        f"hash {_config_hash(sem, digest)}\n"
    )


def read_checkpoint(path: str | os.PathLike) -> tuple[dict, str, dict[int, tuple[str, list[str]]]]:
    """Parse a checkpoint; returns (config dict, catalog digest, task records)."""
    p = Path(path)
    try:
        lines = p.read_text().splitlines()
    except OSError as exc:
        raise CheckpointError(f"cannot read checkpoint {p}: {exc}") from None
    if len(lines) < 4 or lines[0] != CHECKPOINT_MAGIC:
        raise CheckpointError(f"{p}: missing checkpoint header")
    try:
        if not lines[1].startswith("config "):
            raise ValueError
        cfg = json.loads(lines[1][7:])
        digest = lines[2].split(" ", 1)[1]
        stated = lines[3].split(" ", 1)[1]
    except (ValueError, IndexError):
        raise CheckpointError(f"{p}: malformed checkpoint header") from None
    if not lines[2].startswith("catalog ") or not lines[3].startswith("hash ") or _config_hash(cfg, digest) != stated:
        raise CheckpointError(f"{p}: config hash mismatch (file edited or corrupt)")
    records: dict[int, tuple[str, list[str]]] = {}
    for no, line in enumerate(lines[4:], 5):
        parts = line.split()
        if len(parts) != 7 or parts[0] != "task" or parts[5] not in STATUSES:
            raise CheckpointError(f"{p}:{no}: malformed task record")
        try:
            tid = int(parts[1])
        except ValueError:
            raise CheckpointError(f"{p}:{no}: malformed task id") from None
        codes = [] if parts[6] == "-" else parts[6].split(",")
        records[tid] = (parts[5], codes)
    return cfg, digest, records


def _format_removed(removed) -> str:
    return ";".join(f"{u}-{v}" for u, v in removed) or "-"


def _witness_record(task: Task, idx: int, removed, emb: Embedding) -> str:
    head = (f"witness task={task.task_id} graph={task.graph_idx} subset={idx} "
            f"removed={_format_removed(removed)} code={canonical_code(emb).hex()}")
    return head + "\n" + write_embedding_text(emb)


@dataclass
class WitnessRecord:
    fields: dict[str, str]
    embedding: Embedding

    @property
    def task_id(self) -> int:
        return int(self.fields["task"])

    @property
    def removed(self) -> tuple[tuple[int, int], ...]:
        r = self.fields.get("removed", "-")
        if r == "-":
            return ()
        return tuple(tuple(int(x) for x in p.split("-")) for p in r.split(";"))


def read_witnesses(path: str | os.PathLike) -> list[WitnessRecord]:
    text = Path(path).read_text() if Path(path).exists() else ""
    out = []
    blocks: list[tuple[int, list[str]]] = []
    cur: list[str] = []
    start = 1
    for no, line in enumerate(text.splitlines(), 1):
        if line.strip():
            if not cur:
                start = no
            cur.append(line)
        elif cur:
            blocks.append((start, cur))
            cur = []
    if cur:
        blocks.append((start, cur))
    for rec_idx, (start, block) in enumerate(blocks):
        head = block[0].split()
        if not head or head[0] != "witness":
            raise FormatError(f"record {rec_idx}: expected 'witness' header", line=start)
        fields = dict(item.split("=", 1) for item in head[1:] if "=" in item)
        try:
            emb = parse_embedding_text("\n".join(block[1:]), first_line=start + 1)
        except FormatError as exc:
            raise FormatError(f"record {rec_idx}: {exc}", line=start) from None
        out.append(WitnessRecord(fields, emb))
    return out


# -- driver -----------------------------------------------------------------

def _select(catalog: Sequence[Embedding], cfg: SearchConfig, report: SearchReport):
    graphs = []
    counts = {name: 0 for name in FILTER_ORDER}
    for idx, e in enumerate(catalog):
        g = e.graph
        if cfg.filters:
            rep = run_filters(g, idx)
            for name in FILTER_ORDER:
                if rep.outcomes.get(name):
                    counts[name] += 1
            if not rep.survivor:
                continue
        graphs.append((idx, complement(g)))
    if cfg.filters:
        report.stages = [(name, counts[name]) for name in FILTER_ORDER]
    return graphs


def run_search(cfg: SearchConfig, *, resume: bool = False, stop_after: int | None = None) -> SearchReport:
    """Run (or resume) a search; ``stop_after`` simulates an interruption
    after that many newly finished tasks."""
    t0 = time.perf_counter()
    catalog = load_catalog(cfg.input)
    bad = next((i for i, e in enumerate(catalog) if e.order != cfg.order), None)
    if bad is not None:
        raise ConfigError(f"catalog record {bad} has order {catalog[bad].order}, expected {cfg.order}")
    if cfg.filters and cfg.order != 12:
        raise ConfigError("the filters are only defined for order 12; pass --no-filters")
    digest = catalog_digest(catalog)
    ckpt = Path(cfg.checkpoint)
    wpath = Path(cfg.witnesses)
    done: dict[int, tuple[str, list[str]]] = {}
    if resume:
        stored, stored_digest, done = read_checkpoint(ckpt)
        if stored != cfg.semantic() or stored_digest != digest:
            raise CheckpointError("checkpoint was written for a different configuration or input")
        done = {t: r for t, r in done.items() if r[0] != "failed"}
    else:
        _write_checkpoint_header(ckpt, cfg, digest)

    report = SearchReport(input_count=len(catalog))
    graphs = _select(catalog, cfg, report)
    tasks = _plan(graphs, cfg.remove_edges, cfg.block_size)
    report.tasks = len(tasks)
    by_idx = dict(graphs)

    # keep only witness records of tasks the checkpoint says are finished
    kept = [r for r in read_witnesses(wpath) if r.task_id in done] if resume else []
    records: dict[int, list[str]] = {}
    for r in kept:
        records.setdefault(r.task_id, []).append(
            _witness_record(tasks[r.task_id], int(r.fields["subset"]), r.removed, r.embedding))
    _rewrite_witnesses(wpath, records)

    todo = [t for t in tasks if t.task_id not in done]
    if stop_after is not None:
        todo = todo[:stop_after]
    args = [(t, by_idx[t.graph_idx].adj, by_idx[t.graph_idx].order, cfg.remove_edges, cfg.genus) for t in todo]
    statuses = {t: r[0] for t, r in done.items()}
    failed = 0
    pending: dict[int, TaskResult] = {}
    order_ids = [t.task_id for t in todo]
    next_pos = 0

    def flush(result: TaskResult) -> None:
        nonlocal failed
        t = result.task
        lines = [_witness_record(t, i, rem, emb) for i, rem, emb in result.witnesses]
        if lines:
            with wpath.open("a") as fh:
                fh.write("".join(rec + "\n" for rec in lines))
            records[t.task_id] = lines
        codes = ",".join(canonical_code(emb).hex() for _, _, emb in result.witnesses) or "-"
        with ckpt.open("a") as fh:
            fh.write(f"task {t.task_id} {t.graph_idx} {t.start} {t.stop} {result.status} {codes}\n")
        statuses[t.task_id] = result.status
        if result.status == "failed":
            failed += 1
            log.error("task %d (graph %d) failed: %s", t.task_id, t.graph_idx, result.error)

    def consume(result: TaskResult) -> None:
        nonlocal next_pos
        pending[result.task.task_id] = result
        while next_pos < len(order_ids) and order_ids[next_pos] in pending:
            flush(pending.pop(order_ids[next_pos]))
            next_pos += 1

    if cfg.workers == 1:
        for a in args:
            consume(_run_task(a))
    else:
        with ProcessPoolExecutor(cfg.workers) as pool:
            for res in pool.map(_run_task, args, chunksize=1):
                consume(res)

    _rewrite_witnesses(wpath, records)
    report.tasks_completed = sum(1 for s in statuses.values() if s != "failed")
    report.tasks_failed = failed
    all_records = read_witnesses(wpath)
    report.witnesses = len(all_records)
    report.unique_classes = len({r.fields["code"] for r in all_records})
    if cfg.remove_edges == 0 and cfg.order == 12:
        # filters are necessary conditions: a k=0 witness from a rejected graph is a bug
        for r in all_records:
            g = catalog[int(r.fields["graph"])].graph
            if not run_filters(g).survivor:
                report.tripwires += 1
                log.error("tripwire: witness for graph %s which a filter rejects", r.fields["graph"])
    report.wall_time = time.perf_counter() - t0
    if cfg.report:
        Path(cfg.report).write_text(report.to_text())
    return report


def _rewrite_witnesses(path: Path, records: dict[int, list[str]]) -> None:
    path.write_text("".join(rec + "\n" for tid in sorted(records) for rec in records[tid]))


def resume_search(checkpoint: str | os.PathLike, workers: int | None = None,
                  stop_after: int | None = None) -> SearchReport:
    cfg_dict, _, _ = read_checkpoint(checkpoint)
    try:
        cfg = SearchConfig(**cfg_dict, checkpoint=str(checkpoint), workers=workers or 1)
    except TypeError as exc:
        raise CheckpointError(f"checkpoint config unreadable: {exc}") from None
    return run_search(cfg, resume=True, stop_after=stop_after)


def dedupe_witnesses(src: str | os.PathLike, dst: str | os.PathLike) -> int:
    """Keep one witness per flip-isomorphism class, sorted by canonical code."""
    best: dict[bytes, WitnessRecord] = {}
    for rec in read_witnesses(src):
        code = canonical_code(rec.embedding)
        best.setdefault(code, rec)
    out = []
    for code in sorted(best):
        rec = best[code]
        fields = [f"{k}={v}" for k, v in rec.fields.items() if k != "code"] + [f"code={code.hex()}"]
        out.append("witness " + " ".join(fields) + "\n" + write_embedding_text(rec.embedding))
    Path(dst).write_text("".join(rec + "\n" for rec in out))
    return len(out)


def filter_catalog(catalog: Sequence[Embedding]):
    """Run all filters; returns (reports, survivors, stage counts)."""
    reports, survivors = [], []
    counts = {name: 0 for name in FILTER_ORDER}
    for idx, e in enumerate(catalog):
        rep = run_filters(e.graph, idx)
        for name in FILTER_ORDER:
            if rep.outcomes.get(name):
                counts[name] += 1
        reports.append(rep)
        if rep.survivor:
            survivors.append(e)
    return reports, survivors, counts
