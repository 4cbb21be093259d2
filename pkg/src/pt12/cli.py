"""Command line: ``python -m pt12 {gen,filter,search,resume,dedupe}``.

Exit status is 0 on success, 1 when a search task failed and 2 for usage,
configuration, input or checkpoint errors.
"""
from __future__ import annotations

import argparse
import logging
import sys
import time
from pathlib import Path

from .embedding import genus, is_triangulation
from .filters import FILTER_ORDER
from .formats import FormatError
from .graph import GraphError
from .search import (
    CheckpointError,
    ConfigError,
    SearchConfig,
    dedupe_witnesses,
    filter_catalog,
    load_catalog,
    resume_search,
    run_search,
    write_catalog,
)
from .triangulations import GenerationError, generate

log = logging.getLogger("pt12")


def _cmd_gen(args) -> int:
    t0 = time.perf_counter()
    level = generate(args.order)
    try:
        count = write_catalog(args.out, level.embeddings)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 2
    print(f"{count} triangulations of order {args.order} written to {args.out} "
          f"({time.perf_counter() - t0:.1f}s)")
    return 0


def _cmd_filter(args) -> int:
    catalog = load_catalog(args.input)
    for idx, e in enumerate(catalog):
        if e.order != 12 or not is_triangulation(e) or genus(e) != 0:
            print(f"error: record {idx} of {args.input} is not a sphere triangulation of order 12",
                  file=sys.stderr)
            return 2
    reports, survivors, counts = filter_catalog(catalog)
    write_catalog(args.out, survivors)
    summary = [f"input\t{len(catalog)}"] + [f"stage:{name}\t{counts[name]}" for name in FILTER_ORDER]
    summary.append(f"survivors\t{len(survivors)}")
    if args.report:
        Path(args.report).write_text(
            "".join(r.to_line() + "\n" for r in reports) + "".join(f"# {s}\n" for s in summary))
    print("\n".join(summary))
    return 0


def _print_report(rep) -> None:
    sys.stdout.write(rep.to_text())
    print(f"wall_time\t{rep.wall_time:.2f}s")


def _cmd_search(args) -> int:
    cfg = SearchConfig(
        input=args.input, witnesses=args.witnesses, checkpoint=args.checkpoint, report=args.report,
        order=args.order, remove_edges=args.remove_edges, genus=args.genus, filters=not args.no_filters,
        workers=args.workers, block_size=args.block_size,
    )
    rep = run_search(cfg, stop_after=args.stop_after)
    _print_report(rep)
    return 1 if rep.tasks_failed or rep.tripwires else 0


def _cmd_resume(args) -> int:
    rep = resume_search(args.checkpoint, workers=args.workers, stop_after=args.stop_after)
    _print_report(rep)
    return 1 if rep.tasks_failed or rep.tripwires else 0


def _cmd_dedupe(args) -> int:
    count = dedupe_witnesses(args.input, args.out)
    print(f"{count} unique witness classes written to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pt12", description="Sphere triangulations and torus embeddings of their complements.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate sphere triangulations (surftri ascii)")
    g.add_argument("--order", type=int, required=True)
    g.add_argument("--out", required=True)
    g.set_defaults(func=_cmd_gen)

    f = sub.add_parser("filter", help="apply the order-12 necessary conditions")
    f.add_argument("--in", dest="input", required=True)
    f.add_argument("--out", required=True)
    f.add_argument("--report")
    f.set_defaults(func=_cmd_filter)

    s = sub.add_parser("search", help="search complements for torus embeddings")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--order", type=int, default=12)
    s.add_argument("--remove-edges", type=int, default=0)
    s.add_argument("--genus", type=int, default=1)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--checkpoint", required=True)
    s.add_argument("--witnesses", required=True)
    s.add_argument("--report")
    s.add_argument("--block-size", type=int, default=64)
    s.add_argument("--no-filters", action="store_true")
    s.add_argument("--stop-after", type=int, help=argparse.SUPPRESS)
    s.set_defaults(func=_cmd_search)

    r = sub.add_parser("resume", help="continue an interrupted search")
    r.add_argument("--checkpoint", required=True)
    r.add_argument("--workers", type=int)
    r.add_argument("--stop-after", type=int, help=argparse.SUPPRESS)
    r.set_defaults(func=_cmd_resume)

    d = sub.add_parser("dedupe", help="one witness per flip-isomorphism class")
    d.add_argument("--in", dest="input", required=True)
    d.add_argument("--out", required=True)
    d.set_defaults(func=_cmd_dedupe)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except CheckpointError as exc:
        print(f"error: {exc}; refusing to resume. Start a fresh search instead.", file=sys.stderr)
        return 2
    except (ConfigError, FormatError, GraphError, GenerationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
