"""Command-line front end: ``pathmotif <command> --graph PATH ...``."""

from __future__ import annotations

import argparse
import logging
import sys
import time
from contextlib import contextmanager

from . import __version__
from .basic import BasicSampler
from .centered import CenteredSampler
from .errors import CountOverflowError, EdgeListParseError, PathMotifError
from .exact import BRUTE_FORCE_CAP, brute_force_counts, fast_exact_counts
from .graph import load_edge_list
from .motifs import MOTIF_NAMES, MOTIFS
from .report import estimate_rows, graph_stats, to_csv, to_json
from .sampling import RandomSource, new_seed

log = logging.getLogger("pathmotif")

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_OVERFLOW = 0, 1, 2, 3

DEFAULT_SAMPLES = 200_000
DEFAULT_DELTA = 0.01
DEFAULT_SWEEP = "2500,5000,10000,20000"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class Timer:
    def __init__(self):
        self.phases = {}

    @contextmanager
    def phase(self, name):
        t0 = time.perf_counter()
        try:
            yield
        finally:
            self.phases[name] = self.phases.get(name, 0.0) + time.perf_counter() - t0


def _positive_int(s):
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _delta(s):
    v = float(s)
    if not 0.0 < v < 1.0:
        raise argparse.ArgumentTypeError("must be in (0, 1)")
    return v


def _sweep(s):
    try:
        ks = [int(x) for x in s.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("comma-separated sample counts expected") from None
    if not ks or min(ks) < 1:
        raise argparse.ArgumentTypeError("sample counts must be >= 1")
    return ks


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", required=True, metavar="PATH",
                        help="SNAP-style edge list (.gz accepted)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true")

    sampling = argparse.ArgumentParser(add_help=False)
    sampling.add_argument("--samples", type=_positive_int, default=DEFAULT_SAMPLES, metavar="K",
                          help="samples per sampler (default %(default)s)")
    sampling.add_argument("--basic-samples", type=_positive_int, metavar="K",
                          help="override --samples for the 3-path sampler")
    sampling.add_argument("--centered-samples", type=_positive_int, metavar="K",
                          help="override --samples for the centered sampler")
    sampling.add_argument("--seed", type=int, help="random seed (default: fresh entropy, reported)")
    sampling.add_argument("--delta", type=_delta, default=DEFAULT_DELTA,
                          help="error-bar confidence parameter (default %(default)s)")
    sampling.add_argument("--workers", type=_positive_int, default=1)

    p = _Parser(prog="pathmotif", description=__doc__)
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("estimate", parents=[common, sampling],
                   help="estimate all six motif counts with error bars")
    sub.add_parser("exact", parents=[common], help="exact counts by ordered enumeration")
    b = sub.add_parser("brute", parents=[common], help="exact counts by 4-subset brute force")
    b.add_argument("--brute-cap", type=_positive_int, default=BRUTE_FORCE_CAP, metavar="N")
    sub.add_parser("compare", parents=[common, sampling],
                   help="basic vs centered accuracy on the cycle-based motifs")
    c = sub.add_parser("converge", parents=[common, sampling],
                       help="repeated runs over a sweep of sample counts")
    c.add_argument("--sweep", type=_sweep, default=_sweep(DEFAULT_SWEEP), metavar="K1,K2,...")
    c.add_argument("--runs", type=_positive_int, default=50)
    sub.add_parser("info", parents=[common], help="graph statistics")
    return p


def _load(args, timer):
    with timer.phase("load"):
        return load_edge_list(args.graph)


def _config(args) -> dict:
    k = args.samples
    return {
        "k_basic": args.basic_samples or k,
        "k_centered": args.centered_samples or k,
        "seed": args.seed,
        "delta": args.delta,
        "workers": args.workers,
    }


def _samplers(g, timer):
    with timer.phase("preprocess"):
        return BasicSampler(g), CenteredSampler(g)


def cmd_estimate(args) -> dict:
    timer = Timer()
    g = _load(args, timer)
    cfg = _config(args)
    basic, centered = _samplers(g, timer)
    rng = RandomSource(cfg["seed"])
    with timer.phase("sample"):
        eb = basic.estimate(cfg["k_basic"], rng.spawn(0), cfg["workers"])
        ec = centered.estimate(cfg["k_centered"], rng.spawn(1), cfg["workers"])
    rows = (estimate_rows(eb, cfg["delta"], (1, 2, 3))
            + estimate_rows(ec, cfg["delta"], (4, 5, 6)))
    for row in rows:
        row["k"] = eb.k if row["sampler"] == "basic" else ec.k
    return {
        "command": "estimate",
        "graph": args.graph,
        "config": cfg,
        "graph_stats": graph_stats(g, basic.W, centered.Lambda, basic.stars),
        "motifs": rows,
        "timings": timer.phases,
    }


def _exact_report(command, g, counts, timer, args) -> dict:
    return {
        "command": command,
        "graph": args.graph,
        "graph_stats": graph_stats(g),
        "triangles": counts.triangles,
        "motifs": [
            {"motif": i, "name": MOTIF_NAMES[i],
             "induced": counts.induced[i], "vanilla": counts.vanilla[i]}
            for i in MOTIFS
        ],
        "timings": timer.phases,
    }


def cmd_exact(args) -> dict:
    timer = Timer()
    g = _load(args, timer)
    with timer.phase("count"):
        counts = fast_exact_counts(g)
    return _exact_report("exact", g, counts, timer, args)


def cmd_brute(args) -> dict:
    timer = Timer()
    g = _load(args, timer)
    with timer.phase("count"):
        counts = brute_force_counts(g, cap=args.brute_cap)
    return _exact_report("brute", g, counts, timer, args)


def cmd_compare(args) -> dict:
    timer = Timer()
    g = _load(args, timer)
    cfg = _config(args)
    basic, centered = _samplers(g, timer)
    with timer.phase("exact"):
        exact = fast_exact_counts(g).induced
    rng = RandomSource(cfg["seed"])
    with timer.phase("sample"):
        eb = basic.estimate(cfg["k_basic"], rng.spawn(0), cfg["workers"])
        ec = centered.estimate(cfg["k_centered"], rng.spawn(1), cfg["workers"])
    rows = estimate_rows(eb, cfg["delta"], (4, 5, 6), exact)
    if centered.Lambda > 0:
        rows += estimate_rows(ec, cfg["delta"], (4, 5, 6), exact)
    for row in rows:
        row["k"] = eb.k if row["sampler"] == "basic" else ec.k
    return {
        "command": "compare",
        "graph": args.graph,
        "config": cfg,
        "graph_stats": graph_stats(g, basic.W, centered.Lambda, basic.stars),
        "centered_applicable": centered.Lambda > 0,
        "motifs": rows,
        "timings": timer.phases,
    }


def cmd_converge(args) -> dict:
    timer = Timer()
    g = _load(args, timer)
    cfg = _config(args)
    cfg["sweep"] = args.sweep
    cfg["runs"] = args.runs
    basic, centered = _samplers(g, timer)
    with timer.phase("exact"):
        exact = fast_exact_counts(g).induced
    rows = []
    with timer.phase("sample"):
        for k in args.sweep:
            for run in range(args.runs):
                # run i at every k uses seed base + i, reproducible via `estimate --seed`
                rng = RandomSource(cfg["seed"] + run)
                eb = basic.estimate(k, rng.spawn(0), cfg["workers"])
                ec = centered.estimate(k, rng.spawn(1), cfg["workers"])
                for row in (estimate_rows(eb, cfg["delta"], (1, 2, 3), exact)
                            + estimate_rows(ec, cfg["delta"], (4, 5, 6), exact)):
                    row["k"] = k
                    row["seed"] = rng.seed
                    rows.append(row)
    return {
        "command": "converge",
        "graph": args.graph,
        "config": cfg,
        "graph_stats": graph_stats(g, basic.W, centered.Lambda, basic.stars),
        "rows": rows,
        "timings": timer.phases,
    }


def cmd_info(args) -> dict:
    timer = Timer()
    g = _load(args, timer)
    basic, centered = _samplers(g, timer)
    return {
        "command": "info",
        "graph": args.graph,
        "graph_stats": graph_stats(g, basic.W, centered.Lambda, basic.stars),
        "timings": timer.phases,
    }


COMMANDS = {
    "estimate": cmd_estimate,
    "exact": cmd_exact,
    "brute": cmd_brute,
    "compare": cmd_compare,
    "converge": cmd_converge,
    "info": cmd_info,
}


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return to_json(report)
    graph = report["graph"]
    cmd = report["command"]
    if cmd in ("exact", "brute"):
        rows = [dict(r, graph=graph) for r in report["motifs"]]
        return to_csv(rows, ["graph", "motif", "induced", "vanilla"])
    if cmd == "info":
        rows = [{"key": k, "value": v} for k, v in report["graph_stats"].items()]
        return to_csv(rows, ["key", "value"])
    rows = report["rows"] if cmd == "converge" else report["motifs"]
    seed = report["config"]["seed"]
    return to_csv([{"graph": graph, "seed": seed, **r} for r in rows])


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    if getattr(args, "seed", "unset") is None:
        args.seed = new_seed()
    try:
        report = COMMANDS[args.command](args)
        text = render(report, args.format)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except CountOverflowError as exc:
        print(f"pathmotif: overflow: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except (OSError, EdgeListParseError) as exc:
        print(f"pathmotif: {exc}", file=sys.stderr)
        return EXIT_IO
    except PathMotifError as exc:
        print(f"pathmotif: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if "timings" in report:
        log.info("timings: %s", ", ".join(f"{k}={v:.3f}s" for k, v in report["timings"].items()))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
