"""Command line interface: ``sociogrow {grow,stats,compare,sweep}``.

Exit codes: 0 success, 1 usage error, 2 data error, 3 dynamics failed to
converge somewhere and ``--strict`` was given.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import replace
from pathlib import Path

import numpy as np

from . import experiments as ex
from .formats import (
    FormatError,
    build_config,
    builtin_zachary,
    parse_config,
    read_edgelist,
    write_config,
    write_csv,
    write_edgelist,
    write_stats,
)
from .growth import GrowthConfig
from .metrics import network_stats

log = logging.getLogger("sociogrow")

EXIT_USAGE, EXIT_DATA, EXIT_UNCONVERGED = 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _value_list(text: str) -> list[float]:
    """``a,b,c`` or ``start:stop:count`` (inclusive, evenly spaced)."""
    try:
        if ":" in text:
            start, stop, count = text.split(":")
            return [float(v) for v in np.linspace(float(start), float(stop), int(count))]
        return [float(v) for v in text.split(",") if v]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad value list {text!r}") from None


def _target_stats(text: str) -> ex.Target:
    try:
        kv = dict(item.split("=", 1) for item in text.split(","))
        return ex.Target(
            node_count=int(kv["n"]),
            clustering=float(kv["C"]),
            avg_path_length=float(kv["l"]),
            diameter=float(kv["d"]) if "d" in kv else None,
        )
    except (KeyError, ValueError):
        raise argparse.ArgumentTypeError("expected n=N,C=X,l=Y[,d=Z]") from None


def _add_model_flags(p: argparse.ArgumentParser, sweep: bool = False) -> None:
    p.add_argument("--config", type=Path, help="key=value config file")
    p.add_argument("--out", default="sociogrow", help="output file prefix")
    p.add_argument("--replicates", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--strict", action="store_true", help="exit 3 on non-converged dynamics")
    if not sweep:
        p.add_argument("--beta", type=float)
        p.add_argument("--m", type=float)
        p.add_argument("--alpha", type=float)
    p.add_argument("--n0", type=int)
    p.add_argument("--target-n", type=int)
    p.add_argument("--stride", type=int, help="recompute knowledge every N arrivals")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sociogrow", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("grow", help="grow replicate networks")
    _add_model_flags(p)

    p = sub.add_parser("stats", help="C, l, d and degree summary of a network")
    p.add_argument("path", nargs="?", type=Path)
    p.add_argument("--builtin", choices=["zachary"])

    p = sub.add_parser("compare", help="grow networks the size of a real one and compare")
    p.add_argument("real", type=Path)
    _add_model_flags(p)

    p = sub.add_parser("sweep", help="grid search beta, m, alpha against a target")
    p.add_argument("real", nargs="?", type=Path, help="target edge list")
    p.add_argument("--target-stats", type=_target_stats,
                   help="target summary instead of an edge list, e.g. n=1490,C=0.24,l=3.39,d=9")
    p.add_argument("--beta", type=_value_list, required=True)
    p.add_argument("--m", type=_value_list, required=True)
    p.add_argument("--alpha", type=_value_list, required=True)
    _add_model_flags(p, sweep=True)
    return parser


def load_config(args) -> GrowthConfig:
    cfg = GrowthConfig()
    if args.config is not None:
        cfg = parse_config(args.config.read_text())
    growth, dyn = {}, {}
    for flag, key in [("replicates", "replicates"), ("seed", "seed"), ("n0", "n0"),
                      ("target_n", "target_n"), ("stride", "recompute_stride")]:
        if getattr(args, flag, None) is not None:
            growth[key] = getattr(args, flag)
    # sweep passes lists for these; they are applied per grid point
    if isinstance(getattr(args, "beta", None), float):
        growth["beta"] = args.beta
    for flag, key in [("m", "memory"), ("alpha", "alpha")]:
        if isinstance(getattr(args, flag, None), float):
            dyn[key] = getattr(args, flag)
    return build_config(growth, dyn, cfg)


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8", newline="\n")


def _summary_block(summary: ex.Summary, cfg: GrowthConfig) -> dict:
    out = {"replicates": len(summary.replicates), "seed": cfg.seed}
    names = {"node_count": "nodes", "edge_count": "edges", "mean_degree": "mean_degree",
             "clustering": "C", "avg_path_length": "l", "diameter": "d"}
    for f, name in names.items():
        out[name] = summary.mean[f]
        out[f"{name}_std"] = summary.std[f]
    out["unconverged_refreshes"] = summary.unconverged
    return out


def _degree_rows(summary: ex.Summary):
    return [(k, f, summary.distribution.counts[k]) for k, f in summary.distribution.points]


def cmd_grow(args) -> int:
    cfg = load_config(args)
    summary = ex.summarize(ex.run_replicates(cfg))
    prefix = args.out
    for rep in summary.replicates:
        _write(f"{prefix}_seed{rep.seed}.edges", write_edgelist(rep.graph))
    _write(f"{prefix}_degree.csv", write_csv(["k", "cumulative_frequency", "mean_count"], _degree_rows(summary)))
    _write(f"{prefix}_density.csv", write_csv(["t", "nodes", "mean_degree"], summary.density))
    _write(f"{prefix}_stats.txt", write_stats(_summary_block(summary, cfg)))
    _write(f"{prefix}_config.txt", write_config(cfg))
    sys.stdout.write(write_stats(_summary_block(summary, cfg)))
    return _convergence_exit(summary.unconverged, args.strict)


def _convergence_exit(unconverged: int, strict: bool) -> int:
    if unconverged:
        log.warning("%d knowledge refreshes hit max_iterations", unconverged)
        if strict:
            return EXIT_UNCONVERGED
    return 0


def cmd_stats(args) -> int:
    if args.builtin == "zachary":
        el = builtin_zachary()
    elif args.path is not None:
        el = read_edgelist(args.path)
    else:
        raise UsageError("give an edge list path or --builtin zachary")
    stats = network_stats(el.graph)
    block = stats.as_dict()
    block["self_loops_dropped"] = el.self_loops
    block["duplicates_dropped"] = el.duplicates
    sys.stdout.write(write_stats(block))
    return 0


def cmd_compare(args) -> int:
    real = read_edgelist(args.real).graph
    target = ex.Target.from_graph(real)
    cfg = replace(load_config(args), target_n=real.node_count)
    summary = ex.summarize(ex.run_replicates(cfg))
    total, ks = ex.score(summary, target)
    sim = summary.distribution
    support = sorted(set(sim.support) | set(target.distribution.support))
    rows = [(k, target.distribution.survival(k), sim.survival(k)) for k in support]
    _write(f"{args.out}_compare_degree.csv", write_csv(["k", "real", "simulated"], rows))
    rs = network_stats(real)
    deltas = [
        ("nodes", rs.node_count, summary.mean["node_count"]),
        ("edges", rs.edge_count, summary.mean["edge_count"]),
        ("mean_degree", rs.mean_degree, summary.mean["mean_degree"]),
        ("C", rs.clustering, summary.mean["clustering"]),
        ("l", rs.avg_path_length, summary.mean["avg_path_length"]),
        ("d", rs.diameter, summary.mean["diameter"]),
    ]
    table = write_csv(["stat", "real", "simulated", "delta"],
                      [(name, float(r), float(s), float(s - r)) for name, r, s in deltas])
    _write(f"{args.out}_compare_stats.csv", table)
    report = f"ks_distance={ks:.6g}\nscore={total:.6g}\nreplicates={cfg.replicates}\n" + table
    _write(f"{args.out}_compare.txt", report)
    sys.stdout.write(report)
    return _convergence_exit(summary.unconverged, args.strict)


def cmd_sweep(args) -> int:
    if args.target_stats is not None:
        target = args.target_stats
    elif args.real is not None:
        target = ex.Target.from_graph(read_edgelist(args.real).graph)
    else:
        raise UsageError("sweep needs a target edge list or --target-stats")
    base = load_config(args)
    points = ex.sweep(base, target, args.beta, args.m, args.alpha)
    rows = []
    for rank, p in enumerate(points, start=1):
        mean = p.summary.mean
        rows.append((rank, p.beta, p.memory, p.alpha, mean["clustering"], mean["avg_path_length"],
                     mean["diameter"], mean["mean_degree"], "" if p.ks is None else p.ks, p.score))
    text = write_csv(["rank", "beta", "m", "alpha", "C", "l", "d", "mean_degree", "ks", "score"], rows)
    _write(f"{args.out}_sweep.csv", text)
    sys.stdout.write(text)
    return _convergence_exit(sum(p.summary.unconverged for p in points), args.strict)


COMMANDS = {"grow": cmd_grow, "stats": cmd_stats, "compare": cmd_compare, "sweep": cmd_sweep}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"sociogrow: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FormatError, OSError) as exc:
        print(f"sociogrow: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
