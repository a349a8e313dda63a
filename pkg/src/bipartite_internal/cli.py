"""Command-line interface: load a bipartite edge list, then report
internal-link statistics, materialize projections, draw degree-preserving
random graphs, prune redundant links, or export distribution series.

Every run is seeded and every output file starts with '#' metadata
comment lines recording the tool version and the flags that shaped it,
so identical flags give byte-identical files.  The metadata never
includes file paths; projecting a pruned graph and projecting its
original therefore produce comparable files.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Iterable

from . import __version__
from .graph import (
    GraphError,
    BipartiteGraph,
    Side,
    load_graph,
    project,
    write_graph,
    write_projection,
)
from .internal import NoNonEdgesError, node_stats
from .nullmodel import SwapConfig, sample_batch
from .prune import POLICIES, prune_random, trajectory_to_string
from .stats import (
    EmptyPopulationError,
    ccdf_internal_fraction,
    compute_report,
    degree_vs_internal_degree,
    fmt,
    render_ccdf_tsv,
    render_degcorr_tsv,
    render_report_text,
    render_report_tsv,
)

DEFAULT_PAIR_BUDGET = 5_000_000
_FALLBACK_SAMPLE = 10_000


def _parse_pairs(text: str) -> tuple[str, int | None]:
    """--pairs value: 'exact', 'off', or 'estimate:N' with N >= 1."""
    if text in ("exact", "off"):
        return text, None
    if text == "estimate":
        return "estimate", _FALLBACK_SAMPLE
    if text.startswith("estimate:"):
        tail = text.split(":", 1)[1]
        try:
            n = int(tail)
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad sample size in {text!r}")
        if n < 1:
            raise argparse.ArgumentTypeError("estimate sample size must be >= 1")
        return "estimate", n
    raise argparse.ArgumentTypeError(
        f"expected 'exact', 'estimate:N', or 'off', got {text!r}"
    )


def _pairs_text(mode: str, sample: int | None) -> str:
    return f"estimate:{sample}" if mode == "estimate" else mode


def _pair_work(g: BipartiteGraph) -> int:
    """Wedge count (sum of squared degrees, both sides): the quantity that
    dominates exact pair enumeration time."""
    return sum(d * d for adj in (g.bottom_adj, g.top_adj) for d in map(len, adj))


def _header(command: str, items: Iterable[tuple[str, object]]) -> list[str]:
    lines = [f"tool: bipartite-internal {__version__}", f"command: {command}"]
    lines.extend(f"{k}: {v}" for k, v in items)
    return lines


def _comment_block(header: list[str]) -> str:
    return "".join(f"# {line}\n" for line in header)


def _out_path(prefix: str, suffix: str) -> Path:
    path = Path(f"{prefix}.{suffix}")
    if path.parent != Path("."):
        path.parent.mkdir(parents=True, exist_ok=True)
    return path


def _write(path: Path, content: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(content)
    print(f"wrote {path}")


def _swap_config(args: argparse.Namespace) -> SwapConfig:
    return SwapConfig(
        swaps_per_edge=args.swaps_per_edge,
        seed=args.seed,
        max_rejections_factor=args.max_rejections_factor,
    )


def _swap_meta(args: argparse.Namespace) -> list[tuple[str, object]]:
    return [
        ("seed", args.seed),
        ("swaps-per-edge", f"{args.swaps_per_edge:g}"),
        ("max-rejections-factor", args.max_rejections_factor),
    ]


def cmd_stats(args: argparse.Namespace) -> int:
    """Internal-link report (text + key/value TSV) for both sides."""
    g = load_graph(args.input)
    filter_on = args.filter == "on"
    requested = _pairs_text(*args.pairs)
    mode, sample = args.pairs
    if mode == "exact":
        work = _pair_work(g)
        if work > args.pair_budget:
            print(
                f"note: exact pair counting needs about {work} wedge checks, over the"
                f" budget of {args.pair_budget}; falling back to"
                f" estimate:{_FALLBACK_SAMPLE} (raise --pair-budget to force exact)",
                file=sys.stderr,
            )
            mode, sample = "estimate", _FALLBACK_SAMPLE
    report = compute_report(
        g,
        _swap_config(args),
        args.null_samples,
        filter=filter_on,
        pair_mode=mode,
        pair_sample_size=sample,
    )
    header = _header(
        "stats",
        [
            ("filter", args.filter),
            ("null-samples", args.null_samples),
            *_swap_meta(args),
            ("pairs-requested", requested),
            ("pairs", _pairs_text(mode, sample)),
            ("pair-budget", args.pair_budget),
        ],
    )
    block = _comment_block(header)
    _write(_out_path(args.out, "report.txt"), block + render_report_text(report))
    _write(_out_path(args.out, "report.tsv"), block + render_report_tsv(report))
    return 0


def cmd_project(args: argparse.Namespace) -> int:
    """Write one side's projection as a canonical edge list."""
    g = load_graph(args.input)
    side = Side.from_string(args.side)
    p = project(g, side)
    path = _out_path(args.out, "projection.tsv")
    with open(path, "w", encoding="utf-8", newline="") as f:
        write_projection(p, f, header=_header("project", [("side", side.value)]))
    print(f"wrote {path}")
    return 0


def cmd_nullmodel(args: argparse.Namespace) -> int:
    """Write degree-preserving randomized copies of the input graph."""
    g = load_graph(args.input)
    results = sample_batch(g, _swap_config(args), args.null_samples)
    for k, res in enumerate(results, start=1):
        header = _header(
            "nullmodel",
            [
                ("sample", f"{k} of {args.null_samples}"),
                *_swap_meta(args),
                ("swaps-attempted", res.attempted),
                ("swaps-accepted", res.accepted),
                ("saturated", "yes" if res.saturated else "no"),
            ],
        )
        path = _out_path(args.out, f"null{k}.tsv")
        with open(path, "w", encoding="utf-8", newline="") as f:
            write_graph(res.graph, f, header=header)
        print(f"wrote {path}")
    return 0


def cmd_prune(args: argparse.Namespace) -> int:
    """Repeatedly delete random internal links; write the pruned graph,
    the deletion trajectory, and a compression summary."""
    g = load_graph(args.input)
    side = Side.from_string(args.side)
    result = prune_random(g, side, seed=args.seed, eligibility=args.policy)
    meta = [("side", side.value), ("seed", args.seed), ("policy", args.policy)]
    block = _comment_block(_header("prune", meta))

    path = _out_path(args.out, "pruned.tsv")
    with open(path, "w", encoding="utf-8", newline="") as f:
        write_graph(result.pruned_graph, f, header=_header("prune", meta))
    print(f"wrote {path}")

    t = result.trajectory
    _write(_out_path(args.out, "trajectory.tsv"), block + trajectory_to_string(t))

    summary = [
        f"initial internal links ({side.value}): {t.initial_internal}",
        f"links removed: {len(t.removed_edges)}",
        f"edges: {result.original_edge_count} -> {result.pruned_edge_count}",
        f"edge ratio: {fmt(result.compression_ratio)}",
        f"bytes: {result.original_bytes} -> {result.pruned_bytes}",
        f"byte ratio: {fmt(result.byte_ratio)}",
    ]
    _write(
        _out_path(args.out, "summary.txt"),
        block + "".join(line + "\n" for line in summary),
    )
    return 0


def cmd_distribution(args: argparse.Namespace) -> int:
    """Write the per-node internal-fraction CCDF and the mean-degree vs.
    internal-degree series for a selected node population."""
    g = load_graph(args.input)
    side = Side.from_string(args.side)
    filter_on = args.filter == "on"
    stats = node_stats(g, side, apply_degree_filter=filter_on)
    pop_side = {"side": side, "opposite": side.opposite(), "both": None}[args.population]
    series = ccdf_internal_fraction(
        stats, side=pop_side, include_undefined_as_zero=args.undefined == "zero"
    )
    selected = [s for s in stats if pop_side is None or s.node.side is pop_side]
    corr = degree_vs_internal_degree(selected)
    meta = [
        ("side", side.value),
        ("filter", args.filter),
        ("population", args.population),
        ("undefined-fraction", args.undefined),
    ]
    ccdf_header = _header("distribution", meta + [("population-detail", series.population)])
    _write(_out_path(args.out, "ccdf.tsv"), _comment_block(ccdf_header) + render_ccdf_tsv(series))
    corr_header = _header("distribution", meta + [("nodes", len(selected))])
    _write(_out_path(args.out, "degcorr.tsv"), _comment_block(corr_header) + render_degcorr_tsv(corr))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bipartite-internal",
        description=(
            "Internal links and pairs in bipartite graphs: reports, projections,"
            " degree-preserving null models, pruning, and distribution series."
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"bipartite-internal {__version__}"
    )
    sub = parser.add_subparsers(dest="subcommand", required=True, metavar="command")

    def add_cmd(name: str, helptext: str, func) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=helptext, description=helptext)
        sp.add_argument(
            "--input",
            required=True,
            metavar="PATH",
            help="bipartite edge list, one 'bottom<TAB>top' pair per line",
        )
        sp.add_argument("--out", required=True, metavar="PREFIX", help="output path prefix")
        sp.set_defaults(func=func)
        return sp

    def add_side(sp: argparse.ArgumentParser) -> None:
        sp.add_argument(
            "--side",
            choices=("bottom", "top"),
            default="bottom",
            help="side whose links are tested for internality (default %(default)s)",
        )

    def add_seed(sp: argparse.ArgumentParser) -> None:
        sp.add_argument(
            "--seed", type=int, default=1, metavar="N",
            help="random seed (default %(default)s)",
        )

    def add_filter(sp: argparse.ArgumentParser) -> None:
        sp.add_argument(
            "--filter",
            choices=("on", "off"),
            default="on",
            help="only analyze links whose endpoints both have degree >= 2"
            " (default %(default)s)",
        )

    def add_swaps(sp: argparse.ArgumentParser) -> None:
        sp.add_argument(
            "--swaps-per-edge", type=float, default=10.0, metavar="Q",
            help="swap attempts per edge when randomizing (default %(default)s)",
        )
        sp.add_argument(
            "--max-rejections-factor", type=int, default=100, metavar="F",
            help="stop one randomization after F * |E| consecutive rejected swaps"
            " (default %(default)s)",
        )

    sp = add_cmd("stats", "internal-link report with null-model normalization", cmd_stats)
    add_seed(sp)
    add_filter(sp)
    add_swaps(sp)
    sp.add_argument(
        "--null-samples", type=int, default=5, metavar="N",
        help="number of randomized graphs to normalize against; 0 disables"
        " (default %(default)s)",
    )
    sp.add_argument(
        "--pairs", type=_parse_pairs, default=("exact", None), metavar="MODE",
        help="internal-pair counting: exact, estimate:N, or off (default exact)",
    )
    sp.add_argument(
        "--pair-budget", type=int, default=DEFAULT_PAIR_BUDGET, metavar="W",
        help="wedge-check budget above which exact pair counting falls back to"
        " the estimator (default %(default)s)",
    )

    sp = add_cmd("project", "materialize one side's projection", cmd_project)
    add_side(sp)

    sp = add_cmd("nullmodel", "write degree-preserving randomized graphs", cmd_nullmodel)
    add_seed(sp)
    add_swaps(sp)
    sp.add_argument(
        "--null-samples", type=int, default=5, metavar="N",
        help="number of randomized graphs to write (default %(default)s)",
    )

    sp = add_cmd("prune", "randomly delete internal links until none remain", cmd_prune)
    add_side(sp)
    add_seed(sp)
    sp.add_argument(
        "--policy",
        choices=POLICIES,
        default="all",
        help="which links are eligible: every internal link, or only those"
        " passing the degree filter (default %(default)s)",
    )

    sp = add_cmd(
        "distribution",
        "per-node internal-fraction CCDF and degree vs. internal degree",
        cmd_distribution,
    )
    add_side(sp)
    add_filter(sp)
    sp.add_argument(
        "--population",
        choices=("side", "opposite", "both"),
        default="side",
        help="which nodes enter the series (default %(default)s)",
    )
    sp.add_argument(
        "--undefined",
        choices=("skip", "zero"),
        default="skip",
        help="nodes with no analyzed links: skip them or count fraction 0"
        " (default %(default)s)",
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, NoNonEdgesError, EmptyPopulationError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
