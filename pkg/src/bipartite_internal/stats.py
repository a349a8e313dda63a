"""Aggregate measurements: internal-link fractions, null-model ratios,
per-node internal-fraction CCDF, and degree vs. internal-degree curves.

The report normalizes real-graph quantities to their means over
degree-preserving random samples; starred quantities in the rendered
output refer to those null-model values.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import BipartiteGraph, Side
from .internal import (
    InternalPairCount,
    NodeStats,
    count_analyzed_links,
    count_internal_pairs_exact,
    enumerate_internal_links,
    estimate_internal_pairs,
)
from .nullmodel import SwapConfig, sample_batch

PAIR_MODES = ("exact", "estimate", "off")

# Estimator seeds are derived from the swap seed so a report is fully
# reproducible from its embedded config: real graph uses seed + _PAIR_SEED_REAL,
# null sample k uses seed + _PAIR_SEED_STRIDE * (k + 1).
_PAIR_SEED_REAL = 499_979
_PAIR_SEED_STRIDE = 1_000_003


class EmptyPopulationError(Exception):
    """No nodes left after population selection."""


@dataclass
class SideReport:
    """One side's internal-link and pair measurements."""

    side: Side
    analyzed_links: int
    internal_links: int
    f_ei: float
    pairs: InternalPairCount | None
    null_internal_links: list[int]
    null_pairs: list[float]
    e_i_ratio: float | None
    p_i_ratio: float | None


@dataclass
class InternalReport:
    """Whole-graph report: real quantities plus null-model normalizations."""

    bottom_count: int
    top_count: int
    edge_count: int
    duplicate_count: int
    bottom_isolated: int
    top_isolated: int
    filter_applied: bool
    pair_mode: str
    pair_sample_size: int | None
    include_isolated_pairs: bool
    null_samples: int
    swap_config: SwapConfig
    null_skipped_reason: str | None
    saturated_samples: int
    bottom: SideReport
    top: SideReport


def _ratio(real: float, null_values: list[float]) -> float | None:
    """real / mean(null); 1 when both sides are exactly zero, absent when
    only the null mean is zero."""
    if not null_values:
        return None
    mean = sum(null_values) / len(null_values)
    if mean > 0:
        return real / mean
    return 1.0 if real == 0 else None


def _pairs_for(
    g: BipartiteGraph,
    side: Side,
    mode: str,
    filter_on: bool,
    include_isolated: bool,
    sample_size: int | None,
    seed: int,
) -> InternalPairCount | None:
    if mode == "off":
        return None
    if mode == "exact":
        return count_internal_pairs_exact(g, side, filter_on, include_isolated)
    return estimate_internal_pairs(
        g, side, sample_size or 10_000, seed, filter_on, include_isolated
    )


def compute_report(
    g: BipartiteGraph,
    cfg: SwapConfig,
    null_samples: int,
    filter: bool = True,
    pair_mode: str = "exact",
    pair_sample_size: int | None = None,
    include_isolated_pairs: bool = False,
) -> InternalReport:
    """Internal-link/pair counts on ``g`` for both sides, normalized to
    degree-preserving random samples.

    Null quantities are computed with the same filter and pair settings as
    the real graph.  When the graph has fewer than 2 edges no swap is
    possible, so null sampling is skipped and the ratios stay absent.
    """
    if pair_mode not in PAIR_MODES:
        raise ValueError(f"unknown pair mode {pair_mode!r}; expected one of {PAIR_MODES}")
    if null_samples < 0:
        raise ValueError("null_samples must be >= 0")

    def measure(graph: BipartiteGraph, pair_seed: int) -> dict[Side, tuple[int, int, InternalPairCount | None]]:
        analyzed = count_analyzed_links(graph, filter)
        out = {}
        for side in (Side.BOTTOM, Side.TOP):
            e_i = len(enumerate_internal_links(graph, side, filter))
            pairs = _pairs_for(
                graph, side, pair_mode, filter, include_isolated_pairs,
                pair_sample_size, pair_seed,
            )
            out[side] = (analyzed, e_i, pairs)
        return out

    real = measure(g, cfg.seed + _PAIR_SEED_REAL)

    null_skipped = None
    samples = []
    if null_samples >= 1:
        if g.edge_count < 2:
            null_skipped = "graph has fewer than 2 edges; no swap possible"
        else:
            samples = sample_batch(g, cfg, null_samples)
    null_measures = [
        measure(res.graph, cfg.seed + _PAIR_SEED_STRIDE * (k + 1))
        for k, res in enumerate(samples)
    ]

    def side_report(side: Side) -> SideReport:
        analyzed, e_i, pairs = real[side]
        f_ei = e_i / analyzed if analyzed > 0 else 0.0
        null_ei = [m[side][1] for m in null_measures]
        null_pairs = [
            m[side][2].point_value for m in null_measures if m[side][2] is not None
        ]
        return SideReport(
            side=side,
            analyzed_links=analyzed,
            internal_links=e_i,
            f_ei=f_ei,
            pairs=pairs,
            null_internal_links=null_ei,
            null_pairs=null_pairs,
            e_i_ratio=_ratio(e_i, null_ei),
            p_i_ratio=_ratio(pairs.point_value, null_pairs) if pairs is not None else None,
        )

    return InternalReport(
        bottom_count=g.bottom_count,
        top_count=g.top_count,
        edge_count=g.edge_count,
        duplicate_count=g.duplicate_count,
        bottom_isolated=sum(1 for x in g.bottom_adj if not x),
        top_isolated=sum(1 for x in g.top_adj if not x),
        filter_applied=filter,
        pair_mode=pair_mode,
        pair_sample_size=pair_sample_size,
        include_isolated_pairs=include_isolated_pairs,
        null_samples=len(samples),
        swap_config=cfg,
        null_skipped_reason=null_skipped,
        saturated_samples=sum(1 for r in samples if r.saturated),
        bottom=side_report(Side.BOTTOM),
        top=side_report(Side.TOP),
    )


@dataclass
class CcdfSeries:
    """Complementary cumulative distribution of per-node internal fractions.

    points are (x, fraction of population with internal_fraction >= x),
    x ascending; the population string records every selection choice.
    """

    points: list[tuple[float, float]]
    population: str


def ccdf_internal_fraction(
    stats: list[NodeStats],
    side: Side | None = None,
    include_undefined_as_zero: bool = False,
) -> CcdfSeries:
    """CCDF of internal fractions over a selected node population.

    ``side`` restricts to nodes of that side (None keeps all entries).
    Nodes with no analyzed links have undefined fractions and are skipped
    unless ``include_undefined_as_zero`` counts them at fraction 0.
    Evaluation points are every observed fraction plus 0 and 1.
    """
    values: list[float] = []
    for s in stats:
        if side is not None and s.node.side is not side:
            continue
        if s.internal_fraction is not None:
            values.append(s.internal_fraction)
        elif include_undefined_as_zero:
            values.append(0.0)
    n = len(values)
    if n == 0:
        raise EmptyPopulationError("no nodes in the selected CCDF population")
    values.sort()
    from bisect import bisect_left

    xs = sorted(set(values) | {0.0, 1.0})
    points = [(x, (n - bisect_left(values, x)) / n) for x in xs]
    population = (
        f"side={side.value if side is not None else 'any'}, "
        f"undefined-fraction nodes {'counted as 0' if include_undefined_as_zero else 'excluded'}, "
        f"n={n}"
    )
    return CcdfSeries(points=points, population=population)


@dataclass
class DegreeCorrelationSeries:
    """Mean raw degree of nodes grouped by exact internal degree."""

    points: list[tuple[int, float, int]]  # (internal_degree, mean_degree, node_count)


def degree_vs_internal_degree(stats: list[NodeStats]) -> DegreeCorrelationSeries:
    """Group nodes by internal degree; report each group's mean degree."""
    groups: dict[int, list[int]] = {}
    for s in stats:
        groups.setdefault(s.internal_degree, []).append(s.degree)
    points = [
        (k, sum(degs) / len(degs), len(degs)) for k, degs in sorted(groups.items())
    ]
    return DegreeCorrelationSeries(points=points)


# -- rendering ---------------------------------------------------------------


def fmt(x: float | None) -> str:
    """Fixed 6-decimal rendering for report rationals; '-' for absent."""
    if x is None:
        return "-"
    if x != 0 and (abs(x) >= 1e9 or abs(x) < 1e-6):
        return f"{x:.6e}"
    return f"{x:.6f}"


def _pairs_cell(p: InternalPairCount | None) -> str:
    if p is None:
        return "-"
    if p.exact_count is not None:
        return str(p.exact_count)
    mean, half = p.estimate
    return f"{fmt(mean)}±{fmt(half)}"


def render_report_text(r: InternalReport) -> str:
    """Human-readable report, one row per side (starred = null model)."""
    cfg = r.swap_config
    lines = [
        "internal-link report",
        (
            f"graph: {r.bottom_count} bottom ({r.bottom_isolated} isolated), "
            f"{r.top_count} top ({r.top_isolated} isolated), "
            f"{r.edge_count} edges ({r.duplicate_count} duplicate input lines collapsed)"
        ),
        f"degree filter (both endpoints >= 2): {'on' if r.filter_applied else 'off'}",
        (
            f"pairs: {r.pair_mode}"
            + (f" (sample {r.pair_sample_size})" if r.pair_mode == "estimate" else "")
            + f", isolated-opposite pairs {'included' if r.include_isolated_pairs else 'excluded'}"
        ),
        (
            f"null model: {r.null_samples} samples, swaps_per_edge={cfg.swaps_per_edge:g}, "
            f"seed={cfg.seed}, max_rejections_factor={cfg.max_rejections_factor}, "
            f"saturated={r.saturated_samples}"
        ),
    ]
    if r.null_skipped_reason:
        lines.append(f"null model skipped: {r.null_skipped_reason}")
    lines.append("")
    header = f"{'side':8} {'analyzed':>9} {'E_I':>9} {'f_EI':>10} {'P_I':>16} {'E_I/E_I*':>12} {'P_I/P_I*':>12}"
    lines.append(header)
    for side_rep in (r.bottom, r.top):
        lines.append(
            f"{side_rep.side.value:8} {side_rep.analyzed_links:>9} {side_rep.internal_links:>9} "
            f"{fmt(side_rep.f_ei):>10} {_pairs_cell(side_rep.pairs):>16} "
            f"{fmt(side_rep.e_i_ratio):>12} {fmt(side_rep.p_i_ratio):>12}"
        )
    if r.null_samples:
        lines.append("")
        lines.append("null dispersion:")
        for side_rep in (r.bottom, r.top):
            ei = side_rep.null_internal_links
            pi = side_rep.null_pairs
            lines.append(
                f"  {side_rep.side.value}: E_I* min={min(ei)} mean={fmt(sum(ei) / len(ei))} max={max(ei)}"
                + (
                    f"  P_I* min={fmt(min(pi))} mean={fmt(sum(pi) / len(pi))} max={fmt(max(pi))}"
                    if pi
                    else ""
                )
            )
    lines.append("")
    return "\n".join(lines)


def render_report_tsv(r: InternalReport) -> str:
    """Machine-readable key/value rendering of the same report."""
    cfg = r.swap_config
    rows: list[tuple[str, str]] = [
        ("graph.bottom_count", str(r.bottom_count)),
        ("graph.top_count", str(r.top_count)),
        ("graph.edge_count", str(r.edge_count)),
        ("graph.duplicate_count", str(r.duplicate_count)),
        ("graph.bottom_isolated", str(r.bottom_isolated)),
        ("graph.top_isolated", str(r.top_isolated)),
        ("meta.filter", "on" if r.filter_applied else "off"),
        ("meta.pair_mode", r.pair_mode),
        ("meta.pair_sample_size", str(r.pair_sample_size) if r.pair_sample_size else "-"),
        ("meta.include_isolated_pairs", "yes" if r.include_isolated_pairs else "no"),
        ("meta.null_samples", str(r.null_samples)),
        ("meta.swaps_per_edge", f"{cfg.swaps_per_edge:g}"),
        ("meta.seed", str(cfg.seed)),
        ("meta.max_rejections_factor", str(cfg.max_rejections_factor)),
        ("meta.null_skipped_reason", r.null_skipped_reason or "-"),
        ("meta.saturated_samples", str(r.saturated_samples)),
    ]
    for side_rep in (r.bottom, r.top):
        s = side_rep.side.value
        rows.append((f"{s}.analyzed_links", str(side_rep.analyzed_links)))
        rows.append((f"{s}.internal_links", str(side_rep.internal_links)))
        rows.append((f"{s}.f_ei", fmt(side_rep.f_ei)))
        p = side_rep.pairs
        if p is None:
            rows.append((f"{s}.pairs", "-"))
        elif p.exact_count is not None:
            rows.append((f"{s}.pairs", str(p.exact_count)))
        else:
            rows.append((f"{s}.pairs_mean", fmt(p.estimate[0])))
            rows.append((f"{s}.pairs_half_width", fmt(p.estimate[1])))
            rows.append((f"{s}.pairs_sample_size", str(p.sample_size)))
        rows.append((f"{s}.e_i_ratio", fmt(side_rep.e_i_ratio)))
        rows.append((f"{s}.p_i_ratio", fmt(side_rep.p_i_ratio)))
        if side_rep.null_internal_links:
            ei = side_rep.null_internal_links
            rows.append((f"{s}.null_e_i_mean", fmt(sum(ei) / len(ei))))
            rows.append((f"{s}.null_e_i_min", str(min(ei))))
            rows.append((f"{s}.null_e_i_max", str(max(ei))))
        if side_rep.null_pairs:
            pi = side_rep.null_pairs
            rows.append((f"{s}.null_p_i_mean", fmt(sum(pi) / len(pi))))
            rows.append((f"{s}.null_p_i_min", fmt(min(pi))))
            rows.append((f"{s}.null_p_i_max", fmt(max(pi))))
    return "".join(f"{k}\t{v}\n" for k, v in rows)


def render_ccdf_tsv(series: CcdfSeries) -> str:
    out = ["internal_fraction\tccdf\n"]
    out.extend(f"{fmt(x)}\t{fmt(p)}\n" for x, p in series.points)
    return "".join(out)


def render_degcorr_tsv(series: DegreeCorrelationSeries) -> str:
    out = ["internal_degree\tmean_degree\tnode_count\n"]
    out.extend(f"{k}\t{fmt(md)}\t{n}\n" for k, md, n in series.points)
    return "".join(out)
