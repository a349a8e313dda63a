"""Compact bipartite (2-mode) graph with neighborhood queries and projection.

A bipartite graph keeps two node sets, "bottom" and "top", with every edge
crossing from one side to the other.  Nodes carry dense integer indices per
side plus an optional string label retained from the input file, so hot loops
work on plain ints while I/O stays label-based.

Adjacency lists are kept sorted at all times: intersection and subset tests
reduce to linear merges / bisect probes, which is what every detection routine
in this package leans on.

Thread-safety contract: a constructed graph supports concurrent read-only
queries; ``add_link`` / ``remove_link`` require exclusive access (no internal
locking).
"""

from __future__ import annotations

import io
from bisect import bisect_left, insort
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable, Iterator, TextIO


class GraphError(Exception):
    """Base class for errors raised by this package."""


class ParseError(GraphError):
    """Malformed input line; carries the 1-based line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class DuplicateEdgeError(GraphError):
    """Attempt to add an edge that is already present."""


class MissingEdgeError(GraphError):
    """Attempt to use an edge that is not present."""


class InvalidNodeError(GraphError):
    """Node index out of range for its side."""


class IncomparableError(GraphError):
    """Projections over different node sets cannot be compared."""


class Side(Enum):
    """The two node classes of a bipartite graph."""

    BOTTOM = "bottom"
    TOP = "top"

    def opposite(self) -> "Side":
        return Side.TOP if self is Side.BOTTOM else Side.BOTTOM

    def __str__(self) -> str:
        return self.value

    @classmethod
    def from_string(cls, name: str) -> "Side":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown side {name!r}; expected 'bottom' or 'top'") from None


@dataclass(frozen=True)
class NodeId:
    """A node handle: which side it lives on plus its dense index there."""

    side: Side
    index: int


def sorted_contains(lst: list[int], x: int) -> bool:
    """Membership test in a sorted list via bisect."""
    i = bisect_left(lst, x)
    return i < len(lst) and lst[i] == x


def sorted_intersects(a: list[int], b: list[int], exclude: int | None = None) -> bool:
    """True if two sorted lists share an element other than ``exclude``.

    Uses a linear merge, switching to bisect probes when one list is much
    shorter than the other.
    """
    la, lb = len(a), len(b)
    if la == 0 or lb == 0:
        return False
    if la > lb:
        a, b = b, a
        la, lb = lb, la
    if la * 16 < lb:
        for x in a:
            if x == exclude:
                continue
            i = bisect_left(b, x)
            if i < lb and b[i] == x:
                return True
        return False
    i = j = 0
    while i < la and j < lb:
        xa, xb = a[i], b[j]
        if xa == xb:
            if xa != exclude:
                return True
            i += 1
            j += 1
        elif xa < xb:
            i += 1
        else:
            j += 1
    return False


class BipartiteGraph:
    """Simple bipartite graph G = (bottom, top, E) with sorted adjacency.

    Invariants maintained by construction:
      * symmetry: v in N(u) iff u in N(v)
      * simplicity: no duplicate edges, edges cross sides only
      * edge_count equals the adjacency mass seen from either side
    """

    def __init__(self) -> None:
        self.bottom_adj: list[list[int]] = []
        self.top_adj: list[list[int]] = []
        self.bottom_labels: list[str] = []
        self.top_labels: list[str] = []
        self._bottom_ids: dict[str, int] = {}
        self._top_ids: dict[str, int] = {}
        self.edge_count: int = 0
        self.duplicate_count: int = 0  # collapsed duplicate input lines

    # -- construction -----------------------------------------------------

    def add_bottom(self, label: str | None = None) -> int:
        """Register a new bottom node, returning its dense index."""
        idx = len(self.bottom_adj)
        if label is None:
            label = str(idx)
        self.bottom_adj.append([])
        self.bottom_labels.append(label)
        self._bottom_ids[label] = idx
        return idx

    def add_top(self, label: str | None = None) -> int:
        """Register a new top node, returning its dense index."""
        idx = len(self.top_adj)
        if label is None:
            label = str(idx)
        self.top_adj.append([])
        self.top_labels.append(label)
        self._top_ids[label] = idx
        return idx

    def bottom_id(self, label: str) -> int:
        """Index of an existing bottom label, creating the node if new."""
        idx = self._bottom_ids.get(label)
        if idx is None:
            idx = self.add_bottom(label)
        return idx

    def top_id(self, label: str) -> int:
        """Index of an existing top label, creating the node if new."""
        idx = self._top_ids.get(label)
        if idx is None:
            idx = self.add_top(label)
        return idx

    # -- basic queries -----------------------------------------------------

    @property
    def bottom_count(self) -> int:
        return len(self.bottom_adj)

    @property
    def top_count(self) -> int:
        return len(self.top_adj)

    def side_count(self, side: Side) -> int:
        return self.bottom_count if side is Side.BOTTOM else self.top_count

    def adj(self, side: Side) -> list[list[int]]:
        """Adjacency lists of one side (read-only view by convention)."""
        return self.bottom_adj if side is Side.BOTTOM else self.top_adj

    def labels(self, side: Side) -> list[str]:
        return self.bottom_labels if side is Side.BOTTOM else self.top_labels

    def check_node(self, side: Side, index: int) -> None:
        if not 0 <= index < self.side_count(side):
            raise InvalidNodeError(f"{side} node {index} out of range (count {self.side_count(side)})")

    def neighbors(self, side: Side, index: int) -> list[int]:
        """Sorted opposite-side neighbor indices of one node."""
        self.check_node(side, index)
        return self.adj(side)[index]

    def degree(self, side: Side, index: int) -> int:
        self.check_node(side, index)
        return len(self.adj(side)[index])

    def has_edge(self, u: int, v: int) -> bool:
        """Edge presence for bottom index ``u`` and top index ``v``."""
        if not (0 <= u < self.bottom_count and 0 <= v < self.top_count):
            return False
        return sorted_contains(self.bottom_adj[u], v)

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (bottom, top) index pairs, sorted."""
        for u, nbrs in enumerate(self.bottom_adj):
            for v in nbrs:
                yield (u, v)

    # -- mutation ----------------------------------------------------------

    def add_link(self, u: int, v: int) -> None:
        """Insert edge (bottom u, top v); raises DuplicateEdgeError if present."""
        self.check_node(Side.BOTTOM, u)
        self.check_node(Side.TOP, v)
        if sorted_contains(self.bottom_adj[u], v):
            raise DuplicateEdgeError(f"edge ({self.bottom_labels[u]!r}, {self.top_labels[v]!r}) already present")
        insort(self.bottom_adj[u], v)
        insort(self.top_adj[v], u)
        self.edge_count += 1

    def remove_link(self, u: int, v: int) -> None:
        """Delete edge (bottom u, top v); raises MissingEdgeError if absent."""
        self.check_node(Side.BOTTOM, u)
        self.check_node(Side.TOP, v)
        i = bisect_left(self.bottom_adj[u], v)
        if i >= len(self.bottom_adj[u]) or self.bottom_adj[u][i] != v:
            raise MissingEdgeError(f"edge ({self.bottom_labels[u]!r}, {self.top_labels[v]!r}) not present")
        del self.bottom_adj[u][i]
        j = bisect_left(self.top_adj[v], u)
        del self.top_adj[v][j]
        self.edge_count -= 1

    # -- copying / equality --------------------------------------------------

    def copy(self) -> "BipartiteGraph":
        g = BipartiteGraph()
        g.bottom_adj = [list(x) for x in self.bottom_adj]
        g.top_adj = [list(x) for x in self.top_adj]
        g.bottom_labels = list(self.bottom_labels)
        g.top_labels = list(self.top_labels)
        g._bottom_ids = dict(self._bottom_ids)
        g._top_ids = dict(self._top_ids)
        g.edge_count = self.edge_count
        g.duplicate_count = self.duplicate_count
        return g

    def same_edges(self, other: "BipartiteGraph") -> bool:
        """Structural equality: same side sizes and identical adjacency."""
        return (
            self.bottom_count == other.bottom_count
            and self.top_count == other.top_count
            and self.bottom_adj == other.bottom_adj
        )

    def degree_sequences(self) -> tuple[list[int], list[int]]:
        return ([len(x) for x in self.bottom_adj], [len(x) for x in self.top_adj])


@dataclass
class ProjectionGraph:
    """One-mode projection: same-side nodes linked iff they share a neighbor."""

    node_count: int
    adj: list[list[int]]
    labels: list[str] = field(default_factory=list)

    @property
    def edge_count(self) -> int:
        return sum(len(x) for x in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Projection edges as (lower index, higher index), sorted."""
        for u, nbrs in enumerate(self.adj):
            for w in nbrs:
                if u < w:
                    yield (u, w)


def project(g: BipartiteGraph, side: Side) -> ProjectionGraph:
    """Materialize the one-mode projection of ``g`` onto ``side``.

    Two side-nodes are linked iff they share at least one bipartite neighbor.
    Computed by co-neighbor expansion: every opposite-side node links all
    pairs of its neighbors.  Isolated nodes stay in the projection as
    isolated nodes.

    Note: detection routines in this package never call this in their hot
    path (projections can be orders of magnitude larger than the bipartite
    graph); it exists for callers that want the projection itself and for
    ground-truth oracles.
    """
    n = g.side_count(side)
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for members in g.adj(side.opposite()):
        m = len(members)
        for i in range(m):
            a = members[i]
            for j in range(i + 1, m):
                b = members[j]
                nbrs[a].add(b)
                nbrs[b].add(a)
    return ProjectionGraph(node_count=n, adj=[sorted(s) for s in nbrs], labels=list(g.labels(side)))


def projection_equal(p1: ProjectionGraph, p2: ProjectionGraph) -> bool:
    """True iff both projections have identical edge sets.

    Raises IncomparableError when the node counts differ.
    """
    if p1.node_count != p2.node_count:
        raise IncomparableError(f"node counts differ: {p1.node_count} vs {p2.node_count}")
    return p1.adj == p2.adj


# -- text format -----------------------------------------------------------
#
# One edge per line: "bottom_label<TAB>top_label", UTF-8.  '#' lines are
# comments and blank lines are skipped.  The writer emits one directive
# comment per isolated node ("#isolated<TAB>bottom|top<TAB>label") so that
# zero-degree nodes survive a round trip; any other tool reads these as
# plain comments.

_ISOLATED_PREFIX = "#isolated\t"


def _open_source(source: TextIO | str | Path) -> tuple[TextIO, bool]:
    if isinstance(source, (str, Path)):
        return open(source, "r", encoding="utf-8"), True
    return source, False


def load_graph(source: TextIO | str | Path) -> BipartiteGraph:
    """Parse a bipartite edge list from a path or text stream.

    Labels are arbitrary strings (no tabs); ids are assigned densely per
    side in order of first appearance.  Duplicate edge lines collapse into
    one edge and bump ``duplicate_count``.  Empty input yields an empty
    graph.

    Raises ParseError (with line number) on lines that do not have exactly
    two tab-separated fields.
    """
    stream, owns = _open_source(source)
    g = BipartiteGraph()
    try:
        for lineno, raw in enumerate(stream, start=1):
            line = raw.rstrip("\n").rstrip("\r")
            if not line.strip():
                continue
            if line.startswith("#"):
                if line.startswith(_ISOLATED_PREFIX):
                    parts = line.split("\t")
                    if len(parts) != 3 or parts[1] not in ("bottom", "top"):
                        raise ParseError(lineno, f"bad isolated-node directive: {line!r}")
                    if parts[1] == "bottom":
                        g.bottom_id(parts[2])
                    else:
                        g.top_id(parts[2])
                continue
            fields = line.split("\t")
            if len(fields) != 2:
                raise ParseError(lineno, f"expected 2 tab-separated fields, got {len(fields)}")
            u = g.bottom_id(fields[0])
            v = g.top_id(fields[1])
            if g.has_edge(u, v):
                g.duplicate_count += 1
            else:
                g.add_link(u, v)
    finally:
        if owns:
            stream.close()
    return g


def _check_label(label: str) -> str:
    if "\t" in label or "\n" in label or "\r" in label:
        raise ValueError(f"label {label!r} contains tab/newline; not serializable")
    if label.startswith("#"):
        raise ValueError(f"label {label!r} starts with '#'; would parse as a comment")
    return label


def write_graph(g: BipartiteGraph, sink: TextIO, header: Iterable[str] = ()) -> None:
    """Serialize ``g`` in canonical form: header comments, isolated-node
    directives, then edges sorted by (bottom label, top label).

    Label-lexicographic order makes the output a pure function of the
    labeled graph, so write -> load -> write is byte-identical regardless
    of id assignment.
    """
    for line in header:
        sink.write(f"# {line}\n")
    for label in sorted(g.bottom_labels[u] for u in range(g.bottom_count) if not g.bottom_adj[u]):
        sink.write(f"#isolated\tbottom\t{_check_label(label)}\n")
    for label in sorted(g.top_labels[v] for v in range(g.top_count) if not g.top_adj[v]):
        sink.write(f"#isolated\ttop\t{_check_label(label)}\n")
    lines = sorted(
        (g.bottom_labels[u], g.top_labels[v]) for u, v in g.edges()
    )
    for bl, tl in lines:
        sink.write(f"{_check_label(bl)}\t{_check_label(tl)}\n")


def write_projection(p: ProjectionGraph, sink: TextIO, header: Iterable[str] = ()) -> None:
    """Serialize a projection: isolated-node directives plus one line per
    edge, "label_a<TAB>label_b" with label_a < label_b, sorted."""
    for line in header:
        sink.write(f"# {line}\n")
    for label in sorted(p.labels[u] for u in range(p.node_count) if not p.adj[u]):
        sink.write(f"#isolated\tnode\t{_check_label(label)}\n")
    lines = sorted(
        tuple(sorted((p.labels[u], p.labels[w]))) for u, w in p.edges()
    )
    for la, lb in lines:
        sink.write(f"{_check_label(la)}\t{_check_label(lb)}\n")


def graph_to_string(g: BipartiteGraph) -> str:
    """Canonical serialization as a string (no header)."""
    buf = io.StringIO()
    write_graph(g, buf)
    return buf.getvalue()
