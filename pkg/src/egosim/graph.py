"""Undirected simple graphs with string labels, plus edge-list I/O.

Node labels are opaque strings. Internally every node is a dense index
assigned in order of first appearance, and all output maps back to labels.
"""

import csv
import io
import logging
import operator
import re
from dataclasses import dataclass

from .errors import EmptyGraphError, NodeNotFoundError, ParseError

__all__ = [
    "Graph",
    "LocalNetwork",
    "load_edge_list",
    "load_csv",
    "read_graph",
    "to_edge_list",
]

logger = logging.getLogger(__name__)

COMMENT_PREFIXES = ("#", "%")
_SPLIT = re.compile(r"[\s,]+")


@dataclass(frozen=True)
class LocalNetwork:
    """A node together with its direct neighbours (its ego network)."""

    center: int
    members: tuple

    def __len__(self):
        return len(self.members)


class Graph:
    """Immutable undirected simple graph.

    Parameters
    ----------
    labels : sequence of str
        Node labels in index order. Must be unique.
    edges : iterable of (int, int)
        Index pairs. Self-loops and repeated pairs are ignored.

    Attributes
    ----------
    self_loops_dropped : int
        Number of self-loop records discarded while building the graph.
    duplicates_dropped : int
        Number of repeated edge records collapsed while building the graph.
    """

    __slots__ = ("labels", "adjacency", "edge_count", "_index",
                 "self_loops_dropped", "duplicates_dropped")

    def __init__(self, labels, edges=()):
        labels = tuple(str(lab) for lab in labels)
        index = {lab: i for i, lab in enumerate(labels)}
        if len(index) != len(labels):
            raise ValueError("node labels must be unique")
        n = len(labels)
        neigh = [set() for _ in range(n)]
        loops = dups = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise NodeNotFoundError(f"edge ({u}, {v}) refers to a node outside 0..{n - 1}")
            if u == v:
                loops += 1
            elif v in neigh[u]:
                dups += 1
            else:
                neigh[u].add(v)
                neigh[v].add(u)
        self.labels = labels
        self.adjacency = tuple(tuple(sorted(s)) for s in neigh)
        self.edge_count = sum(len(s) for s in neigh) // 2
        self._index = index
        self.self_loops_dropped = loops
        self.duplicates_dropped = dups

    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        return f"Graph(nodes={len(self)}, edges={self.edge_count})"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.labels == other.labels and self.adjacency == other.adjacency

    def __hash__(self):
        return hash((self.labels, self.adjacency))

    @property
    def node_count(self):
        return len(self.labels)

    def _check(self, i):
        try:
            ok = 0 <= operator.index(i) < len(self.labels)
        except TypeError:
            ok = False
        if not ok:
            raise NodeNotFoundError(f"no node with index {i!r}")

    def index_of(self, label):
        """Return the dense index of ``label``."""
        try:
            return self._index[str(label)]
        except KeyError:
            raise NodeNotFoundError(f"no node labelled {label!r}") from None

    def label_of(self, i):
        self._check(i)
        return self.labels[i]

    def neighbors(self, i):
        self._check(i)
        return self.adjacency[i]

    def degree(self, i):
        """Degree of node ``i`` in the whole graph."""
        self._check(i)
        return len(self.adjacency[i])

    def degrees(self):
        return [len(a) for a in self.adjacency]

    def max_degree(self):
        """Largest degree over all nodes."""
        if not self.labels:
            raise EmptyGraphError("graph has no nodes")
        return max(len(a) for a in self.adjacency)

    def local_network(self, i):
        """The node ``i`` plus its neighbours, sorted by index."""
        self._check(i)
        return LocalNetwork(i, tuple(sorted((i, *self.adjacency[i]))))

    def edges(self):
        """Yield each edge once as ``(u, v)`` with ``u < v``."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield u, v


class _Builder:
    def __init__(self):
        self.labels = []
        self.index = {}
        self.edges = []

    def node(self, label):
        i = self.index.get(label)
        if i is None:
            i = self.index[label] = len(self.labels)
            self.labels.append(label)
        return i

    def add(self, a, b):
        self.edges.append((self.node(a), self.node(b)))

    def build(self):
        if not self.labels:
            raise EmptyGraphError("input contains no nodes")
        g = Graph(self.labels, self.edges)
        if g.self_loops_dropped:
            logger.warning("dropped %d self-loop(s)", g.self_loops_dropped)
        return g


def _lines(text):
    if isinstance(text, str):
        return io.StringIO(text)
    return text


def load_edge_list(text):
    """Parse a whitespace- or comma-separated edge list.

    Lines starting with ``#`` or ``%`` are comments and blank lines are
    skipped. Every other line must hold exactly two labels. Duplicate and
    reversed edges collapse; self-loops are dropped but their labels kept.

    Parameters
    ----------
    text : str or iterable of str
        The whole document, or an open text stream.

    Returns
    -------
    Graph
    """
    b = _Builder()
    for lineno, raw in enumerate(_lines(text), start=1):
        line = raw.strip()
        if not line or line.startswith(COMMENT_PREFIXES):
            continue
        tokens = [t for t in _SPLIT.split(line) if t]
        if len(tokens) != 2:
            raise ParseError(f"expected 2 node labels, found {len(tokens)}: {line!r}", lineno)
        b.add(*tokens)
    return b.build()


def load_csv(text):
    """Parse a CSV edge list whose header row is ``source,target``."""
    reader = csv.reader(_lines(text))
    b = _Builder()
    header_seen = False
    for row in reader:
        lineno = reader.line_num
        cells = [c.strip() for c in row]
        if not any(cells) or cells[0].startswith(COMMENT_PREFIXES):
            continue
        if not header_seen:
            if [c.lower() for c in cells] != ["source", "target"]:
                raise ParseError(f"expected header 'source,target', found {row!r}", lineno)
            header_seen = True
            continue
        if len(cells) != 2 or not all(cells):
            raise ParseError(f"expected 2 node labels, found {row!r}", lineno)
        b.add(*cells)
    return b.build()


def read_graph(path, fmt=None):
    """Load a graph from ``path``; ``fmt`` defaults from the file extension."""
    if fmt is None:
        fmt = "csv" if str(path).lower().endswith(".csv") else "edgelist"
    loader = {"edgelist": load_edge_list, "csv": load_csv}.get(fmt)
    if loader is None:
        raise ValueError(f"unknown graph format {fmt!r}")
    with open(path, encoding="utf-8", newline="" if fmt == "csv" else None) as fh:
        return loader(fh)


def to_edge_list(g):
    """Serialize ``g`` as edge-list text that :func:`load_edge_list` reads back.

    Isolated nodes are written as a self-loop line, which the parser turns
    back into an isolated node.
    """
    out = []
    for i, nbrs in enumerate(g.adjacency):
        if not nbrs:
            out.append(f"{g.labels[i]} {g.labels[i]}")
    out.extend(f"{g.labels[u]} {g.labels[v]}" for u, v in g.edges())
    return "\n".join(out) + "\n"
