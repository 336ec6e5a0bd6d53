"""Immutable simple-graph core: ingestion, degree statistics, bipartiteness.

The adjacency is stored in compressed sorted form (CSR-style ``indptr`` /
``indices`` pair), which every downstream kernel relies on: neighbor
lists are sorted ascending, symmetric, loop-free and duplicate-free.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import EdgeListParseError, UndefinedStatisticError


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph over dense node indices ``0..node_count-1``.

    Neighbors of node ``l`` are ``indices[indptr[l]:indptr[l+1]]``, sorted
    ascending.  Arrays are marked read-only after construction, so instances
    are safe to share across threads and processes.
    """

    node_count: int
    indptr: np.ndarray
    indices: np.ndarray
    tokens: tuple[str, ...] | None = None  # original labels, index-aligned

    def __post_init__(self):
        self.indptr.setflags(write=False)
        self.indices.setflags(write=False)

    @property
    def edge_count(self) -> int:
        return int(self.indices.shape[0]) // 2

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def neighbors(self, l: int) -> np.ndarray:
        return self.indices[self.indptr[l]:self.indptr[l + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        i = int(np.searchsorted(row, v))
        return i < row.shape[0] and int(row[i]) == v


@dataclass(frozen=True)
class EdgeList:
    """Raw parsed edges: a multiset of index pairs plus the token mapping."""

    pairs: np.ndarray            # (M, 2) int64, dense indices in first-seen order
    tokens: tuple[str, ...]      # dense index -> original token


@dataclass(frozen=True)
class BuildReport:
    loops_dropped: int
    duplicates_dropped: int


@dataclass(frozen=True)
class DegreeStats:
    n: int
    e: int
    mean_k: float
    mean_k2: float
    k_max: int
    degrees: np.ndarray = field(repr=False)


def parse_edge_list(source) -> EdgeList:
    """Parse whitespace-separated edge pairs from a string or line iterable.

    One edge per line, two tokens each; lines starting with ``#`` are
    comments and blank lines carry no content, both are skipped.  Tokens
    may be arbitrary (not just integers) and are remapped to dense indices
    in order of first appearance.

    Raises :class:`EdgeListParseError` (with the 1-based line number) for
    any content line that does not hold exactly two tokens.
    """
    lines = source.splitlines() if isinstance(source, str) else source
    index: dict[str, int] = {}
    us: list[int] = []
    vs: list[int] = []
    setdefault = index.setdefault
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(lineno, raw.rstrip("\n"))
        us.append(setdefault(parts[0], len(index)))
        vs.append(setdefault(parts[1], len(index)))
    if us:
        pairs = np.stack([np.asarray(us, dtype=np.int64), np.asarray(vs, dtype=np.int64)], axis=1)
    else:
        pairs = np.empty((0, 2), dtype=np.int64)
    return EdgeList(pairs=pairs, tokens=tuple(index))


def build_graph(pairs, node_count: int | None = None,
                tokens: tuple[str, ...] | None = None) -> tuple[Graph, BuildReport]:
    """Build a simple Graph from raw undirected pairs.

    Self-loops are dropped and parallel edges collapsed; the counts of both
    are returned in the report.  ``node_count`` overrides the inferred node
    set (max index + 1), which is the only way isolated trailing nodes can
    enter a graph.
    """
    pairs = np.ascontiguousarray(np.asarray(pairs, dtype=np.int64)).reshape(-1, 2)
    if pairs.size and pairs.min() < 0:
        raise ValueError("node indices must be non-negative")
    inferred = int(pairs.max()) + 1 if pairs.size else 0
    n = inferred if node_count is None else int(node_count)
    if n < inferred:
        raise ValueError(f"node_count={n} is smaller than largest index {inferred - 1}")

    u, v = pairs[:, 0], pairs[:, 1]
    loop_mask = u == v
    loops = int(loop_mask.sum())
    u, v = u[~loop_mask], v[~loop_mask]
    duplicates = 0
    if u.size:
        lo = np.minimum(u, v)
        hi = np.maximum(u, v)
        keys = np.unique(lo * np.int64(n) + hi)
        duplicates = int(lo.size - keys.size)
        lo, hi = keys // n, keys % n
    else:
        lo = hi = np.empty(0, dtype=np.int64)

    src = np.concatenate([lo, hi])
    dst = np.concatenate([hi, lo])
    order = np.lexsort((dst, src))
    indices = np.ascontiguousarray(dst[order])
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    return Graph(n, indptr, indices, tokens), BuildReport(loops, duplicates)


def load_graph(path, node_count: int | None = None) -> tuple[Graph, BuildReport]:
    """Parse and build in one step from an edge-list file path."""
    with open(path, "r", encoding="utf-8") as fh:
        edge_list = parse_edge_list(fh)
    return build_graph(edge_list.pairs, node_count=node_count, tokens=edge_list.tokens)


def degree_stats(g: Graph) -> DegreeStats:
    """Exact moments of the realized degree sequence (not a model's)."""
    if g.node_count == 0:
        raise UndefinedStatisticError("degree statistics are undefined for an empty graph")
    deg = g.degrees
    n = g.node_count
    s1 = int(deg.sum())
    s2 = int((deg.astype(np.int64) ** 2).sum())
    return DegreeStats(
        n=n,
        e=g.edge_count,
        mean_k=s1 / n,
        mean_k2=s2 / n,
        k_max=int(deg.max()),
        degrees=deg,
    )


def is_bipartite(g: Graph) -> bool:
    """True iff a proper 2-coloring exists, checked per component by BFS."""
    color = np.full(g.node_count, -1, dtype=np.int8)
    for start in range(g.node_count):
        if color[start] >= 0:
            continue
        color[start] = 0
        frontier = [start]
        while frontier:
            u = frontier.pop()
            next_color = 1 - color[u]
            for v in g.neighbors(u):
                cv = color[v]
                if cv < 0:
                    color[v] = next_color
                    frontier.append(int(v))
                elif cv != next_color:
                    return False
    return True


def component_labels(g: Graph) -> np.ndarray:
    """Connected-component label per node (labels are 0-based, arbitrary order)."""
    labels = np.full(g.node_count, -1, dtype=np.int64)
    current = 0
    for start in range(g.node_count):
        if labels[start] >= 0:
            continue
        labels[start] = current
        frontier = [start]
        while frontier:
            u = frontier.pop()
            for v in g.neighbors(u):
                if labels[v] < 0:
                    labels[v] = current
                    frontier.append(int(v))
        current += 1
    return labels


def degree_assortativity(g: Graph) -> float | None:
    """Pearson correlation of endpoint degrees over all edges.

    Returns None when undefined (no edges, or zero degree variance at the
    edge ends, e.g. regular graphs).
    """
    if g.edge_count == 0:
        return None
    deg = g.degrees.astype(np.float64)
    src_deg = np.repeat(deg, g.degrees)
    dst_deg = deg[g.indices]
    if np.var(src_deg) == 0.0 or np.var(dst_deg) == 0.0:
        return None
    return float(np.corrcoef(src_deg, dst_deg)[0, 1])
