"""Shared helpers: tiny named graphs and independent brute-force oracles."""

import itertools

import numpy as np
import pytest

from trigauge import build_graph


def graph_from_edges(edges, n=None):
    arr = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
    return build_graph(arr, node_count=n)[0]


def complete_graph(n):
    return graph_from_edges([(i, j) for i in range(n) for j in range(i + 1, n)], n=n)


def cycle_graph(n):
    return graph_from_edges([(i, (i + 1) % n) for i in range(n)], n=n)


def star_graph(leaves):
    return graph_from_edges([(0, i) for i in range(1, leaves + 1)], n=leaves + 1)


def path_graph(n):
    return graph_from_edges([(i, i + 1) for i in range(n - 1)], n=n)


def complete_bipartite(a, b):
    return graph_from_edges([(i, a + j) for i in range(a) for j in range(b)], n=a + b)


def brute_force_triangles(g):
    """O(N^3) triple enumeration, independent of the census code path."""
    adj = [set(g.neighbors(u).tolist()) for u in range(g.node_count)]
    per_node = np.zeros(g.node_count, dtype=np.int64)
    total = 0
    for i, j, k in itertools.combinations(range(g.node_count), 3):
        if j in adj[i] and k in adj[i] and k in adj[j]:
            total += 1
            per_node[i] += 1
            per_node[j] += 1
            per_node[k] += 1
    return per_node, total


def brute_force_bipartite(g):
    """Try all 2-colorings; exact for small graphs."""
    n = g.node_count
    edges = [(u, int(v)) for u in range(n) for v in g.neighbors(u) if v > u]
    for bits in range(1 << n):
        if all((bits >> u) & 1 != (bits >> v) & 1 for u, v in edges):
            return True
    return n == 0


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def c5():
    return cycle_graph(5)
