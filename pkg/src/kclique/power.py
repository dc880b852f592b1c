"""The k-th power of a graph: distinct vertices adjacent iff within distance k."""

from __future__ import annotations

from kclique.bitset import VertexSet, iter_bits
from kclique.graph import Graph


def _check_k(k: int) -> None:
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")


def bounded_bfs(g: Graph, source: int, k: int) -> VertexSet:
    """Vertices at distance 1..k from ``source``, as a bitset."""
    _check_k(k)
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range for n={g.n}")
    adj = g.adjacency
    visited = frontier = 1 << source
    for _ in range(k):
        reached = 0
        for v in iter_bits(frontier):
            reached |= adj[v]
        frontier = reached & ~visited
        if not frontier:
            break
        visited |= frontier
    return visited ^ (1 << source)


def power_graph(g: Graph, k: int) -> Graph:
    """G^k over the same vertices and labels; ``power_graph(g, 1)`` is ``g``."""
    _check_k(k)
    if k == 1:
        return g
    rows = tuple(bounded_bfs(g, v, k) for v in range(g.n))
    return Graph(g.n, rows, g.labels)


def is_saturated(g: Graph) -> bool:
    """True when every connected component of ``g`` is a clique.

    A power graph in this state gains nothing from a larger k, and its
    maximum clique is simply its largest component.
    """
    adj = g.adjacency
    for v in range(g.n):
        closed = adj[v] | (1 << v)
        for w in iter_bits(adj[v]):
            if adj[w] | (1 << w) != closed:
                return False
    return True
