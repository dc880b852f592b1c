"""Slow, independent reference routines used to cross-check the solver.

Nothing here touches bitsets or the colouring bound: neighbourhoods are
rebuilt as plain Python sets and distances come from textbook BFS.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable

from kclique.graph import Graph
from kclique.solver import SearchStats, Solution

BRUTE_FORCE_LIMIT = 32


class OracleLimitError(ValueError):
    pass


def _neighbour_sets(g: Graph) -> list[set[int]]:
    return [{w for w in range(g.n) if g.has_edge(v, w)} for v in range(g.n)]


def brute_force_max_clique(g: Graph) -> Solution:
    """Maximum clique by enumerating cliques in increasing-index order.

    The only pruning is the trivial ``|C| + |P| <= best`` test.  Refuses
    graphs with more than ``BRUTE_FORCE_LIMIT`` vertices.
    """
    if g.n > BRUTE_FORCE_LIMIT:
        raise OracleLimitError(f"brute force limited to {BRUTE_FORCE_LIMIT} vertices, got {g.n}")
    nbrs = _neighbour_sets(g)
    best: list[int] = []
    calls = 0

    def extend(clique: list[int], candidates: list[int]) -> None:
        nonlocal best, calls
        calls += 1
        if len(clique) > len(best):
            best = list(clique)
        for j, v in enumerate(candidates):
            rest = candidates[j + 1:]
            if len(clique) + 1 + len(rest) <= len(best):
                return
            clique.append(v)
            extend(clique, [w for w in rest if w in nbrs[v]])
            clique.pop()

    extend([], list(range(g.n)))
    members = frozenset(g.labels[v] for v in best)
    return Solution(members, len(members), SearchStats(nodes=calls), True)


def all_pairs_distances(g: Graph) -> list[list[int]]:
    """Hop distances by BFS from every vertex.

    Unreachable pairs hold ``g.n + 1``, larger than any real distance; use
    :func:`unreachable` to test for it.
    """
    nbrs = _neighbour_sets(g)
    inf = g.n + 1
    dist = []
    for s in range(g.n):
        row = [inf] * g.n
        row[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in nbrs[u]:
                if row[w] == inf:
                    row[w] = row[u] + 1
                    queue.append(w)
        dist.append(row)
    return dist


def unreachable(g: Graph, d: int) -> bool:
    return d > g.n


def _indices(g: Graph, labels: Iterable) -> list[int]:
    return [g.index_of(label) for label in labels]


def verify_clique(g: Graph, members: Iterable) -> bool:
    """Every pair of the labelled vertices is adjacent."""
    vs = _indices(g, members)
    return all(g.has_edge(u, v) for u, v in combinations(vs, 2))


def verify_k_clique(g: Graph, k: int, members: Iterable) -> bool:
    """Every pair lies within distance ``k`` in the whole of ``g``."""
    vs = _indices(g, members)
    if len(vs) < 2:
        return True
    dist = all_pairs_distances(g)
    limit = min(k, g.n)
    return all(dist[u][v] <= limit for u, v in combinations(vs, 2))


def verify_k_club(g: Graph, k: int, members: Iterable) -> bool:
    """Every pair lies within distance ``k`` using only the given vertices."""
    vs = sorted(set(_indices(g, members)))
    if len(vs) < 2:
        return True
    sub = Graph.from_edges(
        len(vs),
        [(i, j) for i, j in combinations(range(len(vs)), 2) if g.has_edge(vs[i], vs[j])],
    )
    dist = all_pairs_distances(sub)
    limit = min(k, sub.n)
    return all(dist[i][j] <= limit for i, j in combinations(range(sub.n), 2))
