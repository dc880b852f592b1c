"""Branch and bound maximum clique search with a greedy colouring bound and
lazy global domination, and its maximum k-clique wrapper.

The search follows the classic sequential-colouring scheme: each node colours
its candidate set greedily in static vertex order, then branches on vertices
from the highest colour class down, pruning as soon as the current clique plus
the colour count cannot beat the incumbent.  With domination enabled, after a
vertex ``v`` is rejected (and only once the bound has failed to prune the next
candidate), every vertex dominated by ``v`` in the whole searched graph is
dropped from the candidate set.  Dominated sets are computed on first use and
cached for the rest of the search.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from kclique.bitset import VertexSet, full
from kclique.graph import Graph, permute_by_degree
from kclique.power import is_saturated, power_graph

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ColourOrder:
    """Vertices in the order they were coloured, and the running colour count."""

    order: list[int]
    bounds: list[int]


@dataclass(frozen=True)
class SolverOptions:
    use_domination: bool = True
    node_limit: Optional[int] = None
    time_limit: Optional[float] = None
    # Called with the new incumbent (vertex indices of the searched graph).
    on_incumbent: Optional[Callable[[list[int]], None]] = field(default=None, compare=False)

    def __post_init__(self):
        if self.node_limit is not None and self.node_limit <= 0:
            raise ValueError("node_limit must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive")


@dataclass
class SearchStats:
    nodes: int = 0
    domination_sets_computed: int = 0
    elapsed: float = 0.0


@dataclass(frozen=True)
class Solution:
    members: frozenset
    size: int
    stats: SearchStats
    optimal: bool = True

    def sorted_members(self) -> list:
        return sorted(self.members)


class DominationCache:
    """Per-vertex dominated sets, each computed at most once."""

    def __init__(self, n: int):
        self.sets: list[Optional[VertexSet]] = [None] * n
        self.computed = 0

    def __contains__(self, v: int) -> bool:
        return self.sets[v] is not None


def colour_order(g: Graph, p: VertexSet) -> ColourOrder:
    """Greedy sequential colouring of ``p``, lowest index first."""
    if not p:
        raise ValueError("cannot colour an empty vertex set")
    adj = g.adjacency
    order: list[int] = []
    bounds: list[int] = []
    uncoloured = p
    colour = 0
    while uncoloured:
        colour += 1
        colourable = uncoloured
        while colourable:
            low = colourable & -colourable
            v = low.bit_length() - 1
            order.append(v)
            bounds.append(colour)
            uncoloured ^= low
            colourable &= ~adj[v]
            colourable ^= low
    return ColourOrder(order, bounds)


def dominated_by(g: Graph, v: int, w: int) -> bool:
    """Does ``v`` dominate ``w``, i.e. is N(w) - v a subset of N(v) - w?"""
    if v == w:
        raise ValueError("domination is defined for distinct vertices")
    adj = g.adjacency
    return (adj[w] & ~adj[v]) & ~(1 << v) == 0


def _compute_dominated(adj: tuple[VertexSet, ...], v: int) -> VertexSet:
    nv = adj[v]
    keep_v = ~(1 << v)
    out = 0
    for w, nw in enumerate(adj):
        if w != v and nw & ~nv & keep_v == 0:
            out |= 1 << w
    return out


def dominated_set(g: Graph, v: int, cache: DominationCache) -> VertexSet:
    """All vertices of ``g`` dominated by ``v``, through ``cache``."""
    found = cache.sets[v]
    if found is None:
        found = _compute_dominated(g.adjacency, v)
        cache.sets[v] = found
        cache.computed += 1
    return found


class _Abort(Exception):
    pass


class _Frame:
    __slots__ = ("p", "order", "bounds", "i", "v_rej", "pending")

    def __init__(self, p: VertexSet, colouring: ColourOrder):
        self.p = p
        self.order = colouring.order
        self.bounds = colouring.bounds
        self.i = len(colouring.order) - 1
        self.v_rej = -1
        self.pending = -1


class _Search:
    def __init__(self, g: Graph, opts: SolverOptions, started: float):
        self.g = g
        self.opts = opts
        self.stats = SearchStats()
        self.cache = DominationCache(g.n)
        self.best: list[int] = []
        self.deadline = None if opts.time_limit is None else started + opts.time_limit

    def _enter(self, p: VertexSet) -> _Frame:
        limit = self.opts.node_limit
        if limit is not None and self.stats.nodes >= limit:
            raise _Abort
        if self.deadline is not None and time.perf_counter() >= self.deadline:
            raise _Abort
        self.stats.nodes += 1
        return _Frame(p, colour_order(self.g, p))

    def run(self) -> bool:
        """Search the whole graph; False if a limit cut it short."""
        if self.g.n == 0:
            return True
        adj = self.g.adjacency
        domination = self.opts.use_domination
        on_incumbent = self.opts.on_incumbent
        cache = self.cache
        c: list[int] = []
        best = self.best
        try:
            stack = [self._enter(full(self.g.n))]
        except _Abort:
            return False
        # Each frame is one call of the recursive expand(C, P); ``pending`` is
        # the accepted vertex whose child call is on the stack above it.
        while stack:
            f = stack[-1]
            if f.pending >= 0:
                v = f.pending
                f.pending = -1
                c.pop()
                f.p &= ~(1 << v)
                f.v_rej = v
                f.i -= 1
            i = f.i
            if i < 0 or len(c) + f.bounds[i] <= len(best):
                stack.pop()
                continue
            if domination and f.v_rej >= 0:
                dom = cache.sets[f.v_rej]
                if dom is None:
                    dom = dominated_set(self.g, f.v_rej, cache)
                f.p &= ~dom
            v = f.order[i]
            if (f.p >> v) & 1:
                c.append(v)
                if len(c) > len(best):
                    best[:] = c
                    if on_incumbent is not None:
                        on_incumbent(list(best))
                child_p = f.p & adj[v]
                if child_p:
                    f.pending = v
                    try:
                        stack.append(self._enter(child_p))
                    except _Abort:
                        return False
                    continue
                c.pop()
                f.p &= ~(1 << v)
            f.v_rej = v
            f.i = i - 1
        return True


def _search(g: Graph, opts: SolverOptions, started: float) -> tuple[list[int], SearchStats, bool]:
    s = _Search(g, opts, started)
    optimal = s.run()
    s.stats.domination_sets_computed = s.cache.computed
    return s.best, s.stats, optimal


def solve_max_clique(g: Graph, opts: SolverOptions | None = None) -> Solution:
    """Maximum clique of ``g`` searched in its current vertex order.

    Members are reported as ``g.labels``.  Callers wanting the usual static
    degree ordering should pass the output of :func:`permute_by_degree`.
    """
    opts = opts or SolverOptions()
    started = time.perf_counter()
    best, stats, optimal = _search(g, opts, started)
    stats.elapsed = time.perf_counter() - started
    members = frozenset(g.labels[v] for v in best)
    return Solution(members, len(members), stats, optimal)


def solve_max_k_clique(g: Graph, k: int, opts: SolverOptions | None = None) -> Solution:
    """Maximum k-clique of ``g``, reported in ``g``'s labels.

    Builds G^k, orders it by non-increasing degree in G^k and runs the clique
    search.  Elapsed time covers all of this preprocessing.
    """
    opts = opts or SolverOptions()
    started = time.perf_counter()
    gk = power_graph(g, k)
    if log.isEnabledFor(logging.DEBUG) and is_saturated(gk):
        # Still searched, so node counts stay comparable across instances.
        log.debug("G^%d is a disjoint union of cliques", k)
    permuted, perm = permute_by_degree(gk)
    best, stats, optimal = _search(permuted, opts, started)
    stats.elapsed = time.perf_counter() - started
    members = frozenset(g.labels[perm.inverse[v]] for v in best)
    return Solution(members, len(members), stats, optimal)
