"""Graph representation, instance parsing and writing, generation, and the
degree ordering applied before search.

Vertices are always ``0..n-1`` internally.  Each graph also carries a tuple of
external labels (1-based for DIMACS, file labels for edge lists) so that
solutions can be reported in the caller's terms.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence, TextIO, Union

import numpy as np

from kclique.bitset import VertexSet, iter_bits

# Adjacency bitsets cost n^2 / 8 bytes in total.
MAX_ADJACENCY_BYTES = 8 * 1024**3

Source = Union[str, TextIO, Iterable[str]]


class ParseError(ValueError):
    """Malformed instance file; ``lineno`` is 1-based (0 when not line-specific)."""

    def __init__(self, message: str, lineno: int = 0):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno else message)


class GraphTooLarge(MemoryError):
    pass


def _check_size(n: int) -> None:
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    if n * n // 8 > MAX_ADJACENCY_BYTES:
        raise GraphTooLarge(
            f"{n} vertices need about {n * n // 8 / 1024**3:.1f} GiB of adjacency "
            f"bitsets (limit {MAX_ADJACENCY_BYTES / 1024**3:.0f} GiB)"
        )


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph with per-vertex adjacency bitsets.

    ``adjacency[v]`` is the neighbourhood of ``v`` as an int bitset.  Build
    instances with :meth:`from_edges` (or the parsers), which guarantee
    symmetry and the absence of loops.
    """

    n: int
    adjacency: tuple[VertexSet, ...]
    labels: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency length does not match n")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(self.n)))
        elif len(self.labels) != self.n:
            raise ValueError("labels length does not match n")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[int] | None = None,
    ) -> "Graph":
        """Build from 0-based edge pairs; loops are dropped, duplicates collapse."""
        _check_size(n)
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                continue
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), tuple(labels) if labels is not None else ())

    @cached_property
    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adjacency) // 2

    @cached_property
    def _label_index(self) -> dict[int, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def index_of(self, label: int) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise KeyError(f"no vertex labelled {label!r}") from None

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adjacency[u] >> v) & 1 == 1

    def neighbours(self, v: int) -> list[int]:
        return list(iter_bits(self.adjacency[v]))

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [
            (u, u + 1 + d)
            for u in range(self.n)
            for d in iter_bits(self.adjacency[u] >> (u + 1))
        ]

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def check(self) -> None:
        """Raise AssertionError if symmetry, loop-freeness or range fail."""
        limit = 1 << self.n
        for v, row in enumerate(self.adjacency):
            assert row >= 0 and row < limit, f"vertex {v} has out-of-range neighbours"
            assert not (row >> v) & 1, f"vertex {v} has a loop"
            for w in iter_bits(row):
                assert (self.adjacency[w] >> v) & 1, f"edge {v}-{w} is not symmetric"

    def same_structure(self, other: "Graph") -> bool:
        return self.n == other.n and self.adjacency == other.adjacency

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"


@dataclass(frozen=True)
class Permutation:
    """``forward[old] = new`` and ``inverse[new] = old``."""

    forward: tuple[int, ...]
    inverse: tuple[int, ...]

    @classmethod
    def from_order(cls, order: Sequence[int]) -> "Permutation":
        """``order[new]`` is the old vertex placed at position ``new``."""
        forward = [0] * len(order)
        for new, old in enumerate(order):
            forward[old] = new
        return cls(tuple(forward), tuple(order))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)), tuple(range(n)))


def _lines(source: Source) -> Iterable[str]:
    if isinstance(source, str):
        return io.StringIO(source)
    return source


def parse_dimacs(source: Source) -> Graph:
    """Read the DIMACS clique format (``c``, ``p edge n m``, ``e u v``).

    Vertices are labelled 1..n as in the file.  ``p col`` is accepted as a
    synonym for ``p edge``.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(_lines(source), start=1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise ParseError(f"malformed problem line {line!r}", lineno)
            try:
                n, _m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"non-integer size in {line!r}", lineno) from None
            if n < 0:
                raise ParseError(f"negative vertex count {n}", lineno)
            _check_size(n)
        elif kind == "e":
            if n is None:
                raise ParseError("edge line before problem line", lineno)
            if len(parts) != 3:
                raise ParseError(f"malformed edge line {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"non-integer endpoint in {line!r}", lineno) from None
            for end in (u, v):
                if not 1 <= end <= n:
                    raise ParseError(f"endpoint {end} outside 1..{n}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unrecognised line {line!r}", lineno)
    if n is None:
        raise ParseError("missing problem line 'p edge <n> <m>'")
    return Graph.from_edges(n, edges, labels=range(1, n + 1))


def parse_edge_list(source: Source) -> Graph:
    """Read whitespace-separated integer pairs, ``#`` starting a comment line.

    Labels are numbered densely in order of first appearance; the original
    labels are kept on the graph.
    """
    index: dict[int, int] = {}
    labels: list[int] = []
    edges = []
    for lineno, raw in enumerate(_lines(source), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two labels, got {line!r}", lineno)
        ends = []
        for tok in parts:
            try:
                label = int(tok)
            except ValueError:
                raise ParseError(f"non-integer label {tok!r}", lineno) from None
            if label < 0:
                raise ParseError(f"negative label {label}", lineno)
            if label not in index:
                index[label] = len(labels)
                labels.append(label)
            ends.append(index[label])
        edges.append((ends[0], ends[1]))
    return Graph.from_edges(len(labels), edges, labels=labels)


def write_dimacs(g: Graph, out: TextIO) -> None:
    """Write ``g`` in DIMACS form; vertex ``i`` becomes ``i + 1``."""
    out.write(f"p edge {g.n} {g.edge_count}\n")
    for u, v in g.edges():
        out.write(f"e {u + 1} {v + 1}\n")


def write_edge_list(g: Graph, out: TextIO) -> None:
    """Write ``g`` as labelled pairs that parse back to the same indexing.

    Each vertex first appears as the second token of an edge to a lower
    vertex, or of a ``label label`` loop line when it has none, which keeps
    isolated vertices and first-appearance order intact.
    """
    labels = g.labels
    for v in range(g.n):
        lower = g.adjacency[v] & ((1 << v) - 1)
        if not lower:
            out.write(f"{labels[v]} {labels[v]}\n")
        for u in iter_bits(lower):
            out.write(f"{labels[u]} {labels[v]}\n")


def generate_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p).

    Uses numpy's PCG64 generator seeded with ``seed``.  One uniform double in
    [0, 1) is drawn per pair ``(v, w)``, ``v < w``, in lexicographic order, and
    the edge is present iff the variate is below ``p``.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    _check_size(n)
    rng = np.random.Generator(np.random.PCG64(seed))
    rows, cols = np.triu_indices(n, k=1)
    keep = rng.random(rows.size) < p
    return Graph.from_edges(n, zip(rows[keep].tolist(), cols[keep].tolist()))


def density(g: Graph) -> float:
    """Fraction of distinct vertex pairs joined by an edge (0 when n < 2)."""
    if g.n < 2:
        return 0.0
    return g.edge_count / (g.n * (g.n - 1) / 2)


def permute_by_degree(g: Graph) -> tuple[Graph, Permutation]:
    """Relabel so that degree is non-increasing, ties by ascending index."""
    degrees = g.degrees()
    order = sorted(range(g.n), key=lambda v: -degrees[v])
    perm = Permutation.from_order(order)
    fwd = perm.forward
    adj = []
    for old in order:
        row = 0
        for w in iter_bits(g.adjacency[old]):
            row |= 1 << fwd[w]
        adj.append(row)
    labels = tuple(g.labels[old] for old in order)
    return Graph(g.n, tuple(adj), labels), perm
