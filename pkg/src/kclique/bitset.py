"""Vertex sets stored as Python integers, bit ``i`` standing for vertex ``i``.

Python ints give arbitrary-width bitsets with native ``&``, ``|``, ``~`` and
population count, so a VertexSet is just an ``int``.  These helpers cover the
few operations that are not a single operator.
"""

from __future__ import annotations

from typing import Iterable, Iterator

VertexSet = int

EMPTY: VertexSet = 0


def from_vertices(vertices: Iterable[int]) -> VertexSet:
    bits = 0
    for v in vertices:
        bits |= 1 << v
    return bits


def full(n: int) -> VertexSet:
    """The set {0, ..., n-1}."""
    return (1 << n) - 1


def iter_bits(bits: VertexSet) -> Iterator[int]:
    """Yield members in ascending order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def to_list(bits: VertexSet) -> list[int]:
    return list(iter_bits(bits))


def first(bits: VertexSet) -> int:
    """Lowest member, or -1 for the empty set."""
    return (bits & -bits).bit_length() - 1


def popcount(bits: VertexSet) -> int:
    return bits.bit_count()


def contains(bits: VertexSet, v: int) -> bool:
    return (bits >> v) & 1 == 1
