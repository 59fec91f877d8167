"""Vertex sets as Python int bitmasks: bit v set <=> vertex v is a member."""

from typing import Iterable, Iterator

VertexSet = int

EMPTY: VertexSet = 0


def lowest(mask: VertexSet) -> int:
    return (mask & -mask).bit_length() - 1


def members(mask: VertexSet) -> Iterator[int]:
    """Yield member vertices in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_list(mask: VertexSet) -> list[int]:
    return list(members(mask))


def from_vertices(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def full(n: int) -> VertexSet:
    return (1 << n) - 1


def size(mask: VertexSet) -> int:
    return mask.bit_count()
