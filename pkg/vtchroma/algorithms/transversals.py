"""Independent transversals and strong colorings of vertex partitions."""

from dataclasses import dataclass
from typing import Iterator, Optional

from vtchroma.algorithms.coloring import ceil_div, find_k_coloring
from vtchroma.core.config import settings
from vtchroma.core.exceptions import BudgetExceededError, PartitionError, PreconditionError
from vtchroma.core.logging import logger
from vtchroma.models import vertex_set as vs
from vtchroma.models.coloring import Coloring, StrongColoring, VertexPartition
from vtchroma.models.graph import Graph, check_capacity
from vtchroma.models.vertex_set import VertexSet


def _check_partition(g: Graph, p: VertexPartition) -> None:
    if p.n != g.n:
        raise PartitionError(f"partition is over {p.n} vertices, graph has {g.n}")


def independent_transversal(
    h: Graph, p: VertexPartition, node_limit: Optional[int] = None
) -> Optional[VertexSet]:
    """One vertex per part, pairwise non-adjacent; None when no such set exists.

    Backtracking always branches on the part with the fewest remaining candidates.
    """
    _check_partition(h, p)
    limit = node_limit or settings.search_node_limit
    nodes = 0

    def extend(open_parts: list[VertexSet], chosen: VertexSet, blocked: VertexSet) -> Optional[VertexSet]:
        nonlocal nodes
        if not open_parts:
            return chosen
        index = min(range(len(open_parts)), key=lambda i: (open_parts[i] & ~blocked).bit_count())
        part = open_parts[index]
        rest = open_parts[:index] + open_parts[index + 1:]
        for v in vs.members(part & ~blocked):
            nodes += 1
            if nodes > limit:
                raise BudgetExceededError("transversal search", limit)
            found = extend(rest, chosen | 1 << v, blocked | h.adj[v] | 1 << v)
            if found is not None:
                return found
        return None

    return extend(list(p.parts), 0, 0)


def _padded(g: Graph, p: VertexPartition, r: int) -> tuple[Graph, VertexPartition]:
    """Complete every part to exactly r vertices with new isolated vertices."""
    total = r * len(p)
    check_capacity(total)
    adj = list(g.adj) + [0] * (total - g.n)
    parts = []
    next_vertex = g.n
    for part in p.parts:
        extra = r - part.bit_count()
        parts.append(part | (vs.full(extra) << next_vertex))
        next_vertex += extra
    return Graph(total, tuple(adj)), VertexPartition(total, tuple(parts))


def strong_coloring(
    g: Graph, p: VertexPartition, r: int, node_limit: Optional[int] = None
) -> Optional[StrongColoring]:
    """A proper r-coloring that is rainbow on every (padded) part, or None if none exists.

    Equivalent to r-coloring g plus a clique on each padded part; the largest
    part is precolored, which only fixes the names of the colors.
    """
    _check_partition(g, p)
    if r < 1:
        raise PreconditionError(f"r must be positive, got {r}")
    oversized = [s for s in p.sizes if s > r]
    if oversized:
        raise PartitionError(f"part of size {max(oversized)} exceeds r={r}")

    padded, parts = _padded(g, p, r)
    adj = list(padded.adj)
    for part in parts.parts:
        for v in vs.members(part):
            adj[v] |= part & ~(1 << v)
    augmented = Graph(padded.n, tuple(adj))

    sizes = p.sizes
    largest = max(range(len(sizes)), key=lambda i: (sizes[i], -i))
    coloring = find_k_coloring(augmented, r, seed=parts.parts[largest], node_limit=node_limit)
    if coloring is None:
        logger.debug(f"no strong {r}-coloring for partition sizes {p.sizes}")
        return None
    return StrongColoring(padded, parts, Coloring(coloring.colors), r, g.n)


def padded_order(n: int, r: int) -> int:
    return r * ceil_div(n, r)


def partitions_into_blocks(n: int, r: int) -> Iterator[tuple[VertexSet, ...]]:
    """Every partition of 0..n-1 into blocks of size r (r divides n), each exactly once."""

    def split(remaining: VertexSet) -> Iterator[tuple[VertexSet, ...]]:
        if not remaining:
            yield ()
            return
        anchor = vs.lowest(remaining)
        rest = remaining & ~(1 << anchor)
        for block in _subsets_of_size(rest, r - 1):
            chosen = block | 1 << anchor
            for tail in split(remaining & ~chosen):
                yield (chosen,) + tail

    yield from split(vs.full(n))


def _subsets_of_size(mask: VertexSet, k: int) -> Iterator[VertexSet]:
    if k == 0:
        yield 0
        return
    if mask.bit_count() < k:
        return
    low = mask & -mask
    for tail in _subsets_of_size(mask ^ low, k - 1):
        yield low | tail
    yield from _subsets_of_size(mask ^ low, k)


@dataclass(frozen=True, slots=True)
class StrongColorabilityResult:
    strongly_colorable: bool
    partitions_checked: int
    witness: Optional[VertexPartition] = None


def strong_chromatic_number_exhaustive(
    g: Graph, r: int, node_limit: Optional[int] = None, max_order: Optional[int] = None
) -> StrongColorabilityResult:
    """Whether g is strongly r-colorable, by trying every partition of the padded graph.

    The witness is the first partition (in enumeration order) with no strong coloring.
    """
    if r < 1:
        raise PreconditionError(f"r must be positive, got {r}")
    total = padded_order(g.n, r)
    cap = max_order or settings.STRONG_EXHAUSTIVE_MAX
    if total > cap:
        raise BudgetExceededError("strong colorability enumeration", cap)

    padded = Graph(total, tuple(list(g.adj) + [0] * (total - g.n)))
    checked = 0
    for blocks in partitions_into_blocks(total, r):
        checked += 1
        partition = VertexPartition(total, blocks)
        if strong_coloring(padded, partition, r, node_limit) is None:
            logger.debug(f"not strongly {r}-colorable: {[vs.to_list(b) for b in blocks]}")
            return StrongColorabilityResult(False, checked, partition)
    return StrongColorabilityResult(True, checked)


def is_strongly_colorable(g: Graph, r: int, node_limit: Optional[int] = None) -> bool:
    return strong_chromatic_number_exhaustive(g, r, node_limit).strongly_colorable
