"""Graph constructions: elementary families plus the ones the coloring bounds are tested on.

Vertex order is part of the contract: join and disjoint_union put g's vertices
first, blow_up keeps each block B_v consecutive (block v is m*v .. m*v+m-1).
"""

import itertools
import math
import random
from typing import Iterable, Optional

from vtchroma.core.exceptions import GraphValidationError
from vtchroma.models import vertex_set as vs
from vtchroma.models.graph import Graph, Multigraph, check_capacity
from vtchroma.models.permutation import Permutation
from vtchroma.models.vertex_set import VertexSet


def from_edges(
    n: int, edges: Iterable[tuple[int, int]], capacity: Optional[int] = None
) -> Graph:
    check_capacity(n, capacity)
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphValidationError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise GraphValidationError(f"loop edge at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty(n: int) -> Graph:
    check_capacity(n)
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    check_capacity(n)
    universe = vs.full(n)
    return Graph(n, tuple(universe & ~(1 << v) for v in range(n)))


def path(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphValidationError(f"a cycle needs at least 3 vertices, got {n}")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complement(g: Graph) -> Graph:
    universe = g.vertices
    return Graph(g.n, tuple(universe & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    check_capacity(g.n + h.n)
    shifted = tuple(row << g.n for row in h.adj)
    return Graph(g.n + h.n, g.adj + shifted)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between V(g) and V(h)."""
    check_capacity(g.n + h.n)
    g_side = vs.full(g.n)
    h_side = vs.full(h.n) << g.n
    adj = tuple(row | h_side for row in g.adj) + tuple((row << g.n) | g_side for row in h.adj)
    return Graph(g.n + h.n, adj)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """g □ h with vertex (a, b) numbered a*h.n + b."""
    check_capacity(g.n * h.n)
    edges = []
    for a in range(g.n):
        for b, c in h.edges():
            edges.append((a * h.n + b, a * h.n + c))
    for a, b in g.edges():
        for c in range(h.n):
            edges.append((a * h.n + c, b * h.n + c))
    return from_edges(g.n * h.n, edges)


def induced_subgraph(g: Graph, mask: VertexSet) -> tuple[Graph, list[int]]:
    """Subgraph on mask, renumbered 0..k-1 in increasing order; also returns the old labels."""
    old = vs.to_list(mask)
    index = {v: i for i, v in enumerate(old)}
    adj = []
    for v in old:
        adj.append(vs.from_vertices(index[u] for u in vs.members(g.adj[v] & mask)))
    return Graph(len(old), tuple(adj)), old


def relabel(g: Graph, image: Iterable[int]) -> Graph:
    return Permutation(tuple(image)).apply(g)


def connected_components(g: Graph) -> list[VertexSet]:
    out = []
    remaining = g.vertices
    while remaining:
        comp = g.component_of(vs.lowest(remaining))
        out.append(comp)
        remaining &= ~comp
    return out


def line_graph(m: Multigraph) -> Graph:
    """One vertex per edge instance; instances sharing an endpoint are adjacent."""
    m.validate()
    if not m.edges:
        raise GraphValidationError("line graph of an edgeless multigraph")
    k = len(m.edges)
    check_capacity(k)
    incident: list[VertexSet] = [0] * m.n
    for i, (u, v) in enumerate(m.edges):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    adj = tuple(
        (incident[u] | incident[v]) & ~(1 << i) for i, (u, v) in enumerate(m.edges)
    )
    return Graph(k, adj)


def blow_up(g: Graph, m: int) -> Graph:
    """Replace each vertex by K_m; blocks of adjacent vertices are fully joined."""
    if m < 1:
        raise GraphValidationError(f"blow-up size must be at least 1, got {m}")
    check_capacity(g.n * m)
    block = vs.full(m)
    adj = []
    for v in range(g.n):
        outside = 0
        for u in vs.members(g.adj[v]):
            outside |= block << (u * m)
        own = block << (v * m)
        for i in range(m):
            adj.append(outside | own & ~(1 << (v * m + i)))
    return Graph(g.n * m, tuple(adj))


def circulant(n: int, gens: Iterable[int]) -> Graph:
    gens = set(gens)
    check_capacity(n)
    for s in gens:
        if not 1 <= s <= n // 2:
            raise GraphValidationError(f"offset {s} out of range 1..{n // 2} for n={n}")
    edges = [(i, (i + s) % n) for i in range(n) for s in gens]
    return from_edges(n, edges)


def kneser(n: int, k: int) -> Graph:
    """k-subsets of range(n) in lexicographic order, adjacent iff disjoint."""
    if k < 1 or n < 2 * k:
        raise GraphValidationError(f"kneser({n},{k}) requires k >= 1 and n >= 2k")
    subsets = [vs.from_vertices(c) for c in itertools.combinations(range(n), k)]
    check_capacity(len(subsets))
    adj = tuple(
        vs.from_vertices(j for j, t in enumerate(subsets) if not s & t) for s in subsets
    )
    return Graph(len(subsets), adj)


def catlin_multigraph(t: int, k: int) -> Multigraph:
    """kC_{2t+1}: every edge of the odd cycle repeated k times, grouped by position."""
    _check_catlin_params(t, k)
    length = 2 * t + 1
    edges = tuple((i, (i + 1) % length) for i in range(length) for _ in range(k))
    return Multigraph(length, edges)


def catlin(t: int, k: int) -> Graph:
    """G_{t,k} = L(kC_{2t+1}); with this edge order it coincides with blow_up(C_{2t+1}, k)."""
    return line_graph(catlin_multigraph(t, k))


def _check_catlin_params(t: int, k: int) -> None:
    if t < 2 or k < 1:
        raise GraphValidationError(f"catlin({t},{k}) requires t >= 2 and k >= 1")


def hajos_graph(t: int) -> Graph:
    """H_t: K_t joined to a 5-cycle."""
    return join(complete(t), cycle(5))


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return from_edges(
        n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
    )


def circulant_canonical_form(n: int, gens: Iterable[int]) -> tuple[int, ...]:
    """Smallest generator set reachable by multipliers a in Z_n^* (reflection folded in)."""
    best = None
    for a in range(1, n):
        if math.gcd(a, n) != 1:
            continue
        image = tuple(sorted({min(a * s % n, n - a * s % n) for s in gens}))
        if best is None or image < best:
            best = image
    return best if best is not None else tuple(sorted(gens))


def connected_circulant_generators(n: int) -> list[tuple[int, ...]]:
    """One generator set per multiplier class of connected circulants on n vertices."""
    offsets = range(1, n // 2 + 1)
    seen: set[tuple[int, ...]] = set()
    out = []
    for size in range(1, len(offsets) + 1):
        for gens in itertools.combinations(offsets, size):
            if math.gcd(n, *gens) != 1:
                continue
            canon = circulant_canonical_form(n, gens)
            if canon not in seen:
                seen.add(canon)
                out.append(canon)
    return sorted(out)
