"""Colorings through clique padding.

Pad every clique of a clique partition to r vertices, drop the edges inside
the cliques and strong-color the rest with the cliques as parts. Restricted to
the original vertices this is a proper coloring with every clique rainbow.
Delta always means the maximum degree of the input graph, never of the padded one.
"""

from typing import Optional

from vtchroma.algorithms.cliques import maximum_cliques
from vtchroma.algorithms.coloring import ceil_div
from vtchroma.algorithms.transversals import strong_coloring
from vtchroma.core.exceptions import (
    CertificateError,
    NotCliquePartitionError,
    PreconditionError,
    StrongColoringInfeasibleError,
)
from vtchroma.core.logging import logger
from vtchroma.models import vertex_set as vs
from vtchroma.models.cliques import CliqueCollection
from vtchroma.models.coloring import Coloring, VertexPartition
from vtchroma.models.graph import Graph


def strip_clique_edges(g: Graph, cliques: CliqueCollection) -> Graph:
    adj = list(g.adj)
    for clique in cliques:
        for v in vs.members(clique):
            adj[v] &= ~clique
    return Graph(g.n, tuple(adj))


def clique_padding_reduction(
    g: Graph, cliques: CliqueCollection, r: int, node_limit: Optional[int] = None
) -> Coloring:
    if not cliques.pairwise_disjoint() or not cliques.covers():
        raise NotCliquePartitionError(
            details=[{"cliques": [vs.to_list(c) for c in cliques], "n": g.n}]
        )
    for clique in cliques:
        if not g.is_clique(clique):
            raise NotCliquePartitionError(f"{vs.to_list(clique)} is not a clique")
    largest = max(cliques.sizes)
    if r < largest:
        raise PreconditionError(f"r={r} is below the largest clique size {largest}")

    stripped = strip_clique_edges(g, cliques)
    partition = VertexPartition(g.n, cliques.cliques)
    result = strong_coloring(stripped, partition, r, node_limit)
    if result is None:
        raise StrongColoringInfeasibleError(
            f"no strong {r}-coloring of the stripped graph for {len(cliques)} cliques"
        )

    coloring = result.restrict()
    if not coloring.is_proper(g) or not all(coloring.is_rainbow(c) for c in cliques):
        raise CertificateError("padded strong coloring does not restrict to a proper coloring")
    logger.debug(f"clique padding to r={r} gave a {coloring.num_colors}-coloring")
    return coloring


def borodin_kostochka_reduction(g: Graph, node_limit: Optional[int] = None) -> Coloring:
    """A (Delta-1)-coloring when the maximum cliques partition V."""
    q = maximum_cliques(g)
    r = g.max_degree - 1
    omega = q.cliques[0].bit_count()
    if omega > r:
        raise PreconditionError(f"omega={omega} exceeds Delta-1={r}")
    return clique_padding_reduction(g, q, r, node_limit)


def main_conjecture_bound(omega: int, delta: int) -> int:
    return max(omega, ceil_div(5 * delta + 3, 6))


def main_conjecture_reduction(g: Graph, node_limit: Optional[int] = None) -> Coloring:
    """A max{omega, ceil((5 Delta + 3) / 6)}-coloring when the maximum cliques partition V."""
    q = maximum_cliques(g)
    omega = q.cliques[0].bit_count()
    return clique_padding_reduction(g, q, main_conjecture_bound(omega, g.max_degree), node_limit)
