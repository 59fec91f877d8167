import networkx as nx
import pytest

from vtchroma.algorithms.generators import cartesian_product, complete, cycle, from_edges, hajos_graph, kneser
from vtchroma.models.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(h.nodes())}
    return from_edges(len(index), [(index[u], index[v]) for u, v in h.edges()])


@pytest.fixture
def petersen() -> Graph:
    return kneser(5, 2)


@pytest.fixture
def c5() -> Graph:
    return cycle(5)


@pytest.fixture
def prism() -> Graph:
    """K_3 x K_2: two disjoint triangles joined by a perfect matching."""
    return cartesian_product(complete(3), complete(2))


@pytest.fixture
def h11() -> Graph:
    return hajos_graph(11)


@pytest.fixture
def two_cliques_sharing_three() -> Graph:
    """Two 4-cliques on {0,1,2,3} and {1,2,3,4}: Delta = 4, omega = 4."""
    edges = [(u, v) for u in range(5) for v in range(u + 1, 5) if (u, v) != (0, 4)]
    return from_edges(5, edges)
