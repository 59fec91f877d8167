from vtchroma.models.cliques import CliqueCollection, CliqueGraph, ClusterClassification
from vtchroma.models.coloring import (
    Coloring,
    FractionalCertificate,
    StrongColoring,
    VertexPartition,
)
from vtchroma.models.graph import Graph, Multigraph
from vtchroma.models.permutation import OrbitPartition, Permutation
from vtchroma.models.vertex_set import VertexSet
from vtchroma.enums import ClusterKind

__all__ = [
    # Graphs
    "Graph",
    "Multigraph",
    "VertexSet",
    # Symmetry
    "Permutation",
    "OrbitPartition",
    # Cliques
    "CliqueCollection",
    "CliqueGraph",
    "ClusterClassification",
    # Colorings
    "Coloring",
    "FractionalCertificate",
    "StrongColoring",
    "VertexPartition",
    # Enums
    "ClusterKind",
]
