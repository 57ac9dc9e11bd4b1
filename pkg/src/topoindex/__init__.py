"""Degree- and distance-based topological indices, graph spectra, tree enumeration
and a verification harness for inequalities between them."""

from .degree_indices import IndexKind, IndexParams, degree_index, log_product
from .distance_indices import DistanceIndexKind, distance_index, general_gutman, mostar, szeged, wiener
from .dsl import edges_spec, parse_graph_spec
from .graph import DegreeSequence, Graph, GraphError, from_edge_list
from .spectral import adjacency_spectrum, eigen_symmetric, energy, vertex_energies

__all__ = [
    "DegreeSequence",
    "DistanceIndexKind",
    "Graph",
    "GraphError",
    "IndexKind",
    "IndexParams",
    "adjacency_spectrum",
    "degree_index",
    "distance_index",
    "edges_spec",
    "eigen_symmetric",
    "energy",
    "from_edge_list",
    "general_gutman",
    "log_product",
    "mostar",
    "parse_graph_spec",
    "szeged",
    "vertex_energies",
    "wiener",
]

__version__ = "0.1.0"
