"""Exact arithmetic certificates for graphs determined by their generalized spectrum."""

from .criteria import Mode, Status, Verdict, analyze, analyze_all, compute_invariants
from .graphio import Graph, complement, parse_adjacency, parse_graph6, random_gnp_half, to_graph6

__all__ = [
    "Graph",
    "Mode",
    "Status",
    "Verdict",
    "analyze",
    "analyze_all",
    "complement",
    "compute_invariants",
    "parse_adjacency",
    "parse_graph6",
    "random_gnp_half",
    "to_graph6",
]

__version__ = "0.1.0"
