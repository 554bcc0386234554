"""Exact longest-cycle machinery and verification harness for 1-tough graphs."""

from toughcycles.graph import Graph, parse_edge_list, parse_graph6, write_graph6
from toughcycles.kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "Graph", "parse_edge_list", "parse_graph6", "write_graph6"]
