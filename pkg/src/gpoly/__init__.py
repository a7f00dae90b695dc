"""Exact characteristic, Laplacian and permanental graph polynomials, decks and
deck-based reconstruction."""

from .arith import Poly, lagrange_interpolate, parse_rat
from .graph import (Graph, WeightedGraph, delete_edge, delete_vertex_pair, edge_deck,
                    parse_graph6, to_graph6, vertex_pair_deck)
from .linalg import RatMatrix, charpoly, det, mask, minor, perm, permpoly
from .polys import Kind, sigma, tau, tau_weighted
from .reconstruct import DeckBundle, ReconstructionReport, Status, solve

__all__ = [
    "DeckBundle", "Graph", "Kind", "Poly", "RatMatrix", "ReconstructionReport", "Status",
    "WeightedGraph", "charpoly", "delete_edge", "delete_vertex_pair", "det", "edge_deck",
    "lagrange_interpolate", "mask", "minor", "parse_graph6", "parse_rat", "perm", "permpoly",
    "sigma", "solve", "tau", "tau_weighted", "to_graph6", "vertex_pair_deck",
]
