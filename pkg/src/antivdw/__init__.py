"""Exact anti-van der Waerden numbers of graphs."""

__version__ = "0.1.0"

from .ap_engine import APIndex, KAP, enumerate_k_aps, find_rainbow_k_ap, is_rainbow
from .graph_core import (INF, DistanceMatrix, DistanceProfile, Graph, connected_components,
                         distance_matrix, distance_profile, shortest_path)
from .solver import AwResult, Coloring, aw, aw_disconnected, exists_rainbow_free_exact

__all__ = [
    "APIndex", "AwResult", "Coloring", "DistanceMatrix", "DistanceProfile", "Graph", "INF",
    "KAP", "aw", "aw_disconnected", "connected_components", "distance_matrix",
    "distance_profile", "enumerate_k_aps", "exists_rainbow_free_exact", "find_rainbow_k_ap",
    "is_rainbow", "shortest_path",
]
