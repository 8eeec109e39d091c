"""Skewness of graphs: planarity, counting certificates, explicit constructions
and exact search."""

from __future__ import annotations

from skewcert.certify import (
    EdgeWeighting,
    SkewnessCertificate,
    classify_cycle,
    counting_bound,
    enumerate_min_cycles,
    face_weight_audit,
    weighted_girth,
)
from skewcert.graph import Graph, GraphError
from skewcert.planarity import BACKEND, embed, is_planar, kuratowski_witness
from skewcert.solver import SkewnessResult, skewness_bruteforce, skewness_exact, skewness_heuristic

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "EdgeWeighting",
    "Graph",
    "GraphError",
    "SkewnessCertificate",
    "SkewnessResult",
    "classify_cycle",
    "counting_bound",
    "embed",
    "enumerate_min_cycles",
    "face_weight_audit",
    "is_planar",
    "kuratowski_witness",
    "skewness_bruteforce",
    "skewness_exact",
    "skewness_heuristic",
    "weighted_girth",
]
