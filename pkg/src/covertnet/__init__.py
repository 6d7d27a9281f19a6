"""Covert-network analysis toolkit.

Builds on a small immutable graph core to provide geodesic distance
metrics, the secrecy-efficiency balance of covert organizations,
exhaustive optimal-structure search, a direct/indirect detection model
with seeded Monte Carlo simulation, and network construction from actor
knowledge profiles.
"""

from .affiliation import ActorProfile, TieRule, build_from_actors
from .detection import (
    DetectionParams,
    DetectionReport,
    InfeasiblePlanError,
    PlanVerdict,
    ScrutinyPlan,
    detect_exact,
    simulate,
    validate_plan,
)
from .graph import (
    UNREACHABLE,
    DisconnectedGraphError,
    DistanceMatrix,
    Graph,
    GraphError,
    build_graph,
    community,
    diameter,
    geodesic_distances,
    is_connected,
    total_distance,
)
from .measures import (
    MeasureReport,
    SecrecyParams,
    balance,
    exposure_fractions,
    hidden_knowledge,
    information_measure,
    make_hierarchy,
    make_structure,
)
from .search import (
    LemmaCheckRow,
    LemmaReport,
    SearchResult,
    enumerate_connected,
    find_optimal,
    verify_lemma,
)

__version__ = "0.1.0"

__all__ = [
    "ActorProfile",
    "DetectionParams",
    "DetectionReport",
    "DisconnectedGraphError",
    "DistanceMatrix",
    "Graph",
    "GraphError",
    "InfeasiblePlanError",
    "LemmaCheckRow",
    "LemmaReport",
    "MeasureReport",
    "PlanVerdict",
    "ScrutinyPlan",
    "SearchResult",
    "SecrecyParams",
    "TieRule",
    "UNREACHABLE",
    "balance",
    "build_from_actors",
    "build_graph",
    "community",
    "detect_exact",
    "diameter",
    "enumerate_connected",
    "exposure_fractions",
    "find_optimal",
    "geodesic_distances",
    "hidden_knowledge",
    "information_measure",
    "is_connected",
    "make_hierarchy",
    "make_structure",
    "simulate",
    "total_distance",
    "verify_lemma",
]
