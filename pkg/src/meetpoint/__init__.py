"""Meeting-point planning for multiple users on weighted graphs and grid maps.

Per user, a single-source shortest-path search fills one row of a partial
distance matrix; vertex scores for total travel and travel disparity are
blended and the best mutually reachable vertex becomes the destination. The
``sim`` module replays that selection every tick while users walk, and the
``oracle`` module provides slow exhaustive baselines for verification.
"""

from .errors import MeetpointError
from .graph import Graph, build_graph, neighbors
from .gridmap import GridMap, parse_grid_map, render_frame, render_map, render_trace_frames
from .oracle import AllPairsMatrix, brute_force_destination, floyd_all_pairs
from .scoring import (
    ObjectiveWeights,
    PlanResult,
    PreferenceProfile,
    ScoreVector,
    blend_objectives,
    combine,
    normalize,
    plan_destination,
    priority_weights,
    select_destination,
    similarity_penalty,
    total_distance,
)
from .shortest_paths import (
    UNREACHABLE,
    DistanceMatrix,
    DistanceRow,
    ReachabilitySet,
    build_partial_matrix,
    dijkstra_row,
)
from .sim import SimState, SimTrace, next_move, parse_trace, serialize_trace

__version__ = "0.1.0"

__all__ = [
    "AllPairsMatrix",
    "DistanceMatrix",
    "DistanceRow",
    "Graph",
    "GridMap",
    "MeetpointError",
    "ObjectiveWeights",
    "PlanResult",
    "PreferenceProfile",
    "ReachabilitySet",
    "ScoreVector",
    "SimState",
    "SimTrace",
    "UNREACHABLE",
    "blend_objectives",
    "brute_force_destination",
    "build_graph",
    "build_partial_matrix",
    "combine",
    "dijkstra_row",
    "floyd_all_pairs",
    "neighbors",
    "next_move",
    "normalize",
    "parse_grid_map",
    "parse_trace",
    "plan_destination",
    "priority_weights",
    "render_frame",
    "render_map",
    "render_trace_frames",
    "select_destination",
    "serialize_trace",
    "similarity_penalty",
    "total_distance",
]
