"""Destination scoring: total travel, travel disparity, blending, selection.

Scores come in per-vertex vectors. ``total_distance`` sums every user's
shortest distance into a vertex; ``similarity_penalty`` sums the pairwise
absolute differences of those distances, so it is zero exactly where all
users travel equally far. The two are combined as weighted shares of their
own sums, and the lowest-scoring vertex reachable by everyone wins.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Literal, Sequence

from .errors import (
    AllZeroScores,
    EmptyMatrix,
    LengthMismatch,
    NoCandidate,
    NoMutuallyReachableVertex,
    NonFiniteEntry,
    ShapeMismatch,
    ZeroSum,
)
from .graph import Graph
from .shortest_paths import (
    UNREACHABLE,
    DistanceMatrix,
    DistanceRow,
    ReachabilitySet,
    build_partial_matrix,
)

MAX_PRIORITY_SCORE = 5

Kind = Literal["total", "similarity", "combined"]


@dataclass(frozen=True)
class ScoreVector:
    values: tuple[float, ...]
    kind: Kind


@dataclass(frozen=True)
class PreferenceProfile:
    """Per-user priority scores, one integer in 0..5 per objective."""

    objectives: tuple[str, ...]
    scores: tuple[tuple[int, ...], ...]  # scores[user][objective]

    def __post_init__(self) -> None:
        if not self.objectives:
            raise ValueError("at least one objective is required")
        for row in self.scores:
            if len(row) != len(self.objectives):
                raise ValueError(
                    f"score row {row} does not match {len(self.objectives)} objectives"
                )
            for s in row:
                if not 0 <= s <= MAX_PRIORITY_SCORE:
                    raise ValueError(f"priority score {s} outside 0..{MAX_PRIORITY_SCORE}")


@dataclass(frozen=True)
class ObjectiveWeights:
    """Convex weights for the two score terms: alpha total, beta disparity."""

    alpha: float = 0.5
    beta: float = 0.5

    def __post_init__(self) -> None:
        if self.alpha < 0 or self.beta < 0:
            raise ValueError("weights must be non-negative")
        if abs(self.alpha + self.beta - 1.0) > 1e-9:
            raise ValueError(f"weights must sum to 1, got {self.alpha} + {self.beta}")


def total_distance(matrix: DistanceMatrix) -> ScoreVector:
    """Column sums over user rows; any unreachable entry poisons its column.

    Sums use math.fsum, so the result is bit-identical under any user order.
    """
    if not matrix.rows:
        raise EmptyMatrix("matrix has no rows")
    values = []
    for v in range(matrix.vertex_count):
        column = [row.distances[v] for row in matrix.rows]
        values.append(UNREACHABLE if UNREACHABLE in column else math.fsum(column))
    return ScoreVector(tuple(values), "total")


def similarity_penalty(matrix: DistanceMatrix) -> ScoreVector:
    """Per-vertex sum of |distance difference| over unordered user pairs.

    Zero everywhere for a single user; unreachable columns stay unreachable.
    """
    if not matrix.rows:
        raise EmptyMatrix("matrix has no rows")
    rows = matrix.rows
    pairs = list(combinations(range(len(rows)), 2))
    values = []
    for v in range(matrix.vertex_count):
        column = [row.distances[v] for row in rows]
        if UNREACHABLE in column:
            values.append(UNREACHABLE)
            continue
        values.append(math.fsum(abs(column[a] - column[b]) for a, b in pairs))
    return ScoreVector(tuple(values), "similarity")


def normalize(values: Sequence[float]) -> list[float]:
    """Entry-wise (1 - x/sum) / 2; expects finite, non-negative entries.

    Outputs lie in [0, 0.5] and decrease as the raw entry grows, so cheaper
    entries map to larger normalized values.
    """
    for x in values:
        if not math.isfinite(x):
            raise NonFiniteEntry(f"cannot normalize {x!r}")
    total = math.fsum(values)
    if total <= 0:
        raise ZeroSum("normalization needs a positive sum")
    return [(1 - x / total) / 2 for x in values]


def priority_weights(profile: PreferenceProfile) -> tuple[float, ...]:
    """Convex per-objective weights proportional to summed priority scores."""
    totals = [
        sum(row[k] for row in profile.scores)
        for k in range(len(profile.objectives))
    ]
    grand = sum(totals)
    if grand == 0:
        raise AllZeroScores("every priority score is zero")
    return tuple(t / grand for t in totals)


def blend_objectives(
    matrices: Sequence[DistanceMatrix], weights: Sequence[float]
) -> DistanceMatrix:
    """Entry-wise weighted sum of per-objective matrices.

    Any unreachable entry makes the blended entry unreachable. A single
    matrix with weight 1 is returned unchanged, keeping integer distances
    exact.
    """
    if len(matrices) != len(weights):
        raise ShapeMismatch(f"{len(matrices)} matrices vs {len(weights)} weights")
    if not matrices:
        raise ShapeMismatch("no matrices to blend")
    first = matrices[0]
    for m in matrices[1:]:
        if m.user_count != first.user_count or m.vertex_count != first.vertex_count:
            raise ShapeMismatch("matrices differ in user or vertex count")
        for row, ref in zip(m.rows, first.rows):
            if row.source != ref.source:
                raise ShapeMismatch("matrices disagree on user order")
    if len(matrices) == 1 and weights[0] == 1:
        return first

    blended_rows = []
    for i in range(first.user_count):
        entries = []
        for v in range(first.vertex_count):
            cell = [m.rows[i].distances[v] for m in matrices]
            if UNREACHABLE in cell:
                entries.append(UNREACHABLE)
                continue
            acc = 0.0
            for w, d in zip(weights, cell):
                acc += w * d
            entries.append(acc)
        blended_rows.append(DistanceRow(first.rows[i].source, tuple(entries)))
    channel = "+".join(m.channel for m in matrices)
    return DistanceMatrix(tuple(blended_rows), channel)


def combine(
    d_total: ScoreVector, d_sim: ScoreVector, weights: ObjectiveWeights
) -> ScoreVector:
    """Weighted sum of each vector's share of its own total.

    Only vertices finite in both vectors count; a term whose sum is zero
    (e.g. a single user's disparity) contributes nothing rather than failing.
    The argmin of this combination is the argmax of the normalize() form.
    """
    if len(d_total.values) != len(d_sim.values):
        raise LengthMismatch(
            f"{len(d_total.values)} total entries vs {len(d_sim.values)} disparity entries"
        )
    finite = [
        v
        for v in range(len(d_total.values))
        if d_total.values[v] != UNREACHABLE and d_sim.values[v] != UNREACHABLE
    ]
    if not finite:
        raise NoMutuallyReachableVertex("no vertex is reachable by every user")
    sum_total = math.fsum(d_total.values[v] for v in finite)
    sum_sim = math.fsum(d_sim.values[v] for v in finite)

    values = [UNREACHABLE] * len(d_total.values)
    for v in finite:
        score = 0.0
        if sum_total > 0:
            score += weights.alpha * (d_total.values[v] / sum_total)
        if sum_sim > 0:
            score += weights.beta * (d_sim.values[v] / sum_sim)
        values[v] = score
    return ScoreVector(tuple(values), "combined")


def select_destination(combined: ScoreVector, reachability: ReachabilitySet) -> int:
    """Lowest-id vertex with the minimal combined score among mutually reachable ones."""
    candidates = reachability.mutual()
    best_vertex = -1
    best_score = UNREACHABLE
    for v, score in enumerate(combined.values):
        if score == UNREACHABLE or v not in candidates:
            continue
        if score < best_score:
            best_score = score
            best_vertex = v
    if best_vertex < 0:
        raise NoCandidate("no vertex is reachable by every user")
    return best_vertex


@dataclass(frozen=True)
class PlanResult:
    """Everything the selection pipeline produced for one set of positions."""

    destination: int
    matrix: DistanceMatrix
    d_total: ScoreVector
    d_sim: ScoreVector
    combined: ScoreVector
    objective_weights: tuple[float, ...]


def plan_destination(
    graph: Graph,
    positions: Sequence[int],
    profile: PreferenceProfile | None = None,
    weights: ObjectiveWeights | None = None,
    *,
    parallelism: int = 1,
) -> PlanResult:
    """Full selection pipeline from current user positions.

    Builds one distance matrix per objective channel, blends them with the
    profile's priority weights, scores every vertex and picks the argmin.
    Without a profile only the ``distance`` channel is used.
    """
    weights = weights if weights is not None else ObjectiveWeights()
    if profile is None:
        channels: tuple[str, ...] = ("distance",)
        obj_weights: tuple[float, ...] = (1.0,)
    else:
        channels = profile.objectives
        obj_weights = priority_weights(profile)
    matrices = [
        build_partial_matrix(graph, positions, ch, parallelism=parallelism)
        for ch in channels
    ]
    blended = blend_objectives(matrices, obj_weights)
    d_total = total_distance(blended)
    d_sim = similarity_penalty(blended)
    try:
        combined = combine(d_total, d_sim, weights)
    except NoMutuallyReachableVertex as exc:
        # pipeline callers deal in candidates, not vector-level diagnostics
        raise NoCandidate(str(exc)) from None
    destination = select_destination(combined, ReachabilitySet.from_matrix(blended))
    return PlanResult(destination, blended, d_total, d_sim, combined, obj_weights)
