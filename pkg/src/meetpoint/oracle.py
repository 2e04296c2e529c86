"""Ground-truth baselines: all-pairs distances and exhaustive destination search.

These exist to check the fast path and to serve as the slow side of the
benchmark. The selection logic here is written as straight-line loops on
purpose and must not share code with the scoring module.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Sequence

from .errors import AllZeroScores, FloydTimeout, NoCandidate
from .graph import Graph
from .scoring import ObjectiveWeights, PreferenceProfile


@dataclass(frozen=True)
class AllPairsMatrix:
    """Dense vertex-by-vertex shortest-distance table."""

    distances: tuple[tuple[float, ...], ...]


def floyd_all_pairs(
    graph: Graph, channel: str = "distance", *, deadline: float | None = None
) -> AllPairsMatrix:
    """Exact all-pairs shortest distances via the classic triple loop.

    ``deadline`` (a time.perf_counter value) aborts runs that would take
    hours on large graphs; the benchmark harness uses it to censor cells.
    """
    ci = graph.channel_index(channel)
    n = graph.vertex_count
    dist = [[math.inf] * n for _ in range(n)]
    for i in range(n):
        dist[i][i] = 0
    for u, v, weights in graph.edges:
        w = weights[ci]
        if w < dist[u][v]:
            dist[u][v] = w

    for k in range(n):
        if deadline is not None and time.perf_counter() > deadline:
            raise FloydTimeout(f"aborted at pivot {k}/{n}")
        row_k = dist[k]
        for i in range(n):
            d_ik = dist[i][k]
            if d_ik == math.inf:
                continue
            row_i = dist[i]
            for j in range(n):
                candidate = d_ik + row_k[j]
                if candidate < row_i[j]:
                    row_i[j] = candidate
    return AllPairsMatrix(tuple(tuple(row) for row in dist))


def brute_force_destination(
    graph: Graph,
    users: Sequence[int],
    profile: PreferenceProfile | None = None,
    weights: ObjectiveWeights | None = None,
    *,
    deadline: float | None = None,
) -> int:
    """Meeting vertex by full enumeration over the all-pairs matrix."""
    alpha = weights.alpha if weights is not None else 0.5
    beta = weights.beta if weights is not None else 0.5
    channels = profile.objectives if profile is not None else ("distance",)
    full = [floyd_all_pairs(graph, ch, deadline=deadline) for ch in channels]

    if profile is None:
        obj_weights = [1.0]
    else:
        totals = [
            sum(row[k] for row in profile.scores)
            for k in range(len(channels))
        ]
        grand = sum(totals)
        if grand == 0:
            raise AllZeroScores("every priority score is zero")
        obj_weights = [t / grand for t in totals]

    n = graph.vertex_count
    blended = []
    for position in users:
        entries = []
        for v in range(n):
            cell = [full[k].distances[position][v] for k in range(len(channels))]
            if math.inf in cell:
                entries.append(math.inf)
            elif len(channels) == 1:
                entries.append(cell[0])
            else:
                acc = 0.0
                for w, d in zip(obj_weights, cell):
                    acc += w * d
                entries.append(acc)
        blended.append(entries)

    totals_by_vertex = []
    disparity_by_vertex = []
    for v in range(n):
        if any(blended[a][v] == math.inf for a in range(len(users))):
            totals_by_vertex.append(math.inf)
            disparity_by_vertex.append(math.inf)
            continue
        totals_by_vertex.append(math.fsum(blended[a][v] for a in range(len(users))))
        disparity_by_vertex.append(math.fsum(
            abs(blended[a][v] - blended[b][v])
            for a in range(len(users))
            for b in range(a + 1, len(users))
        ))

    finite = [v for v in range(n) if totals_by_vertex[v] != math.inf]
    if not finite:
        raise NoCandidate("no vertex is reachable by every user")
    sum_total = math.fsum(totals_by_vertex[v] for v in finite)
    sum_sim = math.fsum(disparity_by_vertex[v] for v in finite)

    best_vertex = -1
    best_score = math.inf
    for v in finite:
        score = 0.0
        if sum_total > 0:
            score += alpha * (totals_by_vertex[v] / sum_total)
        if sum_sim > 0:
            score += beta * (disparity_by_vertex[v] / sum_sim)
        if score < best_score:
            best_score = score
            best_vertex = v
    return best_vertex
