"""Single-source shortest paths and the per-user distance matrix."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from heapq import heappop, heappush
from typing import Iterator, Sequence

from .errors import EmptySources, InvalidSource
from .graph import Graph

# Sentinel for "no path"; kept out of arithmetic (callers test for it).
UNREACHABLE = math.inf


@dataclass(frozen=True)
class DistanceRow:
    """Shortest distances from one source to every vertex."""

    source: int
    distances: tuple[float, ...]


@dataclass(frozen=True)
class DistanceMatrix:
    """One DistanceRow per user, all over the same graph and channel.

    This is deliberately partial: rows cover the users, not every vertex.
    """

    rows: tuple[DistanceRow, ...]
    channel: str

    @property
    def user_count(self) -> int:
        return len(self.rows)

    @property
    def vertex_count(self) -> int:
        return len(self.rows[0].distances) if self.rows else 0


@dataclass(frozen=True)
class ReachabilitySet:
    """Per-user sets of vertices with a finite distance."""

    masks: tuple[frozenset[int], ...]

    @classmethod
    def from_matrix(cls, matrix: DistanceMatrix) -> "ReachabilitySet":
        return cls(tuple(
            frozenset(v for v, d in enumerate(row.distances) if d != UNREACHABLE)
            for row in matrix.rows
        ))

    def mutual(self) -> frozenset[int]:
        """Vertices reachable by every user."""
        if not self.masks:
            return frozenset()
        common = self.masks[0]
        for mask in self.masks[1:]:
            common &= mask
        return common


def _search(graph: Graph, source: int, channel_index: int) -> Iterator[tuple[int, float]]:
    """Yield (vertex, distance) in settle order.

    Classic heap-driven search with lazy deletion: stale queue entries are
    skipped via the visited list. Equal tentative distances settle in
    ascending vertex-id order because the heap keys are (distance, vertex).
    """
    n = graph.vertex_count
    best = [UNREACHABLE] * n
    best[source] = 0
    visited = [False] * n
    heap: list[tuple[float, int]] = [(0, source)]
    while heap:
        dist, u = heappop(heap)
        if visited[u]:
            continue
        visited[u] = True
        yield u, dist
        for v, weights in graph.out_edges(u):
            if visited[v]:
                continue
            candidate = dist + weights[channel_index]
            if candidate < best[v]:
                best[v] = candidate
                heappush(heap, (candidate, v))


def dijkstra_row(graph: Graph, source: int, channel: str = "distance") -> DistanceRow:
    """Exact shortest distances from ``source``; no-path entries are UNREACHABLE.

    Distances stay exact integers whenever all channel weights are integers.
    """
    if not 0 <= source < graph.vertex_count:
        raise InvalidSource(f"source {source} out of range for {graph.vertex_count} vertices")
    ci = graph.channel_index(channel)
    distances = [UNREACHABLE] * graph.vertex_count
    for v, d in _search(graph, source, ci):
        distances[v] = d
    return DistanceRow(source, tuple(distances))


def build_partial_matrix(
    graph: Graph,
    sources: Sequence[int],
    channel: str = "distance",
    *,
    parallelism: int = 1,
) -> DistanceMatrix:
    """One dijkstra_row per source, in source order.

    Rows are independent; with ``parallelism > 1`` they are computed on a
    thread pool and merged back in source order, so the result is identical
    to the sequential one.
    """
    if not sources:
        raise EmptySources("at least one source is required")
    if parallelism > 1:
        with ThreadPoolExecutor(max_workers=parallelism) as pool:
            rows = tuple(pool.map(lambda s: dijkstra_row(graph, s, channel), sources))
    else:
        rows = tuple(dijkstra_row(graph, s, channel) for s in sources)
    return DistanceMatrix(rows, channel)
