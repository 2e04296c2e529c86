"""Weighted directed graphs over dense integer vertex ids."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import EmptyChannelList, InvalidEdgeEndpoint, NegativeWeight, UnknownChannel

# (from-vertex, to-vertex, one weight per channel)
Edge = tuple[int, int, tuple[float, ...]]


@dataclass(frozen=True)
class Graph:
    """Immutable weighted digraph.

    Every edge carries one finite, non-negative weight per named channel;
    the first channel is conventionally ``"distance"``. Instances are safe
    to share between threads once constructed.
    """

    vertex_count: int
    edges: tuple[Edge, ...]
    channels: tuple[str, ...] = ("distance",)
    _adjacency: tuple[tuple[tuple[int, tuple[float, ...]], ...], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        if not self.channels:
            raise EmptyChannelList("at least one weight channel is required")
        if self.channels[0] != "distance":
            raise ValueError(f"the first channel must be 'distance', got {self.channels[0]!r}")
        width = len(self.channels)
        adjacency: list[list[tuple[int, tuple[float, ...]]]] = [
            [] for _ in range(self.vertex_count)
        ]
        for u, v, weights in self.edges:
            if not (0 <= u < self.vertex_count) or not (0 <= v < self.vertex_count):
                raise InvalidEdgeEndpoint(
                    f"edge ({u}, {v}) out of range for {self.vertex_count} vertices"
                )
            if len(weights) != width:
                raise ValueError(
                    f"edge ({u}, {v}) carries {len(weights)} weights, expected {width}"
                )
            for name, w in zip(self.channels, weights):
                if w < 0 or not math.isfinite(w):
                    raise NegativeWeight(f"edge ({u}, {v}), channel {name!r}: {w!r}")
            adjacency[u].append((v, weights))
        for out in adjacency:
            out.sort(key=lambda entry: entry[0])
        object.__setattr__(self, "_adjacency", tuple(tuple(out) for out in adjacency))

    def channel_index(self, channel: str) -> int:
        try:
            return self.channels.index(channel)
        except ValueError:
            raise UnknownChannel(channel) from None

    def out_edges(self, v: int) -> tuple[tuple[int, tuple[float, ...]], ...]:
        """Outgoing edges of ``v`` as (target, weights), ascending target id."""
        return self._adjacency[v]

    def reverse(self) -> Graph:
        """The same graph with every edge flipped."""
        flipped = tuple((v, u, w) for u, v, w in self.edges)
        return Graph(self.vertex_count, flipped, self.channels)


def build_graph(
    vertex_count: int,
    edges: Iterable[tuple[int, int, object]],
    channels: Sequence[str] = ("distance",),
    *,
    undirected: bool = False,
) -> Graph:
    """Validate and freeze a graph.

    ``edges`` yields (from, to, weight) or (from, to, (w1, w2, ...)) with one
    weight per channel. With ``undirected=True`` each input edge is expanded
    into both directions.
    """
    normalized: list[Edge] = []
    for u, v, w in edges:
        weights = tuple(w) if isinstance(w, (tuple, list)) else (w,)
        normalized.append((u, v, weights))
        if undirected:
            normalized.append((v, u, weights))
    return Graph(vertex_count, tuple(normalized), tuple(channels))


def neighbors(graph: Graph, v: int, channel: str = "distance") -> list[tuple[int, float]]:
    """Outgoing (target, weight) pairs of ``v`` on one channel, ascending target id."""
    ci = graph.channel_index(channel)
    return [(to, weights[ci]) for to, weights in graph.out_edges(v)]
