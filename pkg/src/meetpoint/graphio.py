"""Plain-text graph instances.

Line-oriented and diff-friendly:

    v <vertex_count> <channel> [channel ...]
    e <from> <to> <weight per channel>
    u <vertex> [priority score per channel]

``e`` lines describe undirected roads and expand to both directions.
Blank lines and ``#`` comments are ignored. Integer weights are kept as
integers so distances stay exact.
"""

from __future__ import annotations

from .errors import MeetpointError
from .graph import Graph, build_graph
from .scoring import PreferenceProfile


class GraphFileError(MeetpointError):
    pass


def _number(token: str) -> float:
    try:
        return int(token)
    except ValueError:
        return float(token)


def parse_graph_file(text: str) -> tuple[Graph, tuple[int, ...], PreferenceProfile | None]:
    """Parse instance text into (graph, user positions, optional profile)."""
    vertex_count: int | None = None
    channels: tuple[str, ...] = ()
    edges: list[tuple[int, int, tuple[float, ...]]] = []
    users: list[int] = []
    score_rows: list[tuple[int, ...] | None] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        kind, args = parts[0], parts[1:]
        try:
            if kind == "v":
                if vertex_count is not None:
                    raise GraphFileError("duplicate 'v' line")
                vertex_count = int(args[0])
                channels = tuple(args[1:]) or ("distance",)
            elif kind == "e":
                if vertex_count is None:
                    raise GraphFileError("'e' before 'v'")
                u, v = int(args[0]), int(args[1])
                weights = tuple(_number(tok) for tok in args[2:])
                if len(weights) != len(channels):
                    raise GraphFileError(
                        f"expected {len(channels)} weights, got {len(weights)}"
                    )
                edges.append((u, v, weights))
            elif kind == "u":
                if vertex_count is None:
                    raise GraphFileError("'u' before 'v'")
                users.append(int(args[0]))
                scores = tuple(int(tok) for tok in args[1:])
                score_rows.append(scores or None)
            else:
                raise GraphFileError(f"unknown record {kind!r}")
        except (ValueError, IndexError) as exc:
            raise GraphFileError(f"line {lineno}: {raw!r}: {exc}") from None
        except GraphFileError as exc:
            raise GraphFileError(f"line {lineno}: {exc}") from None

    if vertex_count is None:
        raise GraphFileError("missing 'v' line")
    graph = build_graph(vertex_count, edges, channels, undirected=True)

    profile = None
    scored = [row for row in score_rows if row is not None]
    if scored:
        if len(scored) != len(score_rows):
            raise GraphFileError("either every 'u' line carries scores or none does")
        for row in scored:
            if len(row) != len(channels):
                raise GraphFileError(
                    f"score row {row} does not match {len(channels)} channels"
                )
        profile = PreferenceProfile(channels, tuple(scored))
    return graph, tuple(users), profile
