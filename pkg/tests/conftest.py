"""Shared builders: seeded random instances, fixture maps, golden files."""

from __future__ import annotations

import random
from pathlib import Path

from meetpoint import ObjectiveWeights, PreferenceProfile, build_graph
from meetpoint.maps import open_map, walled_map, with_random_users, with_stick_users

GOLDEN_DIR = Path(__file__).parent / "golden"

MINI_CORRIDOR = "U U\n"
MINI_SPLIT = "U#U\n"
SMALL_WALLED = (
    "U      \n"
    " ## ## \n"
    " #   # \n"
    "    # U\n"
    "##     \n"
)


def scenario_22x10(user_count: int) -> str:
    return with_random_users(open_map(22, 10), user_count, seed=20 + user_count)


def scenario_88x27(preset: str) -> str:
    base = walled_map(88, 27, wall_fraction=0.12, seed=0)
    if preset == "random":
        return with_random_users(base, 8, seed=88)
    if preset == "stick":
        return with_stick_users(base, 8)
    raise ValueError(f"unknown preset {preset!r}")


# maps small enough for the exhaustive oracle (<= 300 vertices)
FIXTURE_MAPS = {
    "corridor": MINI_CORRIDOR,
    "small_walled": SMALL_WALLED,
    "open8x6": with_random_users(open_map(8, 6), 3, seed=4),
    **{f"open22x10_u{k}": scenario_22x10(k) for k in range(2, 7)},
}


def random_connected_graph(
    rng: random.Random,
    max_vertices: int = 50,
    *,
    min_vertices: int = 2,
    channels: tuple[str, ...] = ("distance",),
    wmin: int = 1,
    wmax: int = 9,
):
    """Random spanning tree plus extra undirected edges; integer weights."""
    n = rng.randint(min_vertices, max_vertices)
    edges = []
    for v in range(1, n):
        u = rng.randrange(v)
        edges.append((u, v, tuple(rng.randint(wmin, wmax) for _ in channels)))
    for _ in range(rng.randint(0, 2 * n)):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.append((u, v, tuple(rng.randint(wmin, wmax) for _ in channels)))
    return build_graph(n, edges, channels, undirected=True)


def random_instance(rng: random.Random, max_vertices: int = 50):
    """Graph, 2-5 user positions (repeats allowed), optional profile, weights."""
    two_channel = rng.random() < 0.4
    channels = ("distance", "time") if two_channel else ("distance",)
    graph = random_connected_graph(rng, max_vertices, channels=channels)
    count = rng.randint(2, 5)
    users = tuple(rng.randrange(graph.vertex_count) for _ in range(count))
    profile = None
    if two_channel:
        while True:
            scores = tuple(
                tuple(rng.randint(0, 5) for _ in channels) for _ in range(count)
            )
            if any(any(row) for row in scores):
                break
        profile = PreferenceProfile(channels, scores)
    alpha = rng.random()
    weights = ObjectiveWeights(alpha, 1.0 - alpha)
    return graph, users, profile, weights


def assert_matches_golden(name: str, text: str) -> None:
    """Pin ``text`` on first use; afterwards any drift is a failure."""
    path = GOLDEN_DIR / name
    if not path.exists():
        path.write_text(text)
        return
    assert path.read_text() == text, f"{name} drifted from its pinned golden copy"
