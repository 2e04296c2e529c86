import random

import pytest

from meetpoint import neighbors, parse_grid_map
from meetpoint.errors import EmptyMap, NoUsers, UnknownCharacter
from meetpoint.gridmap import render_frame, render_map
from meetpoint.maps import (
    bench_map,
    open_map,
    walled_map,
    with_random_users,
    with_stick_users,
)

from conftest import MINI_CORRIDOR, MINI_SPLIT, SMALL_WALLED


def test_corridor_line_graph():
    grid, graph = parse_grid_map(MINI_CORRIDOR)
    assert graph.vertex_count == 3
    assert grid.user_starts == (0, 2)
    assert len(graph.edges) == 4  # two undirected links
    assert neighbors(graph, 1) == [(0, 1), (2, 1)]


def test_wall_splits_the_row():
    grid, graph = parse_grid_map(MINI_SPLIT)
    assert graph.vertex_count == 2
    assert graph.edges == ()
    assert grid.user_starts == (0, 1)


def test_open_22x10_has_220_vertices():
    _, graph = parse_grid_map(open_map(22, 10))
    assert graph.vertex_count == 220


def test_interior_cell_has_four_unit_neighbors():
    grid, graph = parse_grid_map(open_map(5, 5))
    center = grid.vertex_at(2, 2)
    assert [w for _, w in neighbors(graph, center)] == [1, 1, 1, 1]


def test_vertex_count_equals_free_cells():
    grid, graph = parse_grid_map(SMALL_WALLED)
    free = sum(
        0 if grid.walls[r][c] else 1
        for r in range(grid.height)
        for c in range(grid.width)
    )
    assert graph.vertex_count == free


def test_edges_connect_manhattan_neighbors():
    grid, graph = parse_grid_map(SMALL_WALLED)
    for u, v, _ in graph.edges:
        (r1, c1), (r2, c2) = grid.cell_of(u), grid.cell_of(v)
        assert abs(r1 - r2) + abs(c1 - c2) == 1


@pytest.mark.parametrize("bad", ["X", "u", "0"])
def test_unknown_character(bad):
    with pytest.raises(UnknownCharacter):
        parse_grid_map(f"U {bad}\n")


def test_empty_map():
    with pytest.raises(EmptyMap):
        parse_grid_map("")
    with pytest.raises(EmptyMap):
        parse_grid_map("\n\n")


def test_no_users_only_when_required():
    with pytest.raises(NoUsers):
        parse_grid_map("  \n", require_users=True)
    grid, _ = parse_grid_map("  \n")
    assert grid.user_starts == ()


def test_short_lines_padded_with_walls():
    grid, graph = parse_grid_map("UU\nU\n")
    assert grid.width == 2
    assert grid.walls[1][1]
    assert graph.vertex_count == 3


def test_round_trip_exact_for_rectangular_maps():
    for text in (MINI_CORRIDOR, MINI_SPLIT, SMALL_WALLED):
        grid, _ = parse_grid_map(text)
        assert render_map(grid) == text


def test_round_trip_up_to_wall_padding():
    ragged = "U \n#\n U\n"
    grid, _ = parse_grid_map(ragged)
    padded = "\n".join(line.ljust(2, "#") for line in ragged.splitlines()) + "\n"
    assert render_map(grid) == padded


def test_round_trip_random_maps():
    rng = random.Random(7)
    for _ in range(25):
        w, h = rng.randint(1, 12), rng.randint(1, 8)
        rows = []
        for _ in range(h):
            rows.append("".join(rng.choice("#  U") for _ in range(w)))
        text = "\n".join(rows) + "\n"
        if all(set(row) <= {"#"} for row in rows):
            continue  # all-wall maps have no free cells but are still parseable
        grid, graph = parse_grid_map(text)
        assert render_map(grid) == text
        free = sum(row.count(" ") + row.count("U") for row in rows)
        assert graph.vertex_count == free


def test_time_channel_mirrors_distance_on_grids():
    _, graph = parse_grid_map(MINI_CORRIDOR, channels=("distance", "time"))
    assert neighbors(graph, 0, "time") == neighbors(graph, 0, "distance")


def test_frame_marker_precedence():
    grid, _ = parse_grid_map("    \n")
    frame = render_frame(
        grid, users=[0, 1, 2], visited=[0, 1, 2, 3], initial=1, destination=0
    )
    assert frame == "DIU.\n"


def test_frame_destination_covers_initial():
    grid, _ = parse_grid_map("   \n")
    assert render_frame(grid, initial=1, destination=1) == " D \n"


def test_walled_map_is_one_component():
    from collections import deque

    text = walled_map(30, 12, wall_fraction=0.2, seed=5)
    _, graph = parse_grid_map(text)
    assert graph.vertex_count > 0
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v, _ in neighbors(graph, u):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    assert len(seen) == graph.vertex_count


def test_walled_map_deterministic():
    assert walled_map(20, 9, seed=3) == walled_map(20, 9, seed=3)
    assert walled_map(20, 9, seed=3) != walled_map(20, 9, seed=4)


def test_user_placement_presets():
    base = open_map(10, 4)
    randomized = with_random_users(base, 3, seed=1)
    assert randomized.count("U") == 3
    assert with_random_users(base, 3, seed=1) == randomized

    stick = with_stick_users(base, 4)
    lines = stick.splitlines()
    assert lines[0][0] == "U"  # the lone far-away user
    assert lines[-1].endswith("UUU")  # the bunch at the bottom-right


def test_too_many_users_rejected():
    with pytest.raises(ValueError):
        with_random_users(open_map(2, 1), 3)


def test_bench_map_sizes():
    _, small = parse_grid_map(bench_map("22x10"))
    assert small.vertex_count == 220  # stock small map is fully open
    walled = bench_map("88x27")
    assert "#" in walled
    with pytest.raises(ValueError):
        bench_map("not-a-size")
