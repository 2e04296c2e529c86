"""Canned map layouts and user-placement presets."""

from __future__ import annotations

import random

from .gridmap import FREE, USER, WALL

# wall densities for the stock benchmark layouts
_WALLED_SIZES = {(88, 27): 0.12, (109, 128): 0.08}


def open_map(width: int, height: int) -> str:
    return "\n".join([FREE * width] * height) + "\n"


def walled_map(width: int, height: int, *, wall_fraction: float = 0.1, seed: int = 0) -> str:
    """Map with random walls; free cells are pruned to one connected component."""
    rng = random.Random(f"walls:{seed}:{width}x{height}:{wall_fraction}")
    free = [[rng.random() >= wall_fraction for _ in range(width)] for _ in range(height)]

    # flood-fill components of free cells, keep only the largest
    component = [[-1] * width for _ in range(height)]
    sizes: list[int] = []
    for r in range(height):
        for c in range(width):
            if not free[r][c] or component[r][c] >= 0:
                continue
            label = len(sizes)
            stack = [(r, c)]
            component[r][c] = label
            count = 0
            while stack:
                cr, cc = stack.pop()
                count += 1
                for nr, nc in ((cr - 1, cc), (cr + 1, cc), (cr, cc - 1), (cr, cc + 1)):
                    if 0 <= nr < height and 0 <= nc < width and free[nr][nc] \
                            and component[nr][nc] < 0:
                        component[nr][nc] = label
                        stack.append((nr, nc))
            sizes.append(count)
    if not sizes:
        raise ValueError("wall_fraction left no free cells")
    keep = sizes.index(max(sizes))

    rows = []
    for r in range(height):
        rows.append("".join(
            FREE if free[r][c] and component[r][c] == keep else WALL
            for c in range(width)
        ))
    return "\n".join(rows) + "\n"


def _rows_and_free_cells(text: str) -> tuple[list[list[str]], list[tuple[int, int]]]:
    rows = [list(line) for line in text.splitlines()]
    cells = [(r, c) for r, row in enumerate(rows) for c, ch in enumerate(row) if ch == FREE]
    return rows, cells


def with_random_users(text: str, count: int, *, seed: int = 0) -> str:
    """Place ``count`` users on distinct free cells, seeded."""
    rows, cells = _rows_and_free_cells(text)
    if not 1 <= count <= len(cells):
        raise ValueError(f"cannot place {count} users on {len(cells)} free cells")
    rng = random.Random(f"users:{seed}:{count}")
    for r, c in rng.sample(cells, count):
        rows[r][c] = USER
    return "\n".join("".join(row) for row in rows) + "\n"


def with_stick_users(text: str, count: int) -> str:
    """One user at the top-left free cell, the rest bunched at the bottom-right."""
    rows, cells = _rows_and_free_cells(text)
    if not 1 <= count <= len(cells):
        raise ValueError(f"cannot place {count} users on {len(cells)} free cells")
    chosen = [cells[0]] + (cells[-(count - 1):] if count > 1 else [])
    for r, c in chosen:
        rows[r][c] = USER
    return "\n".join("".join(row) for row in rows) + "\n"


def bench_map(size: str, *, seed: int = 0) -> str:
    """Stock layout for a ``WxH`` size string.

    22x10 is fully open; the larger stock sizes carry sparse random walls.
    Unknown sizes fall back to an open map.
    """
    try:
        width, height = (int(part) for part in size.lower().split("x"))
    except ValueError:
        raise ValueError(f"bad map size {size!r}, expected WxH") from None
    fraction = _WALLED_SIZES.get((width, height))
    if fraction is None:
        return open_map(width, height)
    return walled_map(width, height, wall_fraction=fraction, seed=seed)
