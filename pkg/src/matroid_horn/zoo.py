"""Small named matroids and hypergraphs used by tests, demos and the CLI."""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .bits import vset
from .matroid import (
    BinaryMatrix,
    Matroid,
    circuits_from_binary,
    complete_bipartite_edges,
    complete_graph_edges,
    graphic_matroid,
    is_simple,
    uniform_matroid,
)
from .set_family import SetFamily, is_sperner


def wheel_triangles() -> SetFamily:
    """Five triangles {i, i+1, 5} of the wheel on a 5-cycle with hub 5."""
    return SetFamily.from_sets(6, [(i, (i + 1) % 5, 5) for i in range(5)])


def wheel_edges() -> SetFamily:
    rim = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, 5) for i in range(5)]
    return SetFamily.from_sets(6, rim + spokes)


def wheel_max_independent() -> SetFamily:
    return SetFamily.from_sets(6, [(5,)] + [(i, (i + 2) % 5) for i in range(5)])


def two_blocks_chain() -> SetFamily:
    """Three 4-sets on 8 points: {0..3}, {2..5}, {4..7}."""
    return SetFamily.from_sets(8, [(0, 1, 2, 3), (2, 3, 4, 5), (4, 5, 6, 7)])


def two_blocks_circuits() -> SetFamily:
    """The matroid whose bases coincide with the minimal keys of ``two_blocks_chain``."""
    halves_x = [(0, 1), (2, 3)]
    halves_y = [(4, 5), (6, 7)]
    sets = [(0, 1, 2, 3), (4, 5, 6, 7)] + [a + b for a in halves_x for b in halves_y]
    return SetFamily.from_sets(8, sets)


def k4() -> Matroid:
    return graphic_matroid(4, complete_graph_edges(4))


def k33() -> Matroid:
    return graphic_matroid(6, complete_bipartite_edges(3, 3))


def random_binary_matroid(seed: int, rows: int = 4, cols: int = 7, simple: bool = False) -> tuple[BinaryMatrix, Matroid]:
    """Matroid of a random 0/1 matrix; ``simple`` draws distinct nonzero columns."""
    rng = np.random.default_rng(seed)
    if simple:
        if cols > 2**rows - 1:
            raise ValueError("too many columns for distinct nonzero vectors")
        picks = rng.choice(np.arange(1, 2**rows), size=cols, replace=False)
        arr = (picks[None, :] >> np.arange(rows)[:, None]) & 1
    else:
        arr = rng.integers(0, 2, size=(rows, cols))
    mat = BinaryMatrix.from_rows(arr.tolist())
    return mat, circuits_from_binary(mat)


def random_simple_binary(seed: int, max_circuits: int = 10, cols: int = 7) -> tuple[BinaryMatrix, Matroid]:
    """First simple binary matroid with a few circuits, drawn from a seeded stream."""
    rng = np.random.default_rng(seed)
    while True:
        rows = int(rng.integers(3, 5))
        k = int(rng.integers(4, min(cols, 2**rows - 1) + 1))
        mat, m = random_binary_matroid(int(rng.integers(2**31)), rows, k, simple=True)
        if is_simple(m) and 2 <= len(m.circuits) <= max_circuits:
            return mat, m


def random_sperner(rng: np.random.Generator, n: int, max_edges: int = 6) -> SetFamily:
    """Random Sperner family with no empty edge and not equal to {V}."""
    full = (1 << n) - 1
    while True:
        count = int(rng.integers(1, max_edges + 1))
        picks = [int(x) for x in rng.integers(1, full + 1, size=count)]
        keep = []
        for x in sorted(set(picks), key=lambda s: s.bit_count()):
            if not any(k & ~x == 0 for k in keep):
                keep.append(x)
        f = SetFamily.from_masks(n, keep)
        if is_sperner(f) and f.sets != (full,):
            return f


def small_uniforms(max_n: int = 7):
    """U(n, r) for 3 <= n <= max_n and 1 <= r <= n-2."""
    for n in range(3, max_n + 1):
        for r in range(1, n - 1):
            yield (n, r), uniform_matroid(n, r)


def closure_zoo() -> list[tuple[str, Matroid]]:
    """Uniform matroids up to n=7, K4, K_{3,3} and three seeded binary matroids."""
    out = [(f"U({n},{r})", m) for (n, r), m in small_uniforms(7)]
    out += [(f"U({n},{n - 1})", uniform_matroid(n, n - 1)) for n in range(2, 8)]
    out += [("K4", k4()), ("K33", k33())]
    for seed in (11, 12, 13):
        _, m = random_binary_matroid(seed, rows=4, cols=8)
        out.append((f"binary seed {seed}", m))
    return out


def fano() -> SetFamily:
    """Lines of the Fano plane on points 0..6."""
    lines = [(i, (i + 1) % 7, (i + 3) % 7) for i in range(7)]
    return SetFamily.from_sets(7, lines)


def pairs(n: int) -> list[int]:
    return [vset(p) for p in combinations(range(n), 2)]
