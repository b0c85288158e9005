"""The Wythoff array, the consecutive-integer region of F[1,2], and g(n).

F[1,2] is tiled by nested copies of itself; the complement of the first
left copy reads off the positive integers level by level, and its
ascending branches are the rows of the Wythoff array (row j seeded by
(u(u(j)), v(u(j)))).  The recursive function g(n) = n - g(g(n-1)) gives
each position's parent label in F[1,2].
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .goldring import fib
from .fibword import U
from .tree import FibTree, LevelNode, build_levels
from .wythoff import u, v


@dataclass(frozen=True)
class WythoffArray:
    """Top-left corner of the array: row j starts (u(u(j)), v(u(j)))."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0]) if self.rows else 0


def wythoff_array(rows: int, cols: int) -> WythoffArray:
    """The rows x cols corner, each row extended by the Fibonacci recursion."""
    if rows < 1 or cols < 2:
        raise ValueError(f"need rows >= 1 and cols >= 2, got {rows}x{cols}")
    out = []
    for j in range(1, rows + 1):
        m = u(j)
        row = [u(m), v(m)]
        while len(row) < cols:
            row.append(row[-2] + row[-1])
        out.append(tuple(row))
    return WythoffArray(tuple(out))


def hofstadter_levels(n_max: int) -> list[tuple[int, int]]:
    """Label interval per level of the consecutive-integer region of F[1,2].

    Level 0 is [1..1]; level n >= 1 is [F_{n+1}+1 .. F_{n+2}], the
    complement of the nested left copy of the whole tree.  Concatenated,
    the intervals read 1, 2, 3, ... without gap or repeat.
    """
    if n_max < 0:
        raise ValueError(f"level must be >= 0, got {n_max}")
    out = [(1, 1)]
    for n in range(1, n_max + 1):
        out.append((fib(n + 1) + 1, fib(n + 2)))
    return out


_g_cache = [0]
_g_lock = threading.Lock()


def hofstadter_g(n: int) -> int:
    """g(0) = 0, g(n) = n - g(g(n-1)), filled bottom-up under a lock."""
    if n < 0:
        raise ValueError(f"g needs n >= 0, got {n}")
    if n < len(_g_cache):
        return _g_cache[n]
    with _g_lock:
        while len(_g_cache) <= n:
            m = len(_g_cache)
            _g_cache.append(m - _g_cache[_g_cache[m - 1]])
    return _g_cache[n]


def primitive_pairs_in_tree(
    t: FibTree, n_max: int
) -> list[tuple[tuple[int, int], int, int]]:
    """All (pair, level, pos) of u-nodes under u-node parents, up to n_max.

    Brute force over the rule-built levels; each such node roots a fresh
    ascending branch seeded by (label, parent label + label).
    """
    levels = build_levels(t, n_max, max_level=max(n_max, 30))
    out = []
    for n in range(1, n_max + 1):
        above: list[LevelNode] = levels[n - 1]
        for pos, (label, letter, ppos) in enumerate(levels[n], 1):
            if letter == U and above[ppos - 1][1] == U:
                out.append(((label, above[ppos - 1][0] + label), n, pos))
    return out
