"""Cycles in grid graphs P_rows x P_cols and in (shell) x Q_q products.

A cycle of length l is the boundary of a polyomino of l/2 - 1 unit squares
grown so that each new square meets the previous ones along exactly one edge
and brings two new grid points. Squares are taken from a fixed comb order, so
every prefix is such a polyomino.
"""

from __future__ import annotations

from collections import defaultdict

import numpy as np

from ..errors import ArgumentError
from ..hypercube import check_dim, gray_array
from .core import Cycle

Point = tuple[int, int]


def _comb_even(rows: int, cols: int) -> list[Point]:
    """Square order for an even number of grid rows: spine in column 0, teeth on even square rows."""
    out = []
    for r in range(rows - 1):
        out.append((r, 0))
        if r % 2 == 0:
            out.extend((r, c) for c in range(1, cols - 1))
    return out


def _comb_odd(rows: int, cols: int) -> list[Point]:
    """Both dimensions odd: comb down to square row rows-3, then single teeth below it."""
    out = []
    for r in range(rows - 2):
        out.append((r, 0))
        if r % 2 == 0:
            out.extend((r, c) for c in range(1, cols - 1))
    out.append((rows - 2, 0))
    out.extend((rows - 2, c) for c in range(2, cols - 2, 2))
    return out


def square_order(rows: int, cols: int) -> list[Point]:
    """Unit squares (top-left corners) in the order they are added."""
    if rows % 2 == 0:
        return _comb_even(rows, cols)
    if cols % 2 == 0:
        return [(c, r) for r, c in _comb_even(cols, rows)]
    return _comb_odd(rows, cols)


def _boundary(squares: list[Point]) -> list[Point]:
    count: dict[tuple[Point, Point], int] = defaultdict(int)
    for r, c in squares:
        corners = [(r, c), (r, c + 1), (r + 1, c + 1), (r + 1, c)]
        for i in range(4):
            a, b = corners[i], corners[(i + 1) % 4]
            count[(min(a, b), max(a, b))] += 1
    adj: dict[Point, list[Point]] = defaultdict(list)
    for (a, b), k in count.items():
        if k == 1:
            adj[a].append(b)
            adj[b].append(a)
    start = min(adj)
    walk, prev, cur = [start], None, start
    while True:
        a, b = adj[cur]
        nxt = b if a == prev else a
        if nxt == start:
            return walk
        walk.append(nxt)
        prev, cur = cur, nxt


def mesh_max_length(rows: int, cols: int) -> int:
    total = rows * cols
    return total - (total % 2)


def mesh_cycle(rows: int, cols: int, length: int) -> list[Point]:
    """Cycle of ``length`` in the grid P_rows x P_cols as a list of (row, col) points."""
    if rows < 2 or cols < 2:
        raise ArgumentError("the grid needs at least 2 rows and 2 columns")
    top = mesh_max_length(rows, cols)
    if length % 2 or not 4 <= length <= top:
        raise ArgumentError(f"length {length} is not an even value in 4..{top}")
    return _boundary(square_order(rows, cols)[: length // 2 - 1])


def product_shell_cycle(shell_ham, q_dim: int, length: int, m: int | None = None) -> Cycle:
    """Cycle of ``length`` in G x Q_q where G has the Hamiltonian cycle ``shell_ham``.

    G's labels occupy the low ``m`` bits (inferred from the largest label when
    omitted); Q_q sits above them. Rows follow the cycle opened into a path,
    columns follow a Gray path of Q_q.
    """
    path = np.asarray(list(shell_ham), dtype=np.int64)
    check_dim(q_dim)
    if m is None:
        m = int(path.max()).bit_length()
    cols = gray_array(q_dim)
    top = len(path) * len(cols)
    if length % 2 or not 4 <= length <= top:
        raise ArgumentError(f"length {length} is not an even value in 4..{top}")
    pts = np.asarray(mesh_cycle(len(path), len(cols), length), dtype=np.int64)
    return Cycle.of(path[pts[:, 0]] | (cols[pts[:, 1]] << m)).canonical()
