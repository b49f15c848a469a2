"""Gluing a full cube copy or a second block to a block across matched cross edges."""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from ..errors import ArgumentError
from ..hypercube import check_dim
from .blocks import Block, CallbackBlock, Composite, CubeBlock, CycleBlock
from .core import Cycle, as_edge


def _result(arr) -> Cycle:
    return Cycle.of(arr).canonical()


def _check_length(length: int, top: int) -> None:
    if length % 2 or not 4 <= length <= top:
        raise ArgumentError(f"length {length} is not an even value in 4..{top}")


def _in_copy(vertices: Sequence[int], n: int, side: int) -> list[int]:
    """Place Q_n labels in copy ``side`` of Q_{n+1}; labels already there pass through."""
    out = []
    for v in vertices:
        v = int(v)
        if v >> n == 0:
            v |= side << n
        if v >> n != side:
            raise ArgumentError(f"vertex {v} is not in copy {side} of Q_{n + 1}")
        out.append(v)
    return out


def glue_q3_block(gp: Iterable[int], edge, length: int, full_side: int = 1) -> Cycle:
    """Cycle of ``length`` through ``edge`` in Q_3 copy + cross edges + cycle ``gp``, inside Q_4.

    ``gp`` is a 4-, 6- or 8-cycle of the sibling copy; the full Q_3 copy is
    the one with coordinate 4 equal to ``full_side``.
    """
    if full_side not in (0, 1):
        raise ArgumentError("full_side must be 0 or 1")
    verts = _in_copy(list(gp), 3, 1 - full_side)
    if len(verts) not in (4, 6, 8):
        raise ArgumentError("the sibling cycle must have 4, 6 or 8 vertices")
    g_prime = CycleBlock(verts, 4)
    full = CubeBlock(3, full_side << 3, 4)
    blk = Composite(full, g_prime, 8, on_missing="raise")
    u, v = as_edge(edge)
    if not blk.has_edge(u, v):
        raise ArgumentError(f"({u}, {v}) is not an edge of the glued graph")
    _check_length(length, blk.size)
    return _result(blk.cycle(u, v, length))


def glue_block(
    n: int,
    gp_vertices: Iterable[int],
    mode: str,
    length: int,
    edge=None,
    cycle_fn: Callable[[int, int, int], Sequence[int]] | None = None,
    hamiltonian: Sequence[int] | None = None,
    gp_edges: Iterable[tuple[int, int]] | None = None,
) -> Cycle:
    """Cycle in (Q_n, 1) + cross edges + G', with G' a subgraph of copy 0 of Q_{n+1}.

    mode ``"hamiltonian"``: G' is described by one Hamiltonian cycle and any
    cycle of ``length`` is returned (``edge`` ignored).
    mode ``"bipancyclic"``: ``cycle_fn(u, v, k)`` returns a k-cycle of G'
    through uv; the result passes through ``edge``.
    """
    check_dim(n)
    verts = _in_copy(list(gp_vertices), n, 0)
    full = CubeBlock(n, 1 << n, n + 1)
    if mode == "hamiltonian":
        if n < 2 or hamiltonian is None:
            raise ArgumentError("hamiltonian mode needs n >= 2 and a Hamiltonian cycle of G'")
        ham = _in_copy(list(hamiltonian), n, 0)
        if sorted(ham) != sorted(verts):
            raise ArgumentError("the Hamiltonian cycle must visit every vertex of G'")
        blk = Composite(full, CycleBlock(ham, n + 1), 1 << n, on_missing="raise")
        top = blk.size if len(ham) <= (1 << n) else (1 << n)
        _check_length(length, top)
        u, v = (full.base, full.base | 1) if length <= (1 << n) else (ham[0], ham[1])
        return _result(blk.cycle(u, v, length))
    if mode == "bipancyclic":
        if n < 3 or cycle_fn is None or edge is None:
            raise ArgumentError("bipancyclic mode needs n >= 3, a cycle callback and an edge")
        g_prime = CallbackBlock(verts, cycle_fn, n + 1, edges=gp_edges)
        blk = Composite(full, g_prime, 1 << n, on_missing="raise")
        u, v = as_edge(edge)
        if not blk.has_edge(u, v):
            raise ArgumentError(f"({u}, {v}) is not an edge of the glued graph")
        _check_length(length, blk.size)
        return _result(blk.cycle(u, v, length))
    raise ArgumentError(f"unknown mode {mode!r}")


def glue_two_shells(g0: Block, g1: Block, mask: int, edge, length: int) -> Cycle:
    """Cycle of ``length`` through ``edge`` in G0 + matched cross edges (a, a ^ mask) + G1.

    Both blocks must be edge-bipancyclic; if a Hamiltonian cycle of one block
    has no edge whose partner lies in the other, HypothesisError is raised.
    """
    blk = Composite(g0, g1, mask, on_missing="raise")
    u, v = as_edge(edge)
    if not blk.has_edge(u, v):
        raise ArgumentError(f"({u}, {v}) is not an edge of the glued graph")
    _check_length(length, blk.size)
    return _result(blk.cycle(u, v, length))

