"""Cycles of every even length through every edge of a Hamming shell.

The canonical code of Q_n (n = 2^m - 1) is the lift of the canonical code of
Q_{n'} (n' = 2^(m-1) - 1). Writing a label as ``x | t << n'`` with t in
Q_{n'+1}, the slice at t is a translated copy of the smaller shell when t has
even weight and an intact Q_{n'} when t has odd weight. Walking the slices
along a Hamiltonian path of Q_{n'+1} pairs each shell slice with the next full
slice; these pairs are glued, and the pairs are chained one after another.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..domination import MASK_LIMIT, Shell, VertexSet, canonical_member_mask, hamming_coset_map
from ..errors import ArgumentError, CertificationError, LabelError, UnsupportedError
from ..hypercube import Edge
from .blocks import Block, Composite, CubeBlock, CycleBlock, SliceShell
from .core import Cycle, as_edge, successor

_BASE_CYCLE = (1, 3, 2, 6, 4, 5)  # Q_3 minus {0, 7}


def _swap_bits(arr: np.ndarray, i: int, j: int) -> np.ndarray:
    if i == j:
        return arr
    bi, bj = (arr >> i) & 1, (arr >> j) & 1
    x = bi ^ bj
    return arr ^ (x << i) ^ (x << j)


class ShellBlock(Block):
    """Canonical Hamming shell of Q_{2^m - 1} (m >= 3) as a block.

    A cycle request is answered by the slice chain whose order puts the
    requested edge inside a slice or between the first two slices.
    """

    def __init__(self, m: int):
        if m < 3:
            raise ArgumentError("the slice engine starts at m = 3")
        self.m = m
        self.n = (1 << m) - 1
        self.n_in = (1 << (m - 1)) - 1
        self.h = self.n_in + 1
        self.ambient = self.n
        self.size = (1 << self.n) - (1 << self.n) // (self.n + 1)
        self.inner = shell_block(m - 1)
        self._inner_alive = _alive(m - 1)
        self._alive = _alive(m) if self.n <= MASK_LIMIT else None
        self._chains: dict[tuple[int, int], Composite] = {}

    # -- membership --------------------------------------------------------

    def contains(self, v):
        if not 0 <= v < (1 << self.n):
            return False
        t = v >> self.n_in
        if t.bit_count() & 1:
            return True
        low = (1 << self.n_in) - 1
        return bool(self._inner_alive[(v & low) ^ (t & low)])

    def contains_many(self, arr):
        arr = np.asarray(arr, dtype=np.int64)
        if self._alive is not None:
            return self._alive[arr]
        low = (1 << self.n_in) - 1
        t = arr >> self.n_in
        odd = np.zeros(len(arr), dtype=np.int64)
        for i in range(self.h):
            odd ^= (t >> i) & 1
        return (odd == 1) | self._inner_alive[(arr & low) ^ (t & low)]

    def has_length(self, length):
        return length % 2 == 0 and 4 <= length <= self.size

    # -- chains --------------------------------------------------------------

    def slice_order(self, t0: int, d: int) -> np.ndarray:
        """Hamiltonian path of Q_h starting t0, t0 ^ 2^d (t0 of even weight)."""
        g = np.arange(1 << self.h, dtype=np.int64)
        g ^= g >> 1
        return _swap_bits(g, 0, d) ^ t0

    def chain(self, t0: int = 0, d: int = 0) -> Composite:
        key = (t0, d)
        if key not in self._chains:
            self._chains[key] = self._build(self.slice_order(t0, d))
        return self._chains[key]

    def _slice(self, t: int) -> Block:
        n_in = self.n_in
        if t.bit_count() & 1:
            return CubeBlock(n_in, t << n_in, self.n)
        return SliceShell(self.inner, n_in, t & ((1 << n_in) - 1), t << n_in, self.n,
                          alive=self._inner_alive)

    def _build(self, order: np.ndarray) -> Composite:
        n_in = self.n_in
        ts = order.tolist()
        pairs = []
        for i in range(0, len(ts), 2):
            s, c = self._slice(ts[i]), self._slice(ts[i + 1])
            pairs.append((Composite(s, c, (ts[i] ^ ts[i + 1]) << n_in), s, c))
        acc, _, last_cube = pairs[0]
        for i, (blk, s, c) in enumerate(pairs[1:], start=1):
            mask = (ts[2 * i - 1] ^ ts[2 * i]) << n_in
            acc = Composite(acc, blk, mask, seam_a=last_cube, seam_b=s)
            last_cube = c
        return acc

    def chain_for(self, u: int, v: int) -> Composite:
        tu, tv = u >> self.n_in, v >> self.n_in
        if tu == tv:
            return self.chain()
        t0 = tu if tu.bit_count() % 2 == 0 else tv
        return self.chain(t0, (tu ^ tv).bit_length() - 1)

    def cycle(self, u, v, length, want=None):
        return self.chain_for(u, v).cycle(u, v, length, want)


@lru_cache(maxsize=None)
def _alive(m: int) -> np.ndarray:
    out = ~canonical_member_mask(m)
    out.flags.writeable = False
    return out


@lru_cache(maxsize=None)
def shell_block(m: int) -> Block:
    """Block for the canonical shell at level m (m = 2 is the 6-cycle of Q_3)."""
    if m == 2:
        return CycleBlock(_BASE_CYCLE, 3)
    return ShellBlock(m)


@dataclass(frozen=True)
class EmbedRequest:
    shell: Shell
    edge: Edge
    target_len: int


@lru_cache(maxsize=64)
def _coset_map(n: int, removed: VertexSet):
    return hamming_coset_map(n, removed)


def _hamming_level(n: int) -> int:
    if n < 3 or (n + 1) & n:
        raise UnsupportedError(f"n = {n} is not a Hamming length 2^m - 1 with m >= 2")
    return (n + 1).bit_length() - 1


def check_cycle(shell: Shell, cyc: np.ndarray, u: int, v: int, length: int) -> None:
    """Raise CertificationError unless ``cyc`` is a cycle of ``shell`` of ``length`` through uv."""
    cyc = np.asarray(cyc, dtype=np.int64)
    if len(cyc) != length:
        raise CertificationError(f"cycle has length {len(cyc)}, wanted {length}")
    if len(np.unique(cyc)) != length:
        raise CertificationError("cycle repeats a vertex")
    if cyc.min() < 0 or cyc.max() >= (1 << shell.n):
        raise CertificationError("cycle leaves the cube")
    nxt = successor(cyc)
    d = cyc ^ nxt
    if np.any((d == 0) | (d & (d - 1) != 0)):
        raise CertificationError("consecutive vertices are not adjacent")
    if shell.n <= MASK_LIMIT:
        if not shell.alive_mask()[cyc].all():
            raise CertificationError("cycle uses a removed vertex")
    elif any(int(w) in shell.removed for w in cyc):
        raise CertificationError("cycle uses a removed vertex")
    hit = ((cyc == u) & (nxt == v)) | ((cyc == v) & (nxt == u))
    if not hit.any():
        raise CertificationError(f"cycle misses edge ({u}, {v})")


def shell_cycle(req, edge=None, length: int | None = None) -> Cycle:
    """Cycle of ``length`` through ``edge`` in a Hamming shell (any coset of a Hamming code).

    Accepts an EmbedRequest or ``(shell, edge, length)``. The output is
    certified before it is returned.
    """
    if isinstance(req, EmbedRequest):
        shell, edge, length = req.shell, req.edge, req.target_len
    else:
        shell = req
    if edge is None or length is None:
        raise ArgumentError("edge and length are required")
    m = _hamming_level(shell.n)
    u, v = as_edge(edge)
    if not (shell.survives(u) and shell.survives(v)):
        raise LabelError(f"edge ({u}, {v}) is not an edge of the shell")
    if length % 2 or not 4 <= length <= shell.survivor_count:
        raise ArgumentError(f"length {length} is not an even value in 4..{shell.survivor_count}")
    cmap = _coset_map(shell.n, shell.removed)
    cu, cv = (int(x) for x in cmap.forward([u, v]))
    blk = shell_block(m)
    if m == 2:
        if length != 6:
            raise ArgumentError("the Q_3 shell is a 6-cycle; only length 6 exists")
    out = cmap.backward(blk.cycle(cu, cv, length))
    check_cycle(shell, out, u, v, length)
    return Cycle.of(out).canonical()


def canonical_shell(m: int, coset: int = 0) -> Shell:
    """Shell of Q_{2^m-1} minus the canonical code translated by e_coset (0 = no translate)."""
    n = (1 << m) - 1
    if not 0 <= coset <= n:
        raise ArgumentError(f"coset index must be in 0..{n}")
    shift = 0 if coset == 0 else 1 << (coset - 1)
    members = np.flatnonzero(canonical_member_mask(m)) ^ shift
    return Shell(n, VertexSet(n, members.tolist()))
