"""Blocks: subgraphs of a cube that can hand out cycles through given edges.

A :class:`Composite` joins two blocks across a perfect matching of cross
edges (``b = a ^ mask``) and builds its cycles by the splice

    (C - f) + e1 + (C' - f') + e2

where f lies on a cycle of one part and f' is its partner edge in the other
part. A part may also contribute only the edge f' itself (two vertices).
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

import numpy as np

from ..errors import ArgumentError, CertificationError, ConstructionError, HypothesisError
from .core import cube_cycle, edge_positions, splice, successor
from .search import search_cycle

Want = Callable[[int, int], bool]


def _adjacent(u: int, v: int) -> bool:
    d = u ^ v
    return d != 0 and d & (d - 1) == 0


class Block:
    """Interface shared by every block.

    ``ambient`` is the number of label bits; ``keys``/``key_shift`` optionally
    describe the block as a union of slices ``v >> key_shift`` for fast side
    lookups inside composites.
    """

    size: int
    ambient: int
    keys: frozenset | None = None
    key_shift: int = 0

    def contains(self, v: int) -> bool:
        raise NotImplementedError

    def contains_many(self, arr: np.ndarray) -> np.ndarray:
        return np.fromiter((self.contains(int(v)) for v in arr), dtype=bool, count=len(arr))

    def has_edge(self, u: int, v: int) -> bool:
        return _adjacent(u, v) and self.contains(u) and self.contains(v)

    def has_edges_many(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.contains_many(a) & self.contains_many(b)

    def has_length(self, length: int) -> bool:
        return length % 2 == 0 and 4 <= length <= self.size

    def cycle(self, u: int, v: int, length: int, want: Want | None = None) -> np.ndarray:
        raise NotImplementedError

    def neighbors(self, v: int) -> list[int]:
        return [w for w in (v ^ (1 << i) for i in range(self.ambient)) if self.has_edge(v, w)]


class CubeBlock(Block):
    """Full subcube: low ``n`` bits free, high bits fixed to ``base``."""

    def __init__(self, n: int, base: int = 0, ambient: int | None = None):
        self.n = n
        self.base = base
        self.low = (1 << n) - 1
        self.size = 1 << n
        self.ambient = ambient if ambient is not None else max(n, base.bit_length())
        self.keys = frozenset([base >> n])
        self.key_shift = n

    def contains(self, v: int) -> bool:
        return v & ~self.low == self.base

    def contains_many(self, arr):
        return (arr & ~self.low) == self.base

    def cycle(self, u, v, length, want=None):
        low, base = self.low, self.base
        want_x = None if want is None else (lambda a, b: want(a | base, b | base))
        return cube_cycle(self.n, u & low, v & low, length, want_x) | base


class CycleBlock(Block):
    """A single cycle treated as a graph (only its own edges)."""

    def __init__(self, vertices: Sequence[int], ambient: int):
        self.vertices = np.asarray(vertices, dtype=np.int64)
        vs = self.vertices.tolist()
        self.size = len(vs)
        self.ambient = ambient
        self._set = frozenset(vs)
        self._edges = frozenset(
            frozenset((vs[i], vs[(i + 1) % len(vs)])) for i in range(len(vs))
        )

    def contains(self, v):
        return v in self._set

    def contains_many(self, arr):
        return np.isin(arr, self.vertices)

    def has_edge(self, u, v):
        return frozenset((u, v)) in self._edges

    def has_edges_many(self, a, b):
        return np.fromiter(
            (frozenset((int(x), int(y))) in self._edges for x, y in zip(a, b)),
            dtype=bool, count=len(a),
        )

    def has_length(self, length):
        return length == self.size

    def cycle(self, u, v, length, want=None):
        if length != self.size or not self.has_edge(u, v):
            raise ArgumentError(f"no cycle of length {length} through ({u}, {v}) in this block")
        return self.vertices


class SliceShell(Block):
    """Copy of a shell block on the slice ``base``, XOR-translated by ``shift``.

    Vertex ``x | base`` is present when ``x ^ shift`` is a vertex of ``inner``
    (whose labels use the low ``n`` bits).
    """

    def __init__(self, inner: Block, n: int, shift: int, base: int, ambient: int,
                 alive: np.ndarray | None = None):
        self.inner = inner
        self.alive = alive
        self.n = n
        self.low = (1 << n) - 1
        self.shift = shift
        self.base = base
        self.size = inner.size
        self.ambient = ambient
        self.keys = frozenset([base >> n])
        self.key_shift = n

    def contains(self, v):
        return v & ~self.low == self.base and self.inner.contains((v & self.low) ^ self.shift)

    def contains_many(self, arr):
        inside = (arr & ~self.low) == self.base
        x = (arr & self.low) ^ self.shift
        if self.alive is not None:
            return inside & self.alive[x]
        return inside & self.inner.contains_many(x)

    def has_length(self, length):
        return self.inner.has_length(length)

    def cycle(self, u, v, length, want=None):
        s, low, base = self.shift, self.low, self.base
        want_x = None if want is None else (lambda a, b: want((a ^ s) | base, (b ^ s) | base))
        inner = self.inner.cycle((u & low) ^ s, (v & low) ^ s, length, want_x)
        return (inner ^ s) | base


class CallbackBlock(Block):
    """Block backed by user code: ``cycle_fn(u, v, k)`` returns a vertex sequence.

    The subgraph is induced on ``vertices`` unless ``edges`` is given.
    Returned cycles are checked before use.
    """

    def __init__(self, vertices: Iterable[int], cycle_fn: Callable[[int, int, int], Sequence[int]],
                 ambient: int, edges: Iterable[tuple[int, int]] | None = None,
                 lengths: Callable[[int], bool] | None = None):
        self._set = frozenset(int(v) for v in vertices)
        self._arr = np.asarray(sorted(self._set), dtype=np.int64)
        self.size = len(self._set)
        self.ambient = ambient
        self.cycle_fn = cycle_fn
        self._edges = None if edges is None else frozenset(frozenset(map(int, e)) for e in edges)
        self._lengths = lengths

    def contains(self, v):
        return v in self._set

    def contains_many(self, arr):
        return np.isin(arr, self._arr)

    def has_edge(self, u, v):
        if self._edges is not None:
            return frozenset((u, v)) in self._edges
        return super().has_edge(u, v)

    def has_edges_many(self, a, b):
        if self._edges is None:
            return super().has_edges_many(a, b)
        return np.fromiter((self.has_edge(int(x), int(y)) for x, y in zip(a, b)),
                           dtype=bool, count=len(a))

    def has_length(self, length):
        if self._lengths is not None:
            return self._lengths(length)
        return super().has_length(length)

    def cycle(self, u, v, length, want=None):
        out = np.asarray(self.cycle_fn(u, v, length), dtype=np.int64)
        k = len(out)
        ok = k == length and len(set(out.tolist())) == k
        ok = ok and all(self.has_edge(int(out[i]), int(out[(i + 1) % k])) for i in range(k))
        ok = ok and any({int(out[i]), int(out[(i + 1) % k])} == {u, v} for i in range(k))
        if not ok:
            raise CertificationError(f"callback returned an invalid cycle for ({u}, {v}), length {length}")
        return out


class Composite(Block):
    """A U R' U B with R' the matched cross edges between ``seam_a`` and ``seam_b``.

    ``seam_a`` / ``seam_b`` are sub-blocks (or the parts themselves) holding
    the endpoints of the cross edges; the partner of ``a`` is ``a ^ mask``.
    On a missing splice edge the composite runs a bounded search
    (``on_missing="search"``) or raises HypothesisError (``"raise"``).
    """

    search_limit = 4096

    def __init__(self, a: Block, b: Block, mask: int, seam_a: Block | None = None,
                 seam_b: Block | None = None, on_missing: str = "search"):
        self.a = a
        self.b = b
        self.mask = mask
        self.seam_a = seam_a or a
        self.seam_b = seam_b or b
        self.size = a.size + b.size
        self.ambient = max(a.ambient, b.ambient)
        self.on_missing = on_missing
        if a.keys is not None and b.keys is not None and a.key_shift == b.key_shift:
            self.keys = a.keys | b.keys
            self.key_shift = a.key_shift
        self._a_keys = a.keys if self.keys is not None else None

    # -- membership --------------------------------------------------------

    def _in_a(self, v: int) -> bool:
        if self._a_keys is not None:
            return (v >> self.key_shift) in self._a_keys
        return self.a.contains(v)

    def _side(self, v: int):
        if self._in_a(v):
            return self.a if self.a.contains(v) else None
        return self.b if self.b.contains(v) else None

    def contains(self, v):
        if self.keys is not None and (v >> self.key_shift) not in self.keys:
            return False
        return self._side(v) is not None

    def contains_many(self, arr):
        return self.a.contains_many(arr) | self.b.contains_many(arr)

    def _is_cross(self, u: int, v: int) -> bool:
        if u ^ v != self.mask:
            return False
        if self.seam_a.contains(u) and self.seam_b.contains(v):
            return True
        return self.seam_a.contains(v) and self.seam_b.contains(u)

    def has_edge(self, u, v):
        su, sv = self._side(u), self._side(v)
        if su is None or sv is None:
            return False
        if su is sv:
            return su.has_edge(u, v)
        return self._is_cross(u, v)

    # -- splice helpers ------------------------------------------------------

    def _usable(self, side: Block):
        """Predicate for edges of ``side`` whose partner edge exists on the other side."""
        seam, other_seam = (self.seam_a, self.seam_b) if side is self.a else (self.seam_b, self.seam_a)
        m = self.mask

        def ok(p: int, q: int) -> bool:
            return seam.contains(p) and seam.contains(q) and other_seam.has_edge(p ^ m, q ^ m)

        return ok

    def _find_usable(self, side: Block, cyc: np.ndarray, u: int, v: int):
        seam, other_seam = (self.seam_a, self.seam_b) if side is self.a else (self.seam_b, self.seam_a)
        nxt = successor(cyc)
        ok = seam.contains_many(cyc) & seam.contains_many(nxt)
        cand = edge_positions(cyc, ok, u, v)
        if len(cand) == 0:
            return None
        a_arr, b_arr = cyc[cand] ^ self.mask, nxt[cand] ^ self.mask
        good = cand[other_seam.has_edges_many(a_arr, b_arr)]
        if len(good) == 0:
            return None
        i = int(good[0])
        return int(cyc[i]), int(nxt[i])

    @staticmethod
    def _contributions(block: Block, total: int):
        """Even lengths a part can contribute, largest first, ending with the bare edge (2)."""
        top = min(total, block.size)
        for k in range(top - top % 2, 3, -2):
            if block.has_length(k):
                yield k
        yield 2

    def _part_cycle(self, block: Block, p: int, q: int, k: int, want: Want | None = None):
        if k == 2:
            return np.asarray([p, q], dtype=np.int64)
        return block.cycle(p, q, k, want)

    # -- cycles ----------------------------------------------------------------

    def cycle(self, u, v, length, want=None):
        if length % 2 or not 4 <= length <= self.size:
            raise ArgumentError(f"length {length} outside 4..{self.size} or odd")
        su, sv = self._side(u), self._side(v)
        if su is None or sv is None:
            raise ArgumentError(f"({u}, {v}) is not an edge of this block")
        if su is sv:
            if su.has_length(length):
                return su.cycle(u, v, length, want)
            out = self._same_side(su, u, v, length)
        else:
            if not self._is_cross(u, v):
                raise ArgumentError(f"({u}, {v}) is not an edge of this block")
            if su is self.b:
                u, v = v, u
            out = self._cross(u, v, length)
        if out is None:
            out = self._missing(u, v, length)
        return out

    def _same_side(self, x: Block, u: int, v: int, length: int):
        y = self.b if x is self.a else self.a
        usable = self._usable(x)
        for cx_len in self._contributions(x, length - 2):
            cy_len = length - cx_len
            if cy_len != 2 and not y.has_length(cy_len):
                continue
            if cx_len == 2:
                if not usable(u, v):
                    continue
                cx, f = np.asarray([u, v], dtype=np.int64), (u, v)
            else:
                cx = x.cycle(u, v, cx_len, usable)
                f = self._find_usable(x, cx, u, v)
                if f is None:
                    continue
            cy = self._part_cycle(y, f[0] ^ self.mask, f[1] ^ self.mask, cy_len)
            return splice(cx, f[0], f[1], cy, self.mask)
        return None

    def _cross(self, a: int, b: int, length: int):
        """Cycles through the cross edge ab, a on side A."""
        m = self.mask
        for i in range(self.ambient):
            a2 = a ^ (1 << i)
            if a2 == b or not (self.seam_a.has_edge(a, a2) and self.seam_b.has_edge(b, a2 ^ m)):
                continue
            for ca in self._contributions(self.a, length - 2):
                cb = length - ca
                if cb != 2 and not self.b.has_length(cb):
                    continue
                cx = self._part_cycle(self.a, a, a2, ca)
                cy = self._part_cycle(self.b, b, a2 ^ m, cb)
                return splice(cx, a, a2, cy, m)
        return None

    def _missing(self, u, v, length):
        if self.on_missing == "raise":
            raise HypothesisError(
                f"no matched edge pair available for ({u}, {v}) at length {length}"
            )
        if self.size > self.search_limit:
            raise ConstructionError(f"splice failed for ({u}, {v}) at length {length}")
        return np.asarray(search_cycle(self.neighbors, u, v, length), dtype=np.int64)
