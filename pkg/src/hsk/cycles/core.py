"""Cycle value type, splicing helpers and cycles in intact cubes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from ..errors import ArgumentError, ConstructionError, LabelError
from ..hypercube import Edge, check_dim, check_label, gray_array


@dataclass(frozen=True)
class Cycle:
    """Closed walk on distinct vertices; the last vertex is adjacent to the first."""

    vertices: tuple[int, ...]

    @classmethod
    def of(cls, vertices) -> "Cycle":
        return cls(tuple(int(v) for v in np.asarray(vertices).tolist()))

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def has_edge(self, u: int, v: int) -> bool:
        vs = self.vertices
        try:
            i = vs.index(u)
        except ValueError:
            return False
        k = len(vs)
        return vs[(i + 1) % k] == v or vs[(i - 1) % k] == v

    def canonical(self) -> "Cycle":
        return Cycle(canonical_order(self.vertices))

    def translate(self, x: int) -> "Cycle":
        return Cycle(tuple(v ^ x for v in self.vertices))

    def as_array(self) -> np.ndarray:
        return np.asarray(self.vertices, dtype=np.int64)


def canonical_order(vertices: Sequence[int]) -> tuple[int, ...]:
    """Rotate so the minimum comes first, then orient towards its smaller neighbour."""
    vs = [int(v) for v in vertices]
    if len(vs) < 3:
        return tuple(vs)
    i = vs.index(min(vs))
    vs = vs[i:] + vs[:i]
    if vs[-1] < vs[1]:
        vs = [vs[0]] + vs[:0:-1]
    return tuple(vs)


def successor(cyc: np.ndarray) -> np.ndarray:
    """cyc shifted left by one, so position i holds the vertex after cyc[i]."""
    return np.concatenate((cyc[1:], cyc[:1]))


def open_at(cyc: np.ndarray, a1: int, a2: int) -> np.ndarray:
    """Path a2 ... a1 obtained by deleting the edge a1-a2 from ``cyc``."""
    hits = np.flatnonzero(cyc == a1)
    if len(hits) != 1:
        raise ConstructionError(f"vertex {a1} not on the cycle")
    i = int(hits[0])
    k = len(cyc)
    if cyc[(i + 1) % k] == a2:
        return np.concatenate((cyc[i + 1:], cyc[:i + 1]))
    if cyc[(i - 1) % k] == a2:
        return np.concatenate((cyc[i - 1::-1], cyc[:i - 1:-1])) if i else cyc[::-1]
    raise ConstructionError(f"edge ({a1}, {a2}) not on the cycle")


def splice(cx: np.ndarray, a1: int, a2: int, cy: np.ndarray, mask: int) -> np.ndarray:
    """(cx - a1a2) + a1b1 + (cy - b1b2) + b2a2 where b = a ^ mask."""
    px = open_at(cx, a1, a2)
    py = open_at(cy, a2 ^ mask, a1 ^ mask)  # runs b1 ... b2
    return np.concatenate([px, py])


def edge_positions(cyc: np.ndarray, ok: np.ndarray, u: int, v: int) -> np.ndarray:
    """Indices i with ok[i] true and (cyc[i], cyc[i+1]) different from the edge uv."""
    nxt = successor(cyc)
    not_t = ~(((cyc == u) & (nxt == v)) | ((cyc == v) & (nxt == u)))
    return np.flatnonzero(ok & not_t)


# -- cycles in an intact cube -------------------------------------------------


def ladder(n: int, u: int, v: int, length: int, first_dim: int | None = None) -> np.ndarray:
    """Cycle of ``length`` through the edge uv of Q_n built as a ladder.

    Rungs run along the edge direction, rails follow a Gray path in the
    remaining coordinates whose first step flips ``first_dim``.
    """
    d_edge = (u ^ v).bit_length() - 1
    others = [d for d in range(n) if d != d_edge]
    if first_dim is not None:
        others.remove(first_dim)
        others.insert(0, first_dim)
    p = length // 2
    g = gray_array(n - 1)[:p]
    spread = np.zeros_like(g)
    for b, d in enumerate(others):
        spread |= ((g >> b) & 1) << d
    return np.concatenate([u ^ spread, (v ^ spread)[::-1]])


def _check_cube_edge(n: int, e) -> tuple[int, int]:
    u, v = (int(x) for x in e)
    check_label(u, n)
    check_label(v, n)
    d = u ^ v
    if d == 0 or d & (d - 1):
        raise LabelError(f"({u}, {v}) is not an edge of Q_{n}")
    return u, v


def cube_cycle(n: int, u: int, v: int, length: int,
               want: Callable[[int, int], bool] | None = None) -> np.ndarray:
    """Ladder cycle through uv; with ``want``, try to include another edge satisfying it."""
    if want is None or n < 3:
        return ladder(n, u, v, length)
    d_edge = (u ^ v).bit_length() - 1
    for d in range(n):
        if d == d_edge:
            continue
        bit = 1 << d
        if want(u, u ^ bit) or want(v, v ^ bit):
            return ladder(n, u, v, length, first_dim=d)
    if length == 1 << n:
        for a in range(1 << n):
            for d in range(n):
                b = a ^ (1 << d)
                if a < b and {a, b} != {u, v} and want(a, b):
                    return np.asarray(_ham_two(list(range(n)), 0, (u, v), (a, b)), dtype=np.int64)
    return ladder(n, u, v, length)


def cycle_through_edge(n: int, e, length: int) -> Cycle:
    """Cycle of the given even length through edge e of Q_n."""
    check_dim(n)
    u, v = _check_cube_edge(n, e)
    if length % 2 or not 4 <= length <= (1 << n):
        raise ArgumentError(f"length {length} is not an even value in 4..{1 << n}")
    return Cycle.of(ladder(n, u, v, length)).canonical()


def _square(base: int, d0: int, d1: int) -> list[int]:
    return [base, base ^ (1 << d0), base ^ (1 << d0) ^ (1 << d1), base ^ (1 << d1)]


def _ham_one(dims: list[int], base: int, e) -> list[int]:
    """Hamiltonian cycle of the subcube base + span(dims) through e."""
    u, v = e
    d_edge = (u ^ v).bit_length() - 1
    others = [d for d in dims if d != d_edge]
    g = gray_array(len(others))
    spread = np.zeros_like(g)
    for b, d in enumerate(others):
        spread |= ((g >> b) & 1) << d
    return (u ^ spread).tolist() + (v ^ spread)[::-1].tolist()


def _splice_lists(cx: list[int], g, cy: list[int], mask: int) -> list[int]:
    out = splice(np.asarray(cx, dtype=np.int64), g[0], g[1], np.asarray(cy, dtype=np.int64), mask)
    return out.tolist()


def _ham_two(dims: list[int], base: int, e, f) -> list[int]:
    """Hamiltonian cycle of base + span(dims) through the distinct edges e and f.

    Splits along a coordinate used by neither edge, solves both halves and
    merges them across a pair of matched cross edges.
    """
    if len(dims) == 2:
        return _square(base, dims[0], dims[1])
    used = {(e[0] ^ e[1]).bit_length() - 1, (f[0] ^ f[1]).bit_length() - 1}
    s = next(d for d in reversed(dims) if d not in used)
    sub = [d for d in dims if d != s]
    bit = 1 << s
    side = lambda w: (w ^ base) & bit  # noqa: E731
    base_x = base
    base_y = base ^ bit
    same = lambda a, b: {a[0], a[1]} == {b[0], b[1]}  # noqa: E731
    if side(e[0]) == side(f[0]):
        bx, by = (base_x, base_y) if side(e[0]) == 0 else (base_y, base_x)
        cx = _ham_two(sub, bx, e, f)
        k = len(cx)
        g = next(
            (cx[i], cx[(i + 1) % k]) for i in range(k)
            if not same((cx[i], cx[(i + 1) % k]), e) and not same((cx[i], cx[(i + 1) % k]), f)
        )
        cy = _ham_one(sub, by, (g[0] ^ bit, g[1] ^ bit))
        return _splice_lists(cx, g, cy, bit)
    if side(e[0]):
        e, f = f, e
    # e in the base half, f in the other
    a = e[0]
    g = None
    for d in sub:
        cand = (a, a ^ (1 << d))
        if not same(cand, e) and not same((cand[0] ^ bit, cand[1] ^ bit), f):
            g = cand
            break
    if g is None:  # every edge at a collides; move to the other endpoint
        a = e[1]
        for d in sub:
            cand = (a, a ^ (1 << d))
            if not same(cand, e) and not same((cand[0] ^ bit, cand[1] ^ bit), f):
                g = cand
                break
    cx = _ham_two(sub, base_x, e, g)
    cy = _ham_two(sub, base_y, f, (g[0] ^ bit, g[1] ^ bit))
    return _splice_lists(cx, g, cy, bit)


def hamiltonian_two_edges(n: int, e, f) -> Cycle:
    """Hamiltonian cycle of Q_n (n >= 2) containing both edges e and f."""
    check_dim(n)
    if n < 2:
        raise ArgumentError("two distinct edges need n >= 2")
    e = _check_cube_edge(n, e)
    f = _check_cube_edge(n, f)
    if set(e) == set(f):
        raise ArgumentError("edges must be distinct")
    return Cycle.of(_ham_two(list(range(n)), 0, e, f)).canonical()


_Q3_SHELL = (1, 3, 2, 6, 4, 5)


def q3_shell_hamiltonian(D) -> Cycle:
    """The 6-cycle Q_3 - D for each of the four perfect codes of Q_3."""
    members = sorted(int(v) for v in D)
    if len(members) != 2 or members[0] ^ members[1] != 7:
        raise ArgumentError(f"{members} is not a perfect code of Q_3")
    return Cycle(_Q3_SHELL).translate(members[0]).canonical()


def as_edge(e) -> Edge:
    return e if isinstance(e, Edge) else Edge.of(*e)
