"""Implicit hypercube Q_n: vertices are ints in [0, 2^n), edges flip one bit."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ArgumentError, DimensionError, LabelError

MAX_DIM = 62


def check_dim(n: int) -> int:
    if not 1 <= n <= MAX_DIM:
        raise DimensionError(f"cube dimension must be in 1..{MAX_DIM}, got {n}")
    return n


def check_label(v: int, n: int) -> int:
    if not 0 <= v < (1 << n):
        raise LabelError(f"label {v} is not a vertex of Q_{n}")
    return v


@dataclass(frozen=True, order=True)
class Edge:
    """Canonical edge with ``u < v``; ``dim_index`` is the flipped coordinate, 1-indexed."""

    u: int
    v: int

    def __post_init__(self):
        d = self.u ^ self.v
        if self.u >= self.v or d & (d - 1):
            raise LabelError(f"({self.u}, {self.v}) is not a canonical cube edge")

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        a, b = int(a), int(b)
        if a == b:
            raise LabelError(f"({a}, {b}) is not a cube edge")
        return cls(min(a, b), max(a, b))

    @property
    def dim_index(self) -> int:
        return (self.u ^ self.v).bit_length()

    def __iter__(self):
        yield self.u
        yield self.v

    def translate(self, x: int) -> "Edge":
        return Edge.of(self.u ^ x, self.v ^ x)


def neighbors(v: int, n: int) -> list[int]:
    check_dim(n)
    check_label(v, n)
    return [v ^ (1 << i) for i in range(n)]


def parity(v: int) -> int:
    """0 for even weight, 1 for odd."""
    return int(v).bit_count() & 1


def hamming_distance(u: int, v: int) -> int:
    return (int(u) ^ int(v)).bit_count()


def is_adjacent(u: int, v: int) -> bool:
    d = int(u) ^ int(v)
    return d != 0 and d & (d - 1) == 0


def split(v: int, n_low: int, n_high: int) -> tuple[int, int]:
    """(v mod 2^n_low, v div 2^n_low) for v in Q_{n_low + n_high}."""
    check_label(v, n_low + n_high)
    return v & ((1 << n_low) - 1), v >> n_low


def join(low: int, high: int, n_low: int) -> int:
    if not 0 <= low < (1 << n_low):
        raise LabelError(f"low part {low} does not fit in {n_low} bits")
    return low | (high << n_low)


def gray(i):
    """Reflected Gray code; works on ints and integer arrays."""
    return i ^ (i >> 1)


def inverse_gray(g: int) -> int:
    i = 0
    while g:
        i ^= g
        g >>= 1
    return i


def gray_cycle(n: int) -> list[int]:
    """Hamiltonian cycle of Q_n in reflected Gray order, starting at 0."""
    check_dim(n)
    if n < 2:
        raise DimensionError("a Hamiltonian cycle needs n >= 2")
    return [gray(i) for i in range(1 << n)]


def gray_array(n: int) -> np.ndarray:
    i = np.arange(1 << n, dtype=np.int64)
    return i ^ (i >> 1)


def _check_perm(sigma: Sequence[int], n: int) -> None:
    if sorted(sigma) != list(range(1, n + 1)):
        raise ArgumentError(f"{list(sigma)} is not a permutation of 1..{n}")


def permute_coordinates(v: int, sigma: Sequence[int]) -> int:
    """Output coordinate i is input coordinate sigma[i-1] (both 1-indexed)."""
    n = len(sigma)
    _check_perm(sigma, n)
    check_label(v, n)
    out = 0
    for i, s in enumerate(sigma):
        out |= ((v >> (s - 1)) & 1) << i
    return out


class CoordinateMap:
    """Vectorised ``v -> permute_coordinates(v ^ shift, sigma)`` and its inverse."""

    def __init__(self, sigma: Sequence[int], shift: int = 0):
        n = len(sigma)
        _check_perm(sigma, n)
        self.n = n
        self.sigma = tuple(sigma)
        self.shift = shift
        self.identity = self.sigma == tuple(range(1, n + 1))
        inv = [0] * n
        for i, s in enumerate(self.sigma):
            inv[s - 1] = i + 1
        self.inverse_sigma = tuple(inv)

    @staticmethod
    def _apply(arr: np.ndarray, sigma: Sequence[int]) -> np.ndarray:
        out = np.zeros_like(arr)
        for i, s in enumerate(sigma):
            out |= ((arr >> (s - 1)) & 1) << i
        return out

    def forward(self, arr):
        arr = np.asarray(arr, dtype=np.int64) ^ self.shift
        return arr if self.identity else self._apply(arr, self.sigma)

    def backward(self, arr):
        arr = np.asarray(arr, dtype=np.int64)
        if not self.identity:
            arr = self._apply(arr, self.inverse_sigma)
        return arr ^ self.shift


def edges_of(n: int):
    """All edges of Q_n as (u, v) with u < v."""
    for v in range(1 << n):
        for i in range(n):
            w = v ^ (1 << i)
            if v < w:
                yield v, w
