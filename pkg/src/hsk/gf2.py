"""GF(2) vectors and matrices stored as int bitsets.

Coordinate ``i`` (1-indexed) of a word lives in bit ``i - 1``, so the least
significant bit is the first coordinate. The same convention is used for
hypercube vertex labels everywhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionError

MAX_LENGTH = 62


@dataclass(frozen=True)
class BitVector:
    """Fixed-length word over GF(2)."""

    length: int
    bits: int = 0

    def __post_init__(self):
        if not 1 <= self.length <= MAX_LENGTH:
            raise DimensionError(f"length must be in 1..{MAX_LENGTH}, got {self.length}")
        if not 0 <= self.bits < (1 << self.length):
            raise DimensionError(f"bits {self.bits:#x} do not fit in {self.length} coordinates")

    @classmethod
    def from_coords(cls, coords: Sequence[int]) -> "BitVector":
        bits = 0
        for i, c in enumerate(coords):
            if c & 1:
                bits |= 1 << i
        return cls(len(coords), bits)

    def coords(self) -> tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(self.length))

    def weight(self) -> int:
        return self.bits.bit_count()

    def __int__(self) -> int:
        return self.bits

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.length != other.length:
            raise DimensionError("length mismatch")
        return BitVector(self.length, self.bits ^ other.bits)


def _as_word(x, length: int) -> int:
    if isinstance(x, BitVector):
        if x.length != length:
            raise DimensionError(f"expected length {length}, got {x.length}")
        return x.bits
    x = int(x)
    if not 0 <= x < (1 << length):
        raise DimensionError(f"word {x} does not fit in {length} coordinates")
    return x


@dataclass(frozen=True)
class Gf2Matrix:
    """Row-major binary matrix; ``row_words[r]`` bit ``c`` is entry (r, c)."""

    rows: int
    cols: int
    row_words: tuple[int, ...]

    def __post_init__(self):
        if len(self.row_words) != self.rows:
            raise DimensionError(f"expected {self.rows} rows, got {len(self.row_words)}")
        if not 1 <= self.cols <= MAX_LENGTH:
            raise DimensionError(f"column count {self.cols} out of range")
        for w in self.row_words:
            if not 0 <= w < (1 << self.cols):
                raise DimensionError("row word wider than the column count")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Gf2Matrix":
        if not rows:
            raise DimensionError("matrix needs at least one row")
        cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), cols, tuple(BitVector.from_coords(r).bits for r in rows))

    @classmethod
    def from_columns(cls, columns: Sequence[int], rows: int) -> "Gf2Matrix":
        """Build from column words whose bit ``r`` is row ``r``."""
        words = [0] * rows
        for c, col in enumerate(columns):
            if not 0 <= col < (1 << rows):
                raise DimensionError(f"column {c} does not fit in {rows} rows")
            for r in range(rows):
                if (col >> r) & 1:
                    words[r] |= 1 << c
        return cls(rows, len(columns), tuple(words))

    def column(self, c: int) -> int:
        """Column ``c`` (0-indexed) as an int whose bit ``r`` is row ``r``."""
        out = 0
        for r, w in enumerate(self.row_words):
            out |= ((w >> c) & 1) << r
        return out

    def columns(self) -> list[int]:
        return [self.column(c) for c in range(self.cols)]

    def entry(self, r: int, c: int) -> int:
        return (self.row_words[r] >> c) & 1

    def to_lists(self) -> list[list[int]]:
        return [[self.entry(r, c) for c in range(self.cols)] for r in range(self.rows)]

    def rank(self) -> int:
        return len(_row_reduce(list(self.row_words), self.cols)[1])


@dataclass(frozen=True)
class LinearCode:
    n: int
    dim: int
    codewords: frozenset[int] = field(repr=False)
    check: Gf2Matrix = field(repr=False)

    def __contains__(self, x) -> bool:
        return int(x) in self.codewords

    def __len__(self) -> int:
        return len(self.codewords)

    def sorted_words(self) -> list[int]:
        return sorted(self.codewords)

    def to_json(self) -> dict:
        return {"n": self.n, "dim": self.dim, "codewords": self.sorted_words()}


def _row_reduce(words: list[int], cols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    work = list(words)
    pivots: list[int] = []
    row = 0
    for col in range(cols):
        pivot = next((r for r in range(row, len(work)) if (work[r] >> col) & 1), None)
        if pivot is None:
            continue
        work[row], work[pivot] = work[pivot], work[row]
        for r in range(len(work)):
            if r != row and (work[r] >> col) & 1:
                work[r] ^= work[row]
        pivots.append(col)
        row += 1
        if row == len(work):
            break
    return work[:row], pivots


def null_space_basis(H: Gf2Matrix) -> list[int]:
    """Basis of {x : Hx = 0}, one vector per free column."""
    reduced, pivots = _row_reduce(list(H.row_words), H.cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(H.cols):
        if free in pivot_set:
            continue
        v = 1 << free
        for r, p in enumerate(pivots):
            if (reduced[r] >> free) & 1:
                v |= 1 << p
        basis.append(v)
    return basis


def span(basis: Iterable[int]) -> np.ndarray:
    """All XOR combinations of ``basis`` as an int64 array."""
    words = np.zeros(1, dtype=np.int64)
    for b in basis:
        words = np.concatenate([words, words ^ np.int64(b)])
    return words


def hamming_parity_check(m: int) -> Gf2Matrix:
    """m x (2^m - 1) matrix whose column j (1-indexed) is binary(j), LSB in row 0."""
    if not 2 <= m <= 5:
        raise DimensionError(f"m must be in 2..5, got {m}")
    return Gf2Matrix.from_columns(list(range(1, 1 << m)), m)


def kernel(H: Gf2Matrix) -> LinearCode:
    basis = null_space_basis(H)
    words = frozenset(int(w) for w in span(basis))
    return LinearCode(n=H.cols, dim=len(basis), codewords=words, check=H)


def syndrome(H: Gf2Matrix, x) -> int:
    """H x over GF(2), returned as an int of ``H.rows`` bits."""
    x = _as_word(x, H.cols)
    out = 0
    for r, w in enumerate(H.row_words):
        out |= ((w & x).bit_count() & 1) << r
    return out


def lift_check_matrix(Hp: Gf2Matrix) -> Gf2Matrix:
    """Block matrix [[Hp, Hp, 0], [0...0, 1...1, 1]] acting on (x, y, j)."""
    m, n = Hp.rows, Hp.cols
    if n != (1 << m) - 1:
        raise DimensionError(f"expected {m} x {(1 << m) - 1} matrix, got {m} x {n}")
    if 2 * n + 1 > MAX_LENGTH:
        raise DimensionError("lifted length exceeds the word size")
    top = tuple(w | (w << n) for w in Hp.row_words)
    bottom = ((1 << (n + 1)) - 1) << n
    return Gf2Matrix(m + 1, 2 * n + 1, top + (bottom,))


def xor_translate(S: Iterable[int], x) -> frozenset[int]:
    """{s ^ x : s in S}. Mixed BitVector lengths raise DimensionError."""
    items = list(S)
    lengths = {v.length for v in items if isinstance(v, BitVector)}
    if isinstance(x, BitVector):
        lengths.add(x.length)
    if len(lengths) > 1:
        raise DimensionError("length mismatch in xor_translate")
    if lengths:
        length = lengths.pop()
        xb = _as_word(x, length)
        return frozenset(BitVector(length, _as_word(s, length) ^ xb) for s in items)
    xb = int(x)
    return frozenset(int(s) ^ xb for s in items)


def check_matrix_of(words: Iterable[int], n: int) -> Gf2Matrix:
    """A parity-check matrix whose kernel is the span of ``words``."""
    words = [int(w) for w in words]
    basis, _ = _row_reduce(words, n)
    if not basis:
        return Gf2Matrix(n, n, tuple(1 << i for i in range(n)))
    dual = null_space_basis(Gf2Matrix(len(basis), n, tuple(basis)))
    if not dual:
        return Gf2Matrix(1, n, (0,))
    return Gf2Matrix(len(dual), n, tuple(dual))


def is_linear(words: Iterable[int]) -> bool:
    """Contains zero and is closed under XOR."""
    s = set(int(w) for w in words)
    if 0 not in s:
        return False
    items = sorted(s)
    basis, _ = _row_reduce(items, max(items).bit_length() or 1)
    return len(s) == 1 << len(basis)
