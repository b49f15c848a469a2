"""Dominating-set predicates and constructions in hypercubes.

Includes Hamming codes as perfect independent dominating (PID) sets, the
doubling lift Q_n -> Q_{2n+1}, coset partitions, Hamming shells and the
total perfect dominating sets obtained from a product with a smaller cube.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

import numpy as np

from . import gf2
from .errors import ArgumentError, ScaleError, UnsupportedError
from .hypercube import CoordinateMap, check_dim, check_label, parity

MASK_LIMIT = 26  # largest n for which dense 2^n membership arrays are built


@dataclass(frozen=True)
class VertexSet:
    n: int
    members: tuple[int, ...]
    _lookup: frozenset = field(init=False, repr=False, compare=False)

    def __init__(self, n: int, members: Iterable[int] = ()):
        check_dim(n)
        ms = sorted({int(v) for v in members})
        for v in ms[:1] + ms[-1:]:
            check_label(v, n)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "members", tuple(ms))
        object.__setattr__(self, "_lookup", frozenset(ms))

    def __contains__(self, v) -> bool:
        return int(v) in self._lookup

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.members, dtype=np.int64)

    def mask(self) -> np.ndarray:
        """Boolean membership array over all 2^n labels."""
        if self.n > MASK_LIMIT:
            raise ScaleError(f"dense mask for Q_{self.n} is too large")
        out = np.zeros(1 << self.n, dtype=bool)
        out[self.as_array()] = True
        return out

    def translate(self, x: int) -> "VertexSet":
        return VertexSet(self.n, (v ^ x for v in self.members))

    def to_json(self) -> dict:
        return {"n": self.n, "members": list(self.members)}

    @classmethod
    def from_json(cls, data: dict) -> "VertexSet":
        return cls(int(data["n"]), data["members"])


@dataclass(frozen=True)
class PidSet:
    base: VertexSet
    linear: bool
    offset: int = 0

    @property
    def n(self) -> int:
        return self.base.n

    def __contains__(self, v) -> bool:
        return v in self.base

    def __len__(self) -> int:
        return len(self.base)


class Shell:
    """Induced subgraph Q_n - removed, held implicitly."""

    def __init__(self, n: int, removed: VertexSet | Iterable[int] = ()):
        check_dim(n)
        if not isinstance(removed, VertexSet):
            removed = VertexSet(n, removed)
        if removed.n != n:
            raise ArgumentError(f"removed set lives in Q_{removed.n}, not Q_{n}")
        self.n = n
        self.removed = removed
        self._mask = None

    def __repr__(self):
        return f"Shell(n={self.n}, removed={len(self.removed)})"

    @property
    def survivor_count(self) -> int:
        return (1 << self.n) - len(self.removed)

    def alive_mask(self) -> np.ndarray:
        if self._mask is None:
            self._mask = ~self.removed.mask()
        return self._mask

    def survives(self, v: int) -> bool:
        return 0 <= v < (1 << self.n) and v not in self.removed

    def survivors(self) -> np.ndarray:
        return np.flatnonzero(self.alive_mask()).astype(np.int64)

    def neighbors(self, v: int) -> list[int]:
        return [w for w in (v ^ (1 << i) for i in range(self.n)) if w not in self.removed]

    def degrees(self, vertices=None) -> np.ndarray:
        alive = self.alive_mask()
        vs = self.survivors() if vertices is None else np.asarray(vertices, dtype=np.int64)
        deg = np.zeros(len(vs), dtype=np.int64)
        for i in range(self.n):
            deg += alive[vs ^ (1 << i)]
        return deg

    def has_edge(self, u: int, v: int) -> bool:
        d = u ^ v
        return d != 0 and d & (d - 1) == 0 and self.survives(u) and self.survives(v)

    def edges(self) -> list[tuple[int, int]]:
        alive = self.alive_mask()
        out = []
        for v in self.survivors().tolist():
            for i in range(self.n):
                w = v ^ (1 << i)
                if v < w and alive[w]:
                    out.append((v, w))
        return out

    def edge_count(self) -> int:
        return int(self.degrees().sum()) // 2

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "members": self.survivors().tolist(),
            "removed": list(self.removed.members),
        }


# -- predicates ---------------------------------------------------------------


def _neighbor_counts(D: VertexSet) -> np.ndarray:
    mark = D.mask().astype(np.int64)
    idx = np.arange(1 << D.n, dtype=np.int64)
    count = np.zeros(1 << D.n, dtype=np.int64)
    for i in range(D.n):
        count += mark[idx ^ (1 << i)]
    return count


def is_independent(S: VertexSet) -> bool:
    """No two members at Hamming distance 1."""
    if len(S) < 2:
        return True
    return not bool((_neighbor_counts(S)[S.as_array()] > 0).any())


def is_strongly_independent(F: VertexSet) -> bool:
    """Pairwise distance >= 3, i.e. disjoint closed neighbourhoods."""
    if len(F) < 2:
        return True
    counts = _neighbor_counts(F)
    mark = F.mask()
    if (counts[mark] > 0).any():  # distance 1
        return False
    return not bool((counts[~mark] > 1).any())  # distance 2 shares a neighbour


def is_perfect_dominating(D: VertexSet) -> bool:
    """Every vertex outside D has exactly one neighbour in D."""
    counts = _neighbor_counts(D)
    return bool((counts[~D.mask()] == 1).all())


def is_total_dominating(D: VertexSet) -> bool:
    """Every vertex of Q_n, members included, has a neighbour in D."""
    return bool((_neighbor_counts(D) >= 1).all())


def closed_neighborhoods_partition(D: VertexSet) -> bool:
    """{N[d] : d in D} partitions V(Q_n)."""
    counts = _neighbor_counts(D) + D.mask()
    return bool((counts == 1).all())


# -- constructions ------------------------------------------------------------


def _pid(base: VertexSet, linear: bool, offset: int) -> PidSet:
    if not (is_independent(base) and is_perfect_dominating(base)):
        raise ArgumentError("set is not a perfect independent dominating set")
    return PidSet(base, linear, offset)


def construct_hamming_pid(m: int) -> PidSet:
    """Kernel of the m x (2^m - 1) Hamming check matrix as a PID set."""
    if not 2 <= m <= 4:
        raise ArgumentError(f"m must be in 2..4, got {m}")
    code = gf2.kernel(gf2.hamming_parity_check(m))
    return _pid(VertexSet(code.n, code.codewords), True, 0)


def lift_words(words: Iterable[int], n: int) -> np.ndarray:
    """{(x, y, j) : x in Q_n, y in D' + x, j = parity(y)} packed as x | y<<n | j<<2n."""
    base = np.asarray(sorted(int(w) for w in words), dtype=np.int64)
    x = np.repeat(np.arange(1 << n, dtype=np.int64), len(base))
    y = np.tile(base, 1 << n) ^ x
    j = np.zeros_like(y)
    for i in range(n):
        j ^= (y >> i) & 1
    return x | (y << n) | (j << (2 * n))


def lift_pid(Dp: PidSet) -> PidSet:
    n = Dp.n
    if not Dp.linear or Dp.offset != 0:
        raise UnsupportedError("the lift is defined for linear PID sets only")
    if (n + 1) & n:
        raise UnsupportedError(f"n = {n} is not of the form 2^m - 1")
    if n > 7:
        raise ScaleError("lifting beyond Q_15 is outside desk scale")
    words = lift_words(Dp.base.members, n)
    return _pid(VertexSet(2 * n + 1, words.tolist()), True, 0)


def coset_family(D0: PidSet) -> list[VertexSet]:
    """[D0, D0 + e_1, ..., D0 + e_n]."""
    n = D0.n
    if not D0.linear:
        raise UnsupportedError("coset family needs a linear PID set")
    if (n + 1) & n:
        raise UnsupportedError(f"n = {n} is not of the form 2^m - 1")
    base = D0.base.translate(D0.offset)
    return [base] + [base.translate(1 << i) for i in range(n)]


def is_balanced(S: VertexSet) -> bool:
    odd = sum(parity(v) for v in S.members)
    return 2 * odd == len(S)


def slice_of(D: PidSet, t: int) -> VertexSet:
    """{x in Q_n : (x, t) in D} for D a lifted PID set in Q_{2n+1}."""
    total = D.n
    if total % 2 == 0:
        raise ArgumentError("slices are defined on lifted sets in odd dimension")
    n = (total - 1) // 2
    check_label(t, n + 1)
    lo, hi = t << n, (t + 1) << n
    arr = D.base.as_array()
    inside = arr[(arr >= lo) & (arr < hi)]
    return VertexSet(n, (inside - lo).tolist())


def make_shell(n: int, D: VertexSet | PidSet | Iterable[int]) -> Shell:
    if isinstance(D, PidSet):
        D = D.base
    return Shell(n, D)


def construct_total_pd(n: int) -> VertexSet:
    """D x V(Q_{n-m}) with D a Hamming code of length m = 2^k - 1 < n < 2^(k+1) - 1."""
    check_dim(n)
    if n < 4:
        raise ArgumentError("total perfect dominating construction needs n >= 4")
    if (n + 1) & n == 0:
        raise ArgumentError(f"n = {n} has the form 2^k - 1; use construct_hamming_pid")
    k = (n + 1).bit_length() - 1
    m = (1 << k) - 1
    code = construct_hamming_pid(k).base.as_array()
    high = np.arange(1 << (n - m), dtype=np.int64)
    words = (code[:, None] | (high[None, :] << m)).ravel()
    return VertexSet(n, words.tolist())


def total_pd_parameters(n: int) -> tuple[int, int]:
    """(k, m) with m = 2^k - 1 the largest Hamming length below n."""
    k = (n + 1).bit_length() - 1
    return k, (1 << k) - 1


def unattended_count(n: int, k: int) -> int:
    """Vertices left outside every closed neighbourhood when only 2^(n-k) - 1 centres are used."""
    return (1 << n) - (n + 1) * ((1 << (n - k)) - 1)


# -- canonical lifted codes and the map onto them -------------------------------


@lru_cache(maxsize=None)
def canonical_check_matrix(m: int) -> gf2.Gf2Matrix:
    """Check matrix of the m-fold lift starting from the length-3 repetition code."""
    if m < 2:
        raise ArgumentError("m must be >= 2")
    H = gf2.hamming_parity_check(2)
    for _ in range(m - 2):
        H = gf2.lift_check_matrix(H)
    return H


@lru_cache(maxsize=None)
def canonical_member_mask(m: int) -> np.ndarray:
    """Membership array of the canonical lifted Hamming code in Q_{2^m - 1}."""
    n = (1 << m) - 1
    if n > MASK_LIMIT:
        raise ScaleError(f"dense membership for Q_{n} is too large")
    H = canonical_check_matrix(m)
    idx = np.arange(1 << n, dtype=np.int64)
    synd = np.zeros_like(idx)
    for c, col in enumerate(H.columns()):
        synd ^= ((idx >> c) & 1) * col
    out = synd == 0
    out.flags.writeable = False
    return out


def canonical_pid(m: int) -> PidSet:
    mask = canonical_member_mask(m)
    return PidSet(VertexSet((1 << m) - 1, np.flatnonzero(mask).tolist()), True, 0)


def hamming_coset_map(n: int, removed: VertexSet) -> CoordinateMap:
    """Automorphism of Q_n carrying a coset of a linear perfect code onto the canonical code.

    The map is ``v -> permute(v ^ shift)``; raises UnsupportedError when
    ``removed`` is not such a coset.
    """
    if (n + 1) & n or n < 3:
        raise UnsupportedError(f"n = {n} is not a Hamming length 2^m - 1 with m >= 2")
    m = (n + 1).bit_length() - 1
    if len(removed) != (1 << n) // (n + 1):
        raise UnsupportedError("removed set has the wrong size for a perfect code")
    shift = removed.members[0]
    words = [v ^ shift for v in removed.members]
    if not gf2.is_linear(words):
        raise UnsupportedError("removed set is not a coset of a linear code")
    H_own = gf2.check_matrix_of(words, n)
    if H_own.rows != m:
        raise UnsupportedError("code dimension does not match a Hamming code")
    own_cols = H_own.columns()
    canon_cols = canonical_check_matrix(m).columns()
    where = {c: i for i, c in enumerate(canon_cols)}
    if len(set(own_cols)) != n or 0 in own_cols:
        raise UnsupportedError("code is not perfect (repeated or zero check columns)")
    # own coordinate i goes to canonical coordinate where[own_cols[i]]
    sigma = [0] * n
    for i, c in enumerate(own_cols):
        sigma[where[c]] = i + 1
    return CoordinateMap(sigma, shift)
