"""Vertex connectivity of shells through unit-capacity max-flow (Menger).

Each surviving vertex i becomes two flow nodes, ``2i`` (in) and ``2i + 1``
(out), joined by a unit arc; every surviving edge uv becomes the arcs
out(u) -> in(v) and out(v) -> in(u). Paths from out(s) to in(t) are then
internally vertex-disjoint.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order, connected_components, maximum_flow

from .domination import Shell, VertexSet
from .errors import ArgumentError, LabelError
from .hypercube import check_dim


class FlowGraph:
    """Vertex-split flow network of a shell, built once and reused for every pair."""

    def __init__(self, shell: Shell):
        self.shell = shell
        self.vertices = shell.survivors()
        self.node_count = 2 * len(self.vertices)
        index = np.full(1 << shell.n, -1, dtype=np.int64)
        index[self.vertices] = np.arange(len(self.vertices))
        self.index = index
        k = len(self.vertices)
        heads, tails = [np.arange(k) * 2], [np.arange(k) * 2 + 1]
        for i in range(shell.n):
            nb = index[self.vertices ^ (1 << i)]
            ok = nb >= 0
            heads.append(np.flatnonzero(ok) * 2 + 1)
            tails.append(nb[ok] * 2)
        rows, cols = np.concatenate(heads), np.concatenate(tails)
        self.arc_count = len(rows)
        shape = (self.node_count, self.node_count)
        self.capacity = csr_matrix((np.ones(len(rows), dtype=np.int32), (rows, cols)), shape=shape)
        self.capacity.sort_indices()
        # for cuts, only the in -> out arcs may be cut
        big = np.full(len(rows), k + 1, dtype=np.int32)
        big[:k] = 1
        self.cut_capacity = csr_matrix((big, (rows, cols)), shape=shape)
        self.cut_capacity.sort_indices()

    def idx(self, v: int) -> int:
        if not self.shell.survives(v):
            raise LabelError(f"vertex {v} is not in the shell")
        return int(self.index[v])

    def flow(self, s: int, t: int, cap=None):
        si, ti = self.idx(s), self.idx(t)
        if si == ti:
            raise ArgumentError("source and sink must differ")
        cap = self.capacity if cap is None else cap
        return maximum_flow(cap, 2 * si + 1, 2 * ti, method="dinic")

    def max_paths(self, s: int, t: int) -> int:
        return int(self.flow(s, t).flow_value)

    def min_cut(self, s: int, t: int) -> tuple[int, list[int]]:
        """Flow value and a minimum s-t vertex separator (s, t non-adjacent)."""
        if _adjacent(s, t):
            raise ArgumentError("adjacent vertices have no separating vertex set")
        res = self.flow(s, t, self.cut_capacity)
        residual = (self.cut_capacity - res.flow).tocsr()
        residual.data = np.where(residual.data > 0, 1, 0).astype(np.int8)
        residual.eliminate_zeros()
        reach = np.zeros(self.node_count, dtype=bool)
        reach[breadth_first_order(residual, 2 * self.idx(s) + 1, return_predecessors=False)] = True
        cut = np.flatnonzero(reach[0::2] & ~reach[1::2])
        return int(res.flow_value), sorted(self.vertices[cut].tolist())


def max_disjoint_paths(shell: Shell, s: int, t: int, graph: FlowGraph | None = None) -> int:
    """Maximum number of internally vertex-disjoint s-t paths in the shell."""
    if s == t:
        raise ArgumentError("s and t must differ")
    for x in (s, t):
        if not shell.survives(x):
            raise ArgumentError(f"vertex {x} is removed or outside Q_{shell.n}")
    return (graph or FlowGraph(shell)).max_paths(s, t)


def _adjacent(u: int, v: int) -> bool:
    d = u ^ v
    return d & (d - 1) == 0


def reduction_pairs(shell: Shell) -> list[tuple[int, int]]:
    """Non-adjacent pairs whose minimum local connectivity equals kappa.

    A minimum-degree vertex v is paired with each non-neighbour, and every
    two non-adjacent neighbours of v are paired with each other.
    """
    vs = shell.survivors()
    deg = shell.degrees(vs)
    v = int(vs[int(np.argmin(deg))])
    nbrs = shell.neighbors(v)
    pairs = [(v, int(w)) for w in vs.tolist() if w != v and not _adjacent(v, w)]
    pairs += [(a, b) for a, b in itertools.combinations(nbrs, 2) if not _adjacent(a, b)]
    return pairs


def all_nonadjacent_pairs(shell: Shell) -> list[tuple[int, int]]:
    vs = shell.survivors().tolist()
    return [(a, b) for a, b in itertools.combinations(vs, 2) if not _adjacent(a, b)]


def _components(shell: Shell, dropped: set[int], limit: int = 3, width: int = 16) -> list[list[int]]:
    keep = [v for v in shell.survivors().tolist() if v not in dropped]
    pos = {v: i for i, v in enumerate(keep)}
    rows, cols = [], []
    for v in keep:
        for i in range(shell.n):
            w = v ^ (1 << i)
            if w in pos:
                rows.append(pos[v])
                cols.append(pos[w])
    g = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(len(keep), len(keep)))
    _, labels = connected_components(g, directed=False)
    out: dict[int, list[int]] = {}
    for v, lab in zip(keep, labels.tolist()):
        out.setdefault(lab, []).append(v)
    return [c[:width] for c in list(out.values())[:limit]]


@dataclass
class ConnectivityResult:
    ok: bool
    witness: dict | None = None
    pairs_checked: int = 0


def verify_connectivity_at_least(shell: Shell, k: int, exhaustive: bool = False,
                                 pairs=None, graph: FlowGraph | None = None) -> ConnectivityResult:
    """True iff every non-adjacent surviving pair has >= k disjoint paths.

    Uses the minimum-degree reduction unless ``exhaustive``; ``pairs``
    restricts the check to a given sample. On failure the witness holds a
    separator of size < k and a sample of the components it leaves.
    """
    if shell.survivor_count <= k:
        raise ArgumentError(f"need more than {k} surviving vertices")
    g = graph or FlowGraph(shell)
    if pairs is None:
        pairs = all_nonadjacent_pairs(shell) if exhaustive else reduction_pairs(shell)
    count = 0
    for s, t in pairs:
        count += 1
        if g.max_paths(s, t) < k:
            _, sep = g.min_cut(s, t)
            witness = {
                "k_claimed": k,
                "separator": sep,
                "components_sample": _components(shell, set(sep)),
            }
            return ConnectivityResult(False, witness, count)
    return ConnectivityResult(True, None, count)


def is_connected(shell: Shell) -> bool:
    return len(_components(shell, set(), limit=2, width=1)) <= 1


def vertex_connectivity(shell: Shell, exhaustive: bool = False) -> int:
    """Exact kappa; 0 for a disconnected shell."""
    if shell.survivor_count <= 1 or not is_connected(shell):
        return 0
    pairs = all_nonadjacent_pairs(shell) if exhaustive else reduction_pairs(shell)
    if not pairs:  # complete graph
        return shell.survivor_count - 1
    g = FlowGraph(shell)
    return min(g.max_paths(s, t) for s, t in pairs)


def random_strongly_independent(n: int, target_size: int, seed: int = 0) -> VertexSet:
    """Greedy random set with pairwise distance >= 3; may stop below ``target_size``."""
    check_dim(n)
    rng = np.random.default_rng(seed)
    blocked = np.zeros(1 << n, dtype=bool)
    chosen: list[int] = []
    ball = [0] + [1 << i for i in range(n)]
    ball += [(1 << i) | (1 << j) for i in range(n) for j in range(i + 1, n)]
    ball_arr = np.asarray(ball, dtype=np.int64)
    for v in rng.permutation(1 << n).tolist():
        if len(chosen) >= target_size:
            break
        if blocked[v]:
            continue
        chosen.append(v)
        blocked[ball_arr ^ v] = True
    return VertexSet(n, chosen)


def product_with_cube(shell: Shell, d: int) -> Shell:
    """shell x Q_d, with the new coordinates above the shell's."""
    check_dim(d)
    removed = shell.removed.as_array()
    high = np.arange(1 << d, dtype=np.int64) << shell.n
    return Shell(shell.n + d, VertexSet(shell.n + d, (removed[:, None] | high[None, :]).ravel().tolist()))


def sample_pairs(shell: Shell, count: int, seed: int = 0, nonadjacent: bool = True) -> list[tuple[int, int]]:
    """Seeded random pairs of distinct surviving vertices."""
    rng = np.random.default_rng(seed)
    vs = shell.survivors()
    out = []
    while len(out) < count:
        a, b = (int(x) for x in rng.choice(vs, 2, replace=False))
        if nonadjacent and _adjacent(a, b):
            continue
        out.append((a, b))
    return out
