"""Independent validators and brute-force oracles.

Nothing here calls into the cycle engine except as the object under test:
validators use only cube adjacency and the removed-vertex set.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .domination import (
    MASK_LIMIT,
    Shell,
    VertexSet,
    is_independent,
    is_perfect_dominating,
    is_strongly_independent,
    is_total_dominating,
)
from .errors import ArgumentError, HskError, ScaleError
from .hypercube import is_adjacent

ORACLE_LIMIT = 24
KINDS = ("cycle", "cut", "pid", "total_pd", "strongly_independent")


@dataclass(frozen=True)
class Verdict:
    valid: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.valid

    def to_json(self) -> dict:
        return {"valid": self.valid, "reason": self.reason}


VALID = Verdict(True)


@dataclass
class Certificate:
    kind: str
    payload: dict
    verdict: Verdict | None = field(default=None)


# -- cycles ---------------------------------------------------------------------


def _alive(shell: Shell, arr: np.ndarray) -> np.ndarray:
    if shell.n <= MASK_LIMIT:
        return shell.alive_mask()[arr]
    return np.fromiter((shell.survives(int(v)) for v in arr), dtype=bool, count=len(arr))


def validate_cycle(shell: Shell, c, required_edge=None, required_len: int | None = None) -> Verdict:
    """Check distinctness, survival, adjacency, closure, length and the required edge."""
    try:
        arr = np.asarray([int(v) for v in c], dtype=np.int64)
    except (TypeError, ValueError):
        return Verdict(False, "cycle entries are not integers")
    k = len(arr)
    if required_len is not None and k != required_len:
        return Verdict(False, f"length {k} differs from required {required_len}")
    if k < 4 or k % 2:
        return Verdict(False, f"length {k} is not an even number >= 4")
    if len(np.unique(arr)) != k:
        return Verdict(False, "duplicate vertices")
    if arr.min() < 0 or arr.max() >= (1 << shell.n):
        return Verdict(False, f"label outside Q_{shell.n}")
    dead = np.flatnonzero(~_alive(shell, arr))
    if len(dead):
        return Verdict(False, f"vertex {int(arr[dead[0]])} is removed")
    nxt = np.concatenate((arr[1:], arr[:1]))
    for i in range(k):
        if not is_adjacent(int(arr[i]), int(nxt[i])):
            return Verdict(False, f"{int(arr[i])} and {int(nxt[i])} are not adjacent")
    if required_edge is not None:
        a, b = (int(x) for x in required_edge)
        hit = ((arr == a) & (nxt == b)) | ((arr == b) & (nxt == a))
        if not hit.any():
            return Verdict(False, f"edge ({a}, {b}) not traversed")
    return VALID


def cycle_certificate(shell: Shell, edge, length: int, cycle) -> dict:
    return {
        "n": shell.n,
        "removed": list(shell.removed.members),
        "edge": None if edge is None else [int(x) for x in edge],
        "length": int(length),
        "cycle": [int(v) for v in cycle],
    }


def validate_certificate(data: dict) -> Verdict:
    """Re-verify a cycle certificate from scratch."""
    try:
        n = int(data["n"])
        shell = Shell(n, VertexSet(n, [int(v) for v in data["removed"]]))
        edge = data.get("edge")
        return validate_cycle(shell, data["cycle"], edge, int(data["length"]))
    except (KeyError, TypeError) as exc:
        return Verdict(False, f"malformed certificate: {exc!r}")
    except HskError as exc:
        return Verdict(False, str(exc))


def split_overlap_ok(cycle: Sequence[int], dim: int) -> bool:
    """Each half (coordinate ``dim`` fixed) holding >= 3 cycle vertices holds >= 2 cycle edges."""
    vs = [int(v) for v in cycle]
    k = len(vs)
    for side in (0, 1):
        count_v = sum(1 for v in vs if (v >> dim) & 1 == side)
        count_e = sum(
            1 for i in range(k)
            if (vs[i] >> dim) & 1 == side and (vs[(i + 1) % k] >> dim) & 1 == side
        )
        if count_v >= 3 and count_e < 2:
            return False
    return True


# -- exhaustive length oracle ----------------------------------------------------


def enumerate_cycle_lengths(shell: Shell, e) -> set[int]:
    """Exact set of lengths of simple cycles through e, by depth-first enumeration."""
    if shell.survivor_count > ORACLE_LIMIT:
        raise ScaleError(f"oracle limited to {ORACLE_LIMIT} surviving vertices")
    u, v = sorted(int(x) for x in e)
    if not shell.has_edge(u, v):
        raise ArgumentError(f"({u}, {v}) is not an edge of the shell")
    vs = shell.survivors().tolist()
    pos = {x: i for i, x in enumerate(vs)}
    adj = [[pos[w] for w in shell.neighbors(x)] for x in vs]
    s, t = pos[u], pos[v]
    total = len(vs)
    wanted = set(range(4, total + 1, 2))
    found: set[int] = set()

    # walk from t back to s avoiding the edge itself; cycles with fixed uv direction are unique
    def dfs(x: int, used: int, depth: int) -> bool:
        for y in adj[x]:
            if y == s:
                if depth >= 3:
                    found.add(depth + 1)
                    if found >= wanted:
                        return True
                continue
            if used >> y & 1:
                continue
            if dfs(y, used | (1 << y), depth + 1):
                return True
        return False

    dfs(t, (1 << s) | (1 << t), 1)
    return found


# -- sweeps -------------------------------------------------------------------------


def _default_engine(shell: Shell, edge, length: int):
    from .cycles.engine import shell_cycle

    return shell_cycle(shell, edge, length)


def _check_one(shell: Shell, engine: Callable, edge, length: int) -> dict | None:
    try:
        cyc = engine(shell, edge, length)
    except Exception as exc:  # any producer failure is a reported failure
        return {"edge": list(edge), "length": length, "reason": f"{type(exc).__name__}: {exc}"}
    verdict = validate_cycle(shell, cyc, edge, length)
    if not verdict:
        return {
            "edge": list(edge),
            "length": length,
            "reason": verdict.reason,
            "certificate": cycle_certificate(shell, edge, length, cyc),
        }
    return None


def _sweep_chunk(args) -> list[dict]:
    shell, engine, jobs = args
    engine = engine or _default_engine
    out = []
    for edge, lengths in jobs:
        for length in lengths:
            fail = _check_one(shell, engine, edge, length)
            if fail is not None:
                out.append(fail)
    return out


def resolve_jobs(jobs: int | None) -> int:
    if jobs is None:
        jobs = int(os.environ.get("HSK_JOBS", "1") or 1)
    return max(1, jobs)


def _run(shell: Shell, engine, work: list[tuple[tuple[int, int], list[int]]], jobs: int) -> list[dict]:
    jobs = resolve_jobs(jobs)
    if jobs == 1 or len(work) < 2:
        return _sweep_chunk((shell, engine, work))
    chunks = [work[i::jobs] for i in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(_sweep_chunk, [(shell, engine, c) for c in chunks])
    fails = [f for p in parts for f in p]
    order = {tuple(e): i for i, (e, _) in enumerate(work)}
    fails.sort(key=lambda f: (order[tuple(f["edge"])], f["length"]))
    return fails


def _report(edges: int, per_edge: int, fails: list[dict]) -> dict:
    first = fails[0] if fails else None
    return {
        "edges": edges,
        "lengths_per_edge": per_edge,
        "failures": [{k: f[k] for k in ("edge", "length", "reason")} for f in fails],
        "first_failure": first,
    }


def exhaustive_bipancyclicity(shell: Shell, engine: Callable | None = None, jobs: int | None = 1,
                              edges: Iterable | None = None) -> dict:
    """Request and validate a cycle for every surviving edge and every even length.

    ``engine(shell, edge, length)`` defaults to the Hamming-shell engine; it
    must be a module-level function when ``jobs > 1``.
    """
    edge_list = [tuple(int(x) for x in e) for e in (shell.edges() if edges is None else edges)]
    lengths = list(range(4, shell.survivor_count + 1, 2))
    fails = _run(shell, engine, [(e, lengths) for e in edge_list], jobs)
    return _report(len(edge_list), len(lengths), fails)


def sampled_bipancyclicity(shell: Shell, count: int, seed: int = 0, engine: Callable | None = None,
                           jobs: int | None = 1) -> dict:
    """Like the exhaustive sweep, on ``count`` seeded random (edge, length) requests."""
    rng = np.random.default_rng(seed)
    edge_list = shell.edges()
    top = shell.survivor_count // 2
    picks: dict[tuple[int, int], list[int]] = {}
    for _ in range(count):
        e = edge_list[int(rng.integers(len(edge_list)))]
        picks.setdefault(e, []).append(2 * int(rng.integers(2, top + 1)))
    fails = _run(shell, engine, list(picks.items()), jobs)
    return {**_report(len(picks), 0, fails), "requests": count}


# -- set certificates ------------------------------------------------------------------


def check_spanning_overlap(n: int, F: VertexSet, P: Iterable[tuple[int, int]]) -> bool:
    """True iff at least 2 edges of P avoid F; P must be spanning with all degrees 1 or 2."""
    if not is_strongly_independent(F):
        raise ArgumentError("F is not strongly independent")
    deg = np.zeros(1 << n, dtype=np.int64)
    edges = [(int(a), int(b)) for a, b in P]
    for a, b in edges:
        if not (0 <= a < (1 << n) and 0 <= b < (1 << n) and is_adjacent(a, b)):
            raise ArgumentError(f"({a}, {b}) is not an edge of Q_{n}")
        deg[a] += 1
        deg[b] += 1
    if not ((deg == 1) | (deg == 2)).all():
        raise ArgumentError("P must give every vertex degree 1 or 2")
    bad = F.mask() if n <= MASK_LIMIT else None
    avoid = sum(1 for a, b in edges if not (bad[a] or bad[b]))
    return avoid >= 2


def validate_pid(D: VertexSet) -> Verdict:
    if not is_independent(D):
        return Verdict(False, "two members are adjacent")
    if not is_perfect_dominating(D):
        return Verdict(False, "some outside vertex does not have exactly one neighbour in the set")
    return VALID


def validate_strongly_independent(F: VertexSet) -> Verdict:
    return VALID if is_strongly_independent(F) else Verdict(False, "two members are at distance < 3")


def validate_total_pd(D: VertexSet) -> Verdict:
    if not is_perfect_dominating(D):
        return Verdict(False, "not perfect dominating")
    if not is_total_dominating(D):
        return Verdict(False, "some vertex has no neighbour in the set")
    return VALID


def validate_cut(shell: Shell, witness: dict) -> Verdict:
    """A cut witness is valid when its separator is smaller than k_claimed and disconnects the shell."""
    from .connectivity import is_connected

    sep = [int(v) for v in witness.get("separator", [])]
    k = int(witness.get("k_claimed", 0))
    if len(sep) >= k:
        return Verdict(False, f"separator has {len(sep)} >= {k} vertices")
    if any(not shell.survives(v) for v in sep):
        return Verdict(False, "separator uses a vertex outside the shell")
    rest = Shell(shell.n, VertexSet(shell.n, list(shell.removed.members) + sep))
    if is_connected(rest):
        return Verdict(False, "removing the separator leaves the shell connected")
    return VALID


def certify(kind: str, payload: dict, shell: Shell | None = None) -> Certificate:
    """Build a certificate with a freshly computed verdict."""
    if kind not in KINDS:
        raise ArgumentError(f"unknown certificate kind {kind!r}")
    if kind == "cycle":
        verdict = validate_certificate(payload)
    elif kind == "cut":
        if shell is None:
            raise ArgumentError("cut certificates need the shell")
        verdict = validate_cut(shell, payload)
    else:
        members = VertexSet.from_json(payload)
        check = {"pid": validate_pid, "total_pd": validate_total_pd,
                 "strongly_independent": validate_strongly_independent}[kind]
        verdict = check(members)
    return Certificate(kind, payload, verdict)
