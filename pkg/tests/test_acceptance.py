"""Acceptance criteria, one test each, with their time budgets.

Every test prints a single PASS/FAIL line; the lines are repeated in the
pytest terminal summary. Run directly with ``python tests/test_acceptance.py``.
"""

import random
import time

import numpy as np
import pytest

from hsk import gf2
from hsk.certify import enumerate_cycle_lengths, exhaustive_bipancyclicity, validate_cycle
from hsk.connectivity import (
    FlowGraph,
    random_strongly_independent,
    sample_pairs,
    verify_connectivity_at_least,
    vertex_connectivity,
)
from hsk.cycles import cycle_through_edge, q3_shell_hamiltonian, shell_cycle
from hsk.cycles.glue import glue_q3_block
from hsk.cycles.mesh import mesh_cycle, product_shell_cycle
from hsk.domination import (
    Shell,
    coset_family,
    construct_hamming_pid,
    construct_total_pd,
    is_balanced,
    is_perfect_dominating,
    is_strongly_independent,
    is_total_dominating,
    lift_pid,
)
from hsk.errors import HskError

RESULTS: list[str] = []


def record(number: int, title: str, ok: bool, seconds: float, budget: float, detail: str = "") -> None:
    passed = ok and seconds < budget
    line = f"[{'PASS' if passed else 'FAIL'}] criterion {number:2d}: {title} ({seconds:.1f}s / {budget:.0f}s)"
    if detail:
        line += f" {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, detail
    assert seconds < budget, f"took {seconds:.1f}s, budget {budget:.0f}s"


def test_c01_code_sizes():
    t = time.perf_counter()
    sizes = [len(construct_hamming_pid(m)) for m in (2, 3, 4)]
    ok = sizes == [2, 16, 2048] and all(s == 2 ** (n - k) for s, (n, k) in zip(sizes, [(3, 2), (7, 3), (15, 4)]))
    record(1, "code sizes 2, 16, 2048", ok, time.perf_counter() - t, 1, f"sizes={sizes}")


def test_c02_lift_consistency():
    t = time.perf_counter()
    lifted = set(lift_pid(construct_hamming_pid(2)).base.members)
    ker = set(gf2.kernel(gf2.lift_check_matrix(gf2.hamming_parity_check(2))).codewords)
    ok = lifted == ker and len(lifted) == 16
    record(2, "lifted code equals kernel of lifted matrix", ok, time.perf_counter() - t, 1)


def test_c03_coset_partition_and_balance():
    t = time.perf_counter()
    ok = True
    for m in (2, 3):
        n = (1 << m) - 1
        fam = coset_family(construct_hamming_pid(m))
        count = np.zeros(1 << n, dtype=int)
        for c in fam:
            count[c.as_array()] += 1
            ok &= is_balanced(c)
        ok &= len(fam) == n + 1 and bool((count == 1).all())
    record(3, "cosets partition and are balanced (n = 3, 7)", ok, time.perf_counter() - t, 5)


def test_c04_q3_base_case():
    t = time.perf_counter()
    ok = True
    for D in coset_family(construct_hamming_pid(2)):
        ok &= validate_cycle(Shell(3, D), q3_shell_hamiltonian(D.members), None, 6).valid
    record(4, "all four Q_3 codes leave a 6-cycle", ok, time.perf_counter() - t, 1)


def _sweep(shell):
    report = exhaustive_bipancyclicity(shell)
    return report, report["edges"] == 336 and report["lengths_per_edge"] == 55 and not report["failures"]


def test_c05_q7_exhaustive():
    t = time.perf_counter()
    report, ok = _sweep(Shell(7, construct_hamming_pid(3).base))
    detail = f"edges={report['edges']} lengths={report['lengths_per_edge']} failures={len(report['failures'])}"
    record(5, "Q_7 shell: 336 edges x 55 lengths certified", ok, time.perf_counter() - t, 600, detail)


def test_c06_coset_transfer():
    t = time.perf_counter()
    fam = coset_family(construct_hamming_pid(3))
    fails = []
    for i in (1, 5):
        report, ok = _sweep(Shell(7, fam[i]))
        fails.append(len(report["failures"]) if ok or report["failures"] else -1)
    ok = fails == [0, 0]
    record(6, "Q_7 sweep on cosets e_1 and e_5", ok, time.perf_counter() - t, 1200, f"failures={fails}")


def _engine_lengths(produce, shell, edge):
    out = set()
    for length in range(4, shell.survivor_count + 1, 2):
        try:
            cyc = produce(edge, length)
        except HskError:
            continue
        if validate_cycle(shell, list(cyc), edge, length).valid:
            out.add(length)
    return out


def _oracle_cases():
    cases = []
    for D in coset_family(construct_hamming_pid(2)):
        sh = Shell(3, D)
        cases.append((f"Q3-{D.members}", sh, lambda e, k, sh=sh: shell_cycle(sh, e, k)))
    for n in (3, 4):
        cases.append((f"Q{n}", Shell(n, []), lambda e, k, n=n: cycle_through_edge(n, e, k)))
    for D in coset_family(construct_hamming_pid(2)):
        gp = list(q3_shell_hamiltonian(D.members))
        for side in (0, 1):
            copy = (1 - side) << 3
            sh = Shell(4, [v | copy for v in D.members])
            cases.append((f"H{D.members}/{side}", sh,
                          lambda e, k, gp=gp, side=side: glue_q3_block(gp, e, k, full_side=side)))
    face = [0, 1, 3, 2]
    sh = Shell(4, [4, 5, 6, 7])
    cases.append(("face", sh, lambda e, k: glue_q3_block(face, e, k)))
    return cases


def test_c07_oracle_agreement():
    t = time.perf_counter()
    bad = []
    checked = 0
    for name, sh, produce in _oracle_cases():
        assert sh.survivor_count <= 24
        for e in sh.edges():
            checked += 1
            if _engine_lengths(produce, sh, e) != enumerate_cycle_lengths(sh, e):
                bad.append((name, e))
    record(7, "engine length sets equal exhaustive enumeration", not bad, time.perf_counter() - t, 120,
           f"edges={checked} mismatches={len(bad)}")


def test_c08_distant_faults():
    t = time.perf_counter()
    trials = 0
    bad = []
    for n in (4, 5, 6):
        cap = (1 << n) // (n + 1)
        for seed in range(100):
            rng = random.Random(1000 * n + seed)
            F = random_strongly_independent(n, rng.randint(1, cap), seed)
            assert is_strongly_independent(F) and len(F) >= 1
            sh = Shell(n, F)
            trials += 1
            if not verify_connectivity_at_least(sh, n - 1).ok:
                bad.append((n, seed, "threshold"))
            if n in (4, 5) and vertex_connectivity(sh) != n - 1:
                bad.append((n, seed, "exact"))
    record(8, "strongly independent faults keep (n-1)-connectivity", not bad and trials == 300,
           time.perf_counter() - t, 600, f"trials={trials} failures={len(bad)}")


def test_c09_q7_connectivity():
    t = time.perf_counter()
    sh = Shell(7, construct_hamming_pid(3).base)
    kappa = vertex_connectivity(sh, exhaustive=True)
    exact_time = time.perf_counter() - t
    s = time.perf_counter()
    g = FlowGraph(sh)
    sampled = min(g.max_paths(a, b) for a, b in sample_pairs(sh, 1000, seed=9))
    sampled_time = time.perf_counter() - s
    ok = kappa == 6 and sampled >= 6 and sampled_time < 60
    record(9, "Q_7 shell connectivity is exactly 6 (all pairs)", ok, exact_time, 900,
           f"kappa={kappa} sampled_min={sampled} sampled_time={sampled_time:.1f}s")


def test_c10_total_pd():
    t = time.perf_counter()
    bad = []
    for n in (5, 6):
        D = construct_total_pd(n)
        sh = Shell(n, D)
        if not (is_perfect_dominating(D) and is_total_dominating(D)):
            bad.append((n, "predicates"))
        if set(sh.degrees().tolist()) != {n - 1}:
            bad.append((n, "regularity"))
        if vertex_connectivity(sh) != n - 1:
            bad.append((n, "kappa"))
        ham = q3_shell_hamiltonian([0, 7])
        for length in range(4, sh.survivor_count + 1, 2):
            c = product_shell_cycle(ham, n - 3, length)
            if not validate_cycle(sh, list(c), None, length).valid:
                bad.append((n, length))
    record(10, "total perfect dominating sets for n = 5, 6", not bad, time.perf_counter() - t, 120,
           f"failures={bad}")


def _mesh_valid(rows, cols, pts, length):
    return (len(pts) == length == len(set(pts))
            and all(0 <= r < rows and 0 <= c < cols for r, c in pts)
            and all(abs(a[0] - b[0]) + abs(a[1] - b[1]) == 1 for a, b in zip(pts, pts[1:] + pts[:1])))


def test_c11_mesh():
    t = time.perf_counter()
    bad = []
    for rows in range(2, 7):
        for cols in range(2, 7):
            top = rows * cols - (rows * cols) % 2
            for length in range(4, top + 1, 2):
                if not _mesh_valid(rows, cols, mesh_cycle(rows, cols, length), length):
                    bad.append((rows, cols, length))
    record(11, "grid cycles for every size 2..6 and even length", not bad, time.perf_counter() - t, 10)


def test_c12_q15_scale():
    t = time.perf_counter()
    code = construct_hamming_pid(4).base
    sh = Shell(15, code)
    rng = np.random.default_rng(2024)
    survivors = sh.survivors()
    deg = sh.degrees(rng.choice(survivors, 10_000))
    regular = sh.survivor_count == 30720 and bool((deg == 14).all())
    alive = sh.alive_mask()
    prng = random.Random(2024)
    bad = 0
    for i in range(500):
        while True:
            u = int(survivors[prng.randrange(len(survivors))])
            w = u ^ (1 << prng.randrange(15))
            if alive[w]:
                break
        length = 30720 if i % 100 == 0 else 2 * prng.randint(2, 15360)
        c = shell_cycle(sh, (u, w), length)
        bad += not validate_cycle(sh, list(c), (u, w), length).valid
    g = FlowGraph(sh)
    menger = min(g.max_paths(a, b) for a, b in sample_pairs(sh, 200, seed=7))
    ok = regular and bad == 0 and menger >= 14
    record(12, "Q_15 shell: regularity, 500 requests, 200 Menger pairs", ok, time.perf_counter() - t, 1800,
           f"regular={regular} invalid={bad} min_paths={menger}")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s"]))
