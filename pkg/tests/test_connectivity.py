import networkx as nx
import pytest

from hsk.connectivity import (
    FlowGraph,
    max_disjoint_paths,
    product_with_cube,
    random_strongly_independent,
    reduction_pairs,
    sample_pairs,
    verify_connectivity_at_least,
    vertex_connectivity,
)
from hsk.cycles import canonical_shell
from hsk.domination import Shell, VertexSet, construct_total_pd, is_strongly_independent
from hsk.errors import ArgumentError


def as_nx(shell):
    g = nx.Graph()
    g.add_nodes_from(shell.survivors().tolist())
    g.add_edges_from(shell.edges())
    return g


def test_disjoint_path_examples():
    assert max_disjoint_paths(Shell(3, []), 0, 7) == 3
    assert max_disjoint_paths(Shell(3, [0, 7]), 1, 6) == 2
    sh = canonical_shell(3)
    s, t = sample_pairs(sh, 1, seed=5)[0]
    assert max_disjoint_paths(sh, s, t) >= 6


def test_disjoint_paths_rejects_removed_endpoint():
    with pytest.raises(ArgumentError):
        max_disjoint_paths(Shell(3, [0, 7]), 0, 3)
    with pytest.raises(ArgumentError):
        max_disjoint_paths(Shell(3, []), 2, 2)


def test_flow_agrees_with_networkx():
    for shell in (Shell(4, [0, 15]), Shell(5, [0, 7, 25]), canonical_shell(3)):
        g = as_nx(shell)
        for s, t in sample_pairs(shell, 15, seed=1):
            assert max_disjoint_paths(shell, s, t) == nx.node_connectivity(g, s, t)


def test_cut_size_equals_flow():
    sh = canonical_shell(3)
    g = FlowGraph(sh)
    for s, t in sample_pairs(sh, 50, seed=2):
        value, cut = g.min_cut(s, t)
        assert value == len(cut) == g.max_paths(s, t)
        rest = Shell(7, list(sh.removed.members) + cut)
        assert not nx.has_path(as_nx(rest), s, t)


def test_threshold_examples():
    assert verify_connectivity_at_least(Shell(3, [0, 7]), 2).ok
    assert verify_connectivity_at_least(canonical_shell(3), 6).ok
    assert verify_connectivity_at_least(Shell(4, [0, 15]), 3).ok


def test_threshold_failure_gives_separator():
    res = verify_connectivity_at_least(Shell(3, [0, 7]), 3)
    assert not res.ok
    w = res.witness
    assert w["k_claimed"] == 3 and len(w["separator"]) < 3
    assert len(w["components_sample"]) >= 2


def test_exact_examples():
    for n in (2, 3, 4, 5):
        assert vertex_connectivity(Shell(n, [])) == n
    assert vertex_connectivity(Shell(3, [0, 7])) == 2
    product = product_with_cube(Shell(3, [0, 7]), 2)
    assert vertex_connectivity(product) == 4


def test_disconnected_gives_zero():
    assert vertex_connectivity(Shell(2, [0, 3])) == 0


def test_reduction_matches_all_pairs_and_networkx():
    for shell in (Shell(4, [0, 15]), Shell(4, [0, 7]), Shell(5, [0, 7, 25]), Shell(3, [0, 7])):
        k = vertex_connectivity(shell)
        assert k == vertex_connectivity(shell, exhaustive=True)
        assert k == nx.node_connectivity(as_nx(shell))


def test_reduction_pairs_are_nonadjacent():
    for s, t in reduction_pairs(canonical_shell(3)):
        assert (s ^ t) & ((s ^ t) - 1)


def test_random_strongly_independent():
    F = random_strongly_independent(3, 2, seed=9)
    assert len(F) == 2 and F.members[0] ^ F.members[1] == 7
    assert len(random_strongly_independent(4, 1, seed=3)) == 1
    a = random_strongly_independent(6, 8, seed=42)
    assert a == random_strongly_independent(6, 8, seed=42)
    assert 1 <= len(a) <= 8 and is_strongly_independent(a)


@pytest.mark.parametrize("n", [4, 5])
def test_faults_leave_exactly_n_minus_one(n):
    for seed in range(10):
        F = random_strongly_independent(n, 1 + seed % 3, seed)
        assert vertex_connectivity(Shell(n, F)) == n - 1


@pytest.mark.parametrize("n,d", [(5, 1), (5, 2)])
def test_product_connectivity_adds_up(n, d):
    base = Shell(n, construct_total_pd(n))
    prod = product_with_cube(base, d)
    assert vertex_connectivity(prod) >= vertex_connectivity(base) + d


def test_product_with_cube_from_q3_shell():
    prod = product_with_cube(Shell(3, [0, 7]), 3)
    assert vertex_connectivity(prod) >= 2 + 3
    assert prod.removed == VertexSet(6, construct_total_pd(6).members)
