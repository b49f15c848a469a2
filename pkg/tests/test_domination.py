import numpy as np
import pytest

from hsk import gf2
from hsk.domination import (
    PidSet,
    Shell,
    VertexSet,
    canonical_member_mask,
    closed_neighborhoods_partition,
    coset_family,
    construct_hamming_pid,
    construct_total_pd,
    hamming_coset_map,
    is_balanced,
    is_independent,
    is_perfect_dominating,
    is_strongly_independent,
    is_total_dominating,
    lift_pid,
    make_shell,
    slice_of,
    unattended_count,
)
from hsk.errors import ArgumentError, UnsupportedError
from hsk.hypercube import join, parity


def vs(n, *members):
    return VertexSet(n, members)


def test_independence_predicates():
    assert is_independent(vs(3, 0, 7))
    assert not is_independent(vs(3, 0, 1))
    assert is_independent(vs(3))
    assert is_strongly_independent(vs(3, 0, 7))
    assert not is_strongly_independent(vs(4, 0, 3))
    assert is_strongly_independent(construct_hamming_pid(3).base)


def test_domination_predicates():
    assert is_perfect_dominating(vs(3, 0, 7))
    assert not is_perfect_dominating(vs(3, 0))
    assert not is_total_dominating(vs(3, 0, 7))
    assert is_total_dominating(VertexSet(3, range(8)))


@pytest.mark.parametrize("m,size", [(2, 2), (3, 16), (4, 2048)])
def test_hamming_pid_sizes(m, size):
    D = construct_hamming_pid(m)
    assert len(D) == size and D.linear and D.offset == 0
    assert is_independent(D.base) and is_perfect_dominating(D.base)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_closed_neighbourhoods_partition(m):
    assert closed_neighborhoods_partition(construct_hamming_pid(m).base)


@pytest.mark.parametrize("m", [2, 3])
def test_lift_matches_kernel(m):
    Dp = construct_hamming_pid(m)
    lifted = lift_pid(Dp)
    L = gf2.lift_check_matrix(gf2.hamming_parity_check(m))
    assert set(lifted.base.members) == set(gf2.kernel(L).codewords)
    assert len(lifted) == (1 << Dp.n) * len(Dp)


def test_lift_examples():
    D = lift_pid(construct_hamming_pid(2))
    assert len(D) == 16 and 0 in D and 120 in D


def test_lift_rejects_nonlinear():
    shifted = PidSet(vs(3, 1, 6), linear=False, offset=1)
    with pytest.raises(UnsupportedError):
        lift_pid(shifted)


@pytest.mark.parametrize("m", [2, 3])
def test_coset_family(m):
    fam = coset_family(construct_hamming_pid(m))
    n = (1 << m) - 1
    assert len(fam) == n + 1
    seen = np.zeros(1 << n, dtype=int)
    for c in fam:
        seen[c.as_array()] += 1
        assert is_balanced(c)
        assert is_independent(c) and is_perfect_dominating(c)
    assert (seen == 1).all()


def test_coset_family_q3():
    fam = coset_family(construct_hamming_pid(2))
    assert [set(c.members) for c in fam] == [{0, 7}, {1, 6}, {2, 5}, {3, 4}]


def test_slices_of_lifted_code():
    D = lift_pid(construct_hamming_pid(2))
    assert slice_of(D, 0).members == (0, 7)
    assert slice_of(D, 0b1000).members == ()
    assert slice_of(D, 0b1100).members == (3, 4)  # y = 100, j = 1


def test_slices_rebuild_code():
    D = lift_pid(construct_hamming_pid(2))
    rebuilt = set()
    for t in range(16):
        part = slice_of(D, t)
        if parity(t):
            assert len(part) == 0
        else:
            assert set(part.members) == {w ^ (t & 7) for w in (0, 7)}
        rebuilt |= {join(x, t, 3) for x in part.members}
    assert rebuilt == set(D.base.members)


def test_make_shell_degrees():
    s3 = make_shell(3, vs(3, 0, 7))
    assert s3.survivor_count == 6 and set(s3.degrees().tolist()) == {2}
    s7 = make_shell(7, construct_hamming_pid(3))
    assert s7.survivor_count == 112 and s7.edge_count() == 336
    assert set(s7.degrees().tolist()) == {6}
    assert make_shell(3, vs(3)).edge_count() == 12


def test_shell_json():
    data = Shell(3, [0, 7]).to_json()
    assert data == {"n": 3, "members": [1, 2, 3, 4, 5, 6], "removed": [0, 7]}


@pytest.mark.parametrize("n,size", [(5, 8), (6, 16)])
def test_total_pd(n, size):
    D = construct_total_pd(n)
    assert len(D) == size
    assert is_perfect_dominating(D) and is_total_dominating(D)
    sh = Shell(n, D)
    assert set(sh.degrees().tolist()) == {n - 1}


def test_total_pd_rejects_hamming_length():
    with pytest.raises(ArgumentError):
        construct_total_pd(7)


@pytest.mark.parametrize("n,k", [(3, 2), (7, 3), (15, 4)])
def test_one_fewer_centre_cannot_cover(n, k):
    # n+1 vertices stay outside every closed neighbourhood
    assert unattended_count(n, k) == n + 1
    assert not (n + 1) * ((1 << (n - k)) - 1) >= (1 << n)


def test_canonical_code_is_perfect():
    for m in (2, 3, 4):
        mask = canonical_member_mask(m)
        D = VertexSet((1 << m) - 1, np.flatnonzero(mask).tolist())
        assert closed_neighborhoods_partition(D)


@pytest.mark.parametrize("coset", [0, 1, 4, 7])
def test_coset_map_lands_on_canonical_code(coset):
    fam = coset_family(construct_hamming_pid(3))
    cmap = hamming_coset_map(7, fam[coset])
    img = cmap.forward(fam[coset].as_array())
    assert canonical_member_mask(3)[img].all()


def test_coset_map_rejects_non_codes():
    with pytest.raises(UnsupportedError):
        hamming_coset_map(7, VertexSet(7, range(16)))
