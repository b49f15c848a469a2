import pytest
from hypothesis import given, strategies as st

from hsk import gf2
from hsk.errors import DimensionError


def test_hamming_columns_m2():
    H = gf2.hamming_parity_check(2)
    assert H.rows == 2 and H.cols == 3
    assert [H.column(c) for c in range(3)] == [1, 2, 3]
    assert H.to_lists() == [[1, 0, 1], [0, 1, 1]]


def test_hamming_m3_shape_and_last_column():
    H = gf2.hamming_parity_check(3)
    assert (H.rows, H.cols) == (3, 7)
    assert H.column(6) == 0b111


@pytest.mark.parametrize("m", [1, 6, 0])
def test_hamming_range(m):
    with pytest.raises(DimensionError):
        gf2.hamming_parity_check(m)


def test_kernel_sizes():
    assert gf2.kernel(gf2.hamming_parity_check(2)).sorted_words() == [0, 7]
    code = gf2.kernel(gf2.hamming_parity_check(3))
    assert len(code) == 16 and code.dim == 4
    assert 0b1111111 in code
    assert len(gf2.kernel(gf2.hamming_parity_check(4))) == 2048


def test_kernel_of_identity_is_zero():
    I2 = gf2.Gf2Matrix.from_rows([[1, 0], [0, 1]])
    assert gf2.kernel(I2).sorted_words() == [0]


def test_kernel_of_zero_matrix_is_everything():
    Z = gf2.Gf2Matrix.from_rows([[0, 0, 0]])
    assert len(gf2.kernel(Z)) == 8


def test_syndrome_examples():
    H3 = gf2.hamming_parity_check(3)
    assert gf2.syndrome(H3, 0) == 0
    x = gf2.BitVector.from_coords([1, 0, 1, 0, 0, 0, 0])
    assert gf2.syndrome(H3, x) == 0b010
    assert gf2.syndrome(gf2.hamming_parity_check(2), 0b111) == 0


def test_syndrome_length_mismatch():
    H3 = gf2.hamming_parity_check(3)
    with pytest.raises(DimensionError):
        gf2.syndrome(H3, gf2.BitVector(5, 1))
    with pytest.raises(DimensionError):
        gf2.syndrome(H3, 1 << 7)


def test_unit_vector_syndrome_is_its_index():
    for m in (2, 3, 4, 5):
        H = gf2.hamming_parity_check(m)
        values = [gf2.syndrome(H, 1 << j) for j in range(H.cols)]
        assert values == list(range(1, 1 << m))


def test_lift_matrix_layout():
    L = gf2.lift_check_matrix(gf2.hamming_parity_check(2))
    assert (L.rows, L.cols) == (3, 7)
    assert L.to_lists()[-1] == [0, 0, 0, 1, 1, 1, 1]
    assert L.rank() == 3
    assert len(gf2.kernel(L)) == 16
    assert gf2.syndrome(L, 0b000 | 0b111 << 3 | 1 << 6) == 0


def test_lift_rejects_bad_shape():
    with pytest.raises(DimensionError):
        gf2.lift_check_matrix(gf2.Gf2Matrix.from_rows([[1, 0], [0, 1]]))


def test_xor_translate_examples():
    assert gf2.xor_translate({0, 7}, 1) == {1, 6}
    assert gf2.xor_translate({0, 7}, 0) == {0, 7}
    with pytest.raises(DimensionError):
        gf2.xor_translate({gf2.BitVector(3, 0)}, gf2.BitVector(4, 1))


def test_bitvector_roundtrip():
    v = gf2.BitVector.from_coords([1, 1, 0, 1])
    assert int(v) == 0b1011
    assert v.coords() == (1, 1, 0, 1)
    assert v.weight() == 3
    with pytest.raises(DimensionError):
        gf2.BitVector(3, 8)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_codes_are_xor_closed(m):
    code = gf2.kernel(gf2.hamming_parity_check(m))
    words = code.sorted_words()
    assert 0 in code
    step = max(1, len(words) // 64)
    for a in words[::step]:
        for b in words:
            assert a ^ b in code
    assert all(gf2.syndrome(code.check, w) == 0 for w in words)


def test_check_matrix_of_recovers_code():
    code = gf2.kernel(gf2.hamming_parity_check(3))
    H = gf2.check_matrix_of(code.codewords, 7)
    assert gf2.kernel(H).codewords == code.codewords


def test_is_linear():
    assert gf2.is_linear([0, 7])
    assert not gf2.is_linear([1, 6])
    assert not gf2.is_linear([0, 1, 2])


@given(st.sets(st.integers(0, 127), max_size=20), st.integers(0, 127))
def test_translate_keeps_size_and_distances(S, x):
    T = gf2.xor_translate(S, x)
    assert len(T) == len(S)
    for a in S:
        for b in S:
            assert ((a ^ x) ^ (b ^ x)).bit_count() == (a ^ b).bit_count()
