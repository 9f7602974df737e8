import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from z2s_simplex.constructions import simplex_alpha
from z2s_simplex.errors import InvalidParameter, LengthMismatch, ModulusMismatch, NotInImage
from z2s_simplex.graymap import (
    GrayMap,
    canonical_map,
    gray_matrix,
    phi,
    phi_inverse,
    phi_inverse_vector,
    phi_vector,
)
from z2s_simplex.ring import BitVector, RingScalar, RingVector


def images(gmap):
    return [gmap.image_bits(u) for u in range(1 << gmap.s)]


def test_base_map_for_z4():
    assert [str(phi(RingScalar(u, 2))) for u in range(4)] == ["00", "01", "11", "10"]


def test_phi_vector_concatenates_blocks():
    assert str(phi_vector(RingVector((0, 1, 2, 3), 2))) == "00011110"
    assert str(phi_vector(RingVector((2, 2), 2))) == "1111"
    assert phi_vector(RingVector.zero(5, 3)).bits == 0


def test_phi_inverse():
    assert phi_inverse(BitVector.from_string("10"), 2).value == 3
    assert phi_inverse(BitVector(0, 4), 3).value == 0
    with pytest.raises(NotInImage):
        phi_inverse(BitVector.from_string("0100"), 3)
    with pytest.raises(LengthMismatch):
        phi_inverse(BitVector.from_string("010"), 3)


def test_phi_inverse_vector_round_trip():
    v = RingVector((7, 0, 3, 4, 5), 3)
    assert phi_inverse_vector(phi_vector(v), 3) == v


@pytest.mark.parametrize("s", [2, 3, 4, 5, 6])
def test_addition_identity_exhaustive(s):
    q = 1 << s
    img = images(canonical_map(s))
    for u in range(q):
        for v in range(q):
            assert img[u] ^ img[v] == img[(u + v - 2 * (u & v)) % q]


@pytest.mark.parametrize("s", [2, 3, 4, 5, 6])
def test_half_translate_exhaustive(s):
    q = 1 << s
    half = q // 2
    img = images(canonical_map(s))
    for u in range(q):
        assert img[u] ^ img[half] == img[(u + half) % q]


@pytest.mark.parametrize("s", [2, 3, 4, 5, 6])
def test_sum_over_powers_of_two(s):
    img = images(canonical_map(s))
    for u in range(1 << s):
        combined = 0
        for i in range(s):
            if (u >> i) & 1:
                combined ^= img[1 << i]
        assert combined == img[u]


@pytest.mark.parametrize("s", [2, 3, 4, 5, 6])
def test_injective_with_weight_spectrum(s):
    q = 1 << s
    img = images(canonical_map(s))
    assert len(set(img)) == q
    weights = [b.bit_count() for b in img]
    assert weights[0] == 0
    assert weights[q // 2] == q // 2
    assert all(w == q // 4 for u, w in enumerate(weights) if u not in (0, q // 2))


@pytest.mark.parametrize("s", [2, 3, 4, 5])
def test_distance_invariance(s):
    q = 1 << s
    img = images(canonical_map(s))
    for u in range(q):
        for v in range(q):
            assert (img[u] ^ img[v]).bit_count() == img[(u - v) % q].bit_count()


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 5).flatmap(
    lambda s: st.tuples(st.just(s), st.permutations(list(range(1 << (s - 1)))))
))
def test_identities_hold_for_any_column_order(case):
    s, order = case
    q = 1 << s
    img = images(GrayMap(gray_matrix(s).permuted(order)))
    for u in range(q):
        for v in range(q):
            assert img[u] ^ img[v] == img[(u + v - 2 * (u & v)) % q]
        assert img[u] ^ img[q // 2] == img[(u + q // 2) % q]


def test_gray_matrix_requires_all_columns():
    y = gray_matrix(3)
    with pytest.raises(InvalidParameter):
        y.permuted([0, 0, 1, 2])


def test_phi_rows_matches_phi_vector():
    gmap = canonical_map(3)
    words = simplex_alpha(3, 2).array.T[:20].copy()
    packed = gmap.phi_rows(words)
    for row, bits in zip(words, packed):
        assert bits == gmap.phi_vector(RingVector.from_array(row, 3)).bits
    assert gmap.phi_rows(np.zeros((0, 4), dtype=np.int64)) == []


def test_large_ring_decodes_without_table():
    gmap = GrayMap(gray_matrix(13))
    for u in (0, 1, 1234, 1 << 12, (1 << 13) - 1):
        image = gmap.phi(RingScalar(u, 13))
        assert gmap.phi_inverse(image).value == u
    with pytest.raises(NotInImage):
        gmap.phi_inverse(BitVector(1, gmap.width))


def test_map_rejects_other_modulus():
    gmap = canonical_map(3)
    with pytest.raises(ModulusMismatch):
        gmap.phi(RingScalar(1, 2))
    with pytest.raises(ModulusMismatch):
        gmap.phi_vector(RingVector.of([1, 2], 4))
