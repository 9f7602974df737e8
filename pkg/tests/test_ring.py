import pytest
from hypothesis import given

from strategies import ring_pairs
from z2s_simplex.errors import InvalidParameter, LengthMismatch, ModulusMismatch
from z2s_simplex.ring import (
    BitVector,
    RingScalar,
    RingVector,
    binary_expansion,
    hamming_distance,
    hamming_weight,
    lee_distance,
    lee_weight,
    odot,
    order_of,
    ring_vector_arith,
    valuation,
)


def test_scalar_rejects_out_of_range_residue():
    with pytest.raises(InvalidParameter):
        RingScalar(4, 2)


def test_scalar_of_reduces_modulo():
    assert RingScalar.of(-1, 3).value == 7
    assert RingScalar.of(19, 4).value == 3


def test_scalar_arithmetic_wraps():
    assert RingScalar(3, 2) + RingScalar(2, 2) == RingScalar(1, 2)
    assert RingScalar(1, 3) - RingScalar(2, 3) == RingScalar(7, 3)
    assert -RingScalar(3, 2) == RingScalar(1, 2)
    assert 3 * RingScalar(3, 3) == RingScalar(1, 3)


def test_mixed_moduli_are_rejected():
    with pytest.raises(ModulusMismatch):
        RingScalar(1, 2) + RingScalar(1, 3)


def test_ring_vector_arith():
    a = RingVector((1, 2, 3), 2)
    b = RingVector((3, 3, 3), 2)
    total, neg, scaled = ring_vector_arith(a, b, RingScalar(2, 2))
    assert total.coords == (0, 1, 2)
    assert neg.coords == (3, 2, 1)
    assert scaled.coords == (2, 0, 2)


def test_vector_length_mismatch():
    with pytest.raises(LengthMismatch):
        RingVector((1, 2), 2) + RingVector((1, 2, 3), 2)


def test_binary_expansion_least_significant_first():
    assert binary_expansion(RingScalar(7, 4)) == [1, 1, 1, 0]
    assert binary_expansion(RingScalar(8, 4)) == [0, 0, 0, 1]


def test_odot_scalars_and_vectors():
    assert odot(RingScalar(1, 2), RingScalar(3, 2)).value == 1
    assert odot(RingScalar(6, 3), RingScalar(3, 3)).value == 2
    assert odot(RingVector((1, 2, 3), 2), RingVector((3, 3, 2), 2)).coords == (1, 2, 2)


def test_odot_requires_matching_shapes():
    with pytest.raises(LengthMismatch):
        odot(RingVector((1, 2), 2), RingVector((1,), 2))
    with pytest.raises(InvalidParameter):
        odot(RingScalar(1, 2), RingVector((1,), 2))


@given(ring_pairs())
def test_addition_splits_into_xor_and_carry(pair):
    s, u, v = pair
    q = 1 << s
    assert (u + v) % q == ((u ^ v) + 2 * (u & v)) % q


def test_lee_weight():
    assert lee_weight(RingScalar(3, 2)) == 1
    assert lee_weight(RingScalar(4, 3)) == 4
    assert lee_weight(RingVector((0, 1, 2, 3), 2)) == 4


def test_lee_distance_is_weight_of_difference():
    u = RingVector((0, 1, 7), 3)
    v = RingVector((4, 1, 1), 3)
    assert lee_distance(u, v) == 4 + 0 + 2
    assert lee_distance(u, v) == lee_distance(v, u)


def test_hamming_on_bit_vectors():
    x = BitVector.from_string("0110")
    y = BitVector.from_string("1111")
    assert x.bits == 0b0110
    assert str(x) == "0110"
    assert hamming_weight(x) == 2
    assert hamming_distance(x, y) == 2


def test_bit_vector_rejects_non_binary():
    with pytest.raises(InvalidParameter):
        BitVector.from_bits([0, 2])


def test_valuation_and_order():
    assert valuation(0, 3) == 3
    assert valuation(4, 3) == 2
    assert valuation(5, 3) == 0
    assert order_of(RingVector((2, 0), 2)) == 2
    assert order_of(RingVector((1, 2), 2)) == 4
    assert order_of(RingScalar(0, 3)) == 1


def test_vector_str_compact_for_small_rings():
    assert str(RingVector((0, 1, 2, 3), 2)) == "0123"
    assert str(RingVector((0, 1, 15), 4)) == "0 1 15"
