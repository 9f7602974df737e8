import numpy as np
import pytest
from hypothesis import given, settings as hyp_settings

from conftest import gray_span, ring_word
from strategies import additive_codes
from z2s_simplex.additive import AdditiveCode
from z2s_simplex.constructions import SIMPLEX_ALPHA, SIMPLEX_BETA, FamilySpec
from z2s_simplex.errors import BudgetExceeded, InvalidParameter, NotLinear, StructureViolation
from z2s_simplex.invariants import (
    BinaryCode,
    Gf2Basis,
    gray_image,
    gray_min_distance,
    gray_rank,
    gray_weights,
    hadamard_kernel_expected,
    invariant_report,
    is_hadamard,
    is_linear,
    kernel_additive,
    kernel_binary,
    kernel_dimension,
    min_hamming_distance,
    rank_binary,
    weight_distribution,
)
from z2s_simplex.settings import Budgets, Settings
from z2s_simplex.verification import KNOWN_DISCREPANCIES, TABLE1


def alpha(s, k):
    return FamilySpec("simplex-alpha", s, k=k).build_code()


def beta(s, k):
    return FamilySpec("simplex-beta", s, k=k).build_code()


def hadamard(s, t1):
    return FamilySpec.hadamard_for(s, t1).build_code()


# binary codes -------------------------------------------------------------------

def test_binary_code_rejects_duplicates_and_wide_words():
    with pytest.raises(StructureViolation):
        BinaryCode(2, [1, 1])
    with pytest.raises(InvalidParameter):
        BinaryCode(2, [4])
    with pytest.raises(InvalidParameter):
        BinaryCode.from_strings(["01", "011"])


def test_binary_code_equality_ignores_order():
    assert BinaryCode(3, [0, 5, 3]) == BinaryCode(3, [3, 0, 5])
    assert BinaryCode(3, [0, 5]) != BinaryCode(4, [0, 5])


def test_gf2_basis():
    basis = Gf2Basis(3)
    assert basis.add(0b011)
    assert basis.add(0b101)
    assert not basis.add(0b110)
    assert basis.rank == 2
    assert not basis.full
    assert basis.span() == [0b000, 0b011, 0b101, 0b110]
    assert basis.reduce(0b110) == 0


def test_rank_and_linearity():
    code = BinaryCode.from_strings(["000", "011", "101", "110"])
    assert rank_binary(code) == 2
    assert is_linear(code)
    assert kernel_dimension(code) == 2

    odd = BinaryCode.from_strings(["00", "01", "10"])
    assert not is_linear(odd)
    with pytest.raises(NotLinear):
        kernel_dimension(odd)


def test_min_distance_and_weights():
    assert min_hamming_distance(BinaryCode.from_strings(["00", "11"])) == 2
    assert weight_distribution(BinaryCode.from_strings(["000", "011", "111"])) == {0: 1, 2: 1, 3: 1}
    with pytest.raises(InvalidParameter):
        min_hamming_distance(BinaryCode.from_strings(["0"]))
    with pytest.raises(BudgetExceeded):
        min_hamming_distance(BinaryCode.from_strings(["00", "01", "11"]), pair_budget=2)


def test_is_hadamard():
    assert not is_hadamard(BinaryCode.from_strings(["00", "10"]))
    assert is_hadamard(gray_image(hadamard(2, 2)))


# gray images --------------------------------------------------------------------

def test_gray_image_of_simplex_alpha_z4():
    image = gray_image(alpha(2, 1))
    assert image == BinaryCode.from_strings(["00000000", "00011110", "00110011", "00101101"])


def test_gray_image_of_zero_code():
    image = gray_image(AdditiveCode.zero(3, 2))
    assert image.length == 6
    assert image.words == (0,)


def test_gray_image_size_and_budget():
    assert len(gray_image(alpha(3, 2))) == 64
    with pytest.raises(BudgetExceeded):
        gray_image(alpha(3, 2), budget=63)


def test_gray_weights_match_binary_weights():
    code = beta(2, 3)
    assert dict(sorted(gray_weights(code).items())) == weight_distribution(gray_image(code))
    assert gray_min_distance(code) == min_hamming_distance(gray_image(code))


def test_gray_rank_matches_rank_binary():
    code = alpha(3, 2)
    assert gray_rank(code) == rank_binary(gray_image(code)) == 12
    with pytest.raises(BudgetExceeded):
        gray_rank(code, rank_rows=10)


# kernels ------------------------------------------------------------------------

def test_kernel_of_simplex_alpha_z4_k2():
    kernel = kernel_binary(gray_image(alpha(2, 2)))
    assert kernel == gray_span(["0000222200002222", "0202020202020202"], 2)
    assert kernel_dimension(kernel) == 2


def test_kernel_of_simplex_alpha_z8_k1_is_torsion():
    code = alpha(3, 1)
    kernel = kernel_additive(code)
    assert len(kernel) == 2
    assert kernel.gray_image() == gray_image(code.torsion_subcode())
    assert kernel_dimension(kernel_binary(gray_image(code))) == 1


def test_kernel_of_simplex_alpha_z4_k1_is_whole_code():
    code = alpha(2, 1)
    kernel = kernel_binary(gray_image(code))
    assert kernel == gray_image(code)
    assert len(kernel_additive(code)) == 4


def test_kernel_of_simplex_beta_is_torsion():
    code = beta(2, 3)
    kernel = kernel_binary(gray_image(code))
    assert kernel == gray_image(code.torsion_subcode())
    assert kernel_dimension(kernel) == 3


def test_kernel_of_linear_code_is_the_code():
    code = BinaryCode.from_strings(["0000", "1100", "0011", "1111"])
    assert kernel_binary(code) == code


def test_kernel_of_singleton_zero():
    assert kernel_binary(BinaryCode(3, [0])) == BinaryCode(3, [0])


def test_kernel_of_code_without_zero():
    code = BinaryCode.from_strings(["01", "10"])
    assert kernel_binary(code) == BinaryCode.from_strings(["00", "11"])
    assert kernel_binary(code, exhaustive=True) == BinaryCode.from_strings(["00", "11"])


def test_exhaustive_kernel_length_limit():
    code = BinaryCode(30, [0, 1])
    with pytest.raises(BudgetExceeded):
        kernel_binary(code, exhaustive=True)


def test_kernel_pair_budget():
    with pytest.raises(BudgetExceeded):
        kernel_binary(gray_image(alpha(2, 2)), pair_budget=100)
    with pytest.raises(BudgetExceeded):
        kernel_additive(alpha(2, 2), pair_budget=10)


def test_kernel_additive_is_deterministic_across_threads():
    code = beta(3, 2)
    single = kernel_additive(code, threads=1)
    pooled = kernel_additive(code, threads=4, chunk_size=7)
    assert np.array_equal(single.words, pooled.words)


def test_kernel_word_set_as_code():
    assert kernel_additive(alpha(3, 2)).as_code() is not None
    assert kernel_additive(hadamard(3, 2)).as_code() is None


@pytest.mark.parametrize("s,k", [(3, 2), (3, 3), (4, 2)])
def test_hadamard_kernel_expected(s, k):
    expected = hadamard_kernel_expected(s, k)
    assert len(expected) == 1 << (k + 1)
    assert kernel_binary(gray_image(hadamard(s, k))) == expected


def test_hadamard_kernel_expected_needs_k2():
    with pytest.raises(InvalidParameter):
        hadamard_kernel_expected(3, 1)


def test_simplex_kernel_inside_hadamard_kernel():
    for s, k in [(2, 2), (3, 1), (3, 2)]:
        small = kernel_binary(gray_image(alpha(s, k)))
        big = kernel_binary(gray_image(hadamard(s, k + 1)))
        assert small.length == big.length
        assert small.as_set() <= big.as_set()


@pytest.mark.parametrize("rows,s", [
    (["21"], 3),
    (["2101", "0262"], 3),
    (["2130", "0212"], 2),
    (["4230", "0604", "0022"], 3),
])
def test_kernel_algorithms_agree_on_non_unit_leading_entries(rows, s):
    code = AdditiveCode.from_rows([ring_word(r, s) for r in rows])
    binary = kernel_binary(gray_image(code))
    assert kernel_additive(code).gray_image() == binary
    assert gray_image(code.torsion_subcode()).as_set() <= binary.as_set()


@hyp_settings(max_examples=30, deadline=None)
@given(additive_codes())
def test_kernel_algorithms_agree(code):
    assert kernel_additive(code).gray_image() == kernel_binary(gray_image(code))


# parameters ---------------------------------------------------------------------

@pytest.mark.parametrize("s,k", [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)])
def test_simplex_beta_min_distance(s, k):
    weights = gray_weights(beta(s, k))
    expected = (1 << (s * k - k - 1)) * ((1 << k) - 1)
    assert min(w for w in weights if w > 0) == expected
    assert weights[0] == 1


def test_simplex_beta_z4_has_two_weights():
    assert dict(sorted(gray_weights(beta(2, 2)).items())) == {0: 1, 6: 12, 8: 3}


def test_macdonald_alpha_z4_parameters():
    report = invariant_report(FamilySpec("macdonald-alpha", 2, k=2, u=1))
    assert report.binary_length == (1 << 5) - (1 << 3)
    assert report.size == 16
    assert report.min_dist == (1 << 4) - (1 << 2)
    assert {w for w, _ in report.weights} == {0, 12, 16}
    assert report.ker == 2
    assert report.linear is False


# reports ------------------------------------------------------------------------

@pytest.mark.parametrize("spec,ker,rank", [
    (FamilySpec("simplex-alpha", 2, k=1), 2, 2),
    (FamilySpec("simplex-alpha", 2, k=2), 2, 5),
    (FamilySpec("simplex-alpha", 2, k=3), 3, 9),
    (FamilySpec("simplex-beta", 2, k=2), 2, 5),
    (FamilySpec("simplex-alpha", 3, k=1), 1, 4),
    (FamilySpec("simplex-alpha", 3, k=2), 2, 12),
    (FamilySpec("simplex-alpha", 4, k=1), 1, 7),
    (FamilySpec("simplex-alpha", 4, k=2), 2, 32),
    (FamilySpec.hadamard_for(3, 2), 3, 8),
    (FamilySpec.hadamard_for(3, 3), 4, 17),
    (FamilySpec.hadamard_for(4, 2), 3, 14),
])
def test_report_matches_published_values(spec, ker, rank):
    report = invariant_report(spec)
    assert (report.ker, report.rank) == (ker, rank)
    assert report.kernel_cross_check is True
    assert report.missing == []


@pytest.mark.slow
@pytest.mark.parametrize("spec,ker,rank", [
    (FamilySpec("simplex-alpha", 3, k=3), 3, 26),
    (FamilySpec("simplex-beta", 2, k=4), 4, 14),
    (FamilySpec.hadamard_for(3, 4), 5, 32),
    (FamilySpec.hadamard_for(4, 3), 4, 44),
    (FamilySpec("simplex-alpha", 3, k=4), 4, 49),
    (FamilySpec("simplex-alpha", 4, k=3), 3, 101),
])
def test_report_matches_published_values_large(spec, ker, rank):
    report = invariant_report(spec)
    assert (report.ker, report.rank) == (ker, rank)


@pytest.mark.parametrize("s,k", [(3, 2), (3, 3), (4, 2)])
def test_report_beta_ranks_for_larger_rings(s, k):
    report = invariant_report(FamilySpec("simplex-beta", s, k=k))
    assert (report.ker, report.rank) == KNOWN_DISCREPANCIES[(s, SIMPLEX_BETA, k)]
    assert report.rank < TABLE1[(s, SIMPLEX_ALPHA, k)][1]
    assert report.kernel_cross_check is True


@pytest.mark.slow
@pytest.mark.parametrize("s,k", [(3, 4), (4, 3)])
def test_report_beta_ranks_for_larger_rings_large(s, k):
    report = invariant_report(FamilySpec("simplex-beta", s, k=k))
    assert (report.ker, report.rank) == KNOWN_DISCREPANCIES[(s, SIMPLEX_BETA, k)]


def test_report_for_z4_hadamard_is_linear():
    report = invariant_report(FamilySpec.hadamard_for(2, 2))
    assert (report.ker, report.rank) == (4, 4)
    assert report.linear is True
    assert report.min_dist == 4


def test_report_dict_field_order():
    data = invariant_report(FamilySpec("simplex-alpha", 2, k=1)).to_dict()
    assert list(data)[:13] == [
        "family", "s", "k", "u", "n", "binary_length", "size", "type",
        "ker", "rank", "min_dist", "weights", "linear",
    ]
    assert data["type"] == "(4; 1,0)"
    assert data["weights"] == [[0, 1], [4, 3]]


def test_report_partial_on_budget():
    settings = Settings(budgets=Budgets(rank_rows=8))
    with pytest.raises(BudgetExceeded) as excinfo:
        invariant_report(FamilySpec("simplex-alpha", 2, k=2), settings)
    partial = excinfo.value.partial
    assert partial["missing"] == ["rank", "ker", "linear"]
    assert partial["min_dist"] == 16
    assert partial["weights"]
