import numpy as np
import pytest

from z2s_simplex.additive import AdditiveCode
from z2s_simplex.constructions import (
    FamilySpec,
    beta_deletion_indices,
    beta_from_hadamard,
    beta_length,
    hadamard_gen,
    hadamard_length,
    hadamard_steps,
    macdonald_alpha,
    macdonald_beta,
    rotate_all_one_row,
    simplex_alpha,
    simplex_beta,
    strip_all_one_row,
)
from z2s_simplex.errors import InvalidParameter, StructureViolation


def rows_as_strings(G):
    return ["".join(str(int(v)) for v in row) for row in G.array]


def test_simplex_alpha_z4_k2():
    assert rows_as_strings(simplex_alpha(2, 2)) == ["0000111122223333", "0123" * 4]


def test_simplex_alpha_columns_are_all_of_the_space():
    G = simplex_alpha(3, 2)
    columns = {tuple(int(v) for v in col) for col in G.array.T}
    assert G.n == 64
    assert len(columns) == 64


def test_hadamard_a30():
    assert rows_as_strings(hadamard_gen(2, (3, 0))) == ["0000111122223333", "0123" * 4, "1" * 16]


def test_hadamard_with_second_step():
    G = hadamard_gen(2, (1, 1))
    assert rows_as_strings(G) == ["02", "11"]
    assert hadamard_steps(2, (2, 1)) == [1, 2]
    assert hadamard_length(2, (2, 1)) == 8


def test_hadamard_type_validation():
    with pytest.raises(InvalidParameter):
        hadamard_gen(2, (0, 1))
    with pytest.raises(InvalidParameter):
        hadamard_gen(3, (2, 0))
    with pytest.raises(InvalidParameter):
        hadamard_gen(2, (1, -1))


def test_simplex_beta_z4_k3():
    assert rows_as_strings(simplex_beta(2, 3)) == [
        "1111111111111111000000222222",
        "0000111122223333111102111102",
        "0123012301230123012311012311",
    ]


@pytest.mark.parametrize("s", [2, 3, 4])
@pytest.mark.parametrize("k", [2, 3])
def test_beta_length(s, k):
    assert simplex_beta(s, k).n == beta_length(s, k)


def test_beta_length_recurrence():
    for s in (2, 3, 4):
        for k in range(3, 6):
            q = 1 << s
            assert beta_length(s, k) == q ** (k - 1) + (q // 2) * beta_length(s, k - 1)


def test_simplex_rejects_small_parameters():
    with pytest.raises(InvalidParameter):
        simplex_alpha(2, 0)
    with pytest.raises(InvalidParameter):
        simplex_beta(2, 1)
    with pytest.raises(InvalidParameter):
        simplex_alpha(1, 2)


@pytest.mark.parametrize("s", [2, 3, 4])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_alpha_is_hadamard_without_all_one_row(s, k):
    stripped = strip_all_one_row(hadamard_gen(s, (k + 1,) + (0,) * (s - 1)))
    assert np.array_equal(stripped.array, simplex_alpha(s, k).array)


@pytest.mark.parametrize("s", [2, 3])
@pytest.mark.parametrize("k", [2, 3, 4])
def test_beta_from_hadamard_matches_recursion(s, k):
    assert beta_from_hadamard(s, k) == simplex_beta(s, k)


def test_rotate_moves_all_one_row_first():
    rotated = rotate_all_one_row(hadamard_gen(2, (2, 0)))
    assert rows_as_strings(rotated) == ["1111", "0123"]


def test_strip_requires_all_one_last_row():
    with pytest.raises(StructureViolation):
        strip_all_one_row(simplex_alpha(2, 2))
    with pytest.raises(StructureViolation):
        rotate_all_one_row(simplex_alpha(2, 1))


def test_macdonald_alpha_drops_leading_block():
    G = macdonald_alpha(2, 2, 1)
    assert (G.k, G.n) == (2, 12)
    assert np.array_equal(G.array, simplex_alpha(2, 2).array[:, 4:])


def test_macdonald_alpha_length():
    for s, k, u in [(2, 3, 1), (2, 3, 2), (3, 2, 1)]:
        assert macdonald_alpha(s, k, u).n == (1 << (s * k)) - (1 << (s * u))


def test_beta_deletion_indices():
    assert beta_deletion_indices(2, 3, 2) == list(range(17, 23))
    assert beta_deletion_indices(2, 4, 2) == list(range(81, 87))


def test_macdonald_beta_shape():
    G = macdonald_beta(2, 3, 2)
    assert (G.k, G.n) == (3, 22)
    kept = [j for j in range(simplex_beta(2, 3).n) if j + 1 not in range(17, 23)]
    assert np.array_equal(G.array, simplex_beta(2, 3).array[:, kept])


def test_macdonald_beta_rejects_u1():
    with pytest.raises(InvalidParameter, match="u=1 unsupported"):
        macdonald_beta(2, 3, 1)
    with pytest.raises(InvalidParameter, match="u=1 unsupported"):
        FamilySpec("macdonald-beta", 2, k=3, u=1).validate()


def test_macdonald_rejects_u_out_of_range():
    with pytest.raises(InvalidParameter):
        macdonald_alpha(2, 2, 2)
    with pytest.raises(InvalidParameter):
        macdonald_alpha(2, 2, 0)


def test_family_spec_builds_each_family():
    cases = [
        (FamilySpec("simplex-alpha", 2, k=2), (2, 16)),
        (FamilySpec("simplex-beta", 2, k=2), (2, 6)),
        (FamilySpec.hadamard_for(2, 2), (2, 4)),
        (FamilySpec("macdonald-alpha", 2, k=2, u=1), (2, 12)),
        (FamilySpec("macdonald-beta", 2, k=3, u=2), (3, 22)),
    ]
    for spec, shape in cases:
        G = spec.build_matrix()
        assert (G.k, G.n) == shape
        assert isinstance(spec.build_code(), AdditiveCode)


def test_family_spec_labels():
    assert FamilySpec("simplex-alpha", 2, k=3).label() == "S^a_3"
    assert FamilySpec.hadamard_for(3, 2).label() == "H^{2,0,0}"
    assert FamilySpec("macdonald-beta", 2, k=3, u=2).label() == "M^b_{3,2}"


def test_family_spec_validation():
    with pytest.raises(InvalidParameter):
        FamilySpec("reed-muller", 2, k=2).validate()
    with pytest.raises(InvalidParameter):
        FamilySpec("simplex-alpha", 2).validate()
    with pytest.raises(InvalidParameter):
        FamilySpec("hadamard", 2).validate()
    with pytest.raises(InvalidParameter):
        FamilySpec("macdonald-alpha", 2, k=3).validate()
