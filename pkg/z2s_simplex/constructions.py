"""
Generator matrices for simplex, Hadamard and MacDonald codes over Z_{2^s}

  G_1^alpha = (0 1 2 ... 2^s-1)
  G_k^alpha = (0 1 ... 2^s-1 blocks over G_{k-1}^alpha repeated 2^s times)
  G_2^beta  = (1...1 | 0 2 ... 2^s-2  over  0 1 ... 2^s-1 | 1 ... 1)
  G_k^beta  = (1 over G_{k-1}^alpha | 0, 2, ..., 2^s-2 blocks over G_{k-1}^beta)

Hadamard matrices A^{t_1,...,t_s} grow from A^{1,0,...,0} = (1): each A_i step
puts the row (0, 1, ..., 2^{s-i+1}-1) * 2^{i-1} (each value repeated over the
current length) on top of 2^{s-i+1} copies of A. Steps run t_1-1 times for
i=1, then t_2 times for i=2, and so on, so the all-one row stays last.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from z2s_simplex.additive import AdditiveCode, GeneratorMatrix
from z2s_simplex.errors import BudgetExceeded, InvalidParameter, StructureViolation
from z2s_simplex.ring import MAX_S

logger = logging.getLogger(__name__)

SIMPLEX_ALPHA = "simplex-alpha"
SIMPLEX_BETA = "simplex-beta"
HADAMARD = "hadamard"
MACDONALD_ALPHA = "macdonald-alpha"
MACDONALD_BETA = "macdonald-beta"
FAMILIES = (SIMPLEX_ALPHA, SIMPLEX_BETA, HADAMARD, MACDONALD_ALPHA, MACDONALD_BETA)

DEFAULT_MATRIX_ENTRIES = 2 ** 24


def _check_s(s: int) -> None:
    if not isinstance(s, int) or s < 2 or s > MAX_S:
        raise InvalidParameter(f"s must be an integer in [2, {MAX_S}], got {s!r}")


def _alpha_array(s: int, k: int) -> np.ndarray:
    q = 1 << s
    g = np.arange(q, dtype=np.int64)[None, :]
    for _ in range(1, k):
        width = g.shape[1]
        top = np.repeat(np.arange(q, dtype=np.int64), width)[None, :]
        g = np.vstack([top, np.tile(g, (1, q))])
    return g


def _beta_array(s: int, k: int) -> np.ndarray:
    q = 1 << s
    evens = np.arange(0, q, 2, dtype=np.int64)
    g = np.vstack([
        np.concatenate([np.ones(q, dtype=np.int64), evens]),
        np.concatenate([np.arange(q, dtype=np.int64), np.ones(q // 2, dtype=np.int64)]),
    ])
    for j in range(3, k + 1):
        alpha = _alpha_array(s, j - 1)
        width = g.shape[1]
        top = np.concatenate([
            np.ones(alpha.shape[1], dtype=np.int64),
            np.repeat(evens, width),
        ])
        bottom = np.hstack([alpha, np.tile(g, (1, q // 2))])
        g = np.vstack([top[None, :], bottom])
    return g


def simplex_alpha(s: int, k: int) -> GeneratorMatrix:
    """G_k^alpha: k x 2^{sk}, every column of Z_{2^s}^k exactly once"""
    _check_s(s)
    if not isinstance(k, int) or k < 1:
        raise InvalidParameter(f"simplex-alpha needs k >= 1, got {k!r}")
    return GeneratorMatrix(s, _alpha_array(s, k))


def beta_length(s: int, k: int) -> int:
    return (1 << ((s - 1) * (k - 1))) * ((1 << k) - 1)


def simplex_beta(s: int, k: int) -> GeneratorMatrix:
    """G_k^beta: k x 2^{(s-1)(k-1)}(2^k-1)"""
    _check_s(s)
    if not isinstance(k, int) or k < 2:
        raise InvalidParameter(f"simplex-beta needs k >= 2, got {k!r}")
    return GeneratorMatrix(s, _beta_array(s, k))


def _check_type(s: int, ts) -> Tuple[int, ...]:
    ts = tuple(ts)
    if len(ts) != s:
        raise InvalidParameter(f"Hadamard type needs {s} entries, got {len(ts)}")
    if any(not isinstance(t, int) or t < 0 for t in ts):
        raise InvalidParameter(f"Hadamard type entries must be non-negative integers: {ts}")
    if ts[0] < 1:
        raise InvalidParameter(f"Hadamard type needs t_1 >= 1: {ts}")
    return ts


def hadamard_steps(s: int, ts) -> List[int]:
    """Sequence of A_i step indices i, in construction order"""
    ts = _check_type(s, ts)
    steps = [1] * (ts[0] - 1)
    for i in range(2, s + 1):
        steps.extend([i] * ts[i - 1])
    return steps


def hadamard_length(s: int, ts) -> int:
    length = 1
    for i in hadamard_steps(s, ts):
        length *= 1 << (s - i + 1)
    return length


def hadamard_gen(s: int, ts) -> GeneratorMatrix:
    """A^{t_1,...,t_s}; the last row is the all-one row"""
    _check_s(s)
    modulus = 1 << s
    a = np.ones((1, 1), dtype=np.int64)
    for i in hadamard_steps(s, ts):
        copies = 1 << (s - i + 1)
        width = a.shape[1]
        values = (np.arange(copies, dtype=np.int64) << (i - 1)) % modulus
        top = np.repeat(values, width)[None, :]
        a = np.vstack([top, np.tile(a, (1, copies))])
    return GeneratorMatrix(s, a)


def _last_row_is_all_ones(A: GeneratorMatrix) -> bool:
    return A.k >= 1 and bool(np.all(A.array[-1] == 1))


def strip_all_one_row(A: GeneratorMatrix) -> GeneratorMatrix:
    """A with its last (all-one) row removed"""
    if not _last_row_is_all_ones(A):
        raise StructureViolation("last row is not the all-one row")
    return GeneratorMatrix(A.s, A.array[:-1], n=A.n)


def rotate_all_one_row(A: GeneratorMatrix) -> GeneratorMatrix:
    """A with its last (all-one) row moved to the top"""
    if not _last_row_is_all_ones(A):
        raise StructureViolation("last row is not the all-one row")
    return GeneratorMatrix(A.s, np.vstack([A.array[-1:], A.array[:-1]]))


def beta_from_hadamard(s: int, k: int) -> GeneratorMatrix:
    """
    G_k^beta assembled as (A_r^{k,0,...,0} | 0, 2, ..., 2^s-2 blocks over G_{k-1}^beta)

    Built independently of simplex_beta so the two can be compared. For k = 2
    the lower right block is the single all-one row, as in G_2^beta.
    """
    _check_s(s)
    if not isinstance(k, int) or k < 2:
        raise InvalidParameter(f"needs k >= 2, got {k!r}")
    q = 1 << s
    left = rotate_all_one_row(hadamard_gen(s, (k,) + (0,) * (s - 1))).array
    lower = _beta_array(s, k - 1) if k > 2 else np.ones((1, 1), dtype=np.int64)
    evens = np.arange(0, q, 2, dtype=np.int64)
    right = np.vstack([
        np.repeat(evens, lower.shape[1])[None, :],
        np.tile(lower, (1, q // 2)),
    ])
    return GeneratorMatrix(s, np.hstack([left, right]))


def _check_macdonald(s: int, k: int, u: int) -> None:
    _check_s(s)
    if not isinstance(k, int) or k < 2:
        raise InvalidParameter(f"MacDonald codes need k >= 2, got {k!r}")
    if not isinstance(u, int) or not 1 <= u <= k - 1:
        raise InvalidParameter(f"MacDonald codes need 1 <= u <= k-1, got u={u!r}, k={k}")


def macdonald_alpha(s: int, k: int, u: int) -> GeneratorMatrix:
    """G_k^alpha without its first 2^{su} columns, which must be (0 over G_u^alpha)"""
    _check_macdonald(s, k, u)
    g = _alpha_array(s, k)
    width = 1 << (s * u)
    expected = np.vstack([np.zeros((k - u, width), dtype=np.int64), _alpha_array(s, u)])
    if not np.array_equal(g[:, :width], expected):
        raise StructureViolation(f"columns 1..{width} of G_{k}^alpha are not (0 / G_{u}^alpha)")
    return GeneratorMatrix(s, g[:, width:])


def beta_deletion_indices(s: int, k: int, u: int) -> List[int]:
    """1-based columns of G_k^beta forming the (0 / G_u^beta) block"""
    _check_macdonald(s, k, u)
    if u < 2:
        raise InvalidParameter("u=1 unsupported for type beta: G_1^beta is not defined")
    start = 1 << (s * u)
    indices = list(range(start + 1, start + beta_length(s, u) + 1))
    for j in range(u + 2, k + 1):
        offset = 1 << (s * (j - 1))
        indices = [offset + d for d in indices]
    return indices


def macdonald_beta(s: int, k: int, u: int) -> GeneratorMatrix:
    """G_k^beta without the (0 / G_u^beta) block located by beta_deletion_indices"""
    indices = beta_deletion_indices(s, k, u)
    g = _beta_array(s, k)
    columns = [d - 1 for d in indices]
    expected = np.vstack([
        np.zeros((k - u, len(columns)), dtype=np.int64),
        _beta_array(s, u),
    ])
    if not np.array_equal(g[:, columns], expected):
        raise StructureViolation(f"deleted block of G_{k}^beta is not (0 / G_{u}^beta)")
    keep = np.ones(g.shape[1], dtype=bool)
    keep[columns] = False
    return GeneratorMatrix(s, g[:, keep])


@dataclass(frozen=True)
class FamilySpec:
    """Which code to build"""
    family: str
    s: int
    k: Optional[int] = None
    u: Optional[int] = None
    ts: Optional[Tuple[int, ...]] = field(default=None)

    def validate(self, matrix_budget: Optional[int] = None) -> None:
        if self.family not in FAMILIES:
            raise InvalidParameter(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        _check_s(self.s)
        if self.family == HADAMARD:
            if self.ts is None:
                raise InvalidParameter("hadamard needs a type (t_1,...,t_s)")
            _check_type(self.s, self.ts)
        else:
            if self.k is None:
                raise InvalidParameter(f"{self.family} needs k")
            if self.family == SIMPLEX_ALPHA and self.k < 1:
                raise InvalidParameter("simplex-alpha needs k >= 1")
            if self.family == SIMPLEX_BETA and self.k < 2:
                raise InvalidParameter("simplex-beta needs k >= 2")
            if self.family in (MACDONALD_ALPHA, MACDONALD_BETA):
                if self.u is None:
                    raise InvalidParameter(f"{self.family} needs u")
                _check_macdonald(self.s, self.k, self.u)
                if self.family == MACDONALD_BETA and self.u < 2:
                    raise InvalidParameter("u=1 unsupported for type beta: G_1^beta is not defined")

        budget = DEFAULT_MATRIX_ENTRIES if matrix_budget is None else matrix_budget
        rows, n = self.dimensions()
        if rows * n > budget:
            raise BudgetExceeded(f"generator matrix of {self.label()} ({rows} x {n})", rows * n, budget)

    def dimensions(self) -> Tuple[int, int]:
        """(rows, length) of the generator matrix, without building it"""
        q = 1 << self.s
        if self.family == HADAMARD:
            return sum(self.ts), hadamard_length(self.s, self.ts)
        if self.family == SIMPLEX_ALPHA:
            return self.k, q ** self.k
        if self.family == SIMPLEX_BETA:
            return self.k, beta_length(self.s, self.k)
        if self.family == MACDONALD_ALPHA:
            return self.k, q ** self.k - q ** self.u
        return self.k, beta_length(self.s, self.k) - beta_length(self.s, self.u)

    @classmethod
    def hadamard_for(cls, s: int, t1: int) -> "FamilySpec":
        """H^{t1,0,...,0}"""
        return cls(HADAMARD, s, ts=(t1,) + (0,) * (s - 1))

    def label(self) -> str:
        if self.family == HADAMARD:
            return f"H^{{{','.join(str(t) for t in self.ts)}}}"
        names = {
            SIMPLEX_ALPHA: f"S^a_{self.k}",
            SIMPLEX_BETA: f"S^b_{self.k}",
            MACDONALD_ALPHA: f"M^a_{{{self.k},{self.u}}}",
            MACDONALD_BETA: f"M^b_{{{self.k},{self.u}}}",
        }
        return names[self.family]

    def build_matrix(self, matrix_budget: Optional[int] = None) -> GeneratorMatrix:
        self.validate(matrix_budget)
        if self.family == SIMPLEX_ALPHA:
            matrix = simplex_alpha(self.s, self.k)
        elif self.family == SIMPLEX_BETA:
            matrix = simplex_beta(self.s, self.k)
        elif self.family == HADAMARD:
            matrix = hadamard_gen(self.s, self.ts)
        elif self.family == MACDONALD_ALPHA:
            matrix = macdonald_alpha(self.s, self.k, self.u)
        else:
            matrix = macdonald_beta(self.s, self.k, self.u)
        logger.debug(f"Built {self.label()} over Z_{1 << self.s}: {matrix.k}x{matrix.n}")
        return matrix

    def build_code(self, matrix_budget: Optional[int] = None) -> AdditiveCode:
        return AdditiveCode(self.build_matrix(matrix_budget))
