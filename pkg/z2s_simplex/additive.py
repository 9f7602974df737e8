"""
Z_{2^s}-additive codes

A code is held as a generator matrix plus its echelon normal form over the
chain ring Z_{2^s}. Each step pivots on an entry of minimal 2-adic valuation
(leftmost column, then topmost row), scales it to an exact power 2^j and
clears its column in the remaining rows; entries of earlier rows are then
reduced below each later pivot. Every entry of a row with pivot 2^j is a
multiple of 2^j, so that row has order exactly 2^{s-j} and the rows form a
direct sum. Rows come out sorted by (j, pivot column). A row with pivot 2^j
takes coefficients in [0, 2^{s-j}); these coefficient vectors index the
codewords one-to-one and additively.

Coordinate positions passed to restrict() are 1-based, matching the index
sets used for the MacDonald deletions.
"""

import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from z2s_simplex.errors import (
    BudgetExceeded,
    InvalidIndex,
    InvalidParameter,
    LengthMismatch,
    ModulusMismatch,
)
from z2s_simplex.ring import MAX_S, RingVector, lee_weight_array

logger = logging.getLogger(__name__)

DEFAULT_ENUM_BUDGET = 2 ** 22
DEFAULT_CHUNK = 1024


class GeneratorMatrix:
    """k x n matrix over Z_{2^s}; k may be 0 (the zero code)"""

    def __init__(self, s: int, array, n: Optional[int] = None):
        if not isinstance(s, (int, np.integer)) or s < 1 or s > MAX_S:
            raise InvalidParameter(f"s must be in [1, {MAX_S}], got {s!r}")
        data = np.array(array, dtype=np.int64)
        if data.size == 0:
            if n is None:
                raise InvalidParameter("an empty generator matrix needs an explicit length n")
            data = np.zeros((0, n), dtype=np.int64)
        if data.ndim != 2:
            raise InvalidParameter("generator matrix must be 2-dimensional")
        if data.shape[1] < 1:
            raise InvalidParameter("generator matrix needs at least one column")
        if n is not None and data.shape[1] != n:
            raise LengthMismatch(f"rows have length {data.shape[1]}, expected {n}")
        modulus = 1 << int(s)
        if data.size and (data.min() < 0 or data.max() >= modulus):
            raise InvalidParameter(f"entries must be residues modulo 2^{s}")
        data.setflags(write=False)
        self.s = int(s)
        self.array = data

    @classmethod
    def from_rows(cls, rows: Sequence[RingVector]) -> "GeneratorMatrix":
        if not rows:
            raise InvalidParameter("from_rows needs at least one row")
        s = rows[0].s
        n = rows[0].n
        for row in rows:
            if row.s != s:
                raise ModulusMismatch(f"rows mix moduli 2^{s} and 2^{row.s}")
            if row.n != n:
                raise LengthMismatch(f"rows mix lengths {n} and {row.n}")
        return cls(s, [row.coords for row in rows])

    @property
    def k(self) -> int:
        return self.array.shape[0]

    @property
    def n(self) -> int:
        return self.array.shape[1]

    @property
    def modulus(self) -> int:
        return 1 << self.s

    @property
    def rows(self) -> Tuple[RingVector, ...]:
        return tuple(RingVector.from_array(row, self.s) for row in self.array)

    def row(self, index: int) -> np.ndarray:
        return self.array[index]

    def __eq__(self, other) -> bool:
        if not isinstance(other, GeneratorMatrix):
            return NotImplemented
        return self.s == other.s and np.array_equal(self.array, other.array)

    def __hash__(self):
        return hash((self.s, self.array.shape, self.array.tobytes()))

    def __repr__(self) -> str:
        return f"GeneratorMatrix(s={self.s}, k={self.k}, n={self.n})"


@dataclass(frozen=True)
class Pivot:
    column: int
    exponent: int  # pivot entry is 2^exponent


@dataclass(frozen=True)
class CodeType:
    """(n; t_1, ..., t_s); t_j counts generators of order 2^{s-j+1}"""
    n: int
    ts: Tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.ts)

    @property
    def log2_size(self) -> int:
        s = self.s
        return sum((s - j) * t for j, t in enumerate(self.ts))

    @property
    def size(self) -> int:
        return 1 << self.log2_size

    @property
    def torsion_dimension(self) -> int:
        return sum(self.ts)

    def __str__(self) -> str:
        return f"({self.n}; {','.join(str(t) for t in self.ts)})"


def _valuations(pool: np.ndarray, s: int) -> np.ndarray:
    """Element-wise 2-adic valuation; s for zero entries"""
    low = np.bitwise_and(pool, -pool)
    vals = np.zeros(pool.shape, dtype=np.int64)
    for j in range(1, s):
        vals[low >= (1 << j)] = j
    vals[pool == 0] = s
    return vals


def _echelon(s: int, array: np.ndarray) -> Tuple[np.ndarray, Tuple[Pivot, ...]]:
    modulus = 1 << s
    n = array.shape[1]
    pool = array % modulus
    pool = pool[np.any(pool != 0, axis=1)]
    rows: List[np.ndarray] = []
    pivots: List[Pivot] = []

    while pool.shape[0]:
        vals = _valuations(pool, s)
        v = int(vals.min())
        c = int(np.flatnonzero(np.any(vals == v, axis=0))[0])
        best = int(np.flatnonzero(vals[:, c] == v)[0])

        unit = int(pool[best, c]) >> v
        inverse = pow(unit, -1, modulus)
        pivot_row = (pool[best] * inverse) % modulus

        others = np.delete(pool, best, axis=0)
        if others.shape[0]:
            factors = others[:, c] >> v
            others = (others - factors[:, None] * pivot_row[None, :]) % modulus

        rows.append(pivot_row)
        pivots.append(Pivot(c, v))
        pool = others[np.any(others != 0, axis=1)]

    if not rows:
        return np.zeros((0, n), dtype=np.int64), ()

    reduced = np.array(rows, dtype=np.int64)
    for i, pivot in enumerate(pivots):
        for p in range(i):
            q = int(reduced[p, pivot.column]) >> pivot.exponent
            if q:
                reduced[p] = (reduced[p] - q * reduced[i]) % modulus
    return reduced, tuple(pivots)


def normal_form(G: GeneratorMatrix) -> GeneratorMatrix:
    """Echelon form generating the same code; deterministic"""
    reduced, _ = _echelon(G.s, G.array)
    return GeneratorMatrix(G.s, reduced, n=G.n)


class AdditiveCode:
    """Subgroup of Z_{2^s}^n generated by the rows of gen; immutable"""

    def __init__(self, gen: GeneratorMatrix):
        self.gen = gen
        self.s = gen.s
        self.n = gen.n
        reduced, pivots = _echelon(gen.s, gen.array)
        self.normal = GeneratorMatrix(gen.s, reduced, n=gen.n)
        self.pivots = pivots
        ts = [0] * gen.s
        for pivot in pivots:
            ts[pivot.exponent] += 1
        self.ctype = CodeType(gen.n, tuple(ts))
        self._radices = tuple(1 << (gen.s - p.exponent) for p in pivots)

    @classmethod
    def from_rows(cls, rows: Sequence[RingVector]) -> "AdditiveCode":
        return cls(GeneratorMatrix.from_rows(rows))

    @classmethod
    def zero(cls, n: int, s: int) -> "AdditiveCode":
        return cls(GeneratorMatrix(s, [], n=n))

    @property
    def modulus(self) -> int:
        return 1 << self.s

    @property
    def size(self) -> int:
        return self.ctype.size

    @property
    def log2_size(self) -> int:
        return self.ctype.log2_size

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"AdditiveCode(s={self.s}, type={self.ctype})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, AdditiveCode):
            return NotImplemented
        if self.s != other.s or self.n != other.n or self.ctype != other.ctype:
            return False
        return bool(self.contains_rows(other.normal.array).all())

    __hash__ = None

    # membership -----------------------------------------------------------

    def contains_rows(self, words: np.ndarray) -> np.ndarray:
        """Boolean membership for each row of a 2-D residue array"""
        words = np.asarray(words, dtype=np.int64)
        if words.ndim != 2 or words.shape[1] != self.n:
            raise LengthMismatch(f"expected rows of length {self.n}")
        modulus = self.modulus
        work = words % modulus
        ok = np.ones(work.shape[0], dtype=bool)
        for pivot, row in zip(self.pivots, self.normal.array):
            column = work[:, pivot.column]
            ok &= (column & ((1 << pivot.exponent) - 1)) == 0
            factors = column >> pivot.exponent
            work = (work - factors[:, None] * row[None, :]) % modulus
        ok &= ~np.any(work != 0, axis=1)
        return ok

    def contains(self, x: RingVector) -> bool:
        if x.s != self.s:
            raise ModulusMismatch(f"vector is over Z_2^{x.s}, code is over Z_2^{self.s}")
        if x.n != self.n:
            raise LengthMismatch(f"vector has length {x.n}, code has length {self.n}")
        return bool(self.contains_rows(x.array()[None, :])[0])

    def __contains__(self, x: RingVector) -> bool:
        return self.contains(x)

    # enumeration ----------------------------------------------------------

    def check_budget(self, budget: Optional[int], what: str = "enumeration") -> None:
        budget = DEFAULT_ENUM_BUDGET if budget is None else budget
        if self.size > budget:
            raise BudgetExceeded(f"{what} of code of type {self.ctype}", self.size, budget)

    def coefficients(self, start: int, stop: int) -> np.ndarray:
        """Coefficient vectors for codeword indices [start, stop), first row most significant"""
        index = np.arange(start, stop, dtype=np.int64)
        k = len(self._radices)
        coefs = np.zeros((index.size, k), dtype=np.int64)
        stride = 1
        for i in range(k - 1, -1, -1):
            coefs[:, i] = (index // stride) % self._radices[i]
            stride *= self._radices[i]
        return coefs

    def words_for(self, coefs: np.ndarray) -> np.ndarray:
        if not self.pivots:
            return np.zeros((coefs.shape[0], self.n), dtype=np.int64)
        return (coefs @ self.normal.array) % self.modulus

    def iter_chunks(
        self,
        chunk_size: int = DEFAULT_CHUNK,
        start: int = 0,
        stop: Optional[int] = None,
        budget: Optional[int] = None,
    ) -> Iterator[np.ndarray]:
        """2-D arrays of codewords in enumeration order, restricted to [start, stop)"""
        self.check_budget(budget)
        stop = self.size if stop is None else min(stop, self.size)
        for lo in range(start, stop, chunk_size):
            hi = min(lo + chunk_size, stop)
            yield self.words_for(self.coefficients(lo, hi))

    def all_words(self, budget: Optional[int] = None) -> np.ndarray:
        self.check_budget(budget)
        return self.words_for(self.coefficients(0, self.size))

    def enumerate(self, budget: Optional[int] = None) -> Iterator[RingVector]:
        """Every codeword once, lexicographic over normal-form coefficients"""
        for chunk in self.iter_chunks(budget=budget):
            for word in chunk:
                yield RingVector.from_array(word, self.s)

    # derived codes ----------------------------------------------------------

    def torsion_subcode(self) -> "AdditiveCode":
        """{c in C : 2c = 0}"""
        rows = [
            (row << (self.s - pivot.exponent - 1)) % self.modulus
            for pivot, row in zip(self.pivots, self.normal.array)
        ]
        return AdditiveCode(GeneratorMatrix(self.s, rows, n=self.n))

    def two_basis(self) -> List[RingVector]:
        basis = []
        for pivot, row in zip(self.pivots, self.normal.array):
            for i in range(self.s - pivot.exponent):
                basis.append(RingVector.from_array((row << i) % self.modulus, self.s))
        return basis

    def two_basis_array(self) -> np.ndarray:
        basis = self.two_basis()
        if not basis:
            return np.zeros((0, self.n), dtype=np.int64)
        return np.array([b.coords for b in basis], dtype=np.int64)

    def restrict(self, positions: Sequence[int]) -> "AdditiveCode":
        """Code {c_I}; positions are 1-based"""
        if not positions:
            raise InvalidIndex("restriction needs at least one coordinate")
        for p in positions:
            if not 1 <= p <= self.n:
                raise InvalidIndex(f"coordinate {p} outside 1..{self.n}")
        columns = [p - 1 for p in positions]
        return AdditiveCode(GeneratorMatrix(self.s, self.gen.array[:, columns], n=len(columns)))

    def scale(self, factor: int) -> "AdditiveCode":
        """Code generated by factor * G"""
        return AdditiveCode(GeneratorMatrix(self.s, (self.gen.array * factor) % self.modulus, n=self.n))

    def min_lee_distance(self, budget: Optional[int] = None) -> int:
        """Minimum Lee weight of a nonzero codeword; 0 for the zero code"""
        best = None
        for chunk in self.iter_chunks(budget=budget):
            weights = lee_weight_array(chunk, self.s)
            weights = weights[weights > 0]
            if weights.size:
                low = int(weights.min())
                best = low if best is None else min(best, low)
        return best or 0


def contains(C: AdditiveCode, x: RingVector) -> bool:
    return C.contains(x)


def enumerate_codewords(C: AdditiveCode, budget: Optional[int] = None) -> Iterator[RingVector]:
    return C.enumerate(budget=budget)


def code_type(C: AdditiveCode) -> CodeType:
    return C.ctype


def torsion_subcode(C: AdditiveCode) -> AdditiveCode:
    return C.torsion_subcode()


def two_basis(C: AdditiveCode) -> List[RingVector]:
    return C.two_basis()


def restrict(C: AdditiveCode, positions: Sequence[int]) -> AdditiveCode:
    return C.restrict(positions)
