"""
Carlet's generalized Gray map

phi: Z_{2^s} -> Z_2^{2^{s-1}},  phi(u) = (u_{s-1}, ..., u_{s-1}) + (u_0, ..., u_{s-2}) Y

where the columns of the (s-1) x 2^{s-1} matrix Y are the elements of
Z_2^{s-1}. Column j of the canonical Y is the binary expansion of j with u_0
in the first row. phi is GF(2)-linear in the binary expansion of u, so
phi(u) + phi(v) = phi(u XOR v) for any column order of Y.

Phi is the coordinatewise extension: the block of coordinate j (0-based)
occupies bits j*2^{s-1} ... (j+1)*2^{s-1} - 1 of the packed word.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from z2s_simplex.errors import InvalidParameter, LengthMismatch, ModulusMismatch, NotInImage
from z2s_simplex.ring import MAX_S, BitVector, RingScalar, RingVector

logger = logging.getLogger(__name__)

# Above this s, images are computed on demand and phi_inverse decodes bits directly
INVERSE_TABLE_MAX_S = 12


@dataclass(frozen=True)
class GrayMatrix:
    """The matrix Y; rows[i] packs row i as a BitVector of length 2^{s-1}"""
    s: int
    rows: Tuple[BitVector, ...]

    def __post_init__(self):
        if self.s < 1 or self.s > MAX_S:
            raise InvalidParameter(f"s must be in [1, {MAX_S}], got {self.s}")
        if len(self.rows) != self.s - 1:
            raise InvalidParameter(f"Y needs {self.s - 1} rows, got {len(self.rows)}")
        width = self.width
        for row in self.rows:
            if row.length != width:
                raise InvalidParameter(f"Y rows must have length {width}")
        if len(set(self.columns())) != width:
            raise InvalidParameter("columns of Y must enumerate Z_2^{s-1} without repetition")

    @property
    def width(self) -> int:
        return 1 << (self.s - 1)

    def columns(self) -> List[int]:
        """Column j as an integer whose bit i is Y[i][j]"""
        cols = []
        for j in range(self.width):
            value = 0
            for i, row in enumerate(self.rows):
                value |= ((row.bits >> j) & 1) << i
            cols.append(value)
        return cols

    def permuted(self, order: Sequence[int]) -> "GrayMatrix":
        """Same matrix with columns rearranged: new column j is old column order[j]"""
        if sorted(order) != list(range(self.width)):
            raise InvalidParameter("column order must be a permutation")
        rows = []
        for row in self.rows:
            bits = 0
            for j, src in enumerate(order):
                bits |= ((row.bits >> src) & 1) << j
            rows.append(BitVector(bits, self.width))
        return GrayMatrix(self.s, tuple(rows))


def gray_matrix(s: int) -> GrayMatrix:
    """Canonical Y: column j is the binary expansion of j, u_0 in row 1"""
    if not isinstance(s, int) or s < 1:
        raise InvalidParameter(f"s must be a positive integer, got {s!r}")
    width = 1 << (s - 1)
    rows = []
    for i in range(s - 1):
        bits = 0
        for j in range(width):
            if (j >> i) & 1:
                bits |= 1 << j
        rows.append(BitVector(bits, width))
    return GrayMatrix(s, tuple(rows))


class GrayMap:
    """phi and Phi for one Y; images of all 2^s residues are precomputed"""

    def __init__(self, matrix: GrayMatrix):
        self.matrix = matrix
        self.s = matrix.s
        self.width = matrix.width
        self._all_ones = (1 << self.width) - 1
        self._row_bits = [row.bits for row in matrix.rows]
        self._images: Optional[Tuple[int, ...]] = None
        self._inverse: Optional[Dict[int, int]] = None
        if self.s <= INVERSE_TABLE_MAX_S:
            self._images = tuple(self._compute(u) for u in range(1 << self.s))
            self._inverse = {bits: u for u, bits in enumerate(self._images)}
        self._bit_table: Optional[np.ndarray] = None

        columns = matrix.columns()
        self._zero_col = columns.index(0)
        self._unit_cols = [columns.index(1 << i) for i in range(self.s - 1)]

    def _compute(self, u: int) -> int:
        bits = self._all_ones if (u >> (self.s - 1)) & 1 else 0
        for i, row in enumerate(self._row_bits):
            if (u >> i) & 1:
                bits ^= row
        return bits

    def image_bits(self, u: int) -> int:
        if self._images is None:
            return self._compute(u)
        return self._images[u]

    def phi(self, u: RingScalar) -> BitVector:
        self._check_modulus(u.s)
        return BitVector(self.image_bits(u.value), self.width)

    def phi_vector(self, v: RingVector) -> BitVector:
        self._check_modulus(v.s)
        packed = 0
        for j, value in enumerate(v.coords):
            packed |= self.image_bits(value) << (j * self.width)
        return BitVector(packed, v.n * self.width)

    def phi_inverse(self, b: BitVector) -> RingScalar:
        if b.length != self.width:
            raise LengthMismatch(f"phi_inverse needs {self.width} bits, got {b.length}")
        return RingScalar(self._invert(b.bits), self.s)

    def phi_inverse_vector(self, b: BitVector) -> RingVector:
        if b.length == 0 or b.length % self.width:
            raise LengthMismatch(f"bit length {b.length} is not a positive multiple of {self.width}")
        mask = (1 << self.width) - 1
        n = b.length // self.width
        coords = tuple(self._invert((b.bits >> (j * self.width)) & mask) for j in range(n))
        return RingVector(coords, self.s)

    def _invert(self, bits: int) -> int:
        if self._inverse is not None:
            try:
                return self._inverse[bits]
            except KeyError:
                raise NotInImage(f"{bits:0{self.width}b} is not an image of phi for s={self.s}")
        top = (bits >> self._zero_col) & 1
        u = top << (self.s - 1)
        for i, col in enumerate(self._unit_cols):
            u |= (((bits >> col) & 1) ^ top) << i
        if self._compute(u) != bits:
            raise NotInImage(f"word is not an image of phi for s={self.s}")
        return u

    def bit_table(self) -> np.ndarray:
        """uint8 array of shape (2^s, 2^{s-1}); row u is phi(u)"""
        if self._images is None:
            raise InvalidParameter(f"bit table not available for s={self.s} > {INVERSE_TABLE_MAX_S}")
        if self._bit_table is None:
            table = np.zeros((1 << self.s, self.width), dtype=np.uint8)
            for u, bits in enumerate(self._images):
                for j in range(self.width):
                    table[u, j] = (bits >> j) & 1
            self._bit_table = table
        return self._bit_table

    def phi_rows(self, words: np.ndarray) -> List[int]:
        """Phi of each row of a 2-D residue array, packed into ints"""
        if words.ndim != 2:
            raise InvalidParameter("phi_rows expects a 2-D array")
        m, n = words.shape
        if m == 0:
            return []
        if self._images is None:
            return [self.phi_vector(RingVector.from_array(row, self.s)).bits for row in words]
        bits = self.bit_table()[words].reshape(m, n * self.width)
        packed = np.packbits(bits, axis=1, bitorder="little")
        return [int.from_bytes(row.tobytes(), "little") for row in packed]

    def _check_modulus(self, s: int) -> None:
        if s != self.s:
            raise ModulusMismatch(f"Gray map built for s={self.s}, got s={s}")


@lru_cache(maxsize=None)
def canonical_map(s: int) -> GrayMap:
    return GrayMap(gray_matrix(s))


def phi(u: RingScalar) -> BitVector:
    return canonical_map(u.s).phi(u)


def phi_vector(v: RingVector) -> BitVector:
    return canonical_map(v.s).phi_vector(v)


def phi_inverse(b: BitVector, s: int) -> RingScalar:
    return canonical_map(s).phi_inverse(b)


def phi_inverse_vector(b: BitVector, s: int) -> RingVector:
    return canonical_map(s).phi_inverse_vector(b)
