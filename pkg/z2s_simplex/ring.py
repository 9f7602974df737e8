"""
Arithmetic in Z_{2^s}

Scalars, vectors over Z_{2^s}, packed binary words, the bitwise product of
binary expansions (odot) and the Lee/Hamming metrics. Everything here is an
immutable value; hot loops elsewhere work on numpy arrays and use the
*_array helpers at the bottom of this module.
"""

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from z2s_simplex.errors import InvalidParameter, LengthMismatch, ModulusMismatch

MAX_S = 16


def _check_s(s: int) -> None:
    if not isinstance(s, (int, np.integer)) or s < 1 or s > MAX_S:
        raise InvalidParameter(f"modulus exponent s must be in [1, {MAX_S}], got {s!r}")


@dataclass(frozen=True)
class RingScalar:
    """Residue modulo 2^s"""
    value: int
    s: int

    def __post_init__(self):
        _check_s(self.s)
        if not 0 <= self.value < (1 << self.s):
            raise InvalidParameter(f"{self.value} is not a residue modulo 2^{self.s}")

    @property
    def modulus(self) -> int:
        return 1 << self.s

    @classmethod
    def of(cls, value: int, s: int) -> "RingScalar":
        """Reduce an arbitrary integer modulo 2^s"""
        _check_s(s)
        return cls(int(value) % (1 << s), s)

    def __int__(self) -> int:
        return self.value

    def __add__(self, other: "RingScalar") -> "RingScalar":
        _same_modulus(self.s, other.s)
        return RingScalar((self.value + other.value) % self.modulus, self.s)

    def __sub__(self, other: "RingScalar") -> "RingScalar":
        _same_modulus(self.s, other.s)
        return RingScalar((self.value - other.value) % self.modulus, self.s)

    def __neg__(self) -> "RingScalar":
        return RingScalar(-self.value % self.modulus, self.s)

    def __mul__(self, other: Union["RingScalar", int]) -> "RingScalar":
        factor = other.value if isinstance(other, RingScalar) else int(other)
        if isinstance(other, RingScalar):
            _same_modulus(self.s, other.s)
        return RingScalar((self.value * factor) % self.modulus, self.s)

    __rmul__ = __mul__


@dataclass(frozen=True)
class RingVector:
    """Vector over Z_{2^s}; s is stored once for all coordinates"""
    coords: Tuple[int, ...]
    s: int

    def __post_init__(self):
        _check_s(self.s)
        if len(self.coords) < 1:
            raise InvalidParameter("a RingVector needs at least one coordinate")
        modulus = 1 << self.s
        for value in self.coords:
            if not 0 <= value < modulus:
                raise InvalidParameter(f"{value} is not a residue modulo 2^{self.s}")

    @classmethod
    def of(cls, values: Iterable[int], s: int) -> "RingVector":
        _check_s(s)
        modulus = 1 << s
        return cls(tuple(int(v) % modulus for v in values), s)

    @classmethod
    def from_array(cls, array: np.ndarray, s: int) -> "RingVector":
        return cls(tuple(int(v) for v in array), s)

    @classmethod
    def zero(cls, n: int, s: int) -> "RingVector":
        return cls((0,) * n, s)

    @property
    def n(self) -> int:
        return len(self.coords)

    @property
    def modulus(self) -> int:
        return 1 << self.s

    def array(self) -> np.ndarray:
        return np.array(self.coords, dtype=np.int64)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, index: int) -> RingScalar:
        return RingScalar(self.coords[index], self.s)

    def __iter__(self):
        return (RingScalar(v, self.s) for v in self.coords)

    def __add__(self, other: "RingVector") -> "RingVector":
        return add(self, other)

    def __sub__(self, other: "RingVector") -> "RingVector":
        return add(self, negate(other))

    def __neg__(self) -> "RingVector":
        return negate(self)

    def __rmul__(self, scalar: Union[RingScalar, int]) -> "RingVector":
        return scale(self, scalar)

    def __str__(self) -> str:
        sep = "" if self.s <= 3 else " "
        return sep.join(str(v) for v in self.coords)


@dataclass(frozen=True)
class BitVector:
    """Binary word packed into an int; bit j is coordinate j"""
    bits: int
    length: int

    def __post_init__(self):
        if self.length < 0:
            raise InvalidParameter(f"negative length {self.length}")
        if self.bits < 0 or self.bits >> self.length:
            raise InvalidParameter(f"bits do not fit in {self.length} positions")

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "BitVector":
        packed = 0
        for index, bit in enumerate(bits):
            if bit not in (0, 1):
                raise InvalidParameter(f"entry {bit!r} is not a binary digit")
            packed |= bit << index
        return cls(packed, len(bits))

    @classmethod
    def from_string(cls, text: str) -> "BitVector":
        return cls.from_bits([int(ch) for ch in text.strip()])

    def to_list(self) -> List[int]:
        return [(self.bits >> j) & 1 for j in range(self.length)]

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, index: int) -> int:
        if not -self.length <= index < self.length:
            raise IndexError(index)
        return (self.bits >> (index % self.length)) & 1

    def __xor__(self, other: "BitVector") -> "BitVector":
        _same_length(self.length, other.length)
        return BitVector(self.bits ^ other.bits, self.length)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.to_list())


def _same_modulus(s: int, t: int) -> None:
    if s != t:
        raise ModulusMismatch(f"moduli differ: 2^{s} vs 2^{t}")


def _same_length(n: int, m: int) -> None:
    if n != m:
        raise LengthMismatch(f"lengths differ: {n} vs {m}")


def binary_expansion(u: RingScalar) -> List[int]:
    """Bits [u_0, ..., u_{s-1}], least significant first"""
    return [(u.value >> i) & 1 for i in range(u.s)]


def odot(u, v):
    """
    Bitwise product of binary expansions

    Works on RingScalar pairs and, coordinatewise, on RingVector pairs. This is
    the carry term in phi(u) + phi(v) = phi(u + v - 2 (u odot v)).
    """
    _same_modulus(u.s, v.s)
    if isinstance(u, RingScalar) and isinstance(v, RingScalar):
        return RingScalar(u.value & v.value, u.s)
    if isinstance(u, RingVector) and isinstance(v, RingVector):
        _same_length(u.n, v.n)
        return RingVector(tuple(a & b for a, b in zip(u.coords, v.coords)), u.s)
    raise InvalidParameter("odot needs two scalars or two vectors")


def lee_weight(u) -> int:
    """min(u, 2^s - u), summed over coordinates for a vector"""
    modulus = 1 << u.s
    if isinstance(u, RingScalar):
        return min(u.value, modulus - u.value)
    return sum(min(v, modulus - v) for v in u.coords)


def lee_distance(u: RingVector, v: RingVector) -> int:
    return lee_weight(add(v, negate(u)))


def hamming_weight(x: BitVector) -> int:
    return x.bits.bit_count()


def hamming_distance(x: BitVector, y: BitVector) -> int:
    _same_length(x.length, y.length)
    return (x.bits ^ y.bits).bit_count()


def add(a: RingVector, b: RingVector) -> RingVector:
    _same_modulus(a.s, b.s)
    _same_length(a.n, b.n)
    modulus = a.modulus
    return RingVector(tuple((x + y) % modulus for x, y in zip(a.coords, b.coords)), a.s)


def negate(a: RingVector) -> RingVector:
    modulus = a.modulus
    return RingVector(tuple(-x % modulus for x in a.coords), a.s)


def scale(a: RingVector, scalar: Union[RingScalar, int]) -> RingVector:
    if isinstance(scalar, RingScalar):
        _same_modulus(a.s, scalar.s)
        factor = scalar.value
    else:
        factor = int(scalar)
    modulus = a.modulus
    return RingVector(tuple((factor * x) % modulus for x in a.coords), a.s)


def ring_vector_arith(a: RingVector, b: RingVector, scalar: RingScalar) -> Tuple[RingVector, RingVector, RingVector]:
    """(a + b, -a, scalar * a), all modulo 2^s"""
    _same_modulus(a.s, scalar.s)
    return add(a, b), negate(a), scale(a, scalar)


def valuation(value: int, s: int) -> int:
    """2-adic valuation of a residue; s for zero"""
    if value == 0:
        return s
    return (value & -value).bit_length() - 1


def order_of(c) -> int:
    """Additive order 2^j of a scalar or vector"""
    values = (c.value,) if isinstance(c, RingScalar) else c.coords
    min_val = min(valuation(v, c.s) for v in values)
    return 1 << (c.s - min_val)


# numpy helpers ---------------------------------------------------------------

def odot_array(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.bitwise_and(a, b)


def lee_weight_array(words: np.ndarray, s: int) -> np.ndarray:
    """Row-wise Lee weights of a 2-D array of residues"""
    modulus = 1 << s
    return np.minimum(words, modulus - words).sum(axis=-1)
