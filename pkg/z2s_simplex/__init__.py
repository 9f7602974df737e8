"""
z2s-simplex: Z_{2^s}-additive simplex, Hadamard and MacDonald codes, their
Gray images and the kernel/rank invariants of those images.
"""

from z2s_simplex.additive import AdditiveCode, CodeType, GeneratorMatrix
from z2s_simplex.constructions import FamilySpec
from z2s_simplex.graymap import phi, phi_inverse, phi_inverse_vector, phi_vector
from z2s_simplex.invariants import (
    BinaryCode,
    InvariantReport,
    RingWordSet,
    gray_image,
    invariant_report,
    kernel_additive,
    kernel_binary,
    kernel_dimension,
    rank_binary,
)
from z2s_simplex.ring import BitVector, RingScalar, RingVector

__version__ = "1.0.0"

__all__ = [
    "AdditiveCode",
    "BinaryCode",
    "BitVector",
    "CodeType",
    "FamilySpec",
    "GeneratorMatrix",
    "InvariantReport",
    "RingScalar",
    "RingVector",
    "RingWordSet",
    "gray_image",
    "invariant_report",
    "kernel_additive",
    "kernel_binary",
    "kernel_dimension",
    "phi",
    "phi_inverse",
    "phi_inverse_vector",
    "phi_vector",
    "rank_binary",
]
