"""
Text formats

Matrix:          first line `s=<s> rows=<k> cols=<n>`, then k lines of n
                 space-separated integers in [0, 2^s).
Binary listing:  first line `len=<bits> count=<m>`, then m lines of 0/1
                 characters, coordinate 0 first.
"""

import re
from typing import List, TextIO

import numpy as np

from z2s_simplex.additive import GeneratorMatrix
from z2s_simplex.errors import InvalidParameter, MatrixFormatError, StructureViolation
from z2s_simplex.invariants import BinaryCode
from z2s_simplex.ring import MAX_S, BitVector

MATRIX_HEADER = re.compile(r"^s=(\d+)\s+rows=(\d+)\s+cols=(\d+)$")
LISTING_HEADER = re.compile(r"^len=(\d+)\s+count=(\d+)$")


def format_matrix(G: GeneratorMatrix) -> str:
    lines = [f"s={G.s} rows={G.k} cols={G.n}"]
    for row in G.array:
        lines.append(" ".join(str(int(v)) for v in row))
    return "\n".join(lines) + "\n"


def write_matrix(G: GeneratorMatrix, stream: TextIO) -> None:
    stream.write(format_matrix(G))


def _content_lines(text: str) -> List[str]:
    return [line.strip() for line in text.splitlines() if line.strip()]


def parse_matrix(text: str) -> GeneratorMatrix:
    lines = _content_lines(text)
    if not lines:
        raise MatrixFormatError("empty matrix text")
    match = MATRIX_HEADER.match(lines[0])
    if not match:
        raise MatrixFormatError(f"bad matrix header: {lines[0]!r}")
    s, k, n = (int(g) for g in match.groups())
    body = lines[1:]
    if len(body) != k:
        raise MatrixFormatError(f"header declares {k} rows, found {len(body)}")

    if not 1 <= s <= MAX_S:
        raise MatrixFormatError(f"s must be in [1, {MAX_S}], got {s}")
    modulus = 1 << s
    rows = []
    for number, line in enumerate(body, start=2):
        try:
            values = [int(tok) for tok in line.split()]
        except ValueError:
            raise MatrixFormatError(f"line {number}: entries must be integers")
        if len(values) != n:
            raise MatrixFormatError(f"line {number}: expected {n} entries, found {len(values)}")
        if any(v < 0 or v >= modulus for v in values):
            raise MatrixFormatError(f"line {number}: entries must lie in [0, 2^{s})")
        rows.append(values)

    try:
        return GeneratorMatrix(s, np.array(rows, dtype=np.int64).reshape(k, n), n=n)
    except InvalidParameter as e:
        raise MatrixFormatError(e.message)


def read_matrix(stream: TextIO) -> GeneratorMatrix:
    return parse_matrix(stream.read())


def format_listing(C: BinaryCode) -> str:
    lines = [f"len={C.length} count={len(C)}"]
    lines.extend(str(word) for word in C)
    return "\n".join(lines) + "\n"


def write_listing(C: BinaryCode, stream: TextIO) -> None:
    stream.write(format_listing(C))


def parse_listing(text: str) -> BinaryCode:
    lines = _content_lines(text)
    if not lines:
        raise MatrixFormatError("empty listing text")
    match = LISTING_HEADER.match(lines[0])
    if not match:
        raise MatrixFormatError(f"bad listing header: {lines[0]!r}")
    length, count = (int(g) for g in match.groups())
    body = lines[1:]
    if len(body) != count:
        raise MatrixFormatError(f"header declares {count} words, found {len(body)}")
    words = []
    for number, line in enumerate(body, start=2):
        if len(line) != length or set(line) - {"0", "1"}:
            raise MatrixFormatError(f"line {number}: expected {length} binary digits")
        words.append(BitVector.from_string(line).bits)
    try:
        return BinaryCode(length, words)
    except StructureViolation as e:
        raise MatrixFormatError(e.message)
