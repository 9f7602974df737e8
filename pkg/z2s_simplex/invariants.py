"""
Invariants of Z_{2^s}-linear codes (Gray images of additive codes)

Two kernel algorithms are provided and are expected to agree:

  kernel_binary    works on the binary code: x is in K(C) iff x + C = C.
  kernel_additive  works on the ring side: u in C maps into the kernel iff
                   2 (u odot v) is in C for every v in C. Only one
                   representative per coset of the torsion subcode C_b is
                   tested, since Phi(C_b) always lies in the kernel.

Gray images are distance invariant (d_H(Phi(u), Phi(v)) = wt_H(Phi(u - v))),
so minimum distance and weight distribution of a Gray image are read off the
codeword weights without building pairs.
"""

import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from z2s_simplex.additive import DEFAULT_CHUNK, AdditiveCode, GeneratorMatrix
from z2s_simplex.constructions import FamilySpec
from z2s_simplex.errors import BudgetExceeded, InvalidParameter, NotLinear, StructureViolation
from z2s_simplex.graymap import canonical_map
from z2s_simplex.ring import BitVector, RingVector
from z2s_simplex.settings import Settings

logger = logging.getLogger(__name__)

DEFAULT_PAIR_BUDGET = 2 ** 34
DEFAULT_FULL_SPACE_LENGTH = 24


class BinaryCode:
    """Set of binary words of one length, kept in a fixed order"""

    def __init__(self, length: int, words: Iterable[int]):
        self.length = length
        self.words: Tuple[int, ...] = tuple(words)
        self._index = frozenset(self.words)
        if len(self._index) != len(self.words):
            raise StructureViolation("binary code contains duplicate words")
        limit = 1 << length
        for w in self.words:
            if w < 0 or w >= limit:
                raise InvalidParameter(f"word does not fit in {length} bits")

    @classmethod
    def from_bitvectors(cls, vectors: Sequence[BitVector]) -> "BinaryCode":
        if not vectors:
            raise InvalidParameter("a binary code needs at least one word")
        length = vectors[0].length
        if any(v.length != length for v in vectors):
            raise InvalidParameter("all words of a binary code must share one length")
        return cls(length, [v.bits for v in vectors])

    @classmethod
    def from_strings(cls, words: Sequence[str]) -> "BinaryCode":
        return cls.from_bitvectors([BitVector.from_string(w) for w in words])

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return (BitVector(w, self.length) for w in self.words)

    def __contains__(self, x: Union[BitVector, int]) -> bool:
        bits = x.bits if isinstance(x, BitVector) else x
        return bits in self._index

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryCode):
            return NotImplemented
        return self.length == other.length and self._index == other._index

    __hash__ = None

    def as_set(self) -> frozenset:
        return self._index

    def sorted(self) -> "BinaryCode":
        return BinaryCode(self.length, sorted(self.words))

    def __repr__(self) -> str:
        return f"BinaryCode(length={self.length}, size={len(self.words)})"


class Gf2Basis:
    """Incremental GF(2) elimination over int-packed rows, keyed by leading bit"""

    def __init__(self, length: int):
        self.length = length
        self.rows: Dict[int, int] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def full(self) -> bool:
        return len(self.rows) >= self.length

    def reduce(self, word: int) -> int:
        while word:
            lead = word.bit_length() - 1
            row = self.rows.get(lead)
            if row is None:
                return word
            word ^= row
        return 0

    def add(self, word: int) -> bool:
        """Insert word; True if it raised the rank"""
        residue = self.reduce(word)
        if residue:
            self.rows[residue.bit_length() - 1] = residue
            return True
        return False

    def span(self) -> List[int]:
        words = [0]
        for row in self.rows.values():
            words += [w ^ row for w in words]
        return sorted(words)


# Gray images ------------------------------------------------------------------

def gray_image(C: AdditiveCode, budget: Optional[int] = None, chunk_size: int = DEFAULT_CHUNK) -> BinaryCode:
    """Phi(C) as a BinaryCode, words in enumeration order"""
    gmap = canonical_map(C.s)
    words: List[int] = []
    for chunk in C.iter_chunks(chunk_size=chunk_size, budget=budget):
        words.extend(gmap.phi_rows(chunk))
    image = BinaryCode(C.n * gmap.width, words)
    logger.debug(f"Gray image of {C!r}: {len(image)} words of length {image.length}")
    return image


def _residue_weights(s: int) -> np.ndarray:
    gmap = canonical_map(s)
    return np.array([gmap.image_bits(u).bit_count() for u in range(1 << s)], dtype=np.int64)


def gray_weights(C: AdditiveCode, budget: Optional[int] = None, chunk_size: int = DEFAULT_CHUNK) -> Counter:
    """Hamming weight distribution of Phi(C), computed from residue weights"""
    table = _residue_weights(C.s)
    counts: Counter = Counter()
    for chunk in C.iter_chunks(chunk_size=chunk_size, budget=budget):
        counts.update(int(w) for w in table[chunk].sum(axis=1))
    return counts


def gray_min_distance(C: AdditiveCode, budget: Optional[int] = None) -> int:
    """Minimum distance of Phi(C) as the least nonzero weight"""
    nonzero = [w for w in gray_weights(C, budget=budget) if w > 0]
    if not nonzero:
        raise InvalidParameter("minimum distance needs at least two codewords")
    return min(nonzero)


def gray_rank(
    C: AdditiveCode,
    budget: Optional[int] = None,
    rank_rows: Optional[int] = None,
    chunk_size: int = DEFAULT_CHUNK,
) -> int:
    """rank(Phi(C)) by streaming Gray images into an incremental eliminator"""
    if rank_rows is not None and C.size > rank_rows:
        raise BudgetExceeded("rank elimination rows", C.size, rank_rows)
    gmap = canonical_map(C.s)
    basis = Gf2Basis(C.n * gmap.width)
    for chunk in C.iter_chunks(chunk_size=chunk_size, budget=budget):
        for word in gmap.phi_rows(chunk):
            basis.add(word)
        if basis.full:
            break
    return basis.rank


# binary invariants --------------------------------------------------------------

def rank_binary(C: BinaryCode) -> int:
    """Dimension of the linear span of C"""
    basis = Gf2Basis(C.length)
    for word in C.words:
        basis.add(word)
        if basis.full:
            break
    return basis.rank


def is_linear(C: BinaryCode) -> bool:
    size = len(C)
    if size & (size - 1) or 0 not in C:
        return False
    return rank_binary(C) == size.bit_length() - 1


def kernel_dimension(K: BinaryCode) -> int:
    if not is_linear(K):
        raise NotLinear("kernel dimension needs a linear code")
    return len(K).bit_length() - 1


def kernel_binary(
    C: BinaryCode,
    pair_budget: int = DEFAULT_PAIR_BUDGET,
    exhaustive: bool = False,
    full_space_length: int = DEFAULT_FULL_SPACE_LENGTH,
) -> BinaryCode:
    """
    K(C) = {x : x + C = C}

    Candidates are the translates c0 + C of a fixed word c0 (C itself when it
    contains 0); exhaustive=True scans all of Z_2^n instead and is only
    allowed for short lengths. Returned words are sorted.
    """
    if not C.words:
        raise InvalidParameter("kernel of an empty code is undefined")
    if exhaustive:
        if C.length > full_space_length:
            raise BudgetExceeded("full-space kernel search length", C.length, full_space_length)
        candidates: Iterable[int] = range(1 << C.length)
        count = 1 << C.length
    else:
        c0 = 0 if 0 in C else C.words[0]
        candidates = [c0 ^ c for c in C.words]
        count = len(C)
    if count * len(C) > pair_budget:
        raise BudgetExceeded("binary kernel pair checks", count * len(C), pair_budget)

    index = C.as_set()
    words = C.words
    kernel = [0]
    kernel_set = {0}
    rejected = set()
    for x in candidates:
        if x in kernel_set or x in rejected:
            continue
        if all((x ^ c) in index for c in words):
            kernel += [x ^ k for k in kernel]
            kernel_set.update(kernel)
        else:
            rejected.update(x ^ k for k in kernel)
    logger.debug(f"Binary kernel: {len(kernel)} words")
    return BinaryCode(C.length, sorted(kernel))


def min_hamming_distance(C: BinaryCode, pair_budget: int = DEFAULT_PAIR_BUDGET) -> int:
    """Exact minimum distance by scanning all pairs"""
    size = len(C)
    if size < 2:
        raise InvalidParameter("minimum distance needs at least two codewords")
    pairs = size * (size - 1) // 2
    if pairs > pair_budget:
        raise BudgetExceeded("pairwise distance scan", pairs, pair_budget)
    words = C.words
    best = C.length
    for i, x in enumerate(words):
        for y in words[i + 1:]:
            d = (x ^ y).bit_count()
            if d < best:
                best = d
    return best


def weight_distribution(C: BinaryCode) -> Dict[int, int]:
    counts = Counter(w.bit_count() for w in C.words)
    return dict(sorted(counts.items()))


def is_hadamard(C: BinaryCode, pair_budget: int = DEFAULT_PAIR_BUDGET) -> bool:
    """length n, 2n words, minimum distance n/2"""
    if len(C) != 2 * C.length or C.length % 2:
        return False
    return min_hamming_distance(C, pair_budget=pair_budget) == C.length // 2


# ring-side kernel ----------------------------------------------------------------

class RingWordSet:
    """Set of codewords over Z_{2^s}, rows sorted lexicographically"""

    def __init__(self, s: int, words: np.ndarray):
        words = np.asarray(words, dtype=np.int64)
        if words.ndim != 2:
            raise InvalidParameter("RingWordSet expects a 2-D array")
        order = np.lexsort(words.T[::-1]) if words.shape[0] else np.arange(0)
        self.s = s
        self.n = words.shape[1]
        self.words = words[order]
        self.words.setflags(write=False)

    def __len__(self) -> int:
        return self.words.shape[0]

    def vectors(self) -> List[RingVector]:
        return [RingVector.from_array(w, self.s) for w in self.words]

    def __contains__(self, x: RingVector) -> bool:
        return bool(np.any(np.all(self.words == x.array()[None, :], axis=1)))

    def gray_image(self) -> BinaryCode:
        gmap = canonical_map(self.s)
        return BinaryCode(self.n * gmap.width, sorted(gmap.phi_rows(self.words)))

    def as_code(self) -> Optional[AdditiveCode]:
        """The additive code these words form, or None if they are not a subgroup"""
        code = AdditiveCode(GeneratorMatrix(self.s, self.words, n=self.n))
        return code if code.size == len(self) else None


def _coset_representatives(C: AdditiveCode, start: int, stop: int) -> np.ndarray:
    """Codewords with every normal-form coefficient below half its radix"""
    radices = [max(r // 2, 1) for r in C._radices]
    index = np.arange(start, stop, dtype=np.int64)
    coefs = np.zeros((index.size, len(radices)), dtype=np.int64)
    stride = 1
    for i in range(len(radices) - 1, -1, -1):
        coefs[:, i] = (index // stride) % radices[i]
        stride *= radices[i]
    return C.words_for(coefs)


def _in_kernel(C: AdditiveCode, u: np.ndarray, spot_checks: np.ndarray, chunk_size: int) -> bool:
    modulus = C.modulus
    if not np.any(u):
        return True
    multiples = (np.arange(1, modulus, dtype=np.int64)[:, None] * u[None, :]) % modulus
    for batch in (spot_checks, multiples):
        if not C.contains_rows((2 * np.bitwise_and(u[None, :], batch)) % modulus).all():
            return False
    for chunk in C.iter_chunks(chunk_size=chunk_size, budget=C.size):
        if not C.contains_rows((2 * np.bitwise_and(u[None, :], chunk)) % modulus).all():
            return False
    return True


def kernel_additive(
    C: AdditiveCode,
    budget: Optional[int] = None,
    pair_budget: int = DEFAULT_PAIR_BUDGET,
    threads: int = 1,
    chunk_size: int = DEFAULT_CHUNK,
) -> RingWordSet:
    """{u in C : 2 (u odot v) in C for all v in C}; Phi of the result is K(Phi(C))"""
    C.check_budget(budget)
    torsion = C.torsion_subcode()
    rep_count = C.size // torsion.size
    if rep_count * C.size > pair_budget:
        raise BudgetExceeded("kernel odot-membership steps", rep_count * C.size, pair_budget)

    spot_checks = C.two_basis_array()
    reps = _coset_representatives(C, 0, rep_count)

    def check(index: int) -> bool:
        return _in_kernel(C, reps[index], spot_checks, chunk_size)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            accepted = list(pool.map(check, range(rep_count)))
    else:
        accepted = [check(i) for i in range(rep_count)]

    kept = reps[np.array(accepted, dtype=bool)]
    torsion_words = torsion.all_words(budget=torsion.size)
    words = (kept[:, None, :] + torsion_words[None, :, :]) % C.modulus
    result = RingWordSet(C.s, words.reshape(-1, C.n))
    logger.debug(f"Additive kernel of {C!r}: {kept.shape[0]} of {rep_count} cosets, {len(result)} words")
    return result


def hadamard_kernel_expected(s: int, k: int) -> BinaryCode:
    """
    Span of Phi(H_b) and Phi of the constant vector sum_{i<=s-2} 2^i, for
    H = H^{k,0,...,0}. Meant to be compared with kernel_binary.
    """
    if k < 2:
        raise InvalidParameter(f"needs k >= 2, got {k}")
    code = FamilySpec.hadamard_for(s, k).build_code()
    gmap = canonical_map(s)
    basis = Gf2Basis(code.n * gmap.width)
    for word in gmap.phi_rows(code.torsion_subcode().all_words()):
        basis.add(word)
    constant = np.full((1, code.n), (1 << (s - 1)) - 1, dtype=np.int64)
    basis.add(gmap.phi_rows(constant)[0])
    return BinaryCode(basis.length, basis.span())


# reports ------------------------------------------------------------------------

@dataclass
class InvariantReport:
    """Computed invariants of one code instance; None marks a value not computed"""
    family: str
    s: int
    k: Optional[int]
    u: Optional[int]
    ts: Optional[List[int]]
    label: str
    n: int
    binary_length: int
    size: int
    type: str
    ker: Optional[int] = None
    rank: Optional[int] = None
    min_dist: Optional[int] = None
    min_lee_dist: Optional[int] = None
    weights: List[List[int]] = field(default_factory=list)
    linear: Optional[bool] = None
    kernel_cross_check: Optional[bool] = None
    missing: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict:
        data = asdict(self)
        return {key: data[key] for key in REPORT_FIELDS}


REPORT_FIELDS = (
    "family", "s", "k", "u", "n", "binary_length", "size", "type", "ker", "rank",
    "min_dist", "weights", "linear", "ts", "label", "min_lee_dist", "kernel_cross_check", "missing",
)


def invariant_report(spec: FamilySpec, settings: Optional[Settings] = None, cross_check_words: int = 2 ** 12) -> InvariantReport:
    """
    Compute all invariants for one FamilySpec

    The additive kernel is authoritative; the binary kernel is computed as a
    cross-check when the code has at most cross_check_words codewords.
    BudgetExceeded carries the partially filled report as a dict.
    """
    settings = settings or Settings()
    budgets = settings.budgets
    code = spec.build_code(budgets.matrix_entries)
    width = 1 << (spec.s - 1)
    report = InvariantReport(
        family=spec.family,
        s=spec.s,
        k=spec.k,
        u=spec.u,
        ts=list(spec.ts) if spec.ts else None,
        label=spec.label(),
        n=code.n,
        binary_length=code.n * width,
        size=code.size,
        type=str(code.ctype),
    )
    logger.info(f"Invariants for {spec.label()} over Z_{1 << spec.s}: n={code.n}, |C|={code.size}")

    try:
        weights = gray_weights(code, budget=budgets.enumeration, chunk_size=settings.chunk_size)
        report.weights = [[w, c] for w, c in sorted(weights.items())]
        nonzero = [w for w in weights if w > 0]
        report.min_dist = min(nonzero) if nonzero else 0
        report.min_lee_dist = code.min_lee_distance(budget=budgets.enumeration)

        report.rank = gray_rank(code, budget=budgets.enumeration, rank_rows=budgets.rank_rows,
                                chunk_size=settings.chunk_size)

        kernel = kernel_additive(code, budget=budgets.enumeration, pair_budget=budgets.kernel_pair_work,
                                 threads=settings.threads, chunk_size=settings.chunk_size)
        report.ker = len(kernel).bit_length() - 1
        report.linear = report.ker == report.rank == code.log2_size

        if code.size <= cross_check_words:
            image = gray_image(code, budget=budgets.enumeration, chunk_size=settings.chunk_size)
            binary = kernel_binary(image, pair_budget=budgets.kernel_pair_work)
            report.kernel_cross_check = binary == kernel.gray_image()
            if not report.kernel_cross_check:
                logger.error(f"Kernel algorithms disagree for {spec.label()} over Z_{1 << spec.s}")
    except BudgetExceeded as e:
        report.missing = [
            name for name in ("weights", "min_dist", "rank", "ker", "linear")
            if getattr(report, name) in (None, [])
        ]
        logger.warning(f"Budget exceeded for {spec.label()}: {e.message}")
        e.partial = report.to_dict()
        raise
    return report
