"""
Named verification suites and the Table 1 reproduction

Every check is recorded as {"name", "params", "status", "details"} with
status passed | failed | reported | skipped. Suites never stop at the first
failure. "reported" marks a computed observation that is printed but not
asserted; only "failed" makes a run invalid.
"""

import logging
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from z2s_simplex.additive import AdditiveCode, GeneratorMatrix
from z2s_simplex.constructions import (
    HADAMARD,
    MACDONALD_ALPHA,
    MACDONALD_BETA,
    SIMPLEX_ALPHA,
    SIMPLEX_BETA,
    FamilySpec,
    beta_from_hadamard,
    beta_length,
    hadamard_gen,
    rotate_all_one_row,
    simplex_alpha,
    simplex_beta,
    strip_all_one_row,
)
from z2s_simplex.errors import BudgetExceeded, Z2sError
from z2s_simplex.graymap import GrayMap, canonical_map, gray_matrix
from z2s_simplex.invariants import (
    BinaryCode,
    Gf2Basis,
    gray_image,
    gray_rank,
    gray_weights,
    hadamard_kernel_expected,
    invariant_report,
    is_hadamard,
    is_linear,
    kernel_additive,
    kernel_binary,
    kernel_dimension,
)
from z2s_simplex.ring import RingScalar, RingVector, odot
from z2s_simplex.settings import Settings

logger = logging.getLogger(__name__)

PASSED = "passed"
FAILED = "failed"
REPORTED = "reported"
SKIPPED = "skipped"

SUITES = ("gray", "structure", "kernel", "hadamard", "beta", "macdonald", "oracle")

# Codes above this size are not cross-checked with the binary kernel search
CROSS_CHECK_WORDS = 2 ** 12
# Pairwise minimum-distance scans above this many pairs are skipped
PAIR_SCAN_LIMIT = 2 ** 23

# Published (kernel dimension, rank) pairs; None where no value was given.
# Hadamard cells at index k are for H^{k+1,0,...,0}.
TABLE1: Dict[Tuple[int, str, int], Optional[Tuple[int, int]]] = {
    (2, HADAMARD, 1): (3, 8),
    (2, HADAMARD, 2): (4, 7),
    (2, HADAMARD, 3): (5, 11),
    (2, HADAMARD, 4): (6, 16),
    (2, SIMPLEX_ALPHA, 1): (2, 2),
    (2, SIMPLEX_ALPHA, 2): (2, 5),
    (2, SIMPLEX_ALPHA, 3): (3, 9),
    (2, SIMPLEX_ALPHA, 4): (4, 14),
    (2, SIMPLEX_BETA, 2): (2, 5),
    (2, SIMPLEX_BETA, 3): (3, 9),
    (2, SIMPLEX_BETA, 4): (4, 14),
    (3, HADAMARD, 1): (3, 8),
    (3, HADAMARD, 2): (4, 17),
    (3, HADAMARD, 3): (5, 32),
    (3, HADAMARD, 4): (6, 56),
    (3, SIMPLEX_ALPHA, 1): (1, 4),
    (3, SIMPLEX_ALPHA, 2): (2, 12),
    (3, SIMPLEX_ALPHA, 3): (3, 26),
    (3, SIMPLEX_ALPHA, 4): (4, 49),
    (3, SIMPLEX_BETA, 2): (2, 12),
    (3, SIMPLEX_BETA, 3): (3, 26),
    (3, SIMPLEX_BETA, 4): (4, 49),
    (4, HADAMARD, 1): (3, 14),
    (4, HADAMARD, 2): (4, 44),
    (4, HADAMARD, 3): (5, 121),
    (4, HADAMARD, 4): None,
    (4, SIMPLEX_ALPHA, 1): (1, 7),
    (4, SIMPLEX_ALPHA, 2): (2, 32),
    (4, SIMPLEX_ALPHA, 3): (3, 101),
    (4, SIMPLEX_ALPHA, 4): None,
    (4, SIMPLEX_BETA, 2): (2, 32),
    (4, SIMPLEX_BETA, 3): (3, 101),
    (4, SIMPLEX_BETA, 4): None,
}

# Published cells that disagree with brute force, mapped to the brute-force
# (kernel dimension, rank). The length-8 Hadamard code over Z_4 is linear; the
# beta ranks for s >= 3 sit below the alpha ranks.
KNOWN_DISCREPANCIES: Dict[Tuple[int, str, int], Tuple[int, int]] = {
    (2, HADAMARD, 1): (4, 4),
    (3, SIMPLEX_BETA, 2): (2, 11),
    (3, SIMPLEX_BETA, 3): (3, 25),
    (3, SIMPLEX_BETA, 4): (4, 48),
    (4, SIMPLEX_BETA, 2): (2, 21),
    (4, SIMPLEX_BETA, 3): (3, 73),
}

# Cells whose Gray image holds at least this many bits in total need --extended
EXTENDED_BITS = 2 ** 26

MATCH = "MATCH"
MISMATCH = "MISMATCH"
SKIPPED_BUDGET = "SKIPPED(budget)"
SKIPPED_BY_PAPER = "SKIPPED-BY-PAPER"


@dataclass
class VerificationResult:
    """Verification result container"""
    valid: bool
    suites: List[str]
    errors: List[str]
    warnings: List[str]
    checks_performed: List[Dict]

    def count(self, status: str) -> int:
        return sum(1 for c in self.checks_performed if c["status"] == status)


@dataclass
class Table1Result:
    valid: bool
    cells: List[Dict]
    observations: List[Dict] = field(default_factory=list)


def _span(length: int, words: Iterable[int]) -> BinaryCode:
    basis = Gf2Basis(length)
    for word in words:
        basis.add(word)
    return BinaryCode(length, basis.span())


def _gray_strings(strings: Sequence[str], s: int) -> List[int]:
    gmap = canonical_map(s)
    return [gmap.phi_vector(RingVector.of([int(ch) for ch in text], s)).bits for text in strings]


def table_spec(s: int, family: str, k: int) -> FamilySpec:
    if family == HADAMARD:
        return FamilySpec.hadamard_for(s, k + 1)
    return FamilySpec(family, s, k=k)


class SuiteVerifier:
    """Run named check suites over ranges of (s, k, u)"""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or Settings()
        self.checks: List[Dict] = []
        self.errors: List[str] = []
        self.warnings: List[str] = []

    # bookkeeping ----------------------------------------------------------

    def _record(self, name: str, params: Dict, ok: bool, details: str = "", assert_it: bool = True) -> None:
        if not assert_it:
            status = REPORTED
        else:
            status = PASSED if ok else FAILED
        self.checks.append({"name": name, "params": params, "status": status, "details": details})
        if status == FAILED:
            self.errors.append(f"{name} {params}: {details}")
            logger.error(f"Check failed: {name} {params} {details}")

    def _skip(self, name: str, params: Dict, reason: str) -> None:
        self.checks.append({"name": name, "params": params, "status": SKIPPED, "details": reason})
        self.warnings.append(f"{name} {params} skipped: {reason}")
        logger.warning(f"Check skipped: {name} {params}: {reason}")

    def _guard(self, name: str, params: Dict, check: Callable[[], None]) -> None:
        try:
            check()
        except BudgetExceeded as e:
            self._skip(name, params, e.message)
        except Z2sError as e:
            self._record(name, params, False, f"{type(e).__name__}: {e.message}")

    def _within_budget(self, spec: FamilySpec) -> bool:
        code_size = (1 << spec.s) ** (spec.k if spec.family != HADAMARD else spec.ts[0])
        return code_size <= self.settings.budgets.enumeration

    # gray ---------------------------------------------------------------

    def verify_gray(self, s_values: Iterable[int]) -> None:
        base = [str(canonical_map(2).phi(RingScalar(u, 2))) for u in range(4)]
        self._record("gray.base-map", {"s": 2}, base == ["00", "01", "11", "10"], f"images {base}")

        for s in s_values:
            gmap = canonical_map(s)
            self._gray_identities(gmap, {"s": s, "columns": "canonical"})

            q = 1 << s
            images = [gmap.image_bits(u) for u in range(q)]
            self._record("gray.injective", {"s": s}, len(set(images)) == q, f"{len(set(images))} distinct images")

            half = 1 << (s - 1)
            expected = [0 if u == 0 else half if u == half else half // 2 for u in range(q)]
            weights = [b.bit_count() for b in images]
            self._record("gray.weight-spectrum", {"s": s}, weights == expected, f"weights {sorted(set(weights))}")

            isometric = all(
                (images[u] ^ images[v]).bit_count() == images[(u - v) % q].bit_count()
                for u in range(q) for v in range(q)
            )
            self._record("gray.isometry", {"s": s}, isometric, f"{q * q} pairs")

            linear = True
            for u in range(q):
                combined = 0
                for i in range(s):
                    if (u >> i) & 1:
                        combined ^= images[1 << i]
                linear &= combined == images[u]
            self._record("gray.powers-of-two", {"s": s}, linear, "sum of phi(2^i) over the expansion of u")

            order = np.random.default_rng(s).permutation(gmap.width).tolist()
            permuted = GrayMap(gray_matrix(s).permuted(order))
            self._gray_identities(permuted, {"s": s, "columns": "permuted"})

    def _gray_identities(self, gmap: GrayMap, params: Dict) -> None:
        s = gmap.s
        q = 1 << s
        half = 1 << (s - 1)
        images = [gmap.image_bits(u) for u in range(q)]
        carry_ok = all(
            images[u] ^ images[v] == images[(u + v - 2 * (u & v)) % q]
            for u in range(q) for v in range(q)
        )
        self._record("gray.addition-identity", params, carry_ok, f"{q * q} pairs")
        half_ok = all(images[u] ^ images[half] == images[(u + half) % q] for u in range(q))
        self._record("gray.half-translate", params, half_ok, f"{q} values")

    # structure ----------------------------------------------------------

    def verify_structure(self, s_values: Iterable[int], k_max: int) -> None:
        for s in s_values:
            q = 1 << s
            for k in range(1, k_max + 1):
                params = {"s": s, "k": k}
                ts = (k + 1,) + (0,) * (s - 1)
                self._guard("structure.alpha-from-hadamard", params, lambda: self._record(
                    "structure.alpha-from-hadamard", params,
                    simplex_alpha(s, k) == strip_all_one_row(hadamard_gen(s, ts)),
                    "G_k^alpha against A^{k+1,0,...,0} without its last row",
                ))

                g = simplex_alpha(s, k).array
                distinct = {tuple(col) for col in g.T}
                self._record("structure.alpha-columns", params, len(distinct) == q ** k == g.shape[1],
                             f"{len(distinct)} distinct of {g.shape[1]} columns")

                self._guard("structure.alpha-restriction", params, lambda: self._check_alpha_restriction(s, k))

                if k < 2:
                    continue
                self._guard("structure.beta-block", params, lambda: self._record(
                    "structure.beta-block", params,
                    simplex_beta(s, k) == beta_from_hadamard(s, k),
                    "recursion against the rotated Hadamard block assembly",
                ))
                rotated = rotate_all_one_row(hadamard_gen(s, (k,) + (0,) * (s - 1)))
                self._record("structure.beta-left-rows", params,
                             np.array_equal(rotated.array[1:], simplex_alpha(s, k - 1).array),
                             "rows below the all-one row equal G_{k-1}^alpha")
                self._guard("structure.beta-restriction", params, lambda: self._check_beta_restriction(s, k))

                n_k = simplex_beta(s, k).n
                recurrence = n_k == beta_length(s, k)
                if k >= 3:
                    recurrence &= n_k == (1 << (s * (k - 1))) + (1 << (s - 1)) * beta_length(s, k - 1)
                self._record("structure.beta-length", params, recurrence, f"n_k={n_k}")

    def _check_alpha_restriction(self, s: int, k: int) -> None:
        params = {"s": s, "k": k}
        block = (1 << s) ** (k - 1)
        positions = list(range(block + 1, 2 * block + 1))
        restricted = FamilySpec(SIMPLEX_ALPHA, s, k=k).build_code().restrict(positions)
        target = AdditiveCode(hadamard_gen(s, (k,) + (0,) * (s - 1)))
        self._record("structure.alpha-restriction", params, restricted == target,
                     f"coordinates {positions[0]}..{positions[-1]}")

    def _check_beta_restriction(self, s: int, k: int) -> None:
        params = {"s": s, "k": k}
        positions = list(range(1, (1 << s) ** (k - 1) + 1))
        restricted = FamilySpec(SIMPLEX_BETA, s, k=k).build_code().restrict(positions)
        target = AdditiveCode(hadamard_gen(s, (k,) + (0,) * (s - 1)))
        self._record("structure.beta-restriction", params, restricted == target,
                     f"coordinates 1..{positions[-1]}")

    # kernel -------------------------------------------------------------

    def verify_kernel(self, s_values: Iterable[int], k_max: int) -> None:
        budgets = self.settings.budgets
        for s in s_values:
            for family in (SIMPLEX_ALPHA, SIMPLEX_BETA):
                first = 1 if family == SIMPLEX_ALPHA else 2
                for k in range(first, k_max + 1):
                    spec = FamilySpec(family, s, k=k)
                    params = {"family": family, "s": s, "k": k}
                    if not self._within_budget(spec):
                        self._skip("kernel.simplex", params, f"|C|={(1 << s) ** k} over enumeration budget")
                        continue
                    self._guard("kernel.simplex", params, lambda: self._check_simplex_kernel(spec, params))

                    if family == SIMPLEX_ALPHA and (1 << s) ** (k + 1) <= budgets.enumeration:
                        self._guard("kernel.hadamard-containment", params,
                                    lambda: self._check_containment(spec, params))
            if s > 2:
                self._check_odot_witness(s)
            if s == 2 and k_max >= 2:
                self._guard("kernel.worked-example", {"s": 2}, self._check_worked_examples)

    def _check_simplex_kernel(self, spec: FamilySpec, params: Dict) -> None:
        budgets = self.settings.budgets
        code = spec.build_code()
        image = gray_image(code, budget=budgets.enumeration)
        additive = kernel_additive(code, budget=budgets.enumeration, pair_budget=budgets.kernel_pair_work,
                                   threads=self.settings.threads, chunk_size=self.settings.chunk_size)
        kernel = additive.gray_image()

        exceptional = spec.family == SIMPLEX_ALPHA and spec.s == 2 and spec.k == 1
        expected_dim = 2 if exceptional else spec.k
        dim = kernel_dimension(kernel)
        self._record("kernel.dimension", params, dim == expected_dim, f"ker={dim}, expected {expected_dim}")

        if exceptional:
            target = image
        else:
            target = gray_image(code.torsion_subcode())
        self._record("kernel.torsion-image", params, kernel == target,
                     "kernel equals the Gray image of the " + ("whole code" if exceptional else "torsion subcode"))

        linear = is_linear(image)
        self._record("kernel.linearity", params, linear == exceptional, f"linear={linear}")

        if code.size <= CROSS_CHECK_WORDS:
            binary = kernel_binary(image, pair_budget=budgets.kernel_pair_work)
            self._record("kernel.algorithms-agree", params, binary == kernel,
                         f"binary search {len(binary)} words, odot condition {len(kernel)} words")
        else:
            self._skip("kernel.algorithms-agree", params, f"|C|={code.size} above cross-check size")

    def _check_containment(self, spec: FamilySpec, params: Dict) -> None:
        budgets = self.settings.budgets
        simplex = kernel_additive(spec.build_code(), pair_budget=budgets.kernel_pair_work).gray_image()
        hadamard = kernel_additive(FamilySpec.hadamard_for(spec.s, spec.k + 1).build_code(),
                                   pair_budget=budgets.kernel_pair_work).gray_image()
        inner, outer = simplex.as_set(), hadamard.as_set()
        self._record("kernel.hadamard-containment", params, inner < outer,
                     f"{len(inner)} words inside {len(outer)}")

    def _check_odot_witness(self, s: int) -> None:
        code = FamilySpec(SIMPLEX_ALPHA, s, k=1).build_code()
        base = RingVector.of(range(1 << s), s)
        violations = 0
        total = 0
        for unit in range(1, 1 << s, 2):
            c = unit * base
            for i in range(1, s - 1):
                total += 1
                if code.contains(2 * odot(c, (1 << i) * c)):
                    violations += 1
        self._record("kernel.odot-witness", {"s": s}, violations == 0,
                     f"{total} witnesses, {violations} landed in the code")

    def _check_worked_examples(self) -> None:
        examples = [
            (FamilySpec(SIMPLEX_ALPHA, 2, k=2), ["0000222200002222", "0202020202020202"]),
            (FamilySpec(SIMPLEX_BETA, 2, k=3), [
                "2222222222222222000000000000",
                "0000222200002222222200222200",
                "0202020202020202020222020222",
            ]),
        ]
        for spec, generators in examples:
            code = spec.build_code()
            kernel = kernel_binary(gray_image(code))
            expected = _span(kernel.length, _gray_strings(generators, 2))
            self._record("kernel.worked-example", {"family": spec.family, "s": 2, "k": spec.k},
                         kernel == expected, f"span of {len(generators)} generators")

    # hadamard -------------------------------------------------------------

    def verify_hadamard(self, s_values: Iterable[int], k_max: int) -> None:
        for s in s_values:
            for k in range(1, k_max + 1):
                spec = FamilySpec.hadamard_for(s, k)
                params = {"s": s, "t1": k}
                if not self._within_budget(spec):
                    self._skip("hadamard.is-hadamard", params, "over enumeration budget")
                    continue
                self._guard("hadamard.is-hadamard", params, lambda: self._check_is_hadamard(spec, params, True))
                if k >= 2:
                    self._guard("hadamard.kernel", params, lambda: self._check_hadamard_kernel(s, k, params))

            for ts in self._mixed_types(s):
                spec = FamilySpec(HADAMARD, s, ts=ts)
                params = {"s": s, "type": list(ts)}
                self._guard("hadamard.mixed-type", params, lambda: self._check_is_hadamard(spec, params, False))

    @staticmethod
    def _mixed_types(s: int) -> List[Tuple[int, ...]]:
        types = []
        for j in range(1, s):
            ts = [1] + [0] * (s - 1)
            ts[j] = 1
            types.append(tuple(ts))
        return types

    def _check_is_hadamard(self, spec: FamilySpec, params: Dict, assert_it: bool) -> None:
        code = spec.build_code()
        if code.size * (code.size - 1) // 2 > PAIR_SCAN_LIMIT:
            self._skip("hadamard.is-hadamard", params, f"{code.size} words exceed the pairwise scan limit")
            return
        image = gray_image(code, budget=self.settings.budgets.enumeration)
        verdict = is_hadamard(image, pair_budget=PAIR_SCAN_LIMIT)
        name = "hadamard.is-hadamard" if assert_it else "hadamard.mixed-type"
        self._record(name, params, verdict, f"length {image.length}, {len(image)} words", assert_it=assert_it)

    def _check_hadamard_kernel(self, s: int, k: int, params: Dict) -> None:
        budgets = self.settings.budgets
        code = FamilySpec.hadamard_for(s, k).build_code()
        kernel = kernel_additive(code, budget=budgets.enumeration, pair_budget=budgets.kernel_pair_work,
                                 threads=self.settings.threads).gray_image()
        expected = hadamard_kernel_expected(s, k)
        dim = kernel_dimension(kernel)
        # small-s exceptions are reported, not asserted
        asserted = s >= 3
        self._record("hadamard.kernel-generators", params, kernel == expected,
                     f"computed {len(kernel)} words, generator span {len(expected)} words", assert_it=asserted)
        self._record("hadamard.kernel-dimension", params, dim == k + 1,
                     f"ker={dim}, expected {k + 1}", assert_it=asserted)

    # beta -----------------------------------------------------------------

    def verify_beta(self, s_values: Iterable[int], k_max: int) -> None:
        for s in s_values:
            for k in range(2, k_max + 1):
                spec = FamilySpec(SIMPLEX_BETA, s, k=k)
                params = {"s": s, "k": k}
                if not self._within_budget(spec):
                    self._skip("beta.min-distance", params, "over enumeration budget")
                    continue
                self._guard("beta.min-distance", params, lambda: self._check_beta_weight(spec, params))
                self._guard("beta.rank-equality", params, lambda: self._record(
                    "beta.rank-equality", params, *self._rank_pair(s, k), assert_it=False,
                ))

    def _check_beta_weight(self, spec: FamilySpec, params: Dict) -> None:
        s, k = spec.s, spec.k
        target = (1 << (s * k - k - 1)) * ((1 << k) - 1)
        weights = gray_weights(spec.build_code(), budget=self.settings.budgets.enumeration)
        nonzero = sorted(w for w in weights if w > 0)
        self._record("beta.min-distance", params, nonzero[0] == target,
                     f"d={nonzero[0]}, expected {target}")
        self._record("beta.weights", params, True, f"nonzero weights {nonzero}", assert_it=False)

    def _rank_pair(self, s: int, k: int) -> Tuple[bool, str]:
        budgets = self.settings.budgets
        alpha = gray_rank(FamilySpec(SIMPLEX_ALPHA, s, k=k).build_code(),
                          budget=budgets.enumeration, rank_rows=budgets.rank_rows)
        beta = gray_rank(FamilySpec(SIMPLEX_BETA, s, k=k).build_code(),
                         budget=budgets.enumeration, rank_rows=budgets.rank_rows)
        return alpha == beta, f"rank alpha={alpha}, beta={beta}"

    # macdonald --------------------------------------------------------------

    def verify_macdonald(self, s_values: Iterable[int], k_max: int) -> None:
        for s in s_values:
            for k in range(2, k_max + 1):
                for u in range(1, k):
                    for family in (MACDONALD_ALPHA, MACDONALD_BETA):
                        if family == MACDONALD_BETA and u < 2:
                            continue
                        spec = FamilySpec(family, s, k=k, u=u)
                        params = {"family": family, "s": s, "k": k, "u": u}
                        if not self._within_budget(spec):
                            self._skip("macdonald.parameters", params, "over enumeration budget")
                            continue
                        self._guard("macdonald.parameters", params, lambda: self._check_macdonald(spec, params))

    def _check_macdonald(self, spec: FamilySpec, params: Dict) -> None:
        s, k, u = spec.s, spec.k, spec.u
        report = invariant_report(spec, self.settings, cross_check_words=CROSS_CHECK_WORDS)
        weights = sorted(w for w, _ in report.weights if w > 0)
        low = (1 << (s * k + s - 2)) - (1 << (s * u + s - 2))
        high = 1 << (s * k + s - 2)

        if spec.family == MACDONALD_ALPHA:
            length = (1 << (s * k + s - 1)) - (1 << (s * u + s - 1))
            self._record("macdonald.min-distance", params, report.min_dist == low,
                         f"d={report.min_dist}, expected {low}")
            self._record("macdonald.two-weight", params, weights == [low, high],
                         f"weights {weights}", assert_it=s == 2)
        else:
            length = (beta_length(s, k) - beta_length(s, u)) << (s - 1)
            self._record("macdonald.weights", params, True, f"weights {weights}, d={report.min_dist}",
                         assert_it=False)

        self._record("macdonald.length", params, report.binary_length == length,
                     f"length {report.binary_length}, expected {length}")
        self._record("macdonald.size", params, report.size == 1 << (s * k), f"|C|={report.size}")
        self._record("macdonald.kernel-dimension", params, report.ker == k, f"ker={report.ker}")

        budgets = self.settings.budgets
        code = spec.build_code()
        kernel = kernel_additive(code, budget=budgets.enumeration, pair_budget=budgets.kernel_pair_work,
                                 threads=self.settings.threads, chunk_size=self.settings.chunk_size).gray_image()
        torsion = gray_image(code.torsion_subcode())
        self._record("macdonald.torsion-image", params, kernel == torsion,
                     f"kernel {len(kernel)} words, torsion image {len(torsion)} words")
        self._record("macdonald.nonlinear", params, report.linear is False, f"rank={report.rank}")
        if report.kernel_cross_check is not None:
            self._record("macdonald.algorithms-agree", params, report.kernel_cross_check, "")

    # oracle ---------------------------------------------------------------

    def verify_oracle(self, count: int = 50, seed: int = 2024, max_words: int = 2 ** 10) -> None:
        rng = np.random.default_rng(seed)
        agreed = 0
        for index in range(count):
            code = random_code(rng, max_words=max_words)
            binary = kernel_binary(gray_image(code))
            additive = kernel_additive(code).gray_image()
            ok = binary == additive
            agreed += ok
            if not ok:
                self._record("oracle.kernel-agreement", {"index": index, "type": str(code.ctype)}, False,
                             f"binary {len(binary)} words, odot condition {len(additive)} words")
        self._record("oracle.kernel-agreement", {"codes": count, "seed": seed}, agreed == count,
                     f"{agreed}/{count} random codes agree")

    # driver -----------------------------------------------------------------

    def run(
        self,
        suites: Sequence[str],
        s_values: Sequence[int],
        k_max: int,
        s_max: Optional[int] = None,
    ) -> VerificationResult:
        """Run the named suites and collect every check"""
        logger.info(f"Starting verification: suites={','.join(suites)}")
        if "gray" in suites:
            self.verify_gray(range(2, (s_max or 6) + 1))
        if "structure" in suites:
            self.verify_structure(s_values, k_max)
        if "kernel" in suites:
            self.verify_kernel(s_values, k_max)
        if "hadamard" in suites:
            self.verify_hadamard(s_values, k_max)
        if "beta" in suites:
            self.verify_beta(s_values, k_max)
        if "macdonald" in suites:
            self.verify_macdonald(s_values, k_max)
        if "oracle" in suites:
            self.verify_oracle()

        valid = not any(c["status"] == FAILED for c in self.checks)
        if valid:
            logger.info("Verification PASSED")
        else:
            logger.error(f"Verification FAILED with {len(self.errors)} errors")
        return VerificationResult(
            valid=valid,
            suites=list(suites),
            errors=self.errors,
            warnings=self.warnings,
            checks_performed=self.checks,
        )


def random_code(rng: np.random.Generator, max_words: int = 2 ** 10, s_max: int = 3, n_max: int = 8) -> AdditiveCode:
    """Random small additive code; rows are dropped until |C| <= max_words"""
    s = int(rng.integers(2, s_max + 1))
    n = int(rng.integers(1, n_max + 1))
    rows = int(rng.integers(1, 4))
    array = rng.integers(0, 1 << s, size=(rows, n))
    code = AdditiveCode(GeneratorMatrix(s, array))
    while code.size > max_words:
        array = array[:-1]
        code = AdditiveCode(GeneratorMatrix(s, array, n=n))
    return code


def generate_verification_report(result: VerificationResult) -> str:
    lines = []
    lines.append("=" * 80)
    lines.append("Z2S SIMPLEX VERIFICATION REPORT")
    lines.append("=" * 80)
    lines.append(f"Suites:           {', '.join(result.suites)}")
    lines.append(f"Verification:     {datetime.now(timezone.utc).isoformat()}")
    lines.append(f"Status:           {'PASSED' if result.valid else 'FAILED'}")
    lines.append("")

    lines.append("-" * 80)
    lines.append("SUMMARY")
    lines.append("-" * 80)
    lines.append(f"Checks Performed: {len(result.checks_performed)}")
    lines.append(f"Passed:           {result.count(PASSED)}")
    lines.append(f"Failed:           {result.count(FAILED)}")
    lines.append(f"Reported:         {result.count(REPORTED)}")
    lines.append(f"Skipped:          {result.count(SKIPPED)}")
    lines.append("")

    lines.append("-" * 80)
    lines.append("VERIFICATION CHECKS")
    lines.append("-" * 80)
    icons = {PASSED: "✓", FAILED: "✗", REPORTED: "•", SKIPPED: "-"}
    for check in result.checks_performed:
        params = " ".join(f"{k}={v}" for k, v in check["params"].items())
        lines.append(f"{icons[check['status']]} {check['name']} [{params}] {check['status'].upper()}")
        if check["details"]:
            lines.append(f"  {check['details']}")
    lines.append("")

    if result.errors:
        lines.append("-" * 80)
        lines.append(f"ERRORS ({len(result.errors)})")
        lines.append("-" * 80)
        for error in result.errors:
            lines.append(f"  • {error}")
        lines.append("")

    lines.append("=" * 80)
    return "\n".join(lines)


# Table 1 ----------------------------------------------------------------------

def _cell_bits(s: int, family: str, k: int) -> int:
    q = 1 << s
    if family == HADAMARD:
        size = q ** (k + 1)
        n = q ** k
    elif family == SIMPLEX_ALPHA:
        size, n = q ** k, q ** k
    else:
        size, n = q ** k, beta_length(s, k)
    return size * (n << (s - 1))


def is_extended(s: int, family: str, k: int) -> bool:
    return _cell_bits(s, family, k) >= EXTENDED_BITS


def reproduce_table1(
    settings: Optional[Settings] = None,
    extended: bool = False,
    s_values: Sequence[int] = (2, 3, 4),
    k_max: int = 4,
) -> Table1Result:
    """Compute every published cell within budget and compare"""
    settings = settings or Settings()
    budgets = settings.budgets
    cells = []
    valid = True
    ranks: Dict[Tuple[int, str, int], int] = {}

    for (s, family, k), expected in TABLE1.items():
        if s not in s_values or k > k_max:
            continue
        spec = table_spec(s, family, k)
        cell = {
            "ring": f"Z_{1 << s}",
            "s": s,
            "family": family,
            "k": k,
            "label": spec.label(),
            "expected": list(expected) if expected else None,
            "computed": None,
            "status": None,
            "extended": is_extended(s, family, k),
            "known_discrepancy": (s, family, k) in KNOWN_DISCREPANCIES,
        }
        cells.append(cell)
        if expected is None:
            cell["status"] = SKIPPED_BY_PAPER
            continue
        if cell["extended"] and not extended:
            cell["status"] = SKIPPED_BUDGET
            continue

        cell_settings = settings
        if cell["extended"]:
            cell_settings = settings.with_overrides(budget=budgets.extended_enumeration)
        try:
            report = invariant_report(spec, cell_settings, cross_check_words=CROSS_CHECK_WORDS)
        except BudgetExceeded as e:
            logger.warning(f"{spec.label()} over Z_{1 << s} skipped: {e.message}")
            cell["status"] = SKIPPED_BUDGET
            continue

        cell["computed"] = [report.ker, report.rank]
        ranks[(s, family, k)] = report.rank
        computed = tuple(cell["computed"])
        if computed == expected:
            cell["status"] = MATCH
        else:
            cell["status"] = MISMATCH
            if KNOWN_DISCREPANCIES.get((s, family, k)) != computed:
                valid = False
                logger.error(f"Table 1 mismatch for {spec.label()} over Z_{1 << s}: "
                             f"computed {cell['computed']}, published {list(expected)}")
        if report.kernel_cross_check is False:
            valid = False

    observations = []
    for (s, family, k), rank in sorted(ranks.items()):
        if family != SIMPLEX_ALPHA or k < 2:
            continue
        beta = ranks.get((s, SIMPLEX_BETA, k))
        if beta is None:
            continue
        observations.append({"name": "rank-equality", "s": s, "k": k, "alpha": rank, "beta": beta,
                             "equal": rank == beta})

    return Table1Result(valid=valid, cells=cells, observations=observations)


def generate_table1_report(result: Table1Result) -> str:
    lines = []
    lines.append("=" * 80)
    lines.append("RANK AND KERNEL DIMENSION: COMPUTED AGAINST PUBLISHED VALUES")
    lines.append("=" * 80)
    lines.append(f"{'Ring':<6} {'Code':<18} {'k':>2}  {'published':<12} {'computed':<12} status")
    lines.append("-" * 80)
    for cell in result.cells:
        expected = f"({cell['expected'][0]},{cell['expected'][1]})" if cell["expected"] else "(-)"
        computed = f"({cell['computed'][0]},{cell['computed'][1]})" if cell["computed"] else "-"
        note = "  (known discrepancy)" if cell["known_discrepancy"] and cell["status"] == MISMATCH else ""
        note += "  [extended]" if cell["extended"] else ""
        lines.append(f"{cell['ring']:<6} {cell['label']:<18} {cell['k']:>2}  {expected:<12} "
                     f"{computed:<12} {cell['status']}{note}")
    lines.append("")
    if result.observations:
        lines.append("-" * 80)
        lines.append("RANK EQUALITY (alpha vs beta)")
        lines.append("-" * 80)
        for obs in result.observations:
            icon = "✓" if obs["equal"] else "✗"
            lines.append(f"{icon} Z_{1 << obs['s']} k={obs['k']}: alpha {obs['alpha']}, beta {obs['beta']}")
        lines.append("")
    lines.append("=" * 80)
    return "\n".join(lines)
