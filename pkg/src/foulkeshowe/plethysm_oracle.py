"""Character-theoretic multiplicity oracle and the derived consistency checks.

Everything here is independent of the tensor/matrix constructions.  The
S_{ab}-module of S_a-invariants of the (a x b, 0) weight space is the
permutation module on block set partitions, so the multiplicity of the
irreducible [lam] in it -- equivalently, of the GL irreducible {lam} in
Sym^a(Sym^b U) -- is an ordinary character inner product:

    mult(lam) = (1/(ab)!) * sum_mu |C_mu| * chi^lam(mu) * fix(a, b, mu)

where fix(a, b, mu) counts the block partitions fixed by a permutation of
cycle type mu.  Fixed points are counted by brute force over the partition
list; at ab = 12 there are at most 15400 candidates, so correctness beats
cleverness here.

``plethysm_via_monomials`` is a second, independent oracle: it expands the
character of Sym^a(Sym^b C^n) into monomial-content counts and extracts
Schur coefficients by a unitriangular solve against the Kostka matrix in
dominance order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb, factorial

from .combinatorics import (
    Partition,
    character,
    check_partition,
    class_size,
    dim_irrep_gl,
    dim_irrep_sym,
    enumerate_block_partitions,
    kostka,
    partitions_of,
)
from .errors import ResourceLimitError

PLETHYSM_DEGREE_LIMIT = 12


def _check_range(a: int, b: int, limit: int = PLETHYSM_DEGREE_LIMIT) -> None:
    if a < 1 or b < 1:
        raise ValueError("a and b must be positive")
    if a * b > limit:
        raise ResourceLimitError(f"ab = {a * b} exceeds the oracle limit {limit}")


def canonical_permutation(mu: Partition) -> tuple[int, ...]:
    """The permutation of {0..n-1} whose cycles are mu, laid out in order."""
    perm = list(range(sum(mu)))
    start = 0
    for c in mu:
        for k in range(c):
            perm[start + k] = start + (k + 1) % c
        start += c
    return tuple(perm)


@lru_cache(maxsize=None)
def perm_character_value(a: int, b: int, mu: Partition) -> int:
    """Number of block set partitions (a blocks of size b) fixed by a
    permutation of cycle type mu."""
    _check_range(a, b)
    mu = check_partition(mu)
    if sum(mu) != a * b:
        raise ValueError(f"|mu| = {sum(mu)} != ab = {a * b}")
    g = canonical_permutation(mu)
    fixed = 0
    for part in enumerate_block_partitions(a, b):
        image = frozenset(frozenset(g[p] for p in blk) for blk in part)
        if image == frozenset(frozenset(blk) for blk in part):
            fixed += 1
    return fixed


def multiplicity(lam: Partition, a: int, b: int) -> int:
    """Multiplicity of the irreducible {lam} in Sym^a(Sym^b U), dim U >= parts."""
    _check_range(a, b)
    lam = check_partition(lam)
    n = a * b
    if sum(lam) != n:
        raise ValueError(f"|lam| = {sum(lam)} != ab = {n}")
    total = 0
    for mu in partitions_of(n):
        total += class_size(mu) * character(lam, mu) * perm_character_value(a, b, mu)
    value = Fraction(total, factorial(n))
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(
            f"character inner product for {lam} is {value}, not a nonnegative integer"
        )
    return value.numerator


@dataclass
class MultiplicityVector:
    """All plethysm multiplicities of one Sym^a(Sym^b), keyed by partition of ab."""

    n: int
    mults: dict[Partition, int]

    def __getitem__(self, lam: Partition) -> int:
        return self.mults.get(tuple(lam), 0)

    def dimension_sym(self) -> int:
        """Sum of mult(lam) * f^lam -- must equal the count of block partitions."""
        return sum(m * dim_irrep_sym(lam) for lam, m in self.mults.items() if m)

    def dimension_gl(self, nvars: int) -> int:
        return sum(m * dim_irrep_gl(lam, nvars) for lam, m in self.mults.items() if m)


def multiplicity_vector(a: int, b: int) -> MultiplicityVector:
    _check_range(a, b)
    n = a * b
    return MultiplicityVector(n, {lam: multiplicity(lam, a, b) for lam in partitions_of(n)})


# ---------------------------------------------------------------------------
# independent oracle: monomial expansion + Kostka solve


def _dominates(lam: Partition, mu: Partition) -> bool:
    """lam >= mu in dominance order (both partitions of the same number)."""
    s_l = s_m = 0
    for k in range(max(len(lam), len(mu))):
        s_l += lam[k] if k < len(lam) else 0
        s_m += mu[k] if k < len(mu) else 0
        if s_l < s_m:
            return False
    return True


def plethysm_via_monomials(a: int, b: int, n: int, limit: int = 2_000_000) -> MultiplicityVector:
    """Multiplicities of all lam with at most n parts, from the weight-space
    dimensions of Sym^a(Sym^b C^n).

    The dimension of the mu weight space is the number of multisets of a
    degree-b monomials in n variables with total content mu.  Writing it as
    sum_lam mult(lam) * K(lam, mu) and restricting mu to partitions, the
    Kostka matrix is unitriangular in dominance order, so the multiplicities
    fall out by back substitution.  Unitriangularity is asserted as it is
    used rather than taken on faith.
    """
    _check_range(a, b)
    if n < 1:
        raise ValueError("n must be positive")
    monos = list(combinations_with_replacement(range(n), b))
    if comb(len(monos) + a - 1, a) > limit:
        raise ResourceLimitError("monomial expansion too large")
    weight_count: dict[tuple[int, ...], int] = {}
    for multiset in combinations_with_replacement(monos, a):
        content = [0] * n
        for mono in multiset:
            for v in mono:
                content[v] += 1
        key = tuple(content)
        weight_count[key] = weight_count.get(key, 0) + 1

    shapes = [
        lam for lam in partitions_of(a * b) if len(lam) <= n
    ]  # reverse-lex refines dominance downward
    mults: dict[Partition, int] = {}
    for idx, lam in enumerate(shapes):
        value = weight_count.get(tuple(lam) + (0,) * (n - len(lam)), 0)
        for prev in shapes[:idx]:
            coeff = kostka(prev, lam)
            assert coeff == 0 or _dominates(prev, lam)
            value -= mults[prev] * coeff
        assert kostka(lam, lam) == 1
        if value < 0:
            raise ArithmeticError(f"negative multiplicity {value} at {lam}")
        mults[lam] = value
    return MultiplicityVector(a * b, mults)


# ---------------------------------------------------------------------------
# reports


@dataclass
class ComparisonReport:
    a: int
    b: int
    rows: list[tuple[Partition, int, int]]  # (lam, left value, right value)
    violations: list[Partition]

    @property
    def ok(self) -> bool:
        return not self.violations


def foulkes_check(a: int, b: int) -> ComparisonReport:
    """Termwise comparison mult(lam, a, b) <= mult(lam, b, a) over all lam of ab."""
    _check_range(a, b)
    if a > b:
        raise ValueError(f"requires a <= b, got a={a}, b={b}")
    small = multiplicity_vector(a, b)
    large = multiplicity_vector(b, a)
    rows = []
    violations = []
    for lam in partitions_of(a * b):
        x, y = small[lam], large[lam]
        rows.append((lam, x, y))
        if x > y:
            violations.append(lam)
    return ComparisonReport(a, b, rows, violations)


def hermite_check(a: int, b: int) -> ComparisonReport:
    """Equality of the two multiplicity vectors on partitions with <= 2 parts."""
    _check_range(a, b)
    rows = []
    violations = []
    for lam in partitions_of(a * b, max_parts=2):
        x = multiplicity(lam, a, b)
        y = multiplicity(lam, b, a)
        rows.append((lam, x, y))
        if x != y:
            violations.append(lam)
    return ComparisonReport(a, b, rows, violations)


@dataclass
class KernelReport:
    a: int
    b: int
    n: int
    psi_rank: int
    psi_kernel_dim: int
    poly_rank: int
    poly_kernel_dim: int
    multiplicity_total: int  # sum over lam of mult * f^lam, = M(a,b)
    consistent: bool


def kernel_consistency(a: int, b: int, n: int | None = None) -> KernelReport:
    """Cross-check of the compressed map, the polynomial map and the oracle.

    Verifies dim ker(psi) = M(a,b) - rank, that the oracle's dimension
    identity holds, and that the polynomial map at the chosen n has kernel
    dimension consistent with the same rank deficiency (zero throughout the
    desk-scale range, on both sides simultaneously).
    """
    from .exactla import certify_injective
    from .foulkes_map import psi_fused, psi_poly

    _check_range(a, b)
    if n is None:
        n = a * b
    vec = multiplicity_vector(a, b)
    total = vec.dimension_sym()

    psi = psi_fused(a, b)
    cert = certify_injective(psi.matrix)
    psi_kernel = len(psi.domain) - cert.rank

    poly = psi_poly(a, b, n)
    poly_cert = certify_injective(poly.matrix)
    poly_kernel = poly.shape[1] - poly_cert.rank

    consistent = (
        total == len(psi.domain)
        and cert.conclusive
        and poly_cert.conclusive
        and (psi_kernel == 0) == (poly_kernel == 0)
    )
    return KernelReport(
        a, b, n, cert.rank, psi_kernel, poly_cert.rank, poly_kernel, total, consistent
    )
