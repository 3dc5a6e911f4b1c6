"""The map psi_{a x b}, its left/right factorization and the polynomial map.

All maps here go between *compressed* bases:

* the domain of psi is the orbit-sum basis of the S_a-invariants, indexed by
  block set partitions of {0..ab-1} into ``a`` blocks of size ``b``;
* codomains consisting of all-lower-letter words are expressed through the
  S_b orbit-sum basis by extracting the coefficient of each orbit's
  representative word (the one whose f-labels follow the blocks' min-order).

Matrices are carried as :class:`~foulkeshowe.exactla.ScaledIntMatrix`:
an integer scipy matrix times one rational scalar.  Every raising operator
contributes a factor 1/(ab), so the composite scalars are powers of 1/(ab).

Two independent constructions of psi are provided: ``psi_composed``
multiplies the ab sparse single-operator matrices in the defining order,
while ``psi_fused`` writes each column down directly (one entry per pair of
"orthogonal" block partitions, i.e. every block of one meets every block of
the other exactly once).  Their exact agreement is part of the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations, product
from math import factorial

import numpy as np
import scipy.sparse as sp

from sympy.utilities.iterables import multiset_permutations

from .combinatorics import block_partitions_of, multinomial
from .errors import ResourceLimitError
from .exactla import ScaledIntMatrix
from .tensorspace import (
    BlockPartition,
    OrbitSumBasis,
    Word,
    WeightBasis,
    orbit_sum_basis,
)

COMPOSED_BASIS_LIMIT = 3_000_000
_BATCH = 512


def operator_sequence(a: int, b: int) -> list[tuple[int, int]]:
    """The defining composition order: (1,1), (1,2), ..., (a,b)."""
    return [(i, j) for i in range(1, a + 1) for j in range(1, b + 1)]


# ---------------------------------------------------------------------------
# psi via the operator chain


def _pool(a: int, alpha, beta) -> list[int]:
    pool: list[int] = []
    for i, k in enumerate(alpha):
        pool += [i] * k
    for j, k in enumerate(beta):
        pool += [a + j] * k
    return pool


def _packed_index(a: int, alpha, beta, base: int) -> dict[int, int]:
    """Map packed word -> lexicographic index for one weight space."""
    pool = _pool(a, alpha, beta)
    index: dict[int, int] = {}
    if not pool:
        return {0: 0}
    i = 0
    for w in multiset_permutations(pool):
        s = 0
        for c in w:
            s = s * base + c
        index[s] = i
        i += 1
    return index


def _pack(w, base: int) -> int:
    s = 0
    for c in w:
        s = s * base + c
    return s


def psi_composed(
    a: int, b: int, basis_limit: int = COMPOSED_BASIS_LIMIT, batch: int = _BATCH
) -> "PsiMatrix":
    """Matrix of psi in orbit-sum bases, by multiplying the ab operator matrices.

    The operators are applied right-to-left in the defining order.  Refuses
    (ResourceLimitError) when an intermediate weight space would exceed
    ``basis_limit`` words; ``psi_fused`` has no such restriction.
    """
    d = a * b
    base = a + b
    pows = [base ** (d - 1 - p) for p in range(d)]
    applied = list(reversed(operator_sequence(a, b)))
    contents = []
    alpha, beta = [b] * a, [0] * b
    contents.append((tuple(alpha), tuple(beta)))
    for i, j in applied:
        alpha[i - 1] -= 1
        beta[j - 1] += 1
        contents.append((tuple(alpha), tuple(beta)))
    worst = max(multinomial(d, al + be) for al, be in contents)
    if worst > basis_limit:
        raise ResourceLimitError(
            f"intermediate weight space has {worst} words (limit {basis_limit}); "
            "use psi_fused for this size"
        )

    domain = orbit_sum_basis(a, b)
    codomain = orbit_sum_basis(b, a)
    start_index = _packed_index(a, *contents[0], base)

    phis = []
    cod_index: dict[int, int] = {}
    for step, (i, j) in enumerate(applied):
        dom_alpha, dom_beta = contents[step]
        cod_index = _packed_index(a, *contents[step + 1], base)
        src = i - 1
        dst = a + j - 1
        occ = dom_alpha[src]
        dom_pool = _pool(a, dom_alpha, dom_beta)
        dom_size = multinomial(d, dom_alpha + dom_beta)
        nnz = dom_size * occ
        rows = np.empty(nnz, dtype=np.int64)
        cols = np.empty(nnz, dtype=np.int64)
        idx = 0
        col = 0
        for w in multiset_permutations(dom_pool):
            s = 0
            for c in w:
                s = s * base + c
            for p in range(d):
                if w[p] == src:
                    rows[idx] = cod_index[s + (dst - src) * pows[p]]
                    cols[idx] = col
                    idx += 1
            col += 1
        assert idx == nnz
        phis.append(
            sp.csr_matrix(
                (np.ones(nnz, dtype=np.int32), (rows, cols)),
                shape=(len(cod_index), dom_size),
            )
        )
    final_index = cod_index

    # rep_word of the codomain orbit basis uses codes 0..b-1; the words of the
    # final weight space carry the lower-letter codes a..a+b-1
    rep_rows = np.array(
        [
            final_index[_pack([c + a for c in codomain.rep_word(r)], base)]
            for r in codomain.elements
        ],
        dtype=np.int64,
    )

    m = len(domain)
    blocks = []
    for lo in range(0, m, batch):
        cols_here = domain.elements[lo : lo + batch]
        ri, ci = [], []
        for c, part in enumerate(cols_here):
            for w in domain.orbit_words(part):
                ri.append(start_index[_pack(w, base)])
                ci.append(c)
        P = sp.csc_matrix(
            (np.ones(len(ri), dtype=np.int32), (ri, ci)),
            shape=(len(start_index), len(cols_here)),
        )
        for ph in phis:
            P = ph @ P
        blocks.append(sp.csr_matrix(P)[rep_rows, :])
    mat = sp.hstack(blocks, format="csr") if len(blocks) > 1 else blocks[0]
    return PsiMatrix(
        a, b, domain, codomain, ScaledIntMatrix(mat, Fraction(1, d**d))
    )


# ---------------------------------------------------------------------------
# psi via the fused combinatorial formula


def _canonical_blocks(blocks) -> BlockPartition:
    return tuple(sorted((tuple(sorted(blk)) for blk in blocks), key=lambda t: t[0]))


def psi_fused(a: int, b: int) -> "PsiMatrix":
    """Matrix of psi written down per column.

    The image of the orbit sum of a block partition P is a!/(ab)^{ab} times
    the sum of all words assigning the lower letters bijectively within each
    block of P; compressed to orbit sums this is a 0/1 incidence matrix with
    one entry per partition orthogonal to P.
    """
    d = a * b
    domain = orbit_sum_basis(a, b)
    codomain = orbit_sum_basis(b, a)
    ri: list[int] = []
    ci: list[int] = []
    label_choices = list(permutations(range(b)))
    for col, part in enumerate(domain.elements):
        first = part[0]
        rest = part[1:]
        for sigmas in product(label_choices, repeat=a - 1):
            blocks: list[list[int]] = [[] for _ in range(b)]
            for t, pos in enumerate(first):
                blocks[t].append(pos)
            for blk, sigma in zip(rest, sigmas):
                for t, pos in enumerate(blk):
                    blocks[sigma[t]].append(pos)
            ri.append(codomain.index[_canonical_blocks(blocks)])
            ci.append(col)
    mat = sp.csr_matrix(
        (np.ones(len(ri), dtype=np.int64), (ri, ci)),
        shape=(len(codomain), len(domain)),
    )
    return PsiMatrix(
        a, b, domain, codomain, ScaledIntMatrix(mat, Fraction(factorial(a), d**d))
    )


@dataclass
class PsiMatrix:
    """psi in orbit-sum bases: columns indexed by the (a,b) block partitions,
    rows by the (b,a) block partitions."""

    a: int
    b: int
    domain: OrbitSumBasis
    codomain: OrbitSumBasis
    matrix: ScaledIntMatrix

    @property
    def shape(self):
        return self.matrix.shape


# ---------------------------------------------------------------------------
# the middle space and the two factors


MiddleElement = tuple[tuple[int, ...], BlockPartition]  # (Q, blocks of the rest)


@dataclass
class MiddleBasis:
    """Orbit-sum basis of the S_a-invariant (a x B, (0^B, a)) weight space.

    An element is a pair: the a-set Q of positions carrying f_b, and a
    partition of the remaining a(b-1) positions into a blocks of size b-1
    carrying the upper letters.
    """

    a: int
    b: int
    elements: list[MiddleElement]
    index: dict[MiddleElement, int] = field(repr=False)

    def __len__(self):
        return len(self.elements)

    def rep_word(self, elem: MiddleElement) -> Word:
        Q, blocks = elem
        a, b = self.a, self.b
        w = [0] * (a * b)
        for pos in Q:
            w[pos] = a + b - 1
        for label, blk in enumerate(blocks):
            for pos in blk:
                w[pos] = label
        return tuple(w)

    def orbit_words(self, elem: MiddleElement) -> list[Word]:
        Q, blocks = elem
        a, b = self.a, self.b
        words = []
        for pi in permutations(range(a)):
            w = [0] * (a * b)
            for pos in Q:
                w[pos] = a + b - 1
            for label, blk in enumerate(blocks):
                for pos in blk:
                    w[pos] = pi[label]
            words.append(tuple(w))
        return words


def middle_basis(a: int, b: int) -> MiddleBasis:
    d = a * b
    elements: list[MiddleElement] = []
    for Q in combinations(range(d), a):
        rest = [p for p in range(d) if p not in Q]
        for blocks in block_partitions_of(rest, a, b - 1):
            elements.append((Q, blocks))
    return MiddleBasis(a, b, elements, {e: i for i, e in enumerate(elements)})


def _require_a_lt_b(a: int, b: int):
    if not a < b:
        raise ValueError(f"the factorization requires a < b, got a={a}, b={b}")


@dataclass
class FactorMatrix:
    a: int
    b: int
    domain: object
    codomain: object
    matrix: ScaledIntMatrix

    @property
    def shape(self):
        return self.matrix.shape


def right_factor_column(a: int, b: int, part: BlockPartition) -> dict[Word, int]:
    """Full image (integer counts; scalar 1/(ab)^a) of one orbit-sum vector
    under the chain replacing one e_i per block by f_b."""
    fb = a + b - 1
    out: dict[Word, int] = {}
    d = a * b
    for pi in permutations(range(a)):
        base_word = [0] * d
        for k, blk in enumerate(part):
            for pos in blk:
                base_word[pos] = pi[k]
        for choice in product(*part):
            w = list(base_word)
            for pos in choice:
                w[pos] = fb
            tw = tuple(w)
            out[tw] = out.get(tw, 0) + 1
    return out


def right_factor(a: int, b: int) -> FactorMatrix:
    """Chain of the a operators sending one e_i per block to f_b, from the
    (a x b) orbit-sum basis to the middle orbit-sum basis."""
    _require_a_lt_b(a, b)
    domain = orbit_sum_basis(a, b)
    codomain = middle_basis(a, b)
    d = a * b
    ri: list[int] = []
    ci: list[int] = []
    data: list[int] = []
    for col, part in enumerate(domain.elements):
        for pi in permutations(range(a)):
            # blocks_by_label[l] = index of the block carrying letter e_{l+1}
            inv = [0] * a
            for k in range(a):
                inv[pi[k]] = k
            for choice in product(*part):
                reduced = [
                    tuple(p for p in part[k] if p != choice[k]) for k in range(a)
                ]
                # canonical representative: labels must follow the min-order
                ordered = [reduced[inv[l]] for l in range(a)]
                if any(
                    ordered[l][0] > ordered[l + 1][0] for l in range(a - 1)
                ):
                    continue
                Q = tuple(sorted(choice))
                ri.append(codomain.index[(Q, tuple(ordered))])
                ci.append(col)
                data.append(1)
    mat = sp.csr_matrix(
        (np.array(data, dtype=np.int64), (ri, ci)),
        shape=(len(codomain), len(domain)),
    )
    return FactorMatrix(a, b, domain, codomain, ScaledIntMatrix(mat, Fraction(1, d**a)))


def left_factor(a: int, b: int) -> FactorMatrix:
    """Chain of the remaining aB operators, from the middle orbit-sum basis to
    the S_b orbit-sum codomain.

    The expansion of one middle orbit sum is uniform: each of its a!
    labelings contributes the same set of final words (the upper labels are
    forgotten once every block is bijectively relabeled with f_1..f_{b-1}),
    so each word carries the count a!.
    """
    _require_a_lt_b(a, b)
    B = b - 1
    d = a * b
    domain = middle_basis(a, b)
    codomain = orbit_sum_basis(b, a)
    ri: list[int] = []
    ci: list[int] = []
    label_choices = list(permutations(range(B)))
    for col, (Q, blocks) in enumerate(domain.elements):
        minQ = Q[0]
        first = blocks[0]
        rest = blocks[1:]
        for sigmas in product(label_choices, repeat=a - 1):
            fblocks: list[list[int]] = [[] for _ in range(B)]
            for t, pos in enumerate(first):
                fblocks[t].append(pos)
            for blk, sigma in zip(rest, sigmas):
                for t, pos in enumerate(blk):
                    fblocks[sigma[t]].append(pos)
            # representative words label f_b by min-order: the coefficient of
            # the representative is nonzero only when Q has the largest min
            if any(min(fb_) > minQ for fb_ in fblocks):
                continue
            full = _canonical_blocks(fblocks) + (Q,)
            ri.append(codomain.index[full])
            ci.append(col)
    mat = sp.csr_matrix(
        (np.full(len(ri), factorial(a), dtype=np.int64), (ri, ci)),
        shape=(len(codomain), len(domain)),
    )
    return FactorMatrix(
        a, b, domain, codomain, ScaledIntMatrix(mat, Fraction(1, d ** (a * B)))
    )


# ---------------------------------------------------------------------------
# Q-block splits


def q_block_split(basis: WeightBasis, Q, marker_letters) -> list[Word]:
    """Ordered sub-basis of the words whose marker-letter support is exactly Q."""
    marker = frozenset(marker_letters)
    alpha, beta = basis.alpha, basis.beta
    expected = sum(
        alpha[c] if c < basis.a else beta[c - basis.a] for c in marker
    )
    Q = tuple(sorted(Q))
    if len(Q) != expected:
        raise ValueError(
            f"|Q| = {len(Q)} but every word of this space has {expected} marker letters"
        )
    qset = frozenset(Q)
    return [
        w
        for w in basis.words
        if frozenset(p for p, c in enumerate(w) if c in marker) == qset
    ]


def q_decomposition(basis: WeightBasis, marker_letters) -> dict[tuple[int, ...], list[Word]]:
    """Partition of the whole word basis by marker-letter support."""
    marker = frozenset(marker_letters)
    out: dict[tuple[int, ...], list[Word]] = {}
    for w in basis.words:
        Q = tuple(p for p, c in enumerate(w) if c in marker)
        out.setdefault(Q, []).append(w)
    return out


def left_factor_row_q(partition: BlockPartition) -> tuple[int, ...]:
    """The Q-block a compressed codomain row belongs to: its block of largest
    minimum (the one the representative word labels f_b)."""
    return partition[-1]


# ---------------------------------------------------------------------------
# the polynomial-side map


Monomial = tuple[int, ...]  # sorted variable indices, one per degree
MonomialMultiset = tuple[Monomial, ...]  # sorted


@dataclass
class PolyPsi:
    a: int
    b: int
    n: int
    domain: list[MonomialMultiset]
    codomain: list[MonomialMultiset]
    matrix: ScaledIntMatrix

    @property
    def shape(self):
        return self.matrix.shape


def monomial_multisets(degree: int, count: int, n: int) -> list[MonomialMultiset]:
    monos = list(combinations_with_replacement(range(n), degree))
    return list(combinations_with_replacement(monos, count))


def psi_poly(a: int, b: int, n: int, limit: int = 5_000_000) -> PolyPsi:
    """The natural map Sym^a(Sym^b C^n) -> Sym^b(Sym^a C^n) in monomial bases.

    The image of a multiset {M_1..M_a} is the sum, over all ways to order
    each M_k as a b-sequence (each distinct ordering once, no normalization),
    of the multiset of the b column products.  Kernels are unaffected by the
    omitted symmetrization scalars.
    """
    if n < 1:
        raise ValueError("n must be positive")
    domain = monomial_multisets(b, a, n)
    codomain = monomial_multisets(a, b, n)
    if len(domain) * b > limit or len(codomain) > limit:
        raise ResourceLimitError("polynomial map too large")
    cod_index = {m: i for i, m in enumerate(codomain)}
    entries: dict[tuple[int, int], int] = {}
    for col, mm in enumerate(domain):
        orderings = [
            [tuple(o) for o in multiset_permutations(list(mono))] for mono in mm
        ]
        for combo in product(*orderings):
            image = tuple(
                sorted(tuple(sorted(w[j] for w in combo)) for j in range(b))
            )
            key = (cod_index[image], col)
            entries[key] = entries.get(key, 0) + 1
    ri = np.array([k[0] for k in entries], dtype=np.int64)
    ci = np.array([k[1] for k in entries], dtype=np.int64)
    data = np.array(list(entries.values()), dtype=np.int64)
    mat = sp.csr_matrix((data, (ri, ci)), shape=(len(codomain), len(domain)))
    return PolyPsi(a, b, n, domain, codomain, ScaledIntMatrix(mat, Fraction(1)))
