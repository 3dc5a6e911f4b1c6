"""Weight-space bases of tensor powers of C^a + C^b and the raising operators.

A basis tensor of the d-th tensor power is a *word*: a length-d tuple of
letter codes.  With ``a`` upper letters e_1..e_a and ``b`` lower letters
f_1..f_b, the codes are

    e_i -> i - 1          (0 .. a-1)
    f_j -> a + j - 1      (a .. a+b-1)

so plain tuple comparison realizes the documented global order
e_1 < ... < e_a < f_1 < ... < f_b, and every weight basis is sorted
lexicographically in that order.

The raising operator ``phi(i, j)`` sends a word to the average (factor 1/d)
of the words obtained by replacing one occurrence of e_i by f_j; it maps the
(alpha, beta) weight space to the (alpha - e_i, beta + f_j) weight space.
The canonical GL_2 raising operator on two-letter words is the same formula,
so ``zeta_gl2`` is ``phi`` in the a = b = 1 context.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from sympy.utilities.iterables import multiset_permutations

from .combinatorics import enumerate_block_partitions, multinomial
from .errors import ResourceLimitError
from .exactla import SparseExactMatrix

WEIGHT_BASIS_LIMIT = 3_000_000

Word = tuple[int, ...]


@dataclass(frozen=True)
class Letter:
    kind: str  # "E" or "F"
    index: int  # 1-based

    def code(self, a: int) -> int:
        if self.kind == "E":
            return self.index - 1
        return a + self.index - 1


def letter_of(code: int, a: int, b: int) -> Letter:
    if 0 <= code < a:
        return Letter("E", code + 1)
    if a <= code < a + b:
        return Letter("F", code - a + 1)
    raise ValueError(f"letter code {code} out of range for a={a}, b={b}")


def word_str(w: Word, a: int, b: int) -> str:
    return " ".join(
        f"{letter.kind}{letter.index}" for letter in (letter_of(c, a, b) for c in w)
    )


def content(w: Word, a: int, b: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The pair (alpha, beta) of letter multiplicities of a word."""
    alpha = [0] * a
    beta = [0] * b
    for c in w:
        if c < a:
            alpha[c] += 1
        else:
            beta[c - a] += 1
    return tuple(alpha), tuple(beta)


@dataclass
class WeightBasis:
    """The full ordered word basis of one (alpha, beta) weight space."""

    a: int
    b: int
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    words: list[Word]
    index: dict[Word, int] = field(repr=False)

    @property
    def d(self) -> int:
        return sum(self.alpha) + sum(self.beta)

    def __len__(self) -> int:
        return len(self.words)


def weight_basis_size(alpha, beta) -> int:
    d = sum(alpha) + sum(beta)
    return multinomial(d, list(alpha) + list(beta))


def weight_basis(
    a: int,
    b: int,
    alpha,
    beta,
    limit: int = WEIGHT_BASIS_LIMIT,
) -> WeightBasis:
    alpha = tuple(alpha)
    beta = tuple(beta)
    if len(alpha) != a or len(beta) != b:
        raise ValueError("alpha must have length a and beta length b")
    if any(x < 0 for x in alpha + beta):
        raise ValueError("weight entries must be nonnegative")
    size = weight_basis_size(alpha, beta)
    if size > limit:
        raise ResourceLimitError(f"weight basis has {size} words, limit {limit}")
    pool: list[int] = []
    for i, k in enumerate(alpha):
        pool += [i] * k
    for j, k in enumerate(beta):
        pool += [a + j] * k
    if pool:
        words = [tuple(w) for w in multiset_permutations(pool)]
    else:
        words = [()]
    assert len(words) == size
    return WeightBasis(a, b, alpha, beta, words, {w: i for i, w in enumerate(words)})


@dataclass
class PhiMap:
    """A raising operator restricted to one weight space, as an exact matrix."""

    i: int
    j: int
    domain: WeightBasis
    codomain: WeightBasis | None
    matrix: SparseExactMatrix
    vanishes: bool = False


def phi_on_word(i: int, j: int, w: Word, a: int) -> dict[Word, Fraction]:
    """Image of a single word: 1/d times the sum over e_i -> f_j replacements."""
    d = len(w)
    src = i - 1
    dst = a + j - 1
    out: dict[Word, Fraction] = {}
    coeff = Fraction(1, d)
    for p, c in enumerate(w):
        if c == src:
            out[w[:p] + (dst,) + w[p + 1 :]] = coeff
    return out


def phi(i: int, j: int, basis: WeightBasis) -> PhiMap:
    """Matrix of the raising operator on ``basis``.

    If alpha_i = 0 the operator vanishes on the whole space; a zero map with
    the ``vanishes`` flag is returned instead of raising.
    """
    a, b = basis.a, basis.b
    if not (1 <= i <= a and 1 <= j <= b):
        raise ValueError(f"operator indices ({i},{j}) out of range for a={a}, b={b}")
    if basis.alpha[i - 1] == 0:
        return PhiMap(
            i, j, basis, None, SparseExactMatrix(0, len(basis)), vanishes=True
        )
    alpha = list(basis.alpha)
    beta = list(basis.beta)
    alpha[i - 1] -= 1
    beta[j - 1] += 1
    target = weight_basis(a, b, alpha, beta)
    mat = SparseExactMatrix(len(target), len(basis))
    for col, w in enumerate(basis.words):
        for image, coeff in phi_on_word(i, j, w, a).items():
            mat.add(target.index[image], col, coeff)
    return PhiMap(i, j, basis, target, mat)


def sa_act(pi, w: Word) -> Word:
    """Relabel upper letters by the permutation ``pi`` (0-based tuple on 0..a-1)."""
    a = len(pi)
    return tuple(pi[c] if c < a else c for c in w)


def sa_act_vector(pi, vec: dict[Word, Fraction]) -> dict[Word, Fraction]:
    return {sa_act(pi, w): v for w, v in vec.items()}


BlockPartition = tuple[tuple[int, ...], ...]


@dataclass
class OrbitSumBasis:
    """Basis of the S_a-invariants of the (a x b, 0) weight space.

    Element k is the sum of the a! words in the S_a-orbit of the word that
    places letter e_i on the i-th block of the k-th block set partition.
    """

    a: int
    b: int
    elements: list[BlockPartition]
    index: dict[BlockPartition, int] = field(repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def rep_word(self, partition: BlockPartition) -> Word:
        w = [0] * (self.a * self.b)
        for label, block in enumerate(partition):
            for pos in block:
                w[pos] = label
        return tuple(w)

    def orbit_words(self, partition: BlockPartition) -> list[Word]:
        words = []
        for pi in permutations(range(self.a)):
            w = [0] * (self.a * self.b)
            for label, block in enumerate(partition):
                for pos in block:
                    w[pos] = pi[label]
            words.append(tuple(w))
        return words

    def vector_for(self, partition: BlockPartition) -> dict[Word, Fraction]:
        return {w: Fraction(1) for w in self.orbit_words(partition)}


def orbit_sum_basis(a: int, b: int, limit: int = 16) -> OrbitSumBasis:
    elements = enumerate_block_partitions(a, b, limit=limit)
    return OrbitSumBasis(a, b, elements, {p: i for i, p in enumerate(elements)})


def partition_of_word(w: Word, a: int, b: int) -> BlockPartition:
    """Canonical block partition grouping positions by letter, for words whose
    letters all carry equal multiplicity (the orbit-sum weight spaces)."""
    blocks: dict[int, list[int]] = {}
    for pos, c in enumerate(w):
        blocks.setdefault(c, []).append(pos)
    return tuple(sorted((tuple(v) for v in blocks.values()), key=lambda blk: blk[0]))


# ---------------------------------------------------------------------------
# the GL_2 picture: two letters e < f


def gl2_weight_basis(n: int, k: int) -> WeightBasis:
    """All words of length n over {e, f} with exactly k f's."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    return weight_basis(1, 1, (n - k,), (k,))


def zeta_gl2(n: int, k: int) -> PhiMap:
    """The canonical GL_2 raising operator from k f's to k+1 f's."""
    if not 0 <= k < n:
        raise ValueError(f"need 0 <= k < n, got k={k}, n={n}")
    return phi(1, 1, gl2_weight_basis(n, k))


def wedge_sym_vector(lam2: int, n: int, k: int) -> dict[Word, Fraction]:
    """The weight vector (e wedge f)^{lam2} (x) e^{n-k-lam2} . f^{k-lam2}.

    Wedge factors occupy the leading 2*lam2 slots (slot placement is a
    convention; any other placement differs by a tensor-slot permutation).
    Expanded exactly in the gl2_weight_basis(n, k) word basis.
    """
    if lam2 < 0 or lam2 > k or lam2 > n - k:
        raise ValueError(f"need 0 <= lam2 <= min(k, n-k), got lam2={lam2}, n={n}, k={k}")
    E, F = 0, 1
    heads: list[tuple[Word, int]] = [((), 1)]
    for _ in range(lam2):
        heads = [(w + (E, F), s) for w, s in heads] + [(w + (F, E), -s) for w, s in heads]
    tail_pool = [E] * (n - k - lam2) + [F] * (k - lam2)
    tails = [tuple(t) for t in multiset_permutations(tail_pool)] if tail_pool else [()]
    vec: dict[Word, Fraction] = {}
    for head, sign in heads:
        for tail in tails:
            w = head + tail
            new = vec.get(w, Fraction(0)) + sign
            if new:
                vec[w] = new
            else:
                vec.pop(w, None)
    return vec
