"""Partitions, compositions, set partitions, characters and dimension formulas.

Conventions fixed here and relied on by every other module:

* a partition is a tuple of weakly decreasing positive integers;
* ``partitions_of`` enumerates in reverse lexicographic order, e.g.
  (4), (3,1), (2,2), (2,1,1), (1,1,1,1);
* a block set partition of {0..a*b-1} into ``a`` blocks of size ``b`` is a
  tuple of blocks, each block an ascending tuple, blocks ordered by their
  minimum element; ``enumerate_block_partitions`` yields them in
  lexicographic order of that canonical form.

All arithmetic is exact (Python integers).
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial, prod

from .errors import ResourceLimitError

Partition = tuple[int, ...]

BLOCK_PARTITION_LIMIT = 16


def is_partition(parts) -> bool:
    return all(isinstance(p, int) and p >= 1 for p in parts) and all(
        parts[k] >= parts[k + 1] for k in range(len(parts) - 1)
    )


def check_partition(parts) -> Partition:
    parts = tuple(parts)
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts!r}")
    return parts


@lru_cache(maxsize=None)
def partitions_of(n: int, max_parts: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``n`` (with at most ``max_parts`` parts), reverse-lex order."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def rec(remaining, largest, room):
        if remaining == 0:
            yield ()
            return
        if room == 0:
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first, room - 1):
                yield (first,) + rest

    room = n if max_parts is None else max_parts
    return tuple(rec(n, n, room))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def zee(mu: Partition) -> int:
    """The centralizer order z_mu = prod k^{m_k} m_k!."""
    mult: dict[int, int] = {}
    for part in mu:
        mult[part] = mult.get(part, 0) + 1
    return prod(k**m * factorial(m) for k, m in mult.items())


def class_size(mu: Partition) -> int:
    """Number of permutations of cycle type ``mu`` in S_n, n = |mu|."""
    mu = check_partition(mu)
    return factorial(sum(mu)) // zee(mu)


# Character values are memoized in a plain dict so callers (the CLI cache
# layer) can pre-populate or dump it.  Guarded by a lock; correctness does
# not depend on sharing.
_character_memo: dict[tuple[Partition, Partition], int] = {}
_character_lock = threading.Lock()


def _strip_removals(lam: Partition, size: int):
    """Yield (partition, height) for every border strip of ``size`` removable from lam."""
    k = len(lam)
    for i in range(k):  # first row of the strip
        for j in range(i, k):  # last row of the strip
            new = list(lam)
            for r in range(i, j):
                new[r] = lam[r + 1] - 1
            new[j] = lam[i] - size + (j - i)
            if new[j] < 0:
                continue
            if j + 1 < k and new[j] < lam[j + 1]:
                continue
            if i > 0 and new[i] > lam[i - 1]:
                continue
            if any(new[r] < new[r + 1] for r in range(i, min(j + 1, k - 1))):
                continue
            removed = sum(lam[i : j + 1]) - sum(new[i : j + 1])
            if removed != size:
                continue
            while new and new[-1] == 0:
                new.pop()
            yield tuple(new), j - i


def character(lam: Partition, mu: Partition) -> int:
    """Irreducible character chi^lam at cycle type mu (Murnaghan-Nakayama)."""
    lam = check_partition(lam)
    mu = check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"|lam| = {sum(lam)} != |mu| = {sum(mu)}")
    return _character(lam, mu)


def _character(lam: Partition, mu: Partition) -> int:
    if not lam:
        return 1
    key = (lam, mu)
    with _character_lock:
        cached = _character_memo.get(key)
    if cached is not None:
        return cached
    head, rest = mu[0], mu[1:]
    total = 0
    for sub, height in _strip_removals(lam, head):
        total += (-1) ** height * _character(sub, rest)
    with _character_lock:
        _character_memo[key] = total
    return total


def seed_character_memo(table: dict[tuple[Partition, Partition], int]) -> None:
    with _character_lock:
        _character_memo.update(table)


def character_table(n: int) -> dict[tuple[Partition, Partition], int]:
    """Full table chi^lam(mu) over all partition pairs of n."""
    parts = partitions_of(n)
    return {(lam, mu): character(lam, mu) for lam in parts for mu in parts}


@lru_cache(maxsize=None)
def _kostka_sorted(lam: Partition, mu: Partition) -> int:
    if not lam:
        return 1 if not mu else 0
    if not mu:
        return 0
    last, rest = mu[-1], mu[:-1]
    total = 0
    # peel a horizontal strip of size ``last`` holding the largest letter
    k = len(lam)
    ranges = []
    for i in range(k):
        lo = lam[i + 1] if i + 1 < k else 0
        ranges.append((lo, lam[i]))

    def rec(i, remaining, prev_inner):
        nonlocal total
        if remaining < 0:
            return
        if i == k:
            if remaining == 0:
                inner = tuple(p for p in acc if p > 0)
                total += _kostka_sorted(inner, rest)
            return
        lo, hi = ranges[i]
        hi = min(hi, prev_inner)  # inner shape must stay a partition
        for inner_i in range(hi, lo - 1, -1):
            acc.append(inner_i)
            rec(i + 1, remaining - (lam[i] - inner_i), inner_i)
            acc.pop()

    acc: list[int] = []
    rec(0, last, lam[0])
    return total


def kostka(lam: Partition, mu) -> int:
    """Number of semistandard tableaux of shape lam and content mu.

    ``mu`` may be any weak composition; the count only depends on its
    multiset of nonzero entries.
    """
    lam = check_partition(lam)
    mu = tuple(mu)
    if any(m < 0 for m in mu):
        raise ValueError("content entries must be nonnegative")
    if sum(lam) != sum(mu):
        raise ValueError(f"|lam| = {sum(lam)} != |mu| = {sum(mu)}")
    mu_sorted = tuple(sorted((m for m in mu if m > 0), reverse=True))
    return _kostka_sorted(lam, mu_sorted)


def hook_lengths(lam: Partition) -> list[list[int]]:
    conj = conjugate(lam)
    return [
        [lam[i] - j + conj[j] - i - 1 for j in range(lam[i])] for i in range(len(lam))
    ]


def dim_irrep_sym(lam: Partition) -> int:
    """f^lam, the dimension of the irreducible S_n representation (hook length formula)."""
    lam = check_partition(lam)
    n = sum(lam)
    denom = prod(h for row in hook_lengths(lam) for h in row)
    return factorial(n) // denom


def dim_irrep_gl(lam: Partition, n: int) -> int:
    """Dimension of the irreducible GL_n representation {lam}; 0 if lam has > n parts."""
    lam = check_partition(lam)
    if n < 1:
        raise ValueError("n must be positive")
    if len(lam) > n:
        return 0
    value = Fraction(1)
    hooks = hook_lengths(lam)
    for i in range(len(lam)):
        for j in range(lam[i]):
            value *= Fraction(n + j - i, hooks[i][j])
    assert value.denominator == 1
    return value.numerator


def block_partition_count(a: int, b: int) -> int:
    """(ab)! / ((b!)^a a!), the number of partitions of {0..ab-1} into a blocks of size b."""
    return factorial(a * b) // (factorial(b) ** a * factorial(a))


def block_partitions_of(
    elements, nblocks: int, block_size: int
) -> list[tuple[tuple[int, ...], ...]]:
    """Canonical partitions of an arbitrary ground set into equal-size blocks.

    Canonical form: each block ascending, blocks ordered by minimum element;
    enumeration is lexicographic in that form.
    """
    elements = tuple(sorted(elements))
    if len(elements) != nblocks * block_size:
        raise ValueError("ground set size must equal nblocks * block_size")
    result: list[tuple[tuple[int, ...], ...]] = []

    def rec(remaining: tuple[int, ...], acc: list[tuple[int, ...]]):
        if not remaining:
            result.append(tuple(acc))
            return
        leader, rest = remaining[0], remaining[1:]
        for others in combinations(rest, block_size - 1):
            block = (leader,) + others
            chosen = set(others)
            left = tuple(x for x in rest if x not in chosen)
            acc.append(block)
            rec(left, acc)
            acc.pop()

    rec(elements, [])
    return result


def enumerate_block_partitions(
    a: int, b: int, limit: int = BLOCK_PARTITION_LIMIT
) -> list[tuple[tuple[int, ...], ...]]:
    """All canonical partitions of {0..ab-1} into ``a`` blocks of size ``b``."""
    if a < 1 or b < 1:
        raise ValueError("a and b must be positive")
    if a * b > limit:
        raise ResourceLimitError(f"a*b = {a * b} exceeds limit {limit}")
    result = block_partitions_of(range(a * b), a, b)
    assert len(result) == block_partition_count(a, b)
    return result


def weak_compositions(n: int, parts: int):
    """All weak compositions of n into ``parts`` entries, lexicographic order."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    for first in range(n + 1):
        for rest in weak_compositions(n - first, parts - 1):
            yield (first,) + rest


def multinomial(n: int, ks) -> int:
    ks = list(ks)
    if sum(ks) != n:
        raise ValueError("entries must sum to n")
    return factorial(n) // prod(factorial(k) for k in ks)


def binomial(n: int, k: int) -> int:
    return comb(n, k)
