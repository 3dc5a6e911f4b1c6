from itertools import permutations

import pytest

from foulkeshowe.combinatorics import (
    block_partition_count,
    enumerate_block_partitions,
    partitions_of,
)
from foulkeshowe.errors import ResourceLimitError
from foulkeshowe.plethysm_oracle import (
    canonical_permutation,
    foulkes_check,
    hermite_check,
    multiplicity,
    multiplicity_vector,
    perm_character_value,
    plethysm_via_monomials,
)


def brute_force_fixed_points(a, b, mu):
    """Independent fixed-point count: apply the permutation literally."""
    g = canonical_permutation(mu)
    count = 0
    for part in enumerate_block_partitions(a, b):
        blocks = {frozenset(blk) for blk in part}
        if {frozenset(g[p] for p in blk) for blk in part} == blocks:
            count += 1
    return count


def test_perm_character_small_values():
    assert perm_character_value(2, 2, (1, 1, 1, 1)) == 3
    assert perm_character_value(2, 2, (4,)) == 1
    assert perm_character_value(2, 2, (2, 2)) == 3


@pytest.mark.parametrize("a,b", [(2, 2), (2, 3), (3, 2)])
def test_perm_character_matches_brute_force(a, b):
    for mu in partitions_of(a * b):
        assert perm_character_value(a, b, mu) == brute_force_fixed_points(a, b, mu)


def test_perm_character_identity_counts_everything():
    for a, b in [(2, 2), (2, 3), (3, 3)]:
        one = tuple([1] * (a * b))
        assert perm_character_value(a, b, one) == block_partition_count(a, b)


def test_multiplicity_examples():
    assert multiplicity((4,), 2, 2) == 1
    assert multiplicity((2, 2), 2, 2) == 1
    assert multiplicity((3, 1), 2, 2) == 0
    assert multiplicity((2, 2, 2), 3, 2) == 1
    # the trivial representation appears exactly once for every (a, b)
    for a, b in [(2, 3), (3, 3), (2, 5)]:
        assert multiplicity((a * b,), a, b) == 1


def test_monomial_oracle_examples():
    vec = plethysm_via_monomials(2, 2, 2)
    assert {lam: m for lam, m in vec.mults.items() if m} == {(4,): 1, (2, 2): 1}
    vec = plethysm_via_monomials(1, 4, 3)
    assert {lam: m for lam, m in vec.mults.items() if m} == {(4,): 1}


@pytest.mark.parametrize("a,b", [(2, 2), (2, 3), (3, 2), (2, 4), (3, 3)])
def test_oracles_agree(a, b):
    n = a * b
    char_vec = multiplicity_vector(a, b)
    mono_vec = plethysm_via_monomials(a, b, n)
    for lam in partitions_of(n):
        assert char_vec[lam] == mono_vec[lam]


def test_dimension_identity():
    for a, b in [(2, 2), (2, 3), (3, 2), (2, 4), (4, 2), (3, 3)]:
        vec = multiplicity_vector(a, b)
        assert vec.dimension_sym() == block_partition_count(a, b)


def test_gl_dimension_identity():
    from math import comb

    for a, b in [(2, 2), (2, 3), (3, 2), (2, 4), (3, 3)]:
        for n in (2, 3):
            vec = multiplicity_vector(a, b)
            sym_b = comb(n + b - 1, b)  # dim Sym^b of n variables
            assert vec.dimension_gl(n) == comb(sym_b + a - 1, a)


def test_row_bound():
    for a, b in [(2, 3), (2, 4), (3, 3)]:
        vec = multiplicity_vector(a, b)
        for lam, m in vec.mults.items():
            if len(lam) > a:
                assert m == 0


def test_foulkes_check_reports():
    report = foulkes_check(2, 2)
    assert report.ok and all(x == y for _, x, y in report.rows)
    report = foulkes_check(2, 3)
    assert report.ok
    diffs = [(lam, x, y) for lam, x, y in report.rows if x != y]
    assert diffs == [((2, 2, 2), 0, 1)]
    with pytest.raises(ValueError):
        foulkes_check(3, 2)


def test_hermite_check():
    for a, b in [(2, 3), (2, 4), (2, 5), (3, 4)]:
        assert hermite_check(a, b).ok


def test_degree_limit():
    with pytest.raises(ResourceLimitError):
        multiplicity((13,), 1, 13)
