from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from foulkeshowe.combinatorics import (
    block_partition_count,
    block_partitions_of,
    character,
    character_table,
    class_size,
    conjugate,
    dim_irrep_gl,
    dim_irrep_sym,
    enumerate_block_partitions,
    kostka,
    multinomial,
    partitions_of,
    weak_compositions,
    zee,
)
from foulkeshowe.errors import ResourceLimitError


def test_partition_enumeration_order():
    assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert partitions_of(6, max_parts=2) == ((6,), (5, 1), (4, 2), (3, 3))


@pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (5, 7), (10, 42), (12, 77)])
def test_partition_counts(n, count):
    assert len(partitions_of(n)) == count


def test_conjugate_involution():
    for lam in partitions_of(8):
        assert conjugate(conjugate(lam)) == lam


def test_class_sizes_sum_to_group_order():
    for n in range(1, 9):
        assert sum(class_size(mu) for mu in partitions_of(n)) == factorial(n)
        assert all(zee(mu) * class_size(mu) == factorial(n) for mu in partitions_of(n))


def test_character_table_s4():
    # standard table of S_4, rows chi^lam, columns mu in reverse-lex order
    expected = {
        (4,): [1, 1, 1, 1, 1],
        (3, 1): [-1, 0, -1, 1, 3],
        (2, 2): [0, -1, 2, 0, 2],
        (2, 1, 1): [1, 0, -1, -1, 3],
        (1, 1, 1, 1): [-1, 1, 1, -1, 1],
    }
    mus = partitions_of(4)
    for lam, values in expected.items():
        assert [character(lam, mu) for mu in mus] == values


def test_character_orthogonality():
    for n in (3, 4, 5):
        parts = partitions_of(n)
        table = character_table(n)
        for lam in parts:
            for nu in parts:
                inner = sum(
                    class_size(mu) * table[(lam, mu)] * table[(nu, mu)] for mu in parts
                )
                assert inner == (factorial(n) if lam == nu else 0)


def test_dimension_hook_formula_matches_character_at_identity():
    for n in range(1, 9):
        one = tuple([1] * n)
        for lam in partitions_of(n):
            assert dim_irrep_sym(lam) == character(lam, one)


def test_kostka_values():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((3,), (1, 1, 1)) == 1
    assert kostka((2, 2), (2, 1, 1)) == 1
    assert kostka((2, 2), (1, 1, 1, 1)) == 2
    assert kostka((3, 1), (2, 2)) == 1
    # dominance: zero unless lam dominates mu
    assert kostka((2, 2), (3, 1)) == 0


def test_kostka_row_sums_count_tableaux():
    # sum over contents mu of K(lam, mu) over compositions = dim of {lam} at n vars
    lam = (2, 1)
    n = 3
    total = sum(kostka(lam, mu) for mu in weak_compositions(3, n))
    assert total == dim_irrep_gl(lam, n)


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_kostka_invariant_under_content_permutation(data):
    lam = data.draw(st.sampled_from(partitions_of(6)))
    mu = list(data.draw(st.sampled_from(partitions_of(6))))
    shuffled = data.draw(st.permutations(mu))
    assert kostka(lam, tuple(shuffled)) == kostka(lam, tuple(mu))


def test_gl_dimensions():
    assert dim_irrep_gl((1, 1), 2) == 1
    assert dim_irrep_gl((2,), 2) == 3
    assert dim_irrep_gl((2, 1), 3) == 8
    assert dim_irrep_gl((1, 1, 1), 2) == 0


def test_block_partition_enumeration():
    parts = enumerate_block_partitions(2, 2)
    assert parts == [
        ((0, 1), (2, 3)),
        ((0, 2), (1, 3)),
        ((0, 3), (1, 2)),
    ]
    for a, b in [(2, 3), (3, 2), (2, 4), (3, 3)]:
        got = enumerate_block_partitions(a, b)
        assert len(got) == block_partition_count(a, b)
        assert len(set(got)) == len(got)
        for part in got:
            assert [blk[0] for blk in part] == sorted(blk[0] for blk in part)
            assert all(list(blk) == sorted(blk) for blk in part)


def test_block_partitions_of_arbitrary_ground_set():
    parts = block_partitions_of([5, 9, 2, 7], 2, 2)
    assert ((2, 5), (7, 9)) in parts
    assert len(parts) == 3


def test_block_partition_limit():
    with pytest.raises(ResourceLimitError):
        enumerate_block_partitions(5, 4)


def test_multinomial():
    assert multinomial(4, [2, 2]) == 6
    assert multinomial(6, [2, 2, 2]) == 90
    with pytest.raises(ValueError):
        multinomial(5, [2, 2])
