from fractions import Fraction
from math import comb, factorial

import pytest

from foulkeshowe.combinatorics import block_partition_count
from foulkeshowe.errors import ResourceLimitError
from foulkeshowe.tensorspace import (
    content,
    gl2_weight_basis,
    letter_of,
    orbit_sum_basis,
    partition_of_word,
    phi,
    phi_on_word,
    sa_act,
    sa_act_vector,
    wedge_sym_vector,
    weight_basis,
    word_str,
    zeta_gl2,
)


def test_letter_codes_and_printing():
    assert letter_of(0, 2, 3).kind == "E"
    assert letter_of(2, 2, 3) == letter_of(2, 2, 3).__class__("F", 1)
    assert word_str((0, 1, 2, 4), 2, 3) == "E1 E2 F1 F3"


def test_weight_basis_is_sorted_and_complete():
    basis = weight_basis(2, 2, (1, 1), (1, 0))
    assert len(basis) == 6
    assert basis.words == sorted(basis.words)
    assert all(content(w, 2, 2) == ((1, 1), (1, 0)) for w in basis.words)
    assert basis.index[basis.words[3]] == 3


def test_weight_basis_limit():
    with pytest.raises(ResourceLimitError):
        weight_basis(2, 2, (10, 10), (10, 10), limit=100)


def test_phi_on_word_replaces_each_occurrence():
    image = phi_on_word(1, 2, (0, 0, 1, 2), 2)
    assert image == {
        (3, 0, 1, 2): Fraction(1, 4),
        (0, 3, 1, 2): Fraction(1, 4),
    }


def test_phi_matrix_columns_match_wordwise_map():
    basis = weight_basis(2, 2, (2, 1), (1, 0))
    m = phi(2, 1, basis)
    assert not m.vanishes
    for col, w in enumerate(basis.words):
        expected = phi_on_word(2, 1, w, 2)
        got = {m.codomain.words[r]: v for r, v in m.matrix.column(col).items()}
        assert got == expected


def test_phi_vanishes_when_no_letter_to_raise():
    basis = weight_basis(2, 2, (0, 2), (1, 1))
    m = phi(1, 1, basis)
    assert m.vanishes and m.matrix.is_zero()


def test_sa_act_fixes_lower_letters():
    w = (0, 1, 2, 3, 2)
    assert sa_act((1, 0), w) == (1, 0, 2, 3, 2)
    vec = {w: Fraction(1)}
    assert sa_act_vector((0, 1), vec) == vec


def test_orbit_sum_basis_counts_and_orbits():
    for a, b in [(2, 2), (2, 3), (3, 2)]:
        basis = orbit_sum_basis(a, b)
        assert len(basis) == block_partition_count(a, b)
        for part in basis.elements:
            words = basis.orbit_words(part)
            assert len(words) == factorial(a)
            assert len(set(words)) == factorial(a)
            assert basis.rep_word(part) in words
            assert all(partition_of_word(w, a, b) == part for w in words)


def test_gl2_basis_and_zeta_shape():
    basis = gl2_weight_basis(4, 2)
    assert len(basis) == comb(4, 2)
    z = zeta_gl2(4, 2)
    assert z.matrix.shape == (comb(4, 3), comb(4, 2))
    # each column has n - k entries of 1/n
    for col in range(len(basis)):
        column = z.matrix.column(col)
        assert len(column) == 2
        assert all(v == Fraction(1, 4) for v in column.values())


def test_wedge_sym_vector_small():
    # (e wedge f) (x) e  on three slots
    vec = wedge_sym_vector(1, 3, 1)
    assert vec == {
        (0, 1, 0): Fraction(1),
        (1, 0, 0): Fraction(-1),
    }
    # plain symmetric vector when lam2 = 0
    vec = wedge_sym_vector(0, 3, 2)
    assert set(vec) == {(0, 1, 1), (1, 0, 1), (1, 1, 0)}
    with pytest.raises(ValueError):
        wedge_sym_vector(2, 3, 1)
