from fractions import Fraction
from math import factorial

import pytest

from foulkeshowe.combinatorics import block_partition_count
from foulkeshowe.errors import ResourceLimitError
from foulkeshowe.exactla import rank_exact
from foulkeshowe.foulkes_map import (
    left_factor,
    left_factor_row_q,
    middle_basis,
    monomial_multisets,
    operator_sequence,
    psi_composed,
    psi_fused,
    psi_poly,
    q_block_split,
    q_decomposition,
    right_factor,
    right_factor_column,
)
from foulkeshowe.tensorspace import orbit_sum_basis, sa_act, weight_basis


def test_operator_sequence_order():
    assert operator_sequence(2, 2) == [(1, 1), (1, 2), (2, 1), (2, 2)]


@pytest.mark.parametrize("a,b", [(1, 1), (1, 3), (2, 2), (2, 3), (3, 2)])
def test_fused_equals_composed_small(a, b):
    assert psi_fused(a, b).matrix == psi_composed(a, b).matrix


def test_psi_22_entries():
    """The 3x3 case, small enough to verify by hand.

    Columns and rows are both indexed by the pairings of {0,1,2,3}; the
    entry at (row C, col P) is 2/4^4 when every block of C meets every block
    of P exactly once (i.e. C != P), and 0 when C = P.
    """
    psi = psi_composed(2, 2)
    exact = psi.matrix.to_exact()
    off = Fraction(2, 4**4)
    for r in range(3):
        for c in range(3):
            assert exact[r, c] == (0 if r == c else off)
    assert rank_exact(exact) == 3


def test_psi_rank_small_ladder():
    assert rank_exact(psi_composed(1, 4).matrix.to_exact()) == 1
    assert rank_exact(psi_composed(2, 3).matrix.to_exact()) == 10
    assert rank_exact(psi_composed(3, 2).matrix.to_exact()) == 10


def test_composed_refuses_oversized_intermediates():
    with pytest.raises(ResourceLimitError):
        psi_composed(2, 6, basis_limit=10_000)


def test_middle_basis_size():
    # C(ab, a) * (a(b-1))! / ((b-1)!^a a!)
    from math import comb

    for a, b in [(2, 3), (2, 4), (3, 3)]:
        mb = middle_basis(a, b)
        expected = comb(a * b, a) * (
            factorial(a * (b - 1)) // (factorial(b - 1) ** a * factorial(a))
        )
        assert len(mb) == expected
        rep = mb.rep_word(mb.elements[0])
        assert len(rep) == a * b


def test_right_factor_column_matches_matrix():
    a, b = 2, 3
    R = right_factor(a, b)
    domain = R.domain
    mb = R.codomain
    exact = R.matrix.to_exact()
    for col, part in enumerate(domain.elements):
        full = right_factor_column(a, b, part)
        for row, elem in enumerate(mb.elements):
            rep = mb.rep_word(elem)
            expected = Fraction(full.get(rep, 0), (a * b) ** a)
            assert exact[row, col] == expected


def test_factorization_small():
    for a, b in [(1, 2), (2, 3), (2, 4)]:
        L, R = left_factor(a, b), right_factor(a, b)
        assert (L.matrix @ R.matrix) == psi_composed(a, b).matrix


def test_left_factor_entry_structure():
    """Each column has entries a!/(ab)^{a(b-1)} exactly at codomain partitions
    containing Q as their largest-min block."""
    a, b = 2, 3
    L = left_factor(a, b)
    exact = L.matrix.to_exact()
    value = Fraction(factorial(a), (a * b) ** (a * (b - 1)))
    for (row, col), v in exact.entries.items():
        assert v == value
        Q, _ = L.domain.elements[col]
        assert left_factor_row_q(L.codomain.elements[row]) == Q


def test_q_block_split():
    basis = weight_basis(2, 2, (1, 1), (2, 0))
    groups = q_decomposition(basis, marker_letters=[2])
    assert sum(len(v) for v in groups.values()) == len(basis)
    Q = (0, 1)
    sub = q_block_split(basis, Q, marker_letters=[2])
    assert sub == groups[Q]
    assert all(w[0] == 2 and w[1] == 2 for w in sub)
    with pytest.raises(ValueError):
        q_block_split(basis, (0,), marker_letters=[2])


def test_invariance_of_right_images_small():
    a, b = 2, 3
    for part in orbit_sum_basis(a, b).elements:
        image = right_factor_column(a, b, part)
        swapped = {sa_act((1, 0), w): v for w, v in image.items()}
        assert swapped == image


def test_psi_poly_small():
    pp = psi_poly(2, 2, 2)
    assert pp.shape == (6, 6)
    assert rank_exact(pp.matrix) == 6
    assert len(monomial_multisets(2, 2, 2)) == 6
    # a = 1 is the identity permutation of monomials up to reordering
    one = psi_poly(1, 3, 2)
    assert one.shape == (len(one.codomain), len(one.domain))
    assert rank_exact(one.matrix) == one.shape[1]
