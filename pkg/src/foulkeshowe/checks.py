"""Executable property suites behind ``verify`` and the acceptance tests.

Each suite returns a :class:`CheckResult`; a failing suite carries concrete
counterexample data instead of just a flag.  The suites deliberately verify
by brute computation (word-by-word, entry-by-entry) rather than re-deriving
the statements they are supposed to test.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from sympy.utilities.iterables import multiset_permutations

from .combinatorics import binomial, dim_irrep_sym, weak_compositions
from .foulkes_map import (
    left_factor,
    left_factor_row_q,
    psi_composed,
    psi_fused,
    right_factor,
    right_factor_column,
)
from .tensorspace import sa_act, wedge_sym_vector, zeta_gl2


@dataclass
class CheckResult:
    name: str
    ok: bool
    cases: int
    detail: str = ""
    counterexample: object = None


# ---------------------------------------------------------------------------
# commutativity of the raising operators


def _composite_counts(w, src1, dst1, src2, dst2):
    """Multiset of words from replacing one src2 by dst2, then one src1 by dst1.

    Both operators carry the same 1/d factor, so comparing integer counts
    compares the exact compositions.
    """
    out: dict[tuple, int] = {}
    for p, c in enumerate(w):
        if c != src2:
            continue
        mid = w[:p] + (dst2,) + w[p + 1 :]
        for q, c2 in enumerate(mid):
            if c2 == src1:
                img = mid[:q] + (dst1,) + mid[q + 1 :]
                out[img] = out.get(img, 0) + 1
    return out


def check_commute(contexts=((2, 2), (2, 3), (3, 2)), max_d: int = 8, cap_5letter: int = 7) -> CheckResult:
    """phi_ij . phi_i'j' = phi_i'j' . phi_ij on every word of every weight space.

    Exhaustive over all words of length d <= max_d for each (a, b) context;
    contexts with 5 or more letters are capped at ``cap_5letter`` to stay
    inside the time budget (the d-dependence of the statement is trivial:
    both sides carry the same 1/d^2).
    """
    cases = 0
    for a, b in contexts:
        ops = [(i, j) for i in range(1, a + 1) for j in range(1, b + 1)]
        pairs = [
            (ops[x], ops[y]) for x in range(len(ops)) for y in range(x + 1, len(ops))
        ]
        top = max_d if a + b <= 4 else min(max_d, cap_5letter)
        for d in range(2, top + 1):
            for alpha_beta in weak_compositions(d, a + b):
                pool = [c for c, k in enumerate(alpha_beta) for _ in range(k)]
                for wlist in multiset_permutations(pool):
                    w = tuple(wlist)
                    for (i1, j1), (i2, j2) in pairs:
                        lhs = _composite_counts(w, i1 - 1, a + j1 - 1, i2 - 1, a + j2 - 1)
                        rhs = _composite_counts(w, i2 - 1, a + j2 - 1, i1 - 1, a + j1 - 1)
                        cases += 1
                        if lhs != rhs:
                            return CheckResult(
                                "commute",
                                False,
                                cases,
                                f"operators ({i1},{j1}) and ({i2},{j2}) differ on a word",
                                {"a": a, "b": b, "word": w},
                            )
    return CheckResult("commute", True, cases, f"contexts {list(contexts)}, d <= {max_d}")


# ---------------------------------------------------------------------------
# S_a-invariance of the right-factor images


def check_invariance(pairs=((2, 3), (2, 4), (3, 4))) -> CheckResult:
    """Images of all orbit-sum basis vectors under the right factor are S_a-fixed."""
    from .tensorspace import orbit_sum_basis

    cases = 0
    for a, b in pairs:
        for part in orbit_sum_basis(a, b).elements:
            image = right_factor_column(a, b, part)
            for pi in permutations(range(a)):
                moved = {sa_act(pi, w): v for w, v in image.items()}
                cases += 1
                if moved != image:
                    return CheckResult(
                        "invariance",
                        False,
                        cases,
                        f"image of a basis vector moves under the letter permutation {pi}",
                        {"a": a, "b": b, "partition": part},
                    )
    return CheckResult("invariance", True, cases, f"pairs {list(pairs)}")


# ---------------------------------------------------------------------------
# factorization and fused-formula agreement


def check_factorization(pairs=((2, 3), (2, 4), (3, 4))) -> CheckResult:
    cases = 0
    for a, b in pairs:
        L, R = left_factor(a, b), right_factor(a, b)
        psi = psi_composed(a, b)
        cases += 1
        if not (L.matrix @ R.matrix) == psi.matrix:
            return CheckResult(
                "factorization", False, cases, f"left*right != psi for {(a, b)}", (a, b)
            )
    return CheckResult("factorization", True, cases, f"pairs {list(pairs)}")


def check_fused(pairs=((2, 3), (2, 4), (3, 4))) -> CheckResult:
    cases = 0
    for a, b in pairs:
        cases += 1
        if not psi_fused(a, b).matrix == psi_composed(a, b).matrix:
            return CheckResult(
                "fused", False, cases, f"fused formula != composed chain for {(a, b)}", (a, b)
            )
    return CheckResult("fused", True, cases, f"pairs {list(pairs)}")


# ---------------------------------------------------------------------------
# Q-block direct sums


def check_qsplit(pairs=((2, 3), (3, 4))) -> CheckResult:
    """Row supports of left-factor columns with distinct marker sets Q are disjoint.

    A column indexed by (Q, blocks) may only hit codomain rows whose
    largest-minimum block is Q, so the matrix is a direct sum over Q.
    """
    cases = 0
    for a, b in pairs:
        L = left_factor(a, b)
        mat = L.matrix.mat.tocsc()
        rows_by_q: dict[tuple, set] = {}
        for col, (Q, _) in enumerate(L.domain.elements):
            support = set(mat.indices[mat.indptr[col] : mat.indptr[col + 1]])
            rows_by_q.setdefault(Q, set()).update(support)
            cases += 1
            bad = [
                r for r in support
                if left_factor_row_q(L.codomain.elements[r]) != Q
            ]
            if bad:
                return CheckResult(
                    "qsplit", False, cases,
                    f"a column with marker set {Q} hits a row outside its block",
                    {"a": a, "b": b, "Q": Q, "rows": bad},
                )
        qs = list(rows_by_q)
        for x in range(len(qs)):
            for y in range(x + 1, len(qs)):
                if rows_by_q[qs[x]] & rows_by_q[qs[y]]:
                    return CheckResult(
                        "qsplit", False, cases,
                        f"row supports of {qs[x]} and {qs[y]} intersect",
                        {"a": a, "b": b},
                    )
    return CheckResult("qsplit", True, cases, f"pairs {list(pairs)}")


# ---------------------------------------------------------------------------
# zeta injectivity and the two-row Kostka identity


def zeta_parameter_range(max_b: int = 7):
    """All (n, k) = (B + i, i - 1) arising from 1 <= i <= a < b <= max_b."""
    seen = set()
    for b in range(2, max_b + 1):
        for a in range(1, b):
            for i in range(1, a + 1):
                seen.add((b - 1 + i, i - 1))
    return sorted(seen)


def check_zeta(max_b: int = 7) -> CheckResult:
    """zeta from k f's to k+1 f's has full column rank at every (n, k) in range,
    and C(n, k) equals the sum of f^lam over two-row lam with lam_2 <= k."""
    from .exactla import certify_injective

    cases = 0
    for n, k in zeta_parameter_range(max_b):
        zeta = zeta_gl2(n, k)
        cert = certify_injective(zeta.matrix)
        cases += 1
        if not (cert.conclusive and cert.injective):
            return CheckResult(
                "zeta", False, cases, f"zeta at (n, k) = {(n, k)} is not injective", (n, k)
            )
        expected = sum(
            dim_irrep_sym((n - l2, l2) if l2 else (n,))
            for l2 in range(0, k + 1)
        )
        cases += 1
        if binomial(n, k) != expected:
            return CheckResult(
                "zeta", False, cases,
                f"C({n},{k}) != sum of two-row dimensions with lam2 <= {k}", (n, k),
            )
    return CheckResult("zeta", True, cases, f"b <= {max_b}")


# ---------------------------------------------------------------------------
# the wedge computation


def _proportional(v: dict, w: dict) -> bool:
    if set(v) != set(w):
        return False
    if not v:
        return True
    key = next(iter(v))
    ratio = Fraction(v[key]) / Fraction(w[key])
    return all(Fraction(v[x]) == ratio * Fraction(w[x]) for x in v)


def check_wedge(max_n: int = 10) -> CheckResult:
    """zeta maps each wedge-times-symmetric weight vector to a nonzero multiple
    of the one with an extra f, for all lam2 <= k < n - lam2, n <= max_n."""
    cases = 0
    for n in range(1, max_n + 1):
        for lam2 in range(0, n // 2 + 1):
            for k in range(lam2, n - lam2):
                vec = wedge_sym_vector(lam2, n, k)
                zeta = zeta_gl2(n, k)
                raw = zeta.matrix.apply(
                    {zeta.domain.index[w]: coeff for w, coeff in vec.items()}
                )
                image = {zeta.codomain.words[r]: v for r, v in raw.items()}
                target = wedge_sym_vector(lam2, n, k + 1)
                cases += 1
                if not image or not _proportional(image, target):
                    return CheckResult(
                        "wedge", False, cases,
                        "zeta image is zero or not proportional to the shifted vector",
                        {"n": n, "k": k, "lam2": lam2},
                    )
    return CheckResult("wedge", True, cases, f"n <= {max_n}")


ALL_CHECKS = {
    "commute": check_commute,
    "invariance": check_invariance,
    "factorization": check_factorization,
    "fused": check_fused,
    "qsplit": check_qsplit,
    "zeta": check_zeta,
    "wedge": check_wedge,
}
