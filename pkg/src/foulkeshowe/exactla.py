"""Exact sparse linear algebra: ranks over prime fields and over Q.

Two matrix carriers are used throughout the package:

* :class:`SparseExactMatrix` -- a dict of exact rational entries; the
  general-purpose representation for desk-scale operators.
* :class:`ScaledIntMatrix` -- a scipy integer sparse matrix times a single
  rational scalar.  Every operator assembled by :mod:`foulkeshowe.foulkes_map`
  has this shape, and the large instances only fit in memory this way.

Rank strategy: full column rank modulo any prime is a sound certificate of
full column rank over Q, so injectivity is certified modularly first and
escalated to exact (Bareiss) arithmetic only when the modular result is
negative or the caller asks for confirmation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

import numpy as np
import scipy.sparse as sp

from .errors import ResourceLimitError

# 30-bit primes for elimination-based ranks; 20-bit primes for the blocked
# dense kernel, whose float64 matmul needs p^2 * blocksize < 2^53.
PRIMES_30 = (1073741789, 1073741783, 1073741741, 1073741723, 1073741719)
PRIMES_20 = (1048573, 1048571, 1048559, 1048549, 1048517)

BAREISS_BIT_LIMIT = 4096
DENSE_ELIM_LIMIT = 2600  # max dimension for unblocked dense elimination
_LU_BLOCK = 64


class SparseExactMatrix:
    """Sparse matrix with exact rational entries, keyed by (row, col)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries=None):
        self.rows = rows
        self.cols = cols
        self.entries: dict[tuple[int, int], Fraction] = {}
        if entries:
            for (r, c), v in entries.items() if isinstance(entries, dict) else entries:
                self[r, c] = v

    def __setitem__(self, key, value):
        r, c = key
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError(key)
        value = Fraction(value)
        if value == 0:
            self.entries.pop(key, None)
        else:
            self.entries[key] = value

    def __getitem__(self, key):
        return self.entries.get(key, Fraction(0))

    def add(self, r, c, value):
        new = self.entries.get((r, c), Fraction(0)) + value
        self[r, c] = new

    @property
    def nnz(self) -> int:
        return len(self.entries)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __eq__(self, other):
        if not isinstance(other, SparseExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __matmul__(self, other: "SparseExactMatrix") -> "SparseExactMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        by_row: dict[int, list[tuple[int, Fraction]]] = {}
        for (r, c), v in self.entries.items():
            by_row.setdefault(c, []).append((r, v))
        out = SparseExactMatrix(self.rows, other.cols)
        for (k, c), w in other.entries.items():
            for r, v in by_row.get(k, ()):
                out.add(r, c, v * w)
        return out

    def scaled(self, scalar) -> "SparseExactMatrix":
        scalar = Fraction(scalar)
        out = SparseExactMatrix(self.rows, self.cols)
        if scalar:
            out.entries = {k: v * scalar for k, v in self.entries.items()}
        return out

    def column(self, c: int) -> dict[int, Fraction]:
        return {r: v for (r, cc), v in self.entries.items() if cc == c}

    def apply(self, vec: dict[int, Fraction]) -> dict[int, Fraction]:
        """Matrix-vector product on a sparse vector keyed by column index."""
        out: dict[int, Fraction] = {}
        for (r, c), v in self.entries.items():
            if c in vec:
                new = out.get(r, Fraction(0)) + v * vec[c]
                if new:
                    out[r] = new
                else:
                    out.pop(r, None)
        return out

    def is_zero(self) -> bool:
        return not self.entries

    def sorted_entries(self):
        """Entries sorted by (col, row) -- the serialization order."""
        return sorted(self.entries.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def __repr__(self):
        return f"SparseExactMatrix({self.rows}x{self.cols}, nnz={self.nnz})"


class ScaledIntMatrix:
    """An integer scipy sparse matrix times one rational scalar."""

    __slots__ = ("mat", "scale")

    def __init__(self, mat, scale=Fraction(1)):
        self.mat = sp.csr_matrix(mat)
        self.mat.sum_duplicates()
        self.mat.eliminate_zeros()
        self.scale = Fraction(scale)

    @property
    def shape(self):
        return self.mat.shape

    @property
    def nnz(self) -> int:
        return self.mat.nnz

    def __matmul__(self, other: "ScaledIntMatrix") -> "ScaledIntMatrix":
        return ScaledIntMatrix(self.mat @ other.mat, self.scale * other.scale)

    def __eq__(self, other):
        if not isinstance(other, ScaledIntMatrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        a = sp.coo_matrix(self.mat)
        b = sp.coo_matrix(other.mat)
        ka = np.lexsort((a.row, a.col))
        kb = np.lexsort((b.row, b.col))
        if a.nnz != b.nnz:
            return False
        if not (
            np.array_equal(a.row[ka], b.row[kb])
            and np.array_equal(a.col[ka], b.col[kb])
        ):
            return False
        # scale_a * data_a == scale_b * data_b entrywise, exactly
        ratio = self.scale / other.scale
        p, q = ratio.numerator, ratio.denominator
        return np.array_equal(
            a.data[ka].astype(object) * p, b.data[kb].astype(object) * q
        )

    def to_exact(self, max_entries: int = 2_000_000) -> SparseExactMatrix:
        if self.nnz > max_entries:
            raise ResourceLimitError(
                f"{self.nnz} entries exceed exact-conversion limit {max_entries}"
            )
        coo = sp.coo_matrix(self.mat)
        out = SparseExactMatrix(*self.shape)
        for r, c, v in zip(coo.row.tolist(), coo.col.tolist(), coo.data.tolist()):
            out.add(int(r), int(c), self.scale * int(v))
        return out

    def sorted_entries(self):
        coo = sp.coo_matrix(self.mat)
        order = np.lexsort((coo.row, coo.col))
        for i in order:
            yield (int(coo.row[i]), int(coo.col[i])), self.scale * int(coo.data[i])

    def __repr__(self):
        return f"ScaledIntMatrix({self.shape[0]}x{self.shape[1]}, nnz={self.nnz}, scale={self.scale})"


@dataclass(frozen=True)
class RankCertificate:
    rank: int
    method: str  # "modular" or "exact"
    primes: tuple[int, ...]
    injective: bool
    conclusive: bool = True
    cols: int = 0

    def as_dict(self):
        return {
            "rank": self.rank,
            "method": self.method,
            "primes": list(self.primes),
            "injective": self.injective,
            "conclusive": self.conclusive,
        }


def _denominators(m) -> set[int]:
    if isinstance(m, ScaledIntMatrix):
        return {m.scale.denominator}
    return {v.denominator for v in m.entries.values()}


def _int_csr_with_scales(m) -> tuple[sp.csr_matrix, list[int]]:
    """Clear denominators per column; returns the integer matrix and the
    per-column multipliers (kernel coordinates of the cleared matrix must be
    multiplied back by these to give kernel coordinates of ``m``)."""
    rows, cols = m.shape
    if isinstance(m, ScaledIntMatrix):
        return m.mat, [1] * cols
    if isinstance(m, sp.spmatrix):
        return sp.csr_matrix(m), [1] * cols
    col_lcm = [1] * cols
    for (r, c), v in m.entries.items():
        col_lcm[c] = lcm(col_lcm[c], v.denominator)
    data, ri, ci = [], [], []
    for (r, c), v in m.entries.items():
        iv = v.numerator * (col_lcm[c] // v.denominator)
        if abs(iv) >= 2**62:
            raise ResourceLimitError("cleared entry exceeds int64 range")
        data.append(iv)
        ri.append(r)
        ci.append(c)
    mat = sp.csr_matrix(
        (np.array(data, dtype=np.int64), (ri, ci)), shape=(rows, cols)
    )
    return mat, col_lcm


def to_int_csr(m) -> sp.csr_matrix:
    """Integer sparse matrix with the same rank and kernel support as ``m``
    (denominators cleared per column; column scaling preserves both)."""
    return _int_csr_with_scales(m)[0]


# ---------------------------------------------------------------------------
# rank mod p


def _dense_rank_mod(A: np.ndarray, p: int) -> int:
    """Vectorized Gaussian elimination mod p on an int64 array (destructive)."""
    M = A % p
    nr, nc = M.shape
    r = 0
    for c in range(nc):
        if r == nr:
            break
        nz = np.nonzero(M[r:, c])[0]
        if len(nz) == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            M[[r, i]] = M[[i, r]]
        inv = pow(int(M[r, c]), -1, p)
        M[r] = M[r] * inv % p
        below = M[r + 1 :, c]
        if below.any():
            M[r + 1 :] = (M[r + 1 :] - np.outer(below, M[r])) % p
        r += 1
    return r


def rank_mod_p(m, p: int) -> int:
    """Rank of ``m`` modulo ``p`` by sparse elimination with Markowitz pivoting.

    Falls back to dense vectorized elimination once the active submatrix is
    small or has filled in.
    """
    for den in _denominators(m):
        if den % p == 0:
            raise ValueError(f"denominator divisible by p={p}; retry with another prime")
    mat = to_int_csr(m)
    coo = sp.coo_matrix(mat)
    rows: dict[int, dict[int, int]] = {}
    col_rows: dict[int, set[int]] = {}
    for r, c, v in zip(coo.row.tolist(), coo.col.tolist(), coo.data.tolist()):
        v = int(v) % p
        if v:
            rows.setdefault(int(r), {})[int(c)] = v
            col_rows.setdefault(int(c), set()).add(int(r))
    rank = 0
    while rows:
        nr = len(rows)
        nc = len(col_rows)
        if min(nr, nc) <= DENSE_ELIM_LIMIT and (
            min(nr, nc) <= 64
            or sum(len(rw) for rw in rows.values()) > 0.12 * nr * nc
        ):
            if nr * nc > 40_000_000:
                raise ResourceLimitError("dense fallback too large")
            row_ids = sorted(rows)
            col_ids = {c: j for j, c in enumerate(sorted(col_rows))}
            dense = np.zeros((nr, nc), dtype=np.int64)
            for i, rid in enumerate(row_ids):
                for c, v in rows[rid].items():
                    dense[i, col_ids[c]] = v
            return rank + _dense_rank_mod(dense, p)
        # Markowitz-style pivot: scan the sparsest columns for the entry
        # minimizing (row_nnz - 1) * (col_nnz - 1)
        best = None
        for c in sorted(col_rows, key=lambda c: len(col_rows[c]))[:24]:
            cl = len(col_rows[c]) - 1
            for r in col_rows[c]:
                cost = (len(rows[r]) - 1) * cl
                if best is None or cost < best[0]:
                    best = (cost, r, c)
            if best and best[0] == 0:
                break
        _, pr, pc = best
        prow = rows.pop(pr)
        for c in prow:
            col_rows[c].discard(pr)
            if not col_rows[c]:
                del col_rows[c]
        inv = pow(prow[pc], -1, p)
        prow = {c: v * inv % p for c, v in prow.items()}
        for r in list(col_rows.get(pc, ())):
            row = rows[r]
            factor = row[pc]
            for c, v in prow.items():
                new = (row.get(c, 0) - factor * v) % p
                if new:
                    if c not in row:
                        col_rows.setdefault(c, set()).add(r)
                    row[c] = new
                elif c in row:
                    del row[c]
                    col_rows[c].discard(r)
                    if not col_rows[c]:
                        del col_rows[c]
            if not row:
                del rows[r]
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# blocked dense full-column-rank test (for the large certificates)


def _blocked_full_rank_mod(M: np.ndarray, p: int) -> bool:
    """LU with partial pivoting mod p on a square int64 matrix; True iff invertible.

    Schur updates run as float64 matmuls; exactness needs p^2 * block < 2^53,
    which the 20-bit prime pool guarantees with block size 64.
    """
    n = M.shape[0]
    assert p < 2**21
    M = M % p
    for k in range(0, n, _LU_BLOCK):
        e = min(k + _LU_BLOCK, n)
        for c in range(k, e):
            nz = np.nonzero(M[c:, c])[0]
            if len(nz) == 0:
                return False
            i = c + int(nz[0])
            if i != c:
                M[[c, i]] = M[[i, c]]
            inv = pow(int(M[c, c]), -1, p)
            if c + 1 < n:
                mult = M[c + 1 :, c] * inv % p
                M[c + 1 :, c] = mult
                active = mult.nonzero()[0]
                if len(active) and c + 1 < e:
                    M[c + 1 :, c + 1 : e] = (
                        M[c + 1 :, c + 1 : e] - np.outer(mult, M[c, c + 1 : e])
                    ) % p
        if e < n:
            # U12 := L11^{-1} A12 (unit lower triangular forward substitution)
            for r in range(k + 1, e):
                M[r, e:] = (M[r, e:] - M[r, k:r] @ M[k:r, e:]) % p
            # Schur complement update
            L21 = M[e:, k:e].astype(np.float64)
            U12 = M[k:e, e:].astype(np.float64)
            prod = np.rint(L21 @ U12).astype(np.int64)
            M[e:, e:] = (M[e:, e:] - prod) % p
    return True


def _full_col_rank_mod(mat: sp.csr_matrix, p: int, seed: int) -> bool:
    """Sound one-sided test: does ``mat`` have full column rank mod p?

    Large matrices are first compressed by a random row projection; a
    nonsingular compressed square matrix certifies full column rank.
    A False return is only evidence, never a proof of rank deficiency.
    """
    rows, cols = mat.shape
    if cols > rows:
        return False
    if max(rows, cols) <= DENSE_ELIM_LIMIT:
        dense = np.asarray(mat.todense(), dtype=np.int64)
        return _dense_rank_mod(dense, p) == cols
    rng = np.random.default_rng(seed)
    R = rng.integers(0, p, size=(rows, cols), dtype=np.int64)
    reduced = mat.astype(np.int64).copy()
    reduced.data %= p
    # G = mat^T @ R, a random row compression to a square matrix; if G is
    # nonsingular mod p then mat has full column rank mod p.
    G = np.asarray(reduced.T @ R, dtype=np.int64) % p
    return _blocked_full_rank_mod(G, p)


# ---------------------------------------------------------------------------
# exact rank and kernel


def _int_rows(m) -> tuple[list[list[int]], int, int, list[int]]:
    mat, col_scales = _int_csr_with_scales(m)
    rows, cols = mat.shape
    dense = [[0] * cols for _ in range(rows)]
    coo = sp.coo_matrix(mat)
    for r, c, v in zip(coo.row.tolist(), coo.col.tolist(), coo.data.tolist()):
        dense[int(r)][int(c)] = int(v)
    return dense, rows, cols, col_scales


def _bareiss(m, bit_limit: int = BAREISS_BIT_LIMIT):
    """Fraction-free elimination; returns (rank, echelon rows, pivot cols, col scales)."""
    M, rows, cols, col_scales = _int_rows(m)
    prev = 1
    r = 0
    pivot_cols = []
    for c in range(cols):
        if r == rows:
            break
        pivot = next((i for i in range(r, rows) if M[i][c]), None)
        if pivot is None:
            continue
        M[r], M[pivot] = M[pivot], M[r]
        piv = M[r][c]
        if piv.bit_length() > bit_limit:
            raise ResourceLimitError(
                f"Bareiss entry exceeded {bit_limit} bits; raise the limit or go modular"
            )
        for i in range(r + 1, rows):
            row_i, row_r = M[i], M[r]
            head = row_i[c]
            if head:
                for j in range(c + 1, cols):
                    row_i[j] = (row_i[j] * piv - head * row_r[j]) // prev
                row_i[c] = 0
            elif prev != piv:
                for j in range(c + 1, cols):
                    if row_i[j]:
                        row_i[j] = row_i[j] * piv // prev
        prev = piv
        pivot_cols.append(c)
        r += 1
    return r, M, pivot_cols, col_scales


def rank_exact(m, bit_limit: int = BAREISS_BIT_LIMIT) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    return _bareiss(m, bit_limit)[0]


def kernel_basis_exact(m, bit_limit: int = BAREISS_BIT_LIMIT):
    """Exact rational kernel basis; one vector per non-pivot column."""
    rank, M, pivot_cols, col_scales = _bareiss(m, bit_limit)
    cols = m.shape[1]
    pivot_set = set(pivot_cols)
    free_cols = [c for c in range(cols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        vec = [Fraction(0)] * cols
        vec[fc] = Fraction(1)
        for i in reversed(range(rank)):
            pc = pivot_cols[i]
            acc = sum(
                (Fraction(M[i][j]) * vec[j] for j in range(pc + 1, cols) if vec[j]),
                Fraction(0),
            )
            vec[pc] = -acc / M[i][pc]
        # undo the per-column denominator clearing
        basis.append(tuple(v * s for v, s in zip(vec, col_scales)))
    return basis


# ---------------------------------------------------------------------------
# injectivity certificates


def certify_injective(
    m,
    primes: tuple[int, ...] | None = None,
    exact_confirm: bool = False,
    seed: int = 20260823,
) -> RankCertificate:
    """Certify full column rank, modular-first.

    A modular full-column-rank result is unconditionally sound.  A negative
    modular result escalates to exact arithmetic; if that is infeasible the
    certificate is marked inconclusive.
    """
    rows, cols = m.shape
    if cols == 0:
        return RankCertificate(0, "modular", (), True, True, 0)
    mat = to_int_csr(m)
    big = max(rows, cols) > DENSE_ELIM_LIMIT
    pool = primes if primes is not None else (PRIMES_20 if big else PRIMES_30)
    used = []
    for attempt, p in enumerate(pool):
        used.append(p)
        if _full_col_rank_mod(mat, p, seed + attempt):
            if exact_confirm:
                r = rank_exact(m)
                return RankCertificate(r, "exact", tuple(used), r == cols, True, cols)
            return RankCertificate(cols, "modular", tuple(used), True, True, cols)
        if attempt >= 1:
            break
    try:
        r = rank_exact(m)
    except ResourceLimitError:
        # best effort: report the modular rank as an inconclusive lower bound
        try:
            r = rank_mod_p(m, pool[0])
        except ResourceLimitError:
            r = -1
        return RankCertificate(r, "modular", tuple(used), False, False, cols)
    return RankCertificate(r, "exact", tuple(used), r == cols, True, cols)
