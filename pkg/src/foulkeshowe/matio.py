"""FHM1: a line-oriented exact sparse matrix format.

Layout:

    FHM1 <rows> <cols> <nnz> <tag>
    <row> <col> <num>/<den>
    ...

Indices are 0-based; entries are sorted by (col, row); values are rational
numbers in lowest terms with positive denominator, written even when the
denominator is 1.  The tag names the basis convention of the exporting
module and is preserved verbatim.  Writing is deterministic, so equal
matrices produce byte-identical files.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import FormatError
from .exactla import SparseExactMatrix

FORMAT_NAME = "FHM1"


def format_matrix(matrix, tag: str) -> str:
    """Serialize anything with .shape and .sorted_entries() to FHM1 text."""
    if not tag or any(c.isspace() for c in tag):
        raise ValueError(f"tag must be nonempty and whitespace-free: {tag!r}")
    rows, cols = matrix.shape
    entries = list(matrix.sorted_entries())
    lines = [f"{FORMAT_NAME} {rows} {cols} {len(entries)} {tag}"]
    for (r, c), v in entries:
        v = Fraction(v)
        lines.append(f"{r} {c} {v.numerator}/{v.denominator}")
    return "\n".join(lines) + "\n"


def write_matrix(path, matrix, tag: str) -> None:
    with open(path, "w") as fh:
        fh.write(format_matrix(matrix, tag))


def parse_matrix(text: str) -> tuple[SparseExactMatrix, str]:
    """Parse FHM1 text; returns the matrix and its tag."""
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty input", line=1)
    head = lines[0].split()
    if len(head) != 5 or head[0] != FORMAT_NAME:
        raise FormatError(f"bad header {lines[0]!r}", line=1)
    try:
        rows, cols, nnz = int(head[1]), int(head[2]), int(head[3])
    except ValueError:
        raise FormatError(f"non-integer dimensions in header {lines[0]!r}", line=1)
    tag = head[4]
    if rows < 0 or cols < 0 or nnz < 0:
        raise FormatError("negative dimension or entry count", line=1)
    body = [ln for ln in lines[1:] if ln.strip()]
    if len(body) != nnz:
        raise FormatError(
            f"header promises {nnz} entries, found {len(body)}", line=len(lines)
        )
    matrix = SparseExactMatrix(rows, cols)
    prev = None
    for k, ln in enumerate(body, start=2):
        parts = ln.split()
        if len(parts) != 3:
            raise FormatError(f"expected 'row col num/den', got {ln!r}", line=k)
        try:
            r, c = int(parts[0]), int(parts[1])
            num, _, den = parts[2].partition("/")
            value = Fraction(int(num), int(den))
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"bad entry {ln!r} ({exc})", line=k)
        if not (0 <= r < rows and 0 <= c < cols):
            raise FormatError(f"index ({r},{c}) out of range", line=k)
        if value == 0:
            raise FormatError("explicit zero entry", line=k)
        if prev is not None and (c, r) <= prev:
            raise FormatError("entries not sorted by (col, row)", line=k)
        prev = (c, r)
        matrix[r, c] = value
    return matrix, tag


def read_matrix(path) -> tuple[SparseExactMatrix, str]:
    with open(path) as fh:
        return parse_matrix(fh.read())
