"""Exact linear algebra over GF(2).

Matrices enter as any nested sequence of integers (lists, tuples, numpy
arrays) and are normalized to tuples of tuples.  All arithmetic is exact
bit arithmetic on Python ints used as row bitsets; there is no floating
point anywhere.  Rows of any width are supported since Python ints are
unbounded.

The central quantity is ``k = dim ker(I - B)`` over GF(2), where ``B`` is
the mod-2 reduction of a nonnegative integer matrix ``A``.  ``k`` feeds
every vertex condition of the realizability checkers, and the pair
``(dim coker(I - B), dim ker(I - B))`` is the mod-2 relative homology
signature of the matrix's filtration pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NegativeEntryError, NonSquareError

Matrix = tuple[tuple[int, ...], ...]
MatrixLike = Sequence[Sequence[int]]


def as_matrix(rows: MatrixLike) -> Matrix:
    """Normalize a nested sequence of integers to a rectangular tuple matrix."""
    out = tuple(tuple(int(x) for x in row) for row in rows)
    if not out or not out[0]:
        raise ValueError("matrix must have at least one row and one column")
    width = len(out[0])
    if any(len(row) != width for row in out):
        raise ValueError("ragged rows: all rows must have equal length")
    return out


def require_square_nonneg(a: Matrix) -> None:
    """Validate the common precondition: square with entries >= 0."""
    if len(a) != len(a[0]):
        raise NonSquareError(f"expected a square matrix, got {len(a)}x{len(a[0])}")
    for row in a:
        for x in row:
            if x < 0:
                raise NegativeEntryError(f"negative entry {x}")


def transpose(a: MatrixLike) -> Matrix:
    m = as_matrix(a)
    return tuple(zip(*m))


@dataclass(frozen=True)
class Gf2Matrix:
    """A matrix over GF(2), rows stored as int bitsets (bit j = column j)."""

    rows: int
    cols: int
    row_bits: tuple[int, ...]

    @classmethod
    def from_rows(cls, rows: MatrixLike) -> "Gf2Matrix":
        m = as_matrix(rows)
        for row in m:
            for x in row:
                if x not in (0, 1):
                    raise ValueError(f"entry {x} is not a bit; use reduce_mod2 first")
        bits = tuple(sum(x << j for j, x in enumerate(row)) for row in m)
        return cls(rows=len(m), cols=len(m[0]), row_bits=bits)

    def entry(self, i: int, j: int) -> int:
        return (self.row_bits[i] >> j) & 1

    def to_rows(self) -> Matrix:
        return tuple(
            tuple((bits >> j) & 1 for j in range(self.cols)) for bits in self.row_bits
        )


def reduce_mod2(a: MatrixLike) -> Gf2Matrix:
    """Entry-wise parity of a square nonnegative integer matrix."""
    m = as_matrix(a)
    require_square_nonneg(m)
    return Gf2Matrix.from_rows(tuple(tuple(x & 1 for x in row) for row in m))


def _rank_of_bits(bits: Iterable[int], cols: int) -> int:
    work = list(bits)
    rank = 0
    row_idx = 0
    for col in range(cols):
        pivot = None
        for r in range(row_idx, len(work)):
            if (work[r] >> col) & 1:
                pivot = r
                break
        if pivot is None:
            continue
        work[row_idx], work[pivot] = work[pivot], work[row_idx]
        for r in range(len(work)):
            if r != row_idx and ((work[r] >> col) & 1):
                work[r] ^= work[row_idx]
        rank += 1
        row_idx += 1
        if row_idx == len(work):
            break
    return rank


def rank_gf2(b: Gf2Matrix | MatrixLike) -> int:
    """Row rank over GF(2) via Gaussian elimination on bitset rows."""
    if not isinstance(b, Gf2Matrix):
        b = Gf2Matrix.from_rows(b)
    return _rank_of_bits(b.row_bits, b.cols)


def _i_minus_b(a: Matrix) -> Gf2Matrix:
    m = len(a)
    bits = []
    for i, row in enumerate(a):
        r = sum((x & 1) << j for j, x in enumerate(row))
        r ^= 1 << i
        bits.append(r)
    return Gf2Matrix(rows=m, cols=m, row_bits=tuple(bits))


@dataclass(frozen=True)
class Gf2Summary:
    """Dimensions attached to I - B over GF(2) for a square matrix.

    For a square matrix over a field, ``k = dim_coker = m - rank``.
    """

    m: int
    rank_i_minus_b: int
    k: int
    dim_coker: int


def k_invariant(a: MatrixLike) -> Gf2Summary:
    """Compute k = dim ker(I - B) over GF(2), with B = A mod 2."""
    m = as_matrix(a)
    require_square_nonneg(m)
    imb = _i_minus_b(m)
    rank = rank_gf2(imb)
    return Gf2Summary(
        m=len(m), rank_i_minus_b=rank, k=len(m) - rank, dim_coker=len(m) - rank
    )


def bowen_franks_mod2(a: MatrixLike) -> tuple[int, int]:
    """Mod-2 homology dimensions of the filtration pair of a matrix.

    Returns ``(dim coker(I - B), dim ker(I - B))``.  The two dimensions
    coincide for every square matrix (rank-nullity over a field).
    """
    summary = k_invariant(a)
    return (summary.dim_coker, summary.k)
