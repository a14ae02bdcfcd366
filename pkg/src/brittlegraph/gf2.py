"""Rank over GF(2) for matrices whose rows are int bitsets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import bits


@dataclass(frozen=True)
class BitMatrix:
    """Row ``i`` is an int; bit ``j`` holds entry ``(i, j)``."""

    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self) -> None:
        limit = 1 << self.ncols
        if any(r < 0 or r >= limit for r in self.rows):
            raise ValueError(f"row wider than ncols={self.ncols}")

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> BitMatrix:
        ncols = len(entries[0]) if entries else 0
        rows = []
        for row in entries:
            if len(row) != ncols:
                raise ValueError("ragged matrix")
            rows.append(sum(1 << j for j, x in enumerate(row) if x & 1))
        return cls(tuple(rows), ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def submatrix(self, row_idx: Iterable[int], col_mask: int) -> BitMatrix:
        """``M[X, Y]`` keeping column positions (entries outside Y are zeroed)."""
        return BitMatrix(tuple(self.rows[i] & col_mask for i in row_idx), self.ncols)

    def rank(self) -> int:
        return gf2_rank(self.rows)


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank of a set of bit rows, eliminating on the lowest set column first."""
    basis: dict[int, int] = {}
    for row in rows:
        while row:
            low = row & -row
            pivot = basis.get(low)
            if pivot is None:
                basis[low] = row
                break
            row ^= pivot
    return len(basis)


def submatrix_rank(M: BitMatrix, row_mask: int, col_mask: int) -> int:
    return gf2_rank(M.rows[i] & col_mask for i in bits(row_mask))
