"""Exact rank and row-space comparison over the rationals, using only integers."""
from __future__ import annotations

from math import gcd
from typing import Iterable, Mapping

__all__ = ["IntMatrix", "row_spaces_equal"]


def _normalise(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        row = {k: v // g for k, v in row.items()}
    lead = min(row)
    if row[lead] < 0:
        row = {k: -v for k, v in row.items()}
    return row


class IntMatrix:
    """Sparse integer matrix; rows are stored as ``{column: value}`` dicts."""

    def __init__(self, rows: Iterable, ncols: int):
        self.ncols = ncols
        self.rows: list[dict[int, int]] = []
        for r in rows:
            if isinstance(r, Mapping):
                d = {int(k): int(v) for k, v in r.items() if v}
            else:
                r = list(r)
                if len(r) != ncols:
                    raise ValueError("ragged matrix")
                d = {j: int(v) for j, v in enumerate(r) if v}
            if any(not 0 <= k < ncols for k in d):
                raise ValueError("column index out of range")
            self.rows.append(d)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.ncols

    def stack(self, other: "IntMatrix") -> "IntMatrix":
        if other.ncols != self.ncols:
            raise ValueError("column counts differ")
        return IntMatrix(self.rows + other.rows, self.ncols)

    def to_dense(self) -> list[list[int]]:
        return [[r.get(j, 0) for j in range(self.ncols)] for r in self.rows]

    def echelon(self) -> dict[int, dict[int, int]]:
        """Fraction-free elimination; returns pivot column -> reduced pivot row.

        Each incoming row is cleared against existing pivots by the integer
        update ``row <- p*row - a*pivot`` followed by division by the row gcd,
        so entries stay small and no rationals appear.
        """
        pivots: dict[int, dict[int, int]] = {}
        for r in self.rows:
            row = dict(r)
            while row:
                lead = min(row)
                piv = pivots.get(lead)
                if piv is None:
                    pivots[lead] = _normalise(row)
                    break
                a, p = row[lead], piv[lead]
                g = gcd(a, p)
                ma, mp = p // g, a // g
                new = {k: v * ma for k, v in row.items()}
                for k, v in piv.items():
                    nv = new.get(k, 0) - v * mp
                    if nv:
                        new[k] = nv
                    else:
                        new.pop(k, None)
                row = _normalise(new) if new else new
        return pivots

    def rank(self) -> int:
        return len(self.echelon())


def row_spaces_equal(a: IntMatrix, b: IntMatrix) -> tuple[bool, int, int, int]:
    """``(equal, rank A, rank B, rank [A; B])`` over ``Q``."""
    ra, rb, rab = a.rank(), b.rank(), a.stack(b).rank()
    return (ra == rb == rab), ra, rb, rab
