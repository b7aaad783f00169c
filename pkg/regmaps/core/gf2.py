"""Packed-row linear algebra over GF(2).

A vector of GF(2)^dim is a Python int whose bit ``b`` is coordinate ``b``.
:class:`GF2Basis` keeps a subspace in reduced row echelon form: every row
has a distinct pivot (its highest set bit) and no other row has that bit
set.
"""

from __future__ import annotations

import bisect
from typing import Dict, Iterable, Iterator, List

import numpy as np


def bit(b: int) -> int:
    return 1 << b


def parity(v: int) -> int:
    return v.bit_count() & 1


def iter_bits(v: int) -> Iterator[int]:
    """Set bit positions of ``v`` in increasing order."""
    while v:
        low = v & -v
        yield low.bit_length() - 1
        v ^= low


class GF2Basis:
    """Reduced echelon basis of a subspace of GF(2)^dim."""

    __slots__ = ("dim", "_rows", "_pivots")

    def __init__(self, dim: int, vectors: Iterable[int] = ()):
        self.dim = dim
        self._rows: Dict[int, int] = {}
        self._pivots: List[int] = []
        for v in vectors:
            self.add(v)

    @property
    def rank(self) -> int:
        return len(self._pivots)

    @property
    def pivots(self) -> List[int]:
        return list(self._pivots)

    def row(self, pivot: int) -> int:
        return self._rows[pivot]

    def rows(self) -> List[int]:
        return [self._rows[p] for p in self._pivots]

    def free_columns(self) -> List[int]:
        """Coordinates that are not pivots; they index a basis of the quotient."""
        pivots = self._rows
        return [b for b in range(self.dim) if b not in pivots]

    def reduce(self, v: int) -> int:
        """Normal form of ``v`` modulo the subspace; it has no pivot bits."""
        rows = self._rows
        for p in reversed(self._pivots):
            if (v >> p) & 1:
                v ^= rows[p]
        return v

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    def add(self, v: int) -> bool:
        """Insert ``v``; returns False when it was already in the span."""
        r = self.reduce(v)
        if r == 0:
            return False
        p = r.bit_length() - 1
        if p >= self.dim:
            raise ValueError(f"vector has bit {p} outside dimension {self.dim}")
        rows = self._rows
        for q in self._pivots:
            if (rows[q] >> p) & 1:
                rows[q] ^= r
        rows[p] = r
        bisect.insort(self._pivots, p)
        return True

    def quotient_coordinates(self, v: int) -> int:
        """Coordinates of ``v`` in the quotient, packed over :meth:`free_columns`."""
        r = self.reduce(v)
        out = 0
        for k, b in enumerate(self.free_columns()):
            if (r >> b) & 1:
                out |= 1 << k
        return out

    def pullback(self, free_mask: int) -> int:
        """Functional on the ambient space that vanishes on the subspace.

        ``free_mask`` selects free columns; the result also carries every
        pivot whose row meets the selection an odd number of times.
        """
        mask = free_mask
        rows = self._rows
        for p in self._pivots:
            if parity(rows[p] & free_mask):
                mask |= 1 << p
        return mask

    def __repr__(self) -> str:
        return f"GF2Basis(dim={self.dim}, rank={self.rank})"


def rank(vectors: Iterable[int], dim: int) -> int:
    return GF2Basis(dim, vectors).rank


def to_matrix(columns: List[int], dim: int) -> np.ndarray:
    """Dense uint8 matrix whose column ``k`` is ``columns[k]``."""
    m = np.zeros((dim, len(columns)), dtype=np.uint8)
    for k, v in enumerate(columns):
        for b in iter_bits(v):
            m[b, k] = 1
    return m


def from_matrix(matrix: np.ndarray) -> List[int]:
    """Columns of a dense 0/1 matrix packed into ints."""
    cols = []
    for k in range(matrix.shape[1]):
        v = 0
        for b in np.flatnonzero(matrix[:, k] & 1):
            v |= 1 << int(b)
        cols.append(v)
    return cols
