"""Three involutions on 2^(n-2) points realizing the H6 presentation.

Points are split into four blocks of t = 2^(n-4) points, each block into
t/8 runs of 8. ``point(i, j, k) = j*t + 8*i + k`` is the k-th point
(k = 1..8) of run i in block j; runs are mirrored by ``ci = t/8 - i - 1``.
"""

from __future__ import annotations

from typing import Iterator, List, Tuple

from ..errors import ParameterRangeError
from ..utils.logging import get_logger
from .permutations import Permutation

logger = get_logger(__name__)

MIN_N = 8
STATED_N = 12

Transposition = Tuple[int, int]


class _Layout:
    def __init__(self, n: int):
        self.n = n
        self.t = 2 ** (n - 4)
        self.runs = self.t // 8
        self.degree = 4 * self.t

    def point(self, i: int, j: int, k: int) -> int:
        return j * self.t + 8 * i + k

    def mirror(self, i: int) -> int:
        return self.runs - i - 1


def _a_cycles(lay: _Layout) -> Iterator[Transposition]:
    p = lay.point
    for i in range(lay.runs):
        ci = lay.mirror(i)
        yield p(i, 2, 1), p(ci, 3, 8)
        yield p(i, 2, 8), p(ci, 3, 1)
        yield p(i, 0, 2), p(ci, 2, 7)
        yield p(i, 1, 2), p(i, 2, 2)
        yield p(i, 3, 2), p(ci, 1, 7)
        yield p(i, 0, 7), p(i, 3, 7)
        yield p(i, 0, 3), p(ci, 2, 6)
        yield p(i, 1, 3), p(i, 2, 3)
        yield p(i, 3, 3), p(ci, 1, 6)
        yield p(i, 0, 6), p(i, 3, 6)
        yield p(i, 0, 4), p(ci, 1, 5)
        yield p(i, 0, 5), p(ci, 1, 4)


def _b_cycles(lay: _Layout) -> Iterator[Transposition]:
    p = lay.point
    for j in range(4):
        for i in range(lay.runs):
            yield p(i, j, 1), p(i, j, 2)
            yield p(i, j, 3), p(i, j, 4)
            yield p(i, j, 5), p(i, j, 6)
            yield p(i, j, 7), p(i, j, 8)


def _c_cycles(lay: _Layout) -> Iterator[Transposition]:
    p = lay.point
    last = lay.runs - 1
    for j in range(4):
        for i in range(lay.runs):
            yield p(i, j, 2), p(i, j, 3)
            yield p(i, j, 4), p(i, j, 5)
            yield p(i, j, 6), p(i, j, 7)
        for i in range(lay.runs - 1):
            yield p(i, j, 8), p(i + 1, j, 1)
    # Block ends: 0^1 of blocks 0 and 2 and (t/8-1)^8 of blocks 1 and 3
    # stay fixed; the other ends are swapped across the block pair.
    for i in range(2):
        yield p(last, 2 * i, 8), p(0, 2 * i + 1, 1)


def _build(lay: _Layout, cycles: List[Transposition], name: str) -> Permutation:
    try:
        return Permutation.from_cycles(lay.degree, cycles)
    except ValueError as e:
        raise ParameterRangeError(f"permutation {name} at n={lay.n}: {str(e)}") from e


def permutation_model(n: int) -> Tuple[Permutation, Permutation, Permutation]:
    """The permutations (a, b, c) on {1..2^(n-2)}."""
    if n < MIN_N:
        raise ParameterRangeError(f"the permutation model needs n >= {MIN_N}, got {n}")
    if n < STATED_N:
        logger.warning(f"permutation model at n={n} is below the stated range n >= {STATED_N}; desk-scale analog")
    lay = _Layout(n)
    a = _build(lay, list(_a_cycles(lay)), "a")
    b = _build(lay, list(_b_cycles(lay)), "b")
    c = _build(lay, list(_c_cycles(lay)), "c")
    return a, b, c


def fixed_ends(n: int) -> List[int]:
    """Points the last factor of c leaves fixed."""
    lay = _Layout(n)
    last = lay.runs - 1
    return sorted(
        pt for i in range(2) for pt in (lay.point(0, 2 * i, 1), lay.point(last, 2 * i + 1, 8))
    )
