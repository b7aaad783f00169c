"""Words over the three involutory generators r0, r1, r2.

A word is a tuple of generator indices. Every generator is its own
inverse, so inverting a word is reversing it and free reduction only ever
cancels equal neighbours.
"""

from enum import IntEnum
from typing import Iterable, Sequence

Word = tuple[int, ...]

GENERATOR_COUNT = 3
EMPTY: Word = ()


class Generator(IntEnum):
    """The reflections r0, r1, r2 (longitudinal, corner, transversal)."""

    R0 = 0
    R1 = 1
    R2 = 2

    @property
    def token(self) -> str:
        return f"r{int(self)}"


def as_word(letters: Iterable[int]) -> Word:
    word = tuple(int(x) for x in letters)
    for x in word:
        if x < 0 or x >= GENERATOR_COUNT:
            raise ValueError(f"generator index {x} is not one of 0, 1, 2")
    return word


def free_reduce(word: Sequence[int]) -> Word:
    """Cancel adjacent equal letters until none remain."""
    stack: list[int] = []
    for x in word:
        if stack and stack[-1] == x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def cyclically_reduce(word: Sequence[int]) -> Word:
    """Free reduction followed by stripping matching first/last letters."""
    w = free_reduce(word)
    lo, hi = 0, len(w)
    while hi - lo >= 2 and w[lo] == w[hi - 1]:
        lo += 1
        hi -= 1
    return w[lo:hi]


def invert(word: Sequence[int]) -> Word:
    return tuple(reversed(word))


def power(word: Sequence[int], k: int) -> Word:
    if k < 0:
        return tuple(invert(word)) * (-k)
    return tuple(word) * k


def commutator(x: Sequence[int], y: Sequence[int]) -> Word:
    """[x, y] = x^-1 y^-1 x y, freely reduced."""
    return free_reduce(invert(x) + invert(y) + tuple(x) + tuple(y))


def conjugate(x: Sequence[int], y: Sequence[int]) -> Word:
    """x^y = y^-1 x y, freely reduced."""
    return free_reduce(invert(y) + tuple(x) + tuple(y))


def cyclic_conjugates(word: Sequence[int]) -> list[Word]:
    """Distinct rotations of ``word`` and of its inverse."""
    w = tuple(word)
    seen: dict[Word, None] = {}
    for base in (w, invert(w)):
        for i in range(len(base)):
            seen.setdefault(base[i:] + base[:i], None)
    return list(seen)


def minimal_period(word: Sequence[int]) -> int:
    """Length of the shortest u with word = u^k."""
    w = tuple(word)
    n = len(w)
    for p in range(1, n + 1):
        if n % p == 0 and w[:p] * (n // p) == w:
            return p
    return n


def format_word(word: Sequence[int]) -> str:
    """Relator-language text for ``word``, collapsing a periodic word to a power."""
    w = tuple(word)
    if not w:
        return "1"
    p = minimal_period(w)
    body = " ".join(f"r{x}" for x in w[:p])
    k = len(w) // p
    if k == 1:
        return body
    if p == 1:
        return f"{body}^{k}"
    return f"({body})^{k}"

