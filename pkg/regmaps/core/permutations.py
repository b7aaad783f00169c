"""Permutations on {1..N} and stabilizer chains.

Points are 1-based at the API; images are stored 0-based in numpy arrays.
Products read left to right: ``(p * q)(x) = q(p(x))``.
"""

from __future__ import annotations

import math
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..errors import TableError
from ..models.presentation import Presentation
from ..utils.logging import get_logger
from .coset_table import CosetTable
from .words import Word

logger = get_logger(__name__)


def _dtype(degree: int) -> np.dtype:
    return np.dtype(np.int16) if degree < 2 ** 15 else np.dtype(np.int32)


class Permutation:
    """An immutable permutation of {1..degree}."""

    __slots__ = ("_img",)

    def __init__(self, images0: np.ndarray, *, check: bool = True):
        img = np.asarray(images0).astype(_dtype(len(images0)), copy=True)
        if check:
            seen = np.zeros(img.size, dtype=bool)
            if img.size and (img.min() < 0 or img.max() >= img.size):
                raise ValueError("image out of range")
            seen[img] = True
            if not seen.all():
                raise ValueError("images do not form a bijection")
        img.flags.writeable = False
        self._img = img

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(np.arange(degree), check=False)

    @classmethod
    def from_images(cls, images: Sequence[int]) -> "Permutation":
        """From 1-based images: point k goes to images[k-1]."""
        return cls(np.asarray(images, dtype=np.int64) - 1)

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """From disjoint 1-based cycles; points not mentioned are fixed."""
        img = np.arange(degree)
        touched = np.zeros(degree, dtype=bool)
        for cycle in cycles:
            pts = [int(p) - 1 for p in cycle]
            for p in pts:
                if p < 0 or p >= degree:
                    raise ValueError(f"point {p + 1} outside 1..{degree}")
                if touched[p]:
                    raise ValueError(f"cycles are not disjoint at point {p + 1}")
                touched[p] = True
            for a, b in zip(pts, pts[1:] + pts[:1]):
                img[a] = b
        return cls(img, check=False)

    @property
    def degree(self) -> int:
        return int(self._img.size)

    @property
    def array(self) -> np.ndarray:
        """0-based images."""
        return self._img

    def __call__(self, point: int) -> int:
        return int(self._img[point - 1]) + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise ValueError("permutations act on different point sets")
        return Permutation(other._img[self._img], check=False)

    def inverse(self) -> "Permutation":
        inv = np.empty_like(self._img)
        inv[self._img] = np.arange(self.degree, dtype=self._img.dtype)
        return Permutation(inv, check=False)

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Permutation.identity(self.degree)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def commutator(self, other: "Permutation") -> "Permutation":
        """[p, q] = p^-1 q^-1 p q."""
        return self.inverse() * other.inverse() * self * other

    def conjugate(self, by: "Permutation") -> "Permutation":
        """p^q = q^-1 p q."""
        return by.inverse() * self * by

    def is_identity(self) -> bool:
        return bool(np.array_equal(self._img, np.arange(self.degree)))

    def is_involution(self) -> bool:
        return (self * self).is_identity() and not self.is_identity()

    def fixes(self, point: int) -> bool:
        return self(point) == point

    def cycles(self) -> List[Tuple[int, ...]]:
        """Nontrivial cycles, 1-based, each starting at its smallest point."""
        img = self._img.tolist()
        seen = [False] * len(img)
        out = []
        for start in range(len(img)):
            if seen[start] or img[start] == start:
                continue
            cycle = [start + 1]
            seen[start] = True
            p = img[start]
            while p != start:
                seen[p] = True
                cycle.append(p + 1)
                p = img[p]
            out.append(tuple(cycle))
        return out

    def cycle_length(self, point: int) -> int:
        k, p = 1, self(point)
        while p != point:
            p = self(p)
            k += 1
        return k

    def order(self) -> int:
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and np.array_equal(self._img, other._img)

    def __hash__(self) -> int:
        return hash(self._img.tobytes())

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation(degree={self.degree}, {self})"


class _Level:
    """One stabilizer: base point, strong generators, orbit transversal."""

    __slots__ = ("base", "gens", "transversal", "inverses")

    def __init__(self, base: int):
        self.base = base
        self.gens: List[np.ndarray] = []
        self.transversal: Dict[int, np.ndarray] = {}
        self.inverses: Dict[int, np.ndarray] = {}

    def rebuild(self, identity: np.ndarray) -> None:
        # u[p] maps the base point to p
        transversal = {self.base: identity}
        queue = [self.base]
        head = 0
        while head < len(queue):
            p = queue[head]
            head += 1
            u = transversal[p]
            for s in self.gens:
                q = int(s[p])
                if q not in transversal:
                    transversal[q] = s[u]
                    queue.append(q)
        self.transversal = transversal
        self.inverses = {}
        for p, u in transversal.items():
            inv = np.empty_like(u)
            inv[u] = identity
            self.inverses[p] = inv


class PermGroup:
    """A permutation group with a deterministic Schreier–Sims stabilizer chain."""

    def __init__(self, gens: Sequence[Permutation], degree: Optional[int] = None):
        gens = list(gens)
        if degree is None:
            degree = gens[0].degree if gens else 0
        for g in gens:
            if g.degree != degree:
                raise ValueError("all generators must act on the same point set")
        self.degree = degree
        self.generators: Tuple[Permutation, ...] = tuple(gens)
        self._identity = np.arange(degree, dtype=_dtype(degree))
        self._levels: List[_Level] = []
        self._build()

    def _sift(self, g: np.ndarray, start: int) -> Tuple[np.ndarray, int]:
        for k in range(start, len(self._levels)):
            level = self._levels[k]
            b = int(g[level.base])
            inv = level.inverses.get(b)
            if inv is None:
                return g, k
            g = inv[g]
        return g, len(self._levels)

    def _is_identity(self, g: np.ndarray) -> bool:
        return bool(np.array_equal(g, self._identity))

    def _place(self, g: np.ndarray, depth: int, start: int) -> None:
        """Add ``g`` as a strong generator of levels start..depth."""
        if depth == len(self._levels):
            moved = np.flatnonzero(g != self._identity)
            self._levels.append(_Level(int(moved[0])))
        for k in range(start, depth + 1):
            self._levels[k].gens.append(g)
        for k in range(start, depth + 1):
            self._levels[k].rebuild(self._identity)

    def _build(self) -> None:
        for gen in self.generators:
            g = gen.array.astype(self._identity.dtype)
            residue, depth = self._sift(g, 0)
            if not self._is_identity(residue):
                self._place(residue, depth, 0)

        i = len(self._levels) - 1
        while i >= 0:
            level = self._levels[i]
            added = False
            for p, u in list(level.transversal.items()):
                for s in list(level.gens):
                    # Schreier generator u_p s u_{p.s}^-1
                    q = int(s[p])
                    h = level.inverses[q][s[u]]
                    residue, depth = self._sift(h, i + 1)
                    if not self._is_identity(residue):
                        self._place(residue, depth, i + 1)
                        i = depth
                        added = True
                        break
                if added:
                    break
            if not added:
                i -= 1
        logger.debug(f"Stabilizer chain on {self.degree} points: base {self.base}, order {self.order()}")

    @property
    def base(self) -> List[int]:
        return [lvl.base + 1 for lvl in self._levels]

    def orbit_sizes(self) -> List[int]:
        return [len(lvl.transversal) for lvl in self._levels]

    def order(self) -> int:
        return math.prod(self.orbit_sizes())

    def contains(self, perm: Permutation) -> bool:
        residue, _ = self._sift(perm.array.astype(self._identity.dtype), 0)
        return self._is_identity(residue)

    def orbit(self, point: int) -> set[int]:
        seen = {point - 1}
        queue = [point - 1]
        images = [g.array for g in self.generators]
        while queue:
            p = queue.pop()
            for img in images:
                q = int(img[p])
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        return {p + 1 for p in seen}

    def is_transitive(self) -> bool:
        return self.degree == 0 or len(self.orbit(1)) == self.degree


def group_order(gens: Sequence[Permutation]) -> int:
    if not gens:
        return 1
    return PermGroup(gens).order()


def evaluate_word(gens: Sequence[Permutation], word: Word) -> Permutation:
    result = Permutation.identity(gens[0].degree)
    for x in word:
        result = result * gens[x]
    return result


def evaluate_power(gens: Sequence[Permutation], base: Word, k: int) -> Permutation:
    return evaluate_word(gens, base) ** k


def check_relations(
    gens: Sequence[Permutation],
    presentation: Presentation,
    exact_orders: bool = False,
) -> bool:
    """True iff r_i -> gens[i] satisfies every relator of the presentation.

    With ``exact_orders`` every exponent listed as X^k must also be the true
    order of X.
    """
    if len(gens) != 3:
        raise ValueError("need exactly three permutations")
    for word in presentation.words:
        if not evaluate_word(gens, word).is_identity():
            logger.debug(f"Relator {word} fails")
            return False
    if exact_orders:
        for base, k in presentation.listed_exponents:
            if evaluate_word(gens, base).order() != k:
                logger.debug(f"Listed exponent {k} of {base} is not the true order")
                return False
    return True


def regular_rep(table: CosetTable) -> Tuple[Permutation, Permutation, Permutation]:
    """The three column permutations of a table."""
    return tuple(Permutation(table.column(i), check=False) for i in range(3))  # type: ignore[return-value]


def table_from_permutations(perms: Sequence[Permutation], *, regular: bool = True) -> CosetTable:
    if len(perms) != 3:
        raise TableError("a table needs exactly three permutations")
    return CosetTable.from_columns([p.array for p in perms], regular=regular)
