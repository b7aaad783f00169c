"""Todd–Coxeter coset enumeration for presentations on three involutions.

The table is a flat list with entry ``3*c + x`` holding the coset reached
from ``c`` by ``r_x`` (or ``None``). Because every generator is an
involution the table is kept symmetric: ``c.x = d`` iff ``d.x = c``, fixed
points allowed. Coincidences are resolved with a merge-find forest over
coset ids in which the smaller id always survives.

Two strategies are available. ``felsch`` defines the first undefined entry
and immediately scans every relator conjugate through each new entry;
``hlt`` scans and fills every relator at every coset in turn.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..errors import CosetLimitExceeded, TableError
from ..models.limits import EnumerationLimits
from ..models.presentation import Presentation
from ..utils.logging import get_logger
from .coset_table import CanonicalTable, CosetTable, canonicalize
from .relators import parse_word
from .words import GENERATOR_COUNT, Word, as_word, cyclic_conjugates, cyclically_reduce, free_reduce

logger = get_logger(__name__)

SubgroupWord = Union[str, Sequence[int]]


def _prepare_relators(words: Iterable[Word]) -> List[Word]:
    seen: dict[Word, None] = {}
    for w in words:
        r = cyclically_reduce(w)
        if r:
            seen.setdefault(r, None)
    return list(seen)


def _as_subgroup_word(w: SubgroupWord) -> Word:
    if isinstance(w, str):
        return parse_word(w)
    try:
        return free_reduce(as_word(w))
    except (TypeError, ValueError) as e:
        raise TableError(f"malformed subgroup word {w!r}: {str(e)}") from e


class CosetEnumerator:
    """One enumeration run; use :func:`todd_coxeter` for the common case."""

    def __init__(
        self,
        presentation: Presentation,
        subgroup_words: Iterable[SubgroupWord] = (),
        limits: Optional[EnumerationLimits] = None,
    ):
        self.presentation = presentation
        self.limits = limits or EnumerationLimits()
        self.relators = _prepare_relators(presentation.nontrivial_words)
        self.subgroup_words = [w for w in (_as_subgroup_word(s) for s in subgroup_words) if w]

        self._table: List[Optional[int]] = [None] * GENERATOR_COUNT
        self._p: List[int] = [0]
        self._deductions: List[Tuple[int, int]] = []
        self._track_deductions = self.limits.strategy == "felsch"
        self.defined = 1

        # Relator conjugates (and inverses) grouped by first letter
        self._conjugates: List[List[Word]] = [[] for _ in range(GENERATOR_COUNT)]
        seen: set[Word] = set()
        for r in self.relators:
            for c in cyclic_conjugates(r):
                if c not in seen:
                    seen.add(c)
                    self._conjugates[c[0]].append(c)

    # -- merge-find ---------------------------------------------------

    def _rep(self, c: int) -> int:
        p = self._p
        r = c
        while p[r] != r:
            r = p[r]
        while p[c] != r:
            nxt = p[c]
            p[c] = r
            c = nxt
        return r

    def _merge(self, a: int, b: int, queue: deque) -> None:
        a = self._rep(a)
        b = self._rep(b)
        if a == b:
            return
        lo, hi = (a, b) if a < b else (b, a)
        self._p[hi] = lo
        queue.append(hi)

    def _coincidence(self, a: int, b: int) -> None:
        t = self._table
        queue: deque = deque()
        self._merge(a, b, queue)
        while queue:
            g = queue.popleft()
            for x in range(GENERATOR_COUNT):
                d = t[3 * g + x]
                if d is None:
                    continue
                t[3 * g + x] = None
                if d != g and t[3 * d + x] == g:
                    t[3 * d + x] = None
                mu = self._rep(g)
                nu = self._rep(d)
                a = t[3 * mu + x]
                if a is not None:
                    self._merge(nu, a, queue)
                else:
                    b = t[3 * nu + x]
                    if b is not None:
                        self._merge(mu, b, queue)
                    else:
                        t[3 * mu + x] = nu
                        t[3 * nu + x] = mu
                if self._track_deductions:
                    self._deductions.append((mu, x))

    # -- definitions and scans -----------------------------------------

    def _new_coset(self) -> int:
        n = len(self._p)
        if n >= self.limits.max_cosets:
            raise CosetLimitExceeded(self.limits.max_cosets, n)
        self._p.append(n)
        self._table.extend((None, None, None))
        self.defined += 1
        return n

    def _define(self, c: int, x: int) -> None:
        d = self._new_coset()
        t = self._table
        t[3 * c + x] = d
        t[3 * d + x] = c
        if self._track_deductions:
            self._deductions.append((c, x))

    def _scan(self, alpha: int, word: Word, fill: bool) -> None:
        t = self._table
        f, i = alpha, 0
        b, j = alpha, len(word) - 1
        while True:
            while i <= j:
                nxt = t[3 * f + word[i]]
                if nxt is None:
                    break
                f = nxt
                i += 1
            if i > j:
                if f != b:
                    self._coincidence(f, b)
                return
            while j >= i:
                nxt = t[3 * b + word[j]]
                if nxt is None:
                    break
                b = nxt
                j -= 1
            if j < i:
                self._coincidence(f, b)
                return
            if j == i:
                x = word[i]
                t[3 * f + x] = b
                t[3 * b + x] = f
                if self._track_deductions:
                    self._deductions.append((f, x))
                return
            if not fill:
                return
            self._define(f, word[i])

    def _process_deductions(self) -> None:
        stack = self._deductions
        p = self._p
        t = self._table
        conj = self._conjugates
        while stack:
            alpha, x = stack.pop()
            if p[alpha] == alpha:
                for w in conj[x]:
                    self._scan(alpha, w, fill=False)
                    if p[alpha] != alpha:
                        break
            beta = t[3 * alpha + x]
            if beta is not None and p[beta] == beta:
                for w in conj[x]:
                    self._scan(beta, w, fill=False)
                    if p[beta] != beta:
                        break

    def _next_gap(self, start: int) -> Optional[Tuple[int, int]]:
        p = self._p
        t = self._table
        for c in range(start, len(p)):
            if p[c] != c:
                continue
            base = 3 * c
            for x in range(GENERATOR_COUNT):
                if t[base + x] is None:
                    return c, x
        return None

    # -- strategies ----------------------------------------------------

    def _run_felsch(self) -> None:
        for w in self.subgroup_words:
            self._scan(0, w, fill=True)
        self._process_deductions()
        alpha = 0
        while True:
            gap = self._next_gap(alpha)
            if gap is None:
                gap = self._next_gap(0)
                if gap is None:
                    return
            alpha, x = gap
            self._define(alpha, x)
            self._process_deductions()

    def _run_hlt(self) -> None:
        for w in self.subgroup_words:
            self._scan(0, w, fill=True)
        relators = sorted(self.relators, key=len)
        p = self._p
        t = self._table
        while True:
            alpha = 0
            while alpha < len(p):
                for w in relators:
                    if p[alpha] != alpha:
                        break
                    self._scan(alpha, w, fill=True)
                if p[alpha] == alpha:
                    for x in range(GENERATOR_COUNT):
                        if t[3 * alpha + x] is None:
                            self._define(alpha, x)
                alpha += 1
            if self._next_gap(0) is None:
                return

    # -- result --------------------------------------------------------

    def _compact(self) -> np.ndarray:
        p = self._p
        t = self._table
        live = [c for c in range(len(p)) if p[c] == c]
        index = {c: k for k, c in enumerate(live)}
        rows = np.empty((len(live), GENERATOR_COUNT), dtype=np.int64)
        for k, c in enumerate(live):
            for x in range(GENERATOR_COUNT):
                d = t[3 * c + x]
                if d is None or d not in index:
                    raise TableError(f"enumeration left coset {c} incomplete")
                rows[k, x] = index[d]
        return rows

    def run(self) -> CosetTable:
        if self.limits.strategy == "felsch":
            self._run_felsch()
        else:
            self._run_hlt()
        rows = self._compact()
        table = CosetTable(rows, regular=not self.subgroup_words)
        ids = np.arange(table.size)
        for w in self.relators:
            if not np.array_equal(table.word_permutation(w), ids):
                raise TableError(f"relator {w} does not close at every coset")
        logger.debug(
            f"Enumeration finished with {table.size} cosets "
            f"({self.defined} defined, strategy {self.limits.strategy})"
        )
        return table


def todd_coxeter(
    presentation: Presentation,
    subgens: Iterable[SubgroupWord] = (),
    limits: Optional[EnumerationLimits] = None,
) -> CosetTable:
    """Complete table of the action on the cosets of <subgens>."""
    return CosetEnumerator(presentation, subgens, limits).run()


def regular_table(presentation: Presentation, limits: Optional[EnumerationLimits] = None) -> CanonicalTable:
    """Canonical table of the presentation acting on itself."""
    return canonicalize(todd_coxeter(presentation, (), limits))
