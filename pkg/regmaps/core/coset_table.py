"""Complete coset tables of the extended triangle group and their canonical forms.

A table has one row per coset (flag) and one column per generator; entry
``(c, i)`` is the coset reached from ``c`` by ``r_i``. Rows are 0-based in
memory; coset 0 is the subgroup coset (the base flag). Serialized keys are
1-based.
"""

from __future__ import annotations

import hashlib
from collections import deque
from typing import Iterable, Optional, Sequence

import numpy as np

from ..errors import DisconnectedTableError, IncompleteTableError, TableError
from .words import GENERATOR_COUNT, Word, invert


def _key_dtype(size: int) -> np.dtype:
    # Ids are serialized 1-based, so the widest id is ``size``
    if size < 2 ** 8:
        return np.dtype(">u1")
    if size < 2 ** 16:
        return np.dtype(">u2")
    return np.dtype(">u4")


class CosetTable:
    """An immutable, complete, involutory coset table."""

    __slots__ = ("_rows", "regular")

    def __init__(self, rows: Sequence[Sequence[int]] | np.ndarray, *, regular: bool = False, check: bool = True):
        arr = np.array(rows, dtype=np.int64, copy=True)
        if arr.ndim != 2 or arr.shape[1] != GENERATOR_COUNT or arr.shape[0] == 0:
            raise TableError(f"a coset table needs shape (N, 3), got {arr.shape}")
        if check:
            if (arr < 0).any():
                raise IncompleteTableError("coset table has undefined entries")
            if (arr >= arr.shape[0]).any():
                raise TableError("coset table entry out of range")
            ids = np.arange(arr.shape[0])
            for i in range(GENERATOR_COUNT):
                if not np.array_equal(arr[arr[:, i], i], ids):
                    raise TableError(f"column {i} is not an involution")
        arr.flags.writeable = False
        self._rows = arr
        self.regular = regular

    @property
    def rows(self) -> np.ndarray:
        return self._rows

    @property
    def size(self) -> int:
        return int(self._rows.shape[0])

    def __len__(self) -> int:
        return self.size

    def entry(self, coset: int, generator: int) -> int:
        return int(self._rows[coset, generator])

    def column(self, generator: int) -> np.ndarray:
        return self._rows[:, generator]

    def trace(self, coset: int, word: Iterable[int]) -> int:
        """Coset reached from ``coset`` by reading ``word`` left to right."""
        rows = self._rows
        c = coset
        for x in word:
            c = rows[c, x]
        return int(c)

    def word_permutation(self, word: Iterable[int]) -> np.ndarray:
        """Images of every coset under ``word``, as an index array."""
        perm = np.arange(self.size)
        for x in word:
            perm = self._rows[perm, x]
        return perm

    def is_connected(self) -> bool:
        return len(bfs_order(self)) == self.size

    def relabel(self, order: Sequence[int] | np.ndarray) -> "CosetTable":
        """Table whose coset ``k`` is old coset ``order[k]``."""
        order = np.asarray(order, dtype=np.int64)
        inverse = np.empty_like(order)
        inverse[order] = np.arange(order.size)
        return CosetTable(inverse[self._rows[order]], regular=self.regular, check=False)

    def swap_columns(self, i: int, j: int) -> "CosetTable":
        cols = list(range(GENERATOR_COUNT))
        cols[i], cols[j] = cols[j], cols[i]
        return CosetTable(self._rows[:, cols], regular=self.regular, check=False)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CosetTable) and np.array_equal(self._rows, other._rows)

    def __hash__(self) -> int:
        return hash(self._rows.tobytes())

    def __repr__(self) -> str:
        return f"{type(self).__name__}(size={self.size}, regular={self.regular})"

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], *, regular: bool = False) -> "CosetTable":
        return cls(np.stack([np.asarray(c, dtype=np.int64) for c in columns], axis=1), regular=regular)


class CanonicalTable(CosetTable):
    """A table in breadth-first normal form, identified by its key."""

    __slots__ = ("_key",)

    def __init__(self, rows, *, regular: bool = False, check: bool = True):
        super().__init__(rows, regular=regular, check=check)
        self._key: Optional[bytes] = None

    @property
    def key(self) -> bytes:
        if self._key is None:
            self._key = ((self._rows + 1).astype(_key_dtype(self.size))).tobytes()
        return self._key

    @property
    def digest(self) -> str:
        return key_digest(self.key)

    @classmethod
    def from_key(cls, key: bytes, *, regular: bool = True) -> "CanonicalTable":
        # Width is the smallest of 1, 2, 4 bytes that fits the row count
        for width, dtype in ((1, ">u1"), (2, ">u2"), (4, ">u4")):
            if len(key) % (3 * width):
                continue
            size = len(key) // (3 * width)
            if _key_dtype(size).itemsize == width:
                rows = np.frombuffer(key, dtype=dtype).astype(np.int64).reshape(size, 3) - 1
                return cls(rows, regular=regular)
        raise TableError("byte string is not a canonical key")


def key_digest(key: bytes) -> str:
    return hashlib.sha256(key).hexdigest()


def bfs_order(table: CosetTable, start: int = 0) -> list[int]:
    """Cosets in first-seen order from ``start``, generators tried as 0, 1, 2."""
    rows = table.rows.tolist()
    seen = [False] * table.size
    seen[start] = True
    order = [start]
    head = 0
    while head < len(order):
        c = order[head]
        head += 1
        for d in rows[c]:
            if not seen[d]:
                seen[d] = True
                order.append(d)
    return order


def canonicalize(table: CosetTable) -> CanonicalTable:
    """Relabel by breadth-first search from coset 0."""
    if isinstance(table, CanonicalTable):
        return table
    if (table.rows < 0).any():
        raise IncompleteTableError("cannot canonicalize an incomplete table")
    order = bfs_order(table)
    if len(order) != table.size:
        raise DisconnectedTableError(f"only {len(order)} of {table.size} cosets reachable from coset 1")
    relabeled = table.relabel(order)
    return CanonicalTable(relabeled.rows, regular=table.regular, check=False)


def spanning_tree(table: CosetTable) -> tuple[np.ndarray, np.ndarray, list[int]]:
    """Breadth-first tree: ``parent[d]`` and ``label[d]`` with ``parent[d] . r_label[d] = d``.

    The root has parent and label -1. Also returns the visiting order.
    """
    rows = table.rows.tolist()
    size = table.size
    parent = np.full(size, -1, dtype=np.int64)
    label = np.full(size, -1, dtype=np.int64)
    seen = [False] * size
    seen[0] = True
    order = [0]
    head = 0
    while head < len(order):
        c = order[head]
        head += 1
        for x, d in enumerate(rows[c]):
            if not seen[d]:
                seen[d] = True
                parent[d] = c
                label[d] = x
                order.append(d)
    if len(order) != size:
        raise DisconnectedTableError("table is not connected")
    return parent, label, order


def element_order(table: CosetTable, word: Sequence[int]) -> int:
    """Order of the element ``word`` in a regular table."""
    if (table.rows < 0).any():
        raise IncompleteTableError("element orders need a complete table")
    if not word:
        return 1
    perm = table.word_permutation(word)
    k, c = 1, int(perm[0])
    while c != 0:
        c = int(perm[c])
        k += 1
        if k > table.size:
            raise TableError("word does not act as a permutation of finite order on coset 1")
    return k


def subgroup_closure(table: CosetTable, gens: Iterable[Sequence[int]]) -> set[int]:
    """Flags reachable from coset 0 under the subgroup generated by ``gens``."""
    perms = []
    for w in gens:
        w = tuple(w)
        perms.append(table.word_permutation(w).tolist())
        perms.append(table.word_permutation(invert(w)).tolist())
    seen = {0}
    queue = deque([0])
    while queue:
        c = queue.popleft()
        for p in perms:
            d = p[c]
            if d not in seen:
                seen.add(d)
                queue.append(d)
    return seen


def left_translation(table: CosetTable, target: int) -> np.ndarray:
    """The table automorphism sending coset 0 to ``target``.

    For a regular table coset ``c`` stands for an element g_c and the result
    maps ``c`` to the coset of g_target * g_c.
    """
    parent, label, order = spanning_tree(table)
    rows = table.rows
    image = np.full(table.size, -1, dtype=np.int64)
    image[0] = target
    for d in order[1:]:
        image[d] = rows[image[parent[d]], label[d]]
    if not np.array_equal(rows[image], image[rows]):
        raise TableError(f"no automorphism maps coset 1 to coset {target + 1}; table is not regular")
    return image


def is_regular(table: CosetTable) -> bool:
    """True iff every coset is the image of 0 under a table automorphism."""
    try:
        for c in range(table.size):
            left_translation(table, c)
    except TableError:
        return False
    return True


def quotient_by_central(table: CosetTable, central: int) -> CanonicalTable:
    """Quotient of a regular table by the order-2 central subgroup at coset ``central``.

    The blocks are the pairs {c, c.z}; z must be central so that the blocks
    form a system of imprimitivity.
    """
    if central == 0:
        raise TableError("the identity coset does not generate an order-2 subgroup")
    partner = left_translation(table, central)
    if not np.array_equal(partner[partner], np.arange(table.size)) or (partner == np.arange(table.size)).any():
        raise TableError(f"coset {central + 1} is not an involution")
    rows = table.rows
    # Central iff left and right multiplication by z agree on every coset
    z_word = path_word(table, central)
    if not np.array_equal(partner, table.word_permutation(z_word)):
        raise TableError(f"coset {central + 1} is not central")
    block = np.minimum(np.arange(table.size), partner)
    reps = np.flatnonzero(block == np.arange(table.size))
    index = np.full(table.size, -1, dtype=np.int64)
    index[reps] = np.arange(reps.size)
    quotient = index[block[rows[reps]]]
    return canonicalize(CosetTable(quotient, regular=True))


def path_word(table: CosetTable, coset: int) -> Word:
    """Tree word leading from coset 0 to ``coset``."""
    parent, label, _ = spanning_tree(table)
    letters = []
    c = coset
    while c != 0:
        letters.append(int(label[c]))
        c = int(parent[c])
    return tuple(reversed(letters))
