"""Brute-force oracles that share nothing with the descent machinery.

They work on plain Python lists and tuples; only the canonical form is
borrowed so that their answers can be compared key for key.
"""

from __future__ import annotations

import itertools
from typing import Dict, Iterator, List, Sequence, Set, Tuple

from regmaps.core.coset_table import CosetTable, canonicalize

Perm = Tuple[int, ...]


# -- small groups given by generating permutations ------------------------

def compose(p: Perm, q: Perm) -> Perm:
    """p then q."""
    return tuple(q[x] for x in p)


def closure(gens: Sequence[Perm]) -> List[Perm]:
    identity = tuple(range(len(gens[0])))
    elements = {identity: None}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = compose(g, s)
                if h not in elements:
                    elements[h] = None
                    nxt.append(h)
        frontier = nxt
    return sorted(elements)


def _cycle_perm(degree: int, *cycles: Sequence[int]) -> Perm:
    img = list(range(degree))
    for cycle in cycles:
        for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
            img[a] = b
    return tuple(img)


# Every group of order 1, 2, 4 or 8 that three involutions can generate,
# plus C4 and C4 x C2, which they cannot.
SMALL_GROUPS: Dict[str, List[Perm]] = {
    "C1": closure([(0,)]),
    "C2": closure([_cycle_perm(2, (0, 1))]),
    "C4": closure([_cycle_perm(4, (0, 1, 2, 3))]),
    "C2xC2": closure([_cycle_perm(4, (0, 1)), _cycle_perm(4, (2, 3))]),
    "C4xC2": closure([_cycle_perm(6, (0, 1, 2, 3)), _cycle_perm(6, (4, 5))]),
    "C2xC2xC2": closure([_cycle_perm(6, (0, 1)), _cycle_perm(6, (2, 3)), _cycle_perm(6, (4, 5))]),
    "D8": closure([_cycle_perm(4, (0, 1, 2, 3)), _cycle_perm(4, (0, 3), (1, 2))]),
}


def _table_of(elements: List[Perm], triple: Sequence[Perm]) -> CosetTable:
    index = {g: k for k, g in enumerate(elements)}
    rows = [[index[compose(g, x)] for x in triple] for g in elements]
    return CosetTable(rows, regular=True)


def quotient_keys(order: int, proper_only: bool = False) -> Set[bytes]:
    """Canonical keys of every quotient of Delta of the given order.

    Enumerates triples (a, b, c) with a^2 = b^2 = c^2 = (ac)^2 = 1 that
    generate one of the small groups above.
    """
    keys: Set[bytes] = set()
    for elements in SMALL_GROUPS.values():
        if len(elements) != order:
            continue
        identity = elements[0]
        involutive = [g for g in elements if compose(g, g) == identity]
        for a, b, c in itertools.product(involutive, repeat=3):
            ac = compose(a, c)
            if compose(ac, ac) != identity:
                continue
            if proper_only and (identity in (a, b, c) or a == c):
                continue
            if len(closure([a, b, c])) != order:
                continue
            keys.add(canonicalize(_table_of(elements, (a, b, c))).key)
    return keys


# -- double covers of a table ----------------------------------------------

def _tree(rows: List[List[int]]) -> Set[Tuple[int, int]]:
    """Directed tree edges (c, x) of a breadth-first spanning tree."""
    seen = {0}
    queue = [0]
    edges = set()
    for c in queue:
        for x, d in enumerate(rows[c]):
            if d not in seen:
                seen.add(d)
                queue.append(d)
                edges.add((c, x))
                edges.add((d, x))
    return edges


def _free_edges(rows: List[List[int]]) -> List[Tuple[int, int]]:
    tree = _tree(rows)
    out = []
    for c, row in enumerate(rows):
        for x, d in enumerate(row):
            if (c, x) not in tree and c <= d:
                out.append((c, x))
    return out


def _lift(rows: List[List[int]], flips: Dict[Tuple[int, int], int]) -> List[List[int]]:
    lifted = [[0, 0, 0] for _ in range(2 * len(rows))]
    for c, row in enumerate(rows):
        for x, d in enumerate(row):
            e = flips.get((min(c, d), x), 0)
            lifted[2 * c][x] = 2 * d + e
            lifted[2 * c + 1][x] = 2 * d + 1 - e
    return lifted


def _closes_delta(rows: List[List[int]]) -> bool:
    for c in range(len(rows)):
        e = c
        for x in (0, 2, 0, 2):
            e = rows[e][x]
        if e != c:
            return False
    return True


def _connected(rows: List[List[int]]) -> bool:
    seen = {0}
    queue = [0]
    for c in queue:
        for d in rows[c]:
            if d not in seen:
                seen.add(d)
                queue.append(d)
    return len(seen) == len(rows)


def _regular(rows: List[List[int]]) -> bool:
    """Every coset is the image of 0 under an automorphism of the table."""
    size = len(rows)
    for target in range(size):
        image = {0: target}
        queue = [0]
        for c in queue:
            for x, d in enumerate(rows[c]):
                want = rows[image[c]][x]
                if d in image:
                    if image[d] != want:
                        return False
                else:
                    image[d] = want
                    queue.append(d)
    return True


def double_covers(table: CosetTable) -> Iterator[List[List[int]]]:
    """Every lift of ``table`` to 2|table| cosets, one per flip pattern on the non-tree edges."""
    rows = table.rows.tolist()
    free = _free_edges(rows)
    for pattern in itertools.product((0, 1), repeat=len(free)):
        yield _lift(rows, dict(zip(free, pattern)))


def module_dims(table: CosetTable) -> Tuple[int, int]:
    """(dim V, dim W) counted from the lifts.

    Lifts closing the Delta relator are the functionals on V; among them
    the connected regular ones are the nonzero functionals on W.
    """
    closing = 0
    regular = 0
    for lifted in double_covers(table):
        if not _closes_delta(lifted):
            continue
        closing += 1
        if _connected(lifted) and _regular(lifted):
            regular += 1
    return closing.bit_length() - 1, (regular + 1).bit_length() - 1


def child_keys(table: CosetTable) -> Set[bytes]:
    """Canonical keys of every regular quotient of order 2|table| covering ``table``."""
    keys = set()
    for lifted in double_covers(table):
        if _closes_delta(lifted) and _connected(lifted) and _regular(lifted):
            keys.add(canonicalize(CosetTable(lifted, regular=True)).key)
    return keys


# -- map invariants ----------------------------------------------------------

def hom_to_c2_rank(table: CosetTable) -> int:
    """log2 of the number of homomorphisms to C2, by 2-colouring the flags."""
    rows = table.rows.tolist()
    count = 0
    for signs in itertools.product((0, 1), repeat=3):
        colour = {0: 0}
        queue = [0]
        ok = True
        for c in queue:
            for x, d in enumerate(rows[c]):
                want = colour[c] ^ signs[x]
                if d not in colour:
                    colour[d] = want
                    queue.append(d)
                elif colour[d] != want:
                    ok = False
        if ok:
            count += 1
    return count.bit_length() - 1


def _orbits(rows: List[List[int]], columns: Sequence[int]) -> List[int]:
    label = [-1] * len(rows)
    k = 0
    for start in range(len(rows)):
        if label[start] >= 0:
            continue
        label[start] = k
        queue = [start]
        for c in queue:
            for x in columns:
                d = rows[c][x]
                if label[d] < 0:
                    label[d] = k
                    queue.append(d)
        k += 1
    return label


def endpoint_table(table: CosetTable) -> Dict[int, Tuple[int, int]]:
    """Edge orbit -> sorted pair of vertex orbits at its two ends."""
    rows = table.rows.tolist()
    vertex = _orbits(rows, (1, 2))
    edge = _orbits(rows, (0, 2))
    ends = {}
    for f in range(len(rows)):
        ends.setdefault(edge[f], tuple(sorted((vertex[f], vertex[rows[f][0]]))))
    return ends


def is_simple(table: CosetTable) -> bool:
    ends = list(endpoint_table(table).values())
    return all(u != v for u, v in ends) and len(set(ends)) == len(ends)
