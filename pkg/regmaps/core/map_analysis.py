"""Map-theoretic invariants of a regular table.

Flags are cosets. Vertices, edges and faces are the orbits of the
two-generator subgroups <r1, r2>, <r0, r2> and <r0, r1>; they are counted
as connected components of the flag graph restricted to two columns.
"""

from __future__ import annotations

import math
from typing import Optional, Tuple

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from ..errors import NotProperError
from ..models.map_record import RegularMapRecord
from ..utils.logging import get_logger
from .coset_table import CanonicalTable, CosetTable, canonicalize, element_order, subgroup_closure
from .descent import is_proper
from .presets import derived_generator_words
from .words import Word

logger = get_logger(__name__)

ROTATION_GENERATORS = ((0, 1), (1, 2))

VERTEX_COLUMNS = (1, 2)
EDGE_COLUMNS = (0, 2)
FACE_COLUMNS = (0, 1)

# Images of (r0, r2): any ordered pair of distinct elements of {r0, r2, r0 r2}
REFLECTION_PAIRS: Tuple[Tuple[Word, Word], ...] = (
    ((0,), (2,)),
    ((2,), (0,)),
    ((0, 2), (2,)),
    ((2,), (0, 2)),
    ((0,), (0, 2)),
    ((0, 2), (0,)),
)


def _exponent(value: int) -> Optional[int]:
    if value > 0 and value & (value - 1) == 0:
        return value.bit_length() - 1
    return None


def orbit_labels(table: CosetTable, columns: Tuple[int, ...]) -> Tuple[int, np.ndarray]:
    """Number of orbits of <r_i : i in columns> and the orbit label of each flag."""
    size = table.size
    src = np.concatenate([np.arange(size)] * len(columns))
    dst = np.concatenate([table.column(i) for i in columns])
    graph = coo_matrix((np.ones(src.size, dtype=np.int8), (src, dst)), shape=(size, size))
    count, labels = connected_components(graph, directed=False)
    return int(count), labels


def require_proper(table: CosetTable) -> None:
    if not is_proper(table):
        raise NotProperError(
            "map analysis needs r0, r1, r2 of order 2 and r0 != r2; this quotient is degenerate"
        )


def is_orientable(table: CosetTable) -> bool:
    """True iff the rotation subgroup has index 2."""
    return 2 * len(subgroup_closure(table, ROTATION_GENERATORS)) == table.size


def is_bipartite(table: CosetTable) -> bool:
    """2-colouring of the flag graph under all three generator matchings."""
    rows = table.rows.tolist()
    colour = [-1] * table.size
    colour[0] = 0
    stack = [0]
    while stack:
        c = stack.pop()
        for d in rows[c]:
            if colour[d] < 0:
                colour[d] = colour[c] ^ 1
                stack.append(d)
            elif colour[d] == colour[c]:
                return False
    return True


def derived_subgroup(table: CosetTable) -> set[int]:
    return subgroup_closure(table, derived_generator_words())


def frattini_rank(table: CosetTable) -> int:
    """Size of a minimal generating set; Phi(G) = G' for quotients of Delta."""
    index = table.size // len(derived_subgroup(table))
    rank = _exponent(index)
    if rank is None:
        raise ValueError(f"derived subgroup has index {index}, which is not a power of 2")
    return rank


def simple_underlying(table: CosetTable) -> bool:
    """No loops and no two edges with the same pair of endpoints."""
    _, vertex = orbit_labels(table, VERTEX_COLUMNS)
    edge_count, edge = orbit_labels(table, EDGE_COLUMNS)
    seen_edges = np.zeros(edge_count, dtype=bool)
    endpoints: set[Tuple[int, int]] = set()
    across = table.column(0)
    for f in range(table.size):
        e = edge[f]
        if seen_edges[e]:
            continue
        seen_edges[e] = True
        u, v = int(vertex[f]), int(vertex[across[f]])
        if u == v:
            return False
        pair = (u, v) if u < v else (v, u)
        if pair in endpoints:
            return False
        endpoints.add(pair)
    return True


def dual(table: CosetTable) -> CanonicalTable:
    """Exchange the roles of r0 and r2."""
    return canonicalize(table.swap_columns(0, 2))


def retriple(table: CosetTable, first: Word, last: Word) -> CanonicalTable:
    """Table of the same group on the generating triple (first, r1, last)."""
    columns = [table.word_permutation(first), table.column(1), table.word_permutation(last)]
    return canonicalize(CosetTable.from_columns(columns, regular=True))


def automorphic_keys(table: CosetTable) -> set[bytes]:
    """Canonical keys of the triples obtained through the automorphisms of Delta fixing r1."""
    return {retriple(table, first, last).key for first, last in REFLECTION_PAIRS}


def class_key(table: CosetTable) -> bytes:
    """Smallest key in :func:`automorphic_keys`; equal exactly for Delta-automorphic tables."""
    return min(automorphic_keys(table))


def analyze(table: CosetTable) -> RegularMapRecord:
    """Full invariant record of a proper regular map."""
    require_proper(table)
    flags = table.size
    face_length = element_order(table, (0, 1))
    valency = element_order(table, (1, 2))
    vertices, _ = orbit_labels(table, VERTEX_COLUMNS)
    edges, _ = orbit_labels(table, EDGE_COLUMNS)
    faces, _ = orbit_labels(table, FACE_COLUMNS)
    chi = vertices - edges + faces
    orientable = is_orientable(table)
    genus = (2 - chi) // 2 if orientable else 2 - chi
    if _exponent(face_length) is None or _exponent(valency) is None:
        logger.info(f"Map of order {flags} has type {{{face_length}, {valency}}}, not a 2-power type")
    return RegularMapRecord(
        flags=flags,
        order_exp=_exponent(flags),
        face_length=face_length,
        valency=valency,
        s_exp=_exponent(face_length),
        t_exp=_exponent(valency),
        vertices=vertices,
        edges=edges,
        faces=faces,
        euler_characteristic=chi,
        orientable=orientable,
        genus=genus,
        simple_underlying=simple_underlying(table),
        frattini_rank=frattini_rank(table) if _exponent(flags) is not None else None,
        canonical_key_digest=canonicalize(table).digest,
    )


def type_exponents(table: CosetTable) -> Tuple[int, int]:
    """(log2 o(r0 r1), log2 o(r1 r2)) for a table of 2-power order."""
    return (
        int(math.log2(element_order(table, (0, 1)))),
        int(math.log2(element_order(table, (1, 2)))),
    )
