"""Descent through the 2-quotients of the extended triangle group.

A node is a finite regular quotient G = Delta/K given by its canonical
table. The kernel K is generated by Schreier generators, one per non-tree
edge of the breadth-first spanning tree. Working modulo [K, K]K^2 turns K
into the GF(2) module V on which Delta acts by conjugation. Index-2
subgroups of K that are normal in Delta and contain [K, Delta]K^2 are the
hyperplanes through the coinvariant relations, so every nonzero functional
on the coinvariant space W gives a quotient of order 2|G|.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from ..errors import TableError
from ..utils.logging import get_logger
from .coset_table import CanonicalTable, CosetTable, bfs_order, canonicalize, left_translation, spanning_tree
from .gf2 import GF2Basis, bit, iter_bits, parity, to_matrix

logger = get_logger(__name__)

# (r0 r2)^2, the only defining relator of Delta besides the involutions
DELTA_CYCLE = (0, 2, 0, 2)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class QuotientNode:
    """A regular quotient of Delta of order 2^order_exp."""

    table: CanonicalTable
    order_exp: int
    parent_digest: Optional[str] = None
    central_flag: Optional[int] = None
    hyperplane: Optional[int] = None

    @property
    def key(self) -> bytes:
        return self.table.key

    @property
    def digest(self) -> str:
        return self.table.digest

    @property
    def size(self) -> int:
        return self.table.size


def trivial_node() -> QuotientNode:
    return QuotientNode(table=CanonicalTable([[0, 0, 0]], regular=True), order_exp=0)


def node_from_table(table: CosetTable, parent_digest: Optional[str] = None) -> QuotientNode:
    canon = canonicalize(table)
    size = canon.size
    k = size.bit_length() - 1
    if size != 1 << k:
        raise TableError(f"a quotient node needs 2-power order, got {size}")
    return QuotientNode(table=canon, order_exp=k, parent_digest=parent_digest)


@dataclass
class ModuleSpace:
    """V = K/[K,K]K^2 with the conjugation action of r0, r1, r2.

    Symbols are the Schreier generators; ``relations`` is the echelon span
    of the rewritten relators; V is the quotient of the symbol space by it.
    ``images[i][b]`` is the packed image of symbol ``b`` under r_i.
    """

    table: CanonicalTable
    symbols: Dict[Edge, int]
    relations: GF2Basis
    images: List[List[int]] = field(repr=False)

    @property
    def symbol_count(self) -> int:
        return len(self.symbols)

    @property
    def dim(self) -> int:
        return self.symbol_count - self.relations.rank

    def symbol(self, coset: int, generator: int) -> int:
        """Packed symbol of the edge at (coset, generator); 0 on tree edges."""
        d = self.table.entry(coset, generator)
        key = (min(coset, d), generator)
        b = self.symbols.get(key)
        return 0 if b is None else bit(b)

    def act(self, generator: int, v: int) -> int:
        out = 0
        images = self.images[generator]
        for b in iter_bits(v):
            out ^= images[b]
        return out

    def action_matrix(self, generator: int) -> np.ndarray:
        """Matrix of r_generator on V in the basis of free symbols."""
        free = self.relations.free_columns()
        columns = [self.relations.quotient_coordinates(self.images[generator][b]) for b in free]
        return to_matrix(columns, len(free))


def schreier_module(node: QuotientNode | CanonicalTable) -> ModuleSpace:
    """Reidemeister–Schreier rewriting of the kernel, reduced mod 2."""
    table = node.table if isinstance(node, QuotientNode) else node
    rows = table.rows.tolist()
    size = table.size
    parent, label, order = spanning_tree(table)

    # One symbol per undirected non-tree edge, loops included
    symbols: Dict[Edge, int] = {}
    for c in range(size):
        for x in range(3):
            d = rows[c][x]
            if (parent[d] == c and label[d] == x) or (parent[c] == d and label[c] == x):
                continue
            key = (min(c, d), x)
            if key not in symbols:
                symbols[key] = len(symbols)

    def sym(c: int, x: int) -> int:
        d = rows[c][x]
        b = symbols.get((min(c, d), x))
        return 0 if b is None else 1 << b

    relations = GF2Basis(len(symbols))
    for c in range(size):
        v, e = 0, c
        for x in DELTA_CYCLE:
            v ^= sym(e, x)
            e = rows[e][x]
        if v:
            relations.add(v)

    images: List[List[int]] = []
    for i in range(3):
        lt = left_translation(table, rows[0][i]).tolist()
        # f[c] is the class of r_i g_c g_{L(c)}^-1 in V
        f = [0] * size
        f[0] = sym(0, i)
        for d in order[1:]:
            p = int(parent[d])
            f[d] = f[p] ^ sym(lt[p], int(label[d]))
        column = [0] * len(symbols)
        for (c, x), b in symbols.items():
            column[b] = f[c] ^ sym(lt[c], x) ^ f[rows[c][x]]
        images.append(column)

    module = ModuleSpace(table=table, symbols=symbols, relations=relations, images=images)
    logger.debug(f"Schreier module of order {size}: {len(symbols)} symbols, dim {module.dim}")
    return module


@dataclass
class Coinvariants:
    """W = V / span{A_i v - v}, as a quotient of the symbol space."""

    module: ModuleSpace
    basis: GF2Basis

    @property
    def dim(self) -> int:
        return len(self.basis.free_columns())

    def projection(self) -> np.ndarray:
        """Matrix from symbol coordinates to W coordinates."""
        columns = [self.basis.quotient_coordinates(bit(b)) for b in range(self.basis.dim)]
        return to_matrix(columns, self.dim)

    def functional(self, selection: int) -> int:
        """Pull back a functional on W (packed over free columns) to the symbols."""
        free = self.basis.free_columns()
        mask = 0
        for k in iter_bits(selection):
            mask |= bit(free[k])
        return self.basis.pullback(mask)

    def functionals(self) -> Iterator[Tuple[int, int]]:
        """(selection, symbol functional) for every nonzero functional on W."""
        for selection in range(1, 1 << self.dim):
            yield selection, self.functional(selection)


def coinvariants(module: ModuleSpace) -> Coinvariants:
    basis = GF2Basis(module.symbol_count, module.relations.rows())
    for i in range(3):
        images = module.images[i]
        for b in range(module.symbol_count):
            basis.add(images[b] ^ bit(b))
    return Coinvariants(module=module, basis=basis)


def extend(node: QuotientNode, hyperplane: int, module: Optional[ModuleSpace] = None) -> QuotientNode:
    """Order-doubling quotient whose kernel is the given hyperplane of K.

    ``hyperplane`` is a functional on the Schreier symbols, packed as an int,
    that vanishes on the coinvariant relations.
    """
    module = module or schreier_module(node)
    rows = node.table.rows.tolist()
    size = node.size
    child = np.empty((2 * size, 3), dtype=np.int64)
    for c in range(size):
        for x in range(3):
            d = rows[c][x]
            flip = parity(module.symbol(c, x) & hyperplane)
            child[2 * c, x] = 2 * d + flip
            child[2 * c + 1, x] = 2 * d + (1 ^ flip)
    lifted = CosetTable(child, regular=True)
    position = _canonical_positions(lifted)
    canon = canonicalize(lifted)
    if canon.size != 2 * size:
        raise TableError("functional vanishes on the kernel; the lift is disconnected")
    return QuotientNode(
        table=canon,
        order_exp=node.order_exp + 1,
        parent_digest=node.digest,
        central_flag=position[1],
        hyperplane=hyperplane,
    )


def _canonical_positions(table: CosetTable) -> List[int]:
    """position[c] = canonical label of coset c."""
    order = bfs_order(table)
    position = [0] * table.size
    for k, c in enumerate(order):
        position[c] = k
    return position


def children(node: QuotientNode) -> List[QuotientNode]:
    """Every order-doubling quotient above ``node``, deduplicated by key."""
    module = schreier_module(node)
    w = coinvariants(module)
    seen: Dict[bytes, QuotientNode] = {}
    for _, functional in w.functionals():
        child = extend(node, functional, module)
        seen.setdefault(child.key, child)
    logger.debug(f"Node {node.digest[:12]} (order 2^{node.order_exp}): coinvariant dim {w.dim}, {len(seen)} children")
    return sorted(seen.values(), key=lambda n: n.key)


def is_proper(table: CosetTable) -> bool:
    """Each r_i has order exactly 2 and r0 != r2."""
    if any(table.entry(0, i) == 0 for i in range(3)):
        return False
    return table.trace(0, (0, 2)) != 0

