import itertools

import numpy as np
import pytest

from regmaps.core.gf2 import GF2Basis, from_matrix, iter_bits, parity, rank, to_matrix


def span(vectors):
    out = {0}
    for v in vectors:
        out |= {u ^ v for u in out}
    return out


def test_bits():
    assert list(iter_bits(0b101001)) == [0, 3, 5]
    assert parity(0b111) == 1
    assert parity(0b1001) == 0


def test_rank():
    assert rank([0b011, 0b110, 0b101], 3) == 2
    assert rank([0b001, 0b010, 0b100], 3) == 3
    assert rank([], 4) == 0


def test_echelon_invariant():
    basis = GF2Basis(6, [0b110011, 0b101010, 0b000111, 0b011001])
    assert basis.rank == 3
    pivots = basis.pivots
    for p in pivots:
        row = basis.row(p)
        assert row.bit_length() - 1 == p
        for q in pivots:
            if q != p:
                assert not (basis.row(q) >> p) & 1


def test_add_reports_membership():
    basis = GF2Basis(4)
    assert basis.add(0b0011)
    assert basis.add(0b0110)
    assert not basis.add(0b0101)
    assert basis.contains(0b0101)
    assert not basis.contains(0b1000)


def test_out_of_range_vector():
    with pytest.raises(ValueError):
        GF2Basis(3, [0b1000])


def test_free_columns_index_the_quotient():
    vectors = [0b10110, 0b01101]
    basis = GF2Basis(5, vectors)
    free = basis.free_columns()
    assert len(free) == 5 - basis.rank
    # quotient coordinates are constant on cosets of the subspace
    members = span(vectors)
    for v in range(32):
        q = basis.quotient_coordinates(v)
        assert all(basis.quotient_coordinates(v ^ m) == q for m in members)


@pytest.mark.parametrize("vectors", [
    [0b10110, 0b01101],
    [0b00001],
    [0b11111, 0b10000, 0b01000],
])
def test_pullback_vanishes_on_subspace(vectors):
    basis = GF2Basis(5, vectors)
    members = span(vectors)
    free = basis.free_columns()
    functionals = set()
    for r in range(1, len(free) + 1):
        for chosen in itertools.combinations(free, r):
            mask = sum(1 << b for b in chosen)
            f = basis.pullback(mask)
            assert all(parity(f & m) == 0 for m in members)
            functionals.add(f)
    # distinct selections give distinct nonzero functionals
    assert len(functionals) == 2 ** len(free) - 1
    assert 0 not in functionals


def test_dense_round_trip():
    columns = [0b101, 0b011, 0b000]
    m = to_matrix(columns, 3)
    assert m.dtype == np.uint8
    assert m.tolist() == [[1, 1, 0], [0, 1, 0], [1, 0, 0]]
    assert from_matrix(m) == columns
