import numpy as np
import pytest

from regmaps.core.coset_table import quotient_by_central
from regmaps.core.descent import (
    children,
    coinvariants,
    extend,
    is_proper,
    node_from_table,
    schreier_module,
    trivial_node,
)
from regmaps.core.presets import preset
from regmaps.core.todd_coxeter import regular_table
from regmaps.errors import TableError
from regmaps.services.census_service import CensusService
from tests import oracles


def test_trivial_module():
    module = schreier_module(trivial_node())
    assert module.symbol_count == 3
    assert module.dim == 3
    for i in range(3):
        assert np.array_equal(module.action_matrix(i), np.eye(3, dtype=np.uint8))
    assert coinvariants(module).dim == 3


def test_seven_quotients_of_order_two():
    kids = children(trivial_node())
    assert len(kids) == 7
    assert all(k.size == 2 and k.order_exp == 1 for k in kids)
    assert {k.key for k in kids} == oracles.quotient_keys(2)
    assert not any(is_proper(k.table) for k in kids)
    assert [k.key for k in kids] == sorted(k.key for k in kids)


def test_module_matches_lift_count(ea8_table):
    node = node_from_table(ea8_table)
    module = schreier_module(node)
    w = coinvariants(module)
    assert (module.dim, w.dim) == oracles.module_dims(ea8_table)


@pytest.mark.parametrize("relators", [
    ("(r0 r1)^2", "(r1 r2)^4"),
    ("(r0 r1)^4", "(r1 r2)^2"),
    ("r0", "(r1 r2)^4"),
    ("r1",),
])
def test_module_dims_small_quotients(relators):
    table = regular_table(preset("delta").with_relators(*relators))
    module = schreier_module(table)
    assert (module.dim, coinvariants(module).dim) == oracles.module_dims(table)


def test_children_of_ea8_match_covering_search(ea8_table):
    kids = children(node_from_table(ea8_table))
    assert {k.key for k in kids} == oracles.child_keys(ea8_table)
    for kid in kids:
        assert kid.size == 16
        assert kid.parent_digest == ea8_table.digest


def test_central_flag_recovers_parent(ea8_table):
    for kid in children(node_from_table(ea8_table)):
        quotient = quotient_by_central(kid.table, kid.central_flag)
        assert quotient.key == ea8_table.key


def test_extend_with_zero_functional_is_disconnected(ea8_table):
    with pytest.raises(TableError):
        extend(node_from_table(ea8_table), 0)


def test_action_preserves_relations(dihedral_table):
    module = schreier_module(dihedral_table)
    for i in range(3):
        for row in module.relations.rows():
            assert module.relations.contains(module.act(i, row))


def test_actions_are_involutions(dihedral_table):
    module = schreier_module(dihedral_table)
    for i in range(3):
        a = module.action_matrix(i).astype(int)
        assert np.array_equal((a @ a) % 2, np.eye(module.dim, dtype=int))


def test_node_needs_two_power_order():
    with pytest.raises(TableError):
        node_from_table(regular_table(preset("delta").with_relators("(r0 r1)^3", "r2")))


def test_is_proper(ea8_table, dihedral_table):
    assert is_proper(ea8_table)
    assert is_proper(dihedral_table)
    assert not is_proper(regular_table(preset("delta").with_relators("r0", "(r1 r2)^4")))
    assert not is_proper(regular_table(preset("delta").with_relators("r0 r2", "(r0 r1)^4")))


@pytest.mark.parametrize("k", [1, 2, 3, 4, pytest.param(5, marks=pytest.mark.slow)])
def test_census_levels_match_covering_search(small_census, k):
    census = CensusService(small_census).load(k)
    expected = set()
    for parent in census.levels[k - 1]:
        expected |= oracles.child_keys(parent.table)
    assert {node.key for node in census.levels[k]} == expected
