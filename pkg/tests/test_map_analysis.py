import pytest

from regmaps.core.descent import is_proper
from regmaps.core.map_analysis import (
    analyze,
    automorphic_keys,
    class_key,
    derived_subgroup,
    dual,
    frattini_rank,
    is_bipartite,
    is_orientable,
    orbit_labels,
    retriple,
    simple_underlying,
    type_exponents,
)
from regmaps.core.presets import preset
from regmaps.core.todd_coxeter import regular_table
from regmaps.errors import NotProperError
from regmaps.services.census_service import CensusService
from tests import oracles


def test_elementary_abelian_record(ea8_table):
    record = analyze(ea8_table)
    assert (record.vertices, record.edges, record.faces) == (2, 2, 2)
    assert record.euler_characteristic == 2
    assert record.orientable
    assert record.genus == 0
    assert record.type_exponents == (1, 1)
    assert record.frattini_rank == 3
    assert not record.simple_underlying
    assert record.canonical_key_digest == ea8_table.digest


def test_dihedral_record(dihedral_table):
    record = analyze(dihedral_table)
    assert record.type_exponents == (1, 3)
    assert record.faces == 4
    assert record.vertices == 1
    assert record.edges == 4
    assert not record.orientable
    assert record.genus == 1
    assert record.frattini_rank == 2
    assert not record.simple_underlying


@pytest.mark.parametrize("n", [3, 5, 7])
def test_dihedral_rank(n):
    assert frattini_rank(regular_table(preset("dihedral", n=n))) == 2


def test_orbits(dihedral_table):
    count, labels = orbit_labels(dihedral_table, (0, 1))
    assert count == 4
    assert len(set(labels.tolist())) == 4


def test_orientability_and_bipartite_flags(ea8_table, dihedral_table):
    assert is_orientable(ea8_table)
    assert is_bipartite(ea8_table)
    assert not is_orientable(dihedral_table)
    assert not is_bipartite(dihedral_table)


def test_derived_subgroup(ea8_table, dihedral_table):
    assert derived_subgroup(ea8_table) == {0}
    assert len(derived_subgroup(dihedral_table)) == 4


def test_dual_is_an_involution(dihedral_table):
    d = dual(dihedral_table)
    assert dual(d).key == dihedral_table.key
    assert type_exponents(d) == (3, 1)


def test_analysis_needs_a_proper_map():
    with pytest.raises(NotProperError):
        analyze(regular_table(preset("delta").with_relators("r0", "(r1 r2)^4")))


def test_non_two_power_type_is_reported():
    # D12 with r0 the central rotation: face length 2, valency 6
    table = regular_table(preset("delta").with_relators("(r0 r1)^2", "(r1 r2)^6", "r0 (r1 r2)^3"))
    record = analyze(table)
    assert record.flags == 12
    assert record.valency == 6
    assert record.t_exp is None
    assert record.order_exp is None
    assert record.frattini_rank is None


def test_census_maps_against_oracles(small_census):
    census = CensusService(small_census).load()
    for k in range(1, 7):
        for node in census.levels[k]:
            table = node.table
            assert frattini_rank(table) == oracles.hom_to_c2_rank(table)
            if not is_proper(table):
                continue
            assert simple_underlying(table) == oracles.is_simple(table)


@pytest.mark.slow
def test_g1_at_12():
    record = analyze(regular_table(preset("G1", n=12)))
    assert record.type_exponents == (10, 10)


@pytest.mark.slow
def test_g3_at_12():
    table = regular_table(preset("G3", n=12))
    assert frattini_rank(table) == 3
    assert type_exponents(dual(table)) == (9, 9)


def test_automorphic_keys(ea8_table, dihedral_table):
    assert automorphic_keys(ea8_table) == {ea8_table.key}
    keys = automorphic_keys(dihedral_table)
    assert dihedral_table.key in keys
    assert dual(dihedral_table).key in keys
    assert class_key(dihedral_table) == class_key(dual(dihedral_table)) == min(keys)


def test_retriple_keeps_the_group(dihedral_table):
    # r0 is the central involution, so r0 r2 r1 = (r2 r1)^5 has order 8
    table = retriple(dihedral_table, (0, 2), (2,))
    assert table.size == dihedral_table.size
    assert type_exponents(table) == (3, 3)
    assert retriple(dihedral_table, (0,), (2,)).key == dihedral_table.key
