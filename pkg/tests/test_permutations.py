import pytest

from regmaps.core.permutations import (
    Permutation,
    PermGroup,
    check_relations,
    evaluate_word,
    group_order,
    regular_rep,
    table_from_permutations,
)
from regmaps.core.coset_table import canonicalize
from regmaps.core.presets import preset
from regmaps.core.todd_coxeter import regular_table


def test_product_reads_left_to_right():
    p = Permutation.from_cycles(3, [(1, 2)])
    q = Permutation.from_cycles(3, [(2, 3)])
    # 1 -p-> 2 -q-> 3
    assert (p * q)(1) == 3
    assert (q * p)(1) == 2


def test_construction():
    p = Permutation.from_images([2, 3, 1, 4])
    assert p.cycles() == [(1, 2, 3)]
    assert str(p) == "(1 2 3)"
    assert p.order() == 3
    assert p.inverse() == p ** 2
    assert (p ** -1) * p == Permutation.identity(4)
    assert p.cycle_length(4) == 1
    assert p.fixes(4)


def test_invalid_permutations():
    with pytest.raises(ValueError):
        Permutation.from_cycles(4, [(1, 2), (2, 3)])
    with pytest.raises(ValueError):
        Permutation.from_cycles(3, [(1, 4)])
    with pytest.raises(ValueError):
        Permutation.from_images([1, 1, 2])


def test_commutator_and_conjugate():
    a = Permutation.from_cycles(4, [(1, 2)])
    b = Permutation.from_cycles(4, [(2, 3)])
    assert a.commutator(b) == a * b * a * b
    assert a.conjugate(b) == Permutation.from_cycles(4, [(1, 3)])
    assert a.is_involution()
    assert not Permutation.identity(4).is_involution()


@pytest.mark.parametrize("gens, order", [
    ([[(1, 2)], [(2, 3)]], 6),
    ([[(1, 2, 3, 4)], [(1, 2)]], 24),
    ([[(1, 2, 3)], [(1, 2, 3, 4, 5)]], 60),
    ([[(1, 2, 3, 4, 5, 6)], [(1, 2)]], 720),
    ([[(1, 2), (3, 4)], [(1, 3), (2, 4)]], 4),
    ([[(1, 2, 3, 4, 5, 6, 7, 8)], [(1, 8), (2, 7), (3, 6), (4, 5)]], 16),
])
def test_group_orders(gens, order):
    degree = max(p for g in gens for c in g for p in c)
    perms = [Permutation.from_cycles(degree, g) for g in gens]
    assert group_order(perms) == order


def test_empty_generating_set():
    assert group_order([]) == 1


def test_membership_and_orbits():
    g = PermGroup([Permutation.from_cycles(6, [(1, 2, 3)]), Permutation.from_cycles(6, [(4, 5)])])
    assert g.order() == 6
    assert g.contains(Permutation.from_cycles(6, [(1, 3, 2), (4, 5)]))
    assert not g.contains(Permutation.from_cycles(6, [(1, 2)]))
    assert g.orbit(1) == {1, 2, 3}
    assert g.orbit(6) == {6}
    assert not g.is_transitive()
    assert g.orbit_sizes() and g.base


def test_regular_representation_satisfies_its_presentation(dihedral_table):
    perms = regular_rep(dihedral_table)
    assert check_relations(perms, preset("dihedral", n=4))
    assert check_relations(perms, preset("dihedral", n=4), exact_orders=True)
    assert group_order(perms) == 16
    assert PermGroup(perms).is_transitive()


def test_relations_that_fail(dihedral_table):
    perms = regular_rep(dihedral_table)
    assert not check_relations(perms, preset("c2xd", n=4))
    # (r1 r2)^16 holds, but 16 is not the true order
    loose = preset("delta").with_relators("(r0 r1)^2", "(r1 r2)^16")
    assert check_relations(perms, loose)
    assert not check_relations(perms, loose, exact_orders=True)


def test_evaluate_word(dihedral_table):
    perms = regular_rep(dihedral_table)
    assert evaluate_word(perms, (1, 2) * 8).is_identity()
    assert evaluate_word(perms, ()).is_identity()


def test_table_from_permutations(ea8_table):
    table = table_from_permutations(regular_rep(ea8_table))
    assert canonicalize(table).key == ea8_table.key


@pytest.mark.slow
def test_g6_regular_representation():
    perms = regular_rep(regular_table(preset("G6", n=12)))
    assert group_order(perms) == 4096
