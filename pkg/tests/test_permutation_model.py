import logging

import pytest

from regmaps.core.permutation_model import fixed_ends, permutation_model
from regmaps.core.permutations import PermGroup, check_relations
from regmaps.core.presets import preset
from regmaps.errors import ParameterRangeError


@pytest.mark.parametrize("n", [8, 9, 10])
def test_generators_are_involutions(n):
    a, b, c = permutation_model(n)
    assert a.degree == b.degree == c.degree == 2 ** (n - 2)
    assert all(p.is_involution() for p in (a, b, c))
    assert ((a * c) ** 2).is_identity()


@pytest.mark.parametrize("n", [8, 10])
def test_b_pairs_neighbours(n):
    _, b, _ = permutation_model(n)
    assert all(len(cycle) == 2 and cycle[1] == cycle[0] + 1 for cycle in b.cycles())
    assert not any(b.fixes(p) for p in range(1, b.degree + 1))


@pytest.mark.parametrize("n", [8, 11])
def test_c_fixes_the_block_ends(n):
    _, _, c = permutation_model(n)
    t = 2 ** (n - 4)
    ends = fixed_ends(n)
    assert ends == [1, 2 * t, 2 * t + 1, 4 * t]
    assert all(c.fixes(p) for p in ends)
    assert sum(1 for p in range(1, c.degree + 1) if c.fixes(p)) == 4


def test_below_minimum():
    with pytest.raises(ParameterRangeError):
        permutation_model(7)


def test_warns_below_stated_range(caplog):
    with caplog.at_level(logging.WARNING):
        permutation_model(9)
    assert "desk-scale analog" in caplog.text


@pytest.mark.slow
def test_model_realizes_h6_at_12():
    a, b, c = permutation_model(12)
    group = PermGroup([a, b, c])
    assert group.order() == 4096
    assert group.is_transitive()
    assert check_relations((a, b, c), preset("H6", n=12))
    assert check_relations((a, b, c), preset("H6", n=12), exact_orders=True)


@pytest.mark.slow
def test_identity_b_breaks_exact_orders():
    a, b, c = permutation_model(12)
    identity = b * b
    h6 = preset("H6", n=12)
    assert not check_relations((a, identity, c), h6, exact_orders=True)
