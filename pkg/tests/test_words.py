import pytest

from regmaps.core.words import (
    Generator,
    as_word,
    commutator,
    conjugate,
    cyclic_conjugates,
    cyclically_reduce,
    format_word,
    free_reduce,
    invert,
    minimal_period,
    power,
)


@pytest.mark.parametrize("word, reduced", [
    ((0, 0), ()),
    ((0, 1, 1, 0), ()),
    ((0, 1, 2), (0, 1, 2)),
    ((2, 1, 1, 2, 0), (0,)),
])
def test_free_reduce(word, reduced):
    assert free_reduce(word) == reduced


def test_free_reduce_leaves_no_equal_neighbours():
    w = free_reduce((0, 1, 2, 2, 1, 1, 0, 0, 2, 1))
    assert all(a != b for a, b in zip(w, w[1:]))


def test_cyclically_reduce():
    assert cyclically_reduce((0, 1, 2, 0)) == (1, 2)
    assert cyclically_reduce((1, 0, 2, 0, 1)) == (2,)
    assert cyclically_reduce((0, 1, 0)) == (1,)


def test_as_word_rejects_other_generators():
    assert as_word([0, 2, 1]) == (0, 2, 1)
    with pytest.raises(ValueError):
        as_word([0, 3])


def test_involutory_inverse_is_reversal():
    assert invert((0, 1, 2)) == (2, 1, 0)
    assert power((0, 1), 3) == (0, 1, 0, 1, 0, 1)
    assert power((0, 1), -2) == (1, 0, 1, 0)


def test_commutator_and_conjugate():
    # [r0 r1, r2] = r1 r0 r2 r0 r1 r2
    assert commutator((0, 1), (2,)) == (1, 0, 2, 0, 1, 2)
    # r0^(r1) = r1 r0 r1
    assert conjugate((0,), (1,)) == (1, 0, 1)
    assert commutator((0,), (0,)) == ()


def test_cyclic_conjugates_include_inverse_rotations():
    conj = cyclic_conjugates((0, 1, 2))
    assert len(conj) == 6
    assert (2, 1, 0) in conj
    assert (1, 2, 0) in conj
    assert len(cyclic_conjugates((0, 1, 0, 1))) == 2


def test_format_word_collapses_periods():
    assert format_word(()) == "1"
    assert minimal_period((0, 1, 0, 1)) == 2
    assert format_word((0, 1, 0, 1)) == "(r0 r1)^2"
    assert format_word((0, 0)) == "r0^2"
    assert format_word((0, 1, 2)) == "r0 r1 r2"


def test_generator_tokens():
    assert [g.token for g in Generator] == ["r0", "r1", "r2"]
