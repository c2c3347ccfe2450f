import pytest
from hypothesis import given

from twingroups.symmetric import Permutation, is_pure, permutation_image
from twingroups.words import GroupContext, TwinGroupError, normal_form

from conftest import words


def test_generator_maps_to_transposition():
    ctx = GroupContext(3)
    p = permutation_image((1,), ctx)
    assert p == Permutation.transposition(3, 1, 2)
    assert p.cycle_notation() == "(1 2)"


def test_identity_cases():
    assert permutation_image((), GroupContext(4)).is_identity()
    assert permutation_image((1, 2) * 3, GroupContext(3)).is_identity()


def test_is_pure_examples():
    assert is_pure((1, 2) * 3, GroupContext(3))
    assert not is_pure((1,), GroupContext(3))
    assert not is_pure((1, 3, 2) * 3, GroupContext(4))
    assert is_pure((2, 3) * 3, GroupContext(5))


@given(words(max_len=10), words(max_len=10))
def test_homomorphism(a, b):
    n = max(a[0], b[0])
    ctx = GroupContext(n)
    w1, w2 = a[1], b[1]
    assert permutation_image(w1 + w2, ctx) == permutation_image(w1, ctx) * permutation_image(w2, ctx)


@given(words(max_len=12))
def test_well_defined(nw):
    n, w = nw
    ctx = GroupContext(n)
    assert permutation_image(w, ctx) == permutation_image(normal_form(w), ctx)


def test_generators_square_to_identity():
    ctx = GroupContext(6)
    for i in ctx.generators:
        assert permutation_image((i, i), ctx).is_identity()


def test_permutation_validation_and_notation():
    with pytest.raises(TwinGroupError):
        Permutation((1, 1, 2))
    p = permutation_image((1, 3, 2), GroupContext(4))
    assert p.one_line() == "[3 1 4 2]"
    assert p.cycle_notation() == "(1 3 4 2)"
    assert Permutation.identity(3).cycle_notation() == "()"
