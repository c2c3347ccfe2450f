import itertools

import pytest

from twingroups.involutions import centralizer_mask, iter_involution_classes
from twingroups.words import GroupContext, TwinGroupError
from twingroups.zclasses import (
    alpha,
    alpha_in,
    lambda_direct,
    lambda_recursive,
    same_z_class,
    x_family,
    zclass_spotcheck_X_family,
    zclass_table,
)


def test_lambda_direct_small_values():
    assert [lambda_direct(n) for n in range(2, 8)] == [1, 2, 2, 5, 8, 12]


def test_lambda_recursive_values():
    assert lambda_recursive(6) == 8
    assert lambda_recursive(7) == 12
    assert lambda_recursive(8) == 21


@pytest.mark.parametrize("n", range(2, 17))
def test_direct_matches_recursion(n):
    assert lambda_direct(n) == lambda_recursive(n)


def test_bounds():
    for f in (lambda_direct, lambda_recursive):
        with pytest.raises(TwinGroupError):
            f(1)
    with pytest.raises(TwinGroupError):
        lambda_direct(40)
    with pytest.raises(TwinGroupError):
        alpha(0)
    with pytest.raises(TwinGroupError):
        alpha(5, GroupContext(5))


def test_alpha_values():
    assert alpha(1) == 1
    assert alpha(5) == 1 + lambda_direct(4) == 3
    assert alpha(7) == 1 + lambda_direct(6) == 9


@pytest.mark.parametrize("i", range(1, 10))
def test_alpha_does_not_depend_on_ambient_group(i):
    assert len({alpha_in(i, m) for m in range(i + 1, i + 5)}) == 1


@pytest.mark.parametrize("n", range(4, 15))
def test_lambda_as_alpha_sum(n):
    alphas = [0] + [alpha(i) for i in range(1, n)]
    assert lambda_direct(n) == sum(alphas[1:]) - alphas[n - 3]


@pytest.mark.parametrize("n", range(5, 15))
def test_alpha_recursion(n):
    a = {i: alpha(i) for i in range(1, n)}
    a[0] = 0
    assert a[n - 1] == 1 + sum(a[i] for i in range(1, n - 2)) - a[n - 5]


@pytest.mark.parametrize("n", range(4, 13))
def test_appending_top_generator_after_n_minus_3(n):
    ctx = GroupContext(n)
    for c in iter_involution_classes(ctx):
        if c.indices[-1] == n - 3:
            assert centralizer_mask(c.indices, n) == centralizer_mask(c.indices + (n - 1,), n)


def test_same_z_class_examples():
    assert same_z_class((1, 3), (3,), GroupContext(4))
    assert not same_z_class((1,), (2,), GroupContext(3))
    assert same_z_class((2,), (2, 4), GroupContext(5))
    with pytest.raises(TwinGroupError):
        same_z_class((1, 2), (1,), GroupContext(3))


@pytest.mark.parametrize("n", range(2, 9))
def test_same_z_class_partition_count(n):
    ctx = GroupContext(n)
    classes = list(iter_involution_classes(ctx))
    blocks = []
    for c in classes:
        for b in blocks:
            if same_z_class(c.word, b[0].word, ctx):
                b.append(c)
                break
        else:
            blocks.append([c])
    # transitivity inside every block
    for b in blocks:
        for x, y in itertools.combinations(b, 2):
            assert same_z_class(x.word, y.word, ctx)
    assert len(blocks) == lambda_direct(n)


def test_x_family_words():
    assert x_family(5) == [(1, 2), (1, 2, 3), (1, 2, 3, 2), (1, 2, 3, 2, 3), (1, 2, 3, 2, 3, 2)]


@pytest.mark.parametrize("n, count", [(4, 4), (5, 6), (4, 2), (6, 10)])
def test_x_family_pairwise_non_conjugate(n, count):
    assert zclass_spotcheck_X_family(n, count)


def test_x_family_bounds():
    with pytest.raises(TwinGroupError):
        zclass_spotcheck_X_family(3, 4)


def test_zclass_table():
    t = zclass_table(7)
    assert t.lambda_direct == t.lambda_recursive == 12
    assert t.alpha == (1, 1, 1, 3, 3, 6)
    assert t.as_dict()["alpha"] == [1, 1, 1, 3, 3, 6]
