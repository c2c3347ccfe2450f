import random

import pytest
from hypothesis import given
import hypothesis.strategies as st

from twingroups.automorphisms import (
    TwinAut,
    apply_aut,
    aut_identity,
    aut_inner,
    aut_inverse,
    aut_kappa,
    aut_order,
    aut_power,
    aut_psi,
    aut_tau,
    characteristic_witnesses,
    compose,
    inner_witness,
    is_identity_aut,
    is_inner,
    outer_class,
    parse_aut,
    transversal,
    validate_aut,
)
from twingroups.words import GroupContext, TwinGroupError, eta, normal_form

T3, T4, T5 = GroupContext(3), GroupContext(4), GroupContext(5)


def test_inner_examples():
    assert is_identity_aut(aut_inner((), T3))
    a = aut_inner((1,), T3)
    assert a.images == ((1,), (1, 2, 1))
    b = aut_inner((1, 2), T3)
    assert b.images == (normal_form((2, 1, 1, 1, 2)), normal_form((2, 1, 2, 1, 2)))
    assert validate_aut(b)


def test_psi_tau_kappa_images():
    assert aut_psi(T4).images == ((3,), (2,), (1,))
    assert aut_psi(T3).images == ((2,), (1,))
    assert aut_tau().images == ((1, 3), (2,), (1,))
    assert aut_kappa(T5).images == ((4,), (3,), (2, 4), (1,))
    with pytest.raises(TwinGroupError):
        aut_psi(GroupContext(2))
    with pytest.raises(TwinGroupError):
        aut_tau(T5)
    with pytest.raises(TwinGroupError):
        aut_kappa(T4)


@pytest.mark.parametrize("n", range(3, 9))
def test_psi_order_two(n):
    ctx = GroupContext(n)
    assert is_identity_aut(compose(aut_psi(ctx), aut_psi(ctx)))
    assert aut_order(aut_psi(ctx)) == 2


def test_tau_relations():
    tau, psi = aut_tau(), aut_psi(T4)
    assert aut_order(tau) == 3
    assert compose(compose(psi, tau), psi).images == aut_power(tau, 2).images
    assert apply_aut(tau, (2,)) == (2,)


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_kappa_relations(n):
    ctx = GroupContext(n)
    kappa, psi = aut_kappa(ctx), aut_psi(ctx)
    assert aut_order(kappa) == 4
    # psi o kappa o psi == kappa^-1
    assert parse_aut("psi*kappa*psi", ctx).images == aut_inverse(kappa).images
    assert is_identity_aut(parse_aut("psi*kappa*psi*kappa", ctx))


def test_compose_examples():
    a = aut_psi(T4)
    assert compose(aut_identity(T4), a) == a
    g, h = (1, 2, 3), (2, 1)
    assert compose(aut_inner(g, T4), aut_inner(h, T4)) == aut_inner(g + h, T4)
    with pytest.raises(TwinGroupError):
        compose(aut_psi(T4), aut_psi(T5))


def test_apply_examples():
    assert apply_aut(aut_psi(T4), (1, 2)) == (3, 2)
    assert apply_aut(aut_tau(), (1, 2) * 3) == normal_form((1, 3, 2) * 3)
    w = (2, 1, 2, 3)
    assert apply_aut(aut_identity(T4), w) == normal_form(w)


def test_validate_aut():
    for a in (aut_psi(T4), aut_tau(), aut_kappa(T5), aut_kappa(GroupContext(7))):
        assert validate_aut(a)
    # relations hold though the map is not onto
    assert validate_aut(TwinAut(T3, ((2,), (2,))))
    assert not validate_aut(TwinAut(T3, ((1, 2), (2,))))
    # s1 and s3 must stay commuting
    assert not validate_aut(TwinAut(T4, ((1,), (2,), (2,))))
    with pytest.raises(TwinGroupError):
        is_inner(TwinAut(T3, ((1, 2), (2,))))


@given(st.integers(3, 6), st.data())
def test_random_inner_automorphisms_are_inner(n, data):
    ctx = GroupContext(n)
    g = tuple(data.draw(st.lists(st.integers(1, n - 1), max_size=10)))
    assert is_inner(aut_inner(g, ctx))


def test_named_automorphisms_are_not_inner():
    for n in range(3, 8):
        assert not is_inner(aut_psi(GroupContext(n)))
    assert not is_inner(aut_tau())
    for n in range(5, 8):
        assert not is_inner(aut_kappa(GroupContext(n)))


def test_non_inner_automorphisms_change_a_parity():
    # the image of some generator has a different eta-parity vector
    def parities(w, n):
        return tuple(eta(w, i) % 2 for i in range(1, n))

    cases = [aut_psi(GroupContext(n)) for n in range(3, 8)]
    cases += [aut_tau()] + [aut_kappa(GroupContext(n)) for n in range(5, 8)]
    for a in cases:
        n = a.ctx.n
        assert any(parities(a.image(i), n) != parities((i,), n) for i in range(1, n))


def test_outer_class_examples():
    g = (1, 2, 3, 4)
    assert outer_class(aut_inner(g, T5)) == ((0, 0), True)
    assert outer_class(aut_kappa(T5)) == ((0, 3), True)
    a = compose(aut_psi(T5), aut_inner((1,), T5))
    assert outer_class(a)[0][0] == 1
    assert outer_class(aut_psi(T3)) == ((1,), True)
    assert outer_class(aut_tau()) == ((0, 2), True)


def test_outer_class_rejects_non_automorphism():
    with pytest.raises(TwinGroupError):
        outer_class(TwinAut(T3, ((2,), (2,))))


@pytest.mark.parametrize("n, size", [(3, 2), (4, 6), (5, 8), (6, 8), (7, 8)])
def test_transversal_cosets_distinct(n, size):
    reps = [r for _, r in transversal(GroupContext(n))]
    assert len(reps) == size
    for i, r1 in enumerate(reps):
        inv = aut_inverse(r1)
        for j, r2 in enumerate(reps):
            assert is_inner(compose(inv, r2)) == (i == j)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_inner_witness_recovers_conjugator(n):
    ctx = GroupContext(n)
    rng = random.Random(n)
    for _ in range(50):
        g = tuple(rng.randint(1, n - 1) for _ in range(rng.randint(0, 12)))
        a = aut_inner(g, ctx)
        found = inner_witness(a)
        assert found is not None
        assert aut_inner(found, ctx) == a
        # the centre of T_n is trivial, so the conjugator is unique
        assert normal_form(found) == normal_form(g)


def test_inner_witness_gives_up_on_outer():
    assert inner_witness(aut_psi(T5)) is None


def test_parse_aut():
    assert parse_aut("psi", T4) == aut_psi(T4)
    assert parse_aut("inner:1 2", T4) == aut_inner((1, 2), T4)
    assert parse_aut("id", T4) == aut_identity(T4)
    # x*y means x o y: y acts first
    assert parse_aut("psi*tau", T4) == compose(aut_tau(), aut_psi(T4))
    for bad in ("", "psi**tau", "phi", "inner:9"):
        with pytest.raises(TwinGroupError):
            parse_aut(bad, T4)


def test_characteristic_witnesses():
    r4 = characteristic_witnesses(T4)["tau((s1 s2)^3)"]
    assert r4["source_pure"] and not r4["image_pure"] and r4["image_matches_formula"]
    for n in range(5, 9):
        report = characteristic_witnesses(GroupContext(n))
        for name, rec in report.items():
            assert rec["source_pure"]
            assert rec["image_matches_formula"], (n, name)
            assert not rec["image_pure"], (n, name)
    with pytest.raises(TwinGroupError):
        characteristic_witnesses(T3)
