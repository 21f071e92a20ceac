"""Properties of the stratified equality: congruence on the decided
fragment, soundness of oriented-rule steps, interchange normalization,
inverse cancellation."""

import random

import pytest

from hopfsmith.presentation import Presentation
from hopfsmith.rewriting import (CompositionError, EQ_DISTINCT, EQ_EQUAL,
                                 EQ_UNKNOWN, compose, eq)
from hopfsmith.terms import Comp, Gen, Id, Inv, comp
from hopfsmith.walking import adj, mnd

M = mnd().base
A = adj().base


def random_mnd_2cell(rng, size):
    """A random vertical stack of whiskered multiplication/unit layers,
    built so that boundaries chain."""
    m, u, Ag = Gen("m"), Gen("u"), Gen("A")
    width = rng.randint(1, 3)
    word = width
    layers = []
    for _ in range(size):
        if word >= 2 and rng.random() < 0.5:
            pos = rng.randint(0, word - 2)
            parts = [Id(Ag)] * pos + [m] + [Id(Ag)] * (word - 2 - pos)
            word -= 1
        else:
            pos = rng.randint(0, word)
            parts = [Id(Ag)] * pos + [u] + [Id(Ag)] * (word - pos)
            word += 1
        layers.append(parts[0] if len(parts) == 1 else comp(0, *parts))
    if not layers:
        base = Gen("A") if width == 1 else comp(0, *([Ag] * width))
        return Id(base)
    out = layers[0]
    for l in layers[1:]:
        out = Comp(1, out, l)
    return out


def test_equal_reflexive_symmetric_random():
    rng = random.Random(7)
    for _ in range(25):
        t = random_mnd_2cell(rng, rng.randint(1, 4))
        assert eq(t, t, M) is EQ_EQUAL
        s = random_mnd_2cell(rng, rng.randint(1, 4))
        assert eq(t, s, M) is eq(s, t, M)


def test_equal_preserved_by_id_and_compose():
    m, u, Ag = Gen("m"), Gen("u"), Gen("A")
    a = comp(1, comp(0, Id(Ag), m), m)
    b = comp(1, comp(0, m, Id(Ag)), m)
    assert eq(a, b, M) is EQ_EQUAL
    assert eq(Id(a), Id(b), M) in (EQ_EQUAL, EQ_UNKNOWN)
    c = comp(0, u, Id(Ag), Id(Ag), Id(Ag))
    ca = comp(1, c, a)
    cb = comp(1, c, b)
    assert eq(ca, cb, M) is EQ_EQUAL


def test_single_rule_step_is_never_distinct():
    # every oriented relation's two sides are Equal, whiskered or not
    for p in (M, A):
        for r in p.relations:
            if not r.oriented or r.dim != 2:
                continue
            assert eq(r.lhs, r.rhs, p) is EQ_EQUAL


def test_unit_absorption():
    f = Gen("l")
    t = compose(0, Id(Gen("a")), f, A)
    assert eq(t, f, A) is EQ_EQUAL


def test_composition_error_carries_boundaries():
    m = Gen("m")
    with pytest.raises(CompositionError) as exc:
        compose(1, m, comp(0, m, Id(Gen("A"))), M)
    assert exc.value.left_boundary is not None
    assert exc.value.right_boundary is not None


def test_interchange_two_orders_equal():
    p = Presentation(max_dim=2)
    x, y, z = p.add("x", 0), p.add("y", 0), p.add("z", 0)
    f, f2 = p.add("f", 1, x, y), p.add("f2", 1, x, y)
    g, g2 = p.add("g", 1, y, z), p.add("g2", 1, y, z)
    al = p.add("al", 2, f, f2)
    be = p.add("be", 2, g, g2)
    one = comp(1, comp(0, al, Id(g)), comp(0, Id(f2), be))
    two = comp(1, comp(0, Id(f), be), comp(0, al, Id(g2)))
    assert eq(one, two, p) is EQ_EQUAL
    assert eq(comp(0, al, Id(g)), comp(0, Id(f), be), p) is EQ_DISTINCT


def test_inv_cancellation():
    p = Presentation(max_dim=2)
    x, y = p.add("x", 0), p.add("y", 0)
    f, g = p.add("f", 1, x, y), p.add("g", 1, x, y)
    al = p.add("al", 2, f, g, invertible=True)
    t = comp(1, al, Inv(al))
    assert eq(t, Id(f), p) is EQ_EQUAL
    t2 = comp(1, Inv(al), al)
    assert eq(t2, Id(g), p) is EQ_EQUAL


def test_boundary_certificate_distinct():
    m, u = Gen("m"), Gen("u")
    assert eq(m, u, M) is EQ_DISTINCT


def test_budget_exhaustion_is_unknown():
    a = comp(1, comp(0, Gen("m"), Id(Gen("A"))), Gen("m"))
    b = comp(1, comp(0, Id(Gen("A")), Gen("m")), Gen("m"))
    assert eq(a, b, M, budget=1) is EQ_UNKNOWN


def test_snakes_normalize_to_identities():
    l, r, e, n = Gen("l"), Gen("r"), Gen("eps"), Gen("eta")
    snake_r = comp(1, comp(0, Id(r), n), comp(0, e, Id(r)))
    snake_l = comp(1, comp(0, n, Id(l)), comp(0, Id(l), e))
    assert eq(snake_r, Id(r), A) is EQ_EQUAL
    assert eq(snake_l, Id(l), A) is EQ_EQUAL


def test_budget_env_var(monkeypatch):
    from hopfsmith.rewriting import default_budget
    monkeypatch.setenv("HOPFSMITH_BUDGET", "123")
    assert default_budget() == 123
    monkeypatch.setenv("HOPFSMITH_BUDGET", "garbage")
    assert default_budget() == 10_000


def test_whiskered_rule_step_equal():
    # a single oriented rule applied inside whiskers is still Equal
    m, u, Ag = Gen("m"), Gen("u"), Gen("A")
    lhs = comp(1, comp(0, Id(Ag), comp(1, comp(0, u, Id(Ag)), m)),
               comp(0, Id(Ag), Id(Ag)))
    rhs = comp(0, Id(Ag), Id(Ag))
    assert eq(M.normalize(lhs), M.normalize(rhs), M) is EQ_EQUAL


def test_concurrent_readonly_use():
    # values are immutable and operations pure: parallel queries agree
    import concurrent.futures
    m, Ag = Gen("m"), Gen("A")
    a = comp(1, comp(0, Id(Ag), m), m)
    b = comp(1, comp(0, m, Id(Ag)), m)
    with concurrent.futures.ThreadPoolExecutor(max_workers=8) as ex:
        results = list(ex.map(lambda _: eq(a, b, M).name, range(32)))
    assert set(results) == {"Equal"}


def test_point_degenerate_interchange_orders_equal():
    """An insertion meeting a deletion at one point: all three layerings
    (vertical, and the two horizontal orders) are the same 2-cell."""
    p = Presentation(max_dim=2)
    x = p.add("x", 0)
    f, g = p.add("f", 1, x, x), p.add("g", 1, x, x)
    delc = p.add("del", 2, comp(0, f, f), Id(x))
    ins = p.add("ins", 2, Id(x), comp(0, g, g))
    vertical = comp(1, delc, ins)
    del_then_ins = comp(0, delc, ins)
    ins_then_del = comp(0, ins, delc)
    assert eq(vertical, del_then_ins, p) is EQ_EQUAL
    assert eq(vertical, ins_then_del, p) is EQ_EQUAL
    assert eq(del_then_ins, ins_then_del, p) is EQ_EQUAL
