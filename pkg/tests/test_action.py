from itertools import product

import pytest

from nearvec.action import ActionSpec, ActionTable, act, build_action, verify_action
from nearvec.errors import BadExponent
from nearvec.scalar_group import build_scalar_group, dickson, gf


def test_twisted_action_examples(v5):
    a = v5.action
    assert act(a, 2, (1, 1)) == (2, 3)  # 2^3 = 8 = 3 mod 5
    assert act(a, 1, (3, 4)) == (3, 4)
    assert act(a, 0, (3, 4)) == (0, 0)
    assert act(a, 4, (3, 4)) == (2, 1)


@pytest.mark.parametrize("order,exponents", [(5, (1, 3)), (7, (1, 5)), (9, (1, 3)), (8, (1, 2)), (4, (2,))])
def test_valid_actions_pass(order, exponents):
    g = build_scalar_group(gf(order))
    table = build_action(g, len(exponents), ActionSpec(exponents))
    assert verify_action(table).passed


@pytest.mark.parametrize("order,m", [(5, 2), (7, 3), (7, 2), (13, 4), (9, 2)])
def test_bad_exponents_rejected(order, m):
    g = build_scalar_group(gf(order))
    with pytest.raises(BadExponent):
        build_action(g, 1, ActionSpec((m,)))


def test_dickson_identity_action():
    g = build_scalar_group(dickson(3))
    assert verify_action(build_action(g, 1, ActionSpec((1,)))).passed


def test_exponent_two_over_gf5_fails_with_witness():
    g = build_scalar_group(gf(5))
    table = ActionTable(g, [[g.power(a, 2) for a in g.elements]], (2,))
    rep = verify_action(table)
    assert not rep.passed
    free = rep.find("free: a.v = b.v implies v = 0 or a = b")
    assert not free.passed
    a, b, v = free.witness
    assert a != b and v != (0,) and table.act(a, v) == table.act(b, v)


def test_action_laws_by_brute_force(v5, v7):
    for sp in (v5, v7):
        g = sp.group
        for a, b in product(g.elements, repeat=2):
            for v in sp.carrier:
                assert sp.act(a, sp.act(b, v)) == sp.act(g.mul(a, b), v)
        for a in g.elements:
            for v, w in product(sp.carrier, repeat=2):
                assert sp.act(a, sp.add(v, w)) == sp.add(sp.act(a, v), sp.act(a, w))


def test_dimension_mismatch():
    g = build_scalar_group(gf(5))
    with pytest.raises(BadExponent):
        build_action(g, 2, ActionSpec((1,)))
