from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from nearvec.errors import GroupMismatch, NotQuasiKernel
from nearvec.monoid_algebra import (
    act_raw,
    bounded_elements,
    check_module,
    check_orbits,
    check_projective,
    check_ring,
    generator,
    module_act,
    normalize,
    one,
    orbit,
    projective_fixed_point,
    projective_point,
    ring_add,
    ring_mul,
    stabilizer_qk,
    zero,
)
from nearvec.scalar_group import build_scalar_group, gf
from nearvec.space import quasi_kernel, span


def test_normal_form_examples(v5):
    g = v5.group
    assert normalize(g, [(0, 7)]) == zero(g)
    assert normalize(g, [(4, 1)]).coeffs == ((1, -1),)
    assert normalize(g, [(2, 1), (3, 1)]) == zero(g)
    assert str(normalize(g, [(2, 1), (1, -2)])) == "-2*x[1] + 1*x[2]"


def test_ring_examples(v5):
    g = v5.group
    x1, x2 = generator(g, 1), generator(g, 2)
    a = normalize(g, [(1, 2), (2, -1)])
    assert a + zero(g) == a and a * one(g) == a
    assert x2 * x2 == normalize(g, [(4, 1)]) == -x1
    assert (x1 + x2) * (x1 + -x2) == normalize(g, [(1, 2)])


def test_characteristic_two_fold_is_identity():
    g = build_scalar_group(gf(4))
    for a in g.nonzero:
        assert normalize(g, [(a, 3)]).coeffs == ((a, 3),)


def test_group_mismatch(v5, v7):
    with pytest.raises(GroupMismatch):
        ring_add(one(v5.group), one(v7.group))
    with pytest.raises(GroupMismatch):
        module_act(one(v7.group), v5, (1, 1))


def test_module_act_examples(v5):
    g = v5.group
    assert module_act(one(g), v5, (3, 2)) == (3, 2)
    assert module_act(zero(g), v5, (3, 2)) == (0, 0)
    assert module_act(normalize(g, [(1, 1), (1, 1)]), v5, (1, 1)) == (2, 2)


def test_normal_form_does_not_change_the_action(v5, d3):
    for sp in (v5, d3):
        g = sp.group
        for a, b in product(g.elements, repeat=2):
            terms = [(a, 1), (b, -2), (g.negate(a), 3), (0, 5)]
            for v in sp.carrier:
                assert act_raw(sp, terms, v) == module_act(normalize(g, terms), sp, v)


def test_bounded_elements_count(v5):
    # representatives {1, 2}; six nonzero coefficients each
    assert len(bounded_elements(v5.group, 2, 3)) == 1 + 2 * 6 + 36


def test_ring_axioms(v5, d3):
    assert check_ring(v5.group).passed
    rep = check_ring(d3.group, max_triples=5_000)
    assert rep.passed
    assert not rep.find("multiplication commutative iff F abelian").counts["commutative"]


def test_ring_axioms_brute_force(v5):
    g = v5.group
    els = bounded_elements(g, 1, 2)
    for a, b, c in product(els, repeat=3):
        assert ring_mul(ring_mul(a, b), c) == ring_mul(a, ring_mul(b, c))
        assert ring_mul(a, ring_add(b, c)) == ring_add(ring_mul(a, b), ring_mul(a, c))
        assert ring_mul(a, b) == ring_mul(b, a)


def test_module_axioms(v5, d3):
    assert check_module(v5).passed
    assert check_module(d3, max_pairs=500).passed


def test_orbit_examples(v5):
    assert orbit(v5, (0, 0)) == ((0, 0),)
    assert orbit(v5, (1, 0)) == tuple((x, 0) for x in range(5))
    assert orbit(v5, (1, 1)) == v5.carrier


def test_orbit_equals_span(fixture_spaces):
    for sp in fixture_spaces:
        assert check_orbits(sp).passed
        for v in sp.carrier:
            assert orbit(sp, v) == span(sp, [v])


def test_stabilizer_examples(v5):
    g = v5.group
    s = stabilizer_qk(v5, (1, 0))
    assert s.report.passed and one(g) in s.members
    assert normalize(g, [(2, 1), (4, 1)]) in s.members
    s = stabilizer_qk(v5, (0, 1))
    assert s.report.passed and one(g) in s.members
    assert normalize(g, [(2, 1), (4, 1)]) not in s.members
    assert module_act(normalize(g, [(2, 1), (4, 1)]), v5, (0, 1)) == (0, 2)
    with pytest.raises(NotQuasiKernel):
        stabilizer_qk(v5, (1, 1))
    with pytest.raises(NotQuasiKernel):
        stabilizer_qk(v5, (0, 0))


def test_stabilizer_dickson(d3):
    for q in quasi_kernel(d3)[1:]:
        assert stabilizer_qk(d3, q, 2).report.passed


def test_projective_examples(v5):
    assert projective_fixed_point(v5, (0, 0))[0]
    assert projective_fixed_point(v5, (1, 0))[0]
    fixed, rep = projective_fixed_point(v5, (1, 1))
    assert not fixed and rep.passed
    # (1,0) is also a witness: it lies in Span((1,1)) on a different line
    assert set(v5.line((1, 0))) != set(v5.line((1, 1)))


def test_projective_points(v5):
    p = projective_point(v5, (3, 0))
    assert p.base == (1, 0) and p.line == tuple((x, 0) for x in range(5))
    assert projective_point(v5, (0, 0)).base == (0, 0)


def test_projective_fixed_points_are_quasi_kernel(fixture_spaces):
    for sp in fixture_spaces:
        assert check_projective(sp).passed


@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 4), st.integers(-4, 4)), max_size=5))
def test_normalize_idempotent(terms):
    g = build_scalar_group(gf(5))
    a = normalize(g, terms)
    assert normalize(g, a.coeffs) == a
    assert all(label != 0 and n != 0 for label, n in a.coeffs)
