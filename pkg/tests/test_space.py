from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from nearvec.errors import (
    DegenerateInput,
    InSpan,
    NotGenerated,
    NotGenerating,
    NotIndependent,
    NotInSpan,
    NotNearVectorSpace,
    NotQuasiKernel,
    SpanViolation,
    ZeroBase,
    ZeroVector,
)
from nearvec.scalar_group import build_scalar_group, gf
from nearvec.space import (
    SpaceHandle,
    dim_of,
    dim_span_equiv,
    exchange,
    extend_independent,
    extract_basis,
    induced_add,
    inner_sums,
    is_basis,
    is_generated_by_qk,
    is_independent_by_definition,
    is_linearly_independent,
    is_scalar,
    linear_combinations,
    lsum_report,
    make_space,
    minimal_decomposition,
    plus_classes,
    plus_relations_equal,
    pluses1_scan,
    pluses_scan,
    ql_predicates,
    qk_nonzero,
    quasi_kernel,
    scalar_basis,
    scalar_scan,
    span,
    span_difference_check,
    sum_in_qk,
    theta_decompose,
    verify_induced_addition,
    verify_theta,
)

AXES5 = [(x, 0) for x in range(5)] + [(0, y) for y in range(1, 5)]


def qk_oracle(sp):
    """Triple loop straight from the definition: every a.v + b.v equals some c.v."""
    out = []
    F = list(sp.group.elements)
    for v in sp.carrier:
        if all(any(sp.add(sp.act(a, v), sp.act(b, v)) == sp.act(c, v) for c in F)
               for a in F for b in F):
            out.append(v)
    return out


def dim_oracle(sp, v):
    """Smallest number of distinct nonzero quasi-kernel vectors summing to v, by subsets."""
    if v == sp.zero:
        return 0
    qs = qk_nonzero(sp)
    for r in range(1, len(qs) + 1):
        for A in combinations(qs, r):
            if sp.sum(A) == v:
                return r
    raise AssertionError("not generated")


def closure_oracle(sp, S):
    """Naive closure: repeat full passes until nothing changes."""
    members = set(S) | {sp.zero}
    while True:
        new = {sp.add(x, y) for x in members for y in members}
        new |= {sp.act(a, x) for a in sp.group.elements for x in members}
        if new <= members:
            return tuple(sorted(members))
        members |= new


# -- quasi-kernel and induced addition


def test_quasi_kernel_examples(v5, v5id):
    assert quasi_kernel(v5) == tuple(sorted(AXES5))
    assert len(quasi_kernel(v5id)) == 25


def test_quasi_kernel_matches_oracle(fixture_spaces):
    for sp in fixture_spaces:
        assert list(quasi_kernel(sp)) == qk_oracle(sp)


def test_quasi_kernel_contains_zero_and_is_stable(fixture_spaces):
    for sp in fixture_spaces:
        qk = set(quasi_kernel(sp))
        assert sp.zero in qk
        assert all(sp.act(a, q) in qk for a in sp.group.elements for q in qk)


def test_induced_addition_examples(v5):
    assert induced_add(v5, (1, 0)).plus(1, 1) == 2
    assert all(induced_add(v5, (1, 0)).plus(a, b) == (a + b) % 5 for a in range(5) for b in range(5))
    assert induced_add(v5, (0, 1)).plus(1, 1) == 3


def test_induced_addition_inverse(fixture_spaces):
    for sp in fixture_spaces:
        g = sp.group
        for q in qk_nonzero(sp):
            ia = induced_add(sp, q)
            assert all(ia.plus(a, g.negate(a)) == 0 for a in g.elements)


def test_induced_addition_is_a_near_field(fixture_spaces):
    for sp in fixture_spaces:
        for q in qk_nonzero(sp):
            assert verify_induced_addition(sp, q).passed


def test_right_distributivity_fails_for_dickson(d3):
    """Scalars act on the left, so only c(a + b) = ca + cb is forced."""
    g = d3.group
    bad = 0
    for q in qk_nonzero(d3):
        t = induced_add(d3, q).table
        if any(g.mul(t[a][b], c) != t[g.mul(a, c)][g.mul(b, c)]
               for a in g.elements for b in g.elements for c in g.elements):
            bad += 1
    assert bad == len(qk_nonzero(d3))


def test_dickson_has_four_induced_additions(d3):
    assert len(plus_classes(d3)) == 4


def test_induced_addition_errors(v5):
    with pytest.raises(ZeroBase):
        induced_add(v5, (0, 0))
    with pytest.raises(NotQuasiKernel):
        induced_add(v5, (1, 1))


def test_plus_relations(v5):
    assert plus_relations_equal(v5, (1, 0), (2, 0))
    assert not plus_relations_equal(v5, (1, 0), (0, 1))
    assert plus_relations_equal(v5, (0, 3), (0, 3))


def test_sum_in_qk(v5):
    assert sum_in_qk(v5, [(1, 0), (2, 0)])
    assert not sum_in_qk(v5, [(1, 0), (0, 1)])
    assert sum_in_qk(v5, [(0, 2)])
    with pytest.raises(NotQuasiKernel):
        sum_in_qk(v5, [(1, 1)])


def test_pluses_lemmas(fixture_spaces, v7cube):
    for sp in fixture_spaces + [v7cube]:
        assert pluses1_scan(sp).passed
        assert pluses_scan(sp).passed


# -- span


def test_span_examples(v5):
    assert span(v5, []) == ((0, 0),)
    assert len(span(v5, [(1, 1)])) == 25
    assert span(v5, [(1, 0)]) == tuple((x, 0) for x in range(5))


def test_span_matches_oracles(v5, v7, d3):
    for sp in (v5, v7, d3):
        for v in sp.carrier:
            s = span(sp, [v])
            assert s == linear_combinations(sp, [v]) == closure_oracle(sp, [v])
    for S in combinations(v5.carrier, 2):
        assert span(v5, S) == linear_combinations(v5, S)


def test_span_of_quasi_kernel_sets_is_sum_of_lines(v5, v7):
    for sp in (v5, v7):
        for S in combinations(qk_nonzero(sp), 2):
            assert lsum_report(sp, S).passed


def test_is_scalar(v5, fixture_spaces):
    assert is_scalar(v5, (0, 0))
    assert is_scalar(v5, (1, 0))
    assert not is_scalar(v5, (1, 1))
    for sp in fixture_spaces:
        assert scalar_scan(sp).passed


# -- independence


def test_independence_examples(v5):
    assert is_linearly_independent(v5, [(1, 1)])
    assert is_linearly_independent(v5, [(1, 0), (0, 1)])
    assert not is_linearly_independent(v5, [(1, 1), (0, 1)])
    assert not is_linearly_independent(v5, [])
    assert not is_linearly_independent(v5, [(0, 0), (1, 0)])


def test_ql_predicate_examples(v5):
    assert ql_predicates(v5, [(1, 0), (0, 1)]).values() == (True,) * 6
    assert ql_predicates(v5, [(0, 0), (1, 0)]).values() == (False,) * 6
    assert ql_predicates(v5, [(1, 1), (0, 1)]).values() == (False,) * 6
    assert ql_predicates(v5, []).values() == (False,) * 6


def test_definition_oracle_small_sets(v5id):
    # classical case: independence is ordinary linear independence over GF(5)
    for S in combinations([v for v in v5id.carrier if v != (0, 0)], 2):
        (a, b), (c, d) = S
        assert is_independent_by_definition(v5id, S) == ((a * d - b * c) % 5 != 0)


def test_inner_sums_saturate(v5):
    # for a scalar vector, sums of multiples never leave the line
    assert inner_sums(v5, (1, 0)) == set(v5.line((1, 0)))
    assert len(inner_sums(v5, (1, 1), 3)) > 5


# -- dimension and decomposition


def test_dim_examples(v5):
    assert dim_of(v5, (0, 0)) == 0
    assert dim_of(v5, (1, 0)) == 1
    assert dim_of(v5, (1, 1)) == 2


def test_dim_matches_subset_oracle(v5, v7, d3):
    for sp in (v5, v7, d3):
        for v in sp.carrier:
            assert dim_of(sp, v) == dim_oracle(sp, v)


def test_minimal_decomposition_is_valid(v5, v7):
    for sp in (v5, v7):
        qk = set(quasi_kernel(sp))
        for v in sp.carrier:
            parts = minimal_decomposition(sp, v)
            assert sp.sum(parts) == v and len(parts) == len(set(parts)) == dim_of(sp, v)
            assert set(parts) <= qk


def test_not_generated():
    # pretend only the first axis is scalar: the second axis is then unreachable
    sp = make_space(gf(5), (1, 3))
    broken = SpaceHandle(sp.group, sp.carrier, sp.zero, sp._add, sp._act, sp._neg)
    broken._qk = ((0, 0), (1, 0), (2, 0), (3, 0), (4, 0))
    with pytest.raises(NotGenerated):
        dim_of(broken, (0, 1))
    assert not is_generated_by_qk(broken)
    with pytest.raises(NotNearVectorSpace):
        scalar_basis(broken)


def test_theta_examples(v5):
    td = theta_decompose(v5, (1, 1))
    assert td.parts == ((0, 1), (1, 0))
    assert verify_theta(v5, td).passed
    assert theta_decompose(v5, (3, 0)).parts == ((3, 0),)
    with pytest.raises(ZeroVector):
        theta_decompose(v5, (0, 0))


def test_theta_all_fixture_spaces(fixture_spaces, v7cube):
    for sp in fixture_spaces + [v7cube]:
        for v in sp.carrier:
            if v != sp.zero:
                assert verify_theta(sp, theta_decompose(sp, v)).passed


def test_theta_trace_records_cancellation(v7cube):
    v = (1, 1, 1)
    td = theta_decompose(v7cube, v)
    assert len(td.parts) == dim_of(v7cube, v) == 2
    assert td.trace and all(step["q1"] != step["q2"] for step in td.trace)


# -- bases


def test_extend_independent(v5):
    assert extend_independent(v5, [(1, 0)], (1, 1)) == (0, 1)
    assert extend_independent(v5, [(0, 1)], (1, 1)) == (1, 0)
    with pytest.raises(InSpan):
        extend_independent(v5, [(1, 0)], (2, 0))
    with pytest.raises(NotIndependent):
        extend_independent(v5, [(1, 1), (0, 1)], (1, 0))


def test_extract_basis_examples(v5):
    assert extract_basis(v5, qk_nonzero(v5)) == ((0, 1), (1, 0))
    assert extract_basis(v5, [(1, 1)]) == ((1, 1),)
    assert extract_basis(v5, [(0, 0), (1, 1)], target=[(0, 0)]) == ()
    with pytest.raises(NotGenerating):
        extract_basis(v5, [(1, 0)])


def test_extract_basis_may_leave_the_generating_set(v7cube):
    """A maximal independent subset of S need not generate; completion leaves S."""
    S = [(1, 0, 1), (0, 1, 1)]
    assert len(span(v7cube, S)) == 343
    assert not is_linearly_independent(v7cube, S)
    B = extract_basis(v7cube, S)
    assert is_basis(v7cube, B)
    assert not set(B) <= set(S)


def test_extract_basis_from_quasi_kernel_stays_inside(v7cube, fixture_spaces):
    for sp in fixture_spaces + [v7cube]:
        qs = qk_nonzero(sp)
        B = extract_basis(sp, qs)
        assert set(B) <= set(qs) and is_basis(sp, B)


def test_exchange_examples(v5):
    assert exchange(v5, [(1, 0)], [(1, 0), (0, 1)]) == ((0, 1),)
    assert exchange(v5, [(1, 0), (0, 1)], [(1, 0), (0, 1)]) == ()
    T0 = exchange(v5, [(2, 0)], [(1, 0), (0, 1)])
    assert T0 == ((0, 1),)
    assert len(span(v5, [(2, 0)] + list(T0))) == 25


def test_exchange_errors(v5):
    with pytest.raises(NotQuasiKernel):
        exchange(v5, [(1, 1)], [(1, 0), (0, 1)])
    with pytest.raises(NotIndependent):
        exchange(v5, [(1, 0), (2, 0)], [(1, 0), (0, 1)])
    with pytest.raises(SpanViolation):
        exchange(v5, [(0, 1)], [(1, 0)])


def test_exchange_all_pairs(v7):
    qs = qk_nonzero(v7)
    B = scalar_basis(v7)
    for S in combinations(qs, 2):
        if is_linearly_independent(v7, S):
            T0 = exchange(v7, S, B)
            assert len(S) + len(T0) == len(B)


def test_scalar_basis_examples(v5, v5id):
    assert len(scalar_basis(v5)) == 2
    assert len(scalar_basis(v5id)) == 2
    g = build_scalar_group(gf(5))
    trivial = SpaceHandle(g, [()], (), lambda v, w: (), lambda a, v: (), lambda v: ())
    assert scalar_basis(trivial) == ()


def test_scalar_bases_have_one_size(fixture_spaces, v7cube):
    import random

    for sp in fixture_spaces + [v7cube]:
        qs = list(qk_nonzero(sp))
        sizes = {len(scalar_basis(sp)), len(scalar_basis(sp, reverse=True))}
        rng = random.Random(0)
        for _ in range(5):
            rng.shuffle(qs)
            sizes.add(len(extract_basis(sp, qs)))
        assert len(sizes) == 1


# -- span theorems


def test_span_difference_examples(v5):
    r = span_difference_check(v5, (1, 1), 2, 1)
    assert r.passed and r.checks[0].counts["size"] == 25 and r.checks[1].counts["dim"] == 2
    assert span_difference_check(v5, (1, 0), 1, 0).passed
    assert span_difference_check(v5, (0, 1), 4, 1).passed
    with pytest.raises(DegenerateInput):
        span_difference_check(v5, (1, 1), 2, 2)
    with pytest.raises(DegenerateInput):
        span_difference_check(v5, (0, 0), 1, 2)


def test_span_difference_exhaustive(v5, v7, d3):
    for sp in (v5, v7, d3):
        for v in sp.carrier:
            if v == sp.zero:
                continue
            for a, b in product(sp.group.elements, repeat=2):
                if a != b:
                    assert span_difference_check(sp, v, a, b).passed


def test_dim_span_examples(v5):
    r = dim_span_equiv(v5, (1, 1), (2, 3))
    assert r.passed and r.checks[0].counts["same_span"] and r.checks[0].counts["same_dim"]
    r = dim_span_equiv(v5, (1, 1), (1, 0))
    assert r.passed and not r.checks[0].counts["same_span"] and not r.checks[0].counts["same_dim"]
    with pytest.raises(NotInSpan):
        dim_span_equiv(v5, (1, 0), (0, 1))


def test_dim_span_exhaustive(v5, v7):
    for sp in (v5, v7):
        for v in sp.carrier:
            if v != sp.zero:
                for w in span(sp, [v]):
                    assert dim_span_equiv(sp, v, w).passed


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_span_is_closed_and_minimal(data):
    sp = make_space(gf(7), (1, 5))
    S = data.draw(st.lists(st.sampled_from(sp.carrier), max_size=3))
    s = set(span(sp, S))
    assert set(S) <= s
    assert all(sp.add(x, y) in s for x in s for y in s)
    assert all(sp.act(a, x) in s for a in sp.group.elements for x in s)
    # minimal: every element is a sum of multiples of S
    assert s == set(linear_combinations(sp, S))
