"""The full verification suite for one space definition."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .action import verify_action
from .definition import SpaceDefinition, build_space
from .errors import NotNearVectorSpace
from .monoid_algebra import (
    check_module,
    check_orbits,
    check_projective,
    check_ring,
    stabilizer_qk,
)
from .morphism import (
    LinearMap,
    Subspace,
    first_isomorphism,
    linear_map,
    qk_preimage_check,
    quotient,
    random_basis_maps,
    subspace_as_space,
    subspace_kernel_correspondence,
)
from .report import VerificationReport, timed
from .scalar_group import verify_scalar_group
from .space import (
    SpaceHandle,
    extract_basis,
    dim_span_equiv,
    is_basis,
    is_generated_by_qk,
    lsum_report,
    plus_classes,
    pluses1_scan,
    pluses_scan,
    ql_predicates,
    qk_nonzero,
    quasi_kernel,
    scalar_basis,
    scalar_scan,
    span,
    span_difference_check,
    theta_decompose,
    verify_induced_addition,
    verify_theta,
)


@dataclass(frozen=True)
class SuiteOptions:
    """Enumeration caps. Sets beyond ``ql_max_sets`` are sampled with ``seed``."""

    ql_max_size: int = 3
    ql_max_sets: int = 3_000
    dimspan_samples: int = 200
    card_shuffles: int = 3
    random_maps: int = 10
    stabilizer_bound: int = 3
    seed: int = 0


def _subsets(items, max_size, cap, rng):
    """All subsets of size <= max_size (including the empty set), or a sample of ``cap``."""
    n = len(items)
    total = sum(comb(n, r) for r in range(max_size + 1))
    if total <= cap:
        for r in range(max_size + 1):
            yield from combinations(items, r)
        return
    for _ in range(cap):
        r = rng.randint(0, max_size)
        yield tuple(sorted(rng.sample(items, r)))


def certify(sp: SpaceHandle) -> VerificationReport:
    rep = VerificationReport("near-vector space certification")
    with timed(rep):
        qk = quasi_kernel(sp)
        gen = is_generated_by_qk(sp)
        rep.add("Q(V) generates V additively", gen, None, qk=len(qk), carrier=len(sp.carrier),
                qk_is_carrier=len(qk) == len(sp.carrier))
        if gen:
            try:
                B = scalar_basis(sp)
                rep.add("scalar basis exists", is_basis(sp, B), B, size=len(B), basis=B)
            except NotNearVectorSpace as e:
                rep.add("scalar basis exists", False, str(e))
        for cls in plus_classes(sp):
            rep.extend(verify_induced_addition(sp, cls[0]))
        rep.extend(scalar_scan(sp))
    return rep


def ql_section(sp: SpaceHandle, opts: SuiteOptions) -> VerificationReport:
    rng = random.Random(opts.seed)
    rep = VerificationReport(f"six independence characterisations, |S| <= {opts.ql_max_size}")
    with timed(rep):
        bad, count, indep = None, 0, 0
        for S in _subsets(list(sp.carrier), opts.ql_max_size, opts.ql_max_sets, rng):
            count += 1
            p = ql_predicates(sp, S)
            indep += p.definition
            if bad is None and not p.agree:
                bad = (S, p.values())
        rep.add("all six agree", bad is None, bad, sets=count, independent=indep)
        bad, count, reading = None, 0, 0
        qs = list(qk_nonzero(sp))
        for S in _subsets(qs, opts.ql_max_size, opts.ql_max_sets, rng):
            if not S:
                continue
            count += 1
            r = lsum_report(sp, S)
            reading += r.counts["membership_reading"] == r.checks[1].counts["independent"]
            if bad is None and not r.passed:
                bad = S
        rep.add("quasi-kernel sets: Span(S) = sum of lines, equivalences hold", bad is None, bad,
                sets=count, membership_reading_agrees=reading)
    return rep


def theta_section(sp: SpaceHandle) -> VerificationReport:
    rep = VerificationReport("theta decomposition of every nonzero vector")
    with timed(rep):
        bad, dims = None, {}
        for v in sp.carrier:
            if v == sp.zero:
                continue
            r = verify_theta(sp, theta_decompose(sp, v))
            d = len(theta_decompose(sp, v).parts)
            dims[d] = dims.get(d, 0) + 1
            if bad is None and not r.passed:
                bad = (v, r.failures()[0].name)
        rep.add("sum, size, direct sum, independence", bad is None, bad,
                dimension_histogram=dims)
    return rep


def spanlemma_section(sp: SpaceHandle) -> VerificationReport:
    rep = VerificationReport("Span(v) = Span(a.v - b.v) for all v != 0, a != b")
    with timed(rep):
        bad, count = None, 0
        F = sp.group.elements
        for v in sp.carrier:
            if v == sp.zero:
                continue
            for a in F:
                for b in F:
                    if a != b:
                        count += 1
                        r = span_difference_check(sp, v, a, b)
                        if bad is None and not r.passed:
                            bad = (v, a, b)
        rep.add("span and dimension equal", bad is None, bad, triples=count)
    return rep


def dimspan_section(sp: SpaceHandle, opts: SuiteOptions) -> VerificationReport:
    rng = random.Random(opts.seed)
    nonzero = [v for v in sp.carrier if v != sp.zero]
    rep = VerificationReport("for w in Span(v): Span(v) = Span(w) iff dim(v) = dim(w)")
    with timed(rep):
        bad, same = None, 0
        for _ in range(opts.dimspan_samples if nonzero else 0):
            v = rng.choice(nonzero)
            w = rng.choice(span(sp, [v]))
            r = dim_span_equiv(sp, v, w)
            same += r.checks[0].counts["same_span"]
            if bad is None and not r.passed:
                bad = (v, w)
        rep.add("equivalence on sampled pairs", bad is None, bad,
                samples=opts.dimspan_samples, seed=opts.seed, same_span=same)
    return rep


def card_section(sp: SpaceHandle, opts: SuiteOptions) -> VerificationReport:
    rep = VerificationReport("scalar bases share one cardinality")
    with timed(rep):
        if len(sp.carrier) == 1:
            rep.note = "trivial space"
            return rep
        fwd, rev = scalar_basis(sp), scalar_basis(sp, reverse=True)
        sizes = {len(fwd), len(rev)}
        rng = random.Random(opts.seed)
        qs = list(qk_nonzero(sp))
        for _ in range(opts.card_shuffles):
            rng.shuffle(qs)
            sizes.add(len(extract_basis(sp, qs)))
        rep.add("forward and reversed enumeration", len(fwd) == len(rev), (fwd, rev),
                forward=fwd, reversed=rev)
        rep.add(f"plus {opts.card_shuffles} seeded shuffles", len(sizes) == 1, sorted(sizes))
        cyclic = next((v for v in sp.carrier if len(span(sp, [v])) == len(sp.carrier)), None)
        if cyclic is not None and len(fwd) > 1:
            rep.add("single-vector F-basis coexists with a larger scalar basis",
                    is_basis(sp, [cyclic]), cyclic, f_basis=[cyclic], scalar_basis_size=len(fwd))
    return rep


def coordinate_projection(sp: SpaceHandle) -> LinearMap:
    """Keep the first coordinate, zero the rest; linear because the action is coordinatewise."""
    table = {v: (v[0],) + (0,) * (len(v) - 1) for v in sp.carrier}
    return linear_map(sp, sp, table, "first-coordinate projection")


def quotient_section(sp: SpaceHandle, opts: SuiteOptions) -> VerificationReport:
    rep = VerificationReport("subspaces, quotients and the first isomorphism theorem")
    with timed(rep):
        seen = set()
        bad, count = None, 0
        for q in qk_nonzero(sp):
            W = span(sp, [q])
            if W in seen:
                continue
            seen.add(W)
            count += 1
            sub = Subspace(sp, W)
            checks = [subspace_as_space(sub)[1], quotient(sp, sub).report,
                      subspace_kernel_correspondence(sp, W)]
            fail = next((c for c in checks if not c.passed), None)
            if bad is None and fail is not None:
                bad = (q, fail.failures()[0].name)
        rep.add("Span(q) is a near-vector space and V/Span(q) certifies", bad is None, bad,
                cyclic_subspaces=count)
        maps = [coordinate_projection(sp)] if sp.n else []
        maps += random_basis_maps(sp, opts.random_maps, opts.seed)
        bad = None
        for f in maps:
            _, r = first_isomorphism(f)
            r2 = qk_preimage_check(f)
            if bad is None and not (r.passed and r2.passed):
                bad = f.name
        rep.add("V/Ker f = Im f for projection and seeded random maps", bad is None, bad,
                maps=len(maps), seed=opts.seed)
    return rep


def algebra_section(sp: SpaceHandle, opts: SuiteOptions) -> VerificationReport:
    rep = VerificationReport("scalar monoid ring Z[F]")
    with timed(rep):
        rep.extend(check_ring(sp.group, seed=opts.seed))
        rep.extend(check_module(sp, seed=opts.seed))
        rep.extend(check_orbits(sp))
        rep.extend(check_projective(sp))
        for cls in plus_classes(sp):
            rep.extend(stabilizer_qk(sp, cls[0], opts.stabilizer_bound).report)
    return rep


def run_suite(d: SpaceDefinition, opts: SuiteOptions | None = None) -> list[VerificationReport]:
    """Every check, in a fixed order. Stops after certification if Q(V) does not generate."""
    opts = opts or SuiteOptions()
    sp = build_space(d)
    out = []
    r = verify_scalar_group(sp.group)
    r.name = f"scalar group {d.field}"
    out.append(r)
    out.append(verify_action(sp.action))
    cert = certify(sp)
    out.append(cert)
    if not cert.passed:
        return out
    for scan in (pluses1_scan(sp), pluses_scan(sp)):
        out.append(scan)
    out.append(ql_section(sp, opts))
    out.append(theta_section(sp))
    out.append(spanlemma_section(sp))
    out.append(dimspan_section(sp, opts))
    out.append(card_section(sp, opts))
    out.append(quotient_section(sp, opts))
    out.append(algebra_section(sp, opts))
    return out
