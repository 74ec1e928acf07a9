"""Subspaces, linear maps, quotients and the first isomorphism theorem."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import GroupMismatch, NotLinear, NotSubspace
from .report import VerificationReport, timed
from .space import (
    SpaceHandle,
    VectorSet,
    induced_add,
    is_generated_by_qk,
    quasi_kernel,
    qk_nonzero,
    scalar_basis,
    span_set,
    vset,
)


@dataclass(frozen=True)
class Subspace:
    parent: SpaceHandle
    members: VectorSet

    def __contains__(self, v) -> bool:
        return v in set(self.members)


def is_subspace(sp: SpaceHandle, S) -> bool:
    S = set(S)
    if not S or not S <= set(sp.carrier):
        return False
    if any(sp.add(x, y) not in S for x in S for y in S):
        return False
    return all(sp.act(a, x) in S for a in sp.group.elements for x in S)


def make_subspace(sp: SpaceHandle, S) -> Subspace:
    if not is_subspace(sp, S):
        raise NotSubspace(f"{vset(S)[:6]}... is not closed under addition and the action")
    return Subspace(sp, vset(S))


def subspace_as_space(sub: Subspace, verify: bool = True) -> tuple[SpaceHandle, VerificationReport]:
    """Restrict the parent's operations to W.

    When ``verify`` is set the report checks that Q(W) = W n Q(V) and that
    Q(W) generates W additively.
    """
    sp = sub.parent
    w = SpaceHandle(sp.group, sub.members, sp.zero, sp._add, sp._act, sp._neg,
                    name=f"subspace of {sp.name} ({len(sub.members)} vectors)")
    rep = VerificationReport(f"subspace {len(sub.members)} vectors as near-vector space")
    if verify:
        with timed(rep):
            members = set(sub.members)
            qw = set(quasi_kernel(w))
            expected = members & set(quasi_kernel(sp))
            rep.add("Q(W) = W n Q(V)", qw == expected, sorted(qw ^ expected)[:4],
                    qk=len(qw))
            rep.add("Q(W) generates W", is_generated_by_qk(w), None, size=len(members))
    return w, rep


# -- linear maps -----------------------------------------------------------------


@dataclass
class LinearMap:
    domain: SpaceHandle
    codomain: SpaceHandle
    table: dict = field(repr=False)
    name: str = "f"

    def __call__(self, v):
        return self.table[v]


def linearity_report(f: LinearMap) -> VerificationReport:
    d, c = f.domain, f.codomain
    rep = VerificationReport(f"linearity of {f.name}")
    missing = next((v for v in d.carrier if v not in f.table), None)
    rep.add("total on domain", missing is None, missing)
    if missing is not None:
        return rep
    outside = next((v for v in d.carrier if f(v) not in c), None)
    rep.add("lands in codomain", outside is None, outside)
    bad = next(((x, y) for x in d.carrier for y in d.carrier
                if f(d.add(x, y)) != c.add(f(x), f(y))), None)
    rep.add("f(x+y) = f(x)+f(y)", bad is None, bad)
    bad = next(((a, x) for a in d.group.elements for x in d.carrier
                if f(d.act(a, x)) != c.act(a, f(x))), None)
    rep.add("f(a.x) = a.f(x)", bad is None, bad)
    return rep


def linear_map(domain: SpaceHandle, codomain: SpaceHandle, table: dict, name: str = "f") -> LinearMap:
    if domain.group is not codomain.group and domain.group.mul_table != codomain.group.mul_table:
        raise GroupMismatch("domain and codomain use different scalar groups")
    f = LinearMap(domain, codomain, dict(table), name)
    rep = linearity_report(f)
    if not rep.passed:
        raise NotLinear(f"{name} is not linear: {rep.failures()[0].name} at {rep.failures()[0].witness}")
    return f


def map_from_basis(domain: SpaceHandle, codomain: SpaceHandle, images: dict, name: str = "f") -> LinearMap:
    """Complete a map given on scalar-basis vectors by closing under + and the action.

    Raises NotLinear if the closure assigns two images to one vector.
    """
    table = {domain.zero: codomain.zero}
    for b, img in images.items():
        for a in domain.group.elements:
            x, y = domain.act(a, b), codomain.act(a, img)
            if table.setdefault(x, y) != y:
                raise NotLinear(f"conflicting images for {x}: {table[x]} and {y}")
    known = list(table)
    frontier = list(table)
    while frontier:
        nxt = []
        for x in frontier:
            for y in list(known):
                z = domain.add(x, y)
                fz = codomain.add(table[x], table[y])
                if z in table:
                    if table[z] != fz:
                        raise NotLinear(f"conflicting images for {z}: {table[z]} and {fz}")
                else:
                    table[z] = fz
                    known.append(z)
                    nxt.append(z)
        frontier = nxt
    if len(table) != len(domain.carrier):
        raise NotLinear("basis images do not determine the map on the whole domain")
    return linear_map(domain, codomain, table, name)


def compatible_images(sp: SpaceHandle, b) -> list:
    """Targets for a basis vector b that respect its induced addition: 0 or q with +_q = +_b."""
    plus = induced_add(sp, b).table
    return [sp.zero] + [q for q in qk_nonzero(sp) if induced_add(sp, q).table == plus]


def random_basis_maps(sp: SpaceHandle, count: int, seed: int = 0) -> list[LinearMap]:
    """``count`` endomorphisms defined by random compatible images of a scalar basis."""
    rng = random.Random(seed)
    basis = scalar_basis(sp)
    choices = [compatible_images(sp, b) for b in basis]
    out = []
    for i in range(count):
        images = {b: rng.choice(c) for b, c in zip(basis, choices)}
        out.append(map_from_basis(sp, sp, images, name=f"random map {i}"))
    return out


def identity_map(sp: SpaceHandle) -> LinearMap:
    return LinearMap(sp, sp, {v: v for v in sp.carrier}, "identity")


def zero_map(sp: SpaceHandle) -> LinearMap:
    return LinearMap(sp, sp, {v: sp.zero for v in sp.carrier}, "zero map")


def kernel(f: LinearMap) -> Subspace:
    return make_subspace(f.domain, [v for v in f.domain.carrier if f(v) == f.codomain.zero])


def image(f: LinearMap) -> Subspace:
    return make_subspace(f.codomain, {f(v) for v in f.domain.carrier})


def qk_preimage_check(f: LinearMap) -> VerificationReport:
    target = set(quasi_kernel(f.codomain))
    bad = [v for v in quasi_kernel(f.domain) if f(v) not in target]
    rep = VerificationReport(f"Q(V) maps into Q(V') under {f.name}")
    rep.add("f(Q(V)) in Q(V')", not bad, bad[:1], qk=len(quasi_kernel(f.domain)))
    return rep


# -- quotients -------------------------------------------------------------------


@dataclass
class QuotientSpace:
    parent: SpaceHandle
    subspace: Subspace
    cosets: list
    rep: dict = field(repr=False)          # vector -> canonical representative
    space: SpaceHandle = field(repr=False)
    projection: LinearMap = field(repr=False)
    report: VerificationReport = field(repr=False)


def quotient(sp: SpaceHandle, W: Subspace) -> QuotientSpace:
    if not is_subspace(sp, W.members):
        raise NotSubspace("quotient needs a subspace")
    members = W.members
    rep_of: dict = {}
    cosets = []
    for v in sp.carrier:
        if v in rep_of:
            continue
        coset = vset(sp.add(v, w) for w in members)
        r = coset[0]
        for x in coset:
            rep_of[x] = r
        cosets.append(coset)

    def add(x, y):
        return rep_of[sp.add(x, y)]

    def act(a, x):
        return rep_of[sp.act(a, x)]

    def neg(x):
        return rep_of[sp.neg(x)]

    reps = [c[0] for c in cosets]
    qs = SpaceHandle(sp.group, reps, rep_of[sp.zero], add, act, neg,
                     name=f"{sp.name} / ({len(members)} vectors)")
    pi = LinearMap(sp, qs, dict(rep_of), "projection")
    report = VerificationReport(f"quotient by {len(members)}-vector subspace")
    with timed(report):
        report.add("cosets partition the carrier",
                   sum(map(len, cosets)) == len(sp.carrier) and len(rep_of) == len(sp.carrier),
                   None, cosets=len(cosets))
        # well-definedness: result independent of representative choice
        bad = None
        for c in cosets:
            for x in c:
                for y in reps:
                    if rep_of[sp.add(x, y)] != rep_of[sp.add(c[0], y)]:
                        bad = ("+", x, y)
                        break
                for a in sp.group.elements:
                    if rep_of[sp.act(a, x)] != rep_of[sp.act(a, c[0])]:
                        bad = (".", a, x)
                        break
                if bad:
                    break
            if bad:
                break
        report.add("induced operations well defined", bad is None, bad)
        F = sp.group.elements
        bad = next(((a, b, c) for c in reps if c != qs.zero for a in F for b in F
                    if a < b and act(a, c) == act(b, c)), None)
        report.add("induced action free (exhaustive)", bad is None, bad)
        # the argument used for freeness: v lies in Span(a.v - b.v), so if that
        # difference were in W then v would be too
        inside = set(members)
        bad = None
        for c in reps:
            if c == qs.zero:
                continue
            for a in F:
                for b in F:
                    if a < b and bad is None:
                        d = sp.sub(sp.act(a, c), sp.act(b, c))
                        if c not in span_set(sp, [d]) or d in inside:
                            bad = (a, b, c)
        report.add("freeness via v in Span(a.v - b.v)", bad is None, bad)
        qq = set(quasi_kernel(qs))
        bad = next((q for q in quasi_kernel(sp) if rep_of[q] not in qq), None)
        report.add("pi(Q(V)) in Q(V/W)", bad is None, bad, qk=len(qq))
        report.add("Q(V/W) generates V/W", is_generated_by_qk(qs), None)
        report.extend(linearity_report(pi))
        ker = vset(v for v in sp.carrier if rep_of[v] == qs.zero)
        report.add("Ker(pi) = W", ker == members, None, kernel=len(ker))
    return QuotientSpace(sp, W, cosets, rep_of, qs, pi, report)


def first_isomorphism(f: LinearMap) -> tuple[LinearMap, VerificationReport]:
    """phi(v + Ker f) = f(v) from V/Ker f onto Im f."""
    K = kernel(f)
    Q = quotient(f.domain, K)
    im, im_rep = subspace_as_space(image(f))
    rep = VerificationReport(f"first isomorphism for {f.name}")
    with timed(rep):
        rep.extend(Q.report)
        rep.extend(im_rep)
        table = {}
        bad = None
        for c in Q.cosets:
            values = {f(x) for x in c}
            if len(values) != 1:
                bad = c[0]
            table[c[0]] = f(c[0])
        rep.add("phi well defined", bad is None, bad)
        phi = LinearMap(Q.space, im, table, "phi")
        rep.extend(linearity_report(phi))
        values = list(table.values())
        bij = len(set(values)) == len(values) and set(values) == set(im.carrier)
        rep.add("phi bijective", bij, None, cosets=len(Q.cosets), image=len(im.carrier))
    return phi, rep


def subspace_kernel_correspondence(sp: SpaceHandle, S) -> VerificationReport:
    rep = VerificationReport(f"subspace as kernel ({len(set(S))} vectors)")
    if not is_subspace(sp, S):
        rep.add("is a subspace", False, vset(S)[:4])
        rep.note = "not a subspace, no kernel witness claimed"
        return rep
    Q = quotient(sp, Subspace(sp, vset(S)))
    ker = vset(v for v in sp.carrier if Q.projection(v) == Q.space.zero)
    rep.add("Ker(pi) = S", ker == vset(S), None, cosets=len(Q.cosets))
    return rep
