"""Near-vector space engine over a finite carrier.

A :class:`SpaceHandle` bundles a scalar group with an abelian group carrier
and an action. Every operation here works on any handle: coordinate spaces
F^n, subspaces, and quotients alike. Sets of vectors are returned as sorted
tuples (``VectorSet``) so results are deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable

from .action import ActionSpec, ActionTable, build_action
from .errors import (
    AxiomFailure,
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
from .report import VerificationReport, timed
from .scalar_group import ScalarGroup, ScalarGroupSpec, build_scalar_group

VectorSet = tuple

MAX_CARRIER = 10 ** 5
# sums are memoized on carriers up to this size (at most its square entries)
ADD_MEMO_CARRIER = 400


class SpaceHandle:
    """An abelian group with a scalar-group action, plus write-once caches."""

    def __init__(self, group: ScalarGroup, carrier: Iterable, zero, add: Callable,
                 act: Callable, neg: Callable, name: str = "V", n: int | None = None,
                 action: ActionTable | None = None):
        self.group = group
        self.carrier = tuple(sorted(carrier))
        if len(self.carrier) > MAX_CARRIER:
            raise ValueError(f"carrier of size {len(self.carrier)} exceeds {MAX_CARRIER}")
        self.zero = zero
        self._add = add
        self._act = act
        self._neg = neg
        self.name = name
        self.n = n
        self.action = action
        self._members = frozenset(self.carrier)
        self._qk: VectorSet | None = None
        self._lines: dict = {}
        self._plus: dict = {}
        self._spans: dict = {}
        self._bfs: tuple[dict, dict] | None = None
        self._sums: dict | None = {} if len(self.carrier) <= ADD_MEMO_CARRIER else None

    def __repr__(self) -> str:
        return f"SpaceHandle({self.name}, |V|={len(self.carrier)})"

    def __contains__(self, v) -> bool:
        return v in self._members

    def add(self, v, w):
        memo = self._sums
        if memo is None:
            return self._add(v, w)
        key = (v, w)
        out = memo.get(key)
        if out is None:
            out = memo[key] = self._add(v, w)
        return out

    def neg(self, v):
        return self._neg(v)

    def sub(self, v, w):
        return self._add(v, self._neg(w))

    def act(self, alpha: int, v):
        return self._act(alpha, v)

    def sum(self, vectors) -> object:
        total = self.zero
        for v in vectors:
            total = self._add(total, v)
        return total

    def line(self, v) -> dict:
        """F.v as a map vector -> scalar (unique for v != 0 by freeness)."""
        cached = self._lines.get(v)
        if cached is not None:
            return cached
        out = {}
        for alpha in self.group.elements:
            w = self._act(alpha, v)
            if w in out and v != self.zero:
                raise AxiomFailure(f"action not free at {v}: {out[w]} and {alpha} agree")
            out.setdefault(w, alpha)
        self._lines[v] = out
        return out


def coordinate_space(group: ScalarGroup, action: ActionTable, name: str | None = None) -> SpaceHandle:
    if name is None:
        name = f"{group.spec}^{action.n} exponents={','.join(map(str, action.exponents or ()))}"
    return SpaceHandle(group, action.carrier(), action.zero(), action.add, action.act,
                       action.neg, name=name, n=action.n, action=action)


def make_space(spec: ScalarGroupSpec, exponents) -> SpaceHandle:
    """Build F^n with the given per-coordinate exponents."""
    g = build_scalar_group(spec)
    exps = tuple(exponents)
    table = build_action(g, len(exps), ActionSpec(exps))
    return coordinate_space(g, table)


def vset(vectors: Iterable) -> VectorSet:
    return tuple(sorted(set(vectors)))


# -- quasi-kernel and induced additions ----------------------------------------


def quasi_kernel(sp: SpaceHandle) -> VectorSet:
    """All v with: for every alpha, beta some gamma has alpha.v + beta.v = gamma.v."""
    if sp._qk is None:
        elems = list(sp.group.elements)
        out = []
        for v in sp.carrier:
            images = [sp.act(a, v) for a in elems]
            line = set(images)
            if all(sp.add(x, y) in line for x in images for y in images):
                out.append(v)
        sp._qk = tuple(out)
    return sp._qk


def qk_nonzero(sp: SpaceHandle) -> VectorSet:
    return tuple(v for v in quasi_kernel(sp) if v != sp.zero)


@dataclass
class InducedAddition:
    """The addition alpha +_v beta on scalars induced by a quasi-kernel vector."""

    base: object
    table: tuple
    group: ScalarGroup = field(repr=False)

    def plus(self, a: int, b: int) -> int:
        return self.table[a][b]

    def minus(self, a: int, b: int) -> int:
        return self.table[a][self.group.negate(b)]

    def iterated_sum(self, scalars) -> int:
        total = 0
        for s in scalars:
            total = self.table[total][s]
        return total


def induced_add(sp: SpaceHandle, v) -> InducedAddition:
    if v == sp.zero:
        raise ZeroBase("induced addition needs a nonzero base vector")
    cached = sp._plus.get(v)
    if cached is not None:
        return cached
    if v not in set(quasi_kernel(sp)):
        raise NotQuasiKernel(f"{v} is not in the quasi-kernel")
    line = sp.line(v)
    images = [sp.act(a, v) for a in sp.group.elements]
    table = tuple(tuple(line[sp.add(x, y)] for y in images) for x in images)
    ia = InducedAddition(v, table, sp.group)
    sp._plus[v] = ia
    return ia


def verify_induced_addition(sp: SpaceHandle, v) -> VerificationReport:
    """Check that (F, +_v, .) is a near-field.

    Scalars act on the left, so the law that holds in general is
    gamma.(alpha +_v beta) = gamma.alpha +_v gamma.beta.
    """
    ia = induced_add(sp, v)
    g = sp.group
    F = list(g.elements)
    t = ia.table
    rep = VerificationReport(f"induced addition +_{v}")
    with timed(rep):
        bad = next(((a, b) for a in F for b in F
                    if sp.act(t[a][b], v) != sp.add(sp.act(a, v), sp.act(b, v))), None)
        rep.add("(a +_v b).v = a.v + b.v", bad is None, bad)
        bad = next((a for a in F if t[0][a] != a or t[a][0] != a), None)
        rep.add("0 is neutral", bad is None, bad)
        bad = next(((a, b) for a in F for b in F if (t[a][b] == 0) != (b == g.negate(a))), None)
        rep.add("a +_v b = 0 iff b = -a", bad is None, bad)
        bad = next(((a, b) for a in F for b in F if t[a][b] != t[b][a]), None)
        rep.add("commutative", bad is None, bad)
        bad = next(((a, b, c) for a in F for b in F for c in F
                    if t[t[a][b]][c] != t[a][t[b][c]]), None)
        rep.add("associative", bad is None, bad)
        m = g.mul_table
        bad = next(((c, a, b) for c in F for a in F for b in F
                    if m[c][t[a][b]] != t[m[c][a]][m[c][b]]), None)
        rep.add("left distributive c(a +_v b) = ca +_v cb", bad is None, bad)
    return rep


def plus_relations_equal(sp: SpaceHandle, q1, q2) -> bool:
    return induced_add(sp, q1).table == induced_add(sp, q2).table


def sum_in_qk(sp: SpaceHandle, A) -> bool:
    A = list(A)
    if not A:
        raise ValueError("A must be nonempty")
    qk = set(quasi_kernel(sp))
    for a in A:
        if a not in qk:
            raise NotQuasiKernel(f"{a} is not in the quasi-kernel")
    return sp.sum(A) in qk


# -- span ------------------------------------------------------------------------


SPAN_CACHE_LIMIT = 50_000


def span_set(sp: SpaceHandle, S=()) -> frozenset:
    """Least subset containing S (and 0) closed under + and the action.

    Worklist fixpoint: each new element is added to every known element and
    multiplied by every scalar until nothing new appears. Results are cached
    per generating set.
    """
    key = frozenset(S)
    cached = sp._spans.get(key)
    if cached is not None:
        return cached
    members = {sp.zero}
    order = [sp.zero]
    work = deque()
    for s in sorted(key):
        if s not in members:
            members.add(s)
            order.append(s)
            work.append(s)
    F = list(sp.group.elements)
    while work:
        x = work.popleft()
        fresh = []
        for alpha in F:
            y = sp.act(alpha, x)
            if y not in members:
                fresh.append(y)
                members.add(y)
        for y in list(order):
            z = sp.add(x, y)
            if z not in members:
                fresh.append(z)
                members.add(z)
        order.extend(fresh)
        work.extend(fresh)
    out = frozenset(members)
    if len(sp._spans) >= SPAN_CACHE_LIMIT:
        sp._spans.clear()
    sp._spans[key] = out
    return out


def span(sp: SpaceHandle, S=()) -> VectorSet:
    """Span(S) as a sorted tuple."""
    return tuple(sorted(span_set(sp, S)))


def linear_combinations(sp: SpaceHandle, S=()) -> VectorSet:
    """All finite sums of scalar multiples of elements of S.

    Built as the additive subgroup generated by F.S, independently of
    :func:`span`'s closure.
    """
    members = {sp.zero}
    for s in S:
        for alpha in sp.group.elements:
            g = sp.act(alpha, s)
            if g in members:
                continue
            # members is a subgroup; adjoin g by adding its cosets
            current = set(members)
            k = g
            while k not in members:
                members |= {sp.add(m, k) for m in current}
                k = sp.add(k, g)
    return tuple(sorted(members))


def sumset(sp: SpaceHandle, blocks) -> set:
    total = {sp.zero}
    for b in blocks:
        total = {sp.add(x, y) for x in total for y in b}
    return total


def is_scalar(sp: SpaceHandle, v) -> bool:
    """True iff Span(v) is contained in F.v."""
    return span_set(sp, [v]) <= set(sp.line(v))


# -- linear independence ---------------------------------------------------------


def _spans_meet_trivially(sp, A, B) -> bool:
    return span_set(sp, A) & span_set(sp, B) == {sp.zero}


def is_linearly_independent(sp: SpaceHandle, S) -> bool:
    """S nonempty, 0 not in S, and Span(s) meets Span(S minus s) only in 0."""
    S = list(dict.fromkeys(S))
    if not S or sp.zero in S:
        return False
    return all(_spans_meet_trivially(sp, [s], [t for t in S if t != s]) for s in S)


def _has_nontrivial_zero_sum(sp, blocks) -> bool:
    """Is there a choice x_i in block_i, not all zero, with sum 0?"""
    nonzero_reach: set = set()
    for b in blocks:
        nxt = {sp.add(r, x) for r in nonzero_reach for x in b}
        nxt.update(x for x in b if x != sp.zero)
        nonzero_reach = nxt
    return sp.zero in nonzero_reach


def inner_sums(sp: SpaceHandle, a, length: int = 3) -> set:
    """Sums of at most ``length`` scalar multiples of a."""
    line = set(sp.line(a))
    out = {sp.zero}
    for _ in range(length):
        out = {sp.add(x, y) for x in out for y in line}
    return out


@dataclass(frozen=True)
class QLPredicates:
    definition: bool
    span_blocks: bool
    direct_sum: bool
    subset_intersections: bool
    single_intersections: bool
    additive_independence: bool

    def values(self) -> tuple[bool, ...]:
        return (self.definition, self.span_blocks, self.direct_sum,
                self.subset_intersections, self.single_intersections,
                self.additive_independence)

    @property
    def agree(self) -> bool:
        return len(set(self.values())) == 1


def is_independent_by_definition(sp: SpaceHandle, S, inner_length: int = 3) -> bool:
    """Direct reading of the definition, inner sums capped at ``inner_length``."""
    S = list(dict.fromkeys(S))
    if not S or sp.zero in S:
        return False
    return not _has_nontrivial_zero_sum(sp, [inner_sums(sp, a, inner_length) for a in S])


def ql_predicates(sp: SpaceHandle, S, inner_length: int = 3) -> QLPredicates:
    """Evaluate six characterisations of linear independence separately."""
    S = list(dict.fromkeys(S))
    base = bool(S) and sp.zero not in S
    spans = [span_set(sp, [s]) for s in S]

    p1 = is_independent_by_definition(sp, S, inner_length)
    p2 = base and not _has_nontrivial_zero_sum(sp, spans)

    p3 = False
    if base:
        total = {sp.zero}
        injective = True
        for b in spans:
            nxt = {sp.add(x, y) for x in total for y in b}
            if len(nxt) != len(total) * len(b):
                injective = False
            total = nxt
        p3 = injective and total == span_set(sp, S)

    p4 = base and all(
        _spans_meet_trivially(sp, T, [s for s in S if s not in T])
        for r in range(len(S) + 1) for T in combinations(S, r))

    p5 = base and all(_spans_meet_trivially(sp, [s], [t for t in S if t != s]) for s in S)

    # representations (J, nonzero s_j in Span(j)) counted per resulting sum
    p6 = False
    if S and all(len(b) > 1 for b in spans):
        counts = {sp.zero: 1}
        for b in spans:
            nxt = dict(counts)
            for x, c in counts.items():
                for y in b:
                    if y != sp.zero:
                        z = sp.add(x, y)
                        nxt[z] = nxt.get(z, 0) + c
            counts = nxt
        p6 = all(c == 1 for c in counts.values())

    return QLPredicates(p1, p2, p3, p4, p5, p6)


# -- dimension of a vector -------------------------------------------------------


def _bfs(sp: SpaceHandle):
    if sp._bfs is None:
        gens = qk_nonzero(sp)
        dist = {sp.zero: 0}
        parent = {}
        frontier = [sp.zero]
        while frontier:
            nxt = []
            for x in frontier:
                for q in gens:
                    y = sp.add(x, q)
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        parent[y] = (x, q)
                        nxt.append(y)
            frontier = nxt
        sp._bfs = (dist, parent)
    return sp._bfs


def dim_of(sp: SpaceHandle, v) -> int:
    """Least number of distinct quasi-kernel elements summing to v."""
    dist, _ = _bfs(sp)
    if v not in dist:
        raise NotGenerated(f"{v} is not a sum of quasi-kernel elements")
    return dist[v]


def is_generated_by_qk(sp: SpaceHandle) -> bool:
    return len(_bfs(sp)[0]) == len(sp.carrier)


def minimal_decomposition(sp: SpaceHandle, v) -> list:
    """A shortest list of quasi-kernel elements summing to v.

    A shortest path cannot repeat an element: q + q lies on the line F.q,
    which would shorten it.
    """
    dim_of(sp, v)
    _, parent = _bfs(sp)
    out = []
    while v != sp.zero:
        v, q = parent[v]
        out.append(q)
    assert len(set(out)) == len(out)
    return sorted(out)


@dataclass
class ThetaDecomposition:
    vector: object
    parts: VectorSet
    trace: list = field(default_factory=list)


def _first_distinguishing_pair(sp, ia1, ia2):
    F = sp.group.elements
    for a in F:
        for b in F:
            if ia1.plus(a, b) != ia2.plus(a, b):
                return a, b
    return None


def _theta(sp: SpaceHandle, v, terms: list, trace: list, depth: int) -> list:
    if len(terms) == 1:
        return [terms[0]]
    g = sp.group
    terms = sorted(terms)
    q1 = terms[0]
    ia1 = induced_add(sp, q1)
    current = {q: q for q in terms}  # q -> lambda_q . q
    theta = v
    step = 0
    while True:
        others = [q for q in current if q != q1 and induced_add(sp, current[q]).table != ia1.table]
        if not others:
            break
        q2 = others[0]
        ia2 = induced_add(sp, current[q2])
        alpha, beta = _first_distinguishing_pair(sp, ia1, ia2)
        s2 = ia2.plus(alpha, beta)
        coeff = {q: induced_add(sp, t).minus(induced_add(sp, t).plus(alpha, beta), s2)
                 for q, t in current.items()}
        inv = g.inverse(coeff[q1])
        new = {q: sp.act(g.mul(inv, c), current[q]) for q, c in coeff.items() if c != 0}
        new_theta = sp.sum(new.values())
        direct = sp.act(inv, sp.sub(sp.add(sp.act(alpha, theta), sp.act(beta, theta)),
                                    sp.act(s2, theta)))
        if new_theta != direct:
            raise AxiomFailure(f"theta step mismatch at {v}: {new_theta} != {direct}")
        step += 1
        trace.append({"depth": depth, "step": step, "q1": q1, "q2": q2, "alpha": alpha,
                      "beta": beta, "theta": new_theta,
                      "coefficients": {q: sp.line(q)[t] for q, t in new.items()}})
        current, theta = new, new_theta
    assert current[q1] == q1
    rest = [sp.sub(q, t) for q, t in current.items() if q != q1]
    rest += [q for q in terms if q not in current]
    remainder = sp.sub(v, theta)
    if len(rest) != len(terms) - 1 or sp.sum(rest) != remainder or sp.zero in rest:
        raise AxiomFailure(f"theta remainder for {v} is not a shorter decomposition")
    if dim_of(sp, remainder) != len(rest):
        raise AxiomFailure(f"dim({remainder}) != {len(rest)}")
    return [theta] + _theta(sp, remainder, rest, trace, depth + 1)


def theta_decompose(sp: SpaceHandle, v) -> ThetaDecomposition:
    """Split v into dim(v) quasi-kernel parts whose lines sum directly to Span(v).

    Follows the constructive induction: starting from a minimal sum, repeatedly
    cancel a term whose induced addition differs from the first term's, until
    the survivors share one addition and so sum into the quasi-kernel; peel
    that sum off and recurse on the remainder.
    """
    if v == sp.zero:
        raise ZeroVector("cannot decompose the zero vector")
    trace: list = []
    parts = _theta(sp, v, minimal_decomposition(sp, v), trace, 0)
    return ThetaDecomposition(v, vset(parts), trace)


def verify_theta(sp: SpaceHandle, td: ThetaDecomposition) -> VerificationReport:
    from .morphism import Subspace, subspace_as_space

    v, parts = td.vector, list(td.parts)
    rep = VerificationReport(f"theta {v}")
    rep.add("sum of parts = v", sp.sum(parts) == v, (v, parts))
    d = dim_of(sp, v)
    rep.add("|parts| = dim(v)", len(parts) == d == len(set(parts)), (len(parts), d))
    rep.add("parts independent", is_linearly_independent(sp, parts), parts)
    sv = span_set(sp, [v])
    lines = [set(sp.line(q)) for q in parts]
    total = sumset(sp, lines)
    direct = total == sv and len(total) == sp.group.order ** len(parts)
    rep.add("Span(v) = direct sum of F.q", direct, (len(sv), len(total)))
    rep.add("Span(v) = Span(parts)", span_set(sp, parts) == sv, None)
    w, _ = subspace_as_space(Subspace(sp, tuple(sorted(sv))), verify=False)
    qw = set(quasi_kernel(w))
    rep.add("parts in Q(Span(v))", set(parts) <= qw, [p for p in parts if p not in qw])
    clash = next(((a, b) for a, b in combinations(parts, 2) if plus_relations_equal(sp, a, b)), None)
    rep.add("parts have pairwise distinct additions", clash is None, clash)
    return rep


# -- bases -----------------------------------------------------------------------


def extend_independent(sp: SpaceHandle, S, v):
    """A quasi-kernel q with {q} u S independent, taken from the theta parts of v."""
    S = list(S)
    if S and not is_linearly_independent(sp, S):
        raise NotIndependent(f"{S} is not linearly independent")
    spanned = span_set(sp, S)
    if v in spanned:
        raise InSpan(f"{v} lies in Span(S)")
    for q in theta_decompose(sp, v).parts:
        if q not in spanned:
            if not is_linearly_independent(sp, S + [q]):
                raise NotIndependent(f"{S} + [{q}] is not independent")
            return q
    raise AxiomFailure(f"every theta part of {v} lies in Span(S)")


def extract_basis(sp: SpaceHandle, S, target=None) -> VectorSet:
    """Greedy maximal independent subset of S, completed to a basis of target.

    When S lies in the quasi-kernel the greedy pass already generates the
    target and the result is a scalar basis inside S. Otherwise a maximal
    independent subset of S may fail to generate; missing directions are
    then supplied by :func:`extend_independent` and need not lie in S.
    """
    S = list(S)
    target = sp.carrier if target is None else tuple(target)
    spanned_by_S = span_set(sp, S)
    missing = [t for t in target if t not in spanned_by_S]
    if missing:
        raise NotGenerating(f"{missing[0]} is not in Span(S)")
    if set(target) <= {sp.zero}:
        return ()  # the empty set generates {0}
    B: list = []
    for s in S:
        if s != sp.zero and s not in B and is_linearly_independent(sp, B + [s]):
            B.append(s)
    covered = span_set(sp, B)
    for t in target:
        if t not in covered:
            B.append(extend_independent(sp, B, t))
            covered = span_set(sp, B)
    return vset(B)


def is_basis(sp: SpaceHandle, B, target=None) -> bool:
    target = sp.carrier if target is None else target
    if not B:
        return set(target) <= {sp.zero}
    return is_linearly_independent(sp, B) and set(target) <= span_set(sp, B)


def exchange(sp: SpaceHandle, S, T) -> VectorSet:
    """Steinitz exchange: T0 inside T with Span(S + T0) = Span(T), |S| + |T0| = |T|."""
    S, T = list(dict.fromkeys(S)), list(dict.fromkeys(T))
    qk = set(quasi_kernel(sp))
    bad = [x for x in S + T if x not in qk]
    if bad:
        raise NotQuasiKernel(f"{bad[0]} is not in the quasi-kernel")
    if S and not is_linearly_independent(sp, S):
        raise NotIndependent(f"{S} is not linearly independent")
    target = span_set(sp, T)
    if not span_set(sp, S) <= target:
        raise SpanViolation("Span(S) is not contained in Span(T)")
    done: list = []
    remaining = list(T)
    for s in S:
        if s in remaining:
            remaining.remove(s)
        else:
            for t in remaining:
                trial = done + [s] + [r for r in remaining if r != t]
                if span_set(sp, trial) == target:
                    remaining.remove(t)
                    break
            else:
                raise SpanViolation(f"no element of {remaining} can be exchanged for {s}")
        done.append(s)
    if len(S) + len(remaining) != len(T) or span_set(sp, S + remaining) != target:
        raise SpanViolation("exchange invariants violated")
    return vset(remaining)


def scalar_basis(sp: SpaceHandle, reverse: bool = False) -> VectorSet:
    qs = list(qk_nonzero(sp))
    if reverse:
        qs.reverse()
    if not is_generated_by_qk(sp):
        raise NotNearVectorSpace("the quasi-kernel does not generate the carrier")
    if len(sp.carrier) == 1:
        return ()
    return extract_basis(sp, qs, sp.carrier)


# -- span theorems -----------------------------------------------------------------


def span_difference_check(sp: SpaceHandle, v, alpha: int, beta: int) -> VerificationReport:
    if v == sp.zero or alpha == beta:
        raise DegenerateInput("need v != 0 and alpha != beta")
    w = sp.sub(sp.act(alpha, v), sp.act(beta, v))
    rep = VerificationReport(f"span difference v={v} a={alpha} b={beta}")
    sv, sw = span(sp, [v]), span(sp, [w])
    rep.add("Span(v) = Span(a.v - b.v)", sv == sw, (v, w), size=len(sv))
    dv, dw = dim_of(sp, v), dim_of(sp, w)
    rep.add("dim(v) = dim(a.v - b.v)", dv == dw, (dv, dw), dim=dv)
    return rep


def dim_span_equiv(sp: SpaceHandle, v, w) -> VerificationReport:
    if v == sp.zero:
        raise DegenerateInput("v must be nonzero")
    sv = span(sp, [v])
    if w not in set(sv):
        raise NotInSpan(f"{w} is not in Span({v})")
    same_span = sv == span(sp, [w])
    same_dim = dim_of(sp, v) == dim_of(sp, w)
    rep = VerificationReport(f"dim/span equivalence v={v} w={w}")
    rep.add("Span(v)=Span(w) iff dim(v)=dim(w)", same_span == same_dim, (v, w),
            same_span=same_span, same_dim=same_dim)
    return rep


# -- lemma scans -------------------------------------------------------------------


def plus_classes(sp: SpaceHandle) -> list[VectorSet]:
    """Nonzero quasi-kernel vectors grouped by their induced addition."""
    groups: dict = {}
    for q in qk_nonzero(sp):
        groups.setdefault(induced_add(sp, q).table, []).append(q)
    return sorted(tuple(g) for g in groups.values())


def pluses1_scan(sp: SpaceHandle, max_size: int = 3) -> VerificationReport:
    """Sums of quasi-kernel vectors sharing one induced addition stay in Q(V)."""
    qk = set(quasi_kernel(sp))
    rep = VerificationReport("shared induced addition keeps sums in Q(V)")
    with timed(rep):
        classes = plus_classes(sp)
        bad, count = None, 0
        for cls in classes:
            for r in range(1, max_size + 1):
                for A in combinations(cls, r):
                    count += 1
                    if bad is None and sp.sum(A) not in qk:
                        bad = A
        rep.add(f"sum of A in Q(V) for every A with |A| <= {max_size}", bad is None, bad,
                classes=len(classes), subsets=count)
    return rep


def pluses_scan(sp: SpaceHandle) -> VerificationReport:
    """Parts of a minimal quasi-kernel sum have pairwise distinct induced additions."""
    rep = VerificationReport("minimal sums use distinct induced additions")
    with timed(rep):
        bad = None
        for v in sp.carrier:
            if v == sp.zero:
                continue
            parts = minimal_decomposition(sp, v)
            if len({induced_add(sp, q).table for q in parts}) != len(parts):
                bad = (v, parts)
                break
        rep.add("pairwise distinct for every v", bad is None, bad, vectors=len(sp.carrier) - 1)
    return rep


def scalar_scan(sp: SpaceHandle) -> VerificationReport:
    """Span(v) in F.v, Span(v) = F.v and v in Q(V) agree for every v."""
    qk = set(quasi_kernel(sp))
    rep = VerificationReport("scalar vectors: Span(v) = F.v iff v in Q(V)")
    with timed(rep):
        bad = None
        for v in sp.carrier:
            sv, line = span_set(sp, [v]), set(sp.line(v))
            a, b, c = is_scalar(sp, v), sv == line, v in qk
            if not a == b == c:
                bad = (v, a, b, c)
                break
        rep.add("three characterisations agree", bad is None, bad, vectors=len(sp.carrier))
    return rep


def lsum_report(sp: SpaceHandle, S) -> VerificationReport:
    """For S inside Q(V): Span(S) = sum of lines, and the independence equivalences.

    The statement "|S| = 1 and s not in Span(S minus s)" is evaluated under the
    reading "every s is outside Span(S minus s)" and recorded without being
    required to agree.
    """
    S = list(dict.fromkeys(S))
    qk = set(quasi_kernel(sp))
    if any(s not in qk for s in S):
        raise NotQuasiKernel("S must lie in the quasi-kernel")
    rep = VerificationReport(f"quasi-kernel set {tuple(S)}")
    lines = [set(sp.line(s)) for s in S]
    total = sumset(sp, lines)
    rep.add("Span(S) = sum of F.s", total == span_set(sp, S), None, size=len(total))
    base = bool(S) and sp.zero not in S
    s1 = is_linearly_independent(sp, S)
    s2 = base and not _has_nontrivial_zero_sum(sp, lines)
    s3 = base and len(total) == sp.group.order ** len(S)
    s5 = ql_predicates(sp, S).additive_independence
    s4 = base and all(s not in span_set(sp, [t for t in S if t != s]) for s in S)
    rep.add("statements (1), (2), (3), (5) agree", s1 == s2 == s3 == s5, (s1, s2, s3, s5),
            independent=s1)
    rep.counts["membership_reading"] = s4
    return rep
