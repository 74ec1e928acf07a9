"""The scalar monoid Z-algebra Z[F] and its action on a near-vector space.

Elements are integer combinations of symbols x_alpha subject to
x_alpha x_beta = x_(alpha beta), x_0 = 0 and x_(-alpha) = -x_alpha. The
normal form keeps one symbol per pair {alpha, -alpha}, the smaller label.
The product is the monoid-ring product, so Z[F] is commutative exactly
when F is.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product

from .errors import GroupMismatch, NotQuasiKernel
from .report import VerificationReport, timed
from .scalar_group import ScalarGroup
from .space import SpaceHandle, VectorSet, induced_add, quasi_kernel, span, vset


@dataclass(frozen=True)
class AlgebraElement:
    group: ScalarGroup
    coeffs: tuple  # sorted ((label, nonzero int), ...)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        out = ""
        for i, (a, n) in enumerate(self.coeffs):
            sign = "-" if n < 0 else "+"
            if i == 0:
                out = f"{'-' if n < 0 else ''}{abs(n)}*x[{a}]"
            else:
                out += f" {sign} {abs(n)}*x[{a}]"
        return out

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        return ring_add(self, other)

    def __mul__(self, other: AlgebraElement) -> AlgebraElement:
        return ring_mul(self, other)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.group, tuple((a, -n) for a, n in self.coeffs))

    @property
    def support(self) -> int:
        return len(self.coeffs)


def fold(g: ScalarGroup, alpha: int) -> tuple[int, int]:
    """(representative, sign) with x_alpha = sign * x_representative."""
    other = g.negate(alpha)
    return (alpha, 1) if alpha <= other else (other, -1)


def normalize(g: ScalarGroup, terms) -> AlgebraElement:
    acc: dict[int, int] = {}
    for alpha, n in terms:
        if alpha == 0 or n == 0:
            continue
        r, s = fold(g, alpha)
        acc[r] = acc.get(r, 0) + s * n
    return AlgebraElement(g, tuple(sorted((a, n) for a, n in acc.items() if n)))


def zero(g: ScalarGroup) -> AlgebraElement:
    return AlgebraElement(g, ())


def one(g: ScalarGroup) -> AlgebraElement:
    return AlgebraElement(g, ((1, 1),))


def generator(g: ScalarGroup, alpha: int, n: int = 1) -> AlgebraElement:
    return normalize(g, [(alpha, n)])


def _same_group(a: AlgebraElement, b: AlgebraElement) -> ScalarGroup:
    if a.group is not b.group and a.group.mul_table != b.group.mul_table:
        raise GroupMismatch("elements of different scalar monoid algebras")
    return a.group


def ring_add(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    g = _same_group(a, b)
    return normalize(g, a.coeffs + b.coeffs)


def ring_mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    g = _same_group(a, b)
    return normalize(g, [(g.mul(x, y), m * n) for x, m in a.coeffs for y, n in b.coeffs])


def expanded_scalars(a: AlgebraElement) -> list[int]:
    """Each term n x_alpha as |n| copies of alpha (or of -alpha when n < 0)."""
    g = a.group
    out = []
    for alpha, n in a.coeffs:
        s = alpha if n > 0 else g.negate(alpha)
        out.extend([s] * abs(n))
    return out


def module_act(a: AlgebraElement, sp: SpaceHandle, v):
    """sum over terms of alpha . (n v), negative n first folded onto -alpha."""
    if a.group is not sp.group and a.group.mul_table != sp.group.mul_table:
        raise GroupMismatch("algebra and space use different scalar groups")
    return sp.sum(sp.act(s, v) for s in expanded_scalars(a))


def act_raw(sp: SpaceHandle, terms, v):
    """Act with an unnormalized term list, for checking normal-form independence."""
    total = sp.zero
    for alpha, n in terms:
        w = sp.act(alpha, v)
        if n < 0:
            w, n = sp.neg(w), -n
        for _ in range(n):
            total = sp.add(total, w)
    return total


def bounded_elements(g: ScalarGroup, support: int = 2, coeff: int = 3) -> list[AlgebraElement]:
    """All normal forms with at most ``support`` terms and |coefficients| <= ``coeff``."""
    reps = sorted({fold(g, a)[0] for a in g.nonzero})
    values = [n for n in range(-coeff, coeff + 1) if n]
    out = [zero(g)]
    for k in range(1, support + 1):
        for labels in combinations(reps, k):
            for ns in product(values, repeat=k):
                out.append(AlgebraElement(g, tuple(zip(labels, ns))))
    return out


def orbit(sp: SpaceHandle, v) -> VectorSet:
    """Additive closure of the images of v under one- and two-term generators."""
    g = sp.group
    gens = [generator(g, a) for a in g.nonzero]
    gens += [ring_add(x, y) for x, y in combinations(gens, 2)]
    seeds = {module_act(a, sp, v) for a in gens}
    members = {sp.zero}
    frontier = list(seeds)
    members.update(seeds)
    while frontier:
        nxt = []
        for x in frontier:
            for s in seeds:
                y = sp.add(x, s)
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return vset(members)


@dataclass
class StabilizerResult:
    members: list
    report: VerificationReport


def stabilizer_qk(sp: SpaceHandle, v, bound: int = 3) -> StabilizerResult:
    """Bounded stabilizer of a quasi-kernel vector.

    Enumerates normal forms with support and coefficient sizes at most
    ``bound``; an element fixes v iff its expanded scalars sum to 1 under +_v.
    Completeness holds only inside the bound.
    """
    if v not in set(quasi_kernel(sp)) or v == sp.zero:
        raise NotQuasiKernel(f"{v} must be a nonzero quasi-kernel vector")
    ia = induced_add(sp, v)
    members = []
    mismatch = None
    candidates = bounded_elements(sp.group, bound, bound)
    for a in candidates:
        fixes = module_act(a, sp, v) == v
        predicted = ia.iterated_sum(expanded_scalars(a)) == 1
        if fixes != predicted and mismatch is None:
            mismatch = str(a)
        if fixes:
            members.append(a)
    rep = VerificationReport(f"stabilizer of {v}")
    rep.add("fixes v iff +_v-sum of scalars is 1", mismatch is None, mismatch,
            enumerated=len(candidates), stabilizer=len(members))
    rep.note = f"complete only for support <= {bound} and |coefficient| <= {bound}"
    return StabilizerResult(members, rep)


def line_of(sp: SpaceHandle, v) -> VectorSet:
    return vset(sp.act(a, v) for a in sp.group.elements)


@dataclass(frozen=True)
class ProjectivePoint:
    line: VectorSet
    base: object


def projective_point(sp: SpaceHandle, v) -> ProjectivePoint:
    line = line_of(sp, v)
    nonzero = [x for x in line if x != sp.zero]
    return ProjectivePoint(line, nonzero[0] if nonzero else sp.zero)


def projective_fixed_point(sp: SpaceHandle, v) -> tuple[bool, VerificationReport]:
    """Is F.w = F.v for every nonzero w in Span(v)?

    The zero vector of Span(v) is skipped: its line is {0}, which never
    equals F.v for v != 0.
    """
    line = line_of(sp, v)
    witness = next((w for w in span(sp, [v]) if w != sp.zero and line_of(sp, w) != line), None)
    fixed = witness is None
    in_qk = v in set(quasi_kernel(sp))
    rep = VerificationReport(f"projective fixed point {v}")
    rep.add("line fixed under the ring action iff v in Q(V)", fixed == in_qk, witness,
            fixed=fixed, quasi_kernel=in_qk)
    if witness is not None:
        rep.note = f"w={witness} in Span(v) has a different line"
    return fixed, rep


def check_ring(g: ScalarGroup, support: int = 2, coeff: int = 3, max_triples: int = 50_000,
               seed: int = 0) -> VerificationReport:
    """Ring axioms over bounded elements.

    Pairs are exhaustive. Triples are exhaustive when there are at most
    ``max_triples`` of them, otherwise a seeded sample of that size.
    """
    els = bounded_elements(g, support, coeff)
    z, u = zero(g), one(g)
    rep = VerificationReport(f"Z[F] ring axioms over {g.spec}")
    with timed(rep):
        bad = next((str(a) for a in els if normalize(g, a.coeffs) != a), None)
        rep.add("normal form idempotent", bad is None, bad, elements=len(els))
        m1 = g.neg_one
        bad = next((a for a in g.elements if g.mul(m1, a) != g.mul(a, m1)), None)
        rep.add("-1 is central (the fold is a congruence)", bad is None, bad)
        bad = next((str(a) for a in els if a + z != a or a * u != a or u * a != a), None)
        rep.add("units: a + 0 = a, a 1 = 1 a = a", bad is None, bad)
        bad = next(((str(a), str(b)) for a in els for b in els if a + b != b + a), None)
        rep.add("addition commutative", bad is None, bad)
        bad = next(((str(a), str(b)) for a in els for b in els if a * b != b * a), None)
        comm = bad is None
        rep.add("multiplication commutative iff F abelian", comm == g.is_abelian, bad,
                commutative=comm)
        n = len(els)
        if n ** 3 <= max_triples:
            triples = product(els, repeat=3)
            mode = "exhaustive"
        else:
            rng = random.Random(seed)
            triples = ((rng.choice(els), rng.choice(els), rng.choice(els)) for _ in range(max_triples))
            mode = f"sampled {max_triples} (seed {seed})"
        mul_memo: dict = {}
        add_memo: dict = {}

        def mul(a, b):
            key = (a, b)
            if key not in mul_memo:
                mul_memo[key] = ring_mul(a, b)
            return mul_memo[key]

        def add(a, b):
            key = (a, b)
            if key not in add_memo:
                add_memo[key] = ring_add(a, b)
            return add_memo[key]

        assoc = dist = None
        count = 0
        for a, b, c in triples:
            count += 1
            ab, ac = mul(a, b), mul(a, c)
            if assoc is None and mul(ab, c) != mul(a, mul(b, c)):
                assoc = (str(a), str(b), str(c))
            if dist is None and (mul(a, add(b, c)) != add(ab, ac)
                                 or mul(add(a, b), c) != add(ac, mul(b, c))):
                dist = (str(a), str(b), str(c))
        rep.add("multiplication associative", assoc is None, assoc, triples=count)
        rep.add("distributive", dist is None, dist, triples=count)
        rep.note = f"triples {mode}"
    return rep


def check_module(sp: SpaceHandle, support: int = 2, coeff: int = 3, max_pairs: int = 5_000,
                 seed: int = 0) -> VerificationReport:
    """Module axioms of V over bounded elements of Z[F], plus normal-form independence.

    For (a b).v = a.(b.v) and (a+b).v = a.v + b.v every pair of elements is
    checked against every vector when there are at most ``max_pairs`` pairs;
    otherwise a seeded sample of pairs is used.
    """
    g = sp.group
    els = bounded_elements(g, support, coeff)
    V = sp.carrier
    rep = VerificationReport(f"Z[F]-module axioms on {sp.name}")
    with timed(rep):
        acted = {a: {v: module_act(a, sp, v) for v in V} for a in els}
        u = one(g)
        bad = next((v for v in V if module_act(u, sp, v) != v), None)
        rep.add("one . v = v", bad is None, bad)
        bad = next((v for v in V if module_act(zero(g), sp, v) != sp.zero), None)
        rep.add("zero . v = 0", bad is None, bad)
        bad = next(((str(a), v, w) for a in els for v in V for w in V
                    if acted[a][sp.add(v, w)] != sp.add(acted[a][v], acted[a][w])), None)
        rep.add("a.(v+w) = a.v + a.w", bad is None, bad)
        if len(els) ** 2 <= max_pairs:
            pairs = list(product(els, repeat=2))
            mode = "exhaustive"
        else:
            rng = random.Random(seed)
            pairs = [(rng.choice(els), rng.choice(els)) for _ in range(max_pairs)]
            mode = f"sampled {max_pairs} (seed {seed})"
        add_bad = mul_bad = None
        for a, b in pairs:
            s, p = ring_add(a, b), ring_mul(a, b)
            for v in V:
                if add_bad is None and module_act(s, sp, v) != sp.add(acted[a][v], acted[b][v]):
                    add_bad = (str(a), str(b), v)
                if mul_bad is None and module_act(p, sp, v) != acted[a][acted[b][v]]:
                    mul_bad = (str(a), str(b), v)
        rep.add("(a+b).v = a.v + b.v", add_bad is None, add_bad, pairs=len(pairs))
        rep.add("(ab).v = a.(b.v)", mul_bad is None, mul_bad, pairs=len(pairs))
        bad = None
        for alpha, beta in product(g.elements, repeat=2):
            terms = [(alpha, 2), (beta, -1), (g.negate(alpha), 1)]
            for v in V:
                if act_raw(sp, terms, v) != module_act(normalize(g, terms), sp, v):
                    bad = (terms, v)
                    break
            if bad:
                break
        rep.add("acting on raw terms = acting on the normal form", bad is None, bad)
        rep.note = f"pairs {mode}; support <= {support}, |coefficient| <= {coeff}"
    return rep


def check_orbits(sp: SpaceHandle) -> VerificationReport:
    rep = VerificationReport(f"orbit(v) = Span(v) on {sp.name}")
    with timed(rep):
        bad = next((v for v in sp.carrier if orbit(sp, v) != span(sp, [v])), None)
        rep.add("orbit(v) = Span(v) for every v", bad is None, bad, vectors=len(sp.carrier))
    return rep


def check_projective(sp: SpaceHandle) -> VerificationReport:
    rep = VerificationReport(f"projective fixed points = Q(V) on {sp.name}")
    with timed(rep):
        fixed = vset(v for v in sp.carrier if projective_fixed_point(sp, v)[0])
        qk = quasi_kernel(sp)
        rep.add("{v : F.v fixed} = Q(V)", fixed == qk, sorted(set(fixed) ^ set(qk))[:4],
                fixed=len(fixed), qk=len(qk))
    return rep
