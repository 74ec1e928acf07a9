"""Coordinatewise twisted scalar actions on F^n.

A scalar alpha acts on a vector v by ``(twist_i(alpha) * v_i)_i`` where each
``twist_i`` is a power map alpha -> alpha^m. Vector addition is
coordinatewise addition in the underlying field.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd

from .errors import AxiomFailure, BadExponent
from .report import VerificationReport, timed
from .scalar_group import ScalarGroup

Vector = tuple


@dataclass(frozen=True)
class ActionSpec:
    """Per-coordinate exponents; exponent 1 is the identity twist."""

    exponents: tuple[int, ...]

    def __str__(self) -> str:
        return ",".join(map(str, self.exponents))


class ActionTable:
    """Evaluation tables for a coordinatewise action.

    ``twists[i][alpha]`` is the twisted scalar on coordinate ``i``;
    ``tables[i][alpha][x]`` caches ``twists[i][alpha] * x``.
    """

    def __init__(self, group: ScalarGroup, twists, exponents=None):
        self.group = group
        self.n = len(twists)
        self.twists = [list(t) for t in twists]
        self.exponents = tuple(exponents) if exponents is not None else None
        m = group.mul_table
        self.tables = [[m[t[a]] for a in range(group.order)] for t in self.twists]

    def act(self, alpha: int, v: Vector) -> Vector:
        return tuple(tab[alpha][x] for tab, x in zip(self.tables, v))

    def zero(self) -> Vector:
        return (0,) * self.n

    def add(self, v: Vector, w: Vector) -> Vector:
        a = self.group.add_table
        return tuple(a[x][y] for x, y in zip(v, w))

    def neg(self, v: Vector) -> Vector:
        ng = self.group.neg_table
        return tuple(ng[x] for x in v)

    def carrier(self) -> list[Vector]:
        return list(product(range(self.group.order), repeat=self.n))

    def __repr__(self) -> str:
        return f"ActionTable({self.group.spec}, n={self.n}, exponents={self.exponents})"


def check_exponent(g: ScalarGroup, m: int) -> None:
    if m < 1:
        raise BadExponent(f"exponent must be positive, got {m}")
    if g.is_field:
        q = g.order
        if gcd(m, q - 1) != 1:
            raise BadExponent(f"gcd({m}, {q - 1}) != 1: x -> x^{m} is not a bijection on GF({q})")
        if g.characteristic != 2 and m % 2 == 0:
            raise BadExponent(f"even exponent {m} does not fix -1")


def build_action(g: ScalarGroup, n: int, spec: ActionSpec) -> ActionTable:
    if len(spec.exponents) != n:
        raise BadExponent(f"expected {n} exponents, got {len(spec.exponents)}")
    for m in spec.exponents:
        check_exponent(g, m)
    twists = [[g.power(a, m) for a in g.elements] for m in spec.exponents]
    table = ActionTable(g, twists, spec.exponents)
    report = verify_action(table)
    if not report.passed:
        raise AxiomFailure(f"action with exponents {spec} fails the action axioms", report)
    return table


def act(a: ActionTable, alpha: int, v: Vector) -> Vector:
    return a.act(alpha, v)


def verify_action(a: ActionTable) -> VerificationReport:
    """Exhaustively check the scalar-action axioms.

    The action and the addition are both coordinatewise, so every vector
    law holds iff it holds on each coordinate; witnesses are reported as
    vectors supported on the failing coordinate.
    """
    g = a.group
    n = g.order
    mt, at, nt = g.mul_table, g.add_table, g.neg_table
    rep = VerificationReport(f"action exponents={a.exponents}")

    def embed(i, x):
        v = [0] * a.n
        v[i] = x
        return tuple(v)

    with timed(rep):
        fixes = monoid = ident = zero = minus = endo = free = None
        for i, (tw, tab) in enumerate(zip(a.twists, a.tables)):
            if fixes is None:
                for s in (0, 1, g.neg_one):
                    if tw[s] != s:
                        fixes = (i, s)
                        break
            if ident is None:
                for x in range(n):
                    if tab[1][x] != x:
                        ident = (1, embed(i, x))
                        break
            if zero is None:
                for x in range(n):
                    if tab[0][x] != 0:
                        zero = (0, embed(i, x))
                        break
            if minus is None:
                for x in range(n):
                    if tab[g.neg_one][x] != nt[x]:
                        minus = (g.neg_one, embed(i, x))
                        break
            if monoid is None:
                for al in range(n):
                    ta = tab[al]
                    for be in range(n):
                        tb, tab_ab = tab[be], tab[mt[al][be]]
                        for x in range(n):
                            if ta[tb[x]] != tab_ab[x]:
                                monoid = (al, be, embed(i, x))
                                break
                        if monoid:
                            break
                    if monoid:
                        break
            if endo is None:
                for al in range(n):
                    ta = tab[al]
                    for x in range(n):
                        for y in range(n):
                            if ta[at[x][y]] != at[ta[x]][ta[y]]:
                                endo = (al, embed(i, x), embed(i, y))
                                break
                        if endo:
                            break
                    if endo:
                        break
            if free is None:
                for x in range(1, n):
                    seen = {}
                    for al in range(n):
                        y = tab[al][x]
                        if y in seen:
                            free = (seen[y], al, embed(i, x))
                            break
                        seen[y] = al
                    if free:
                        break

        rep.add("twists fix 0, 1, -1", fixes is None, fixes)
        rep.add("1 acts as identity", ident is None, ident)
        rep.add("0 acts trivially", zero is None, zero)
        rep.add("-1 acts as -id", minus is None, minus)
        rep.add("monoid action a.(b.v) = (ab).v", monoid is None, monoid,
                triples=a.n * n ** 3)
        rep.add("endomorphism a.(v+w) = a.v + a.w", endo is None, endo,
                triples=a.n * n ** 3)
        rep.add("free: a.v = b.v implies v = 0 or a = b", free is None, free,
                pairs=a.n * n * (n - 1))
    return rep
