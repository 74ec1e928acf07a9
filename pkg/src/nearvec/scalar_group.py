"""Finite scalar groups: prime fields, extension fields and Dickson near-fields.

Elements are integer labels ``0 .. order-1``. For GF(p^k) the base-p digits of
a label (low degree first) are the coefficients of the representing
polynomial modulo the declared monic irreducible. Dickson near-fields reuse
the labelling of the underlying GF(q^2).

All tables are built eagerly and validated on construction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from sympy import Poly, factorint, isprime, symbols

from .errors import (
    AxiomFailure,
    EvenCharacteristicDickson,
    NotPrime,
    ReducibleModulus,
    SpecError,
    ZeroInverse,
)
from .report import VerificationReport, timed

MAX_ORDER = 256

# Smallest monic irreducible of degree k over GF(p), coefficients low degree
# first, "smallest" comparing coefficients from degree k-1 downwards.
DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 1, 0, 1, 1, 0, 0, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (5, 2): (2, 0, 1),
    (5, 3): (1, 1, 0, 1),
    (7, 2): (1, 0, 1),
    (11, 2): (1, 0, 1),
    (13, 2): (2, 0, 1),
}


def prime_power(n: int) -> tuple[int, int]:
    """Return ``(p, k)`` with ``n == p**k`` or raise NotPrime."""
    f = factorint(n) if n > 1 else {}
    if len(f) != 1:
        raise NotPrime(f"{n} is not a prime power")
    (p, k), = f.items()
    return p, k


@dataclass(frozen=True)
class ScalarGroupSpec:
    """Declarative description of a scalar group.

    ``kind`` is one of ``prime``, ``extension``, ``dickson``. For ``dickson``,
    ``q`` is the near-field parameter and ``p, k`` describe the underlying
    field GF(q^2) = GF(p^k).
    """

    kind: str
    p: int
    k: int = 1
    modulus: tuple[int, ...] | None = None
    q: int | None = None

    @property
    def order(self) -> int:
        return self.p ** self.k

    def __str__(self) -> str:
        mod = "" if self.modulus is None else "; modulus=" + ",".join(map(str, self.modulus))
        if self.kind == "dickson":
            return f"dickson({self.q}{mod})"
        return f"gf({self.order}{mod})"


def prime(p: int) -> ScalarGroupSpec:
    return ScalarGroupSpec("prime", p, 1)


def extension(p: int, k: int, modulus=None) -> ScalarGroupSpec:
    if k == 1:
        return prime(p)
    if modulus is None:
        modulus = DEFAULT_MODULI.get((p, k))
        if modulus is None:
            raise SpecError(f"no default modulus for GF({p}^{k}); supply one")
    return ScalarGroupSpec("extension", p, k, tuple(modulus))


def gf(order: int, modulus=None) -> ScalarGroupSpec:
    p, k = prime_power(order)
    return extension(p, k, modulus)


def dickson(q: int, modulus=None) -> ScalarGroupSpec:
    p, e = prime_power(q)
    if p == 2:
        raise EvenCharacteristicDickson(f"Dickson near-field needs odd q, got {q}")
    k = 2 * e
    if modulus is None:
        modulus = DEFAULT_MODULI.get((p, k))
        if modulus is None:
            raise SpecError(f"no default modulus for GF({q}^2); supply one")
    return ScalarGroupSpec("dickson", p, k, tuple(modulus), q)


# -- underlying field tables ---------------------------------------------------


def _digits(label: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        label, r = divmod(label, p)
        out.append(r)
    return out


def _label(digits, p: int) -> int:
    v = 0
    for d in reversed(digits):
        v = v * p + d
    return v


def _check_modulus(p: int, k: int, modulus: tuple[int, ...]) -> None:
    if len(modulus) != k + 1 or modulus[-1] % p != 1:
        raise ReducibleModulus(f"modulus must be monic of degree {k}: {modulus}")
    if any(not 0 <= c < p for c in modulus):
        raise ReducibleModulus(f"modulus coefficients must lie in 0..{p - 1}")
    x = symbols("x")
    if not Poly(list(reversed(modulus)), x, modulus=p).is_irreducible:
        raise ReducibleModulus(f"{modulus} is reducible over GF({p})")


def _field_tables(p: int, k: int, modulus) -> tuple[list[list[int]], list[list[int]]]:
    n = p ** k
    digits = [_digits(a, p, k) for a in range(n)]
    add = [[_label([(x + y) % p for x, y in zip(digits[a], digits[b])], p) for b in range(n)]
           for a in range(n)]
    if k == 1:
        mul = [[(a * b) % p for b in range(n)] for a in range(n)]
        return add, mul
    mul = [[0] * n for _ in range(n)]
    for a in range(n):
        da = digits[a]
        for b in range(a, n):
            db = digits[b]
            prod = [0] * (2 * k - 1)
            for i, x in enumerate(da):
                if x:
                    for j, y in enumerate(db):
                        prod[i + j] += x * y
            for deg in range(2 * k - 2, k - 1, -1):
                c = prod[deg] % p
                if c:
                    for i in range(k + 1):
                        prod[deg - k + i] -= c * modulus[i]
            mul[a][b] = mul[b][a] = _label([c % p for c in prod[:k]], p)
    return add, mul


def _power(table, a: int, e: int) -> int:
    r, base = 1, a
    while e:
        if e & 1:
            r = table[r][base]
        base = table[base][base]
        e >>= 1
    return r


def _dickson_candidates(fmul, q: int) -> dict[str, list[list[int]]]:
    n = len(fmul)
    squares = {fmul[x][x] for x in range(1, n)}
    frob = [_power(fmul, x, q) for x in range(n)]
    right = [[0] * n for _ in range(n)]  # twist decided by the right factor
    left = [[0] * n for _ in range(n)]   # twist decided by the left factor
    for a in range(1, n):
        for b in range(1, n):
            right[a][b] = fmul[a][b] if b in squares else fmul[frob[a]][b]
            left[a][b] = fmul[a][b] if a in squares else fmul[a][frob[b]]
    return {"twist-by-right-factor": right, "twist-by-left-factor": left}


def _left_distributive(mul, add) -> bool:
    m = np.asarray(mul)
    s = np.asarray(add)
    lhs = m[:, s]                    # a * (b + c)
    rhs = s[m[:, :, None], m[:, None, :]]  # a*b + a*c
    return bool(np.array_equal(lhs, rhs))


# -- the scalar group ------------------------------------------------------------


class ScalarGroup:
    """A finite scalar group (F, ., 1, 0, -1) with table-backed arithmetic.

    ``add_table`` is the additive group of the underlying field, used as the
    coordinate carrier of vectors; it is not part of the scalar-group
    structure itself.
    """

    def __init__(self, spec: ScalarGroupSpec, mul_table, add_table, neg_one: int,
                 convention: str | None = None):
        self.spec = spec
        self.order = len(mul_table)
        self.mul_table = mul_table
        self.add_table = add_table
        self.neg_table = [row.index(0) for row in add_table]
        self.neg_one = neg_one
        self.convention = convention
        self.inv_table = [None] + [self._find_inverse(a) for a in range(1, self.order)]

    def _find_inverse(self, a):
        row = self.mul_table[a]
        for b in range(1, self.order):
            if row[b] == 1:
                return b
        return None

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def nonzero(self) -> range:
        return range(1, self.order)

    @property
    def characteristic(self) -> int:
        return self.spec.p

    @property
    def is_field(self) -> bool:
        return self.spec.kind != "dickson"

    @property
    def is_abelian(self) -> bool:
        m = np.asarray(self.mul_table)
        return bool(np.array_equal(m, m.T))

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def inverse(self, a: int) -> int:
        if a == 0:
            raise ZeroInverse("0 has no inverse")
        inv = self.inv_table[a]
        if inv is None:
            raise ZeroInverse(f"{a} has no inverse in this table")
        return inv

    def power(self, a: int, e: int) -> int:
        if e < 0:
            return self.power(self.inverse(a), -e)
        if a == 0:
            return 0 if e else 1
        return _power(self.mul_table, a, e)

    def negate(self, a: int) -> int:
        """(-1) . a in the scalar group (not additive negation of the carrier)."""
        return self.mul_table[self.neg_one][a]

    def element_order(self, a: int) -> int | None:
        k, x = 1, a
        while x != 1:
            if k > self.order:
                return None
            x = self.mul_table[x][a]
            k += 1
        return k

    def generator(self) -> int | None:
        """Smallest element generating the (cyclic) multiplicative group, if any."""
        for a in self.nonzero:
            if self.element_order(a) == self.order - 1:
                return a
        return None

    def describe(self) -> dict:
        d = {"field": str(self.spec), "order": self.order, "neg_one": self.neg_one}
        if self.convention:
            d["convention"] = self.convention
        return d

    def __repr__(self) -> str:
        return f"ScalarGroup({self.spec})"


def build_scalar_group(spec: ScalarGroupSpec) -> ScalarGroup:
    """Construct and validate the tables for ``spec``.

    Dickson near-fields twist GF(q^2) multiplication by the Frobenius
    x -> x^q according to squareness. Both side conventions are built and
    the one that is associative and left-distributive over field addition
    (so that scalars act by additive endomorphisms) is kept.
    """
    p, k = spec.p, spec.k
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")
    if spec.order > MAX_ORDER:
        raise SpecError(f"order {spec.order} exceeds cap {MAX_ORDER}")
    if spec.kind == "dickson" and p == 2:
        raise EvenCharacteristicDickson("Dickson near-field needs odd characteristic")
    if k > 1:
        if spec.modulus is None:
            raise SpecError("extension field needs a modulus")
        _check_modulus(p, k, spec.modulus)

    add, fmul = _field_tables(p, k, spec.modulus)
    neg_one = add[1].index(0)

    if spec.kind != "dickson":
        g = ScalarGroup(spec, fmul, add, neg_one)
    else:
        chosen = None
        for name, table in _dickson_candidates(fmul, spec.q).items():
            cand = ScalarGroup(spec, table, add, neg_one, convention=name)
            if verify_scalar_group(cand).passed and _left_distributive(table, add):
                chosen = cand
                break
        if chosen is None:
            raise AxiomFailure(f"no Dickson convention satisfied the axioms for q={spec.q}")
        g = chosen

    report = verify_scalar_group(g)
    if not report.passed:
        raise AxiomFailure(f"{spec} failed scalar-group axioms", report)
    return g


def mul(g: ScalarGroup, a: int, b: int) -> int:
    return g.mul(a, b)


def inverse(g: ScalarGroup, a: int) -> int:
    return g.inverse(a)


def verify_scalar_group(g: ScalarGroup) -> VerificationReport:
    """Exhaustively check the scalar-group axioms on ``g``'s tables."""
    rep = VerificationReport(f"scalar-group {g.spec}")
    with timed(rep):
        m = np.asarray(g.mul_table)
        n = g.order
        nz = np.arange(1, n)

        ok = bool(np.all((m >= 0) & (m < n)))
        rep.add("tables in range", ok, None if ok else tuple(int(i) for i in np.argwhere((m < 0) | (m >= n))[0]))

        bad = np.argwhere(m[1:, 1:] == 0)
        rep.add("closure on F*", bad.size == 0,
                None if bad.size == 0 else tuple(int(i) + 1 for i in bad[0]), pairs=(n - 1) ** 2)

        left = m[m]                     # (a*b)*c
        right = m[np.arange(n)[:, None, None], m[None, :, :]]  # a*(b*c)
        bad = np.argwhere(left != right)
        rep.add("associativity", bad.size == 0,
                None if bad.size == 0 else tuple(int(i) for i in bad[0]), triples=n ** 3)

        bad = [a for a in range(n) if m[1, a] != a or m[a, 1] != a]
        rep.add("identity 1", not bad, (bad[0],) if bad else None)

        bad = [a for a in range(n) if m[0, a] != 0 or m[a, 0] != 0]
        rep.add("absorbing 0", not bad, (bad[0],) if bad else None)

        bad = []
        for a in nz:
            row_hits = np.flatnonzero(m[a, 1:] == 1)
            col_hits = np.flatnonzero(m[1:, a] == 1)
            if len(row_hits) != 1 or len(col_hits) != 1 or row_hits[0] != col_hits[0]:
                bad.append(int(a))
                break
            inv = g.inv_table[a] if a < len(g.inv_table) else None
            if inv != row_hits[0] + 1:
                bad.append(int(a))
                break
        rep.add("inverses", not bad, (bad[0],) if bad else None)

        sols = sorted(int(x) for x in np.flatnonzero(m[np.arange(n), np.arange(n)] == 1))
        expected = sorted({1, g.neg_one})
        rep.add("x^2=1 solution set is {1,-1}", sols == expected and g.neg_one != 0,
                tuple(sols), solutions=len(sols))

        if g.is_field and n > 1:
            gen = g.generator()
            rep.add("cyclic multiplicative group", gen is not None, generator=gen)
    return rep
