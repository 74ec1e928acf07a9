"""Floating-point checks on R^3 with alpha * (x, y, z) = (alpha x, alpha y, alpha^3 z).

Spans over R are infinite, so nothing here computes a closure. Only the
explicit witness combinations are evaluated, componentwise, against an
absolute tolerance.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import NonFinite
from .report import VerificationReport, timed

DEFAULT_TOL = 1e-9

RVec3 = tuple


def _finite(*xs) -> None:
    if not all(math.isfinite(x) for x in np.ravel(xs)):
        raise NonFinite(f"non-finite input {xs}")


def star(alpha: float, v: RVec3) -> RVec3:
    _finite(alpha, *v)
    x, y, z = v
    return (alpha * x, alpha * y, alpha ** 3 * z)


def combine(terms) -> RVec3:
    """Sum of star(alpha, v) over (alpha, v) pairs."""
    total = np.zeros(3)
    for alpha, v in terms:
        total += np.array(star(alpha, v))
    return tuple(float(c) for c in total)


def plus_cubic(*scalars: float) -> float:
    """Iterated induced addition of the cubic coordinate: (sum of cubes)^(1/3)."""
    return float(np.cbrt(sum(s ** 3 for s in scalars)))


def residual(got, want) -> float:
    return float(np.max(np.abs(np.asarray(got, dtype=float) - np.asarray(want, dtype=float))))


# coefficients of the explicit combinations
A = np.cbrt(4.0) / np.cbrt(3.0)
B = -1.0 / np.cbrt(6.0)
C2 = np.cbrt(2.0)
C4 = np.cbrt(4.0)
P = -1.0 / 3 - 2 * C2 / 3 - C4 / 3
R = 2.0 / 3 + C2 / 3 + C4 / 6


def _check(rep: VerificationReport, name: str, got, want, tol: float) -> None:
    r = residual(got, want)
    rep.add(name, r <= tol, {"got": got, "want": want, "residual": r} if r > tol else None,
            residual=f"{r:.3e}")


def check_remark_identities(tol: float = DEFAULT_TOL) -> VerificationReport:
    if not tol > 0:
        raise ValueError("tol must be positive")
    rep = VerificationReport(f"R^3 cubic-twist identities (tol={tol:g})")
    with timed(rep):
        e = (0.0, 0.0, 1.0)
        via_101 = combine([(A, (1, 0, 1)), (B, (1, 0, 1)), (B, (1, 0, 1))])
        via_011 = combine([(A, (0, 1, 1)), (B, (0, 1, 1)), (B, (0, 1, 1))])
        _check(rep, "(0,0,1) from multiples of (1,0,1)", via_101, e, tol)
        _check(rep, "(0,0,1) from multiples of (0,1,1)", via_011, e, tol)
        _check(rep, "both combinations hit the same nonzero vector of the two spans",
               via_101, via_011, tol)
        rep.add("that common vector is nonzero", residual(via_101, (0, 0, 0)) > tol, via_101)
        _check(rep, "linear coefficients cancel: cbrt(4/3) - 2/cbrt(6) = 0", A + 2 * B, 0.0, tol)
        _check(rep, "cubic sum (4/3 - 1/6 - 1/6)^(1/3) = 1", plus_cubic(A, B, B), 1.0, tol)
        _check(rep, "second combination of (0,1,1) gives (0,1,0)",
               combine([(P, (0, 1, 1)), (R, (0, 1, 1)), (R, (0, 1, 1))]), (0.0, 1.0, 0.0), tol)
        _check(rep, "second combination's coefficient sum is 1", P + 2 * R, 1.0, tol)
        _check(rep, "second combination's cubic sum is 0", P ** 3 + 2 * R ** 3, 0.0, tol)
        worst = max(float(c.counts["residual"]) for c in rep.checks if "residual" in c.counts)
        rep.counts["max_residual"] = f"{worst:.3e}"
    return rep


def check_pairwise_nonclassical(tol: float = DEFAULT_TOL, u: RVec3 = (1, 0, 1)) -> VerificationReport:
    """Coefficientwise independence of {u, (0,0,1)} without linear independence.

    alpha * u + beta * (0,0,1) = 0 reads (alpha u_x, alpha u_y, alpha^3 u_z + beta) = 0;
    u has a nonzero x or y coordinate, so alpha = 0 and then beta = 0.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    rep = VerificationReport(f"independence of {tuple(u)} and (0,0,1) (tol={tol:g})")
    with timed(rep):
        rep.add("u has a nonzero untwisted coordinate", u[0] != 0 or u[1] != 0, u)
        zero = combine([(0.0, u), (0.0, (0, 0, 1))])
        rep.add("alpha = beta = 0 gives exactly zero", zero == (0.0, 0.0, 0.0), zero)
        # sample: any (alpha, beta) != 0 leaves a nonzero residue
        grid = np.linspace(-3, 3, 13)
        bad = next(((a, b) for a in grid for b in grid if (a, b) != (0, 0)
                    and residual(combine([(a, u), (b, (0, 0, 1))]), (0, 0, 0)) <= tol), None)
        rep.add("no nonzero (alpha, beta) on a grid annihilates", bad is None, bad)
        _check(rep, "(0,0,1) is nonetheless a combination of multiples of u",
               combine([(A, u), (B, u), (B, u)]), (0.0, 0.0, 1.0), tol)
    return rep


def check_action_laws(tol: float = DEFAULT_TOL, seed: int = 0, samples: int = 200) -> VerificationReport:
    """star(ab, v) = star(a, star(b, v)) and distributivity over vector sums, sampled."""
    rng = np.random.default_rng(seed)
    rep = VerificationReport(f"R^3 action laws (seed={seed})")
    worst = 0.0
    for _ in range(samples):
        a, b = rng.uniform(-10, 10, 2)
        v = tuple(rng.integers(-3, 4, 3).astype(float))
        w = tuple(rng.integers(-3, 4, 3).astype(float))
        scale = max(1.0, abs(a * b) ** 3)
        worst = max(worst,
                    residual(star(a * b, v), star(a, star(b, v))) / scale,
                    residual(star(a, tuple(np.add(v, w))), np.add(star(a, v), star(a, w))) / scale)
    rep.add("monoid and endomorphism laws (relative residual)", worst <= tol, worst,
            samples=samples, residual=f"{worst:.3e}")
    return rep
