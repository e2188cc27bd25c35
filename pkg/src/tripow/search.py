"""Exact solvers for a^x + b^y = c^z and the Gaussian-integer structure
checks behind the k, l parametrization.

Two solver routes are kept deliberately separate: a pruned solver whose
filters are all necessary conditions (they can skip work, never a real
solution), and a reference solver that tries every (x, y, z) triple with
exact big-integer arithmetic.  A scan compares them on overlapping
ranges.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
import math

from .numerics import (
    GaussianInt,
    UNITS,
    g_pow,
    integer_nth_root,
    perfect_power_exponent,
    val_p,
)
from .residues import quadratic_sieve
from .triples import PrimPair, iter_pairs, triple_of

__all__ = [
    "ExponentTriple",
    "SolutionRecord",
    "find_solutions",
    "find_solutions_unpruned",
    "scan_range",
    "power_triple_generators",
    "KLStructureError",
    "gaussian_root",
    "gaussian_power_structure",
]


@dataclass(frozen=True, order=True)
class ExponentTriple:
    x: int
    y: int
    z: int

    def __post_init__(self):
        if min(self.x, self.y, self.z) < 1:
            raise ValueError("exponents must be positive")

    def all_even(self) -> bool:
        return self.x % 2 == 0 and self.y % 2 == 0 and self.z % 2 == 0


@dataclass(frozen=True)
class SolutionRecord:
    pair: PrimPair
    sol: ExponentTriple
    exceptional: bool

    def __post_init__(self):
        t = triple_of(self.pair)
        s = self.sol
        if t.a**s.x + t.b**s.y != t.c**s.z:
            raise ValueError("not a solution")
        want = s.all_even() and (s.x, s.y, s.z) != (2, 2, 2)
        if self.exceptional != want:
            raise ValueError("exceptional flag inconsistent with exponents")


def _record(pair: PrimPair, x: int, y: int, z: int) -> SolutionRecord:
    sol = ExponentTriple(x, y, z)
    return SolutionRecord(pair, sol, sol.all_even() and (x, y, z) != (2, 2, 2))


_FILTER_MODULI = (16, 3, 5, 7, 13)


def find_solutions(p: PrimPair, cap: int) -> list[SolutionRecord]:
    """All solutions with 1 <= x, y, z <= cap, by pruned exact search.

    Filters are necessary conditions only: parity constraints that hold
    for every solution of the pair, and membership of c^z - a^x in the
    value set of b^y modulo a few small moduli.  Survivors are confirmed
    with exact big-integer arithmetic.
    """
    if cap < 2:
        raise ValueError("cap must be >= 2")
    t = triple_of(p)
    a, b, c = t.a, t.b, t.c

    constraints = quadratic_sieve(p)
    x_even = any(k.kind == "x-even" for k in constraints)
    z_even = any(k.kind == "z-even" for k in constraints)

    b_sets = {}
    for M in _FILTER_MODULI:
        b_sets[M] = {pow(b, y, M) for y in range(1, cap + 1)}

    a_pows = {M: [pow(a, x, M) for x in range(cap + 1)] for M in _FILTER_MODULI}
    c_pows = {M: [pow(c, z, M) for z in range(cap + 1)] for M in _FILTER_MODULI}

    big_a = [None] + [a**x for x in range(1, cap + 1)]
    big_c = [None] + [c**z for z in range(1, cap + 1)]

    out = []
    for z in range(1, cap + 1):
        if z_even and z % 2 == 1:
            continue
        for x in range(1, cap + 1):
            if x_even and x % 2 == 1:
                continue
            if any(
                (c_pows[M][z] - a_pows[M][x]) % M not in b_sets[M]
                for M in _FILTER_MODULI
            ):
                continue
            R = big_c[z] - big_a[x]
            if R < b:
                continue
            y = perfect_power_exponent(R, b)
            if y is not None and y <= cap:
                out.append(_record(p, x, y, z))
    out.sort(key=lambda r: (r.sol.x, r.sol.y, r.sol.z))
    return out


def find_solutions_unpruned(p: PrimPair, cap: int) -> list[SolutionRecord]:
    """Reference solver: plain triple loop, exact arithmetic, no filters."""
    if cap < 2:
        raise ValueError("cap must be >= 2")
    t = triple_of(p)
    a, b, c = t.a, t.b, t.c
    A = [None] + [a**x for x in range(1, cap + 1)]
    B = [None] + [b**y for y in range(1, cap + 1)]
    C = [None] + [c**z for z in range(1, cap + 1)]
    out = []
    for x in range(1, cap + 1):
        for y in range(1, cap + 1):
            s = A[x] + B[y]
            for z in range(1, cap + 1):
                if C[z] == s:
                    out.append(_record(p, x, y, z))
                elif C[z] > s:
                    break
    out.sort(key=lambda r: (r.sol.x, r.sol.y, r.sol.z))
    return out


def _scan_one(args) -> tuple[tuple[int, int], list[tuple[int, int, int]]]:
    (m, n), cap = args
    recs = find_solutions(PrimPair(m, n), cap)
    return (m, n), [(r.sol.x, r.sol.y, r.sol.z) for r in recs]


def scan_range(m_max: int, cap: int, jobs: int = 1) -> dict:
    """Run find_solutions over every primitive pair with m <= m_max.

    Results are merged in (m, n) order, so the report does not depend on
    the worker count.
    """
    if m_max < 2:
        return {
            "m_max": m_max,
            "cap": cap,
            "pairs_scanned": 0,
            "solutions": [],
            "non_trivial": [],
            "exceptional": [],
            "warning": "no primitive pairs with m <= 1",
        }
    if cap < 2:
        raise ValueError("cap must be >= 2")
    pairs = [(q.m, q.n) for q in iter_pairs(m_max)]
    work = [((m, n), cap) for (m, n) in pairs]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_one, work, chunksize=8))
    else:
        results = [_scan_one(w) for w in work]
    results.sort(key=lambda item: item[0])
    solutions = []
    for (m, n), sols in results:
        for (x, y, z) in sols:
            solutions.append({"m": m, "n": n, "x": x, "y": y, "z": z})
    non_trivial = [s for s in solutions if (s["x"], s["y"], s["z"]) != (2, 2, 2)]
    exceptional = [
        s
        for s in non_trivial
        if s["x"] % 2 == 0 and s["y"] % 2 == 0 and s["z"] % 2 == 0
    ]
    return {
        "m_max": m_max,
        "cap": cap,
        "pairs_scanned": len(pairs),
        "solutions": solutions,
        "non_trivial": non_trivial,
        "exceptional": exceptional,
    }


class KLStructureError(ValueError):
    """Raised when (a^X, b^Y, c^Z) is not a primitive Pythagorean triple."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


def power_triple_generators(p: PrimPair, X: int, Y: int, Z: int) -> tuple[int, int]:
    """The (k, l) with a^X = k^2 - l^2, b^Y = 2kl, c^Z = k^2 + l^2.

    Exists exactly when the three odd-exponent powers form a Pythagorean
    triple again; X = Y = Z = 1 returns the generators (m, n) themselves.
    """
    if X % 2 == 0 or Y % 2 == 0 or Z % 2 == 0:
        raise ValueError("requires odd X, Y, Z")
    t = triple_of(p)
    aX, bY, cZ = t.a**X, t.b**Y, t.c**Z
    ksq, lsq = (cZ + aX) // 2, (cZ - aX) // 2
    if (cZ + aX) % 2 or (cZ - aX) % 2:
        raise KLStructureError("no Pythagorean structure")
    k = math.isqrt(ksq)
    l = math.isqrt(lsq)
    if k * k != ksq or l * l != lsq:
        raise KLStructureError("no Pythagorean structure")
    if 2 * k * l != bY:
        raise KLStructureError("middle identity fails")
    return k, l


def gaussian_root(k: int, l: int, Z: int) -> tuple[int, int, GaussianInt]:
    """Solve unit * (a1 + b1 i)^Z = k + l i with a1^2 + b1^2 = c.

    Requires k^2 + l^2 to be an exact Z-th power c^Z; representations of
    c as a sum of two squares are enumerated directly (a1 ascending,
    then b1 = +s before -s, units in the order 1, i, -1, -i).
    """
    if Z % 2 == 0 or Z < 1:
        raise ValueError("requires odd positive Z")
    if math.gcd(k, l) != 1 or (k - l) % 2 == 0:
        raise ValueError("requires coprime k, l of opposite parity")
    c, exact = integer_nth_root(k * k + l * l, Z)
    if not exact:
        raise ValueError("k^2 + l^2 is not an exact Z-th power")
    target = GaussianInt(k, l)
    for unit in UNITS:
        for a1 in range(math.isqrt(c) + 1):
            rest = c - a1 * a1
            s = math.isqrt(rest)
            if s * s != rest:
                continue
            for b1 in (s, -s) if s else (0,):
                if unit * g_pow(GaussianInt(a1, b1), Z) == target:
                    return a1, b1, unit
    raise ValueError("no representation found")


def gaussian_power_structure(a1: int, b1: int, Z: int) -> dict:
    """Divisibility and valuation checks on k + l i = (a1 + b1 i)^Z.

    Verifies: a1 | k and b1 | l with odd quotients; the even one of
    a1, b1 matches the 2-adic valuation of its component of the power;
    odd primes p | a1 satisfy val_p(k) = val_p(a1) + val_p(Z), and
    symmetrically for b1 and l.
    """
    if a1 == 0 or b1 == 0:
        raise ValueError("requires nonzero a1, b1")
    if math.gcd(a1, b1) != 1 or (a1 - b1) % 2 == 0:
        raise ValueError("requires coprime a1, b1 of opposite parity")
    if Z % 2 == 0 or Z < 1:
        raise ValueError("requires odd positive Z")
    g = g_pow(GaussianInt(a1, b1), Z)
    k, l = g.re, g.im
    checks = {}
    qk, rk = divmod(k, a1)
    ql, rl = divmod(l, b1)
    checks["a1_divides_k_odd_quotient"] = rk == 0 and qk % 2 == 1
    checks["b1_divides_l_odd_quotient"] = rl == 0 and ql % 2 == 1
    if a1 % 2 == 0:
        checks["two_adic_match"] = val_p(k, 2) == val_p(a1, 2)
    else:
        checks["two_adic_match"] = val_p(l, 2) == val_p(b1, 2)
    odd_ok = True
    for p in _odd_prime_divisors(abs(a1)):
        odd_ok = odd_ok and val_p(k, p) == val_p(a1, p) + val_p(Z, p)
    for p in _odd_prime_divisors(abs(b1)):
        odd_ok = odd_ok and val_p(l, p) == val_p(b1, p) + val_p(Z, p)
    checks["odd_prime_valuations"] = odd_ok
    return {"k": k, "l": l, "checks": checks, "ok": all(checks.values())}


def _odd_prime_divisors(n: int):
    out = []
    d = 3
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 2
    if n > 2:
        out.append(n)
    return out
