"""Quadratic and quartic residue machinery and the parity engine.

The parity engine answers one question for a generator pair whose even
member is divisible by 4: must every solution of a^x + b^y = c^z in the
exceptional-candidate sense have x, y, z all even?  Each applicable rule
is verified live on the pair (Jacobi characters, residue cycle
exhaustion, quartic symbols over Z[i]); the verdict records the full
rule chain and whether the y > 1 hypothesis was consumed.
"""

from __future__ import annotations

from dataclasses import dataclass
import math

from sympy import isprime, factorint
from sympy.ntheory.residue_ntheory import sqrt_mod

from .numerics import (
    GaussianInt,
    UNITS,
    g_gcd,
    g_divides,
    g_divexact,
    g_powmod,
    g_pow,
    integer_nth_root,
    val_p,
)
from .triples import PrimPair, triple_of

__all__ = [
    "jacobi",
    "QuarticValue",
    "primary_associate",
    "is_primary",
    "quartic_symbol",
    "ParityConstraint",
    "ParityVerdict",
    "quadratic_sieve",
    "parity_feasible",
    "power_sum_diff_split",
    "sum_of_powers_prime_residues",
    "parity_engine",
]


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 1."""
    if n < 1 or n % 2 == 0:
        raise ValueError("jacobi requires odd positive n")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


# ---------------------------------------------------------------------------
# Quartic residue symbol over Z[i]


@dataclass(frozen=True)
class QuarticValue:
    """A fourth root of unity i^k, k mod 4."""

    k: int

    def __post_init__(self):
        object.__setattr__(self, "k", self.k % 4)

    def __mul__(self, other: "QuarticValue") -> "QuarticValue":
        return QuarticValue(self.k + other.k)

    def __pow__(self, e: int) -> "QuarticValue":
        return QuarticValue(self.k * e)

    def as_gaussian(self) -> GaussianInt:
        return UNITS[self.k]

    def __eq__(self, other) -> bool:
        if isinstance(other, QuarticValue):
            return self.k == other.k
        if isinstance(other, int):
            return (other == 1 and self.k == 0) or (other == -1 and self.k == 2)
        if isinstance(other, GaussianInt):
            return self.as_gaussian() == other
        return NotImplemented

    def __hash__(self):
        return hash(("QuarticValue", self.k))

    def __str__(self):
        return ("1", "i", "-1", "-i")[self.k]


def is_primary(g: GaussianInt) -> bool:
    """Primary: odd and congruent to 1 mod (1+i)^3."""
    if g.norm() % 2 == 0:
        return False
    return (g.re % 4, g.im % 4) in ((1, 0), (3, 2))


def primary_associate(g: GaussianInt) -> tuple[GaussianInt, GaussianInt]:
    """The unique primary associate of an odd Gaussian integer.

    Returns (primary, unit) with primary == unit * g.
    """
    if g.norm() % 2 == 0:
        raise ValueError("primary form requires odd norm")
    for unit in UNITS:
        h = unit * g
        if is_primary(h):
            return h, unit
    raise AssertionError("odd Gaussian integer must have a primary associate")


_FACTOR_NORM_LIMIT = 10**18


def _gaussian_prime_factors(g: GaussianInt) -> list[tuple[GaussianInt, int]]:
    """Gaussian prime factorization of an odd-norm g, via its norm."""
    n = g.norm()
    if n > _FACTOR_NORM_LIMIT:
        raise ValueError("refusing to factor modulus of norm > 1e18")
    out: list[tuple[GaussianInt, int]] = []
    rem = g
    for p in sorted(factorint(n)):
        if p % 4 == 3:
            pi = GaussianInt(p, 0)
            mult = 0
            while g_divides(pi, rem):
                rem = g_divexact(rem, pi)
                mult += 1
            if mult:
                out.append((pi, mult))
        else:
            s = int(sqrt_mod(p - 1, p))
            split = g_gcd(GaussianInt(p, 0), GaussianInt(s, 1))
            for cand in (split, split.conj()):
                mult = 0
                while g_divides(cand, rem):
                    rem = g_divexact(rem, cand)
                    mult += 1
                if mult:
                    out.append((cand, mult))
    if not rem.is_unit():
        raise AssertionError("norm factorization did not exhaust the modulus")
    return out


def _quartic_prime(a: GaussianInt, pi: GaussianInt) -> QuarticValue:
    """(a/pi)_4 for a Gaussian prime pi of odd norm, gcd(a, pi) a unit."""
    N = pi.norm()
    r = g_powmod(a, (N - 1) // 4, pi)
    for k in range(4):
        if g_divides(pi, r - UNITS[k]):
            return QuarticValue(k)
    raise ValueError("arguments not coprime")


def quartic_symbol(a, modulus: GaussianInt) -> QuarticValue:
    """Biquadratic residue symbol (a/modulus)_4 = i^k.

    For prime modulus this is the character a^((N-1)/4) mod modulus;
    for composite odd modulus it is extended multiplicatively over the
    Gaussian prime factorization (obtained through the norm).
    """
    if isinstance(a, int):
        a = GaussianInt(a, 0)
    n = modulus.norm()
    if n % 2 == 0:
        raise ValueError("modulus must have odd norm")
    if n == 1:
        raise ValueError("modulus must not be a unit")
    if not g_gcd(a, modulus).is_unit():
        raise ValueError("arguments not coprime")
    if isprime(n) or (modulus.im == 0 and isprime(abs(modulus.re))) or (
        modulus.re == 0 and isprime(abs(modulus.im))
    ):
        return _quartic_prime(a, modulus)
    total = QuarticValue(0)
    for pi, mult in _gaussian_prime_factors(modulus):
        total = total * (_quartic_prime(a, pi) ** mult)
    return total


# ---------------------------------------------------------------------------
# Parity constraints


@dataclass(frozen=True)
class ParityConstraint:
    """One congruence-derived restriction on exponent parities."""

    kind: str  # "x-even" | "y-even" | "z-even" | "y-eq-z" | "x-eq-y"
    source: str  # rule id
    note: str = ""

    KINDS = ("x-even", "y-even", "z-even", "y-eq-z", "x-eq-y")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown constraint kind {self.kind!r}")

    def satisfied_by(self, x: int, y: int, z: int) -> bool:
        if self.kind == "x-even":
            return x % 2 == 0
        if self.kind == "y-even":
            return y % 2 == 0
        if self.kind == "z-even":
            return z % 2 == 0
        if self.kind == "y-eq-z":
            return (y - z) % 2 == 0
        return (x - y) % 2 == 0


@dataclass(frozen=True)
class ParityVerdict:
    applicable: bool
    all_even: bool
    constraints: tuple[ParityConstraint, ...]
    assumed_y_gt_1: bool
    case: str | None = None

    @property
    def rule_ids(self) -> tuple[str, ...]:
        seen: list[str] = []
        for c in self.constraints:
            if c.source not in seen:
                seen.append(c.source)
        return tuple(seen)


def _forces_all_even(constraints) -> bool:
    """Propositional closure: do the constraints force x, y, z all even?"""
    parent = {"x": "x", "y": "y", "z": "z", "even": "even"}

    def find(u):
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    def union(u, v):
        parent[find(u)] = find(v)

    for c in constraints:
        if c.kind == "x-even":
            union("x", "even")
        elif c.kind == "y-even":
            union("y", "even")
        elif c.kind == "z-even":
            union("z", "even")
        elif c.kind == "y-eq-z":
            union("y", "z")
        elif c.kind == "x-eq-y":
            union("x", "y")
    root = find("even")
    return all(find(v) == root for v in ("x", "y", "z"))


def quadratic_sieve(p: PrimPair) -> frozenset[ParityConstraint]:
    """Unconditional parity constraints from quadratic residues.

    Works on the pair as stored (m > n).  Every rule is a necessary
    condition on any solution with x, y, z >= 1; none can exclude
    (2,2,2).
    """
    m, n = p.m, p.n
    out = set()
    if m % 2 == 0:
        out.add(
            ParityConstraint(
                "x-even",
                "mod4-x-even",
                "m^2-n^2 = 3 mod 4 and m^2+n^2 = 1 mod 4, so (-1)^x = 1",
            )
        )
    s = (m + n) % 8
    if s == 3:
        out.add(
            ParityConstraint(
                "z-even",
                "sum-mod8-3-z-even",
                "mod m+n: (-2/q) = 1 forced against (2/q) = -1, so z is even",
            )
        )
    elif s == 5:
        out.add(
            ParityConstraint(
                "y-eq-z",
                "sum-mod8-5-y-eq-z",
                "mod m+n: both sides carry (2/q) = -1, so y and z share parity",
            )
        )
    elif s == 7:
        out.add(
            ParityConstraint(
                "y-even",
                "sum-mod8-7-y-even",
                "mod m+n: (-1/q) = -1 with (2/q) = 1, so y is even",
            )
        )
    if (m - n) % 8 == 5:
        out.add(
            ParityConstraint(
                "y-eq-z",
                "diff-mod8-5-y-eq-z",
                "mod m-n: both sides carry (2/q) = -1, so y and z share parity",
            )
        )
    return frozenset(out)


def parity_feasible(a_res: int, c_res: int, M: int) -> set[tuple[str, str]]:
    """Which (x mod 2, z mod 2) admit a_res^x = c_res^z (mod M).

    Exhausts the residue cycles of both bases; the caller is responsible
    for the middle term vanishing mod M.
    """
    if M < 2:
        raise ValueError("modulus must be >= 2")
    a_res %= M
    c_res %= M
    A = {"even": set(), "odd": set()}
    C = {"even": set(), "odd": set()}
    va = vc = 1
    # 2M+2 steps visit the whole eventual orbit of (value, exponent parity)
    for x in range(1, 2 * M + 3):
        va = va * a_res % M
        vc = vc * c_res % M
        par = "odd" if x % 2 else "even"
        A[par].add(va)
        C[par].add(vc)
    return {
        (px, pz)
        for px in ("even", "odd")
        for pz in ("even", "odd")
        if A[px] & C[pz]
    }


def power_sum_diff_split(p: PrimPair, X: int, Z: int, y: int):
    """D = c^Z + a^X, E = c^Z - a^X with divisibility diagnostics.

    When D*E is exactly b^y and the even generator's structure allows it,
    also returns the two-and-odd-part decomposition of the pair hidden in
    E = 2 (m1 n1)^y: m = 2^alpha m1 m2, n = n1 n2, with residues mod 8.
    """
    if X % 2 == 0 or Z % 2 == 0:
        raise ValueError("requires odd X and Z")
    if y < 1:
        raise ValueError("y must be positive")
    t = triple_of(p)
    a, b, c = t.a, t.b, t.c
    D = c**Z + a**X
    E = c**Z - a**X
    diagnostics = {
        "gcd_DE": math.gcd(D, E),
        "E_mod_4": E % 4,
        "val2_D": val_p(D, 2),
        "val2_E": val_p(E, 2),
        "product_is_b_pow_y": D * E == b**y,
        "decomposition": None,
    }
    ev, od = p.even_member, p.odd_member
    if diagnostics["product_is_b_pow_y"] and E % 4 == 2 and p.m % 2 == 0:
        alpha = val_p(ev, 2)
        ev_odd = ev >> alpha
        u, exact = integer_nth_root(E // 2, y)
        if exact and u % 2 == 1:
            m1 = math.gcd(u, ev_odd)
            n1 = u // m1
            if ev_odd % m1 == 0 and od % n1 == 0:
                diagnostics["decomposition"] = {
                    "m1": m1,
                    "n1": n1,
                    "m2": ev_odd // m1,
                    "n2": od // n1,
                    "m1_mod_8": m1 % 8,
                    "n1_mod_8": n1 % 8,
                    "n2_mod_8": (od // n1) % 8,
                }
    return D, E, diagnostics


def sum_of_powers_prime_residues(n: int, X: int, Z: int, limit: int = 50000):
    """Residues mod 8 of small prime divisors of n^(2(Z-X)) + 1.

    With X, Z odd and Z > X the difference is even, so the number is a
    fourth power plus one; every odd prime divisor must be 1 mod 8.
    """
    if X % 2 == 0 or Z % 2 == 0 or Z <= X:
        raise ValueError("requires odd X < Z")
    N = n ** (2 * (Z - X)) + 1
    found = []
    q = 3
    while q <= limit:
        if N % q == 0 and isprime(q):
            found.append((q, q % 8))
        q += 2
    return {
        "divisors": found,
        "all_one_mod_8": all(r == 1 for _, r in found),
    }


# ---------------------------------------------------------------------------
# The parity engine


def _jacobi_pair_rule(q_signed: int, b: int, c: int, source: str):
    """Constraint from b^y = c^z (mod |q|) when q | a, by Jacobi characters.

    Returns None when both characters are +1 (no information).
    """
    q = abs(q_signed)
    if q < 3 or q % 2 == 0:
        return None
    jb = jacobi(b % q, q)
    jc = jacobi(c % q, q)
    if jb == 0 or jc == 0:
        return None
    if jb == -1 and jc == 1:
        return ParityConstraint(
            "y-even", source, f"(b/{q}) = -1 and (c/{q}) = 1 force (-1)^y = 1"
        )
    if jb == 1 and jc == -1:
        return ParityConstraint(
            "z-even", source, f"(b/{q}) = 1 and (c/{q}) = -1 force (-1)^z = 1"
        )
    if jb == -1 and jc == -1:
        return ParityConstraint(
            "y-eq-z", source, f"(b/{q}) = (c/{q}) = -1 force (-1)^y = (-1)^z"
        )
    return None


_SUM_RULE_IDS = {3: "sum-mod8-3-z-even", 5: "sum-mod8-5-y-eq-z", 7: "sum-mod8-7-y-even"}


def parity_engine(p: PrimPair) -> ParityVerdict:
    """Full parity dispatch for a pair whose even generator has 4 | it.

    Notation inside: e is the even generator, o the odd one; the rules
    are evaluated for the bases (e^2 - o^2, 2eo, e^2 + o^2) with the sign
    of the first tracked exactly, which coincides with the triple's legs
    whenever e is the larger member.  Every congruence premise is checked
    live on the pair rather than assumed from the case label.
    """
    e, o = p.even_member, p.odd_member
    alpha = val_p(e, 2)
    if alpha < 2:
        raise ValueError("engine requires 4 | m")
    A = e * e - o * o  # signed; Python mod keeps the congruences honest
    B = 2 * e * o
    C = e * e + o * o
    res8 = o % 8
    constraints: list[ParityConstraint] = []
    assumed = False
    case = None

    def mod4_rule():
        feas = parity_feasible(A % 4, C % 4, 4)
        if feas and all(px == "even" for px, _ in feas):
            constraints.append(
                ParityConstraint(
                    "x-even",
                    "mod4-x-even",
                    f"{A % 4}^x = {C % 4}^z (mod 4) admits only even x",
                )
            )

    def mod16_rule(y_ge_2_reason: str):
        feas = parity_feasible(A % 16, C % 16, 16)
        if feas == {("even", "even")}:
            note = (
                f"{A % 16}^x = {C % 16}^z (mod 16) admits only even x, z"
                f" ({y_ge_2_reason})"
            )
            constraints.append(ParityConstraint("x-even", "mod16-x-z-even", note))
            constraints.append(ParityConstraint("z-even", "mod16-x-z-even", note))

    def sum_rule():
        c = _jacobi_pair_rule(e + o, B, C, _SUM_RULE_IDS.get((e + o) % 8, "sum-mod8"))
        if c is not None:
            constraints.append(c)
        return c

    def diff_rule():
        c = _jacobi_pair_rule(e - o, B, C, "diff-mod8-5-y-eq-z")
        if c is not None and c.kind == "y-eq-z":
            constraints.append(c)
            return c
        return None

    if res8 == 1 and alpha == 2:
        case = "odd=1(8), even=4(8)"
        mod4_rule()
        pi = GaussianInt(o, -e)
        s1 = quartic_symbol(GaussianInt(2 * o * o, 0), pi)
        s2 = quartic_symbol(GaussianInt(0, 2 * e * e), pi)
        if s1 == -1 and s2 == -1:
            constraints.append(
                ParityConstraint(
                    "x-eq-y",
                    "quartic-chain-x-eq-y",
                    "(2o^2/o-ei)_4 = (2e^2 i/o-ei)_4 = -1 force (-1)^x = (-1)^y",
                )
            )
        sum_rule()
    elif res8 == 3:
        if e % 8 == 4:
            case = "odd=3(8), even=4(8)"
            sum_rule()  # sum = 7 mod 8: y even
            mod16_rule("y even makes y >= 2, so 16 divides b^y")
        else:
            case = "odd=3(8), even=0(8)"
            mod4_rule()
            sum_rule()  # sum = 3 mod 8: z even
            diff_rule()  # diff = 5 mod 8: y = z
    elif res8 == 5:
        case = "odd=5(8)"
        assumed = True
        mod16_rule("y > 1 assumed, so 16 divides b^y")
        constraints.append(
            ParityConstraint(
                "y-even",
                "power-split-y-even",
                "split c^Z -+ a^X = 2(m1 n1)^y * (power of 2): residues mod 8 "
                "force 5^y = 1 (mod 8), so y is even (uses y > 1)",
            )
        )
    elif res8 == 7 and alpha == 2:
        case = "odd=7(8), even=4(8)"
        mod4_rule()
        sum_rule()  # sum = 3 mod 8: z even
        diff_rule()  # signed diff = 5 mod 8: y = z
    else:
        return ParityVerdict(
            applicable=False,
            all_even=False,
            constraints=(),
            assumed_y_gt_1=False,
            case=None,
        )

    ctuple = tuple(constraints)
    return ParityVerdict(
        applicable=True,
        all_even=_forces_all_even(ctuple),
        constraints=ctuple,
        assumed_y_gt_1=assumed,
        case=case,
    )
