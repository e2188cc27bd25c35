"""Jacobi and quartic symbols against independent oracles, and the parity engine."""

import math
import random
from math import isqrt

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import factorint, isprime

from tripow.numerics import GaussianInt, I, ONE, g_pow
from tripow.residues import (
    ParityConstraint,
    QuarticValue,
    is_primary,
    jacobi,
    parity_engine,
    parity_feasible,
    power_sum_diff_split,
    primary_associate,
    quadratic_sieve,
    quartic_symbol,
    sum_of_powers_prime_residues,
)
from tripow.triples import new_pair


# -- oracles -----------------------------------------------------------------


def legendre_oracle(a: int, p: int) -> int:
    """Euler's criterion for odd prime p."""
    a %= p
    if a == 0:
        return 0
    v = pow(a, (p - 1) // 2, p)
    return 1 if v == 1 else -1


def jacobi_oracle(a: int, n: int) -> int:
    out = 1
    for p, e in factorint(n).items():
        out *= legendre_oracle(a, p) ** e
    return out


def _split_prime_parts(p: int) -> tuple[int, int]:
    """p = s^2 + t^2 by brute search, independent of the library."""
    for s in range(1, isqrt(p) + 1):
        t2 = p - s * s
        t = isqrt(t2)
        if t * t == t2:
            return s, t
    raise AssertionError(f"{p} is not a sum of two squares")


def _make_primary(g: GaussianInt) -> GaussianInt:
    for u in (GaussianInt(1, 0), GaussianInt(0, 1), GaussianInt(-1, 0), GaussianInt(0, -1)):
        cand = u * g
        if (cand.re % 4, cand.im % 4) in ((1, 0), (3, 2)):
            return cand
    raise AssertionError("no primary associate")


def definitional_quartic(a: GaussianInt, pi: GaussianInt) -> int:
    """k with a^((N-1)/4) = i^k mod pi, by plain integer arithmetic.

    Split primes use the field isomorphism Z[i]/pi = F_p with i -> r;
    inert primes use inline pair arithmetic in F_{p^2}.
    """
    norm = pi.norm()
    if isprime(norm):  # split prime, norm = p = 1 mod 4
        p = norm
        s, t = pi.re % p, pi.im % p
        r = (-s * pow(t, -1, p)) % p
        x = (a.re + a.im * r) % p
        w = pow(x, (p - 1) // 4, p)
        table = {1: 0, r: 1, p - 1: 2, (p - r) % p: 3}
        return table[w]
    # inert: pi is a unit multiple of a rational prime q = 3 mod 4
    q = isqrt(norm)
    assert q * q == norm and isprime(q)
    e = (q * q - 1) // 4
    ru, rv = 1, 0
    bu, bv = a.re % q, a.im % q
    while e:
        if e & 1:
            ru, rv = (ru * bu - rv * bv) % q, (ru * bv + rv * bu) % q
        bu, bv = (bu * bu - bv * bv) % q, (2 * bu * bv) % q
        e >>= 1
    table = {(1, 0): 0, (0, 1): 1, (q - 1, 0): 2, (0, q - 1): 3}
    return table[(ru, rv)]


# -- jacobi ------------------------------------------------------------------


def test_jacobi_examples():
    assert jacobi(2, 7) == 1
    assert jacobi(3, 7) == -1
    assert all(jacobi(1, n) == 1 for n in range(3, 100, 2))
    assert jacobi(3, 9) == 0


def test_jacobi_rejects_even_modulus():
    with pytest.raises(ValueError):
        jacobi(3, 8)


def test_jacobi_matches_oracle_small_moduli():
    for n in range(3, 500, 2):
        for a in range(n):
            assert jacobi(a, n) == jacobi_oracle(a, n), (a, n)


@given(st.integers(min_value=-(10**9), max_value=10**9),
       st.integers(min_value=1, max_value=10**4))
def test_jacobi_periodic_and_multiplicative(a, k):
    n = 2 * k + 1
    if n < 3:
        return
    assert jacobi(a, n) == jacobi(a % n, n)
    assert jacobi(a, n) * jacobi(a + 1, n) == jacobi(a * (a + 1), n)


# -- quartic values and primary form -----------------------------------------


def test_quartic_value_algebra():
    assert QuarticValue(1) * QuarticValue(2) == QuarticValue(3)
    assert QuarticValue(3) * QuarticValue(3) == QuarticValue(2)
    assert QuarticValue(1) ** 4 == QuarticValue(0) == 1
    assert QuarticValue(1) == I and QuarticValue(2) == -1
    assert str(QuarticValue(3)) == "-i"


def test_primary_examples():
    assert is_primary(GaussianInt(9, -4))
    prim, unit = primary_associate(GaussianInt(9, -4))
    assert prim == GaussianInt(9, -4) and unit == ONE
    prim, unit = primary_associate(GaussianInt(4, 9))
    assert prim == GaussianInt(9, -4) and unit == GaussianInt(0, -1)
    prim, unit = primary_associate(GaussianInt(1, 2))
    assert prim == unit * GaussianInt(1, 2) and is_primary(prim)


def test_primary_rejects_even_norm():
    with pytest.raises(ValueError):
        primary_associate(GaussianInt(1, 1))


@given(st.integers(min_value=-80, max_value=80), st.integers(min_value=-80, max_value=80))
def test_primary_unique_among_associates(re, im):
    g = GaussianInt(re, im)
    if g.norm() % 2 == 0 or g.norm() <= 1:
        return
    prim, unit = primary_associate(g)
    assert prim == unit * g
    assert prim == _make_primary(g)
    primaries = [u * g for u in (ONE, I, -ONE, -I) if is_primary(u * g)]
    assert primaries == [prim]


# -- quartic symbol ----------------------------------------------------------


def test_quartic_symbol_chain_values_mod_9_minus_4i():
    mod = GaussianInt(9, -4)
    assert quartic_symbol(I, mod) == 1
    assert quartic_symbol(GaussianInt(-1, 0), mod) == 1
    assert quartic_symbol(2, mod) == -1


def test_quartic_symbol_against_definitional_oracle():
    rng = random.Random(41)
    split = [p for p in range(5, 10**6, 4) if isprime(p)]
    inert = [q for q in range(3, 1000, 4) if isprime(q)]
    for _ in range(60):
        p = rng.choice(split)
        s, t = _split_prime_parts(p)
        pi = _make_primary(GaussianInt(s, t))
        a = GaussianInt(rng.randrange(-30, 31), rng.randrange(-30, 31))
        if a.is_zero() or math.gcd(a.norm(), p) != 1:
            continue
        assert quartic_symbol(a, pi) == QuarticValue(definitional_quartic(a, pi))
    for _ in range(40):
        q = rng.choice(inert)
        pi = _make_primary(GaussianInt(q, 0))
        a = GaussianInt(rng.randrange(-30, 31), rng.randrange(-30, 31))
        if a.is_zero() or a.norm() % q == 0:
            continue
        assert quartic_symbol(a, pi) == QuarticValue(definitional_quartic(a, pi))


def test_quartic_symbol_multiplicative():
    rng = random.Random(5)
    mod = GaussianInt(9, -4)
    for _ in range(60):
        a = GaussianInt(rng.randrange(-20, 21), rng.randrange(-20, 21))
        b = GaussianInt(rng.randrange(-20, 21), rng.randrange(-20, 21))
        if a.is_zero() or b.is_zero():
            continue
        if math.gcd(a.norm(), 97) != 1 or math.gcd(b.norm(), 97) != 1:
            continue
        assert quartic_symbol(a * b, mod) == quartic_symbol(a, mod) * quartic_symbol(b, mod)


def test_quartic_symbol_composite_modulus():
    # (9-4i)(3+2i) has norm 97*13; symbol must equal the product of parts
    m1, m2 = GaussianInt(9, -4), GaussianInt(3, 2)
    comp = m1 * m2
    for a in (GaussianInt(2, 0), GaussianInt(0, 1), GaussianInt(2, 3)):
        if math.gcd(a.norm(), comp.norm()) != 1:
            continue
        assert quartic_symbol(a, comp) == quartic_symbol(a, m1) * quartic_symbol(a, m2)


def test_quartic_symbol_rejects_non_coprime():
    with pytest.raises(ValueError):
        quartic_symbol(GaussianInt(9, -4), GaussianInt(9, -4))


def test_quartic_symbol_rejects_even_modulus():
    with pytest.raises(ValueError):
        quartic_symbol(GaussianInt(2, 0), GaussianInt(1, 1))


# -- parity building blocks ----------------------------------------------------


def test_parity_feasible_mod16_case():
    assert parity_feasible(7, 9, 16) == {("even", "even")}


def test_parity_feasible_trivial():
    out = parity_feasible(1, 1, 16)
    assert out == {("even", "even"), ("even", "odd"), ("odd", "even"), ("odd", "odd")}


@given(st.integers(min_value=1, max_value=99).filter(lambda n: n % 2 == 1))
def test_parity_feasible_mod4_forces_x_even(n):
    out = parity_feasible(-(n * n), n * n, 4)
    assert out and all(px == "even" for px, _ in out)


def test_quadratic_sieve_examples():
    cases = {
        (4, 3): {"mod4-x-even", "sum-mod8-7-y-even"},
        (4, 1): {"mod4-x-even", "sum-mod8-5-y-eq-z"},
        (8, 3): {"mod4-x-even", "sum-mod8-3-z-even", "diff-mod8-5-y-eq-z"},
    }
    for mn, want in cases.items():
        got = {c.source for c in quadratic_sieve(new_pair(*mn))}
        assert got == want, (mn, got)


@given(st.sampled_from([(m, n) for m in range(2, 40) for n in range(1, 40)
                        if n < m and (m - n) % 2 == 1 and math.gcd(m, n) == 1]))
def test_sieve_never_excludes_trivial_solution(mn):
    for c in quadratic_sieve(new_pair(*mn)):
        assert c.satisfied_by(2, 2, 2)


def test_parity_constraint_satisfaction():
    c = ParityConstraint("y-eq-z", "r", "")
    assert c.satisfied_by(1, 2, 2) and not c.satisfied_by(1, 2, 3)
    c = ParityConstraint("x-even", "r", "")
    assert c.satisfied_by(2, 1, 1) and not c.satisfied_by(3, 1, 1)


# -- the engine ----------------------------------------------------------------


def test_engine_case_examples():
    expect = {
        (4, 9): ("odd=1(8), even=4(8)", False,
                 ("mod4-x-even", "quartic-chain-x-eq-y", "sum-mod8-5-y-eq-z")),
        (4, 3): ("odd=3(8), even=4(8)", False,
                 ("sum-mod8-7-y-even", "mod16-x-z-even")),
        (4, 7): ("odd=7(8), even=4(8)", False,
                 ("mod4-x-even", "sum-mod8-3-z-even", "diff-mod8-5-y-eq-z")),
        (8, 3): ("odd=3(8), even=0(8)", False,
                 ("mod4-x-even", "sum-mod8-3-z-even", "diff-mod8-5-y-eq-z")),
        (13, 4): ("odd=5(8)", True,
                  ("mod16-x-z-even", "power-split-y-even")),
    }
    for mn, (case, assumed, rules) in expect.items():
        v = parity_engine(new_pair(*mn))
        assert v.applicable and v.all_even
        assert v.case == case
        assert v.assumed_y_gt_1 == assumed
        assert v.rule_ids == rules


def test_engine_inapplicable_cases():
    for mn in [(8, 1), (8, 7)]:
        v = parity_engine(new_pair(*mn))
        assert not v.applicable and not v.all_even


def test_engine_requires_divisibility_by_four():
    with pytest.raises(ValueError, match="4"):
        parity_engine(new_pair(2, 1))


def test_engine_constraints_always_allow_trivial_solution():
    for m in range(4, 121, 4):
        for n in range(1, m):
            if (m - n) % 2 == 0 or math.gcd(m, n) != 1:
                continue
            v = parity_engine(new_pair(m, n))
            for c in v.constraints:
                assert c.satisfied_by(2, 2, 2), (m, n, c)


# -- power sum/difference split -------------------------------------------------


def test_split_trivial_identity():
    for mn in [(2, 1), (13, 4), (12, 7)]:
        p = new_pair(*mn)
        D, E, diag = power_sum_diff_split(p, 1, 1, 2)
        m, n = p.m, p.n
        assert D == 2 * m * m and E == 2 * n * n
        assert diag["gcd_DE"] == 2
        assert diag["product_is_b_pow_y"]  # D*E = b^2 exactly


def test_split_no_exact_power_case():
    D, E, diag = power_sum_diff_split(new_pair(13, 4), 3, 3, 2)
    assert D == 185**3 + 153**3 and E == 185**3 - 153**3
    assert diag["gcd_DE"] == 2
    assert not diag["product_is_b_pow_y"]
    assert diag["decomposition"] is None


def test_split_decomposition_structure():
    p = new_pair(4, 3)
    D, E, diag = power_sum_diff_split(p, 1, 1, 2)
    dec = diag["decomposition"]
    assert dec is not None
    assert dec["n1"] * dec["n2"] == 3
    assert 4 * dec["m1"] * dec["m2"] == 4  # m = 2^alpha m1 m2 with alpha = 2
    assert dec["n1_mod_8"] == dec["n1"] % 8


def test_split_rejects_even_half_exponents():
    with pytest.raises(ValueError):
        power_sum_diff_split(new_pair(13, 4), 2, 1, 2)


@given(st.integers(min_value=2, max_value=30),
       st.sampled_from([(1, 3), (1, 5), (3, 5), (1, 7), (3, 7), (5, 9)]))
def test_fourth_power_plus_one_divisors_are_one_mod_eight(n, XZ):
    X, Z = XZ
    out = sum_of_powers_prime_residues(n, X, Z, limit=20000)
    assert out["all_one_mod_8"]
    for q, r in out["divisors"]:
        assert r == 1 and (n ** (2 * (Z - X)) + 1) % q == 0
