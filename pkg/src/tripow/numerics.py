"""Exact integer, Gaussian-integer, and certified interval arithmetic.

Everything else in the package sits on these three layers:

* plain Python ints for all exact work (no silent overflow exists here),
* ``GaussianInt`` for Z[i] with exact Euclidean division,
* ``RInterval`` for real quantities where an inequality must be *certified*:
  every operation returns an enclosure of the exact image, so ``hi < lo``
  comparisons between intervals are proofs, not estimates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import math

import mpmath
from mpmath import iv as _iv, make_mpf as _make_mpf
from mpmath.libmp import to_rational as _to_rational

__all__ = [
    "val_p",
    "perfect_power_exponent",
    "integer_nth_root",
    "GaussianInt",
    "g_pow",
    "g_divmod",
    "g_gcd",
    "RInterval",
    "DEFAULT_PRECISION",
]

DEFAULT_PRECISION = 128


def val_p(n: int, p: int) -> int:
    """Largest e with p^e dividing n. The valuation of 0 is undefined."""
    if n == 0:
        raise ValueError("valuation of zero undefined")
    if p < 2:
        raise ValueError("p must be a prime >= 2")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def perfect_power_exponent(N: int, base: int):
    """Return y >= 1 with base^y == N, or None.

    N == 1 is treated as absent: exponents are positive by convention.
    """
    if N < 1 or base < 2:
        raise ValueError("requires N >= 1 and base >= 2")
    if N == 1:
        return None
    # y is at most log_base(N); walk up with exact multiplication.
    y = 0
    acc = 1
    while acc < N:
        acc *= base
        y += 1
    return y if acc == N else None


def integer_nth_root(N: int, n: int) -> tuple[int, bool]:
    """(floor(N^(1/n)), exact) for N >= 0, n >= 1, by Newton/bisection on ints."""
    if N < 0 or n < 1:
        raise ValueError("requires N >= 0 and n >= 1")
    if n == 1 or N in (0, 1):
        return N, True
    if n == 2:
        r = math.isqrt(N)
        return r, r * r == N
    hi = 1 << (-(-N.bit_length() // n) + 1)
    lo = 0
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**n <= N:
            lo = mid
        else:
            hi = mid - 1
    return lo, lo**n == N


# ---------------------------------------------------------------------------
# Gaussian integers


@dataclass(frozen=True)
class GaussianInt:
    re: int
    im: int

    def __add__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GaussianInt") -> "GaussianInt":
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianInt(a * c - b * d, a * d + b * c)

    def __neg__(self) -> "GaussianInt":
        return GaussianInt(-self.re, -self.im)

    def conj(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


ONE = GaussianInt(1, 0)
I = GaussianInt(0, 1)
UNITS = (ONE, I, GaussianInt(-1, 0), GaussianInt(0, -1))


def g_pow(g: GaussianInt, e: int) -> GaussianInt:
    """Exact e-th power in Z[i], e >= 0."""
    if e < 0:
        raise ValueError("negative exponent")
    result = ONE
    base = g
    while e:
        if e & 1:
            result = result * base
        base = base * base
        e >>= 1
    return result


def g_divmod(x: GaussianInt, m: GaussianInt) -> tuple[GaussianInt, GaussianInt]:
    """Euclidean division: x = q*m + r with norm(r) <= norm(m)/2.

    Quotient components are rounded to the nearest integer, which keeps
    |r/m|^2 <= 1/2 and makes the Euclidean algorithm terminate.
    """
    if m.is_zero():
        raise ZeroDivisionError("division by zero Gaussian integer")
    nm = m.norm()
    t = x * m.conj()

    def nearest(a: int, b: int) -> int:
        # round half toward +inf; any consistent nearest rounding works
        return (2 * a + b) // (2 * b)

    q = GaussianInt(nearest(t.re, nm), nearest(t.im, nm))
    r = x - q * m
    return q, r


def g_mod(x: GaussianInt, m: GaussianInt) -> GaussianInt:
    return g_divmod(x, m)[1]


def g_gcd(x: GaussianInt, m: GaussianInt) -> GaussianInt:
    """A greatest common divisor in Z[i] (unique up to units)."""
    while not m.is_zero():
        x, m = m, g_mod(x, m)
    return x


def g_powmod(g: GaussianInt, e: int, m: GaussianInt) -> GaussianInt:
    if e < 0:
        raise ValueError("negative exponent")
    result = g_mod(ONE, m)
    base = g_mod(g, m)
    while e:
        if e & 1:
            result = g_mod(result * base, m)
        base = g_mod(base * base, m)
        e >>= 1
    return result


def g_divides(d: GaussianInt, x: GaussianInt) -> bool:
    """True iff d | x exactly in Z[i]."""
    if d.is_zero():
        return x.is_zero()
    nd = d.norm()
    t = x * d.conj()
    return t.re % nd == 0 and t.im % nd == 0


def g_divexact(x: GaussianInt, d: GaussianInt) -> GaussianInt:
    nd = d.norm()
    t = x * d.conj()
    if t.re % nd or t.im % nd:
        raise ValueError(f"{d} does not divide {x}")
    return GaussianInt(t.re // nd, t.im // nd)


# ---------------------------------------------------------------------------
# Certified real intervals.
#
# A thin wrapper over mpmath's interval context.  The context's precision is
# process-global, so every operation pins it for its own duration; results
# carry the precision they were computed at.  Endpoints come back out as
# exact mpf values (arbitrary precision, exact comparisons).


class _Prec:
    """Pin the mpmath interval context precision, restore on exit."""

    def __init__(self, bits: int):
        self.bits = bits

    def __enter__(self):
        self._saved = _iv.prec
        _iv.prec = self.bits

    def __exit__(self, *exc):
        _iv.prec = self._saved


class RInterval:
    """Real interval [lo, hi] with outward rounding at a stated precision.

    Containment guarantee: the result of any operation encloses the exact
    image of the operand intervals.  A strict inequality between two
    intervals (hi of one < lo of the other) is therefore a certificate.
    """

    __slots__ = ("_v", "precision")

    def __init__(self, lo, hi=None, precision: int = DEFAULT_PRECISION):
        if precision < 8:
            raise ValueError("precision too small")
        with _Prec(precision):
            if hi is None:
                self._v = self._convert_one(lo)
            else:
                a = self._convert_one(lo)
                b = self._convert_one(hi)
                end_lo, end_hi = _make_mpf(a._mpi_[0]), _make_mpf(b._mpi_[1])
                if end_lo > end_hi:
                    raise ValueError("interval endpoints out of order")
                self._v = _iv.mpf([end_lo, end_hi])
        self.precision = precision

    @staticmethod
    def _convert_one(x):
        if isinstance(x, RInterval):
            return x._v
        if isinstance(x, Fraction):
            return _iv.mpf(x.numerator) / _iv.mpf(x.denominator)
        if isinstance(x, (int, str, float)):
            return _iv.mpf(x)
        if isinstance(x, mpmath.mpf):
            return _iv.mpf(x)
        raise TypeError(f"cannot build interval from {type(x).__name__}")

    @classmethod
    def _wrap(cls, v, precision: int) -> "RInterval":
        out = object.__new__(cls)
        out._v = v
        out.precision = precision
        return out

    # -- endpoints ---------------------------------------------------------

    @property
    def lo(self) -> mpmath.mpf:
        return _make_mpf(self._v._mpi_[0])

    @property
    def hi(self) -> mpmath.mpf:
        return _make_mpf(self._v._mpi_[1])

    @property
    def width(self) -> mpmath.mpf:
        return _make_mpf(self._v.delta._mpi_[1])

    @property
    def mid(self) -> mpmath.mpf:
        return (self.lo + self.hi) / 2

    def __repr__(self) -> str:
        return f"RInterval[{mpmath.nstr(self.lo, 20)}, {mpmath.nstr(self.hi, 20)}]"

    # -- queries -----------------------------------------------------------

    def contains(self, x) -> bool:
        if isinstance(x, (Fraction, int)):
            x = Fraction(x)
            lo, hi = self.lo, self.hi
            if mpmath.isfinite(lo):
                if Fraction(*_to_rational(lo._mpf_)) > x:
                    return False
            elif lo > 0:
                return False
            if mpmath.isfinite(hi):
                if Fraction(*_to_rational(hi._mpf_)) < x:
                    return False
            elif hi < 0:
                return False
            return True
        return self.lo <= x <= self.hi

    def strictly_less(self, other: "RInterval") -> bool:
        return self.hi < other.lo

    def strictly_positive(self) -> bool:
        return self.lo > 0

    def strictly_negative(self) -> bool:
        return self.hi < 0

    # -- arithmetic --------------------------------------------------------

    def _binop(self, other, op) -> "RInterval":
        if not isinstance(other, RInterval):
            other = RInterval(other, precision=self.precision)
        prec = max(self.precision, other.precision)
        with _Prec(prec):
            return RInterval._wrap(op(self._v, other._v), prec)

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    def __radd__(self, other):
        return self._binop(other, lambda a, b: b + a)

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binop(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._binop(other, lambda a, b: a * b)

    def __rmul__(self, other):
        return self._binop(other, lambda a, b: b * a)

    def __truediv__(self, other):
        return self._binop(other, lambda a, b: a / b)

    def __rtruediv__(self, other):
        return self._binop(other, lambda a, b: b / a)

    def __neg__(self):
        with _Prec(self.precision):
            return RInterval._wrap(-self._v, self.precision)

    def __pow__(self, e: int):
        if not isinstance(e, int):
            raise TypeError("integer exponents only; use pow_frac for t^q")
        with _Prec(self.precision):
            return RInterval._wrap(self._v**e, self.precision)

    # -- transcendental ----------------------------------------------------

    def ln(self) -> "RInterval":
        if not self.lo > 0:
            raise ValueError("ln requires a strictly positive interval")
        with _Prec(self.precision):
            return RInterval._wrap(_iv.log(self._v), self.precision)

    def exp(self) -> "RInterval":
        with _Prec(self.precision):
            return RInterval._wrap(_iv.exp(self._v), self.precision)

    def sqrt(self) -> "RInterval":
        if self.lo < 0:
            raise ValueError("sqrt requires a nonnegative interval")
        with _Prec(self.precision):
            return RInterval._wrap(_iv.sqrt(self._v), self.precision)

    def pow_frac(self, q) -> "RInterval":
        """t^q for positive t and rational/interval q, via exp(q ln t)."""
        if not self.lo > 0:
            raise ValueError("pow_frac requires a strictly positive base")
        if not isinstance(q, RInterval):
            q = RInterval(q, precision=self.precision)
        prec = max(self.precision, q.precision)
        with _Prec(prec):
            return RInterval._wrap(_iv.exp(q._v * _iv.log(self._v)), prec)

    @staticmethod
    def pi(precision: int = DEFAULT_PRECISION) -> "RInterval":
        with _Prec(precision):
            return RInterval._wrap(+_iv.pi, precision)

    @staticmethod
    def e_const(precision: int = DEFAULT_PRECISION) -> "RInterval":
        with _Prec(precision):
            return RInterval._wrap(_iv.exp(_iv.mpf(1)), precision)
