"""Certified analytic bounds: exponent ordering, two-logarithm lower
bounds, exponent-gap estimates, and threshold certification.

All real arithmetic here runs through RInterval, so every "<" reported
by this module is an interval-certified strict inequality.  The heavy
pieces are:

* a full condition checker for the classical two-logarithm theorem of
  Laurent (interpolation-determinant form, degree-one case),
* its specialized corollary giving an explicit lower bound for
  |y ln a - z ln c| style forms, with the published numeric constants
  recomputed rather than trusted,
* a threshold certifier proving t^q dominates the final inequality's
  right-hand side for every t beyond a stated point: a strict check at
  the point, interval derivative positivity along a geometric grid, and
  an analytic tail where the exponential wins over the squared log.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import math

import mpmath
from mpmath import iv as _iv
from mpmath.libmp import to_rational as _to_rational

from .numerics import DEFAULT_PRECISION, RInterval, _Prec
from .triples import PrimPair, triple_of, two_adic_profile

__all__ = [
    "HypothesisError",
    "y_upper_bound",
    "ordering_predicates",
    "exponent_gap_lower",
    "laurent_epsilon",
    "laurent_epsilon_majorant",
    "LaurentInstance",
    "laurent_check",
    "lemma_parameter_rechecks",
    "two_log_instance",
    "TwoLogBound",
    "two_log_lower_bound",
    "exponent_gap_upper",
    "DeltaBounds",
    "exponent_gap_bounds",
    "threshold_rhs",
    "ThresholdCert",
    "certify_threshold",
    "crossover",
    "rho_log",
    "alpha1_constant",
]

THRESHOLD_PRECISION = 256

# fixed parameters of the specialized two-logarithm bound
RHO_LOG = Fraction(31, 10)  # rho = e^3.1
MU = Fraction(2, 3)
KAPPA = Fraction(4927, 100000)
L_SLOPE = Fraction(45, 62)


class HypothesisError(ValueError):
    """A stated hypothesis of a bound does not hold for the inputs."""

    def __init__(self, hypothesis: str, detail: str = ""):
        super().__init__(f"hypothesis fails: {hypothesis}" + (f" ({detail})" if detail else ""))
        self.hypothesis = hypothesis


def rho_log(precision: int = DEFAULT_PRECISION) -> RInterval:
    return RInterval(Fraction(31, 10), precision=precision)


def alpha1_constant(precision: int = DEFAULT_PRECISION) -> RInterval:
    """a1 = e^3.1 * pi, the fixed first-logarithm weight."""
    return rho_log(precision).exp() * RInterval.pi(precision)


def _imin(x: RInterval, y: RInterval) -> RInterval:
    prec = max(x.precision, y.precision)
    return RInterval(min(x.lo, y.lo), min(x.hi, y.hi), precision=prec)


def _exact(x: mpmath.mpf) -> Fraction:
    """Exact rational value of a finite mpf endpoint."""
    return Fraction(*_to_rational(x._mpf_))


def _certified_floor(x: RInterval) -> int:
    lo = int(mpmath.floor(x.lo))
    hi = int(mpmath.floor(x.hi))
    if lo != hi:
        raise ValueError("floor undetermined at this precision; raise precision")
    return lo


def y_upper_bound(p: PrimPair, precision: int = DEFAULT_PRECISION) -> RInterval:
    """Enclosure of min(ln n / ln 3, ln(2(m-1)) / ((alpha+1) ln 2)).

    Any exceptional solution's half-exponent Y = y/2 must fall strictly
    below this; callers use ceil(hi) as an exclusive bound.
    """
    prof = two_adic_profile(p)
    m, n = p.m, p.n
    ln3 = RInterval(3, precision=precision).ln()
    ln2 = RInterval(2, precision=precision).ln()
    first = RInterval(n, precision=precision).ln() / ln3
    second = RInterval(2 * (m - 1), precision=precision).ln() / (
        RInterval(prof.alpha + 1, precision=precision) * ln2
    )
    return _imin(first, second)


def ordering_predicates(p: PrimPair, t, precision: int = DEFAULT_PRECISION) -> dict:
    """Evaluate the exponent-ordering requirements on an all-even candidate.

    Every predicate is a necessary condition for an exceptional solution;
    a single certified failure excludes the candidate.  The trivial
    solution (2,2,2) is marked non-exceptional and skipped.
    """
    x, y, z = t.x, t.y, t.z
    if (x, y, z) == (2, 2, 2) or x % 2 or y % 2 or z % 2:
        return {
            "exceptional_candidate": False,
            "skipped": True,
            "predicates": {},
            "excluded": False,
            "failures": [],
        }
    tr = triple_of(p)
    ln_c = RInterval(tr.c, precision=precision).ln()
    ln_b = RInterval(tr.b, precision=precision).ln()
    ln_2 = RInterval(2, precision=precision).ln()
    lhs = RInterval(z, precision=precision) * ln_c
    rhs = ln_2 + RInterval(y, precision=precision) * ln_b
    preds = {
        "z_lt_2x": z < 2 * x,
        "z_lt_2y": z < 2 * y,
        "gap_ge_4": abs(x - z) >= 4,
        "wide_pair_x_lt_z": not (50 * p.m > 61 * p.n) or x < z,
        "z_lt_y": z < y,
        "c_pow_z_lt_2_b_pow_y": not rhs.strictly_less(lhs),
    }
    failures = [k for k, v in preds.items() if not v]
    return {
        "exceptional_candidate": True,
        "skipped": False,
        "predicates": preds,
        "excluded": bool(failures),
        "failures": failures,
    }


def exponent_gap_lower(p: PrimPair, precision: int = DEFAULT_PRECISION) -> RInterval:
    """Enclosure of ln m / ln n, a strict lower bound for z - x."""
    if p.n < 2:
        raise ValueError("requires n >= 2")
    return (
        RInterval(p.m, precision=precision).ln()
        / RInterval(p.n, precision=precision).ln()
    )


# ---------------------------------------------------------------------------
# epsilon(N)


def _eps_tail(N: int, precision: int) -> RInterval:
    # ln(1 + ((e-1)/e)^N), exact interval
    e = RInterval.e_const(precision)
    q = (e - 1) / e
    return (RInterval(1, precision=precision) + q**N).ln()


def laurent_epsilon_majorant(N: int, precision: int = DEFAULT_PRECISION) -> RInterval:
    """The decreasing majorant (2/N)((3/2)lnN + (1/2)ln 2pi + 1/(12N) + tail)."""
    if N < 2:
        raise ValueError("requires N >= 2")
    lnN = RInterval(N, precision=precision).ln()
    ln2pi = (RInterval(2, precision=precision) * RInterval.pi(precision)).ln()
    body = (
        RInterval(Fraction(3, 2), precision=precision) * lnN
        + ln2pi / 2
        + RInterval(Fraction(1, 12 * N), precision=precision)
        + _eps_tail(N, precision)
    )
    return RInterval(2, precision=precision) / N * body


def laurent_epsilon(N: int, precision: int = DEFAULT_PRECISION) -> RInterval:
    """Enclosure of epsilon(N) = (2/N) ln(N! N^(1-N) (e^N + (e-1)^N)).

    Small N uses the exact factorial; large N uses the two-sided
    Stirling enclosure whose upper side is the published majorant.
    """
    if N < 2:
        raise ValueError("requires N >= 2")
    if N <= 300:
        lnfac = RInterval(math.factorial(N), precision=precision).ln()
        lnN = RInterval(N, precision=precision).ln()
        body = lnfac + (1 - N) * lnN + RInterval(N, precision=precision) + _eps_tail(N, precision)
        return RInterval(2, precision=precision) / N * body
    lnN = RInterval(N, precision=precision).ln()
    ln2pi = (RInterval(2, precision=precision) * RInterval.pi(precision)).ln()
    base = (
        RInterval(Fraction(3, 2), precision=precision) * lnN
        + ln2pi / 2
        + _eps_tail(N, precision)
    )
    stirling_slack = RInterval(0, Fraction(1, 12 * N), precision=precision)
    return RInterval(2, precision=precision) / N * (base + stirling_slack)


# ---------------------------------------------------------------------------
# Laurent's interpolation-determinant condition checker


@dataclass(frozen=True)
class LaurentInstance:
    """Parameters of the degree-one two-logarithm theorem.

    The caller attests the two cardinality conditions on the multiplier
    sets (covered here by taking alpha1 = -1 and alpha2 not a root of
    unity, with R1 = 2 picking up the sign values); this checker owns
    the numeric main condition and the epsilon(N) comparison.
    """

    K: int
    L: int
    R1: int
    R2: int
    S1: int
    S2: int
    rho: RInterval
    mu: RInterval
    b1: int
    b2: int
    a1: RInterval
    a2: RInterval
    D: int = 1

    def __post_init__(self):
        if self.K < 2 or self.L < 2:
            raise ValueError("requires K >= 2 and L >= 2")
        if min(self.R1, self.R2, self.S1, self.S2) < 1:
            raise ValueError("R1, R2, S1, S2 must be positive")

    @property
    def R(self) -> int:
        return self.R1 + self.R2 - 1

    @property
    def S(self) -> int:
        return self.S1 + self.S2 - 1

    @property
    def N(self) -> int:
        return self.K * self.L

    @property
    def g(self) -> Fraction:
        return Fraction(1, 4) - Fraction(self.N, 12 * self.R * self.S)

    def sigma(self) -> RInterval:
        one = RInterval(1, precision=self.mu.precision)
        return (one + 2 * self.mu - self.mu * self.mu) / 2

    def ln_b(self, precision: int | None = None) -> RInterval:
        """ln of the height combination b, with the exact superfactorial term."""
        prec = precision or max(self.a1.precision, self.a2.precision)
        lead = Fraction((self.R - 1) * self.b2 + (self.S - 1) * self.b1, 2)
        if lead <= 0:
            raise ValueError("b must be positive")
        ln_lead = RInterval(lead, precision=prec).ln()
        return ln_lead - _weighted_factorial_log_sum(self.K, prec) * Fraction(
            2, self.K * self.K - self.K
        )


def _weighted_factorial_log_sum(K: int, precision: int) -> RInterval:
    """sum_{k=1}^{K-1} ln(k!) = sum_{j=2}^{K-1} (K-j) ln j, as one interval."""
    with _Prec(precision):
        total = _iv.mpf(0)
        for j in range(2, K):
            total += (K - j) * _iv.log(_iv.mpf(j))
    return RInterval._wrap(total, precision)


def laurent_check(inst: LaurentInstance, precision: int | None = None):
    """Certify the main numeric condition of the two-logarithm theorem.

    Returns (ok, margin, bound): ok is an interval-strict verdict on
    main > epsilon(N); bound encloses rho^(-mu K L), the lower bound the
    theorem then gives for the linear form.
    """
    prec = precision or max(inst.rho.precision, inst.a1.precision, inst.a2.precision)
    if not (_exact(inst.mu.lo) >= Fraction(1, 3) and _exact(inst.mu.hi) <= 1):
        raise ValueError("requires 1/3 <= mu <= 1")
    if not inst.rho.lo > 1:
        raise ValueError("requires rho > 1")
    ln_rho = inst.rho.ln()
    sigma = inst.sigma()
    K, L, D = inst.K, inst.L, inst.D
    main = (
        RInterval(K, precision=prec) * (sigma * L - 1) * ln_rho
        - (D + 1) * RInterval(inst.N, precision=prec).ln()
        - D * (K - 1) * inst.ln_b(prec)
        - RInterval(inst.g, precision=prec)
        * L
        * (inst.R * inst.a1 + inst.S * inst.a2)
    )
    eps = laurent_epsilon(inst.N, prec)
    ok = eps.strictly_less(main)
    margin = main - eps
    bound = (-(inst.mu * K * L) * ln_rho).exp()
    return ok, margin, bound


def two_log_instance(
    a2,
    bprime,
    b1: int | None = None,
    b2: int | None = None,
    precision: int = DEFAULT_PRECISION,
) -> LaurentInstance:
    """Instantiate the theorem the way the specialized corollary's proof does.

    L comes from bprime, K = 1 + floor(kappa L a1 a2), R2 and S2 balance
    the two logarithm weights, mu = 2/3 and rho = e^3.1 are fixed.  When
    b1, b2 are not given, equal coefficients reproducing bprime are used.
    """
    a2_iv = a2 if isinstance(a2, RInterval) else RInterval(a2, precision=precision)
    bp_iv = bprime if isinstance(bprime, RInterval) else RInterval(bprime, precision=precision)
    a1_iv = alpha1_constant(precision)
    L = corollary_L(bp_iv)
    kla = RInterval(KAPPA, precision=precision) * L * a1_iv * a2_iv
    K = 1 + _certified_floor(kla)
    R2 = 1 + _certified_floor(((K - 1) * L * a2_iv / a1_iv).sqrt())
    S2 = 1 + _certified_floor(((K - 1) * L * a1_iv / a2_iv).sqrt())
    if b1 is None or b2 is None:
        weight = 1 / (1 / a2_iv + 1 / a1_iv)
        guess = max(1, _certified_floor(bp_iv * weight))
        b1 = b2 = guess
    return LaurentInstance(
        K=K,
        L=L,
        R1=2,
        R2=R2,
        S1=(L + 1) // 2,
        S2=S2,
        rho=rho_log(precision).exp(),
        mu=RInterval(MU, precision=precision),
        b1=b1,
        b2=b2,
        a1=a1_iv,
        a2=a2_iv,
        D=1,
    )


def lemma_parameter_rechecks(inst: LaurentInstance, bprime) -> dict[str, bool]:
    """Numeric rechecks of the two closed-form bounds the corollary uses."""
    prec = inst.a1.precision
    bp = bprime if isinstance(bprime, RInterval) else RInterval(bprime, precision=prec)
    lhs = (
        RInterval(inst.g, precision=prec)
        * inst.L
        * (inst.R * inst.a1 + inst.S * inst.a2)
    )
    rhs = RInterval(inst.K, precision=prec) * (
        RInterval(Fraction(31, 20), precision=prec) * inst.L
        + RInterval(Fraction(612, 10000), precision=prec)
    )
    gl_ok = lhs.strictly_less(rhs)
    lnb_ok = not (bp.ln() + RInterval(Fraction(23264, 10000), precision=prec)).strictly_less(
        inst.ln_b(prec)
    )
    return {"gL_term_below_closed_form": gl_ok, "ln_b_below_closed_form": lnb_ok}


def corollary_L(bprime: RInterval) -> int:
    """L = floor((45/62)(ln bprime + 5.49)) + 1, floored at 3."""
    raw = _certified_floor(
        RInterval(L_SLOPE, precision=bprime.precision)
        * (bprime.ln() + RInterval(Fraction(549, 100), precision=bprime.precision))
    )
    return max(3, raw + 1)


@dataclass(frozen=True)
class TwoLogBound:
    log_lambda_lower: RInterval
    L: int
    L_floored: bool


def two_log_lower_bound(
    a2, bprime, precision: int = DEFAULT_PRECISION
) -> TwoLogBound:
    """Specialized lower bound for the logarithm of the two-log linear form.

    ln|form| > -3.741 (ln b' + 6.87)^2 a2 - 31 L / 15 - ln L
               - ln(2 + 0.222 L a2)
    under the hypotheses a2 >= 1000 + a1 and b' > 0.056.
    """
    a2_iv = a2 if isinstance(a2, RInterval) else RInterval(a2, precision=precision)
    bp_iv = bprime if isinstance(bprime, RInterval) else RInterval(bprime, precision=precision)
    a1_iv = alpha1_constant(precision)
    floor_a2 = RInterval(1000, precision=precision) + a1_iv
    if not (a2_iv.lo >= floor_a2.hi):
        raise HypothesisError("a2 >= 1000 + a1")
    if not (_exact(bp_iv.lo) > Fraction(56, 1000)):
        raise HypothesisError("bprime > 0.056")
    raw = _certified_floor(
        RInterval(L_SLOPE, precision=precision)
        * (bp_iv.ln() + RInterval(Fraction(549, 100), precision=precision))
    )
    L = max(3, raw + 1)
    lnbp = bp_iv.ln()
    c1 = RInterval(Fraction(3741, 1000), precision=precision)
    c2 = RInterval(Fraction(687, 100), precision=precision)
    c3 = RInterval(Fraction(222, 1000), precision=precision)
    term = lnbp + c2
    bound = (
        -(c1 * term * term * a2_iv)
        - RInterval(Fraction(31 * L, 15), precision=precision)
        - RInterval(L, precision=precision).ln()
        - (RInterval(2, precision=precision) + c3 * L * a2_iv).ln()
    )
    return TwoLogBound(bound, L, L_floored=raw + 1 < 3)


# ---------------------------------------------------------------------------
# Exponent gap Delta = z - x


def exponent_gap_upper(
    p: PrimPair, z: int, precision: int = DEFAULT_PRECISION
) -> RInterval:
    """Transcendence upper bound for z - x from the two-logarithm bound.

    Uses a2 = ln c + a1 and bprime = z (1/69.73 + 1/a2); requires
    ln c >= 1000 so the corollary's hypotheses hold.
    """
    if z < 2:
        raise ValueError("requires z >= 2")
    c = p.m * p.m + p.n * p.n
    ln_c = RInterval(c, precision=precision).ln()
    if not ln_c.lo >= 1000:
        raise HypothesisError("ln c >= 1000", "two-logarithm bound inapplicable")
    a2 = ln_c + alpha1_constant(precision)
    bprime = z * (
        1 / RInterval(Fraction(6973, 100), precision=precision) + 1 / a2
    )
    res = two_log_lower_bound(a2, bprime, precision)
    ln_pi = RInterval.pi(precision).ln()
    return 2 * (-res.log_lambda_lower + ln_pi) / ln_c


@dataclass(frozen=True)
class DeltaBounds:
    lower: RInterval
    upper: RInterval
    consistent: bool


def exponent_gap_bounds(
    p: PrimPair, z: int, precision: int = DEFAULT_PRECISION
) -> DeltaBounds:
    """Squeeze on Delta = z - x; certified inconsistency excludes the pair."""
    lower = exponent_gap_lower(p, precision)
    upper = exponent_gap_upper(p, z, precision)
    return DeltaBounds(lower, upper, consistent=not upper.strictly_less(lower))


# ---------------------------------------------------------------------------
# Final-inequality right-hand side and threshold certification


def _rhs_pieces(t: RInterval, with_correction: bool, precision: int):
    s = t + RInterval(2, precision=precision).ln()  # ln(2m) with t = ln m
    ln_s = s.ln()
    F = ln_s if with_correction else s
    G = F + RInterval(Fraction(2139, 1000), precision=precision)
    Lp = RInterval(L_SLOPE, precision=precision) * ln_s + RInterval(
        Fraction(156, 100), precision=precision
    )
    return s, ln_s, G, Lp


def threshold_rhs(
    t, with_correction: bool = True, precision: int = DEFAULT_PRECISION
) -> RInterval:
    """Right-hand side of the final inequality, in t = ln m.

    7.482 (F + 2.139)^2 (1 + 70/ln(2m)) + (31/15) L'/t
      + (ln(6.29 L') + 0.7 L'^2 (t + 70)) / t
    with L' = (45/62) ln ln(2m) + 1.56.  The corrected form takes
    F = ln ln(2m), matching the derivation through ln b'; the literal
    form F = ln(2m) is kept for comparison and overwhelms any t^q.
    """
    t_iv = t if isinstance(t, RInterval) else RInterval(t, precision=precision)
    if not t_iv.lo > 1000:
        raise ValueError("requires t = ln m > 1000")
    prec = max(precision, t_iv.precision)
    s, _, G, Lp = _rhs_pieces(t_iv, with_correction, prec)
    c_a = RInterval(Fraction(7482, 1000), precision=prec)
    c70 = RInterval(70, precision=prec)
    term1 = c_a * G * G * (1 + c70 / s)
    term2 = RInterval(Fraction(31, 15), precision=prec) * Lp / t_iv
    term3 = (
        (RInterval(Fraction(629, 100), precision=prec) * Lp).ln()
        + RInterval(Fraction(7, 10), precision=prec) * Lp * Lp * (t_iv + c70)
    ) / t_iv
    return term1 + term2 + term3


def _rhs_derivative(t: RInterval, precision: int) -> RInterval:
    """Enclosure of d/dt of the corrected right-hand side on the interval t."""
    prec = precision
    s, _, G, Lp = _rhs_pieces(t, True, prec)
    c_a = RInterval(Fraction(7482, 1000), precision=prec)
    c70 = RInterval(70, precision=prec)
    c629 = RInterval(Fraction(629, 100), precision=prec)
    Lp_t = RInterval(L_SLOPE, precision=prec) / s
    one = RInterval(1, precision=prec)
    d1 = c_a * (2 * G * (one + c70 / s) / s - c70 * G * G / (s * s))
    d2 = RInterval(Fraction(31, 15), precision=prec) * (Lp_t / t - Lp / (t * t))
    d3 = (Lp_t / Lp) / t - (c629 * Lp).ln() / (t * t)
    d4 = RInterval(Fraction(7, 10), precision=prec) * (
        2 * Lp * Lp_t * (one + c70 / t) - c70 * Lp * Lp / (t * t)
    )
    return d1 + d2 + d3 + d4


@dataclass
class ThresholdCert:
    form: Fraction
    t0: RInterval
    checked_at: list = field(default_factory=list)
    monotone_from: RInterval | None = None
    verdict: bool = False
    tail_from: float | None = None
    failing_point: float | None = None
    segments: int = 0
    precision: int = THRESHOLD_PRECISION


_FORMS = (Fraction(3, 5), Fraction(2, 3))


def _tail_certified(form: Fraction, w_t: Fraction, precision: int) -> bool:
    """Certify t^form > RHS(t) for all t with ln(t + ln 2) >= w_t.

    Writes w = ln ln(2m).  The squared-log terms of the RHS are bounded
    by 8.3 (w + 2.2)^2 (three coefficient comparisons, checked as
    intervals); every remaining term carries a factor e^-w and is
    monotone decreasing for w >= 10, so its value at w_t bounds the
    tail.  The left side loses at most a (1 - 2 ln2 e^-w) factor when
    moving from ln t to w.  What remains is h(w) = form*w - ln(C/factor)
    - 2 ln(w + 2.2) > 0, which is increasing in w; one interval check at
    w_t finishes the argument.
    """
    prec = precision
    if w_t < 10:
        return False
    w = RInterval(w_t, precision=prec)
    ln2 = RInterval(2, precision=prec).ln()
    c_a = RInterval(Fraction(7482, 1000), precision=prec)
    c_b = RInterval(Fraction(7, 10), precision=prec)
    c_sq = RInterval(Fraction(83, 10), precision=prec)
    c_shift = RInterval(Fraction(22, 10), precision=prec)
    slope = RInterval(L_SLOPE, precision=prec)
    lp_const = RInterval(Fraction(156, 100), precision=prec)
    g_shift = RInterval(Fraction(2139, 1000), precision=prec)

    # coefficient comparisons: 7.482 (w+2.139)^2 + 0.7 L'(w)^2 <= 8.3 (w+2.2)^2
    cw2 = c_a + c_b * slope * slope
    cw1 = 2 * (c_a * g_shift + c_b * slope * lp_const)
    cw0 = c_a * g_shift * g_shift + c_b * lp_const * lp_const
    if not cw2.strictly_less(c_sq):
        return False
    if not cw1.strictly_less(2 * c_sq * c_shift):
        return False
    if not cw0.strictly_less(c_sq * c_shift * c_shift):
        return False

    expw = (-w).exp()
    inv_t = 1 / (1 - ln2 * expw)
    if not inv_t.strictly_positive():
        return False
    Lp = slope * w + lp_const
    k1 = c_a * 70 * (w + g_shift) ** 2 * expw
    k2 = RInterval(Fraction(31, 15), precision=prec) * Lp * inv_t * expw
    k3 = (RInterval(Fraction(629, 100), precision=prec) * Lp).ln() * inv_t * expw
    k4 = c_b * 70 * inv_t * Lp * Lp * expw
    ktail = k1 + k2 + k3 + k4
    C = c_sq + ktail / ((w + c_shift) * (w + c_shift))
    factor = 1 - 2 * ln2 * expw
    if not factor.strictly_positive():
        return False
    h = RInterval(form, precision=prec) * w - (C / factor).ln() - 2 * (w + c_shift).ln()
    h_slope = RInterval(form, precision=prec) - 2 / (w + c_shift)
    return h.strictly_positive() and h_slope.strictly_positive()


def certify_threshold(
    form,
    t0,
    precision: int = THRESHOLD_PRECISION,
    grid_ratio: Fraction = Fraction(51, 50),
) -> ThresholdCert:
    """Certify t^form > RHS(t) for every t >= t0 (corrected RHS).

    Strict interval comparison at t0, then interval positivity of the
    derivative of t^form - RHS(t) along a geometric grid up to the tail
    start, then the analytic tail of _tail_certified.
    """
    form = Fraction(form)
    if form not in _FORMS:
        raise ValueError("form must be 3/5 or 2/3")
    t0_iv = t0 if isinstance(t0, RInterval) else RInterval(t0, precision=precision)
    cert = ThresholdCert(form=form, t0=t0_iv, precision=precision)
    lhs0 = t0_iv.pow_frac(form)
    rhs0 = threshold_rhs(t0_iv, True, precision)
    if not rhs0.strictly_less(lhs0):
        cert.failing_point = float(t0_iv.mid)
        return cert

    w_tail = None
    w = Fraction(10)
    while w <= 60:
        if _tail_certified(form, w, precision):
            w_tail = w
            break
        w += Fraction(1, 2)
    if w_tail is None:
        cert.failing_point = float(t0_iv.mid)
        return cert
    tail_start = RInterval(w_tail, precision=precision).exp()
    cert.tail_from = float(tail_start.lo)

    lo = t0_iv.lo
    if lo < tail_start.hi:
        # geometric grid [t0, tail start]; derivative must stay positive
        points = [_exact(lo)]
        end = _exact(tail_start.hi)
        while points[-1] < end:
            points.append(points[-1] * grid_ratio)
        for i in range(len(points) - 1):
            seg = RInterval(points[i], points[i + 1], precision=precision)
            deriv = (
                RInterval(form, precision=precision)
                * seg.pow_frac(form - 1)
                - _rhs_derivative(seg, precision)
            )
            if not deriv.strictly_positive():
                cert.failing_point = float(points[i])
                return cert
        cert.segments = len(points) - 1
        cert.checked_at = [float(q) for q in points]
    cert.monotone_from = t0_iv
    cert.verdict = True
    return cert


def crossover(form, precision: int = THRESHOLD_PRECISION) -> RInterval:
    """Bracket the unique t > 1000 where t^form meets the corrected RHS."""
    form = Fraction(form)
    if form not in _FORMS:
        raise ValueError("form must be 3/5 or 2/3")

    def sign_at(t: Fraction) -> int:
        x = RInterval(t, precision=precision)
        lhs = x.pow_frac(form)
        rhs = threshold_rhs(x, True, precision)
        if rhs.strictly_less(lhs):
            return 1
        if lhs.strictly_less(rhs):
            return -1
        return 0

    lo = Fraction(1100)
    if sign_at(lo) >= 0:
        raise AssertionError("expected the RHS to dominate at t = 1100")
    hi = lo
    while sign_at(hi) <= 0:
        hi *= 2
        if hi > 2**80:
            raise AssertionError("no sign change located")
    while hi - lo > 1:
        mid = (lo + hi) / 2
        s = sign_at(mid)
        if s == 0:
            mid += (hi - lo) / 128
            s = sign_at(mid)
            if s == 0:
                break
        if s < 0:
            lo = mid
        else:
            hi = mid
    return RInterval(lo, hi, precision=precision)
