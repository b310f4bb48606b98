"""Purely p-adic log Mahler measure and entropy (p-adic valued).

Here the measure of f is a p-adic number: the limit over n coprime to p of
(1/n) log_p R(f, t^n - 1), where log_p is the Iwasawa-branch logarithm
(log_p p = 0, log_p(-1) = 0).  It exists when f has no root on the p-adic
unit circle, equivalently no Newton polygon segment of slope zero, and then
equals log_p a_0 + sum over |alpha|_p > 1 of log_p alpha (Jensen form).

Two routes are implemented and cross-checked:

* the estimator: exact cyclic resultants, a p-adic stabilization window
  (heuristic certificate: convergence is a theorem but comes with no
  effective modulus, so the certified digit count is a labeled heuristic);
* the closed form: for each positive integer polygon slope m, rescale
  t = s/p^m, Hensel-lift the simple unit roots of the rescaled polynomial
  in Q_p and sum their logarithms; or, when every root lies outside the
  unit disk, take log_p of the trailing-to-leading coefficient ratio.
  Shapes beyond these (ramified slopes, inseparable residual roots) are
  refused rather than approximated.

The purely p-adic entropy of the companion/solenoid action is the same
limit on fixed-point counts |Fix| = |R(f, t^n - 1)| and therefore equals
the measure; the growth of branched-cover homology orders along a link
tower reduces to the same computation for the (t-1)-free part.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import ConvergenceError, DomainError, ZeroPolynomialError
from .ntheory import check_prime, modinv, vp_int
from .padics import PadicNumber, hensel_lift, padic_log, padic_log_of_int
from .polynomials import LaurentPolynomial, normalize
from .resultants import cyclic_resultant
from .valuations import NewtonPolygon

STABILIZATION_WINDOW = 8


@dataclass
class PurePadicResult:
    p: int
    value: PadicNumber
    method: str                      # "estimator" | "closed_form" | "norm_shortcut"
    data: dict = field(default_factory=dict)

    @property
    def certified_digits(self):
        return self.value.abs_precision

    def to_dict(self):
        return {"p": self.p,
                "value": self.value.digit_string(),
                "valuation": None if self.value.is_zero else self.value.v,
                "certified_abs_precision": self.certified_digits,
                "method": self.method,
                "data": {k: v for k, v in self.data.items()
                         if isinstance(v, (int, float, str, list, bool))}}


def pure_measure_defined(f: LaurentPolynomial, p: int) -> bool:
    """True iff f has no root with |z|_p = 1: no polygon segment of slope
    zero.  (Every valuation-zero root of a nonzero polynomial lies on the
    unit circle, so the polygon test is decisive.)"""
    check_prime(p)
    if f.is_zero:
        raise ZeroPolynomialError("definedness of the zero polynomial")
    return not NewtonPolygon.of(f, p).has_zero_slope()


def _require_defined(f, p):
    if not pure_measure_defined(f, p):
        raise DomainError(
            f"roots on the {p}-adic unit circle: the purely {p}-adic "
            f"measure is undefined")


def pure_log_mahler_estimate(f: LaurentPolynomial, p: int,
                             n_budget: int = 120,
                             precision: int = 40) -> PurePadicResult:
    """(1/n) log_p R(f, t^n - 1) over n coprime to p, with p-adic
    stabilization over the trailing window declaring the certified digits."""
    check_prime(p)
    if f.is_zero:
        raise ZeroPolynomialError("estimator needs a nonzero polynomial")
    f = normalize(f)
    if not f.is_integral:
        raise DomainError("estimator requires integer coefficients")
    _require_defined(f, p)
    estimates = []
    used = []
    for n in range(1, n_budget + 1):
        if math.gcd(n, p) != 1:
            continue
        r = cyclic_resultant(f, n, "full")
        if r == 0:
            raise DomainError(
                f"R(f, t^{n} - 1) = 0: f vanishes at an {n}-th root of unity")
        log_r = padic_log_of_int(r, p, precision)
        inv_n = PadicNumber(p, 0, modinv(n, p**precision), precision)
        estimates.append(log_r * inv_n)
        used.append(n)
    window = estimates[-STABILIZATION_WINDOW:]
    if len(window) < STABILIZATION_WINDOW:
        raise DomainError("n_budget too small for the stabilization window")
    last = window[-1]
    agree = min(last.agreement_valuation(w) for w in window[:-1])
    agree = min(agree, min(w.abs_precision for w in window))
    if agree < 1:
        raise ConvergenceError(
            "estimates did not stabilize to a single p-adic digit "
            "within the budget")
    certified = min(agree, precision - 1)
    return PurePadicResult(
        p, last.truncate(certified), "estimator",
        {"n_budget": n_budget, "window_n": used[-STABILIZATION_WINDOW:],
         "certified_abs_precision": certified,
         "certificate": "heuristic stabilization of the trailing window"})


def _simple_residual_roots(residual, p):
    """Distinct simple roots in F_p^* of an ascending coefficient list."""
    roots = []
    for r in range(1, p):
        val = 0
        for c in reversed(residual):
            val = (val * r + c) % p
        if val:
            continue
        dval = 0
        for k in reversed(range(1, len(residual))):
            dval = (dval * r + k * residual[k]) % p
        if dval:
            roots.append(r)
    return roots


def _segment_root_logs(f: LaurentPolynomial, p: int, slope, length: int,
                       precision: int):
    """log_p of each root on one positive polygon segment, via the
    rescaling t = s/p^m and Hensel lifting of the simple unit roots."""
    if slope.denominator != 1:
        raise DomainError(
            f"slope {slope} is not an integer: roots live in a ramified "
            f"extension of Q_{p}")
    m = int(slope)
    coeffs = f.integer_coefficients_ascending()
    d = len(coeffs) - 1
    scaled = [c * p ** (m * (d - i)) for i, c in enumerate(coeffs)]
    shift = min(vp_int(c, p) for c in scaled if c != 0)
    scaled = [c // p**shift for c in scaled]
    g = LaurentPolynomial(dict(enumerate(scaled)), f.variable)
    unit_idx = [i for i, c in enumerate(scaled) if c % p != 0]
    i_a, i_b = min(unit_idx), max(unit_idx)
    if i_b - i_a != length:
        raise DomainError(
            "rescaled polygon does not isolate the expected unit-root block")
    residual = [scaled[i] % p for i in range(i_a, i_b + 1)]
    simple_roots = _simple_residual_roots(residual, p)
    if len(simple_roots) != length:
        raise DomainError(
            "residual polynomial does not split into distinct linear "
            f"factors over F_{p}; only Q_{p}-rational simple roots are lifted")
    logs = []
    for r in simple_roots:
        lifted = hensel_lift(g, p, r, 1, precision)
        # the root of f is lifted / p^m; the Iwasawa branch kills p^m
        logs.append((r, lifted, padic_log(lifted)))
    return logs


def pure_log_mahler_closed_form(f: LaurentPolynomial, p: int,
                                precision: int = 40) -> PurePadicResult:
    """Jensen form log_p a_0 + sum_{|alpha|_p > 1} log_p alpha through
    Hensel-lifted roots in Q_p, or through the coefficient-ratio norm
    shortcut when all roots lie outside the unit disk."""
    check_prime(p)
    if f.is_zero:
        raise ZeroPolynomialError("closed form needs a nonzero polynomial")
    f = normalize(f)
    if not f.is_integral:
        raise DomainError("closed form requires integer coefficients")
    _require_defined(f, p)
    polygon = NewtonPolygon.of(f, p)
    lead = int(f.leading_coefficient)
    outside = [(slope, length) for slope, length in polygon.segments if slope > 0]
    try:
        total = padic_log_of_int(lead, p, precision)
        roots_used = []
        for slope, length in outside:
            for r, lifted, log_root in _segment_root_logs(f, p, slope, length,
                                                          precision):
                total = total + log_root
                roots_used.append(f"s={lifted.digit_string(12)} (res {r}, "
                                  f"slope {slope})")
        return PurePadicResult(p, total, "closed_form",
                               {"segments": [(str(s), l) for s, l in outside],
                                "lifted_roots": roots_used})
    except DomainError:
        # norm shortcut: if every root is outside the unit disk their
        # product is (up to sign) trailing/leading, so the log sum is
        # log_p(trailing) - log_p(leading) and the measure collapses to
        # log_p(trailing coefficient)
        all_outside = bool(polygon.segments) and \
            all(s > 0 for s, _ in polygon.segments)
        if not all_outside:
            raise
        trail = int(f.trailing_coefficient)
        return PurePadicResult(p, padic_log_of_int(trail, p, precision),
                               "norm_shortcut",
                               {"note": "all roots outside the unit disk; "
                                        "used the coefficient-ratio norm"})


def pure_entropy(f: LaurentPolynomial, p: int, n_budget: int = 120,
                 precision: int = 40,
                 solenoid_convention: bool = False) -> PurePadicResult:
    """Purely p-adic entropy of the companion action: the p-adic limit of
    (1/n) log_p |Fix| with |Fix| = |R(f, t^n - 1)|.

    For non-monic f the fixed-point counts are those of the cyclic-module
    (solenoid) action; pass solenoid_convention=True to accept that
    reading.  Agreement with the closed-form measure is asserted whenever
    the closed form applies.
    """
    f_norm = normalize(f)
    if f_norm.leading_coefficient != 1 and not solenoid_convention:
        raise DomainError(
            "f is not monic; pass solenoid_convention=True to use the "
            "cyclic-module fixed-point counts |R(f, t^n - 1)|")
    result = pure_log_mahler_estimate(f, p, n_budget, precision)
    data = dict(result.data)
    try:
        closed = pure_log_mahler_closed_form(f, p, precision)
        agreement = result.value.agreement_valuation(closed.value)
        floor = min(result.value.abs_precision, closed.value.abs_precision)
        if agreement < floor:
            raise ConvergenceError(
                f"purely p-adic entropy and measure disagree at digit "
                f"{agreement} < {floor}")
        data["measure_agreement_digits"] = float(agreement) \
            if agreement != math.inf else "exact"
    except DomainError:
        data["measure_agreement_digits"] = "closed form unavailable"
    return PurePadicResult(p, result.value, "estimator", data)


def pure_link_growth(A: LaurentPolynomial, d: int, p: int,
                     n_budget: int = 120, precision: int = 40) -> PurePadicResult:
    """p-adic limit of (1/n) log_p (|R(A, nu_n)| |H(1)| / n^(d-1)) for
    A = (t-1)^(d-1) H with H(1) != 0: equals the purely p-adic measure of
    H, asserted against the direct estimator."""
    check_prime(p)
    if d < 1:
        raise DomainError("component count d must be >= 1")
    if A.is_zero:
        raise ZeroPolynomialError("growth of the zero polynomial")
    A = normalize(A)
    H = A
    t_minus_1 = LaurentPolynomial({1: 1, 0: -1}, A.variable)
    for _ in range(d - 1):
        try:
            H = H.divide_exact(t_minus_1)
        except DomainError:
            raise DomainError(
                f"(t-1)-multiplicity of A is smaller than d-1 = {d - 1}")
    H = normalize(H)
    if H(1) == 0:
        raise DomainError(
            f"(t-1)-multiplicity of A exceeds d-1 = {d - 1}; H(1) = 0")
    _require_defined(H, p)
    h1 = abs(int(H(1)))
    estimates = []
    used = []
    for n in range(1, n_budget + 1):
        if math.gcd(n, p) != 1:
            continue
        growth_number = abs(cyclic_resultant(A, n, "ones")) * h1
        full = abs(cyclic_resultant(H, n, "full"))
        assert growth_number == full * n ** (d - 1), \
            "resultant factorization identity failed"
        value_n = growth_number // n ** (d - 1)
        log_v = padic_log_of_int(value_n, p, precision)
        inv_n = PadicNumber(p, 0, modinv(n, p**precision), precision)
        estimates.append(log_v * inv_n)
        used.append(n)
    window = estimates[-STABILIZATION_WINDOW:]
    last = window[-1]
    agree = min(last.agreement_valuation(w) for w in window[:-1])
    agree = min(agree, min(w.abs_precision for w in window))
    if agree < 1:
        raise ConvergenceError("growth sequence did not stabilize")
    certified = min(agree, precision - 1)
    direct = pure_log_mahler_estimate(H, p, n_budget, precision)
    cross = last.agreement_valuation(direct.value)
    if cross < min(certified, direct.value.abs_precision):
        raise ConvergenceError(
            f"growth limit disagrees with the measure of the (t-1)-free "
            f"part at digit {cross}")
    return PurePadicResult(
        p, last.truncate(certified), "estimator",
        {"d": d, "H": str(H), "H_at_1": h1,
         "window_n": used[-STABILIZATION_WINDOW:],
         "agreement_with_measure": float(cross) if cross != math.inf else -1,
         "certificate": "heuristic stabilization of the trailing window"})
