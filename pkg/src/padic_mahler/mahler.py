"""Euclidean and p-adic Mahler measures, and the cyclic-resultant
limit estimators for both.

The Euclidean log measure of f = a * prod (t - alpha_i) is
log|a| + sum_{|alpha_i| > 1} log|alpha_i| (Jensen), computed from certified
complex roots rather than contour integration.  The p-adic log measure is
(-min_i v_p(a_i)) * log p, the log of the Gauss norm, cross-checked against
the Newton-polygon product on every call.  Both are the limits of
|R(f, nu_n)|^(1/n) at the respective places, and resultant_limit_estimate
exhibits that convergence with exact resultants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ConvergenceError, DomainError, ZeroPolynomialError
from .ntheory import INFINITY, check_prime, vp_int
from .polynomials import LaurentPolynomial, normalize, squarefree_split
from .resultants import cyclic_resultant
from .roots import aberth_roots, polish_roots
from .valuations import gauss_norm_valuation, gauss_valuation_from_polygon


@dataclass(frozen=True)
class LogMeasure:
    """A log Mahler measure at one place.

    At a finite place p the value is an exact rational multiple of log p
    (``coefficient`` stores the rational, ``value`` the float).  At the
    infinite place the value is a float with an explicit absolute error
    bound.
    """

    place: object                  # a prime, or math.inf
    value: float
    error: float = 0.0
    coefficient: Fraction | None = None

    @classmethod
    def finite(cls, p: int, coefficient: Fraction) -> "LogMeasure":
        coefficient = Fraction(coefficient)
        return cls(p, float(coefficient) * math.log(p), 0.0, coefficient)

    @classmethod
    def infinite(cls, value: float, error: float) -> "LogMeasure":
        return cls(INFINITY, value, error, None)

    @property
    def measure(self) -> float:
        return math.exp(self.value)

    def to_dict(self):
        place = "inf" if self.place == INFINITY else self.place
        out = {"place": place, "log_value": self.value, "abs_error": self.error}
        if self.coefficient is not None:
            out["log_p_coefficient"] = str(self.coefficient)
        return out


def _root_contributions(roots, radii):
    """(sum of log max(|z|,1), certified error bound)."""
    total = 0.0
    err = 0.0
    for z, b in zip(roots, radii):
        r = abs(z)
        if not math.isfinite(b):
            return None, math.inf
        if r + b <= 1.0:
            continue
        total += math.log(max(r, 1.0))
        lo = max(r - b, 1e-300)
        err += math.log(max(r + b, 1.0)) - math.log(max(lo, 1.0))
    return total, err


def mahler_euclidean(f: LaurentPolynomial, tol: float = 1e-12) -> LogMeasure:
    """Euclidean log Mahler measure, certified to absolute error <= tol."""
    if f.is_zero:
        raise ZeroPolynomialError("Mahler measure of the zero polynomial")
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    f = normalize(f)
    value = 0.0
    error = 0.0
    # split into squarefree factors (their product is exactly f) so the
    # root finder never meets a repeated root, where its residual bound
    # could not certify anything
    parts = squarefree_split(f)
    budget = tol / (2.0 * len(parts))
    for part in parts:
        value += math.log(abs(float(part.leading_coefficient)))
        if part.degree == 0:
            continue
        coeffs = part.coefficients_ascending()
        froots, fradii = aberth_roots([float(c) for c in coeffs])
        contrib, err = _root_contributions(froots, fradii)
        if contrib is None or err > budget:
            digits = max(25, int(-math.log10(tol)) + 12)
            froots, fradii = polish_roots(coeffs, froots, digits)
            contrib, err = _root_contributions(froots, fradii)
            if contrib is None or err > budget:
                raise ConvergenceError(
                    "root finder could not certify the requested tolerance")
        value += contrib
        error += err
    return LogMeasure.infinite(value, error)


def mahler_padic(f: LaurentPolynomial, p: int) -> LogMeasure:
    """p-adic log Mahler measure: -gauss_norm_valuation(f, p) * log p,
    defined for every nonzero f (roots on |z|_p = 1 included)."""
    check_prime(p)
    if f.is_zero:
        raise ZeroPolynomialError("Mahler measure of the zero polynomial")
    g = gauss_norm_valuation(f, p)
    # Newton-polygon Jensen product must reconstruct the same valuation
    assert gauss_valuation_from_polygon(f, p) == g, \
        "polygon convention drifted from the Gauss norm"
    return LogMeasure.finite(p, Fraction(-g))


@dataclass
class ConvergenceReport:
    """A sequence of cyclic-resultant estimates with its extrapolated limit.

    Estimates are (1/n) log|R(f, nu_n)| at the infinite place and
    (1/n) (-v_p R(f, nu_n)) log p at a finite place; n with vanishing
    resultant are recorded in ``skipped`` and excluded, and at a finite
    place each sample also records whether gcd(n, p) = 1.
    """

    place: object
    samples: list = field(default_factory=list)   # (n, estimate[, coprime])
    skipped: list = field(default_factory=list)
    limit: float = 0.0
    closed_form: float | None = None
    abs_error: float | None = None
    notes: dict = field(default_factory=dict)

    def estimates(self, coprime_only=False):
        if self.place == INFINITY or not coprime_only:
            return [(n, est) for n, est, *_ in self.samples]
        return [(n, est) for n, est, cop in self.samples if cop]

    def to_dict(self):
        place = "inf" if self.place == INFINITY else self.place
        return {
            "place": place,
            "n": [s[0] for s in self.samples],
            "estimates": [s[1] for s in self.samples],
            "skipped_n": list(self.skipped),
            "limit": self.limit,
            "closed_form": self.closed_form,
            "abs_error": self.abs_error,
            "notes": dict(self.notes),
        }


def resultant_limit_estimate(f: LaurentPolynomial, place, n_max: int = 100,
                             skip_p_multiples: bool = False,
                             tol: float = 1e-9) -> ConvergenceReport:
    """Estimate the log Mahler measure at ``place`` from the exact cyclic
    resultants R(f, nu_n), n <= n_max, and compare with the closed form.

    At a finite place both the restricted (gcd(n,p) = 1) and unrestricted
    sequences are recorded; ``skip_p_multiples`` selects which one the
    extrapolated limit uses.
    """
    if f.is_zero:
        raise ZeroPolynomialError("estimator needs a nonzero polynomial")
    if n_max < 8:
        raise DomainError("n_max must be at least 8")
    f = normalize(f)
    if not f.is_integral:
        raise DomainError("estimator requires integer coefficients")
    finite = place != INFINITY
    if finite:
        check_prime(place)
        logp = math.log(place)
    report = ConvergenceReport(place=INFINITY if not finite else place)
    for n in range(1, n_max + 1):
        r = cyclic_resultant(f, n, "ones")
        if r == 0:
            report.skipped.append(n)
            continue
        if finite:
            coeff = Fraction(-vp_int(r, place), n)
            report.samples.append((n, float(coeff) * logp, math.gcd(n, place) == 1))
        else:
            report.samples.append((n, math.log(abs(r)) / n))
    chosen = report.estimates(coprime_only=skip_p_multiples)
    if not chosen:
        raise DomainError("every resultant in range vanished")
    tail = chosen[-max(1, len(chosen) // 4):]
    values = sorted(est for _, est in tail)
    report.limit = values[len(values) // 2]
    closed = (mahler_padic(f, place) if finite
              else mahler_euclidean(f, tol=min(tol, 1e-10)))
    report.closed_form = closed.value
    report.abs_error = abs(report.limit - closed.value)
    first_err = abs(tail[0][1] - closed.value)
    last_err = abs(tail[-1][1] - closed.value)
    report.notes["tail_initial_error"] = first_err
    report.notes["tail_final_error"] = last_err
    report.notes["tail_error_decreasing"] = bool(last_err <= first_err + 1e-15)
    return report
