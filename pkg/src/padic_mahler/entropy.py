"""Entropy of the companion action of an integer polynomial, decomposed
over the places of Q.

With A normalized, a_0 its (positive) leading coefficient and c its
content, the place-p entropy is h_p = (v_p(a_0) - v_p(c)) log p = v_p(s)
log p for s = a_0/c, nonzero only at primes dividing s; the infinite part
is h_inf = log m(A/c) - log s, and the total h equals log m(A/c) (the
Yuzvinski / Kolmogorov-Sinai formula).  The balance identity
-log|a_0|_p = h_p + mu_p log p is an arithmetic consequence that is
verified term by term, as is the leading-coefficient identity
log|a_0| = sum_p h_p + sum_p mu_p log p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError, ZeroPolynomialError
from .iwasawa import mu_invariant
from .mahler import LogMeasure, mahler_euclidean
from .ntheory import check_prime, trial_factor, vp_int
from .polynomials import LaurentPolynomial, content_and_primitive, normalize
from .valuations import NewtonPolygon, gauss_norm_valuation


def entropy_padic(A: LaurentPolynomial, p: int) -> LogMeasure:
    """h_p = (v_p(a_0) - min_i v_p(a_i)) log p, the log measure of the
    monic normalization A/a_0 at p."""
    check_prime(p)
    if A.is_zero:
        raise ZeroPolynomialError("entropy of the zero polynomial")
    A = normalize(A)
    lead_val = vp_int(int(A.leading_coefficient), p) if A.is_integral \
        else None
    if lead_val is None:
        raise DomainError("p-adic entropy requires integer coefficients")
    coeff = Fraction(lead_val - gauss_norm_valuation(A, p))
    # equivalently the total rise of the positive polygon slopes
    polygon = NewtonPolygon.of(A, p)
    rise = sum(slope * length for slope, length in polygon.segments if slope > 0)
    assert coeff == rise, "Gauss-norm and polygon entropies disagree"
    return LogMeasure.finite(p, coeff)


@dataclass
class BalanceIdentity:
    """The three exact terms of -log|a_0|_p = h_p + mu_p log p,
    as rational multiples of log p."""

    p: int
    lead_valuation: Fraction    # -log|a_0|_p / log p
    entropy_coefficient: Fraction
    mu: int

    @property
    def holds(self) -> bool:
        return self.lead_valuation == self.entropy_coefficient + self.mu

    def to_dict(self):
        return {"p": self.p,
                "lead_valuation": str(self.lead_valuation),
                "h_p_coefficient": str(self.entropy_coefficient),
                "mu": self.mu,
                "holds": self.holds}


def balance_check(A: LaurentPolynomial, p: int) -> BalanceIdentity:
    if A.is_zero:
        raise ZeroPolynomialError("balance identity of the zero polynomial")
    A = normalize(A)
    lead_val = Fraction(vp_int(int(A.leading_coefficient), p))
    h_coeff = entropy_padic(A, p).coefficient
    return BalanceIdentity(p, lead_val, h_coeff, mu_invariant(A, p))


@dataclass
class EntropyReport:
    polynomial: str
    leading_coefficient: int
    content: int
    content_factors: dict
    h_inf: LogMeasure
    h_p: dict = field(default_factory=dict)       # prime -> Fraction coefficient
    h_total: float = 0.0
    log_mahler_primitive: LogMeasure | None = None
    balance: dict = field(default_factory=dict)   # prime -> BalanceIdentity
    tol: float = 1e-9

    def to_dict(self):
        return {
            "polynomial": self.polynomial,
            "leading_coefficient": self.leading_coefficient,
            "content": self.content,
            "content_factors": {str(p): e for p, e in self.content_factors.items()},
            "h_inf": self.h_inf.to_dict(),
            "h_p": {str(p): str(c) for p, c in sorted(self.h_p.items())},
            "h_total": self.h_total,
            "log_mahler_primitive": self.log_mahler_primitive.to_dict(),
            "balance": {str(p): b.to_dict() for p, b in sorted(self.balance.items())},
        }


def entropy_total(A: LaurentPolynomial, tol: float = 1e-9,
                  factor_bound: int = 10**9) -> EntropyReport:
    """Full entropy decomposition h = h_inf + sum_p h_p with the
    reconciliation h = log m(primitive part) checked within tol."""
    if A.is_zero:
        raise ZeroPolynomialError("entropy of the zero polynomial")
    A = normalize(A)
    if not A.is_integral:
        raise DomainError("entropy requires integer coefficients")
    content, primitive = content_and_primitive(A)
    a0 = int(A.leading_coefficient)
    s = a0 // content
    s_factors, leftover = trial_factor(s, factor_bound)
    if leftover != 1:
        raise DomainError(
            f"leading coefficient factor {leftover} exceeds the trial "
            f"division bound {factor_bound}")
    h_p = {}
    for p, exponent in sorted(s_factors.items()):
        coeff = entropy_padic(A, p).coefficient
        assert coeff == exponent, "finite entropy must equal v_p(a_0/content)"
        h_p[p] = coeff
    m_prim = mahler_euclidean(primitive, tol=tol / 2)
    finite_sum = sum(float(c) * math.log(p) for p, c in h_p.items())
    h_inf = LogMeasure.infinite(m_prim.value - math.log(s), m_prim.error)
    h_total = h_inf.value + finite_sum
    if abs(h_total - m_prim.value) > 2 * tol:
        raise DomainError("entropy reconciliation failed beyond tolerance")
    content_factors, _ = trial_factor(content, factor_bound)
    balance = {p: balance_check(A, p) for p in
               sorted(set(s_factors) | set(content_factors))}
    for b in balance.values():
        if not b.holds:
            raise DomainError(f"balance identity failed at p = {b.p}")
    return EntropyReport(
        polynomial=str(A),
        leading_coefficient=a0,
        content=content,
        content_factors=content_factors,
        h_inf=h_inf,
        h_p=h_p,
        h_total=h_total,
        log_mahler_primitive=m_prim,
        balance=balance,
        tol=tol,
    )


@dataclass
class LeadingCoefficientIdentity:
    """log|a_0| = sum_{p} h_p + sum_p mu_p log p, verified exactly in the
    exponents of the factorization of a_0."""

    leading_coefficient: int
    per_prime: dict            # p -> (v_p(a0), h_p coefficient, mu_p)

    @property
    def holds(self) -> bool:
        return all(v == h + mu for v, h, mu in self.per_prime.values())

    def to_dict(self):
        return {"leading_coefficient": self.leading_coefficient,
                "per_prime": {str(p): {"v_p": int(v), "h_p": str(h), "mu": mu}
                              for p, (v, h, mu) in sorted(self.per_prime.items())},
                "holds": self.holds}


def leading_coeff_identity(A: LaurentPolynomial,
                           factor_bound: int = 10**9) -> LeadingCoefficientIdentity:
    if A.is_zero:
        raise ZeroPolynomialError("identity needs a nonzero polynomial")
    A = normalize(A)
    if not A.is_integral:
        raise DomainError("identity requires integer coefficients")
    a0 = int(A.leading_coefficient)
    factors, leftover = trial_factor(a0, factor_bound)
    if leftover != 1:
        raise DomainError(
            f"leading coefficient factor {leftover} exceeds the trial "
            f"division bound {factor_bound}")
    per_prime = {}
    for p, exponent in sorted(factors.items()):
        h = entropy_padic(A, p).coefficient
        mu = mu_invariant(A, p)
        assert exponent == vp_int(a0, p)
        per_prime[p] = (Fraction(exponent), h, mu)
    return LeadingCoefficientIdentity(a0, per_prime)
