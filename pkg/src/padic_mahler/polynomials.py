"""Exact Laurent and multivariate polynomial algebra.

A LaurentPolynomial is a map {exponent: coefficient} with exact rational
coefficients; exponents may be negative and no zero coefficient is ever
stored (the zero polynomial is the empty map).  A MultivariatePolynomial
has integer coefficients, non-negative exponent vectors of fixed arity,
and exists to hold multivariable link polynomials before substitution
collapses them to one variable.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DomainError, ZeroPolynomialError
from .ntheory import INFINITY


def _coerce(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficients must be exact (int or Fraction), got {type(c)!r}")


class LaurentPolynomial:
    """One-variable Laurent polynomial with exact rational coefficients."""

    __slots__ = ("variable", "terms")

    def __init__(self, terms=None, variable: str = "t"):
        self.variable = variable
        clean = {}
        if terms:
            for e, c in terms.items():
                c = _coerce(c)
                if c != 0:
                    clean[int(e)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, variable: str = "t") -> "LaurentPolynomial":
        return cls({}, variable)

    @classmethod
    def constant(cls, c, variable: str = "t") -> "LaurentPolynomial":
        return cls({0: _coerce(c)}, variable)

    @classmethod
    def monomial(cls, c, e: int, variable: str = "t") -> "LaurentPolynomial":
        return cls({e: _coerce(c)}, variable)

    @classmethod
    def variable_power(cls, e: int = 1, variable: str = "t") -> "LaurentPolynomial":
        return cls({e: Fraction(1)}, variable)

    @classmethod
    def from_coefficients(cls, coeffs, variable: str = "t") -> "LaurentPolynomial":
        """Build from a list of coefficients in ascending exponent order."""
        return cls({e: c for e, c in enumerate(coeffs)}, variable)

    # -- structure ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self):
        return max(self.terms) if self.terms else -INFINITY

    @property
    def low_degree(self):
        return min(self.terms) if self.terms else INFINITY

    def coefficient(self, e: int) -> Fraction:
        return self.terms.get(e, Fraction(0))

    @property
    def leading_coefficient(self) -> Fraction:
        if self.is_zero:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.terms[max(self.terms)]

    @property
    def trailing_coefficient(self) -> Fraction:
        if self.is_zero:
            raise ZeroPolynomialError("zero polynomial has no trailing coefficient")
        return self.terms[min(self.terms)]

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def coefficients_ascending(self):
        """Dense coefficient list from low_degree to degree (empty for 0)."""
        if self.is_zero:
            return []
        lo, hi = min(self.terms), max(self.terms)
        return [self.terms.get(e, Fraction(0)) for e in range(lo, hi + 1)]

    def integer_coefficients_ascending(self):
        if not self.is_integral:
            raise DomainError("polynomial does not have integer coefficients")
        return [int(c) for c in self.coefficients_ascending()]

    # -- arithmetic ---------------------------------------------------

    def _check_compatible(self, other: "LaurentPolynomial"):
        if (self.variable != other.variable
                and not self.is_constant and not other.is_constant):
            raise DomainError(
                f"mixed variables {self.variable!r} and {other.variable!r}")

    @property
    def is_constant(self) -> bool:
        return set(self.terms) <= {0}

    def _result_variable(self, other: "LaurentPolynomial") -> str:
        return other.variable if self.is_constant else self.variable

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.constant(other, self.variable)
        self._check_compatible(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return LaurentPolynomial(terms, self._result_variable(other))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self.terms.items()}, self.variable)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.constant(other, self.variable)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _coerce(other)
            return LaurentPolynomial(
                {e: c * v for e, v in self.terms.items()}, self.variable)
        self._check_compatible(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return LaurentPolynomial(terms, self._result_variable(other))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("polynomial exponent must be an integer")
        if k < 0:
            if len(self.terms) != 1:
                raise DomainError(
                    "negative power of a non-monomial is not a Laurent polynomial")
            (e, c), = self.terms.items()
            return LaurentPolynomial({e * k: c**k}, self.variable)
        result = LaurentPolynomial.constant(1, self.variable)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.constant(other, self.variable)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.variable, tuple(sorted(self.terms.items()))))

    def __call__(self, x):
        """Evaluate at x (exactly for int/Fraction, numerically otherwise)."""
        if isinstance(x, int) and any(e < 0 for e in self.terms):
            x = Fraction(x)  # keep int**negative exact
        total = None
        for e, c in self.terms.items():
            if e >= 0:
                piece = c * x**e if e else c
            else:
                piece = c * x**e  # relies on x being invertible
            total = piece if total is None else total + piece
        if total is None:
            return Fraction(0) if isinstance(x, (int, Fraction)) else 0.0
        return total

    def derivative(self) -> "LaurentPolynomial":
        return LaurentPolynomial(
            {e - 1: c * e for e, c in self.terms.items() if e != 0}, self.variable)

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by variable**k."""
        return LaurentPolynomial({e + k: c for e, c in self.terms.items()},
                                 self.variable)

    def compose_power(self, k: int) -> "LaurentPolynomial":
        """Substitute variable -> variable**k (k may be negative, not 0)."""
        if k == 0:
            raise DomainError("substituting t -> t^0 does not preserve the ring")
        return LaurentPolynomial({e * k: c for e, c in self.terms.items()},
                                 self.variable)

    # -- division -----------------------------------------------------

    def divmod_polynomial(self, divisor: "LaurentPolynomial"):
        """Long division of the underlying ordinary polynomials.

        Both operands are shifted so the minimal exponent is 0 first;
        returns (quotient, remainder) with f_shifted = q * g_shifted + r.
        """
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        f = self.shift(-self.low_degree) if not self.is_zero else self
        g = divisor.shift(-divisor.low_degree)
        q = {}
        r = dict(f.terms)
        dg = max(g.terms) if g.terms else 0
        lead = g.terms[dg]
        while r and max(r) >= dg:
            e = max(r)
            c = r[e] / lead
            q[e - dg] = c
            for ge, gc in g.terms.items():
                k = e - dg + ge
                nv = r.get(k, Fraction(0)) - c * gc
                if nv == 0:
                    r.pop(k, None)
                else:
                    r[k] = nv
        return (LaurentPolynomial(q, self.variable),
                LaurentPolynomial(r, self.variable))

    def divide_exact(self, divisor: "LaurentPolynomial") -> "LaurentPolynomial":
        """Exact quotient up to a unit: raises DomainError on nonzero remainder."""
        q, r = self.divmod_polynomial(divisor)
        if not r.is_zero:
            raise DomainError("division is not exact")
        return q

    def gcd(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        """Monic gcd over the rationals of the shifted ordinary polynomials."""
        a = self.shift(-self.low_degree) if not self.is_zero else self
        b = other.shift(-other.low_degree) if not other.is_zero else other
        while not b.is_zero:
            _, r = a.divmod_polynomial(b)
            a, b = b, r
        if a.is_zero:
            return a
        return a * (1 / a.leading_coefficient)

    # -- printing -----------------------------------------------------

    def __str__(self):
        if self.is_zero:
            return "0"
        pieces = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                var = self.variable if e == 1 else f"{self.variable}^{e}"
                body = var if a == 1 else f"{a}*{var}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"LaurentPolynomial({self})"


class MultivariatePolynomial:
    """Integer-coefficient polynomial in several variables."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms):
        self.variables = tuple(variables)
        arity = len(self.variables)
        clean = {}
        for exps, c in terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != arity:
                raise DomainError(
                    f"exponent vector {exps} does not match arity {arity}")
            if any(e < 0 for e in exps):
                raise DomainError("multivariate exponents must be non-negative")
            c = int(c)
            if c != 0:
                clean[exps] = c
        self.terms = clean

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def arity(self) -> int:
        return len(self.variables)

    def substitute(self, exponents, target: str = "t") -> LaurentPolynomial:
        """Replace variable i by target**exponents[i]."""
        exponents = tuple(int(e) for e in exponents)
        if len(exponents) != self.arity:
            raise DomainError(
                f"{len(exponents)} exponents given for arity {self.arity}")
        terms = {}
        for exps, c in self.terms.items():
            e = sum(v * k for v, k in zip(exps, exponents))
            terms[e] = terms.get(e, 0) + c
        return LaurentPolynomial(terms, target)

    def __eq__(self, other):
        if not isinstance(other, MultivariatePolynomial):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, tuple(sorted(self.terms.items()))))

    def __str__(self):
        if self.is_zero:
            return "0"
        keys = sorted(self.terms, key=lambda k: (sum(k), k), reverse=True)
        pieces = []
        for exps in keys:
            c = self.terms[exps]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            vars_part = []
            for v, e in zip(self.variables, exps):
                if e == 1:
                    vars_part.append(v)
                elif e > 1:
                    vars_part.append(f"{v}^{e}")
            if not vars_part:
                body = str(a)
            else:
                body = "*".join(vars_part)
                if a != 1:
                    body = f"{a}*{body}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"MultivariatePolynomial({self})"


# -- the operations the rest of the package is built on ----------------


def normalize(f: LaurentPolynomial) -> LaurentPolynomial:
    """Multiply by a unit +-t^k so min exponent is 0 and the leading
    coefficient is positive.

    Every measure and invariant downstream is unchanged by this, which the
    test suite checks explicitly.
    """
    if f.is_zero:
        raise ZeroPolynomialError("cannot normalize the zero polynomial")
    g = f.shift(-f.low_degree)
    if g.leading_coefficient < 0:
        g = -g
    return g


def content_and_primitive(f: LaurentPolynomial):
    """(positive gcd of the integer coefficients, f divided by it)."""
    if f.is_zero:
        raise ZeroPolynomialError("the zero polynomial has no content")
    if not f.is_integral:
        raise DomainError("content requires integer coefficients")
    content = 0
    for c in f.terms.values():
        content = math.gcd(content, int(c))
    primitive = LaurentPolynomial(
        {e: Fraction(int(c) // content) for e, c in f.terms.items()}, f.variable)
    return content, primitive


def substitute_onevar(poly: MultivariatePolynomial, exponents,
                      target: str = "t") -> LaurentPolynomial:
    """Collapse a multivariable polynomial to one variable,
    sending variable i to target**exponents[i]."""
    return poly.substitute(exponents, target)


def all_ones_polynomial(n: int, variable: str = "t") -> LaurentPolynomial:
    """1 + t + ... + t^(n-1), the quotient (t^n - 1)/(t - 1); n >= 1."""
    if n < 1:
        raise DomainError("need n >= 1")
    return LaurentPolynomial({e: 1 for e in range(n)}, variable)


def power_minus_one(n: int, variable: str = "t") -> LaurentPolynomial:
    """t^n - 1."""
    if n < 1:
        raise DomainError("need n >= 1")
    return LaurentPolynomial({n: 1, 0: -1}, variable)


def p_power_cyclotomic(p: int, r: int, variable: str = "t") -> LaurentPolynomial:
    """The p^r-th cyclotomic polynomial, r >= 1: 1 + t^q + ... + t^(q(p-1))
    with q = p^(r-1)."""
    if r < 1:
        raise DomainError("need r >= 1")
    q = p ** (r - 1)
    return LaurentPolynomial({i * q: 1 for i in range(p)}, variable)


def squarefree_split(f: LaurentPolynomial):
    """Factor f (up to units) into a list of squarefree polynomials whose
    product is f; used so root finding only ever sees simple roots."""
    f = normalize(f)
    if f.degree == 0:
        return [f]
    d = f.gcd(f.derivative())
    if d.degree == 0:
        return [f]
    cofactor = f.divide_exact(d)
    # restore the exact factorization f = cofactor * d including content
    rest = f.divide_exact(cofactor)
    return [cofactor] + squarefree_split(rest)
