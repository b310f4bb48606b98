"""Polynomial text grammar.

Literals are integers and rationals ``a/b``; variables match
``[a-zA-Z][a-zA-Z0-9_]*``; operators are ``+ - * ^`` plus parentheses.
Implicit multiplication is rejected, and ``^`` takes a (possibly negative,
optionally parenthesized) integer exponent.  The printers on the polynomial
classes emit descending exponents with explicit ``*``, and
``parse(str(f)) == f`` is a tested round-trip.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import DomainError, ParseError
from .polynomials import LaurentPolynomial, MultivariatePolynomial

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([a-zA-Z][a-zA-Z0-9_]*)|([-+*^/()]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            # skip pure whitespace tails
            if text[pos:].strip() == "":
                break
            bad = pos
            while text[bad].isspace():
                bad += 1
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        number, ident, op = m.groups()
        start = m.start(1) if number else m.start(2) if ident else m.start(3)
        if number:
            tokens.append(("number", int(number), start))
        elif ident:
            tokens.append(("ident", ident, start))
        else:
            tokens.append(("op", op, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    """Recursive descent over a generic sparse multivariate representation:
    {((var, exp), ...) sorted: Fraction}."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.next()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos)

    # generic-polynomial helpers ---------------------------------------

    @staticmethod
    def _const(c):
        return {(): Fraction(c)} if c != 0 else {}

    @staticmethod
    def _add(a, b):
        out = dict(a)
        for k, v in b.items():
            s = out.get(k, Fraction(0)) + v
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = s
        return out

    @staticmethod
    def _neg(a):
        return {k: -v for k, v in a.items()}

    @staticmethod
    def _mul(a, b):
        out = {}
        for k1, v1 in a.items():
            for k2, v2 in b.items():
                exps = dict(k1)
                for var, e in k2:
                    exps[var] = exps.get(var, 0) + e
                key = tuple(sorted((v, e) for v, e in exps.items() if e != 0))
                s = out.get(key, Fraction(0)) + v1 * v2
                if s == 0:
                    out.pop(key, None)
                else:
                    out[key] = s
        return out

    def _pow(self, base, k, pos):
        if k >= 0:
            result = self._const(1)
            for _ in range(k):
                result = self._mul(result, base)
            return result
        if len(base) != 1:
            raise ParseError("negative power of a non-monomial", pos)
        (key, coeff), = base.items()
        new_key = tuple(sorted((v, e * k) for v, e in key))
        return {new_key: coeff**k}

    # grammar ----------------------------------------------------------

    def parse(self):
        value = self.expression()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {val!r}", pos)
        return value

    def expression(self):
        kind, val, _ = self.peek()
        sign = 1
        while kind == "op" and val in "+-":
            self.next()
            if val == "-":
                sign = -sign
            kind, val, _ = self.peek()
        value = self.term()
        if sign < 0:
            value = self._neg(value)
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                rhs = self.term()
                value = self._add(value, self._neg(rhs) if val == "-" else rhs)
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.next()
                value = self._mul(value, self.factor())
            else:
                return value

    def factor(self):
        kind, val, pos = self.peek()
        sign = 1
        while kind == "op" and val in "+-":
            self.next()
            if val == "-":
                sign = -sign
            kind, val, pos = self.peek()
        value = self.atom()
        kind, val, pos = self.peek()
        if kind == "op" and val == "^":
            self.next()
            k = self.exponent()
            value = self._pow(value, k, pos)
        return self._neg(value) if sign < 0 else value

    def exponent(self) -> int:
        kind, val, pos = self.peek()
        if kind == "op" and val == "(":
            self.next()
            k = self._signed_int()
            self.expect_op(")")
            return k
        return self._signed_int()

    def _signed_int(self) -> int:
        kind, val, pos = self.next()
        sign = 1
        while kind == "op" and val in "+-":
            if val == "-":
                sign = -sign
            kind, val, pos = self.next()
        if kind != "number":
            raise ParseError("expected an integer exponent", pos)
        return sign * val

    def atom(self):
        kind, val, pos = self.next()
        if kind == "number":
            nxt_kind, nxt_val, _ = self.peek()
            if nxt_kind == "op" and nxt_val == "/":
                self.next()
                dkind, dval, dpos = self.next()
                if dkind != "number" or dval == 0:
                    raise ParseError("expected a nonzero integer denominator", dpos)
                return self._const(Fraction(val, dval))
            return self._const(val)
        if kind == "ident":
            return {((val, 1),): Fraction(1)}
        if kind == "op" and val == "(":
            value = self.expression()
            self.expect_op(")")
            return value
        raise ParseError(f"unexpected token {val!r}", pos)


def parse_polynomial(text: str):
    """Parse to a LaurentPolynomial (<= 1 variable) or a
    MultivariatePolynomial (>= 2 variables, integer coefficients).

    Multivariate variables are ordered alphabetically; substitution
    exponent vectors follow that order.
    """
    generic = _Parser(text).parse()
    variables = sorted({v for key in generic for v, _ in key})
    if len(variables) <= 1:
        var = variables[0] if variables else "t"
        terms = {}
        for key, c in generic.items():
            e = key[0][1] if key else 0
            terms[e] = c
        return LaurentPolynomial(terms, var)
    terms = {}
    for key, c in generic.items():
        if c.denominator != 1:
            raise DomainError(
                "multivariate polynomials require integer coefficients")
        exps = dict(key)
        vec = tuple(exps.get(v, 0) for v in variables)
        if any(e < 0 for e in vec):
            raise DomainError(
                "multivariate polynomials do not allow negative exponents")
        terms[vec] = int(c)
    return MultivariatePolynomial(variables, terms)


def parse_laurent(text: str, variable=None) -> LaurentPolynomial:
    """Parse text that must denote a one-variable Laurent polynomial."""
    poly = parse_polynomial(text)
    if not isinstance(poly, LaurentPolynomial):
        raise DomainError(f"{text!r} is not a one-variable polynomial")
    if variable is not None and not poly.is_constant and poly.variable != variable:
        raise DomainError(
            f"expected variable {variable!r}, found {poly.variable!r}")
    return poly
