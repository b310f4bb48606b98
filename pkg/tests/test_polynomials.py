import random
from fractions import Fraction

import pytest

from padic_mahler.errors import DomainError, ParseError, ZeroPolynomialError
from padic_mahler.parsing import parse_laurent, parse_polynomial
from padic_mahler.polynomials import (
    LaurentPolynomial,
    MultivariatePolynomial,
    all_ones_polynomial,
    content_and_primitive,
    normalize,
    squarefree_split,
    substitute_onevar,
)


class TestParsing:
    def test_direct_terms(self):
        f = parse_polynomial("t^2 - 3*t + 1")
        assert f.terms == {2: 1, 1: -3, 0: 1}

    def test_distributivity(self):
        assert parse_polynomial("2*(t-1)").terms == {1: 2, 0: -2}

    def test_bivariate(self):
        m = parse_polynomial("1 + x*y")
        assert isinstance(m, MultivariatePolynomial)
        assert m.terms == {(0, 0): 1, (1, 1): 1}

    def test_rational_literals(self):
        f = parse_polynomial("1/2*t - 1/3")
        assert f.terms == {1: Fraction(1, 2), 0: Fraction(-1, 3)}

    def test_negative_exponents(self):
        f = parse_polynomial("-t^-1 + 3 - t")
        assert f.terms == {-1: -1, 0: 3, 1: -1}
        assert parse_polynomial("t^(-2)").terms == {-2: 1}

    def test_power_of_sum(self):
        assert parse_polynomial("(t-1)^2").terms == {2: 1, 1: -2, 0: 1}

    def test_syntax_error_carries_position(self):
        with pytest.raises(ParseError) as err:
            parse_polynomial("t^2 + $")
        assert err.value.position == 6

    def test_implicit_multiplication_rejected(self):
        with pytest.raises(ParseError):
            parse_polynomial("2 t")

    def test_negative_power_of_sum_rejected(self):
        with pytest.raises(ParseError):
            parse_polynomial("(t-1)^-1")

    def test_multivariate_needs_integer_coefficients(self):
        with pytest.raises(DomainError):
            parse_polynomial("1/2*x*y")

    def test_multivariate_rejects_negative_exponents(self):
        with pytest.raises(DomainError):
            parse_polynomial("x^-1*y + 1")

    def test_zero_denominator_rejected(self):
        with pytest.raises(ParseError):
            parse_polynomial("1/0*t")

    def test_double_caret_rejected(self):
        with pytest.raises(ParseError):
            parse_polynomial("t^2^3")

    def test_round_trip(self):
        rng = random.Random(20240811)
        for _ in range(200):
            terms = {rng.randint(-6, 9): rng.randint(-40, 40)
                     for _ in range(rng.randint(0, 6))}
            f = LaurentPolynomial(terms)
            assert parse_polynomial(str(f)) == f

    def test_round_trip_multivariate(self):
        texts = ["1 + x*y", "2 - x - y + 2*x*y",
                 "x + y - x*y + x^2*y + x*y^2", "1 - x*y*z"]
        for text in texts:
            m = parse_polynomial(text)
            assert parse_polynomial(str(m)) == m


class TestNormalize:
    def test_unit_shift(self):
        assert str(normalize(parse_laurent("-t^-1 + 3 - t"))) == "t^2 - 3*t + 1"

    def test_fixed_point(self):
        f = parse_laurent("2*t - 2")
        assert normalize(f) == f

    def test_monomial(self):
        assert normalize(parse_laurent("-2*t^-3")) == LaurentPolynomial.constant(2)

    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomialError):
            normalize(LaurentPolynomial.zero())


class TestContent:
    def test_common_factor(self):
        c, prim = content_and_primitive(parse_laurent("4*t^4 - 8*t^2 + 4"))
        assert c == 4 and prim == parse_laurent("t^4 - 2*t^2 + 1")

    def test_primitive_is_fixed(self):
        f = parse_laurent("t^2 - 3*t + 1")
        assert content_and_primitive(f) == (1, f)

    def test_coprime_coefficients(self):
        f = parse_laurent("2*t^2 - 5*t + 2")
        assert content_and_primitive(f) == (1, f)


class TestSubstitution:
    def test_opposite_exponents_collapse(self):
        delta = parse_polynomial("1 + x*y")
        assert substitute_onevar(delta, (1, -1)) == LaurentPolynomial.constant(2)

    def test_equal_exponents(self):
        delta = parse_polynomial("2 - x - y + 2*x*y")
        got = substitute_onevar(delta, (1, 1))
        assert got == parse_laurent("2*t^2 - 2*t + 2")
        assert normalize(got) == 2 * parse_laurent("t^2 - t + 1")

    def test_plain(self):
        delta = parse_polynomial("1 + x*y")
        assert substitute_onevar(delta, (1, 1)) == parse_laurent("1 + t^2")

    def test_arity_mismatch(self):
        with pytest.raises(DomainError):
            substitute_onevar(parse_polynomial("1 + x*y"), (1, 2, 3))


class TestAllOnes:
    def test_small(self):
        assert all_ones_polynomial(1) == LaurentPolynomial.constant(1)
        assert all_ones_polynomial(2) == parse_laurent("t + 1")
        assert all_ones_polynomial(4) == parse_laurent("t^3 + t^2 + t + 1")

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            all_ones_polynomial(0)

    def test_telescopes(self):
        t = LaurentPolynomial.variable_power()
        for n in range(1, 9):
            assert all_ones_polynomial(n) * (t - 1) == t**n - 1


class TestSquarefreeSplit:
    def test_product_recovers_input(self):
        rng = random.Random(7)
        for _ in range(25):
            f = LaurentPolynomial(
                {e: rng.randint(-5, 5) for e in range(rng.randint(1, 5))})
            if f.is_zero:
                continue
            f = normalize(f)
            parts = squarefree_split(f)
            product = LaurentPolynomial.constant(1)
            for part in parts:
                product = product * part
            assert product == f

    def test_repeated_roots_separated(self):
        f = normalize(parse_laurent("4*t^4 - 8*t^2 + 4"))
        parts = squarefree_split(f)
        for part in parts:
            if part.degree >= 1:
                assert part.gcd(part.derivative()).degree == 0
