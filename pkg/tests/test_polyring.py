from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotsplit.polyring import (
    A,
    DELTA,
    DivisionByZero,
    LaurentPolynomial,
    ONE,
    RationalFunction,
    UndefinedGcd,
    ZERO,
    delta_power,
    format_laurent,
    format_rational,
    parse_laurent,
    parse_rational,
    poly_gcd,
    substitute_jones,
)

L = LaurentPolynomial


def coeffs():
    return st.fractions(min_value=-6, max_value=6, max_denominator=6)


def laurents(max_terms=4):
    return st.lists(
        st.tuples(st.integers(-5, 5), coeffs()), max_size=max_terms
    ).map(LaurentPolynomial)


def nonzero_laurents():
    return laurents().filter(lambda p: not p.is_zero())


class TestArithmetic:
    def test_inverse_monomials_multiply_to_one(self):
        assert L.monomial(1) * L.monomial(-1) == ONE

    def test_zeroth_power(self):
        assert DELTA**0 == ONE

    def test_delta_squared(self):
        assert DELTA**2 == L({4: 1, 0: 2, -4: 1})

    def test_negative_power_rejected(self):
        with pytest.raises(ValueError):
            DELTA ** (-1)

    def test_delta_power_cache(self):
        assert delta_power(3) == DELTA * DELTA * DELTA
        with pytest.raises(ValueError):
            delta_power(-1)

    def test_scalar_multiplication(self):
        assert DELTA * 2 == DELTA + DELTA
        assert DELTA.scaled(Fraction(1, 2)) + DELTA.scaled(Fraction(1, 2)) == DELTA

    def test_exact_division(self):
        assert (DELTA * DELTA).exact_div(DELTA) == DELTA
        with pytest.raises(ValueError):
            (DELTA + ONE).exact_div(DELTA)
        with pytest.raises(DivisionByZero):
            DELTA.exact_div(ZERO)

    @settings(derandomize=True)
    @given(laurents(), laurents(), laurents())
    def test_ring_axioms(self, p, q, r):
        assert p + q == q + p
        assert p * q == q * p
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r

    @settings(derandomize=True)
    @given(laurents())
    def test_canonical_idempotence(self, p):
        assert LaurentPolynomial(dict(p.terms())) == p

    @settings(derandomize=True)
    @given(laurents())
    def test_additive_inverse(self, p):
        assert p + (-p) == ZERO


class TestGcd:
    def test_linear_factor(self):
        assert poly_gcd(L({2: 1, 0: -1}), L({1: 1, 0: -1})) == L({1: 1, 0: -1})

    def test_gcd_with_zero(self):
        p = L({3: 2, -1: 4})
        assert poly_gcd(p, ZERO) == p.normalized()
        assert poly_gcd(ZERO, p) == p.normalized()

    def test_divisibility(self):
        # delta normalized: shift to lowest exponent 0, make monic.
        assert poly_gcd(DELTA, DELTA * DELTA) == L({4: 1, 0: 1})

    def test_gcd_of_zeros_rejected(self):
        with pytest.raises(UndefinedGcd):
            poly_gcd(ZERO, ZERO)

    @settings(derandomize=True)
    @given(nonzero_laurents(), nonzero_laurents())
    def test_gcd_divides_both(self, p, q):
        g = poly_gcd(p, q)
        assert p.exact_div(g) * g == p
        assert q.exact_div(g) * g == q

    @settings(derandomize=True, max_examples=40)
    @given(nonzero_laurents(), nonzero_laurents(), nonzero_laurents())
    def test_gcd_respects_common_factor(self, p, q, c):
        lhs = poly_gcd(p * c, q * c)
        rhs = (poly_gcd(p, q) * c).normalized()
        assert lhs == rhs


class TestRationalFunction:
    def test_inversion_of_delta(self):
        assert RationalFunction(ONE).invert() == RationalFunction(ONE)
        assert RationalFunction(DELTA).invert() == RationalFunction(ONE, DELTA)

    def test_cancellation(self):
        p, q, r = L({1: 2, 0: 1}), DELTA, L({3: -5, -2: 1})
        assert RationalFunction(p * r, q * r) == RationalFunction(p, q)

    def test_common_denominator_addition(self):
        one_over = RationalFunction(ONE, DELTA)
        assert one_over + one_over == RationalFunction(ONE + ONE, DELTA)

    def test_invert_zero_rejected(self):
        with pytest.raises(DivisionByZero):
            RationalFunction(ZERO).invert()

    def test_zero_denominator_rejected(self):
        with pytest.raises(DivisionByZero):
            RationalFunction(ONE, ZERO)

    def test_canonical_denominator_is_monic_with_zero_base(self):
        r = RationalFunction(ONE, DELTA)
        assert r.den.min_exponent() == 0
        assert r.den.leading_coefficient() == 1
        # 1/delta == (-A^2)/(A^4 + 1)
        assert r.num == L({2: -1})
        assert r.den == L({4: 1, 0: 1})

    @settings(derandomize=True, max_examples=60)
    @given(nonzero_laurents())
    def test_multiplicative_inverse(self, p):
        r = RationalFunction(p)
        assert r * r.invert() == RationalFunction(ONE)

    @settings(derandomize=True, max_examples=60)
    @given(nonzero_laurents(), nonzero_laurents(), nonzero_laurents())
    def test_field_arithmetic(self, p, q, r):
        x = RationalFunction(p, q)
        y = RationalFunction(q, r)
        assert (x + y) - y == x
        assert x * y == y * x


class TestJonesSubstitution:
    def test_constant(self):
        assert substitute_jones(ONE) == ONE

    def test_hopf_kauffman_function_image(self):
        # -A^-2 - A^-10 becomes -t^(1/2) - t^(5/2): exponents 2, 10 in
        # quarter powers of t.
        assert substitute_jones(L({-2: -1, -10: -1})) == L({2: -1, 10: -1})

    def test_single_term(self):
        assert substitute_jones(L({3: -1})) == L({-3: -1})

    @settings(derandomize=True)
    @given(laurents(), laurents())
    def test_ring_homomorphism(self, p, q):
        assert substitute_jones(p * q) == substitute_jones(p) * substitute_jones(q)
        assert substitute_jones(p + q) == substitute_jones(p) + substitute_jones(q)

    @settings(derandomize=True)
    @given(laurents())
    def test_involution(self, p):
        assert substitute_jones(substitute_jones(p)) == p


class TestTextFormat:
    def test_zero(self):
        assert format_laurent(ZERO) == "0"
        assert parse_laurent("0") == ZERO

    def test_constant_renders_bare(self):
        assert format_laurent(ONE) == "1"
        assert format_laurent(ONE, "t") == "1"

    def test_ascending_exponents(self):
        assert format_laurent(DELTA) == "-1*A^-2 + -1*A^2"
        assert format_laurent(DELTA, "t") == "-1*t^(-2/4) + -1*t^(2/4)"

    def test_rational_coefficients(self):
        p = L({-1: Fraction(3, 2), 0: -2})
        assert format_laurent(p) == "3/2*A^-1 + -2"

    def test_rational_function_format(self):
        r = RationalFunction(DELTA, DELTA * DELTA - ONE)
        text = format_rational(r, "t")
        assert parse_rational(text, "t") == r
        assert format_rational(RationalFunction(DELTA), "A") == format_laurent(DELTA)

    @settings(derandomize=True)
    @given(laurents())
    def test_round_trip_bracket_variable(self, p):
        assert parse_laurent(format_laurent(p, "A"), "A") == p

    @settings(derandomize=True)
    @given(laurents())
    def test_round_trip_jones_variable(self, p):
        assert parse_laurent(format_laurent(p, "t"), "t") == p
