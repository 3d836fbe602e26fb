import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclotomy.polyring import (NEG_INF, IntPolynomial, NotDivisible, PolySyntaxError, add,
                                compose_power, content, divmod_poly, eval_int, exact_div,
                                format_poly, from_json, mul, parse_poly, substitute_neg,
                                to_json)

P = parse_poly

coeff = st.integers(min_value=-100, max_value=100)
polys = st.lists(coeff, max_size=31).map(IntPolynomial)
monic = st.lists(coeff, max_size=30).map(lambda c: IntPolynomial(c + [1]))
big_polys = st.lists(st.integers(min_value=-(2 ** 80), max_value=2 ** 80), max_size=40).map(
    IntPolynomial)


def naive_mul(a, b):
    if not a.coeffs or not b.coeffs:
        return IntPolynomial()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a.coeffs):
        for j, y in enumerate(b.coeffs):
            out[i + j] += x * y
    return IntPolynomial(out)


class TestCanonicalForm:
    def test_trailing_zeros_trimmed(self):
        assert IntPolynomial([1, 2, 0, 0]).coeffs == (1, 2)
        assert IntPolynomial([0, 0]).coeffs == ()

    def test_degree(self):
        assert IntPolynomial().degree == NEG_INF
        assert IntPolynomial([5]).degree == 0
        assert P("x^7 - 1").degree == 7

    def test_equality_and_hash(self):
        assert P("x + 1") == IntPolynomial([1, 1])
        assert len({P("x+1"), IntPolynomial([1, 1, 0])}) == 1


class TestArithmetic:
    def test_add(self):
        assert add(P("x - 1"), P("x + 1")) == P("2x")
        assert add(P("x^2 + x + 1"), P("-x^2")) == P("x + 1")
        p = P("3x^3 - 2")
        assert add(p, IntPolynomial()) == p

    def test_mul(self):
        assert mul(P("x^2 + x + 1"), P("x^2 - x + 1")) == P("x^4 + x^2 + 1")
        assert mul(P("x - 1"), P("x + 1")) == P("x^2 - 1")
        p = P("5x^4 - x")
        assert mul(p, IntPolynomial([1])) == p
        assert mul(p, IntPolynomial()).is_zero()

    def test_operators(self):
        x = IntPolynomial([0, 1])
        assert x * x + 1 == P("x^2 + 1")
        assert 1 - x == P("-x + 1")
        assert (x * x - 1) // (x - 1) == x + 1

    def test_exact_div(self):
        assert exact_div(P("x^2 - 1"), P("x - 1")) == P("x + 1")
        assert exact_div(P("x^4 + x^2 + 1"), P("x^2 + x + 1")) == P("x^2 - x + 1")

    def test_not_divisible(self):
        with pytest.raises(NotDivisible) as info:
            exact_div(P("x^2 + 1"), P("x + 1"))
        assert info.value.remainder_degree == 0
        with pytest.raises(NotDivisible) as info:
            exact_div(P("x^5 + x + 3"), P("x^3 + 2"))
        assert info.value.remainder_degree == 2

    def test_divisor_leading_coefficient(self):
        with pytest.raises(ValueError):
            exact_div(P("4x^2 - 1"), P("2x - 1"))
        with pytest.raises(ZeroDivisionError):
            exact_div(P("x"), IntPolynomial())
        assert exact_div(P("x^2 - 1"), P("-x + 1")) == P("-x - 1")

    def test_divmod_shorter_numerator(self):
        q, r = divmod_poly(P("x + 2"), P("x^3 + 1"))
        assert q.is_zero() and r == P("x + 2")

    def test_compose_power(self):
        assert compose_power(P("x^2 + x + 1"), 3) == P("x^6 + x^3 + 1")
        assert compose_power(P("x + 1"), 8) == P("x^8 + 1")
        p = P("x^3 - 2x + 7")
        assert compose_power(p, 1) == p
        with pytest.raises(ValueError):
            compose_power(p, 0)

    def test_substitute_neg(self):
        assert substitute_neg(P("x^2 + x + 1")) == P("x^2 - x + 1")
        assert substitute_neg(P("-9")) == P("-9")
        assert substitute_neg(P("x^4 + x^3 + x^2 + x + 1")) == P("x^4 - x^3 + x^2 - x + 1")

    def test_eval_int(self):
        assert eval_int(P("x^2 + x + 1"), 2) == 7
        assert eval_int(P("x^8 + 1"), 2) == 257
        assert eval_int(P("x^18 + x^9 + 1"), 2) == 2 ** 18 + 2 ** 9 + 1 == 262657
        assert eval_int(IntPolynomial(), 5) == 0

    def test_content(self):
        assert content(P("2x + 4")) == 2
        assert content(P("x^2 + x + 1")) == 1
        assert content(IntPolynomial()) == 0
        assert content(P("-6x^2 - 9")) == 3


class TestTextFormat:
    @pytest.mark.parametrize("text", [
        "x^4 - x^2 + 1", "x^8 - x^7 + x^5 - x^4 + x^3 - x + 1", "x - 1", "-x^3 + 12x - 7",
        "x", "-x", "0", "5", "-5", "3x^2", "x^10 + 1",
    ])
    def test_round_trip(self, text):
        assert format_poly(parse_poly(text)) == text

    def test_format(self):
        assert format_poly(IntPolynomial([1, 0, -1, 0, 1])) == "x^4 - x^2 + 1"
        assert format_poly(IntPolynomial()) == "0"
        assert format_poly(IntPolynomial([-1, -2])) == "-2x - 1"

    def test_parse_variants(self):
        assert parse_poly("x^2+2*x+1").coeffs == (1, 2, 1)
        assert parse_poly("  1 +x^2   + 2 * x ") == P("x^2 + 2x + 1")
        assert parse_poly("x + x - 2x").is_zero()
        assert parse_poly("-1 + x^3").coeffs == (-1, 0, 0, 1)

    @pytest.mark.parametrize("text, position", [
        ("x^^2", 2), ("", 0), ("x +", 3), ("2*", 2), ("x y", 2), ("x^2 x", 4), ("2**x", 2),
        ("x^", 2), ("+", 1),
    ])
    def test_parse_errors(self, text, position):
        with pytest.raises(PolySyntaxError) as info:
            parse_poly(text)
        assert info.value.position == position

    def test_json(self):
        p = P("x^4 - x^2 + 1")
        assert to_json(p) == ["1", "0", "-1", "0", "1"]
        assert from_json(json.dumps(to_json(p))) == p
        huge = IntPolynomial([3 ** 100, -(2 ** 90)])
        assert from_json(to_json(huge)) == huge
        with pytest.raises(ValueError):
            from_json("[1, 2]")


@settings(max_examples=1000, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert add(a, b) == add(b, a)
    assert add(add(a, b), c) == add(a, add(b, c))
    assert mul(a, b) == mul(b, a)
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))


@settings(max_examples=1000, deadline=None)
@given(polys, monic)
def test_exact_div_inverts_mul(a, b):
    assert exact_div(mul(a, b), b) == a


@settings(max_examples=300, deadline=None)
@given(big_polys, big_polys)
def test_mul_matches_naive_with_big_coefficients(a, b):
    assert mul(a, b) == naive_mul(a, b)


@settings(max_examples=300, deadline=None)
@given(st.lists(coeff, max_size=21).map(IntPolynomial),
       st.integers(1, 10), st.integers(1, 10))
def test_compose_power_multiplies(p, a, b):
    assert compose_power(compose_power(p, a), b) == compose_power(p, a * b)


@given(polys)
def test_substitute_neg_involution(p):
    assert substitute_neg(substitute_neg(p)) == p


@given(polys, polys, st.integers(-10 ** 6, 10 ** 6))
def test_eval_is_multiplicative(a, b, t):
    assert eval_int(mul(a, b), t) == eval_int(a, t) * eval_int(b, t)


@given(polys)
def test_format_parse_round_trip(p):
    assert parse_poly(format_poly(p)) == p
