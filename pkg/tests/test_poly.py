from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from schurthom.poly import (
    NotDivisibleError,
    Polynomial,
    TruncatedSeries,
    exact_divide,
    poly_add,
    poly_mul,
    series_quotient,
)
from strategies import polynomials

x, y, z = (Polynomial.var(v) for v in "xyz")


class TestRingAxioms:
    @given(polynomials(), polynomials(), polynomials())
    def test_associativity(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)

    @given(polynomials(), polynomials())
    def test_commutativity(self, a, b):
        assert a + b == b + a
        assert a * b == b * a

    @given(polynomials(), polynomials(), polynomials())
    def test_distributivity(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(polynomials())
    def test_identities_and_inverse(self, a):
        assert a + 0 == a
        assert a * 1 == a
        assert a - a == 0
        assert not (a * 0)

    @given(polynomials(), polynomials())
    def test_hash_agrees_with_eq(self, a, b):
        if a == b:
            assert hash(a) == hash(b)
        assert hash(a + b - b) == hash(a)

    @given(polynomials(), polynomials())
    def test_exact_divide_inverts_multiplication(self, a, b):
        if b:
            assert exact_divide(a * b, b) == a

    @given(polynomials())
    def test_parse_round_trip(self, a):
        assert Polynomial.parse(str(a)) == a


def test_examples():
    assert (x + y) ** 2 == x**2 + 2 * x * y + y**2
    assert str((Polynomial.var("x1") + Polynomial.var("x2")) ** 2) == "x1^2 + 2*x1*x2 + x2^2"
    assert poly_add(x, -x) == 0
    assert poly_mul(x - 1, x + 1) == x**2 - 1
    assert str(Polynomial(0)) == "0"
    assert str(x - 3) == "x - 3"


def test_degree_and_coefficients():
    p = 3 * x**2 * y + y**3 - 7
    assert p.degree() == 3
    assert p.degree_in("x") == 2
    assert p.coefficient("x", 2) == 3 * y
    assert p.coefficient("x", 0) == y**3 - 7
    assert Polynomial(0).degree() == -1


def test_subs_and_rename():
    p = x**2 + x * y
    assert p.subs({"x": y + 1}) == (y + 1) ** 2 + (y + 1) * y
    assert p.rename({"x": "z"}) == z**2 + z * y
    assert p.subs({"x": 2, "y": 3}) == 10


def test_not_divisible():
    with pytest.raises(NotDivisibleError):
        exact_divide(x**2 + 1, x + 1)
    with pytest.raises(ZeroDivisionError):
        exact_divide(x, 0)


def test_parse_forms():
    assert Polynomial.parse("2*x^2 - 3*x*y + 1") == 2 * x**2 - 3 * x * y + 1
    assert Polynomial.parse("y2") == Polynomial.var("y2")
    with pytest.raises(ValueError):
        Polynomial.parse("x +* y")


def test_series_quotient_taylor():
    # 1/(1 - z)^2 = sum (k+1) z^k
    num = TruncatedSeries.of([1], 6)
    den = TruncatedSeries.of([1, -2, 1], 6)
    q = series_quotient(num, den, 6)
    assert [q[k] for k in range(7)] == [k + 1 for k in range(7)]


def test_series_quotient_symbolic():
    q = series_quotient(TruncatedSeries.of([1], 4), TruncatedSeries.of([1, -y], 4), 4)
    assert [q[k] for k in range(5)] == [y**k for k in range(5)]


def test_series_quotient_requires_unit():
    with pytest.raises(ValueError):
        series_quotient(TruncatedSeries.of([1], 3), TruncatedSeries.of([2, 1], 3), 3)


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=5), st.lists(st.integers(-5, 5), max_size=4))
def test_series_quotient_times_denominator(num, tail):
    den = [1] + tail
    order = 6
    q = series_quotient(TruncatedSeries.of(num, order), TruncatedSeries.of(den, order), order)
    back = q * TruncatedSeries.of(den, order)
    assert [back[k] for k in range(order + 1)] == [num[k] if k < len(num) else 0 for k in range(order + 1)]
