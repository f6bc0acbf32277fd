from fractions import Fraction

from hypothesis import given, strategies as st

from youngops import Polynomial


coeff_lists = st.lists(
    st.fractions(min_value=-10, max_value=10, max_denominator=12),
    max_size=6)
points = st.fractions(min_value=-5, max_value=5, max_denominator=8)


def test_trailing_zeros_trimmed():
    assert Polynomial([1, 2, 0, 0]).coeffs == (Fraction(1), Fraction(2))
    assert Polynomial([0, 0]).coeffs == ()
    assert Polynomial().degree == -1
    assert Polynomial([5]).degree == 0


def test_zero_one_monomial():
    assert not Polynomial.zero()
    assert Polynomial.one()(Fraction(7)) == 1
    N = Polynomial.monomial(1)
    assert N(5) == 5
    assert Polynomial.monomial(3, 2)(2) == 16


def test_known_product():
    N = Polynomial.monomial(1)
    assert (N - 1) * (N + 1) == N * N - 1
    assert (N + 1) * (N + 1) == Polynomial([1, 2, 1])


def test_scalar_interop():
    N = Polynomial.monomial(1)
    assert 2 * N == N + N
    assert N - Fraction(1, 2) == Polynomial([Fraction(-1, 2), 1])
    assert (2 - N) == -(N - 2)
    assert N / 2 == Polynomial([0, Fraction(1, 2)])
    assert Polynomial([3]) == 3
    assert Polynomial([3]) == Fraction(3)


def test_str_forms():
    N = Polynomial.monomial(1)
    assert str(Polynomial.zero()) == "0"
    assert str(N) == "N"
    assert str(N * N - N) == "N^2 - N"
    assert str(Polynomial([Fraction(-1, 3), 0, 0, Fraction(1, 3)])) \
        == "1/3*N^3 - 1/3"


def test_json_round_trip():
    p = Polynomial([0, Fraction(-1, 3), 0, Fraction(1, 3)])
    d = p.to_dict()
    assert d == {"coeffs": {"0": "0", "1": "-1/3", "3": "1/3"}}
    assert Polynomial.from_dict(d) == p


def test_json_constant_always_present():
    assert Polynomial.zero().to_dict() == {"coeffs": {"0": "0"}}
    assert Polynomial.monomial(2).to_dict() == {"coeffs": {"0": "0", "2": "1"}}
    assert Polynomial.from_dict({"coeffs": {}}) == Polynomial.zero()


@given(coeff_lists, coeff_lists, points)
def test_addition_matches_pointwise(a, b, x):
    p, q = Polynomial(a), Polynomial(b)
    assert (p + q)(x) == p(x) + q(x)


@given(coeff_lists, coeff_lists, points)
def test_product_matches_pointwise(a, b, x):
    p, q = Polynomial(a), Polynomial(b)
    assert (p * q)(x) == p(x) * q(x)


@given(coeff_lists)
def test_round_trip_any(a):
    p = Polynomial(a)
    assert Polynomial.from_dict(p.to_dict()) == p
