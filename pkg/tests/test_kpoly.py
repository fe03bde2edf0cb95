from fractions import Fraction

from hypothesis import given, strategies as st

from isop.kpoly import KPolynomial

coeffs = st.lists(st.integers(-20, 20), max_size=4)
ks = st.integers(-50, 50)


def test_basic():
    k = KPolynomial.k()
    p = (k + 1) * (k - 1)
    assert p == KPolynomial((-1, 0, 1))
    assert p.degree == 2
    assert p(3) == 8
    assert KPolynomial((0, 0)) == 0
    assert (k * 2).choose2() == KPolynomial((0, -1, 2))


@given(coeffs, coeffs, ks)
def test_ring_homomorphism(a, b, x):
    p, q = KPolynomial(a), KPolynomial(b)
    assert (p + q)(x) == p(x) + q(x)
    assert (p * q)(x) == p(x) * q(x)
    assert (p - q)(x) == p(x) - q(x)
    assert (3 - p)(x) == 3 - p(x)


@given(coeffs, coeffs, ks)
def test_compose(a, b, x):
    p, q = KPolynomial(a), KPolynomial(b)
    assert p.compose(q)(x) == p(q(x))


@given(coeffs, ks)
def test_choose2(a, x):
    p = KPolynomial(a)
    v = p(x)
    assert p.choose2()(x) == v * (v - 1) / 2
    assert p.choose2().is_integral() or any(Fraction(c).denominator != 1 for c in p.choose2().coeffs)
