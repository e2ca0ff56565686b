from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from heckelab.laurent import ONE, V, ZERO, LaurentPoly, as_laurent, format_laurent, lp_add, lp_eval, lp_mul, parse_laurent

vinv = LaurentPoly.monomial(-1)

polys = st.dictionaries(
    st.integers(-8, 8),
    st.fractions(min_value=-5, max_value=5, max_denominator=7),
    max_size=5,
).map(LaurentPoly)


def test_add_examples():
    assert lp_add(LaurentPoly.monomial(-2) - 1, ONE) == LaurentPoly.monomial(-2)
    p = V + 3 * vinv
    assert lp_add(p, ZERO) == p
    assert lp_add(V + vinv, V - vinv) == LaurentPoly.monomial(1, 2)


def test_mul_examples():
    assert lp_mul(V + vinv, V - vinv) == LaurentPoly.monomial(2) - LaurentPoly.monomial(-2)
    p = V**3 - Fraction(1, 2)
    assert lp_mul(ONE, p) == p
    a = LaurentPoly.monomial(-2) - 1
    assert lp_mul(a, a) == LaurentPoly({-4: 1, -2: -2, 0: 1})


def test_eval_examples():
    assert lp_eval(LaurentPoly.monomial(-2) - 1, 1) == 0
    assert lp_eval(V, 0.5) == 0.5
    assert abs(lp_eval(LaurentPoly.monomial(2) - LaurentPoly.monomial(-2), 1j)) < 1e-15
    with pytest.raises(ValueError):
        lp_eval(V, 0)


def test_no_zero_terms_and_equality():
    p = LaurentPoly({1: 1, 2: 0, -1: Fraction(0)})
    assert p.terms == {1: 1}
    assert V - V == ZERO and not (V - V)
    assert hash(V + 1) == hash(1 + V)


def test_inverse_and_divexact():
    assert (LaurentPoly.monomial(3, 2).inverse()) == LaurentPoly.monomial(-3, Fraction(1, 2))
    with pytest.raises(ZeroDivisionError):
        (V + 1).inverse()
    num = LaurentPoly.monomial(2) - LaurentPoly.monomial(-2)
    assert num.divexact(V - vinv) == V + vinv
    with pytest.raises(ValueError):
        (V + 2).divexact(V - vinv)


def test_text_format_round_trip():
    p = LaurentPoly.monomial(-2) - 1
    assert format_laurent(p) == "v^-2 - 1"
    assert parse_laurent("v^-2 - 1") == p
    q = LaurentPoly({-2: -1, 1: Fraction(3, 4), 2: 1})
    assert parse_laurent(str(q)) == q
    assert as_laurent("2*v^3") == LaurentPoly.monomial(3, 2)
    with pytest.raises(TypeError):
        as_laurent(0.5)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(polys, polys, st.complex_numbers(min_magnitude=0.5, max_magnitude=2, allow_nan=False, allow_infinity=False))
def test_eval_is_homomorphism(a, b, z):
    lhs = lp_eval(a * b, z)
    rhs = lp_eval(a, z) * lp_eval(b, z)
    # Relative to the size of the summands, so cancellation does not count against it.
    scale = _abs_eval(a, abs(z)) * _abs_eval(b, abs(z))
    assert abs(lhs - rhs) <= 1e-12 * max(scale, 1e-300)


def _abs_eval(p, r):
    return sum(abs(float(c)) * r**k for k, c in p.items())


@given(polys)
def test_parse_inverts_format(p):
    assert parse_laurent(str(p)) == p
