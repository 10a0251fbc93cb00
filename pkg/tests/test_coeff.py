import pytest
import sympy
from hypothesis import given, settings, strategies as st

from homflypt.coeff import (
    LaurentPoly, RationalFunction, X, V, S, ONE, ZERO, CertificationError,
    certify_membership, delta, factor_s2n_minus_1, factor_v4_minus_s2n, factor_variable,
    parse_poly, parse_rational, quantum_factorial, quantum_integer, s_diff,
)
from homflypt.young import YoungDiagram, c_factor

from oracles import poly_to_sympy, rat_to_sympy, sympy_equal, s

exps = st.tuples(*(st.integers(-3, 3) for _ in range(3)))
polys = st.dictionaries(exps, st.integers(-5, 5), max_size=5).map(LaurentPoly)
nonzero = polys.filter(lambda p: not p.is_zero())
rationals = st.builds(RationalFunction, polys, nonzero)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a - a == ZERO
    assert a * ONE == a


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_product_matches_sympy(a, b):
    assert sympy.expand(poly_to_sympy(a * b) - poly_to_sympy(a) * poly_to_sympy(b)) == 0
    assert sympy.expand(poly_to_sympy(a - b) - poly_to_sympy(a) + poly_to_sympy(b)) == 0


@settings(max_examples=40, deadline=None)
@given(polys, nonzero)
def test_exact_division(a, b):
    assert (a * b).exact_div(b) == a


def test_exact_division_fails_when_not_divisible():
    assert (X + ONE).exact_div(X - ONE) is None
    assert (X * X - ONE).exact_div(X - ONE) == X + ONE


@settings(max_examples=40, deadline=None)
@given(rationals, rationals, rationals)
def test_field_operations_match_sympy(a, b, c):
    got = rat_to_sympy(a * b + c)
    want = rat_to_sympy(a) * rat_to_sympy(b) + rat_to_sympy(c)
    assert sympy_equal(got, want)
    if not b.is_zero():
        assert (a / b) * b == a


@settings(max_examples=40, deadline=None)
@given(rationals)
def test_equal_values_hash_equal(a):
    m = LaurentPoly.monomial(-3, 1, 2, -1)
    scaled = RationalFunction(a.num * m, a.den * m)
    assert scaled == a
    assert hash(scaled) == hash(a)


def test_normalization_strips_monomial_content_and_sign():
    r = RationalFunction(2 * X, -4 * X * X * (S - ONE))
    assert r.den == 2 * (S - ONE)
    assert r.num == -(X ** -1)
    assert r == RationalFunction(-ONE, 2 * X * (S - ONE))


def test_exact_quotient_collapses():
    r = RationalFunction(X * X - ONE, X - ONE)
    assert r.is_polynomial()
    assert r.as_poly() == X + ONE


def test_delta_value():
    dl = delta()
    want = (1 / sympy.Symbol("v") - sympy.Symbol("v")) / (s - 1 / s)
    assert sympy_equal(rat_to_sympy(dl), want)
    assert dl * RationalFunction(s_diff()) == RationalFunction(V ** -1 - V)


def test_quantum_integers():
    assert quantum_integer(1) == ONE
    assert quantum_integer(2) == S + S ** -1
    assert quantum_integer(3) == S * S + ONE + S ** -2
    assert quantum_factorial(3) == quantum_integer(2) * quantum_integer(3)
    assert quantum_factorial(0) == ONE


def test_cancel_by_known_factor():
    q = s_diff()
    r = RationalFunction(q * (X + ONE), q * (V + ONE))
    # no gcd: the common factor stays until named
    assert r.cancel([q]).den in (V + ONE, -(V + ONE))
    assert r.cancel([q]) == r


@pytest.mark.parametrize("text", ["0", "1", "-x^2*s^-1 + 3*v - 1", "x*v^-1", "2*x^-3*v*s^2 - s"])
def test_parse_round_trip(text):
    p = parse_poly(text)
    assert parse_poly(str(p)) == p


def test_parse_rational_round_trip():
    r = delta()
    assert parse_rational(str(r)) == r
    with pytest.raises(ValueError):
        parse_poly("x^^2")


def test_json_round_trip():
    r = delta() * RationalFunction(X + V)
    assert RationalFunction.from_json(r.to_json()) == r


def test_evaluate_at_point():
    assert (X * V - S).evaluate(2, 3, 5) == 1
    assert delta().evaluate(1, 2, 3) == sympy.Rational(-3, 2) / sympy.Rational(8, 3)


def test_certificate_for_delta():
    cert = certify_membership(delta(), "I'", [factor_s2n_minus_1(1)])
    assert cert.verify()
    # s^2 - 1 alone is in I' but v^2 - 1 is needed for 1/delta
    inv = certify_membership(delta().inverse(), "I'", [factor_v4_minus_s2n(0)])
    assert inv.verify()


def test_certificate_rejects_wrong_tags():
    lam = YoungDiagram((1,))
    with pytest.raises(CertificationError):
        certify_membership(delta().inverse(), "I", [factor_s2n_minus_1(1)])
    with pytest.raises(CertificationError):
        certify_membership(delta(), "I", [factor_v4_minus_s2n(0)])
    # c-factors need |lam| = |mu|
    with pytest.raises(CertificationError):
        certify_membership(ONE, "I", [c_factor(lam, YoungDiagram(()))])


def test_certificate_accepts_variables_and_units():
    assert certify_membership(RationalFunction(ONE, X * V), "I", [factor_variable("x")]).verify()


def test_v4_factor_note():
    f = factor_v4_minus_s2n(-3)
    assert f.poly == V ** 4 - S ** -6
    assert certify_membership(RationalFunction(ONE, f.poly), "I'", [f]).notes
