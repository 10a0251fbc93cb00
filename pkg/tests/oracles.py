"""Independent reference computations used by the tests."""
import sympy

from homflypt.coeff import LaurentPoly, RationalFunction

x, v, s = sympy.symbols("x v s")


def poly_to_sympy(p: LaurentPoly):
    return sum((c * x**a * v**b * s**e for (a, b, e), c in p.items()), sympy.Integer(0))


def rat_to_sympy(r: RationalFunction):
    return poly_to_sympy(r.num) / poly_to_sympy(r.den)


def sympy_equal(a, b) -> bool:
    return sympy.simplify(sympy.together(a - b)) == 0


def homfly_delta():
    return (1 / v - v) / (s - 1 / s)


def skein_check(pos, neg, zero) -> bool:
    """x^-1 L+ - x L- == (s - s^-1) L0 for values given as sympy expressions."""
    return sympy_equal(pos / x - x * neg, (s - 1 / s) * zero)
