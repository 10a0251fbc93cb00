"""
Encircling strands and the scalars by which they act on y_lambda.

``encircle(n, i)`` is the pure braid in which strand i loops around strands
i+1..n.  The eigenvalue statement is checked with the mirror configuration:
the strand at row-reading position p = |lambda| - i + 1 loops around the
p - 1 strands before it.  The two are conjugate by the half twist, and with
strands flattened in row-reading order it is the second one that y_lambda
absorbs.
"""

from __future__ import annotations

from .coeff import S, V, X, RationalFunction, delta, s_diff
from .hecke import HeckeElement, embed, generator_inverse, one, partial_closure
from .idempotents import y
from .young import YoungDiagram, c_scalar, content_sum

__all__ = [
    "encircle", "loop_back", "half_twist", "eigenvalue_62", "verify_62",
    "full_twist_factor", "full_twist_action", "meridian_scalar_reversed",
    "meridian_scalar_same", "ConsistencyError",
]


class ConsistencyError(ArithmeticError):
    pass


def _word(n: int, letters, inverse: bool) -> HeckeElement:
    out = one(n)
    if inverse:
        for j in reversed(letters):
            out = out * generator_inverse(j, n)
    else:
        for j in letters:
            out = out.right_generator(j)
    return out


def encircle(n: int, i: int, inverse: bool = False) -> HeckeElement:
    """(sigma_i ... sigma_{n-1})(sigma_{n-1} ... sigma_i), or its inverse."""
    if not 1 <= i <= n:
        raise IndexError(f"strand {i} out of range for {n} strands")
    letters = list(range(i, n)) + list(range(n - 1, i - 1, -1))
    return _word(n, letters, inverse)


def loop_back(n: int, p: int, inverse: bool = False) -> HeckeElement:
    """Strand p looping around strands 1..p-1: (sigma_{p-1} ... sigma_1)(sigma_1 ... sigma_{p-1})."""
    if not 1 <= p <= n:
        raise IndexError(f"strand {p} out of range for {n} strands")
    letters = list(range(p - 1, 0, -1)) + list(range(1, p))
    return _word(n, letters, inverse)


def half_twist(n: int) -> HeckeElement:
    """Positive half twist: the longest positive permutation braid."""
    letters = [j for k in range(n - 1, 0, -1) for j in range(1, k + 1)]
    return _word(n, letters, False)


def _cell(lam: YoungDiagram, i: int):
    n = lam.size
    if not 1 <= i <= n:
        raise IndexError(f"i={i} out of range for {lam}")
    return lam.cell_at(n - i + 1)


def eigenvalue_62(lam: YoungDiagram, i: int, part: str = "a") -> RationalFunction:
    """x^{2(|lam|-i)} s^{2 cn(c)} (part a) or its inverse (part b)."""
    c = _cell(lam, i)
    e = X ** (2 * (lam.size - i)) * S ** (2 * c.content)
    if part == "a":
        return RationalFunction(e)
    if part == "b":
        return RationalFunction(1, e)
    raise ValueError(f"part must be 'a' or 'b', got {part!r}")


def verify_62(lam: YoungDiagram, i: int, part: str = "a") -> bool:
    """Check loop * y == eigenvalue * y exactly (part b uses the inverse loop)."""
    n = lam.size
    ev = eigenvalue_62(lam, i, part)
    yl = y(lam).element
    loop = loop_back(n, n - i + 1, inverse=(part == "b"))
    return loop * yl == yl.scale(ev)


def full_twist_factor(lam: YoungDiagram) -> RationalFunction:
    """x^{n(n-1)} s^{2 sum cn}: the product of all part-a eigenvalues."""
    n = lam.size
    if n < 1:
        raise ValueError("empty diagram")
    total = sum(c.content for c in lam.cells())
    return RationalFunction(X ** (n * (n - 1)) * S ** (2 * total))


def full_twist_action(lam: YoungDiagram) -> RationalFunction:
    """The scalar by which the full twist acts on y_lambda, computed in H_n."""
    yl = y(lam).element
    d = half_twist(lam.size)
    k = (d * d * yl).proportional_to(yl)
    if k is None:
        raise ConsistencyError(f"full twist does not act by a scalar on y{lam}")
    return k


def meridian_scalar_reversed(mu: YoungDiagram) -> RationalFunction:
    """x^{-2|mu|} (delta - v (s - s^-1) sum_mu s^{-2 cn})."""
    inner = delta() - RationalFunction(V * s_diff() * content_sum(mu, -1))
    return inner * RationalFunction(X ** (-2 * mu.size))


def meridian_scalar_same(lam: YoungDiagram) -> RationalFunction:
    """Scalar of a coherently oriented circle around y_lambda, computed in H_{n+1}.

    The circle is the extra strand n+1 looped around strands 1..n and then
    closed off; the result must be a multiple of y_lambda.
    """
    n = lam.size
    if n == 0:
        return delta()
    yl = y(lam).element
    closed = partial_closure(loop_back(n + 1, n + 1) * embed(yl, n + 1, 0))
    k = closed.proportional_to(yl)
    if k is None:
        raise ConsistencyError(f"closed meridian is not a multiple of y{lam}")
    return k


def meridian_scalar_same_closed_form(lam: YoungDiagram) -> RationalFunction:
    """x^{2|lam|} (delta + c(lam, empty)), compared against the computed value in tests."""
    return RationalFunction(X ** (2 * lam.size)) * (delta() + RationalFunction(c_scalar(lam, YoungDiagram(()))))
