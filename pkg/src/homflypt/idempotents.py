"""
Symmetrizers, Young-diagram idempotents and the tableau basis of H_n.

The strands of a diagram lambda are flattened in row-reading order, so the
rows of lambda occupy contiguous blocks of strands and the columns do not.
Column antisymmetrizers are carried onto their strands by conjugating with
the positive permutation braid that sends column-reading order to
row-reading order.

>>> from homflypt.young import YoungDiagram
>>> y(YoungDiagram((2,))).element == f(2)
True
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .coeff import S, X, RationalFunction, quantum_factorial
from .hecke import (
    HeckeElement, Perm, all_perms, basis_element, basis_inverse, embed, length, one,
)
from .young import StandardTableau, YoungDiagram, partitions, restrict, standard_tableaux

__all__ = [
    "f", "g", "F", "G", "y", "QuasiIdempotent", "quasi_normalizer", "IdempotentError", "column_to_row",
    "rho", "rho_inverse", "alpha", "beta", "BlanchetMorphism", "basis_rank", "blanchet_basis",
]


class IdempotentError(ArithmeticError):
    pass


def _symmetrizer(n: int, base, sign: int) -> HeckeElement:
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    half = n * (n - 1) // 2
    coeffs = {p: base ** -length(p) for p in all_perms(n)}
    pref = RationalFunction(S ** (sign * half), quantum_factorial(n))
    return HeckeElement(n, coeffs).scale(pref)


@lru_cache(maxsize=None)
def f(n: int) -> HeckeElement:
    """Row symmetrizer: sigma_i f = f sigma_i = xs f."""
    return _symmetrizer(n, X * S ** -1, -1)


@lru_cache(maxsize=None)
def g(n: int) -> HeckeElement:
    """Column antisymmetrizer: sigma_i g = g sigma_i = -x s^-1 g."""
    return _symmetrizer(n, -(X * S), 1)


def _blocks(sizes, elems, n: int) -> HeckeElement:
    out = one(n)
    offset = 0
    for k, e in zip(sizes, elems):
        if k > 1:
            out = out * embed(e, n, offset)
        offset += k
    return out


@lru_cache(maxsize=None)
def F(lam: YoungDiagram) -> HeckeElement:
    if lam.size < 1:
        raise ValueError("empty diagram")
    return _blocks(lam.parts, [f(k).scale(quantum_factorial(k)) for k in lam.parts], lam.size)


def column_to_row(lam: YoungDiagram) -> Perm:
    """One-line permutation sending column-reading index k to row-reading index."""
    return tuple(lam.position(c) for col in lam.column_cells() for c in col)


@lru_cache(maxsize=None)
def G(lam: YoungDiagram) -> HeckeElement:
    if lam.size < 1:
        raise ValueError("empty diagram")
    heights = lam.conjugate().parts
    cols = _blocks(heights, [g(k).scale(quantum_factorial(k)) for k in heights], lam.size)
    p = column_to_row(lam)
    return basis_element(p) * cols * basis_inverse(p)


@dataclass(frozen=True)
class QuasiIdempotent:
    """raw * raw == normalizer * raw; ``element`` is raw / normalizer."""
    raw: HeckeElement
    normalizer: RationalFunction
    element: HeckeElement


def quasi_normalizer(e: HeckeElement) -> RationalFunction:
    """k with e*e == k*e, or IdempotentError."""
    if e.is_zero():
        raise IdempotentError("zero element is not a quasi-idempotent")
    sq = e * e
    p = min(e.support())
    k = sq.coeff(p) / e.coeff(p)
    if k.is_zero():
        raise IdempotentError("normalizer vanishes")
    if sq != e.scale(k):
        raise IdempotentError("square is not proportional to the element")
    return k


@lru_cache(maxsize=None)
def y(lam: YoungDiagram) -> QuasiIdempotent:
    raw = F(lam) * G(lam)
    k = quasi_normalizer(raw)
    return QuasiIdempotent(raw, k, raw.scale(k.inverse()))


# ---------------------------------------------------------------------------
# tableau basis

def _added_position(t: StandardTableau) -> int:
    """Row-reading position in shape(t) of the cell labelled n."""
    return t.shape.position(t.cell_of(t.size))


def _routing(n: int, p: int) -> Perm:
    """Strands 1..p-1 fixed, p..n-1 shifted right, strand n moved to p."""
    return tuple(range(1, p)) + tuple(range(p + 1, n + 1)) + (p,)


def rho(t: StandardTableau) -> HeckeElement:
    """Braid placing the last strand at the row-reading position of the new cell.

    This is the inverse of the positive permutation braid of the routing
    permutation; with it the tableau elements come out exactly orthogonal.
    """
    return basis_inverse(_routing(t.size, _added_position(t)))


def rho_inverse(t: StandardTableau) -> HeckeElement:
    return basis_element(_routing(t.size, _added_position(t)))


@dataclass(frozen=True)
class BlanchetMorphism:
    tableau: StandardTableau
    element: HeckeElement


@lru_cache(maxsize=None)
def _alpha(t: StandardTableau) -> HeckeElement:
    n = t.size
    if n == 1:
        return one(1)
    prev = embed(_alpha(restrict(t)), n, 0)
    return prev * rho(t) * y(t.shape).element


@lru_cache(maxsize=None)
def _beta(t: StandardTableau) -> HeckeElement:
    n = t.size
    if n == 1:
        return one(1)
    prev = embed(_beta(restrict(t)), n, 0)
    return y(t.shape).element * rho_inverse(t) * prev


def alpha(t: StandardTableau) -> BlanchetMorphism:
    return BlanchetMorphism(t, _alpha(t))


def beta(t: StandardTableau) -> BlanchetMorphism:
    return BlanchetMorphism(t, _beta(t))


def blanchet_basis(n: int) -> list[HeckeElement]:
    """All alpha_t beta_tau with t, tau of the same shape."""
    out = []
    for lam in partitions(n):
        ts = standard_tableaux(lam)
        for t in ts:
            for tau in ts:
                out.append(_alpha(t) * _beta(tau))
    return out


# sample points for rank computations; a full-rank specialization proves generic full rank
_POINTS = [(Fraction(3), Fraction(5), Fraction(7)), (Fraction(2), Fraction(-3), Fraction(11, 2))]


def _rank_exact(rows: list[list[Fraction]]) -> int:
    rows = [r[:] for r in rows]
    rank, ncols = 0, len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                m = rows[i][col] / pr[col]
                rows[i] = [a - m * b for a, b in zip(rows[i], pr)]
        rank += 1
    return rank


def basis_rank(n: int) -> int:
    """Rank of the tableau basis over the fraction field.

    Coefficients are specialized at rational points where every denominator
    is nonzero; the rank at a point is a lower bound for the generic rank,
    and n! is an upper bound, so hitting n! at any point settles it.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    elems = blanchet_basis(n)
    perms = all_perms(n)
    best = 0
    for pt in _POINTS:
        try:
            rows = [[c.evaluate(*pt) for c in (e.coeff(p) for p in perms)] for e in elems]
        except ZeroDivisionError:
            continue
        best = max(best, _rank_exact(rows))
        if best == len(perms):
            break
    return best
