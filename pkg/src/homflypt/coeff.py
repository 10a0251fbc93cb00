"""
Exact coefficients: Laurent polynomials in x, v, s over the integers and
their fraction field.

Fractions are never reduced by a multivariate gcd.  Only the integer content
and a Laurent monomial are stripped from denominators, plus a cheap exact
division test; equality is decided by cross-multiplication.

>>> (S - S**-1) * (S + S**-1)
LaurentPoly('-s^-2 + s^2')
>>> print(delta())
(v^-1*s - v*s)/(-1 + s^2)
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Union

__all__ = [
    "LaurentPoly", "RationalFunction", "X", "V", "S", "ONE", "ZERO",
    "quantum_integer", "quantum_factorial", "delta", "s_diff",
    "Factor", "MonoidCertificate", "CertificationError", "certify_membership",
    "factor_variable", "factor_s2n_minus_1", "factor_v4_minus_s2n", "factor_unit",
    "parse_poly", "parse_rational",
]

Exp = tuple[int, int, int]
VARS = ("x", "v", "s")


def _add_exp(a: Exp, b: Exp) -> Exp:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


class LaurentPoly:
    """Element of Z[x^{+-1}, v^{+-1}, s^{+-1}], immutable.

    Terms are stored as ``{(e_x, e_v, e_s): coefficient}`` with no zero
    coefficients.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exp, int] | None = None):
        self._terms: dict[Exp, int] = {}
        if terms:
            self._terms = {tuple(k): int(c) for k, c in terms.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exp, int]) -> LaurentPoly:
        # caller guarantees no zero coefficients and no aliasing
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls._raw({(0, 0, 0): int(c)} if c else {})

    @classmethod
    def monomial(cls, c: int = 1, ex: int = 0, ev: int = 0, es: int = 0) -> LaurentPoly:
        return cls._raw({(ex, ev, es): int(c)} if c else {})

    @classmethod
    def coerce(cls, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return cls.const(other)
        raise TypeError(f"cannot coerce {type(other).__name__} to LaurentPoly")

    # -- inspection -------------------------------------------------------
    @property
    def terms(self) -> dict[Exp, int]:
        return dict(self._terms)

    def items(self):
        """Terms in canonical (lexicographic exponent) order."""
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {(0, 0, 0): 1}

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0, 0, 0)}

    def constant_term(self) -> int:
        return self._terms.get((0, 0, 0), 0)

    def __len__(self):
        return len(self._terms)

    def content(self) -> int:
        g = 0
        for c in self._terms.values():
            g = gcd(g, c)
        return g

    def min_exponents(self) -> Exp:
        ks = self._terms.keys()
        return (min(k[0] for k in ks), min(k[1] for k in ks), min(k[2] for k in ks))

    def leading(self) -> tuple[Exp, int]:
        k = max(self._terms)
        return k, self._terms[k]

    def degree_span(self, var: str) -> tuple[int, int]:
        i = VARS.index(var)
        es = [k[i] for k in self._terms]
        return min(es), max(es)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, (LaurentPoly, int)):
            return NotImplemented
        other = LaurentPoly.coerce(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            t = out.get(k, 0) + c
            if t:
                out[k] = t
            else:
                out.pop(k, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (LaurentPoly, int)):
            return NotImplemented
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other):
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[Exp, int] = {}
        get = out.get
        for kb, cb in b.items():
            bx, bv, bs = kb
            for (ax, av, as_), ca in a.items():
                k = (ax + bx, av + bv, as_ + bs)
                out[k] = get(k, 0) + ca * cb
        return LaurentPoly._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial")
            (k, c), = self._terms.items()
            if abs(c) != 1:
                raise ValueError("negative power of a non-unit monomial")
            return LaurentPoly.monomial(c ** (-n), *(n * e for e in k))
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, e: Exp) -> LaurentPoly:
        """Multiply by the monomial x^e0 v^e1 s^e2."""
        return LaurentPoly._raw({_add_exp(k, e): c for k, c in self._terms.items()})

    def exact_div(self, other: LaurentPoly) -> LaurentPoly | None:
        """Return q with self == q*other in the Laurent ring, or None."""
        other = LaurentPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self
        if other.is_monomial():
            (k, c), = other._terms.items()
            out = {}
            for kk, cc in self._terms.items():
                if cc % c:
                    return None
                out[(kk[0] - k[0], kk[1] - k[1], kk[2] - k[2])] = cc // c
            return LaurentPoly._raw(out)
        mp, mq = self.min_exponents(), other.min_exponents()
        neg = lambda e: (-e[0], -e[1], -e[2])  # noqa: E731
        rem = self.shift(neg(mp))._terms
        q0 = other.shift(neg(mq))._terms
        rem = dict(rem)
        lq = max(q0)
        cq = q0[lq]
        quot: dict[Exp, int] = {}
        # per-variable degree bound for the quotient
        bound = tuple(max(k[i] for k in rem) - lq[i] for i in range(3))
        while rem:
            lt = max(rem)
            m = (lt[0] - lq[0], lt[1] - lq[1], lt[2] - lq[2])
            if m[0] < 0 or m[1] < 0 or m[2] < 0 or any(m[i] > bound[i] for i in range(3)):
                return None
            c = rem[lt]
            if c % cq:
                return None
            t = c // cq
            quot[m] = t
            for k, cc in q0.items():
                kk = (k[0] + m[0], k[1] + m[1], k[2] + m[2])
                v = rem.get(kk, 0) - t * cc
                if v:
                    rem[kk] = v
                else:
                    rem.pop(kk, None)
        shift = (mp[0] - mq[0], mp[1] - mq[1], mp[2] - mq[2])
        return LaurentPoly._raw(quot).shift(shift)

    def invert_vars(self, which: Iterable[str]) -> LaurentPoly:
        """Substitute var -> var^-1 for each named variable."""
        idx = [VARS.index(w) for w in which]
        out = {}
        for k, c in self._terms.items():
            kk = list(k)
            for i in idx:
                kk[i] = -kk[i]
            out[tuple(kk)] = c
        return LaurentPoly._raw(out)

    def evaluate(self, x, v, s) -> Fraction:
        pt = (Fraction(x), Fraction(v), Fraction(s))
        total = Fraction(0)
        for k, c in self._terms.items():
            total += c * pt[0] ** k[0] * pt[1] ** k[1] * pt[2] ** k[2]
        return total

    def eval_mod(self, point: tuple[int, int, int], p: int) -> int:
        total = 0
        for k, c in self._terms.items():
            total += c * pow(point[0], k[0], p) * pow(point[1], k[1], p) * pow(point[2], k[2], p)
        return total % p

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if isinstance(other, RationalFunction):
            return other == self
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- text -------------------------------------------------------------
    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k, c in self.items():
            mono = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in zip(VARS, k) if e
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    def to_json(self) -> dict:
        return {"terms": [[k[0], k[1], k[2], str(c)] for k, c in self.items()]}

    @classmethod
    def from_json(cls, data: dict) -> LaurentPoly:
        return cls({(int(a), int(b), int(c)): int(coef) for a, b, c, coef in data["terms"]})


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
X = LaurentPoly.monomial(1, 1, 0, 0)
V = LaurentPoly.monomial(1, 0, 1, 0)
S = LaurentPoly.monomial(1, 0, 0, 1)


def s_diff() -> LaurentPoly:
    """s - s^-1."""
    return S - S ** -1


Scalar = Union["RationalFunction", LaurentPoly, int]


def _probe_point():
    return (1000003, 7919, 104729)


_HASH_PRIME = 2305843009213693951  # 2**61 - 1


class RationalFunction:
    """Quotient num/den of Laurent polynomials, immutable.

    Construction strips a monomial and the common integer content from the
    denominator and normalizes its leading sign; if the numerator is an exact
    multiple of the denominator the result is stored as a polynomial.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly | int, den: LaurentPoly | int = 1, _normalized=False):
        num = LaurentPoly.coerce(num)
        den = LaurentPoly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _normalized:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    @classmethod
    def coerce(cls, other) -> RationalFunction:
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (LaurentPoly, int)):
            return cls(LaurentPoly.coerce(other), ONE, _normalized=True)
        raise TypeError(f"cannot coerce {type(other).__name__} to RationalFunction")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def as_poly(self) -> LaurentPoly:
        if not self.den.is_one():
            q = self.num.exact_div(self.den)
            if q is None:
                raise ValueError(f"{self} is not a Laurent polynomial")
            return q
        return self.num

    def __add__(self, other):
        if not isinstance(other, (RationalFunction, LaurentPoly, int)):
            return NotImplemented
        o = RationalFunction.coerce(other)
        if self.num.is_zero():
            return o
        if o.num.is_zero():
            return self
        a, b, c, d = self.num, self.den, o.num, o.den
        if b == d:
            return RationalFunction(a + c, b)
        q = b.exact_div(d)
        if q is not None:
            return RationalFunction(a + c * q, b)
        q = d.exact_div(b)
        if q is not None:
            return RationalFunction(a * q + c, d)
        return RationalFunction(a * d + c * b, b * d)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _normalized=True)

    def __sub__(self, other):
        if not isinstance(other, (RationalFunction, LaurentPoly, int)):
            return NotImplemented
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other):
        return RationalFunction.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, (RationalFunction, LaurentPoly, int)):
            return NotImplemented
        o = RationalFunction.coerce(other)
        a, b, c, d = self.num, self.den, o.num, o.den
        if a.is_zero() or c.is_zero():
            return RationalFunction(ZERO, ONE, _normalized=True)
        if not d.is_one():
            q = a.exact_div(d)
            if q is not None:
                a, d = q, ONE
        if not b.is_one():
            q = c.exact_div(b)
            if q is not None:
                c, b = q, ONE
        return RationalFunction(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        if not isinstance(other, (RationalFunction, LaurentPoly, int)):
            return NotImplemented
        o = RationalFunction.coerce(other)
        if o.is_zero():
            raise ZeroDivisionError("division by zero")
        return self * o.inverse()

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.num ** n, self.den ** n)

    def cancel(self, candidates: Iterable[LaurentPoly]) -> RationalFunction:
        """Divide out each candidate while it divides both numerator and denominator."""
        num, den = self.num, self.den
        for f in candidates:
            f = LaurentPoly.coerce(f)
            if f.is_zero() or f.is_monomial():
                continue
            while True:
                qn, qd = num.exact_div(f), den.exact_div(f)
                if qn is None or qd is None:
                    break
                num, den = qn, qd
        return RationalFunction(num, den)

    def invert_vars(self, which) -> RationalFunction:
        return RationalFunction(self.num.invert_vars(which), self.den.invert_vars(which))

    def evaluate(self, x, v, s) -> Fraction:
        d = self.den.evaluate(x, v, s)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at evaluation point")
        return self.num.evaluate(x, v, s) / d

    def __eq__(self, other):
        if not isinstance(other, (RationalFunction, LaurentPoly, int)):
            return NotImplemented
        o = RationalFunction.coerce(other)
        if self.den == o.den:
            return self.num == o.num
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        # value at a fixed point modulo a prime is invariant under equality
        p = _HASH_PRIME
        pt = _probe_point()
        d = self.den.eval_mod(pt, p)
        if d == 0:
            return 0
        return hash(self.num.eval_mod(pt, p) * pow(d, -1, p) % p)

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalFunction({str(self)!r})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> RationalFunction:
        return cls(LaurentPoly.from_json(data["num"]), LaurentPoly.from_json(data["den"]))


def _normalize(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    if num.is_zero():
        return ZERO, ONE
    m = den.min_exponents()
    if m != (0, 0, 0):
        neg = (-m[0], -m[1], -m[2])
        den = den.shift(neg)
        num = num.shift(neg)
    if den.leading()[1] < 0:
        num, den = -num, -den
    g = gcd(num.content(), den.content())
    if g > 1:
        num = LaurentPoly._raw({k: c // g for k, c in num._terms.items()})
        den = LaurentPoly._raw({k: c // g for k, c in den._terms.items()})
    if den.is_one():
        return num, den
    q = num.exact_div(den)
    if q is not None:
        return q, ONE
    return num, den


def quantum_integer(n: int) -> LaurentPoly:
    """[n] = s^{n-1} + s^{n-3} + ... + s^{1-n}."""
    if n < 1:
        raise ValueError(f"quantum integer needs n >= 1, got {n}")
    return LaurentPoly({(0, 0, e): 1 for e in range(1 - n, n, 2)})


def quantum_factorial(n: int) -> LaurentPoly:
    if n < 0:
        raise ValueError("negative factorial")
    out = ONE
    for j in range(1, n + 1):
        out = out * quantum_integer(j)
    return out


def delta() -> RationalFunction:
    """Value of a split unknot, (v^-1 - v)/(s - s^-1)."""
    return RationalFunction(V ** -1 - V, s_diff())


# ---------------------------------------------------------------------------
# localization certificates

class CertificationError(ValueError):
    pass


@dataclass(frozen=True)
class Factor:
    """A tagged generator of one of the localizing monoids."""
    tag: str
    params: tuple
    poly: LaurentPoly
    note: str = ""

    def __str__(self):
        p = ",".join(map(str, self.params))
        return f"{self.tag}({p})" if p else self.tag


def factor_variable(name: str) -> Factor:
    return Factor(name, (), {"x": X, "v": V, "s": S}[name])


def factor_unit(sign: int = -1) -> Factor:
    if sign not in (1, -1):
        raise ValueError("integer units are +-1")
    return Factor("unit", (sign,), LaurentPoly.const(sign))


def factor_s2n_minus_1(n: int) -> Factor:
    return Factor("s2n-1", (n,), S ** (2 * n) - 1)


def factor_v4_minus_s2n(n: int) -> Factor:
    # the range of n for this generator is not pinned down; any integer is accepted
    return Factor("v4-s2n", (n,), V ** 4 - S ** (2 * n), note="n range unspecified; any integer accepted")


def _allowed(f: Factor, monoid: str, r: int | None) -> bool:
    base = {"x", "v", "s", "unit"}
    if f.tag in base:
        return True
    if f.tag == "s2n-1":
        return f.params[0] > 0
    if monoid in ("I", "I'") and f.tag == "c":
        lam, mu = f.params
        return sum(lam) == sum(mu) and sum(mu) != 0
    if monoid == "I'" and f.tag == "v4-s2n":
        return True
    if monoid == "I_r" and f.tag == "obstruction":
        rr, lam, mu = f.params
        return rr == r and sum(lam) - sum(mu) == r and (sum(lam) or sum(mu))
    return False


@dataclass(frozen=True)
class MonoidCertificate:
    """Witness that ``target`` lies in the localization at ``monoid``.

    ``target * prod(factor polys)`` is checked to be a Laurent polynomial.
    """
    target: RationalFunction
    monoid: str
    factors: tuple[Factor, ...]
    r: int | None = None
    notes: tuple[str, ...] = field(default=())

    def product(self) -> LaurentPoly:
        out = ONE
        for f in self.factors:
            out = out * f.poly
        return out

    def verify(self) -> bool:
        if not all(_allowed(f, self.monoid, self.r) for f in self.factors):
            return False
        return (self.target.num * self.product()).exact_div(self.target.den) is not None

    def to_json(self) -> dict:
        return {
            "target": str(self.target),
            "monoid": self.monoid if self.monoid != "I_r" else f"I_{self.r}",
            "factors": [str(f) for f in self.factors],
            "verified": self.verify(),
            "notes": list(self.notes),
        }


def certify_membership(f: Scalar, monoid: str, provenance: Iterable[Factor], r: int | None = None) -> MonoidCertificate:
    """Build and check a certificate from construction-time factor tags.

    ``monoid`` is one of ``"I"``, ``"I'"`` or ``"I_r"`` (the latter needs
    ``r``).  Raises CertificationError if a tag is not a generator of the
    monoid or the product does not clear the denominator.
    """
    if monoid not in ("I", "I'", "I_r"):
        raise ValueError(f"unknown monoid {monoid!r}")
    if monoid == "I_r" and r is None:
        raise ValueError("I_r needs r")
    f = RationalFunction.coerce(f)
    factors = tuple(provenance)
    for fac in factors:
        if not _allowed(fac, monoid, r):
            raise CertificationError(f"{fac} is not a generator of {monoid}")
    notes = tuple(sorted({fac.note for fac in factors if fac.note}))
    cert = MonoidCertificate(f, monoid, factors, r, notes)
    if not cert.verify():
        raise CertificationError(f"factors {[str(x) for x in factors]} do not clear the denominator of {f}")
    return cert


# ---------------------------------------------------------------------------
# text parsing

_TERM = re.compile(r"^(\d+)?\*?((?:[xvs](?:\^-?\d+)?\*?)*)$")
_FACTOR = re.compile(r"([xvs])(?:\^(-?\d+))?")


def parse_poly(text: str) -> LaurentPoly:
    """Parse the canonical text form, e.g. ``-x^2*s^-1 + 3*v - 1``."""
    t = text.replace(" ", "")
    if t in ("", "0"):
        return ZERO
    # split at +/- that are not exponent signs
    pieces = re.split(r"(?<!\^)(?=[+-])", t)
    out = ZERO
    for piece in pieces:
        if not piece:
            continue
        sign = 1
        if piece[0] in "+-":
            sign = -1 if piece[0] == "-" else 1
            piece = piece[1:]
        m = _TERM.match(piece)
        if not m or not piece:
            raise ValueError(f"cannot parse term {piece!r} in {text!r}")
        coef = int(m.group(1)) if m.group(1) else 1
        exps = [0, 0, 0]
        for name, e in _FACTOR.findall(m.group(2) or ""):
            exps[VARS.index(name)] += int(e) if e else 1
        out = out + LaurentPoly.monomial(sign * coef, *exps)
    return out


def parse_rational(text: str) -> RationalFunction:
    t = text.strip()
    m = re.fullmatch(r"\((.*)\)\s*/\s*\((.*)\)", t)
    if m:
        return RationalFunction(parse_poly(m.group(1)), parse_poly(m.group(2)))
    return RationalFunction.coerce(parse_poly(t))
