"""
The Hecke algebra H_n of type A in the positive permutation braid basis.

Generators are the positive crossings sigma_1 .. sigma_{n-1} and satisfy
sigma^2 = x(s - s^-1) sigma + x^2.  A basis element T_pi is indexed by a
permutation in one-line notation on 1..n; a reduced word i_1 ... i_k gives
T_pi = T_{i_1} ... T_{i_k} with pi = s_{i_1} o ... o s_{i_k}.

Elements keep one shared denominator (a tuple of Laurent factors) and
Laurent-polynomial numerators, so products never touch fractions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _perms
from typing import Iterable, Mapping

from .coeff import ONE, V, X, LaurentPoly, RationalFunction, delta, s_diff

__all__ = [
    "Perm", "identity", "length", "compose", "inverse_perm", "reduced_word",
    "all_perms", "HeckeElement", "generator", "generator_inverse", "basis_element",
    "basis_inverse", "BraidWord", "evaluate_braid", "embed", "partial_closure",
    "markov_trace", "framing_factor", "quadratic_coeff", "one",
]

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def length(p: Perm) -> int:
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def compose(a: Perm, b: Perm) -> Perm:
    """(a o b)(k) = a(b(k))."""
    return tuple(a[k - 1] for k in b)


def inverse_perm(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p, 1):
        out[v - 1] = i
    return tuple(out)


@lru_cache(maxsize=None)
def reduced_word(p: Perm) -> tuple[int, ...]:
    """A reduced word, found by peeling right descents."""
    p = list(p)
    word = []
    while True:
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                word.append(i + 1)
                break
        else:
            break
    return tuple(reversed(word))


@lru_cache(maxsize=None)
def all_perms(n: int) -> tuple[Perm, ...]:
    return tuple(sorted(_perms(range(1, n + 1))))


def quadratic_coeff() -> LaurentPoly:
    """x(s - s^-1)."""
    return X * s_diff()


def framing_factor() -> LaurentPoly:
    """x v^-1, the value of a positive kink."""
    return X * V ** -1


_Q = quadratic_coeff()
_X2 = X * X


def _left_gen(i: int, nums: Mapping[Perm, LaurentPoly]) -> dict[Perm, LaurentPoly]:
    """Numerators of T_i * (sum nums[p] T_p)."""
    out: dict[Perm, LaurentPoly] = {}
    for p, c in nums.items():
        # s_i o p swaps the values i and i+1
        sp = tuple(i + 1 if a == i else i if a == i + 1 else a for a in p)
        if p.index(i) < p.index(i + 1):
            _acc(out, sp, c)
        else:
            _acc(out, p, _Q * c)
            _acc(out, sp, _X2 * c)
    return out


def _right_gen(nums: Mapping[Perm, LaurentPoly], i: int) -> dict[Perm, LaurentPoly]:
    """Numerators of (sum nums[p] T_p) * T_i."""
    out: dict[Perm, LaurentPoly] = {}
    for p, c in nums.items():
        ps = p[: i - 1] + (p[i], p[i - 1]) + p[i + 1:]
        if p[i - 1] < p[i]:
            _acc(out, ps, c)
        else:
            _acc(out, p, _Q * c)
            _acc(out, ps, _X2 * c)
    return out


def _acc(d: dict, key, val: LaurentPoly):
    cur = d.get(key)
    if cur is None:
        if val:
            d[key] = val
        return
    t = cur + val
    if t:
        d[key] = t
    else:
        del d[key]


def _merge_factors(a: tuple, b: tuple) -> tuple[tuple, list, list]:
    """Multiset lcm of two factor tuples plus the missing factors of each side."""
    remaining = list(b)
    missing_from_b = []
    for f in a:
        for k, g in enumerate(remaining):
            if g == f:
                del remaining[k]
                break
        else:
            missing_from_b.append(f)
    merged = tuple(a) + tuple(remaining)
    return merged, remaining, missing_from_b


def _prod(fs: Iterable[LaurentPoly]) -> LaurentPoly:
    out = ONE
    for f in fs:
        out = out * f
    return out


class HeckeElement:
    """Element (1/den) * sum_pi nums[pi] T_pi of H_n, immutable."""

    __slots__ = ("n", "_nums", "_den")

    def __init__(self, n: int, coeffs: Mapping[Perm, object] | None = None):
        """Build from a map permutation -> scalar (int, LaurentPoly or RationalFunction)."""
        if n < 1:
            raise ValueError("need n >= 1")
        self.n = n
        den: tuple = ()
        rats = {}
        for p, c in (coeffs or {}).items():
            p = tuple(p)
            if sorted(p) != list(range(1, n + 1)):
                raise ValueError(f"{p} is not a permutation of 1..{n}")
            r = RationalFunction.coerce(c)
            if r.is_zero():
                continue
            rats[p] = r
            if not r.den.is_one():
                den, _, _ = _merge_factors(den, (r.den,))
        nums = {}
        for p, r in rats.items():
            others = list(den)
            if not r.den.is_one():
                for k, g in enumerate(others):
                    if g == r.den:
                        del others[k]
                        break
            nums[p] = r.num * _prod(others)
        self._nums = nums
        self._den = den
        self._cancel()

    @classmethod
    def _make(cls, n: int, nums: dict, den: tuple) -> HeckeElement:
        e = cls.__new__(cls)
        e.n = n
        e._nums = {p: c for p, c in nums.items() if c}
        e._den = tuple(den)
        e._cancel()
        return e

    def _cancel(self):
        if not self._nums:
            self._den = ()
            return
        keep = []
        nums = self._nums
        for f in self._den:
            divided = {}
            for p, c in nums.items():
                q = c.exact_div(f)
                if q is None:
                    break
                divided[p] = q
            else:
                nums = divided
                continue
            keep.append(f)
        self._nums = nums
        self._den = tuple(keep)

    # -- inspection -------------------------------------------------------
    @property
    def denominator(self) -> LaurentPoly:
        return _prod(self._den)

    def coeff(self, p: Perm) -> RationalFunction:
        c = self._nums.get(tuple(p))
        if c is None:
            return RationalFunction.coerce(0)
        return RationalFunction(c, self.denominator)

    def support(self) -> list[Perm]:
        return sorted(self._nums)

    def items(self):
        d = self.denominator
        return [(p, RationalFunction(self._nums[p], d)) for p in self.support()]

    def is_zero(self) -> bool:
        return not self._nums

    def __len__(self):
        return len(self._nums)

    # -- arithmetic -------------------------------------------------------
    def _check(self, other: HeckeElement):
        if not isinstance(other, HeckeElement):
            raise TypeError(f"expected HeckeElement, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"strand mismatch: H_{self.n} vs H_{other.n}")

    def _aligned(self, other: HeckeElement):
        den, miss_a, miss_b = _merge_factors(self._den, other._den)
        fa, fb = _prod(miss_a), _prod(miss_b)
        na = self._nums if fa.is_one() else {p: c * fa for p, c in self._nums.items()}
        nb = other._nums if fb.is_one() else {p: c * fb for p, c in other._nums.items()}
        return den, na, nb

    def __add__(self, other):
        if not isinstance(other, HeckeElement):
            return self + self.scalar(other)
        self._check(other)
        den, na, nb = self._aligned(other)
        out = dict(na)
        for p, c in nb.items():
            _acc(out, p, c)
        return HeckeElement._make(self.n, out, den)

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        return HeckeElement._make(self.n, {p: -c for p, c in self._nums.items()}, self._den)

    def __sub__(self, other):
        if not isinstance(other, HeckeElement):
            other = self.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scalar(self, c) -> HeckeElement:
        return HeckeElement(self.n, {identity(self.n): c})

    def scale(self, c) -> HeckeElement:
        r = RationalFunction.coerce(c)
        if r.is_zero():
            return HeckeElement(self.n)
        den = self._den if r.den.is_one() else self._den + (r.den,)
        return HeckeElement._make(self.n, {p: v * r.num for p, v in self._nums.items()}, den)

    def __mul__(self, other):
        if not isinstance(other, HeckeElement):
            return self.scale(other)
        self._check(other)
        if not self._nums or not other._nums:
            return HeckeElement(self.n)
        # W[p] = numerators of T_p * other, built along left descents
        memo: dict[Perm, dict] = {identity(self.n): other._nums}

        def times(p: Perm) -> dict:
            got = memo.get(p)
            if got is not None:
                return got
            for i in range(1, self.n):
                if p.index(i) > p.index(i + 1):
                    shorter = tuple(i + 1 if a == i else i if a == i + 1 else a for a in p)
                    res = _left_gen(i, times(shorter))
                    memo[p] = res
                    return res
            raise AssertionError("unreachable")

        out: dict[Perm, LaurentPoly] = {}
        for p in sorted(self._nums, key=length):
            a = self._nums[p]
            for q, c in times(p).items():
                _acc(out, q, a * c)
        return HeckeElement._make(self.n, out, self._den + other._den)

    def __rmul__(self, other):
        return self.scale(other)

    def left_generator(self, i: int) -> HeckeElement:
        _check_index(i, self.n)
        return HeckeElement._make(self.n, _left_gen(i, self._nums), self._den)

    def right_generator(self, i: int) -> HeckeElement:
        _check_index(i, self.n)
        return HeckeElement._make(self.n, _right_gen(self._nums, i), self._den)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("use explicit inverses")
        out = one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            if isinstance(other, (int, LaurentPoly, RationalFunction)):
                return self == self.scalar(other)
            return NotImplemented
        if self.n != other.n:
            return False
        if self._den == other._den:
            return self._nums == other._nums
        return (self - other).is_zero()

    __hash__ = None

    def proportional_to(self, other: HeckeElement) -> RationalFunction | None:
        """Scalar k with self == k*other, or None."""
        self._check(other)
        if other.is_zero():
            return RationalFunction.coerce(0) if self.is_zero() else None
        p = min(other.support())
        k = self.coeff(p) / other.coeff(p)
        return k if self == other.scale(k) else None

    def __str__(self):
        if not self._nums:
            return "0"
        terms = " + ".join(f"({c})*[{' '.join(map(str, p))}]" for p, c in
                           ((p, self._nums[p]) for p in self.support()))
        if self._den:
            return f"({terms}) / ({self.denominator})"
        return terms

    def __repr__(self):
        return f"HeckeElement(n={self.n}, terms={len(self._nums)})"

    def to_json(self) -> dict:
        return {"n": self.n, "terms": [{"perm": list(p), "coeff": str(c)} for p, c in self.items()]}


def _check_index(i: int, n: int):
    if not 1 <= i <= n - 1:
        raise IndexError(f"generator index {i} out of range for H_{n}")


def one(n: int) -> HeckeElement:
    return HeckeElement(n, {identity(n): 1})


def basis_element(p: Perm) -> HeckeElement:
    return HeckeElement(len(p), {tuple(p): 1})


def generator(i: int, n: int) -> HeckeElement:
    _check_index(i, n)
    p = list(identity(n))
    p[i - 1], p[i] = p[i], p[i - 1]
    return basis_element(tuple(p))


def generator_inverse(i: int, n: int) -> HeckeElement:
    """x^-2 sigma_i - x^-1 (s - s^-1)."""
    _check_index(i, n)
    return generator(i, n).scale(X ** -2) - one(n).scale(X ** -1 * s_diff())


def basis_inverse(p: Perm) -> HeckeElement:
    """Inverse of T_p in H_n."""
    n = len(p)
    out = one(n)
    for i in reduced_word(tuple(p)):
        out = generator_inverse(i, n) * out
    return out


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one strand")
        for a in self.letters:
            if a == 0 or abs(a) >= self.n:
                raise ValueError(f"letter {a} out of range for {self.n} strands")
        object.__setattr__(self, "letters", tuple(self.letters))

    @classmethod
    def parse(cls, text: str) -> BraidWord:
        """Parse ``n=3 s1 s2^-1 s1``."""
        toks = text.split()
        if not toks or not toks[0].startswith("n="):
            raise ValueError(f"braid word must start with n=<strands>: {text!r}")
        n = int(toks[0][2:])
        letters = []
        for t in toks[1:]:
            m = re.fullmatch(r"s(\d+)(?:\^(-?\d+))?", t)
            if not m:
                raise ValueError(f"bad braid token {t!r}")
            i, e = int(m.group(1)), int(m.group(2) or 1)
            letters.extend([i if e > 0 else -i] * abs(e))
        return cls(n, tuple(letters))

    def __str__(self):
        toks = [f"s{abs(a)}" + ("^-1" if a < 0 else "") for a in self.letters]
        return " ".join([f"n={self.n}"] + toks)

    def writhe(self) -> int:
        return sum(1 if a > 0 else -1 for a in self.letters)


def evaluate_braid(w: BraidWord) -> HeckeElement:
    out = one(w.n)
    for a in w.letters:
        out = out.right_generator(a) if a > 0 else out * generator_inverse(-a, w.n)
    return out


def embed(a: HeckeElement, n: int, offset: int = 0) -> HeckeElement:
    """Place H_k on strands offset+1 .. offset+k of H_n."""
    k = a.n
    if offset < 0 or offset + k > n:
        raise ValueError(f"cannot place {k} strands at offset {offset} in H_{n}")
    base = identity(n)

    def lift(p: Perm) -> Perm:
        return base[:offset] + tuple(offset + v for v in p) + base[offset + k:]

    return HeckeElement._make(n, {lift(p): c for p, c in a._nums.items()}, a._den)


def restrict_perm(p: Perm) -> Perm:
    assert p[-1] == len(p)
    return p[:-1]


@lru_cache(maxsize=None)
def _closure_of_basis(p: Perm) -> HeckeElement:
    """Partial closure of T_p, an element of H_{n-1}."""
    n = len(p)
    if p[-1] == n:
        return basis_element(p[:-1]).scale(delta())
    # move the value n to the last position by right multiplication
    pos = p.index(n) + 1
    q = list(p)
    for i in range(pos, n):
        q[i - 1], q[i] = q[i], q[i - 1]
    p1 = tuple(q)[:-1]
    # T_p = T_{p1} T_{n-1} T_{n-2} ... T_pos
    out = basis_element(p1)
    for i in range(n - 2, pos - 1, -1):
        out = out.right_generator(i)
    return out.scale(framing_factor())


def partial_closure(a: HeckeElement) -> HeckeElement:
    """Close the last strand: the Markov conditional expectation H_n -> H_{n-1}."""
    if a.n < 2:
        raise ValueError("partial closure needs at least 2 strands")
    out = HeckeElement(a.n - 1)
    for p, c in a._nums.items():
        term = _closure_of_basis(p).scale(c)
        out = out + term
    return out.scale(RationalFunction(ONE, a.denominator)) if a._den else out


@lru_cache(maxsize=None)
def _trace_of_basis(p: Perm) -> RationalFunction:
    n = len(p)
    if n == 1:
        return delta()
    red = _closure_of_basis(p)
    total = RationalFunction.coerce(0)
    for q, c in red.items():
        total = total + c * _trace_of_basis(q)
    return total


def markov_trace(a: HeckeElement) -> RationalFunction:
    """Framed invariant of the closure, normalized so the empty link is 1."""
    total = RationalFunction.coerce(0)
    for p, c in a._nums.items():
        total = total + _trace_of_basis(p) * c
    return total / a.denominator if a._den else total
