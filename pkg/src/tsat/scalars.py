"""Exact scalars: rationals, polynomials in t, and rational functions in t.

A :class:`TRat` is stored in valuation form ``t^v * num / den`` with
``num(0) != 0`` and ``den(0) == 1``, so the t-adic valuation is read off
directly and membership in the local ring Q[t]_(t) is the test ``v >= 0``.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence, Union

import gmpy2

Rat = gmpy2.mpq
TPoly = tuple  # ascending coefficients, highest coefficient nonzero; () is zero

ZERO = Rat(0)
ONE = Rat(1)


def rat(x) -> Rat:
    if isinstance(x, str):
        return Rat(x.strip())
    return Rat(x)


# ---------------------------------------------------------------------------
# dense polynomials in t over Q


def tp(coeffs: Iterable) -> TPoly:
    c = [Rat(x) for x in coeffs]
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def tp_add(a: TPoly, b: TPoly) -> TPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    while out and not out[-1]:
        out.pop()
    return tuple(out)


def tp_neg(a: TPoly) -> TPoly:
    return tuple(-x for x in a)


def tp_sub(a: TPoly, b: TPoly) -> TPoly:
    return tp_add(a, tp_neg(b))


def tp_mul(a: TPoly, b: TPoly) -> TPoly:
    if not a or not b:
        return ()
    if len(b) == 1:
        c = b[0]
        return tuple(x * c for x in a)
    if len(a) == 1:
        c = a[0]
        return tuple(x * c for x in b)
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def tp_scale(a: TPoly, c) -> TPoly:
    if not c:
        return ()
    return tuple(x * c for x in a)


def tp_shift(a: TPoly, k: int) -> TPoly:
    """Multiply by t^k (k >= 0)."""
    if not a:
        return ()
    return (ZERO,) * k + a


def tp_val(a: TPoly) -> int:
    for i, x in enumerate(a):
        if x:
            return i
    raise ValueError("valuation of the zero polynomial")


def tp_divmod(a: TPoly, b: TPoly) -> tuple[TPoly, TPoly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return (), a
    r = list(a)
    lb = b[-1]
    q = [ZERO] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = r[i + len(b) - 1] / lb
        q[i] = c
        if c:
            for j, y in enumerate(b):
                r[i + j] -= c * y
    return tp(q), tp(r[: len(b) - 1])


def tp_monic(a: TPoly) -> TPoly:
    if not a:
        return a
    c = a[-1]
    if c == 1:
        return a
    return tuple(x / c for x in a)


def tp_gcd(a: TPoly, b: TPoly) -> TPoly:
    """Monic gcd."""
    while b:
        a, b = b, tp_divmod(a, b)[1]
    return tp_monic(a)


def tp_eval(a: TPoly, x) -> Rat:
    acc = ZERO
    for c in reversed(a):
        acc = acc * x + c
    return acc


def tp_str(a: TPoly) -> str:
    """Ascending-order text, e.g. ``1 - t + 3/2*t^2``."""
    if not a:
        return "0"
    parts = []
    for i, c in enumerate(a):
        if not c:
            continue
        mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


# ---------------------------------------------------------------------------
# rational functions in t


Scalar = Union["TRat", Rat, int]


class TRat:
    """Element ``t^v * num/den`` of Q(t) in canonical valuation form."""

    __slots__ = ("v", "num", "den", "_hash")

    def __init__(self, v, num: TPoly, den: TPoly = (ONE,), _canonical: bool = False):
        if _canonical:
            self.v, self.num, self.den = v, num, den
        else:
            self.v, self.num, self.den = _normalize(v, tp(num), tp(den))
        self._hash = None

    # constructors -------------------------------------------------------
    @classmethod
    def from_rat(cls, c) -> "TRat":
        c = Rat(c)
        if not c:
            return TZERO
        return cls(0, (c,), (ONE,), _canonical=True)

    @classmethod
    def from_tpoly(cls, a: TPoly) -> "TRat":
        a = tp(a)
        if not a:
            return TZERO
        k = tp_val(a)
        return cls(k, a[k:], (ONE,), _canonical=True)

    @classmethod
    def t_power(cls, k: int) -> "TRat":
        return cls(k, (ONE,), (ONE,), _canonical=True)

    # predicates ---------------------------------------------------------
    def __bool__(self) -> bool:
        return self.v != math.inf

    def is_regular(self) -> bool:
        return self.v >= 0

    def is_unit(self) -> bool:
        """Unit of the local ring Q[t]_(t)."""
        return self.v == 0

    def is_constant(self) -> bool:
        return not self or (self.v == 0 and len(self.num) == 1 and len(self.den) == 1)

    def is_tpoly(self) -> bool:
        return not self or (self.v >= 0 and len(self.den) == 1)

    # conversions --------------------------------------------------------
    def at_zero(self) -> Rat:
        """Substitute t = 0; the scalar must be regular."""
        if not self:
            return ZERO
        if self.v < 0:
            raise ValueError(f"{self} is not regular at t = 0")
        if self.v > 0:
            return ZERO
        return self.num[0]

    def constant(self) -> Rat:
        if not self.is_constant():
            raise ValueError(f"{self} is not a rational constant")
        return self.num[0] if self else ZERO

    def to_tpoly(self) -> TPoly:
        if not self.is_tpoly():
            raise ValueError(f"{self} is not a polynomial in t")
        if not self:
            return ()
        return tp_shift(self.num, self.v)

    def unit_part(self) -> "TRat":
        if not self:
            raise ZeroDivisionError("zero has no unit part")
        return TRat(0, self.num, self.den, _canonical=True)

    def shift(self, k: int) -> "TRat":
        """Multiply by t^k."""
        if not self or not k:
            return self
        return TRat(self.v + k, self.num, self.den, _canonical=True)

    def series(self, n: int) -> list:
        """Coefficients of t^0 .. t^(n-1) of the power series; needs v >= 0."""
        if not self:
            return [ZERO] * n
        if self.v < 0:
            raise ValueError(f"{self} has a pole at t = 0")
        out = [ZERO] * n
        m = n - self.v
        if m <= 0:
            return out
        num, den = self.num, self.den
        s = [ZERO] * m
        for i in range(m):
            acc = num[i] if i < len(num) else ZERO
            for j in range(1, min(i, len(den) - 1) + 1):
                acc -= den[j] * s[i - j]
            s[i] = acc  # den[0] == 1
        out[self.v:] = s
        return out

    # arithmetic ---------------------------------------------------------
    def __neg__(self) -> "TRat":
        if not self:
            return self
        return TRat(self.v, tp_neg(self.num), self.den, _canonical=True)

    def __add__(self, other) -> "TRat":
        other = as_trat(other)
        if other is NotImplemented:
            return other
        if not self:
            return other
        if not other:
            return self
        a, b = self, other
        if a.v > b.v:
            a, b = b, a
        k = b.v - a.v
        if len(a.den) == 1 and len(b.den) == 1:
            s = tp_add(a.num, tp_shift(b.num, k))
            if not s:
                return TZERO
            w = tp_val(s)
            return TRat(a.v + w, s[w:], (ONE,), _canonical=True)
        if a.den == b.den:
            s = tp_add(a.num, tp_shift(b.num, k))
            den = a.den
        else:
            s = tp_add(tp_mul(a.num, b.den), tp_shift(tp_mul(b.num, a.den), k))
            den = tp_mul(a.den, b.den)
        if not s:
            return TZERO
        return TRat(a.v, s, den)

    __radd__ = __add__

    def __sub__(self, other) -> "TRat":
        other = as_trat(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "TRat":
        return as_trat(other) + (-self)

    def __mul__(self, other) -> "TRat":
        other = as_trat(other)
        if other is NotImplemented:
            return other
        if not self or not other:
            return TZERO
        if len(self.den) == 1 and len(other.den) == 1:
            return TRat(self.v + other.v, tp_mul(self.num, other.num), (ONE,), _canonical=True)
        # cross-cancel; both inputs are already reduced
        g1 = tp_gcd(self.num, other.den)
        g2 = tp_gcd(other.num, self.den)
        n1, d2 = _exact_div(self.num, g1), _exact_div(other.den, g1)
        n2, d1 = _exact_div(other.num, g2), _exact_div(self.den, g2)
        num = tp_mul(n1, n2)
        den = tp_mul(d1, d2)
        c = den[0]
        if c != 1:
            num, den = tp_scale(num, 1 / c), tp_scale(den, 1 / c)
        return TRat(self.v + other.v, num, den, _canonical=True)

    __rmul__ = __mul__

    def inverse(self) -> "TRat":
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(t)")
        c = self.num[0]
        return TRat(-self.v, tp_scale(self.den, 1 / c), tp_scale(self.num, 1 / c), _canonical=True)

    def __truediv__(self, other) -> "TRat":
        other = as_trat(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other) -> "TRat":
        return as_trat(other) * self.inverse()

    def __pow__(self, k: int) -> "TRat":
        if k < 0:
            return self.inverse() ** (-k)
        out = TONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # comparison / hashing ----------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, TRat):
            return self.v == other.v and self.num == other.num and self.den == other.den
        o = as_trat(other)
        if o is NotImplemented:
            return NotImplemented
        return self == o

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.v, self.num, self.den))
        return self._hash

    # text -----------------------------------------------------------------
    def numerator_tpoly(self) -> TPoly:
        return tp_shift(self.num, self.v) if self.v >= 0 else self.num

    def denominator_tpoly(self) -> TPoly:
        return self.den if self.v >= 0 else tp_shift(self.den, -self.v)

    def __str__(self) -> str:
        if not self:
            return "0"
        n = tp_str(self.numerator_tpoly())
        d = self.denominator_tpoly()
        if d == (ONE,):
            return n
        dn = tp_str(d)
        if len(self.numerator_tpoly()) > 1 and sum(1 for c in self.numerator_tpoly() if c) > 1:
            n = f"({n})"
        if sum(1 for c in d if c) > 1 or (len(d) == 1 and not _is_int(d[0])):
            dn = f"({dn})"
        return f"{n}/{dn}"

    def __repr__(self) -> str:
        return f"TRat({self})"


def _is_int(c: Rat) -> bool:
    return c.denominator == 1


def _exact_div(a: TPoly, b: TPoly) -> TPoly:
    if b == (ONE,):
        return a
    q, r = tp_divmod(a, b)
    assert not r
    return q


def _normalize(v, num: TPoly, den: TPoly):
    if not den:
        raise ZeroDivisionError("zero denominator in Q(t)")
    if not num:
        return math.inf, (), (ONE,)
    kn, kd = tp_val(num), tp_val(den)
    num, den = num[kn:], den[kd:]
    v = v + kn - kd
    if len(den) > 1 and len(num) > 1:
        g = tp_gcd(num, den)
        if len(g) > 1:
            num, den = _exact_div(num, g), _exact_div(den, g)
    c = den[0]
    if c != 1:
        inv = 1 / c
        num, den = tp_scale(num, inv), tp_scale(den, inv)
    return v, num, den


def trat_normalize(num: TPoly, den: TPoly) -> TRat:
    return TRat(0, num, den)


def as_trat(x):
    if isinstance(x, TRat):
        return x
    if isinstance(x, (int, type(ZERO), type(gmpy2.mpz(0)))):
        return TRat.from_rat(x)
    try:
        from fractions import Fraction

        if isinstance(x, Fraction):
            return TRat.from_rat(Rat(x.numerator, x.denominator))
    except ImportError:  # pragma: no cover
        pass
    return NotImplemented


def is_regular(a: TRat) -> bool:
    return a.is_regular()


def reduce_mod_t(a: TRat) -> Rat:
    return a.at_zero()


def valuation(a: Scalar):
    """t-adic valuation; ``math.inf`` for zero."""
    if isinstance(a, TRat):
        return a.v
    return math.inf if not a else 0


TZERO = TRat(math.inf, (), (ONE,), _canonical=True)
TONE = TRat(0, (ONE,), (ONE,), _canonical=True)
T = TRat(1, (ONE,), (ONE,), _canonical=True)


def tpoly_lcm(polys: Sequence[TPoly]) -> TPoly:
    out: TPoly = (ONE,)
    for p in polys:
        if len(p) > 1:
            g = tp_gcd(out, p)
            out = tp_mul(out, _exact_div(tp_monic(p), g))
    return out
