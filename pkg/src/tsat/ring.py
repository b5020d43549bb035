"""Sparse weighted-homogeneous polynomials over Q, Q(t) and Q[t]_(t).

Monomials are dense exponent tuples. Coefficients are ``mpq`` in a ``Q``
ring and :class:`~tsat.scalars.TRat` in ``Qt`` and ``DVR`` rings, so
Gröbner work over Q never pays for rational-function arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Mapping

from .scalars import ZERO, Rat, TRat, as_trat, T

Q, QT, DVR = "Q", "Qt", "DVR"
DOMAINS = (Q, QT, DVR)


class DomainError(ValueError):
    """A coefficient does not belong to the ring's coefficient domain."""


class RingMismatch(ValueError):
    pass


@dataclass(frozen=True)
class RingSpec:
    nvars: int
    weights: tuple = ()
    domain: str = Q

    def __post_init__(self):
        if self.nvars < 0:
            raise ValueError("nvars must be nonnegative")
        w = tuple(self.weights) if self.weights else (1,) * self.nvars
        if len(w) != self.nvars or any(int(x) != x or x <= 0 for x in w):
            raise ValueError(f"weights must be {self.nvars} positive integers, got {self.weights!r}")
        object.__setattr__(self, "weights", tuple(int(x) for x in w))
        if self.domain not in DOMAINS:
            raise ValueError(f"unknown coefficient domain {self.domain!r}")

    # ------------------------------------------------------------------
    @property
    def is_field(self) -> bool:
        return self.domain in (Q, QT)

    def with_domain(self, domain: str) -> "RingSpec":
        return RingSpec(self.nvars, self.weights, domain)

    def names(self) -> list[str]:
        return [f"x{i + 1}" for i in range(self.nvars)]

    def deg(self, e: tuple) -> int:
        return sum(w * a for w, a in zip(self.weights, e))

    def monomials(self, d: int) -> tuple:
        """All exponent tuples of weighted degree ``d``, in descending grevlex order."""
        return _monomials(self.weights, d)

    def zero_coeff(self):
        return ZERO if self.domain == Q else TRat.from_rat(0)

    def coerce(self, c):
        """Bring a scalar into this ring's coefficient domain, or raise DomainError."""
        if self.domain == Q:
            if isinstance(c, TRat):
                if not c.is_constant():
                    raise DomainError(f"coefficient {c} involves t but the ring is over Q")
                return c.constant()
            return Rat(c)
        c = as_trat(c)
        if c is NotImplemented:
            raise DomainError(f"cannot coerce {c!r}")
        if self.domain == DVR and not c.is_regular():
            raise DomainError(f"coefficient {c} has a pole at t = 0 (not in the DVR)")
        return c

    def var(self, i: int) -> "Poly":
        e = [0] * self.nvars
        e[i] = 1
        return Poly(self, {tuple(e): self.coerce(1)})

    def gens(self) -> list["Poly"]:
        return [self.var(i) for i in range(self.nvars)]

    def const(self, c) -> "Poly":
        return Poly(self, {(0,) * self.nvars: self.coerce(c)})

    def zero(self) -> "Poly":
        return Poly(self, {})

    def t(self) -> "Poly":
        if self.domain == Q:
            raise DomainError("t is not available over Q")
        return Poly(self, {(0,) * self.nvars: T})


@lru_cache(maxsize=None)
def _monomials(weights: tuple, d: int) -> tuple:
    n = len(weights)
    if d < 0:
        return ()
    out = []

    def rec(i, rem, acc):
        if i == n:
            if rem == 0:
                out.append(tuple(acc))
            return
        w = weights[i]
        for a in range(rem // w, -1, -1):
            acc.append(a)
            rec(i + 1, rem - a * w, acc)
            acc.pop()

    rec(0, d, [])
    order = MonomialOrder("grevlex")
    out.sort(key=lambda e: order.key(e, weights), reverse=True)
    return tuple(out)


# ---------------------------------------------------------------------------
# monomial orders


class MonomialOrder:
    """``grevlex`` (weighted), ``lex``, or ``elim`` (block order, first ``k`` vars eliminated).

    ``key(e, weights)`` returns a tuple; larger keys are larger monomials.
    """

    def __init__(self, kind: str = "grevlex", k: int = 0):
        if kind not in ("grevlex", "lex", "elim"):
            raise ValueError(f"unknown monomial order {kind!r}")
        self.kind = kind
        self.k = k if kind == "elim" else 0

    def key(self, e: tuple, weights: tuple):
        if self.kind == "lex":
            return e
        if self.kind == "grevlex":
            return _grevlex_key(e, weights)
        k = self.k
        return (_grevlex_key(e[:k], weights[:k]), _grevlex_key(e[k:], weights[k:]))

    def keyfunc(self, ring: RingSpec) -> Callable:
        w = ring.weights
        cache: dict = {}

        def key(e):
            r = cache.get(e)
            if r is None:
                r = cache[e] = self.key(e, w)
            return r

        return key

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (self.kind, self.k) == (other.kind, other.k)

    def __hash__(self):
        return hash((self.kind, self.k))

    def __repr__(self):
        return f"MonomialOrder({self.kind!r}, k={self.k})" if self.kind == "elim" else f"MonomialOrder({self.kind!r})"

    def __str__(self):
        return f"elim:{self.k}" if self.kind == "elim" else self.kind


def _grevlex_key(e, weights):
    return (sum(w * a for w, a in zip(weights, e)), tuple(-a for a in reversed(e)))


GREVLEX = MonomialOrder("grevlex")


# ---------------------------------------------------------------------------
# polynomials


class Poly:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms", "degree", "homogeneous", "_hash")

    def __init__(self, ring: RingSpec, terms: Mapping, check: bool = True):
        self.ring = ring
        if check:
            clean = {}
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != ring.nvars or any(a < 0 for a in e):
                    raise ValueError(f"bad exponent {e} for a ring with {ring.nvars} variables")
                c = ring.coerce(c)
                if c:
                    clean[e] = c
            terms = clean
        self.terms = terms
        degs = {ring.deg(e) for e in terms}
        self.homogeneous = len(degs) <= 1
        self.degree = degs.pop() if len(degs) == 1 else None
        self._hash = None

    # basic queries ------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def support(self) -> set:
        return {i for e in self.terms for i, a in enumerate(e) if a}

    def total_degree(self) -> int:
        return max((self.ring.deg(e) for e in self.terms), default=-1)

    def homogeneous_components(self) -> dict:
        out: dict = {}
        for e, c in self.terms.items():
            out.setdefault(self.ring.deg(e), {})[e] = c
        return {d: Poly(self.ring, t, check=False) for d, t in sorted(out.items())}

    def leading(self, order: MonomialOrder = GREVLEX):
        """(exponent, coefficient) of the leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = order.keyfunc(self.ring)
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def sorted_terms(self, order: MonomialOrder = GREVLEX) -> list:
        key = order.keyfunc(self.ring)
        return sorted(self.terms.items(), key=lambda ec: key(ec[0]), reverse=True)

    # arithmetic -----------------------------------------------------------
    def _check(self, other: "Poly"):
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatch(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = self.ring.const(other)
        self._check(other)
        return Poly(self.ring, add_terms(self.terms, other.terms), check=False)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()}, check=False)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = self.ring.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = self.ring.coerce(other)
            if not c:
                return self.ring.zero()
            return Poly(self.ring, {e: a * c for e, a in self.terms.items()}, check=False)
        self._check(other)
        return Poly(self.ring, mul_terms(self.terms, other.terms), check=False)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = self.ring.const(1)
        for _ in range(k):
            out = out * self
        return out

    def mul_monomial(self, m: tuple, c=None) -> "Poly":
        if c is None:
            return Poly(self.ring, {tuple(a + b for a, b in zip(e, m)): x for e, x in self.terms.items()}, check=False)
        return Poly(self.ring, {tuple(a + b for a, b in zip(e, m)): x * c for e, x in self.terms.items()}, check=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            if not self.terms:
                return other == 0
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # t-adic operations ------------------------------------------------------
    def coeff_valuations(self) -> dict:
        return {e: _val(c) for e, c in self.terms.items()}

    def is_regular(self) -> bool:
        return all(v >= 0 for v in self.coeff_valuations().values())

    def change_domain(self, domain: str) -> "Poly":
        """Reinterpret in the same variables over another coefficient domain."""
        return Poly(self.ring.with_domain(domain), self.terms)

    def map_coeffs(self, fn: Callable, ring: RingSpec | None = None) -> "Poly":
        ring = ring or self.ring
        return Poly(ring, {e: fn(c) for e, c in self.terms.items()})

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({self})"


def _val(c):
    if isinstance(c, TRat):
        return c.v
    return math.inf if not c else 0


def add_terms(a: Mapping, b: Mapping) -> dict:
    out = dict(a)
    for e, c in b.items():
        x = out.get(e)
        if x is None:
            out[e] = c
        else:
            s = x + c
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def mul_terms(a: Mapping, b: Mapping) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            x = out.get(e)
            p = c1 * c2
            if x is None:
                out[e] = p
            else:
                s = x + p
                if s:
                    out[e] = s
                else:
                    del out[e]
    return {e: c for e, c in out.items() if c}


# ---------------------------------------------------------------------------
# operations named in the ring contract


def poly_arith(f: Poly, g: Poly, op: str) -> Poly:
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown op {op!r}")


def partial_derivative(f: Poly, i: int) -> Poly:
    if not 0 <= i < f.ring.nvars:
        raise IndexError(f"variable index {i} out of range")
    out = {}
    for e, c in f.terms.items():
        a = e[i]
        if a:
            e2 = e[:i] + (a - 1,) + e[i + 1:]
            out[e2] = c * a
    return Poly(f.ring, out, check=False)


def euler_combination(f: Poly) -> Poly:
    """Sum of ``w_i * x_i * d f/d x_i``; equals ``deg(f) * f`` for homogeneous f."""
    if not f.homogeneous:
        raise ValueError("Euler combination needs a homogeneous polynomial")
    ring = f.ring
    acc = ring.zero()
    for i, w in enumerate(ring.weights):
        d = partial_derivative(f, i)
        if d:
            e = [0] * ring.nvars
            e[i] = 1
            acc = acc + d.mul_monomial(tuple(e), ring.coerce(w))
    return acc


def t_valuation(f: Poly):
    if not f:
        raise ValueError("t-valuation of the zero polynomial")
    return min(_val(c) for c in f.terms.values())


def t_shift(f: Poly, k: int) -> Poly:
    """Multiply every coefficient by t^k; the result lives over Q(t) unless still regular."""
    if f.ring.domain == Q:
        raise DomainError("t_shift needs t-coefficients")
    terms = {e: c.shift(k) for e, c in f.terms.items()}
    ring = f.ring
    if ring.domain == DVR and any(c.v < 0 for c in terms.values()):
        ring = ring.with_domain(QT)
    return Poly(ring, terms, check=False)


def eval_t0(f: Poly) -> Poly:
    """Substitute t = 0; result is over Q."""
    ring = f.ring.with_domain(Q)
    if f.ring.domain == Q:
        return f
    out = {}
    for e, c in f.terms.items():
        if c.v < 0:
            raise DomainError(f"eval_t0: coefficient {c} of monomial {format_monomial(e)} is not regular")
        x = c.at_zero()
        if x:
            out[e] = x
    return Poly(ring, out, check=False)


def to_regular(f: Poly) -> tuple[Poly, int]:
    """Scale by the power of t making the minimum coefficient valuation 0."""
    if not f:
        return f.change_domain(DVR), 0
    k = -t_valuation(f)
    g = t_shift(f, k) if k else f
    return g.change_domain(DVR), k


def embed(f: Poly, ring: RingSpec, positions: Iterable[int]) -> Poly:
    """Map variable i of f's ring to variable positions[i] of ``ring``."""
    pos = list(positions)
    out = {}
    for e, c in f.terms.items():
        e2 = [0] * ring.nvars
        for i, a in enumerate(e):
            if a:
                e2[pos[i]] = a
        out[tuple(e2)] = c
    return Poly(ring, out)


# ---------------------------------------------------------------------------
# text


def format_monomial(e: tuple) -> str:
    parts = []
    for i, a in enumerate(e):
        if a == 1:
            parts.append(f"x{i + 1}")
        elif a:
            parts.append(f"x{i + 1}^{a}")
    return "*".join(parts) if parts else "1"


def format_poly(f: Poly, order: MonomialOrder = GREVLEX) -> str:
    """Canonical text; terms sorted descending in ``order``."""
    if not f.terms:
        return "0"
    out = []
    for e, c in f.sorted_terms(order):
        mono = format_monomial(e)
        neg = False
        if isinstance(c, TRat):
            if c.is_constant():
                c = c.constant()
            else:
                cs = str(c)
                if _needs_parens(cs):
                    cs = f"({cs})"
                body = cs if mono == "1" else f"{cs}*{mono}"
                out.append((False, body))
                continue
        if c < 0:
            neg, c = True, -c
        if mono == "1":
            body = str(c)
        elif c == 1:
            body = mono
        else:
            body = f"{c}*{mono}"
        out.append((neg, body))
    s = ""
    for i, (neg, body) in enumerate(out):
        if i == 0:
            s = ("-" if neg else "") + body
        else:
            s += (" - " if neg else " + ") + body
    return s


def _needs_parens(s: str) -> bool:
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and ch in "+-/" and i > 0:
            return True
        elif depth == 0 and ch == "-" and i == 0:
            return True
    return False


@dataclass(frozen=True)
class Ideal:
    """A ring together with a finite list of generators."""

    ring: RingSpec
    gens: tuple

    def __init__(self, ring: RingSpec, gens: Iterable[Poly] = ()):
        gens = tuple(gens)
        for g in gens:
            if g.ring != ring:
                raise RingMismatch(f"generator {g} does not live in {ring}")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "gens", gens)

    def nonzero(self) -> "Ideal":
        return Ideal(self.ring, [g for g in self.gens if g])

    def __add__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.ring, self.gens + tuple(other.gens))

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


def as_ideal(x, ring: RingSpec | None = None) -> Ideal:
    if isinstance(x, Ideal):
        return x
    gens = list(x)
    if ring is None:
        if not gens:
            raise ValueError("cannot infer the ring of an empty generator list")
        ring = gens[0].ring
    return Ideal(ring, gens)
