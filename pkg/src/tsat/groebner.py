"""Buchberger's algorithm over Q and Q(t), with the ideal operations built on it."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .ring import (
    DVR,
    GREVLEX,
    Ideal,
    MonomialOrder,
    Poly,
    RingSpec,
    as_ideal,
    embed,
)


class NotAFieldError(ValueError):
    pass


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: tuple, b: tuple) -> tuple:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _sub(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def _addmul(p: dict, c, m: tuple, g: dict):
    """p -= c * x^m * g, in place."""
    for e, a in g.items():
        e2 = tuple(x + y for x, y in zip(e, m))
        x = p.get(e2)
        v = a * c
        if x is None:
            p[e2] = -v
        else:
            s = x - v
            if s:
                p[e2] = s
            else:
                del p[e2]


def _monic(p: dict, lm: tuple) -> dict:
    c = p[lm]
    if c == 1:
        return p
    inv = 1 / c
    return {e: a * inv for e, a in p.items()}


def _normal_form(p: dict, basis: list, key) -> dict:
    """Full reduction of p by monic ``basis`` = [(lm, terms)]."""
    p = dict(p)
    rem = {}
    while p:
        e = max(p, key=key)
        c = p[e]
        for lm, g in basis:
            if _divides(lm, e):
                _addmul(p, c, _sub(e, lm), g)
                break
        else:
            rem[e] = c
            del p[e]
    return rem


@dataclass
class GroebnerBasis:
    ring: RingSpec
    order: MonomialOrder
    elements: list
    reduced: bool = True

    def __post_init__(self):
        key = self.order.keyfunc(self.ring)
        self._key = key
        self._basis = []
        for g in self.elements:
            lm, _ = g.leading(self.order)
            self._basis.append((lm, g.terms))

    @property
    def leading_monomials(self) -> list:
        return [lm for lm, _ in self._basis]

    def is_unit(self) -> bool:
        return any(not any(lm) for lm in self.leading_monomials)

    def reduce(self, f: Poly) -> Poly:
        return Poly(self.ring, _normal_form(f.terms, self._basis, self._key), check=False)

    def contains(self, f: Poly) -> bool:
        return not self.reduce(f)

    def ideal(self) -> Ideal:
        return Ideal(self.ring, self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _require_field(ring: RingSpec):
    if ring.domain == DVR:
        raise NotAFieldError(
            "Gröbner bases need a field of coefficients; use tsat.dvrmod for the DVR "
            "(or pass the ideal over Qt)"
        )


def reduced_gb(gens, order: MonomialOrder = GREVLEX, ring: RingSpec | None = None) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens``."""
    I = as_ideal(gens, ring) if not isinstance(gens, Ideal) else gens
    ring = I.ring
    _require_field(ring)
    key = order.keyfunc(ring)
    deg = ring.deg

    basis: list = []  # [(lm, monic terms)]
    pairs: set = set()

    def add(p: dict):
        lm = max(p, key=key)
        p = _monic(p, lm)
        j = len(basis)
        basis.append((lm, p))
        for i in range(j):
            pairs.add((i, j))

    # inputs in a canonical order so the run is independent of how they were listed
    inputs = sorted(
        (g.terms for g in I.gens if g),
        key=lambda t: (key(max(t, key=key)), len(t)),
    )
    for t in inputs:
        r = _normal_form(t, basis, key)
        if r:
            add(r)

    while pairs:
        i, j = min(pairs, key=lambda ij: _pair_key(basis, ij, key, deg))
        pairs.discard((i, j))
        lmi, gi = basis[i]
        lmj, gj = basis[j]
        lcm = _lcm(lmi, lmj)
        if all(not (a and b) for a, b in zip(lmi, lmj)):
            continue  # coprime leading monomials
        if _chain_skip(basis, pairs, i, j, lcm):
            continue
        s: dict = {}
        _addmul(s, -1, _sub(lcm, lmi), gi)
        _addmul(s, 1, _sub(lcm, lmj), gj)
        r = _normal_form(s, basis, key)
        if r:
            add(r)

    return GroebnerBasis(ring, order, _interreduce(ring, basis, key), reduced=True)


def _pair_key(basis, ij, key, deg):
    i, j = ij
    lcm = _lcm(basis[i][0], basis[j][0])
    return (deg(lcm), key(lcm), i, j)


def _chain_skip(basis, pairs, i, j, lcm) -> bool:
    for k, (lmk, _) in enumerate(basis):
        if k in (i, j):
            continue
        if _divides(lmk, lcm):
            if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
                return True
    return False


def _interreduce(ring, basis, key) -> list:
    lms = [lm for lm, _ in basis]
    keep = []
    for idx, (lm, g) in enumerate(basis):
        dominated = False
        for jdx, other in enumerate(lms):
            if jdx == idx:
                continue
            if _divides(other, lm) and (other != lm or jdx < idx):
                dominated = True
                break
        if not dominated:
            keep.append((lm, g))
    out = []
    for idx, (lm, g) in enumerate(keep):
        others = [b for jdx, b in enumerate(keep) if jdx != idx]
        tail = dict(g)
        c = tail.pop(lm)
        r = _normal_form(tail, others, key)
        r[lm] = c
        out.append((lm, Poly(ring, _monic(r, lm), check=False)))
    out.sort(key=lambda lp: key(lp[0]), reverse=True)
    return [p for _, p in out]


def normal_form_with_cofactors(f: Poly, G: GroebnerBasis) -> tuple[Poly, list]:
    """Division of f by G: returns (remainder, cofactors) with f = sum q_j G_j + remainder."""
    if f.ring != G.ring:
        raise ValueError("f and G live in different rings")
    key = G._key
    basis = G._basis
    ring = f.ring
    p = dict(f.terms)
    rem: dict = {}
    quot = [dict() for _ in basis]
    while p:
        e = max(p, key=key)
        c = p[e]
        for j, (lm, g) in enumerate(basis):
            if _divides(lm, e):
                m = _sub(e, lm)
                lc = g[lm]
                q = c / lc
                _addmul(p, q, m, g)
                prev = quot[j].get(m)
                s = q if prev is None else prev + q
                if s:
                    quot[j][m] = s
                else:
                    quot[j].pop(m, None)
                break
        else:
            rem[e] = c
            del p[e]
    return Poly(ring, rem, check=False), [Poly(ring, q, check=False) for q in quot]


def ideal_contains(I, f: Poly) -> bool:
    return reduced_gb(I).contains(f)


def ideal_subset(I, J) -> bool:
    """I ⊆ J, by membership of each generator."""
    G = J if isinstance(J, GroebnerBasis) else reduced_gb(J)
    return all(G.contains(g) for g in as_ideal(I, G.ring).gens)


def ideals_equal(I, J) -> bool:
    return ideal_subset(I, J) and ideal_subset(J, I)


# ---------------------------------------------------------------------------
# elimination, colon, saturation


def eliminate(I, k: int) -> Ideal:
    """Generators of I ∩ Q[x_{k+1}, ..., x_n] (a block-order Gröbner basis)."""
    I = as_ideal(I)
    G = reduced_gb(I, MonomialOrder("elim", k))
    return Ideal(I.ring, [g for g in G if not any(any(e[:k]) for e in g.terms)])


def extend_ring(ring: RingSpec, front: int = 0, back: int = 0, weight: int = 1) -> RingSpec:
    return RingSpec(ring.nvars + front + back, (weight,) * front + ring.weights + (weight,) * back, ring.domain)


def exact_quotient(h: Poly, g: Poly) -> Poly:
    G = GroebnerBasis(g.ring, GREVLEX, [g], reduced=False)
    r, (q,) = normal_form_with_cofactors(h, G)
    if r:
        raise ArithmeticError(f"{g} does not divide {h}")
    return q


def intersect_principal(I, g: Poly) -> Ideal:
    """I ∩ (g) via an auxiliary variable w: eliminate w from w*I + (1 - w)*g."""
    I = as_ideal(I, g.ring)
    ring = I.ring
    big = extend_ring(ring, front=1)
    pos = range(1, ring.nvars + 1)
    w = big.var(0)
    gens = [w * embed(f, big, pos) for f in I.gens if f]
    gens.append((big.const(1) - w) * embed(g, big, pos))
    elim = eliminate(Ideal(big, gens), 1)
    return Ideal(ring, [Poly(ring, {e[1:]: c for e, c in h.terms.items()}) for h in elim.gens])


def colon(I, g: Poly) -> Ideal:
    """(I : g) as a reduced Gröbner basis."""
    if not g:
        raise ValueError("colon by zero")
    I = as_ideal(I, g.ring)
    inter = intersect_principal(I, g)
    quots = [exact_quotient(h, g) for h in inter.gens]
    if not quots:
        return Ideal(I.ring, [])
    return reduced_gb(Ideal(I.ring, quots)).ideal()


def saturate_by(I, g: Poly, max_steps: int = 200) -> Ideal:
    """(I : g^∞), iterating colon ideals until two consecutive ones agree."""
    I = as_ideal(I, g.ring)
    cur = reduced_gb(I)
    for _ in range(max_steps):
        if not cur.elements:
            return cur.ideal()
        nxt = colon(cur.ideal(), g)
        nxt_gb = reduced_gb(nxt) if nxt.gens else GroebnerBasis(I.ring, GREVLEX, [])
        if ideal_subset(nxt_gb.ideal(), cur):
            return cur.ideal()
        cur = nxt_gb
    raise RuntimeError("saturation did not stabilize")


# ---------------------------------------------------------------------------
# dimension and height


def dim_and_height(I) -> tuple:
    """(Krull dimension of R/I, height of I); the unit ideal gives (-1, inf)."""
    I = as_ideal(I)
    n = I.ring.nvars
    gens = [g for g in I.gens if g]
    if not gens:
        return n, 0
    G = reduced_gb(Ideal(I.ring, gens))
    if G.is_unit():
        return -1, math.inf
    supports = [frozenset(i for i, a in enumerate(lm) if a) for lm in G.leading_monomials]
    for size in range(n, -1, -1):
        for U in combinations(range(n), size):
            Us = set(U)
            if not any(s <= Us for s in supports):
                return size, n - size
    raise AssertionError("unreachable: the empty set is always independent")
