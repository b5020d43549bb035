"""Heights of ideals over Q[x], Q(t)[x] and Q[t]_(t)[x], contractions, and prime chains.

A prime of A[x] (A = Q[t]_(t)) either avoids t, and then it is a prime of
Q(t)[x] of the same height, or contains t, and then it is a prime of Q[x]
with one more unit of height.  So the height of I is the smaller of the
two fiber answers: ht over Q(t)[x], and 1 + ht of I mod t over Q[x].
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NotApplicable
from .groebner import dim_and_height, eliminate, reduced_gb
from .linalg import Subspace, nullspace, rref
from .ring import DVR, Q, QT, Ideal, Poly, RingSpec, as_ideal, eval_t0, format_poly
from .saturation import DegreePiece, GradedIdealPlus, from_qtx, poly_to_vector, qtx_ring, to_qtx
from .scalars import ONE, ZERO, TONE, TZERO, TRat, tpoly_lcm


class ChainError(ValueError):
    def __init__(self, msg: str, link: int):
        super().__init__(f"link {link}: {msg}")
        self.link = link


def _over(I: Ideal, domain: str) -> Ideal:
    ring = I.ring.with_domain(domain)
    return Ideal(ring, [g.change_domain(domain) for g in I.gens if g])


def _dvr_ideal(I) -> Ideal:
    I = as_ideal(I)
    if I.ring.domain == DVR:
        return I.nonzero()
    out = []
    for g in I.gens:
        if g and not g.is_regular():
            raise ValueError(f"generator {format_poly(g)} is not regular")
        if g:
            out.append(g.change_domain(DVR))
    return Ideal(I.ring.with_domain(DVR), out)


def height(I) -> float:
    """Height over whatever coefficient domain the ring declares."""
    I = as_ideal(I)
    if I.ring.domain == DVR:
        return height_dvr(I).height
    return dim_and_height(I.nonzero())[1]


@dataclass
class HeightReport:
    generic: float  # ht over Q(t)[x]
    special: float  # ht of I mod t over Q[x]
    height: float

    def to_dict(self) -> dict:
        def enc(x):
            return "inf" if x == math.inf else x
        return {"generic_fiber_height": enc(self.generic), "special_fiber_height": enc(self.special),
                "special_branch": enc(self.special + 1), "height": enc(self.height)}


def height_dvr(I) -> HeightReport:
    I = _dvr_ideal(I)
    gen = dim_and_height(_over(I, QT))[1] if I.gens else 0
    red = [eval_t0(g) for g in I.gens]
    special = dim_and_height(Ideal(I.ring.with_domain(Q), [g for g in red if g]))[1] if any(red) else 0
    return HeightReport(gen, special, min(gen, special + 1))


def height_with_t_via_qtx(I) -> float:
    """Height of (I + (t)) Q[t, x], t a variable.

    Every prime over it contains t and so survives localizing Q[t] at (t);
    the answer is therefore the height of I + (t) over Q[t]_(t)[x].
    """
    I = _dvr_ideal(I)
    R = qtx_ring(I.ring)
    gens = [to_qtx(g, R) for g in I.gens] + [R.var(I.ring.nvars)]
    return dim_and_height(Ideal(R, gens))[1]


# ---------------------------------------------------------------------------
# contractions


@dataclass
class Contraction:
    ring: RingSpec
    gens: list
    degree_bound: int
    dims: dict  # degree -> dim of the contracted piece

    def to_dict(self) -> dict:
        return {"degree_bound": self.degree_bound, "generators": [format_poly(g) for g in self.gens],
                "piece_dims": {str(k): v for k, v in sorted(self.dims.items())}}


def _clear_row(row):
    """Scale a vector over Q(t) by a common denominator so all entries are polynomials in t."""
    dens = [c.den for c in row if c and len(c.den) > 1]
    vmin = min((c.v for c in row if c), default=0)
    L = TRat.from_tpoly(tpoly_lcm(dens)) if dens else TONE
    L = L.shift(-min(vmin, 0))
    return [c * L if c else c for c in row]


def rational_points(vectors, n: int) -> list:
    """A Q-basis of V ∩ Q^n, V the Q(t)-span of ``vectors``.

    v lies in V iff it is orthogonal to V's annihilator; with the annihilator
    rows cleared to polynomials in t, a constant v must be orthogonal to each
    t-coefficient separately.
    """
    if not vectors:
        return []
    basis, _ = rref(vectors, n, TZERO, TONE)
    if len(basis) == n:
        return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    ann = nullspace(basis, n, TZERO, TONE)
    eqs = []
    for w in ann:
        w = _clear_row(w)
        top = max(len(c.to_tpoly()) for c in w if c)
        for s in range(top):
            eqs.append([c.to_tpoly()[s] if c and s < len(c.to_tpoly()) else ZERO for c in w])
    return nullspace(eqs, n, ZERO, ONE)


def contraction_degreewise(I, D: int) -> Contraction:
    """Generators of (I ∩ Q[x]) in degrees <= D, for a homogeneous ideal over Q(t)[x]."""
    I = as_ideal(I)
    ring = I.ring
    if ring.domain == Q:
        raise ValueError("the ideal already has rational coefficients")
    gens = [g.change_domain(QT) for g in I.gens if g]
    for g in gens:
        if not g.homogeneous:
            raise ValueError("contraction_degreewise needs homogeneous generators")
    qring = ring.with_domain(Q)
    found = []
    dims = {}
    for e in range(0, D + 1):
        monos = ring.monomials(e)
        if not monos:
            continue
        pos = {m: j for j, m in enumerate(monos)}
        vecs = []
        for g in gens:
            if g.degree > e:
                continue
            for m in ring.monomials(e - g.degree):
                v = [TZERO] * len(monos)
                for x, c in g.terms.items():
                    v[pos[tuple(a + b for a, b in zip(x, m))]] = c
                vecs.append(v)
        pts = rational_points(vecs, len(monos))
        dims[e] = len(pts)
        # keep only what the lower-degree generators do not already give
        lower = []
        for h in found:
            for m in ring.monomials(e - h.degree):
                hm = h.mul_monomial(m)
                lower.append([hm.terms.get(x, ZERO) for x in monos])
        span = Subspace(lower, len(monos), ZERO, ONE)
        rem = [span.reduce(p) for p in Subspace(pts, len(monos), ZERO, ONE).basis]
        for v in Subspace([r for r in rem if any(r)], len(monos), ZERO, ONE).basis:
            found.append(Poly(qring, {m: c for m, c in zip(monos, v) if c}, check=False))
    return Contraction(qring, found, D, dims)


def tail_contraction(I, n: int) -> Ideal:
    """I ∩ (coefficients)[x_{n+1}, ..., x_N]."""
    I = as_ideal(I)
    ring = I.ring
    if ring.domain != DVR:
        return eliminate(I.nonzero(), n)
    # elimination commutes with localizing Q[t] at (t): eliminate over Q[x, t]
    R = qtx_ring(ring)
    elim = eliminate(Ideal(R, [to_qtx(g, R) for g in I.gens if g]), n)
    return Ideal(ring, [from_qtx(h, ring) for h in elim.gens])


# ---------------------------------------------------------------------------
# membership over A[x]


def dvr_contains(J, f: Poly) -> bool:
    """Membership of f in a homogeneous ideal over Q[t]_(t)[x], one degree piece at a time."""
    J = _dvr_ideal(J)
    if not f:
        return True
    f = f if f.ring == J.ring else f.change_domain(DVR)
    if not J.gens:
        return False
    G = GradedIdealPlus(J.ring, tuple(J.gens))
    for e, part in f.homogeneous_components().items():
        piece = DegreePiece(G, e)
        if not piece.module.contains(poly_to_vector(part, piece.monos)):
            return False
    return True


def contains(J, f: Poly) -> bool:
    J = as_ideal(J)
    if J.ring.domain == DVR:
        return dvr_contains(J, f)
    gens = [g for g in J.gens if g]
    if not gens:
        return not f
    return reduced_gb(Ideal(J.ring, gens)).contains(f)


def subset(I, J) -> bool:
    return all(contains(J, g) for g in as_ideal(I).gens if g)


def same_ideal(I, J) -> bool:
    return subset(I, J) and subset(J, I)


# ---------------------------------------------------------------------------
# chains of syntactic primes


def _is_t(g: Poly) -> bool:
    return g.ring.domain != Q and len(g.terms) == 1 and not any(next(iter(g.terms))) and g.terms[next(iter(g.terms))].v == 1


def syntactic_prime_violation(P: Ideal) -> str | None:
    """None if P is generated by t and linear forms in disjoint variables, each with a unit coefficient."""
    used = set()
    seen_t = False
    for g in P.gens:
        if not g:
            continue
        if _is_t(g):
            if P.ring.domain != DVR:
                return "t is a unit over a field"
            if seen_t:
                return "t listed twice"
            seen_t = True
            continue
        if not g.homogeneous or g.degree is None or any(sum(e) != 1 for e in g.terms):
            return f"{format_poly(g)} is neither t nor a linear form"
        supp = g.support()
        if supp & used:
            return f"{format_poly(g)} shares a variable with another generator"
        used |= supp
        if P.ring.domain == DVR and all(c.v > 0 for c in g.terms.values()):
            return f"{format_poly(g)} has no unit coefficient"
    return None


@dataclass
class PrimeChain:
    links: list  # ascending list of Ideal

    @property
    def length(self) -> int:
        return len(self.links) - 1

    def __str__(self):
        return " < ".join(str(P) if P.gens else "(0)" for P in self.links)


def chain_verify(C: PrimeChain) -> int:
    """Length of the chain after checking primality and strictness of every link."""
    if not C.links:
        raise ChainError("empty chain", 0)
    for i, P in enumerate(C.links):
        msg = syntactic_prime_violation(P)
        if msg:
            raise ChainError(f"not a syntactic prime: {msg}", i)
    for i in range(len(C.links) - 1):
        P, P2 = C.links[i], C.links[i + 1]
        if not subset(P, P2):
            raise ChainError("not contained in the next link", i)
        if subset(P2, P):
            raise ChainError("inclusion is not strict (repeated link)", i + 1)
    return C.length


def is_maximal(C: PrimeChain) -> bool:
    """No step admits a syntactic prime P + (g) strictly in between, g a generator of the upper link."""
    chain_verify(C)
    for P, P2 in zip(C.links, C.links[1:]):
        for g in P2.gens:
            if not g or contains(P, g):
                continue
            Q_ = Ideal(P.ring, tuple(P.gens) + (g,))
            if syntactic_prime_violation(Q_) is None and not subset(P2, Q_):
                return False
    return True


@dataclass
class CatenaryReport:
    lengths: tuple
    maximal: tuple
    top_height: float
    equal: bool

    def to_dict(self) -> dict:
        return {"lengths": list(self.lengths), "maximal": list(self.maximal),
                "top_height": "inf" if self.top_height == math.inf else self.top_height, "equal": self.equal}


def catenary_compare(C1: PrimeChain, C2: PrimeChain) -> CatenaryReport:
    l1, l2 = chain_verify(C1), chain_verify(C2)
    if not same_ideal(C1.links[0], C2.links[0]) or not same_ideal(C1.links[-1], C2.links[-1]):
        raise ValueError("chains have different endpoints")
    top = height(C1.links[-1])
    return CatenaryReport((l1, l2), (is_maximal(C1), is_maximal(C2)), top, l1 == l2)


# ---------------------------------------------------------------------------
# Krull's principal ideal theorem and directed unions


@dataclass
class HauptReport:
    height_I: float
    height_If: float
    holds: bool

    def to_dict(self) -> dict:
        return {"height_I": self.height_I, "height_I_plus_f": self.height_If, "holds": self.holds}


def hauptidealsatz_check(I, f: Poly) -> HauptReport:
    I = _dvr_ideal(I)
    f = f if f.ring == I.ring else f.change_domain(DVR)
    J = Ideal(I.ring, tuple(I.gens) + (f,))
    hJ = height_dvr(J).height
    if hJ == math.inf:
        raise NotApplicable("I + (f) is the unit ideal")
    hI = height_dvr(I).height
    return HauptReport(hI, hJ, hJ <= hI + 1)


@dataclass
class UnionReport:
    heights: list
    holds: bool


def directed_union_height(Js) -> UnionReport:
    """The last ideal of an ascending list has the largest height, and heights never drop."""
    Js = [as_ideal(J) for J in Js]
    if not Js:
        raise ValueError("empty list")
    for i in range(len(Js) - 1):
        if not subset(Js[i], Js[i + 1]):
            raise ValueError(f"list is not ascending at position {i}")
    hs = [height(J) for J in Js]
    mono = all(a <= b for a, b in zip(hs, hs[1:]))
    return UnionReport(hs, mono and hs[-1] == max(hs))
