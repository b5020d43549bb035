"""Decompositions f = sum g_i h_i, Jacobian containment, and bounded-denominator witnesses.

A homogeneous f with f = sum_j g_j h_j has every partial derivative in the
ideal (g_1..g_n, h_1..h_n) by the product rule.  Conversely if every
partial lies in (g_1..g_m), say d_i f = sum_j h_ij g_j, Euler's identity
gives f = sum_j g_j * (1/deg f) sum_i w_i x_i h_ij.  ``tame_strength`` uses
the second direction over the saturation of the witness ideal, so that the
cofactors, and hence the new pairs, have no poles at t = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import InvariantError
from .groebner import dim_and_height
from .ring import DVR, Q, QT, Ideal, Poly, RingSpec, format_poly, partial_derivative, t_valuation, to_regular
from .saturation import DegreePiece, GradedIdealPlus, SatResult, poly_to_vector, sat_leq_d


class SaturationIncomplete(InvariantError):
    pass


@dataclass
class StrengthDecomposition:
    pairs: list  # [(g, h)]

    def __len__(self):
        return len(self.pairs)

    def to_dict(self) -> list:
        out = []
        for g, h in self.pairs:
            vals = [t_valuation(p) for p in (g, h) if p and p.ring.domain != Q]
            mv = min(vals) if vals else 0
            out.append({"g": format_poly(g), "h": format_poly(h), "regular": mv >= 0, "min_valuation": mv})
        return out


@dataclass
class ContainmentCertificate:
    gens: list
    cofactors: list  # cofactors[i][j]: d_i f = sum_j cofactors[i][j] * gens[j]


@dataclass
class PairFlag:
    regular: bool
    min_valuation: object


@dataclass
class Verification:
    ok: bool
    violation: str | None = None
    pair_flags: list = field(default_factory=list)

    def __bool__(self):
        return self.ok

    @property
    def all_regular(self) -> bool:
        return all(p.regular for p in self.pair_flags)


def _common_ring(polys) -> RingSpec:
    polys = [p for p in polys]
    ring = polys[0].ring
    domains = {p.ring.domain for p in polys}
    if len({(p.ring.nvars, p.ring.weights) for p in polys}) != 1:
        raise ValueError("polynomials live in rings with different variables")
    if domains == {Q}:
        return ring.with_domain(Q)
    if QT in domains or (Q in domains and len(domains) > 1):
        return ring.with_domain(QT)
    return ring.with_domain(DVR)


def _lift(p: Poly, ring: RingSpec) -> Poly:
    return p if p.ring == ring else p.change_domain(ring.domain)


def jacobian_ideal(f: Poly) -> Ideal:
    if not f or not f.homogeneous or f.degree < 1:
        raise ValueError("the Jacobian ideal needs a homogeneous f of positive degree")
    parts = [partial_derivative(f, i) for i in range(f.ring.nvars)]
    return Ideal(f.ring, [p for p in parts if p])


def _pair_flag(g: Poly, h: Poly) -> PairFlag:
    if g.ring.domain == Q:
        return PairFlag(True, 0)
    mv = min(t_valuation(g), t_valuation(h))
    return PairFlag(mv >= 0, mv)


def verify_decomposition(f: Poly, D: StrengthDecomposition) -> Verification:
    """Exact check of f = sum g_i h_i with homogeneous g_i, h_i of positive degree."""
    if not D.pairs:
        return Verification(not f, None if not f else "empty decomposition of a nonzero polynomial")
    try:
        ring = _common_ring([f] + [p for gh in D.pairs for p in gh])
    except ValueError as exc:
        return Verification(False, str(exc))
    f = _lift(f, ring)
    if not f.homogeneous:
        return Verification(False, "f is not homogeneous")
    flags = []
    acc = ring.zero()
    violation = None
    for k, (g, h) in enumerate(D.pairs):
        g, h = _lift(g, ring), _lift(h, ring)
        for name, p in (("g", g), ("h", h)):
            if violation is None:
                if not p:
                    violation = f"pair {k}: {name} is zero"
                elif not p.homogeneous:
                    violation = f"pair {k}: {name} is not homogeneous"
                elif p.degree < 1:
                    violation = f"pair {k}: {name} = {format_poly(p)} does not have positive degree"
        if violation is None and f and g.degree + h.degree != f.degree:
            violation = f"pair {k}: degrees {g.degree} + {h.degree} != {f.degree}"
        if g and h:
            flags.append(_pair_flag(g, h))
            acc = acc + g * h
        else:
            flags.append(PairFlag(False, math.inf))
    if violation is None and acc != f:
        violation = f"sum of products differs from f by {format_poly(acc - f)}"
    return Verification(violation is None, violation, flags)


def _check_certificate(f: Poly, C: ContainmentCertificate):
    ring = f.ring
    n = ring.nvars
    if len(C.cofactors) != n:
        raise ValueError(f"certificate has {len(C.cofactors)} rows for {n} partial derivatives")
    for j, g in enumerate(C.gens):
        if not g or not g.homogeneous or g.degree < 1:
            raise ValueError(f"certificate generator {j} is not homogeneous of positive degree")
    for i, row in enumerate(C.cofactors):
        if len(row) != len(C.gens):
            raise ValueError(f"cofactor row {i} has the wrong length")
        s = ring.zero()
        for h, g in zip(row, C.gens):
            if h:
                s = s + _lift(h, ring) * _lift(g, ring)
        if s != partial_derivative(f, i):
            raise ValueError(f"cofactor row {i} does not reconstruct the partial derivative")


def containment_to_decomposition(f: Poly, C: ContainmentCertificate) -> StrengthDecomposition:
    """Euler reconstruction: pairs (g_j, (1/d) sum_i w_i x_i h_ij), zero h_j dropped."""
    if not f or not f.homogeneous or f.degree < 1:
        raise ValueError("f must be homogeneous of positive degree")
    ring = _common_ring([f] + list(C.gens) + [h for row in C.cofactors for h in row if h])
    f = _lift(f, ring)
    C = ContainmentCertificate([_lift(g, ring) for g in C.gens],
                               [[_lift(h, ring) if h else ring.zero() for h in row] for row in C.cofactors])
    _check_certificate(f, C)
    d = f.degree
    inv = ring.coerce(1) / d
    pairs = []
    for j, g in enumerate(C.gens):
        want = d - g.degree
        hj = ring.zero()
        for i, w in enumerate(ring.weights):
            hij = C.cofactors[i][j]
            if not hij:
                continue
            # only the component of the right degree can contribute
            part = hij.homogeneous_components().get(want - w)
            if part:
                e = [0] * ring.nvars
                e[i] = 1
                hj = hj + part.mul_monomial(tuple(e), ring.coerce(w) * inv)
        if hj:
            pairs.append((g, hj))
    D = StrengthDecomposition(pairs)
    if not verify_decomposition(f, D):
        raise InvariantError("Euler reconstruction does not verify")
    return D


def decomposition_to_containment(f: Poly, D: StrengthDecomposition) -> ContainmentCertificate:
    """Product rule: d_i f = sum_j (d_i g_j) h_j + g_j (d_i h_j), over the gens g_1..g_n, h_1..h_n."""
    v = verify_decomposition(f, D)
    if not v:
        raise ValueError(f"invalid decomposition: {v.violation}")
    ring = _common_ring([f] + [p for gh in D.pairs for p in gh])
    gs = [_lift(g, ring) for g, _ in D.pairs]
    hs = [_lift(h, ring) for _, h in D.pairs]
    rows = []
    for i in range(ring.nvars):
        rows.append([partial_derivative(h, i) for h in hs] + [partial_derivative(g, i) for g in gs])
    return ContainmentCertificate(gs + hs, rows)


def strength_lower_bound(f: Poly) -> int:
    """ceil(height(J(f)) / 2): strength n puts J(f) inside a 2n-generated ideal."""
    J = jacobian_ideal(f)
    ring = J.ring if J.ring.is_field else J.ring.with_domain(QT)
    J = Ideal(ring, [_lift(g, ring) for g in J.gens])
    _, ht = dim_and_height(J)
    return math.ceil(ht / 2)


@dataclass
class TameResult:
    decomposition: StrengthDecomposition
    f: Poly
    shift: int
    saturation: SatResult
    certificate: ContainmentCertificate

    def to_dict(self) -> dict:
        return {
            "f": format_poly(self.f),
            "t_shift": self.shift,
            "pairs": self.decomposition.to_dict(),
            "pair_count": len(self.decomposition),
            "saturated_generators": [format_poly(g) for g in self.saturation.gens],
        }


def tame_strength(f: Poly, witness: StrengthDecomposition) -> TameResult:
    """A decomposition of f (scaled by t^shift if f has poles) with every coefficient regular."""
    v = verify_decomposition(f, witness)
    if not v:
        raise ValueError(f"witness does not verify: {v.violation}")
    if f.ring.domain == Q:
        f = f.change_domain(DVR)
    f, shift = to_regular(f)
    ring = f.ring
    d = f.degree
    gens = []
    for g, h in witness.pairs:
        for p in (g, h):
            r, _ = to_regular(p)
            if r not in gens:
                gens.append(r)
    sat = sat_leq_d(GradedIdealPlus(ring, tuple(gens)), d - 1)
    if sat.unit:
        raise InvariantError("the witness ideal saturates to the unit ideal")
    G = GradedIdealPlus(ring, tuple(sat.gens))
    rows = []
    pieces = {}
    for i, w in enumerate(ring.weights):
        p = partial_derivative(f, i)
        row = [ring.zero() for _ in G.gens]
        if p:
            e = d - w
            if e not in pieces:
                pieces[e] = DegreePiece(G, e)
            piece = pieces[e]
            mem = piece.module.membership_with_cofactors(poly_to_vector(p, piece.monos))
            if not mem:
                raise SaturationIncomplete(
                    f"saturation incomplete: partial derivative {i + 1} is not in the degree-{e} piece "
                    f"({mem.obstruction})"
                )
            for (j, m), c in zip(piece.index, mem.cofactors):
                if c:
                    k = piece.which[j]
                    row[k] = row[k] + Poly(ring, {m: c}, check=False)
        rows.append(row)
    C = ContainmentCertificate(list(G.gens), rows)
    D = containment_to_decomposition(f, C)
    check = verify_decomposition(f, D)
    if not check or not check.all_regular:
        raise InvariantError("tamed decomposition does not verify with regular coefficients")
    return TameResult(D, f, shift, sat, C)

