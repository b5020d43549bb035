"""Degreewise syzygies by Macaulay matrices, and the space of degree-d syzygy generators.

A cofactor tuple (g_1, ..., g_r) with deg(g_i f_i) = d is stored as a flat
coordinate vector over the index ``[(i, m) for i for m in monomials(d - deg f_i)]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import Coordinates, Subspace, nullspace, rref
from .ring import Q, Poly, RingSpec
from .scalars import ONE, ZERO


def cofactor_index(ring: RingSpec, degs, d: int) -> list:
    return [(i, m) for i, di in enumerate(degs) for m in ring.monomials(d - di)]


def macaulay_columns(ring: RingSpec, flist, degs, d: int):
    """Columns (as term dicts) of the multiplication map into degree d, with the cofactor index."""
    index = cofactor_index(ring, degs, d)
    cols = []
    for i, m in index:
        f = flist[i]
        cols.append({tuple(a + b for a, b in zip(e, m)): c for e, c in f.terms.items()})
    return index, cols


def macaulay_matrix(ring: RingSpec, flist, degs, d: int):
    """Dense rows (degree-d monomials) by columns (cofactor index) over the coefficient type."""
    index, cols = macaulay_columns(ring, flist, degs, d)
    monos = ring.monomials(d)
    pos = {m: k for k, m in enumerate(monos)}
    zero = ring.zero_coeff()
    M = [[zero] * len(index) for _ in monos]
    for j, col in enumerate(cols):
        for e, c in col.items():
            M[pos[e]][j] = c
    return index, monos, M


def vector_to_tuple(ring: RingSpec, index, vec, r: int) -> tuple:
    terms = [dict() for _ in range(r)]
    for (i, m), c in zip(index, vec):
        if c:
            terms[i][m] = c
    return tuple(Poly(ring, t, check=False) for t in terms)


def tuple_to_vector(index, tup) -> list:
    return [tup[i].terms.get(m, 0) for i, m in index]


def _degrees(flist, degrees):
    if degrees is not None:
        return list(degrees)
    out = []
    for f in flist:
        if not f.homogeneous or f.degree is None:
            raise ValueError(f"{f} needs an explicit degree (zero or inhomogeneous)")
        out.append(f.degree)
    return out


@dataclass
class SyzygyPiece:
    flist: list
    d: int
    degs: list
    index: list
    vectors: list
    basis: list = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.vectors)


def syzygy_space(flist, d: int, degrees=None) -> SyzygyPiece:
    """Q-basis of the degree-d syzygies of ``flist`` (kernel of the Macaulay matrix)."""
    flist = list(flist)
    if not flist:
        raise ValueError("empty generator list")
    ring = flist[0].ring
    if ring.domain != Q:
        raise ValueError("syzygy_space works over Q; reduce mod t first")
    degs = _degrees(flist, degrees)
    index, monos, M = macaulay_matrix(ring, flist, degs, d)
    vecs = nullspace(M, len(index), ZERO, ONE) if index else []
    if vecs:
        vecs = rref(vecs, len(index), ZERO, ONE)[0]
    basis = [vector_to_tuple(ring, index, v, len(flist)) for v in vecs]
    return SyzygyPiece(flist, d, degs, index, vecs, basis)


def splus_products(ring: RingSpec, flist, degs, d: int, index=None):
    """Spanning set of E_d ∩ S_+ E: products m * a for a in a basis of E_e (e < d), deg m = d - e.

    Returns (list of (m, e, a_vector_in_E_e, E_e index), vectors in the degree-d index).
    """
    if index is None:
        index = cofactor_index(ring, degs, d)
    pos = {im: k for k, im in enumerate(index)}
    prods, vecs = [], []
    lo = min(degs) if degs else d
    for e in range(lo, d):
        piece = syzygy_space(flist, e, degs)
        if not piece.vectors:
            continue
        for m in ring.monomials(d - e):
            for a in piece.vectors:
                v = [ZERO] * len(index)
                for (i, mono), c in zip(piece.index, a):
                    if c:
                        v[pos[(i, tuple(x + y for x, y in zip(mono, m)))]] = c
                prods.append((m, e, a, piece.index))
                vecs.append(v)
    return prods, vecs


class EbarBasis:
    """Ē = E_d / (E_d ∩ S_+ E) for (f_1(0), ..., f_r(0)), computed over the variables they use.

    ``project`` maps a degree-d syzygy over the full ring to coordinates in Ē
    (variables outside the support are set to zero first; such monomials land in S_+ E).
    """

    def __init__(self, flist, d: int, degrees=None):
        flist = list(flist)
        self.ring = flist[0].ring
        if self.ring.domain != Q:
            raise ValueError("ebar_basis works over Q; reduce mod t first")
        self.flist = flist
        self.d = d
        self.degs = _degrees(flist, degrees)
        support = sorted(set().union(*(f.support() for f in flist)))
        self.variables = support
        ring = self.ring
        self.sub_ring = RingSpec(len(support), tuple(ring.weights[i] for i in support), Q)
        sub = [_restrict(f, support, self.sub_ring) for f in flist]
        self.sub_flist = sub
        Ed = syzygy_space(sub, d, self.degs)
        self.index = Ed.index
        _, spl = splus_products(self.sub_ring, sub, self.degs, d, self.index)
        n = len(self.index)
        self.splus = Subspace(spl, n, ZERO, ONE)
        reps = []
        span = Subspace(list(self.splus.basis), n, ZERO, ONE)
        for v in rref(Ed.vectors, n, ZERO, ONE)[0] if Ed.vectors else []:
            if not span.contains(v):
                reps.append(v)
                span = Subspace(span.basis + [v], n, ZERO, ONE)
        self.reps = reps
        self.edim = Ed.dim
        self._coords = Coordinates(self.splus.basis + reps, n, ZERO, ONE) if (self.splus.basis or reps) else None
        self._pos = {im: k for k, im in enumerate(self.index)}
        self._varset = set(support)

    @property
    def dim(self) -> int:
        return len(self.reps)

    def representatives(self) -> list:
        """Representative tuples (over the full ring) of a basis of Ē."""
        out = []
        for v in self.reps:
            terms = [dict() for _ in self.flist]
            for (i, m), c in zip(self.index, v):
                if c:
                    terms[i][_lift_monomial(m, self.variables, self.ring.nvars)] = c
            out.append(tuple(Poly(self.ring, t, check=False) for t in terms))
        return out

    def project(self, full_index, vec) -> list:
        """Ē-coordinates of a degree-d syzygy given in the full-ring cofactor index."""
        v = [ZERO] * len(self.index)
        for (i, m), c in zip(full_index, vec):
            if c and all(m[j] == 0 for j in range(len(m)) if j not in self._varset):
                v[self._pos[(i, tuple(m[j] for j in self.variables))]] += c
        if self._coords is None:
            if any(v):
                raise ValueError("vector is not a syzygy")
            return []
        x = self._coords(v)
        if x is None:
            raise ValueError("vector is not a degree-d syzygy of the reduced generators")
        return x[len(self.splus.basis):]


def _restrict(f: Poly, support, ring: RingSpec) -> Poly:
    return Poly(ring, {tuple(e[j] for j in support): c for e, c in f.terms.items()}, check=False)


def _lift_monomial(m, support, n) -> tuple:
    out = [0] * n
    for j, a in zip(support, m):
        out[j] = a
    return tuple(out)


def ebar_basis(flist, d: int, degrees=None) -> EbarBasis:
    return EbarBasis(flist, d, degrees)
