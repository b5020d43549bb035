"""Degree-bounded t-saturation of homogeneous ideals over Q[t]_(t)[x].

For a degree d and generators f_1..f_r the degree-d piece I_d is a
submodule of the free module on the degree-d monomials.  A cofactor tuple
(g_1..g_r) with deg(g_i f_i) = d lies in X_k when t^k divides sum g_i f_i,
and pi_k sends it to that sum divided by t^k; the image of X_k is Y_k, the
elements g with t^k g in I_d.  Reducing a tuple of X_1 mod t gives a
syzygy of the f_i(0); its class among the degree-d syzygy generators is
rho.  Z_k = rho(X_k) is a descending chain of subspaces, and once it has
reached its final value at k = ell, Y_ell is already the whole saturation
of I_d (provided I is saturated in lower degrees).  ``sat_leq_d`` runs this
degree by degree, adjoining generators as it goes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .dvrmod import DVRSubmodule
from .errors import InvariantError
from .groebner import reduced_gb, saturate_by
from .linalg import Coordinates, Subspace, nullspace
from .ring import DVR, Q, Ideal, Poly, RingSpec, eval_t0, format_poly, t_shift, t_valuation
from .scalars import ONE, ZERO, TONE, TZERO, TRat, as_trat, tp, tpoly_lcm
from .syzygy import EbarBasis, cofactor_index, splus_products

MAX_T_ORDER = 64


class ClosureError(ValueError):
    """The ideal is not saturated below the requested degree."""


# ---------------------------------------------------------------------------
# data


@dataclass(frozen=True)
class GradedIdealPlus:
    ring: RingSpec
    gens: tuple

    def __post_init__(self):
        if self.ring.domain != DVR:
            raise ValueError("saturation works over the DVR; declare the ring with domain=dvr")
        gens = []
        for f in self.gens:
            if f.ring != self.ring:
                f = f.change_domain(DVR) if f.ring.nvars == self.ring.nvars else None
                if f is None:
                    raise ValueError("generator from a different ring")
            if not f:
                continue
            if not f.homogeneous:
                raise ValueError(f"generator {f} is not homogeneous")
            if not f.is_regular():
                raise ValueError(f"generator {f} has a coefficient with a pole at t = 0")
            gens.append(f)
        object.__setattr__(self, "gens", tuple(gens))

    @property
    def degrees(self) -> list:
        return [f.degree for f in self.gens]

    def reduced(self) -> list:
        return [eval_t0(f) for f in self.gens]

    def with_gens(self, extra) -> "GradedIdealPlus":
        return GradedIdealPlus(self.ring, self.gens + tuple(extra))

    def __str__(self):
        return "(" + ", ".join(format_poly(f) for f in self.gens) + ")"


def as_graded(I, ring: RingSpec | None = None) -> GradedIdealPlus:
    if isinstance(I, GradedIdealPlus):
        return I
    if isinstance(I, Ideal):
        return GradedIdealPlus(I.ring, tuple(I.gens))
    gens = tuple(I)
    return GradedIdealPlus(ring or gens[0].ring, gens)


@dataclass
class CofactorTuple:
    entries: tuple
    target_degree: int
    t_order: int


@dataclass
class SatTrace:
    d: int
    ebar_dim: int
    z_chain: list  # Subspace of Ē for k = 1, 2, ..., ell (+ one more)
    z_final: Subspace
    ell: int
    y_ell: DVRSubmodule
    new_gens: list
    piece: "DegreePiece | None" = field(default=None, repr=False)

    def z_dims(self) -> list:
        return [z.dim for z in self.z_chain]

    def to_dict(self) -> dict:
        return {
            "degree": self.d,
            "ebar_dim": self.ebar_dim,
            "z_chain_dims": self.z_dims(),
            "ell": self.ell,
            "y_ell_rank": self.y_ell.rank,
            "new_gens": [format_poly(g) for g in self.new_gens],
        }


@dataclass
class SatResult:
    ring: RingSpec
    d: int
    gens: list
    traces: list = field(default_factory=list)
    unit: bool = False

    @property
    def new_gens(self) -> list:
        return [g for tr in self.traces for g in tr.new_gens]

    def to_dict(self) -> dict:
        return {
            "degree_bound": self.d,
            "unit_ideal": self.unit,
            "generators": [format_poly(g) for g in self.gens],
            "new_generators": [format_poly(g) for g in self.new_gens],
            "traces": [tr.to_dict() for tr in self.traces],
        }


# ---------------------------------------------------------------------------
# vectors <-> polynomials


def poly_to_vector(f: Poly, monos) -> list:
    return [as_trat(f.terms.get(m, 0)) for m in monos]


def vector_to_poly(ring: RingSpec, monos, v) -> Poly:
    return Poly(ring, {m: c for m, c in zip(monos, v) if c}, check=False)


# ---------------------------------------------------------------------------
# one degree


class DegreePiece:
    """Everything attached to a single degree d of an ideal: I_d, its Macaulay matrix, Ē, Z_k."""

    def __init__(self, I: GradedIdealPlus, d: int):
        self.I = I
        self.d = d
        ring = I.ring
        self.ring = ring
        # generators that can contribute in degree d
        self.which = [i for i, f in enumerate(I.gens) if f.degree <= d]
        self.flist = [I.gens[i] for i in self.which]
        self.degs = [f.degree for f in self.flist]
        self.monos = ring.monomials(d)
        self.index = cofactor_index(ring, self.degs, d)
        self.columns = []
        pos = {m: j for j, m in enumerate(self.monos)}
        for i, m in self.index:
            col = [TZERO] * len(self.monos)
            for e, c in self.flist[i].terms.items():
                col[pos[tuple(a + b for a, b in zip(e, m))]] = c
            self.columns.append(col)
        self.module = DVRSubmodule(len(self.monos), self.columns)
        self._series = []  # _series[j][row][col] = coefficient of t^j

    @property
    def ncof(self) -> int:
        return len(self.index)

    @property
    def nmon(self) -> int:
        return len(self.monos)

    @cached_property
    def ebar(self) -> EbarBasis | None:
        if not self.flist:
            return None
        red = [eval_t0(f) for f in self.flist]
        return EbarBasis(red, self.d, self.degs)

    @property
    def ebar_dim(self) -> int:
        return self.ebar.dim if self.ebar else 0

    # t-expansion of the Macaulay matrix
    def series_block(self, j: int):
        while len(self._series) <= j:
            self._extend_series(2 * len(self._series) + 2)
        return self._series[j]

    def _extend_series(self, n: int):
        cols = [[c.series(n) for c in col] for col in self.columns]
        self._series = [
            [[cols[c][r][j] for c in range(self.ncof)] for r in range(self.nmon)] for j in range(n)
        ]

    def truncated_kernel(self, k: int) -> list:
        """Q-basis of tuples (c_0, ..., c_{k-1}) with Φ(c_0 + c_1 t + ...) = 0 mod t^k."""
        n = self.ncof
        if n == 0:
            return []
        blocks = [self.series_block(j) for j in range(k)]
        rows = []
        for m in range(k):
            for r in range(self.nmon):
                row = [ZERO] * (k * n)
                for j in range(m + 1):
                    src = blocks[m - j][r]
                    row[j * n:(j + 1) * n] = src
                rows.append(row)
        return nullspace(rows, k * n, ZERO, ONE)

    def rho(self, c0) -> list:
        """Ē-coordinates of a degree-d syzygy of the reduced generators."""
        if self.ebar is None:
            return []
        return self.ebar.project(self.index, c0)

    def zk_space(self, k: int) -> Subspace:
        if k < 1:
            raise ValueError("Z_k needs k >= 1")
        dim = self.ebar_dim
        if dim == 0:
            return Subspace([], 0, ZERO, ONE)
        vecs = [self.rho(v[: self.ncof]) for v in self.truncated_kernel(k)]
        return Subspace([v for v in vecs if any(v)], dim, ZERO, ONE)

    def zk_space_smith(self, k: int) -> Subspace:
        """Z_k read off the Smith form of Φ: columns of V with divisor >= k, and the kernel columns."""
        dim = self.ebar_dim
        if dim == 0:
            return Subspace([], 0, ZERO, ONE)
        S = self.module.smith
        vecs = []
        for j in range(self.ncof):
            if j >= S.rank or S.divisors[j] >= k:
                c0 = [S.V[i][j].at_zero() for i in range(self.ncof)]
                vecs.append(self.rho(c0))
        return Subspace([v for v in vecs if any(v)], dim, ZERO, ONE)

    def z_final(self) -> Subspace:
        """The value at which the Z-chain settles: the image of the exact syzygies over the DVR."""
        dim = self.ebar_dim
        if dim == 0:
            return Subspace([], 0, ZERO, ONE)
        S = self.module.smith
        vecs = []
        for j in range(S.rank, self.ncof):
            c0 = [S.V[i][j].at_zero() for i in range(self.ncof)]
            vecs.append(self.rho(c0))
        return Subspace([v for v in vecs if any(v)], dim, ZERO, ONE)

    def yk_space(self, k: int) -> DVRSubmodule:
        return self.module.sigma_k(k)

    def reduction_mod_t(self) -> Subspace:
        return Subspace([[c.at_zero() for c in col] for col in self.columns], self.nmon, ZERO, ONE)


def degree_piece(I, d: int) -> DegreePiece:
    return DegreePiece(as_graded(I), d)


def yk_space(I, d: int, k: int) -> DVRSubmodule:
    """Y_k = {g of degree d : t^k g in I_d}."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return degree_piece(I, d).yk_space(k)


def zk_space(I, d: int, k: int) -> Subspace:
    return degree_piece(I, d).zk_space(k)


# ---------------------------------------------------------------------------
# tuples


def pi_k(I, entries, k: int) -> Poly:
    """(sum g_i f_i) / t^k; the tuple must lie in X_k."""
    I = as_graded(I)
    s = I.ring.zero()
    for g, f in zip(entries, I.gens):
        if g:
            s = s + g * f
    if not s:
        return s
    v = t_valuation(s)
    if v < k:
        raise ValueError(f"tuple is not in X_{k}: t-valuation of the combination is {v}")
    return t_shift(s, -k)


def _entries_mod_t(piece: DegreePiece, entries) -> list:
    """The tuple, reduced mod t, as a vector in the cofactor index."""
    c0 = []
    for i, m in piece.index:
        g = entries[piece.which[i]]
        c = g.terms.get(m) if g else None
        c0.append(as_trat(c).at_zero() if c is not None else ZERO)
    return c0


def _check_tuple(I: GradedIdealPlus, entries, d: int):
    if len(entries) != len(I.gens):
        raise ValueError(f"tuple has {len(entries)} entries for {len(I.gens)} generators")
    for g, f in zip(entries, I.gens):
        if not g:
            continue
        if not g.homogeneous or g.degree + f.degree != d:
            raise ValueError(f"entry {g} has the wrong degree for target degree {d}")
        if not g.is_regular():
            raise ValueError(f"entry {g} is not regular")


def key_lemma_rewrite(tup: CofactorTuple, I, d: int | None = None) -> CofactorTuple:
    """Rewrite a tuple of X_k with rho = 0 as a tuple of X_{k-1} with the same pi-value.

    The mod-t class c_0 is a combination of monomial multiples of
    lower-degree syzygies a of the f_i(0).  For each such a, sum a_i f_i is
    divisible by t and its quotient q has lower degree; q lies in I when I is
    saturated in lower degrees, which supplies cofactors b with sum b_i f_i = q.
    Then t*(m b) - m a is an exact syzygy, and subtracting the pieces of c_0
    this way leaves g' = (g - g(0))/t + sum m b.
    """
    I = as_graded(I)
    k = tup.t_order
    d = tup.target_degree if d is None else d
    entries = tuple(tup.entries)
    ring = I.ring
    if k < 1:
        raise ValueError("the rewrite needs t-order k >= 1")
    _check_tuple(I, entries, d)
    target = pi_k(I, entries, k)
    piece = DegreePiece(I, d)
    for j, g in enumerate(entries):
        if g and j not in piece.which:
            raise ValueError("entry attached to a generator of degree > d")
    c0 = _entries_mod_t(piece, entries)
    if piece.ebar is not None and any(piece.rho(c0)):
        raise ValueError("rho(tuple) is not zero: the tuple is not in the kernel of rho")

    out = [_shift_down(g) if g else ring.zero() for g in entries]
    if any(c0):
        red = [eval_t0(f) for f in piece.flist]
        qring = ring.with_domain(Q)
        prods, vecs = splus_products(qring, red, piece.degs, d, piece.index)
        lam = _solve_in_span(vecs, c0, piece.ncof)
        if lam is None:
            raise InvariantError("mod-t class has zero rho but is not in S_+E")
        cache = {}
        for (m, e, a, aidx), coef in zip(prods, lam):
            if not coef:
                continue
            if (e, tuple(a)) not in cache:
                cache[(e, tuple(a))] = _lift_lower_syzygy(I, piece, e, a, aidx)
            b = cache[(e, tuple(a))]
            for pos_i, bi in zip(piece.which, b):
                if bi:
                    out[pos_i] = out[pos_i] + bi.mul_monomial(m, as_trat(coef))
    res = CofactorTuple(tuple(out), d, k - 1)
    if pi_k(I, res.entries, k - 1) != target:
        raise InvariantError("key lemma rewrite changed the pi-value")
    return res


def _shift_down(g: Poly) -> Poly:
    """(g - g(0)) / t."""
    terms = {}
    for e, c in g.terms.items():
        c = as_trat(c)
        c1 = c - TRat.from_rat(c.at_zero())
        if c1:
            terms[e] = c1.shift(-1)
    return Poly(g.ring, terms, check=False)


def _solve_in_span(vecs, target, n):
    """Coefficients lam with sum lam_i vecs_i = target (zeros for unused vectors), or None."""
    chosen, basis = [], []
    span = Subspace([], n, ZERO, ONE)
    for i, v in enumerate(vecs):
        if not span.contains(v):
            chosen.append(i)
            basis.append(v)
            span = Subspace(basis, n, ZERO, ONE)
    if not basis:
        return [ZERO] * len(vecs) if not any(target) else None
    x = Coordinates(basis, n, ZERO, ONE)(target)
    if x is None:
        return None
    lam = [ZERO] * len(vecs)
    for i, c in zip(chosen, x):
        lam[i] = c
    return lam


def _lift_lower_syzygy(I: GradedIdealPlus, piece: DegreePiece, e: int, a, aidx) -> list:
    """Cofactors b (one per generator of degree <= d) with t * sum b_i f_i = sum a_i f_i."""
    ring = I.ring
    s = ring.zero()
    for (i, m), c in zip(aidx, a):
        if c:
            s = s + piece.flist[i].mul_monomial(m, as_trat(c))
    b = [ring.zero() for _ in piece.flist]
    if not s:
        return b
    if t_valuation(s) < 1:
        raise InvariantError("a syzygy mod t does not vanish mod t")
    q = t_shift(s, -1)
    low = DegreePiece(I, e)
    mem = low.module.membership_with_cofactors(poly_to_vector(q, low.monos))
    if not mem:
        raise ClosureError(
            f"{format_poly(q)} (degree {e}) lies in the saturation but not in the ideal; "
            f"saturate degrees <= {e} first (sat_leq_d with d = {e})"
        )
    for (i, m), c in zip(low.index, mem.cofactors):
        if c:
            j = piece.which.index(low.which[i])
            b[j] = b[j] + Poly(ring, {m: c}, check=False)
    return b


# ---------------------------------------------------------------------------
# sampling tuples


def sample_xk_tuples(I, d: int, k: int, rng, count: int = 1, kernel_rho: bool = True, tail: bool = True):
    """Random tuples of X_k (with rho = 0 when ``kernel_rho``), as CofactorTuple."""
    I = as_graded(I)
    piece = DegreePiece(I, d)
    n = piece.ncof
    basis = piece.truncated_kernel(k)
    if kernel_rho and piece.ebar_dim:
        proj = [piece.rho(v[:n]) for v in basis]
        # combinations of the basis whose rho vanishes
        M = [[proj[b][i] for b in range(len(basis))] for i in range(piece.ebar_dim)]
        combos = nullspace(M, len(basis), ZERO, ONE)
        basis = [[sum((c * v[j] for c, v in zip(lam, basis) if c), ZERO) for j in range(k * n)] for lam in combos]
    ring = I.ring
    out = []
    for _ in range(count):
        coeffs = [rng.randint(-3, 3) for _ in basis]
        vec = [ZERO] * (k * n)
        for c, v in zip(coeffs, basis):
            if c:
                vec = [x + c * y for x, y in zip(vec, v)]
        terms = [dict() for _ in I.gens]
        for j in range(k):
            for (i, m), c in zip(piece.index, vec[j * n:(j + 1) * n]):
                if c:
                    key = piece.which[i]
                    terms[key][m] = terms[key].get(m, TZERO) + TRat.from_rat(c).shift(j)
        if tail:
            for (i, m) in piece.index:
                if rng.random() < 0.3:
                    key = piece.which[i]
                    c = TRat.from_rat(rng.randint(-2, 2)).shift(k)
                    terms[key][m] = terms[key].get(m, TZERO) + c
        entries = tuple(Poly(ring, {e: c for e, c in tm.items() if c}, check=False) for tm in terms)
        out.append(CofactorTuple(entries, d, k))
    return out


# ---------------------------------------------------------------------------
# the algorithm


def _degree_step(I: GradedIdealPlus, d: int) -> SatTrace:
    piece = DegreePiece(I, d)
    final = piece.z_final()
    chain = []
    ell = None
    for k in range(1, MAX_T_ORDER + 1):
        z = piece.zk_space(k)
        if chain and not z <= chain[-1]:
            raise InvariantError(f"Z-chain is not descending at k = {k} in degree {d}")
        if not final <= z:
            raise InvariantError(f"Z_{k} does not contain the final value in degree {d}")
        chain.append(z)
        if z == final:
            ell = k
            break
    if ell is None:
        raise InvariantError(f"Z-chain did not settle by k = {MAX_T_ORDER} in degree {d}")
    chain.append(piece.zk_space(ell + 1))
    if chain[-1] != chain[-2]:
        raise InvariantError("Z-chain moved after reaching its final value")
    Y = piece.yk_space(ell)
    if not Y.is_saturated():
        raise InvariantError(f"Y_{ell} is not saturated in degree {d}")
    new = _complement_generators(piece, Y)
    return SatTrace(d, piece.ebar_dim, chain, final, ell, Y, new, piece)


def _complement_generators(piece: DegreePiece, Y: DVRSubmodule) -> list:
    """Lifts of a basis of Y(0) modulo the image of I_d mod t (Nakayama: they generate Y over I_d)."""
    n = piece.nmon
    I0 = piece.reduction_mod_t()
    Y0 = Subspace([[c.at_zero() for c in g] for g in Y.generators], n, ZERO, ONE)
    rem = [I0.reduce(v) for v in Y0.basis]
    comp = Subspace([v for v in rem if any(v)], n, ZERO, ONE)
    if Y0.dim != I0.dim + comp.dim:
        raise InvariantError("I_d mod t is not inside Y mod t")
    if not comp.basis:
        return []
    ygens = [g for g in Y.generators if any(c.at_zero() for c in g)]
    red = [[c.at_zero() for c in g] for g in ygens]
    coords = Coordinates(red, n, ZERO, ONE)
    out = []
    for u in comp.basis:
        ut = [TRat.from_rat(c) for c in u]
        if Y.contains(ut):
            vec = ut
        else:
            lam = coords(u)
            vec = [TZERO] * n
            for c, g in zip(lam, ygens):
                if c:
                    vec = [x + y * c for x, y in zip(vec, g)]
        out.append(vector_to_poly(piece.ring, piece.monos, vec))
    return out


def sat_leq_d(I, d: int) -> SatResult:
    """Generators of Sat_{<=d}(I) = I + {f : deg f <= d, t^k f in I for some k}, with per-degree traces."""
    I = as_graded(I)
    if d < 0:
        raise ValueError("degree bound must be nonnegative")
    ring = I.ring
    if any(f.degree == 0 for f in I.gens):
        return SatResult(ring, d, [ring.const(1)], [], unit=True)
    cur = I
    traces = []
    for e in range(1, d + 1):
        if not ring.monomials(e):
            continue
        tr = _degree_step(cur, e)
        traces.append(tr)
        if tr.new_gens:
            cur = cur.with_gens(tr.new_gens)
    return SatResult(ring, d, list(cur.gens), traces)


# ---------------------------------------------------------------------------
# oracles


def oracle_dvr(I, d: int) -> dict:
    """Route A: for each degree e <= d, the saturation of I_e as a DVR module."""
    I = as_graded(I)
    out = {}
    for e in range(0, d + 1):
        monos = I.ring.monomials(e)
        if not monos:
            continue
        out[e] = DegreePiece(I, e).module.saturate()
    return out


def to_qtx(f: Poly, ring_tx: RingSpec) -> Poly:
    """Clear t-denominators and move t into the last variable of Q[x, t]."""
    if not f:
        return ring_tx.zero()
    dens = [c.den for c in f.terms.values() if len(c.den) > 1]
    L = tpoly_lcm(dens) if dens else tp([1])
    Lt = TRat.from_tpoly(L)
    terms = {}
    for e, c in f.terms.items():
        c = c * Lt
        for j, a in enumerate(c.to_tpoly()):
            if a:
                terms[e + (j,)] = a
    return Poly(ring_tx, terms, check=False)


def from_qtx(h: Poly, ring: RingSpec) -> Poly:
    """Inverse of ``to_qtx`` (t read back as a coefficient)."""
    acc = {}
    for e, c in h.terms.items():
        x, j = e[:-1], e[-1]
        acc.setdefault(x, {})[j] = c
    terms = {}
    for x, coeffs in acc.items():
        top = max(coeffs)
        c = TRat.from_tpoly(tp([coeffs.get(j, 0) for j in range(top + 1)]))
        if c:
            terms[x] = c
    return Poly(ring, terms, check=False)


def qtx_ring(ring: RingSpec) -> RingSpec:
    return RingSpec(ring.nvars + 1, ring.weights + (1,), Q)


def oracle_groebner(I, d: int) -> dict:
    """Route B: saturate by t over Q[x, t] and read off the degree pieces up to d.

    Every step (Buchberger, the colon by t) preserves homogeneity in x, so
    the degree-e piece is spanned by monomial multiples of the basis
    elements of x-degree <= e.
    """
    I = as_graded(I)
    ring = I.ring
    R = qtx_ring(ring)
    gens = [to_qtx(f, R) for f in I.gens]
    S = saturate_by(Ideal(R, gens), R.var(ring.nvars))
    G = reduced_gb(S) if S.gens else None
    elems = [from_qtx(h, ring) for h in (G.elements if G else [])]
    out = {}
    for e in range(0, d + 1):
        monos = ring.monomials(e)
        if not monos:
            continue
        vecs = []
        for g in elems:
            for part_deg, part in _x_components(g).items():
                if part_deg > e:
                    continue
                for m in ring.monomials(e - part_deg):
                    vecs.append(poly_to_vector(part.mul_monomial(m), monos))
        out[e] = DVRSubmodule(len(monos), vecs)
    return out


def _x_components(g: Poly) -> dict:
    comps = {}
    for e, c in g.terms.items():
        comps.setdefault(g.ring.deg(e), {})[e] = c
    return {k: Poly(g.ring, v, check=False) for k, v in comps.items()}


def result_modules(res: SatResult, d: int) -> dict:
    """Degree pieces (e <= d) of the ideal generated by a SatResult."""
    if res.unit:
        ring = res.ring
        return {e: DVRSubmodule(len(ring.monomials(e)), _identity_vectors(len(ring.monomials(e))))
                for e in range(0, d + 1) if ring.monomials(e)}
    J = GradedIdealPlus(res.ring, tuple(res.gens))
    return {e: DegreePiece(J, e).module for e in range(0, d + 1) if res.ring.monomials(e)}


def _identity_vectors(n):
    return [[TONE if i == j else TZERO for j in range(n)] for i in range(n)]


def compare_degreewise(A: dict, B: dict) -> list:
    """Degrees where two families of degree pieces differ."""
    bad = []
    for e in sorted(set(A) | set(B)):
        if e not in A or e not in B or not A[e].same_as(B[e]):
            bad.append(e)
    return bad


@dataclass
class OracleReport:
    agree: bool
    route_a_mismatch: list
    route_b_mismatch: list
    result: SatResult

    def to_dict(self) -> dict:
        return {
            "agree": self.agree,
            "route_a_mismatch_degrees": self.route_a_mismatch,
            "route_b_mismatch_degrees": self.route_b_mismatch,
        }


def sat_oracle(I, d: int, result: SatResult | None = None) -> OracleReport:
    """Check sat_leq_d against both independent routes, degree by degree up to d."""
    I = as_graded(I)
    res = result if result is not None else sat_leq_d(I, d)
    mine = result_modules(res, d)
    if res.unit:
        a = b = []
    else:
        a = compare_degreewise(mine, oracle_dvr(I, d))
        b = compare_degreewise(mine, oracle_groebner(I, d))
    return OracleReport(not a and not b, a, b, res)
