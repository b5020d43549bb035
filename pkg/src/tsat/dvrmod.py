"""Finitely generated submodules of free modules over the DVR Q[t]_(t).

Everything goes through one Smith form ``U M V = diag(t^a_1, ..., t^a_s, 0, ...)``
of the generator matrix (generators are its columns).  The elimination is
fraction-free over Q[t]: rows are scaled by the pivot's unit part instead of
dividing by it, so matrix entries stay polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .linalg import inverse, mat_mul
from .scalars import TONE, TZERO, TRat, as_trat, tpoly_lcm


class NotRegularError(ValueError):
    pass


def _entry(x) -> TRat:
    x = as_trat(x)
    if x is NotImplemented:
        raise TypeError("matrix entries must be scalars")
    if not x.is_regular():
        raise NotRegularError(f"entry {x} is not in Q[t]_(t)")
    return x


def _identity(n):
    return [[TONE if i == j else TZERO for j in range(n)] for i in range(n)]


@dataclass
class SmithForm:
    U: list
    V: list
    divisors: list
    shape: tuple

    @property
    def rank(self) -> int:
        return len(self.divisors)

    @cached_property
    def U_inverse(self) -> list:
        if not self.U:
            return []
        return inverse(self.U)

    def diagonal(self) -> list:
        m, n = self.shape
        D = [[TZERO] * n for _ in range(m)]
        for i, a in enumerate(self.divisors):
            D[i][i] = TRat.t_power(a)
        return D


def smith_form(M) -> SmithForm:
    """Smith form of a matrix over Q[t]_(t).

    Pivot: entry of minimal valuation, ties broken by row-major position.
    """
    A = [[_entry(x) for x in row] for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U = _identity(m)
    V = _identity(n)
    # clear denominators column by column (the lcm is a unit of the DVR)
    for j in range(n):
        dens = [A[i][j].den for i in range(m) if A[i][j] and len(A[i][j].den) > 1]
        if dens:
            L = TRat.from_tpoly(tpoly_lcm(dens))
            for i in range(m):
                if A[i][j]:
                    A[i][j] = A[i][j] * L
            V[j][j] = L
    divisors = []
    for p in range(min(m, n)):
        best = None
        for i in range(p, m):
            row = A[i]
            for j in range(p, n):
                x = row[j]
                if x and (best is None or x.v < best[0]):
                    best = (x.v, i, j)
        if best is None:
            break
        a, i0, j0 = best
        if i0 != p:
            A[p], A[i0] = A[i0], A[p]
            U[p], U[i0] = U[i0], U[p]
        if j0 != p:
            for row in A:
                row[p], row[j0] = row[j0], row[p]
            for row in V:
                row[p], row[j0] = row[j0], row[p]
        piv = A[p][p]
        u = piv.unit_part()
        unit_is_one = u == TONE
        rowp, Urowp = A[p], U[p]
        for i in range(p + 1, m):
            x = A[i][p]
            if not x:
                continue
            q = x.shift(-a)
            if unit_is_one:
                A[i] = [y - q * z if z else y for y, z in zip(A[i], rowp)]
                U[i] = [y - q * z if z else y for y, z in zip(U[i], Urowp)]
            else:
                A[i] = [u * y - q * z if z else u * y for y, z in zip(A[i], rowp)]
                U[i] = [u * y - q * z if z else u * y for y, z in zip(U[i], Urowp)]
        for j in range(p + 1, n):
            x = rowp[j]
            if not x:
                continue
            q = x / piv
            rowp[j] = TZERO
            for row in V:
                if row[p]:
                    row[j] = row[j] - q * row[p]
        divisors.append(a)
    # normalize the diagonal to exact powers of t
    for p in range(len(divisors)):
        u = A[p][p].unit_part()
        if u != TONE:
            inv = u.inverse()
            U[p] = [inv * y if y else y for y in U[p]]
    return SmithForm(U, V, divisors, (m, n))


@dataclass
class Membership:
    member: bool
    cofactors: list | None = None
    obstruction: str | None = None

    def __bool__(self):
        return self.member


class DVRSubmodule:
    """Submodule of (Q[t]_(t))^m spanned by ``generators`` (each a length-m vector)."""

    def __init__(self, ambient_rank: int, generators=()):
        self.ambient_rank = ambient_rank
        gens = []
        for g in generators:
            g = [_entry(x) for x in g]
            if len(g) != ambient_rank:
                raise ValueError(f"generator of length {len(g)} in a rank-{ambient_rank} module")
            gens.append(g)
        self.generators = gens

    @cached_property
    def smith(self) -> SmithForm:
        m = self.ambient_rank
        cols = self.generators
        M = [[g[i] for g in cols] for i in range(m)]
        return smith_form(M)

    @property
    def divisors(self) -> list:
        return self.smith.divisors

    @property
    def rank(self) -> int:
        return self.smith.rank

    def adapted_basis(self) -> list:
        """Columns w_1..w_m of U^{-1}; the module is the span of t^{a_i} w_i."""
        W = self.smith.U_inverse
        return [[W[r][c] for r in range(self.ambient_rank)] for c in range(self.ambient_rank)]

    # ------------------------------------------------------------------
    def sigma_k(self, k: int) -> "DVRSubmodule":
        if k < 0:
            raise ValueError("k must be nonnegative")
        W = self.adapted_basis()
        gens = [[x.shift(max(a - k, 0)) for x in W[i]] for i, a in enumerate(self.divisors)]
        return DVRSubmodule(self.ambient_rank, gens)

    def saturate(self) -> "DVRSubmodule":
        return self.sigma_k(max(self.divisors, default=0))

    def delta(self, k: int) -> int:
        """dim_Q of Σ_k(M)/M."""
        return sum(min(k, a) for a in self.divisors)

    def is_saturated(self) -> bool:
        return all(a == 0 for a in self.divisors)

    def membership_with_cofactors(self, v) -> Membership:
        v = [as_trat(x) for x in v]
        if len(v) != self.ambient_rank:
            raise ValueError("vector length does not match the ambient rank")
        for i, x in enumerate(v):
            if not x.is_regular():
                return Membership(False, obstruction=f"coordinate {i} has valuation {x.v} < 0")
        S = self.smith
        y = [sum((u * x for u, x in zip(row, v) if u and x), TZERO) for row in S.U]
        z = []
        for i, yi in enumerate(y):
            if i < S.rank:
                a = S.divisors[i]
                if yi.v < a:
                    return Membership(
                        False, obstruction=f"component {i} has valuation {yi.v}, needs t^{a} (short by t^{a - yi.v})"
                    )
                z.append(yi.shift(-a))
            elif yi:
                return Membership(False, obstruction=f"component {i} is outside the span over Q(t)")
        n = len(self.generators)
        c = []
        for j in range(n):
            acc = TZERO
            for i, zi in enumerate(z):
                if zi and S.V[j][i]:
                    acc = acc + S.V[j][i] * zi
            c.append(acc)
        return Membership(True, cofactors=c)

    def contains(self, v) -> bool:
        return self.membership_with_cofactors(v).member

    def contains_module(self, other: "DVRSubmodule") -> bool:
        return all(self.contains(g) for g in other.generators)

    def same_as(self, other: "DVRSubmodule") -> bool:
        return self.contains_module(other) and other.contains_module(self)

    def __repr__(self):
        return f"DVRSubmodule(rank {self.ambient_rank}, {len(self.generators)} gens, divisors={self.divisors})"


def sigma_k(M: DVRSubmodule, k: int) -> DVRSubmodule:
    return M.sigma_k(k)


def saturate(M: DVRSubmodule) -> DVRSubmodule:
    return M.saturate()


def delta(M: DVRSubmodule, k: int) -> int:
    return M.delta(k)


def membership_with_cofactors(v, M: DVRSubmodule) -> Membership:
    return M.membership_with_cofactors(v)


def check_smith(M, S: SmithForm) -> bool:
    """U M V == D exactly."""
    A = [[_entry(x) for x in row] for row in M]
    if not A or not A[0]:
        return not S.divisors
    return mat_mul(mat_mul(S.U, A), S.V) == S.diagonal()
