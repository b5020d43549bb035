"""Seeded random instances and brute-force checks that avoid the code they test."""

from __future__ import annotations

import random

from .linalg import rank
from .ring import DVR, Poly, RingSpec
from .scalars import ZERO, TRat, as_trat, tp, trat_normalize


def make_rng(seed) -> random.Random:
    return random.Random(seed)


def random_tpoly(rng: random.Random, tdeg: int, lo: int = -3, hi: int = 3):
    coeffs = [rng.randint(lo, hi) for _ in range(tdeg + 1)]
    return tp(coeffs)


def random_regular(rng: random.Random, tdeg: int = 2, den_prob: float = 0.0) -> TRat:
    """A nonzero element of Q[t]_(t): a polynomial of t-degree <= tdeg, sometimes over 1 + c t."""
    while True:
        num = random_tpoly(rng, tdeg)
        if num:
            break
    if rng.random() < den_prob:
        return trat_normalize(num, tp([1, rng.choice([-2, -1, 1, 2])]))
    return TRat.from_tpoly(num)


def random_form(rng: random.Random, ring: RingSpec, d: int, nterms: int = 3, tdeg: int = 2,
                den_prob: float = 0.0) -> Poly:
    """A nonzero homogeneous form of degree d with regular coefficients."""
    monos = ring.monomials(d)
    if not monos:
        raise ValueError(f"no monomials of degree {d}")
    while True:
        picked = rng.sample(list(monos), min(nterms, len(monos)))
        terms = {m: random_regular(rng, tdeg, den_prob) for m in picked}
        f = Poly(ring, terms)
        if f:
            return f


def random_sat_instance(rng: random.Random, max_vars: int = 3, max_gens: int = 3, max_deg: int = 3,
                        tdeg: int = 2):
    """(ring, gens, d) for the saturation suites; many instances hide a t-torsion element."""
    n = rng.randint(1, max_vars)
    ring = RingSpec(n, (1,) * n, DVR)
    r = rng.randint(1, max_gens)
    gens = []
    if r >= 2 and rng.random() < 0.6:
        # p and p + t^a q: q lies in the saturation but usually not in the ideal
        e = rng.randint(1, max_deg)
        p = random_form(rng, ring, e, rng.randint(1, 2), tdeg=0)
        q = random_form(rng, ring, e, rng.randint(1, 2), tdeg=0)
        a = rng.randint(1, tdeg)
        gens += [p, p + q * ring.const(TRat.t_power(a))]
    while len(gens) < r:
        e = rng.randint(1, max_deg)
        gens.append(random_form(rng, ring, e, rng.randint(1, 3), tdeg=tdeg))
    if rng.random() < 0.3:
        # a generator divisible by t, keeping every coefficient of t-degree <= tdeg
        k = rng.randrange(len(gens))
        a = rng.randint(1, tdeg)
        f = random_form(rng, ring, gens[k].degree, rng.randint(1, 3), tdeg=tdeg - a)
        gens[k] = f * ring.const(TRat.t_power(a))
    d = max(f.degree for f in gens)
    return ring, gens, d


def random_dvr_matrix(rng: random.Random, max_rows: int = 4, max_cols: int = 4, tdeg: int = 2):
    """A random matrix over Q[t]_(t), biased towards entries divisible by t."""
    m = rng.randint(1, max_rows)
    n = rng.randint(1, max_cols)
    M = []
    for _ in range(m):
        row = []
        for _ in range(n):
            if rng.random() < 0.35:
                row.append(TRat.from_rat(0))
            else:
                row.append(random_regular(rng, tdeg, den_prob=0.2).shift(rng.randint(0, 2)))
        M.append(row)
    return M


def truncated_image_rank(M, j: int) -> int:
    """dim over Q of the image of M acting on (Q[t]/t^j)^n, by expanding entries as series."""
    m = len(M)
    n = len(M[0]) if m else 0
    if j == 0 or not m or not n:
        return 0
    ser = [[as_trat(x).series(j) for x in row] for row in M]
    # unknowns c[col][b] (coefficient of t^b), rows (r, a) = coefficient of t^a in row r
    rows = []
    for r in range(m):
        for a in range(j):
            row = [ZERO] * (n * j)
            for c in range(n):
                s = ser[r][c]
                for b in range(a + 1):
                    row[c * j + b] = s[a - b]
            rows.append(row)
    return rank(rows) if rows else 0


def delta_oracle(M, k: int, bound: int) -> int:
    """dim Σ_k(M)/M from ranks over truncations, with ``bound`` above every elementary divisor.

    Writing r_j for the rank over Q[t]/t^j, r_j = sum_i max(j - a_i, 0); so the
    module rank is r_{N+1} - r_N for N >= max a_i, and dim Σ_k/M = rank*k - r_k.
    """
    s = truncated_image_rank(M, bound + 1) - truncated_image_rank(M, bound)
    return s * k - truncated_image_rank(M, k)

