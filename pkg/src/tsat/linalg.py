"""Exact dense linear algebra over a field (``mpq`` or ``TRat`` entries).

Vectors are lists; matrices are lists of rows.
"""

from __future__ import annotations

from .scalars import ONE, ZERO, TONE, TZERO, TRat


def field_of(rows) -> tuple:
    """(zero, one) matching the entry type of ``rows``."""
    for r in rows:
        for x in r:
            if isinstance(x, TRat):
                return TZERO, TONE
    return ZERO, ONE


def rref(rows, ncols: int | None = None, zero=None, one=None):
    """Reduced row echelon form. Returns (nonzero rows, pivot columns)."""
    rows = [list(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if zero is None:
        zero, one = field_of(rows)
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pr = rows[r]
        inv = one / pr[c]
        if pr[c] != one:
            pr = rows[r] = [x * inv if x else zero for x in pr]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    rows[i] = [a - f * b if b else a for a, b in zip(ri, pr)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows[:r], pivots


def rank(rows) -> int:
    return len(rref(rows)[0])


def nullspace(rows, ncols: int, zero=None, one=None) -> list:
    """Basis of {v : M v = 0} for M given by ``rows``."""
    if zero is None:
        zero, one = field_of(rows)
    R, piv = rref(rows, ncols, zero, one)
    pivset = set(piv)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [zero] * ncols
        v[f] = one
        for row, p in zip(R, piv):
            if row[f]:
                v[p] = -row[f]
        basis.append(v)
    return basis


def transpose(rows, ncols: int | None = None):
    if not rows:
        return [[] for _ in range(ncols or 0)]
    return [list(c) for c in zip(*rows)]


def mat_mul(A, B, zero=None):
    if zero is None:
        zero, _ = field_of(A + B)
    n = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [zero] * n
        for a, brow in zip(row, B):
            if a:
                for j, b in enumerate(brow):
                    if b:
                        acc[j] = acc[j] + a * b
        out.append(acc)
    return out


def mat_vec(A, v, zero=None):
    if zero is None:
        zero, _ = field_of(A + [v])
    out = []
    for row in A:
        acc = zero
        for a, b in zip(row, v):
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return out


def identity(n: int, zero=ZERO, one=ONE):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def inverse(A):
    zero, one = field_of(A)
    n = len(A)
    aug = [list(r) + e for r, e in zip(A, identity(n, zero, one))]
    R, piv = rref(aug, 2 * n, zero, one)
    if piv[:n] != list(range(n)) or len(R) < n:
        raise ZeroDivisionError("matrix is singular")
    return [r[n:] for r in R]


def determinant(A):
    zero, one = field_of(A)
    M = [list(r) for r in A]
    n = len(M)
    det = one
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c]), None)
        if p is None:
            return zero
        if p != c:
            M[c], M[p] = M[p], M[c]
            det = -det
        det = det * M[c][c]
        inv = one / M[c][c]
        for i in range(c + 1, n):
            f = M[i][c]
            if f:
                f = f * inv
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return det


class Subspace:
    """Subspace of k^n held as a canonical RREF basis (equal subspaces compare equal)."""

    def __init__(self, vectors, n: int, zero=None, one=None):
        self.n = n
        if zero is None:
            zero, one = field_of(vectors)
        self.zero, self.one = zero, one
        self.basis, self.pivots = rref(vectors, n, zero, one) if vectors else ([], [])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, v):
        v = list(v)
        for row, p in zip(self.basis, self.pivots):
            f = v[p]
            if f:
                v = [a - f * b if b else a for a, b in zip(v, row)]
        return v

    def contains(self, v) -> bool:
        return not any(self.reduce(v))

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(b) for b in self.basis)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and self.n == other.n and self.basis == other.basis

    def __hash__(self):
        return hash((self.n, tuple(map(tuple, self.basis))))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, n={self.n})"


class Coordinates:
    """Coordinates with respect to a list of linearly independent vectors."""

    def __init__(self, basis, n: int, zero=None, one=None):
        if zero is None:
            zero, one = field_of(basis)
        self.zero, self.one = zero, one
        self.k = len(basis)
        self.n = n
        # rows [b_i | e_i]; after rref the right block holds the transform
        aug = [list(b) + [one if i == j else zero for j in range(self.k)] for i, b in enumerate(basis)]
        R, piv = rref(aug, n + self.k, zero, one)
        if len(piv) < self.k or any(p >= n for p in piv):
            raise ValueError("basis vectors are linearly dependent")
        self.rows = [r[:n] for r in R]
        self.transform = [r[n:] for r in R]
        self.pivots = piv

    def __call__(self, v):
        """Coordinates of v, or None if v is outside the span."""
        v = list(v)
        lam = []
        for row, p in zip(self.rows, self.pivots):
            f = v[p]
            lam.append(f)
            if f:
                v = [a - f * b if b else a for a, b in zip(v, row)]
        if any(v):
            return None
        out = [self.zero] * self.k
        for f, trow in zip(lam, self.transform):
            if f:
                out = [a + f * b if b else a for a, b in zip(out, trow)]
        return out
