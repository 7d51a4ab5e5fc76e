"""Dense exact linear algebra over a :class:`~hopfeq.kernel.Field`.

Matrices are lists of rows. Everything here is small (dimension <= 64), so
plain Gauss-Jordan elimination is used throughout.
"""

from __future__ import annotations

from typing import Sequence

from .kernel import Field, Scalar

Matrix = list[list[Scalar]]


class SingularMatrixError(ValueError):
    def __init__(self, rank: int, size: int):
        super().__init__(f"singular matrix: rank {rank} < {size}")
        self.rank = rank
        self.size = size


def zeros(field: Field, rows: int, cols: int) -> Matrix:
    z = field.zero
    return [[z] * cols for _ in range(rows)]


def identity(field: Field, n: int) -> Matrix:
    m = zeros(field, n, n)
    for i in range(n):
        m[i][i] = field.one
    return m


def matmul(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]], field: Field) -> Matrix:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = zeros(field, n, m)
    for i in range(n):
        row = a[i]
        orow = out[i]
        for t in range(k):
            c = row[t]
            if not c:
                continue
            brow = b[t]
            for j in range(m):
                if brow[j]:
                    orow[j] = orow[j] + c * brow[j]
    return out


def kron(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]], field: Field) -> Matrix:
    ra, ca, rb, cb = len(a), len(a[0]), len(b), len(b[0])
    out = zeros(field, ra * rb, ca * cb)
    for i in range(ra):
        for j in range(ca):
            if not a[i][j]:
                continue
            for k in range(rb):
                for l in range(cb):
                    out[i * rb + k][j * cb + l] = a[i][j] * b[k][l]
    return out


def rref(matrix: Sequence[Sequence[Scalar]], field: Field) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot column indices."""
    m = [list(r) for r in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        piv = next((i for i in range(r, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.one / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(matrix: Sequence[Sequence[Scalar]], field: Field) -> int:
    return len(rref(matrix, field)[1]) if matrix else 0


def nullspace(matrix: Sequence[Sequence[Scalar]], field: Field, ncols: int | None = None) -> list[list[Scalar]]:
    """Basis of ``{v : matrix @ v = 0}``, one vector per free column."""
    if not matrix:
        n = ncols or 0
        return identity(field, n)
    red, pivots = rref(matrix, field)
    n = len(red[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * n
        v[f] = field.one
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def inverse(matrix: Sequence[Sequence[Scalar]], field: Field) -> Matrix:
    n = len(matrix)
    aug = [list(row) + e for row, e in zip(matrix, identity(field, n))]
    red, pivots = rref(aug, field)
    r = sum(1 for p in pivots if p < n)
    if r < n:
        raise SingularMatrixError(r, n)
    return [row[n:] for row in red]


def solve(a: Sequence[Sequence[Scalar]], b: Sequence[Scalar], field: Field) -> list[Scalar] | None:
    """One solution of ``a @ x = b`` (free variables zero) or None."""
    ncols = len(a[0]) if a else 0
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    red, pivots = rref(aug, field)
    if ncols in pivots:
        return None
    x = [field.zero] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[ncols]
    return x
