"""Exact dense linear algebra over Q and F_p.

The prime-field path runs row operations on int64 numpy arrays (residues
stay below 2**31, so a product fits in 63 bits); the rational path is a
plain Fraction Gauss-Jordan used for small certificates.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .field import Field

_NUMPY_PRIME_LIMIT = 1 << 31


def _rref_mod(A: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    A = np.array(A, dtype=np.int64) % p
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = (A[r] * inv) % p
        col = A[:, c].copy()
        col[r] = 0
        mask = np.nonzero(col)[0]
        if mask.size:
            A[mask] = (A[mask] - np.outer(col[mask], A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def _rref_fraction(A) -> tuple[list[list[Fraction]], list[int]]:
    M = [[Fraction(x) for x in row] for row in A]
    rows = len(M)
    cols = len(M[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rref(A, field: Field):
    """Reduced row echelon form (nonzero rows only) and pivot columns."""
    if len(A) == 0:
        return [], []
    if field.is_prime_field and field.p < _NUMPY_PRIME_LIMIT:
        if not isinstance(A, np.ndarray):
            A = np.array([[field.convert(x) for x in row] for row in A], dtype=np.int64)
        R, piv = _rref_mod(A, field.p)
        return [[int(x) for x in row] for row in R], piv
    if field.is_prime_field:
        # large primes: Fraction elimination, then reduce
        R, piv = _rref_fraction([[field.convert(x) for x in row] for row in A])
        return [[field.convert(x) for x in row] for row in R], piv
    return _rref_fraction(A)


def rank(A, field: Field) -> int:
    return len(rref(A, field)[1])


def nullspace(A, field: Field, ncols: int | None = None) -> list[list]:
    """Basis of {v : A v = 0}, one vector per free column."""
    if len(A) == 0:
        n = ncols or 0
        return [[field.one() if i == j else field.zero() for i in range(n)] for j in range(n)]
    n = len(A[0])
    R, piv = rref(A, field)
    pivset = set(piv)
    basis = []
    for free in range(n):
        if free in pivset:
            continue
        v = [field.zero()] * n
        v[free] = field.one()
        for row, pc in zip(R, piv):
            v[pc] = field.neg(field.convert(row[free]))
        basis.append(v)
    return basis


def inverse(A, field: Field) -> list[list]:
    n = len(A)
    aug = [list(row) + [field.one() if i == j else field.zero() for j in range(n)]
           for i, row in enumerate(A)]
    R, piv = rref(aug, field)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in R[:n]]


def matmul(A, B, field: Field) -> list[list]:
    if field.is_prime_field and field.p < _NUMPY_PRIME_LIMIT:
        p = field.p
        a = np.asarray(A, dtype=np.int64) % p
        b = np.asarray(B, dtype=np.int64) % p
        # split to keep partial sums below 2**63
        out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        for k in range(a.shape[1]):
            out = (out + np.outer(a[:, k], b[k, :])) % p
        return [[int(x) for x in row] for row in out]
    return [[sum((x * y for x, y in zip(row, col)), field.zero()) for col in zip(*B)] for row in A]


def matvec(A, v, field: Field) -> list:
    if field.is_prime_field:
        p = field.p
        return [sum(a * b for a, b in zip(row, v)) % p for row in A]
    return [sum((a * b for a, b in zip(row, v)), field.zero()) for row in A]
