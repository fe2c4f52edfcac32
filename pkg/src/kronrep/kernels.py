"""Hot loops for exact linear algebra over a prime field F_p.

Each kernel exists twice: a numba version with explicit loops and a
vectorised numpy version.  ``rref_mod_p`` and ``matmul_mod_p`` dispatch to
one of them according to ``kronrep._jit.USE_JIT``.  Matrices are int64 with
entries already reduced to ``0..p-1``; ``p <= 2**16`` keeps every product
and every row update far away from int64 overflow.
"""

from __future__ import annotations

import numpy as np

from ._jit import USE_JIT, njit

__all__ = [
    "rref_mod_p",
    "matmul_mod_p",
    "rref_numba",
    "rref_numpy",
    "matmul_numba",
    "matmul_numpy",
]


@njit
def _inv_mod(a, p):
    # extended Euclid; a is nonzero mod p
    t, new_t = 0, 1
    r, new_r = p, a % p
    while new_r != 0:
        q = r // new_r
        t, new_t = new_t, t - q * new_t
        r, new_r = new_r, r - q * new_r
    return t % p


@njit
def rref_numba(a, p):
    """In-place reduced row echelon form; returns the pivot columns."""
    rows, cols = a.shape
    pivots = np.empty(min(rows, cols), dtype=np.int64)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(cols):
                tmp = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = tmp
        inv = _inv_mod(a[r, c], p)
        for j in range(cols):
            a[r, j] = (a[r, j] * inv) % p
        for i in range(rows):
            if i != r and a[i, c] != 0:
                f = a[i, c]
                for j in range(cols):
                    a[i, j] = (a[i, j] - f * a[r, j]) % p
        pivots[r] = c
        r += 1
    return pivots[:r]


def rref_numpy(a: np.ndarray, p: int) -> np.ndarray:
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        col = a[:, c].copy()
        col[r] = 0
        others = np.flatnonzero(col)
        if others.size:
            a[others] = (a[others] - np.outer(col[others], a[r])) % p
        pivots.append(c)
        r += 1
    return np.asarray(pivots, dtype=np.int64)


@njit
def matmul_numba(a, b, p):
    n, m = a.shape
    k = b.shape[1]
    out = np.zeros((n, k), dtype=np.int64)
    for i in range(n):
        for t in range(m):
            v = a[i, t]
            if v != 0:
                for j in range(k):
                    out[i, j] += v * b[t, j]
    # each term < 2**32, so the row sums stay far below 2**63 before reducing
    for i in range(n):
        for j in range(k):
            out[i, j] %= p
    return out


def matmul_numpy(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    # entries < 2**16 and inner dimension small: the int64 sum cannot overflow
    return (a @ b) % p


def rref_mod_p(a: np.ndarray, p: int) -> np.ndarray:
    """Reduce ``a`` (int64, entries mod p) in place and return its pivot columns."""
    if USE_JIT:
        return rref_numba(a, p)
    return rref_numpy(a, p)


def matmul_mod_p(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if USE_JIT:
        return matmul_numba(np.ascontiguousarray(a), np.ascontiguousarray(b), p)
    return matmul_numpy(a, b, p)
