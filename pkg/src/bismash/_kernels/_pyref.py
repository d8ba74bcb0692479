"""Pure NumPy reference implementations of the hot kernels.

Selected at import time when the compiled extension is unavailable (or when
BISMASH_KERNELS=py).  Semantics match bismash._kernels._core exactly; the
test suite runs both backends against each other.
"""

from __future__ import annotations

import numpy as np

NAME = "python"


def rref_mod(a: np.ndarray, p: int) -> tuple[int, list[int]]:
    """Reduced row echelon form of ``a`` mod p, in place.

    ``a`` must be a 2-D C-contiguous int64 array.  Returns (rank, pivot
    columns).  Row order below the rank is unspecified but deterministic.
    """
    rows, cols = a.shape
    a %= p
    r = 0
    pivots: list[int] = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = a[r] * inv % p
        other = np.nonzero(a[:, c])[0]
        other = other[other != r]
        if other.size:
            a[other] = (a[other] - np.outer(a[other, c], a[r])) % p
        pivots.append(c)
        r += 1
    return r, pivots


def table_assoc_violation(table: np.ndarray) -> tuple[int, int, int] | None:
    """First triple (i, j, k) violating associativity of a monomial table.

    ``table[i, j]`` is the basis index of b_i * b_j, or -1 when the product
    is zero.  Returns None when all dim**3 triples associate.
    """
    t = np.ascontiguousarray(table, dtype=np.int32)
    dim = t.shape[0]
    if dim == 0:
        return None
    pad_rows = np.vstack([t, np.full((1, dim), -1, dtype=np.int32)])
    pad_cols = np.hstack([t, np.full((dim, 1), -1, dtype=np.int32)])
    safe = np.where(t < 0, dim, t)
    # chunk over k to keep the (dim, dim, chunk) temporaries small
    step = max(1, (1 << 22) // (dim * dim))
    for k0 in range(0, dim, step):
        k1 = min(dim, k0 + step)
        lhs = pad_rows[:, k0:k1][safe]          # table[table[i,j], k]
        rhs = pad_cols[:, safe[:, k0:k1]]       # table[i, table[j,k]]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            i, j, k = (int(v) for v in bad[0])
            return i, j, k + k0
    return None


def sparse_assoc_violation(
    ptr: np.ndarray, idx: np.ndarray, coef: np.ndarray, dim: int, p: int
) -> tuple[int, int, int] | None:
    """Associativity scan for general sparse structure constants mod p.

    Pair (i, j) owns entries ptr[i*dim+j] : ptr[i*dim+j+1] of (idx, coef).
    O(dim^3 * nnz) in pure Python; the compiled backend is the fast path.
    """
    acc = np.zeros(dim, dtype=np.int64)
    for i in range(dim):
        for j in range(dim):
            ij0, ij1 = ptr[i * dim + j], ptr[i * dim + j + 1]
            for k in range(dim):
                touched = []
                for t in range(ij0, ij1):
                    m, cm = int(idx[t]), int(coef[t])
                    row = m * dim + k
                    for s in range(ptr[row], ptr[row + 1]):
                        n = int(idx[s])
                        acc[n] = (acc[n] + cm * coef[s]) % p
                        touched.append(n)
                jk0, jk1 = ptr[j * dim + k], ptr[j * dim + k + 1]
                for t in range(jk0, jk1):
                    m, cm = int(idx[t]), int(coef[t])
                    row = i * dim + m
                    for s in range(ptr[row], ptr[row + 1]):
                        n = int(idx[s])
                        acc[n] = (acc[n] - cm * coef[s]) % p
                        touched.append(n)
                bad = any(acc[n] for n in touched)
                for n in touched:
                    acc[n] = 0
                if bad:
                    return i, j, k
    return None


def conjugate_rows(elems: np.ndarray, target: np.ndarray) -> np.ndarray:
    """Conjugate ``target`` by every permutation row of ``elems``.

    Row h yields c with c[x] = h[target[h^-1[x]]], i.e. the image of target
    under conjugation by h in the apply-left-first convention.
    """
    e = np.ascontiguousarray(elems, dtype=np.int32)
    t = np.asarray(target, dtype=np.int32)
    inv = np.argsort(e, axis=1).astype(np.int32)
    mid = t[inv]
    return np.take_along_axis(e, mid, axis=1)
