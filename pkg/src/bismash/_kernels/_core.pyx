# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: exact mod-p elimination, associativity scans, batch
permutation conjugation.  Mirrors bismash._kernels._pyref."""

import numpy as np

NAME = "cython"


def rref_mod(a, long long p):
    """Reduced row echelon form of ``a`` mod p, in place; (rank, pivots)."""
    cdef long long[:, ::1] m = a
    cdef Py_ssize_t rows = m.shape[0], cols = m.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, pr
    cdef long long inv, f, tmp
    pivots = []
    for i in range(rows):
        for j in range(cols):
            m[i, j] = m[i, j] % p
            if m[i, j] < 0:
                m[i, j] += p
    for c in range(cols):
        if r == rows:
            break
        pr = -1
        for i in range(r, rows):
            if m[i, c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(cols):
                tmp = m[r, j]
                m[r, j] = m[pr, j]
                m[pr, j] = tmp
        inv = pow(int(m[r, c]), p - 2, p)
        for j in range(cols):
            m[r, j] = (m[r, j] * inv) % p
        for i in range(rows):
            if i == r:
                continue
            f = m[i, c]
            if f != 0:
                for j in range(cols):
                    m[i, j] = (m[i, j] - f * m[r, j]) % p
                    if m[i, j] < 0:
                        m[i, j] += p
        pivots.append(c)
        r += 1
    return r, pivots


def table_assoc_violation(table):
    """First (i, j, k) violating associativity of a monomial product table."""
    t32 = np.ascontiguousarray(table, dtype=np.int32)
    cdef int[:, ::1] t = t32
    cdef Py_ssize_t dim = t.shape[0]
    cdef Py_ssize_t i, j, k
    cdef int m, n, lhs, rhs
    for i in range(dim):
        for j in range(dim):
            m = t[i, j]
            for k in range(dim):
                lhs = t[m, k] if m >= 0 else -1
                n = t[j, k]
                rhs = t[i, n] if n >= 0 else -1
                if lhs != rhs:
                    return int(i), int(j), int(k)
    return None


def sparse_assoc_violation(ptr, idx, coef, Py_ssize_t dim, long long p):
    """Associativity scan for general sparse structure constants mod p."""
    cdef long long[::1] pt = np.ascontiguousarray(ptr, dtype=np.int64)
    cdef long long[::1] ix = np.ascontiguousarray(idx, dtype=np.int64)
    cdef long long[::1] cf = np.ascontiguousarray(coef, dtype=np.int64)
    acc_arr = np.zeros(dim, dtype=np.int64)
    touch_arr = np.zeros(dim, dtype=np.int64)
    seen_arr = np.zeros(dim, dtype=np.uint8)
    cdef long long[::1] acc = acc_arr
    cdef long long[::1] touch = touch_arr
    cdef unsigned char[::1] seen = seen_arr
    cdef Py_ssize_t i, j, k, t, s, ntouch
    cdef long long m, cm, n, row
    cdef bint bad
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                # touch holds each basis index once (deduplicated via seen),
                # so it never outgrows dim even for dense constants
                ntouch = 0
                for t in range(pt[i * dim + j], pt[i * dim + j + 1]):
                    m = ix[t]
                    cm = cf[t]
                    row = m * dim + k
                    for s in range(pt[row], pt[row + 1]):
                        n = ix[s]
                        acc[n] = (acc[n] + cm * cf[s]) % p
                        if not seen[n]:
                            seen[n] = 1
                            touch[ntouch] = n
                            ntouch += 1
                for t in range(pt[j * dim + k], pt[j * dim + k + 1]):
                    m = ix[t]
                    cm = cf[t]
                    row = i * dim + m
                    for s in range(pt[row], pt[row + 1]):
                        n = ix[s]
                        acc[n] = (acc[n] - cm * cf[s]) % p
                        if not seen[n]:
                            seen[n] = 1
                            touch[ntouch] = n
                            ntouch += 1
                bad = False
                for t in range(ntouch):
                    if acc[touch[t]] != 0:
                        bad = True
                    acc[touch[t]] = 0
                    seen[touch[t]] = 0
                if bad:
                    return int(i), int(j), int(k)
    return None


def conjugate_rows(elems, target):
    """Conjugate ``target`` by each permutation row: c[x] = h[t[h^-1[x]]]."""
    e32 = np.ascontiguousarray(elems, dtype=np.int32)
    t32 = np.ascontiguousarray(target, dtype=np.int32)
    cdef int[:, ::1] e = e32
    cdef int[::1] t = t32
    cdef Py_ssize_t rows = e.shape[0], n = e.shape[1]
    out_arr = np.empty((rows, n), dtype=np.int32)
    inv_arr = np.empty(n, dtype=np.int32)
    cdef int[:, ::1] out = out_arr
    cdef int[::1] inv = inv_arr
    cdef Py_ssize_t i, x
    for i in range(rows):
        for x in range(n):
            inv[e[i, x]] = <int> x
        for x in range(n):
            out[i, x] = e[i, t[inv[x]]]
    return out_arr
