# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Gaussian elimination over GF(p)."""
import numpy as np


cdef long long _inverse(long long a, long long p) nogil:
    cdef long long t = 0, new_t = 1, r = p, new_r = a, q, tmp
    while new_r != 0:
        q = r // new_r
        tmp = t - q * new_t
        t = new_t
        new_t = tmp
        tmp = r - q * new_r
        r = new_r
        new_r = tmp
    if t < 0:
        t += p
    return t


cdef Py_ssize_t _rank(long long[:, ::1] a, long long p) nogil:
    cdef Py_ssize_t rows = a.shape[0], cols = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef long long inv, f, tmp
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
            for j in range(c, cols):
                tmp = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = tmp
        inv = _inverse(a[r, c], p)
        if inv != 1:
            for j in range(c, cols):
                a[r, j] = (a[r, j] * inv) % p
        for i in range(r + 1, rows):
            f = a[i, c]
            if f == 0:
                continue
            for j in range(c, cols):
                if a[r, j] != 0:
                    a[i, j] = (a[i, j] - f * a[r, j]) % p
                    if a[i, j] < 0:
                        a[i, j] += p
        r += 1
    return r


def rank_mod_p(matrix, long long p):
    """Rank of an integer matrix reduced modulo the prime ``p``."""
    cdef Py_ssize_t r
    cdef long long[:, ::1] a = np.ascontiguousarray(np.mod(np.asarray(matrix, dtype=np.int64), p))
    if a.shape[0] == 0 or a.shape[1] == 0:
        return 0
    with nogil:
        r = _rank(a, p)
    return r
