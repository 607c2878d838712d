# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled dense elimination over F_p (the hot kernel).

Same contract as koszulext.linalg._gf_python.rref_pivots: the matrix is
reduced in place to reduced row echelon form with pivot rows first, and the
list of pivot columns is returned.
"""

import numpy as np
cimport numpy as cnp


cdef inline long long _inv_mod(long long x, long long p):
    cdef long long result = 1, base = x % p, e = p - 2
    while e:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


def rref_pivots(cnp.int64_t[:, ::1] a, long long p):
    cdef Py_ssize_t m = a.shape[0], n = a.shape[1]
    cdef Py_ssize_t r = 0, i, j, c, piv
    cdef long long inv, factor, tmp
    pivots = []
    for c in range(n):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(n):
                tmp = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = tmp
        inv = _inv_mod(a[r, c], p)
        if inv != 1:
            for j in range(c, n):
                a[r, j] = (a[r, j] * inv) % p
        for i in range(m):
            if i == r:
                continue
            factor = a[i, c]
            if factor != 0:
                for j in range(c, n):
                    a[i, j] = (a[i, j] - factor * a[r, j]) % p
                    if a[i, j] < 0:
                        a[i, j] += p
        pivots.append(c)
        r += 1
    return pivots
