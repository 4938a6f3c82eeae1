# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled scans over multiplication tables and encoded charts.

Tables are C-contiguous ``np.intp`` arrays. A table over S^1 has shape
(m, m) with the first n rows/columns being S itself.
"""

import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef Py_ssize_t idx_t


def assoc_violations(const idx_t[:, ::1] T, Py_ssize_t limit=100):
    cdef idx_t n = T.shape[0]
    cdef idx_t i, j, k
    out = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if T[T[i, j], k] != T[i, T[j, k]]:
                    out.append((i, j, k))
                    if len(out) >= limit:
                        return out
    return out


def conjugators(const idx_t[:, ::1] T, const idx_t[::1] inv, idx_t a, idx_t b):
    cdef idx_t m = T.shape[0]
    cdef idx_t g, gi
    out = []
    for g in range(m):
        gi = inv[g]
        if T[T[gi, a], g] == b and T[T[g, b], gi] == a:
            out.append(g)
    return out


def conjugacy_matrix(const idx_t[:, ::1] T, const idx_t[::1] inv, idx_t n):
    cdef idx_t m = T.shape[0]
    cdef idx_t g, gi, a, b
    res = np.zeros((n, n), dtype=np.bool_)
    cdef cnp.npy_bool[:, ::1] R = res
    for g in range(m):
        gi = inv[g]
        for a in range(n):
            b = T[T[gi, a], g]
            if b < n and T[T[g, b], gi] == a:
                R[a, b] = 1
    return res


def n_conjugacy_matrix(const idx_t[:, ::1] T, idx_t n):
    cdef idx_t m = T.shape[0]
    cdef idx_t a, b, g, h
    cdef bint found
    res = np.zeros((n, n), dtype=np.bool_)
    cdef cnp.npy_bool[:, ::1] R = res
    for a in range(n):
        for b in range(n):
            found = False
            for g in range(m):
                if T[a, g] != T[g, b]:
                    continue
                for h in range(m):
                    if (T[b, h] == T[h, a] and T[T[h, a], g] == b
                            and T[T[g, b], h] == a):
                        found = True
                        break
                if found:
                    break
            R[a, b] = found
    return res


def chart_conjugators(const idx_t[::1] alpha, const idx_t[::1] beta,
                      const idx_t[:, ::1] taus, const idx_t[:, ::1] tau_invs):
    cdef idx_t N = taus.shape[0]
    cdef idx_t n = alpha.shape[0] - 1
    cdef idx_t t, x
    cdef bint ok
    out = []
    for t in range(N):
        ok = True
        for x in range(n):
            if taus[t, alpha[tau_invs[t, x]]] != beta[x]:
                ok = False
                break
            if tau_invs[t, beta[taus[t, x]]] != alpha[x]:
                ok = False
                break
        if ok:
            out.append(t)
    return np.asarray(out, dtype=np.intp)
