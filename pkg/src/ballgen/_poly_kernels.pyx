# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled evaluation kernels for complex multivariate monomial sums.

Same contract as ballgen._poly_numpy; selected automatically by
ballgen.kernels when the extension built.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND = "cython"


cdef inline double complex _term_value(
    const double complex* pt,
    double complex coeff,
    const long long* exps,
    Py_ssize_t n,
) nogil:
    cdef double complex term = coeff
    cdef double complex base
    cdef long long e
    cdef Py_ssize_t j
    for j in range(n):
        e = exps[j]
        base = pt[j]
        while e > 0:
            if e & 1:
                term = term * base
            base = base * base
            e >>= 1
    return term


def eval_poly_batch(
    cnp.ndarray[cnp.complex128_t, ndim=2] pts,
    cnp.ndarray[cnp.complex128_t, ndim=1] coeffs,
    cnp.ndarray[cnp.int64_t, ndim=2] exps,
):
    cdef Py_ssize_t m = pts.shape[0]
    cdef Py_ssize_t n = pts.shape[1]
    cdef Py_ssize_t nterms = coeffs.shape[0]
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] out = np.zeros(m, dtype=np.complex128)
    cdef double complex acc
    cdef Py_ssize_t p, t
    cdef const double complex* pts_p
    pts_np = np.ascontiguousarray(pts)
    exps_np = np.ascontiguousarray(exps)
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] P = pts_np
    cdef cnp.ndarray[cnp.int64_t, ndim=2] E = exps_np
    for p in range(m):
        acc = 0
        for t in range(nterms):
            acc = acc + _term_value(&P[p, 0], coeffs[t], <const long long*>&E[t, 0], n)
        out[p] = acc
    return out


def eval_poly_point(pt, coeffs, exps):
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] p = np.asarray(pt, dtype=np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] c = coeffs
    cdef cnp.ndarray[cnp.int64_t, ndim=2] E = exps
    cdef Py_ssize_t n = p.shape[0]
    cdef Py_ssize_t nterms = c.shape[0]
    cdef double complex acc = 0
    cdef Py_ssize_t t
    for t in range(nterms):
        acc = acc + _term_value(&p[0], c[t], <const long long*>&E[t, 0], n)
    return complex(acc)
