# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for dense blade and basis-algebra products."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def blade_mul(const double[::1] a, const double[::1] b, const long[:, ::1] index, const double[:, ::1] sign):
    cdef Py_ssize_t dim = a.shape[0]
    cdef Py_ssize_t i, j
    cdef double ai
    out = np.zeros(dim)
    cdef double[::1] o = out
    for i in range(dim):
        ai = a[i]
        if ai == 0.0:
            continue
        for j in range(dim):
            if b[j] != 0.0:
                o[index[i, j]] += sign[i, j] * ai * b[j]
    return out


def blade_mul_batch(const double[:, ::1] a, const double[:, ::1] b, const long[:, ::1] index, const double[:, ::1] sign):
    cdef Py_ssize_t m = a.shape[0]
    cdef Py_ssize_t dim = a.shape[1]
    cdef Py_ssize_t r, i, j
    cdef double ai
    out = np.zeros((m, dim))
    cdef double[:, ::1] o = out
    for r in range(m):
        for i in range(dim):
            ai = a[r, i]
            if ai == 0.0:
                continue
            for j in range(dim):
                if b[r, j] != 0.0:
                    o[r, index[i, j]] += sign[i, j] * ai * b[r, j]
    return out


def structure_mul(const double[:, ::1] a, const double[:, ::1] b, const long[:, ::1] table_index, const double[:, ::1] table_sign):
    cdef Py_ssize_t m = a.shape[0]
    cdef Py_ssize_t d = a.shape[1]
    cdef Py_ssize_t r, i, j
    out = np.zeros((m, d))
    cdef double[:, ::1] o = out
    for r in range(m):
        for i in range(d):
            for j in range(d):
                o[r, table_index[i, j]] += table_sign[i, j] * a[r, i] * b[r, j]
    return out
