# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled bulk table kernels; see _kernels_py for the contracts."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def left_ideal_matrix(const int[:, ::1] mul):
    cdef Py_ssize_t n = mul.shape[0], s, g
    out = np.zeros((n, n), dtype=np.uint8)
    cdef unsigned char[:, ::1] M = out
    for s in range(n):
        for g in range(n):
            M[mul[s, g], g] = 1
    return out


def right_ideal_matrix(const int[:, ::1] mul):
    cdef Py_ssize_t n = mul.shape[0], s, g
    out = np.zeros((n, n), dtype=np.uint8)
    cdef unsigned char[:, ::1] M = out
    for g in range(n):
        for s in range(n):
            M[mul[g, s], g] = 1
    return out


def right_ann_subset(const int[:, ::1] mul):
    cdef Py_ssize_t n = mul.shape[0], g1, g2, x
    out = np.ones((n, n), dtype=np.uint8)
    cdef unsigned char[:, ::1] S = out
    for g1 in range(n):
        for g2 in range(n):
            for x in range(n):
                if mul[g1, x] == 0 and mul[g2, x] != 0:
                    S[g1, g2] = 0
                    break
    return out


def left_ann_subset(const int[:, ::1] mul):
    cdef Py_ssize_t n = mul.shape[0], g1, g2, x
    out = np.ones((n, n), dtype=np.uint8)
    cdef unsigned char[:, ::1] S = out
    for g1 in range(n):
        for g2 in range(n):
            for x in range(n):
                if mul[x, g1] == 0 and mul[x, g2] != 0:
                    S[g1, g2] = 0
                    break
    return out


def least_yab_eq_b(const int[:, ::1] mul, mask_in):
    cdef const unsigned char[:, ::1] mask = np.ascontiguousarray(mask_in, dtype=np.uint8)
    cdef Py_ssize_t n = mul.shape[0], a, b, c, y
    cdef int first, cnt
    least_arr = np.empty((n, n, n), dtype=np.int32)
    count_arr = np.empty((n, n, n), dtype=np.int32)
    cdef int[:, :, ::1] least = least_arr
    cdef int[:, :, ::1] count = count_arr
    cdef int[::1] ya = np.empty(n, dtype=np.int32)
    cdef unsigned char[::1] ok = np.empty(n, dtype=np.uint8)
    for a in range(n):
        for y in range(n):
            ya[y] = mul[y, a]
        for b in range(n):
            for y in range(n):
                ok[y] = mul[ya[y], b] == b
            for c in range(n):
                first = -1
                cnt = 0
                for y in range(n):
                    if ok[y] and mask[c, y]:
                        if first < 0:
                            first = <int>y
                        cnt += 1
                least[a, b, c] = first
                count[a, b, c] = cnt
    return least_arr, count_arr


def least_cay_eq_c(const int[:, ::1] mul, mask_in):
    cdef const unsigned char[:, ::1] mask = np.ascontiguousarray(mask_in, dtype=np.uint8)
    cdef Py_ssize_t n = mul.shape[0], a, b, c, y
    cdef int first, cnt, ca
    least_arr = np.empty((n, n, n), dtype=np.int32)
    count_arr = np.empty((n, n, n), dtype=np.int32)
    cdef int[:, :, ::1] least = least_arr
    cdef int[:, :, ::1] count = count_arr
    cdef unsigned char[::1] ok = np.empty(n, dtype=np.uint8)
    for c in range(n):
        for a in range(n):
            ca = mul[c, a]
            for y in range(n):
                ok[y] = mul[ca, y] == c
            for b in range(n):
                first = -1
                cnt = 0
                for y in range(n):
                    if ok[y] and mask[b, y]:
                        if first < 0:
                            first = <int>y
                        cnt += 1
                least[a, b, c] = first
                count[a, b, c] = cnt
    return least_arr, count_arr
