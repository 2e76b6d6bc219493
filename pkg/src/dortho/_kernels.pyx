# cython: language_level=3
"""Compiled dense polynomial kernels; semantics match dortho._kernels_py.

Coefficients stay generic Python objects (exact rationals), so the win
over the pure-Python twin comes from compiled loop and indexing
overhead, not from native arithmetic.
"""

BACKEND = "cython"


def normalize(list c):
    cdef Py_ssize_t n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return c[:n]


def poly_add(list a, list b):
    cdef Py_ssize_t i
    if len(a) < len(b):
        a, b = b, a
    cdef list out = list(a)
    for i in range(len(b)):
        out[i] = out[i] + b[i]
    return normalize(out)


def poly_sub(list a, list b):
    cdef list nb = [-x for x in b]
    return poly_add(a, nb)


def poly_scale(list a, c):
    if not c:
        return []
    return [c * x for x in a]


def poly_mul(list a, list b):
    cdef Py_ssize_t i, j, na = len(a), nb = len(b)
    if na == 0 or nb == 0:
        return []
    cdef list out = [0] * (na + nb - 1)
    for i in range(na):
        ai = a[i]
        if not ai:
            continue
        for j in range(nb):
            out[i + j] = out[i + j] + ai * b[j]
    return normalize(out)


def poly_deriv(list a, int order):
    cdef Py_ssize_t i, k
    for k in range(order):
        if len(a) <= 1:
            return []
        a = [a[i] * i for i in range(1, len(a))]
    return list(a)


def poly_eval(list a, x0):
    cdef Py_ssize_t i
    acc = 0 * x0
    for i in range(len(a) - 1, -1, -1):
        acc = acc * x0 + a[i]
    return acc
