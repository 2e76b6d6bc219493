"""Pure-Python dense polynomial kernels.

A polynomial is a list of exact scalars in ascending degree with no
trailing zeros; the zero polynomial is the empty list.  These functions
are the hot inner loops of the package; `dortho._kernels` is the
compiled twin with identical semantics (see `dortho.backend`).
"""

BACKEND = "python"


def normalize(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return c[:n]


def poly_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i in range(len(b)):
        out[i] = out[i] + b[i]
    return normalize(out)


def poly_sub(a, b):
    return poly_add(a, [-x for x in b])


def poly_scale(a, c):
    if not c:
        return []
    return [c * x for x in a]


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] = out[i + j] + ai * bj
    return normalize(out)


def poly_deriv(a, order):
    for _ in range(order):
        if len(a) <= 1:
            return []
        a = [a[i] * i for i in range(1, len(a))]
    return list(a)


def poly_eval(a, x0):
    acc = 0 * x0
    for c in reversed(a):
        acc = acc * x0 + c
    return acc
