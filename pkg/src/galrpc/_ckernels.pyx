# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(2^m) kernels, m <= 64. Same signatures as ``_pykernels``."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

NAME = "cython"


cdef inline uint64_t _mask(int m):
    if m >= 64:
        return <uint64_t>0xFFFFFFFFFFFFFFFF
    return ((<uint64_t>1) << m) - 1


cdef inline uint64_t _mul(uint64_t a, uint64_t b, int m, uint64_t red, uint64_t mask) nogil:
    cdef uint64_t r = 0
    cdef uint64_t hi = (<uint64_t>1) << (m - 1)
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        if a & hi:
            a = ((a << 1) & mask) ^ red
        else:
            a <<= 1
    return r


cdef inline uint64_t _inv(uint64_t a, int m, uint64_t red, uint64_t mask) nogil:
    # a^(2^m - 2) = prod_{i=1}^{m-1} a^(2^i)
    cdef uint64_t r = 1
    cdef int i
    for i in range(1, m):
        a = _mul(a, a, m, red, mask)
        r = _mul(r, a, m, red, mask)
    return r


def mul(a, b, int m, red):
    return _mul(a, b, m, red, _mask(m))


def inv(a, int m, red):
    if a == 0:
        raise ZeroDivisionError("inverse of zero in GF(2^m)")
    return _inv(a, m, red, _mask(m))


def vec_mat(u, M, int m, red):
    cdef uint64_t mask = _mask(m)
    cdef uint64_t r = red
    cdef Py_ssize_t rows = len(M)
    cdef Py_ssize_t cols = len(M[0]) if rows else 0
    cdef Py_ssize_t i, j
    cdef uint64_t ui, x
    cdef uint64_t *out = <uint64_t *> malloc((cols + 1) * sizeof(uint64_t))
    if out == NULL:
        raise MemoryError()
    try:
        for j in range(cols):
            out[j] = 0
        for i in range(rows):
            ui = u[i]
            if ui == 0:
                continue
            row = M[i]
            for j in range(cols):
                x = row[j]
                if x:
                    out[j] ^= _mul(ui, x, m, r, mask)
        return [out[j] for j in range(cols)]
    finally:
        free(out)


def mat_mul(A, B, int m, red):
    return [vec_mat(row, B, m, red) for row in A]


def group_conv(a, b, table, int m, red):
    cdef uint64_t mask = _mask(m)
    cdef uint64_t r = red
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i, j
    cdef uint64_t *av = <uint64_t *> malloc((3 * n + 1) * sizeof(uint64_t))
    cdef int *tb = <int *> malloc((n * n + 1) * sizeof(int))
    if av == NULL or tb == NULL:
        free(av)
        free(tb)
        raise MemoryError()
    cdef uint64_t *bv = av + n
    cdef uint64_t *cv = av + 2 * n
    try:
        for i in range(n):
            av[i] = a[i]
            bv[i] = b[i]
            cv[i] = 0
            trow = table[i]
            for j in range(n):
                tb[i * n + j] = trow[j]
        with nogil:
            for i in range(n):
                if av[i] == 0:
                    continue
                for j in range(n):
                    if bv[j]:
                        cv[tb[i * n + j]] ^= _mul(av[i], bv[j], m, r, mask)
        return [cv[i] for i in range(n)]
    finally:
        free(av)
        free(tb)


def eliminate(rows, int npiv, int m, red):
    cdef uint64_t mask = _mask(m)
    cdef uint64_t rd = red
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t ncols = len(rows[0]) if nrows else 0
    cdef Py_ssize_t i, j, p, r = 0, col
    cdef uint64_t s, f, tmp
    cdef uint64_t *a = <uint64_t *> malloc((nrows * ncols + 1) * sizeof(uint64_t))
    if a == NULL:
        raise MemoryError()
    pivots = []
    try:
        for i in range(nrows):
            row = rows[i]
            for j in range(ncols):
                a[i * ncols + j] = row[j]
        for col in range(npiv):
            if r == nrows:
                break
            p = r
            while p < nrows and a[p * ncols + col] == 0:
                p += 1
            if p == nrows:
                continue
            if p != r:
                for j in range(ncols):
                    tmp = a[p * ncols + j]
                    a[p * ncols + j] = a[r * ncols + j]
                    a[r * ncols + j] = tmp
            with nogil:
                s = a[r * ncols + col]
                if s != 1:
                    s = _inv(s, m, rd, mask)
                    for j in range(ncols):
                        if a[r * ncols + j]:
                            a[r * ncols + j] = _mul(s, a[r * ncols + j], m, rd, mask)
                for i in range(nrows):
                    if i == r:
                        continue
                    f = a[i * ncols + col]
                    if f == 0:
                        continue
                    for j in range(ncols):
                        if a[r * ncols + j]:
                            a[i * ncols + j] ^= _mul(f, a[r * ncols + j], m, rd, mask)
            pivots.append(col)
            r += 1
        for i in range(nrows):
            rows[i] = [a[i * ncols + j] for j in range(ncols)]
        return pivots
    finally:
        free(a)
