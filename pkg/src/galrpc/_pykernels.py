"""Pure-Python GF(2^m) kernels.

Elements are ints whose bit i is the coefficient of X^i. ``red`` is the
modulus with its leading X^m term removed. Every function here has a
twin with the same signature in ``_ckernels.pyx``.
"""

import functools

NAME = "python"
TABLE_MAX_M = 16


@functools.lru_cache(maxsize=None)
def _tables(m, red):
    """(log, exp) tables for m <= TABLE_MAX_M, else None.

    exp has length 2*(2^m - 1) so exp[log a + log b] needs no reduction.
    """
    if m > TABLE_MAX_M or m < 2:
        return None
    order = (1 << m) - 1
    for g in range(2, 1 << m):
        exp = [0] * (2 * order)
        log = [0] * (1 << m)
        x = 1
        for i in range(order):
            exp[i] = x
            log[x] = i
            x = _mul_bits(x, g, m, red)
            if x == 1 and i < order - 1:
                break
        else:
            exp[order:] = exp[:order]
            return log, exp
    return None  # pragma: no cover


def _mul_bits(a, b, m, red):
    top = 1 << m
    full = top | red
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= full
    return r


def mul(a, b, m, red):
    if not a or not b:
        return 0
    t = _tables(m, red)
    if t is None:
        return _mul_bits(a, b, m, red)
    log, exp = t
    return exp[log[a] + log[b]]


def inv(a, m, red):
    """Inverse by the extended Euclidean algorithm on GF(2)[X]."""
    if a == 0:
        raise ZeroDivisionError("inverse of zero in GF(2^m)")
    u, v = a, (1 << m) | red
    g1, g2 = 1, 0
    while u != 1:
        j = u.bit_length() - v.bit_length()
        if j < 0:
            u, v = v, u
            g1, g2 = g2, g1
            j = -j
        u ^= v << j
        g1 ^= g2 << j
    return g1


def vec_mat(u, M, m, red):
    """Row vector times matrix: returns u·M."""
    cols = len(M[0]) if M else 0
    out = [0] * cols
    t = _tables(m, red)
    if t is not None:
        log, exp = t
        for ui, row in zip(u, M):
            if ui:
                lu = log[ui]
                for j in range(cols):
                    x = row[j]
                    if x:
                        out[j] ^= exp[lu + log[x]]
        return out
    for ui, row in zip(u, M):
        if ui == 0:
            continue
        if ui == 1:
            for j in range(cols):
                out[j] ^= row[j]
        else:
            for j in range(cols):
                x = row[j]
                if x:
                    out[j] ^= mul(ui, x, m, red)
    return out


def mat_mul(A, B, m, red):
    return [vec_mat(row, B, m, red) for row in A]


def group_conv(a, b, table, m, red):
    """Group-algebra product: c[table[i][j]] += a[i]*b[j]."""
    n = len(a)
    c = [0] * n
    t = _tables(m, red)
    if t is not None:
        log, exp = t
        lb = [(j, log[y]) for j, y in enumerate(b) if y]
        for i in range(n):
            if a[i]:
                la, trow = log[a[i]], table[i]
                for j, l in lb:
                    c[trow[j]] ^= exp[la + l]
        return c
    for i in range(n):
        ai = a[i]
        if ai == 0:
            continue
        trow = table[i]
        for j in range(n):
            bj = b[j]
            if bj:
                c[trow[j]] ^= ai if bj == 1 else (bj if ai == 1 else mul(ai, bj, m, red))
    return c


def eliminate(rows, npiv, m, red):
    """Reduce ``rows`` in place to RREF, pivoting on the first ``npiv`` columns.

    Returns the list of pivot columns.
    """
    nrows = len(rows)
    pivots = []
    r = 0
    for col in range(npiv):
        if r == nrows:
            break
        p = r
        while p < nrows and rows[p][col] == 0:
            p += 1
        if p == nrows:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        pv = prow[col]
        if pv != 1:
            s = inv(pv, m, red)
            prow = [mul(s, x, m, red) if x else 0 for x in prow]
            rows[r] = prow
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][col]
            if f:
                row = rows[i]
                if f == 1:
                    rows[i] = [x ^ y for x, y in zip(row, prow)]
                else:
                    rows[i] = [x ^ mul(f, y, m, red) if y else x for x, y in zip(row, prow)]
        pivots.append(col)
        r += 1
    return pivots
