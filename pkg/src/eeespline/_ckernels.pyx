# cython: language_level=3
"""Compiled integer Gauss-Jordan elimination.

Same contract as ``_kernels_py.int_gauss_jordan``; entries stay Python ints
(arbitrary precision), the gain comes from typed loop indices and direct
list access.
"""
from math import gcd


cdef list _primitive(list row):
    cdef object g = gcd(*row)
    cdef Py_ssize_t k, n = len(row)
    if g > 1:
        return [row[k] // g for k in range(n)]
    return row


def int_gauss_jordan(list rows, Py_ssize_t ncols):
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t r = 0, c, i, k, p
    cdef list pivots = []
    cdef list prow, row, new
    cdef object a, b, g, a1, b1
    for c in range(ncols):
        if r == nrows:
            break
        p = -1
        for i in range(r, nrows):
            if (<list>rows[i])[c] != 0:
                p = i
                break
        if p < 0:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        prow = _primitive(<list>rows[r])
        if prow[c] < 0:
            prow = [-prow[k] for k in range(ncols)]
        rows[r] = prow
        a = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = <list>rows[i]
            b = row[c]
            if b == 0:
                continue
            g = gcd(a, b)
            a1 = a // g
            b1 = b // g
            new = [None] * ncols
            for k in range(c):
                new[k] = a1 * row[k]
            for k in range(c, ncols):
                new[k] = a1 * row[k] - b1 * prow[k]
            rows[i] = _primitive(new)
        pivots.append(c)
        r += 1
    return pivots
