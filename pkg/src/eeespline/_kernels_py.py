"""Pure-Python integer Gauss-Jordan elimination (fallback for ``_ckernels``)."""
from math import gcd


def _primitive(row):
    g = gcd(*row)
    if g > 1:
        return [x // g for x in row]
    return row


def int_gauss_jordan(rows, ncols):
    """Reduce integer ``rows`` in place to a fraction-free reduced echelon form.

    Every pivot row has a nonzero pivot and zeros in all other pivot columns.
    Rows are kept primitive (gcd 1) with a positive pivot.  Returns the list of
    pivot columns; the first ``len(pivots)`` rows are the nonzero rows.
    """
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = -1
        for i in range(r, nrows):
            if rows[i][c] != 0:
                p = i
                break
        if p < 0:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        prow = _primitive(rows[r])
        if prow[c] < 0:
            prow = [-x for x in prow]
        rows[r] = prow
        a = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            b = row[c]
            if b == 0:
                continue
            g = gcd(a, b)
            a1 = a // g
            b1 = b // g
            new = [a1 * x for x in row[:c]]
            new.extend(a1 * x - b1 * y for x, y in zip(row[c:], prow[c:]))
            rows[i] = _primitive(new)
        pivots.append(c)
        r += 1
    return pivots
