"""Pure-Python reference versions of the hot loops.

The compiled module ``_ckernels`` exposes the same two functions; whichever
is importable is re-exported by :mod:`friezekit.kernels`.
"""

from fractions import Fraction
from math import lcm


def det_bareiss(rows):
    """Exact determinant of a square list-of-lists of Fractions or ints.

    Rows are scaled to integers, then fraction-free Bareiss elimination is run.
    """
    n = len(rows)
    if n == 0:
        return Fraction(1)
    scale = 1
    m = []
    for row in rows:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        scale *= den
        m.append([int(x * den) for x in row])
    sign = 1
    prev = 1
    for c in range(n - 1):
        if m[c][c] == 0:
            for r in range(c + 1, n):
                if m[r][c] != 0:
                    m[c], m[r] = m[r], m[c]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        piv = m[c][c]
        for r in range(c + 1, n):
            mr = m[r]
            mc = m[c]
            f = mr[c]
            for j in range(c + 1, n):
                mr[j] = (piv * mr[j] - f * mc[j]) // prev
            mr[c] = 0
        prev = piv
    return Fraction(sign * m[n - 1][n - 1], scale)


def evolve_linear(table, window, steps, period):
    """Run V_i = sum_j table[i mod period][j] * V_{i-1-j} forward.

    ``table[i]`` lists the already sign-adjusted coefficients of
    V_{i-1}, V_{i-2}, ..., V_{i-len}. ``window`` holds the last ``len`` values,
    oldest first, and its first entry sits at index ``-len`` relative to the
    first produced value (index 0). Returns the produced values.
    """
    vals = list(window)
    order = len(vals)
    out = []
    for s in range(steps):
        cs = table[s % period]
        acc = 0
        base = len(vals) - 1
        for j in range(order):
            c = cs[j]
            if c:
                acc += c * vals[base - j]
        vals.append(acc)
        out.append(acc)
    return out
