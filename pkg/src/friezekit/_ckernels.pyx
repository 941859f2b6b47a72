# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the loops in ``_pykernels``; same signatures."""

from fractions import Fraction
from math import lcm


def det_bareiss(rows):
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t c, r, j
    cdef int sign = 1
    cdef list m, mr, mc
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
        mc = m[c]
        piv = mc[c]
        for r in range(c + 1, n):
            mr = m[r]
            f = mr[c]
            for j in range(c + 1, n):
                mr[j] = (piv * mr[j] - f * mc[j]) // prev
            mr[c] = 0
        prev = piv
    return Fraction(sign * m[n - 1][n - 1], scale)


def evolve_linear(table, window, steps, period):
    cdef list vals = list(window)
    cdef Py_ssize_t order = len(vals)
    cdef Py_ssize_t s, j, base
    cdef Py_ssize_t nsteps = steps
    cdef Py_ssize_t per = period
    cdef list out = []
    cdef list cs
    for s in range(nsteps):
        cs = list(table[s % per])
        acc = 0
        base = len(vals) - 1
        for j in range(order):
            c = cs[j]
            if c:
                acc += c * vals[base - j]
        vals.append(acc)
        out.append(acc)
    return out
