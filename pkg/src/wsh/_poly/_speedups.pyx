# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled backend for the dense integer-polynomial kernel.

Same interface as ``_pure``; coefficients stay arbitrary-precision Python
ints, the speedup comes from typed index loops and fewer temporaries.
"""

from math import gcd

BACKEND = "compiled"


def pnormalize(cs):
    cdef Py_ssize_t n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


def padd(a, b):
    cdef Py_ssize_t i, la = len(a), lb = len(b)
    if la < lb:
        a, b = b, a
        la, lb = lb, la
    out = list(a)
    for i in range(lb):
        out[i] = out[i] + b[i]
    return pnormalize(out)


def psub(a, b):
    cdef Py_ssize_t i, la = len(a), lb = len(b)
    cdef Py_ssize_t n = la if la > lb else lb
    out = [0] * n
    for i in range(la):
        out[i] = a[i]
    for i in range(lb):
        out[i] = out[i] - b[i]
    return pnormalize(out)


def pneg(a):
    return tuple(-c for c in a)


def pscale(a, k):
    if k == 0:
        return ()
    if k == 1:
        return a
    return tuple(c * k for c in a)


def pmul(a, b):
    cdef Py_ssize_t i, j, la = len(a), lb = len(b)
    if la == 0 or lb == 0:
        return ()
    if la == 1:
        return pscale(b, a[0])
    if lb == 1:
        return pscale(a, b[0])
    out = [0] * (la + lb - 1)
    for i in range(la):
        ca = a[i]
        if ca:
            for j in range(lb):
                cb = b[j]
                if cb:
                    out[i + j] = out[i + j] + ca * cb
    return pnormalize(out)


def pdivexact(a, b):
    cdef Py_ssize_t i, j, la = len(a), lb = len(b), db
    if lb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if la == 0:
        return ()
    if la < lb:
        raise ValueError("inexact polynomial division")
    rem = list(a)
    db = lb - 1
    lbc = b[db]
    q = [0] * (la - db)
    for i in range(la - 1, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        if c % lbc:
            raise ValueError("inexact polynomial division")
        f = c // lbc
        q[i - db] = f
        for j in range(db + 1):
            rem[i - db + j] = rem[i - db + j] - f * b[j]
    for i in range(la):
        if rem[i]:
            raise ValueError("inexact polynomial division")
    return pnormalize(q)


def ppseudo_rem(a, b):
    cdef Py_ssize_t i, j, da = len(a) - 1, db = len(b) - 1, n
    if db < 0:
        raise ZeroDivisionError("polynomial division by zero")
    if da < db:
        return a
    rem = list(a)
    n = da + 1
    lb = b[db]
    for i in range(da, db - 1, -1):
        c = rem[i]
        if c:
            for j in range(n):
                rem[j] = rem[j] * lb
            for j in range(db + 1):
                rem[i - db + j] = rem[i - db + j] - c * b[j]
        rem[i] = 0
    return pnormalize(rem)


def pcontent(a):
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def pprimitive(a):
    if not a:
        return ()
    g = pcontent(a)
    if a[len(a) - 1] < 0:
        g = -g
    if g == 1:
        return a
    return tuple(c // g for c in a)


def pgcd(a, b):
    if not a:
        return pprimitive(b)
    if not b:
        return pprimitive(a)
    ca = pcontent(a)
    cb = pcontent(b)
    g = gcd(ca, cb)
    a = pprimitive(a)
    b = pprimitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = ppseudo_rem(a, b)
        a, b = b, pprimitive(r)
    if g != 1:
        a = pscale(a, g)
    return a
