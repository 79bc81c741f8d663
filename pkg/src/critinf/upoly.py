"""Dense univariate polynomial helpers over an arbitrary exact field.

A polynomial is a tuple of coefficients, lowest degree first, with no
trailing zeros; the zero polynomial is ``()``.  Coefficients may be any
objects supporting ``+ - * /`` and truthiness (``gmpy2.mpq``, or the
element classes of :mod:`critinf.fields`).
"""

from __future__ import annotations

from typing import Sequence

Dense = tuple


def trim(a: Sequence) -> Dense:
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return tuple(a[:n])


def degree(a: Dense) -> int:
    return len(a) - 1


def add(a: Dense, b: Dense) -> Dense:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return trim(out)


def neg(a: Dense) -> Dense:
    return tuple(-c for c in a)


def sub(a: Dense, b: Dense) -> Dense:
    return add(a, neg(b))


def scale(a: Dense, c) -> Dense:
    if not c:
        return ()
    return trim([x * c for x in a])


def mul(a: Dense, b: Dense) -> Dense:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return trim(out)


def divmod_(a: Dense, b: Dense) -> tuple[Dense, Dense]:
    """Euclidean division; raises ZeroDivisionError for ``b == ()``.

    Inverting the leading coefficient of ``b`` may raise
    :class:`critinf.fields.ZeroDivisor` inside an extension field.
    """
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    if len(a) - 1 < db:
        return (), a
    inv = 1 / b[-1]
    r = list(a)
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = r[k + db]
        if not c:
            continue
        c = c * inv
        q[k] = c
        for j in range(db + 1):
            r[k + j] = r[k + j] - c * b[j]
    return trim(q), trim(r[:db])


def rem(a: Dense, b: Dense) -> Dense:
    return divmod_(a, b)[1]


def exquo(a: Dense, b: Dense) -> Dense:
    q, r = divmod_(a, b)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def monic(a: Dense) -> Dense:
    if not a or a[-1] == 1:
        return a
    inv = 1 / a[-1]
    return tuple(c * inv for c in a[:-1]) + (a[-1] * inv,)


def gcd(a: Dense, b: Dense) -> Dense:
    while b:
        a, b = b, rem(a, b)
    return monic(a)


def xgcd(a: Dense, b: Dense) -> tuple[Dense, Dense, Dense]:
    """Return ``(g, u, v)`` with ``u*a + v*b = g`` and ``g`` monic."""
    r0, r1 = a, b
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if not r0:
        return (), (), ()
    inv = 1 / r0[-1]
    return monic(r0), scale(s0, inv), scale(t0, inv)


def deriv(a: Dense) -> Dense:
    return trim([a[i] * i for i in range(1, len(a))])


def evaluate(a: Dense, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def power(a: Dense, k: int) -> Dense:
    out: Dense = (1,)
    base = a
    while k:
        if k & 1:
            out = mul(out, base)
        base = mul(base, base)
        k >>= 1
    return trim(out)


def squarefree_part(a: Dense) -> Dense:
    if not a:
        return a
    g = gcd(a, deriv(a))
    return monic(exquo(a, g))


def resultant(a: Dense, b: Dense):
    """Resultant by the Euclidean recurrence; coefficients must form a field."""
    if not a or not b:
        return 0
    da, db = len(a) - 1, len(b) - 1
    if db == 0:
        return b[0] ** da
    if da == 0:
        return a[0] ** db
    r = rem(a, b)
    if not r:
        return 0
    dr = len(r) - 1
    sign = -1 if (da * db) % 2 else 1
    return sign * b[-1] ** (da - dr) * resultant(b, r)
