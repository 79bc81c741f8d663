"""Pure-Python reduction kernels (reference implementation and fallback).

Polynomials are dicts ``packed_monomial -> coefficient``.  Reducers are
monic and given as parallel lists of leading monomials and tails, a tail
being the list of ``(packed_monomial, coeff)`` pairs without the leading
term.  ``guard`` is the divisibility mask of the packer.
"""

from heapq import heapify, heappop, heappush


def reduce_poly(p, lms, tails, guard, full=True):
    """Reduce ``p`` (consumed) modulo the reducers.

    With ``full`` the remainder is fully reduced; otherwise only the
    leading terms are reduced and the tail is returned untouched.
    Pending monomials sit in a max-heap (negated keys, lazy deletion) so
    the next term is found without rescanning ``p``.
    """
    r = {}
    nred = len(lms)
    heap = [-k for k in p]
    heapify(heap)
    while heap:
        m = -heappop(heap)
        c = p.pop(m, None)
        if c is None:
            continue
        mg = m | guard
        i = 0
        while i < nred:
            if (mg - lms[i]) & guard == guard:
                break
            i += 1
        if i == nred:
            r[m] = c
            if not full:
                r.update(p)
                return r
            continue
        shift = m - lms[i]
        get = p.get
        for k, v in tails[i]:
            k += shift
            old = get(k)
            if old is None:
                p[k] = -c * v
                heappush(heap, -k)
            else:
                nv = old - c * v
                if nv:
                    p[k] = nv
                else:
                    del p[k]
    return r


def spoly(f_lm, f_tail, g_lm, g_tail, lcm):
    """S-polynomial of two monic polynomials; leading terms cancel exactly."""
    s1 = lcm - f_lm
    s2 = lcm - g_lm
    p = {k + s1: v for k, v in f_tail}
    get = p.get
    for k, v in g_tail:
        k += s2
        nv = get(k, 0) - v
        if nv:
            p[k] = nv
        else:
            p.pop(k, None)
    return p

