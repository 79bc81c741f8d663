# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of :mod:`._kernels_py`; same contract, same results."""

from heapq import heapify, heappop, heappush


def reduce_poly(dict p, list lms, list tails, object guard, bint full=True):
    cdef dict r = {}
    cdef Py_ssize_t nred = len(lms)
    cdef Py_ssize_t i
    cdef object m, c, mg, shift, k, v, nv, old
    cdef list tail
    cdef list heap = [-k for k in p]
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
        tail = tails[i]
        for k, v in tail:
            k = k + shift
            old = p.get(k)
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


def spoly(object f_lm, list f_tail, object g_lm, list g_tail, object lcm):
    cdef object s1 = lcm - f_lm
    cdef object s2 = lcm - g_lm
    cdef dict p = {}
    cdef object k, v, nv
    for k, v in f_tail:
        p[k + s1] = v
    for k, v in g_tail:
        k = k + s2
        nv = p.get(k, 0) - v
        if nv:
            p[k] = nv
        else:
            p.pop(k, None)
    return p
