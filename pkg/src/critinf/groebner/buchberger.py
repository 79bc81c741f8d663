"""Buchberger's algorithm with the Gebauer–Möller criteria.

Works on packed polynomials (see :mod:`.packing`).  Input polynomials and
S-pairs share one queue processed by increasing sugar degree, ties broken
by the monomial order on the leading monomial, so the output is
deterministic for a fixed input.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from ._kernels import reduce_poly, spoly
from .packing import Packer

log = logging.getLogger(__name__)


@dataclass
class Stats:
    pairs: int = 0
    zero_reductions: int = 0
    criteria_skips: int = 0


class _Basis:
    """Growing basis: monic packed polynomials plus their leading data."""

    def __init__(self, packer: Packer):
        self.packer = packer
        self.lm: list[int] = []
        self.lexp: list[tuple[int, ...]] = []
        self.tail: list[list] = []
        self.sugar: list[int] = []
        self.active: list[int] = []
        self._red = None

    def reducers(self):
        if self._red is None:
            # smallest leading monomials first: their multiples are the
            # cheapest reducers and keep coefficient growth down
            act = sorted(self.active, key=self.lm.__getitem__)
            self._red = ([self.lm[i] for i in act], [self.tail[i] for i in act])
        return self._red

    def add(self, p: dict, sugar: int) -> int:
        lm = max(p)
        c = p[lm]
        if c != 1:
            inv = 1 / c
            tail = [(k, v * inv) for k, v in p.items() if k != lm]
        else:
            tail = [(k, v) for k, v in p.items() if k != lm]
        self.lm.append(lm)
        self.lexp.append(self.packer.decode(lm))
        self.tail.append(tail)
        self.sugar.append(sugar)
        self._red = None
        return len(self.lm) - 1


def _lcm_exp(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a, b):
    return not any(x and y for x, y in zip(a, b))


def _divides_exp(a, b):
    return all(x <= y for x, y in zip(a, b))


def buchberger(polys: list[dict], packer: Packer, one=1, stats: Stats | None = None) -> list[dict]:
    """Reduced Gröbner basis of packed, nonzero polynomials.

    Returns monic packed polynomials sorted by increasing leading monomial.
    """
    stats = stats or Stats()
    B = _Basis(packer)
    guard = packer.guard
    encode = packer.encode
    pairs: list[tuple[int, int, int, int]] = []

    def update(h: int):
        nonlocal pairs
        lh = B.lexp[h]
        lmh = B.lm[h]
        cand = []
        for g in B.active:
            lg = B.lexp[g]
            l = _lcm_exp(lg, lh)
            cand.append((g, l, _coprime(lg, lh)))
        kept = []
        for idx, (g, l, cop) in enumerate(cand):
            if cop:
                kept.append((g, l, cop))
                continue
            rest = cand[idx + 1:]
            if any(_divides_exp(l2, l) for _, l2, _ in rest) or any(_divides_exp(l2, l) for _, l2, _ in kept):
                stats.criteria_skips += 1
                continue
            kept.append((g, l, cop))
        new_pairs = []
        for g, l, cop in kept:
            if cop:
                stats.criteria_skips += 1
                continue
            dl = sum(l)
            sug = max(B.sugar[g] - sum(B.lexp[g]), B.sugar[h] - sum(lh)) + dl
            new_pairs.append((sug, encode(l), g, h))
        survivors = []
        for pr in pairs:
            d, lk, i, j = pr
            if packer.divides(lmh, lk):
                lih = encode(_lcm_exp(B.lexp[i], lh))
                ljh = encode(_lcm_exp(B.lexp[j], lh))
                if lih != lk and ljh != lk:
                    stats.criteria_skips += 1
                    continue
            survivors.append(pr)
        pairs = survivors + new_pairs
        B.active = [g for g in B.active if not packer.divides(lmh, B.lm[g])] + [h]
        B._red = None

    def insert(p: dict, sugar: int, tail: bool = True) -> bool:
        """Add a nonzero reduced polynomial; return True if it is a unit."""
        h = B.add(p, sugar)
        if B.lm[h] == 0:
            return True
        update(h)
        if tail:
            _tail_reduce(B, h, guard)
        return False

    # All inputs join the basis before any S-pair is formed: processing them
    # one at a time can build a large intermediate ideal (two generic
    # curves already meet in many points) that a later input collapses.
    inputs = _interreduce_inputs(polys, guard)
    for f in sorted(inputs, key=max):
        if insert(f, _total_degree(f, packer), tail=False):
            return [{0: one}]

    while pairs:
        best = min(range(len(pairs)), key=lambda q: (pairs[q][0], pairs[q][1]))
        sug, lk, i, j = pairs.pop(best)
        stats.pairs += 1
        s = spoly(B.lm[i], B.tail[i], B.lm[j], B.tail[j], lk)
        lms, tails = B.reducers()
        r = reduce_poly(s, lms, tails, guard, True)
        if not r:
            stats.zero_reductions += 1
            continue
        if insert(r, max(sug, _total_degree(r, packer))):
            return [{0: one}]

    log.debug("buchberger: %d pairs, %d zero reductions, %d skipped",
              stats.pairs, stats.zero_reductions, stats.criteria_skips)
    return _interreduce(B, guard, one)


def _total_degree(p: dict, packer: Packer) -> int:
    return max(sum(packer.decode(k)) for k in p)


def _interreduce_inputs(polys: list[dict], guard: int) -> list[dict]:
    """Reduce each input by the earlier ones until nothing changes."""
    cur = [dict(p) for p in polys if p]
    while True:
        nxt = []
        for p in cur:
            lms = [max(q) for q in nxt]
            tails = [[(k, v) for k, v in q.items() if k != m] for q, m in zip(nxt, lms)]
            r = reduce_poly(dict(p), lms, tails, guard, True)
            if r:
                lm = max(r)
                inv = 1 / r[lm]
                nxt.append({k: v * inv for k, v in r.items()})
        if len(nxt) == len(cur) and all(a == b for a, b in zip(nxt, cur)):
            return nxt
        cur = nxt


def _tail_reduce(B: _Basis, h: int, guard: int) -> None:
    """Keep the active basis interreduced after ``h`` joined it.

    Reducing against a set whose tails still contain reducible terms lets
    rational coefficients grow exponentially; an interreduced set behaves
    like a reduced echelon form and keeps them bounded.
    """
    lmh = B.lm[h]
    lms, tails = B.reducers()
    changed = False
    for g in B.active:
        if g == h:
            continue
        tail = B.tail[g]
        if not any(((k | guard) - lmh) & guard == guard for k, _ in tail):
            continue
        r = reduce_poly(dict(tail), lms, tails, guard, True)
        B.tail[g] = list(r.items())
        changed = True
    if changed:
        B._red = None


def _interreduce(B: _Basis, guard: int, one) -> list[dict]:
    act = sorted(B.active, key=lambda i: B.lm[i])
    minimal = []
    for i in act:
        if not any(B.packer.divides(B.lm[j], B.lm[i]) for j in minimal):
            minimal.append(i)
    out = []
    for i in minimal:
        others = [j for j in minimal if j != i]
        lms = [B.lm[j] for j in others]
        tails = [B.tail[j] for j in others]
        t = reduce_poly(dict(B.tail[i]), lms, tails, guard, True)
        t[B.lm[i]] = one
        out.append(t)
    return out
