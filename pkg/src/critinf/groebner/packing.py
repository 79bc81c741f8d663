"""Monomials packed into Python integers.

A monomial ``e`` becomes the integer whose bit fields hold, from the most
significant end, the weight-matrix values ``M @ e`` followed by the raw
exponents.  Each field is ``WIDTH`` bits plus one guard bit.  With this
layout

* monomial order  == integer order,
* multiplication  == integer addition,
* ``a | b``       == ``((b | G) - a) & G == G`` for the guard mask ``G``.
"""

from __future__ import annotations

from ..poly import MonomialOrder

WIDTH = 24
STRIDE = WIDTH + 1
LIMIT = 1 << WIDTH


class Packer:
    def __init__(self, nvars: int, order: MonomialOrder):
        self.nvars = nvars
        self.order = order
        self.rows = tuple(order.rows(nvars))
        nfields = len(self.rows) + nvars
        self.nfields = nfields
        self.guard = sum(1 << (j * STRIDE + WIDTH) for j in range(nfields))
        self._emask = LIMIT - 1
        # sparse rows speed up encoding
        self._sparse = [tuple(i for i, w in enumerate(r) if w) if all(w in (0, 1) for w in r) else None
                        for r in self.rows]

    def encode(self, e) -> int:
        n = self.nvars
        v = 0
        for r, sp in zip(self.rows, self._sparse):
            val = sum(e[i] for i in sp) if sp is not None else sum(w * x for w, x in zip(r, e))
            if val >= LIMIT:
                raise OverflowError("monomial degree exceeds the packing width")
            v = (v << STRIDE) | val
        for i in range(n):
            v = (v << STRIDE) | e[i]
        return v

    def decode(self, k: int) -> tuple[int, ...]:
        out = [0] * self.nvars
        m = self._emask
        for i in range(self.nvars - 1, -1, -1):
            out[i] = k & m
            k >>= STRIDE
        return tuple(out)

    def divides(self, a: int, b: int) -> bool:
        g = self.guard
        return ((b | g) - a) & g == g

    def pack_poly(self, terms: dict) -> dict:
        enc = self.encode
        return {enc(e): c for e, c in terms.items()}

    def unpack_poly(self, packed: dict) -> dict:
        dec = self.decode
        return {dec(k): c for k, c in packed.items()}
