"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace ignored, no implicit multiplication)::

    expr     := ['+'|'-'] term (('+'|'-') term)*
    term     := factor (('*'|'/') factor)*
    factor   := base ('^' natural)?
    base     := rational | identifier | '(' expr ')'
    rational := integer ('/' natural)?

Identifiers are ring variables or the field parameter.  A ``/`` is only
accepted when the divisor is a nonzero constant of the coefficient field,
which is what the printer emits for coefficients such as ``1/(s-1)``.
"""

from __future__ import annotations

import re

from gmpy2 import mpq

from .poly import Polynomial, PolyRing

__all__ = ["ParseError", "UnknownVariable", "parse_poly"]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


class ParseError(ValueError):
    def __init__(self, message: str, position: int, expected: str | None = None):
        self.position = position
        self.expected = expected
        detail = f" (expected {expected})" if expected else ""
        super().__init__(f"{message} at position {position}{detail}")


class UnknownVariable(ParseError):
    pass


def _tokenize(text: str):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # pragma: no cover - the pattern matches any non-space
            raise ParseError("unexpected input", pos)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            out.append(("num", m.group(1), start))
        elif m.group(2) is not None:
            out.append(("id", m.group(2), start))
        else:
            out.append(("op", m.group(3), start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.toks = _tokenize(text)
        self.i = 0
        self.ring = ring
        self.field = ring.field

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"unexpected {val or 'end of input'!r}", pos, repr(op))

    def parse(self) -> Polynomial:
        p = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", pos, "operator or end of input")
        return p

    def expr(self) -> Polynomial:
        sign = 1
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                acc = acc + t if val == "+" else acc - t
            else:
                return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = acc * self.factor()
            elif kind == "op" and val == "/":
                self.take()
                d = self.factor()
                if not d.is_constant() or not d:
                    raise ParseError("division by a non-constant or zero", pos, "nonzero constant divisor")
                acc = acc.scale(1 / d.constant_coeff())
            else:
                return acc

    def factor(self) -> Polynomial:
        b = self.base()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "num":
                raise ParseError(f"unexpected {val or 'end of input'!r}", pos, "natural exponent")
            b = b ** int(val)
        return b

    def base(self) -> Polynomial:
        kind, val, pos = self.take()
        if kind == "num":
            return self.ring.constant(mpq(int(val)))
        if kind == "id":
            if val in self.ring.index:
                return self.ring.gen(val)
            if self.field.param == val:
                return self.ring.constant(self.field.gen())
            raise UnknownVariable(f"unknown variable {val!r}", pos, "a ring variable or the field parameter")
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        raise ParseError(f"unexpected {val or 'end of input'!r}", pos, "number, identifier or '('")


def parse_poly(text: str, ring: PolyRing) -> Polynomial:
    return _Parser(text, ring).parse()


def parse_dense(text: str, field, var: str) -> tuple:
    """Parse a univariate polynomial in ``var`` over ``field`` into dense form."""
    ring = PolyRing(field, (var,))
    return parse_poly(text, ring).to_dense(0)
