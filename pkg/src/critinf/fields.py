"""Exact coefficient fields: the rationals and their one-parameter extensions.

Rationals are ``gmpy2.mpq``.  Elements of the other fields are immutable
objects kept in canonical form, so ``==`` and ``hash`` agree with
mathematical equality.  Extensions are built over any of these fields,
which gives towers such as ``QQ(s)[c]/(m(c))``.

An algebraic extension does not require an irreducible modulus.  When an
inversion hits a zero divisor the field raises :class:`ZeroDivisor`
carrying the offending factor, and the caller splits the modulus and
reruns its computation on both pieces (dynamic evaluation).
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Integral

from gmpy2 import mpq

from . import upoly

__all__ = [
    "mpq",
    "DivisionByZero",
    "ZeroDivisor",
    "Field",
    "RationalField",
    "QQ",
    "RationalFunctionField",
    "RationalFunction",
    "AlgebraicField",
    "AlgebraicElement",
    "field_arith",
    "field_invert",
    "run_split",
]


_MPQ = type(mpq(0))


class DivisionByZero(ZeroDivisionError):
    pass


class ZeroDivisor(ArithmeticError):
    """A non-invertible nonzero element was met in ``field``.

    ``factor`` is a proper monic factor of ``field.modulus`` (dense, over
    ``field.base``).
    """

    def __init__(self, field: "AlgebraicField", factor: tuple):
        self.field = field
        self.factor = factor
        super().__init__(f"zero divisor modulo {field.format_dense(field.modulus)}: "
                         f"factor {field.format_dense(factor)}")

    def branches(self) -> tuple[tuple, tuple]:
        m = self.field.modulus
        return self.factor, upoly.monic(upoly.exquo(m, self.factor))


def _is_rational_scalar(x) -> bool:
    return isinstance(x, (int, Integral, Fraction)) or type(x) is _MPQ


class Field:
    """Common interface; subclasses define ``zero``, ``one`` and ``convert``."""

    param: str | None = None

    def __call__(self, x):
        return self.convert(x)

    def format_dense(self, a: tuple, var: str | None = None) -> str:
        from .printing import format_dense

        return format_dense(a, self, var or self.param or "?")


class RationalField(Field):
    name = "QQ"
    zero = mpq(0)
    one = mpq(1)
    base = None

    def convert(self, x):
        if isinstance(x, str):
            return mpq(x)
        return mpq(x)

    def is_rational(self, x) -> bool:
        return True

    def to_rational(self, x):
        return mpq(x)

    def gen(self):
        raise ValueError("QQ has no parameter")

    def characteristic(self) -> int:
        return 0

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


# -- QQ(s) ------------------------------------------------------------------


class RationalFunctionField(Field):
    """Rational functions in one parameter over QQ."""

    base = QQ

    def __init__(self, param: str = "s"):
        self.param = param
        self.zero = RationalFunction(self, (), (mpq(1),))
        self.one = RationalFunction(self, (mpq(1),), (mpq(1),))

    def convert(self, x):
        if isinstance(x, RationalFunction):
            if x.field is not self and x.field != self:
                raise TypeError("element of a different field")
            return x
        if isinstance(x, str):
            x = mpq(x)
        c = mpq(x)
        return RationalFunction(self, (c,) if c else (), (mpq(1),))

    def from_dense(self, num: tuple, den: tuple = (1,)) -> "RationalFunction":
        return RationalFunction.make(self, tuple(map(mpq, num)), tuple(map(mpq, den)))

    def gen(self) -> "RationalFunction":
        return RationalFunction(self, (mpq(0), mpq(1)), (mpq(1),))

    def is_rational(self, x) -> bool:
        return len(x.num) <= 1 and len(x.den) == 1

    def to_rational(self, x):
        if not self.is_rational(x):
            raise ValueError(f"{x} is not a rational constant")
        return x.num[0] if x.num else mpq(0)

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and other.param == self.param

    def __hash__(self):
        return hash(("QQ(s)", self.param))

    def __repr__(self):
        return f"QQ({self.param})"


class RationalFunction:
    """``num/den`` with dense QQ-coefficient tuples, gcd 1, ``den`` monic."""

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field, num, den):
        self.field = field
        self.num = num
        self.den = den
        self._hash = None

    @staticmethod
    def make(field, num, den) -> "RationalFunction":
        if not den:
            raise DivisionByZero("zero denominator")
        if not num:
            return RationalFunction(field, (), (mpq(1),))
        if len(den) > 1:
            g = upoly.gcd(num, den)
            if len(g) > 1:
                num = upoly.exquo(num, g)
                den = upoly.exquo(den, g)
        lc = den[-1]
        if lc != 1:
            inv = 1 / lc
            num = tuple(c * inv for c in num)
            den = tuple(c * inv for c in den)
        return RationalFunction(field, num, den)

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if _is_rational_scalar(other):
            c = mpq(other)
            return RationalFunction(self.field, (c,) if c else (), (mpq(1),))
        return NotImplemented

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            if len(self.den) == 1 and len(self.num) <= 1:
                self._hash = hash(self.num[0] if self.num else 0)
            else:
                self._hash = hash((self.num, self.den))
        return self._hash

    def __neg__(self):
        return RationalFunction(self.field, tuple(-c for c in self.num), self.den)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o
        if self.den == o.den:
            if len(self.den) == 1:
                return RationalFunction(self.field, upoly.add(self.num, o.num), self.den)
            return RationalFunction.make(self.field, upoly.add(self.num, o.num), self.den)
        num = upoly.add(upoly.mul(self.num, o.den), upoly.mul(o.num, self.den))
        return RationalFunction.make(self.field, num, upoly.mul(self.den, o.den))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if not self.num or not o.num:
            return self.field.zero
        if len(self.den) == 1 and len(o.den) == 1:
            return RationalFunction(self.field, upoly.mul(self.num, o.num), self.den)
        # cross-cancel keeps the intermediate degrees small
        g1 = upoly.gcd(self.num, o.den)
        g2 = upoly.gcd(o.num, self.den)
        n1, d2 = (upoly.exquo(self.num, g1), upoly.exquo(o.den, g1)) if len(g1) > 1 else (self.num, o.den)
        n2, d1 = (upoly.exquo(o.num, g2), upoly.exquo(self.den, g2)) if len(g2) > 1 else (o.num, self.den)
        num = upoly.mul(n1, n2)
        den = upoly.mul(d1, d2)
        lc = den[-1]
        if lc != 1:
            inv = 1 / lc
            num = tuple(c * inv for c in num)
            den = tuple(c * inv for c in den)
        return RationalFunction(self.field, num, den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise DivisionByZero("inverse of zero in " + repr(self.field))
        return RationalFunction.make(self.field, self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction(self.field, upoly.power(self.num, k) if k else (mpq(1),),
                                upoly.power(self.den, k))

    def is_polynomial(self) -> bool:
        return len(self.den) == 1

    def __repr__(self):
        from .printing import format_coeff

        return format_coeff(self, self.field)


# -- algebraic extensions ---------------------------------------------------


class AlgebraicField(Field):
    """``base[param]/(modulus)`` for a monic squarefree ``modulus``."""

    def __init__(self, base: Field, param: str, modulus):
        modulus = tuple(base.convert(c) for c in modulus)
        modulus = upoly.trim(modulus)
        if len(modulus) < 2:
            raise ValueError("modulus must have degree >= 1")
        modulus = upoly.monic(modulus)
        if len(upoly.gcd(modulus, upoly.deriv(modulus))) > 1:
            raise ValueError("modulus must be squarefree")
        self.base = base
        self.param = param
        self.modulus = modulus
        self.degree = len(modulus) - 1
        self.zero = AlgebraicElement(self, ())
        self.one = AlgebraicElement(self, (base.one,))

    def convert(self, x):
        if isinstance(x, AlgebraicElement):
            if x.field == self:
                return x
            if x.field.param == self.param and x.field.base == self.base:
                # reduction onto a factor of the modulus after a split
                return self.from_dense(x.residue)
        c = self.base.convert(x)
        return AlgebraicElement(self, (c,) if c else ())

    def from_dense(self, residue) -> "AlgebraicElement":
        res = upoly.trim(tuple(self.base.convert(c) for c in residue))
        if len(res) > self.degree:
            res = upoly.rem(res, self.modulus)
        return AlgebraicElement(self, res)

    def gen(self) -> "AlgebraicElement":
        return self.from_dense((self.base.zero, self.base.one))

    def is_rational(self, x) -> bool:
        return len(x.residue) <= 1 and (not x.residue or self.base.is_rational(x.residue[0]))

    def to_rational(self, x):
        if not self.is_rational(x):
            raise ValueError("not a rational constant")
        return self.base.to_rational(x.residue[0]) if x.residue else mpq(0)

    def split(self, factor) -> "AlgebraicField":
        return AlgebraicField(self.base, self.param, factor)

    def __eq__(self, other):
        return (isinstance(other, AlgebraicField) and other.param == self.param
                and other.base == self.base and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("ext", self.param, self.base, self.modulus))

    def __repr__(self):
        return f"{self.base!r}[{self.param}]/({self.format_dense(self.modulus)})"


class AlgebraicElement:
    __slots__ = ("field", "residue", "_hash")

    def __init__(self, field: AlgebraicField, residue: tuple):
        self.field = field
        self.residue = residue
        self._hash = None

    def _coerce(self, other):
        if isinstance(other, AlgebraicElement):
            if other.field is not self.field and other.field != self.field:
                # an element of a subfield of the tower
                return self.field.convert(other) if other.field == self.field.base else NotImplemented
            return other
        try:
            c = self.field.base.convert(other)
        except TypeError:
            return NotImplemented
        return AlgebraicElement(self.field, (c,) if c else ())

    def __bool__(self):
        return bool(self.residue)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.residue == o.residue

    def __hash__(self):
        if self._hash is None:
            if len(self.residue) <= 1:
                self._hash = hash(self.residue[0] if self.residue else 0)
            else:
                self._hash = hash(self.residue)
        return self._hash

    def __neg__(self):
        return AlgebraicElement(self.field, upoly.neg(self.residue))

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return AlgebraicElement(self.field, upoly.add(self.residue, o.residue))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return AlgebraicElement(self.field, upoly.sub(self.residue, o.residue))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return AlgebraicElement(self.field, upoly.sub(o.residue, self.residue))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        prod = upoly.mul(self.residue, o.residue)
        if len(prod) > self.field.degree:
            prod = upoly.rem(prod, self.field.modulus)
        return AlgebraicElement(self.field, prod)

    __rmul__ = __mul__

    def inverse(self):
        if not self.residue:
            raise DivisionByZero("inverse of zero in " + repr(self.field))
        g, u, _ = upoly.xgcd(self.residue, self.field.modulus)
        if len(g) > 1:
            raise ZeroDivisor(self.field, g)
        return AlgebraicElement(self.field, u)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __repr__(self):
        from .printing import format_coeff

        return format_coeff(self, self.field)


# -- functional surface -----------------------------------------------------


def field_arith(a, b, op: str):
    """``op`` is one of ``add``, ``sub``, ``mul``, ``div``."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise DivisionByZero("division by zero")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def field_invert(a):
    if not a:
        raise DivisionByZero("inverse of zero")
    if isinstance(a, (RationalFunction, AlgebraicElement)):
        return a.inverse()
    return 1 / mpq(a)


def run_split(fn, field: AlgebraicField):
    """Run ``fn(field)``; on a zero divisor split the modulus and recurse.

    Returns a list of ``(field, result)`` pairs whose moduli multiply to the
    original modulus.
    """
    try:
        return [(field, fn(field))]
    except ZeroDivisor as exc:
        if exc.field != field:
            raise
        out = []
        for piece in exc.branches():
            out.extend(run_split(fn, field.split(piece)))
        return out
