"""String forms for coefficients and polynomials.

Two styles exist.  The machine style (``3*t^2+16*t``) is what
:func:`critinf.parser.parse_poly` reads back.  The report style
(``3t2+16t``) mirrors the terse output of classical computer algebra
sessions and is only used for human-readable reports.
"""

from __future__ import annotations

from gmpy2 import mpq

_MPQ = type(mpq(0))


def _is_rational_coeff(c) -> bool:
    if isinstance(c, (int, _MPQ)):
        return True
    field = getattr(c, "field", None)
    return field is not None and field.is_rational(c)


def _rational_of(c):
    if isinstance(c, (int, _MPQ)):
        return mpq(c)
    return c.field.to_rational(c)


def format_rational(q) -> str:
    q = mpq(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_coeff(c, field=None, style: str = "machine") -> str:
    """Format a field element on its own (no surrounding parentheses)."""
    if _is_rational_coeff(c):
        return format_rational(_rational_of(c))
    field = c.field
    if hasattr(c, "num"):
        num = format_dense(c.num, field.base, field.param, style)
        if len(c.den) == 1:
            return num
        den = format_dense(c.den, field.base, field.param, style)
        if len(c.num) > 1 or (c.num and not _is_rational_coeff(c.num[0])):
            num = f"({num})"
        return f"{num}/({den})"
    return format_dense(c.residue, field.base, field.param, style)


def _monomial_str(exps, names, style) -> str:
    parts = []
    for e, v in zip(exps, names):
        if not e:
            continue
        if style == "machine":
            parts.append(v if e == 1 else f"{v}^{e}")
        else:
            parts.append(v if e == 1 else f"{v}{e}")
    return ("*" if style == "machine" else "").join(parts)


def _term_strings(items, names, style):
    """Yield signed term strings for ``(exps, coeff)`` pairs already ordered."""
    star = "*" if style == "machine" else ""
    for exps, c in items:
        mono = _monomial_str(exps, names, style)
        if _is_rational_coeff(c):
            q = _rational_of(c)
            sign = "-" if q < 0 else "+"
            a = abs(q)
            if not mono:
                body = format_rational(a)
            elif a == 1:
                body = mono
            else:
                body = format_rational(a) + star + mono
            yield sign, body
        else:
            cs = format_coeff(c, style=style)
            body = f"({cs})" if not mono else f"({cs}){star}{mono}"
            yield "+", body


def join_terms(items, names, style: str = "machine") -> str:
    out = []
    for sign, body in _term_strings(items, names, style):
        if not out:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(sign + body)
    return "".join(out) if out else "0"


def format_dense(a, field, var: str, style: str = "machine") -> str:
    """Format a dense univariate tuple (lowest degree first)."""
    items = [((i,), a[i]) for i in range(len(a) - 1, -1, -1) if a[i]]
    return join_terms(items, (var,), style)
