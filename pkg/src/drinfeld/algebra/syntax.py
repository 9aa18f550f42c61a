"""Text syntax for elements of F_q, A = F_q[T] and K = F_q(T).

Grammar (whitespace ignored)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | power
    power  := atom ('^' INT)?
    atom   := INT | 'T' | 'a' | '(' expr ')'

Integers denote elements of the prime field, ``a`` the generator of F_q over
F_p (extension fields only), ``T`` the polynomial variable.

The printer emits the canonical form: terms by decreasing degree joined by
``+``, coefficients as nonnegative integers (prime field) or as polynomials in
``a`` wrapped in parentheses when they have more than one term, e.g.
``T^3+2*T`` or ``(a+1)*T^2+a``.  A fraction prints as ``num/den`` with sums
parenthesised.  ``parse(format(x)) == x`` for every element.
"""

from __future__ import annotations

import re

from .field import FieldParams
from .poly import Poly
from .rational import RatK

_TOKEN = re.compile(r"\s*(?:(\d+)|([Ta])|(.))")


class ParseError(ValueError):
    pass


def _tokenize(s: str):
    out = []
    pos = 0
    s = s.strip()
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if m is None:  # pragma: no cover - regex always matches a char
            raise ParseError(f"bad input at {pos}")
        num, var, op = m.groups()
        if num is not None:
            out.append(("int", int(num)))
        elif var is not None:
            out.append(("var", var))
        elif op is not None:
            if op.isspace():
                pos = m.end()
                continue
            if op not in "+-*/^()":
                raise ParseError(f"unexpected character {op!r} in {s!r}")
            out.append(("op", op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, F: FieldParams, text: str, var: str):
        self.F = F
        self.toks = _tokenize(text)
        self.i = 0
        self.var = var
        self.text = text

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expect(self, op):
        t = self.take()
        if t != ("op", op):
            raise ParseError(f"expected {op!r} in {self.text!r}")

    def parse(self) -> RatK:
        if not self.toks:
            raise ParseError("empty expression")
        v = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input in {self.text!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.factor()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            w = self.factor()
            if op == "*":
                v = v * w
            else:
                if w.is_zero():
                    raise ParseError(f"division by zero in {self.text!r}")
                v = v / w
        return v

    def factor(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.factor()
        return self.power()

    def power(self):
        v = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, n = self.take()
            if kind != "int":
                raise ParseError(f"exponent must be a nonnegative integer in {self.text!r}")
            v = v**n
        return v

    def atom(self):
        kind, val = self.take()
        F = self.F
        if kind == "int":
            return RatK.const(F, F.from_int(val))
        if kind == "var":
            if val == self.var:
                return RatK.of(Poly.T(F))
            if val == "a" and self.var != "a":
                if F.e == 1:
                    raise ParseError("'a' is only meaningful over an extension field")
                return RatK.const(F, F.p)  # the code of the generator a
            raise ParseError(f"unknown variable {val!r}")
        if (kind, val) == ("op", "("):
            v = self.expr()
            self.expect(")")
            return v
        raise ParseError(f"unexpected token {val!r} in {self.text!r}")


def parse_rat(F: FieldParams, s: str) -> RatK:
    return _Parser(F, s, "T").parse()


def parse_poly(F: FieldParams, s: str) -> Poly:
    r = parse_rat(F, s)
    if not r.is_integral():
        raise ParseError(f"{s!r} is not a polynomial")
    return r.num


def parse_field_elem(F: FieldParams, s: str) -> int:
    f = parse_poly(F, s)
    if f.deg > 0:
        raise ParseError(f"{s!r} is not a constant")
    return f.coeff(0)


def parse_prime_poly(p: int, s: str, var: str = "a") -> list[int]:
    """Coefficients (low first) of a polynomial over F_p written in ``var``."""
    from .field import field_create

    Fp = field_create(p)
    f = _Parser(Fp, s.replace(var, "T") if var != "T" else s, "T").parse()
    if not f.is_integral():
        raise ParseError(f"{s!r} is not a polynomial")
    return f.num.coeffs()


# ---------------------------------------------------------------------------
# printing


def format_elem(F: FieldParams, c: int) -> str:
    """A field element: an integer, or a polynomial in ``a`` over F_p."""
    if F.e == 1:
        return str(c)
    ds = F.digits(c)
    terms = []
    for i in range(F.e - 1, -1, -1):
        d = ds[i]
        if d == 0:
            continue
        if i == 0:
            terms.append(str(d))
        else:
            mono = "a" if i == 1 else f"a^{i}"
            terms.append(mono if d == 1 else f"{d}*{mono}")
    return "+".join(terms) if terms else "0"


def _coef_str(F, c):
    s = format_elem(F, c)
    return f"({s})" if "+" in s else s


def format_poly(f: Poly) -> str:
    F = f.F
    if f.is_zero():
        return "0"
    terms = []
    for k in range(f.deg, -1, -1):
        c = int(f.c[k])
        if c == 0:
            continue
        cs = _coef_str(F, c)
        if k == 0:
            terms.append(cs)
            continue
        mono = "T" if k == 1 else f"T^{k}"
        terms.append(mono if c == 1 else f"{cs}*{mono}")
    return "+".join(terms)


def _wrap(s: str) -> str:
    return f"({s})" if ("+" in s or "/" in s) else s


def format_rat(x: RatK) -> str:
    if x.den.is_one():
        return format_poly(x.num)
    return f"{_wrap(format_poly(x.num))}/{_wrap(format_poly(x.den))}"
