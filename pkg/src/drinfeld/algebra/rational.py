"""The rational function field K = F_q(T)."""

from __future__ import annotations

import numpy as np

from .field import FieldParams
from .poly import Poly, poly_gcd, poly_valuation


class RatK:
    """A reduced fraction num/den with den monic and gcd(num, den) = 1.

    Zero is 0/1.  Every constructor path canonicalises, so ``==`` is a plain
    comparison of the two parts.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None, *, _reduced: bool = False):
        F = num.F
        if den is None:
            den = Poly.one(F)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            if num.is_zero():
                den = Poly.one(F)
            elif den.deg == 0:
                if den.lc != 1:
                    num = num.scale(F.inv(den.lc))
                    den = Poly.one(F)
            else:
                g = poly_gcd(num, den)
                if not g.is_one():
                    num = num.exact_div(g)
                    den = den.exact_div(g)
                if den.lc != 1:
                    u = F.inv(den.lc)
                    num, den = num.scale(u), den.scale(u)
        self.num = num
        self.den = den

    # -- constructors -----------------------------------------------------------

    @classmethod
    def zero(cls, F: FieldParams) -> RatK:
        return cls(Poly.zero(F), Poly.one(F), _reduced=True)

    @classmethod
    def one(cls, F: FieldParams) -> RatK:
        return cls(Poly.one(F), Poly.one(F), _reduced=True)

    @classmethod
    def const(cls, F: FieldParams, c: int) -> RatK:
        return cls(Poly.const(F, c), Poly.one(F), _reduced=True)

    @classmethod
    def of(cls, x, F: FieldParams | None = None) -> RatK:
        """Coerce a RatK, Poly or integer."""
        if isinstance(x, RatK):
            return x
        if isinstance(x, Poly):
            return cls(x, Poly.one(x.F), _reduced=True)
        if isinstance(x, (int, np.integer)):
            if F is None:
                raise TypeError("field needed to coerce an integer")
            return cls.const(F, F.from_int(int(x)))
        raise TypeError(f"cannot coerce {type(x).__name__} to RatK")

    @property
    def F(self) -> FieldParams:
        return self.num.F

    # -- predicates ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_integral(self) -> bool:
        return self.den.deg == 0

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, (Poly, int, np.integer)):
            other = RatK.of(other, self.F)
        if not isinstance(other, RatK):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- arithmetic -----------------------------------------------------------------

    def _co(self, other):
        if isinstance(other, RatK):
            return other
        if isinstance(other, (Poly, int, np.integer)):
            return RatK.of(other, self.F)
        return None

    def __add__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        if self.den.deg == 0 and o.den.deg == 0:
            return RatK(self.num + o.num, self.den, _reduced=True)
        if self.den == o.den:
            return RatK(self.num + o.num, self.den)
        g = poly_gcd(self.den, o.den)
        if g.is_one():
            # coprime denominators: the sum is already reduced
            return RatK(self.num * o.den + o.num * self.den, self.den * o.den, _reduced=True)
        d1 = self.den.exact_div(g)
        d2 = o.den.exact_div(g)
        return RatK(self.num * d2 + o.num * d1, d1 * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatK(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        if self.num.is_zero() or o.num.is_zero():
            return RatK.zero(self.F)
        if self.den.deg == 0 and o.den.deg == 0:
            return RatK(self.num * o.num, self.den, _reduced=True)
        # cross-cancel before multiplying
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        n1, d2 = (self.num, o.den) if g1.is_one() else (self.num.exact_div(g1), o.den.exact_div(g1))
        n2, d1 = (o.num, self.den) if g2.is_one() else (o.num.exact_div(g2), self.den.exact_div(g2))
        num, den = n1 * n2, d1 * d2
        if den.lc != 1:
            u = self.F.inv(den.lc)
            num, den = num.scale(u), den.scale(u)
        return RatK(num, den, _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> RatK:
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero in K")
        num, den = self.den, self.num
        if den.lc != 1:
            u = self.F.inv(den.lc)
            num, den = num.scale(u), den.scale(u)
        return RatK(num, den, _reduced=True)

    def __truediv__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> RatK:
        if n < 0:
            return self.inverse() ** (-n)
        return RatK(self.num**n, self.den**n, _reduced=True)

    def frobenius(self, k: int = 1) -> RatK:
        return RatK(self.num.frobenius(k), self.den.frobenius(k), _reduced=True)

    def qth_root(self) -> RatK:
        return RatK(self.num.qth_root(), self.den.qth_root(), _reduced=True)

    def is_qth_power(self) -> bool:
        return self.num.is_qth_power() and self.den.is_qth_power()

    # -- valuations ---------------------------------------------------------------

    def valuation(self, prime: Poly) -> int | float:
        """v_prime(num) - v_prime(den); inf for zero."""
        if self.num.is_zero():
            return float("inf")
        return poly_valuation(self.num, prime) - poly_valuation(self.den, prime)

    def degree(self) -> int:
        """deg num - deg den (the valuation at infinity, negated)."""
        if self.num.is_zero():
            raise ValueError("degree of zero")
        return self.num.deg - self.den.deg

    # -- printing -------------------------------------------------------------------

    def __str__(self):
        from .syntax import format_rat
        return format_rat(self)

    def __repr__(self):
        return f"RatK({self})"


def v_at_prime(x: RatK, prime: Poly) -> int | float:
    """Valuation of ``x`` at the monic irreducible ``prime``."""
    return RatK.of(x).valuation(prime)


__all__ = ["RatK", "v_at_prime"]
