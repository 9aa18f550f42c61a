"""Dense univariate polynomials over F_q: the ring A = F_q[T]."""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from .field import FieldParams

_FAST_DIV = 96  # quotient length above which Newton division is used


def _trim(c: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(c)
    if nz.size == 0:
        return c[:0]
    return c[: nz[-1] + 1]


class Poly:
    """An element of F_q[T]; coefficients are field codes, low degree first.

    Values are immutable: the coefficient array is never written after
    construction.
    """

    __slots__ = ("F", "c", "_hash")

    def __init__(self, F: FieldParams, coeffs, *, _trusted: bool = False):
        self.F = F
        if _trusted:
            c = coeffs
        else:
            c = np.asarray(coeffs, dtype=np.int64)
            if c.ndim != 1:
                c = c.ravel()
            if c.size and (c.min() < 0 or c.max() >= F.q):
                raise ValueError("coefficient out of range for field codes")
            c = _trim(c.copy())
        c.flags.writeable = False
        self.c = c
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def _raw(cls, F, arr):
        return cls(F, _trim(arr), _trusted=True)

    @classmethod
    def zero(cls, F):
        return cls(F, np.zeros(0, dtype=np.int64), _trusted=True)

    @classmethod
    def one(cls, F):
        return cls.const(F, 1)

    @classmethod
    def const(cls, F, c: int):
        return cls(F, np.array([c], dtype=np.int64) if c else np.zeros(0, dtype=np.int64), _trusted=True)

    @classmethod
    def T(cls, F):
        return cls(F, np.array([0, 1], dtype=np.int64), _trusted=True)

    @classmethod
    def monomial(cls, F, n: int, c: int = 1):
        if c == 0:
            return cls.zero(F)
        a = np.zeros(n + 1, dtype=np.int64)
        a[n] = c
        return cls(F, a, _trusted=True)

    @classmethod
    def from_ints(cls, F, coeffs):
        """Build from integers reduced into the prime field (low degree first)."""
        return cls(F, [int(x) % F.p for x in coeffs])

    # -- basic properties ---------------------------------------------------

    @property
    def deg(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return self.c.size - 1

    def is_zero(self) -> bool:
        return self.c.size == 0

    def is_one(self) -> bool:
        return self.c.size == 1 and self.c[0] == 1

    def is_const(self) -> bool:
        return self.c.size <= 1

    @property
    def lc(self) -> int:
        return int(self.c[-1]) if self.c.size else 0

    def is_monic(self) -> bool:
        return self.lc == 1

    def monic(self) -> Poly:
        if self.is_zero() or self.lc == 1:
            return self
        return self.scale(self.F.inv(self.lc))

    def coeff(self, i: int) -> int:
        return int(self.c[i]) if 0 <= i < self.c.size else 0

    def coeffs(self) -> list[int]:
        return self.c.tolist()

    def __len__(self):
        return self.c.size

    def __bool__(self):
        return self.c.size > 0

    # -- equality, order, hashing -----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, np.integer)):
            other = Poly.const(self.F, self.F.from_int(int(other)))
        if not isinstance(other, Poly):
            return NotImplemented
        return self.F == other.F and np.array_equal(self.c, other.c)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.F.q, self.c.tobytes()))
        return self._hash

    def sort_key(self):
        """Canonical order: by degree, then coefficient tuple from degree 0 upward."""
        return (self.deg, tuple(self.c.tolist()))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    # -- ring operations ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, np.integer)):
            return Poly.const(self.F, self.F.from_int(int(other)))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.c, o.c
        if a.size < b.size:
            a, b = b, a
        if b.size == 0:
            return self if a is self.c else o
        r = a.copy()
        r[: b.size] = self.F.vadd(r[: b.size], b)
        return Poly._raw(self.F, r)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.F, self.F.vneg(self.c), _trusted=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c: int) -> Poly:
        if c == 0:
            return Poly.zero(self.F)
        if c == 1:
            return self
        return Poly(self.F, self.F.vscale(c, self.c), _trusted=True)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.c.size == 0 or o.c.size == 0:
            return Poly.zero(self.F)
        if o.c.size == 1:
            return self.scale(int(o.c[0]))
        if self.c.size == 1:
            return o.scale(int(self.c[0]))
        return Poly._raw(self.F, self.F.conv(self.c, o.c))

    __rmul__ = __mul__

    def shift(self, n: int) -> Poly:
        """Multiply by T^n (n >= 0)."""
        if n == 0 or self.is_zero():
            return self
        return Poly(self.F, np.concatenate([np.zeros(n, dtype=np.int64), self.c]), _trusted=True)

    def frobenius(self, k: int = 1) -> Poly:
        """The p^k-th power, computed coefficientwise."""
        if self.is_zero() or k == 0:
            return self
        step = self.F.p**k
        out = np.zeros((self.c.size - 1) * step + 1, dtype=np.int64)
        out[::step] = self.F.vfrob(self.c, k)
        return Poly(self.F, out, _trusted=True)

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        p = self.F.p
        k = 0
        while n and n % p == 0:
            n //= p
            k += 1
        r = Poly.one(self.F)
        base = self
        while n:
            if n & 1:
                r = r * base
            n >>= 1
            if n:
                base = base * base
        return r.frobenius(k) if k else r

    def qth_root(self) -> Poly:
        """The unique g with g^q == self; raises ValueError if none exists."""
        q = self.F.q
        if self.is_zero():
            return self
        c = self.c
        off = np.flatnonzero(c * (np.arange(c.size) % q != 0))
        if off.size:
            raise ValueError(f"not a q-th power: nonzero coefficient at T^{int(off[0])}")
        # x^q = x on F_q, so the root of each coefficient is itself
        return Poly(self.F, c[::q].copy(), _trusted=True)

    def is_qth_power(self) -> bool:
        c = self.c
        return not np.any(np.delete(c, np.arange(0, c.size, self.F.q)))

    # -- division ---------------------------------------------------------------

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return poly_divmod(self, o)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: Poly) -> bool:
        return (other % self).is_zero()

    def exact_div(self, other: Poly) -> Poly:
        qt, r = poly_divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return qt

    # -- evaluation -------------------------------------------------------------

    def __call__(self, x):
        """Evaluate at a field code or substitute a polynomial (Horner)."""
        F = self.F
        if isinstance(x, Poly):
            acc = Poly.zero(F)
            for c in reversed(self.c.tolist()):
                acc = acc * x + Poly.const(F, c)
            return acc
        acc = 0
        for c in reversed(self.c.tolist()):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def derivative(self) -> Poly:
        if self.c.size <= 1:
            return Poly.zero(self.F)
        idx = np.arange(1, self.c.size, dtype=np.int64) % self.F.p
        return Poly._raw(self.F, self.F.vmul(self.c[1:], idx))

    # -- printing ----------------------------------------------------------------

    def __str__(self):
        from .syntax import format_poly
        return format_poly(self)

    def __repr__(self):
        return f"Poly({self})"


# ---------------------------------------------------------------------------
# division


def _inv_series(F: FieldParams, b: np.ndarray, n: int) -> np.ndarray:
    """First ``n`` coefficients of 1/b for b with invertible constant term."""
    inv0 = F.inv(int(b[0]))
    g = np.array([inv0], dtype=np.int64)
    m = 1
    while m < n:
        m = min(2 * m, n)
        # g <- g * (2 - b g)
        bg = F.conv(b[:m], g)[:m]
        corr = F.vneg(bg)
        corr[0] = F.add(int(corr[0]), F.from_int(2))
        g = F.conv(g, corr)[:m]
    return g[:n]


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    F = a.F
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    da, db = a.deg, b.deg
    if da < db:
        return Poly.zero(F), a
    if db == 0:
        return a.scale(F.inv(b.lc)), Poly.zero(F)
    nq = da - db + 1
    if nq > _FAST_DIV:
        # reversed Newton division: rev(q) = rev(a) / rev(b) mod x^nq
        ra = a.c[::-1][:nq]
        rb = b.c[::-1]
        inv = _inv_series(F, rb, nq)
        rq = F.conv(ra, inv)[:nq]
        qt = Poly._raw(F, rq[::-1].copy())
        r = a - qt * b
        return qt, r
    r = a.c.copy()
    qc = np.zeros(nq, dtype=np.int64)
    lc_inv = F.inv(b.lc)
    bc = b.c
    for i in range(da, db - 1, -1):
        c = int(r[i])
        if c == 0:
            continue
        if lc_inv != 1:
            c = F.mul(c, lc_inv)
        qc[i - db] = c
        r[i - db: i + 1] = F.vsub(r[i - db: i + 1], F.vscale(c, bc))
    return Poly._raw(F, qc), Poly._raw(F, r[:db].copy())


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Poly, b: Poly):
    """(g, s, t) with s*a + t*b == g monic."""
    F = a.F
    r0, r1 = a, b
    s0, s1 = Poly.one(F), Poly.zero(F)
    t0, t1 = Poly.zero(F), Poly.one(F)
    while not r1.is_zero():
        qt, r2 = divmod(r0, r1)
        r0, r1 = r1, r2
        s0, s1 = s1, s0 - qt * s1
        t0, t1 = t1, t0 - qt * t1
    if r0.is_zero():
        return r0, s0, t0
    u = F.inv(r0.lc)
    return r0.scale(u), s0.scale(u), t0.scale(u)


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if a.is_zero() or b.is_zero():
        return Poly.zero(a.F)
    g = poly_gcd(a, b)
    return (a.exact_div(g) * b).monic()


# ---------------------------------------------------------------------------
# enumeration and the combinatorial constants


def monic_enum(F: FieldParams, d: int) -> list[Poly]:
    """All q^d monic polynomials of degree ``d`` in canonical order.

    The order is lexicographic on ``(c_0, c_1, ..., c_{d-1})`` with the
    field's integer order on each entry.
    """
    if d < 0:
        raise ValueError("degree must be nonnegative")
    out = []
    for tail in itertools.product(range(F.q), repeat=d):
        out.append(Poly(F, np.array(list(tail) + [1], dtype=np.int64), _trusted=True))
    return out


def monics_upto(F: FieldParams, dmax: int) -> list[Poly]:
    out = []
    for d in range(dmax + 1):
        out.extend(monic_enum(F, d))
    return out


def all_polys_below(F: FieldParams, d: int) -> list[Poly]:
    """All q^d polynomials of degree < d (including 0)."""
    out = []
    for tup in itertools.product(range(F.q), repeat=d):
        out.append(Poly(F, list(tup)))
    return out


def is_irreducible(f: Poly) -> bool:
    """Ben-Or test: f has no factor of degree <= deg f / 2."""
    n = f.deg
    if n < 1:
        return False
    x = Poly.T(f.F)
    h = x
    for _ in range(n // 2):
        h = _powmod(h, f.F.q, f)
        if not poly_gcd(f, h - x).is_one():
            return False
    return True


def _powmod(b: Poly, n: int, m: Poly) -> Poly:
    r = Poly.one(b.F)
    b = b % m
    while n:
        if n & 1:
            r = (r * b) % m
        n >>= 1
        if n:
            b = (b * b) % m
    return r


def irreducible_enum(F: FieldParams, d: int) -> list[Poly]:
    """All monic irreducibles of degree ``d`` in canonical order."""
    if d < 1:
        raise ValueError("degree must be positive")
    return [f for f in monic_enum(F, d) if is_irreducible(f)]


@lru_cache(maxsize=None)
def bracket(F: FieldParams, i: int) -> Poly:
    """[i] = T^(q^i) - T."""
    if i < 0:
        raise ValueError("bracket index must be nonnegative")
    return Poly.monomial(F, F.q**i) - Poly.T(F)


@lru_cache(maxsize=None)
def carlitz_factorial_D(F: FieldParams, i: int) -> Poly:
    """D_i = [i] * D_{i-1}^q, the product of all monic polynomials of degree i."""
    if i < 0:
        raise ValueError("index must be nonnegative")
    if i == 0:
        return Poly.one(F)
    return bracket(F, i) * carlitz_factorial_D(F, i - 1).frobenius(F.e)


@lru_cache(maxsize=None)
def carlitz_L(F: FieldParams, i: int) -> Poly:
    """L_i = [i][i-1]...[1] (L_0 = 1)."""
    if i == 0:
        return Poly.one(F)
    return bracket(F, i) * carlitz_L(F, i - 1)


def poly_valuation(f: Poly, prime: Poly) -> int | float:
    """Exact power of ``prime`` dividing ``f`` (inf for f == 0)."""
    if f.is_zero():
        return float("inf")
    v = 0
    while True:
        qt, r = divmod(f, prime)
        if not r.is_zero():
            return v
        f = qt
        v += 1


def int_val_p(k: int, p: int) -> int:
    """Exponent of the prime ``p`` in the positive integer ``k``."""
    if k < 1:
        raise ValueError("k must be positive")
    v = 0
    while k % p == 0:
        k //= p
        v += 1
    return v
