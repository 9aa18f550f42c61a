"""Truncated power series with coefficients in K = F_q(T).

A series is stored as one two-dimensional array of field codes plus a common
denominator: ``num[i, j]`` is the coefficient of ``t^i T^j`` and the value of
the series is ``num(t, T) / den(T)``.  The denominator is monic and coprime to
the content of the numerator, which makes the representation canonical.

The same layout serves polynomials in an auxiliary variable ``X`` over K
(:class:`XPoly`, used for Goss polynomials) and Laurent series in ``w``
(:class:`LaurentSeries`, used for ``1/e_C(w)``).
"""

from __future__ import annotations

import numpy as np

from .algebra import FieldParams, Poly, RatK, poly_gcd, poly_lcm

_EMPTY_COLS = 1  # arrays always keep at least one column


class InsufficientPrecision(ValueError):
    """Raised when an operation would need coefficients beyond the known precision."""


# ---------------------------------------------------------------------------
# helpers on (num, den) pairs


def _ensure2d(arr: np.ndarray) -> np.ndarray:
    if arr.shape[1] == 0:
        return np.zeros((arr.shape[0], _EMPTY_COLS), dtype=np.int64)
    return arr


def _trim_cols(arr: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(arr.any(axis=0))
    w = int(nz[-1]) + 1 if nz.size else 1
    return arr[:, :w]


def _pad_cols(arr: np.ndarray, w: int) -> np.ndarray:
    if arr.shape[1] >= w:
        return arr
    out = np.zeros((arr.shape[0], w), dtype=np.int64)
    out[:, : arr.shape[1]] = arr
    return out


def _pad_rows(arr: np.ndarray, r: int) -> np.ndarray:
    if arr.shape[0] >= r:
        return arr
    out = np.zeros((r, arr.shape[1]), dtype=np.int64)
    out[: arr.shape[0]] = arr
    return out


def _mul_rows_by_poly(F: FieldParams, arr: np.ndarray, f: Poly) -> np.ndarray:
    """Multiply every row (a polynomial in T) by ``f``."""
    if f.is_one():
        return arr
    if f.is_zero():
        return np.zeros((arr.shape[0], 1), dtype=np.int64)
    if f.deg == 0:
        return F.vscale(f.lc, arr)
    return F.conv(arr, f.c[None, :])


def _rows_exact_div(F: FieldParams, arr: np.ndarray, g: Poly) -> np.ndarray:
    """Divide every row by ``g``, assuming each row is a multiple of it."""
    dg = g.deg
    if dg == 0:
        return F.vscale(F.inv(g.lc), arr)
    r = arr.copy()
    w = r.shape[1]
    if w <= dg:
        return np.zeros((r.shape[0], 1), dtype=np.int64)
    qt = np.zeros((r.shape[0], w - dg), dtype=np.int64)
    inv = F.inv(g.lc)
    gc = g.c
    for j in range(w - 1, dg - 1, -1):
        col = r[:, j]
        if not col.any():
            continue
        c = F.vscale(inv, col) if inv != 1 else col.copy()
        qt[:, j - dg] = c
        r[:, j - dg: j + 1] = F.vsub(r[:, j - dg: j + 1], F.vmul(c[:, None], gc[None, :]))
    if r[:, :dg].any():
        raise ArithmeticError("row is not divisible")
    return qt


def _row_poly(F, arr, i) -> Poly:
    return Poly._raw(F, arr[i].copy())


def normalize(F: FieldParams, num: np.ndarray, den: Poly) -> tuple[np.ndarray, Poly]:
    """Cancel the common factor of the numerator content and the denominator."""
    num = _ensure2d(_trim_cols(num))
    if not num.any():
        return num[:, :1] * 0, Poly.one(F)
    if den.lc != 1:
        u = F.inv(den.lc)
        num, den = F.vscale(u, num), den.scale(u)
    if den.deg <= 0:
        return num, den
    g = den
    for i in np.flatnonzero(num.any(axis=1)):
        g = poly_gcd(g, _row_poly(F, num, i))
        if g.deg == 0:
            return num, den
    num = _ensure2d(_trim_cols(_rows_exact_div(F, num, g)))
    return num, den.exact_div(g)


def _common(F, a_num, a_den, b_num, b_den):
    """Bring two fractions to a common denominator."""
    if a_den == b_den:
        w = max(a_num.shape[1], b_num.shape[1])
        return _pad_cols(a_num, w), _pad_cols(b_num, w), a_den
    L = poly_lcm(a_den, b_den)
    a2 = _mul_rows_by_poly(F, a_num, L.exact_div(a_den))
    b2 = _mul_rows_by_poly(F, b_num, L.exact_div(b_den))
    w = max(a2.shape[1], b2.shape[1])
    return _pad_cols(a2, w), _pad_cols(b2, w), L


def _rat(F, c) -> RatK:
    return RatK.of(c, F)


def _rows_from_rats(F, coeffs) -> tuple[np.ndarray, Poly]:
    rats = [_rat(F, c) for c in coeffs]
    den = Poly.one(F)
    for r in rats:
        if not r.den.is_one():
            den = poly_lcm(den, r.den)
    rows = []
    for r in rats:
        rows.append(r.num * den.exact_div(r.den) if not r.is_zero() else Poly.zero(F))
    w = max([p.c.size for p in rows] + [1])
    arr = np.zeros((len(rows), w), dtype=np.int64)
    for i, p in enumerate(rows):
        arr[i, : p.c.size] = p.c
    return arr, den


def _frob_rows(F, arr, k):
    """Raise every entry-polynomial to the power p^k and spread rows by p^k."""
    m = F.p**k
    r, w = arr.shape
    out = np.zeros(((r - 1) * m + 1, (w - 1) * m + 1), dtype=np.int64)
    out[::m, ::m] = F.vfrob(arr, k)
    return out


# ---------------------------------------------------------------------------


class TruncSeries:
    """``sum_{i <= prec} c_i t^i`` with ``c_i`` in K, known exactly up to ``prec``.

    Arithmetic follows the pessimistic precision rules: sums and products are
    known to the smaller precision, a ``p^k``-th power to ``p^k (prec+1) - 1``.
    ``==`` compares coefficients up to the smaller of the two precisions;
    :meth:`identical` also demands equal precision.
    """

    __slots__ = ("F", "prec", "num", "den")
    __hash__ = None  # type: ignore[assignment]

    def __init__(self, F: FieldParams, num: np.ndarray, den: Poly | None = None, prec: int | None = None,
                 *, _normalized: bool = False):
        if prec is None:
            prec = num.shape[0] - 1
        if prec < 0:
            raise ValueError("precision must be nonnegative")
        num = np.asarray(num, dtype=np.int64)
        if num.ndim == 1:
            num = num[:, None]
        num = _pad_rows(num[: prec + 1], prec + 1)
        den = Poly.one(F) if den is None else den
        if not _normalized:
            num, den = normalize(F, num, den)
        num.flags.writeable = False
        self.F = F
        self.prec = prec
        self.num = num
        self.den = den

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, F, prec: int) -> TruncSeries:
        return cls(F, np.zeros((prec + 1, 1), dtype=np.int64), Poly.one(F), prec, _normalized=True)

    @classmethod
    def one(cls, F, prec: int) -> TruncSeries:
        return cls.monomial(F, 0, 1, prec)

    @classmethod
    def monomial(cls, F, k: int, c, prec: int) -> TruncSeries:
        """``c t^k`` with ``c`` in K."""
        c = _rat(F, c)
        num = np.zeros((prec + 1, max(c.num.c.size, 1)), dtype=np.int64)
        if k <= prec and not c.is_zero():
            num[k, : c.num.c.size] = c.num.c
            return cls(F, num, c.den, prec, _normalized=True)
        return cls.zero(F, prec)

    @classmethod
    def from_coeffs(cls, F, coeffs, prec: int | None = None) -> TruncSeries:
        """From a list of coefficients (RatK, Poly or int), lowest power first."""
        coeffs = list(coeffs)
        if prec is None:
            prec = len(coeffs) - 1
        if not coeffs:
            return cls.zero(F, prec)
        arr, den = _rows_from_rats(F, coeffs[: prec + 1])
        return cls(F, arr, den, prec)

    @classmethod
    def from_poly_rows(cls, F, rows: list[Poly], den: Poly | None = None, prec: int | None = None):
        if prec is None:
            prec = len(rows) - 1
        w = max([r.c.size for r in rows] + [1])
        arr = np.zeros((prec + 1, w), dtype=np.int64)
        for i, r in enumerate(rows[: prec + 1]):
            arr[i, : r.c.size] = r.c
        return cls(F, arr, den, prec)

    # -- access ---------------------------------------------------------------

    def coeff(self, i: int) -> RatK:
        if i < 0:
            return RatK.zero(self.F)
        if i > self.prec:
            raise InsufficientPrecision(f"coefficient t^{i} requested beyond precision {self.prec}")
        return RatK(_row_poly(self.F, self.num, i), self.den)

    def __getitem__(self, i: int) -> RatK:
        return self.coeff(i)

    def coeffs(self) -> list[RatK]:
        return [self.coeff(i) for i in range(self.prec + 1)]

    def nonzero_terms(self):
        """Yield ``(i, c_i)`` for the nonzero coefficients, in increasing power."""
        for i in np.flatnonzero(self.num.any(axis=1)):
            yield int(i), self.coeff(int(i))

    def order(self) -> int:
        """Least i with c_i != 0, or prec + 1 if every known coefficient vanishes."""
        nz = np.flatnonzero(self.num.any(axis=1))
        return int(nz[0]) if nz.size else self.prec + 1

    def is_zero(self) -> bool:
        return not self.num.any()

    def is_integral(self) -> bool:
        return self.den.deg == 0

    def t_degree_bound(self) -> int:
        """Largest T-degree appearing in the numerator."""
        return self.num.shape[1] - 1

    # -- comparison -----------------------------------------------------------

    def first_difference(self, other: TruncSeries) -> int | None:
        """Smallest power where the two series differ (up to the common precision)."""
        n = min(self.prec, other.prec)
        a = self.truncate(n)
        b = other.truncate(n)
        if a.den == b.den:
            w = max(a.num.shape[1], b.num.shape[1])
            diff = (_pad_cols(a.num, w) != _pad_cols(b.num, w)).any(axis=1)
        else:
            x, y, _ = _common(self.F, a.num, a.den, b.num, b.den)
            diff = (x != y).any(axis=1)
        nz = np.flatnonzero(diff)
        return int(nz[0]) if nz.size else None

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        if self.F != other.F:
            return False
        return self.first_difference(other) is None

    def identical(self, other: TruncSeries) -> bool:
        return self.F == other.F and self.prec == other.prec and self == other

    # -- precision ------------------------------------------------------------

    def truncate(self, n: int) -> TruncSeries:
        if n >= self.prec:
            return self
        return TruncSeries(self.F, self.num[: n + 1], self.den, n)

    def with_prec(self, n: int) -> TruncSeries:
        """Lower the precision to ``n``; raising it is an error."""
        if n > self.prec:
            raise InsufficientPrecision(f"series known to t^{self.prec}, t^{n} requested")
        return self.truncate(n)

    def shift(self, k: int) -> TruncSeries:
        """Multiply by t^k (k >= 0); precision grows by k."""
        if k < 0:
            raise ValueError("use divide_exact for negative shifts")
        if k == 0:
            return self
        num = np.zeros((self.prec + 1 + k, self.num.shape[1]), dtype=np.int64)
        num[k:] = self.num
        return TruncSeries(self.F, num, self.den, self.prec + k, _normalized=True)

    def unshift(self, k: int) -> TruncSeries:
        """Divide by t^k, requiring the first k coefficients to vanish."""
        if k == 0:
            return self
        if self.order() < k:
            raise ArithmeticError(f"series is not divisible by t^{k}")
        if k > self.prec:
            raise InsufficientPrecision("nothing known after division")
        return TruncSeries(self.F, self.num[k:], self.den, self.prec - k, _normalized=True)

    # -- ring operations --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, TruncSeries):
            if other.F != self.F:
                raise ValueError("series over different fields")
            return other
        if isinstance(other, (RatK, Poly, int, np.integer)):
            return TruncSeries.monomial(self.F, 0, other, self.prec)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.prec, o.prec)
        a, b, den = _common(self.F, self.num[: n + 1], self.den, o.num[: n + 1], o.den)
        return TruncSeries(self.F, self.F.vadd(a, b), den, n)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.F, self.F.vneg(self.num), self.den, self.prec, _normalized=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.prec, o.prec)
        a, b, den = _common(self.F, self.num[: n + 1], self.den, o.num[: n + 1], o.den)
        return TruncSeries(self.F, self.F.vsub(a, b), den, n)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def scale(self, c) -> TruncSeries:
        """Multiply by the constant ``c`` in K."""
        c = _rat(self.F, c)
        if c.is_zero():
            return TruncSeries.zero(self.F, self.prec)
        num = _mul_rows_by_poly(self.F, self.num, c.num)
        return TruncSeries(self.F, num, self.den * c.den, self.prec)

    def __mul__(self, other):
        if isinstance(other, (RatK, Poly, int, np.integer)):
            return self.scale(other)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        if other.F != self.F:
            raise ValueError("series over different fields")
        n = min(self.prec, other.prec)
        F = self.F
        # rows beyond n - ord(other) of self cannot contribute
        oa, ob = self.order(), other.order()
        if oa + ob > n:
            return TruncSeries.zero(F, n)
        a = self.num[oa: n + 1 - ob]
        b = other.num[ob: n + 1 - oa]
        prod = F.conv(a, b)[: n + 1 - oa - ob]
        num = np.zeros((n + 1, prod.shape[1]), dtype=np.int64)
        num[oa + ob: oa + ob + prod.shape[0]] = prod
        return TruncSeries(F, num, self.den * other.den, n)

    __rmul__ = __mul__

    def frobenius(self, k: int = 1) -> TruncSeries:
        """The p^k-th power, coefficientwise: sum c_i^(p^k) t^(i p^k)."""
        if k == 0:
            return self
        m = self.F.p**k
        num = _frob_rows(self.F, self.num, k)
        prec = m * (self.prec + 1) - 1
        num = _pad_rows(num, prec + 1)
        return TruncSeries(self.F, num, self.den.frobenius(k), prec, _normalized=True)

    def __pow__(self, n: int) -> TruncSeries:
        if n < 0:
            return self.inverse() ** (-n)
        p = self.F.p
        k = 0
        while n and n % p == 0:
            n //= p
            k += 1
        if n == 0:
            return TruncSeries.one(self.F, self.prec)
        result = None
        base = self
        while True:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if not n:
                break
            base = base * base
        return result.frobenius(k)

    def qth_root(self) -> TruncSeries:
        """The unique r with r^q = self (precision floor(prec/q))."""
        F = self.F
        q = F.q
        idx = np.flatnonzero(self.num.any(axis=1))
        bad = idx[idx % q != 0]
        if bad.size:
            raise ValueError(f"not a q-th power: coefficient of t^{int(bad[0])} is nonzero")
        rows = []
        for i in range(0, self.prec + 1, q):
            row = _row_poly(F, self.num, i)
            try:
                rows.append(row.qth_root())
            except ValueError:
                raise ValueError(f"not a q-th power: coefficient of t^{i} is not a q-th power in K") from None
        try:
            den = self.den.qth_root()
        except ValueError:
            raise ValueError("not a q-th power: denominator is not a q-th power") from None
        return TruncSeries.from_poly_rows(F, rows, den, self.prec // q)

    # -- division ---------------------------------------------------------------

    def inverse(self) -> TruncSeries:
        """Multiplicative inverse; the constant term must be nonzero."""
        F = self.F
        N = self.prec
        u = _row_poly(F, self.num, 0)
        if u.is_zero():
            raise ZeroDivisionError("series with zero constant term is not invertible")
        if u.deg == 0:
            # constant term a unit of A
            c = F.inv(u.lc)
            q = F.vscale(c, self.num)
            r = _integral_inverse(F, q, N)
            r = F.vscale(c, r)
            return TruncSeries(F, _mul_rows_by_poly(F, r, self.den), Poly.one(F), N)
        # substitute t -> u t: Q(t) = P(u t)/u has constant term 1
        upow = [Poly.one(F)]
        for _ in range(N + 1):
            upow.append(upow[-1] * u)
        rows = [Poly.one(F)] + [_row_poly(F, self.num, i) * upow[i - 1] for i in range(1, N + 1)]
        qarr = TruncSeries.from_poly_rows(F, rows, None, N).num
        r = _integral_inverse(F, qarr, N)
        # coefficient i of 1/P is R_i / u^(i+1); over the common denominator u^(N+1)
        out = [_row_poly(F, r, i) * upow[N - i] for i in range(N + 1)]
        s = TruncSeries.from_poly_rows(F, out, upow[N + 1], N)
        return s.scale(RatK.of(self.den))

    def divide_exact(self, other: TruncSeries) -> TruncSeries:
        """self / other where other has order <= order(self); precision drops by ord(other)."""
        v = other.order()
        if v > other.prec:
            raise ZeroDivisionError("division by a series that vanishes to its precision")
        if self.order() < v:
            raise ArithmeticError(f"order {self.order()} < order {v}: quotient is not a power series")
        n = min(self.prec, other.prec)
        a = self.truncate(n).unshift(v)
        b = other.truncate(n).unshift(v)
        return a * b.inverse()

    def __truediv__(self, other):
        if isinstance(other, (RatK, Poly, int, np.integer)):
            return self.scale(_rat(self.F, other).inverse())
        if isinstance(other, TruncSeries):
            return self.divide_exact(other)
        return NotImplemented

    # -- composition ------------------------------------------------------------

    def compose(self, inner: TruncSeries) -> TruncSeries:
        """self(inner(t)); inner must have zero constant term."""
        v = inner.order()
        if v == 0:
            raise ValueError("inner series must have zero constant term")
        if v > inner.prec:
            # inner vanishes to its precision; only the constant term survives
            return TruncSeries.monomial(self.F, 0, self.coeff(0), inner.prec)
        prec = min(self.prec * v, inner.prec)
        m = min(self.prec, prec // v)
        inner = inner.truncate(prec)
        acc = TruncSeries.monomial(self.F, 0, self.coeff(m), prec)
        for i in range(m - 1, -1, -1):
            acc = acc * inner + self.coeff(i)
        return acc

    # -- printing ---------------------------------------------------------------

    def __str__(self):
        terms = []
        for i, c in self.nonzero_terms():
            cs = str(c)
            if i == 0:
                terms.append(f"({cs})" if ("+" in cs or "/" in cs) else cs)
                continue
            mono = "t" if i == 1 else f"t^{i}"
            if c.is_one():
                terms.append(mono)
            else:
                terms.append(f"({cs})*{mono}" if ("+" in cs or "/" in cs) else f"{cs}*{mono}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(t^{self.prec + 1})"

    def __repr__(self):
        return f"TruncSeries(q={self.F.q}, prec={self.prec}, {self})"


def _integral_inverse(F: FieldParams, q: np.ndarray, N: int) -> np.ndarray:
    """Rows 0..N of 1/Q for a 2D integral numerator Q with Q[0] == 1."""
    r = np.zeros((1, 1), dtype=np.int64)
    r[0, 0] = 1
    m = 1
    while m < N + 1:
        m = min(2 * m, N + 1)
        qr = F.conv(q[:m], r)[:m]
        # qr - 1, then r <- r - r*(qr - 1)
        qr[0, 0] = F.sub(int(qr[0, 0]), 1)
        corr = F.conv(r, qr)[:m]
        w = max(corr.shape[1], r.shape[1])
        r = F.vsub(_pad_rows(_pad_cols(r, w), m), _pad_cols(corr, w))
        r = _ensure2d(_trim_cols(r))
    return _pad_rows(r, N + 1)[: N + 1]


# ---------------------------------------------------------------------------


class XPoly:
    """A polynomial in X over K, stored as ``num(X, T)/den(T)``.

    Used for Goss polynomials.  Instances are immutable.
    """

    __slots__ = ("F", "num", "den")

    def __init__(self, F: FieldParams, num: np.ndarray, den: Poly | None = None, *, _normalized=False):
        num = np.asarray(num, dtype=np.int64)
        if num.ndim == 1:
            num = num[:, None]
        den = Poly.one(F) if den is None else den
        if not _normalized:
            num, den = normalize(F, num, den)
        nz = np.flatnonzero(num.any(axis=1))
        num = num[: (int(nz[-1]) + 1 if nz.size else 0)]
        if num.shape[0] == 0:
            num = np.zeros((0, 1), dtype=np.int64)
            den = Poly.one(F)
        num.flags.writeable = False
        self.F = F
        self.num = num
        self.den = den

    @classmethod
    def zero(cls, F):
        return cls(F, np.zeros((0, 1), dtype=np.int64), _normalized=True)

    @classmethod
    def X(cls, F, k: int = 1, c=1):
        c = _rat(F, c)
        num = np.zeros((k + 1, max(c.num.c.size, 1)), dtype=np.int64)
        num[k, : c.num.c.size] = c.num.c
        return cls(F, num, c.den, _normalized=True)

    @classmethod
    def from_coeffs(cls, F, coeffs) -> XPoly:
        coeffs = list(coeffs)
        if not coeffs:
            return cls.zero(F)
        arr, den = _rows_from_rats(F, coeffs)
        return cls(F, arr, den)

    @property
    def deg(self) -> int:
        return self.num.shape[0] - 1

    def is_zero(self) -> bool:
        return self.num.shape[0] == 0

    def coeff(self, j: int) -> RatK:
        if j < 0 or j > self.deg:
            return RatK.zero(self.F)
        return RatK(_row_poly(self.F, self.num, j), self.den)

    def coeffs(self) -> list[RatK]:
        return [self.coeff(j) for j in range(self.deg + 1)]

    def support(self) -> list[int]:
        return [int(j) for j in np.flatnonzero(self.num.any(axis=1))]

    def ord(self) -> int:
        """X-adic order (inf for zero)."""
        s = np.flatnonzero(self.num.any(axis=1))
        return int(s[0]) if s.size else float("inf")  # type: ignore[return-value]

    def is_monic(self) -> bool:
        return not self.is_zero() and self.coeff(self.deg).is_one()

    def __eq__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        if self.F != other.F or self.den != other.den or self.num.shape[0] != other.num.shape[0]:
            return False
        w = max(self.num.shape[1], other.num.shape[1])
        return bool((_pad_cols(self.num, w) == _pad_cols(other.num, w)).all())

    __hash__ = None  # type: ignore[assignment]

    def _rows(self, n):
        return _pad_rows(self.num, n)

    def __add__(self, other: XPoly) -> XPoly:
        n = max(self.num.shape[0], other.num.shape[0])
        a, b, den = _common(self.F, self._rows(n), self.den, other._rows(n), other.den)
        return XPoly(self.F, self.F.vadd(a, b), den)

    def __sub__(self, other: XPoly) -> XPoly:
        n = max(self.num.shape[0], other.num.shape[0])
        a, b, den = _common(self.F, self._rows(n), self.den, other._rows(n), other.den)
        return XPoly(self.F, self.F.vsub(a, b), den)

    def __neg__(self):
        return XPoly(self.F, self.F.vneg(self.num), self.den, _normalized=True)

    def scale(self, c) -> XPoly:
        c = _rat(self.F, c)
        if c.is_zero() or self.is_zero():
            return XPoly.zero(self.F)
        return XPoly(self.F, _mul_rows_by_poly(self.F, self.num, c.num), self.den * c.den)

    def shift(self, k: int = 1) -> XPoly:
        """Multiply by X^k."""
        if self.is_zero():
            return self
        num = np.zeros((self.num.shape[0] + k, self.num.shape[1]), dtype=np.int64)
        num[k:] = self.num
        return XPoly(self.F, num, self.den, _normalized=True)

    def __mul__(self, other):
        if isinstance(other, (RatK, Poly, int, np.integer)):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return XPoly.zero(self.F)
        return XPoly(self.F, self.F.conv(self.num, other.num), self.den * other.den)

    __rmul__ = __mul__

    def frobenius(self, k: int = 1) -> XPoly:
        """The p^k-th power."""
        if self.is_zero():
            return self
        return XPoly(self.F, _frob_rows(self.F, self.num, k), self.den.frobenius(k), _normalized=True)

    def __pow__(self, n: int) -> XPoly:
        r = XPoly.X(self.F, 0)
        b = self
        while n:
            if n & 1:
                r = r * b
            n >>= 1
            if n:
                b = b * b
        return r

    def __call__(self, s: TruncSeries) -> TruncSeries:
        """Evaluate at a series of positive order."""
        v = s.order()
        if v == 0:
            raise ValueError("evaluation point must have zero constant term")
        acc = TruncSeries.zero(self.F, s.prec)
        if self.is_zero():
            return acc
        powers = power_table(s, self.deg)
        for j in self.support():
            acc = acc + powers[j].scale(self.coeff(j))
        return acc

    def __str__(self):
        terms = []
        for j in range(self.deg, -1, -1):
            c = self.coeff(j)
            if c.is_zero():
                continue
            cs = str(c)
            mono = "1" if j == 0 else ("X" if j == 1 else f"X^{j}")
            if j == 0:
                terms.append(cs)
            elif c.is_one():
                terms.append(mono)
            else:
                terms.append(f"({cs})*{mono}" if ("+" in cs or "/" in cs) else f"{cs}*{mono}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return f"XPoly({self})"


def power_table(s: TruncSeries, m: int) -> list[TruncSeries]:
    """[s^0, s^1, ..., s^m] truncated to s.prec, using Frobenius where possible."""
    F = s.F
    out = [TruncSeries.one(F, s.prec)]
    v = s.order()
    for j in range(1, m + 1):
        if j * v > s.prec:
            out.append(TruncSeries.zero(F, s.prec))
        elif j % F.p == 0:
            out.append(out[j // F.p].frobenius(1).truncate(s.prec))
        else:
            out.append(out[j - 1] * s)
    return out


# ---------------------------------------------------------------------------


class LaurentSeries:
    """``w^lead * body(w)`` with ``body`` a TruncSeries.

    Known coefficients run over exponents ``lead .. lead + body.prec``.
    """

    __slots__ = ("lead", "body")

    def __init__(self, lead: int, body: TruncSeries):
        v = body.order()
        if v and v <= body.prec:
            body = body.unshift(v)
            lead += v
        self.lead = lead
        self.body = body

    @property
    def F(self):
        return self.body.F

    @property
    def top(self) -> int:
        """Largest exponent whose coefficient is known."""
        return self.lead + self.body.prec

    def coeff(self, k: int) -> RatK:
        if k > self.top:
            raise InsufficientPrecision(f"w^{k} beyond known range (up to w^{self.top})")
        return self.body.coeff(k - self.lead) if k >= self.lead else RatK.zero(self.F)

    def __mul__(self, other: LaurentSeries) -> LaurentSeries:
        return LaurentSeries(self.lead + other.lead, self.body * other.body)

    def __pow__(self, n: int) -> LaurentSeries:
        if n < 0:
            return LaurentSeries(-self.lead * (-n), self.body.inverse() ** (-n))
        return LaurentSeries(self.lead * n, self.body**n if n else TruncSeries.one(self.F, self.body.prec))

    def inverse(self) -> LaurentSeries:
        return LaurentSeries(-self.lead, self.body.inverse())

    def __str__(self):
        return f"w^{self.lead} * ({self.body})"

    def __repr__(self):
        return f"LaurentSeries({self})"
