"""Finite fields F_q, q = p^e, with elements encoded as integers 0..q-1.

An element is stored as the integer ``sum(c_i * p**i)`` where ``c_i`` are its
coordinates in the basis ``1, a, ..., a^(e-1)`` and ``a`` is the class of the
variable modulo the defining polynomial.  The integer encoding doubles as the
canonical order on the field.

Vectorised operations act on numpy ``int64`` arrays of codes; the scalar
helpers work on plain ints and are table driven.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from . import _conv


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# --- tiny dense helpers over F_p (lists, low degree first); only used to
# --- validate and choose the defining polynomial of an extension field.

def _fp_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _fp_mod(a, b, p):
    a = list(a)
    inv = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        coef = a[-1] * inv % p
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bi) % p
        _fp_trim(a)
    return a


def _fp_is_irreducible(f, p):
    d = len(f) - 1
    if d < 1:
        return False
    for k in range(1, d // 2 + 1):
        for tail in itertools.product(range(p), repeat=k):
            g = list(tail) + [1]
            if not _fp_mod(f, g, p):
                return False
    return True


def default_modulus(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree ``e`` over F_p.

    Coefficient tuples ``(c_{e-1}, ..., c_0)`` are compared lexicographically.
    Returned low degree first, leading 1 included.
    """
    for high_first in itertools.product(range(p), repeat=e):
        f = list(reversed(high_first)) + [1]
        if _fp_is_irreducible(f, p):
            return tuple(f)
    raise ValueError(f"no irreducible polynomial of degree {e} over F_{p}")  # pragma: no cover


class FieldParams:
    """The field F_q together with its arithmetic tables.

    Instances are immutable and compared by ``(p, e, modulus)``.  Build them
    with :func:`field_create`, which caches one instance per parameter set.
    """

    def __init__(self, p: int, e: int = 1, modulus: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if e < 1:
            raise ValueError("extension degree must be positive")
        if e == 1:
            if modulus is not None and (len(modulus) != 2 or int(modulus[-1]) % p != 1):
                raise ValueError("modulus must be monic of degree 1")
            modulus = None
        else:
            if modulus is None:
                modulus = default_modulus(p, e)
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != e + 1 or modulus[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {e}")
            if not _fp_is_irreducible(list(modulus), p):
                raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = modulus
        self._build_tables()

    # -- construction -------------------------------------------------------

    def _digits_of(self, code):
        return [(code // self.p**i) % self.p for i in range(self.e)]

    def _build_tables(self):
        p, e, q = self.p, self.e, self.q
        codes = np.arange(q, dtype=np.int64)
        self._pw = p ** np.arange(e, dtype=np.int64)
        digits = (codes[:, None] // self._pw) % p  # (q, e)
        if e == 1:
            add = (codes[:, None] + codes[None, :]) % p
            mul = (codes[:, None] * codes[None, :]) % p
            self._red = np.ones((1, 1), dtype=np.int64)
        else:
            # reduction matrix: row j = coordinates of a^j, 0 <= j <= 2e-2
            red = np.zeros((2 * e - 1, e), dtype=np.int64)
            cur = [1] + [0] * (e - 1)
            for j in range(2 * e - 1):
                red[j] = cur
                # multiply by a
                top = cur[-1]
                cur = [0] + cur[:-1]
                cur = [(c - top * m) % p for c, m in zip(cur, self.modulus[:-1])]
            self._red = red
            sd = (digits[:, None, :] + digits[None, :, :]) % p
            add = (sd * self._pw).sum(-1)
            prod = np.zeros((q, q, 2 * e - 1), dtype=np.int64)
            for i in range(e):
                for j in range(e):
                    prod[:, :, i + j] += digits[:, None, i] * digits[None, :, j]
            mul = (((prod % p) @ red) % p * self._pw).sum(-1)
        self.add_table = add
        self.mul_table = mul
        self.neg_table = np.argmin(add, axis=1)  # add[x, y] == 0 exactly once
        self.sub_table = add[:, self.neg_table]
        inv = np.zeros(q, dtype=np.int64)
        for x in range(1, q):
            inv[x] = int(np.nonzero(mul[x] == 1)[0][0])
        self.inv_table = inv
        self.frob_table = codes.copy()  # x -> x^p
        acc = codes.copy()
        for _ in range(p - 1):
            acc = mul[acc, codes]
        self.frob_table = acc
        # python-level copies for scalar work
        self._add = add.tolist()
        self._mul = mul.tolist()
        self._neg = self.neg_table.tolist()
        self._inv = inv.tolist()
        self._frob = self.frob_table.tolist()

    # -- identity -----------------------------------------------------------

    def _key(self):
        return (self.p, self.e, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldParams) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.e == 1:
            return f"FieldParams(q={self.q})"
        return f"FieldParams(q={self.q}, modulus={self.modulus_str()})"

    def __reduce__(self):
        return (field_create, (self.p, self.e, self.modulus))

    def modulus_str(self) -> str | None:
        if self.modulus is None:
            return None
        terms = []
        for i in range(self.e, -1, -1):
            c = self.modulus[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return "+".join(terms)

    # -- scalar arithmetic on codes ------------------------------------------

    def add(self, x: int, y: int) -> int:
        return self._add[x][y]

    def sub(self, x: int, y: int) -> int:
        return self._add[x][self._neg[y]]

    def neg(self, x: int) -> int:
        return self._neg[x]

    def mul(self, x: int, y: int) -> int:
        return self._mul[x][y]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of 0 in F_q")
        return self._inv[x]

    def pow(self, x: int, n: int) -> int:
        if n < 0:
            x, n = self.inv(x), -n
        r = 1
        while n:
            if n & 1:
                r = self._mul[r][x]
            x = self._mul[x][x]
            n >>= 1
        return r

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` in the prime field."""
        return n % self.p

    def digits(self, x: int) -> list[int]:
        return self._digits_of(x)

    def from_digits(self, ds) -> int:
        return sum((int(c) % self.p) * self.p**i for i, c in enumerate(ds))

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    # -- vectorised arithmetic on code arrays ---------------------------------

    def vadd(self, x, y):
        if self.e == 1:
            return (x + y) % self.p
        return self.add_table[x, y]

    def vsub(self, x, y):
        if self.e == 1:
            return (x - y) % self.p
        return self.sub_table[x, y]

    def vneg(self, x):
        if self.e == 1:
            return (-x) % self.p
        return self.neg_table[x]

    def vscale(self, c: int, x):
        if self.e == 1:
            return (c * x) % self.p
        return self.mul_table[c][x]

    def vmul(self, x, y):
        if self.e == 1:
            return (x * y) % self.p
        return self.mul_table[x, y]

    def vfrob(self, x, k: int = 1):
        """Apply x -> x^(p^k) entrywise."""
        k %= self.e
        for _ in range(k):
            x = self.frob_table[x]
        return x

    def conv(self, x, y):
        """Full n-dimensional convolution of coefficient arrays over F_q."""
        p = self.p
        if self.e == 1:
            return _conv.iconv(x, y, (p - 1) ** 2) % p
        dx = (x[..., None] // self._pw) % p
        dy = (y[..., None] // self._pw) % p
        z = _conv.iconv(dx, dy, (p - 1) ** 2) % p
        z = (z @ self._red) % p
        return z @ self._pw


@lru_cache(maxsize=None)
def _field_cached(p, e, modulus):
    return FieldParams(p, e, modulus)


def field_create(p: int, e: int = 1, modulus=None) -> FieldParams:
    """Return the (cached) field F_{p^e}.

    ``modulus`` is an optional sequence of F_p coefficients, low degree first,
    of a monic irreducible polynomial of degree ``e``.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if e == 1:
        if modulus is not None:
            FieldParams(p, 1, tuple(modulus))  # validates
        return _field_cached(p, 1, None)
    if modulus is not None:
        modulus = tuple(int(c) % p for c in modulus)
    else:
        modulus = default_modulus(p, e)
    return _field_cached(p, e, modulus)


def field_from_q(q: int, modulus=None) -> FieldParams:
    """Field of order ``q`` (a prime power)."""
    for p in range(2, q + 1):
        if q % p == 0:
            break
    e, r = 0, q
    while r % p == 0:
        r //= p
        e += 1
    if r != 1 or not is_prime(p):
        raise ValueError(f"{q} is not a prime power")
    return field_create(p, e, modulus)
