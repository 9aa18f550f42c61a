"""Goss polynomials of a lattice given by its exponential coefficients.

With ``e(z) = sum_i alpha_i z^(q^i)`` (alpha_0 = 1) the Goss polynomials obey

    G_1 = X,   G_n = X (G_{n-1} + sum_{i>=1} alpha_i G_{n-q^i})   (n >= 2),

where G_m = 0 for m <= 0.  Two lattices matter here: the period lattice of the
Carlitz module (alpha_i = 1/D_i) and the torsion lattices ker rho_p
(alpha_i = l_i(p)/p).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .algebra import FieldParams, Poly, RatK
from .carlitz import carlitz_exp, rho, torsion_exp_coeffs
from .series import XPoly


@dataclass
class GossTable:
    F: FieldParams
    alphas: tuple[RatK, ...]
    nmax: int
    polys: list[XPoly] = field(repr=False)  # polys[n] = G_n, polys[0] = 0

    def __getitem__(self, n: int) -> XPoly:
        if n < 1 or n > self.nmax:
            raise IndexError(f"G_{n} outside table range 1..{self.nmax}")
        return self.polys[n]

    @property
    def dmax(self) -> int:
        """Largest i with alpha_i != 0."""
        return max(i for i, a in enumerate(self.alphas) if not a.is_zero())

    def extend(self, nmax: int) -> GossTable:
        if nmax <= self.nmax:
            return self
        return goss_table(self.F, self.alphas, nmax)


def _recur(F: FieldParams, alphas, polys: list[XPoly], n: int) -> XPoly:
    if n == 1:
        return XPoly.X(F)
    acc = polys[n - 1]
    qi = F.q
    i = 1
    while qi < n and i < len(alphas):
        if not alphas[i].is_zero():
            acc = acc + polys[n - qi].scale(alphas[i])
        i += 1
        qi *= F.q
    return acc.shift(1)


def goss_table(F: FieldParams, alphas, nmax: int) -> GossTable:
    alphas = tuple(RatK.of(a, F) for a in alphas)
    if not alphas or not alphas[0].is_one():
        raise ValueError("alpha_0 must be 1")
    if nmax < 1:
        raise ValueError("nmax must be positive")
    polys = [XPoly.zero(F)]
    for n in range(1, nmax + 1):
        polys.append(_recur(F, alphas, polys, n))
    return GossTable(F, alphas, nmax, polys)


_period_cache: dict = {}


def period_goss_table(F: FieldParams, nmax: int) -> GossTable:
    """Goss polynomials of the Carlitz period lattice (cached, grown on demand)."""
    tab = _period_cache.get(F)
    if tab is None or tab.nmax < nmax:
        imax = 0
        while F.q ** (imax + 1) <= max(nmax, 1):
            imax += 1
        alphas = carlitz_exp(F, imax).alpha
        if tab is not None and len(tab.alphas) == len(alphas):
            polys = list(tab.polys)
        else:
            polys = [XPoly.zero(F)]
        for n in range(len(polys), nmax + 1):
            polys.append(_recur(F, alphas, polys, n))
        tab = GossTable(F, alphas, nmax, polys)
        _period_cache[F] = tab
    return tab


def period_goss(F: FieldParams, n: int) -> XPoly:
    return period_goss_table(F, n)[n]


def torsion_goss_table(prime: Poly, nmax: int) -> GossTable:
    return goss_table(prime.F, torsion_exp_coeffs(prime), nmax)


def goss_ord(n: int, table: GossTable) -> int:
    """Exact X-adic order of G_n."""
    return table[n].ord()


def order_lower_bound(n: int, q: int, dmax: int) -> int:
    return math.ceil(n / q**dmax)


def is_multiplicative_pair(n: int, n2: int, table: GossTable) -> bool:
    """Whether G_n G_n' = G_{n+n'} exactly."""
    if n + n2 > table.nmax:
        table = table.extend(n + n2)
    return table[n] * table[n2] == table[n + n2]


# ---------------------------------------------------------------------------
# integral torsion Goss polynomials for the Hecke operator


@lru_cache(maxsize=64)
def scaled_torsion_goss(prime: Poly, nmax: int, xdeg: int) -> tuple[np.ndarray, ...]:
    """H_n(X) = G_{n, ker rho_p}(p X) for n = 0..nmax, truncated to X-degree <= xdeg.

    H_1 = p X and H_n = X (p H_{n-1} + sum_{i>=1} l_i(p) H_{n-q^i}); all
    coefficients lie in A.  Entry n is an int array indexed [X-degree, T-degree].
    Truncation in X is compatible with the recursion since it only raises degrees.
    """
    F = prime.F
    ls = rho(prime).l
    q = F.q
    rows = xdeg + 1

    def lift(arr, w):
        if arr.shape[1] >= w:
            return arr
        out = np.zeros((arr.shape[0], w), dtype=np.int64)
        out[:, : arr.shape[1]] = arr
        return out

    def times_poly(arr, f: Poly):
        if f.deg == 0:
            return F.vscale(f.lc, arr)
        return F.conv(arr, f.c[None, :])

    H = [np.zeros((rows, 1), dtype=np.int64)]
    h1 = np.zeros((rows, prime.c.size), dtype=np.int64)
    if rows > 1:
        h1[1] = prime.c
    H.append(h1)
    for n in range(2, nmax + 1):
        acc = times_poly(H[n - 1], prime)
        qi, i = q, 1
        while qi < n and i < len(ls):
            term = times_poly(H[n - qi], ls[i])
            w = max(acc.shape[1], term.shape[1])
            acc = F.vadd(lift(acc, w), lift(term, w))
            i += 1
            qi *= q
        out = np.zeros_like(acc)
        out[1:] = acc[:-1]
        nz = np.flatnonzero(out.any(axis=0))
        out = out[:, : (int(nz[-1]) + 1 if nz.size else 1)]
        out.flags.writeable = False
        H.append(out)
    return tuple(H)
