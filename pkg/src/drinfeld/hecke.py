"""The Hecke operator T_p on truncated t-expansions.

For a monic prime p of degree d and f = sum a_n t^n of weight k,

    T_p f = p^k sum a_n t_p^n + sum a_n G_{n,p}(p t),

where G_{n,p} are the Goss polynomials of the lattice ker rho_p.  The second
sum uses the integral polynomials H_n(X) = G_{n,p}(p X).  Since
ord_X H_n >= ceil(n / q^d), input precision N q^d gives output precision N.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import Poly, RatK, is_irreducible
from .carlitz import t_sub
from .forms import ModularForm
from .goss import scaled_torsion_goss, torsion_goss_table
from .series import InsufficientPrecision, TruncSeries


class NotEigen(ValueError):
    """T_p f is not a multiple of f at the working precision."""

    def __init__(self, msg: str, witness: int | None = None):
        super().__init__(msg)
        self.witness = witness


def _check_prime(prime: Poly):
    if not prime.is_monic() or prime.deg < 1 or not is_irreducible(prime):
        raise ValueError(f"{prime} is not a monic irreducible polynomial")


@dataclass(frozen=True)
class HeckeContext:
    """T_p at a fixed prime and weight, able to produce N_out coefficients."""

    prime: Poly
    k: int
    n_out: int

    def __post_init__(self):
        _check_prime(self.prime)
        if self.n_out < 0:
            raise ValueError("output precision must be nonnegative")

    @property
    def qd(self) -> int:
        return self.prime.F.q**self.prime.deg

    @property
    def nmax(self) -> int:
        return self.n_out * self.qd

    def torsion_polys(self):
        return scaled_torsion_goss(self.prime, self.nmax, self.n_out)

    def apply(self, s: TruncSeries) -> TruncSeries:
        return _apply_series(s, self.prime, self.k, self.n_out)


def required_precision(prime: Poly, n_out: int) -> int:
    return n_out * prime.F.q**prime.deg


def check_order_bound(prime: Poly, nmax: int) -> bool:
    """ord_X G_{n,p} >= ceil(n / q^d) for n = 1..nmax (the tail-negligibility bound)."""
    table = torsion_goss_table(prime, nmax)
    qd = prime.F.q**prime.deg
    return all(table[n].ord() >= math.ceil(n / qd) for n in range(1, nmax + 1))


def _goss_part(s: TruncSeries, prime: Poly, n_out: int) -> TruncSeries:
    F = s.F
    nin = n_out * F.q**prime.deg
    H = scaled_torsion_goss(prime, nin, n_out)
    acc = None
    for n in range(1, nin + 1):
        row = s.num[n] if n < s.num.shape[0] else None
        if row is None or not row.any():
            continue
        hn = H[n]
        if not hn.any():
            continue
        blk = F.conv(hn, row[None, :])
        if acc is None:
            acc = np.zeros((n_out + 1, blk.shape[1]), dtype=np.int64)
        elif acc.shape[1] < blk.shape[1]:
            grown = np.zeros((n_out + 1, blk.shape[1]), dtype=np.int64)
            grown[:, : acc.shape[1]] = acc
            acc = grown
        dst = acc[: blk.shape[0], : blk.shape[1]]
        dst[...] = F.vadd(dst, blk)
    if acc is None:
        return TruncSeries.zero(F, n_out)
    return TruncSeries(F, acc, s.den, n_out)


def _apply_series(s: TruncSeries, prime: Poly, k: int, n_out: int) -> TruncSeries:
    F = s.F
    need = required_precision(prime, n_out)
    if s.prec < need:
        raise InsufficientPrecision(
            f"T_{prime} to precision {n_out} needs input precision {need} (have {s.prec})")
    qd = F.q**prime.deg
    # f(p z): only a_n with n q^d <= n_out reach the output
    tp = t_sub(prime, n_out)
    m = n_out // qd
    sub = TruncSeries.monomial(F, 0, s.coeff(m), n_out)
    for i in range(m - 1, -1, -1):
        sub = sub * tp + s.coeff(i)
    sub = sub.scale(RatK.of(prime**k))
    return sub + _goss_part(s, prime, n_out)


def hecke_apply(f: ModularForm, prime: Poly, n_out: int | None = None) -> ModularForm:
    """T_p f, with output precision floor(prec(f) / q^d) unless n_out is given."""
    _check_prime(prime)
    qd = f.F.q**prime.deg
    if n_out is None:
        n_out = f.prec // qd
    s = _apply_series(f.series, prime, f.k, n_out)
    label = f"T_{{{prime}}}({f.label})" if f.label else ""
    return ModularForm(f.k, f.m, s, f.quasi, label)


def eigen_solve(f: ModularForm, prime: Poly, n_out: int | None = None) -> RatK:
    """The eigenvalue lambda with T_p f = lambda f at the output precision, else NotEigen."""
    Tf = hecke_apply(f, prime, n_out).series
    N = Tf.prec
    s = f.series.truncate(N)
    if s.is_zero():
        raise ValueError("eigenvalue of the zero series is undefined at this precision")
    i = s.order()
    lam = Tf.coeff(i) / s.coeff(i)
    w = Tf.first_difference(s.scale(lam))
    if w is not None:
        raise NotEigen(f"T_{prime} f differs from ({lam}) f at t^{w}", witness=w)
    return lam


def prime_power_exponent(lam: RatK, prime: Poly, kmax: int) -> int | None:
    """n <= kmax with lam = p^n, or None."""
    for n in range(kmax + 1):
        if lam == RatK.of(prime**n):
            return n
    return None


__all__ = [
    "HeckeContext",
    "NotEigen",
    "check_order_bound",
    "eigen_solve",
    "hecke_apply",
    "prime_power_exponent",
    "required_precision",
]
