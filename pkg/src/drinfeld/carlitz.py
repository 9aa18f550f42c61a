"""The Carlitz module and the substitution series t_a.

Conventions: the Carlitz exponential is ``e_C(w) = sum_i w^(q^i) / D_i``, the
uniformizer is ``t = 1/e_C(w)`` and ``t_a = 1/rho_a(1/t)``.  The period never
appears; every coefficient stays in K.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .algebra import FieldParams, Poly, RatK, carlitz_factorial_D, is_irreducible
from .series import LaurentSeries, TruncSeries, XPoly


@dataclass(frozen=True)
class RhoCoeffs:
    """rho_a(X) = sum_i l[i] X^(q^i)."""

    a: Poly
    l: tuple[Poly, ...]

    @property
    def d(self) -> int:
        return len(self.l) - 1

    def compose(self, other: RhoCoeffs) -> RhoCoeffs:
        """Coefficients of rho_a o rho_b (which equals rho_{ab})."""
        F = self.a.F
        e = F.e
        out = [Poly.zero(F)] * (self.d + other.d + 1)
        for i, li in enumerate(self.l):
            # l_i * (sum_j m_j X^(q^j))^(q^i) = sum_j l_i m_j^(q^i) X^(q^(i+j))
            for j, mj in enumerate(other.l):
                out[i + j] = out[i + j] + li * mj.frobenius(e * i)
        return RhoCoeffs(self.a * other.a, tuple(out))

    def __call__(self, x):
        """Evaluate at an element of A or K (plain power map, no truncation)."""
        F = self.a.F
        q = F.q
        x = RatK.of(x, F)
        acc = RatK.zero(F)
        xp = x
        for li in self.l:
            acc = acc + xp * li
            xp = xp**q
        return acc


@lru_cache(maxsize=None)
def _rho_T_powers(F: FieldParams, n: int) -> tuple[tuple[Poly, ...], ...]:
    """Coefficient lists of rho_{T^j} for j = 0..n."""
    T = Poly.T(F)
    out = [(Poly.one(F),)]
    for _ in range(n):
        prev = out[-1]
        nxt = []
        for i in range(len(prev) + 1):
            c = Poly.zero(F)
            if i < len(prev):
                c = c + T * prev[i]
            if i >= 1:
                c = c + prev[i - 1].frobenius(F.e)
            nxt.append(c)
        out.append(tuple(nxt))
    return tuple(out)


@lru_cache(maxsize=4096)
def rho(a: Poly) -> RhoCoeffs:
    """The Carlitz action rho_a, built from rho_T(X) = T X + X^q by linearity."""
    if a.is_zero():
        raise ValueError("rho_0 is the zero map; a must be nonzero")
    F = a.F
    pw = _rho_T_powers(F, a.deg)
    l = [Poly.zero(F)] * (a.deg + 1)
    for j, c in enumerate(a.coeffs()):
        if c == 0:
            continue
        for i, m in enumerate(pw[j]):
            l[i] = l[i] + m.scale(c)
    return RhoCoeffs(a, tuple(l))


def psi(a: Poly) -> XPoly:
    """psi_a(X) = rho_a(1/X) X^(q^d) = sum_i l_i(a) X^(q^d - q^i)."""
    if not a.is_monic():
        raise ValueError("psi_a is defined for monic a")
    F = a.F
    r = rho(a)
    qd = F.q**r.d
    coeffs = [RatK.zero(F)] * (qd + 1)
    for i, li in enumerate(r.l):
        coeffs[qd - F.q**i] = RatK.of(li)
    return XPoly.from_coeffs(F, coeffs)


def psi_series(a: Poly, N: int) -> TruncSeries:
    """psi_a(t) as a truncated series of precision N (integral, constant term 1)."""
    F = a.F
    r = rho(a)
    qd = F.q**r.d
    w = max(li.c.size for li in r.l)
    num = np.zeros((N + 1, w), dtype=np.int64)
    for i, li in enumerate(r.l):
        k = qd - F.q**i
        if k <= N:
            num[k, : li.c.size] = li.c
    return TruncSeries(F, num, None, N, _normalized=True)


def t_sub(a: Poly, N: int) -> TruncSeries:
    """t_a = t^(q^d) / psi_a(t) to precision N; order exactly q^d, leading coefficient 1."""
    if not a.is_monic():
        raise ValueError("t_a is only used for monic a")
    F = a.F
    qd = F.q**a.deg
    if qd > N:
        return TruncSeries.zero(F, N)
    u = psi_series(a, N - qd).inverse()
    return u.shift(qd)


def t_sub_unit(a: Poly, N: int) -> TruncSeries:
    """1/psi_a(t) to precision N, so that t_a = t^(q^d) * t_sub_unit(a, N - q^d)."""
    return inv_psi_power(a, 1, N)


def _sparse_inverse(F: FieldParams, terms, N: int) -> TruncSeries:
    """1/(1 + sum_s c_s t^s) to precision N; ``terms`` is [(s, c_s)] with s > 0 increasing, c_s in A.

    The coefficients satisfy u_i = -sum_s c_s u_{i-s}; rows are produced in
    blocks of the smallest shift, each block depending only on earlier ones.
    """
    if not terms:
        return TruncSeries.one(F, N)
    slope = max(c.deg / s for s, c in terms)
    W = int(N * slope) + 2
    smin = terms[0][0]
    u = np.zeros((N + 1, W), dtype=np.int64)
    u[0, 0] = 1
    prime = F.e == 1
    for i0 in range(1, N + 1, smin):
        i1 = min(i0 + smin, N + 1)
        # rows below i1 have T-degree <= (i1 - 1) * slope
        wb = min(W, int((i1 - 1) * slope) + 2)
        acc = np.zeros((i1 - i0, wb), dtype=np.int64)
        for s, c in terms:
            lo, hi = i0 - s, i1 - s
            if hi <= 0:
                break
            start = max(lo, 0)
            blk = u[start:hi]
            dst = acc[start - lo:]
            nzk = np.flatnonzero(c.c[:wb])
            if nzk.size > 8:
                # dense kernel: one Kronecker product for the whole block
                src = blk[:, : wb - int(nzk[0])]
                prod = F.conv(src, c.c[None, :wb])[:, :wb]
                dst[:, : prod.shape[1]] = F.vadd(dst[:, : prod.shape[1]], prod)
                continue
            for k in nzk:
                ck = int(c.c[k])
                if prime:
                    dst[:, k:] += ck * blk[:, : wb - k]
                else:
                    dst[:, k:] = F.vadd(dst[:, k:], F.vscale(ck, blk[:, : wb - k]))
            if prime:
                acc %= F.p
        u[i0:i1, :wb] = F.vneg(acc)
    return TruncSeries(F, u, None, N)


def inv_sparse_unit(P: XPoly, N: int) -> TruncSeries:
    """1/P(t) to precision N for an integral polynomial P with constant term 1."""
    if not P.coeff(0).is_one() or P.den.deg > 0:
        raise ValueError("inv_sparse_unit needs an integral polynomial with constant term 1")
    return _sparse_inverse(P.F, [(s, P.coeff(s).num) for s in P.support() if s > 0], N)


@lru_cache(maxsize=4096)
def psi_power_terms(a: Poly, j: int) -> tuple[tuple[int, Poly], ...]:
    """The nonzero terms (s, c_s) of psi_a(X)^j, s increasing (computed sparsely)."""
    F = a.F
    qd = F.q**a.deg
    base = {qd - F.q**i: li for i, li in enumerate(rho(a).l) if not li.is_zero()}
    cur = {0: Poly.one(F)}
    for _ in range(j):
        nxt: dict[int, Poly] = {}
        for s1, c1 in cur.items():
            for s2, c2 in base.items():
                v = nxt.get(s1 + s2)
                v = c1 * c2 if v is None else v + c1 * c2
                nxt[s1 + s2] = v
        cur = {s: c for s, c in nxt.items() if not c.is_zero()}
    return tuple(sorted(cur.items()))


_SPARSE_TERMS = 12


def _times_sparse(u: TruncSeries, terms) -> TruncSeries:
    """u * sum_s c_s t^s for an integral series u and terms [(s, c_s)], c_s in A."""
    F, N = u.F, u.prec
    W = u.num.shape[1] + max(c.deg for _, c in terms)
    out = np.zeros((N + 1, W), dtype=np.int64)
    prime = F.e == 1
    for s, c in terms:
        if s > N:
            continue
        src = u.num[: N + 1 - s]
        dst = out[s:]
        nzk = np.flatnonzero(c.c)
        if prime and nzk.size <= 8:
            for k in nzk:
                dst[:, k: k + src.shape[1]] += int(c.c[k]) * src
            continue
        blk = F.conv(src, c.c[None, :])
        if prime:
            dst[:, : blk.shape[1]] += blk
        else:
            dst[:, : blk.shape[1]] = F.vadd(dst[:, : blk.shape[1]], blk)
    if prime:
        out %= F.p
    return TruncSeries(F, out, u.den, N)


def inv_psi_power(a: Poly, j: int, N: int) -> TruncSeries:
    """psi_a(t)^(-j) to precision N, so t_a^j = t^(j q^d) * inv_psi_power(a, j, N - j q^d).

    With p^m >= j this is psi^(p^m - j) / psi^(p^m), and 1/psi^(p^m) is the
    Frobenius twist of 1/psi, so only one sparse inversion is needed.
    """
    if j < 1:
        raise ValueError("j must be positive")
    if not a.is_monic():
        raise ValueError("psi_a is defined for monic a")
    F = a.F
    base = [t for t in psi_power_terms(a, 1) if t[0] > 0]
    if j == 1:
        return _sparse_inverse(F, base, N)
    m, pm = 0, 1
    while pm < j:
        m, pm = m + 1, pm * F.p
    if pm == j or len(psi_power_terms(a, pm - j)) <= _SPARSE_TERMS:
        M = (N + 1 + pm - 1) // pm - 1
        v = _sparse_inverse(F, base, M).frobenius(m).truncate(N)
        return v if pm == j else _times_sparse(v, psi_power_terms(a, pm - j))
    # fall back on base-p digits of j: product of Frobenius twists
    out = None
    k, rest = 0, j
    while rest:
        rest, digit = divmod(rest, F.p)
        if digit:
            M = (N + 1 + F.p**k - 1) // F.p**k - 1
            v = _sparse_inverse(F, base, M).frobenius(k).truncate(N) ** digit
            out = v if out is None else out * v
        k += 1
    return out


@dataclass(frozen=True)
class CarlitzExpData:
    imax: int
    alpha: tuple[RatK, ...]


def carlitz_exp(F: FieldParams, imax: int) -> CarlitzExpData:
    """alpha_i = 1/D_i for i = 0..imax."""
    return CarlitzExpData(imax, tuple(RatK(Poly.one(F), carlitz_factorial_D(F, i)) for i in range(imax + 1)))


def exp_over_w(F: FieldParams, M: int) -> TruncSeries:
    """e_C(w)/w = 1 + sum_{i >= 1} w^(q^i - 1)/D_i, to precision M."""
    coeffs = [RatK.zero(F)] * (M + 1)
    coeffs[0] = RatK.one(F)
    i = 1
    while F.q**i - 1 <= M:
        coeffs[F.q**i - 1] = RatK(Poly.one(F), carlitz_factorial_D(F, i))
        i += 1
    return TruncSeries.from_coeffs(F, coeffs, M)


def inv_exp_laurent(F: FieldParams, M: int) -> LaurentSeries:
    """1/e_C(w) with known exponents -1 .. M-2."""
    if M < 1:
        raise ValueError("M must be positive")
    return LaurentSeries(-1, exp_over_w(F, M - 1).inverse())


def torsion_exp_coeffs(prime: Poly) -> tuple[RatK, ...]:
    """alpha_i = l_i(p)/p: the exponential of the lattice ker rho_p, normalized."""
    if not prime.is_monic() or not is_irreducible(prime):
        raise ValueError(f"{prime} is not a monic irreducible")
    r = rho(prime)
    return tuple(RatK(li, prime) for li in r.l)
