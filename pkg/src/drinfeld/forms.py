"""Drinfeld modular forms as graded truncated t-expansions.

This module turns A-expansions ``c_0 + sum_a c_a G_n(t_a)`` into t-expansions
and back, builds the named forms (h, g, g_k, Delta, f_{k,n} and its families,
the false Eisenstein series), writes forms in the basis ``g^i h^j`` and
implements the reindexing map iota_T.
"""

from __future__ import annotations

import math
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .algebra import FieldParams, Poly, RatK, monic_enum
from .cache import active_cache
from .carlitz import inv_exp_laurent, inv_psi_power
from .goss import period_goss
from .linalg import solve_sparse_multi
from .series import InsufficientPrecision, TruncSeries


class NotInSpan(ValueError):
    """The series is not a K-combination of the monomials g^i h^j of its weight and type."""

    def __init__(self, msg: str, witness: int | None = None):
        super().__init__(msg)
        self.witness = witness


class Inconsistent(ValueError):
    """No A-expansion with the requested exponent matches the series."""

    def __init__(self, msg: str, witness: int | None = None):
        super().__init__(msg)
        self.witness = witness


class Underdetermined(ValueError):
    """The precision does not pin down the requested A-expansion coefficients."""


class HypothesisError(ValueError):
    """(k, n) fails the hypothesis under which f_{k,n} is a modular form."""


# ---------------------------------------------------------------------------
# modular forms


@dataclass(frozen=True)
class ModularForm:
    """A t-expansion with its weight k and type m (mod q-1).

    ``quasi`` marks series that are not modular forms (the false Eisenstein
    series); they are refused by :func:`gh_express` unless explicitly allowed.
    """

    k: int
    m: int
    series: TruncSeries
    quasi: bool = False
    label: str = ""
    aexp: "AExpansion | None" = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        qm1 = self.series.F.q - 1
        object.__setattr__(self, "m", self.m % qm1)

    @property
    def F(self) -> FieldParams:
        return self.series.F

    @property
    def prec(self) -> int:
        return self.series.prec

    def cusp_order(self) -> int:
        return self.series.order()

    def is_cuspidal(self) -> bool:
        return self.cusp_order() >= 1

    def is_double_cuspidal(self) -> bool:
        return self.cusp_order() >= 2

    def truncate(self, N: int) -> ModularForm:
        return ModularForm(self.k, self.m, self.series.truncate(N), self.quasi, self.label, self.aexp)

    def _check_grading(self, other: ModularForm):
        if (self.k, self.m) != (other.k, other.m):
            raise ValueError(f"cannot add forms of weight/type {(self.k, self.m)} and {(other.k, other.m)}")

    def __add__(self, other: ModularForm) -> ModularForm:
        self._check_grading(other)
        return ModularForm(self.k, self.m, self.series + other.series, self.quasi or other.quasi)

    def __sub__(self, other: ModularForm) -> ModularForm:
        self._check_grading(other)
        return ModularForm(self.k, self.m, self.series - other.series, self.quasi or other.quasi)

    def __neg__(self):
        return ModularForm(self.k, self.m, -self.series, self.quasi)

    def scale(self, c) -> ModularForm:
        return ModularForm(self.k, self.m, self.series.scale(c), self.quasi)

    def __mul__(self, other):
        if isinstance(other, ModularForm):
            return ModularForm(self.k + other.k, self.m + other.m, self.series * other.series,
                               self.quasi or other.quasi)
        return self.scale(other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> ModularForm:
        if e < 0:
            raise ValueError("negative powers of forms are not forms")
        label = f"({self.label})^{e}" if self.label else ""
        return ModularForm(self.k * e, self.m * e, self.series**e, self.quasi, label)

    def __str__(self):
        tag = f"{self.label}: " if self.label else ""
        q = " (quasi-modular)" if self.quasi else ""
        return f"{tag}weight {self.k}, type {self.m}{q}: {self.series}"


# ---------------------------------------------------------------------------
# A-expansions


class PowerRule:
    """a -> scale * a^exponent (picklable coefficient rule)."""

    def __init__(self, exponent: int, scale: RatK | None = None):
        self.exponent = exponent
        self.scale = scale

    def __call__(self, a: Poly) -> RatK:
        v = RatK.of(a**self.exponent)
        return v if self.scale is None else v * self.scale

    def __repr__(self):
        return f"PowerRule({self.exponent})"


class IotaRule:
    """Coefficients of iota_T(f): b -> c_{b/T} if T | b, else 0."""

    def __init__(self, inner: "AExpansion"):
        self.inner = inner

    def __call__(self, b: Poly) -> RatK:
        F = b.F
        if b.coeff(0) != 0 or b.deg < 1:
            return RatK.zero(F)
        return self.inner.coeff(Poly._raw(F, b.c[1:].copy()))


@dataclass(frozen=True)
class AExpansion:
    """c_0 + sum_{a monic} c_a G_n(t_a).

    Coefficients come either from the finite map ``coeffs`` (every monic a of
    degree <= D not in the map has c_a = 0) or from ``rule``, a callable valid
    for all monic a (then D is unbounded and reported as -1).
    """

    F: FieldParams
    n: int
    c0: RatK
    coeffs: dict = field(default_factory=dict, compare=False)
    D: int = -1
    rule: Callable | None = field(default=None, compare=False)
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("the A-exponent n must be positive")
        if self.rule is None:
            for a in self.coeffs:
                if not a.is_monic():
                    raise ValueError(f"A-expansion index {a} is not monic")
                if a.deg > self.D:
                    raise ValueError(f"index {a} has degree above D = {self.D}")

    @classmethod
    def from_rule(cls, F, n: int, rule: Callable, c0=None, label: str = "") -> AExpansion:
        return cls(F, n, RatK.of(c0 if c0 is not None else 0, F), {}, -1, rule, label)

    @classmethod
    def power_law(cls, F, n: int, exponent: int, label: str = "") -> AExpansion:
        """sum_a a^exponent G_n(t_a)."""
        return cls.from_rule(F, n, PowerRule(exponent), label=label)

    def has_degree(self, d: int) -> bool:
        return self.rule is not None or d <= self.D

    def coeff(self, a: Poly) -> RatK:
        if self.rule is not None:
            return RatK.of(self.rule(a), self.F)
        if a.deg > self.D:
            raise KeyError(f"coefficient of {a} unknown (D = {self.D})")
        return self.coeffs.get(a, RatK.zero(self.F))

    def items(self, D: int | None = None):
        """(a, c_a) for every monic a of degree <= D, canonical order."""
        if D is None:
            if self.rule is not None:
                raise ValueError("rule-based expansion needs an explicit degree bound")
            D = self.D
        for d in range(D + 1):
            for a in monic_enum(self.F, d):
                yield a, self.coeff(a)

    def explicit(self, D: int) -> AExpansion:
        """The finite map of coefficients up to degree D."""
        cs = {a: c for a, c in self.items(D) if not c.is_zero()}
        return AExpansion(self.F, self.n, self.c0, cs, D, None, self.label)

    def same_coefficients(self, other: AExpansion, D: int) -> bool:
        if self.n != other.n or self.c0 != other.c0:
            return False
        return all(self.coeff(a) == other.coeff(a) for d in range(D + 1) for a in monic_enum(self.F, d))

    def __eq__(self, other):
        if not isinstance(other, AExpansion):
            return NotImplemented
        if self.F != other.F or self.n != other.n or self.c0 != other.c0:
            return False
        if self.rule is not None or other.rule is not None:
            return self is other
        if self.D != other.D:
            return False
        nz = lambda m: {a: c for a, c in m.items() if not c.is_zero()}  # noqa: E731
        return nz(self.coeffs) == nz(other.coeffs)

    __hash__ = None  # type: ignore[assignment]


# ---------------------------------------------------------------------------
# A-expansion -> t-expansion


def degree_cutoff(F: FieldParams, n: int, N: int) -> int:
    """Largest d such that degree-d terms can reach t^N (by the order of G_n)."""
    o = period_goss(F, n).ord()
    d = -1
    while o * F.q ** (d + 1) <= N:
        d += 1
    return d


def _partial_sums(F, n, N, items):
    """{j: sum_a c_a t_a^j} over the given (a, c_a), j in the support of G_n."""
    G = period_goss(F, n)
    support = G.support()
    o = support[0]
    sums: dict[int, TruncSeries] = {}
    # integral coefficients are accumulated as raw code arrays, summed once
    raw: dict[int, np.ndarray] = {}
    for a, c in items:
        if c.is_zero():
            continue
        qd = F.q**a.deg
        if o * qd > N:
            continue
        for j in support:
            L = N - j * qd
            if L < 0:
                break
            uj = inv_psi_power(a, j, L)
            if c.den.deg == 0 and uj.den.deg == 0:
                blk = F.conv(uj.num, F.vscale(F.inv(c.den.lc), c.num.c)[None, :])
                acc = raw.get(j)
                if acc is None or acc.shape[1] < blk.shape[1]:
                    grown = np.zeros((N + 1, max(blk.shape[1], 0 if acc is None else acc.shape[1])), dtype=np.int64)
                    if acc is not None:
                        grown[:, : acc.shape[1]] = acc
                    acc = raw[j] = grown
                r0 = j * qd
                dst = acc[r0: r0 + blk.shape[0], : blk.shape[1]]
                dst[...] = F.vadd(dst, blk)
                continue
            term = uj.scale(c).shift(j * qd)
            sums[j] = term if j not in sums else sums[j] + term
    for j, acc in raw.items():
        s = TruncSeries(F, acc, None, N)
        sums[j] = s if j not in sums else sums[j] + s
    return sums


def _partial_sums_job(args):
    F, n, N, items = args
    return _partial_sums(F, n, N, items)


def goss_sum(F: FieldParams, n: int, N: int, items, jobs: int = 1) -> TruncSeries:
    """sum_a c_a G_n(t_a) to precision N over the given (a, c_a) pairs."""
    items = [(a, RatK.of(c, F)) for a, c in items]
    if jobs > 1 and len(items) > jobs:
        size = math.ceil(len(items) / jobs)
        chunks = [items[i: i + size] for i in range(0, len(items), size)]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(_partial_sums_job, [(F, n, N, ch) for ch in chunks]))
    else:
        parts = [_partial_sums(F, n, N, items)]
    # fixed reduction order: chunk order, then j
    sums: dict[int, TruncSeries] = {}
    for part in parts:
        for j in sorted(part):
            sums[j] = part[j] if j not in sums else sums[j] + part[j]
    G = period_goss(F, n)
    acc = TruncSeries.zero(F, N)
    for j in sorted(sums):
        acc = acc + sums[j].scale(G.coeff(j))
    return acc


def expand(ax: AExpansion, N: int, jobs: int = 1) -> TruncSeries:
    """t-expansion of an A-expansion to precision N.

    Monic a with ord(G_n) q^deg(a) > N cannot reach t^N and are skipped; all
    coefficients below that cutoff must be known.
    """
    F = ax.F
    dcut = degree_cutoff(F, ax.n, N)
    if not ax.has_degree(dcut):
        raise ValueError(f"A-expansion known to degree {ax.D}, but degree {dcut} terms reach t^{N}")
    s = goss_sum(F, ax.n, N, list(ax.items(dcut)), jobs)
    if not ax.c0.is_zero():
        s = s + ax.c0
    return s


# ---------------------------------------------------------------------------
# named forms


_memo: dict = {}


def _cached_series(F: FieldParams, name: str, N: int, build: Callable[[int], TruncSeries]) -> TruncSeries:
    """In-process memo (reusing higher precision) backed by the optional disk cache."""
    key = (F, name)
    s = _memo.get(key)
    if s is not None and s.prec >= N:
        return s.truncate(N)
    disk = active_cache()
    if disk is not None:
        from .io import series_dumps, series_loads

        text = disk.read("series", F, name, N)
        if text is not None:
            s = series_loads(text)
        else:
            s = build(N)
            disk.write("series", F, name, N, series_dumps(s))
    else:
        s = build(N)
    if key not in _memo or _memo[key].prec < s.prec:
        _memo[key] = s
    return s


def clear_memo():
    _memo.clear()


def _qm1(F):
    return F.q - 1


def f_kn(F: FieldParams, k: int, n: int, N: int, jobs: int = 1, check: bool = True) -> ModularForm:
    """f_{k,n} = sum_a a^{k-n} G_n(t_a), of weight k and type n."""
    if check:
        from .verify import thm1_hypothesis

        ok, why = thm1_hypothesis(F, k, n)
        if not ok:
            raise HypothesisError(f"f_{{{k},{n}}}: {why}")
    ax = AExpansion.power_law(F, n, k - n, label=f"f_{{{k},{n}}}")
    s = _cached_series(F, f"fkn:{k}:{n}", N, lambda M: expand(ax, M, jobs))
    return ModularForm(k, n, s, label=ax.label, aexp=ax)


def f_s(F: FieldParams, s: int, N: int, jobs: int = 1) -> ModularForm:
    """f_s = f_{q+1+s(q-1), 1}."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    f = f_kn(F, F.q + 1 + s * (F.q - 1), 1, N, jobs)
    return ModularForm(f.k, f.m, f.series, label=f"f_{s}", aexp=f.aexp)


def F_nu(F: FieldParams, nu: int, N: int, jobs: int = 1) -> ModularForm:
    """F_nu = sum_a a^(q^nu) t_a (weight q^nu + 1, type 1); F_0 is the false Eisenstein series."""
    if nu < 0:
        raise ValueError("nu must be nonnegative")
    if nu == 0:
        return falseE(F, N, jobs)
    f = f_kn(F, F.q**nu + 1, 1, N, jobs)
    return ModularForm(f.k, f.m, f.series, label=f"F_{nu}", aexp=f.aexp)


def F_knl(F: FieldParams, k: int, n: int, l: int, N: int, jobs: int = 1) -> ModularForm:
    """F_{k,n,l} = f_{(k-n) q^l + n, n}."""
    from .verify import thm1_hypothesis

    ok, why = thm1_hypothesis(F, k, n)
    if not ok:
        raise HypothesisError(f"F_{{{k},{n},{l}}}: {why}")
    f = f_kn(F, (k - n) * F.q**l + n, n, N, jobs)
    return ModularForm(f.k, f.m, f.series, label=f"F_{{{k},{n},{l}}}", aexp=f.aexp)


def h(F: FieldParams, N: int, jobs: int = 1) -> ModularForm:
    """h = sum_a a^q t_a, weight q+1, type 1, normalized t + ..."""
    f = f_kn(F, F.q + 1, 1, N, jobs)
    return ModularForm(f.k, f.m, f.series, label="h", aexp=f.aexp)


def Delta(F: FieldParams, N: int, jobs: int = 1) -> ModularForm:
    """Delta = sum_a a^(q(q-1)) t_a^(q-1), weight q^2-1, type 0."""
    q = F.q
    f = f_kn(F, q * q - 1, q - 1, N, jobs)
    return ModularForm(f.k, f.m, f.series, label="Delta", aexp=f.aexp)


def falseE(F: FieldParams, N: int, jobs: int = 1) -> ModularForm:
    """E = sum_a a t_a; tagged weight 2, type 1, quasi-modular (not a modular form)."""
    ax = AExpansion.power_law(F, 1, 1, label="E")
    s = _cached_series(F, "falseE", N, lambda M: expand(ax, M, jobs))
    return ModularForm(2, 1, s, quasi=True, label="E", aexp=ax)


def Phi(F: FieldParams, nu: int, j: int, N: int, jobs: int = 1) -> TruncSeries:
    """Phi_{nu,j} = sum_a a^(j q^nu) t_a^j (a bare series)."""
    q = F.q
    items_rule = PowerRule(j * q**nu)
    # t_a^j as G_j only when j <= q
    if j > q:
        raise ValueError("Phi_{nu,j} is only considered for j <= q")
    ax = AExpansion.from_rule(F, j, items_rule)
    return _cached_series(F, f"Phi:{nu}:{j}", N, lambda M: expand(ax, M, jobs))


# -- Eisenstein series ------------------------------------------------------------


def delta_k(F: FieldParams, k: int) -> RatK:
    """delta_k: the w^0 coefficient of G_k(1/e_C(w)), an element of K."""
    if k < 1 or k % (F.q - 1):
        raise ValueError(f"delta_k needs (q-1) | k; got k = {k}")
    G = period_goss(F, k)
    L = inv_exp_laurent(F, k + 1)
    acc = RatK.zero(F)
    power = None
    for j in range(1, k + 1):
        power = L if power is None else power * L
        c = G.coeff(j)
        if not c.is_zero():
            acc = acc + c * power.coeff(0)
    if acc.is_zero():
        raise ArithmeticError(f"delta_{k} vanished")
    return acc


def eisenstein_g_k(F: FieldParams, k: int, N: int, jobs: int = 1) -> ModularForm:
    """g_k = 1 - (1/delta_k) sum_a G_k(t_a): weight k, type 0, constant term 1."""
    d = delta_k(F, k)

    def build(M):
        ax = AExpansion.from_rule(F, k, PowerRule(0))
        return 1 - expand(ax, M, jobs).scale(d.inverse())

    s = _cached_series(F, f"gk:{k}", N, build)
    ax = AExpansion.from_rule(F, k, PowerRule(0, -d.inverse()), c0=1, label=f"g_{k}")
    return ModularForm(k, 0, s, label=f"g_{k}", aexp=ax)


def g(F: FieldParams, N: int, jobs: int = 1) -> ModularForm:
    f = eisenstein_g_k(F, F.q - 1, N, jobs)
    return ModularForm(f.k, f.m, f.series, label="g", aexp=f.aexp)


def gh_monomial(F: FieldParams, i: int, j: int, N: int, jobs: int = 1) -> ModularForm:
    """g^i h^j."""
    if i < 0 or j < 0:
        raise ValueError("exponents must be nonnegative")
    out = None
    if i:
        out = g(F, N, jobs) ** i
    if j:
        hj = h(F, N, jobs) ** j
        out = hj if out is None else out * hj
    if out is None:
        out = ModularForm(0, 0, TruncSeries.one(F, N))
    parts = [p for p, e in (("g", i), ("h", j)) if e]
    label = "*".join(f"{p}^{e}" if e > 1 else p for p, e in (("g", i), ("h", j)) if e) or "1"
    del parts
    return ModularForm(out.k, out.m, out.series.truncate(N), label=label)


# ---------------------------------------------------------------------------
# the g, h basis


def gh_basis(F: FieldParams, k: int, m: int) -> list[tuple[int, int]]:
    """Exponents (i, j) with (q-1)i + (q+1)j = k, j = m mod (q-1), sorted by j."""
    q = F.q
    out = []
    for j in range(k // (q + 1) + 1):
        rest = k - (q + 1) * j
        if rest % (q - 1) == 0 and (j - m) % (q - 1) == 0:
            out.append((rest // (q - 1), j))
    return out


@dataclass(frozen=True)
class GHExpression:
    k: int
    m: int
    coords: dict  # (i, j) -> RatK
    checked_to: int

    def nonzero(self) -> dict:
        return {ij: c for ij, c in self.coords.items() if not c.is_zero()}

    def __str__(self):
        terms = []
        for (i, j), c in sorted(self.nonzero().items(), key=lambda t: t[0][1]):
            mono = "*".join(x for x in (
                "" if i == 0 else ("g" if i == 1 else f"g^{i}"),
                "" if j == 0 else ("h" if j == 1 else f"h^{j}")) if x) or "1"
            cs = str(c)
            terms.append(mono if c.is_one() else f"({cs})*{mono}")
        return " + ".join(terms) if terms else "0"


def gh_express(f: ModularForm, buffer: int = 10, allow_quasi: bool = False, jobs: int = 1) -> GHExpression:
    """Coordinates of f in the basis g^i h^j of M_{k,m}.

    h^j g^i has t-order exactly j with leading coefficient 1, so the system is
    triangular; every remaining known coefficient is then checked.
    """
    if f.quasi and not allow_quasi:
        raise NotInSpan(f"{f.label or 'series'} is flagged quasi-modular")
    F = f.F
    basis = gh_basis(F, f.k, f.m)
    if not basis:
        raise NotInSpan(f"no monomials g^i h^j of weight {f.k} and type {f.m}")
    need = max(j for _, j in basis) + buffer
    if f.prec < need:
        raise InsufficientPrecision(f"gh_express needs precision >= {need} (have {f.prec})")
    N = f.prec
    r = f.series
    coords = {}
    for i, j in basis:
        c = r.coeff(j)
        coords[(i, j)] = c
        if not c.is_zero():
            r = r - gh_monomial(F, i, j, N, jobs).series.scale(c)
    if not r.is_zero():
        w = r.order()
        raise NotInSpan(f"residual coefficient at t^{w} does not vanish", witness=w)
    return GHExpression(f.k, f.m, coords, N)


def gh_combination(F: FieldParams, coords: dict, N: int) -> TruncSeries:
    """sum c_{ij} g^i h^j."""
    acc = TruncSeries.zero(F, N)
    for (i, j), c in coords.items():
        if not RatK.of(c, F).is_zero():
            acc = acc + gh_monomial(F, i, j, N).series.scale(c)
    return acc


# ---------------------------------------------------------------------------
# recovery of A-expansions


def _column_rows(F, n, N, dmax):
    """Sparse rows of the matrix whose column a holds the t-coefficients of den * G_n(t_a)."""
    G = period_goss(F, n)
    den = G.den
    monics = [a for d in range(dmax + 1) for a in monic_enum(F, d)]
    rows: dict[int, dict[int, RatK]] = defaultdict(dict)
    Gint = RatK.of(den)
    for col, a in enumerate(monics):
        s = goss_sum(F, n, N, [(a, Gint)])
        for i, c in s.nonzero_terms():
            rows[i][col] = c
    return monics, rows, den


def aexp_recover(s: TruncSeries, n: int, kn_hint: int | None = None, degree: int | None = None) -> AExpansion:
    """Recover c_0 and c_a (deg a <= D) from a truncated t-expansion.

    All unknowns whose columns reach t^N are solved jointly.  The returned
    expansion covers the largest D for which every c_a with deg a <= D is
    determined by the known coefficients (or exactly ``degree`` if given).

    ``kn_hint`` (optional) is an expected exponent e with c_a = a^e c_1; if the
    determined coefficients contradict it, :class:`Inconsistent` is raised.
    """
    res = aexp_recover_many([s], n, kn_hint, degree)[0]
    if isinstance(res, Exception):
        raise res
    return res


def aexp_recover_many(series: list, n: int, kn_hint: int | None = None, degree: int | None = None) -> list:
    """:func:`aexp_recover` for several series of equal precision, sharing one elimination.

    Returns, per series, either an :class:`AExpansion` or the exception
    (:class:`Inconsistent` / :class:`Underdetermined`) that recovery would raise.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not series:
        return []
    F = series[0].F
    N = series[0].prec
    if any(s.prec != N or s.F != F for s in series):
        raise ValueError("batch recovery needs series over one field at one precision")
    dmax = degree_cutoff(F, n, N)
    if dmax < 0:
        return [Underdetermined(f"precision {N} is below the order of G_{n}") for _ in series]
    monics, rows, den = _column_rows(F, n, N, dmax)
    c0s = [s.coeff(0) for s in series]
    targets = [(s - c0).scale(RatK.of(den)) for s, c0 in zip(series, c0s)]
    eqs = []
    for i in range(1, N + 1):
        rhs = [t.coeff(i) for t in targets]
        row = rows.get(i, {})
        if row or any(not r.is_zero() for r in rhs):
            eqs.append((row, rhs, i))
    sols = solve_sparse_multi(eqs, len(monics), len(series))
    # the determined degree depends only on the columns
    determined = sols[0].determined
    D_det = -1
    start = 0
    for d in range(dmax + 1):
        cnt = F.q**d
        if all(c in determined for c in range(start, start + cnt)):
            D_det = d
            start += cnt
        else:
            break
    out: list = []
    for c0, sol in zip(c0s, sols):
        if not sol.consistent:
            out.append(Inconsistent(f"no A-expansion with exponent {n}: equation at t^{sol.inconsistent} fails",
                                    witness=sol.inconsistent))
            continue
        D = D_det
        if degree is not None:
            if degree > D_det:
                out.append(Underdetermined(f"coefficients of degree {degree} are not determined at precision {N} "
                                           f"(determined up to degree {D_det})"))
                continue
            D = degree
        if D < 0:
            out.append(Underdetermined(f"precision {N} does not determine c_1"))
            continue
        coeffs = {}
        for col, a in enumerate(monics):
            if a.deg > D:
                break
            v = sol.values.get(col, RatK.zero(F))
            if not v.is_zero():
                coeffs[a] = v
        ax = AExpansion(F, n, c0, coeffs, D)
        if kn_hint is not None:
            c1 = ax.coeff(Poly.one(F))
            bad = next((a for a, c in ax.items() if c != c1 * RatK.of(a**kn_hint)), None)
            if bad is not None:
                out.append(Inconsistent(f"c_{bad} = {ax.coeff(bad)} contradicts c_a = a^{kn_hint} c_1"))
                continue
        out.append(ax)
    return out


def determined_degree(F: FieldParams, n: int, N: int) -> int:
    """Largest D such that precision N determines every c_a with deg a <= D (-1 if none)."""
    s = TruncSeries.zero(F, N)
    try:
        return aexp_recover(s, n).D
    except Underdetermined:
        return -1


# ---------------------------------------------------------------------------
# iota_T


def iota_T(ax: AExpansion) -> AExpansion:
    """iota_T: c_0 + sum c_a G_n(t_a) -> c_0 + sum c_a G_n(t_{aT}) (the form z -> f(Tz))."""
    F = ax.F
    if ax.rule is not None:
        return AExpansion.from_rule(F, ax.n, IotaRule(ax), ax.c0, label=f"iota_T({ax.label})")
    coeffs = {a.shift(1): c for a, c in ax.coeffs.items()}
    return AExpansion(F, ax.n, ax.c0, coeffs, ax.D + 1, None, f"iota_T({ax.label})")
