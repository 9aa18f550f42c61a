"""Verification battery.

The hypothesis predicate for f_{k,n}, brute-force power sums over A_{<d},
congruences of t-expansions modulo prime powers, product identities between
A-expansions and a search over candidate product identities.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import (
    FieldParams,
    Poly,
    RatK,
    all_polys_below,
    bracket,
    int_val_p,
    irreducible_enum,
    poly_gcd,
    v_at_prime,
)
from .goss import is_multiplicative_pair, period_goss_table
from .series import TruncSeries


# -- hypothesis predicate ---------------------------------------------------------


def thm1_hypothesis(F: FieldParams, k: int, n: int) -> tuple[bool, str]:
    """Whether f_{k,n} = sum a^{k-n} G_n(t_a) is a modular form of weight k, type n.

    True iff k - 2n is a positive multiple of q - 1 and n <= p^{v_p(k-n)}.
    The second clause is cross-checked against (T-1)^n | T^{k-n} - 1.
    """
    if k < 1 or n < 1:
        return False, "k and n must be positive"
    q, p = F.q, F.p
    if k - 2 * n <= 0:
        return False, f"k - 2n = {k - 2 * n} is not positive"
    if (k - 2 * n) % (q - 1):
        return False, f"k - 2n = {k - 2 * n} is not a multiple of q - 1 = {q - 1}"
    bound = p ** int_val_p(k - n, p)
    clause = n <= bound
    T = Poly.T(F)
    divides = ((T - 1) ** n).divides(T ** (k - n) - 1)
    if clause != divides:
        raise AssertionError(f"divisibility criterion disagrees for (k, n) = ({k}, {n})")
    if not clause:
        return False, f"n = {n} exceeds p^v_p(k-n) = {bound}"
    return True, "ok"


# -- power sums ---------------------------------------------------------------------


def power_sum(F: FieldParams, r: int, d: int) -> Poly:
    """S_{r,d}: the sum of a^r over all polynomials of degree < d."""
    if r < 1 or d < 1:
        raise ValueError("r and d must be positive")
    acc = Poly.zero(F)
    for a in all_polys_below(F, d):
        acc = acc + a**r
    return acc


@dataclass
class PowerSumReport:
    r: int
    dmax: int
    table: dict  # (j, d) -> Poly
    d_r: int | None  # None: not found up to dmax

    def vanishes(self, j: int, d: int) -> bool:
        return self.table[(j, d)].is_zero()


def min_d(F: FieldParams, r: int, dmax: int) -> PowerSumReport:
    """Table of S_{j,d} (j <= r, d <= dmax) and the least d killing all S_{j,d}, 1 <= j <= r."""
    table = {}
    for d in range(1, dmax + 1):
        polys = all_polys_below(F, d)
        # running powers keep this at r multiplications per polynomial
        sums = [Poly.zero(F)] * (r + 1)
        for a in polys:
            x = Poly.one(F)
            for j in range(1, r + 1):
                x = x * a
                sums[j] = sums[j] + x
        for j in range(1, r + 1):
            table[(j, d)] = sums[j]
    d_r = next((d for d in range(1, dmax + 1) if all(table[(j, d)].is_zero() for j in range(1, r + 1))), None)
    return PowerSumReport(r, dmax, table, d_r)


# -- congruences ----------------------------------------------------------------------


def _factor_squarefree(base: Poly) -> list[Poly]:
    F = base.F
    rest = base.monic()
    out = []
    d = 1
    while rest.deg > 0:
        if d > rest.deg:
            raise ValueError(f"{base} is not squarefree")
        for pr in irreducible_enum(F, d):
            if pr.divides(rest):
                rest = rest.exact_div(pr)
                if pr.divides(rest):
                    raise ValueError(f"{base} is not squarefree")
                out.append(pr)
        d += 1
    return out


@dataclass(frozen=True)
class Modulus:
    """base^exponent with base monic squarefree; congruence means v_P >= exponent at every prime P | base."""

    base: Poly
    exponent: int
    prime_factors: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if self.exponent < 1:
            raise ValueError("modulus exponent must be positive")
        if not self.base.is_monic() or self.base.deg < 1:
            raise ValueError("modulus base must be monic of positive degree")
        fs = tuple(_factor_squarefree(self.base))
        object.__setattr__(self, "prime_factors", fs)

    @classmethod
    def bracket(cls, F: FieldParams, d: int, exponent: int = 1) -> Modulus:
        """[d]^exponent, [d] = T^(q^d) - T."""
        return cls(bracket(F, d), exponent)

    def __str__(self):
        return f"({self.base})^{self.exponent}"


@dataclass
class CongruenceResult:
    holds: bool
    witness: int | None = None  # first t-power where it fails
    prime: Poly | None = None
    valuation: int | float | None = None

    def __bool__(self):
        return self.holds


def congruent_mod(sA: TruncSeries, sB: TruncSeries, mod: Modulus) -> CongruenceResult:
    """Compare sA and sB coefficientwise modulo mod, up to the common precision.

    Raises ValueError if a coefficient of either series has a pole at a prime of the modulus.
    """
    N = min(sA.prec, sB.prec)
    a, b = sA.truncate(N), sB.truncate(N)
    for P in mod.prime_factors:
        for s in (a, b):
            if s.den.deg and not poly_gcd(s.den, P).is_one():
                for i, c in s.nonzero_terms():
                    if v_at_prime(c, P) < 0:
                        raise ValueError(f"coefficient of t^{i} has a pole at {P}; congruence is ill-posed")
    diff = a - b
    for i, c in diff.nonzero_terms():
        for P in mod.prime_factors:
            v = v_at_prime(c, P)
            if v < mod.exponent:
                return CongruenceResult(False, i, P, v)
    return CongruenceResult(True)


def congruence_exponent(F: FieldParams, k: int, n: int, nu: int) -> int:
    """q^nu p^{v_p(k-n)}."""
    return F.q**nu * F.p ** int_val_p(k - n, F.p)


@dataclass
class CheckResult:
    check: str
    parameters: dict
    verdict: bool
    expected: bool | None = True
    witness: str | None = None
    detail: str = ""

    def ok(self) -> bool:
        return self.expected is None or self.verdict == self.expected

    def as_dict(self) -> dict:
        return {"check": self.check, "parameters": self.parameters, "verdict": self.verdict,
                "expected": self.expected, "witness": self.witness}


def family_congruences(F: FieldParams, k: int, n: int, d: int, nu: int, N: int,
                       use_bracket: bool = False, jobs: int = 1) -> list[CheckResult]:
    """F_{k,n,d+nu} = F_{k,n,nu} mod P^{q^nu p^{v_p(k-n)}} for every prime P of degree d.

    With ``use_bracket`` the single modulus [d]^{...} is used instead.
    """
    from .forms import F_knl

    e = congruence_exponent(F, k, n, nu)
    A = F_knl(F, k, n, d + nu, N, jobs).series
    B = F_knl(F, k, n, nu, N, jobs).series
    mods = [Modulus.bracket(F, d, e)] if use_bracket else [Modulus(P, e) for P in irreducible_enum(F, d)]
    out = []
    for m in mods:
        r = congruent_mod(A, B, m)
        out.append(CheckResult(
            "congruence",
            {"q": F.q, "k": k, "n": n, "d": d, "nu": nu, "modulus": str(m), "prec": N},
            r.holds, True, None if r.holds else f"t^{r.witness}"))
    return out


def eisenstein_congruence(F: FieldParams, d: int, N: int, jobs: int = 1) -> CheckResult:
    """g_{q^d - 1} = 1 mod [d]."""
    from .forms import eisenstein_g_k

    gk = eisenstein_g_k(F, F.q**d - 1, N, jobs).series
    r = congruent_mod(gk, TruncSeries.one(F, N), Modulus.bracket(F, d))
    return CheckResult("eisenstein", {"q": F.q, "d": d, "prec": N}, r.holds, True,
                       None if r.holds else f"t^{r.witness}")


# -- products --------------------------------------------------------------------------


@dataclass
class ProductResult:
    holds: bool
    witness: int | None
    prec: int

    def __bool__(self):
        return self.holds


def product_identity_check(lhs: list, rhs, N: int, jobs: int = 1) -> ProductResult:
    """Whether prod(expand(lhs_i)) == expand(rhs) to precision N (first differing t-power otherwise)."""
    from .forms import expand

    if not lhs:
        raise ValueError("empty product")
    prod = None
    for ax in lhs:
        s = expand(ax, N, jobs)
        prod = s if prod is None else prod * s
    r = expand(rhs, N, jobs)
    if prod.prec != r.prec:
        raise ValueError("precision mismatch between the two sides")
    w = prod.first_difference(r)
    return ProductResult(w is None, w, N)


def search_products(F: FieldParams, k_range, n_range, l_range, N: int, jobs: int = 1,
                    phi_nu=(), phi_j=()) -> list[CheckResult]:
    """Check candidate product identities built from multiplicative Goss pairs.

    For n <= n' in ``n_range`` with G_n G_{n'} = G_{n+n'} and weights k, k' in
    ``k_range`` such that (k, n), (k', n') and (k+k', n+n') all satisfy the
    hypothesis predicate, and l, l' in ``l_range``, test

        (sum a^{q^l (k-n)} G_n(t_a)) (sum a^{q^l' (k'-n')} G_n'(t_a))
            = sum a^{q^l (k-n) + q^l' (k'-n')} G_{n+n'}(t_a).

    Pairs failing the Goss multiplicativity gate are reported as refuted with
    witness "gate".  Optionally logs Phi_{nu,j} against F_nu^j (no expectation).
    """
    from .forms import AExpansion

    q = F.q
    n_list = sorted(set(n_range))
    k_list = sorted(set(k_range))
    l_list = sorted(set(l_range))
    out: list[CheckResult] = []
    if n_list:
        table = period_goss_table(F, 2 * max(n_list))
    for i, n in enumerate(n_list):
        for n2 in n_list[i:]:
            mult = is_multiplicative_pair(n, n2, table)
            for k in k_list:
                if not thm1_hypothesis(F, k, n)[0]:
                    continue
                for k2 in k_list:
                    if n == n2 and k2 < k:
                        continue
                    if not thm1_hypothesis(F, k2, n2)[0] or not thm1_hypothesis(F, k + k2, n + n2)[0]:
                        continue
                    params = {"q": q, "n": n, "n2": n2, "k": k, "k2": k2}
                    if not mult:
                        out.append(CheckResult("product", params, False, None, "gate",
                                               "G_n G_n' != G_(n+n')"))
                        continue
                    for l in l_list:
                        for l2 in l_list:
                            e1 = q**l * (k - n)
                            e2 = q**l2 * (k2 - n2)
                            lhs = [AExpansion.power_law(F, n, e1), AExpansion.power_law(F, n2, e2)]
                            rhs = AExpansion.power_law(F, n + n2, e1 + e2)
                            r = product_identity_check(lhs, rhs, N, jobs)
                            out.append(CheckResult(
                                "product", dict(params, l=l, l2=l2, prec=N), r.holds, None,
                                None if r.holds else f"t^{r.witness}"))
    for nu in phi_nu:
        for j in phi_j:
            out.append(phi_probe(F, nu, j, N, jobs))
    return out


def phi_probe(F: FieldParams, nu: int, j: int, N: int, jobs: int = 1) -> CheckResult:
    """Observation only: does Phi_{nu,j} = sum a^{j q^nu} t_a^j equal F_nu^j to precision N?"""
    from .forms import F_nu, Phi

    lhs = Phi(F, nu, j, N, jobs)
    rhs = F_nu(F, nu, N, jobs).series ** j
    w = lhs.first_difference(rhs.truncate(N))
    return CheckResult("phi-probe", {"q": F.q, "nu": nu, "j": j, "prec": N}, w is None, None,
                       None if w is None else f"t^{w}")


__all__ = [
    "CheckResult",
    "CongruenceResult",
    "Modulus",
    "PowerSumReport",
    "ProductResult",
    "congruence_exponent",
    "congruent_mod",
    "eisenstein_congruence",
    "family_congruences",
    "min_d",
    "phi_probe",
    "power_sum",
    "product_identity_check",
    "search_products",
    "thm1_hypothesis",
]
