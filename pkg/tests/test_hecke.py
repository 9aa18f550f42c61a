import pytest

from drinfeld.algebra import Poly, RatK, field_from_q
from drinfeld.forms import ModularForm, f_kn, g, gh_monomial, h
from drinfeld.hecke import (
    HeckeContext,
    NotEigen,
    eigen_solve,
    hecke_apply,
    prime_power_exponent,
    required_precision,
)
from drinfeld.series import InsufficientPrecision, TruncSeries

F3 = field_from_q(3)
T3 = Poly.T(F3)


def test_eigenvalues_at_T():
    N = 60
    assert eigen_solve(h(F3, N), T3) == RatK.of(T3)
    assert eigen_solve(g(F3, N), T3) == RatK.of(T3**2)
    lam = eigen_solve(f_kn(F3, 8, 2, N), T3)
    assert prime_power_exponent(lam, T3, 8) == 2


def test_eigenvalue_at_degree_two_prime():
    p = T3 * T3 + 1
    assert eigen_solve(h(F3, required_precision(p, 20)), p) == RatK.of(p)


def test_linearity_and_zero():
    N = 60
    a, b = gh_monomial(F3, 6, 0, N), gh_monomial(F3, 2, 2, N)
    c = RatK(T3 + 1, T3)
    lhs = hecke_apply(a + b.scale(c), T3)
    rhs = hecke_apply(a, T3).series + hecke_apply(b, T3).series.scale(c)
    assert lhs.series == rhs
    zero = ModularForm(12, 0, TruncSeries.zero(F3, N))
    assert hecke_apply(zero, T3).series.is_zero()


def test_non_eigenforms():
    N = 60
    x = gh_monomial(F3, 6, 0, N) + gh_monomial(F3, 2, 2, N)
    with pytest.raises(NotEigen) as err:
        eigen_solve(x, T3)
    assert err.value.witness is not None
    with pytest.raises(NotEigen):
        eigen_solve(gh_monomial(F3, 4, 0, N), T3)


def test_precision_and_prime_checks():
    f = h(F3, 30)
    assert hecke_apply(f, T3).prec == 10
    with pytest.raises(InsufficientPrecision):
        HeckeContext(T3, 4, 11).apply(f.series)
    with pytest.raises(ValueError):
        hecke_apply(f, T3 * T3)
    with pytest.raises(ValueError):
        hecke_apply(f, T3.scale(2))
    with pytest.raises(ValueError):
        eigen_solve(ModularForm(4, 1, TruncSeries.zero(F3, 30)), T3)


def test_context_matches_function():
    f = f_kn(F3, 10, 1, 60)
    ctx = HeckeContext(T3, f.k, 20)
    assert ctx.nmax == 60 and ctx.qd == 3
    assert ctx.apply(f.series) == hecke_apply(f, T3).series


def test_prime_power_exponent():
    assert prime_power_exponent(RatK.of(T3**3), T3, 5) == 3
    assert prime_power_exponent(RatK.of(T3 + 1), T3, 5) is None
