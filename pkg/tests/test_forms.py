import pytest

from drinfeld.algebra import Poly, RatK, bracket, field_from_q, monic_enum
from drinfeld.carlitz import t_sub
from drinfeld.forms import (
    AExpansion,
    Delta,
    F_knl,
    F_nu,
    HypothesisError,
    Inconsistent,
    ModularForm,
    NotInSpan,
    Underdetermined,
    aexp_recover,
    clear_memo,
    degree_cutoff,
    delta_k,
    determined_degree,
    eisenstein_g_k,
    expand,
    f_kn,
    f_s,
    falseE,
    g,
    gh_basis,
    gh_combination,
    gh_express,
    gh_monomial,
    h,
    iota_T,
)
from drinfeld.goss import period_goss
from drinfeld.series import InsufficientPrecision, TruncSeries

F3 = field_from_q(3)
T3 = Poly.T(F3)


def brute_force(F, exponent, n, N):
    """sum over monic a with q^deg(a) ord(G_n) <= N of a^exponent G_n(t_a), term by term."""
    G = period_goss(F, n)
    acc = TruncSeries.zero(F, N)
    for d in range(degree_cutoff(F, n, N) + 1):
        for a in monic_enum(F, d):
            acc = acc + G(t_sub(a, N)).scale(a**exponent)
    return acc


@pytest.mark.parametrize("q,k,n,N", [(3, 4, 1, 40), (3, 8, 2, 60), (3, 10, 1, 40), (2, 5, 1, 40), (4, 5, 1, 30),
                                     (5, 6, 1, 30), (3, 12, 3, 40)])
def test_expansion_matches_brute_force(q, k, n, N):
    F = field_from_q(q)
    assert f_kn(F, k, n, N).series == brute_force(F, k - n, n, N)


def test_named_forms():
    N = 30
    hh = h(F3, N)
    assert (hh.k, hh.m) == (4, 1)
    assert hh.series.order() == 1 and hh.series.coeff(1).is_one()
    assert F_nu(F3, 1, N).series == hh.series
    assert f_s(F3, 0, N).series == hh.series
    assert F_knl(F3, 4, 1, 0, N).series == hh.series
    assert F_knl(F3, 4, 1, 1, N).series == F_nu(F3, 2, N).series
    D = Delta(F3, N)
    assert (D.k, D.m) == (8, 0)
    assert D.series == (hh**2).series  # Delta = h^(q-1) for q = 3
    E = falseE(F3, N)
    assert E.quasi and (E.k, E.m) == (2, 1)
    assert F_nu(F3, 0, N).series == E.series


def test_hypothesis_is_enforced():
    with pytest.raises(HypothesisError):
        f_kn(F3, 4, 2, 10)
    with pytest.raises(HypothesisError):
        f_kn(F3, 12, 2, 10)  # 2 > 3^v_3(10) = 1
    with pytest.raises(HypothesisError):
        F_knl(F3, 5, 1, 0, 10)
    f_kn(F3, 12, 2, 10, check=False)


@pytest.mark.parametrize("k", [4, 6, 10, 16])
def test_eisenstein_series_are_modular(k):
    # a wrong delta_k would leave a residual outside the span of g^i h^j
    gk = eisenstein_g_k(F3, k, 60)
    ex = gh_express(gk)
    assert ex.coords[(k // 2, 0)].is_one()


def test_delta_k_frobenius():
    # G_{pk} = G_k^p, so delta_{pk} = delta_k^p
    for q in (2, 3, 4):
        F = field_from_q(q)
        k = q - 1
        assert delta_k(F, F.p * k) == delta_k(F, k) ** F.p


def test_delta_q_minus_1():
    for q in (2, 3, 4, 5):
        F = field_from_q(q)
        assert delta_k(F, q - 1) == RatK(Poly.one(F), bracket(F, 1))
    with pytest.raises(ValueError):
        delta_k(F3, 3)


def test_eisenstein_series():
    N = 40
    gg = g(F3, N)
    assert gg.series.coeff(0).is_one()
    assert gg.series.coeff(2) == -RatK.of(bracket(F3, 1))
    g8 = eisenstein_g_k(F3, 8, N)
    ex = gh_express(g8)
    assert ex.nonzero() == {(4, 0): RatK.one(F3), (0, 2): RatK.of(bracket(F3, 1))}
    assert gh_combination(F3, ex.coords, N) == g8.series


def test_grading_rules():
    N = 20
    hh, gg = h(F3, N), g(F3, N)
    prod = hh * gg
    assert (prod.k, prod.m) == (6, 1)
    assert ((hh**2).k, (hh**2).m) == (8, 0)
    with pytest.raises(ValueError):
        hh + gg
    with pytest.raises(ValueError):
        hh**-1
    assert (hh - hh).series.is_zero()
    assert gh_monomial(F3, 1, 1, N).series == prod.series


def test_gh_basis_and_express():
    assert gh_basis(F3, 8, 0) == [(4, 0), (0, 2)]
    assert gh_basis(F3, 10, 1) == [(3, 1)]
    assert gh_basis(F3, 2, 1) == []
    f = f_kn(F3, 10, 1, 40)
    assert set(gh_express(f).nonzero()) <= {(3, 1)}
    with pytest.raises(NotInSpan):
        gh_express(falseE(F3, 40))
    with pytest.raises(NotInSpan):
        gh_express(falseE(F3, 40), allow_quasi=True)
    with pytest.raises(InsufficientPrecision):
        gh_express(f.truncate(5))
    # a perturbed series is caught by the residual check
    bad = ModularForm(8, 0, Delta(F3, 40).series + TruncSeries.monomial(F3, 30, 1, 40))
    with pytest.raises(NotInSpan) as err:
        gh_express(bad)
    assert err.value.witness == 30


def test_recover_h():
    N = 200
    ax = aexp_recover(h(F3, N).series, 1)
    assert ax.D == determined_degree(F3, 1, N) >= 1
    assert all(c == RatK.of(a**3) for a, c in ax.items())
    ax2 = aexp_recover(h(F3, N).series, 1, kn_hint=3)
    assert ax2 == ax
    with pytest.raises(Inconsistent):
        aexp_recover(h(F3, N).series, 1, kn_hint=5)
    with pytest.raises(Underdetermined):
        aexp_recover(h(F3, N).series, 1, degree=ax.D + 1)
    with pytest.raises(Underdetermined):
        aexp_recover(TruncSeries.zero(F3, 0), 1)


def test_recover_rejects_non_expansions():
    # h^2 g^2 has no A-expansion with exponent 4 (only evidence, at this precision)
    N = 120
    s = gh_monomial(F3, 2, 2, N).series
    with pytest.raises(Inconsistent):
        aexp_recover(s, 4)


def test_explicit_expansions_roundtrip():
    N = 200
    D = degree_cutoff(F3, 1, N)
    coeffs = {Poly.one(F3): RatK.of(T3), monic_enum(F3, 1)[1]: RatK.of(2, F3)}
    ax = AExpansion(F3, 1, RatK.of(1, F3), coeffs, D)
    back = aexp_recover(expand(ax, N), 1)
    assert back.D == determined_degree(F3, 1, N) >= 1
    assert back.same_coefficients(ax, back.D)
    assert aexp_recover(expand(ax, N), 1, degree=1) == ax.explicit(1)
    with pytest.raises(ValueError):
        AExpansion(F3, 1, RatK.zero(F3), {T3 + T3: RatK.one(F3)}, 1)
    with pytest.raises(ValueError):
        expand(ax.explicit(1), N)  # degree-2 terms would reach the output


def test_iota_T():
    ax = AExpansion(F3, 1, RatK.zero(F3), {Poly.one(F3): RatK.one(F3)}, 0)
    it = iota_T(ax)
    assert it.coeffs == {T3: RatK.one(F3)} and it.D == 1
    assert expand(it, 8) == t_sub(T3, 8)
    rule = iota_T(AExpansion.power_law(F3, 1, 3))
    assert rule.coeff(T3 * T3) == RatK.of(T3**3)
    assert rule.coeff(T3 + 1).is_zero()


def test_jobs_do_not_change_results():
    clear_memo()
    a = f_kn(F3, 8, 2, 120, jobs=1).series
    clear_memo()
    b = f_kn(F3, 8, 2, 120, jobs=2).series
    assert a.identical(b)
    assert (a.num == b.num).all() and a.den == b.den
