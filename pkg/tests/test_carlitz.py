import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from drinfeld.algebra import Poly, RatK, bracket, carlitz_factorial_D, field_from_q, monic_enum
from drinfeld.carlitz import (
    exp_over_w,
    inv_exp_laurent,
    inv_psi_power,
    psi,
    psi_power_terms,
    psi_series,
    rho,
    t_sub,
    t_sub_unit,
    torsion_exp_coeffs,
)
from drinfeld.series import TruncSeries

F3 = field_from_q(3)
T3 = Poly.T(F3)


def test_rho_of_T_squared():
    for q in (2, 3, 4, 5):
        F = field_from_q(q)
        T = Poly.T(F)
        assert rho(T).l == (T, Poly.one(F))
        assert rho(T * T).l == (T * T, T**q + T, Poly.one(F))


@pytest.mark.parametrize("q", [2, 3, 4])
def test_rho_is_a_ring_homomorphism(q):
    F = field_from_q(q)
    polys = [m for d in range(3) for m in monic_enum(F, d)]

    @settings(max_examples=30, deadline=None)
    @given(st.sampled_from(polys), st.sampled_from(polys), st.integers(1, F.q - 1))
    def check(a, b, c):
        assert rho(a * b) == rho(a).compose(rho(b))
        sa = a.scale(c)
        assert rho(sa).l == tuple(x.scale(c) for x in rho(a).l)
        if (a + b).is_zero():
            return
        s = rho(a + b).l
        ra, rb = rho(a).l, rho(b).l
        for i in range(len(s)):
            lhs = (ra[i] if i < len(ra) else Poly.zero(F)) + (rb[i] if i < len(rb) else Poly.zero(F))
            assert s[i] == lhs

    check()


def test_rho_zero_and_evaluation():
    with pytest.raises(ValueError):
        rho(Poly.zero(F3))
    # rho_T(1) = T + 1, rho_T(T) = T^2 + T^3
    assert rho(T3)(1) == RatK.of(T3 + 1)
    assert rho(T3)(T3) == RatK.of(T3**3 + T3**2)


def test_factorial_recursion_from_functional_equation():
    # e_C(T w) = T e_C(w) + e_C(w)^q  <=>  D_i = [i] D_{i-1}^q
    for q in (2, 3, 5):
        F = field_from_q(q)
        for i in range(1, 4):
            assert carlitz_factorial_D(F, i) == bracket(F, i) * carlitz_factorial_D(F, i - 1) ** q


def test_exp_functional_equation_as_series():
    F = F3
    M = 40
    E = exp_over_w(F, M).shift(1)  # e_C(w)
    ET = TruncSeries.from_coeffs(F, [E.coeff(i) * RatK.of(T3**i) for i in range(M + 2)])
    assert ET == (E.scale(T3) + E**3).truncate(M + 1)


def test_inverse_exponential():
    L = inv_exp_laurent(F3, 30)
    assert L.lead == -1
    # 1/e_C(w) * e_C(w)/w * w = 1
    prod = L.body * exp_over_w(F3, L.body.prec)
    assert prod == TruncSeries.one(F3, L.body.prec)


def test_t_T_leading_terms():
    tT = t_sub(T3, 9)
    two = RatK.of(2, F3)
    expected = [0, 0, 0, 1, 0, two * RatK.of(T3), 0, RatK.of(T3**2), 0, two * RatK.of(T3**3)]
    assert tT.coeffs() == [RatK.of(c, F3) if isinstance(c, int) else c for c in expected]


@pytest.mark.parametrize("q", [2, 3, 4])
def test_t_a_is_reciprocal_of_rho_a(q):
    F = field_from_q(q)
    N = 40
    for d in (1, 2):
        for a in monic_enum(F, d)[:5]:
            qd = q**d
            ta = t_sub(a, N)
            assert ta.order() == qd and ta.coeff(qd).is_one()
            assert (ta.unshift(qd) * psi_series(a, N - qd)) == TruncSeries.one(F, N - qd)
            assert psi(a).coeff(0).is_one() and psi(a).deg == qd - 1


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_inv_psi_power_matches_naive(q):
    F = field_from_q(q)
    N = 60
    for d in (1, 2):
        a = monic_enum(F, d)[-1]
        naive = psi_series(a, N).inverse()
        acc = TruncSeries.one(F, N)
        for j in range(1, 9):
            acc = acc * naive
            assert inv_psi_power(a, j, N) == acc
    assert t_sub_unit(a, N) == naive


def test_psi_power_terms_expand_psi_power():
    a = T3 * T3 + 1
    P = psi(a)
    for j in (1, 2, 4, 9):
        terms = dict(psi_power_terms(a, j))
        Pj = P**j
        assert {i: c for i, c in enumerate(Pj.coeffs()) if not c.is_zero()} == {
            i: RatK.of(c) for i, c in terms.items()}


def test_torsion_exponential_coefficients():
    p = T3 * T3 + 1
    al = torsion_exp_coeffs(p)
    assert al[0].is_one() and al[-1] == RatK(Poly.one(F3), p)
    with pytest.raises(ValueError):
        torsion_exp_coeffs(T3 * T3)
