import pytest

from drinfeld.algebra import Poly, RatK, bracket, field_from_q, irreducible_enum
from drinfeld.goss import (
    goss_ord,
    goss_table,
    is_multiplicative_pair,
    order_lower_bound,
    period_goss,
    period_goss_table,
    scaled_torsion_goss,
    torsion_goss_table,
)
from drinfeld.hecke import check_order_bound
from drinfeld.series import XPoly

F3 = field_from_q(3)
T3 = Poly.T(F3)


def derivative(P: XPoly) -> XPoly:
    F = P.F
    cs = [c * RatK.of(j % F.p, F) for j, c in enumerate(P.coeffs())][1:]
    return XPoly.from_coeffs(F, cs or [RatK.zero(F)])


def test_small_goss_polynomials():
    X = XPoly.X(F3)
    G4 = period_goss(F3, 4)
    assert G4 == X**4 + (X**2).scale(RatK(Poly.one(F3), bracket(F3, 1)))
    for q in (2, 3, 4, 5):
        F = field_from_q(q)
        for n in range(1, q + 1):
            assert period_goss(F, n) == XPoly.X(F, n)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_goss_frobenius_and_derivative(q):
    F = field_from_q(q)
    tab = period_goss_table(F, 60)
    for n in range(1, 60 // F.p + 1):
        assert tab[F.p * n] == tab[n] ** F.p
    # X^2 G_n' = n G_{n+1}
    for n in range(1, 59):
        assert derivative(tab[n]).shift(2) == tab[n + 1].scale(RatK.of(n % F.p, F))


@pytest.mark.parametrize("q", [3, 4])
def test_goss_polynomials_are_graded(q):
    # only X^j with j = n mod (q - 1) occur
    F = field_from_q(q)
    tab = period_goss_table(F, 30)
    for n in range(1, 31):
        assert tab[n].is_monic() and tab[n].deg == n
        for j in tab[n].support():
            assert (j - n) % (q - 1) == 0


def test_recursion_convention_and_errors():
    with pytest.raises(ValueError):
        goss_table(F3, [2], 5)
    tab = goss_table(F3, [1], 6)  # the zero lattice: G_n = X^n
    assert all(tab[n] == XPoly.X(F3, n) for n in range(1, 7))
    with pytest.raises(IndexError):
        tab[0]
    assert tab.extend(3) is tab and tab.extend(9).nmax == 9


def test_multiplicative_pairs():
    tab = period_goss_table(F3, 20)
    assert is_multiplicative_pair(1, 1, tab)
    assert is_multiplicative_pair(1, 2, tab)
    assert not is_multiplicative_pair(1, 3, tab)  # G_4 has the extra X^2/[1]
    assert is_multiplicative_pair(3, 6, tab)


@pytest.mark.parametrize("q", [2, 3])
def test_torsion_order_bound(q):
    F = field_from_q(q)
    for d in (1, 2):
        for p in irreducible_enum(F, d)[:2]:
            tab = torsion_goss_table(p, 3 * q**d)
            assert tab.dmax == d
            for n in range(1, 3 * q**d + 1):
                assert goss_ord(n, tab) >= order_lower_bound(n, q, d)
            assert check_order_bound(p, 3 * q**d)


def test_scaled_torsion_goss_is_rescaled_table():
    p = T3 * T3 + 1
    nmax, xdeg = 30, 12
    H = scaled_torsion_goss(p, nmax, xdeg)
    tab = torsion_goss_table(p, nmax)
    for n in range(1, nmax + 1):
        for j in range(xdeg + 1):
            c = tab[n].coeff(j) * RatK.of(p**j) if j <= tab[n].deg else RatK.zero(F3)
            row = H[n][j] if j < H[n].shape[0] else None
            got = Poly(F3, list(row)) if row is not None else Poly.zero(F3)
            assert c == RatK.of(got)
