import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from drinfeld.algebra import Poly, RatK, field_from_q
from drinfeld.series import InsufficientPrecision, LaurentSeries, TruncSeries, XPoly, power_table

F3 = field_from_q(3)
F4 = field_from_q(4)
T3 = Poly.T(F3)


def rats(F, maxdeg=3):
    cs = st.lists(st.integers(0, F.q - 1), max_size=maxdeg + 1)
    return st.tuples(cs, cs).map(
        lambda nd: RatK(Poly(F, nd[0]), Poly(F, nd[1])) if Poly(F, nd[1]).deg >= 0 else RatK(Poly(F, nd[0])))


def series(F, prec=8):
    return st.lists(rats(F), min_size=prec + 1, max_size=prec + 1).map(
        lambda cs: TruncSeries.from_coeffs(F, cs))


def naive_mul(a, b, n):
    F = a.F
    out = []
    for k in range(n + 1):
        acc = RatK.zero(F)
        for i in range(k + 1):
            acc = acc + a.coeff(i) * b.coeff(k - i)
        out.append(acc)
    return out


@settings(max_examples=40, deadline=None)
@given(series(F3), series(F3))
def test_mul_matches_schoolbook(a, b):
    assert (a * b).coeffs() == naive_mul(a, b, 8)


@settings(max_examples=40, deadline=None)
@given(series(F4, 6), series(F4, 6), series(F4, 6))
def test_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - b) + b == a


@settings(max_examples=40, deadline=None)
@given(series(F3))
def test_inverse(a):
    if a.coeff(0).is_zero():
        with pytest.raises(ZeroDivisionError):
            a.inverse()
        return
    inv = a.inverse()
    assert inv.prec == a.prec
    assert a * inv == TruncSeries.one(F3, a.prec)


@settings(max_examples=30, deadline=None)
@given(series(F3, 6))
def test_powers_and_frobenius(a):
    # the p-th power is coefficientwise Frobenius, with precision p(N+1)-1
    f = a.frobenius(1)
    assert f.prec == 3 * 7 - 1
    assert f == a * a * a
    assert (a**5).coeffs() == (a * a * a * a * a).coeffs()
    assert f.qth_root() == a


def test_qth_root_rejects_non_powers():
    s = TruncSeries.from_coeffs(F3, [1, 1])
    with pytest.raises(ValueError):
        s.qth_root()
    s = TruncSeries.from_coeffs(F3, [T3])
    with pytest.raises(ValueError):
        s.qth_root()


def test_compose_precision_and_value():
    # (1 + t)(t + t^2) = t + 2t^2 + t^3 composed under 2t^2: precision min(N v, N_inner)
    outer = TruncSeries.from_coeffs(F3, [1, 1, 0, 0, 0, 0])
    inner = TruncSeries.from_coeffs(F3, [0, 0, 2, 0, 0, 0, 0, 0, 0, 0])
    c = outer.compose(inner)
    assert c.prec == 9
    assert c.coeffs()[:4] == [RatK.of(1, F3), RatK.zero(F3), RatK.of(2, F3), RatK.zero(F3)]
    with pytest.raises(ValueError):
        outer.compose(outer)


@settings(max_examples=25, deadline=None)
@given(series(F3, 5), series(F3, 5))
def test_compose_is_a_ring_map(a, b):
    inner = TruncSeries.from_coeffs(F3, [0, T3, 1, 0, 2, 0])
    assert (a * b).compose(inner) == a.compose(inner) * b.compose(inner)


def test_precision_rules():
    a = TruncSeries.one(F3, 10)
    b = TruncSeries.one(F3, 4)
    assert (a + b).prec == 4 and (a * b).prec == 4
    assert a.shift(3).prec == 13
    with pytest.raises(InsufficientPrecision):
        b.coeff(5)
    with pytest.raises(InsufficientPrecision):
        b.with_prec(6)
    assert a == b and not a.identical(b)


def test_first_difference_and_divide():
    a = TruncSeries.from_coeffs(F3, [0, 1, T3, 1])
    b = TruncSeries.from_coeffs(F3, [0, 1, T3 + 1, 1])
    assert a.first_difference(b) == 2
    q = a / TruncSeries.from_coeffs(F3, [0, 1, 0, 0])
    assert q.prec == 2 and q.coeffs() == [RatK.of(1, F3), RatK.of(T3), RatK.of(1, F3)]
    with pytest.raises(ArithmeticError):
        TruncSeries.one(F3, 3) / a


def test_denominators_are_normalised():
    half = RatK(Poly.one(F3), T3)
    s = TruncSeries.from_coeffs(F3, [half, half * T3])
    assert s.den == T3
    assert (s.scale(T3)).is_integral()


def test_power_table_and_xpoly():
    s = TruncSeries.from_coeffs(F3, [0, 1, T3, 0, 1, 0, 0, 0, 0, 0])
    tab = power_table(s, 4)
    for j in range(5):
        assert tab[j] == s**j if j else tab[0] == TruncSeries.one(F3, 9)
    P = XPoly.from_coeffs(F3, [0, 1, 0, RatK(Poly.one(F3), T3)])
    assert P.support() == [1, 3] and P.ord() == 1
    assert P(s) == s + (s**3).scale(RatK(Poly.one(F3), T3))
    assert (P * P).frobenius(0) == P**2


def test_laurent_inverse():
    body = TruncSeries.from_coeffs(F3, [1, T3, 0, 1])
    x = LaurentSeries(2, body)
    y = x.inverse()
    assert y.lead == -2
    z = x * y
    assert z.lead == 0 and z.body == TruncSeries.one(F3, 3)
    # leading zeros move into the exponent
    assert LaurentSeries(0, body.shift(2)).lead == 2


def test_small_examples():
    one_plus = TruncSeries.from_coeffs(F3, [1, 1, 0, 0, 0, 0])
    one_minus = TruncSeries.from_coeffs(F3, [1, 2, 0, 0, 0, 0])
    assert (one_plus * one_minus).coeffs()[:3] == [RatK.one(F3), RatK.zero(F3), RatK.of(2, F3)]
    t = TruncSeries.from_coeffs(F3, [0, 1])
    assert (t * t).is_zero() and (t * t).prec == 1
    s = TruncSeries.from_coeffs(F3, [1, 0, 0, T3**3])
    assert s.qth_root() == TruncSeries.from_coeffs(F3, [1, T3])
    inv = TruncSeries.from_coeffs(F3, [1, 0, T3, 0, 0]).inverse()
    assert inv.coeffs() == [RatK.one(F3), RatK.zero(F3), -RatK.of(T3), RatK.zero(F3), RatK.of(T3**2)]
    with pytest.raises(ZeroDivisionError):
        t.inverse()
    x2 = XPoly.X(F3, 2)
    assert x2(TruncSeries.monomial(F3, 3, 1, 12)) == TruncSeries.monomial(F3, 6, 1, 12)
