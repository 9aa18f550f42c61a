import itertools

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from drinfeld.algebra import (
    ParseError,
    Poly,
    RatK,
    all_polys_below,
    bracket,
    carlitz_factorial_D,
    default_modulus,
    field_create,
    field_from_q,
    format_poly,
    format_rat,
    int_val_p,
    irreducible_enum,
    is_irreducible,
    monic_enum,
    parse_poly,
    parse_rat,
    poly_divmod,
    poly_gcd,
    poly_valuation,
    poly_xgcd,
    v_at_prime,
)

QS = [2, 3, 4, 5, 8, 9]


def polys(F, maxdeg=6):
    return st.lists(st.integers(0, F.q - 1), min_size=0, max_size=maxdeg + 1).map(lambda cs: Poly(F, cs))


def nonzero_polys(F, maxdeg=5):
    return polys(F, maxdeg).filter(lambda f: not f.is_zero())


# -- the field F_q -----------------------------------------------------------------


@pytest.mark.parametrize("q", QS)
def test_field_axioms(q):
    F = field_from_q(q)
    els = list(F.elements())
    for x, y in itertools.product(els, els):
        assert F.add(x, y) == F.add(y, x)
        assert F.mul(x, y) == F.mul(y, x)
        assert F.sub(F.add(x, y), y) == x
    for x in F.units():
        assert F.mul(x, F.inv(x)) == 1
        assert F.pow(x, q - 1) == 1  # Lagrange
    for x, y, z in itertools.product(els[:4], els[:4], els):
        assert F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z))


def test_default_modulus_is_smallest_irreducible():
    # a^2 + a + 1 for F_4, a^2 + 1 for F_9 (coefficients low first)
    assert default_modulus(2, 2) == (1, 1, 1)
    assert default_modulus(3, 2) == (1, 0, 1)
    assert field_from_q(4).modulus_str() == "a^2+a+1"


def test_bad_fields_rejected():
    with pytest.raises(ValueError):
        field_from_q(6)
    with pytest.raises(ValueError):
        field_create(4)
    with pytest.raises(ValueError):
        field_create(2, 2, [1, 0, 1])  # a^2 + 1 = (a+1)^2 over F_2


def test_custom_modulus_gives_distinct_field():
    F = field_create(2, 3, [1, 0, 1, 1])
    G = field_create(2, 3)
    assert F != G and F.q == G.q == 8


# -- polynomials ------------------------------------------------------------------------


@pytest.mark.parametrize("q", [3, 4])
def test_poly_ring_properties(q):
    F = field_from_q(q)

    @settings(max_examples=60, deadline=None)
    @given(polys(F), polys(F), polys(F))
    def check(a, b, c):
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a - a == Poly.zero(F)
        if not b.is_zero():
            qq, r = poly_divmod(a, b)
            assert qq * b + r == a and (r.is_zero() or r.deg < b.deg)

    check()


@pytest.mark.parametrize("p", [2, 3, 5])
def test_gcd_matches_sympy(p):
    F = field_from_q(p)
    x = sympy.symbols("x")

    @settings(max_examples=40, deadline=None)
    @given(nonzero_polys(F), nonzero_polys(F))
    def check(a, b):
        g = poly_gcd(a, b)
        ref = sympy.gcd(sympy.Poly(list(reversed(a.coeffs())), x, modulus=p),
                        sympy.Poly(list(reversed(b.coeffs())), x, modulus=p)).monic()
        assert [int(c) % p for c in reversed(ref.all_coeffs())] == g.coeffs()
        g2, s, t = poly_xgcd(a, b)
        assert s * a + t * b == g2 == g

    check()


@pytest.mark.parametrize("q", [2, 3, 4])
def test_frobenius_and_qth_root(q):
    F = field_from_q(q)

    @settings(max_examples=40, deadline=None)
    @given(polys(F, 5))
    def check(a):
        aq = a**q
        assert a.frobenius(F.e) == aq
        assert aq.qth_root() == a
        assert aq.is_qth_power()

    check()


def test_necklace_count_of_irreducibles():
    for q in (2, 3, 4):
        F = field_from_q(q)
        for d in range(1, 5):
            expected = sum(sympy.mobius(d // e) * q**e for e in sympy.divisors(d)) // d
            assert len(irreducible_enum(F, d)) == expected


def test_irreducibility_agrees_with_sympy():
    F = field_from_q(3)
    x = sympy.symbols("x")
    for f in monic_enum(F, 4):
        ref = sympy.Poly(list(reversed(f.coeffs())), x, modulus=3).is_irreducible
        assert is_irreducible(f) == ref


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_carlitz_factorial_is_product_of_monics(q):
    F = field_from_q(q)
    for i in range(4 if q < 5 else 3):
        prod = Poly.one(F)
        for a in monic_enum(F, i):
            prod = prod * a
        assert carlitz_factorial_D(F, i) == prod


@pytest.mark.parametrize("q", [2, 3, 4])
def test_bracket_is_product_of_primes_of_dividing_degree(q):
    F = field_from_q(q)
    for d in (1, 2, 3):
        prod = Poly.one(F)
        for e in sympy.divisors(d):
            for pr in irreducible_enum(F, e):
                prod = prod * pr
        assert bracket(F, d) == prod


def test_monic_enumeration_order_and_count():
    F = field_from_q(3)
    ms = monic_enum(F, 2)
    assert len(ms) == 9 and all(m.is_monic() and m.deg == 2 for m in ms)
    assert len(set(ms)) == 9
    assert len(all_polys_below(F, 3)) == 27


def test_valuations():
    F = field_from_q(3)
    T = Poly.T(F)
    f = (T + 1) ** 4 * (T**2 + 1)
    assert poly_valuation(f, T + 1) == 4
    assert poly_valuation(f, T) == 0
    r = RatK(T**3, (T + 1) ** 2)
    assert v_at_prime(r, T) == 3 and v_at_prime(r, T + 1) == -2
    assert int_val_p(54, 3) == 3


# -- K = F_q(T) and the text syntax ----------------------------------------------------------


def test_rational_canonical_form_and_field_laws():
    F = field_from_q(3)
    T = Poly.T(F)
    x = RatK(T * T - 1, T * T + 2 * T + 1)  # (T-1)(T+1)/(T+1)^2
    assert x == RatK(T - 1, T + 1)
    assert x.den.is_monic()
    y = RatK(T, T + 2)
    assert (x + y) - y == x
    assert (x * y) / y == x
    assert x * x.inverse() == RatK.one(F)
    assert (x**3).qth_root() == x
    with pytest.raises(ZeroDivisionError):
        RatK.zero(F).inverse()


@pytest.mark.parametrize("q", [3, 4, 9])
def test_syntax_roundtrip(q):
    F = field_from_q(q)

    @settings(max_examples=50, deadline=None)
    @given(polys(F, 5), nonzero_polys(F, 3))
    def check(a, b):
        assert parse_poly(F, format_poly(a)) == a
        r = RatK(a, b)
        assert parse_rat(F, format_rat(r)) == r

    check()


def test_syntax_examples():
    F = field_from_q(3)
    T = Poly.T(F)
    assert parse_poly(F, "T^2+2*T+1") == (T + 1) ** 2
    assert parse_poly(F, "(T+1)^2") == (T + 1) ** 2
    assert parse_rat(F, "1/(T^3-T)") == RatK(Poly.one(F), bracket(F, 1))
    assert format_poly(Poly.zero(F)) == "0"
    F4 = field_from_q(4)
    assert format_poly(parse_poly(F4, "a*T+a+1")) == "a*T+(a+1)"
    with pytest.raises(ParseError):
        parse_poly(F, "T^^2")
