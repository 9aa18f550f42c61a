import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from drinfeld import forms
from drinfeld.algebra import Poly, RatK, field_create, field_from_q, monic_enum
from drinfeld.cache import DiskCache, active_cache, set_cache_dir
from drinfeld.goss import period_goss_table, torsion_goss_table
from drinfeld.io import (
    aexp_dumps,
    aexp_loads,
    goss_dumps,
    goss_loads,
    report_dumps,
    report_text,
    series_dumps,
    series_loads,
)
from drinfeld.series import TruncSeries

F3 = field_from_q(3)
T3 = Poly.T(F3)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(st.lists(st.integers(0, 3), max_size=4), st.lists(st.integers(0, 3), max_size=3)),
                min_size=1, max_size=12))
def test_series_roundtrip_random(rows):
    F = field_from_q(4)
    cs = []
    for num, den in rows:
        d = Poly(F, den)
        cs.append(RatK(Poly(F, num), d) if not d.is_zero() else RatK(Poly(F, num)))
    s = TruncSeries.from_coeffs(F, cs)
    text = series_dumps(s)
    back = series_loads(text)
    assert back.identical(s)
    assert series_dumps(back) == text


def test_series_format_is_canonical_json():
    s = forms.h(F3, 20).series
    text = series_dumps(s)
    doc = json.loads(text)
    assert doc["format"] == 1 and doc["q"] == 3 and doc["prec"] == 20
    assert doc["coeffs"][0] == ["1", "1", "1"]
    with pytest.raises(ValueError):
        series_loads(text.replace('"format": 1', '"format": 7'))


def test_custom_modulus_survives_roundtrip():
    F = field_create(2, 3, [1, 0, 1, 1])
    s = TruncSeries.from_coeffs(F, [1, Poly(F, [0, 2]), 0, Poly(F, [5])])
    back = series_loads(series_dumps(s))
    assert back.F == F and back.identical(s)


def test_aexp_roundtrip():
    ax = forms.AExpansion.power_law(F3, 1, 3).explicit(2)
    text = aexp_dumps(ax)
    back = aexp_loads(text)
    assert back == ax and aexp_dumps(back) == text
    bad = text.replace('"T+1"', '"2*T+1"', 1)
    if bad != text:
        with pytest.raises(ValueError):
            aexp_loads(bad)


def test_goss_roundtrip():
    for tab, name in ((period_goss_table(F3, 20), "period"), (torsion_goss_table(T3 * T3 + 1, 15), "T^2+1")):
        text = goss_dumps(tab, name)
        back = goss_loads(text)
        assert back.nmax == tab.nmax and back.alphas == tab.alphas
        assert all(back[n] == tab[n] for n in range(1, tab.nmax + 1))
        assert goss_dumps(back, name) == text


def test_reports():
    rows = [{"check": "x", "parameters": {"k": 4}, "verdict": True, "expected": True, "witness": None},
            {"check": "y", "parameters": {}, "verdict": False, "expected": True, "witness": "t^3"},
            {"check": "z", "parameters": {}, "verdict": False, "expected": None, "witness": None}]
    txt = report_text({"q": 3}, rows).splitlines()
    assert txt[1].startswith("PASS") and txt[2].startswith("FAIL") and "witness=t^3" in txt[2]
    assert txt[3].startswith("INFO")  # observation only
    doc = json.loads(report_dumps({"q": 3}, rows))
    assert doc["results"] == rows


def test_disk_cache_returns_identical_bytes(tmp_path):
    forms.clear_memo()
    cold = series_dumps(forms.f_kn(F3, 8, 2, 40).series)
    set_cache_dir(tmp_path)
    try:
        forms.clear_memo()
        first = series_dumps(forms.f_kn(F3, 8, 2, 40).series)
        files = list(tmp_path.rglob("*.json"))
        assert files
        forms.clear_memo()
        second = series_dumps(forms.f_kn(F3, 8, 2, 40).series)
        assert active_cache() is not None
    finally:
        set_cache_dir(None)
        forms.clear_memo()
    assert cold == first == second
    c = DiskCache(tmp_path)
    assert c.read("series", F3, "nothing", 1) is None
    assert DiskCache.key("series", F3, "a", 1) != DiskCache.key("series", field_from_q(9), "a", 1)
