"""Canonical, versioned JSON formats.

All writers are deterministic: equal values produce identical bytes, and each
reader inverts its writer exactly (``dumps(loads(text)) == text``).  Polynomials
and rationals use the text syntax of :mod:`drinfeld.algebra.syntax`.
"""

from __future__ import annotations

import json

from .algebra import FieldParams, Poly, RatK, field_from_q, format_poly, parse_poly, parse_prime_poly
from .series import TruncSeries, XPoly

FORMAT_VERSION = 1


def _field_header(F: FieldParams) -> dict:
    return {"format": FORMAT_VERSION, "q": F.q, "modulus": F.modulus_str()}


def field_from_header(doc: dict) -> FieldParams:
    if doc.get("format") != FORMAT_VERSION:
        raise ValueError(f"unsupported format version {doc.get('format')!r}")
    q = int(doc["q"])
    mod = doc.get("modulus")
    if mod is None:
        return field_from_q(q)
    F0 = field_from_q(q)
    return field_from_q(q, parse_prime_poly(F0.p, mod))


def _rat_pair(x: RatK) -> list[str]:
    return [format_poly(x.num), format_poly(x.den)]


def _rat_from(F, num: str, den: str) -> RatK:
    r = RatK(parse_poly(F, num), parse_poly(F, den))
    return r


def _render(header: dict, list_key: str, rows: list) -> str:
    """JSON with scalar header fields on their own lines and one row per line."""
    lines = ["{"]
    for k, v in header.items():
        lines.append(f" {json.dumps(k)}: {json.dumps(v, separators=(',', ':'))},")
    if rows:
        lines.append(f" {json.dumps(list_key)}: [")
        body = [f"  {json.dumps(r, separators=(',', ':'))}" for r in rows]
        lines.append(",\n".join(body))
        lines.append(" ]")
    else:
        lines.append(f" {json.dumps(list_key)}: []")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- series ---------------------------------------------------------------------


def series_dumps(s: TruncSeries) -> str:
    head = _field_header(s.F)
    head["prec"] = s.prec
    rows = [[str(i)] + _rat_pair(c) for i, c in s.nonzero_terms()]
    return _render(head, "coeffs", rows)


def series_loads(text: str) -> TruncSeries:
    doc = json.loads(text)
    F = field_from_header(doc)
    N = int(doc["prec"])
    coeffs = [RatK.zero(F)] * (N + 1)
    last = -1
    for pw, num, den in doc["coeffs"]:
        i = int(pw)
        if i <= last or i > N:
            raise ValueError("series coefficients must be listed once, in increasing power, within prec")
        coeffs[i] = _rat_from(F, num, den)
        last = i
    return TruncSeries.from_coeffs(F, coeffs, N)


# -- A-expansions ---------------------------------------------------------------


def aexp_dumps(ax) -> str:
    head = _field_header(ax.F)
    head["n"] = ax.n
    head["c0"] = _rat_pair(ax.c0)
    head["D"] = ax.D
    rows = [[format_poly(a)] + _rat_pair(c) for a, c in ax.items() if not c.is_zero()]
    return _render(head, "coeffs", rows)


def aexp_loads(text: str):
    from .forms import AExpansion

    doc = json.loads(text)
    F = field_from_header(doc)
    coeffs = {}
    for a, num, den in doc["coeffs"]:
        p = parse_poly(F, a)
        if not p.is_monic():
            raise ValueError(f"index {a} is not monic")
        coeffs[p] = _rat_from(F, num, den)
    c0 = _rat_from(F, *doc["c0"])
    return AExpansion(F, int(doc["n"]), c0, coeffs, int(doc["D"]))


# -- Goss tables ----------------------------------------------------------------


def goss_dumps(table, lattice: str) -> str:
    head = _field_header(table.F)
    head["lattice"] = lattice
    head["nmax"] = table.nmax
    head["alphas"] = [_rat_pair(a) for a in table.alphas]
    rows = []
    for n in range(1, table.nmax + 1):
        G = table[n]
        rows.append([[str(j)] + _rat_pair(G.coeff(j)) for j in G.support()])
    return _render(head, "polys", rows)


def goss_loads(text: str):
    from .goss import GossTable

    doc = json.loads(text)
    F = field_from_header(doc)
    alphas = tuple(_rat_from(F, *p) for p in doc["alphas"])
    polys = [XPoly.zero(F)]
    for terms in doc["polys"]:
        deg = max(int(j) for j, _, _ in terms)
        cs = [RatK.zero(F)] * (deg + 1)
        for j, num, den in terms:
            cs[int(j)] = _rat_from(F, num, den)
        polys.append(XPoly.from_coeffs(F, cs))
    return GossTable(F, alphas, int(doc["nmax"]), polys)


# -- reports --------------------------------------------------------------------


def coords_dumps(config: dict, k: int, m: int, checked_to: int, rows: list) -> str:
    """g,h coordinates as rows [i, j, num, den]."""
    head = {"format": FORMAT_VERSION, "config": config, "k": k, "m": m, "checked_to": checked_to}
    return _render(head, "coords", rows)


def report_dumps(config: dict, results: list[dict]) -> str:
    doc = {"format": FORMAT_VERSION, "config": config, "results": results}
    return json.dumps(doc, indent=1, sort_keys=False) + "\n"


def report_text(config: dict, results: list[dict]) -> str:
    lines = ["# config: " + ", ".join(f"{k}={v}" for k, v in config.items() if v is not None)]
    for r in results:
        expected = r.get("expected")
        tag = "INFO" if expected is None else ("PASS" if r["verdict"] == expected else "FAIL")
        params = " ".join(f"{k}={v}" for k, v in r.get("parameters", {}).items())
        line = f"{tag}  {r['check']}  {params}  verdict={r['verdict']}"
        if r.get("expected") is not None:
            line += f" expected={r['expected']}"
        if r.get("witness"):
            line += f"  witness={r['witness']}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def poly_key(a: Poly) -> str:
    return format_poly(a)
