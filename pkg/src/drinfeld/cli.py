"""Command-line interface.

    drinfeld expand --form h --q 3 --prec 50
    drinfeld expand --fkn 8 2 --q 3 --prec 50 --out f82.series
    drinfeld hecke --in f82.series --prime T+1 --k 8 --m 2
    drinfeld verify congruence --family F --k 4 --n 1 --d 1 --nu 0
    drinfeld verify eigen --form fkn:10:1 --prime T+1
    drinfeld recover --n 4 --in h2g2.series
    drinfeld ghexpress --form F:3 --prec 60
    drinfeld search --n-range 1:2 --k-range 4:8 --l-range 0:1 --prec 40

Configuration comes from built-in defaults, then an optional JSON file given
with --config, then command-line flags.  Output is text or canonical JSON
(--format).  Exit status is 0 iff every verdict matched its expectation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import forms as fm
from .algebra import Poly, RatK, field_create, format_poly, is_irreducible, parse_poly, parse_prime_poly
from .algebra.field import is_prime
from .cache import set_cache_dir
from .hecke import NotEigen, eigen_solve, hecke_apply
from .io import aexp_dumps, coords_dumps, report_dumps, report_text, series_dumps, series_loads
from .series import InsufficientPrecision
from .verify import (
    CheckResult,
    eisenstein_congruence,
    family_congruences,
    min_d,
    search_products,
    thm1_hypothesis,
)

DEFAULTS = {"p": 3, "e": 1, "modulus": None, "prec": 50, "jobs": 1, "cache_dir": None, "format": "text"}


class UsageError(Exception):
    pass


# -- configuration ----------------------------------------------------------------


def _split_q(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            e, r = 0, q
            while r % p == 0:
                r //= p
                e += 1
            if r != 1 or not is_prime(p):
                break
            return p, e
    raise UsageError(f"q = {q} is not a prime power")


def resolve_config(args) -> dict:
    cfg = dict(DEFAULTS)
    if getattr(args, "config", None):
        with open(args.config) as fh:
            loaded = json.load(fh)
        unknown = set(loaded) - set(DEFAULTS) - {"q"}
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
        if "q" in loaded:
            loaded["p"], loaded["e"] = _split_q(int(loaded.pop("q")))
        cfg.update(loaded)
    if args.q is not None:
        cfg["p"], cfg["e"] = _split_q(args.q)
    for key in ("p", "e", "modulus", "prec", "jobs", "cache_dir", "format"):
        v = getattr(args, key, None)
        if v is not None:
            cfg[key] = v
    if cfg["format"] not in ("text", "json"):
        raise UsageError("format must be text or json")
    if int(cfg["prec"]) < 1 or int(cfg["jobs"]) < 1:
        raise UsageError("prec and jobs must be positive")
    return cfg


def field_of(cfg):
    mod = cfg["modulus"]
    coeffs = parse_prime_poly(cfg["p"], mod) if mod else None
    try:
        return field_create(int(cfg["p"]), int(cfg["e"]), coeffs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def config_record(cfg, F) -> dict:
    return {"q": F.q, "modulus": F.modulus_str(), "prec": int(cfg["prec"]), "jobs": int(cfg["jobs"])}


# -- form specs ---------------------------------------------------------------------


def _ints(parts, n, spec):
    if len(parts) != n:
        raise UsageError(f"form spec {spec!r} needs {n} integer parameters")
    try:
        return [int(x) for x in parts]
    except ValueError as exc:
        raise UsageError(f"bad integer in form spec {spec!r}") from exc


def build_form(F, spec: str, N: int, jobs: int = 1) -> fm.ModularForm:
    """h, g, Delta, E, fkn:K:N, fs:S, F:NU, Fknl:K:N:L, gk:K, gh:I:J."""
    name, *rest = spec.split(":")
    if name == "h" and not rest:
        return fm.h(F, N, jobs)
    if name == "g" and not rest:
        return fm.g(F, N, jobs)
    if name == "Delta" and not rest:
        return fm.Delta(F, N, jobs)
    if name == "E" and not rest:
        return fm.falseE(F, N, jobs)
    if name == "fkn":
        k, n = _ints(rest, 2, spec)
        return fm.f_kn(F, k, n, N, jobs)
    if name == "fs":
        (s,) = _ints(rest, 1, spec)
        return fm.f_s(F, s, N, jobs)
    if name == "F":
        (nu,) = _ints(rest, 1, spec)
        return fm.F_nu(F, nu, N, jobs)
    if name == "Fknl":
        k, n, l = _ints(rest, 3, spec)
        return fm.F_knl(F, k, n, l, N, jobs)
    if name == "gk":
        (k,) = _ints(rest, 1, spec)
        return fm.eisenstein_g_k(F, k, N, jobs)
    if name == "gh":
        i, j = _ints(rest, 2, spec)
        return fm.gh_monomial(F, i, j, N, jobs)
    raise UsageError(f"unknown form spec {spec!r}")


def _prime(F, text: str) -> Poly:
    try:
        P = parse_poly(F, text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if not P.is_monic() or P.deg < 1 or not is_irreducible(P):
        raise UsageError(f"{text} is not a monic irreducible polynomial")
    return P


def _range(text: str) -> range:
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError as exc:
        raise UsageError(f"range {text!r} must look like LO:HI") from exc
    return range(lo, hi + 1)


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_series(F, path: str):
    s = series_loads(Path(path).read_text())
    if s.F != F:
        raise UsageError(f"{path} was written for q = {s.F.q}, modulus {s.F.modulus_str()}")
    return s


# -- subcommands ----------------------------------------------------------------------


def cmd_expand(args, cfg, F) -> int:
    N, jobs = int(cfg["prec"]), int(cfg["jobs"])
    if args.fkn:
        k, n = args.fkn
        ok, why = thm1_hypothesis(F, k, n)
        if not ok:
            raise UsageError(f"f_{{{k},{n}}} fails the hypothesis: {why}")
        f = fm.f_kn(F, k, n, N, jobs).series
    elif args.aexp:
        from .io import aexp_loads

        ax = aexp_loads(Path(args.aexp).read_text())
        f = fm.expand(ax, N, jobs)
    elif args.form:
        f = build_form(F, args.form, N, jobs).series
    else:
        raise UsageError("expand needs --form, --fkn or --aexp")
    _emit(series_dumps(f), args.out)
    return 0


def cmd_hecke(args, cfg, F) -> int:
    P = _prime(F, args.prime)
    N = int(cfg["prec"])
    if args.input:
        if args.k is None or args.m is None:
            raise UsageError("hecke on a series file needs --k and --m")
        f = fm.ModularForm(args.k, args.m, _load_series(F, args.input))
    elif args.form:
        f = build_form(F, args.form, N * F.q**P.deg, int(cfg["jobs"]))
    else:
        raise UsageError("hecke needs --in or --form")
    _emit(series_dumps(hecke_apply(f, P).series), args.out)
    return 0


def _verify_results(args, cfg, F) -> list[CheckResult]:
    N, jobs = int(cfg["prec"]), int(cfg["jobs"])
    check = args.check
    if check == "congruence":
        if args.family == "F":
            need = ("k", "n", "d", "nu")
            if any(getattr(args, x) is None for x in need):
                raise UsageError("congruence needs --k --n --d --nu")
            ok, why = thm1_hypothesis(F, args.k, args.n)
            if not ok:
                raise UsageError(f"(k, n) = ({args.k}, {args.n}) fails the hypothesis: {why}")
            return family_congruences(F, args.k, args.n, args.d, args.nu, N, args.bracket, jobs)
        if args.family == "eisenstein":
            if args.d is None:
                raise UsageError("eisenstein congruence needs --d")
            return [eisenstein_congruence(F, args.d, N, jobs)]
        raise UsageError("--family must be F or eisenstein")
    if check == "eigen":
        if not args.form or not args.prime:
            raise UsageError("eigen needs --form and --prime")
        P = _prime(F, args.prime)
        f = build_form(F, args.form, N * F.q**P.deg, jobs)
        n = f.aexp.n if f.aexp is not None else args.expect_power
        params = {"form": args.form, "prime": format_poly(P), "prec": N}
        try:
            lam = eigen_solve(f, P, N)
        except NotEigen as exc:
            return [CheckResult("eigen", params, False, True, f"t^{exc.witness}")]
        params["lambda"] = str(lam)
        if n is None:
            return [CheckResult("eigen", params, True, None)]
        match = lam == RatK.of(P**n)
        params["expected_lambda"] = f"({format_poly(P)})^{n}"
        return [CheckResult("eigen", params, match, True, None if match else str(lam))]
    if check == "hypothesis":
        if args.k is None or args.n is None:
            raise UsageError("hypothesis needs --k and --n")
        ok, why = thm1_hypothesis(F, args.k, args.n)
        return [CheckResult("hypothesis", {"k": args.k, "n": args.n}, ok, None, None if ok else why)]
    if check == "powersum":
        if args.r is None or args.dmax is None:
            raise UsageError("powersum needs --r and --dmax")
        rep = min_d(F, args.r, args.dmax)
        good = all(rep.vanishes(j, d) for (j, d) in rep.table if j % (F.q - 1))
        return [CheckResult("powersum", {"r": args.r, "dmax": args.dmax, "d_r": rep.d_r}, good, True)]
    raise UsageError(f"unknown check {check!r}")


def _report(cfg, F, results: list[CheckResult]) -> int:
    conf = config_record(cfg, F)
    rows = [r.as_dict() for r in results]
    text = report_dumps(conf, rows) if cfg["format"] == "json" else report_text(conf, rows)
    sys.stdout.write(text)
    return 0 if all(r.ok() for r in results) else 1


def cmd_verify(args, cfg, F) -> int:
    return _report(cfg, F, _verify_results(args, cfg, F))


def cmd_recover(args, cfg, F) -> int:
    s = _load_series(F, args.input)
    try:
        ax = fm.aexp_recover(s, args.n, kn_hint=args.hint, degree=args.degree)
    except fm.Inconsistent as exc:
        print(f"Inconsistent: {exc}")
        return 1
    except fm.Underdetermined as exc:
        print(f"Underdetermined: {exc}")
        return 1
    _emit(aexp_dumps(ax), args.out)
    return 0


def cmd_ghexpress(args, cfg, F) -> int:
    N = int(cfg["prec"])
    if args.input:
        if args.k is None or args.m is None:
            raise UsageError("ghexpress on a series file needs --k and --m")
        f = fm.ModularForm(args.k, args.m, _load_series(F, args.input))
    elif args.form:
        f = build_form(F, args.form, N, int(cfg["jobs"]))
    else:
        raise UsageError("ghexpress needs --in or --form")
    try:
        ex = fm.gh_express(f, buffer=args.buffer, allow_quasi=args.allow_quasi)
    except fm.NotInSpan as exc:
        print(f"NotInSpan: {exc}")
        return 1
    if cfg["format"] == "json":
        rows = [[i, j, format_poly(c.num), format_poly(c.den)]
                for (i, j), c in sorted(ex.nonzero().items(), key=lambda t: t[0][1])]
        sys.stdout.write(coords_dumps(config_record(cfg, F), ex.k, ex.m, ex.checked_to, rows))
    else:
        print(f"{f.label or 'f'} = {ex}")
    return 0


def cmd_search(args, cfg, F) -> int:
    res = search_products(F, _range(args.k_range), _range(args.n_range), _range(args.l_range),
                          int(cfg["prec"]), int(cfg["jobs"]),
                          phi_nu=_range(args.phi_nu) if args.phi_nu else (),
                          phi_j=_range(args.phi_j) if args.phi_j else ())
    return _report(cfg, F, res)


# -- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("field and run options")
    g.add_argument("--q", type=int, help="field size (prime power)")
    g.add_argument("--p", type=int, help="characteristic")
    g.add_argument("--e", type=int, help="degree of F_q over F_p")
    g.add_argument("--modulus", help="defining polynomial of F_q in a, e.g. 'a^2+a+1'")
    g.add_argument("--prec", type=int, help="precision (t-adic); output precision for hecke/eigen")
    g.add_argument("--jobs", type=int, help="worker processes")
    g.add_argument("--cache-dir", dest="cache_dir", help="content-addressed cache directory")
    g.add_argument("--format", choices=("text", "json"))
    g.add_argument("--config", help="JSON config file")

    ap = argparse.ArgumentParser(prog="drinfeld", description="Drinfeld modular forms with A-expansions",
                                 parents=[common])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="t-expansion of a named form or A-expansion file")
    p.add_argument("--form")
    p.add_argument("--fkn", type=int, nargs=2, metavar=("K", "N"))
    p.add_argument("--aexp", help="A-expansion file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("hecke", parents=[common], help="apply T_p")
    p.add_argument("--in", dest="input")
    p.add_argument("--form")
    p.add_argument("--prime", required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_hecke)

    p = sub.add_parser("verify", parents=[common], help="run a verification check")
    p.add_argument("check", choices=("congruence", "eigen", "hypothesis", "powersum"))
    p.add_argument("--family", default="F")
    p.add_argument("--form")
    p.add_argument("--prime")
    p.add_argument("--expect-power", dest="expect_power", type=int)
    p.add_argument("--bracket", action="store_true", help="use the modulus [d] instead of each prime")
    for name in ("k", "n", "d", "nu", "r", "dmax"):
        p.add_argument(f"--{name}", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("recover", parents=[common], help="recover an A-expansion from a series file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degree", type=int)
    p.add_argument("--hint", type=int, help="expected exponent e with c_a = a^e c_1")
    p.add_argument("--out")
    p.set_defaults(func=cmd_recover)

    p = sub.add_parser("ghexpress", parents=[common], help="coordinates in the basis g^i h^j")
    p.add_argument("--in", dest="input")
    p.add_argument("--form")
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--buffer", type=int, default=10)
    p.add_argument("--allow-quasi", dest="allow_quasi", action="store_true")
    p.set_defaults(func=cmd_ghexpress)

    p = sub.add_parser("search", parents=[common], help="search candidate product identities")
    p.add_argument("--k-range", dest="k_range", required=True)
    p.add_argument("--n-range", dest="n_range", required=True)
    p.add_argument("--l-range", dest="l_range", default="0:0")
    p.add_argument("--phi-nu", dest="phi_nu")
    p.add_argument("--phi-j", dest="phi_j")
    p.set_defaults(func=cmd_search)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        cfg = resolve_config(args)
        F = field_of(cfg)
        set_cache_dir(cfg["cache_dir"])
        return args.func(args, cfg, F)
    except (UsageError, fm.HypothesisError, InsufficientPrecision, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        set_cache_dir(None)


if __name__ == "__main__":
    sys.exit(main())
