"""Command-line front end: compute invariants, expand genera, emit and check
vanishing certificates.

Exit codes: 0 success (or certificate holds), 1 a checked statement fails,
2 usage or malformed input, 3 inconclusive or out of budget.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

import numpy as np

__all__ = ["main", "run", "theorem_a_report"]

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3

_DIM_BUDGET = 12  # largest n the verification suites accept by default


def _dim_budget() -> int:
    env = os.environ.get("CURVATURA_BUDGET")
    return int(env) if env else _DIM_BUDGET


class _InputError(Exception):
    """Bad user input that argparse cannot catch itself."""


class _Budget(Exception):
    pass


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise _InputError("cannot parse %r as a rational number" % text)


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise _InputError("cannot read %s: %s" % (path, exc))
    except json.JSONDecodeError as exc:
        raise _InputError("malformed JSON in %s: %s (line %d column %d)"
                          % (path, exc.msg, exc.lineno, exc.colno))


def _write_json(path: str, obj) -> None:
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _weight_from_args(args):
    from .weights import Weight
    coeffs = [_fraction(c) for c in args.weight.split(",") if c.strip() != ""]
    if len(coeffs) != args.m:
        raise _InputError("weight has %d coordinates, expected m = %d"
                          % (len(coeffs), args.m))
    try:
        return Weight(args.family, args.m, coeffs)
    except ValueError as exc:
        raise _InputError(str(exc))


def _manifold_from_args(args):
    from .genera import ManifoldData, builtin_manifold
    if getattr(args, "builtin", None):
        try:
            return builtin_manifold(args.builtin)
        except ValueError as exc:
            raise _InputError(str(exc))
    if getattr(args, "manifold", None):
        d = _load_json(args.manifold)
        try:
            return ManifoldData.from_json_dict(d, fill_zeros=args.fill_zeros)
        except (ValueError, KeyError) as exc:
            raise _InputError("bad manifold data: %s" % exc)
    raise _InputError("need --manifold FILE or --builtin NAME")


def _spectrum_from_args(args):
    """Returns (spectrum, einstein_bound_or_None)."""
    from .curvops import Spectrum, model_spectrum
    if getattr(args, "spectrum", None):
        d = _load_json(args.spectrum)
        try:
            return Spectrum.from_json_dict(d), None
        except (ValueError, KeyError) as exc:
            raise _InputError("bad spectrum data: %s" % exc)
    if getattr(args, "model", None):
        kw = {}
        for key in ("n", "m", "k", "d"):
            val = getattr(args, key, None)
            if val is not None:
                kw[key] = val
        try:
            return model_spectrum(args.model, **kw)
        except (ValueError, KeyError) as exc:
            raise _InputError(str(exc))
    raise _InputError("need --spectrum FILE or --model NAME")


def _parse_rep_spec(text: str):
    """'wedge:2' -> ('wedge', 2); plain 'sym:3' likewise."""
    parts = text.split(":")
    if len(parts) != 2 or parts[0] not in ("wedge", "sym"):
        raise _InputError("rep must look like wedge:2 or sym:3")
    try:
        p = int(parts[1])
    except ValueError:
        raise _InputError("rep power must be an integer")
    if p < 0:
        raise _InputError("rep power must be >= 0")
    return parts[0], p


# ---------------------------------------------------------------------------
# curvature-positivity certificate
# ---------------------------------------------------------------------------

def theorem_a_report(spec, mu, p: int, label: str = "spectrum") -> dict:
    """Certificate for the vanishing criterion driven by the curvature
    functionals: evaluates the chain C_1 .. C_p on the spectrum and, when C_p
    is positive, asserts the vanishing of every twisted index over parallel
    subbundles of the q-th tangent powers, q <= p."""
    from .curvops import cp_values
    if p < 1:
        raise ValueError("p must be >= 1")
    report = {"theorem": "twisted-ahat-vanishing", "label": label,
              "n": spec.n, "p": p, "backend": "exact"}
    if spec.n % 4 != 0 or spec.n < 8:
        report["verdict"] = "inconclusive"
        report["reason"] = ("refused: criterion needs dimension divisible by "
                            "four and at least eight, got %d" % spec.n)
        return report
    chain = cp_values(spec, p, mu)
    report["evidence"] = {"chain": [str(c) for c in chain],
                          "mu": str(Fraction(mu)) if mu is not None else None,
                          "scal": str(spec.scal())}
    if chain[-1] > 0:
        report["verdict"] = "holds"
        report["vanishing"] = [
            "twisted index zero for every parallel subbundle of "
            "TM^(x)%d" % q for q in range(1, p + 1)]
    else:
        report["verdict"] = "inconclusive"
        report["reason"] = "C_%d = %s is not positive" % (p, chain[-1])
    return report


# ---------------------------------------------------------------------------
# verb handlers
# ---------------------------------------------------------------------------

def _cmd_pw(args) -> int:
    w = _weight_from_args(args)
    print(w.pw())
    return EXIT_OK


def _cmd_casimir(args) -> int:
    w = _weight_from_args(args)
    print(w.casimir())
    return EXIT_OK


def _cmd_decomp(args) -> int:
    from . import decomp as dc
    if args.n % 2 != 0 or args.n < 4:
        raise _InputError("decompositions are tabulated for even n >= 4")
    m = args.n // 2
    try:
        if args.kind == "wedge":
            summands = dc.wedge_summands(m, args.p)
        elif args.kind == "sym":
            summands = dc.sym_summands(m, args.p)
        elif args.kind == "spinor-wedge":
            summands = dc.spinor_wedge_summands(m, args.p)
        else:
            summands = dc.spinor_sym_summands(m, args.p)
    except ValueError as exc:
        raise _InputError(str(exc))
    rows = []
    for w in summands:
        rows.append({
            "coeffs": [str(c) for c in w.coeffs],
            "dim": w.weyl_dim(),
            "casimir": str(w.casimir()),
            "pw": None if w.is_zero() else str(w.pw()),
        })
    pw_min = dc.pw_min_over(summands)
    doc = {"n": args.n, "kind": args.kind, "p": args.p,
           "summands": rows, "pw_min": str(pw_min)}
    for r in rows:
        print("(%s)  dim %d  casimir %s  pw %s"
              % (", ".join(r["coeffs"]), r["dim"], r["casimir"],
                 r["pw"] if r["pw"] is not None else "-"))
    print("pw min = %s" % pw_min)
    if args.json:
        _write_json(args.json, doc)
    return EXIT_OK


def _cmd_sigma(args) -> int:
    from .curvops import sigma_of_spectrum
    spec, _ = _spectrum_from_args(args)
    r = _fraction(args.r)
    try:
        print(sigma_of_spectrum(r, spec))
    except ValueError as exc:
        raise _InputError(str(exc))
    return EXIT_OK


def _resolve_mu(args, spec, bound):
    from .curvops import mu_synthetic
    if args.mu is not None:
        return _fraction(args.mu)
    if bound is not None:
        return bound
    return mu_synthetic(spec)


def _cmd_cp(args) -> int:
    from .curvops import cp_value
    if args.p < 1:
        raise _InputError("p must be >= 1")
    spec, bound = _spectrum_from_args(args)
    mu = _resolve_mu(args, spec, bound)
    if args.report:
        label = args.model or args.spectrum or "spectrum"
        rep = theorem_a_report(spec, mu, args.p, label=label)
        print("certificate: %s" % rep["theorem"])
        if "evidence" in rep:
            chain = rep["evidence"]["chain"]
            for q, val in enumerate(chain, start=1):
                print("  C_%d = %s" % (q, val))
        print("verdict: %s" % rep["verdict"])
        if rep["verdict"] == "holds":
            for line in rep["vanishing"]:
                print("  " + line)
        else:
            print("  " + rep["reason"])
        if args.json:
            _write_json(args.json, rep)
        return EXIT_OK if rep["verdict"] == "holds" else EXIT_INCONCLUSIVE
    try:
        print(cp_value(spec, args.p, mu))
    except ValueError as exc:
        raise _InputError(str(exc))
    return EXIT_OK


def _cmd_model(args) -> int:
    spec, bound = _spectrum_from_args(args)
    doc = spec.to_json_dict()
    doc["einstein_bound"] = str(bound)
    print("n = %d, scal = %s, einstein bound = %s"
          % (spec.n, spec.scal(), bound))
    for v, mult in spec.eigs:
        print("  eigenvalue %s  multiplicity %d" % (v, mult))
    if args.json:
        _write_json(args.json, doc)
    return EXIT_OK


def _cmd_genus(args) -> int:
    from .genera import genus_number
    man = _manifold_from_args(args)
    try:
        print(genus_number(man, args.kind))
    except (ValueError, KeyError) as exc:
        raise _InputError(str(exc))
    return EXIT_OK


def _cmd_twisted_ahat(args) -> int:
    from .genera import twisted_ahat
    man = _manifold_from_args(args)
    kind, p = _parse_rep_spec(args.rep)
    try:
        print(twisted_ahat(man, kind, p))
    except (ValueError, KeyError) as exc:
        raise _InputError(str(exc))
    return EXIT_OK


def _qseries_verb(args, which: str) -> int:
    from .qseries import elliptic_genus_tilde, witten_genus
    man = _manifold_from_args(args)
    fn = witten_genus if which == "witten" else elliptic_genus_tilde
    try:
        qs = fn(man, args.trunc)
    except ValueError as exc:
        raise _Budget(str(exc))
    print("weight %d on %s, coefficients through q^%d:"
          % (qs.weight, qs.group, qs.trunc))
    print("  " + "  ".join(str(c) for c in qs.coeffs))
    if args.json:
        _write_json(args.json, qs.to_json_dict())
    return EXIT_OK


def _verdict_exit(verdict: str) -> int:
    if verdict in ("holds", "vanishes"):
        return EXIT_OK
    if verdict in ("fails", "nonzero"):
        return EXIT_FAIL
    return EXIT_INCONCLUSIVE


def _cmd_certify_cobordism(args) -> int:
    from .genera import certify_cobordism
    man = _manifold_from_args(args)
    r = _fraction(args.r) if args.r is not None else None
    report = certify_cobordism(man, einstein=args.einstein, pinch=args.pinch,
                               r=r)
    print("manifold %s, dim %d" % (report["label"], report["dim"]))
    print("theorem: %s" % report.get("theorem", "-"))
    if report.get("forced_zero"):
        print("forced zero: %s" % " ".join(report["forced_zero"]))
    for family, items in sorted(report.get("violations", {}).items()):
        if items:
            print("violations (%s): %s" % (family, items))
    if "reason" in report:
        print("reason: %s" % report["reason"])
    print("verdict: %s" % report["verdict"])
    if args.json:
        _write_json(args.json, report)
    return _verdict_exit(report["verdict"])


def _cmd_certify_qseries(args, which: str) -> int:
    from .qseries import certify_elliptic_vanishing, certify_witten_vanishing
    man = _manifold_from_args(args)
    fn = (certify_witten_vanishing if which == "witten"
          else certify_elliptic_vanishing)
    try:
        report = fn(man, args.trunc)
    except ValueError as exc:
        raise _Budget(str(exc))
    print("manifold %s, weight %d on %s, threshold %d"
          % (report["label"], report["weight"], report["group"],
             report["threshold"]))
    if "coeffs" in report:
        print("coefficients: " + "  ".join(report["coeffs"]))
    if "witness" in report:
        print("witness: q^%(index)d coefficient %(value)s" % report["witness"])
    if "reason" in report:
        print("reason: %s" % report["reason"])
    if "conclusion" in report:
        print(report["conclusion"])
    print("verdict: %s" % report["verdict"])
    if args.json:
        _write_json(args.json, report)
    return _verdict_exit(report["verdict"])


def _cmd_surgery(args) -> int:
    from .curvops import cp_value, surgery_spectrum
    try:
        spec, bound = surgery_spectrum(args.n, args.d)
        value = cp_value(spec, args.p, bound)
    except ValueError as exc:
        raise _InputError(str(exc))
    floor = (Fraction((args.d - 1) * (args.d - 2), 8)
             - args.p * (args.p + args.n - 2))
    holds = value >= floor
    print("C_%d = %s, floor = %s, margin = %s"
          % (args.p, value, floor, value - floor))
    print("holds" if holds else "fails")
    return EXIT_OK if holds else EXIT_FAIL


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------

def _suite_result(name: str, passed: int, total: int, backend: str) -> int:
    ok = passed == total
    print("%s: %d/%d checks passed, backend %s: %s"
          % (name, passed, total, backend, "holds" if ok else "fails"))
    return EXIT_OK if ok else EXIT_FAIL


def _check_dim_budget(n: int):
    cap = _dim_budget()
    if n > cap:
        raise _Budget("n = %d exceeds the verification budget %d "
                      "(set CURVATURA_BUDGET to raise it)" % (n, cap))


def _verify_weitzenboeck(args) -> int:
    from .curvops import (casimir_matrix, labbi_sym2_check, labbi_wedge2_check,
                          random_bianchi, weitzenbock, CurvOp)
    from .exactmat import ExactMatrix
    from .repmats import defining_rep, spinor_rep, sym2_rep, wedge2_rep
    n = args.n
    _check_dim_budget(n)
    name = args.rep
    if name == "defining":
        rep = defining_rep(n)
    elif name in ("wedge2", "wedge:2"):
        rep = wedge2_rep(n)
    elif name in ("sym2", "sym:2"):
        rep = sym2_rep(n)
    elif name in ("spinor", "spinor+", "spinor-"):
        half = {"spinor": None if n % 2 else "+",
                "spinor+": "+", "spinor-": "-"}[name]
        rep = spinor_rep(n, half)
    else:
        raise _InputError("rep must be defining, wedge2, sym2, or spinor[+/-]")
    rng = np.random.default_rng(args.seed)
    passed = 0
    total = args.samples + 1
    # acting on the identity operator gives the Casimir matrix
    if weitzenbock(CurvOp.identity(n), rep).equals(casimir_matrix(rep)):
        passed += 1
    for i in range(args.samples):
        R = random_bianchi(n, rng)
        if name == "defining":
            ok = weitzenbock(R, rep).equals(
                ExactMatrix.from_fractions(R.ricci()))
        elif name in ("wedge2", "wedge:2"):
            ok = labbi_wedge2_check(R)["equal"]
        elif name in ("sym2", "sym:2"):
            res = labbi_sym2_check(R)
            ok = res["equal"] and res["metric_killed"]
        else:
            ok = weitzenbock(R, rep).scalar_of_identity() == R.scal() / 8
        passed += bool(ok)
    return _suite_result("weitzenboeck/%s n=%d" % (name, n), passed, total,
                         "exact")


def _verify_split(args) -> int:
    from .curvops import random_bianchi, split_check
    from .repmats import defining_rep, spinor_rep, wedge2_rep
    n = args.n
    _check_dim_budget(n)
    spin = spinor_rep(n, "+" if n % 2 == 0 else None)
    rng = np.random.default_rng(args.seed)
    passed = total = 0
    for rep in (defining_rep(n), wedge2_rep(n)):
        for _ in range(args.samples):
            total += 1
            passed += bool(split_check(random_bianchi(n, rng), rep,
                                       spin)["equal"])
    return _suite_result("split n=%d" % n, passed, total, "exact")


def _verify_simplex(args) -> int:
    from .weights import verify_simplex_bounds
    try:
        report = verify_simplex_bounds(args.n, args.p)
    except ValueError as exc:
        raise _InputError(str(exc))
    for lattice in ("integer", "shifted"):
        sub = report[lattice]
        print("%s: %d weights, pw min %s (floor %s), cas in [%s, %s]"
              % (lattice, sub["count"], sub["pw_min"], sub["pw_floor"],
                 sub["cas_min"], sub["cas_max"]))
    return _suite_result("simplex n=%d p=%d" % (args.n, args.p),
                         int(report["holds"]), 1, "exact")


def _verify_lower_bound(args) -> int:
    from .curvops import lower_bound_check, random_bianchi
    from .repmats import defining_rep, spinor_rep, sym0_rep, wedge2_rep
    from .weights import Weight
    n = args.n
    _check_dim_budget(n)
    if n % 2 == 0:
        fam, m = "D", n // 2
        halves = ["+", "-"]
    else:
        fam, m = "B", (n - 1) // 2
        halves = [None]
    half_coords = [Fraction(1, 2)] * m
    cases = [
        ("defining", defining_rep(n), Weight(fam, m, [1] + [0] * (m - 1))),
        ("wedge2", wedge2_rep(n), Weight(fam, m, [1, 1] + [0] * (m - 2))),
        ("sym0(2)", sym0_rep(n), Weight(fam, m, [2] + [0] * (m - 1))),
    ]
    for half in halves:
        coords = list(half_coords)
        if half == "-":
            coords[-1] = -coords[-1]
        cases.append(("spinor%s" % (half or ""), spinor_rep(n, half),
                      Weight(fam, m, coords)))
    rng = np.random.default_rng(args.seed)
    passed = total = 0
    for label, rep, w in cases:
        for _ in range(args.samples):
            total += 1
            res = lower_bound_check(random_bianchi(n, rng), rep, w,
                                    tol=args.tol)
            if not res["holds"]:
                print("  %s violated: gap %s" % (label, res["gap"]))
            passed += bool(res["holds"])
    return _suite_result("lower-bound n=%d" % n, passed, total,
                         "float64 tol %g" % args.tol)


def _verify_labbi(args) -> int:
    from .curvops import labbi_sym2_check, labbi_wedge2_check, random_bianchi
    n = args.n
    _check_dim_budget(n)
    rng = np.random.default_rng(args.seed)
    passed = total = 0
    for _ in range(args.samples):
        R = random_bianchi(n, rng)
        total += 2
        passed += bool(labbi_wedge2_check(R)["equal"])
        res = labbi_sym2_check(R)
        passed += bool(res["equal"] and res["metric_killed"])
    return _suite_result("labbi n=%d" % n, passed, total, "exact")


def _verify_nested(args) -> int:
    from math import comb
    from .curvops import Spectrum, mu_synthetic, nested_monotonicity_check
    n = args.n
    rng = np.random.default_rng(args.seed)
    N = comb(n, 2)
    passed = 0
    for _ in range(args.samples):
        vals = sorted(int(v) for v in rng.integers(-6, 7, size=N))
        spec = Spectrum(n, [(v, 1) for v in vals])
        rep = nested_monotonicity_check(spec, mu_synthetic(spec), args.pmax)
        passed += bool(rep["holds"])
    return _suite_result("nested n=%d pmax=%d" % (n, args.pmax), passed,
                         args.samples, "exact")


_SUITES = {
    "weitzenboeck": _verify_weitzenboeck,
    "split": _verify_split,
    "simplex": _verify_simplex,
    "lower-bound": _verify_lower_bound,
    "labbi": _verify_labbi,
    "nested": _verify_nested,
}


def _cmd_verify(args) -> int:
    return _SUITES[args.suite](args)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_manifold_flags(sp):
    sp.add_argument("--manifold", help="JSON file with dim/pont/spin flags")
    sp.add_argument("--builtin", help="named manifold, e.g. hpk(2) or cap2")
    sp.add_argument("--fill-zeros", action="store_true",
                    help="treat absent Pontryagin numbers as zero")


def _add_spectrum_flags(sp):
    sp.add_argument("--spectrum", help="JSON file with n and eigenvalue pairs")
    sp.add_argument("--model", help="model name: sphere, cp, hp, cap2, surgery")
    sp.add_argument("--n", type=int, help="model dimension (sphere, surgery)")
    sp.add_argument("--m", type=int, help="complex dimension (cp)")
    sp.add_argument("--k", type=int, help="quaternionic dimension (hp)")
    sp.add_argument("--d", type=int, help="surgery cross-section dimension")


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="curvatura",
        description="exact curvature invariants, genera, and certificates")
    sub = ap.add_subparsers(dest="verb", required=True)

    for verb, helptext in (("pw", "eigenvalue-ratio invariant of a weight"),
                           ("casimir", "Casimir eigenvalue of a weight")):
        sp = sub.add_parser(verb, help=helptext)
        sp.add_argument("--family", choices=("B", "D", "U"), default="D")
        sp.add_argument("--m", type=int, required=True, help="rank")
        sp.add_argument("--weight", required=True,
                        help="comma-separated epsilon coordinates")

    sp = sub.add_parser("decomp", help="irreducible pieces of a tensor power")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--kind", required=True,
                    choices=("wedge", "sym", "spinor-wedge", "spinor-sym"))
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--json", help="write the decomposition to this file")

    sp = sub.add_parser("sigma", help="partial eigenvalue sum of a spectrum")
    _add_spectrum_flags(sp)
    sp.add_argument("--r", required=True, help="how many directions (rational)")

    sp = sub.add_parser("cp", help="curvature positivity functional")
    _add_spectrum_flags(sp)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--mu", help="Ricci bound for p = 1 (defaults to the "
                                 "model bound or a synthetic one)")
    sp.add_argument("--report", action="store_true",
                    help="emit the full positivity certificate")
    sp.add_argument("--json", help="write the certificate to this file")

    sp = sub.add_parser("model", help="tabulated model spectra")
    _add_spectrum_flags(sp)
    sp.add_argument("--json", help="write the spectrum to this file")

    sp = sub.add_parser("genus", help="genus of a manifold from its numbers")
    _add_manifold_flags(sp)
    sp.add_argument("--kind", choices=("ahat", "L", "s"), default="ahat")

    sp = sub.add_parser("twisted-ahat", help="index twisted by a tangent power")
    _add_manifold_flags(sp)
    sp.add_argument("--rep", required=True, help="wedge:p or sym:p")

    for verb in ("witten", "elliptic"):
        sp = sub.add_parser(verb, help="q-expansion of the %s genus" % verb)
        _add_manifold_flags(sp)
        sp.add_argument("--trunc", type=int, default=None)
        sp.add_argument("--json", help="write the expansion to this file")

    sp = sub.add_parser("certify-cobordism",
                        help="which Pontryagin numbers must vanish")
    _add_manifold_flags(sp)
    sp.add_argument("--einstein", action="store_true",
                    help="assume an Einstein metric")
    sp.add_argument("--pinch", action="store_true",
                    help="assume the two-forms pinching hypothesis")
    sp.add_argument("--r", help="eigenvalue-count hypothesis (rational)")
    sp.add_argument("--json", help="write the certificate to this file")

    for verb in ("certify-witten", "certify-elliptic"):
        sp = sub.add_parser(verb, help="vanishing certificate for the genus")
        _add_manifold_flags(sp)
        sp.add_argument("--trunc", type=int, default=None)
        sp.add_argument("--json", help="write the certificate to this file")

    sp = sub.add_parser("surgery", help="positivity floor after surgery")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)

    sp = sub.add_parser("verify", help="randomized and exhaustive check suites")
    sp.add_argument("suite", choices=sorted(_SUITES))
    sp.add_argument("--n", type=int, default=6)
    sp.add_argument("--p", type=int, default=1)
    sp.add_argument("--rep", default="defining")
    sp.add_argument("--samples", type=int, default=10)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.add_argument("--pmax", type=int, default=5)
    return ap


_HANDLERS = {
    "pw": _cmd_pw,
    "casimir": _cmd_casimir,
    "decomp": _cmd_decomp,
    "sigma": _cmd_sigma,
    "cp": _cmd_cp,
    "model": _cmd_model,
    "genus": _cmd_genus,
    "twisted-ahat": _cmd_twisted_ahat,
    "witten": lambda a: _qseries_verb(a, "witten"),
    "elliptic": lambda a: _qseries_verb(a, "elliptic"),
    "certify-cobordism": _cmd_certify_cobordism,
    "certify-witten": lambda a: _cmd_certify_qseries(a, "witten"),
    "certify-elliptic": lambda a: _cmd_certify_qseries(a, "elliptic"),
    "surgery": _cmd_surgery,
    "verify": _cmd_verify,
}


def run(argv) -> int:
    from .weights import SimplexBudgetError
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _HANDLERS[args.verb](args)
    except _InputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except (_Budget, SimplexBudgetError) as exc:
        print("budget: %s" % exc, file=sys.stderr)
        return EXIT_INCONCLUSIVE


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
