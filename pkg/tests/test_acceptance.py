"""Acceptance suite: the ten headline checks, one pass/fail line each.

The `criterion` decorator tags every test; the conftest reporter hook turns
those tags into a ten-line scoreboard at the end of any pytest run.
"""
import json
from fractions import Fraction as Fr
from math import comb

import numpy as np

from curvatura.cli import run
from curvatura.curvops import (
    CurvOp,
    Spectrum,
    cap2_spectrum,
    casimir_matrix,
    cp_space_spectrum,
    cp_value,
    decompose,
    hp_space_spectrum,
    labbi_sym2_check,
    labbi_wedge2_check,
    lower_bound_check,
    mu_synthetic,
    nested_monotonicity_check,
    random_bianchi,
    rate_integer,
    rate_shifted,
    sphere_spectrum,
    split_check,
    surgery_spectrum,
    weitzenbock,
)
from curvatura.decomp import (
    pw_min_over,
    spinor_sym_summands,
    spinor_wedge_summands,
    sym_summands,
    wedge_summands,
)
from curvatura.exactmat import ExactMatrix
from curvatura.genera import (
    ManifoldData,
    builtin_manifold,
    certify_cobordism,
    even_family_condition,
    genus_number,
    pinch_system,
    twisted_ahat,
)
from curvatura.qseries import (
    elliptic_genus_tilde,
    elliptic_p_threshold,
    ord_threshold,
    witten_genus,
    witten_p_threshold,
)
from curvatura.repmats import defining_rep, spinor_rep, sym0_rep, wedge2_rep
from curvatura.weights import Weight, verify_simplex_bounds


def criterion(num: int, desc: str):
    def deco(fn):
        fn._acceptance = (num, desc)
        return fn
    return deco


@criterion(1, "ratio-invariant closed forms")
def test_criterion_01_pw_closed_forms():
    for n in (8, 12, 16, 20, 24):
        m = n // 2
        for p in range(1, m + 1):
            ws = wedge_summands(m, p)
            assert all(w.pw() == n - p for w in ws)
            assert pw_min_over(sym_summands(m, p)) == Fr(n + p - 2, p)
            assert pw_min_over(spinor_sym_summands(m, p)) == \
                Fr(n * n + (8 * p - 1) * n + 8 * p * (p - 1),
                   n + 8 * p * (p + 1))
        for p in range(1, m):
            assert pw_min_over(spinor_wedge_summands(m, p)) == \
                Fr(n * n + (8 * p - 1) * n - 8 * p * (p - 1), n + 16 * p)
        middle = (spinor_wedge_summands(m, m, "+", "+")
                  + spinor_wedge_summands(m, m, "+", "-"))
        assert pw_min_over(middle) == \
            Fr(n * n + (8 * m - 1) * n - 8 * m * (m - 1), n + 16 * m)
    # primitive (p,q)-forms of the unitary algebras
    for m in range(1, 9):
        for p in range(0, m + 1):
            for q in range(0, m - p + 1):
                if p + q == 0:
                    continue
                got = Weight.hodge_pair(m, p, q).pw()
                assert got == m + 1 - Fr(p * p + q * q, p + q), (m, p, q)


@criterion(2, "simplex bounds, exhaustive")
def test_criterion_02_simplex_bounds():
    for n in (8, 12):
        for p in (1, 2, 3):
            report = verify_simplex_bounds(n, p)
            assert report["holds"], (n, p)
            sub = report["shifted"]
            assert sub["pw_min"] == rate_shifted(n, p)
            assert sub["floor_attained"]


@criterion(3, "Weitzenboeck oracle identities")
def test_criterion_03_weitzenbock_oracles():
    rng = np.random.default_rng(101)
    for n in (6, 8):
        reps = {
            "defining": defining_rep(n),
            "wedge2": wedge2_rep(n),
            "sym0": sym0_rep(n),
            "spinor+": spinor_rep(n, "+"),
            "spinor-": spinor_rep(n, "-"),
        }
        # Casimir scalars on the identity operator, blockwise
        m = n // 2
        cas = {
            "defining": Weight("D", m, [1] + [0] * (m - 1)).casimir(),
            "wedge2": Weight("D", m, [1, 1] + [0] * (m - 2)).casimir(),
            "sym0": Weight("D", m, [2] + [0] * (m - 1)).casimir(),
            "spinor+": Weight("D", m, [Fr(1, 2)] * m).casimir(),
            "spinor-": Weight("D", m,
                              [Fr(1, 2)] * (m - 1) + [Fr(-1, 2)]).casimir(),
        }
        for name, rep in reps.items():
            K = weitzenbock(CurvOp.identity(n), rep)
            assert K.equals(casimir_matrix(rep))
            assert K.scalar_of_identity() == cas[name], name
        spin = reps["spinor+"]
        for _ in range(10):
            R = random_bianchi(n, rng)
            assert weitzenbock(R, spin).scalar_of_identity() == R.scal() / 8
            assert weitzenbock(R, reps["spinor-"]).scalar_of_identity() \
                == R.scal() / 8
            assert weitzenbock(R, reps["defining"]).equals(
                ExactMatrix.from_fractions(R.ricci()))
            for other in ("defining", "wedge2"):
                assert split_check(R, reps[other], spin)["equal"], (n, other)


@criterion(4, "spectral lower bound, float")
def test_criterion_04_lower_bound():
    tol = 1e-9
    rng = np.random.default_rng(202)
    for n in (7, 8):
        if n % 2 == 0:
            fam, m, halves = "D", n // 2, ("+", "-")
        else:
            fam, m, halves = "B", (n - 1) // 2, (None,)
        cases = [
            (defining_rep(n), Weight(fam, m, [1] + [0] * (m - 1))),
            (wedge2_rep(n), Weight(fam, m, [1, 1] + [0] * (m - 2))),
            (sym0_rep(n), Weight(fam, m, [2] + [0] * (m - 1))),
        ]
        for half in halves:
            coords = [Fr(1, 2)] * m
            if half == "-":
                coords[-1] = -coords[-1]
            cases.append((spinor_rep(n, half), Weight(fam, m, coords)))
        for _ in range(100):
            R = random_bianchi(n, rng)
            for rep, w in cases:
                assert lower_bound_check(R, rep, w, tol=tol)["holds"]
        # equality at plus/minus the identity operator
        for sign in (1, -1):
            R = CurvOp.identity(n).scaled(sign)
            for rep, w in cases:
                res = lower_bound_check(R, rep, w, tol=tol)
                assert res["holds"] and abs(res["gap"]) <= res["tol"]


@criterion(5, "two-form and symmetric identities")
def test_criterion_05_labbi():
    n = 6
    rng = np.random.default_rng(303)
    for _ in range(20):
        R = random_bianchi(n, rng)
        assert labbi_wedge2_check(R)["equal"]
        res = labbi_sym2_check(R)
        assert res["equal"] and res["metric_killed"]
        parts = decompose(R)
        names = sorted(parts)
        total = CurvOp.zero(n)
        for name in names:
            total = total + parts[name]
        assert total == R
        for i, a in enumerate(names):
            for b in names[i + 1:]:
                assert parts[a].frobenius(parts[b]) == 0, (a, b)


def _gates_open(spec, p):
    kernel = sum(mlt for v, mlt in spec.eigs if v == 0)
    image = comb(spec.n, 2) - kernel
    return kernel > rate_shifted(spec.n, p) and image > rate_integer(spec.n, p)


@criterion(6, "model curvature functionals")
def test_criterion_06_model_cp():
    for n in range(5, 41):
        spec, mu = sphere_spectrum(n)
        assert cp_value(spec, 1, mu) == Fr((n - 1) * (n - 4), 4)
        for p in range(2, 7):
            assert cp_value(spec, p, mu) == \
                Fr(n * n, 4) - (p + Fr(1, 4)) * n - p * (p - 2)
    for m in range(2, 13):
        spec, mu = cp_space_spectrum(m)
        for p in range(2, 7):
            if _gates_open(spec, p):
                assert cp_value(spec, p, mu) == \
                    Fr(m * m, 2) + (Fr(1, 2) - 4 * p - 2 * p * p) * m \
                    - 2 * p * (p - 2)
    for k in range(1, 9):
        spec, mu = hp_space_spectrum(k)
        for p in range(2, 7):
            if _gates_open(spec, p):
                if p <= 2 * k - 1:
                    want = (2 * k * k + 4 * (1 - 4 * p - 3 * p * p) * k
                            + 8 * p * (p + 1))
                else:
                    want = (2 * (1 - 8 * p) * k * k
                            + 4 * (1 + 2 * p - p * p) * k)
                assert cp_value(spec, p, mu) == want
    spec, mu = cap2_spectrum()
    for p in range(2, 7):
        assert cp_value(spec, p, mu) == 72 - 112 * p - 8 * p * p
    # monotone chain below scal/4 on random spectra
    rng = np.random.default_rng(404)
    n = 9
    N = comb(n, 2)
    for _ in range(500):
        vals = sorted(int(v) for v in rng.integers(-6, 7, size=N))
        spec = Spectrum(n, [(v, 1) for v in vals])
        assert nested_monotonicity_check(spec, mu_synthetic(spec), 5)["holds"]
    # surgery floor, with exact attainment once the integer rate fits
    for n in (8, 10, 13):
        for d in range(3, n + 1):
            spec, mu = surgery_spectrum(n, d)
            for p in range(1, 5):
                floor_val = Fr((d - 1) * (d - 2), 8) - p * (p + n - 2)
                got = cp_value(spec, p, mu)
                assert got >= floor_val
                if p >= 2 and rate_integer(n, p) <= comb(d - 1, 2):
                    assert got == floor_val


@criterion(7, "regenerated linear systems")
def test_criterion_07_linear_systems():
    sysd = pinch_system(4)
    d1, d2 = 2 ** 11 * 3 ** 4 * 5 ** 2 * 7, 2 ** 8 * 3 * 5 * 7
    assert sysd["partitions"] == [(4,), (2, 2)]
    assert [c * d1 for c in sysd["rows"]["ahat"]] == [-12, 13]
    assert [c * d2 for c in sysd["rows"]["ahat-wedge2"]] == [596, 101]
    assert sysd["det"] != 0

    sysd = pinch_system(5)
    d1 = 2 ** 11 * 3 ** 5 * 5 ** 2 * 7 * 11
    d2 = 2 ** 10 * 3 ** 5 * 5 ** 2 * 7 * 11
    assert sysd["partitions"] == [(5,), (3, 2)]
    assert [c * d1 for c in sysd["rows"]["ahat"]] == [-10, 21]
    assert [c * d2 for c in sysd["rows"]["ahat-wedge2"]] == [-650390, 35259]
    assert sysd["det"] != 0

    sysd = pinch_system(7)
    d1 = 2 ** 15 * 3 ** 6 * 5 ** 3 * 7 ** 2 * 11 * 13
    d2 = 2 ** 14 * 3 ** 5 * 5 ** 3 * 7 ** 2 * 11 * 13
    assert sysd["partitions"] == [(7,), (4, 3)]
    assert [c * d1 for c in sysd["rows"]["ahat"]] == [-140, 283]
    assert [c * d2 for c in sysd["rows"]["ahat-wedge2"]] == \
        [-4580660, -2272043]
    assert sysd["det"] != 0

    for level in (3, 4, 5):
        assert even_family_condition(level)["holds"]
    assert even_family_condition(2)["excluded"]


@criterion(8, "characteristic-number anchors")
def test_criterion_08_characteristic_numbers():
    for k in range(1, 7):
        assert genus_number(builtin_manifold("cpm(%d)" % (2 * k)), "s") \
            == 2 * k + 1
    for k in range(1, 6):
        assert genus_number(builtin_manifold("hpk(%d)" % k), "s") \
            == 2 * k + 2 - 4 ** k
    assert genus_number(builtin_manifold("milnor(2,3)"), "s") == -10
    assert genus_number(builtin_manifold("milnor(3,4)"), "s") == -35
    assert genus_number(builtin_manifold("k4"), "ahat") == -2
    for spec in ("hpk(2)", "hpk(3)", "cap2"):
        assert genus_number(builtin_manifold(spec), "ahat") == 0
    cap2 = builtin_manifold("cap2")
    assert genus_number(cap2, "L") == 1  # gate for the twisted value below
    assert twisted_ahat(builtin_manifold("hpk(2)"), "wedge", 1) == -1
    assert twisted_ahat(cap2, "wedge", 2) == 1


@criterion(9, "q-expansion anchors and thresholds")
def test_criterion_09_qseries():
    small = ("cpm(2)", "cpm(4)", "cpm(6)", "cpm(8)",
             "hpk(1)", "hpk(2)", "hpk(3)", "hpk(4)",
             "cap2", "k4",
             "milnor(2,3)", "milnor(2,5)", "milnor(3,4)",
             "milnor(2,7)", "milnor(3,6)", "milnor(4,5)")
    for name in small:
        man = builtin_manifold(name)
        k = man.k
        ahat = genus_number(man, "ahat")
        ahat_tm = twisted_ahat(man, "wedge", 1)
        w = witten_genus(man, 1)
        assert w[0] == ahat and w[1] == ahat_tm - 4 * k * ahat, name
        e = elliptic_genus_tilde(man, 1)
        assert e[0] == ahat and e[1] == 4 * k * ahat - ahat_tm, name
    for k in range(1, 15):
        assert witten_p_threshold(k) == \
            (k // 6 - 1 if k % 6 == 1 else k // 6) == \
            ord_threshold(2 * k, "SL2Z")
        assert elliptic_p_threshold(k) == k // 2 == \
            ord_threshold(2 * k, "Gamma0_2")


@criterion(10, "end-to-end certificates")
def test_criterion_10_end_to_end(tmp_path, capsys):
    data = {"dim": 32, "spin": True, "pont": {"(4,4)": "7", "(8)": "-3"}}
    mpath = tmp_path / "syn32.json"
    mpath.write_text(json.dumps(data))
    cpath = tmp_path / "cert.json"
    code = run(["certify-cobordism", "--manifold", str(mpath), "--fill-zeros",
                "--pinch", "--r", "20", "--json", str(cpath)])
    capsys.readouterr()
    assert code == 1
    cert = json.loads(cpath.read_text())
    assert cert["theorem"] == "even-family"
    assert sorted(cert["forced_zero"]) == ["(4,4)", "(8)"]
    assert cert["verdict"] == "fails"
    # the same hypotheses on an actually null-cobordant table certify it
    man = ManifoldData.from_json_dict({"dim": 32, "spin": True},
                                      fill_zeros=True)
    assert certify_cobordism(man, pinch=True, r=20)["verdict"] == "holds"

    code = run(["certify-cobordism", "--builtin", "hpk(2)", "--einstein",
                "--r", "5"])
    out = capsys.readouterr().out
    assert code == 1 and "verdict: fails" in out
