from fractions import Fraction as Fr

import pytest

from curvatura.genera import ManifoldData, builtin_manifold, genus_number, twisted_ahat
from curvatura.qseries import (
    QSeries,
    certify_elliptic_vanishing,
    certify_witten_vanishing,
    elliptic_bundle_series,
    elliptic_genus_tilde,
    elliptic_p_threshold,
    ord_threshold,
    product_one_minus_q,
    sym_series_ch,
    wedge_series_ch,
    witten_bundle_series,
    witten_genus,
    witten_p_threshold,
)
from curvatura.qseries import _product_one_minus_q_direct, _qmul, _series_inverse
from curvatura.symfun import partitions_of

SMALL_BUILTINS = (
    "cpm(2)", "cpm(4)", "cpm(6)", "cpm(8)",
    "hpk(1)", "hpk(2)", "hpk(3)", "hpk(4)",
    "cap2", "k4",
    "milnor(2,3)", "milnor(2,5)", "milnor(3,4)",
    "milnor(2,7)", "milnor(3,6)", "milnor(4,5)",
)


def test_thresholds():
    assert ord_threshold(24, "SL2Z") == 2
    assert ord_threshold(26, "SL2Z") == 1
    assert ord_threshold(16, "Gamma0_2") == 4
    assert witten_p_threshold(6) == 1
    assert witten_p_threshold(7) == 0
    assert witten_p_threshold(13) == 1
    # the piecewise formulas are exactly the modular order bounds
    for k in range(1, 15):
        assert witten_p_threshold(k) == ord_threshold(2 * k, "SL2Z")
        assert elliptic_p_threshold(k) == ord_threshold(2 * k, "Gamma0_2")
    with pytest.raises(ValueError):
        ord_threshold(13, "SL2Z")
    with pytest.raises(ValueError):
        ord_threshold(12, "Gamma0_3")


def test_qseries_type():
    qs = QSeries([1, "2/3", 0], 4, "SL2Z")
    assert qs.trunc == 2 and qs[1] == Fr(2, 3)
    assert qs.first_nonzero() == 0
    assert QSeries([0, 0], 4, "SL2Z").first_nonzero() is None
    d = qs.to_json_dict()
    assert d["coeffs"] == ["1", "2/3", "0"] and d["group"] == "SL2Z"
    with pytest.raises(ValueError):
        QSeries([1], 4, "PSL2Z")
    with pytest.raises(ValueError):
        QSeries([], 4, "SL2Z")


def test_prefactor_two_routes():
    for c, step in ((16, 1), (8, 2), (24, 1)):
        assert product_one_minus_q(c, step, 9) == \
            _product_one_minus_q_direct(c, step, 9)
    # the elliptic prefactor, with its negative half handled by inversion
    pref = _qmul(product_one_minus_q(16, 2, 8),
                 product_one_minus_q(-8, 1, 8), 8)
    direct = _qmul(_product_one_minus_q_direct(16, 2, 8),
                   _series_inverse(_product_one_minus_q_direct(8, 1, 8), 8), 8)
    assert pref == direct


def test_sym_wedge_series_anchors():
    from curvatura.genera import ch_tangent
    n, k = 8, 2
    chv = ch_tangent(n, "wedge", 1, k)
    sym = sym_series_ch(n, k, 1, 3)
    assert sym[0].terms == {(): Fr(1)}
    assert sym[1].terms == chv.terms
    wedge = wedge_series_ch(n, k, 1, 3, sign=-1)
    assert wedge[1].terms == (chv * Fr(-1)).terms
    # wedge_{-t} inverts Sym_t
    prod = _qmul(sym, wedge, 3)
    assert prod[0].terms == {(): Fr(1)}
    assert all(not prod[d].terms for d in (1, 2, 3))
    with pytest.raises(ValueError):
        sym_series_ch(n, k, 1, 13)
    with pytest.raises(ValueError):
        wedge_series_ch(n, k, 1, 3, sign=2)


def test_bundle_series_match_explicit_products():
    n, k, trunc = 8, 2, 4
    combined = witten_bundle_series(n, k, trunc)
    prod = sym_series_ch(n, k, 1, trunc)
    for ell in range(2, trunc + 1):
        prod = _qmul(prod, sym_series_ch(n, k, ell, trunc), trunc)
    assert all(combined[d].terms == prod[d].terms for d in range(trunc + 1))

    combined = elliptic_bundle_series(n, k, trunc)
    prod = wedge_series_ch(n, k, 1, trunc, sign=-1)
    prod = _qmul(prod, sym_series_ch(n, k, 2, trunc), trunc)
    prod = _qmul(prod, wedge_series_ch(n, k, 3, trunc, sign=-1), trunc)
    prod = _qmul(prod, sym_series_ch(n, k, 4, trunc), trunc)
    assert all(combined[d].terms == prod[d].terms for d in range(trunc + 1))


def test_first_coefficient_identities():
    for spec in SMALL_BUILTINS:
        man = builtin_manifold(spec)
        k = man.k
        ahat = genus_number(man, "ahat")
        ahat_tm = twisted_ahat(man, "wedge", 1)
        w = witten_genus(man, 2)
        assert w[0] == ahat, spec
        assert w[1] == ahat_tm - 4 * k * ahat, spec
        assert (w.weight, w.group) == (2 * k, "SL2Z")
        e = elliptic_genus_tilde(man, 2)
        assert e[0] == ahat, spec
        assert e[1] == 4 * k * ahat - ahat_tm, spec
        assert (e.weight, e.group) == (2 * k, "Gamma0_2")


def test_hpk2_frozen_values():
    man = builtin_manifold("hpk(2)")
    assert witten_genus(man, 1).coeffs == [0, -1]
    assert elliptic_genus_tilde(man, 1).coeffs == [0, 1]


def test_cap2_expansions():
    man = builtin_manifold("cap2")
    # string manifold with vanishing A-hat: weight-8 form with a_0 = 0 is 0,
    # and indeed every computed coefficient vanishes
    assert witten_genus(man, 4).coeffs == [0, 0, 0, 0, 0]
    # the elliptic side must stay nonzero (the signature is 1)
    assert elliptic_genus_tilde(man, 4).coeffs == [0, 0, 1, 16, 120]


def test_constant_term_multiplicative():
    from curvatura.genera import product_manifold
    a = builtin_manifold("hpk(1)")
    b = builtin_manifold("k4")
    ab = product_manifold(a, b)
    assert witten_genus(ab, 1)[0] == witten_genus(a, 1)[0] * witten_genus(b, 1)[0]
    assert elliptic_genus_tilde(ab, 1)[0] == \
        elliptic_genus_tilde(a, 1)[0] * elliptic_genus_tilde(b, 1)[0]


def test_budget_guards():
    man = builtin_manifold("hpk(2)")
    with pytest.raises(ValueError):
        witten_genus(man, 11)
    with pytest.raises(ValueError):
        elliptic_genus_tilde(man, 11)


def test_certify_refusals():
    out = certify_witten_vanishing(builtin_manifold("cpm(2)"))
    assert out["verdict"] == "refused" and "spin" in out["reason"]
    out = certify_elliptic_vanishing(builtin_manifold("milnor(2,3)"))
    assert out["verdict"] == "refused" and "spin" in out["reason"]
    # spin but p_1 does not vanish: only the witten route refuses
    out = certify_witten_vanishing(builtin_manifold("hpk(2)"))
    assert out["verdict"] == "refused" and "Pontryagin" in out["reason"]
    assert certify_elliptic_vanishing(builtin_manifold("hpk(2)"))["verdict"] != "refused"
    # truncation below the threshold cannot certify anything
    out = certify_elliptic_vanishing(builtin_manifold("cap2"), trunc=1)
    assert out["verdict"] == "refused" and "threshold" in out["reason"]


def test_certify_witnesses():
    out = certify_elliptic_vanishing(builtin_manifold("hpk(2)"))
    assert out["verdict"] == "nonzero"
    assert out["witness"] == {"index": 1, "value": "1"}
    assert out["threshold"] == 1

    out = certify_elliptic_vanishing(builtin_manifold("k4"))
    assert out["verdict"] == "nonzero"
    assert out["witness"] == {"index": 0, "value": "-2"}

    out = certify_elliptic_vanishing(builtin_manifold("cap2"))
    assert out["verdict"] == "nonzero"
    assert out["witness"] == {"index": 2, "value": "1"}
    assert out["threshold"] == 2 and out["curvature_exponent"] == 2

    syn = ManifoldData(8, {(2,): 1, (1, 1): 0}, spin=True, p1_zero=True,
                       label="syn8")
    out = certify_witten_vanishing(syn)
    assert out["verdict"] == "nonzero"
    assert out["witness"] == {"index": 0, "value": "-1/1440"}


def test_certify_vanishing_certificates():
    out = certify_witten_vanishing(builtin_manifold("cap2"))
    assert out["verdict"] == "vanishes" and out["threshold"] == 0
    assert "zero" in out["conclusion"]
    out = certify_elliptic_vanishing(
        ManifoldData(8, {(2,): 0, (1, 1): 0}, spin=True, p1_zero=True,
                     label="flat8"))
    assert out["verdict"] == "vanishes"
    assert "signature" in out["conclusion"]


def test_no_order_two_witness_exists_at_k6():
    # Candidate hunt for a 24-dimensional example with a_0 = a_1 = 0 but
    # a_2 != 0.  Among builtins only cap2 carries a vanishing p_1, and there
    # is no 8-dimensional string builtin to pair it with, so no builtin
    # product qualifies.  The synthetic hunt also fails, necessarily: on
    # tables supported away from part-1 partitions, the q^2 and q^3
    # functionals are linear combinations of (a_0, a_1) -- the space of
    # weight-12 forms is two-dimensional, and the expansion sees it.
    free = [(6,), (4, 2), (3, 3), (2, 2, 2)]
    allp = list(partitions_of(6))
    cols = {}
    for mu in free:
        pont = {nu: (1 if nu == mu else 0) for nu in allp}
        man = ManifoldData(24, pont, spin=True, p1_zero=True, label="unit")
        cols[mu] = witten_genus(man, 3).coeffs
    a = cols[(6,)]
    b = cols[(4, 2)]
    det = a[0] * b[1] - b[0] * a[1]
    assert det != 0
    for kernel_seed in ((3, 3), (2, 2, 2)):
        c = cols[kernel_seed]
        x = (-c[0] * b[1] + b[0] * c[1]) / det
        y = (-a[0] * c[1] + c[0] * a[1]) / det
        for d in (2, 3):
            assert x * a[d] + y * b[d] + c[d] == 0


def test_ghost24_certificate():
    # frozen kernel vector from the hunt above: a_0 = a_1 = 0 forces the
    # whole expansion down, and the certificate says so
    pont = {nu: 0 for nu in partitions_of(6)}
    pont[(6,)] = 277
    pont[(4, 2)] = 84
    pont[(3, 3)] = 100
    man = ManifoldData(24, pont, spin=True, p1_zero=True, label="ghost24")
    out = certify_witten_vanishing(man, trunc=3)
    assert out["verdict"] == "vanishes"
    assert out["coeffs"] == ["0", "0", "0", "0"]
    assert out["threshold"] == 1 and out["curvature_exponent"] == 1
