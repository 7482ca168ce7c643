from fractions import Fraction as Fr

import pytest

from curvatura.symfun import (
    EvenSeries,
    PontPoly,
    bernoulli,
    genus_series,
    monomials_to_elementary,
    multiplicative_sequence,
    newton_powersum,
    parse_partition_key,
    partition_key,
    partitions_of,
    powersums_to_elementary,
)


def test_bernoulli_small():
    vals = [Fr(1), Fr(-1, 2), Fr(1, 6), Fr(0), Fr(-1, 30), Fr(0), Fr(1, 42),
            Fr(0), Fr(-1, 30), Fr(0), Fr(5, 66), Fr(0), Fr(-691, 2730)]
    for n, v in enumerate(vals):
        assert bernoulli(n) == v
    assert bernoulli(14) == Fr(7, 6)


def test_partitions_reverse_lex():
    assert partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert partitions_of(0) == [()]
    assert len(partitions_of(8)) == 22


def test_genus_series_values():
    ah = genus_series("ahat", 3)
    assert ah.coeffs[:3] == [Fr(1), Fr(-1, 24), Fr(7, 5760)]
    L = genus_series("L", 2)
    assert L.coeffs == [Fr(1), Fr(1, 3), Fr(-1, 45)]
    mil = genus_series(("milnor", 2), 3)
    assert mil.coeffs == [Fr(1), Fr(0), Fr(1), Fr(0)]


def test_newton_powersums():
    p1 = PontPoly.variable(1, 3)
    p2 = PontPoly.variable(2, 3)
    p3 = PontPoly.variable(3, 3)
    assert newton_powersum(1) == PontPoly(p1.terms, 1)
    assert PontPoly(newton_powersum(2).terms, 3) == p1 * p1 - 2 * p2
    assert PontPoly(newton_powersum(3).terms, 3) == p1 * p1 * p1 - 3 * p1 * p2 + 3 * p3
    # and through the wrapper
    q = powersums_to_elementary([0, 1], 2)
    assert q.coefficient((1, 1)) == 1 and q.coefficient((2,)) == -2


def test_monomials_to_elementary_roundtrip():
    # m_(2) = P_2 = p1^2 - 2 p2 ; m_(1,1) = e_2 = p2
    q = monomials_to_elementary({(2,): Fr(1)}, 2)
    assert q.coefficient((1, 1)) == 1 and q.coefficient((2,)) == -2
    q = monomials_to_elementary({(1, 1): Fr(1)}, 2)
    assert q.terms == {(2,): Fr(1)}
    # fewer variables than the degree: degree 3 in 2 variables
    q = monomials_to_elementary({(2, 1): Fr(1)}, 3, nvars=2)
    # m_(2,1) in 2 vars = e_1 e_2 - 3 e_3 but e_3 = 0 there: check e-part <= 2
    assert all(mu[0] <= 2 for mu in q.terms)


def test_multiplicative_sequence_ahat():
    ah = multiplicative_sequence(genus_series("ahat", 4), 4)
    assert ah[0].terms == {(): Fr(1)}
    assert ah[1].terms == {(1,): Fr(-1, 24)}
    assert ah[2].terms == {(1, 1): Fr(7, 5760), (2,): Fr(-4, 5760)}
    # grade 4 matches the classical table
    a4 = ah[4]
    den = 2 ** 15 * 3 ** 4 * 5 ** 2 * 7
    assert a4.coefficient((1, 1, 1, 1)) == Fr(381, den)
    assert a4.coefficient((2, 1, 1)) == Fr(-904, den)
    assert a4.coefficient((2, 2)) == Fr(208, den)
    assert a4.coefficient((3, 1)) == Fr(512, den)
    assert a4.coefficient((4,)) == Fr(-192, den)


def test_multiplicative_sequence_L():
    Ls = multiplicative_sequence(genus_series("L", 3), 3)
    assert Ls[1].terms == {(1,): Fr(1, 3)}
    assert Ls[2].terms == {(2,): Fr(7, 45), (1, 1): Fr(-1, 45)}
    assert Ls[3].coefficient((3,)) == Fr(62, 945)


def test_sequence_is_multiplicative():
    # K(Q)_d collapses products: check K_2(x*y sum) via the defining property
    # on a rank split: Q-series for milnor(1) gives K_d = e_d-like behaviour.
    mil = multiplicative_sequence(genus_series(("milnor", 1), 3), 3)
    assert mil[1].terms == {(1,): Fr(1)}
    assert mil[2].terms == {(2,): Fr(1)}
    assert mil[3].terms == {(3,): Fr(1)}


def test_stability_in_variable_count():
    # computing grade d in d vs d+2 variables must agree
    coeffs = {(2, 1): Fr(5), (1, 1, 1): Fr(-3), (3,): Fr(2)}
    a = monomials_to_elementary(coeffs, 3, nvars=3)
    b = monomials_to_elementary(coeffs, 3, nvars=5)
    assert a.terms == b.terms


def test_pontpoly_pairing_and_json():
    q = PontPoly({(2, 2): Fr(13, 2), (4,): Fr(-6)}, 4)
    assert q.pair({(2, 2): 36, (4,): 39}) == Fr(13, 2) * 36 - 6 * 39
    with pytest.raises(KeyError):
        q.pair({(2, 2): 36})
    d = q.to_json_dict()
    assert d == {"(2,2)": "13/2", "(4)": "-6"}
    assert parse_partition_key("(2,2)") == (2, 2)
    assert parse_partition_key("()") == ()
    assert partition_key(()) == "()"


def test_grade_truncation():
    p1 = PontPoly.variable(1, 2)
    prod = p1 * p1 * p1  # grade 3 exceeds the bound, must vanish
    assert prod.terms == {}
    assert (p1 * p1).terms == {(1, 1): Fr(1)}
