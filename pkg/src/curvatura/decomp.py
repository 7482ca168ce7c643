"""Irreducible decompositions over so(2m) of the bundles the positivity
machinery consumes: exterior and symmetric powers of the defining
representation and their products with a half-spinor representation.

All lists are multiplicity-free (each Weight appears once).  Half-spinor
products are implemented for even rank; the "-" half is obtained from the "+"
half by the outer flip (negating the last epsilon-coordinate everywhere).
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import comb

from .weights import Weight, threshold_integer, threshold_shifted

__all__ = [
    "weight_from_omega",
    "wedge_summands",
    "sym_summands",
    "sym0_weight",
    "spinor_weight",
    "spinor_wedge_summands",
    "spinor_sym_summands",
    "pw_min_over",
    "pw_min_wedge",
    "pw_min_sym",
    "pw_min_spinor_wedge",
    "pw_min_spinor_sym",
    "wedge_weight_multiset",
    "sym_weight_multiset",
]


def weight_from_omega(m: int, omega: dict) -> Weight:
    """Family-D weight from fundamental-weight coordinates {index: coeff}."""
    coeffs = [Fraction(0)] * m
    for idx, c in omega.items():
        c = Fraction(c)
        if c < 0:
            raise ValueError("fundamental coordinates must be >= 0")
        if c == 0:
            continue
        base = Weight.fundamental("D", m, idx).coeffs
        for i in range(m):
            coeffs[i] += c * base[i]
    return Weight("D", m, coeffs)


def _flip(w: Weight) -> Weight:
    return Weight("D", w.m, w.coeffs[:-1] + (-w.coeffs[-1],))


def spinor_weight(m: int, half: str = "+") -> Weight:
    return Weight.fundamental("D", m, m if half == "+" else m - 1)


# ---------------------------------------------------------------------------
# plain exterior and symmetric powers
# ---------------------------------------------------------------------------

def wedge_summands(m: int, p: int, half: str | None = None) -> list[Weight]:
    """Irreducible pieces of the p-forms on R^(2m).  For p < m a single piece;
    at p = m the forms split into two halves (pass half "+"/"-" for one of
    them, or None for both)."""
    if not 1 <= p <= m:
        raise ValueError("need 1 <= p <= m (higher forms mirror lower ones)")
    if p <= m - 2:
        return [weight_from_omega(m, {p: 1})]
    if p == m - 1:
        return [weight_from_omega(m, {m - 1: 1, m: 1})]
    plus = weight_from_omega(m, {m: 2})
    minus = weight_from_omega(m, {m - 1: 2})
    if half == "+":
        return [plus]
    if half == "-":
        return [minus]
    return [plus, minus]


def sym_summands(m: int, p: int) -> list[Weight]:
    """Pieces of the p-th symmetric power: one trace-free piece per q = p,
    p-2, p-4, ..., down to 0 or 1 (q = 0 is the trivial piece)."""
    if p < 1:
        raise ValueError("p must be >= 1")
    return [(Weight.zero("D", m) if q == 0 else weight_from_omega(m, {1: q}))
            for q in range(p, -1, -2)]


def sym0_weight(m: int, p: int) -> Weight:
    """Highest weight of the trace-free part of the p-th symmetric power."""
    return weight_from_omega(m, {1: p})


# ---------------------------------------------------------------------------
# half-spinor twists
# ---------------------------------------------------------------------------

def _require_even_rank(m: int):
    if m % 2 != 0:
        raise ValueError("spinor twists are implemented for even rank only")


def spinor_wedge_summands(m: int, p: int, spinor_half: str = "+",
                          wedge_half: str = "+") -> list[Weight]:
    """Decomposition of (half-spinors) tensor (p-forms), even rank.

    For p < m the p-forms are irreducible and wedge_half is ignored; at p = m
    the product is taken with the selected half of the middle forms.
    """
    _require_even_rank(m)
    if not 1 <= p <= m:
        raise ValueError("need 1 <= p <= m")
    if spinor_half == "-":
        # outer flip: swap the two spinor labels and the two middle-form halves
        other = "+" if wedge_half == "-" else "-"
        return [_flip(w) for w in spinor_wedge_summands(m, p, "+", other)]

    def spin(j):  # alternating spinor tail
        return m if j % 2 == 0 else m - 1

    if p <= m - 2:
        out = []
        for j in range(p + 1):
            om = {spin(j): 1}
            if p - j >= 1:
                om[p - j] = om.get(p - j, 0) + 1
            out.append(weight_from_omega(m, om))
        return out
    if p == m - 1:
        out = [weight_from_omega(m, {m - 1: 1, m: 2})]
        for j in range(1, m):
            om = {spin(j): 1}
            ell = m - j - 1
            if ell >= 1:
                om[ell] = om.get(ell, 0) + 1
            out.append(weight_from_omega(m, om))
        return out
    # p == m
    if wedge_half == "+":
        out = [weight_from_omega(m, {m: 3})]
        for j in range(1, m // 2 + 1):
            om = {m: 1}
            ell = m - 2 * j
            if ell >= 1:
                om[ell] = om.get(ell, 0) + 1
            out.append(weight_from_omega(m, om))
        return out
    out = [weight_from_omega(m, {m - 1: 2, m: 1})]
    for j in range(1, m // 2):
        om = {m - 1: 1}
        ell = m - 2 * j - 1
        if ell >= 1:
            om[ell] = om.get(ell, 0) + 1
        out.append(weight_from_omega(m, om))
    return out


def spinor_sym_summands(m: int, p: int, spinor_half: str = "+") -> list[Weight]:
    """Decomposition of (half-spinors) tensor (p-th symmetric power), even
    rank.  Built from the two-term rule for (half-spinors) tensor (trace-free
    q-tensors) applied to each piece of the symmetric power."""
    _require_even_rank(m)
    if p < 1:
        raise ValueError("p must be >= 1")
    if spinor_half == "-":
        return [_flip(w) for w in spinor_sym_summands(m, p, "+")]
    out = []
    for q in range(p, -1, -2):
        if q == 0:
            out.append(weight_from_omega(m, {m: 1}))
        else:
            out.append(weight_from_omega(m, {1: q, m: 1}))
            om = {m - 1: 1}
            if q - 1 >= 1:
                om[1] = q - 1
            out.append(weight_from_omega(m, om))
    return out


# ---------------------------------------------------------------------------
# minima of the ratio invariant, enumerated and in closed form
# ---------------------------------------------------------------------------

def pw_min_over(summands) -> Fraction:
    vals = [w.pw() for w in summands if not w.is_zero()]
    if not vals:
        raise ValueError("no nonzero summand")
    return min(vals)


def pw_min_wedge(n: int, p: int) -> Fraction:
    """Every piece of the p-forms has ratio invariant n - p."""
    return Fraction(n - p)


def pw_min_sym(n: int, p: int) -> Fraction:
    """Minimum over the symmetric-power pieces: (n + p - 2)/p."""
    return threshold_integer(n, p)


def pw_min_spinor_wedge(n: int, p: int) -> Fraction:
    """Minimum over the spinor-times-p-forms pieces:
    (n^2 + (8p - 1) n - 8 p (p - 1)) / (n + 16 p)."""
    return Fraction(n * n + (8 * p - 1) * n - 8 * p * (p - 1), n + 16 * p)


def pw_min_spinor_sym(n: int, p: int) -> Fraction:
    """Minimum over the spinor-times-symmetric-power pieces; coincides with
    the shifted-simplex floor."""
    return threshold_shifted(n, p)


# ---------------------------------------------------------------------------
# weight multisets of the plain powers (combinatorial, for cross checks)
# ---------------------------------------------------------------------------

def _defining_weights(family: str, m: int):
    out = []
    for i in range(m):
        e = [0] * m
        e[i] = 1
        out.append(tuple(e))
        e = [0] * m
        e[i] = -1
        out.append(tuple(e))
    if family == "B":
        out.append((0,) * m)
    return out

def wedge_weight_multiset(family: str, m: int, p: int) -> list[tuple]:
    """All weights (with multiplicity) of the p-forms: sums of p distinct
    defining weights, where "distinct" means distinct basis slots."""
    base = _defining_weights(family, m)
    out = []
    for combo in combinations(base, p):
        out.append(tuple(sum(x) for x in zip(*combo)))
    return out


def sym_weight_multiset(family: str, m: int, p: int) -> list[tuple]:
    base = _defining_weights(family, m)
    out = []
    for combo in combinations_with_replacement(base, p):
        out.append(tuple(sum(x) for x in zip(*combo)))
    return out


def wedge_dim(n: int, p: int) -> int:
    return comb(n, p)


def sym_dim(n: int, p: int) -> int:
    return comb(n + p - 1, p)
