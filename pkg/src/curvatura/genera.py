"""Characteristic numbers of closed manifolds: Pontryagin data, the A-hat,
signature, and power-sum genera, Chern characters of tangent-bundle
representations, twisted A-hat numbers, and cobordism certificates.

A manifold enters as its dimension 4k plus the table of Pontryagin numbers
indexed by partitions of k, together with two flags (spin, vanishing first
Pontryagin class) that gate the vanishing theorems.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .decomp import sym_weight_multiset, wedge_weight_multiset
from .symfun import (
    PontPoly,
    bernoulli,
    genus_series,
    monomials_to_elementary,
    multiplicative_sequence,
    newton_powersum,
    partition_key,
    partitions_of,
)

__all__ = [
    "ManifoldData",
    "builtin_manifold",
    "BUILTIN_FORMS",
    "product_manifold",
    "connected_sum",
    "ahat_polys",
    "genus_number",
    "ch_from_weights",
    "tangent_weights",
    "ch_tangent",
    "ch_tangent_adams",
    "twisted_ahat_poly",
    "twisted_ahat",
    "betti_survivors",
    "betti_forced_zero",
    "pinch_system",
    "family_system",
    "even_family_condition",
    "odd_family_condition",
    "certify_cobordism",
]


# ---------------------------------------------------------------------------
# manifold data
# ---------------------------------------------------------------------------

def _lenient_partition_key(key) -> tuple:
    # accept "(2,1)" in any part order, or an already-parsed tuple
    if isinstance(key, str):
        return tuple(sorted((int(x) for x in key.strip().strip("()").split(",") if x.strip()),
                            reverse=True))
    return tuple(sorted((int(x) for x in key), reverse=True))


class ManifoldData:
    """Closed oriented 4k-manifold, seen through its Pontryagin numbers."""

    __slots__ = ("dim", "pont", "spin", "p1_zero", "label")

    def __init__(self, dim: int, pont: dict, spin: bool = False,
                 p1_zero: bool = False, label: str = ""):
        self.dim = int(dim)
        if self.dim <= 0 or self.dim % 4 != 0:
            raise ValueError("dimension must be a positive multiple of 4")
        k = self.dim // 4
        table = {}
        for mu, val in pont.items():
            mu = tuple(sorted((int(x) for x in mu), reverse=True))
            if sum(mu) != k or any(x < 1 for x in mu):
                raise ValueError("partition %r does not have weight %d" % (mu, k))
            table[mu] = Fraction(val)
        missing = [mu for mu in partitions_of(k) if mu not in table]
        if missing:
            raise ValueError("missing Pontryagin numbers for partitions %s"
                             % [partition_key(mu) for mu in missing])
        self.pont = table
        self.spin = bool(spin)
        self.p1_zero = bool(p1_zero)
        if self.p1_zero:
            bad = [mu for mu, v in table.items() if 1 in mu and v != 0]
            if bad:
                raise ValueError("p1_zero contradicts nonzero numbers at %s"
                                 % [partition_key(mu) for mu in bad])
        self.label = str(label)

    @property
    def k(self) -> int:
        return self.dim // 4

    @classmethod
    def from_json_dict(cls, d: dict, fill_zeros: bool = False) -> "ManifoldData":
        dim = int(d["dim"])
        k = dim // 4
        pont = {_lenient_partition_key(key): Fraction(val)
                for key, val in dict(d.get("pont", {})).items()}
        if fill_zeros:
            for mu in partitions_of(k):
                pont.setdefault(mu, Fraction(0))
        return cls(dim, pont, spin=bool(d.get("spin", False)),
                   p1_zero=bool(d.get("p1_zero", False)),
                   label=str(d.get("label", "")))

    def to_json_dict(self) -> dict:
        return {"dim": self.dim,
                "pont": {partition_key(mu): str(v)
                         for mu, v in sorted(self.pont.items())},
                "spin": self.spin,
                "p1_zero": self.p1_zero,
                "label": self.label}

    def __repr__(self):
        return "ManifoldData(dim=%d, label=%r)" % (self.dim, self.label)


def _numbers_from_classes(classes: list, k: int) -> dict:
    """Pontryagin numbers when each class p_j is c_j times the j-th power of a
    fixed generator pairing to 1: p_I = prod c_{i}."""
    out = {}
    for mu in partitions_of(k):
        v = Fraction(1)
        for part in mu:
            v *= classes[part]
        out[mu] = v
    return out


def _complex_projective(m: int) -> ManifoldData:
    if m < 2 or m % 2 != 0:
        raise ValueError("complex projective: need an even complex dimension >= 2")
    k = m // 2
    classes = [Fraction(comb(m + 1, j)) for j in range(k + 1)]
    return ManifoldData(4 * k, _numbers_from_classes(classes, k),
                        spin=False, p1_zero=False, label="cpm(%d)" % m)


def _quaternionic_projective(k: int) -> ManifoldData:
    if k < 1:
        raise ValueError("quaternionic projective: need k >= 1")
    # total class (1+u)^(2k+2) (1+4u)^(-1), u the degree-4 generator
    classes = []
    for j in range(k + 1):
        c = sum(Fraction(comb(2 * k + 2, j - t)) * (-4) ** t
                for t in range(j + 1))
        classes.append(c)
    return ManifoldData(4 * k, _numbers_from_classes(classes, k),
                        spin=True, p1_zero=(classes[1] == 0),
                        label="hpk(%d)" % k)


def _octonionic_plane() -> ManifoldData:
    pont = {mu: Fraction(0) for mu in partitions_of(4)}
    pont[(2, 2)] = Fraction(36)
    pont[(4,)] = Fraction(39)
    return ManifoldData(16, pont, spin=True, p1_zero=True, label="cap2")


def _k4_surface() -> ManifoldData:
    return ManifoldData(4, {(1,): Fraction(48)}, spin=True, p1_zero=False,
                        label="k4")


class _TwoVarPoly:
    """Elements of Q[x, y] / (x^(xi+1), y^(yj+1)), dense Fraction grid."""

    __slots__ = ("xi", "yj", "c")

    def __init__(self, xi, yj, c=None):
        self.xi, self.yj = xi, yj
        self.c = c if c is not None else [[Fraction(0)] * (yj + 1)
                                          for _ in range(xi + 1)]

    def mul(self, other: "_TwoVarPoly") -> "_TwoVarPoly":
        out = _TwoVarPoly(self.xi, self.yj)
        for a in range(self.xi + 1):
            row = self.c[a]
            for b in range(self.yj + 1):
                v = row[b]
                if v == 0:
                    continue
                for a2 in range(min(other.xi, self.xi - a) + 1):
                    orow = other.c[a2]
                    for b2 in range(min(other.yj, self.yj - b) + 1):
                        w = orow[b2]
                        if w != 0:
                            out.c[a + a2][b + b2] += v * w
        return out

    def grade(self, d: int) -> "_TwoVarPoly":
        out = _TwoVarPoly(self.xi, self.yj)
        for a in range(self.xi + 1):
            for b in range(self.yj + 1):
                if a + b == d:
                    out.c[a][b] = self.c[a][b]
        return out


def _milnor_hypersurface(i: int, j: int) -> ManifoldData:
    """Degree-(1,1) hypersurface in the product of complex projective spaces
    of dimensions i and j; its power-sum number is -binomial(i+j, i)."""
    if i < 2 or j < 2:
        raise ValueError("milnor: need i, j >= 2")
    if (i + j) % 2 == 0:
        raise ValueError("milnor: need i + j odd for a dimension divisible by 4")
    k = (i + j - 1) // 2
    one = _TwoVarPoly(i, j)
    one.c[0][0] = Fraction(1)

    def binom_pow(var: str, power: int) -> _TwoVarPoly:
        # (1 + x^2)^power  resp. (1 + y^2)^power
        out = _TwoVarPoly(i, j)
        top = i if var == "x" else j
        for t in range(0, top // 2 + 1):
            if var == "x":
                out.c[2 * t][0] = Fraction(comb(power, t))
            else:
                out.c[0][2 * t] = Fraction(comb(power, t))
        return out

    hsq = _TwoVarPoly(i, j)  # (x+y)^2
    for a, b, v in ((2, 0, 1), (1, 1, 2), (0, 2, 1)):
        if a <= i and b <= j:
            hsq.c[a][b] = Fraction(v)
    inv = _TwoVarPoly(i, j)  # (1 + (x+y)^2)^(-1)
    inv.c[0][0] = Fraction(1)
    powh = one
    for t in range(1, (i + j) // 2 + 1):
        powh = powh.mul(hsq)
        for a in range(i + 1):
            for b in range(j + 1):
                inv.c[a][b] += (-1) ** t * powh.c[a][b]
    total = binom_pow("x", i + 1).mul(binom_pow("y", j + 1)).mul(inv)

    classes = {d: total.grade(2 * d) for d in range(k + 1)}
    pont = {}
    for mu in partitions_of(k):
        prod = one
        for part in mu:
            prod = prod.mul(classes[part])
        # pair against the hypersurface class x + y
        v = Fraction(0)
        if i - 1 >= 0:
            v += prod.c[i - 1][j]
        if j - 1 >= 0:
            v += prod.c[i][j - 1]
        pont[mu] = v
    return ManifoldData(4 * k, pont, spin=False, p1_zero=False,
                        label="milnor(%d,%d)" % (i, j))


BUILTIN_FORMS = ("cpm(m)", "hpk(k)", "cap2", "k4", "milnor(i,j)")

_BUILTIN_RE = re.compile(r"^([a-z0-9]+)(?:\(([-0-9,\s]*)\))?$")


def builtin_manifold(spec: str) -> ManifoldData:
    """Construct a named manifold: cpm(m), hpk(k), cap2, k4, or milnor(i,j)."""
    m = _BUILTIN_RE.match(spec.strip().lower())
    if not m:
        raise ValueError("cannot parse builtin manifold %r" % spec)
    name, argstr = m.group(1), m.group(2)
    args = [int(a) for a in argstr.split(",")] if argstr else []
    try:
        if name == "cpm" and len(args) == 1:
            return _complex_projective(args[0])
        if name == "hpk" and len(args) == 1:
            return _quaternionic_projective(args[0])
        if name == "cap2" and not args:
            return _octonionic_plane()
        if name == "k4" and not args:
            return _k4_surface()
        if name == "milnor" and len(args) == 2:
            return _milnor_hypersurface(*args)
    except ValueError:
        raise
    raise ValueError("unknown builtin %r; forms: %s" % (spec, ", ".join(BUILTIN_FORMS)))


def product_manifold(a: ManifoldData, b: ManifoldData) -> ManifoldData:
    """Cartesian product; Pontryagin numbers by splitting each part of the
    partition across the two factors (Whitney sum of the tangent bundles)."""
    ka, kb = a.k, b.k
    k = ka + kb
    pont = {}
    for mu in partitions_of(k):
        total = Fraction(0)
        # assign to each part a left portion 0..part; left portions must sum
        # to ka; nonzero portions form the factor partitions
        def rec(idx, left_parts, right_parts, left_sum):
            nonlocal total
            if left_sum > ka:
                return
            if idx == len(mu):
                if left_sum != ka:
                    return
                la = tuple(sorted(x for x in left_parts if x))
                rb = tuple(sorted(x for x in right_parts if x))
                total += a.pont[la] * b.pont[rb]
                return
            part = mu[idx]
            for take in range(part + 1):
                rec(idx + 1, left_parts + [take], right_parts + [part - take],
                    left_sum + take)
        rec(0, [], [], 0)
        pont[mu] = total
    return ManifoldData(a.dim + b.dim, pont, spin=a.spin and b.spin,
                        p1_zero=a.p1_zero and b.p1_zero,
                        label="(%s) x (%s)" % (a.label or "?", b.label or "?"))


def connected_sum(a: ManifoldData, b: ManifoldData) -> ManifoldData:
    if a.dim != b.dim:
        raise ValueError("connected summands must share dimension")
    pont = {mu: a.pont[mu] + b.pont[mu] for mu in a.pont}
    return ManifoldData(a.dim, pont, spin=a.spin and b.spin,
                        p1_zero=a.p1_zero and b.p1_zero,
                        label="(%s) # (%s)" % (a.label or "?", b.label or "?"))


# ---------------------------------------------------------------------------
# genus evaluation
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def ahat_polys(k: int) -> tuple:
    return tuple(multiplicative_sequence(genus_series("ahat", k), k))


@lru_cache(maxsize=None)
def _l_polys(k: int) -> tuple:
    return tuple(multiplicative_sequence(genus_series("L", k), k))


def genus_number(man: ManifoldData, kind: str) -> Fraction:
    k = man.k
    if kind == "ahat":
        poly = ahat_polys(k)[k]
    elif kind == "L":
        poly = _l_polys(k)[k]
    elif kind == "s":
        poly = newton_powersum(k)
    else:
        raise ValueError("genus kind must be ahat, L, or s")
    return poly.pair(man.pont)


# ---------------------------------------------------------------------------
# Chern characters of tangent-bundle representations, two independent routes
# ---------------------------------------------------------------------------

def ch_from_weights(weights, k: int) -> PontPoly:
    """Chern character of the bundle whose fiber representation has the given
    weight multiset (closed under sign flips), as a polynomial in the
    Pontryagin classes up to grade k."""
    weights = [tuple(Fraction(x) for x in w) for w in weights]
    acc = PontPoly.constant(len(weights), k)
    for d in range(1, k + 1):
        coeffs: dict = {}
        fact = Fraction(1, factorial(2 * d))
        for w in weights:
            # dominant all-even monomials x_0^(2 mu_1) x_1^(2 mu_2) ... of
            # total degree 2d; the other monomials repeat these by symmetry
            # (the multiset is closed under coordinate permutations)
            _dominant_even_terms(w, 2 * d, coeffs, fact)
        if coeffs:
            acc = acc + monomials_to_elementary(coeffs, d, nvars=d, grade_bound=k)
    return acc


def _dominant_even_terms(w, deg, coeffs, fact):
    """Add to `coeffs` the dominant-monomial coefficients of (w.x)^deg / deg!:
    exponent vectors that are even, positive exactly on an initial run of
    coordinates, and nonincreasing.  A weight whose early coordinates vanish
    cannot reach such a monomial."""
    run = 0
    while run < len(w) and w[run] != 0:
        run += 1
    if run == 0:
        return

    def rec(idx, remaining, last, exps):
        if remaining == 0:
            pattern = tuple(e // 2 for e in exps)
            c = _multinomial(deg, exps) * fact
            for x, e in zip(w, exps):
                c *= x ** e
            coeffs[pattern] = coeffs.get(pattern, Fraction(0)) + c
            return
        if idx >= run:
            return
        e = min(last, remaining)
        e -= e % 2
        while e >= 2:
            rec(idx + 1, remaining - e, e, exps + [e])
            e -= 2

    rec(0, deg, deg, [])


def _multinomial(total, parts) -> Fraction:
    out = Fraction(factorial(total))
    for p in parts:
        out /= factorial(p)
    return out


def tangent_weights(n: int, kind: str, p: int) -> list:
    """Weight multiset of wedge or sym powers of the complexified tangent
    bundle of an n-manifold (n even)."""
    if n % 2 != 0:
        raise ValueError("tangent-bundle representations here need even n")
    m = n // 2
    if kind == "wedge":
        return wedge_weight_multiset("D", m, p)
    if kind == "sym":
        return sym_weight_multiset("D", m, p)
    raise ValueError("rep kind must be wedge or sym")


@lru_cache(maxsize=None)
def ch_tangent(n: int, kind: str, p: int, k: int) -> PontPoly:
    return ch_from_weights(tangent_weights(n, kind, p), k)


def _ch_adams(chv: PontPoly, s: int) -> PontPoly:
    return chv.scale_grades(lambda g: Fraction(s) ** (2 * g))


def ch_tangent_adams(n: int, kind: str, p: int, k: int) -> PontPoly:
    """Same Chern characters through the Adams-operation recursions; used as
    an independent cross-check of the weight expansion."""
    chv = ch_tangent(n, "wedge", 1, k)  # complexified tangent bundle itself
    if p == 0:
        return PontPoly.constant(1, k)
    prev = [PontPoly.constant(1, k)]
    for q in range(1, p + 1):
        acc = PontPoly.constant(0, k)
        for s in range(1, q + 1):
            term = _ch_adams(chv, s) * prev[q - s]
            if kind == "wedge":
                term = term * Fraction((-1) ** (s - 1))
            acc = acc + term
        prev.append(acc * Fraction(1, q))
    return prev[p]


@lru_cache(maxsize=None)
def twisted_ahat_poly(n: int, kind: str, p: int) -> PontPoly:
    """Top-grade polynomial of the A-hat genus twisted by wedge/sym powers of
    the complexified tangent bundle."""
    if n % 4 != 0:
        raise ValueError("dimension must be a multiple of 4")
    k = n // 4
    dens = ahat_polys(k)
    acc = PontPoly.constant(0, k)
    for g, poly in enumerate(dens):
        acc = acc + PontPoly(poly.terms, k)
    return (acc * ch_tangent(n, kind, p, k)).grade_part(k)


def twisted_ahat(man: ManifoldData, kind: str, p: int) -> Fraction:
    return twisted_ahat_poly(man.dim, kind, p).pair(man.pont)


# ---------------------------------------------------------------------------
# vanishing systems and cobordism certificates
# ---------------------------------------------------------------------------

def betti_survivors(n: int, r) -> list:
    """Indices i whose degree-4i cohomology can survive the curvature
    hypothesis with parameter r: harmonic forms are killed in degrees <= n-r
    and >= r, so only n-r < 4i < r remains, plus the top index n/4."""
    if n % 4 != 0:
        raise ValueError("dimension must be a multiple of 4")
    r = Fraction(r)
    k = n // 4
    keep = {i for i in range(1, k + 1) if n - r < 4 * i < r}
    keep.add(k)
    return sorted(keep)


def betti_forced_zero(n: int, r) -> list:
    """Complement view of betti_survivors: indices i < n/4 whose Pontryagin
    class is forced to vanish rationally."""
    alive = set(betti_survivors(n, r))
    return sorted(i for i in range(1, n // 4 + 1) if i not in alive)


def _system_partitions(k: int, survivors) -> list:
    allowed = set(survivors)
    return [mu for mu in partitions_of(k) if set(mu) <= allowed]


def _system_rows(k: int, parts, twists) -> dict:
    n = 4 * k
    rows = {"ahat": [ahat_polys(k)[k].coefficient(mu) for mu in parts]}
    for kind, p in twists:
        poly = twisted_ahat_poly(n, kind, p)
        rows["ahat-%s%d" % (kind, p)] = [poly.coefficient(mu) for mu in parts]
    return rows


def _det2(rows) -> Fraction:
    (a, b), (c, d) = rows
    return a * d - b * c


def pinch_wedge2_threshold(k: int) -> Fraction:
    return Fraction(4 * k * k + 15 * k - 4, k + 8)


def pinch_system(k: int) -> dict:
    """The two-condition linear system (plain and wedge-square twisted A-hat)
    on the partitions surviving the two-form pinching hypothesis."""
    parts = _system_partitions(k, betti_survivors(4 * k, pinch_wedge2_threshold(k)))
    rows = _system_rows(k, parts, [("wedge", 2)])
    out = {"partitions": parts, "rows": rows}
    if len(parts) == 2:
        out["det"] = _det2([rows["ahat"], rows["ahat-wedge2"]])
    return out


def family_system(k: int) -> dict:
    """The two-condition system (plain and tangent-twisted A-hat) used by the
    even/odd dimension families; k = 2 runs the same system at r = 5."""
    if k < 2:
        raise ValueError("family system needs k >= 2")
    if k == 2:
        r = 5
    else:
        r = 2 * k + 4 if k % 2 == 0 else 2 * k + 6
    parts = _system_partitions(k, betti_survivors(4 * k, r))
    rows = _system_rows(k, parts, [("wedge", 1)])
    out = {"partitions": parts, "rows": rows, "r": Fraction(r)}
    if len(parts) == 2:
        out["det"] = _det2([rows["ahat"], rows["ahat-wedge1"]])
    out["bernoulli"] = (even_family_condition(k // 2) if k % 2 == 0
                        else odd_family_condition((k - 1) // 2))
    return out


def even_family_condition(l: int) -> dict:
    """Nondegeneracy of the even-dimension family at k = 2l."""
    holds = bernoulli(2 * l) != bernoulli(4 * l)
    return {"l": l, "holds": holds, "excluded": not holds}


def odd_family_condition(l: int) -> dict:
    """Nondegeneracy of the odd-dimension family at k = 2l + 1."""
    b2, b2n, b4 = bernoulli(2 * l), bernoulli(2 * l + 2), bernoulli(4 * l + 2)
    val = (-(4 * l + 2) * b2 * b2n + (2 * l + 2) * b2 * b4 + 2 * l * b2n * b4)
    return {"l": l, "holds": val != 0, "excluded": val == 0, "value": val}


def _theorem_dispatch(k: int, einstein: bool, pinch: bool, r):
    """Choose the applicable vanishing theorem; returns (tag, twists, r_ok)
    or an explanatory string."""
    if k == 1:
        return ("curvature-positivity-vanishing", [], True)
    if k == 2:
        if not einstein:
            return "dimension 8 needs the einstein hypothesis"
        if r is None or r > 5:
            return "dimension 8 needs r <= 5"
        return ("einstein-dim8", [("wedge", 1)], True)
    if k == 3:
        if r is None or r > 8:
            return "dimension 12 needs r <= 8"
        return ("dim12-vanishing", [], True)
    if k in (4, 5, 7):
        if not pinch:
            return "dimension %d needs the pinching hypothesis" % (4 * k)
        if r is None or r > pinch_wedge2_threshold(k):
            return "dimension %d needs r <= %s" % (4 * k, pinch_wedge2_threshold(k))
        return ("wedge2-pinch-family", [("wedge", 2)], True)
    if k >= 6 and k % 2 == 0:
        if not pinch:
            return "even family needs the pinching hypothesis"
        if r is None or r > 2 * k + 4:
            return "even family needs r <= %d" % (2 * k + 4)
        return ("even-family", [("wedge", 1)], True)
    if k >= 9 and k % 2 == 1:
        if not pinch:
            return "odd family needs the pinching hypothesis"
        if r is None or r > 2 * k + 6:
            return "odd family needs r <= %d" % (2 * k + 6)
        return ("odd-family", [("wedge", 1)], True)
    return "no applicable vanishing theorem for dimension %d" % (4 * k)


def certify_cobordism(man: ManifoldData, einstein: bool = False,
                      pinch: bool = False, r=None) -> dict:
    """Certificate that the stored Pontryagin numbers are compatible (or not)
    with the curvature hypotheses: the applicable vanishing theorem forces the
    surviving numbers to zero whenever its linear system is nondegenerate."""
    report = {"dim": man.dim, "label": man.label,
              "hypotheses": {"einstein": bool(einstein), "pinch": bool(pinch),
                             "r": None if r is None else str(Fraction(r))}}
    if not man.spin:
        report.update(verdict="inconclusive", reason="manifold is not spin")
        return report
    k = man.k
    got = _theorem_dispatch(k, einstein, pinch, Fraction(r) if r is not None else None)
    if isinstance(got, str):
        report.update(verdict="inconclusive", reason=got)
        return report
    tag, twists, _ = got
    report["theorem"] = tag
    if r is not None:
        survivors = betti_survivors(man.dim, Fraction(r))
    else:
        survivors = sorted(set(range(1, k + 1)))
    parts = _system_partitions(k, survivors)
    rows = _system_rows(k, parts, twists)
    report["unknowns"] = [partition_key(mu) for mu in parts]
    report["rows"] = {name: [str(c) for c in row] for name, row in rows.items()}

    # numbers outside the surviving pattern set are forced to vanish directly
    betti_violations = [partition_key(mu) for mu, v in man.pont.items()
                        if mu not in parts and v != 0]
    # the genus conditions themselves, evaluated on the manifold
    values = {"ahat": genus_number(man, "ahat")}
    for kind, p in twists:
        values["ahat-%s%d" % (kind, p)] = twisted_ahat(man, kind, p)
    report["values"] = {name: str(v) for name, v in values.items()}

    mat = [rows[name] for name in rows]
    forced = _null_space_trivial(mat, len(parts))
    report["forced_zero"] = [partition_key(mu) for mu in parts] if forced else []
    if len(parts) == 2 and len(mat) == 2:
        report["det"] = str(_det2(mat))

    genus_violations = [name for name, v in values.items() if v != 0]
    report["violations"] = {"betti": betti_violations, "genus": genus_violations}
    report["verdict"] = "fails" if (betti_violations or genus_violations) else "holds"
    return report


def _null_space_trivial(mat, ncols: int) -> bool:
    """Exact rank test: True when the rows span all of Q^ncols."""
    rows = [list(r) for r in mat]
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank == ncols
