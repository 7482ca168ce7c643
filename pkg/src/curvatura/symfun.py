"""Exact symmetric-function plumbing shared by the characteristic-number layers.

Everything here is pure rational arithmetic (fractions.Fraction).  Polynomials in
Pontryagin classes are kept in the elementary basis: the class p_i plays the role
of the i-th elementary symmetric polynomial in the squared Chern roots.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

__all__ = [
    "Partition",
    "PontPoly",
    "EvenSeries",
    "bernoulli",
    "partitions_of",
    "genus_series",
    "multiplicative_sequence",
    "powersums_to_elementary",
    "newton_powersum",
    "monomials_to_elementary",
]

Partition = tuple  # weakly decreasing tuple of positive ints; () is the empty partition


def _check_partition(mu) -> Partition:
    mu = tuple(int(x) for x in mu)
    if any(x <= 0 for x in mu):
        raise ValueError("partition parts must be positive: %r" % (mu,))
    if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
        raise ValueError("partition parts must be weakly decreasing: %r" % (mu,))
    return mu


def partitions_of(k: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of k in reverse lexicographic order, e.g.
    partitions_of(4) == [(4,), (3,1), (2,2), (2,1,1), (1,1,1,1)].
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if max_part is None:
        max_part = k
    out: list[Partition] = []

    def rec(remaining: int, cap: int, prefix: tuple):
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(cap, remaining), 0, -1):
            rec(remaining - part, part, prefix + (part,))

    rec(k, max_part, ())
    return out


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n, convention B_1 = -1/2.

    Binomial recurrence: sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2 == 1:
        return Fraction(0)
    s = Fraction(0)
    for j in range(n):
        s += comb(n + 1, j) * bernoulli(j)
    return -s / (n + 1)


class EvenSeries:
    """Truncated even power series 1 + c_1 x^2 + c_2 x^4 + ...; coeffs[i] is the
    coefficient of x^(2i)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        if not coeffs or coeffs[0] != 1:
            raise ValueError("even series must have constant term 1")
        self.coeffs = coeffs

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if i < len(self.coeffs) else Fraction(0)

    def order(self) -> int:
        return len(self.coeffs) - 1

    def __repr__(self):
        return "EvenSeries(%r)" % (self.coeffs,)


def genus_series(kind, order: int) -> EvenSeries:
    """Coefficient list of the defining one-variable series of a genus.

    kind: "ahat"  -> (x/2)/sinh(x/2)
          "L"     -> x/tanh(x)
          ("milnor", j) -> 1 + x^(2j)
    Coefficients of the first two come from Bernoulli numbers.
    """
    if isinstance(kind, tuple) and kind[0] == "milnor":
        j = int(kind[1])
        if j <= 0:
            raise ValueError("milnor index must be positive")
        coeffs = [Fraction(0)] * (order + 1)
        coeffs[0] = Fraction(1)
        if j <= order:
            coeffs[j] = Fraction(1)
        return EvenSeries(coeffs)
    if kind == "ahat":
        # (x/2)/sinh(x/2) = 1 - sum_{l>=1} (2^{2l}-2) B_{2l} x^{2l} / (4^l (2l)!)
        coeffs = [Fraction(1)]
        for lev in range(1, order + 1):
            coeffs.append(-Fraction((2 ** (2 * lev) - 2), 4 ** lev)
                          * bernoulli(2 * lev) / factorial(2 * lev))
        return EvenSeries(coeffs)
    if kind == "L":
        # x/tanh(x) = sum_{l>=0} 2^{2l} B_{2l} x^{2l} / (2l)!
        coeffs = [Fraction(1)]
        for lev in range(1, order + 1):
            coeffs.append(Fraction(2 ** (2 * lev)) * bernoulli(2 * lev) / factorial(2 * lev))
        return EvenSeries(coeffs)
    raise ValueError("unknown genus kind: %r" % (kind,))


class PontPoly:
    """Polynomial in the classes p_1, p_2, ... with Fraction coefficients,
    truncated at total grade `grade_bound` (the grade of a monomial is the sum
    of its indices; p_I for a partition I has grade |I|)."""

    __slots__ = ("terms", "grade_bound")

    def __init__(self, terms=None, grade_bound: int = 0):
        self.grade_bound = int(grade_bound)
        clean: dict[Partition, Fraction] = {}
        if terms:
            for mu, c in dict(terms).items():
                mu = _check_partition(mu)
                if sum(mu) > self.grade_bound:
                    continue
                c = Fraction(c)
                if c != 0:
                    clean[mu] = c
        self.terms = clean

    # -- constructors -------------------------------------------------------
    @classmethod
    def constant(cls, c, grade_bound: int) -> "PontPoly":
        return cls({(): Fraction(c)}, grade_bound)

    @classmethod
    def variable(cls, i: int, grade_bound: int) -> "PontPoly":
        return cls({(i,): Fraction(1)}, grade_bound)

    # -- ring operations ----------------------------------------------------
    def __add__(self, other: "PontPoly") -> "PontPoly":
        bound = min(self.grade_bound, other.grade_bound)
        out = dict(self.terms)
        for mu, c in other.terms.items():
            out[mu] = out.get(mu, Fraction(0)) + c
        return PontPoly(out, bound)

    def __sub__(self, other: "PontPoly") -> "PontPoly":
        return self + (other * -1)

    def __mul__(self, other):
        if isinstance(other, PontPoly):
            bound = min(self.grade_bound, other.grade_bound)
            out: dict[Partition, Fraction] = {}
            for mu, c in self.terms.items():
                gmu = sum(mu)
                for nu, d in other.terms.items():
                    if gmu + sum(nu) > bound:
                        continue
                    key = tuple(sorted(mu + nu, reverse=True))
                    out[key] = out.get(key, Fraction(0)) + c * d
            return PontPoly(out, bound)
        return PontPoly({mu: c * Fraction(other) for mu, c in self.terms.items()},
                        self.grade_bound)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, PontPoly) and self.terms == other.terms
                and self.grade_bound == other.grade_bound)

    def __hash__(self):
        return hash((frozenset(self.terms.items()), self.grade_bound))

    # -- views --------------------------------------------------------------
    def coefficient(self, mu) -> Fraction:
        return self.terms.get(_check_partition(mu), Fraction(0))

    def grade_part(self, g: int) -> "PontPoly":
        return PontPoly({mu: c for mu, c in self.terms.items() if sum(mu) == g},
                        self.grade_bound)

    def scale_grades(self, factor_of_grade) -> "PontPoly":
        """Multiply each grade-g slice by factor_of_grade(g); used for Adams
        substitutions x -> s*x which scale grade g by s^(2g)."""
        return PontPoly({mu: c * factor_of_grade(sum(mu)) for mu, c in self.terms.items()},
                        self.grade_bound)

    def pair(self, numbers: dict) -> Fraction:
        """Pair the top-grade slice against a table of characteristic numbers.
        Raises KeyError listing absent partitions."""
        top = self.grade_part(self.grade_bound)
        missing = [mu for mu in top.terms if mu not in numbers]
        if missing:
            raise KeyError("missing characteristic numbers for partitions %s"
                           % sorted(missing))
        return sum((c * Fraction(numbers[mu]) for mu, c in top.terms.items()),
                   Fraction(0))

    def to_json_dict(self) -> dict:
        return {partition_key(mu): str(c)
                for mu, c in sorted(self.terms.items())}

    def __repr__(self):
        if not self.terms:
            return "PontPoly(0; grade<=%d)" % self.grade_bound
        bits = []
        for mu, c in sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0])):
            name = "1" if mu == () else "p" + partition_key(mu)
            bits.append("%s*%s" % (c, name))
        return " + ".join(bits) + "  (grade<=%d)" % self.grade_bound


def partition_key(mu: Partition) -> str:
    return "(" + ",".join(str(x) for x in mu) + ")"


def parse_partition_key(s: str) -> Partition:
    s = s.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError("bad partition key %r" % s)
    body = s[1:-1].strip()
    if not body:
        return ()
    return _check_partition(int(x) for x in body.split(","))


# ---------------------------------------------------------------------------
# Monomial basis <-> elementary basis, by exact linear algebra in few variables.
# A symmetric polynomial of degree d in nvars >= min(d, length) variables is
# determined by its monomial-pattern coefficients, and the products
# e_lam = prod e_{lam_i} form a basis indexed by partitions with parts <= nvars.
# ---------------------------------------------------------------------------

def _demand_key(pairs) -> tuple:
    # canonical multiset of positive column demands, as sorted (value, count)
    cnt: dict = {}
    for v, c in pairs:
        if v > 0 and c > 0:
            cnt[v] = cnt.get(v, 0) + c
    return tuple(sorted(cnt.items()))


def _e_to_m_row(lam: Partition, mus) -> dict:
    """Coefficient of the representative monomial y^mu in e_lam, for each mu.

    That coefficient counts 0-1 matrices with row sums lam and column sums mu
    (columns are the variables carrying the monomial's exponents).  Process one
    row at a time; only the multiset of remaining column demands matters.
    """
    memo: dict = {}

    def go(state: tuple, i: int) -> int:
        if i == len(lam):
            return 1 if not state else 0
        key = (state, i)
        got = memo.get(key)
        if got is not None:
            return got
        total = 0
        classes = list(state)

        def rec(j, rem, mult, acc):
            nonlocal total
            if rem == 0:
                total += mult * go(_demand_key(acc + classes[j:]), i + 1)
                return
            if j == len(classes):
                return
            v, c = classes[j]
            for take in range(min(c, rem) + 1):
                rec(j + 1, rem - take, mult * comb(c, take),
                    acc + [(v, c - take), (v - 1, take)])

        rec(0, lam[i], 1, [])
        memo[key] = total
        return total

    return {mu: go(_demand_key((v, 1) for v in mu), 0) for mu in mus}


@lru_cache(maxsize=None)
def _me_matrix(d: int, nvars: int):
    """Rows: partitions lam of d with parts <= nvars (the e_lam basis).
    Columns: partitions mu of d with at most nvars parts (monomial patterns).
    Entry: coefficient of the representative monomial y^mu in e_lam."""
    lams = [lam for lam in partitions_of(d) if not lam or lam[0] <= nvars]
    mus = [mu for mu in partitions_of(d) if len(mu) <= nvars]
    rows = {lam: _e_to_m_row(lam, mus) for lam in lams}
    return lams, mus, rows


def monomials_to_elementary(coeffs: dict, d: int, nvars: int | None = None,
                            grade_bound: int | None = None) -> PontPoly:
    """Rewrite a degree-d symmetric polynomial, given by its monomial-pattern
    coefficients {partition: Fraction}, in the elementary basis (p-classes).
    """
    if nvars is None:
        nvars = d
    if grade_bound is None:
        grade_bound = d
    if d == 0:
        return PontPoly.constant(coeffs.get((), Fraction(0)), grade_bound)
    lams, mus, rows = _me_matrix(d, nvars)
    for mu in coeffs:
        if len(mu) > nvars:
            raise ValueError("monomial pattern %r needs more than %d variables" % (mu, nvars))
    # solve sum_lam c_lam * rows[lam][mu] == coeffs[mu] for all mu
    m = len(mus)
    mat = [[Fraction(rows[lam][mu]) for lam in lams] for mu in mus]
    rhs = [Fraction(coeffs.get(mu, 0)) for mu in mus]
    sol = _solve_exact(mat, rhs, m)
    return PontPoly({lam: sol[j] for j, lam in enumerate(lams)}, grade_bound)


def _solve_exact(mat, rhs, m):
    # Gaussian elimination over Fractions; the systems here are tiny (<= p(8)=22)
    mat = [row[:] for row in mat]
    rhs = rhs[:]
    perm = list(range(m))
    for col in range(m):
        piv = next((r for r in range(col, m) if mat[r][col] != 0), None)
        if piv is None:
            raise ArithmeticError("singular monomial-to-elementary system")
        mat[col], mat[piv] = mat[piv], mat[col]
        rhs[col], rhs[piv] = rhs[piv], rhs[col]
        inv = 1 / mat[col][col]
        mat[col] = [x * inv for x in mat[col]]
        rhs[col] *= inv
        for r in range(m):
            if r != col and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[col])]
                rhs[r] -= f * rhs[col]
    del perm
    return rhs


@lru_cache(maxsize=None)
def newton_powersum(i: int) -> PontPoly:
    """Power sum P_i of the squared roots, written in the p-classes:
    P_1 = p1, P_2 = p1^2 - 2 p2, P_3 = p1^3 - 3 p1 p2 + 3 p3, ...
    Newton: P_i = (-1)^(i-1) i e_i + sum_{j=1}^{i-1} (-1)^(j-1) e_j P_{i-j}.
    """
    if i < 1:
        raise ValueError("power sum index must be >= 1")
    acc = PontPoly({(i,): Fraction((-1) ** (i - 1) * i)}, i)
    for j in range(1, i):
        ej = PontPoly({(j,): Fraction((-1) ** (j - 1))}, i)
        prev = newton_powersum(i - j)
        acc = acc + ej * PontPoly(prev.terms, i)
    return acc


def powersums_to_elementary(psums, k: int) -> PontPoly:
    """Rewrite sum_i psums[i-1] * P_i (P_i the degree-i power sum of squared
    roots) in the p-classes, up to grade k."""
    psums = list(psums)
    if len(psums) > k:
        raise ValueError("more power sums than the grade bound allows")
    acc = PontPoly({}, k)
    for i, c in enumerate(psums, start=1):
        c = Fraction(c)
        if c == 0:
            continue
        acc = acc + PontPoly(newton_powersum(i).terms, k) * c
    return acc


def multiplicative_sequence(series: EvenSeries, k: int) -> list[PontPoly]:
    """Grades 0..k of the multiplicative sequence attached to an even series Q.

    With Q(x) = 1 + a_1 x^2 + a_2 x^4 + ..., the grade-d polynomial is
    sum over partitions mu of d of (prod_j a_{mu_j}) m_mu(squared roots),
    rewritten in the p-classes.  Stable in >= d variables.
    """
    if series.order() < k:
        raise ValueError("series order %d below requested grade %d" % (series.order(), k))
    out = [PontPoly.constant(1, k)]
    for d in range(1, k + 1):
        coeffs = {}
        for mu in partitions_of(d):
            c = Fraction(1)
            for part in mu:
                c *= series[part]
            if c != 0:
                coeffs[mu] = c
        poly = monomials_to_elementary(coeffs, d, nvars=d, grade_bound=k)
        out.append(poly)
    return out
