"""Dominant weights of so(n) and u(m) and their basic invariants.

Weights are stored in epsilon-coordinates (the standard orthonormal basis of
the dual Cartan).  Families:

  "D"  so(2m),   m >= 2   coords all integers or all half-odd integers
  "B"  so(2m+1), m >= 1   same two lattices
  "U"  u(m),     m >= 1   integer coords, weakly decreasing (no positivity
                          at the tail: the last entries may be negative)

The eigenvalue-ratio invariant of a nonzero dominant weight is
    pw(lam) = <lam, lam + 2 rho> / <lam, lam>,
capped at the dimension of the acting Lie algebra.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

__all__ = [
    "Weight",
    "dim_adjoint",
    "dominant_simplex",
    "simplex_scan",
    "SimplexScan",
    "threshold_integer",
    "threshold_shifted",
    "verify_simplex_bounds",
]

_FAMILIES = ("B", "D", "U")


def dim_adjoint(family: str, m: int) -> int:
    if family == "D":
        n = 2 * m
        return n * (n - 1) // 2
    if family == "B":
        n = 2 * m + 1
        return n * (n - 1) // 2
    if family == "U":
        return m * m
    raise ValueError("unknown family %r" % family)


class Weight:
    __slots__ = ("family", "m", "coeffs")

    def __init__(self, family: str, m: int, coeffs):
        if family not in _FAMILIES:
            raise ValueError("family must be one of %s" % (_FAMILIES,))
        m = int(m)
        if m < 1 or (family == "D" and m < 2):
            raise ValueError("rank %d too small for family %s" % (m, family))
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != m:
            raise ValueError("expected %d coordinates, got %d" % (m, len(coeffs)))
        if family == "U":
            if any(c.denominator != 1 for c in coeffs):
                raise ValueError("u(m) weights have integer coordinates")
        else:
            doubled = [2 * c for c in coeffs]
            if any(d.denominator != 1 for d in doubled):
                raise ValueError("so weights lie in (1/2) Z per coordinate")
            parities = {int(d) % 2 for d in doubled}
            if len(parities) > 1:
                raise ValueError("coordinates must be all integral or all half-odd")
        self.family = family
        self.m = m
        self.coeffs = coeffs

    # -- constructors --------------------------------------------------------
    @classmethod
    def zero(cls, family: str, m: int) -> "Weight":
        return cls(family, m, (0,) * m)

    @classmethod
    def fundamental(cls, family: str, m: int, idx: int) -> "Weight":
        """idx-th fundamental weight, 1-based (Bourbaki order for B/D)."""
        if family == "D":
            if not 1 <= idx <= m:
                raise ValueError("index out of range")
            if idx <= m - 2:
                return cls(family, m, (1,) * idx + (0,) * (m - idx))
            half = Fraction(1, 2)
            if idx == m - 1:
                return cls(family, m, (half,) * (m - 1) + (-half,))
            return cls(family, m, (half,) * m)
        if family == "B":
            if not 1 <= idx <= m:
                raise ValueError("index out of range")
            if idx <= m - 1:
                return cls(family, m, (1,) * idx + (0,) * (m - idx))
            return cls(family, m, (Fraction(1, 2),) * m)
        raise ValueError("fundamental weights implemented for B and D only")

    @classmethod
    def hodge_pair(cls, m: int, p: int, q: int) -> "Weight":
        """Highest weight of the primitive (p,q)-form representation of u(m):
        p leading ones, q trailing minus-ones.  Needs p + q <= m."""
        if p < 0 or q < 0 or p + q > m:
            raise ValueError("need p, q >= 0 and p + q <= m")
        return cls("U", m, (1,) * p + (0,) * (m - p - q) + (-1,) * q)

    @classmethod
    def from_json_dict(cls, d: dict) -> "Weight":
        return cls(d["family"], int(d["m"]), [Fraction(c) for c in d["coeffs"]])

    def to_json_dict(self) -> dict:
        return {"family": self.family, "m": self.m,
                "coeffs": [str(c) for c in self.coeffs]}

    # -- structure -----------------------------------------------------------
    @property
    def n(self) -> int:
        """Dimension of the underlying real representation space: 2m or 2m+1
        (for u(m) the ambient real dimension 2m)."""
        return 2 * self.m + (1 if self.family == "B" else 0)

    def rho(self) -> tuple:
        m = self.m
        if self.family == "D":
            return tuple(Fraction(m - i) for i in range(1, m + 1))
        if self.family == "B":
            return tuple(Fraction(2 * (m - i) + 1, 2) for i in range(1, m + 1))
        return tuple(Fraction(m - 2 * j + 1, 2) for j in range(1, m + 1))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_dominant(self) -> bool:
        a = self.coeffs
        if any(a[i] < a[i + 1] for i in range(self.m - 1)):
            return False
        if self.family == "B":
            return a[-1] >= 0
        if self.family == "D":
            return self.m >= 2 and a[-2] >= abs(a[-1])
        return True

    def _positive_roots(self):
        m = self.m
        roots = []
        for i, j in combinations(range(m), 2):
            roots.append({i: 1, j: -1})
            if self.family in ("B", "D"):
                roots.append({i: 1, j: 1})
        if self.family == "B":
            for i in range(m):
                roots.append({i: 1})
        return roots

    # -- invariants ----------------------------------------------------------
    def norm_sq(self) -> Fraction:
        return sum((c * c for c in self.coeffs), Fraction(0))

    def casimir(self) -> Fraction:
        """<lam, lam + 2 rho>, normalized so <eps_i, eps_j> = delta_ij."""
        rho = self.rho()
        return sum((c * (c + 2 * r) for c, r in zip(self.coeffs, rho)), Fraction(0))

    def pw(self) -> Fraction:
        """Casimir over squared norm, capped at dim of the acting algebra."""
        if self.is_zero():
            raise ValueError("invariant undefined for the zero weight")
        raw = self.casimir() / self.norm_sq()
        cap = Fraction(dim_adjoint(self.family, self.m))
        return raw if raw < cap else cap

    def weyl_dim(self) -> int:
        if not self.is_dominant():
            raise ValueError("dimension formula needs a dominant weight")
        rho = self.rho()
        lam_rho = [c + r for c, r in zip(self.coeffs, rho)]
        num = Fraction(1)
        den = Fraction(1)
        for root in self._positive_roots():
            num *= sum(lam_rho[i] * s for i, s in root.items())
            den *= sum(rho[i] * s for i, s in root.items())
        d = num / den
        assert d.denominator == 1 and d > 0
        return int(d)

    def rep_type(self) -> str:
        """Self-duality type of the so(2m) irrep: "real", "complex" or
        "quaternionic".  For odd rank the dual flips the sign of the last
        coordinate, so the rep is complex unless that coordinate vanishes;
        self-dual reps are quaternionic exactly when <lam, 2 rho> is odd."""
        if self.family != "D":
            raise ValueError("type classification implemented for family D only")
        if not self.is_dominant():
            raise ValueError("need a dominant weight")
        m = self.m
        if m % 2 == 1:
            return "complex" if self.coeffs[-1] != 0 else "real"
        pairing = sum((2 * (m - j) * c for j, c in enumerate(self.coeffs, start=1)),
                      Fraction(0))
        assert pairing.denominator == 1
        return "quaternionic" if int(pairing) % 2 == 1 else "real"

    # -- misc ----------------------------------------------------------------
    def __eq__(self, other):
        return (isinstance(other, Weight) and self.family == other.family
                and self.m == other.m and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.family, self.m, self.coeffs))

    def __repr__(self):
        return "Weight(%r, %d, (%s))" % (
            self.family, self.m, ", ".join(str(c) for c in self.coeffs))


# ---------------------------------------------------------------------------
# Simplex scans.  The integer simplex of size p collects dominant integral
# weights with coordinate sum <= p (scanning a_m >= 0; for family D the mirror
# weight with a_m < 0 has the same Casimir, norm and dimension, so extremes are
# unaffected).  The shifted simplex adds 1/2 to every coordinate.
# ---------------------------------------------------------------------------

def dominant_simplex(m: int, p: int):
    """Yield integer tuples a_1 >= ... >= a_m >= 0 with sum <= p."""
    def rec(i, cap, left, prefix):
        if i == m:
            yield prefix
            return
        for a in range(min(cap, left), -1, -1):
            yield from rec(i + 1, a, left - a, prefix + (a,))
    yield from rec(0, p, p, ())


@dataclass
class SimplexScan:
    count: int
    pw_min: Fraction
    pw_argmin: Weight
    cas_min: Fraction
    cas_max: Fraction
    cas_argmax: Weight


def simplex_scan(family: str, m: int, p: int, lattice: str = "integer") -> SimplexScan:
    """Extremes of the ratio invariant and Casimir over a weight simplex.

    lattice "integer": dominant integral weights, coordinate sum <= p.
    lattice "shifted": the same set shifted by (1/2, ..., 1/2); every entry
    then sits in the half-odd lattice and the smallest coordinate is 1/2.
    """
    if lattice not in ("integer", "shifted"):
        raise ValueError("lattice must be 'integer' or 'shifted'")
    if family not in ("B", "D"):
        raise ValueError("simplex scan is for the orthogonal families")
    shift = Fraction(1, 2) if lattice == "shifted" else Fraction(0)
    count = 0
    pw_min = pw_arg = None
    cas_min = cas_max = cas_argmax = None
    for a in dominant_simplex(m, p):
        w = Weight(family, m, tuple(x + shift for x in a))
        count += 1
        cas = w.casimir()
        if cas_min is None or cas < cas_min:
            cas_min = cas
        if cas_max is None or cas > cas_max:
            cas_max, cas_argmax = cas, w
        if not w.is_zero():
            r = w.pw()
            if pw_min is None or r < pw_min:
                pw_min, pw_arg = r, w
    return SimplexScan(count, pw_min, pw_arg, cas_min, cas_max, cas_argmax)


def threshold_integer(n: int, p: int) -> Fraction:
    """Floor of the ratio invariant over the nonzero integer simplex of size p
    in so(n): (n + p - 2)/p."""
    if p < 1:
        raise ValueError("p must be >= 1")
    return Fraction(n + p - 2, p)


def threshold_shifted(n: int, p: int) -> Fraction:
    """Floor of the ratio invariant over the shifted simplex of size p in
    so(n): (n^2 + (8p - 1) n + 8 p (p - 1)) / (n + 8 p (p + 1))."""
    if p < 1:
        raise ValueError("p must be >= 1")
    return Fraction(n * n + (8 * p - 1) * n + 8 * p * (p - 1),
                    n + 8 * p * (p + 1))


class SimplexBudgetError(RuntimeError):
    """Enumeration cut short; .partial carries what was scanned so far."""

    def __init__(self, msg: str, partial: dict):
        super().__init__(msg)
        self.partial = partial


def verify_simplex_bounds(n: int, p: int, budget: int = 500000) -> dict:
    """Exhaustive check of the ratio and Casimir bounds over both weight
    simplices of so(n), n = 4k:

      integer lattice : pw >= (n + p - 2)/p          and 0 <= Cas <= p(n+p-2)
      shifted lattice : pw >= the shifted-floor rate and
                        n(n-1)/8 <= Cas <= p(n+p-1) + n(n-1)/8

    Returns counts, extremes and the extremizing weights; every comparison is
    exact.  Scanning more than `budget` weights raises SimplexBudgetError with
    the partial report attached.
    """
    if n % 4 != 0 or n < 4:
        raise ValueError("need n divisible by 4")
    if p < 1:
        raise ValueError("p must be >= 1")
    m = n // 2
    report = {"n": n, "p": p, "holds": True, "backend": "exact"}
    bounds = {
        "integer": (threshold_integer(n, p), Fraction(0),
                    Fraction(p * (n + p - 2))),
        "shifted": (threshold_shifted(n, p), Fraction(n * (n - 1), 8),
                    Fraction(p * (n + p - 1)) + Fraction(n * (n - 1), 8)),
    }
    scanned = 0
    for lattice, (pw_floor, cas_lo, cas_hi) in bounds.items():
        shift = Fraction(1, 2) if lattice == "shifted" else Fraction(0)
        count = 0
        pw_min = pw_arg = None
        cas_min = cas_max = None
        ok = True
        for a in dominant_simplex(m, p):
            scanned += 1
            if scanned > budget:
                raise SimplexBudgetError(
                    "simplex enumeration exceeded the budget of %d weights"
                    % budget, report)
            w = Weight("D", m, tuple(x + shift for x in a))
            count += 1
            cas = w.casimir()
            cas_min = cas if cas_min is None else min(cas_min, cas)
            cas_max = cas if cas_max is None else max(cas_max, cas)
            if not (cas_lo <= cas <= cas_hi):
                ok = False
            if not w.is_zero():
                r = w.pw()
                if pw_min is None or r < pw_min:
                    pw_min, pw_arg = r, w
                if r < pw_floor:
                    ok = False
        report[lattice] = {
            "count": count, "pw_floor": pw_floor, "pw_min": pw_min,
            "pw_argmin": pw_arg, "cas_range": (cas_lo, cas_hi),
            "cas_min": cas_min, "cas_max": cas_max,
            "floor_attained": pw_min == pw_floor, "holds": ok,
        }
        report["holds"] = report["holds"] and ok
    return report
