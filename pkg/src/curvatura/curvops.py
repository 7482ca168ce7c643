"""Curvature operators on two-forms, their eigenvalue functionals, and the
Weitzenboeck curvature terms of representations.

Conventions (calibrated once, used by every caller):

* Lambda^2 R^n carries the basis {e_i ^ e_j : i < j} in lexicographic order,
  declared orthonormal; pair_basis(n) fixes the index map.
* The four-tensor view is T_ijkl = <R(e_i ^ e_j), e_k ^ e_l>, extended
  antisymmetrically in each slot pair.
* Ric_uv = sum_i T_iuiv and scal = 2 tr(R); the identity operator then has
  Ric = (n-1) Id and scal = n(n-1), the round-sphere normalization.
* Weitzenboeck term: K(R, rep) = -sum_a dpi(R X_a) dpi(X_a) over an
  orthonormal basis {X_a} of so(n).  K(Id, rep) is the Casimir action.
* The product <.,.> with the metric of a symmetric 2-tensor h is the operator
  (i j),(k l) |-> h_ik d_jl + h_jl d_ik - h_il d_jk - h_jk d_il, calibrated so
  that h = g gives twice the identity.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb, floor, gcd

import numpy as np

from .exactmat import ExactMatrix
from .repmats import Rep, pair_basis, pair_index, tensor_rep

__all__ = [
    "CurvOp",
    "Spectrum",
    "kn_with_metric",
    "lambda4_part",
    "bianchi_project",
    "random_bianchi",
    "random_symmetric",
    "decompose",
    "sigma_of_spectrum",
    "sigma_float",
    "mu_synthetic",
    "rate_shifted",
    "rate_integer",
    "cp_value",
    "cp_values",
    "nested_monotonicity_check",
    "weitzenbock",
    "casimir_matrix",
    "twisted_term",
    "split_check",
    "lambda_min_float",
    "lower_bound_check",
    "labbi_wedge2_expected",
    "labbi_sym2_expected",
    "labbi_wedge2_check",
    "labbi_sym2_check",
    "ring_action",
    "sphere_spectrum",
    "cp_space_spectrum",
    "hp_space_spectrum",
    "cap2_spectrum",
    "surgery_spectrum",
    "model_spectrum",
    "MODEL_NAMES",
]

_INT64_SAFE = 2 ** 62


# ---------------------------------------------------------------------------
# the operator itself
# ---------------------------------------------------------------------------

class CurvOp:
    """Symmetric rational endomorphism of Lambda^2 R^n."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows):
        self.n = int(n)
        N = comb(self.n, 2)
        rows = [tuple(Fraction(x) for x in row) for row in rows]
        if len(rows) != N or any(len(r) != N for r in rows):
            raise ValueError("expected a %d x %d matrix" % (N, N))
        for a in range(N):
            for b in range(a):
                if rows[a][b] != rows[b][a]:
                    raise ValueError("matrix is not symmetric")
        self.rows = tuple(rows)

    # -- constructors --------------------------------------------------------
    @classmethod
    def identity(cls, n: int) -> "CurvOp":
        N = comb(n, 2)
        return cls(n, [[Fraction(i == j) for j in range(N)] for i in range(N)])

    @classmethod
    def zero(cls, n: int) -> "CurvOp":
        N = comb(n, 2)
        return cls(n, [[Fraction(0)] * N for _ in range(N)])

    @classmethod
    def from_json_dict(cls, d: dict) -> "CurvOp":
        n = int(d["n"])
        N = comb(n, 2)
        entries = [Fraction(x) for x in d["entries"]]
        if len(entries) != N * N:
            raise ValueError("expected %d entries, got %d" % (N * N, len(entries)))
        return cls(n, [entries[i * N:(i + 1) * N] for i in range(N)])

    def to_json_dict(self) -> dict:
        return {"n": self.n,
                "entries": [str(x) for row in self.rows for x in row]}

    # -- arithmetic ------------------------------------------------------------
    def __add__(self, other: "CurvOp") -> "CurvOp":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return CurvOp(self.n, [[a + b for a, b in zip(ra, rb)]
                               for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other: "CurvOp") -> "CurvOp":
        return self + other.scaled(-1)

    def scaled(self, c) -> "CurvOp":
        c = Fraction(c)
        return CurvOp(self.n, [[c * x for x in row] for row in self.rows])

    def __neg__(self) -> "CurvOp":
        return self.scaled(-1)

    def __eq__(self, other):
        return isinstance(other, CurvOp) and self.n == other.n and self.rows == other.rows

    def frobenius(self, other: "CurvOp") -> Fraction:
        return sum((a * b for ra, rb in zip(self.rows, other.rows)
                    for a, b in zip(ra, rb)), Fraction(0))

    # -- views -----------------------------------------------------------------
    def entry4(self, i, j, k, l) -> Fraction:
        """Four-tensor entry T_ijkl, antisymmetric in (i,j) and in (k,l)."""
        if i == j or k == l:
            return Fraction(0)
        s = 1
        if i > j:
            i, j, s = j, i, -s
        if k > l:
            k, l, s = l, k, -s
        idx = pair_index(self.n)
        return s * self.rows[idx[(i, j)]][idx[(k, l)]]

    def ricci(self):
        n = self.n
        return [[sum((self.entry4(i, u, i, v) for i in range(n)), Fraction(0))
                 for v in range(n)] for u in range(n)]

    def trace(self) -> Fraction:
        return sum((self.rows[a][a] for a in range(len(self.rows))), Fraction(0))

    def scal(self) -> Fraction:
        return 2 * self.trace()

    def int_matrix(self):
        den = 1
        for row in self.rows:
            for x in row:
                den = den * x.denominator // gcd(den, x.denominator)
        arr = np.array([[int(x * den) for x in row] for row in self.rows],
                       dtype=object)
        m = int(np.max(np.abs(arr))) if arr.size else 0
        if m < _INT64_SAFE:
            arr = arr.astype(np.int64)
        return arr, Fraction(1, den)

    def to_float(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.rows])

    def eig_float(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.to_float())

    def to_exact(self) -> ExactMatrix:
        arr, scale = self.int_matrix()
        return ExactMatrix(arr, None, scale)

    def __repr__(self):
        return "CurvOp(n=%d)" % self.n


def kn_with_metric(n: int, h) -> CurvOp:
    """Operator of the product of the metric with the symmetric 2-tensor h."""
    h = [[Fraction(x) for x in row] for row in h]
    pairs = pair_basis(n)
    rows = []
    for (i, j) in pairs:
        row = []
        for (k, l) in pairs:
            v = Fraction(0)
            if j == l:
                v += h[i][k]
            if i == k:
                v += h[j][l]
            if j == k:
                v -= h[i][l]
            if i == l:
                v -= h[j][k]
            row.append(v)
        rows.append(row)
    return CurvOp(n, rows)


# ---------------------------------------------------------------------------
# Bianchi identity and the algebraic decomposition
# ---------------------------------------------------------------------------

def _four_form_slots(n):
    idx = pair_index(n)
    out = []
    for (a, b, c, d) in combinations(range(n), 4):
        out.append(((idx[(a, b)], idx[(c, d)], 1),
                    (idx[(a, c)], idx[(b, d)], -1),
                    (idx[(a, d)], idx[(b, c)], 1)))
    return out


def lambda4_part(R: CurvOp) -> CurvOp:
    """Component of R inside the four-forms sitting in Sym^2(Lambda^2).
    Vanishes exactly when R satisfies the first Bianchi identity."""
    N = comb(R.n, 2)
    rows = [[Fraction(0)] * N for _ in range(N)]
    for slots in _four_form_slots(R.n):
        c = sum((s * R.rows[a][b] for (a, b, s) in slots), Fraction(0)) / 3
        # <R, M>_F / ||M||_F^2 with ||M||^2 = 6 and both triangles counted
        for (a, b, s) in slots:
            rows[a][b] = rows[b][a] = s * c
    return CurvOp(R.n, rows)


def bianchi_project(R: CurvOp) -> CurvOp:
    return R - lambda4_part(R)


def random_symmetric(n: int, rng, span: int = 4) -> CurvOp:
    N = comb(n, 2)
    rows = [[Fraction(0)] * N for _ in range(N)]
    for a in range(N):
        for b in range(a, N):
            v = Fraction(int(rng.integers(-span, span + 1)))
            rows[a][b] = rows[b][a] = v
    return CurvOp(n, rows)


def random_bianchi(n: int, rng, span: int = 4) -> CurvOp:
    """Random algebraic curvature operator: a random symmetric integer matrix
    with its four-form component removed (denominators divide 6)."""
    return bianchi_project(random_symmetric(n, rng, span))


def decompose(R: CurvOp) -> dict:
    """Orthogonal pieces of a symmetric operator on two-forms: scalar part,
    traceless-Ricci part, four-form part, and the Ricci-free remainder."""
    n = R.n
    scal = R.scal()
    ru = CurvOp.identity(n).scaled(Fraction(scal, n * (n - 1)))
    ric = R.ricci()
    avg = scal / n
    ric0 = [[ric[u][v] - (avg if u == v else 0) for v in range(n)] for u in range(n)]
    rl = kn_with_metric(n, ric0).scaled(Fraction(1, n - 2))
    r4 = lambda4_part(R)
    rw = R - ru - rl - r4
    return {"scalar": ru, "traceless_ricci": rl, "weyl": rw, "four_form": r4}


# ---------------------------------------------------------------------------
# spectra and the partial-trace functional
# ---------------------------------------------------------------------------

class Spectrum:
    """Exact eigenvalue data of an operator on Lambda^2 R^n: ascending
    (value, multiplicity) pairs totalling C(n,2)."""

    __slots__ = ("n", "eigs")

    def __init__(self, n: int, eigs):
        self.n = int(n)
        eigs = sorted(((Fraction(v), int(m)) for v, m in eigs),
                      key=lambda t: t[0])
        merged = []
        for v, m in eigs:
            if m <= 0:
                raise ValueError("multiplicities must be positive")
            if merged and merged[-1][0] == v:
                merged[-1] = (v, merged[-1][1] + m)
            else:
                merged.append((v, m))
        self.eigs = tuple(merged)
        if sum(m for _, m in self.eigs) != comb(self.n, 2):
            raise ValueError("multiplicities must total %d" % comb(self.n, 2))

    @classmethod
    def from_json_dict(cls, d: dict) -> "Spectrum":
        return cls(int(d["n"]), [(Fraction(v), int(m)) for v, m in d["eigs"]])

    def to_json_dict(self) -> dict:
        return {"n": self.n, "eigs": [[str(v), m] for v, m in self.eigs]}

    def negated(self) -> "Spectrum":
        return Spectrum(self.n, [(-v, m) for v, m in self.eigs])

    def scal(self) -> Fraction:
        return 2 * sum((v * m for v, m in self.eigs), Fraction(0))

    def __eq__(self, other):
        return (isinstance(other, Spectrum) and self.n == other.n
                and self.eigs == other.eigs)

    def __repr__(self):
        return "Spectrum(n=%d, %s)" % (self.n, list(self.eigs))


def sigma_of_spectrum(r, spec: Spectrum) -> Fraction:
    """Partial trace over the r smallest directions: the sum of the floor(r)
    smallest eigenvalues plus the fractional part times the next one."""
    r = Fraction(r)
    N = comb(spec.n, 2)
    if r < 0 or r > N:
        raise ValueError("need 0 <= r <= %d" % N)
    remaining = r
    total = Fraction(0)
    for v, m in spec.eigs:
        if remaining <= 0:
            break
        take = min(Fraction(m), remaining)
        total += take * v
        remaining -= take
    return total


def sigma_float(r: float, ascending: np.ndarray) -> float:
    t = floor(r)
    out = float(np.sum(ascending[:t]))
    if t < len(ascending) and r > t:
        out += (r - t) * float(ascending[t])
    return out


def mu_synthetic(spec: Spectrum) -> Fraction:
    """Largest admissible Ricci-type bound derivable from the spectrum alone:
    the sum of the n-1 largest eigenvalues."""
    return -sigma_of_spectrum(spec.n - 1, spec.negated())


# thresholds r_p (shifted-simplex floor) and r'_p (integer-simplex floor)

def rate_shifted(n: int, p: int) -> Fraction:
    return Fraction(n * n + (8 * p - 1) * n + 8 * p * (p - 1),
                    n + 8 * p * (p + 1))


def rate_integer(n: int, p: int) -> Fraction:
    return Fraction(n + p - 2, p)


def cp_value(spec: Spectrum, p: int, mu=None) -> Fraction:
    """The p-th curvature positivity functional of a spectrum.  p = 1 needs
    the Ricci bound mu (models pass scal/n; synthetic data passes
    mu_synthetic)."""
    n = spec.n
    scal = spec.scal()
    if p < 1:
        raise ValueError("p must be >= 1")
    if p == 1:
        if mu is None:
            raise ValueError("p = 1 needs the Ricci bound mu")
        s = sigma_of_spectrum(rate_shifted(n, 1), spec)
        return min((Fraction(n, 8) + 2) * s, scal / 8) + scal / 8 - Fraction(mu)
    rp = rate_shifted(n, p)
    s = sigma_of_spectrum(rp, spec)
    sneg = sigma_of_spectrum(rate_integer(n, p), spec.negated())
    first = min((Fraction(n, 8) + p * p + p) * s,
                Fraction(n * (n - 1), 8) / rp * s)
    return first + scal / 8 + p * p * sneg


def cp_values(spec: Spectrum, pmax: int, mu=None) -> list:
    return [cp_value(spec, p, mu) for p in range(1, pmax + 1)]


def nested_monotonicity_check(spec: Spectrum, mu, pmax: int) -> dict:
    """Monotonicity report: for the largest p <= pmax with C_p >= 0 (if any),
    check scal/4 >= C_1 >= C_2 >= ... >= C_p."""
    if pmax < 2:
        raise ValueError("pmax must be >= 2")
    vals = cp_values(spec, pmax, mu)
    p_star = max((p for p in range(1, pmax + 1) if vals[p - 1] >= 0), default=None)
    report = {"values": vals, "p_star": p_star, "vacuous": p_star is None,
              "holds": True, "scal_quarter": spec.scal() / 4}
    if p_star is None:
        return report
    chain = [spec.scal() / 4] + vals[:p_star]
    report["holds"] = all(chain[i] >= chain[i + 1] for i in range(len(chain) - 1))
    return report


# ---------------------------------------------------------------------------
# Weitzenboeck machinery
# ---------------------------------------------------------------------------

def _combined_stack(Rint, rscale, rep: Rep):
    """M[a] = dpi(R X_a) as integer stacks: tensordot of the symmetric integer
    matrix against the generator stacks (widening to object on overflow risk)."""
    N = Rint.shape[0]
    maxR = int(np.max(np.abs(Rint))) if Rint.size else 0
    maxG = int(np.max(np.abs(rep.gens_re)))
    if rep.gens_im is not None:
        maxG = max(maxG, int(np.max(np.abs(rep.gens_im))))
    wide = N * maxR * maxG >= _INT64_SAFE
    Ri = Rint.astype(object) if wide and Rint.dtype != object else Rint
    gre = rep.gens_re.astype(object) if wide else rep.gens_re
    Mre = np.tensordot(Ri, gre, axes=([0], [0]))
    Mim = None
    if rep.gens_im is not None:
        gim = rep.gens_im.astype(object) if wide else rep.gens_im
        Mim = np.tensordot(Ri, gim, axes=([0], [0]))
    return Mre, Mim, rscale * rep.scale


def _product_sum(Mre, Mim, rep: Rep, sign: int):
    """sign * sum_a M[a] @ dpi(X_a), exact, with overflow widening."""
    N, d = Mre.shape[0], Mre.shape[1]
    maxM = max(int(np.max(np.abs(Mre))) if Mre.size else 0,
               int(np.max(np.abs(Mim))) if Mim is not None else 0)
    maxG = int(np.max(np.abs(rep.gens_re)))
    if rep.gens_im is not None:
        maxG = max(maxG, int(np.max(np.abs(rep.gens_im))))
    gaussian = Mim is not None or rep.gens_im is not None
    bound = N * d * maxM * maxG * (2 if gaussian else 1)
    wide = bound >= _INT64_SAFE
    if wide:
        Mre = Mre.astype(object)
        Mim = None if Mim is None else Mim.astype(object)
        gre = [rep.gens_re[a].astype(object) for a in range(N)]
        gim = (None if rep.gens_im is None
               else [rep.gens_im[a].astype(object) for a in range(N)])
    else:
        sre, sim = rep.sparse_gens()
        gre, gim = sre, sim
    dt = object if wide else np.int64
    acc_re = np.zeros((d, d), dtype=dt)
    acc_im = np.zeros((d, d), dtype=dt) if gaussian else None
    for a in range(N):
        ga_re = gre[a]
        ga_im = gim[a] if gim is not None else None
        acc_re += sign * np.asarray(Mre[a] @ ga_re)
        if Mim is not None and ga_im is not None:
            acc_re -= sign * np.asarray(Mim[a] @ ga_im)
        if ga_im is not None:
            acc_im += sign * np.asarray(Mre[a] @ ga_im)
        if Mim is not None:
            acc_im += sign * np.asarray(Mim[a] @ ga_re)
    return acc_re, acc_im


def weitzenbock(R: CurvOp, rep: Rep) -> ExactMatrix:
    """K(R, rep) = -sum_a dpi(R X_a) dpi(X_a), exact."""
    if R.n != rep.n:
        raise ValueError("dimension mismatch")
    Rint, rscale = R.int_matrix()
    Mre, Mim, mscale = _combined_stack(Rint, rscale, rep)
    acc_re, acc_im = _product_sum(Mre, Mim, rep, -1)
    return ExactMatrix(acc_re, acc_im, mscale * rep.scale).compact()


def casimir_matrix(rep: Rep) -> ExactMatrix:
    return weitzenbock(CurvOp.identity(rep.n), rep)


def twisted_term(R: CurvOp, spin: Rep, other: Rep,
                 product: Rep | None = None) -> ExactMatrix:
    """Direct build of the twisted curvature term
    -sum_a (e_i e_j (x) 1) d(pi_S (x) pi)(R X_a), a = (i j),
    where e_i e_j acting on half-spinors is twice the spinor generator."""
    from scipy import sparse as _sp
    if product is None:
        product = tensor_rep(spin, other)
    Rint, rscale = R.int_matrix()
    Mre, Mim, mscale = _combined_stack(Rint, rscale, product)
    N = Rint.shape[0]
    d = product.dim
    IB = _sp.identity(other.dim, dtype=np.int64, format="csr")
    acc_re = np.zeros((d, d), dtype=np.int64)
    acc_im = np.zeros((d, d), dtype=np.int64)
    maxM = max(int(np.max(np.abs(Mre))), int(np.max(np.abs(Mim))) if Mim is not None else 0)
    # left factors have a single entry of modulus <= 1 per row and column
    if 2 * N * maxM >= _INT64_SAFE:
        raise OverflowError("twisted term would overflow int64")
    for a in range(N):
        sre = spin.gens_re[a]
        sim = spin.gens_im[a] if spin.gens_im is not None else None
        # kron of an all-zero block forgets the integer dtype; skip it instead
        if sre.any():
            lre = _sp.kron(_sp.csr_matrix(sre), IB, format="csr")
            acc_re -= np.asarray(lre @ Mre[a])
            if Mim is not None:
                acc_im -= np.asarray(lre @ Mim[a])
        if sim is not None and sim.any():
            lim = _sp.kron(_sp.csr_matrix(sim), IB, format="csr")
            acc_im -= np.asarray(lim @ Mre[a])
            if Mim is not None:
                acc_re += np.asarray(lim @ Mim[a])
    # fold in: left factor is 2 dpi_S(X_a) (x) 1 = (e_i e_j) (x) 1
    scale = 2 * spin.scale * mscale
    return ExactMatrix(acc_re, acc_im if acc_im.any() else None, scale).compact()


def split_check(R: CurvOp, other: Rep, spin: Rep) -> dict:
    """Exact verification that the direct twisted term equals
    K(R, S (x) pi) + (scal/8) Id - 1 (x) K(R, pi)."""
    product = tensor_rep(spin, other)
    lhs = twisted_term(R, spin, other, product)
    k_prod = weitzenbock(R, product)
    k_other = weitzenbock(R, other)
    ds = spin.dim
    eye = ExactMatrix.identity(product.dim).scaled(R.scal() / 8)
    k_oth_re = np.kron(np.eye(ds, dtype=np.int64), k_other.re)
    k_oth_im = (None if k_other.im is None
                else np.kron(np.eye(ds, dtype=np.int64), k_other.im))
    lifted = ExactMatrix(k_oth_re, k_oth_im, k_other.scale)
    rhs = k_prod + eye - lifted
    return {"equal": lhs.equals(rhs), "dim": product.dim, "backend": "exact"}


def lambda_min_float(K: ExactMatrix, gram) -> float:
    """Smallest eigenvalue of K, symmetrized by the diagonal Gram matrix."""
    g = np.array([float(x) for x in gram])
    s = np.sqrt(g)
    A = K.to_complex() * s[:, None] / s[None, :]
    herm_defect = float(np.max(np.abs(A - A.conj().T)))
    if herm_defect > 1e-8 * max(1.0, float(np.max(np.abs(A)))):
        raise ArithmeticError("symmetrized matrix is not Hermitian")
    return float(np.min(np.linalg.eigvalsh(A)))


def lower_bound_check(R: CurvOp, rep: Rep, weight, tol: float = 1e-9) -> dict:
    """Spectral lower bound: lambda_min(K(R, rep)) must be at least
    |lam|^2 Sigma(pw(lam), spectrum of R), up to relative float tolerance."""
    K = weitzenbock(R, rep)
    lam_min = lambda_min_float(K, rep.gram)
    eigs = R.eig_float()
    pw = float(weight.pw())
    bound = float(weight.norm_sq()) * sigma_float(pw, eigs)
    scale = max(1.0, abs(lam_min), abs(bound))
    return {"holds": lam_min >= bound - tol * scale,
            "lambda_min": lam_min, "bound": bound,
            "gap": lam_min - bound, "tol": tol * scale, "backend": "float64"}


# ---------------------------------------------------------------------------
# closed-form Weitzenboeck identities on two-forms and symmetric two-tensors
# ---------------------------------------------------------------------------

def labbi_wedge2_expected(R: CurvOp) -> CurvOp:
    """K(R, two-forms) written through the algebraic decomposition:
    2(n-2) scalar + (n-4) traceless-Ricci - 2 remainder + 4 four-form."""
    n = R.n
    parts = decompose(R)
    return (parts["scalar"].scaled(2 * (n - 2))
            + parts["traceless_ricci"].scaled(n - 4)
            + parts["weyl"].scaled(-2)
            + parts["four_form"].scaled(4))


def ring_action(R: CurvOp, phi):
    """(R ring phi)_uv = sum_ij T_iujv phi_ij for a symmetric matrix phi."""
    n = R.n
    return [[sum((R.entry4(i, u, j, v) * phi[i][j]
                  for i in range(n) for j in range(n)), Fraction(0))
             for v in range(n)] for u in range(n)]


def labbi_sym2_expected(R: CurvOp, basis) -> list:
    """Matrix of phi -> Ric phi + phi Ric - 2 (R ring phi) over a basis of
    symmetric matrices given as (matrix, squared norm) pairs."""
    n = R.n
    ric = R.ricci()
    cols = []
    for phi_int, _ in basis:
        phi = [[Fraction(int(phi_int[u, v])) for v in range(n)] for u in range(n)]
        ring = ring_action(R, phi)
        psi = [[sum(ric[u][i] * phi[i][v] for i in range(n))
                + sum(phi[u][i] * ric[i][v] for i in range(n))
                - 2 * ring[u][v] for v in range(n)] for u in range(n)]
        coeff = []
        for b_int, g in basis:
            val = sum(psi[u][v] * int(b_int[u, v]) for u in range(n) for v in range(n))
            coeff.append(val / g)
        cols.append(coeff)
    # column-major build above; transpose to rows
    dim = len(basis)
    return [[cols[c][r] for c in range(dim)] for r in range(dim)]


def labbi_wedge2_check(R: CurvOp) -> dict:
    from .repmats import wedge2_rep
    K = weitzenbock(R, wedge2_rep(R.n))
    return {"equal": K.equals(labbi_wedge2_expected(R).to_exact()),
            "backend": "exact"}


def labbi_sym2_check(R: CurvOp) -> dict:
    from .repmats import sym2_rep, _sym_basis_full
    n = R.n
    rep = sym2_rep(n)
    K = weitzenbock(R, rep)
    expected = ExactMatrix.from_fractions(labbi_sym2_expected(R, _sym_basis_full(n)))
    # metric direction: zero on the off-diagonal block, ones on the diagonal one
    vec = np.concatenate([np.zeros(comb(n, 2), dtype=np.int64),
                          np.ones(n, dtype=np.int64)])
    killed = not (K.re @ vec).any()
    return {"equal": K.equals(expected), "metric_killed": killed,
            "backend": "exact"}


# ---------------------------------------------------------------------------
# model spectra (projective spaces, round sphere, surgery cross sections)
# ---------------------------------------------------------------------------

def sphere_spectrum(n: int):
    """Round sphere: identity operator; Einstein bound n-1."""
    return Spectrum(n, [(1, comb(n, 2))]), Fraction(n - 1)


def cp_space_spectrum(m: int):
    """Complex projective space of complex dimension m >= 2, sec in [1,4]."""
    if m < 2:
        raise ValueError("need m >= 2")
    n = 2 * m
    eigs = [(0, m * m - m), (2, m * m - 1), (2 * m + 2, 1)]
    return Spectrum(n, eigs), Fraction(2 * m + 2)


def hp_space_spectrum(k: int):
    """Quaternionic projective space of quaternionic dimension k >= 1."""
    if k < 1:
        raise ValueError("need k >= 1")
    n = 4 * k
    eigs = [(4, k * (2 * k + 1)), (4 * k, 3)]
    if k > 1:
        eigs.append((0, 3 * (2 * k + 1) * (k - 1)))
    return Spectrum(n, eigs), Fraction(4 * (k + 2))


def cap2_spectrum():
    """The sixteen-dimensional projective plane over the octonions."""
    return Spectrum(16, [(0, 84), (8, 36)]), Fraction(36)


def surgery_spectrum(n: int, d: int):
    """Curvature operator of the product of a round (d-1)-sphere with a flat
    factor, inside dimension n.  The Ricci bound is d-2."""
    if not 3 <= d <= n:
        raise ValueError("need 3 <= d <= n")
    sphere_block = comb(d - 1, 2)
    eigs = [(1, sphere_block)]
    rest = comb(n, 2) - sphere_block
    if rest:
        eigs.append((0, rest))
    return Spectrum(n, eigs), Fraction(d - 2)


MODEL_NAMES = ("sphere", "cp", "hp", "cap2", "surgery")


def model_spectrum(name: str, **kw):
    if name == "sphere":
        return sphere_spectrum(int(kw["n"]))
    if name == "cp":
        return cp_space_spectrum(int(kw["m"]))
    if name == "hp":
        return hp_space_spectrum(int(kw["k"]))
    if name == "cap2":
        return cap2_spectrum()
    if name == "surgery":
        return surgery_spectrum(int(kw["n"]), int(kw["d"]))
    raise ValueError("unknown model %r (have %s)" % (name, ", ".join(MODEL_NAMES)))
