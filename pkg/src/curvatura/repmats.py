"""Generator matrices of so(n) representations, in exact arithmetic.

Conventions, fixed once for the whole package:

* Basis of so(n): X_(ij) = E_ji - E_ij for i < j (sends e_i to e_j and e_j to
  -e_i), enumerated in lexicographic order by pair_basis(n).  These are
  orthonormal for <X, Y> = tr(X Y^T)/2.
* A representation stores the stacked matrices of dpi(X_(ij)) as integer
  arrays with a single Fraction scale, plus the (diagonal) Gram matrix of its
  basis, so adjoints and eigenvalue symmetrization stay exact.
* Spinor generators are Gaussian integers over scale 1/2: dpi(X_(ij)) is half
  the product of the i-th and j-th Clifford factors.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, gcd

import numpy as np
from scipy import sparse as _sp

from .exactmat import ExactMatrix

__all__ = [
    "pair_basis",
    "pair_index",
    "Rep",
    "defining_rep",
    "wedge2_rep",
    "sym2_rep",
    "sym0_rep",
    "spinor_rep",
    "tensor_rep",
    "clifford_factors",
]


@lru_cache(maxsize=None)
def pair_basis(n: int) -> tuple:
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


@lru_cache(maxsize=None)
def pair_index(n: int) -> dict:
    return {p: a for a, p in enumerate(pair_basis(n))}


class Rep:
    """Stacked generator matrices dpi(X_a) = scale * (gens_re + i gens_im)."""

    __slots__ = ("name", "n", "dim", "gens_re", "gens_im", "scale", "gram",
                 "_sparse")

    def __init__(self, name, n, gens_re, gens_im, scale, gram):
        self.name = name
        self.n = int(n)
        self.gens_re = np.ascontiguousarray(gens_re)
        self.gens_im = None if gens_im is None else np.ascontiguousarray(gens_im)
        self.scale = Fraction(scale)
        self.dim = int(self.gens_re.shape[1])
        self.gram = tuple(Fraction(g) for g in gram)
        assert self.gens_re.shape[0] == comb(self.n, 2)
        assert len(self.gram) == self.dim
        self._sparse = None

    def gen(self, a: int) -> ExactMatrix:
        return ExactMatrix(self.gens_re[a].copy(),
                           None if self.gens_im is None else self.gens_im[a].copy(),
                           self.scale)

    def sparse_gens(self):
        """csr copies of the integer generator stacks, built on first use."""
        if self._sparse is None:
            re = [_sp.csr_matrix(self.gens_re[a]) for a in range(len(self.gens_re))]
            if self.gens_im is None:
                im = None
            else:
                im = [_sp.csr_matrix(self.gens_im[a]) for a in range(len(self.gens_im))]
            self._sparse = (re, im)
        return self._sparse

    def is_gaussian(self) -> bool:
        return self.gens_im is not None

    def __repr__(self):
        return "Rep(%s, n=%d, dim=%d)" % (self.name, self.n, self.dim)


# ---------------------------------------------------------------------------
# vector and two-form representations
# ---------------------------------------------------------------------------

def defining_rep(n: int) -> Rep:
    gens = np.zeros((comb(n, 2), n, n), dtype=np.int64)
    for a, (i, j) in enumerate(pair_basis(n)):
        gens[a, j, i] = 1
        gens[a, i, j] = -1
    return Rep("defining", n, gens, None, Fraction(1), (Fraction(1),) * n)


def _vector_image(i, j, v):
    # X_(ij) e_v, as a list of (index, sign)
    if v == i:
        return [(j, 1)]
    if v == j:
        return [(i, -1)]
    return []


def wedge2_rep(n: int) -> Rep:
    pairs = pair_basis(n)
    idx = pair_index(n)
    N = len(pairs)
    gens = np.zeros((N, N, N), dtype=np.int64)
    for a, (i, j) in enumerate(pairs):
        for b, (k, l) in enumerate(pairs):
            for (img, sgn) in _vector_image(i, j, k):
                if img == l:
                    continue
                key, s = ((img, l), sgn) if img < l else ((l, img), -sgn)
                gens[a, idx[key], b] += s
            for (img, sgn) in _vector_image(i, j, l):
                if img == k:
                    continue
                key, s = ((k, img), sgn) if k < img else ((img, k), -sgn)
                gens[a, idx[key], b] += s
    return Rep("wedge2", n, gens, None, Fraction(1), (Fraction(1),) * N)


# ---------------------------------------------------------------------------
# symmetric squares, realized on symmetric matrices with phi -> X phi - phi X
# ---------------------------------------------------------------------------

def _sym_basis_full(n):
    # off-diagonal E_kl + E_lk (squared norm 2), then diagonal E_kk (norm 1)
    basis = []
    for (k, l) in pair_basis(n):
        M = np.zeros((n, n), dtype=np.int64)
        M[k, l] = M[l, k] = 1
        basis.append((M, Fraction(2)))
    for k in range(n):
        M = np.zeros((n, n), dtype=np.int64)
        M[k, k] = 1
        basis.append((M, Fraction(1)))
    return basis


def _sym_basis_traceless(n):
    basis = []
    for (k, l) in pair_basis(n):
        M = np.zeros((n, n), dtype=np.int64)
        M[k, l] = M[l, k] = 1
        basis.append((M, Fraction(2)))
    for j in range(1, n):
        M = np.zeros((n, n), dtype=np.int64)
        M[j, j] = j
        for i in range(j):
            M[i, i] = -1
        basis.append((M, Fraction(j * (j + 1))))
    return basis


def _sym_rep_from_basis(name, n, basis) -> Rep:
    dim = len(basis)
    mats = [b for b, _ in basis]
    gram = [g for _, g in basis]
    Ldefs = defining_rep(n)
    rows = []
    for a in range(comb(n, 2)):
        L = Ldefs.gens_re[a]
        cols = []
        for phi, _ in basis:
            psi = L @ phi - phi @ L
            # expand psi over the basis via the diagonal Gram
            coeff = [Fraction(int(np.tensordot(psi, b, axes=2))) / g
                     for b, g in basis]
            cols.append(coeff)
        rows.append(cols)
    den = 1
    for cols in rows:
        for coeff in cols:
            for c in coeff:
                den = den * c.denominator // gcd(den, c.denominator)
    gens = np.zeros((comb(n, 2), dim, dim), dtype=np.int64)
    for a, cols in enumerate(rows):
        for b, coeff in enumerate(cols):
            for r, c in enumerate(coeff):
                gens[a, r, b] = int(c * den)
    del mats
    return Rep(name, n, gens, None, Fraction(1, den), gram)


def sym2_rep(n: int) -> Rep:
    return _sym_rep_from_basis("sym2", n, _sym_basis_full(n))


def sym0_rep(n: int) -> Rep:
    return _sym_rep_from_basis("sym0", n, _sym_basis_traceless(n))


# ---------------------------------------------------------------------------
# spinors
# ---------------------------------------------------------------------------

_S1 = np.array([[0, 1], [1, 0]], dtype=np.int64)   # sigma_1
_IS2 = np.array([[0, 1], [-1, 0]], dtype=np.int64)  # i sigma_2 (real)
_S3 = np.array([[1, 0], [0, -1]], dtype=np.int64)  # sigma_3
_I2 = np.eye(2, dtype=np.int64)


@lru_cache(maxsize=None)
def clifford_factors(n: int) -> tuple:
    """Anti-Hermitian Clifford factors e_1..e_n on 2^m components (m = n//2),
    squaring to -1, as (re, im) integer matrix pairs.  Entries in {0, +-1}
    per part, one nonzero per row."""
    m = n // 2 if n % 2 == 0 else (n - 1) // 2
    out = []
    for a in range(1, 2 * m + 1):
        j = (a + 1) // 2
        mid_re, mid_im = (None, _S1) if a % 2 == 1 else (_IS2, None)
        re = im = None
        acc = np.eye(1, dtype=np.int64)
        for _ in range(j - 1):
            acc = np.kron(acc, _S3)
        if mid_re is not None:
            re = np.kron(acc, mid_re)
        else:
            im = np.kron(acc, mid_im)
        tail = np.eye(2 ** (m - j), dtype=np.int64)
        if re is not None:
            re = np.kron(re, tail)
            im = np.zeros_like(re)
        else:
            im = np.kron(im, tail)
            re = np.zeros_like(im)
        out.append((re, im))
    if n % 2 == 1:
        diag = np.eye(1, dtype=np.int64)
        for _ in range(m):
            diag = np.kron(diag, _S3)
        out.append((np.zeros_like(diag), diag))
    return tuple(out)


def spinor_rep(n: int, half: str | None = "+") -> Rep:
    """Half-spinor representation for even n (pass half "+" or "-"), the full
    spinor representation for odd n (half must be None)."""
    if n % 2 == 0:
        if half not in ("+", "-"):
            raise ValueError("even n needs half '+' or '-'")
        m = n // 2
    else:
        if half is not None:
            raise ValueError("odd n has a single spinor representation")
        m = (n - 1) // 2
    es = clifford_factors(n)
    full = 2 ** m
    if n % 2 == 0:
        parity = np.array([bin(i).count("1") % 2 for i in range(full)])
        keep = np.nonzero(parity == (0 if half == "+" else 1))[0]
    else:
        keep = np.arange(full)
    d = len(keep)
    N = comb(n, 2)
    gre = np.zeros((N, d, d), dtype=np.int64)
    gim = np.zeros((N, d, d), dtype=np.int64)
    for a, (i, j) in enumerate(pair_basis(n)):
        eire, eiim = es[i]
        ejre, ejim = es[j]
        pre = eire @ ejre - eiim @ ejim
        pim = eire @ ejim + eiim @ ejre
        gre[a] = pre[np.ix_(keep, keep)]
        gim[a] = pim[np.ix_(keep, keep)]
    name = "spinor" if n % 2 == 1 else "spinor%s" % half
    return Rep(name, n, gre, gim if gim.any() else None, Fraction(1, 2),
               (Fraction(1),) * d)


# ---------------------------------------------------------------------------
# tensor products
# ---------------------------------------------------------------------------

def tensor_rep(A: Rep, B: Rep, name: str | None = None) -> Rep:
    if A.n != B.n:
        raise ValueError("tensor factors must share n")
    N = comb(A.n, 2)
    dim = A.dim * B.dim
    IA = np.eye(A.dim, dtype=np.int64)
    IB = np.eye(B.dim, dtype=np.int64)
    # common scale for dpi_A x 1 + 1 x dpi_B
    num = gcd(A.scale.numerator * B.scale.denominator,
              B.scale.numerator * A.scale.denominator)
    g = Fraction(num, A.scale.denominator * B.scale.denominator)
    ma, mb = int(A.scale / g), int(B.scale / g)
    gaussian = A.is_gaussian() or B.is_gaussian()
    gre = np.zeros((N, dim, dim), dtype=np.int64)
    gim = np.zeros((N, dim, dim), dtype=np.int64) if gaussian else None
    for a in range(N):
        gre[a] = ma * np.kron(A.gens_re[a], IB) + mb * np.kron(IA, B.gens_re[a])
        if gaussian:
            acc = np.zeros((dim, dim), dtype=np.int64)
            if A.gens_im is not None:
                acc += ma * np.kron(A.gens_im[a], IB)
            if B.gens_im is not None:
                acc += mb * np.kron(IA, B.gens_im[a])
            gim[a] = acc
    gram = [ga * gb for ga in A.gram for gb in B.gram]
    return Rep(name or "%s(x)%s" % (A.name, B.name), A.n, gre, gim, g, gram)
