"""Dense matrices with exact Gaussian-rational entries.

Storage: one (or two, when an imaginary part is present) numpy integer arrays
plus a single Fraction scale, so A represents scale * (re + i im).  Products
stay in integer arithmetic; a pre-multiplication bound decides when int64
would overflow and switches the computation to Python-int (object) arrays.

scipy.sparse integer matrices are accepted on the right of @ so that sums like
sum_a L_a @ G_a stay cheap when the G_a are sparse generators.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np
from scipy import sparse as _sp

__all__ = ["ExactMatrix"]

_INT64_SAFE = 2 ** 62


def _as_int_array(arr):
    a = np.asarray(arr)
    if a.dtype == object or np.issubdtype(a.dtype, np.integer):
        return a
    raise TypeError("integer array expected, got dtype %s" % a.dtype)


def _max_abs(a) -> int:
    if a.size == 0:
        return 0
    return int(np.max(np.abs(a)))


def _common_scale(s: Fraction, t: Fraction):
    """g, ms, mt with g*ms == s, g*mt == t and ms, mt integers."""
    num = gcd(s.numerator * t.denominator, t.numerator * s.denominator)
    g = Fraction(num, s.denominator * t.denominator)
    ms = s / g
    mt = t / g
    assert ms.denominator == 1 and mt.denominator == 1
    return g, int(ms), int(mt)


class ExactMatrix:
    __slots__ = ("re", "im", "scale")

    def __init__(self, re, im=None, scale=Fraction(1)):
        self.re = _as_int_array(re)
        self.im = None if im is None else _as_int_array(im)
        if self.im is not None and self.im.shape != self.re.shape:
            raise ValueError("re/im shape mismatch")
        self.scale = Fraction(scale)

    # -- constructors --------------------------------------------------------
    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "ExactMatrix":
        return cls(np.zeros((n, m if m is not None else n), dtype=np.int64))

    @classmethod
    def from_fractions(cls, rows) -> "ExactMatrix":
        rows = [[Fraction(x) for x in row] for row in rows]
        den = 1
        for row in rows:
            for x in row:
                den = den * x.denominator // gcd(den, x.denominator)
        data = [[int(x * den) for x in row] for row in rows]
        return cls(np.array(data, dtype=object), scale=Fraction(1, den)).compact()

    # -- bookkeeping ----------------------------------------------------------
    @property
    def shape(self):
        return self.re.shape

    def is_real(self) -> bool:
        return self.im is None or not self.im.any()

    def compact(self) -> "ExactMatrix":
        """Drop a vanishing imaginary part and fall back to int64 when safe."""
        im = None if (self.im is None or not self.im.any()) else self.im
        re = self.re
        bound = max(_max_abs(re), 0 if im is None else _max_abs(im))
        if re.dtype == object and bound < _INT64_SAFE:
            re = re.astype(np.int64)
            if im is not None:
                im = im.astype(np.int64)
        return ExactMatrix(re, im, self.scale)

    def max_abs(self) -> int:
        m = _max_abs(self.re)
        if self.im is not None:
            m = max(m, _max_abs(self.im))
        return m

    def _widened(self, need_object: bool):
        if need_object and self.re.dtype != object:
            re = self.re.astype(object)
            im = None if self.im is None else self.im.astype(object)
            return re, im
        return self.re, self.im

    # -- ring ops -------------------------------------------------------------
    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(-self.re, None if self.im is None else -self.im, self.scale)

    def scaled(self, c) -> "ExactMatrix":
        c = Fraction(c)
        if c == 0:
            return ExactMatrix.zeros(*self.shape)
        return ExactMatrix(self.re, self.im, self.scale * c)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        g, ms, mt = _common_scale(self.scale, other.scale)
        bound = self.max_abs() * abs(ms) + other.max_abs() * abs(mt)
        wide = bound >= _INT64_SAFE
        are, aim = self._widened(wide)
        bre, bim = other._widened(wide)
        re = are * ms + bre * mt
        if aim is None and bim is None:
            im = None
        else:
            im = (0 if aim is None else aim * ms) + (0 if bim is None else bim * mt)
            im = np.asarray(im)
        return ExactMatrix(re, im, g).compact()

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + (-other)

    def __matmul__(self, other) -> "ExactMatrix":
        if isinstance(other, ExactMatrix):
            ore, oim, oscale = other.re, other.im, other.scale
        elif _sp.issparse(other):
            ore, oim, oscale = other, None, Fraction(1)
        else:
            return NotImplemented
        inner = self.shape[1]
        omax = _max_abs(ore.toarray() if _sp.issparse(ore) else ore) if inner else 0
        if oim is not None:
            omax = max(omax, _max_abs(oim))
        # worst-case entry of a real product; doubled when a Gaussian side is present
        bound = inner * self.max_abs() * omax
        if self.im is not None or oim is not None:
            bound *= 2
        wide = bound >= _INT64_SAFE
        are, aim = self._widened(wide)
        if wide and _sp.issparse(ore):
            ore = ore.toarray().astype(object)
        elif wide and not _sp.issparse(ore):
            ore = ore.astype(object)
            oim = None if oim is None else oim.astype(object)

        def mul(x, y):
            out = x @ y
            return np.asarray(out)

        if aim is None and oim is None:
            re, im = mul(are, ore), None
        elif aim is None:
            re, im = mul(are, ore), mul(are, oim)
        elif oim is None:
            re, im = mul(are, ore), mul(aim, ore)
        else:
            re = mul(are, ore) - mul(aim, oim)
            im = mul(are, oim) + mul(aim, ore)
        return ExactMatrix(re, im, self.scale * oscale).compact()

    # -- queries ----------------------------------------------------------------
    def trace(self):
        tr_re = Fraction(int(np.trace(self.re))) * self.scale
        tr_im = Fraction(0) if self.im is None else Fraction(int(np.trace(self.im))) * self.scale
        return tr_re, tr_im

    def entry(self, i: int, j: int):
        re = Fraction(int(self.re[i, j])) * self.scale
        im = Fraction(0) if self.im is None else Fraction(int(self.im[i, j])) * self.scale
        return re, im

    def conj_transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.re.T.copy(),
                           None if self.im is None else (-self.im.T).copy(),
                           self.scale)

    def equals(self, other: "ExactMatrix") -> bool:
        if self.shape != other.shape:
            return False
        g, ms, mt = _common_scale(self.scale or Fraction(1), other.scale or Fraction(1))
        wide = (self.max_abs() * abs(ms) >= _INT64_SAFE
                or other.max_abs() * abs(mt) >= _INT64_SAFE)
        are, aim = self._widened(wide)
        bre, bim = other._widened(wide)
        if not np.array_equal(are * ms, bre * mt):
            return False
        ai = 0 if aim is None else aim * ms
        bi = 0 if bim is None else bim * mt
        return np.array_equal(np.asarray(ai + np.zeros_like(are)),
                              np.asarray(bi + np.zeros_like(bre)))

    def scalar_of_identity(self):
        """The Fraction c with self == c * Id, or None."""
        n, m = self.shape
        if n != m:
            return None
        if self.im is not None and self.im.any():
            return None
        diag = np.diag(self.re)
        if not np.all(diag == diag[0]):
            return None
        off = self.re - np.diag(diag)
        if off.any():
            return None
        return Fraction(int(diag[0])) * self.scale

    def is_zero(self) -> bool:
        return not self.re.any() and (self.im is None or not self.im.any())

    def to_complex(self) -> np.ndarray:
        s = float(self.scale)
        out = self.re.astype(np.float64) * s
        if self.im is not None:
            out = out + 1j * (self.im.astype(np.float64) * s)
        return out

    def to_fraction_rows(self):
        if self.im is not None and self.im.any():
            raise ValueError("matrix has an imaginary part")
        return [[Fraction(int(x)) * self.scale for x in row] for row in self.re]

    def __repr__(self):
        kind = "gaussian" if self.im is not None else "rational"
        return "ExactMatrix(%s, shape=%s, scale=%s)" % (kind, self.shape, self.scale)
