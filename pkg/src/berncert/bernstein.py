"""Bernstein-basis polynomials on [0,1]: representation, evaluation, splitting.

Everything downstream (membership tests, certificates, subdivision) works on
the Bernstein coefficients directly; the monomial basis appears only at the
conversion boundary.  Basis conversions use explicit binomial-weighted
triangular maps, which behave well up to a soft degree ceiling of about 20;
past that the maps become badly conditioned and results degrade.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

__all__ = [
    "ScalarPoly",
    "ConePoint",
    "DegreeConstants",
    "RemappedPoly",
    "basis_eval",
    "binomial",
    "cone_member",
    "degree_constants",
    "degree_elevate",
    "evaluate",
    "from_monomial",
    "remap_interval",
    "shift",
    "split",
    "to_monomial",
]

#: Conversions to/from the monomial basis lose accuracy past this degree.
CONVERSION_DEGREE_CEILING = 20


def binomial(n: int, k: int) -> float:
    """Binomial coefficient C(n, k) via the multiplicative recurrence.

    Exact in double precision for n <= 30, which covers every degree this
    package targets.  No big-integer arithmetic.
    """
    if k < 0 or k > n:
        return 0.0
    k = min(k, n - k)
    out = 1.0
    for j in range(1, k + 1):
        out = out * (n - j + 1) / j
    return out


@dataclass(frozen=True, eq=False)
class ScalarPoly:
    """A degree-d polynomial stored by its d+1 Bernstein coefficients on [0,1].

    The coefficient array is frozen after construction; all operations on
    polynomials are pure functions, so instances are safe to share across
    threads.
    """

    coeffs: np.ndarray

    def __post_init__(self):
        arr = np.array(self.coeffs, dtype=float, copy=True).reshape(-1)
        if arr.size == 0:
            raise ValueError("a polynomial needs at least one coefficient")
        if not np.all(np.isfinite(arr)):
            raise ValueError("coefficients must be finite")
        arr.flags.writeable = False
        object.__setattr__(self, "coeffs", arr)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def __repr__(self) -> str:
        return f"ScalarPoly({self.coeffs.tolist()!r})"


class ConePoint(NamedTuple):
    """A triple (x0, x1; x2) tested against the rotated second-order cone."""

    x0: float
    x1: float
    x2: float


def cone_member(pt: ConePoint | tuple[float, float, float], tol: float = 1e-9) -> bool:
    """Membership of (x0, x1; x2) in the rotated second-order cone.

    The cone is {x0 >= 0, x1 >= 0, 2*x0*x1 >= x2**2}; `tol` is an absolute
    slack on each of the three inequalities.  Exact arithmetic needs no slack,
    floating point does, so the tolerance is an explicit parameter.
    """
    x0, x1, x2 = pt
    return x0 >= -tol and x1 >= -tol and 2.0 * x0 * x1 - x2 * x2 >= -tol


class DegreeConstants:
    """The index-dependent constants m_i and w_i for one degree d.

    m_i = ((i+1)*(d-i+1)) / (2*i*(d-i)) for interior indices 1 <= i <= d-1,
    and w_i = 1/2 when 1 < i < d-1, otherwise 1.  These two tables are the
    single source for every coupling constant used by the scalar and matrix
    certificates.  For d <= 1 there are no interior indices and the
    geometric-mean test degenerates to the plain nonnegative-coefficient test.
    """

    def __init__(self, d: int):
        if d < 0:
            raise ValueError("degree must be nonnegative")
        self.d = int(d)
        w = np.ones(d + 1)
        for i in range(d + 1):
            if 1 < i < d - 1:
                w[i] = 0.5
        m = np.full(d + 1, np.nan)
        for i in range(1, d):
            m[i] = 0.5 * ((i + 1) * (d - i + 1)) / (i * (d - i))
        w.flags.writeable = False
        m.flags.writeable = False
        self.w = w
        self.m = m

    def m_of(self, i: int) -> float:
        if not 1 <= i <= self.d - 1:
            raise ValueError(f"m_i is defined for 1 <= i <= d-1, got i={i}")
        return float(self.m[i])

    def w_of(self, i: int) -> float:
        if not 0 <= i <= self.d:
            raise ValueError(f"w_i is defined for 0 <= i <= d, got i={i}")
        return float(self.w[i])

    def coupling_sq(self, i: int) -> float:
        """2*w_{i-1}*w_{i+1}/m_i, the squared coupling in the GB bound."""
        return 2.0 * self.w_of(i - 1) * self.w_of(i + 1) / self.m_of(i)

    def coupling(self, i: int) -> float:
        """sqrt(2*w_{i-1}*w_{i+1}/m_i), the matrix-bound coupling."""
        return math.sqrt(self.coupling_sq(i))

    def tridiag_scale(self, i: int) -> float:
        """sqrt(m_i/(w_{i-1}*w_{i+1})), multiplying c_i in the cone triple."""
        return math.sqrt(self.m_of(i) / (self.w_of(i - 1) * self.w_of(i + 1)))

    def block_scale(self, i: int) -> float:
        """sqrt(2*m_i/(w_{i-1}*w_{i+1})), multiplying C_i in the block form."""
        return math.sqrt(2.0 * self.m_of(i) / (self.w_of(i - 1) * self.w_of(i + 1)))


@lru_cache(maxsize=None)
def degree_constants(d: int) -> DegreeConstants:
    """Cached DegreeConstants table for degree d."""
    return DegreeConstants(d)


def basis_eval(i: int, d: int, x: float) -> float:
    """Evaluate the i-th degree-d Bernstein basis function at x.

    Parameters
    ----------
    i, d : int
        Basis index and degree, 0 <= i <= d.
    x : float
        Evaluation point in [0, 1].

    Returns
    -------
    float
        C(d, i) * x**i * (1-x)**(d-i), a value in [0, 1].
    """
    if not 0 <= i <= d:
        raise ValueError(f"basis index {i} out of range [0, {d}]")
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x={x} outside [0, 1]")
    return binomial(d, i) * x**i * (1.0 - x) ** (d - i)


def evaluate(p: ScalarPoly, x: float) -> float:
    """Evaluate p at x in [0,1] by the De Casteljau recurrence.

    Numerically stable: every intermediate value is a convex combination of
    coefficients.
    """
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x={x} outside [0, 1]")
    b = np.array(p.coeffs)
    while b.size > 1:
        b = (1.0 - x) * b[:-1] + x * b[1:]
    return float(b[0])


def split(p: ScalarPoly) -> tuple[ScalarPoly, ScalarPoly]:
    """Subdivide p at the midpoint into the two halves p1 and p2.

    The halves satisfy p(x) = p1(2x) on [0, 1/2] and p(x) = p2(2x-1) on
    [1/2, 1].  This is the general-degree De Casteljau triangle at 1/2; the
    left half reads off the first column, the right half the diagonal.
    """
    n = p.degree
    left = np.empty(n + 1)
    right = np.empty(n + 1)
    b = np.array(p.coeffs)
    left[0] = b[0]
    right[n] = b[n]
    for r in range(1, n + 1):
        b = 0.5 * (b[:-1] + b[1:])
        left[r] = b[0]
        right[n - r] = b[-1]
    return ScalarPoly(left), ScalarPoly(right)


def from_monomial(mono) -> ScalarPoly:
    """Convert ascending monomial coefficients [m_0, ..., m_d] to Bernstein form.

    Uses the triangular map p_i = sum_{k<=i} C(i,k)/C(d,k) * m_k.  Accurate up
    to the documented conversion ceiling (degree ~20).
    """
    m = np.asarray(mono, dtype=float).reshape(-1)
    d = m.size - 1
    out = np.zeros(d + 1)
    for i in range(d + 1):
        out[i] = math.fsum(
            binomial(i, k) / binomial(d, k) * m[k] for k in range(i + 1)
        )
    return ScalarPoly(out)


def to_monomial(p: ScalarPoly) -> np.ndarray:
    """Convert p to ascending monomial coefficients [m_0, ..., m_d].

    m_k = C(d,k) * sum_{i<=k} (-1)**(k-i) C(k,i) p_i.  Inverse of
    `from_monomial` up to rounding; round-trips are identity to ~1e-12 below
    the degree ceiling.
    """
    c = p.coeffs
    d = p.degree
    out = np.zeros(d + 1)
    for k in range(d + 1):
        acc = math.fsum(
            (binomial(k, i) * c[i] if (k - i) % 2 == 0 else -binomial(k, i) * c[i])
            for i in range(k + 1)
        )
        out[k] = binomial(d, k) * acc
    return out


def degree_elevate(p: ScalarPoly, d_new: int) -> ScalarPoly:
    """Re-express p in the Bernstein basis of a higher degree d_new.

    The polynomial is unchanged; only the representation gains coefficients:
    q_j = sum_i p_i C(d,i) C(d_new-d, j-i) / C(d_new, j).
    """
    d = p.degree
    if d_new < d:
        raise ValueError(f"cannot elevate degree {d} polynomial to degree {d_new}")
    if d_new == d:
        return p
    r = d_new - d
    c = p.coeffs
    out = np.zeros(d_new + 1)
    for j in range(d_new + 1):
        acc = math.fsum(
            c[i] * binomial(d, i) * binomial(r, j - i)
            for i in range(max(0, j - r), min(d, j) + 1)
        )
        out[j] = acc / binomial(d_new, j)
    return ScalarPoly(out)


def shift(p: ScalarPoly, delta: float) -> ScalarPoly:
    """Add the constant delta to p.

    By partition of unity this is exactly adding delta to every Bernstein
    coefficient, so a lower-bound proof of p + delta is a proof of
    p >= -delta.
    """
    return ScalarPoly(p.coeffs + delta)


@dataclass(frozen=True)
class RemappedPoly:
    """A Bernstein polynomial together with the interval [lo, hi] it lives on.

    The coefficients are untouched: certification always happens on the
    normalized coefficients, and this record only carries the change of
    variables x -> (x - lo)/(hi - lo).
    """

    poly: ScalarPoly
    lo: float
    hi: float

    def normalize(self, x: float) -> float:
        return (x - self.lo) / (self.hi - self.lo)

    def evaluate(self, x: float) -> float:
        return evaluate(self.poly, self.normalize(x))


def remap_interval(p: ScalarPoly, r: float, s: float) -> RemappedPoly:
    """Record that p's Bernstein coefficients refer to the interval [r, s]."""
    if not r < s:
        raise ValueError(f"need r < s, got r={r}, s={s}")
    return RemappedPoly(p, float(r), float(s))
