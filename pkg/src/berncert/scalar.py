"""Scalar nonnegativity criteria on [0,1], from cheap tests to exact decisions.

Two sufficient membership tests:

* ``in_nb`` -- all Bernstein coefficients nonnegative;
* ``in_gb`` -- every coefficient bounded below by a weighted geometric mean
  of its neighbors' positive parts, a strictly larger set at identical cost.

Both are backed by an explicit certificate (``gb_witness`` /
``check_tridiag_certificate``), and the cubic case additionally carries exact
machinery: a witness search that is necessary *and* sufficient
(``cubic_socp_witness``), the discriminant characterization of strict
positivity (``cubic_positive_exact``), and the two-piece decomposition
(``st_decompose``).  ``nonneg_oracle`` is the exact ground truth everything
is validated against.

Certificate parametrization: the cubic literature often scales the auxiliary
constants by 3 relative to the general-degree form.  This module uses the
general-degree parametrization everywhere, so a classical cubic pair like
(-6, 0) appears here as (-2, 0).
"""

from __future__ import annotations

import math
from enum import Enum
from typing import NamedTuple, Optional

import numpy as np

from .bernstein import (
    CONVERSION_DEGREE_CEILING,
    ConePoint,
    ScalarPoly,
    binomial,
    cone_member,
    degree_constants,
    to_monomial,
)
from .sturm import nonneg_on_interval

__all__ = [
    "CubicBranch",
    "CubicVerdict",
    "check_tridiag_certificate",
    "cubic_discriminant",
    "cubic_positive_exact",
    "cubic_socp_feasible",
    "cubic_socp_witness",
    "gb_lower_bound",
    "gb_witness",
    "gram_pair",
    "in_gb",
    "in_nb",
    "nonneg_oracle",
    "st_decompose",
]


def in_nb(p: ScalarPoly) -> bool:
    """True iff every Bernstein coefficient of p is >= 0.

    Exact comparison, no tolerance: the criterion itself is exact in floating
    point, and any slack would break its soundness.
    """
    return bool(np.all(p.coeffs >= 0.0))


def gb_lower_bound(p: ScalarPoly, i: int) -> float:
    """The geometric-mean lower bound for coefficient i of p.

    Equals -sqrt((2*w_{i-1}*w_{i+1}/m_i) * (p_{i-1})_+ * (p_{i+1})_+), with
    out-of-range neighbor coefficients treated as zero, so the bound is 0 at
    both endpoints.  Computed as a single radical, exactly as written; the
    factored form rounds differently and can reject boundary members.
    """
    d = p.degree
    if not 0 <= i <= d:
        raise ValueError(f"index {i} out of range [0, {d}]")
    if i == 0 or i == d:
        return 0.0
    a = max(float(p.coeffs[i - 1]), 0.0)
    b = max(float(p.coeffs[i + 1]), 0.0)
    return -math.sqrt(degree_constants(d).coupling_sq(i) * a * b)


def in_gb(p: ScalarPoly) -> bool:
    """Geometric-mean Bernstein test: p_i >= gb_lower_bound(p, i) for all i.

    Contains the nonnegative-coefficient set and implies nonnegativity on
    [0,1].  Comparisons are exact (>=, no tolerance); for degree <= 1 there
    are no interior indices and this reduces to ``in_nb``.
    """
    c = p.coeffs
    d = p.degree
    if c[0] < 0.0 or c[d] < 0.0:
        return False
    for i in range(1, d):
        if c[i] < gb_lower_bound(p, i):
            return False
    return True


def gb_witness(p: ScalarPoly) -> np.ndarray:
    """The explicit certificate sequence c_0..c_d induced by the GB choice.

    c_i equals the geometric-mean lower bound at interior indices and 0 at
    the endpoints.  Whenever ``in_gb(p)`` holds, this witness passes
    ``check_tridiag_certificate``.
    """
    d = p.degree
    c = np.zeros(d + 1)
    for i in range(1, d):
        c[i] = gb_lower_bound(p, i)
    return c


def check_tridiag_certificate(p: ScalarPoly, c, tol: float = 1e-9) -> bool:
    """Verify the sufficient cone conditions for witness sequence c.

    For every interior index the triple

        (p_{i-1} - c_{i-1},  p_{i+1} - c_{i+1};  c_i * sqrt(m_i/(w_{i-1} w_{i+1})))

    must lie in the rotated second-order cone at tolerance `tol`.  A True
    return certifies p >= 0 on [0,1].  The witness must have c_0 = c_d = 0.

    For degree <= 1 the tridiagonal machinery is empty and nonnegativity is
    checked directly on the endpoint coefficients.
    """
    c = np.asarray(c, dtype=float).reshape(-1)
    d = p.degree
    if c.size != d + 1:
        raise ValueError(f"witness length {c.size} != degree+1 = {d + 1}")
    if c[0] != 0.0 or c[d] != 0.0:
        raise ValueError("witness endpoints must be exactly zero")
    q = p.coeffs
    if d <= 1:
        return bool(q[0] >= -tol and q[d] >= -tol)
    dc = degree_constants(d)
    for i in range(1, d):
        pt = ConePoint(
            q[i - 1] - c[i - 1], q[i + 1] - c[i + 1], c[i] * dc.tridiag_scale(i)
        )
        if not cone_member(pt, tol):
            return False
    return True


def nonneg_oracle(p: ScalarPoly, lo: float = 0.0, hi: float = 1.0) -> bool:
    """Exact decision of min p >= 0 on [lo, hi]; the ground-truth oracle.

    Converts to the monomial basis, prunes coefficients below
    1e-13 * max|coeff| (stabilizes degenerate leading coefficients produced
    by basis conversion), then decides exactly in rational arithmetic via a
    Sturm chain with root isolation.  Degree must not exceed the conversion
    ceiling (20).
    """
    if not lo < hi:
        raise ValueError(f"need lo < hi, got lo={lo}, hi={hi}")
    if p.degree > CONVERSION_DEGREE_CEILING:
        raise ValueError(
            f"oracle limited to degree <= {CONVERSION_DEGREE_CEILING}, got {p.degree}"
        )
    mono = to_monomial(p)
    top = np.max(np.abs(mono))
    if top == 0.0:
        return True
    mono = np.where(np.abs(mono) < 1e-13 * top, 0.0, mono)
    return nonneg_on_interval(mono.tolist(), lo, hi)


# ----------------------------------------------------------------------
# Exact cubic machinery
# ----------------------------------------------------------------------


def _require_cubic(p: ScalarPoly) -> None:
    if p.degree != 3:
        raise ValueError(f"cubic operation on degree-{p.degree} polynomial")


def cubic_socp_feasible(p: ScalarPoly, c1: float, c2: float, tol: float = 1e-9) -> bool:
    """Feasibility of the pair (c1, c2) for the exact cubic cone conditions."""
    _require_cubic(p)
    return check_tridiag_certificate(p, np.array([0.0, c1, c2, 0.0]), tol)


def _c1_interval(p, c2: float) -> tuple[float, float]:
    """Admissible c1 range for a given c2 (requires p0 >= 0, p3 > 0).

    Constraint two pins c1 <= p1 - 3*c2^2/(4*p3); constraint one wants
    |c1| <= sqrt((4/3)*p0*(p2 - c2)).  An empty range comes back inverted.
    """
    p0, p1, p2, p3 = p.coeffs
    c1max = p1 - 0.75 * c2 * c2 / p3
    room = (4.0 / 3.0) * p0 * (p2 - c2)
    if room < 0.0:
        return 0.0, -1.0
    bound1 = math.sqrt(room)
    return -bound1, min(bound1, c1max)


def _witness_slack(p, c2: float) -> float:
    """Joint feasibility margin at c2: concave, so golden section is exhaustive."""
    lo1, hi1 = _c1_interval(p, c2)
    p2 = float(p.coeffs[2])
    return min(hi1 - lo1, p2 - c2)


def _pick_c1(p, c2: float) -> float:
    """A c1 strictly inside the admissible range when it has width.

    Interior points keep both cone inequalities slack, so the decomposition
    built from the witness survives exact-comparison membership tests.
    """
    lo1, hi1 = _c1_interval(p, c2)
    if lo1 < 0.0 < hi1:
        return 0.0
    return 0.5 * (lo1 + hi1)


def _witness_c2_bracket(p) -> tuple[float, float]:
    """A bracket guaranteed to contain every feasible c2 (p0, p3 > 0).

    Any feasible c2 satisfies c2 <= p2 and |c2| <= g(|c2|) with
    g(t) = sqrt((4/3) p3 ((p1)_+ + sqrt((4/3) p0 ((p2)_+ + t)))).  Since g is
    increasing with g(t)/t -> 0, iterating from a large start descends to the
    largest fixed point, which upper-bounds every feasible magnitude.
    """
    p0, p1, p2, p3 = (float(v) for v in p.coeffs)
    t = 1e6 * (1.0 + max(abs(p0), abs(p1), abs(p2), abs(p3)))
    for _ in range(128):
        inner = math.sqrt((4.0 / 3.0) * p0 * (max(p2, 0.0) + t))
        t_next = math.sqrt((4.0 / 3.0) * p3 * (max(p1, 0.0) + inner))
        if t_next >= t * (1.0 - 1e-13):
            t = max(t, t_next)
            break
        t = t_next
    lo = -(t * 1.000001 + 1e-12)
    return lo, p2


def cubic_socp_witness(p: ScalarPoly) -> Optional[tuple[float, float]]:
    """Search for (c1, c2) certifying the cubic p, or None if p is not in P.

    Membership itself is decided by the exact oracle (for cubics the cone
    conditions are feasible exactly when p is nonnegative on [0,1]).  The
    witness search first tries the geometric-mean choice, then falls back to
    a golden-section search on c2 maximizing the concave feasibility margin.
    """
    _require_cubic(p)
    if not nonneg_oracle(p):
        return None
    w = gb_witness(p)
    cand = (float(w[1]), float(w[2]))
    if cubic_socp_feasible(p, *cand, tol=0.0):
        return cand

    p0, p1, p2, p3 = (float(v) for v in p.coeffs)
    # an oracle-accepted cubic has p(0), p(1) >= 0; anything at or below zero
    # (including pruned negative dust) forces the corresponding c to vanish
    if p3 <= 0.0 and p0 <= 0.0:
        return (0.0, 0.0)
    if p3 <= 0.0:
        # second cone forces c2 = 0; then c1 as close to zero as allowed
        return (min(0.0, p1), 0.0)
    if p0 <= 0.0:
        return (0.0, min(0.0, p2))

    lo, hi = _witness_c2_bracket(p)
    phi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    x1 = b - phi * (b - a)
    x2 = a + phi * (b - a)
    f1 = _witness_slack(p, x1)
    f2 = _witness_slack(p, x2)
    for _ in range(200):
        if f1 >= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - phi * (b - a)
            f1 = _witness_slack(p, x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + phi * (b - a)
            f2 = _witness_slack(p, x2)
    c2 = x1 if f1 >= f2 else x2
    return (_pick_c1(p, c2), c2)


class CubicBranch(Enum):
    """Which disjunct establishes strict positivity of a cubic."""

    POSITIVE_COEFFICIENTS = "positive_coefficients"
    DISCRIMINANT_NEGATIVE = "discriminant_negative"
    NEITHER = "neither"


class CubicVerdict(NamedTuple):
    strictly_positive: bool
    discriminant: float
    branch: CubicBranch


def cubic_discriminant(p: ScalarPoly) -> float:
    """Discriminant of a cubic, directly from its Bernstein coefficients.

    Equals -27 * (-3 p1^2 p2^2 + 4 p0 p2^3 + 4 p1^3 p3 - 6 p0 p1 p2 p3
    + p0^2 p3^2), and agrees with the classical monomial-basis discriminant
    18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2 through basis conversion.
    """
    _require_cubic(p)
    p0, p1, p2, p3 = (float(v) for v in p.coeffs)
    inner = (
        -3.0 * p1 * p1 * p2 * p2
        + 4.0 * p0 * p2**3
        + 4.0 * p1**3 * p3
        - 6.0 * p0 * p1 * p2 * p3
        + p0 * p0 * p3 * p3
    )
    return -27.0 * inner


def cubic_positive_exact(p: ScalarPoly) -> CubicVerdict:
    """Exact test for strict positivity of a cubic on [0,1].

    Strictly positive iff all coefficients are positive, or p0 > 0, p3 > 0
    and -D(p) > 0.  This decides the interior of the nonnegative set only;
    on its boundary the discriminant vanishes for both signs of p.
    """
    _require_cubic(p)
    disc = cubic_discriminant(p)
    c = p.coeffs
    if bool(np.all(c > 0.0)):
        return CubicVerdict(True, disc, CubicBranch.POSITIVE_COEFFICIENTS)
    if c[0] > 0.0 and c[3] > 0.0 and -disc > 0.0:
        return CubicVerdict(True, disc, CubicBranch.DISCRIMINANT_NEGATIVE)
    return CubicVerdict(False, disc, CubicBranch.NEITHER)


def _split_exact(total: float, part: float) -> tuple[float, float]:
    """Split total into near + comp with near + comp == total exactly.

    ``near`` is ``part`` up to one rounding; the complement absorbs the
    error, so the decomposition below reproduces p coefficientwise with no
    residual at all.
    """
    comp = total - part
    near = total - comp
    if near + comp == total:
        return near, comp
    for cand in (np.nextafter(comp, -np.inf), np.nextafter(comp, np.inf)):
        near = total - cand
        if near + cand == total:
            return near, float(cand)
    return total - comp, comp  # unreachable in practice


def st_decompose(p: ScalarPoly) -> Optional[tuple[ScalarPoly, ScalarPoly]]:
    """Split a nonnegative cubic into the two one-sided cone pieces.

    Returns s = (p0, c1, p2 - c2, 0) and t = (0, p1 - c1, c2, p3) for a
    feasible witness (c1, c2); both pieces then satisfy their respective
    cone conditions (s0, s2; sqrt(3/2) s1) and (t1, t3; sqrt(3/2) t2) and lie
    in the geometric-mean set.  None iff p is not nonnegative on [0,1].
    The returned pair sums to p exactly, coefficient by coefficient.

    The zero witness is preferred when feasible (it decomposes members of the
    nonnegative-coefficient set into their even/odd coefficient parts), then
    the geometric-mean witness, then the general search.
    """
    _require_cubic(p)
    p0, p1, p2, p3 = (float(v) for v in p.coeffs)
    pair: Optional[tuple[float, float]] = None
    if cubic_socp_feasible(p, 0.0, 0.0, tol=0.0):
        pair = (0.0, 0.0)
    else:
        w = gb_witness(p)
        if cubic_socp_feasible(p, float(w[1]), float(w[2]), tol=0.0):
            pair = (float(w[1]), float(w[2]))
        else:
            pair = cubic_socp_witness(p)
    if pair is None:
        return None
    s1, t1 = _split_exact(p1, pair[0])
    t2, s2 = _split_exact(p2, pair[1])
    s = ScalarPoly([p0, s1, s2, 0.0])
    t = ScalarPoly([0.0, t1, t2, p3])
    return s, t


# ----------------------------------------------------------------------
# Tridiagonal Gram pair for odd degree
# ----------------------------------------------------------------------


def gram_pair(p: ScalarPoly, c) -> tuple[np.ndarray, np.ndarray]:
    """Tridiagonal Gram matrices (M1, M2) of an odd-degree polynomial.

    For degree 2k+1 and any witness sequence c (endpoints zero), the
    identity

        p(x) = (1-x) * b(x)^T M1 b(x) + x * b(x)^T M2 b(x)

    holds algebraically, where b(x) is the degree-k Bernstein basis vector.
    The witness only affects whether the matrices are positive semidefinite:
    interlacing the 2x2 cone blocks of a feasible certificate makes them so.

    The even-degree analog has a different block structure and is not
    implemented; even degrees are rejected.
    """
    d = p.degree
    if d % 2 == 0 or d < 3:
        raise ValueError(f"gram_pair requires odd degree >= 3, got {d}")
    c = np.asarray(c, dtype=float).reshape(-1)
    if c.size != d + 1:
        raise ValueError(f"witness length {c.size} != degree+1 = {d + 1}")
    if c[0] != 0.0 or c[d] != 0.0:
        raise ValueError("witness endpoints must be exactly zero")
    k = (d - 1) // 2
    q = p.coeffs

    def a_const(j: int) -> float:
        return binomial(d, j) / binomial(k, j // 2) ** 2

    def f_const(j: int) -> float:
        # off-diagonal weight for c_j between half-basis rows lo and lo+1
        lo = (j - 1) // 2
        return binomial(d, j) / (2.0 * binomial(k, lo) * binomial(k, lo + 1))

    m1 = np.zeros((k + 1, k + 1))
    m2 = np.zeros((k + 1, k + 1))
    for j in range(k + 1):
        m1[j, j] = a_const(2 * j) * (q[2 * j] - c[2 * j])
        m2[j, j] = a_const(2 * j + 1) * (q[2 * j + 1] - c[2 * j + 1])
    for j in range(k):
        m1[j, j + 1] = m1[j + 1, j] = f_const(2 * j + 1) * c[2 * j + 1]
        m2[j, j + 1] = m2[j + 1, j] = f_const(2 * j + 2) * c[2 * j + 2]
    return m1, m2
