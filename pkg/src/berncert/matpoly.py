"""Membership tests and block certificates for symmetric polynomial matrices.

A polynomial matrix P(x) = sum_i b_i(x) P_i is stored by its Bernstein
coefficient matrices.  The scalar criteria lift coefficient-wise: the
nonnegative-coefficient test becomes "every P_i is PSD", and the
geometric-mean test bounds each P_i below by a coupled matrix geometric mean
of its neighbors' positive parts (zero for an indefinite neighbor; see
``gb_matrix_bound``).  At n = 1 everything collapses to the scalar module.

PSD checks use the smallest eigenvalue with a declared tolerance relative to
the largest coefficient Frobenius norm (default 1e-9); floating point needs
the slack and the subdivision experiments use a grid oracle as backstop.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bernstein import degree_constants
from .symkernel import geo_mean, psd_project, symmetrize

__all__ = [
    "MatrixPoly",
    "check_block_certificate",
    "coefficient_scale",
    "eval_matrix",
    "gb_matrix_bound",
    "gb_matrix_witness",
    "in_gb_matrix",
    "in_nb_matrix",
    "min_eig_over_interval",
    "shift_matrix",
    "split_matrix",
]

DEFAULT_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class MatrixPoly:
    """Degree-d symmetric-matrix polynomial: one n x n matrix per index.

    Coefficients are symmetrized and frozen on construction.
    """

    coeffs: np.ndarray

    def __post_init__(self):
        arr = np.array(self.coeffs, dtype=float, copy=True)
        if arr.ndim != 3 or arr.shape[1] != arr.shape[2]:
            raise ValueError(
                f"expected shape (degree+1, n, n), got {arr.shape}"
            )
        if not np.all(np.isfinite(arr)):
            raise ValueError("coefficient entries must be finite")
        arr = 0.5 * (arr + np.transpose(arr, (0, 2, 1)))
        arr.flags.writeable = False
        object.__setattr__(self, "coeffs", arr)

    @property
    def degree(self) -> int:
        return self.coeffs.shape[0] - 1

    @property
    def dim(self) -> int:
        return self.coeffs.shape[1]

    def __repr__(self) -> str:
        return f"MatrixPoly(degree={self.degree}, dim={self.dim})"


def coefficient_scale(p: MatrixPoly) -> float:
    """Largest Frobenius norm among the coefficient matrices."""
    return float(np.max(np.linalg.norm(p.coeffs, axis=(1, 2)), initial=0.0))


def eval_matrix(p: MatrixPoly, x: float) -> np.ndarray:
    """Evaluate P(x) by the De Casteljau recurrence applied entrywise."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x={x} outside [0, 1]")
    b = np.array(p.coeffs)
    while b.shape[0] > 1:
        b = (1.0 - x) * b[:-1] + x * b[1:]
    return symmetrize(b[0])


def split_matrix(p: MatrixPoly) -> tuple[MatrixPoly, MatrixPoly]:
    """Midpoint subdivision, entrywise: P(x) = P1(2x) = P2(2x - 1)."""
    d = p.degree
    n = p.dim
    left = np.empty((d + 1, n, n))
    right = np.empty((d + 1, n, n))
    b = np.array(p.coeffs)
    left[0] = b[0]
    right[d] = b[d]
    for r in range(1, d + 1):
        b = 0.5 * (b[:-1] + b[1:])
        left[r] = b[0]
        right[d - r] = b[-1]
    return MatrixPoly(left), MatrixPoly(right)


def shift_matrix(p: MatrixPoly, delta: float) -> MatrixPoly:
    """Add delta * I to every coefficient, shifting P(x) by delta * I."""
    eye = np.eye(p.dim)
    return MatrixPoly(p.coeffs + delta * eye)


def _min_eig(m: np.ndarray) -> float:
    return float(np.linalg.eigvalsh(m)[0])


def in_nb_matrix(p: MatrixPoly, tol: float = DEFAULT_TOL) -> bool:
    """True iff every coefficient matrix is PSD within tol * scale."""
    floor = -tol * coefficient_scale(p)
    return all(_min_eig(p.coeffs[i]) >= floor for i in range(p.degree + 1))


def gb_matrix_bound(p: MatrixPoly, i: int) -> np.ndarray:
    """The coupled geometric-mean matrix bounding P_i from below (negated).

    Returns sqrt(2 w_{i-1} w_{i+1} / m_i) * ((P_{i-1})_+ # (P_{i+1})_+),
    a PSD matrix; the membership condition is P_i >= -bound.  Out-of-range
    neighbors are zero matrices, so the bound vanishes at the endpoints.

    The positive part of an *indefinite* neighbor is taken to be the zero
    matrix, not its PSD projection.  Per direction x this keeps the bound
    below sqrt((x'P_{i-1}x)_+ (x'P_{i+1}x)_+) so acceptance stays sound,
    and it is what makes the block-certificate witness verify; with the
    metric projection instead, the relaxed set admits polynomial matrices
    that are genuinely indefinite on [0,1].  For scalars (n = 1) the two
    readings coincide with max(x, 0).
    """
    d = p.degree
    if not 0 <= i <= d:
        raise ValueError(f"index {i} out of range [0, {d}]")
    if i == 0 or i == d:
        return np.zeros((p.dim, p.dim))
    left = p.coeffs[i - 1]
    right = p.coeffs[i + 1]
    if _min_eig(left) < 0.0 or _min_eig(right) < 0.0:
        return np.zeros((p.dim, p.dim))
    coupling = degree_constants(d).coupling(i)
    return coupling * geo_mean(psd_project(left), psd_project(right))


def in_gb_matrix(p: MatrixPoly, tol: float = DEFAULT_TOL) -> bool:
    """Geometric-mean test: P_i + gb_matrix_bound(P, i) PSD for every i.

    A coefficient that already passes the plain PSD test is accepted without
    computing its bound: the bound is PSD, so PSD coefficients always satisfy
    the relaxed inequality.  Besides skipping work, this makes acceptance a
    bit-for-bit superset of ``in_nb_matrix`` at the same tolerance, so the
    subdivision tree under this test is always a pruned subtree of the plain
    one.
    """
    floor = -tol * coefficient_scale(p)
    d = p.degree
    if _min_eig(p.coeffs[0]) < floor or _min_eig(p.coeffs[d]) < floor:
        return False
    for i in range(1, d):
        if _min_eig(p.coeffs[i]) >= floor:
            continue
        if _min_eig(p.coeffs[i] + gb_matrix_bound(p, i)) < floor:
            return False
    return True


def gb_matrix_witness(p: MatrixPoly) -> np.ndarray:
    """The block-certificate witness matrices C_0..C_d of the GB choice.

    C_i = -sqrt(w_{i-1} w_{i+1} / (2 m_i)) ((P_{i-1})_+ # (P_{i+1})_+), which
    is half the negated membership bound; endpoints are zero.  Whenever
    ``in_gb_matrix(p)`` holds this witness passes
    ``check_block_certificate``.
    """
    d = p.degree
    out = np.zeros_like(np.asarray(p.coeffs))
    for i in range(1, d):
        out[i] = -0.5 * gb_matrix_bound(p, i)
    return out


def check_block_certificate(p: MatrixPoly, c, tol: float = DEFAULT_TOL) -> bool:
    """Verify the sufficient 2n x 2n block conditions for witness matrices c.

    For each interior index the block matrix

        [[P_{i-1} - C_{i-1} - C_{i-1}^T,  k_i C_i      ],
         [k_i C_i^T,                      P_{i+1} - C_{i+1} - C_{i+1}^T]]

    with k_i = sqrt(2 m_i / (w_{i-1} w_{i+1})) must be PSD within
    tol * scale.  A True return certifies P(x) PSD on [0,1].  The witness
    matrices need not be symmetric, but the endpoint matrices must be zero.
    """
    c = np.asarray(c, dtype=float)
    d = p.degree
    n = p.dim
    if c.shape != (d + 1, n, n):
        raise ValueError(f"witness shape {c.shape} != {(d + 1, n, n)}")
    if np.any(c[0] != 0.0) or np.any(c[d] != 0.0):
        raise ValueError("witness endpoint matrices must be exactly zero")
    scale = max(
        coefficient_scale(p), float(np.max(np.linalg.norm(c, axis=(1, 2))))
    )
    floor = -tol * scale
    if d <= 1:
        return all(_min_eig(p.coeffs[i]) >= floor for i in range(d + 1))
    dc = degree_constants(d)
    for i in range(1, d):
        top = p.coeffs[i - 1] - c[i - 1] - c[i - 1].T
        bot = p.coeffs[i + 1] - c[i + 1] - c[i + 1].T
        off = dc.block_scale(i) * c[i]
        block = np.block([[top, off], [off.T, bot]])
        if _min_eig(symmetrize(block)) < floor:
            return False
    return True


def min_eig_over_interval(p: MatrixPoly, grid_points: int) -> float:
    """Smallest eigenvalue of P(x) over a uniform grid on [0,1].

    An approximate oracle for tests and experiments; refining a nested grid
    can only lower the value.  Evaluation here is a direct basis-weighted
    sum, deliberately independent of the De Casteljau path in
    ``eval_matrix``.
    """
    if grid_points < 2:
        raise ValueError(f"need at least 2 grid points, got {grid_points}")
    d = p.degree
    xs = np.linspace(0.0, 1.0, grid_points)
    # basis[i, j] = C(d,i) xs_j^i (1-xs_j)^(d-i), built by the binomial recurrence
    basis = np.empty((d + 1, grid_points))
    coef = 1.0
    for i in range(d + 1):
        basis[i] = coef * xs**i * (1.0 - xs) ** (d - i)
        coef = coef * (d - i) / (i + 1)
    values = np.tensordot(basis, p.coeffs, axes=(0, 0))
    values = 0.5 * (values + np.transpose(values, (0, 2, 1)))
    return float(np.min(np.linalg.eigvalsh(values)))
