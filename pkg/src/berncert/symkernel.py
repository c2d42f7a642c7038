"""Dense symmetric-matrix kernel: spectral decomposition, PSD projection,
matrix square root, and the matrix geometric mean.

All tolerances are relative to the Frobenius-norm scale of the inputs so
behavior is unit-free.  Matrices are symmetrized on entry ((M + M^T)/2) and
every routine returns a symmetric array.  The eigensolver is numpy's LAPACK
``eigh``, which is deterministic for a fixed input and keeps the
reconstruction and orthogonality residuals far below the contract bounds.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

__all__ = [
    "EigDecomp",
    "eig_sym",
    "geo_mean",
    "psd_project",
    "sqrt_psd",
    "symmetrize",
]

#: Inputs to the PSD-only routines may dip this far (relative) below zero.
PSD_TOLERANCE = 1e-8

#: Condition number beyond which geo_mean switches to its regularized path.
_COND_CEILING = 1e12

#: Regularization size for the continuity extension of the geometric mean.
_GEO_EPS = 1e-12


def symmetrize(x) -> np.ndarray:
    """Return (X + X^T)/2 as a float array, validating shape and finiteness."""
    a = np.asarray(x, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    return 0.5 * (a + a.T)


class EigDecomp(NamedTuple):
    """Spectral factorization X = vectors @ diag(values) @ vectors.T.

    Eigenvalues are sorted descending; the vector matrix is orthogonal.
    """

    vectors: np.ndarray
    values: np.ndarray


def eig_sym(x) -> EigDecomp:
    """Eigendecomposition of a symmetric matrix, eigenvalues descending."""
    a = symmetrize(x)
    vals, vecs = np.linalg.eigh(a)
    return EigDecomp(vecs[:, ::-1].copy(), vals[::-1].copy())


def psd_project(x) -> np.ndarray:
    """Orthogonal (Frobenius) projection onto the positive semidefinite cone.

    Clips negative eigenvalues to zero in the eigenbasis.  Idempotent, and
    the identity on matrices that are already PSD.
    """
    a = symmetrize(x)
    vals, vecs = np.linalg.eigh(a)
    clipped = np.clip(vals, 0.0, None)
    return symmetrize((vecs * clipped) @ vecs.T)


def sqrt_psd(x) -> np.ndarray:
    """The unique PSD square root of a PSD matrix.

    Eigenvalue dust down to -PSD_TOLERANCE * ||X||_F is clamped to zero;
    anything below that raises, since the square root of an indefinite
    matrix is not defined here.
    """
    a = symmetrize(x)
    vals, vecs = np.linalg.eigh(a)
    scale = float(np.linalg.norm(a))
    if vals.size and vals[0] < -PSD_TOLERANCE * max(scale, 1e-300):
        raise ValueError(
            f"matrix is not PSD within tolerance: min eigenvalue {vals[0]:.3e}"
        )
    root = np.sqrt(np.clip(vals, 0.0, None))
    return symmetrize((vecs * root) @ vecs.T)


def _geo_mean_pd(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # A^(1/2) (A^(-1/2) B A^(-1/2))^(1/2) A^(1/2) for positive definite A
    vals, vecs = np.linalg.eigh(a)
    root = (vecs * np.sqrt(vals)) @ vecs.T
    inv_root = (vecs * (1.0 / np.sqrt(vals))) @ vecs.T
    middle = symmetrize(inv_root @ b @ inv_root)
    mvals, mvecs = np.linalg.eigh(middle)
    msqrt = (mvecs * np.sqrt(np.clip(mvals, 0.0, None))) @ mvecs.T
    return symmetrize(root @ msqrt @ root)


def geo_mean(a, b) -> np.ndarray:
    """Matrix geometric mean of two PSD matrices.

    For positive definite inputs this is
    A^(1/2) (A^(-1/2) B A^(-1/2))^(1/2) A^(1/2): the Loewner-largest X with
    [[A, X], [X, B]] PSD, and symmetric in its arguments.  Singular or
    ill-conditioned (cond > 1e12) inputs take the continuity extension:
    regularize both by eps * trace_scale * I with eps = 1e-12, compute, then
    project onto the PSD cone and zero entries below 1e-10 * scale.  The
    regularization error is O(sqrt(eps)).

    A zero argument short-circuits to the zero matrix, the exact limit.
    """
    a = symmetrize(a)
    b = symmetrize(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    n = a.shape[0]
    norm_a = float(np.linalg.norm(a))
    norm_b = float(np.linalg.norm(b))
    scale = norm_a + norm_b
    if norm_a == 0.0 or norm_b == 0.0:
        return np.zeros((n, n))
    ea = np.linalg.eigvalsh(a)
    eb = np.linalg.eigvalsh(b)
    floor = -PSD_TOLERANCE * scale
    if ea[0] < floor or eb[0] < floor:
        raise ValueError(
            "geo_mean requires PSD inputs within tolerance: "
            f"min eigenvalues {ea[0]:.3e}, {eb[0]:.3e}"
        )
    well_pd = (
        ea[0] > 0.0
        and eb[0] > 0.0
        and ea[-1] / ea[0] <= _COND_CEILING
        and eb[-1] / eb[0] <= _COND_CEILING
    )
    if well_pd:
        return _geo_mean_pd(a, b)
    trace_scale = 0.5 * (np.trace(a) + np.trace(b))
    if trace_scale <= 0.0:
        trace_scale = scale
    reg = _GEO_EPS * trace_scale * np.eye(n)
    g = _geo_mean_pd(a + reg, b + reg)
    g = psd_project(g)
    g[np.abs(g) < 1e-10 * scale] = 0.0
    return symmetrize(g)
