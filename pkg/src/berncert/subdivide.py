"""Recursive midpoint-subdivision certifier, generic over the leaf criterion.

The engine proves p >= -delta on [0,1] (or P(x) >= -delta*I for matrix
polynomials) by shifting once at the root and bisecting until every leaf
passes a sound acceptance test.  Soundness is inherited from the criterion;
the interesting output is the number of splits, which is what the
experiments compare across criteria.

Counting convention: ``splits`` is the number of split operations performed
anywhere in the tree, so a root that passes immediately scores 0 and a
single bisection with two passing children scores 1.  Traversal is
depth-first, left child first; on hitting the depth limit the run stops and
reports the splits so far plus the leftmost failing sub-interval.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .bernstein import ScalarPoly, shift, split
from .matpoly import (
    DEFAULT_TOL,
    MatrixPoly,
    in_gb_matrix,
    in_nb_matrix,
    shift_matrix,
    split_matrix,
)
from .scalar import in_gb, in_nb

__all__ = ["Criterion", "SubdivisionReport", "certify_matrix", "certify_scalar"]


class Criterion(Enum):
    """Leaf acceptance test: plain nonnegative coefficients or the
    geometric-mean relaxation.  Both are sound, and every NB-accepted leaf is
    GB-accepted, so the GB recursion tree is a pruned subtree of the NB one.
    """

    NB = "nb"
    GB = "gb"


@dataclass(frozen=True)
class SubdivisionReport:
    """Outcome of one certification run.

    ``failure_leaf`` is the normalized sub-interval [lo, hi) at which the
    depth limit fired, present exactly when ``certified`` is False.
    """

    certified: bool
    splits: int
    max_depth_reached: int
    failure_leaf: Optional[tuple[float, float]]


class _Run:
    __slots__ = ("splits", "deepest", "failure")

    def __init__(self):
        self.splits = 0
        self.deepest = 0
        self.failure: Optional[tuple[float, float]] = None


def _certify(poly, accept, bisect, max_depth: int) -> SubdivisionReport:
    run = _Run()

    def recurse(node, lo: float, hi: float, depth: int) -> bool:
        run.deepest = max(run.deepest, depth)
        if accept(node):
            return True
        if depth >= max_depth:
            run.failure = (lo, hi)
            return False
        run.splits += 1
        left, right = bisect(node)
        mid = 0.5 * (lo + hi)
        return recurse(left, lo, mid, depth + 1) and recurse(
            right, mid, hi, depth + 1
        )

    ok = recurse(poly, 0.0, 1.0, 0)
    return SubdivisionReport(ok, run.splits, run.deepest, run.failure)


def certify_scalar(
    p: ScalarPoly,
    delta: float = 0.0,
    criterion: Criterion = Criterion.GB,
    max_depth: int = 32,
) -> SubdivisionReport:
    """Certify p >= -delta on [0,1] by subdivision under the given criterion.

    The shift by delta happens once at the root; splitting is linear and the
    basis sums to one, so children inherit the shifted coefficients exactly.
    A certified report proves the bound.  Failure to certify within
    ``max_depth`` is a report state, not an error.
    """
    if max_depth < 0:
        raise ValueError("max_depth must be >= 0")
    if delta < 0.0:
        raise ValueError("delta must be >= 0")
    accept = in_nb if criterion == Criterion.NB else in_gb
    return _certify(shift(p, delta), accept, split, max_depth)


def certify_matrix(
    p: MatrixPoly,
    delta: float = 0.0,
    criterion: Criterion = Criterion.GB,
    max_depth: int = 32,
    tol: float = DEFAULT_TOL,
) -> SubdivisionReport:
    """Certify P(x) >= -delta * I on [0,1] by subdivision.

    Matrix analog of ``certify_scalar``: the root shift adds delta * I to
    every coefficient and leaves are tested with the PSD membership tests at
    tolerance ``tol``.
    """
    if max_depth < 0:
        raise ValueError("max_depth must be >= 0")
    if delta < 0.0:
        raise ValueError("delta must be >= 0")
    test = in_nb_matrix if criterion == Criterion.NB else in_gb_matrix

    def accept(node: MatrixPoly) -> bool:
        return test(node, tol)

    return _certify(shift_matrix(p, delta), accept, split_matrix, max_depth)
