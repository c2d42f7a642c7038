import numpy as np
import pytest

from berncert import (
    Criterion,
    MatrixPoly,
    ScalarPoly,
    certify_matrix,
    certify_scalar,
    degree_elevate,
    evaluate,
    from_monomial,
    min_eig_over_interval,
    shift,
)


def quad_at(t):
    return degree_elevate(ScalarPoly([t * t, t * t - t, (1 - t) ** 2]), 3)


def test_counting_convention():
    # (x-1/2)^2 at delta=1e-4: one split, both children pass
    report = certify_scalar(quad_at(0.5), 1e-4, Criterion.NB, 6)
    assert report.certified and report.splits == 1
    assert report.max_depth_reached == 1
    assert report.failure_leaf is None

    report = certify_scalar(ScalarPoly([1, 1, 1, 1]), 0.0, Criterion.NB, 6)
    assert report.certified and report.splits == 0 and report.max_depth_reached == 0


def test_gb_accepts_where_nb_splits():
    p = ScalarPoly([1, -2, 3, 1])
    gb = certify_scalar(p, 0.0, Criterion.GB, 10)
    nb = certify_scalar(p, 0.0, Criterion.NB, 10)
    assert gb.certified and gb.splits == 0
    assert nb.certified and nb.splits >= 1


def test_depth_exhaustion_reports_leaf():
    # (x-1/2)^2 - tiny is not certifiable: depth limit must fire
    p = shift(quad_at(0.5), 0.0)
    p = ScalarPoly(p.coeffs - 1e-6)
    report = certify_scalar(p, 0.0, Criterion.GB, 4)
    assert not report.certified
    assert report.failure_leaf is not None
    lo, hi = report.failure_leaf
    assert 0.0 <= lo < hi <= 1.0
    assert hi - lo == pytest.approx(2.0**-4)
    report2 = certify_scalar(p, 0.0, Criterion.GB, 4)
    assert report == report2  # deterministic


def test_soundness_random():
    rng = np.random.default_rng(0)
    for _ in range(200):
        d = int(rng.integers(2, 7))
        p = ScalarPoly(rng.normal(size=d + 1))
        delta = float(rng.choice([0.0, 1e-4, 1e-2]))
        crit = Criterion.NB if rng.random() < 0.5 else Criterion.GB
        report = certify_scalar(p, delta, crit, 8)
        if report.certified:
            xs = np.linspace(0, 1, 4001)
            vals = [evaluate(p, x) + delta for x in xs[:: 40]]
            assert min(vals) >= -1e-7


def test_dominance_random():
    rng = np.random.default_rng(1)
    for _ in range(300):
        d = int(rng.integers(2, 7))
        p = ScalarPoly(rng.normal(size=d + 1))
        nb = certify_scalar(p, 1e-4, Criterion.NB, 8)
        gb = certify_scalar(p, 1e-4, Criterion.GB, 8)
        if nb.certified and gb.certified:
            assert gb.splits <= nb.splits


def test_delta_monotonicity_random():
    rng = np.random.default_rng(2)
    for _ in range(150):
        p = quad_at(float(rng.random()))
        for crit in (Criterion.NB, Criterion.GB):
            small = certify_scalar(p, 1e-4, crit, 8)
            large = certify_scalar(p, 1e-3, crit, 8)
            if small.certified:
                assert large.certified and large.splits <= small.splits


def test_certify_matrix_basic():
    const = MatrixPoly(np.broadcast_to(np.eye(3), (4, 3, 3)).copy())
    report = certify_matrix(const, 0.0, Criterion.NB, 6)
    assert report.certified and report.splits == 0

    # GB-member with an indefinite middle coefficient: zero splits under GB,
    # at least one under NB
    coeffs = np.stack(
        [np.eye(2) * 4.0, np.diag([-0.5, -0.5]), np.eye(2) * 4.0, np.eye(2)]
    )
    p = MatrixPoly(coeffs)
    gb = certify_matrix(p, 0.0, Criterion.GB, 8)
    nb = certify_matrix(p, 0.0, Criterion.NB, 8)
    assert gb.certified and gb.splits == 0
    assert nb.splits >= 1


def test_matrix_reduction_matches_scalar_counts():
    rng = np.random.default_rng(3)
    for _ in range(100):
        c = rng.normal(size=4)
        p = ScalarPoly(c)
        m = MatrixPoly(c.reshape(-1, 1, 1))
        for crit in (Criterion.NB, Criterion.GB):
            rs = certify_scalar(p, 1e-4, crit, 6)
            rm = certify_matrix(m, 1e-4, crit, 6, tol=0.0)
            assert rs.splits == rm.splits and rs.certified == rm.certified


def test_matrix_soundness():
    rng = np.random.default_rng(4)
    for _ in range(40):
        n = int(rng.integers(2, 4))
        coeffs = rng.normal(size=(4, n, n)) * 0.5 + np.eye(n)
        p = MatrixPoly(coeffs)
        report = certify_matrix(p, 1e-4, Criterion.GB, 8)
        if report.certified:
            scale = max(np.linalg.norm(p.coeffs[i]) for i in range(4))
            assert min_eig_over_interval(p, 1001) + 1e-4 >= -1e-7 * scale


def test_argument_validation():
    p = ScalarPoly([1, 1])
    with pytest.raises(ValueError):
        certify_scalar(p, -1.0, Criterion.NB, 4)
    with pytest.raises(ValueError):
        certify_scalar(p, 0.0, Criterion.NB, -1)


def test_root_failure_at_depth_zero():
    p = ScalarPoly([-1, -1, -1, -1])
    report = certify_scalar(p, 0.0, Criterion.GB, 0)
    assert not report.certified and report.splits == 0
    assert report.failure_leaf == (0.0, 1.0)
