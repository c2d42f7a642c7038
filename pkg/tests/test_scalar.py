import math

import numpy as np
import pytest

from berncert import (
    CubicBranch,
    ScalarPoly,
    check_tridiag_certificate,
    cone_member,
    cubic_discriminant,
    cubic_positive_exact,
    cubic_socp_feasible,
    cubic_socp_witness,
    gb_lower_bound,
    gb_witness,
    gram_pair,
    in_gb,
    in_nb,
    nonneg_oracle,
    st_decompose,
    to_monomial,
)
from berncert.bernstein import basis_eval, degree_constants

SQRT32 = math.sqrt(1.5)


def random_cubics(count, seed, lo=-3.0, hi=5.0):
    rng = np.random.default_rng(seed)
    return [ScalarPoly(c) for c in rng.uniform(lo, hi, size=(count, 4))]


def test_in_nb():
    assert in_nb(ScalarPoly([1, 1, 1, 1]))
    assert not in_nb(ScalarPoly([1, -2, 3, 1]))
    assert in_nb(ScalarPoly([0, 0, 0, 0]))
    assert not in_nb(ScalarPoly([1, -1e-300, 1, 1]))  # exact comparison


def test_gb_lower_bound_examples():
    p = ScalarPoly([1, -2, 3, 1])
    assert gb_lower_bound(p, 1) == -2.0
    q = ScalarPoly([1, -1, 1, -1, 1])
    assert gb_lower_bound(q, 1) == pytest.approx(-math.sqrt(3) / 2, abs=1e-15)
    # a negative neighbor kills the bound
    assert gb_lower_bound(ScalarPoly([-1, 0, 3, 1]), 1) == 0.0
    assert gb_lower_bound(p, 0) == 0.0
    assert gb_lower_bound(p, 3) == 0.0


def test_in_gb_examples():
    assert in_gb(ScalarPoly([1, -2, 3, 1]))  # boundary case accepted exactly
    assert not in_gb(ScalarPoly([1, -1, 1, -1, 1]))
    assert not in_nb(ScalarPoly([1, -2, 3, 1]))


def test_in_gb_matches_explicit_cubic_inequalities():
    # the degree-3 set written out: p0,p3 >= 0, p1 >= -2 sqrt(p0 (p2)+/3), ...
    rng = np.random.default_rng(5)
    for _ in range(5000):
        c = rng.uniform(-3, 5, size=4)
        p = ScalarPoly(c)
        explicit = (
            c[0] >= 0
            and c[3] >= 0
            and c[1] >= -math.sqrt(4.0 / 3.0 * c[0] * max(c[2], 0.0))
            and c[2] >= -math.sqrt(4.0 / 3.0 * c[3] * max(c[1], 0.0))
        )
        assert in_gb(p) == explicit


def test_nb_implies_gb():
    rng = np.random.default_rng(6)
    for d in range(2, 9):
        for _ in range(500):
            p = ScalarPoly(np.abs(rng.normal(size=d + 1)))
            assert in_nb(p) and in_gb(p)


def test_gb_scaling_invariance():
    rng = np.random.default_rng(7)
    for _ in range(2000):
        c = rng.normal(size=5)
        for lam in (0.5, 2.0, 17.0):
            assert in_gb(ScalarPoly(c)) == in_gb(ScalarPoly(lam * c))


def test_degenerate_degrees():
    assert in_gb(ScalarPoly([2.0])) and in_nb(ScalarPoly([2.0]))
    assert not in_gb(ScalarPoly([-1.0]))
    assert in_gb(ScalarPoly([0.5, 1.0])) == in_nb(ScalarPoly([0.5, 1.0]))
    assert in_gb(ScalarPoly([0.5, -1e-12])) == in_nb(ScalarPoly([0.5, -1e-12]))


def test_gb_witness_examples():
    w = gb_witness(ScalarPoly([1, -2, 3, 1]))
    assert w[0] == 0.0 and w[3] == 0.0
    assert w[1] == -2.0 and w[2] == 0.0
    assert np.array_equal(gb_witness(ScalarPoly([1, 0, 0, 1])), np.zeros(4))


def test_check_tridiag_examples():
    p = ScalarPoly([1, -2, 3, 1])
    assert check_tridiag_certificate(p, [0, -2, 0, 0])
    assert check_tridiag_certificate(ScalarPoly([1, 1, 1, 1]), np.zeros(4))
    q = ScalarPoly([1, -1, 1, -1, 1])
    assert not check_tridiag_certificate(q, gb_witness(q))
    with pytest.raises(ValueError):
        check_tridiag_certificate(p, [0, -2, 0])
    with pytest.raises(ValueError):
        check_tridiag_certificate(p, [0.1, -2, 0, 0])


def test_witness_soundness_random():
    # in_gb => the geometric-mean witness certifies
    rng = np.random.default_rng(8)
    hits = 0
    for d in range(2, 9):
        for _ in range(2000):
            p = ScalarPoly(rng.normal(size=d + 1))
            if in_gb(p):
                hits += 1
                assert check_tridiag_certificate(p, gb_witness(p), 1e-9)
    assert hits > 200


def test_certificate_soundness_random():
    # feasible-by-construction (p, c) pairs must certify truly nonneg p
    rng = np.random.default_rng(9)
    for d in range(2, 9):
        dc = degree_constants(d)
        for _ in range(100):
            c = np.zeros(d + 1)
            c[1:d] = rng.normal(size=d - 1) * 0.5
            margin = max(
                (abs(c[i]) * dc.tridiag_scale(i) for i in range(1, d)), default=0.0
            )
            r = margin / math.sqrt(2.0) * 1.01 + 0.01
            p = ScalarPoly(c + r)
            assert check_tridiag_certificate(p, c, 0.0)
            assert nonneg_oracle(p)


def test_cubic_socp_witness_examples():
    p = ScalarPoly([1, -2, 3, 1])
    w = cubic_socp_witness(p)
    assert w is not None
    assert cubic_socp_feasible(p, *w, tol=0.0)
    # the classical cubic pair (-6, 0) is ours scaled by 3
    assert cubic_socp_feasible(p, -6.0 / 3.0, 0.0, tol=0.0)
    assert cubic_socp_feasible(ScalarPoly([1, 1, 1, 1]), 0.0, 0.0, tol=0.0)
    assert cubic_socp_witness(ScalarPoly([1, -2, 0, 0])) is None
    with pytest.raises(ValueError):
        cubic_socp_witness(ScalarPoly([1, 2, 3]))


def test_cubic_exactness_random():
    # witness present <=> oracle-nonnegative, and the witness itself verifies
    for p in random_cubics(2000, seed=10):
        w = cubic_socp_witness(p)
        assert (w is not None) == nonneg_oracle(p)
        if w is not None:
            assert cubic_socp_feasible(p, *w, tol=1e-9)


def test_cubic_discriminant_examples():
    assert cubic_discriminant(ScalarPoly([1, -2, 0, 0])) == 0.0
    assert cubic_discriminant(ScalarPoly([1, -2, 3, 0])) == 0.0
    assert cubic_discriminant(ScalarPoly([1, -2, 3, 1])) == -135.0
    with pytest.raises(ValueError):
        cubic_discriminant(ScalarPoly([1, 2]))


def classical_discriminant(p):
    # independent route: 18abcd - 4b^3 d + b^2 c^2 - 4 a c^3 - 27 a^2 d^2 on
    # the monomial form a x^3 + b x^2 + c x + d
    m = to_monomial(p)
    d, c, b, a = m
    return (
        18 * a * b * c * d
        - 4 * b**3 * d
        + b**2 * c**2
        - 4 * a * c**3
        - 27 * a**2 * d**2
    )


def test_discriminant_agrees_with_monomial_route():
    for p in random_cubics(3000, seed=11):
        db = cubic_discriminant(p)
        dm = classical_discriminant(p)
        assert db == pytest.approx(dm, rel=1e-8, abs=1e-8)


def test_cubic_positive_exact_examples():
    v = cubic_positive_exact(ScalarPoly([1, 1, 1, 1]))
    assert v.strictly_positive and v.branch == CubicBranch.POSITIVE_COEFFICIENTS
    v = cubic_positive_exact(ScalarPoly([1, -2, 3, 1]))
    assert v.strictly_positive and v.branch == CubicBranch.DISCRIMINANT_NEGATIVE
    assert -v.discriminant == 135.0
    v = cubic_positive_exact(ScalarPoly([1, -2, 0, 0]))
    assert not v.strictly_positive and v.branch == CubicBranch.NEITHER


def test_cubic_positive_exact_agrees_with_grid():
    xs = np.linspace(0, 1, 10001)
    for p in random_cubics(2000, seed=12):
        m = float(np.polyval(to_monomial(p)[::-1], xs).min())
        if abs(m) <= 1e-7:
            continue
        assert cubic_positive_exact(p).strictly_positive == (m > 1e-7)


def test_st_decompose_examples():
    s, t = st_decompose(ScalarPoly([1, -2, 3, 1]))
    assert np.array_equal(s.coeffs, [1, -2, 3, 0])
    assert np.array_equal(t.coeffs, [0, 0, 0, 1])
    s, t = st_decompose(ScalarPoly([1, 1, 1, 1]))
    assert np.array_equal(s.coeffs, [1, 0, 1, 0])
    assert np.array_equal(t.coeffs, [0, 1, 0, 1])
    assert st_decompose(ScalarPoly([1, -2, 0, 0])) is None


def test_st_decompose_closure_random():
    kept = 0
    for p in random_cubics(3000, seed=13):
        if not nonneg_oracle(p):
            continue
        kept += 1
        s, t = st_decompose(p)
        assert np.array_equal(s.coeffs + t.coeffs, p.coeffs)
        assert cone_member((s.coeffs[0], s.coeffs[2], SQRT32 * s.coeffs[1]), 1e-9)
        assert cone_member((t.coeffs[1], t.coeffs[3], SQRT32 * t.coeffs[2]), 1e-9)
        assert s.coeffs[3] >= 0.0 and t.coeffs[0] >= 0.0
        assert in_gb(s) and in_gb(t)
    assert kept > 500


def test_gram_pair_example():
    m1, m2 = gram_pair(ScalarPoly([1, -2, 3, 1]), [0, -2, 0, 0])
    assert np.allclose(m1, [[1, -3], [-3, 9]], atol=0)
    assert np.allclose(m2, [[0, 0], [0, 1]], atol=0)


def test_gram_pair_diagonal_for_zero_witness():
    p = ScalarPoly([1, 2, 3, 4, 5, 6])
    m1, m2 = gram_pair(p, np.zeros(6))
    assert np.allclose(m1, np.diag(np.diag(m1)), atol=0)
    assert np.allclose(m2, np.diag(np.diag(m2)), atol=0)
    assert np.all(np.diag(m1) >= 0) and np.all(np.diag(m2) >= 0)


def test_gram_pair_identity_random():
    # p(x) = (1-x) b^T M1 b + x b^T M2 b holds for any witness
    rng = np.random.default_rng(14)
    for d in (3, 5, 7):
        k = (d - 1) // 2
        for _ in range(30):
            p = ScalarPoly(rng.normal(size=d + 1) * 5)
            c = rng.normal(size=d + 1)
            c[0] = c[-1] = 0.0
            m1, m2 = gram_pair(p, c)
            for x in np.linspace(0, 1, 101):
                b = np.array([basis_eval(j, k, x) for j in range(k + 1)])
                val = (1 - x) * b @ m1 @ b + x * b @ m2 @ b
                assert abs(val - sum(
                    p.coeffs[i] * basis_eval(i, d, x) for i in range(d + 1)
                )) <= 1e-10


def test_gram_pair_rejects_even_degree():
    with pytest.raises(ValueError):
        gram_pair(ScalarPoly([1, 2, 3, 4, 5]), np.zeros(5))


def test_inclusion_chain_random():
    rng = np.random.default_rng(15)
    gb_hits = 0
    for d in range(3, 9):
        for _ in range(2000):
            p = ScalarPoly(rng.normal(size=d + 1))
            if in_nb(p):
                assert in_gb(p)
            if in_gb(p):
                gb_hits += 1
                assert nonneg_oracle(p)
    assert gb_hits > 100
