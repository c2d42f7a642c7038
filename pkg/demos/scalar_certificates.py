"""Walk through the scalar certification toolkit on a few small cubics.

Shows the coefficient test, the geometric-mean test that strictly contains
it, the explicit certificate sequence behind a membership claim, the exact
cubic machinery (cone witness search, discriminant, strict positivity), and
the two-piece decomposition of a nonnegative cubic.

Run:  python demos/scalar_certificates.py
"""

import numpy as np

from berncert import (
    ScalarPoly,
    check_tridiag_certificate,
    cubic_discriminant,
    cubic_positive_exact,
    cubic_socp_witness,
    evaluate,
    gb_witness,
    in_gb,
    in_nb,
    nonneg_oracle,
    st_decompose,
)


def describe(name, coeffs):
    p = ScalarPoly(coeffs)
    print(f"\n{name}: Bernstein coefficients {p.coeffs.tolist()}")
    print(f"  values at 0, 1/2, 1: "
          f"{evaluate(p, 0):+.4f}, {evaluate(p, 0.5):+.4f}, {evaluate(p, 1):+.4f}")
    print(f"  all coefficients nonnegative? {in_nb(p)}")
    print(f"  geometric-mean test?          {in_gb(p)}")
    print(f"  exactly nonnegative on [0,1]? {nonneg_oracle(p)}")
    if p.degree == 3:
        v = cubic_positive_exact(p)
        print(f"  discriminant {v.discriminant:+.4f}; strictly positive: "
              f"{v.strictly_positive} ({v.branch.value})")
        w = cubic_socp_witness(p)
        print(f"  cone witness: {None if w is None else tuple(round(c, 4) for c in w)}")
    return p


def main():
    # A nonnegative cubic with a negative middle coefficient: the plain
    # coefficient test fails, the geometric-mean test certifies it directly.
    p = describe("p (nonnegative, one negative coefficient)", [1, -2, 3, 1])
    w = gb_witness(p)
    print(f"  geometric-mean witness {np.round(w, 4).tolist()} verifies: "
          f"{check_tridiag_certificate(p, w)}")
    s, t = st_decompose(p)
    print(f"  split into one-sided pieces s={s.coeffs.tolist()}, t={t.coeffs.tolist()}")
    print(f"  both pieces pass the geometric-mean test: {in_gb(s) and in_gb(t)}")

    # Genuinely negative: no test may accept, the witness search returns None.
    describe("r (dips negative)", [1, -2, 0, 0])

    # Nonnegative but outside the geometric-mean set: a quartic with
    # alternating coefficients.  Subdivision (see subdivision_counts.py)
    # still certifies such polynomials.
    describe("q (nonnegative quartic, outside both tests)", [1, -1, 1, -1, 1])


if __name__ == "__main__":
    main()
