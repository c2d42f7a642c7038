"""Certifying a symmetric matrix polynomial pointwise-PSD on [0,1].

Builds a random PSD matrix polynomial from the congruence model used by the
experiments, shows its eigenvalue curves dipping toward zero, then certifies
P(x) >= -delta*I by subdivision under both acceptance tests and checks the
explicit block certificate behind a geometric-mean acceptance.

Run:  python demos/matrix_certificates.py [--dim 10] [--plot out.png]
"""

import argparse

import numpy as np

from berncert import (
    Criterion,
    MatrixPoly,
    certify_matrix,
    check_block_certificate,
    eval_matrix,
    gb_matrix_witness,
    in_gb_matrix,
    in_nb_matrix,
    instance_rng,
    min_eig_over_interval,
    sample_random_matrix_poly,
)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--dim", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--plot", default=None, help="save eigenvalue curves as PNG")
    args = ap.parse_args()

    rng = instance_rng(args.seed, args.dim, 0)
    p = sample_random_matrix_poly(rng, args.dim)
    print(f"random {p.dim}x{p.dim} cubic matrix polynomial (seed {args.seed})")
    print(f"  min eigenvalue over a 2001-point grid: "
          f"{min_eig_over_interval(p, 2001):.3e}")
    print(f"  all coefficients PSD (coefficient test)? {in_nb_matrix(p)}")
    print(f"  geometric-mean test at the root?         {in_gb_matrix(p)}")

    delta = 1e-4
    nb = certify_matrix(p, delta, Criterion.NB)
    gb = certify_matrix(p, delta, Criterion.GB)
    print(f"  certifying P(x) >= -{delta}*I by subdivision:")
    print(f"    coefficient test:    {nb.splits} splits (certified={nb.certified})")
    print(f"    geometric-mean test: {gb.splits} splits (certified={gb.certified})")

    # a membership example with an explicit block certificate: lift a small
    # random polynomial until the geometric-mean test accepts it at the root
    raw = np.random.default_rng(args.seed).normal(size=(4, 3, 3)) * 0.4
    lift, member = 0.0, MatrixPoly(raw)
    while not in_gb_matrix(member):
        lift += 0.25
        member = MatrixPoly(raw + lift * np.eye(3))
    w = gb_matrix_witness(member)
    print(f"  3x3 member (lifted by {lift:.2f}*I): block certificate verifies "
          f"{check_block_certificate(member, w)}")

    if args.plot:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        xs = np.linspace(0, 1, 401)
        eigs = np.array([np.linalg.eigvalsh(eval_matrix(p, x)) for x in xs])
        fig, ax = plt.subplots(figsize=(7, 4))
        ax.plot(xs, eigs, lw=0.8, color="k")
        ax.set_xlabel("x")
        ax.set_ylabel("eigenvalues of P(x)")
        fig.tight_layout()
        fig.savefig(args.plot, dpi=150)
        print(f"  saved {args.plot}")


if __name__ == "__main__":
    main()
