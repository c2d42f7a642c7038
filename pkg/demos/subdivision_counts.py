"""Subdivision counting: how much work each acceptance test needs.

Certifies (x - t)^2 >= -1e-4 over a grid of root locations t with the plain
coefficient test and with the geometric-mean test, prints the cumulative
histogram of split counts, and (with --plot) saves the per-t curves.  The
geometric-mean criterion never needs more splits and usually needs fewer.

Run:  python demos/subdivision_counts.py [--grid 801] [--plot out.png]
"""

import argparse

import numpy as np

from berncert import ExperimentConfig, run_quad_histogram, run_quad_roots


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--grid", type=int, default=801)
    ap.add_argument("--plot", default=None, help="save a PNG of the count curves")
    args = ap.parse_args()

    cfg = ExperimentConfig(delta=1e-4, grid=args.grid, max_depth=6)
    _, rows = run_quad_roots(cfg)
    ts = np.array([r[0] for r in rows])
    nb = np.array([r[1] for r in rows])
    gb = np.array([r[2] for r in rows])

    print(f"(x-t)^2 >= -1e-4 over {args.grid} root locations, depth limit 6")
    print(f"  mean splits: coefficient test {nb.mean():.2f}, "
          f"geometric-mean test {gb.mean():.2f}")
    print(f"  the geometric-mean test never needs more splits: {bool((gb <= nb).all())}")

    print("\n  cumulative % of t needing at most N splits:")
    print("  N   coeff    geom-mean")
    for n, pn, pg in run_quad_histogram(cfg)[1]:
        print(f"  {n}  {pn:6.2f}%   {pg:6.2f}%")

    if args.plot:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        fig, ax = plt.subplots(figsize=(10, 4))
        ax.plot(ts, nb, lw=0.8, label="coefficient test")
        ax.plot(ts, gb, lw=0.8, ls="--", label="geometric-mean test")
        ax.set_xlabel("t")
        ax.set_ylabel("splits")
        ax.legend()
        fig.tight_layout()
        fig.savefig(args.plot, dpi=150)
        print(f"\n  saved {args.plot}")


if __name__ == "__main__":
    main()
