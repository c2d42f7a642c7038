"""Map the acceptance regions on a two-dimensional slice of cubics.

Fixes p0 = p3 = 1 and classifies each (p1, p2) on a grid: plain nonnegative
coefficients, geometric-mean membership, and exact nonnegativity on [0,1].
Writes a CSV (columns p1, p2, nb, gb, positive) and optionally a picture.
The strict inclusions coefficient-set < geometric-mean set < nonnegative set
are visible directly in the counts.

Run:  python demos/region_slice.py [--res 161] [--out slice.csv] [--plot out.png]
"""

import argparse
import sys

import numpy as np

from berncert import ScalarPoly, in_gb, in_nb, nonneg_oracle, write_csv


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--res", type=int, default=121)
    ap.add_argument("--out", default=None, help="CSV path (default stdout)")
    ap.add_argument("--plot", default=None, help="save the regions as PNG")
    args = ap.parse_args()

    grid = np.linspace(-3.0, 5.0, args.res)
    rows = []
    counts = {"nb": 0, "gb": 0, "pos": 0}
    for p1 in grid:
        for p2 in grid:
            p = ScalarPoly([1.0, p1, p2, 1.0])
            nb, gb, pos = in_nb(p), in_gb(p), nonneg_oracle(p)
            counts["nb"] += nb
            counts["gb"] += gb
            counts["pos"] += pos
            rows.append((p1, p2, int(nb), int(gb), int(pos)))

    total = args.res**2
    print(f"slice p0 = p3 = 1 on a {args.res}x{args.res} grid over [-3,5]^2:",
          file=sys.stderr)
    for k, label in (("nb", "coefficient test"), ("gb", "geometric-mean test"),
                     ("pos", "nonnegative")):
        print(f"  {label:20s} {100.0 * counts[k] / total:6.2f}% of the slice",
              file=sys.stderr)

    header = ["p1", "p2", "nb", "gb", "positive"]
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            write_csv(fh, header, rows)
        print(f"  wrote {args.out}", file=sys.stderr)
    else:
        write_csv(sys.stdout, header, rows)

    if args.plot:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        arr = np.array([[r[2] + r[3] + r[4] for r in rows[i::args.res]]
                        for i in range(args.res)])
        fig, ax = plt.subplots(figsize=(5, 5))
        ax.imshow(arr, origin="lower", extent=[-3, 5, -3, 5], cmap="Greys")
        ax.set_xlabel("p1")
        ax.set_ylabel("p2")
        fig.tight_layout()
        fig.savefig(args.plot, dpi=150)
        print(f"  saved {args.plot}", file=sys.stderr)


if __name__ == "__main__":
    main()
