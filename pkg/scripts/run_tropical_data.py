#!/usr/bin/env python3
"""Emit amoeba and tropical-curve data for the two reference vectors.

For each vector the script writes the sampled upper amoeba boundary,
the two tentacle lines, and prints the Newton polygon and its outer
normal ray directions.
"""

import argparse
import pathlib

from smoothmax import (
    amoeba_upper_boundary,
    newton_polygon,
    realvec,
    tentacle_lines,
    trop_rays,
)

VECTORS = {
    "v1": realvec([1, 2, 3, 4, 5, 6, 7]),
    "v2": realvec([1, 2, 3, 4, 5, 6, 7, 7, 7, 7, 7]),
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default="results", type=pathlib.Path)
    ap.add_argument("--umin", type=float, default=-1.0)
    ap.add_argument("--umax", type=float, default=5.0)
    ap.add_argument("--samples", type=int, default=200)
    args = ap.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)

    for name, v in VECTORS.items():
        boundary = args.out_dir / f"amoeba_boundary_{name}.csv"
        with open(boundary, "w") as fh:
            fh.write("u,s\n")
            for u, s in amoeba_upper_boundary(v, args.umin, args.umax,
                                              args.samples):
                fh.write(f"{u!r},{s!r}\n")
        lines = args.out_dir / f"tentacle_lines_{name}.csv"
        with open(lines, "w") as fh:
            fh.write("kind,slope,intercept,label\n")
            for ln in tentacle_lines(v):
                fh.write(f"{ln.kind},{ln.slope!r},{ln.intercept!r},{ln.label}\n")
        poly = newton_polygon(v)
        print(f"{name}: wrote {boundary} and {lines}")
        print(f"     Newton polygon vertices: {poly.vertices}")
        print(f"     outer normal rays: {trop_rays(v)}")


if __name__ == "__main__":
    main()
