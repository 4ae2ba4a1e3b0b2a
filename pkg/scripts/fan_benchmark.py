#!/usr/bin/env python3
"""Time fan computations on the bundled examples and print ray/cone counts.

Usage: python scripts/fan_benchmark.py [--threads K] [--big]

The default set finishes in seconds; --big adds the 5x20 dual-mode run with
just under half a million maximal cones.
"""

import argparse
import time

from tropfan.data import (
    GRAPHIC_3X6,
    TANGENT_CONIC_CUBIC_4X16,
    TANGENT_LINE_CUBIC_4X13,
    TANGENT_QUADRICS_5X20,
    cube_matrix,
)
from tropfan.fan import fan_counts
from tropfan.matroid import Matroid


def bench(name, matroid, threads):
    t0 = time.perf_counter()
    nrays, ncones = fan_counts(matroid, threads=threads)
    elapsed = time.perf_counter() - t0
    print(f"{name:24s} n={matroid.n:3d} rank={matroid.rank:3d} "
          f"rays={nrays:5d} maxcones={ncones:9d} {elapsed:8.2f}s")


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--threads", type=int, default=0)
    parser.add_argument("--big", action="store_true")
    args = parser.parse_args()
    cases = [
        ("graphic 3x6", Matroid.from_matrix(GRAPHIC_3X6)),
        ("cube3", Matroid.from_matrix(cube_matrix(3))),
        ("cube4", Matroid.from_matrix(cube_matrix(4))),
        ("line-cubic dual", Matroid.from_matrix(TANGENT_LINE_CUBIC_4X13).dual()),
        ("conic-cubic dual", Matroid.from_matrix(TANGENT_CONIC_CUBIC_4X16).dual()),
    ]
    if args.big:
        cases.append(
            ("quadrics dual", Matroid.from_matrix(TANGENT_QUADRICS_5X20).dual())
        )
    for name, M in cases:
        bench(name, M, args.threads)


if __name__ == "__main__":
    main()
