"""Command-line front end.

Reads an integer matrix, computes the cyclic Bergman fan of its column
matroid (or of the dual matroid with --dual), and prints rays, maximal cones,
optional matroid reports, and the Bergman-fan comparison.  With --random N
the tool switches to the discriminant pipeline and prints ray-shot Newton
polytope vertices instead.  Output is byte-deterministic given the input,
flags, and seed.

Matrix file format: comments start with '#', blank lines are ignored, the
first data line is 'm n', followed by m rows of n integers.

Exit codes: 0 success, 1 parse or I/O failure, 2 violated preconditions
(loops, coloops, rank or rowspace requirements, bad flag combinations).
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass

from .discriminant import random_vertices, setup
from .errors import (
    DegenerateDual,
    HasColoops,
    HasLoops,
    LatticeNotSpanned,
    NoAllOnesRow,
    ParseError,
    RankDeficient,
    RankError,
    TropfanError,
)
from .exact import IntMat
from .fan import compare_with_bergman, cyclic_bergman_fan
from .matroid import Matroid

_PRECONDITION_ERRORS = (
    HasLoops,
    HasColoops,
    RankDeficient,
    RankError,
    NoAllOnesRow,
    DegenerateDual,
    LatticeNotSpanned,
)


@dataclass
class RunConfig:
    input_path: str
    dual: bool = False
    compare: bool = False
    random_count: int | None = None
    seed: int = 0
    report_bases: bool = False
    report_circuits: bool = False
    report_tutte: bool = False
    counts_only: bool = False
    output: str | None = None
    threads: int = 0

    @property
    def mode(self) -> str:
        if self.random_count is not None:
            return "discriminant"
        return "fan-dual" if self.dual else "fan"


def parse_matrix(text: str) -> IntMat:
    """Parse the matrix file format; diagnostics carry 1-based line numbers."""
    header = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise ParseError(lineno, "expected header 'm n'")
            try:
                header = (int(parts[0]), int(parts[1]))
            except ValueError:
                raise ParseError(lineno, "header entries must be integers") from None
            if header[0] < 1 or header[1] < 1:
                raise ParseError(lineno, "dimensions must be positive")
            continue
        if len(rows) == header[0]:
            raise ParseError(lineno, "extra data after the last matrix row")
        if len(parts) != header[1]:
            raise ParseError(
                lineno, f"expected {header[1]} entries, found {len(parts)}"
            )
        try:
            rows.append([int(x) for x in parts])
        except ValueError:
            raise ParseError(lineno, "matrix entries must be integers") from None
    if header is None:
        raise ParseError(1, "empty input")
    if len(rows) != header[0]:
        raise ParseError(1, f"expected {header[0]} rows, found {len(rows)}")
    return IntMat.from_rows(rows)


def build_config(argv) -> RunConfig:
    parser = argparse.ArgumentParser(
        prog="tropfan",
        description="Cyclic Bergman fans of integer matrices and "
        "Newton-polytope vertices of A-discriminants.",
    )
    parser.add_argument("matrix", help="path to the input matrix file")
    parser.add_argument(
        "--dual", action="store_true", help="compute the fan of the dual matroid"
    )
    parser.add_argument(
        "--compare",
        action="store_true",
        help="group maximal cones into Bergman-fan classes",
    )
    parser.add_argument(
        "--random",
        type=int,
        metavar="N",
        default=None,
        help="discriminant mode: shoot N random Newton-polytope vertices",
    )
    parser.add_argument("--seed", type=int, default=0, help="seed for --random")
    parser.add_argument("--bases", action="store_true", help="report all bases")
    parser.add_argument("--circuits", action="store_true", help="report all circuits")
    parser.add_argument(
        "--tutte", action="store_true", help="report the Tutte polynomial"
    )
    parser.add_argument(
        "--counts-only",
        action="store_true",
        help="print only the header counts, no section bodies",
    )
    parser.add_argument("--output", metavar="PATH", default=None)
    parser.add_argument(
        "--threads",
        type=int,
        default=int(os.environ.get("TROPFAN_THREADS", "0")),
        help="worker processes for per-basis work (0 = sequential canonical mode)",
    )
    args = parser.parse_args(argv)
    config = RunConfig(
        input_path=args.matrix,
        dual=args.dual,
        compare=args.compare,
        random_count=args.random,
        seed=args.seed,
        report_bases=args.bases,
        report_circuits=args.circuits,
        report_tutte=args.tutte,
        counts_only=args.counts_only,
        output=args.output,
        threads=args.threads,
    )
    if config.random_count is not None:
        if config.compare:
            parser.error("--compare requires fan mode, not --random")
        if config.counts_only:
            parser.error("--counts-only requires fan mode, not --random")
        if config.random_count < 0:
            parser.error("--random takes a nonnegative count")
    return config


def _write_fan(out, config: RunConfig, M: Matroid):
    counts_only = config.counts_only
    if counts_only:
        from .fan import fan_counts

        nrays, ncones = fan_counts(M, threads=config.threads)
        out.write(f"n {M.n}\n")
        out.write(f"m {M.rank}\n")
        out.write(f"rays {nrays}\n")
        out.write(f"maxcones {ncones}\n")
        return
    fan = cyclic_bergman_fan(M, threads=config.threads, keep_pairs=False)
    out.write(f"n {M.n}\n")
    out.write(f"m {M.rank}\n")
    out.write(f"rays {len(fan.rays)}\n")
    out.write(f"maxcones {len(fan.maximal_cones)}\n")
    if config.report_bases:
        out.write("BASES\n")
        for B in M.bases:
            out.write(" ".join(map(str, B)) + "\n")
    if config.report_circuits:
        out.write("CIRCUITS\n")
        for C in M.circuits():
            out.write(" ".join(map(str, C)) + "\n")
    if config.report_tutte:
        out.write("TUTTE\n")
        for (i, j), c in M.tutte_polynomial().monomials():
            out.write(f"x^{i} y^{j} : {c}\n")
    out.write("RAYS\n")
    for ray in fan.rays:
        out.write(" ".join(map(str, ray)) + "\n")
    out.write("MAXCONES\n")
    for cone in fan.maximal_cones:
        out.write(" ".join(map(str, cone)) + "\n")
    if config.compare:
        classes = compare_with_bergman(fan, M)
        out.write("BERGMAN\n")
        for cls in classes:
            out.write(" ".join(map(str, cls)) + "\n")


def _write_discriminant(out, config: RunConfig, A: IntMat):
    prob = setup(A, threads=config.threads)
    vertices = random_vertices(prob, config.random_count, config.seed)
    if vertices:
        a_degree = vertices[0].a_degree
        out.write("A-DEGREE " + " ".join(map(str, a_degree)) + "\n")
    else:
        out.write("A-DEGREE\n")
    for v in vertices:
        out.write(" ".join(map(str, v.u)) + "\n")


def run(config: RunConfig) -> int:
    try:
        with open(config.input_path, "r", encoding="utf-8") as fh:
            A = parse_matrix(fh.read())
    except (OSError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        if config.output is not None:
            out = open(config.output, "w", encoding="utf-8")
        else:
            out = sys.stdout
        try:
            if config.mode == "discriminant":
                _write_discriminant(out, config, A)
            else:
                M = Matroid.from_matrix(A, strict=False)
                if config.dual:
                    M = M.dual()
                _write_fan(out, config, M)
        finally:
            if config.output is not None:
                out.close()
    except _PRECONDITION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TropfanError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main(argv=None) -> int:
    config = build_config(argv if argv is not None else sys.argv[1:])
    return run(config)


if __name__ == "__main__":
    raise SystemExit(main())
