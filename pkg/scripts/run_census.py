#!/usr/bin/env python3
"""Run the isomorphism-class census with all universal checks and write the
per-class records to a CSV file."""

import argparse
import sys
import time

from orthospace.toolkit.cli import main as cli_main


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("n", type=int, nargs="?", default=6)
    parser.add_argument("--out", default="census.csv")
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    t0 = time.time()
    code = cli_main(["census", str(args.n), "--out", args.out, "--workers", str(args.workers)])
    print(f"done in {time.time() - t0:.1f}s -> {args.out}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
