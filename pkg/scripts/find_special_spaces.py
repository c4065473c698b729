#!/usr/bin/env python3
"""Scan the census for the special classification patterns and verify the
constructed fallback fixtures.

This is the run that justifies the catalogue in orthospace.toolkit.search:
no isomorphism class with at most 7 elements is normal-but-not-Dacey, has a
non-normal orthoclosed subspace, or has a normal orthoclosed subspace whose
inclusion fails to be a normal homomorphism.  The shipped 8- and 12-point
fixtures therefore cannot be replaced by anything the census can reach.
"""

import argparse
import time

from orthospace.classify import is_normal_fast
from orthospace.toolkit.census import census_classes
from orthospace.toolkit.generators import triad_square, twin_squares
from orthospace.toolkit.search import (
    _nonnormal_inclusion,
    _normal_not_dacey,
    _normal_with_nonnormal_subspace,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=7)
    args = parser.parse_args()

    t0 = time.time()
    for n in range(1, args.max_n + 1):
        hits = dict(normal_not_dacey=0, nonnormal_subspace=0, nonnormal_inclusion=0)
        classes = 0
        for space in census_classes(n):
            classes += 1
            if not is_normal_fast(space):
                continue
            hits["normal_not_dacey"] += _normal_not_dacey(space)
            hits["nonnormal_subspace"] += _normal_with_nonnormal_subspace(space)
            hits["nonnormal_inclusion"] += _nonnormal_inclusion(space)
        print(f"n={n}: {classes} classes, hits={hits}  [{time.time() - t0:.1f}s]")

    print("\nconstructed fixtures:")
    sq = triad_square()
    print(f"  triad_square (n={sq.n}):"
          f" normal_not_dacey={_normal_not_dacey(sq)}"
          f" nonnormal_inclusion={_nonnormal_inclusion(sq)}")
    tw = twin_squares()
    print(f"  twin_squares (n={tw.n}):"
          f" normal_with_nonnormal_subspace={_normal_with_nonnormal_subspace(tw)}")


if __name__ == "__main__":
    main()
