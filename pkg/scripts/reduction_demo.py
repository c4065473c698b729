#!/usr/bin/env python3
"""Run both reduction-map demos (infinitesimal evaluation and mod-p) and
print their certification reports."""

import sys

from orthospace.toolkit.cli import main as cli_main


def main():
    code = 0
    for place_args in (["--place", "ratfunc"], ["--place", "padic", "--prime", "5"]):
        print(f"== demo {' '.join(place_args)} ==")
        code |= cli_main(["herm", "demo", *place_args, "--samples", "1000", "--seed", "0"])
    return code


if __name__ == "__main__":
    sys.exit(main())
