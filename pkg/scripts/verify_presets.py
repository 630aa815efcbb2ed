#!/usr/bin/env python3
"""Verification sweep over every preset and all small homogeneous blocks.

Presets (32-bit) run against seeded random vectors; widths that fit the
exhaustive checker are enumerated completely. Exits 1 on any mismatch.
"""

import argparse
import sys

from adderlab import PRESETS, compose, verify_exhaustive_netlist, verify_random


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--vectors", type=int, default=100000)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--max-width", type=int, default=10, help="exhaustive sweep upper bound")
    args = ap.parse_args(argv)

    failures = 0
    for name in sorted(PRESETS):
        ce = verify_random(compose(PRESETS[name]), count=args.vectors, seed=args.seed)
        if ce is None:
            print(f"{name}: ok ({args.vectors} vectors, seed {args.seed})")
        else:
            print(f"{name}: MISMATCH {ce}")
            failures += 1

    for kind, lo in (("rca", 1), ("ccla", 2), ("scbcla", 2)):
        for width in range(lo, args.max_width + 1):
            spec = f"{kind}:{width}"
            ce = verify_exhaustive_netlist(compose(spec))
            if ce is None:
                print(f"{spec}: ok (exhaustive, {1 << (2 * width + 1)} rows)")
            else:
                print(f"{spec}: MISMATCH {ce}")
                failures += 1

    if failures:
        print(f"{failures} mismatch(es)", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
