#!/usr/bin/env python3
"""Scan the one-parameter family for orbit-dimension jumps.

The derivation dimensions of the family are expected to be constant in the
parameter; this script evaluates them on a grid of rational values (plus a
symbolic check over the function field for the identity) and prints any
value where the dimensions differ from the generic ones.

Usage:
    python scripts/family_orbit_scan.py [--lo -6] [--hi 6] [--den 2]
"""

import argparse
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from superjordan.algebra import check_super_jordan
from superjordan.catalog import Catalog
from superjordan.invariants import derivation_dims, orbit_dimension


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--name", default="Jc16")
    parser.add_argument("--lo", type=int, default=-6)
    parser.add_argument("--hi", type=int, default=6)
    parser.add_argument("--den", type=int, default=2, help="denominators 1..den")
    args = parser.parse_args()

    cat = Catalog()
    entry = cat.entry(args.name)
    if not entry.is_family:
        print(f"{args.name} is not a family")
        return 2
    print("symbolic identity check over the function field:",
          "pass" if check_super_jordan(entry.algebra).ok else "FAIL")

    values = sorted(
        {
            Fraction(num, den)
            for num in range(args.lo, args.hi + 1)
            for den in range(1, args.den + 1)
        }
    )
    generic = None
    jumps = []
    for t in values:
        J = cat.lookup(args.name, t)
        d = derivation_dims(J)
        o = orbit_dimension(J)
        if generic is None:
            generic = (d, o)
        if (d, o) != generic:
            jumps.append((t, d, o))
        print(f"t = {str(t):>6}: derivations {d.even_dim}+{d.odd_dim}, orbit {o}")
    if jumps:
        print("JUMPS FOUND (log these in errata):", jumps)
        return 1
    print(f"no jumps across {len(values)} parameter values; orbit constant at {generic[1]}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
