#!/usr/bin/env python3
"""Sampling-oracle sweep over every tangency pattern with norm <= 8.

For each pattern: 200 seeded random perturbations of the local model, the
observed trajectory-pattern sequences, containment in the combinatorial
resolutions, and the all-simple chamber count.
"""

import sys
import time
from fractions import Fraction

from trajspace import local_model, omega


def main():
    pats = [p for p in omega.enumerate_patterns(7) if omega.norm(p) <= 8]
    t0 = time.time()
    bad = 0
    for p in pats:
        t = time.time()
        observed, resolved, ok = local_model.oracle_containment(
            p, 200, Fraction(1, 1000), seed=0)
        chambers = local_model.chamber_count(observed)
        print(f"{omega.format_pattern(p):<10} observed={len(observed):>3} "
              f"resolved={len(resolved):>3} chambers={chambers:>3} "
              f"containment={'PASS' if ok else 'FAIL'}  {time.time() - t:.2f}s")
        if not ok:
            bad += 1
    print(f"\n{len(pats)} patterns in {time.time() - t0:.1f}s, {bad} failures")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())