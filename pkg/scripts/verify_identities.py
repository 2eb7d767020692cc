#!/usr/bin/env python3
"""Run the whole identity battery at generous ranges and print a summary.

This is the long-form version of ``core3 selfcheck``: wider sweeps, one
line per family with instance count and wall time.  Exits nonzero if any
family reports a counterexample.
"""

import argparse
import sys
import time

from core3 import identities
from core3.identities import XiaParams


def battery(k_max: int, n_max: int):
    yield lambda: [identities.cross_validate(2000)]
    for p in (2, 5, 11):
        yield lambda p=p: [identities.check_a3_even_power(p, 2 * k_max, n_max)]
    yield lambda: identities.check_baruah_nath(k_max + 1, n_max)
    yield lambda: [identities.check_lin(500)]
    for p in (2, 5, 7, 11, 13):
        yield lambda p=p: [identities.check_A3_relations(p, k_max, n_max, False),
                           identities.check_A3_relations(p, k_max, n_max, True),
                           identities.check_B3_relations(p, k_max, n_max, False),
                           identities.check_B3_relations(p, k_max, n_max, True)]
    yield lambda: [identities.check_B3_relations(3, k_max, n_max, True)]
    yield lambda: identities.check_A3_residue_families(k_max, n_max)
    yield lambda: identities.check_b3_power_families(k_max + 1, n_max)
    yield lambda: identities.check_B3_residue_families(k_max, n_max)
    yield lambda: [identities.check_xia_congruences(1000)]
    for p in (3, 5, 7):
        for j in (1, 2):
            yield lambda p=p, j=j: [identities.check_xia_conjecture(
                XiaParams(p, j), 1, 50)]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--kmax", type=int, default=4)
    parser.add_argument("--nmax", type=int, default=200)
    args = parser.parse_args()

    failed = 0
    total = 0
    grand_start = time.perf_counter()
    for run in battery(args.kmax, args.nmax):
        started = time.perf_counter()
        reports = run()
        elapsed = time.perf_counter() - started
        for report in reports:
            total += 1
            status = "ok" if report.passed else "FAIL"
            print(f"{report.family:<32} {report.checked:>8} instances "
                  f"{elapsed:>7.2f}s  {status}")
            if not report.passed:
                failed += 1
                for failure in report.failures[:5]:
                    print(f"    counterexample {failure.inputs}: "
                          f"{failure.lhs} != {failure.rhs}")
    print(f"\n{total - failed}/{total} families clean "
          f"in {time.perf_counter() - grand_start:.2f}s")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
