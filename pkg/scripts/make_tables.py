#!/usr/bin/env python3
"""Generate value tables for the three counting functions.

Writes one CSV per kind (a3, A3, B3) into an output directory, computed by
the requested method, and cross-checks every row against the closed-form
route before writing.

Example:
    python scripts/make_tables.py --nmax 1000 --method series --out tables/
"""

import argparse
import sys
from pathlib import Path

from core3 import arith, lambert, series

CLOSED = {"a3": arith.core_count, "A3": arith.pair_count, "B3": arith.triple_count}
TUPLE_SIZE = {"a3": 1, "A3": 2, "B3": 3}


def values_for(kind: str, n_max: int, method: str) -> list[int]:
    k = TUPLE_SIZE[kind]
    if method == "formula":
        return [CLOSED[kind](n) for n in range(n_max)]
    if method == "series":
        return list(series.core_tuple_series(3, k, n_max).coeffs)
    if method == "lambert":
        return list(lambert.tuple_series(k, n_max).coeffs)
    raise ValueError(f"unknown method {method!r}")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--nmax", type=int, default=1000)
    parser.add_argument("--method", choices=("formula", "series", "lambert"),
                        default="formula")
    parser.add_argument("--out", type=Path, default=Path("tables"))
    args = parser.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    for kind in ("a3", "A3", "B3"):
        values = values_for(kind, args.nmax, args.method)
        closed = CLOSED[kind]
        for n, value in enumerate(values):
            if value != closed(n):
                print(f"mismatch: {kind}({n}) {value} != {closed(n)}",
                      file=sys.stderr)
                return 1
        path = args.out / f"{kind}.csv"
        with path.open("w") as handle:
            handle.write("kind,n,value,method\n")
            for n, value in enumerate(values):
                handle.write(f"{kind},{n},{value},{args.method}\n")
        print(f"wrote {path} ({len(values)} rows, cross-checked)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
