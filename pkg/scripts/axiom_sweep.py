#!/usr/bin/env python3
"""Full cobracket axiom sweep over the seven case families.

Writes a JSON list of {"family", "element", "check", "pass"} records and
prints a per-family summary.  Degree caps are flag-controlled; defaults
match the acceptance suite (4 on sl_2, 2 on sl_3).
"""

import argparse
import json
import sys
import time

from lbforge.cobracket import axiom_sweep
from lbforge.liealg import build_sl
from lbforge.pairing import CaseSpec
from lbforge.rmatrix import build_r, catalog_rkind

FAMILIES = [
    "I:two-points:1,2",
    "I:double-pole",
    "I:simple-pole",
    "I:constant",
    "II:simple-pole",
    "II:constant",
    "III:constant",
]


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--algebra", type=int, default=2, help="n of sl_n")
    parser.add_argument("--degree", type=int, default=None, help="sweep degree cap")
    parser.add_argument("--cocycle-degree", type=int, default=2)
    parser.add_argument("--out", default="axiom_sweep.json")
    args = parser.parse_args(argv)

    alg = build_sl(args.algebra)
    cap = args.degree if args.degree is not None else (4 if args.algebra == 2 else 2)
    records = []
    for text in FAMILIES:
        spec = CaseSpec.parse(text)
        r = build_r(alg, spec, catalog_rkind(alg, spec))
        start = time.time()
        recs = axiom_sweep(alg, text, r, cap, cocycle_degree=args.cocycle_degree)
        records.extend(recs)
        failed = sum(1 for rec in recs if not rec["pass"])
        status = "ok" if failed == 0 else f"{failed} FAILED"
        print(f"{text:22s} {len(recs):5d} checks  {status}  ({time.time()-start:.1f}s)")
    with open(args.out, "w", encoding="utf-8") as fh:
        json.dump(records, fh, indent=2)
    print(f"wrote {len(records)} records to {args.out}")
    return 0 if all(rec["pass"] for rec in records) else 1


if __name__ == "__main__":
    sys.exit(main())
