#!/usr/bin/env python3
"""Run the full claim suite over an exhaustive corpus and print a tally
table.  The JSONL report lands next to this script unless --out is
given.

Usage:
    python scripts/run_survey.py --orders 1,2,3
    python scripts/run_survey.py --orders 4 --dedup --out survey4.jsonl
"""

import argparse
import sys
import time
from pathlib import Path

from semivar.claims import HARD_CLAIM_IDS, Options
from semivar.enumeration import DEDUP_ISO, DEDUP_NONE, ENUMERATION_HARD_CAP, CorpusSpec
from semivar.runner import hard_failures, run_corpus


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--orders", default="1,2,3")
    ap.add_argument("--dedup", action="store_true")
    ap.add_argument("--strict-u", action="store_true")
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    orders = tuple(int(tok) for tok in args.orders.split(","))
    spec = CorpusSpec(
        orders=orders,
        dedup=DEDUP_ISO if args.dedup else DEDUP_NONE,
        max_order=ENUMERATION_HARD_CAP,
    )
    t0 = time.time()
    report = run_corpus(spec, "all", Options(strict_u=args.strict_u))
    elapsed = time.time() - t0

    out = Path(args.out) if args.out else Path(__file__).parent / "survey.jsonl"
    out.write_text(report.dumps())

    tallies = report.tallies()
    print(f"{'claim':<20} {'kind':<9} {'holds':>7} {'fails':>7} {'n/a':>6}")
    for cid in sorted(tallies):
        kind = "hard" if cid in HARD_CLAIM_IDS else "observed"
        t = tallies[cid]
        print(
            f"{cid:<20} {kind:<9} {t['holds']:>7} {t['fails']:>7}"
            f" {t['not_applicable']:>6}"
        )
    total = sum(report.corpus["tables"].values())
    print(
        f"\n{total} tables, {len(report.results)} results in {elapsed:.1f}s"
        f" -> {out}"
    )
    bad = hard_failures(report)
    if bad:
        print(f"{len(bad)} HARD-CLAIM FAILURES -- see the report", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
