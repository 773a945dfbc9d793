#!/usr/bin/env python3
"""Hunt for the smallest counterexample to each observed claim and print
it with its confirmed witness.

The observed claims are statements that are *expected* to fail somewhere
(failed converses, one-sided closure, quantifier variations); this
script digs out the minimal instances, which make good hand-checkable
examples.

Usage:
    python scripts/find_counterexamples.py
    python scripts/find_counterexamples.py --max-order 4
"""

import argparse

from semivar.claims import KIND_OBSERVED, REGISTRY, evaluate_claim, recheck_result
from semivar.enumeration import CorpusSpec, iter_corpus
from semivar.report import STATUS_FAILS


def first_failure(cid: str, s):
    for r in evaluate_claim(cid, s):
        if r.status == STATUS_FAILS:
            return r
    return None


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=3)
    args = ap.parse_args()

    observed = sorted(
        cid for cid, c in REGISTRY.items() if c.kind == KIND_OBSERVED
    )
    smallest = {}
    for n in range(1, args.max_order + 1):
        missing = [cid for cid in observed if cid not in smallest]
        if not missing:
            break
        for s in iter_corpus(CorpusSpec(orders=(n,), max_order=args.max_order)):
            for cid in missing:
                if cid not in smallest:
                    r = first_failure(cid, s)
                    if r is not None:
                        smallest[cid] = r

    for cid in observed:
        print(f"== {cid}: {REGISTRY[cid].summary}")
        r = smallest.get(cid)
        if r is None:
            print(f"   no counterexample up to order {args.max_order}\n")
            continue
        confirmed = "confirmed" if recheck_result(r) else "NOT CONFIRMED"
        print(f"   table   {r.table}")
        print(f"   params  {r.params}")
        print(f"   witness {r.witness}  [{confirmed}]\n")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
