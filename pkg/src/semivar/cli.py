"""Command line interface.

Subcommands:

* ``check``      run claims over an enumerated corpus, print a JSONL report
* ``inspect``    print relations/congruences/orders of one .sgt table
* ``enumerate``  list (or count) the associative tables of one order
* ``variant``    print the sandwich variant of one .sgt table

Exit codes: 0 on success, 2 when a hard claim FAILS during ``check``,
1 on bad usage or bad input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .claims import Options
from .congruences import all_congruences
from .core import SemigroupError, idempotents
from .enumeration import (
    DEDUP_ISO,
    DEDUP_NONE,
    ENUMERATION_HARD_CAP,
    CorpusSpec,
    enumerate_semigroups,
    iter_corpus,
)
from .orders import natural_leq
from .relations import green, star, tilde
from .runner import hard_failures, run_corpus
from .sgt import inline_table, parse_table, serialize_table
from .variants import idempotent_variant, variant


class _CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: A003 - argparse API
        raise _CliError(message)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="semivar",
        description="finite-semigroup computations and claim checking",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="run claims over an enumerated corpus")
    check.add_argument("--orders", default="2,3",
                       help="comma-separated table orders (default: 2,3)")
    check.add_argument("--claims", default="all",
                       help="'all' or comma-separated claim ids")
    check.add_argument("--strict-u", action="store_true",
                       help="weak U-abundance must find idempotents in U itself")
    check.add_argument("--dedup", action="store_true",
                       help="one table per isomorphism class")
    check.add_argument("--limit", type=int, default=None,
                       help="cap the total number of tables")
    check.add_argument("--out", default=None,
                       help="write the report here instead of stdout")
    check.set_defaults(func=_cmd_check)

    inspect = sub.add_parser("inspect", help="print structure of one table")
    inspect.add_argument("path", help="an .sgt file")
    inspect.add_argument(
        "--show", default="green,star",
        help="comma-separated: green, star, tilde[:I+J+...], congruences, orders",
    )
    inspect.set_defaults(func=_cmd_inspect)

    enum = sub.add_parser("enumerate", help="list associative tables")
    enum.add_argument("--order", type=int, required=True)
    enum.add_argument("--count-only", action="store_true")
    enum.add_argument("--dedup", action="store_true",
                      help="one table per isomorphism class")
    enum.set_defaults(func=_cmd_enumerate)

    var = sub.add_parser("variant", help="print a sandwich variant table")
    var.add_argument("path", help="an .sgt file")
    var.add_argument("--at", type=int, required=True,
                     help="the sandwich element")
    var.add_argument("--idempotent-only", action="store_true",
                     help="refuse non-idempotent sandwich elements")
    var.set_defaults(func=_cmd_variant)

    return parser


def _parse_orders(text: str) -> tuple[int, ...]:
    try:
        orders = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise _CliError(f"--orders must be comma-separated integers, got {text!r}")
    if not orders:
        raise _CliError("--orders must name at least one order")
    return orders


def _cmd_check(args) -> int:
    orders = _parse_orders(args.orders)
    if args.claims.strip() == "all":
        claim_ids = "all"
    else:
        claim_ids = [tok.strip() for tok in args.claims.split(",") if tok.strip()]
        if not claim_ids:
            raise _CliError("--claims must name at least one claim id")
    spec = CorpusSpec(
        orders=orders,
        dedup=DEDUP_ISO if args.dedup else DEDUP_NONE,
        limit=args.limit,
        max_order=ENUMERATION_HARD_CAP,
    )
    report = run_corpus(spec, claim_ids, Options(strict_u=args.strict_u))
    text = report.dumps()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    failures = hard_failures(report)
    if failures:
        for r in failures[:10]:
            print(
                f"hard claim {r.claim_id} FAILS on {r.table} params={r.params}",
                file=sys.stderr,
            )
        print(f"{len(failures)} hard-claim failure(s)", file=sys.stderr)
        return 2
    return 0


def _fmt_partition(eq) -> str:
    return " ".join(
        "{" + ",".join(str(x) for x in block) + "}"
        for block in sorted(eq.classes)
    )


def _parse_show(text: str):
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        if token.startswith("tilde"):
            _, _, rest = token.partition(":")
            ids = tuple(int(p) for p in rest.split("+")) if rest else None
            yield "tilde", ids
        elif token in ("green", "star", "congruences", "orders"):
            yield token, None
        else:
            raise _CliError(f"unknown --show item {token!r}")


def _cmd_inspect(args) -> int:
    s = parse_table(Path(args.path).read_text())
    print(f"order {s.order}")
    print(f"identity {s.identity if s.identity is not None else '-'}")
    print("idempotents " + " ".join(str(e) for e in sorted(idempotents(s))))
    for section, ids in _parse_show(args.show):
        if section == "green":
            g = green(s)
            print(f"L  {_fmt_partition(g.l)}")
            print(f"R  {_fmt_partition(g.r)}")
            print(f"H  {_fmt_partition(g.h)}")
            print(f"D  {_fmt_partition(g.d)}")
            print(f"J  {_fmt_partition(g.j)}")
        elif section == "star":
            st = star(s)
            print(f"L* {_fmt_partition(st.l_star)}")
            print(f"R* {_fmt_partition(st.r_star)}")
            print(f"H* {_fmt_partition(st.h_star)}")
            print(f"D* {_fmt_partition(st.d_star)}")
            print(f"D* is R*oL* = L*oR*: {'yes' if st.composition_is_join else 'no'}")
        elif section == "tilde":
            us = frozenset(ids) if ids is not None else idempotents(s)
            td = tilde(s, us)
            label = "+".join(str(e) for e in sorted(us))
            print(f"L~[{label}] {_fmt_partition(td.l_tilde)}")
            print(f"R~[{label}] {_fmt_partition(td.r_tilde)}")
        elif section == "congruences":
            for eq in all_congruences(s):
                print(f"congruence {_fmt_partition(eq)}")
        elif section == "orders":
            nat = natural_leq(s)
            pairs = [
                f"{a}<={b}"
                for a in s.elements
                for b in s.elements
                if a != b and nat.leq[a][b]
            ]
            print("natural " + (" ".join(pairs) if pairs else "(trivial)"))
    return 0


def _cmd_enumerate(args) -> int:
    if args.count_only and not args.dedup:
        print(enumerate_semigroups(args.order, lambda t: None))
        return 0
    spec = CorpusSpec(
        orders=(args.order,),
        dedup=DEDUP_ISO if args.dedup else DEDUP_NONE,
        max_order=ENUMERATION_HARD_CAP,
    )
    if args.count_only:
        print(sum(1 for _ in iter_corpus(spec)))
    else:
        for s in iter_corpus(spec):
            print(inline_table(s))
    return 0


def _cmd_variant(args) -> int:
    s = parse_table(Path(args.path).read_text())
    if args.idempotent_only:
        v = idempotent_variant(s, args.at)
    else:
        v = variant(s, args.at)
    sys.stdout.write(serialize_table(v.variant))
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _CliError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except (SemigroupError, OSError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except SystemExit as err:  # --help
        return int(err.code or 0)


if __name__ == "__main__":
    raise SystemExit(main())
