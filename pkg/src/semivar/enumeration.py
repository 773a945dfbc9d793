"""Exhaustive generation of associative Cayley tables.

The search fills table entries in row-major order and, after each
placement, checks every associativity triple that just became fully
decidable.  A triple (x, y, z) needs the entries (x,y), (y,z), (xy,z)
and (x,yz); it is checked exactly when the last of those is placed, so
each completed table has every triple verified and dead branches are cut
as early as the constraints allow.  Tables are emitted in lexicographic
order of their row-major flattening.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .core import FiniteSemigroup, OrderTooLarge, Table, build_semigroup

#: default bound for corpus specs; enumeration beyond this is opt-in
ENUMERATION_DEFAULT_MAX = 4
#: absolute cap for enumerate_semigroups
ENUMERATION_HARD_CAP = 5

DEDUP_NONE = "none"
DEDUP_ISO = "up_to_isomorphism"


def enumerate_semigroups(n: int, consumer: Callable[[Table], None]) -> int:
    """Feed every labeled associative table of order n to consumer.

    Returns the number of tables emitted.  Counts for n = 1..5 are
    1, 8, 113, 3492, 183732.
    """
    if not 1 <= n <= ENUMERATION_HARD_CAP:
        raise OrderTooLarge(n, ENUMERATION_HARD_CAP)
    t = [[-1] * n for _ in range(n)]
    rng = range(n)
    total = n * n
    count = 0

    def check(x: int, y: int, z: int) -> bool:
        # True when the triple holds or is not yet decidable.
        xy = t[x][y]
        if xy < 0:
            return True
        yz = t[y][z]
        if yz < 0:
            return True
        left = t[xy][z]
        if left < 0:
            return True
        right = t[x][yz]
        return right < 0 or left == right

    def consistent(i: int, j: int) -> bool:
        # Every triple in which the just-placed entry (i, j) plays a role.
        for z in rng:
            if not check(i, j, z):
                return False
        for x in rng:
            if not check(x, i, j):
                return False
        for x in rng:
            row = t[x]
            for y in rng:
                if row[y] == i and not check(x, y, j):
                    return False
        for y in rng:
            row = t[y]
            for z in rng:
                if row[z] == j and not check(i, y, z):
                    return False
        return True

    def fill(pos: int) -> None:
        nonlocal count
        if pos == total:
            table = tuple(tuple(row) for row in t)
            count += 1
            consumer(table)
            return
        i, j = divmod(pos, n)
        for v in rng:
            t[i][j] = v
            if consistent(i, j):
                fill(pos + 1)
        t[i][j] = -1

    fill(0)
    return count


def canonical_form(s: FiniteSemigroup) -> Table:
    """Lexicographically least table among all simultaneous relabelings."""
    n = s.order
    t = s.table
    best: Table | None = None
    for perm in itertools.permutations(range(n)):
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        cand = tuple(
            tuple(perm[t[inv[x]][inv[y]]] for y in range(n)) for x in range(n)
        )
        if best is None or cand < best:
            best = cand
    assert best is not None
    return best


@dataclass(frozen=True)
class CorpusSpec:
    """Which orders to enumerate and how."""

    orders: tuple[int, ...]
    dedup: str = DEDUP_NONE
    limit: int | None = None
    max_order: int = ENUMERATION_DEFAULT_MAX

    def __post_init__(self) -> None:
        object.__setattr__(self, "orders", tuple(self.orders))
        if not self.orders:
            raise ValueError("a corpus needs at least one order")
        if self.dedup not in (DEDUP_NONE, DEDUP_ISO):
            raise ValueError(f"dedup must be {DEDUP_NONE!r} or {DEDUP_ISO!r}")
        if self.max_order > ENUMERATION_HARD_CAP:
            raise OrderTooLarge(self.max_order, ENUMERATION_HARD_CAP)
        for n in self.orders:
            if n < 1:
                raise ValueError(f"orders must be positive, got {n}")
            if n > self.max_order:
                raise OrderTooLarge(n, self.max_order)
        if self.limit is not None and self.limit < 1:
            raise ValueError("limit must be positive when given")


def iter_corpus(spec: CorpusSpec) -> Iterator[FiniteSemigroup]:
    """Validated semigroups for a corpus spec, in enumeration order."""
    emitted = 0
    for n in spec.orders:
        tables: list[Table] = []
        enumerate_semigroups(n, tables.append)
        for table in tables:
            s = build_semigroup(n, table)
            if spec.dedup == DEDUP_ISO and canonical_form(s) != table:
                continue
            yield s
            emitted += 1
            if spec.limit is not None and emitted >= spec.limit:
                return
