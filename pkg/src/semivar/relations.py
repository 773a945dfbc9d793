"""Green's relations, their starred and tilde generalizations, and the
abundance predicates built on top of them.

Every relation is materialized as an :class:`Equivalence` whose classes
are numbered by their minimum element, so equal partitions compare equal
structurally and report output stays deterministic.

The starred relations are computed with the cancellation criterion
(a R* b iff xa = ya <=> xb = yb for all x, y in S^1), which agrees with
the oversemigroup definition and is decidable from the table alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .core import (
    ElementSubset,
    FiniteSemigroup,
    SemigroupError,
    adjoin_identity,
    idempotents,
)


class CarrierMismatch(SemigroupError):
    """Two partitions (or a partition and a semigroup) disagree on carrier size."""


class EmptyU(SemigroupError):
    """Tilde relations need a non-empty set of distinguished idempotents."""


class NotIdempotentMember(SemigroupError):
    def __init__(self, element: int) -> None:
        super().__init__(f"U contains {element}, which is not an idempotent of S")
        self.element = element


@dataclass(frozen=True)
class Equivalence:
    """Partition of 0..n-1; classes are numbered by their minimum element."""

    n: int
    class_index: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]

    @classmethod
    def from_keys(cls, n: int, keys: Sequence[Hashable]) -> "Equivalence":
        """Group 0..n-1 by key; class numbering follows first occurrence."""
        index: dict = {}
        class_index = []
        members: list[list[int]] = []
        for x in range(n):
            c = index.get(keys[x])
            if c is None:
                c = index[keys[x]] = len(members)
                members.append([])
            class_index.append(c)
            members[c].append(x)
        return cls(n, tuple(class_index), tuple(tuple(m) for m in members))

    @classmethod
    def identity(cls, n: int) -> "Equivalence":
        return cls.from_keys(n, range(n))

    @classmethod
    def universal(cls, n: int) -> "Equivalence":
        return cls.from_keys(n, [0] * n)

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "Equivalence":
        key = [-1] * n
        for i, block in enumerate(blocks):
            for x in block:
                if not 0 <= x < n or key[x] != -1:
                    raise ValueError("blocks must partition 0..n-1")
            for x in block:
                key[x] = i
        if -1 in key:
            raise ValueError("blocks must cover 0..n-1")
        return cls.from_keys(n, key)

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def same(self, x: int, y: int) -> bool:
        return self.class_index[x] == self.class_index[y]

    def class_of(self, x: int) -> tuple[int, ...]:
        return self.classes[self.class_index[x]]

    def refines(self, other: "Equivalence") -> bool:
        """True when every class of self lies inside a class of other."""
        if self.n != other.n:
            raise CarrierMismatch(f"carriers differ: {self.n} vs {other.n}")
        target: dict[int, int] = {}
        for x in range(self.n):
            if target.setdefault(self.class_index[x], other.class_index[x]) != other.class_index[x]:
                return False
        return True

    def pairs(self) -> frozenset[tuple[int, int]]:
        out = set()
        for block in self.classes:
            for x in block:
                for y in block:
                    out.add((x, y))
        return frozenset(out)


def _check_same_carrier(p: Equivalence, q: Equivalence) -> None:
    if p.n != q.n:
        raise CarrierMismatch(f"carriers differ: {p.n} vs {q.n}")


def meet(p: Equivalence, q: Equivalence) -> Equivalence:
    """Coarsest common refinement (intersect the relations)."""
    _check_same_carrier(p, q)
    return Equivalence.from_keys(
        p.n, [(p.class_index[x], q.class_index[x]) for x in range(p.n)]
    )


def join(p: Equivalence, q: Equivalence) -> Equivalence:
    """Finest common coarsening: transitive closure of the union."""
    _check_same_carrier(p, q)
    parent = list(range(p.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for part in (p, q):
        for block in part.classes:
            first = block[0]
            for x in block[1:]:
                ra, rb = find(first), find(x)
                if ra != rb:
                    parent[rb] = ra
    return Equivalence.from_keys(p.n, [find(x) for x in range(p.n)])


def compose(p: Equivalence, q: Equivalence) -> frozenset[tuple[int, int]]:
    """Relational composition p o q as a pair set: a ~ b iff a p c q b."""
    _check_same_carrier(p, q)
    out = set()
    for a in range(p.n):
        for c in p.class_of(a):
            for b in q.class_of(c):
                out.add((a, b))
    return frozenset(out)


@dataclass(frozen=True)
class GreenBundle:
    l: Equivalence
    r: Equivalence
    h: Equivalence
    d: Equivalence
    j: Equivalence


@dataclass(frozen=True)
class StarBundle:
    l_star: Equivalence
    r_star: Equivalence
    h_star: Equivalence
    d_star: Equivalence
    #: whether R* o L* = L* o R* = D* held for this semigroup (D* is
    #: always the join; the composition can be strictly smaller).
    composition_is_join: bool


@dataclass(frozen=True)
class TildeBundle:
    u: ElementSubset
    l_tilde: Equivalence
    r_tilde: Equivalence
    h_tilde: Equivalence
    d_tilde: Equivalence


def green(s: FiniteSemigroup) -> GreenBundle:
    """Classical L, R, J (principal ideals) with H = meet and D = join."""
    n = s.order
    t = s.table
    left_ideals = []
    right_ideals = []
    for a in range(n):
        sa = {t[x][a] for x in range(n)}
        sa.add(a)
        as_ = {t[a][x] for x in range(n)}
        as_.add(a)
        left_ideals.append(frozenset(sa))
        right_ideals.append(frozenset(as_))
    l = Equivalence.from_keys(n, left_ideals)
    r = Equivalence.from_keys(n, right_ideals)
    two_sided = []
    for a in range(n):
        ideal = set(left_ideals[a]) | set(right_ideals[a])
        for x in range(n):
            xa = t[x][a]
            ideal.update(t[xa][y] for y in range(n))
        two_sided.append(frozenset(ideal))
    j = Equivalence.from_keys(n, two_sided)
    return GreenBundle(l=l, r=r, h=meet(l, r), d=join(l, r), j=j)


def _kernel_key(values: Sequence[int]) -> tuple[int, ...]:
    """Canonical encoding of the kernel of a map given by its value list."""
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(v, len(seen)) for v in values)


def star(s: FiniteSemigroup) -> StarBundle:
    """Starred relations over S^1.

    a R* b iff the maps x -> xa and x -> xb (x over S^1) have equal
    kernels, which is the cancellation condition xa = ya <=> xb = yb.
    """
    n = s.order
    one, _ = adjoin_identity(s)
    t1 = one.table
    n1 = one.order
    r_keys = []
    l_keys = []
    for a in range(n):
        r_keys.append(_kernel_key([t1[x][a] for x in range(n1)]))
        l_keys.append(_kernel_key([t1[a][x] for x in range(n1)]))
    r = Equivalence.from_keys(n, r_keys)
    l = Equivalence.from_keys(n, l_keys)
    d = join(l, r)
    dp = d.pairs()
    comp_ok = compose(r, l) == dp and compose(l, r) == dp
    return StarBundle(l_star=l, r_star=r, h_star=meet(l, r), d_star=d,
                      composition_is_join=comp_ok)


def _checked_u(s: FiniteSemigroup, u: Iterable[int]) -> tuple[int, ...]:
    members = sorted(set(u))
    if not members:
        raise EmptyU("U must be a non-empty subset of E(S)")
    e_of_s = idempotents(s)
    for e in members:
        if e not in e_of_s:
            raise NotIdempotentMember(e)
    return tuple(members)


def tilde(s: FiniteSemigroup, u: Iterable[int]) -> TildeBundle:
    """Tilde relations relative to U <= E(S).

    a L~ b iff ae = a <=> be = b for every e in U; R~ is the dual.
    """
    members = _checked_u(s, u)
    n = s.order
    t = s.table
    l = Equivalence.from_keys(
        n, [tuple(t[a][e] == a for e in members) for a in range(n)]
    )
    r = Equivalence.from_keys(
        n, [tuple(t[e][a] == a for e in members) for a in range(n)]
    )
    return TildeBundle(u=frozenset(members), l_tilde=l, r_tilde=r,
                       h_tilde=meet(l, r), d_tilde=join(l, r))


def is_abundant(s: FiniteSemigroup) -> bool:
    """Every L*-class and every R*-class contains an idempotent."""
    e_of_s = idempotents(s)
    bundle = star(s)
    return all(
        any(x in e_of_s for x in block)
        for rel in (bundle.l_star, bundle.r_star)
        for block in rel.classes
    )


def is_weakly_u_abundant(
    s: FiniteSemigroup, u: Iterable[int], strict: bool = False
) -> bool:
    """Every L~ and R~ class contains an idempotent.

    Membership is tested against E(S); with strict=True the idempotent
    must come from U itself.
    """
    bundle = tilde(s, u)
    target = frozenset(bundle.u) if strict else idempotents(s)
    return all(
        any(x in target for x in block)
        for rel in (bundle.l_tilde, bundle.r_tilde)
        for block in rel.classes
    )
