"""The claim registry: executable statements about finite semigroups.

Each claim has a stable id, a class, an evaluator, and a witness
re-checker:

* hard claims are expected to hold on every instance; a FAILS result is
  an implementation bug or a disproof and aborts acceptance.
* observed claims record whatever the corpus shows; FAILS results are
  findings, not errors, and never abort a run.

Evaluators quantify over every admissible parameter choice (elements,
idempotents, subsets U of E(S) under the U-policy) and return one
ClaimResult per instance.  Every FAILS result carries a witness, and
``recheck_result`` reproduces the failure from the serialized table,
params, and witness alone, using direct definitional scans rather than
the production code paths.

U-policy: claims parameterized by a subset U of E(S) iterate all
non-empty subsets when |E(S)| <= 4, otherwise the singletons plus E(S)
itself.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator

from . import core, relations, variants, orders
from .congruences import (
    KIND_LEFT,
    KIND_RIGHT,
    KIND_TWO_SIDED,
    NotACongruence,
    all_congruences,
    are_isomorphic,
    congruence_kind,
    induced_subsemigroup,
    is_fundamental,
    quotient,
    sandwich_lambda,
    sandwich_rho,
    u_translate_hom,
)
from .core import FiniteSemigroup, SemigroupError, idempotents
from .relations import Equivalence
from .report import (
    STATUS_FAILS,
    STATUS_HOLDS,
    STATUS_NOT_APPLICABLE,
    ClaimResult,
)
from .sgt import inline_table, parse_inline

KIND_HARD = "hard"
KIND_OBSERVED = "observed"


class UnknownClaim(SemigroupError):
    def __init__(self, claim_id: str) -> None:
        super().__init__(f"unknown claim id: {claim_id}")
        self.claim_id = claim_id


@dataclass(frozen=True)
class Options:
    """Harness configuration that changes claim semantics."""

    #: weak U-abundance looks for idempotents in U itself instead of E(S)
    strict_u: bool = False


@dataclass(frozen=True)
class Claim:
    claim_id: str
    kind: str
    summary: str
    evaluate: Callable[[FiniteSemigroup, Options], list[ClaimResult]]
    recheck: Callable[[FiniteSemigroup, dict, dict, Options], bool]


# ---------------------------------------------------------------------------
# cached production accessors (claims share per-semigroup computations)

_green = lru_cache(maxsize=512)(relations.green)
_star = lru_cache(maxsize=512)(relations.star)
_idem = lru_cache(maxsize=512)(idempotents)
_natural = lru_cache(maxsize=512)(orders.natural_leq)
_abundant = lru_cache(maxsize=512)(relations.is_abundant)


@lru_cache(maxsize=2048)
def _variant(s: FiniteSemigroup, a: int) -> variants.VariantDescriptor:
    return variants.variant(s, a)


@lru_cache(maxsize=2048)
def _tilde(s: FiniteSemigroup, u: frozenset) -> relations.TildeBundle:
    return relations.tilde(s, u)


@lru_cache(maxsize=2048)
def _psets(s: FiniteSemigroup, a: int) -> variants.PSets:
    return variants.p_sets(s, a)


def u_subsets(s: FiniteSemigroup) -> Iterator[tuple[int, ...]]:
    """The subsets of E(S) a U-parameterized claim ranges over."""
    es = sorted(_idem(s))
    if len(es) <= 4:
        for k in range(1, len(es) + 1):
            yield from itertools.combinations(es, k)
    else:
        for e in es:
            yield (e,)
        yield tuple(es)


U_POLICY = "all non-empty subsets of E(S) when |E(S)| <= 4, else singletons and E(S)"


def _res(cid, s, params, status, witness=None) -> ClaimResult:
    return ClaimResult(cid, inline_table(s), params, status, witness)


def _partition_diff(p: Equivalence, q: Equivalence):
    """First pair on which two partitions disagree, or None."""
    for x in range(p.n):
        for y in range(x + 1, p.n):
            if p.same(x, y) != q.same(x, y):
                return x, y
    return None


def _refinement_violation(fine: Equivalence, coarse: Equivalence):
    for x in range(fine.n):
        for y in range(x + 1, fine.n):
            if fine.same(x, y) and not coarse.same(x, y):
                return x, y
    return None


# ---------------------------------------------------------------------------
# definitional helpers used by the witness re-checkers.  These work on raw
# tables and spell the definitions out; they deliberately avoid the
# production partition machinery.


def _s1_table(table):
    """(table, size) of S^1: S itself when an identity exists."""
    n = len(table)
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            return table, n
    rows = [tuple(row) + (x,) for x, row in enumerate(table)]
    rows.append(tuple(range(n + 1)))
    return tuple(rows), n + 1


def _rstar_same_lit(table, a, b):
    t1, n1 = _s1_table(table)
    return all(
        (t1[x][a] == t1[y][a]) == (t1[x][b] == t1[y][b])
        for x in range(n1)
        for y in range(n1)
    )


def _lstar_same_lit(table, a, b):
    t1, n1 = _s1_table(table)
    return all(
        (t1[a][x] == t1[a][y]) == (t1[b][x] == t1[b][y])
        for x in range(n1)
        for y in range(n1)
    )


def _l_ideal(table, a):
    return frozenset(table[x][a] for x in range(len(table))) | {a}


def _r_ideal(table, a):
    return frozenset(table[a][x] for x in range(len(table))) | {a}


def _idems_lit(table):
    return [x for x in range(len(table)) if table[x][x] == x]


def _regular_lit(table, x):
    n = len(table)
    return any(table[table[x][y]][x] == x for y in range(n))


def _all_regular_lit(table):
    return all(_regular_lit(table, x) for x in range(len(table)))


def _sandwich_table(table, a):
    n = len(table)
    return tuple(
        tuple(table[table[x][a]][y] for y in range(n)) for x in range(n)
    )


def _ltilde_key(table, a, us):
    return tuple(table[a][e] == a for e in us)


def _rtilde_key(table, a, us):
    return tuple(table[e][a] == a for e in us)


def _rel_class_lit(table, relation, a):
    """Definitional class of a under L / R / L* / R* / L~:US / R~:US."""
    n = len(table)
    if relation == "L":
        ka = _l_ideal(table, a)
        return [b for b in range(n) if _l_ideal(table, b) == ka]
    if relation == "R":
        ka = _r_ideal(table, a)
        return [b for b in range(n) if _r_ideal(table, b) == ka]
    if relation == "L*":
        return [b for b in range(n) if _lstar_same_lit(table, a, b)]
    if relation == "R*":
        return [b for b in range(n) if _rstar_same_lit(table, a, b)]
    raise ValueError(f"unknown relation {relation!r}")


def _natural_leq_lit(table, a, b):
    t1, n1 = _s1_table(table)
    left = any(t1[x][b] == a and t1[x][a] == a for x in range(n1))
    return left and any(t1[b][y] == a for y in range(n1))


def _star_partition_lit(table, side):
    """Class-index list for L* ("L") or R* ("R") via pairwise scans."""
    n = len(table)
    same = _lstar_same_lit if side == "L" else _rstar_same_lit
    idx = [-1] * n
    k = 0
    for a in range(n):
        if idx[a] != -1:
            continue
        idx[a] = k
        for b in range(a + 1, n):
            if idx[b] == -1 and same(table, a, b):
                idx[b] = k
        k += 1
    return idx


def _is_congruence_lit(table, class_index):
    n = len(table)
    for x in range(n):
        for y in range(n):
            if class_index[x] != class_index[y]:
                continue
            for z in range(n):
                if class_index[table[z][x]] != class_index[table[z][y]]:
                    return False
                if class_index[table[x][z]] != class_index[table[y][z]]:
                    return False
    return True


def _weakly_abundant_lit(table, us, strict):
    """Definitional weak U-abundance check."""
    n = len(table)
    target = set(us) if strict else set(_idems_lit(table))
    for key in (_ltilde_key, _rtilde_key):
        for a in range(n):
            if not any(
                key(table, b, us) == key(table, a, us) and b in target
                for b in range(n)
            ):
                return False
    return True


def _iso_exists_lit(ta, tb):
    """Exhaustive isomorphism test between two raw tables."""
    n = len(ta)
    if n != len(tb):
        return False
    for perm in itertools.permutations(range(n)):
        if all(
            perm[ta[x][y]] == tb[perm[x]][perm[y]]
            for x in range(n)
            for y in range(n)
        ):
            return True
    return False


def _lambda_quotient_lit(table, u):
    """Table of S^u / lambda^u built from scratch: classes by the value ux."""
    n = len(table)
    values = sorted({table[u][x] for x in range(n)})
    cls = {v: i for i, v in enumerate(values)}
    idx = [cls[table[u][x]] for x in range(n)]
    reps = []
    for c in range(len(values)):
        reps.append(min(x for x in range(n) if idx[x] == c))
    # product in the variant: a * b = a u b
    return tuple(
        tuple(idx[table[table[a][u]][b]] for b in reps) for a in reps
    )


def _usub_table_lit(table, u):
    """Table of uS with elements re-indexed by ascending original id."""
    n = len(table)
    members = sorted({table[u][x] for x in range(n)})
    pos = {v: i for i, v in enumerate(members)}
    return tuple(tuple(pos[table[a][b]] for b in members) for a in members)


# ---------------------------------------------------------------------------
# C-1.1  regular semigroups are abundant (classical and starred classes
#        all meet E(S))


def _eval_c11(s, opts):
    cid = "C-1.1"
    if not core.is_regular(s):
        return [_res(cid, s, {}, STATUS_NOT_APPLICABLE)]
    es = _idem(s)
    g = _green(s)
    st = _star(s)
    for rel, name in (
        (g.l, "L"), (g.r, "R"), (st.l_star, "L*"), (st.r_star, "R*")
    ):
        for block in rel.classes:
            if not any(x in es for x in block):
                return [
                    _res(cid, s, {}, STATUS_FAILS,
                         {"relation": name, "element": block[0]})
                ]
    return [_res(cid, s, {}, STATUS_HOLDS)]


def _recheck_c11(s, params, w, opts):
    t = s.table
    if not _all_regular_lit(t):
        return False
    block = _rel_class_lit(t, w["relation"], w["element"])
    es = set(_idems_lit(t))
    return not any(x in es for x in block)


# C-1.2  the kernel-based starred relations agree with the literal
#        pairwise cancellation condition over S^1


def _eval_c12(s, opts):
    cid = "C-1.2"
    st = _star(s)
    t = s.table
    for a in range(s.order):
        for b in range(a + 1, s.order):
            for side, rel, lit in (
                ("R", st.r_star, _rstar_same_lit),
                ("L", st.l_star, _lstar_same_lit),
            ):
                got = rel.same(a, b)
                want = lit(t, a, b)
                if got != want:
                    return [
                        _res(cid, s, {}, STATUS_FAILS,
                             {"side": side, "a": a, "b": b,
                              "bundle": got, "literal": want})
                    ]
    return [_res(cid, s, {}, STATUS_HOLDS)]


def _recheck_c12(s, params, w, opts):
    st = relations.star(s)
    rel = st.r_star if w["side"] == "R" else st.l_star
    lit = _rstar_same_lit if w["side"] == "R" else _lstar_same_lit
    return rel.same(w["a"], w["b"]) != lit(s.table, w["a"], w["b"])


# C-1.3  a R* e (e idempotent) iff ea = a and xa = ya implies xe = ye;
#        dually for L*


def _c13_rhs(table, a, e, side):
    t1, n1 = _s1_table(table)
    if side == "R":
        if table[e][a] != a:
            return False
        return all(
            t1[x][a] != t1[y][a] or t1[x][e] == t1[y][e]
            for x in range(n1)
            for y in range(n1)
        )
    if table[a][e] != a:
        return False
    return all(
        t1[a][x] != t1[a][y] or t1[e][x] == t1[e][y]
        for x in range(n1)
        for y in range(n1)
    )


def _eval_c13(s, opts):
    cid = "C-1.3"
    st = _star(s)
    t = s.table
    for a in range(s.order):
        for e in sorted(_idem(s)):
            for side, rel in (("R", st.r_star), ("L", st.l_star)):
                lhs = rel.same(a, e)
                rhs = _c13_rhs(t, a, e, side)
                if lhs != rhs:
                    return [
                        _res(cid, s, {}, STATUS_FAILS,
                             {"side": side, "a": a, "e": e,
                              "star": lhs, "characterization": rhs})
                    ]
    return [_res(cid, s, {}, STATUS_HOLDS)]


def _recheck_c13(s, params, w, opts):
    t = s.table
    if t[w["e"]][w["e"]] != w["e"]:
        return False
    same = _rstar_same_lit if w["side"] == "R" else _lstar_same_lit
    lhs = same(t, w["a"], w["e"])
    rhs = _c13_rhs(t, w["a"], w["e"], w["side"])
    return lhs != rhs


# C-INCL  L refines L* refines L~ (dually for R); all three coincide on
#         regular semigroups when U = E(S)


def _eval_cincl(s, opts):
    cid = "C-INCL"
    g = _green(s)
    st = _star(s)
    es = _idem(s)
    regular = core.is_regular(s)
    out = []
    for us in u_subsets(s):
        td = _tilde(s, frozenset(us))
        params = {"U": list(us)}
        witness = None
        for fine, coarse, name in (
            (g.l, st.l_star, "L<=L*"),
            (st.l_star, td.l_tilde, "L*<=L~"),
            (g.r, st.r_star, "R<=R*"),
            (st.r_star, td.r_tilde, "R*<=R~"),
        ):
            pair = _refinement_violation(fine, coarse)
            if pair is not None:
                witness = {"part": name, "x": pair[0], "y": pair[1]}
                break
        if witness is None and regular and set(us) == set(es):
            for p, q, name in (
                (g.l, st.l_star, "eq:L=L*"),
                (st.l_star, td.l_tilde, "eq:L*=L~"),
                (g.r, st.r_star, "eq:R=R*"),
                (st.r_star, td.r_tilde, "eq:R*=R~"),
            ):
                pair = _partition_diff(p, q)
                if pair is not None:
                    witness = {"part": name, "x": pair[0], "y": pair[1]}
                    break
        out.append(
            _res(cid, s, params,
                 STATUS_FAILS if witness else STATUS_HOLDS, witness)
        )
    return out


def _incl_membership(table, part, us, x, y):
    """(related-in-first, related-in-second) for a C-INCL witness part."""
    rels = {
        "L": lambda: _l_ideal(table, x) == _l_ideal(table, y),
        "R": lambda: _r_ideal(table, x) == _r_ideal(table, y),
        "L*": lambda: _lstar_same_lit(table, x, y),
        "R*": lambda: _rstar_same_lit(table, x, y),
        "L~": lambda: _ltilde_key(table, x, us) == _ltilde_key(table, y, us),
        "R~": lambda: _rtilde_key(table, x, us) == _rtilde_key(table, y, us),
    }
    body = part.split(":", 1)[-1]
    sep = "<=" if "<=" in body else "="
    first, second = body.split(sep)
    return rels[first](), rels[second]()


def _recheck_cincl(s, params, w, opts):
    us = tuple(sorted(params["U"]))
    a, b = _incl_membership(s.table, w["part"], us, w["x"], w["y"])
    if w["part"].startswith("eq:"):
        if not _all_regular_lit(s.table):
            return False
        if set(us) != set(_idems_lit(s.table)):
            return False
        return a != b
    return a and not b


# C-1.4  on an abundant semigroup the tilde relations at U = E(S)
#        collapse to the starred ones, and S is weakly E(S)-abundant


def _eval_c14(s, opts):
    cid = "C-1.4"
    if not _abundant(s):
        return [_res(cid, s, {}, STATUS_NOT_APPLICABLE)]
    es = frozenset(_idem(s))
    st = _star(s)
    td = _tilde(s, es)
    for p, q, name in (
        (st.l_star, td.l_tilde, "L*=L~"),
        (st.r_star, td.r_tilde, "R*=R~"),
    ):
        pair = _partition_diff(p, q)
        if pair is not None:
            return [
                _res(cid, s, {}, STATUS_FAILS,
                     {"part": name, "x": pair[0], "y": pair[1]})
            ]
    for rel, name in ((td.l_tilde, "L~"), (td.r_tilde, "R~")):
        for block in rel.classes:
            if not any(x in es for x in block):
                return [
                    _res(cid, s, {}, STATUS_FAILS,
                         {"part": "weakly-abundant", "relation": name,
                          "element": block[0]})
                ]
    return [_res(cid, s, {}, STATUS_HOLDS)]


def _abundant_lit(table):
    n = len(table)
    es = set(_idems_lit(table))
    for a in range(n):
        if not any(b in es for b in _rel_class_lit(table, "L*", a)):
            return False
        if not any(b in es for b in _rel_class_lit(table, "R*", a)):
            return False
    return True


def _recheck_c14(s, params, w, opts):
    t = s.table
    if not _abundant_lit(t):
        return False
    us = tuple(_idems_lit(t))
    if w["part"] == "weakly-abundant":
        key = _ltilde_key if w["relation"] == "L~" else _rtilde_key
        a = w["element"]
        ka = key(t, a, us)
        return not any(
            key(t, b, us) == ka and t[b][b] == b for b in range(len(t))
        )
    x, y = w["x"], w["y"]
    if w["part"] == "L*=L~":
        return _lstar_same_lit(t, x, y) != (
            _ltilde_key(t, x, us) == _ltilde_key(t, y, us)
        )
    return _rstar_same_lit(t, x, y) != (
        _rtilde_key(t, x, us) == _rtilde_key(t, y, us)
    )


# C-NONCONG  is L~ a right congruence (R~ a left congruence)?  Observed:
#            expected to fail on some instances.


def _eval_noncong(s, opts):
    cid = "C-NONCONG"
    t = s.table
    n = s.order
    out = []
    for us in u_subsets(s):
        td = _tilde(s, frozenset(us))
        for rel, name, translate in (
            (td.l_tilde, "L~", "right"),
            (td.r_tilde, "R~", "left"),
        ):
            witness = None
            for block in rel.classes:
                for i, x in enumerate(block):
                    for y in block[i + 1:]:
                        for z in range(n):
                            xz = t[x][z] if translate == "right" else t[z][x]
                            yz = t[y][z] if translate == "right" else t[z][y]
                            if not rel.same(xz, yz):
                                witness = {"x": x, "y": y, "z": z}
                                break
                        if witness:
                            break
                    if witness:
                        break
                if witness:
                    break
            out.append(
                _res(cid, s, {"U": list(us), "relation": name},
                     STATUS_FAILS if witness else STATUS_HOLDS, witness)
            )
    return out


def _recheck_noncong(s, params, w, opts):
    t = s.table
    us = tuple(sorted(params["U"]))
    x, y, z = w["x"], w["y"], w["z"]
    if params["relation"] == "L~":
        key = _ltilde_key
        xz, yz = t[x][z], t[y][z]
    else:
        key = _rtilde_key
        xz, yz = t[z][x], t[z][y]
    return key(t, x, us) == key(t, y, us) and key(t, xz, us) != key(t, yz, us)


# C-2.1  the sandwich operation x * y = x a y is associative


def _eval_c21(s, opts):
    cid = "C-2.1"
    t = s.table
    n = s.order
    out = []
    for a in range(n):
        vt = _sandwich_table(t, a)
        witness = None
        for x in range(n):
            for y in range(n):
                xy = vt[x][y]
                for z in range(n):
                    if vt[xy][z] != vt[x][vt[y][z]]:
                        witness = {"x": x, "y": y, "z": z}
                        break
                if witness:
                    break
            if witness:
                break
        out.append(
            _res(cid, s, {"a": a},
                 STATUS_FAILS if witness else STATUS_HOLDS, witness)
        )
    return out


def _recheck_c21(s, params, w, opts):
    t = s.table
    a = params["a"]

    def star(p, q):
        return t[t[p][a]][q]

    x, y, z = w["x"], w["y"], w["z"]
    return star(star(x, y), z) != star(x, star(y, z))


# C-2.2-quantifier  does quantifying the variant's cancellation condition
#                   over S^a only (no adjoined identity) give the same
#                   relations as quantifying over (S^a)^1?  Observed.


def _eval_c22q(s, opts):
    cid = "C-2.2-quantifier"
    n = s.order
    out = []
    for a in range(n):
        v = _variant(s, a).variant
        st = _star(v)
        vt = v.table
        witness = None
        for side, rel in (("R", st.r_star), ("L", st.l_star)):
            if side == "R":
                keys = [
                    tuple(
                        (vt[u][x] == vt[w][x])
                        for u in range(n)
                        for w in range(n)
                    )
                    for x in range(n)
                ]
            else:
                keys = [
                    tuple(
                        (vt[x][u] == vt[x][w])
                        for u in range(n)
                        for w in range(n)
                    )
                    for x in range(n)
                ]
            plain = Equivalence.from_keys(n, keys)
            pair = _partition_diff(rel, plain)
            if pair is not None:
                x, y = pair
                witness = {
                    "side": side, "x": x, "y": y,
                    "adjoined": rel.same(x, y), "plain": plain.same(x, y),
                }
                break
        out.append(
            _res(cid, s, {"a": a},
                 STATUS_FAILS if witness else STATUS_HOLDS, witness)
        )
    return out


def _recheck_c22q(s, params, w, opts):
    vt = _sandwich_table(s.table, params["a"])
    n = len(vt)
    x, y = w["x"], w["y"]
    if w["side"] == "R":
        adj = _rstar_same_lit(vt, x, y)
        plain = all(
            (vt[u][x] == vt[v][x]) == (vt[u][y] == vt[v][y])
            for u in range(n)
            for v in range(n)
        )
    else:
        adj = _lstar_same_lit(vt, x, y)
        plain = all(
            (vt[x][u] == vt[x][v]) == (vt[y][u] == vt[y][v])
            for u in range(n)
            for v in range(n)
        )
    return adj != plain


# C-2.2-composition  is D* of the variant the relational composition
#                    R* o L* (= L* o R*)?  Observed.


def _eval_c22c(s, opts):
    cid = "C-2.2-composition"
    out = []
    for a in range(s.order):
        v = _variant(s, a).variant
        st = _star(v)
        rl = relations.compose(st.r_star, st.l_star)
        lr = relations.compose(st.l_star, st.r_star)
        jp = st.d_star.pairs()
        witness = None
        if not (rl == jp and lr == jp):
            for x in range(s.order):
                for y in range(s.order):
                    trio = ((x, y) in jp, (x, y) in rl, (x, y) in lr)
                    if len(set(trio)) > 1:
                        witness = {
                            "x": x, "y": y, "in_join": trio[0],
                            "in_rl": trio[1], "in_lr": trio[2],
                        }
                        break
                if witness:
                    break
        out.append(
            _res(cid, s, {"a": a},
                 STATUS_FAILS if witness else STATUS_HOLDS, witness)
        )
    return out


def _recheck_c22c(s, params, w, opts):
    vt = _sandwich_table(s.table, params["a"])
    n = len(vt)
    lidx = _star_partition_lit(vt, "L")
    ridx = _star_partition_lit(vt, "R")
    x, y = w["x"], w["y"]
    in_rl = any(ridx[x] == ridx[c] and lidx[c] == lidx[y] for c in range(n))
    in_lr = any(lidx[x] == lidx[c] and ridx[c] == ridx[y] for c in range(n))
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for a in range(n):
        for b in range(n):
            if lidx[a] == lidx[b] or ridx[a] == ridx[b]:
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[rb] = ra
    in_join = find(x) == find(y)
    return (
        in_join == w["in_join"]
        and in_rl == w["in_rl"]
        and in_lr == w["in_lr"]
        and len({in_join, in_rl, in_lr}) > 1
    )


# C-2.3-restricted  on P1 the variant's R* agrees with the base's R*
#                   (dually P2 / L*).  Hard.
# C-2.3-literal     the unrestricted reading: for every x,
#                   R*^a-class(x) & P1 = R*-class(x).  Observed.


def _eval_c23r(s, opts):
    cid = "C-2.3-restricted"
    out = []
    bst = _star(s)
    for a in range(s.order):
        ps = _psets(s, a)
        vst = _star(_variant(s, a).variant)
        witness = None
        for members, vrel, brel, side in (
            (sorted(ps.p1), vst.r_star, bst.r_star, "R"),
            (sorted(ps.p2), vst.l_star, bst.l_star, "L"),
        ):
            for i, x in enumerate(members):
                for y in members[i + 1:]:
                    vr, br = vrel.same(x, y), brel.same(x, y)
                    if vr != br:
                        witness = {
                            "side": side, "x": x, "y": y,
                            "variant_related": vr, "base_related": br,
                        }
                        break
                if witness:
                    break
            if witness:
                break
        out.append(
            _res(cid, s, {"a": a},
                 STATUS_FAILS if witness else STATUS_HOLDS, witness)
        )
    return out


def _in_p1_lit(table, a, x):
    return _rstar_same_lit(table, table[a][x], x)


def _in_p2_lit(table, a, x):
    return _lstar_same_lit(table, table[x][a], x)


def _recheck_c23r(s, params, w, opts):
    t = s.table
    a = params["a"]
    vt = _sandwich_table(t, a)
    x, y = w["x"], w["y"]
    if w["side"] == "R":
        if not (_in_p1_lit(t, a, x) and _in_p1_lit(t, a, y)):
            return False
        return _rstar_same_lit(vt, x, y) != _rstar_same_lit(t, x, y)
    if not (_in_p2_lit(t, a, x) and _in_p2_lit(t, a, y)):
        return False
    return _lstar_same_lit(vt, x, y) != _lstar_same_lit(t, x, y)


def _eval_c23l(s, opts):
    cid = "C-2.3-literal"
    out = []
    bst = _star(s)
    for a in range(s.order):
        ps = _psets(s, a)
        vst = _star(_variant(s, a).variant)
        witness = None
        for pset, vrel, brel, side in (
            (ps.p1, vst.r_star, bst.r_star, "R"),
            (ps.p2, vst.l_star, bst.l_star, "L"),
        ):
            for x in range(s.order):
                lhs = {y for y in vrel.class_of(x) if y in pset}
                rhs = set(brel.class_of(x))
                if lhs != rhs:
                    y = min(lhs ^ rhs)
                    witness = {
                        "side": side, "x": x, "y": y,
                        "in_variant_cap_p": y in lhs, "in_base": y in rhs,
                    }
                    break
            if witness:
                break
        out.append(
            _res(cid, s, {"a": a},
                 STATUS_FAILS if witness else STATUS_HOLDS, witness)
        )
    return out


def _recheck_c23l(s, params, w, opts):
    t = s.table
    a = params["a"]
    vt = _sandwich_table(t, a)
    x, y = w["x"], w["y"]
    if w["side"] == "R":
        lhs = _rstar_same_lit(vt, x, y) and _in_p1_lit(t, a, y)
        rhs = _rstar_same_lit(t, x, y)
    else:
        lhs = _lstar_same_lit(vt, x, y) and _in_p2_lit(t, a, y)
        rhs = _lstar_same_lit(t, x, y)
    return lhs != rhs


# C-2.4  variants of an abundant monoid at invertible sandwich elements
#        are abundant


def _eval_c24(s, opts):
    cid = "C-2.4"
    out = []
    applicable = s.identity is not None and _abundant(s)
    for a in range(s.order):
        params = {"a": a}
        if not applicable or not core.is_invertible(s, a):
            out.append(_res(cid, s, params, STATUS_NOT_APPLICABLE))
            continue
        v = _variant(s, a).variant
        vst = _star(v)
        ves = idempotents(v)
        witness = None
        for rel, name in ((vst.l_star, "L*"), (vst.r_star, "R*")):
            for block in rel.classes:
                if not any(x in ves for x in block):
                    witness = {"relation": name, "element": block[0]}
                    break
            if witness:
                break
        out.append(
            _res(cid, s, params,
                 STATUS_FAILS if witness else STATUS_HOLDS, witness)
        )
    return out


def _recheck_c24(s, params, w, opts):
    t = s.table
    n = s.order
    a = params["a"]
    e = next(
        (x for x in range(n)
         if all(t[x][y] == y and t[y][x] == y for y in range(n))),
        None,
    )
    if e is None or not _abundant_lit(t):
        return False
    if not any(t[a][b] == e and t[b][a] == e for b in range(n)):
        return False
    vt = _sandwich_table(t, a)
    block = _rel_class_lit(vt, w["relation"], w["element"])
    ves = set(_idems_lit(vt))
    return not any(x in ves for x in block)


# C-2.5  an idempotent sandwich element is idempotent in its own variant


def _eval_c25(s, opts):
    cid = "C-2.5"
    t = s.table
    out = []
    for e in sorted(_idem(s)):
        eee = t[t[e][e]][e]
        out.append(
            _res(cid, s, {"e": e},
                 STATUS_HOLDS if eee == e else STATUS_FAILS,
                 None if eee == e else {"e_star_e": eee})
        )
    return out


def _recheck_c25(s, params, w, opts):
    t = s.table
    e = params["e"]
    return t[e][e] == e and t[t[e][e]][e] != e


# C-2.6  weak abundance passed to idempotent variants, under two readings
#        of the inherited idempotent set.  Observed.


def _eval_c26(reading):
    cid = f"C-2.6-{reading}"

    def evaluate(s, opts):
        out = []
        for us in u_subsets(s):
            weakly = relations.is_weakly_u_abundant(s, us, strict=opts.strict_u)
            for e in us:
                params = {"U": list(us), "e": e}
                if not weakly:
                    out.append(_res(cid, s, params, STATUS_NOT_APPLICABLE))
                    continue
                v = _variant(s, e).variant
                if reading == "inter":
                    uprime = sorted(set(us) & set(idempotents(v)))
                else:
                    uprime = [e]
                td = _tilde(v, frozenset(uprime))
                target = (
                    frozenset(uprime) if opts.strict_u else idempotents(v)
                )
                witness = None
                for rel, name in (
                    (td.l_tilde, "L~"), (td.r_tilde, "R~")
                ):
                    for block in rel.classes:
                        if not any(x in target for x in block):
                            witness = {
                                "Uprime": list(uprime), "relation": name,
                                "element": block[0],
                            }
                            break
                    if witness:
                        break
                out.append(
                    _res(cid, s, params,
                         STATUS_FAILS if witness else STATUS_HOLDS, witness)
                )
        return out

    return evaluate


def _recheck_c26(reading):
    def recheck(s, params, w, opts):
        t = s.table
        us = tuple(sorted(params["U"]))
        e = params["e"]
        if not _weakly_abundant_lit(t, us, opts.strict_u):
            return False
        vt = _sandwich_table(t, e)
        if reading == "inter":
            uprime = tuple(sorted(set(us) & set(_idems_lit(vt))))
        else:
            uprime = (e,)
        if tuple(sorted(w["Uprime"])) != uprime:
            return False
        key = _ltilde_key if w["relation"] == "L~" else _rtilde_key
        a = w["element"]
        ka = key(vt, a, uprime)
        target = set(uprime) if opts.strict_u else set(_idems_lit(vt))
        return not any(
            key(vt, b, uprime) == ka and b in target for b in range(len(vt))
        )

    return recheck


# C-3.1  the congruence lattice: join-closure of principal congruences
#        equals the brute-force partition filter, and every quotient is
#        well defined


def _eval_c31(s, opts):
    cid = "C-3.1"
    n = s.order
    produced = all_congruences(s)
    produced_keys = {p.class_index for p in produced}
    brute_keys = set()
    for ci in _set_partitions(n):
        if _is_congruence_lit(s.table, ci):
            brute_keys.add(ci)
    if produced_keys != brute_keys:
        only_prod = sorted(produced_keys - brute_keys)
        only_brute = sorted(brute_keys - produced_keys)
        return [
            _res(cid, s, {}, STATUS_FAILS,
                 {"part": "lattice",
                  "only_production": [list(k) for k in only_prod[:1]],
                  "only_bruteforce": [list(k) for k in only_brute[:1]]})
        ]
    t = s.table
    for p in produced:
        q, _ = quotient(s, p)
        for x in range(n):
            for y in range(n):
                if q.table[p.class_index[x]][p.class_index[y]] != p.class_index[t[x][y]]:
                    return [
                        _res(cid, s, {}, STATUS_FAILS,
                             {"part": "welldef",
                              "partition": list(p.class_index),
                              "x": x, "y": y})
                    ]
    return [_res(cid, s, {}, STATUS_HOLDS)]


def _set_partitions(n):
    """All partitions of 0..n-1 as canonical class-index tuples."""
    code: list[int] = []

    def rec(i, k):
        if i == n:
            yield tuple(code)
            return
        for c in range(k + 1):
            code.append(c)
            yield from rec(i + 1, k + 1 if c == k else k)
            code.pop()

    yield from rec(0, 0)


def _recheck_c31(s, params, w, opts):
    t = s.table
    if w["part"] == "lattice":
        for ci in w["only_production"]:
            if not _is_congruence_lit(t, ci):
                return True
        for ci in w["only_bruteforce"]:
            if _is_congruence_lit(t, ci) and tuple(ci) not in {
                p.class_index for p in all_congruences(s)
            }:
                return True
        return False
    ci = w["partition"]
    if not _is_congruence_lit(t, ci):
        return False
    reps = []
    for c in range(max(ci) + 1):
        reps.append(min(x for x in range(len(ci)) if ci[x] == c))
    x, y = w["x"], w["y"]
    return ci[t[reps[ci[x]]][reps[ci[y]]]] != ci[t[x][y]]


# C-3.2  lambda^u is a left congruence and rho^u a right congruence on
#        the variant S^u; lambda^u is in fact two-sided there


def _eval_c32(s, opts):
    cid = "C-3.2"
    t = s.table
    n = s.order
    out = []
    for u in range(n):
        v = _variant(s, u).variant
        lam = sandwich_lambda(s, u)
        rho = sandwich_rho(s, u)
        lam_kind = congruence_kind(v, lam)
        rho_kind = congruence_kind(v, rho)
        witness = None
        if lam_kind not in (KIND_LEFT, KIND_TWO_SIDED):
            witness = _translation_violation(t, n, u, "lambda", "left")
        elif rho_kind not in (KIND_RIGHT, KIND_TWO_SIDED):
            witness = _translation_violation(t, n, u, "rho", "right")
        elif lam_kind != KIND_TWO_SIDED:
            witness = _translation_violation(t, n, u, "lambda", "right")
        out.append(
            _res(cid, s, {"u": u},
                 STATUS_FAILS if witness else STATUS_HOLDS, witness)
        )
    return out


def _translation_violation(t, n, u, relation, side):
    def related(x, y):
        if relation == "lambda":
            return t[u][x] == t[u][y]
        return t[x][u] == t[y][u]

    def star(p, q):
        return t[t[p][u]][q]

    for x in range(n):
        for y in range(n):
            if x != y and related(x, y):
                for z in range(n):
                    if side == "left" and not related(star(z, x), star(z, y)):
                        return {"relation": relation, "requirement": side,
                                "x": x, "y": y, "z": z}
                    if side == "right" and not related(star(x, z), star(y, z)):
                        return {"relation": relation, "requirement": side,
                                "x": x, "y": y, "z": z}
    return None


def _recheck_c32(s, params, w, opts):
    t = s.table
    u = params["u"]

    def related(a, b):
        if w["relation"] == "lambda":
            return t[u][a] == t[u][b]
        return t[a][u] == t[b][u]

    def star(p, q):
        return t[t[p][u]][q]

    x, y, z = w["x"], w["y"], w["z"]
    if not related(x, y):
        return False
    if w["requirement"] == "left":
        return not related(star(z, x), star(z, y))
    return not related(star(x, z), star(y, z))


# C-3.4  S^u / lambda^u is isomorphic to uS


def _eval_c34(s, opts):
    cid = "C-3.4"
    out = []
    for u in range(s.order):
        v = _variant(s, u).variant
        lam = sandwich_lambda(s, u)
        try:
            q, _ = quotient(v, lam)
        except NotACongruence as err:
            out.append(
                _res(cid, s, {"u": u}, STATUS_FAILS,
                     {"part": "lambda-not-congruence", "kind": err.kind})
            )
            continue
        h = u_translate_hom(s, u)
        iso = are_isomorphic(q, h.codomain)
        witness = None
        if iso is None:
            witness = {
                "quotient": inline_table(q),
                "image": inline_table(h.codomain),
            }
        out.append(
            _res(cid, s, {"u": u},
                 STATUS_FAILS if witness else STATUS_HOLDS, witness)
        )
    return out


def _recheck_c34(s, params, w, opts):
    t = s.table
    u = params["u"]
    if w.get("part") == "lambda-not-congruence":
        values = sorted({t[u][x] for x in range(s.order)})
        pos = {val: i for i, val in enumerate(values)}
        ci = [pos[t[u][x]] for x in range(s.order)]
        vt = _sandwich_table(t, u)
        return not _is_congruence_lit(vt, ci)
    return not _iso_exists_lit(_lambda_quotient_lit(t, u), _usub_table_lit(t, u))


# C-3.5  L-related sandwich elements give isomorphic quotients
#        S^a/lambda^a and S^b/lambda^b.  Observed.


def _eval_c35(s, opts):
    cid = "C-3.5"
    out = []
    g = _green(s)
    for block in g.l.classes:
        for i, a in enumerate(block):
            for b in block[i + 1:]:
                qa, _ = quotient(_variant(s, a).variant, sandwich_lambda(s, a))
                qb, _ = quotient(_variant(s, b).variant, sandwich_lambda(s, b))
                iso = are_isomorphic(qa, qb)
                witness = None
                if iso is None:
                    witness = {
                        "quotient_a": inline_table(qa),
                        "quotient_b": inline_table(qb),
                    }
                out.append(
                    _res(cid, s, {"a": a, "b": b},
                         STATUS_FAILS if witness else STATUS_HOLDS, witness)
                )
    return out


def _recheck_c35(s, params, w, opts):
    t = s.table
    a, b = params["a"], params["b"]
    if _l_ideal(t, a) != _l_ideal(t, b):
        return False
    return not _iso_exists_lit(
        _lambda_quotient_lit(t, a), _lambda_quotient_lit(t, b)
    )


# C-FHT  first isomorphism theorem for the u-translation homomorphism:
#        domain / kernel is isomorphic to the image


def _eval_cfht(s, opts):
    cid = "C-FHT"
    out = []
    for u in range(s.order):
        h = u_translate_hom(s, u)
        q, _ = quotient(h.domain, h.kernel())
        image_sub, _ = induced_subsemigroup(h.codomain, h.image())
        iso = are_isomorphic(q, image_sub)
        witness = None
        if iso is None:
            witness = {
                "quotient": inline_table(q),
                "image": inline_table(image_sub),
            }
        out.append(
            _res(cid, s, {"u": u},
                 STATUS_FAILS if witness else STATUS_HOLDS, witness)
        )
    return out


# C-FUND  the no-nontrivial-idempotent-separating-congruence predicate
#         agrees with a brute-force scan over all partitions


def _eval_cfund(s, opts):
    cid = "C-FUND"
    production = is_fundamental(s)
    t = s.table
    n = s.order
    es = set(_idems_lit(t))
    brute = True
    found = None
    for ci in _set_partitions(n):
        if max(ci) + 1 == n:  # identity partition
            continue
        if not _is_congruence_lit(t, ci):
            continue
        blocks: dict[int, list[int]] = {}
        for x, c in enumerate(ci):
            blocks.setdefault(c, []).append(x)
        if all(sum(1 for x in blk if x in es) <= 1 for blk in blocks.values()):
            brute = False
            found = list(ci)
            break
    if production == brute:
        return [_res(cid, s, {}, STATUS_HOLDS)]
    return [
        _res(cid, s, {}, STATUS_FAILS,
             {"production": production, "bruteforce": brute,
              "witness_partition": found})
    ]


def _recheck_cfund(s, params, w, opts):
    t = s.table
    if w["witness_partition"] is not None:
        ci = w["witness_partition"]
        es = set(_idems_lit(t))
        if max(ci) + 1 == len(ci) or not _is_congruence_lit(t, ci):
            return False
        blocks: dict[int, list[int]] = {}
        for x, c in enumerate(ci):
            blocks.setdefault(c, []).append(x)
        separating = all(
            sum(1 for x in blk if x in es) <= 1 for blk in blocks.values()
        )
        return separating and is_fundamental(s)
    return is_fundamental(s) != w["bruteforce"]


# C-4.0  the natural order restricted to idempotents is the usual
#        idempotent order ef = fe = e


def _eval_c40(s, opts):
    cid = "C-4.0"
    nat = _natural(s)
    t = s.table
    for e in sorted(_idem(s)):
        for f in sorted(_idem(s)):
            usual = t[e][f] == e and t[f][e] == e
            if nat.leq[e][f] != usual:
                return [
                    _res(cid, s, {}, STATUS_FAILS,
                         {"e": e, "f": f, "natural": nat.leq[e][f],
                          "usual": usual})
                ]
    return [_res(cid, s, {}, STATUS_HOLDS)]


def _recheck_c40(s, params, w, opts):
    t = s.table
    e, f = w["e"], w["f"]
    if t[e][e] != e or t[f][f] != f:
        return False
    usual = t[e][f] == e and t[f][e] == e
    return _natural_leq_lit(t, e, f) != usual


# C-4.1  E(S^e) versus {f in E(S) : f <= e}: the forward inclusion is
#        hard, the reverse is observed (counterexamples expected)


def _eval_c41f(s, opts):
    cid = "C-4.1-forward"
    t = s.table
    out = []
    for e in sorted(_idem(s)):
        vt = _variant(s, e).variant.table
        witness = None
        for f in sorted(_idem(s)):
            if t[f][e] == f and t[e][f] == f and vt[f][f] != f:
                witness = {"f": f, "f_star_f": vt[f][f]}
                break
        out.append(
            _res(cid, s, {"e": e},
                 STATUS_FAILS if witness else STATUS_HOLDS, witness)
        )
    return out


def _recheck_c41f(s, params, w, opts):
    t = s.table
    e, f = params["e"], w["f"]
    if t[e][e] != e or t[f][f] != f:
        return False
    return t[f][e] == f and t[e][f] == f and t[t[f][e]][f] != f


def _eval_c41r(s, opts):
    cid = "C-4.1-reverse"
    t = s.table
    out = []
    for e in sorted(_idem(s)):
        vt = _variant(s, e).variant.table
        witness = None
        for f in s.elements:
            if vt[f][f] == f:
                if not (t[f][f] == f and t[f][e] == f and t[e][f] == f):
                    witness = {
                        "f": f, "ff": t[f][f], "fe": t[f][e], "ef": t[e][f],
                    }
                    break
        out.append(
            _res(cid, s, {"e": e},
                 STATUS_FAILS if witness else STATUS_HOLDS, witness)
        )
    return out


def _recheck_c41r(s, params, w, opts):
    t = s.table
    e, f = params["e"], w["f"]
    if t[e][e] != e:
        return False
    in_variant = t[t[f][e]][f] == f
    below = t[f][f] == f and t[f][e] == f and t[e][f] == f
    return in_variant and not below


# C-4.2  <=_e is a partial order on E(S^e)


def _eval_c42(s, opts):
    cid = "C-4.2"
    out = []
    for e in sorted(_idem(s)):
        rel = orders.variant_idempotent_leq(_variant(s, e))
        witness = None
        r = rel.check_reflexive()
        if r is not None:
            witness = {"law": "reflexivity", "x": r}
        if witness is None:
            pair = rel.check_antisymmetric()
            if pair is not None:
                witness = {"law": "antisymmetry", "x": pair[0], "y": pair[1]}
        if witness is None:
            trio = rel.check_transitive()
            if trio is not None:
                witness = {"law": "transitivity", "x": trio[0],
                           "y": trio[1], "z": trio[2]}
        out.append(
            _res(cid, s, {"e": e},
                 STATUS_FAILS if witness else STATUS_HOLDS, witness)
        )
    return out


def _recheck_c42(s, params, w, opts):
    t = s.table
    e = params["e"]
    vt = _sandwich_table(t, e)

    def leq(a, b):
        return vt[a][a] == a and vt[b][b] == b and vt[a][b] == a and vt[b][a] == a

    if w["law"] == "reflexivity":
        x = w["x"]
        return vt[x][x] == x and not leq(x, x)
    if w["law"] == "antisymmetry":
        x, y = w["x"], w["y"]
        return x != y and leq(x, y) and leq(y, x)
    x, y, z = w["x"], w["y"], w["z"]
    return leq(x, y) and leq(y, z) and not leq(x, z)


# C-4.3  a <=_e b in the variant implies a <= b in the base


def _eval_c43(s, opts):
    cid = "C-4.3"
    nat = _natural(s)
    out = []
    for e in sorted(_idem(s)):
        vle = orders.variant_leq(_variant(s, e))
        witness = None
        for a in s.elements:
            for b in s.elements:
                if vle.leq[a][b] and not nat.leq[a][b]:
                    witness = {"a": a, "b": b}
                    break
            if witness:
                break
        out.append(
            _res(cid, s, {"e": e},
                 STATUS_FAILS if witness else STATUS_HOLDS, witness)
        )
    return out


def _recheck_c43(s, params, w, opts):
    t = s.table
    vt = _sandwich_table(t, params["e"])
    a, b = w["a"], w["b"]
    return _natural_leq_lit(vt, a, b) and not _natural_leq_lit(t, a, b)


# C-4.4  below an idempotent of the variant everything is idempotent
#        there (a); below a regular element everything is regular (b)


def _eval_c44a(s, opts):
    cid = "C-4.4a"
    out = []
    for e in sorted(_idem(s)):
        vt = _variant(s, e).variant.table
        vle = orders.variant_leq(_variant(s, e))
        witness = None
        for f in s.elements:
            if vt[f][f] != f:
                continue
            for a in s.elements:
                if vle.leq[a][f] and vt[a][a] != a:
                    witness = {"a": a, "f": f}
                    break
            if witness:
                break
        out.append(
            _res(cid, s, {"e": e},
                 STATUS_FAILS if witness else STATUS_HOLDS, witness)
        )
    return out


def _recheck_c44a(s, params, w, opts):
    vt = _sandwich_table(s.table, params["e"])
    a, f = w["a"], w["f"]
    return (
        vt[f][f] == f
        and _natural_leq_lit(vt, a, f)
        and vt[a][a] != a
    )


def _eval_c44b(s, opts):
    cid = "C-4.4b"
    out = []
    for e in sorted(_idem(s)):
        v = _variant(s, e).variant
        vt = v.table
        vle = orders.variant_leq(_variant(s, e))
        regular = [core.is_regular_element(v, x) for x in s.elements]
        witness = None
        for a in s.elements:
            for b in s.elements:
                if vle.leq[a][b] and regular[b] and not regular[a]:
                    witness = {"a": a, "b": b}
                    break
            if witness:
                break
        out.append(
            _res(cid, s, {"e": e},
                 STATUS_FAILS if witness else STATUS_HOLDS, witness)
        )
    return out


def _recheck_c44b(s, params, w, opts):
    vt = _sandwich_table(s.table, params["e"])
    a, b = w["a"], w["b"]
    return (
        _natural_leq_lit(vt, a, b)
        and _regular_lit(vt, b)
        and not _regular_lit(vt, a)
    )


# C-NAT-PO  is the natural order actually a partial order?  Measured.


def _eval_cnatpo(s, opts):
    cid = "C-NAT-PO"
    rel = _natural(s)
    witness = None
    r = rel.check_reflexive()
    if r is not None:
        witness = {"law": "reflexivity", "x": r}
    if witness is None:
        pair = rel.check_antisymmetric()
        if pair is not None:
            witness = {"law": "antisymmetry", "x": pair[0], "y": pair[1]}
    if witness is None:
        trio = rel.check_transitive()
        if trio is not None:
            witness = {"law": "transitivity", "x": trio[0], "y": trio[1],
                       "z": trio[2]}
    return [_res(cid, s, {},
                 STATUS_FAILS if witness else STATUS_HOLDS, witness)]


def _recheck_cnatpo(s, params, w, opts):
    t = s.table
    if w["law"] == "reflexivity":
        return not _natural_leq_lit(t, w["x"], w["x"])
    if w["law"] == "antisymmetry":
        x, y = w["x"], w["y"]
        return x != y and _natural_leq_lit(t, x, y) and _natural_leq_lit(t, y, x)
    x, y, z = w["x"], w["y"], w["z"]
    return (
        _natural_leq_lit(t, x, y)
        and _natural_leq_lit(t, y, z)
        and not _natural_leq_lit(t, x, z)
    )


# ---------------------------------------------------------------------------
# registry


REGISTRY: dict[str, Claim] = {
    c.claim_id: c
    for c in [
        Claim("C-1.1", KIND_HARD,
              "in a regular semigroup, every L/R and L*/R* class contains an idempotent",
              _eval_c11, _recheck_c11),
        Claim("C-1.2", KIND_HARD,
              "kernel-computed starred relations match the literal cancellation condition over S^1",
              _eval_c12, _recheck_c12),
        Claim("C-1.3", KIND_HARD,
              "for idempotent e: a R* e iff ea = a and xa = ya implies xe = ye (dually for L*)",
              _eval_c13, _recheck_c13),
        Claim("C-INCL", KIND_HARD,
              "L refines L* refines L~ (dually R), with equality on regular semigroups at U = E(S)",
              _eval_cincl, _recheck_cincl),
        Claim("C-1.4", KIND_HARD,
              "on abundant semigroups the U = E(S) tilde relations equal the starred ones and S is weakly E(S)-abundant",
              _eval_c14, _recheck_c14),
        Claim("C-NONCONG", KIND_OBSERVED,
              "is L~ a right congruence (R~ a left congruence)?  fails on some instances by design",
              _eval_noncong, _recheck_noncong),
        Claim("C-2.1", KIND_HARD,
              "the sandwich operation x * y = x.a.y is associative for every a",
              _eval_c21, _recheck_c21),
        Claim("C-2.2-quantifier", KIND_OBSERVED,
              "variant starred relations: quantifying over S^a only versus over (S^a)^1",
              _eval_c22q, _recheck_c22q),
        Claim("C-2.2-composition", KIND_OBSERVED,
              "is D* of the variant the relational composition R* o L* = L* o R*?",
              _eval_c22c, _recheck_c22c),
        Claim("C-2.3-restricted", KIND_HARD,
              "restricted to P1, the variant's R* agrees with the base's R* (dually P2/L*)",
              _eval_c23r, _recheck_c23r),
        Claim("C-2.3-literal", KIND_OBSERVED,
              "unrestricted reading: R*^a-class(x) intersected with P1 equals R*-class(x) for every x",
              _eval_c23l, _recheck_c23l),
        Claim("C-2.4", KIND_HARD,
              "variants of an abundant monoid at invertible elements are abundant",
              _eval_c24, _recheck_c24),
        Claim("C-2.5", KIND_HARD,
              "an idempotent sandwich element is idempotent in its own variant",
              _eval_c25, _recheck_c25),
        Claim("C-2.6-inter", KIND_OBSERVED,
              "weak U-abundance passes to idempotent variants with U' = U intersect E(S^e)",
              _eval_c26("inter"), _recheck_c26("inter")),
        Claim("C-2.6-sandwich", KIND_OBSERVED,
              "weak U-abundance passes to idempotent variants with U' = {e}",
              _eval_c26("sandwich"), _recheck_c26("sandwich")),
        Claim("C-3.1", KIND_HARD,
              "the congruence lattice matches a brute-force partition filter and quotients are well defined",
              _eval_c31, _recheck_c31),
        Claim("C-3.2", KIND_HARD,
              "lambda^u (rho^u) is a left (right) congruence on S^u; lambda^u is two-sided there",
              _eval_c32, _recheck_c32),
        Claim("C-3.4", KIND_HARD,
              "S^u / lambda^u is isomorphic to uS",
              _eval_c34, _recheck_c34),
        Claim("C-3.5", KIND_OBSERVED,
              "L-related sandwich elements give isomorphic quotients S^a/lambda^a and S^b/lambda^b",
              _eval_c35, _recheck_c35),
        Claim("C-FHT", KIND_HARD,
              "domain/kernel of the u-translation homomorphism is isomorphic to its image",
              _eval_cfht, _recheck_c34),
        Claim("C-FUND", KIND_HARD,
              "the fundamentality predicate agrees with a brute-force scan over all partitions",
              _eval_cfund, _recheck_cfund),
        Claim("C-4.0", KIND_HARD,
              "the natural order restricted to E(S) is the usual idempotent order",
              _eval_c40, _recheck_c40),
        Claim("C-4.1-forward", KIND_HARD,
              "every idempotent below e lies in E(S^e)",
              _eval_c41f, _recheck_c41f),
        Claim("C-4.1-reverse", KIND_OBSERVED,
              "is every member of E(S^e) an idempotent of S below e?  counterexamples expected",
              _eval_c41r, _recheck_c41r),
        Claim("C-4.2", KIND_HARD,
              "<=_e is a partial order on E(S^e)",
              _eval_c42, _recheck_c42),
        Claim("C-4.3", KIND_HARD,
              "a <=_e b in the variant implies a <= b in the base",
              _eval_c43, _recheck_c43),
        Claim("C-4.4a", KIND_HARD,
              "anything <=_e-below an idempotent of S^e is idempotent in S^e",
              _eval_c44a, _recheck_c44a),
        Claim("C-4.4b", KIND_HARD,
              "anything <=_e-below a regular element of S^e is regular in S^e",
              _eval_c44b, _recheck_c44b),
        Claim("C-NAT-PO", KIND_OBSERVED,
              "is the natural order reflexive, antisymmetric, and transitive?  measured",
              _eval_cnatpo, _recheck_cnatpo),
    ]
}

HARD_CLAIM_IDS = frozenset(
    cid for cid, c in REGISTRY.items() if c.kind == KIND_HARD
)


def evaluate_claim(
    claim_id: str,
    s: FiniteSemigroup,
    params: dict | None = None,
    options: Options | None = None,
) -> list[ClaimResult]:
    """All results of one claim on one semigroup, optionally filtered to
    the instances matching params."""
    claim = REGISTRY.get(claim_id)
    if claim is None:
        raise UnknownClaim(claim_id)
    results = claim.evaluate(s, options or Options())
    if params:
        results = [
            r for r in results
            if all(r.params.get(k) == v for k, v in params.items())
        ]
    return results


def recheck_result(result: ClaimResult, options: Options | None = None) -> bool:
    """Reproduce a FAILS result from its serialized table, params, and
    witness alone.  True means the failure is confirmed."""
    claim = REGISTRY.get(result.claim_id)
    if claim is None:
        raise UnknownClaim(result.claim_id)
    if result.status != STATUS_FAILS or result.witness is None:
        return False
    s = parse_inline(result.table)
    return claim.recheck(s, result.params, result.witness, options or Options())
