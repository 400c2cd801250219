"""Executable registry of the structural results on ``Z_n(t, u)``.

Each theorem is a hypothesis (the pairs ``(t, u)`` it applies to at a given
modulus) and a conclusion (a list of laws). :func:`verify` instantiates the
hypothesis over a range of moduli and brute-forces the conclusion on every
instance. Up to ``VerifyConfig.exhaustive_cap`` the laws are checked on the
full Cayley table; above it, triple laws are checked on a seeded random
sample of triples and the cheaper laws are still checked exhaustively.

:func:`falsify_converse` probes whether a hypothesis is really needed. Two
kinds of probe exist:

``weaken``
    drop part of the hypothesis and report instances where the conclusion
    fails (e.g. composite moduli for the prime-modulus results);
``reverse``
    look outside the hypothesis and report instances where the conclusion
    holds anyway, i.e. counterexamples to the converse.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, NamedTuple

import numpy as np

from . import properties as P
from .classes import ClassVariant, ag_group_members, ag_members
from .core import MIN_ORDER, ModGroupoid


class TheoremId(str, enum.Enum):
    CONSTRUCT_AG = "construct_ag"
    TU_EQUAL_COMM_SEMIGROUP = "tu_equal_comm_semigroup"
    TU_EQUAL_T3 = "tu_equal_t3"
    PRIME_T3 = "prime_t3"
    TRANS_COMM = "trans_comm"
    PRIME_CANCELLATIVE = "prime_cancellative"
    SUM_ONE_AGBAND = "sum_one_agband"
    CONSTRUCT_AGGROUP = "construct_aggroup"
    T_ONE_ABELIAN = "t_one_abelian"
    NMINUS1_AGGROUP = "nminus1_aggroup"


@dataclass(frozen=True)
class VerifyConfig:
    exhaustive_cap: int = 128
    samples: int = 10**6
    seed: int = 0
    max_violations: int = 10
    max_n: int = 4096


class Violation(NamedTuple):
    n: int
    t: int
    u: int
    law: str
    witness: tuple[int, ...]


@dataclass(frozen=True)
class TheoremReport:
    id: TheoremId
    n_range: tuple[int, int]
    instances_checked: int
    violations: tuple[Violation, ...] = ()
    converse: bool = False
    sampled_instances: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def result(self) -> str:
        return "pass" if self.passed else "fail"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


# -- laws -------------------------------------------------------------------
#
# A law check returns None when the law holds on Z_n(t, u), else a witness.

def _table_law(checker):
    def run(G: ModGroupoid, T) -> tuple[int, ...] | None:
        r = checker(T)
        return None if r else r.witness
    return run


def _ag_group_mod(G: ModGroupoid, T) -> tuple[int, ...] | None:
    """AG-group with left identity 0 and inverse ``x -> -t x``."""
    r = P.is_ag_group(T)
    if not r:
        return r.witness
    if r.identity != 0:
        return (r.identity,)
    expected = tuple(int(v) for v in (-G.t * np.arange(G.n)) % G.n)
    for x, (got, want) in enumerate(zip(r.inverses, expected)):
        if got != want:
            return (x,)
    return None


def _abelian_group(G: ModGroupoid, T) -> tuple[int, ...] | None:
    for law in ("ag_group", "commutative", "associative"):
        w = _EXHAUSTIVE[law](G, T)
        if w is not None:
            return w
    return None


_EXHAUSTIVE: dict[str, Callable] = {
    "left_invertive": _table_law(P.is_left_invertive),
    "associative": _table_law(P.is_associative),
    "commutative": _table_law(P.is_commutative),
    "ag_band": _table_law(P.is_ag_band),
    "t3_left": _table_law(P.is_t3_left),
    "t3_right": _table_law(P.is_t3_right),
    "transitively_commutative": _table_law(P.is_transitively_commutative),
    "left_cancellative": _table_law(P.is_left_cancellative),
    "right_cancellative": _table_law(P.is_right_cancellative),
    "ag_group": _table_law(P.is_ag_group),
    "ag_group_mod": _ag_group_mod,
    "abelian_group": _abelian_group,
}


# Vectorised violation predicates on sampled triples, computed from the
# formula rather than a table.
_TRIPLE_VIOLATIONS = {
    "left_invertive": lambda op, a, b, c: op(op(a, b), c) != op(op(c, b), a),
    "associative": lambda op, a, b, c: op(op(a, b), c) != op(a, op(b, c)),
    "t3_left": lambda op, a, b, c: (op(a, b) == op(a, c)) & (op(b, a) != op(c, a)),
    "t3_right": lambda op, a, b, c: (op(b, a) == op(c, a)) & (op(a, b) != op(a, c)),
    "transitively_commutative": lambda op, a, b, c: (
        (op(a, b) == op(b, a)) & (op(b, c) == op(c, b)) & (op(a, c) != op(c, a))
    ),
    "left_cancellative": lambda op, a, x, y: (op(a, x) == op(a, y)) & (x != y),
    "right_cancellative": lambda op, a, x, y: (op(x, a) == op(y, a)) & (x != y),
}


def _sampled_triples(G: ModGroupoid, law: str, cfg: VerifyConfig) -> tuple[int, ...] | None:
    rng = np.random.default_rng([cfg.seed, G.n, G.t, G.u, sorted(_TRIPLE_VIOLATIONS).index(law)])
    chunk = 1 << 18
    left = cfg.samples
    while left > 0:
        k = min(chunk, left)
        left -= k
        a, b, c = rng.integers(0, G.n, size=(3, k))
        bad = _TRIPLE_VIOLATIONS[law](G.op, a, b, c)
        if bad.any():
            i = int(bad.argmax())
            return (int(a[i]), int(b[i]), int(c[i]))
    return None


def _sampled(G: ModGroupoid, law: str, cfg: VerifyConfig) -> tuple[int, ...] | None:
    n = G.n
    x = np.arange(n, dtype=np.int64)
    if law in _TRIPLE_VIOLATIONS:
        return _sampled_triples(G, law, cfg)
    if law == "ag_band":
        bad = np.flatnonzero(G.op(x, x) != x)
        return (int(bad[0]),) if bad.size else None
    if law == "commutative":
        for a in range(n):
            bad = np.flatnonzero(G.op(a, x) != G.op(x, a))
            if bad.size:
                return (a, int(bad[0]))
        return None
    if law in ("ag_group", "ag_group_mod"):
        w = _sampled_triples(G, "left_invertive", cfg)
        if w is not None:
            return w
        bad = np.flatnonzero(G.op(0, x) != x)
        if bad.size:
            return (int(bad[0]),)
        inv = (-G.t * x) % n
        bad = np.flatnonzero((G.op(inv, x) != 0) | (G.op(x, inv) != 0))
        return (int(bad[0]),) if bad.size else None
    if law == "abelian_group":
        for part in ("ag_group", "commutative", "associative"):
            w = _sampled(G, part, cfg)
            if w is not None:
                return w
        return None
    raise KeyError(law)


def _first_failure(G: ModGroupoid, laws: Iterable[str], cfg: VerifyConfig):
    exhaustive = G.n <= cfg.exhaustive_cap
    T = G.table() if exhaustive else None
    for law in laws:
        w = _EXHAUSTIVE[law](G, T) if exhaustive else _sampled(G, law, cfg)
        if w is not None:
            return law, w
    return None


# -- registry ---------------------------------------------------------------

@dataclass(frozen=True)
class Converse:
    kind: str  # "weaken" | "reverse"
    instances: Callable[[int], Iterable[tuple[int, int]]]
    description: str


@dataclass(frozen=True)
class Theorem:
    id: TheoremId
    statement: str
    hypothesis: Callable[[int], Iterable[tuple[int, int]]]
    laws: tuple[str, ...]
    converse: Converse | None = field(default=None)


def _ag(v: ClassVariant):
    return lambda n: ag_members(n, v).pairs


def _outside(hyp, pool):
    def inst(n):
        inside = set(hyp(n))
        return [p for p in pool(n) if p not in inside]
    return inst


_ZSTAR_AG = _ag(ClassVariant.ZSTAR)
_ZSS_AG = _ag(ClassVariant.ZSTARSTAR)
_ZSSS_AG = _ag(ClassVariant.ZSTARSTARSTAR)


def _tu_equal(pool):
    return lambda n: [(t, u) for t, u in pool(n) if t == u]


def _sum_one(n):
    return [(t, u) for t, u in _ZSSS_AG(n) if (t + u) % n == 1]


def _prime_only(pool):
    return lambda n: pool(n) if is_prime(n) else ()


def _composite_only(pool):
    return lambda n: () if is_prime(n) else pool(n)


_T3 = ("t3_left", "t3_right")

THEOREMS: dict[TheoremId, Theorem] = {
    th.id: th
    for th in (
        Theorem(TheoremId.CONSTRUCT_AG,
                "Z_n(t,u) with t^2 = u (mod n) is an AG-groupoid",
                _ZSSS_AG, ("left_invertive",)),
        Theorem(TheoremId.TU_EQUAL_COMM_SEMIGROUP,
                "a member of Z***_AG(n) with t = u is a commutative semigroup",
                _tu_equal(_ZSSS_AG), ("commutative", "associative"),
                Converse("reverse",
                         lambda n: [(t, u) for t, u in _ZSSS_AG(n) if t != u],
                         "members of Z***_AG(n) with t != u that are commutative semigroups")),
        Theorem(TheoremId.TU_EQUAL_T3,
                "a member of Z**_AG(n) with t = u is T3",
                _tu_equal(_ZSS_AG), _T3,
                Converse("weaken",
                         lambda n: [(t, u) for t, u in _ZSS_AG(n) if t != u],
                         "members of Z**_AG(n) with t != u that are not T3")),
        Theorem(TheoremId.PRIME_T3,
                "every member of Z*_AG(n) is T3 when n is prime",
                _prime_only(_ZSTAR_AG), _T3,
                Converse("weaken", _composite_only(_ZSTAR_AG),
                         "members of Z*_AG(n), n composite, that are not T3")),
        Theorem(TheoremId.TRANS_COMM,
                "every member of Z*_AG(n) is transitively commutative",
                _ZSTAR_AG, ("transitively_commutative",)),
        Theorem(TheoremId.PRIME_CANCELLATIVE,
                "every member of Z*_AG(n) is cancellative when n is prime",
                _prime_only(_ZSTAR_AG), ("left_cancellative", "right_cancellative"),
                Converse("weaken", _composite_only(_ZSTAR_AG),
                         "members of Z*_AG(n), n composite, that are not cancellative")),
        Theorem(TheoremId.SUM_ONE_AGBAND,
                "a member of Z***_AG(n) with t + u = 1 (mod n) is an AG-band",
                _sum_one, ("left_invertive", "ag_band"),
                Converse("reverse", _outside(_sum_one, _ZSSS_AG),
                         "members of Z***_AG(n) with t + u != 1 (mod n) that are AG-bands")),
        Theorem(TheoremId.CONSTRUCT_AGGROUP,
                "Z_n(t,1) with t^2 = 1 (mod n) is an AG-group, identity 0, inverse -t x",
                lambda n: ag_group_members(n).pairs, ("ag_group_mod",),
                # an AG-group is left invertive, so only AG members can qualify
                Converse("reverse", _outside(lambda n: ag_group_members(n).pairs, _ZSSS_AG),
                         "members of Z***_AG(n) other than (t,1), t^2 = 1, that are AG-groups")),
        Theorem(TheoremId.T_ONE_ABELIAN,
                "Z_n(1,1) is an abelian group",
                lambda n: ((1, 1),), ("abelian_group",),
                Converse("reverse", _outside(lambda n: ((1, 1),), _ZSSS_AG),
                         "members of Z***_AG(n) other than (1,1) that are abelian groups")),
        Theorem(TheoremId.NMINUS1_AGGROUP,
                "Z_n(n-1,1) is an AG-group",
                lambda n: ((n - 1, 1),), ("ag_group",)),
    )
}

# Laws that must *hold* for a reverse-converse instance to be reported.
_REVERSE_LAWS = {
    TheoremId.CONSTRUCT_AGGROUP: ("ag_group",),
}


def _check_range(n_range, cfg: VerifyConfig) -> tuple[int, int]:
    lo, hi = (int(v) for v in n_range)
    if lo > hi:
        raise ValueError(f"empty range [{lo}, {hi}]")
    if lo < MIN_ORDER or hi > cfg.max_n:
        raise ValueError(f"range [{lo}, {hi}] outside [{MIN_ORDER}, {cfg.max_n}]")
    return lo, hi


def _run_cell(cell) -> tuple[int, int, list[Violation]]:
    tid, n, converse, cfg = cell
    th = THEOREMS[tid]
    found: list[Violation] = []
    count = 0
    if converse:
        kind, pairs = th.converse.kind, th.converse.instances(n)
    else:
        kind, pairs = "verify", th.hypothesis(n)
    laws = _REVERSE_LAWS.get(tid, th.laws) if kind == "reverse" else th.laws
    for t, u in pairs:
        count += 1
        G = ModGroupoid(n, t, u)
        failure = _first_failure(G, laws, cfg)
        if len(found) >= cfg.max_violations:
            continue
        if kind == "reverse":
            if failure is None:
                found.append(Violation(n, t, u, "+".join(laws), ()))
        elif failure is not None:
            found.append(Violation(n, t, u, *failure))
    sampled = count if n > cfg.exhaustive_cap else 0
    return count, sampled, found


def _run(cells, workers: int):
    if workers and workers > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run_cell, cells, chunksize=1))
    return [_run_cell(c) for c in cells]


def _assemble(tid, lo, hi, results, converse, cfg) -> TheoremReport:
    count = sum(r[0] for r in results)
    sampled = sum(r[1] for r in results)
    found = [v for r in results for v in r[2]][: cfg.max_violations]
    return TheoremReport(TheoremId(tid), (lo, hi), count, tuple(found), converse, sampled)


def verify(tid, n_range, config: VerifyConfig | None = None, workers: int = 1) -> TheoremReport:
    """Check the theorem on every hypothesis instance with ``n`` in ``n_range``."""
    cfg = config or VerifyConfig()
    tid = TheoremId(tid)
    lo, hi = _check_range(n_range, cfg)
    cells = [(tid, n, False, cfg) for n in range(lo, hi + 1)]
    return _assemble(tid, lo, hi, _run(cells, workers), False, cfg)


def falsify_converse(tid, n_range, config: VerifyConfig | None = None, workers: int = 1) -> TheoremReport:
    """Run the theorem's converse probe; raises ``ValueError`` if it has none."""
    cfg = config or VerifyConfig()
    tid = TheoremId(tid)
    if THEOREMS[tid].converse is None:
        raise ValueError(f"{tid.value} has no converse probe")
    lo, hi = _check_range(n_range, cfg)
    cells = [(tid, n, True, cfg) for n in range(lo, hi + 1)]
    return _assemble(tid, lo, hi, _run(cells, workers), True, cfg)


def verify_all(n_range, config: VerifyConfig | None = None, workers: int = 1) -> list[TheoremReport]:
    """One report per theorem, in registry order."""
    cfg = config or VerifyConfig()
    lo, hi = _check_range(n_range, cfg)
    ns = range(lo, hi + 1)
    # largest moduli first so parallel workers finish together
    cells = [(tid, n, False, cfg) for n in reversed(ns) for tid in TheoremId]
    by_cell = dict(zip(((c[0], c[1]) for c in cells), _run(cells, workers)))
    return [
        _assemble(tid, lo, hi, [by_cell[tid, n] for n in ns], False, cfg)
        for tid in TheoremId
    ]


def has_converse(tid) -> bool:
    return THEOREMS[TheoremId(tid)].converse is not None
