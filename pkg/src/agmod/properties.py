"""Brute-force property checkers over Cayley tables.

Every checker scans the table exhaustively and stops at the first failure.
Triples are visited in lexicographic order, so the reported counterexample
is always the least violating tuple. Checks over triples work on blocks of
the first coordinate to keep memory at ``O(block * n**2)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, NamedTuple

import numpy as np

from .core import CayleyTable

_BLOCK_CELLS = 1 << 21


class Check(NamedTuple):
    """Verdict of a single checker; truthy iff the property holds."""

    holds: bool
    witness: tuple[int, ...] | None = None

    def __bool__(self):
        return self.holds


class AGGroupCheck(NamedTuple):
    holds: bool
    identity: int | None = None
    inverses: tuple[int, ...] | None = None
    # on failure: (a, b, c) for left invertivity, () for no left identity,
    # (x,) for an element without a two-sided inverse
    witness: tuple[int, ...] | None = None

    def __bool__(self):
        return self.holds


def _scan_triples(T: CayleyTable, block_mask: Callable[[np.ndarray, int, int], np.ndarray]) -> Check:
    E = T.entries
    n = T.n
    step = max(1, _BLOCK_CELLS // (n * n))
    for lo in range(0, n, step):
        hi = min(n, lo + step)
        mask = block_mask(E, lo, hi)
        flat = mask.ravel()
        k = int(flat.argmax())
        if flat[k]:
            i, j, l = np.unravel_index(k, mask.shape)
            return Check(False, (lo + int(i), int(j), int(l)))
    return Check(True)


def _first_pair(mask: np.ndarray) -> tuple[int, ...] | None:
    flat = mask.ravel()
    k = int(flat.argmax())
    if not flat[k]:
        return None
    return tuple(int(v) for v in np.unravel_index(k, mask.shape))


def _left_invertive_block(E, lo, hi):
    A = np.arange(lo, hi)[:, None, None]
    ab_c = E[E[lo:hi]]                     # [a, b, c] -> (a b) c
    cb_a = E[E.T[None, :, :], A]           # [a, b, c] -> (c b) a
    return ab_c != cb_a


def _associative_block(E, lo, hi):
    A = np.arange(lo, hi)[:, None, None]
    return E[E[lo:hi]] != E[A, E[None, :, :]]


def _equal_pairs(rows):
    # [a, x, y] -> rows[a, x] == rows[a, y]
    return rows[:, :, None] == rows[:, None, :]


def _t3_left_block(E, lo, hi):
    return _equal_pairs(E[lo:hi]) & ~_equal_pairs(E.T[lo:hi])


def _t3_right_block(E, lo, hi):
    return _equal_pairs(E.T[lo:hi]) & ~_equal_pairs(E[lo:hi])


def _left_cancellative_block(E, lo, hi):
    n = E.shape[0]
    return _equal_pairs(E[lo:hi]) & ~np.eye(n, dtype=bool)[None, :, :]


def _right_cancellative_block(E, lo, hi):
    n = E.shape[0]
    return _equal_pairs(E.T[lo:hi]) & ~np.eye(n, dtype=bool)[None, :, :]


def is_left_invertive(T: CayleyTable) -> Check:
    """``(a b) c == (c b) a`` for all triples; witness ``(a, b, c)``."""
    return _scan_triples(T, _left_invertive_block)


def is_associative(T: CayleyTable) -> Check:
    return _scan_triples(T, _associative_block)


def is_commutative(T: CayleyTable) -> Check:
    E = T.entries
    w = _first_pair(E != E.T)
    return Check(w is None, w)


def is_ag_band(T: CayleyTable) -> Check:
    """Idempotence only (``a a == a``); witness ``(a,)``.

    Whether the table is left invertive is reported separately.
    """
    E = T.entries
    w = _first_pair(np.diagonal(E) != np.arange(T.n))
    return Check(w is None, w)


def is_t3_left(T: CayleyTable) -> Check:
    """``a b == a c`` implies ``b a == c a``; witness ``(a, b, c)``."""
    return _scan_triples(T, _t3_left_block)


def is_t3_right(T: CayleyTable) -> Check:
    """``b a == c a`` implies ``a b == a c``; witness ``(a, b, c)``."""
    return _scan_triples(T, _t3_right_block)


def is_transitively_commutative(T: CayleyTable) -> Check:
    E = T.entries
    C = E == E.T

    def block(_, lo, hi):
        return C[lo:hi, :, None] & C[None, :, :] & ~C[lo:hi, None, :]

    return _scan_triples(T, block)


def is_left_cancellative(T: CayleyTable) -> Check:
    """``a x == a y`` implies ``x == y``; witness ``(a, x, y)``."""
    return _scan_triples(T, _left_cancellative_block)


def is_right_cancellative(T: CayleyTable) -> Check:
    """``x a == y a`` implies ``x == y``; witness ``(a, x, y)``."""
    return _scan_triples(T, _right_cancellative_block)


def _left_identities(T: CayleyTable) -> np.ndarray:
    E = T.entries
    return np.flatnonzero((E == np.arange(T.n)[None, :]).all(axis=1))


def find_left_identity(T: CayleyTable) -> int | None:
    """Least ``e`` with ``e x == x`` for every ``x``, or ``None``."""
    ids = _left_identities(T)
    return int(ids[0]) if ids.size else None


def _inverses(T: CayleyTable, e: int) -> tuple[tuple[int, ...] | None, int | None]:
    E = T.entries
    both = (E == e) & (E.T == e)           # [x, y]: x y == e and y x == e
    has = both.any(axis=1)
    if not has.all():
        return None, int(np.flatnonzero(~has)[0])
    return tuple(int(y) for y in both.argmax(axis=1)), None


def is_ag_group(T: CayleyTable) -> AGGroupCheck:
    """Left invertive, with a left identity ``e`` and two-sided inverses.

    On success returns ``e`` and the inverse map (least inverse per element).
    """
    li = is_left_invertive(T)
    if not li:
        return AGGroupCheck(False, witness=li.witness)
    ids = _left_identities(T)
    if not ids.size:
        return AGGroupCheck(False, witness=())
    missing = None
    for e in ids:
        inv, bad = _inverses(T, int(e))
        if inv is not None:
            return AGGroupCheck(True, int(e), inv)
        if missing is None:
            missing = bad
    return AGGroupCheck(False, int(ids[0]), witness=(missing,))


PROPERTY_NAMES = (
    "abelian_group",
    "ag_band",
    "ag_group",
    "associative",
    "cancellative",
    "commutative",
    "left_cancellative",
    "left_invertive",
    "right_cancellative",
    "t3",
    "t3_left",
    "t3_right",
    "transitively_commutative",
)


@dataclass(frozen=True)
class PropertyProfile:
    """All property verdicts of one table.

    ``witnesses`` holds a counterexample for every false property and a
    witness for every existential one that holds: ``left_identity -> (e,)``
    and ``ag_group -> inverse map``.
    """

    left_invertive: bool
    associative: bool
    commutative: bool
    ag_band: bool
    t3_left: bool
    t3_right: bool
    transitively_commutative: bool
    left_cancellative: bool
    right_cancellative: bool
    left_identity: int | None
    ag_group: bool
    witnesses: dict[str, tuple[int, ...]] = field(default_factory=dict)

    @property
    def t3(self) -> bool:
        return self.t3_left and self.t3_right

    @property
    def cancellative(self) -> bool:
        return self.left_cancellative and self.right_cancellative

    @property
    def abelian_group(self) -> bool:
        return self.ag_group and self.commutative and self.associative

    @property
    def counterexamples(self) -> dict[str, tuple[int, ...]]:
        return {k: w for k, w in self.witnesses.items() if not getattr(self, k)}

    def flags(self) -> dict[str, bool]:
        return {name: bool(getattr(self, name)) for name in PROPERTY_NAMES}


def classify(T: CayleyTable) -> PropertyProfile:
    """Run every checker once and collect verdicts and witnesses."""
    checks = {
        "left_invertive": is_left_invertive(T),
        "associative": is_associative(T),
        "commutative": is_commutative(T),
        "ag_band": is_ag_band(T),
        "t3_left": is_t3_left(T),
        "t3_right": is_t3_right(T),
        "transitively_commutative": is_transitively_commutative(T),
        "left_cancellative": is_left_cancellative(T),
        "right_cancellative": is_right_cancellative(T),
    }
    witnesses = {k: c.witness for k, c in checks.items() if not c}
    e = find_left_identity(T)
    if e is not None:
        witnesses["left_identity"] = (e,)
    group = is_ag_group(T)
    witnesses["ag_group"] = group.inverses if group else group.witness
    for agg, parts in (("t3", ("t3_left", "t3_right")),
                       ("cancellative", ("left_cancellative", "right_cancellative")),
                       ("abelian_group", ("ag_group", "commutative", "associative"))):
        for p in parts:
            if p in witnesses and not (checks[p] if p in checks else group):
                witnesses[agg] = witnesses[p]
                break
    return PropertyProfile(
        **{k: c.holds for k, c in checks.items()},
        left_identity=e,
        ag_group=group.holds,
        witnesses=witnesses,
    )


# -- witness replay ---------------------------------------------------------

def _op(T):
    return lambda a, b: int(T.entries[a, b])


def _violates(law: str, T: CayleyTable, w: tuple[int, ...]) -> bool:
    m = _op(T)
    n = T.n
    if any(not 0 <= x < n for x in w):
        return False
    if law == "left_invertive":
        a, b, c = w
        return m(m(a, b), c) != m(m(c, b), a)
    if law == "associative":
        a, b, c = w
        return m(m(a, b), c) != m(a, m(b, c))
    if law == "commutative":
        a, b = w
        return m(a, b) != m(b, a)
    if law == "ag_band":
        (a,) = w
        return m(a, a) != a
    if law == "t3_left":
        a, b, c = w
        return m(a, b) == m(a, c) and m(b, a) != m(c, a)
    if law == "t3_right":
        a, b, c = w
        return m(b, a) == m(c, a) and m(a, b) != m(a, c)
    if law == "transitively_commutative":
        a, b, c = w
        return m(a, b) == m(b, a) and m(b, c) == m(c, b) and m(a, c) != m(c, a)
    if law == "left_cancellative":
        a, x, y = w
        return m(a, x) == m(a, y) and x != y
    if law == "right_cancellative":
        a, x, y = w
        return m(x, a) == m(y, a) and x != y
    raise KeyError(law)


def replay(T: CayleyTable, name: str, holds: bool, witness: tuple[int, ...]) -> bool:
    """Check a recorded witness against ``T`` using scalar lookups only.

    For a false verdict, ``True`` means the witness really violates the
    property. For ``left_identity`` and a true ``ag_group`` it means the
    witness satisfies the defining condition.
    """
    witness = tuple(witness)
    n = T.n
    m = _op(T)
    if name == "left_identity":
        (e,) = witness
        return 0 <= e < n and all(m(e, x) == x for x in range(n))
    if name == "ag_group":
        if holds:
            ids = [e for e in range(n) if all(m(e, x) == x for x in range(n))]
            return len(witness) == n and any(
                all(m(y, x) == e and m(x, y) == e for x, y in enumerate(witness)) for e in ids
            )
        if len(witness) == 3:
            return _violates("left_invertive", T, witness)
        ids = [e for e in range(n) if all(m(e, x) == x for x in range(n))]
        if len(witness) == 0:
            return not ids
        (x,) = witness
        return bool(ids) and not any(
            m(y, x) == e and m(x, y) == e for e in ids for y in range(n)
        )
    if holds:
        return False
    if name == "t3":
        return _violates("t3_left", T, witness) or _violates("t3_right", T, witness)
    if name == "cancellative":
        return (_violates("left_cancellative", T, witness)
                or _violates("right_cancellative", T, witness))
    if name == "abelian_group":
        if len(witness) == 2:
            return _violates("commutative", T, witness)
        return (len(witness) == 3 and _violates("associative", T, witness)) or replay(
            T, "ag_group", False, witness
        )
    return _violates(name, T, witness)
