import random
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from agmod import make_groupoid
from agmod import properties as P
from agmod.core import CayleyTable

import oracle


def table(n, t, u):
    return make_groupoid(n, t, u).table()


CHECKERS = {
    "left_invertive": P.is_left_invertive,
    "associative": P.is_associative,
    "commutative": P.is_commutative,
    "ag_band": P.is_ag_band,
    "t3_left": P.is_t3_left,
    "t3_right": P.is_t3_right,
    "transitively_commutative": P.is_transitively_commutative,
    "left_cancellative": P.is_left_cancellative,
    "right_cancellative": P.is_right_cancellative,
}


# -- worked examples --------------------------------------------------------

def test_left_invertive_examples():
    assert P.is_left_invertive(table(3, 2, 1))
    assert P.is_left_invertive(table(8, 6, 4))
    r = P.is_left_invertive(table(5, 2, 1))
    assert not r and r.witness == (0, 0, 1)


def test_associative_examples():
    assert P.is_associative(table(6, 4, 4))
    assert P.is_associative(table(3, 1, 1))
    r = P.is_associative(table(3, 2, 1))
    assert not r and r.witness == (1, 0, 0)


def test_commutative_examples():
    assert P.is_commutative(table(6, 4, 4))
    assert P.is_commutative(table(5, 3, 3))
    assert P.is_commutative(table(3, 2, 1)) == (False, (0, 1))


def test_ag_band_examples():
    assert P.is_ag_band(table(5, 2, 4))
    assert P.is_ag_band(table(4, 1, 0))
    assert P.is_ag_band(table(3, 2, 1)) == (False, (1,))


def test_t3_examples():
    assert P.is_t3_left(table(5, 3, 4)) and P.is_t3_right(table(5, 3, 4))
    assert P.is_t3_left(table(6, 4, 4)) and P.is_t3_right(table(6, 4, 4))
    assert P.is_t3_right(table(3, 1, 1))
    assert P.is_t3_left(table(8, 6, 4)) == (False, (0, 0, 2))


def test_z8_6_4_fails_t3_only_on_the_left():
    # 6b = 6c (mod 8) forces b = c (mod 4), hence 4b = 4c (mod 8)
    T = table(8, 6, 4)
    assert P.is_t3_right(T)
    assert oracle.t3_right(T.rows()) is None
    assert not P.classify(T).t3


def test_transitively_commutative_examples():
    assert P.is_transitively_commutative(table(7, 5, 4))
    assert P.is_transitively_commutative(table(5, 3, 4))
    assert P.is_transitively_commutative(table(6, 4, 4))


def test_cancellative_examples():
    assert P.is_left_cancellative(table(5, 3, 4)) and P.is_right_cancellative(table(5, 3, 4))
    assert P.is_left_cancellative(table(8, 6, 4)) == (False, (0, 0, 2))
    assert P.is_left_cancellative(table(6, 2, 4)) == (False, (0, 0, 3))


def test_find_left_identity():
    assert P.find_left_identity(table(3, 2, 1)) == 0
    assert P.find_left_identity(table(5, 4, 1)) == 0
    assert P.find_left_identity(table(8, 6, 4)) is None


def test_ag_group_examples():
    r = P.is_ag_group(table(3, 2, 1))
    assert r and r.identity == 0 and r.inverses == tuple((-2 * x) % 3 for x in range(3))
    r = P.is_ag_group(table(5, 4, 1))
    assert r and r.identity == 0 and r.inverses == (0, 1, 2, 3, 4)
    assert not P.is_ag_group(table(5, 2, 4))


def test_ag_group_failure_kinds():
    assert P.is_ag_group(table(5, 2, 1)).witness == (0, 0, 1)
    assert P.is_ag_group(table(5, 2, 4)).witness == ()
    # multiplication mod 4: a commutative monoid, 0 has no inverse
    T = CayleyTable.from_rows([[a * b % 4 for b in range(4)] for a in range(4)])
    assert P.is_left_invertive(T)
    r = P.is_ag_group(T)
    assert not r and r.identity == 1 and r.witness == (0,)
    assert P.replay(T, "ag_group", False, r.witness)


def test_classify_examples():
    p = P.classify(table(3, 2, 1))
    assert p.left_invertive and p.ag_group and not p.associative and not p.commutative
    assert p.witnesses["ag_group"] == (0, 1, 2) and p.witnesses["left_identity"] == (0,)
    p = P.classify(table(6, 4, 4))
    assert p.commutative and p.associative and p.t3
    p = P.classify(table(5, 2, 4))
    assert p.ag_band and not p.ag_group


def test_abelian_group():
    p = P.classify(table(7, 1, 1))
    assert p.abelian_group and p.left_identity == 0
    assert not P.classify(table(7, 6, 1)).abelian_group


# -- agreement with the nested-loop oracle ----------------------------------

SMALL = [(n, t, u) for n in range(3, 9) for t in range(n) for u in range(n)]


@pytest.mark.parametrize("n, t, u", SMALL)
def test_checkers_match_oracle_on_mod_tables(n, t, u):
    rows = oracle.mod_table(n, t, u)
    T = table(n, t, u)
    for name, check in CHECKERS.items():
        r = check(T)
        assert r.witness == oracle.LAWS[name](rows), name
    assert P.find_left_identity(T) == oracle.left_identity(rows)
    g = oracle.ag_group(rows)
    r = P.is_ag_group(T)
    assert r.holds == (g is not None)
    if g:
        assert (r.identity, list(r.inverses)) == g


def random_tables(max_n=6):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n), min_size=n, max_size=n)
    )


@settings(max_examples=300, deadline=None)
@given(random_tables())
def test_checkers_match_oracle_on_arbitrary_tables(rows):
    T = CayleyTable.from_rows(rows)
    for name, check in CHECKERS.items():
        assert check(T).witness == oracle.LAWS[name](rows), name
    assert P.find_left_identity(T) == oracle.left_identity(rows)
    g = oracle.ag_group(rows)
    assert P.is_ag_group(T).holds == (g is not None)


def test_block_scan_crosses_chunks(monkeypatch):
    # force one first-coordinate per block so the least witness spans blocks
    monkeypatch.setattr(P, "_BLOCK_CELLS", 1)
    for n, t, u in [(9, 2, 4), (8, 6, 4), (12, 5, 1)]:
        rows = oracle.mod_table(n, t, u)
        for name, check in CHECKERS.items():
            assert check(table(n, t, u)).witness == oracle.LAWS[name](rows)


# -- invariants -------------------------------------------------------------

params = st.integers(3, 30).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n - 1), st.integers(0, n - 1)))


@settings(max_examples=200, deadline=None)
@given(params)
def test_congruence_equivalences(p):
    n, t, u = p
    T = table(n, t, u)
    assert bool(P.is_left_invertive(T)) == (t * t % n == u)
    assert bool(P.is_commutative(T)) == (t == u)
    assert bool(P.is_ag_band(T)) == ((t + u) % n == 1)
    assert bool(P.is_associative(T)) == (t * t % n == t and u * u % n == u)
    assert bool(P.is_left_cancellative(T)) == (gcd(u, n) == 1)
    assert bool(P.is_right_cancellative(T)) == (gcd(t, n) == 1)


@settings(max_examples=200, deadline=None)
@given(params)
def test_classify_aggregates_and_witnesses(p):
    T = table(*p)
    prof = P.classify(T)
    assert prof.t3 == (prof.t3_left and prof.t3_right)
    assert prof.cancellative == (prof.left_cancellative and prof.right_cancellative)
    assert prof.abelian_group == (prof.ag_group and prof.commutative and prof.associative)
    if prof.ag_group:
        assert prof.left_invertive and prof.left_identity is not None
    for name, value in prof.flags().items():
        if not value:
            assert name in prof.witnesses
            assert P.replay(T, name, False, prof.witnesses[name]), name
    if prof.left_identity is not None:
        assert P.replay(T, "left_identity", True, prof.witnesses["left_identity"])
    if prof.ag_group:
        assert P.replay(T, "ag_group", True, prof.witnesses["ag_group"])


def test_left_and_right_cancellative_agree_on_ag_groupoids():
    for n in range(3, 41):
        for t in range(n):
            u = t * t % n
            if (t, u) == (0, 0):
                continue
            T = table(n, t, u)
            assert bool(P.is_left_cancellative(T)) == bool(P.is_right_cancellative(T)), (n, t, u)


def test_replay_rejects_bogus_witnesses():
    T = table(5, 3, 4)
    assert not P.replay(T, "commutative", False, (0, 0))
    assert not P.replay(T, "left_invertive", False, (0, 1, 2))
    assert not P.replay(T, "left_identity", True, (1,))
    assert not P.replay(T, "associative", False, (9, 9, 9))
    assert not P.replay(T, "commutative", True, (0, 1))


def test_checkers_are_deterministic():
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randint(3, 20)
        T = table(n, rng.randrange(n), rng.randrange(n))
        assert P.classify(T) == P.classify(T)
