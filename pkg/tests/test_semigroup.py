"""Semigroup construction, membership, the lifted monoid, and least lifts."""

import json
import math

import numpy as np
import pytest

import quadsg as q
from helpers import least_lift_scan, lift_members, semigroup_members


def test_make_semigroup_validation():
    with pytest.raises(q.NotANumericalSemigroup):
        q.make_semigroup(4, 2)
    with pytest.raises(q.NotANumericalSemigroup):
        q.make_semigroup(6, 9)
    with pytest.raises(q.NotANumericalSemigroup):
        q.make_semigroup(5, 0)
    with pytest.raises(ValueError):
        q.make_semigroup(0, 0)
    with pytest.raises(ValueError):
        q.make_semigroup(-2, 1)
    with pytest.raises(ValueError):
        q.make_semigroup(2, -1)
    # The coprimality error is a ValueError, so one handler catches both.
    assert issubclass(q.NotANumericalSemigroup, ValueError)


def test_trivial_flag():
    assert q.make_semigroup(1, 1).trivial
    assert q.make_semigroup(1, 0).trivial
    assert q.make_semigroup(0, 1).trivial
    assert q.make_semigroup(1, 7).trivial
    assert not q.make_semigroup(2, 1).trivial
    assert not q.make_semigroup(29, 1).trivial


def test_generator_values():
    s = q.make_semigroup(2, 1)
    assert [q.generator(s, n) for n in range(7)] == [0, 2, 5, 9, 14, 20, 27]
    s29 = q.make_semigroup(29, 1)
    assert q.generator(s29, 11) == 374
    with pytest.raises(ValueError):
        q.generator(s, -1)


def test_describe_is_json_ready():
    info = q.describe(q.make_semigroup(2, 1))
    assert info == {
        "a": 2,
        "b": 1,
        "trivial": False,
        "generators": [0, 2, 5, 9, 14, 20, 27, 35],
    }
    json.dumps(info)
    with pytest.raises(ValueError):
        q.describe(q.make_semigroup(2, 1), count=0)


@pytest.mark.parametrize("a,b", [(2, 1), (3, 1), (3, 2), (5, 2), (29, 1), (2, 5)])
def test_membership_matches_naive_closure(a, b):
    s = q.make_semigroup(a, b)
    bound = 400
    table = q.membership_table(s, bound)
    naive = semigroup_members(a, b, bound)
    got = {x for x in range(bound + 1) if table.reachable[x]}
    assert got == naive


def test_membership_no_members_below_a():
    for a, b in [(5, 2), (29, 1), (7, 3)]:
        s = q.make_semigroup(a, b)
        table = q.membership_table(s)
        assert not table.reachable[1:a].any()
        assert table.reachable[0]
        assert table.reachable[a]


def test_membership_bound_zero():
    table = q.membership_table(q.make_semigroup(2, 1), 0)
    assert table.bound == 0
    assert table.reachable.tolist() == [True]


def test_membership_table_errors():
    s = q.make_semigroup(2, 1)
    with pytest.raises(ValueError):
        q.membership_table(s, -1)
    with pytest.raises(ValueError):
        q.membership_table(s, 1 << 29)


def test_membership_table_contains_method():
    s = q.make_semigroup(3, 2)
    table = q.membership_table(s, 50)
    assert table.contains(0)
    assert not table.contains(1)
    assert table.contains(3)
    with pytest.raises(ValueError):
        table.contains(51)
    with pytest.raises(ValueError):
        table.contains(-1)


def test_membership_default_bound_formula():
    for a, b in [(2, 1), (29, 1), (50, 1), (10, 3)]:
        s = q.make_semigroup(a, b)
        _, high = q.frobenius_bounds(a, b)
        assert q.membership_bound(s) == math.ceil(high) + a + 1


def test_contains():
    s = q.make_semigroup(2, 1)
    assert not q.contains(s, -3)
    members = {0, 2, 4, 5, 6, 7, 8, 9}
    for x in range(10):
        assert q.contains(s, x) == (x in members)
    assert q.contains(s, 10**5)
    trivial = q.make_semigroup(1, 1)
    assert q.contains(trivial, 1)
    assert not q.contains(trivial, -1)


def test_shared_membership_growth_is_prefix_stable():
    s = q.make_semigroup(7, 2)
    small = q.shared_membership(s)
    big = q.shared_membership(s, small.bound * 3)
    assert big.bound >= small.bound * 3
    assert np.array_equal(big.reachable[: small.bound + 1], small.reachable)


def test_lift_contains_examples():
    assert q.lift_contains(0, 0)
    assert q.lift_contains(2, 1)
    assert not q.lift_contains(1, 1)
    with pytest.raises(ValueError):
        q.lift_contains(-1, 0)
    with pytest.raises(ValueError):
        q.lift_contains(0, -1)


def test_lift_vs_bfs_grid():
    m_max = n_max = 40
    reach = lift_members(m_max, n_max)
    table = q.MuTable(n_max)
    for m in range(m_max + 1):
        for n in range(n_max + 1):
            assert q.lift_contains(m, n, table) == reach[m][n], (m, n)


def test_lift_row_threshold_is_mu():
    table = q.MuTable(60)
    for n in range(61):
        first = next(m for m in range(200) if q.lift_contains(m, n, table))
        assert first == table[n]


def test_project_and_surjectivity():
    for a, b in [(3, 2), (5, 3)]:
        s = q.make_semigroup(a, b)
        table = q.MuTable(60)
        image = {
            q.project(m, n, s)
            for m in range(60)
            for n in range(60)
            if q.lift_contains(m, n, table)
        }
        for x in image:
            assert q.contains(s, x)
        member_set = semigroup_members(a, b, 60)
        assert member_set <= image
    assert q.project(2, 1, q.make_semigroup(2, 1)) == 5


def test_mu_ab_oracle_examples_and_domain():
    s = q.make_semigroup(5, 2)
    assert q.mu_ab_oracle(s, 1) == 2
    with pytest.raises(ValueError):
        q.mu_ab_oracle(s, 5)
    with pytest.raises(ValueError):
        q.mu_ab_oracle(s, -1)
    with pytest.raises(ValueError):
        q.mu_ab_oracle(q.make_semigroup(1, 1), 0)


def test_mu_ab_closed_domain():
    s = q.make_semigroup(5, 2)
    with pytest.raises(ValueError):
        q.mu_ab_closed(s, 5)
    with pytest.raises(ValueError):
        q.mu_ab_closed(s, -1)
    with pytest.raises(ValueError):
        q.mu_ab_closed(q.make_semigroup(1, 2), 0)


def test_mu_ab_closed_vs_oracle_small_grid():
    for a in range(2, 41):
        for b in range(1, 4):
            if math.gcd(a, b) != 1:
                continue
            s = q.make_semigroup(a, b)
            for n in range(a):
                assert q.mu_ab_closed(s, n) == q.mu_ab_oracle(s, n), (a, b, n)


def test_exceptional_triples():
    assert len(q.EXCEPTIONAL_CASES) == 8
    assert q.EXCEPTIONAL_PAIRS == {
        (29, 1), (45, 1), (47, 1), (50, 1), (55, 1), (67, 1), (73, 1), (79, 1)
    }
    for case in q.EXCEPTIONAL_CASES:
        s = q.make_semigroup(case.a, 1)
        assert q.mu(case.n) == case.mu_n
        assert q.mu_ab_closed(s, case.n) == case.mu_n - 1
        assert q.mu_ab_oracle(s, case.n) == case.mu_n - 1
        witness = (case.mu_n - 1) * case.a + case.n
        assert witness == q.generator(s, case.witness_index)
        assert q.contains(s, witness)
        assert not q.contains(s, witness - case.a)


def test_exceptional_drop_requires_b_one():
    # The same residues behave normally at other coprime b.
    for case in q.EXCEPTIONAL_CASES:
        b = 2 if case.a % 2 else 3
        s = q.make_semigroup(case.a, b)
        assert q.mu_ab_closed(s, case.n) == case.mu_n


def test_mu_ab_closed_equals_mu_off_the_list():
    s = q.make_semigroup(29, 1)
    drops = {c.n for c in q.EXCEPTIONAL_CASES if c.a == 29}
    for n in range(29):
        expected = q.mu(n) - (1 if n in drops else 0)
        assert q.mu_ab_closed(s, n) == expected


def test_mu_ab_shift_examples():
    s = q.make_semigroup(5, 2)
    assert q.mu_ab_shift(s, 1) == 2
    assert q.mu_ab_shift(s, 6) == 0
    assert q.mu_ab_shift(s, 1, 1) == 0
    s29 = q.make_semigroup(29, 1)
    assert q.mu_ab_shift(s29, 55) == 11
    with pytest.raises(ValueError):
        q.mu_ab_shift(q.make_semigroup(1, 1), 3)


def test_mu_ab_shift_identity_and_scan():
    for a, b in [(5, 2), (7, 3), (29, 1)]:
        s = q.make_semigroup(a, b)
        for n in range(-10, 3 * a):
            assert q.mu_ab_shift(s, n + a) == q.mu_ab_shift(s, n) - b
            direct = least_lift_scan(lambda x: q.contains(s, x), a, b, n)
            assert q.mu_ab_shift(s, n) == direct, (a, b, n)
