"""Exhaustive searches, the gap function g, and the certificate replays."""

import math

import pytest

import quadsg as q


@pytest.fixture(scope="module")
def table():
    t = q.MuTable(2 * 700)
    return t


def test_drop_search_small(table):
    assert q.search_mu_drop(28, table=table).hits == ()
    report = q.search_mu_drop(29, table=table)
    assert report.pairs() == ((29, 26),)
    hit = report.hits[0]
    assert hit.mu_n == 13
    assert hit.mu_shifted == 11
    assert hit.drop == 2
    assert report.search_id == "mu-drop"
    assert report.a_max == 29
    assert report.elapsed >= 0.0


def test_drop_search_full(table):
    report = q.search_mu_drop(485, table=table)
    assert report.pairs() == tuple(sorted(q.EXPECTED_DROP_PAIRS))
    assert all(hit.drop == 2 for hit in report.hits)


def test_drop_witness_invariant(table):
    # Each hit really does shift down by b = 1 steps of a: the least lift
    # coefficient at n is mu(n) - 2 + 2 = mu(n + a) + 2... checked directly.
    for a, n in q.EXPECTED_DROP_PAIRS:
        s = q.make_semigroup(a, 1)
        assert q.mu_ab_oracle(s, n) == q.mu(n, table) - 1


def test_eq_search_small(table):
    report = q.search_embedding_eq(13, table=table)
    assert report.pairs() == ((10, 6), (13, 7))
    assert q.search_embedding_eq(9, table=table).hits == ()
    assert report.search_id == "embedding-eq"


def test_eq_search_full(table):
    report = q.search_embedding_eq(655, table=table)
    assert report.pairs() == tuple(sorted(q.EXPECTED_RESIDUE_PAIRS))
    for hit in report.hits:
        assert hit.binom == hit.n * (hit.n - 1) // 2
        assert hit.residue == hit.binom % hit.a
        assert hit.mu_residue == hit.n + 1
        assert hit.excluded_by == ""


def test_raw_matches_strict(table):
    raw = q.search_embedding_eq(655, raw=True, table=table)
    strict = q.search_embedding_eq(655, table=table)
    assert raw.pairs() == strict.pairs()
    assert all(hit.excluded_by == "" for hit in raw.hits)


def test_threads_deterministic(table):
    base_drop = q.search_mu_drop(300, table=table)
    base_eq = q.search_embedding_eq(300, table=table)
    for threads in (2, 3, 4):
        assert q.search_mu_drop(300, threads=threads, table=table).hits == base_drop.hits
        assert (
            q.search_embedding_eq(300, threads=threads, table=table).hits
            == base_eq.hits
        )


def test_search_domains():
    with pytest.raises(ValueError):
        q.search_mu_drop(3)
    with pytest.raises(ValueError):
        q.search_embedding_eq(1)
    with pytest.raises(ValueError):
        q.search_mu_drop(5001)
    with pytest.raises(ValueError):
        q.search_embedding_eq(5001)


def test_g_values():
    assert q.g_of(2) == 2.0
    with pytest.raises(ValueError):
        q.g_of(1.5)
    # The function passes within 0.01 of these targets near the quoted spots.
    assert abs(q.g_of(485.92) - 2.0) <= 0.01
    assert abs(q.g_of(655.24) - 1.0) <= 0.01
    assert abs(q.g_of(52.15) - 4.59) <= 0.02


def test_g_solve(table):
    root = q.g_solve(2.0, (100, 600))
    assert abs(root - 485.935675) < 1e-4
    assert abs(q.g_of(root) - 2.0) < 1e-9
    root1 = q.g_solve(1.0, (100, 1000))
    assert abs(root1 - 655.268619) < 1e-4
    assert abs(q.g_of(root1) - 1.0) < 1e-9
    # Round trip through an arbitrary interior point.
    target = q.g_of(300.0)
    assert abs(q.g_solve(target, (299, 301)) - 300.0) < 1e-4
    with pytest.raises(ValueError):
        q.g_solve(2.0, (600, 100))
    with pytest.raises(ValueError):
        q.g_solve(10.0, (100, 600))


def test_g_local_max():
    x1, v1 = q.g_local_max((10, 200))
    x2, v2 = q.g_local_max((40, 60))
    assert abs(x1 - x2) < 1e-4
    assert abs(x1 - 52.1463) < 1e-3
    assert abs(v1 - 4.59358) < 1e-3
    assert v1 >= q.g_of(x1 - 0.01)
    assert v1 >= q.g_of(x1 + 0.01)
    assert abs(v1 - v2) < 1e-9


def test_g_shape():
    # Increasing up to the peak, decreasing after it, on a half-step grid.
    xs = [2 + 0.5 * k for k in range(int((52.0 - 2) / 0.5) + 1)]
    vals = [q.g_of(x) for x in xs]
    assert all(u < v for u, v in zip(vals, vals[1:]))
    xs = [53 + 0.5 * k for k in range(int((1000 - 53) / 0.5) + 1)]
    vals = [q.g_of(x) for x in xs]
    assert all(u > v for u, v in zip(vals, vals[1:]))


def test_g_analysis():
    report = q.g_analysis()
    assert abs(q.g_of(report.root_at_2) - 2.0) <= 1e-9
    assert abs(q.g_of(report.root_at_1) - 1.0) <= 1e-9
    assert 485 < report.root_at_2 < 486
    assert 655 < report.root_at_1 < 656
    assert abs(report.local_max_value - q.g_of(report.local_max_location)) < 1e-9


def test_exception_certificates(table):
    certs = q.exception_certificates(table=table)
    assert len(certs) == 8
    assert all(c.ok for c in certs)
    assert {c.kind for c in certs} == {"mu-drop"}
    assert sorted((c.a, c.n) for c in certs) == sorted(q.EXPECTED_DROP_PAIRS)


def test_decomposition_certificates():
    certs = q.decomposition_certificates()
    assert len(certs) == 48
    assert all(c.ok for c in certs), [c for c in certs if not c.ok]
    kinds = {}
    for c in certs:
        kinds[c.kind] = kinds.get(c.kind, 0) + 1
    assert kinds == {
        "residue-table": 30,
        "extra-minimal": 8,
        "extra-table": 10,
    }


def test_tables_consistent():
    assert sorted(q.EXPECTED_DROP_PAIRS) == sorted(
        (c.a, c.n) for c in q.EXCEPTIONAL_CASES
    )
    minimal_rows = [(a, n) for a, n, coeffs in q.EXTRA_INDEX_ROWS if coeffs is None]
    assert sorted(minimal_rows) == sorted(
        (c.a, c.witness_index) for c in q.EXCEPTIONAL_CASES
    )
    # Every decomposition row actually sums to its target generator.
    for a, n, coeffs in q.EXTRA_INDEX_ROWS:
        if coeffs is None:
            continue
        s = q.make_semigroup(a, 1)
        total = sum(mult * q.generator(s, i) for i, mult in coeffs.items())
        assert total == q.generator(s, n), (a, n)
    # The residue-search table and the exceptional list never overlap.
    assert not set(q.EXPECTED_RESIDUE_PAIRS) & set(q.EXPECTED_DROP_PAIRS)
    assert sorted(q.EMBED_DECOMPOSITIONS) == sorted(q.EXPECTED_RESIDUE_PAIRS)
