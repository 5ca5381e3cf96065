import itertools

import pytest

import mbfix


def monotone_count(n):
    points = range(1 << n)
    count = 0
    for bits in itertools.product((0, 1), repeat=1 << n):
        if all(bits[x] <= bits[y] for x in points for y in points if x & y == x):
            count += 1
    return count


def test_dedekind_matches_brute_force():
    for n in range(4):
        assert mbfix.dedekind(n) == monotone_count(n)
    assert mbfix.dedekind(6) == 7828354
    assert isinstance(mbfix.known_dedekind(8), int)


def test_generate_order():
    assert mbfix.generate_dn(2) == ["0000", "0001", "0101", "0011", "0111", "1111"]
    assert all(mbfix.is_monotone(f) for f in mbfix.generate_dn(3))


def test_fix_count():
    r = mbfix.fix_count("(12)(34)", 4)
    assert r["count"] == 28
    assert r["mu"] == 3
    assert r["cycle_type"] == [2, 2]
    assert mbfix.fix_count("(12)(34)(56)", 6)["count"] == 8600
    assert len(mbfix.gen_fix("(12)", 3)) == 10


def test_class_count():
    ledger = mbfix.class_count(5)
    assert ledger["r_n"] == 210
    assert sum(row["mu"] for row in ledger["rows"]) == 120
    assert ledger["total"] == sum(row["mu"] * row["count"] for row in ledger["rows"])


def test_big_values_are_ints():
    assert mbfix.fix_count("(12)(34)(56)(78)", 8)["count"] == 2038188253420


def test_refusals():
    with pytest.raises(mbfix.RefusalError):
        mbfix.class_count(8)
    with pytest.raises(ValueError):
        mbfix.fix_count("(12", 4)


def test_verify_tables():
    report = mbfix.verify_tables(3, 5)
    assert report["ok"]
