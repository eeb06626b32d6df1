import pytest

from revbch.cosets import (
    BudgetExceeded,
    classify_negation_pair,
    coset_leader,
    cyclotomic_coset,
    expand,
    leader_pair_count,
    leader_pair_count_closed,
    leader_pairs,
    negation_in_coset,
    negation_pairs,
    pair_range_bound,
    pattern_catalog,
    run_count_l,
    run_count_oracle,
    run_scan,
)


def test_expand():
    seq = expand(5, 2, 4)
    assert seq.digits == (0, 1, 0, 1)
    assert seq.value == 5
    assert seq.weight == 2
    assert seq.q_weight == 2
    assert sorted(seq.support) == [0, 2]
    assert expand(25, 3, 3).digits == (2, 2, 1)
    with pytest.raises(ValueError):
        expand(16, 2, 4)
    with pytest.raises(ValueError):
        expand(-1, 2, 4)


def test_run_scan_straight_vs_circular():
    assert run_scan((0, 1, 0, 0), 0, "straight") == 2
    assert run_scan((0, 1, 0, 0), 0, "circular") == 3
    assert run_scan((1, 1, 1), 1, "circular") == 3
    assert run_scan((2, 2, 0, 2), 2, "circular") == 3
    assert run_scan((0, 1, 2), 3) == 0
    with pytest.raises(ValueError):
        run_scan((0, 1), 0, "spiral")


def test_cyclotomic_cosets():
    c = cyclotomic_coset(1, 2, 4)
    assert c.members == (1, 2, 4, 8)
    assert c.leader == 1
    assert 8 in c and 16 in c  # mod n = 15
    assert len(cyclotomic_coset(5, 2, 4)) == 2
    assert coset_leader(8, 2, 4) == 1
    assert coset_leader(14, 2, 4) == 7
    assert coset_leader(0, 2, 4) == 0
    with pytest.raises(ValueError):
        cyclotomic_coset(15, 2, 4)


def test_negation_in_coset_examples():
    assert negation_in_coset(4, 4, 3, 2)       # -4 = 4 mod 8, C_4 = {4}
    assert negation_in_coset(3, 3, 2, 4)       # -3 = 12 in C_3 = {3,6,12,9}
    assert not negation_in_coset(1, 1, 2, 5)
    with pytest.raises(ValueError):
        negation_in_coset(0, 1, 2, 4)


def test_pair_range_bound():
    assert pair_range_bound(2, 5) == 8
    assert pair_range_bound(2, 6) == 16
    assert pair_range_bound(3, 3) == 9
    assert pair_range_bound(3, 4) == 18


def test_leader_pair_counts_match_enumeration():
    for (q, m, l, want) in [
        (2, 5, 3, 0), (2, 5, 7, 2), (2, 6, 7, 1), (2, 6, 14, 3), (2, 6, 16, 5),
        (3, 2, 2, 1), (3, 2, 4, 2), (3, 2, 6, 4),
        (3, 3, 7, 2), (3, 3, 8, 4), (3, 3, 9, 4),
    ]:
        lc = leader_pair_count(l, q, m)
        assert lc.enumerated == want, (q, m, l)
        assert lc.closed == want, (q, m, l)
        assert lc.match is True


def test_leader_pair_count_closed_validity_holes():
    # outside the stated index range
    assert leader_pair_count_closed(9, 2, 5) is None
    assert leader_pair_count_closed(0, 3, 3) is None
    # q = 2 even m: plateaus 3 and 5 need m >= 6, everything needs m >= 4
    assert leader_pair_count_closed(1, 2, 2) is None
    assert leader_pair_count_closed(7, 2, 4) is None
    assert leader_pair_count_closed(3, 2, 4) == 1


def test_negation_pairs_and_leader_pairs_consistency():
    for q, m in [(2, 5), (2, 6), (3, 2), (3, 3), (4, 2), (5, 2)]:
        bound = min(pair_range_bound(q, m), q ** m - 2)
        pairs = negation_pairs(bound, q, m)
        for i, j in pairs:
            assert negation_in_coset(i, j, q, m)
        lp = leader_pairs(bound, q, m)
        assert lp == {(coset_leader(i, q, m), coset_leader(j, q, m))
                      for i, j in pairs}


def test_pattern_catalog_and_classification():
    for q, m in [(2, 4), (2, 5), (2, 6), (3, 2), (3, 3), (4, 2), (5, 3)]:
        assert pattern_catalog(q, m)
        bound = min(pair_range_bound(q, m), q ** m - 2)
        for i, j in negation_pairs(bound, q, m):
            form = classify_negation_pair(i, j, q, m)
            assert form is not None, (q, m, i, j)
    with pytest.raises(ValueError):
        classify_negation_pair(1, 1, 2, 5)  # not a negation pair


def test_run_count_recursion_values():
    assert run_count_l(2, 2, 2) == 1  # fixed-symbol reading: only 00
    assert run_count_l(2, 3, 2) == 3
    assert run_count_l(2, 4, 2) == 8
    assert run_count_l(1, 1, 3) == 1
    assert run_count_l(3, 2, 2) == 0
    with pytest.raises(ValueError):
        run_count_l(0, 3, 2)


def test_run_count_oracle_matches_recursion():
    for q in (2, 3):
        for s in range(1, 7):
            for r in range(1, s + 1):
                assert run_count_oracle(r, s, q) == run_count_l(r, s, q)
    assert run_count_oracle(2, 3, 3) == 5


def test_run_count_oracle_budget():
    with pytest.raises(BudgetExceeded):
        run_count_oracle(2, 21, 2, budget=1 << 20)
    # explicit budget unlocks larger spaces
    assert run_count_oracle(2, 21, 2, budget=1 << 22) == run_count_l(2, 21, 2)
