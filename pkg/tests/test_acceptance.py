"""Acceptance suite: one test per criterion; the conftest hook prints one
pass/fail line per criterion at the end of the run."""

import random
import time

from revbch import tables, verify
from revbch.bch import build_code, membership, random_codeword, reverse_word
from revbch.distance import SubspaceQuadruple, exact_min_distance
from revbch.ffield import build_field
from revbch.qpoly import Poly, lcm

EXHAUSTIVE_ROWS = {(15, 6), (15, 2), (31, 20), (31, 10), (63, 20), (63, 14), (63, 2)}
WITNESS_ROWS = {(63, 50), (63, 38), (63, 26)}


def test_criterion_1_table2_reproduction():
    t0 = time.time()
    out = tables.generate_table2()
    assert len(out["rows"]) == 10
    for row in out["rows"]:
        key = (row["n"], row["k"])
        assert row["k_matches_published"], key
        assert row["d_lower"] >= 2 * row["delta"], key
        if key in EXHAUSTIVE_ROWS:
            assert row["method"] == "exhaustive-search", key
            assert row["d_exact"] and row["d_matches_published"], key
        else:
            assert key in WITNESS_ROWS, key
            # witness-based certification; a row stays flagged unless the
            # upper witness meets the designed floor
            assert row["d_exact"] or row["flag"] is not None, key
            if row["d_exact"]:
                assert row["d"] == 2 * row["delta"], key
    assert time.time() - t0 < 300, "table must regenerate in under 5 minutes"


def test_criterion_2_ternary_bit_exact():
    t0 = time.time()
    code = build_code(3, 3, 4, "overline", modulus=[1, 2, 0, 1])  # x^3 - x + 1
    assert code.generator.text() == (
        "x^13 + x^12 + 2x^11 + 2x^10 + x^8 + 2x^5 + x^3 + x^2 + 2x + 2")
    assert code.k == 13
    cert = exact_min_distance(code)
    assert cert.kind == "exact" and cert.d_upper == 8
    assert time.time() - t0 < 120, "ternary example must finish in under 2 minutes"


def test_criterion_3_subspace_quadruple():
    F = build_field(2, 5, [1, 0, 1, 0, 0, 1])  # x^5 + x^2 + 1

    def H(*logs):
        return frozenset([0] + [F.exp(i) for i in logs])

    quad = SubspaceQuadruple(
        h1=H(1, 2, 19), h2=H(8, 12, 18), h3=H(12, 13, 30), h4=H(19, 23, 29))
    # all three invariants: trivial intersections and the inverse-set identity
    assert quad.h1 & quad.h2 == {0}
    assert quad.h3 & quad.h4 == {0}
    assert {F.inv(x) for x in (quad.h1 | quad.h2) - {0}} == (quad.h3 | quad.h4) - {0}
    assert quad.check(F)

    code = build_code(2, 5, 3, "overline", field=F)
    coeffs = [0] * code.n
    for x in (quad.h1 | quad.h2) - {0}:
        coeffs[F.log(x)] = 1
    witness = Poly(F, coeffs)
    assert witness.weight() == 6
    assert membership(witness, code)
    cert = exact_min_distance(code)
    assert cert.d_upper == 6


def test_criterion_4_dimension_sweep():
    ok, rows = verify.dimension_suite()  # q in {2,3}, m in 2..8
    mismatches = [r for r in rows if not r["match"]]
    assert ok and not mismatches, mismatches[:5]
    assert len(rows) > 400


def test_criterion_5_coset_sweep():
    ok, rows = verify.cosets_suite()  # q in {2,3,4,5}, m in 2..8
    mismatches = [r for r in rows if r.get("match") is False]
    assert ok and not mismatches, mismatches[:5]


def test_criterion_6_run_count_oracle():
    ok, rows = verify.runs_suite()  # 1 <= r <= s <= 12, q in {2,3,4}
    assert ok
    assert len(rows) == 3 * sum(range(1, 13))
    assert all(r["match"] for r in rows)


def test_criterion_7_degree_and_bounds():
    ok, rows = verify.degree_suite()  # q in {2,3}, m <= 6
    assert ok and all(r["match"] for r in rows)
    ok, rows = verify.bounds_suite()
    assert ok and all(r["match"] for r in rows)


def test_criterion_8_sphere_packing_table():
    out = tables.generate_table1()
    assert all(r["certified"] for r in out["rows"])
    assert out["notes"], "the duplicated row in the published list must be flagged"
    assert out["negative_control"]["certified"] is False


def test_criterion_9_structural_invariants():
    rng = random.Random(20260823)
    cases = [(2, 4, 3), (2, 4, 5), (2, 5, 3), (2, 5, 5), (2, 6, 3),
             (3, 2, 2), (3, 2, 3), (3, 3, 4), (3, 3, 9), (5, 2, 4)]
    for q, m, delta in cases:
        plus = build_code(q, m, delta, "plus")
        minus = build_code(q, m, delta, "minus")
        tilde = build_code(q, m, delta, "tilde")
        over = build_code(q, m, delta, "overline")
        F = over.field
        # generators of both reversible variants are self-reciprocal
        assert tilde.generator.is_self_reciprocal(), (q, m, delta)
        assert over.generator.is_self_reciprocal(), (q, m, delta)
        # overline = (x - 1) * tilde and the lcm identity
        assert over.generator == Poly(F, [F.neg(1), 1]) * tilde.generator
        assert tilde.generator == lcm(plus.generator, minus.generator)
        assert plus.generator.degree == minus.generator.degree
        # every overline codeword vanishes at x = 1; reversal closure
        for _ in range(200):
            cw = random_codeword(over, rng)
            assert cw(1) == 0
            assert membership(reverse_word(cw, over.n), over)
