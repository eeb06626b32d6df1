"""Verification sweeps cross-checking every closed-form result against
construction or enumeration. Each suite returns (ok, rows) where rows are
JSON-serializable case records; the CLI writes them as JSON lines.
"""

from __future__ import annotations

import numpy as np

from . import cosets, tables, theory
from .bch import build_code, split_prime_power, zero_exponents
from .ffield import build_field
from .qpoly import Poly, minimal_polynomial

COSET_QS = (2, 3, 4, 5)
COSET_MS = range(2, 9)
DIMENSION_QS = (2, 3)
DIMENSION_MS = range(2, 9)
RUNS_QS = (2, 3, 4)
RUNS_MAX_S = 12
DEGREE_QS = (2, 3)
DEGREE_MS = range(2, 7)


def overline_generator_sweep(q: int, m: int, deltas):
    """Yield (delta, gbar) for ascending deltas, building the generator
    incrementally: each step multiplies in only the newly covered cosets."""
    deltas = sorted(deltas)
    if not deltas:
        return
    p, e = split_prime_power(q)
    field = build_field(p, e * m)
    n = q ** m - 1
    prime_q = q == p

    included: set[int] = set()
    if prime_q:
        acc = np.array([1], dtype=np.int64)
    else:
        acc = Poly.one(field)

    def include(i):
        nonlocal acc
        leader = cosets.coset_leader(i, q, m)
        if leader in included:
            return
        included.add(leader)
        f = minimal_polynomial(leader, field, q)
        if prime_q:
            acc = np.convolve(acc, np.array(f.to_int_coeffs(), dtype=np.int64)) % q
        else:
            acc = acc * f

    include(0)
    current = 2
    for delta in deltas:
        while current <= delta:
            include((current - 1) % n)
            include((n - (current - 1)) % n)
            current += 1
        gbar = Poly(field, (int(c) for c in acc)) if prime_q else acc
        yield delta, gbar


def dimension_suite(qs=DIMENSION_QS, ms=DIMENSION_MS):
    """Closed-form dimension vs n - deg(gbar) from explicit construction."""
    rows = []
    ok = True
    for q in qs:
        for m in ms:
            n = q ** m - 1
            deltas = theory.closed_form_deltas(q, m)
            for delta, gbar in overline_generator_sweep(q, m, deltas):
                report = theory.dimension_closed_form(q, m, delta)
                k_built = n - gbar.degree
                match = report.k_closed == k_built
                ok &= match
                rows.append({"q": q, "m": m, "delta": delta,
                             "case": report.case_label,
                             "k_closed": report.k_closed,
                             "k_constructed": k_built, "match": match})
    return ok, rows


def cosets_suite(qs=COSET_QS, ms=COSET_MS):
    """Leader-pair counts (closed vs enumerated) and pattern classification
    of every negation pair inside the stated index ranges."""
    rows = []
    ok = True
    for q in qs:
        for m in ms:
            n = q ** m - 1
            bound = min(cosets.pair_range_bound(q, m), n - 1)
            for l in range(1, bound + 1):
                lc = cosets.leader_pair_count(l, q, m)
                if lc.match is False:
                    ok = False
                rows.append({"q": q, "m": m, "l": l, "closed": lc.closed,
                             "enumerated": lc.enumerated, "match": lc.match})
            for i, j in cosets.negation_pairs(bound, q, m):
                form = cosets.classify_negation_pair(i, j, q, m)
                if form is None:
                    ok = False
                    rows.append({"q": q, "m": m, "pair": [i, j],
                                 "family": None, "match": False})
    return ok, rows


def runs_suite(qs=RUNS_QS, max_s=RUNS_MAX_S, budget=1 << 24):
    """Run-count recursion vs literal enumeration."""
    rows = []
    ok = True
    for q in qs:
        for s in range(1, max_s + 1):
            for r in range(1, s + 1):
                closed = cosets.run_count_l(r, s, q)
                enum = cosets.run_count_oracle(r, s, q, budget=budget)
                match = closed == enum
                ok &= match
                rows.append({"q": q, "s": s, "r": r, "closed": closed,
                             "enumerated": enum, "match": match})
    return ok, rows


def degree_suite(qs=DEGREE_QS, ms=DEGREE_MS):
    """Run-count degree formula vs the constructed one-sided generator."""
    rows = []
    ok = True
    for q in qs:
        for m in ms:
            for lam in range((m + 1) // 2, m):
                delta = q ** lam
                formula = theory.degree_formula(q, m, lam)
                built_plus = len(zero_exponents(q, m, delta, "plus"))
                built_minus = len(zero_exponents(q, m, delta, "minus"))
                match = formula == built_plus == built_minus
                ok &= match
                rows.append({"q": q, "m": m, "lambda": lam, "delta": delta,
                             "formula": formula, "constructed": built_plus,
                             "match": match})
    return ok, rows


def bounds_suite(qs=DEGREE_QS, ms=DEGREE_MS):
    """Dimension bounds bracket the constructed dimension, and the shared
    zero set obeys 2|N'| <= |N| <= m|N'|."""
    rows = []
    ok = True
    for q in qs:
        for m in ms:
            n = q ** m - 1
            for lam in range((m + 1) // 2, m):
                delta = q ** lam
                if 2 * delta > n + 2:
                    continue
                rep = theory.dimension_bounds(q, m, lam)
                k_built = n - len(zero_exponents(q, m, delta, "overline"))
                bracketed = rep.lower <= k_built <= rep.upper
                sandwich = (rep.n_size is None or
                            2 * rep.n_prime_size <= rep.n_size <= m * rep.n_prime_size)
                match = bracketed and sandwich
                ok &= match
                rows.append({"q": q, "m": m, "lambda": lam, "delta": delta,
                             "lower": rep.lower, "upper": rep.upper,
                             "k_constructed": k_built, "n_size": rep.n_size,
                             "n_prime_size": rep.n_prime_size, "match": match})
    return ok, rows


def distance_suite(budget=None):
    """Published parameter table reproduced row by row."""
    from .distance import DEFAULT_SEARCH_BUDGET
    gen = tables.generate_table2(budget or DEFAULT_SEARCH_BUDGET)
    rows = []
    ok = True
    for row in gen["rows"]:
        good = row["k_matches_published"] and (
            row["d_matches_published"] or row["flag"] is not None)
        ok &= good
        rows.append({**row, "match": good})
    return ok, rows


def circular_run_suite(qs=DIMENSION_QS, max_n=728):
    """Cross-module check: alpha^i is a root of the one-sided generators
    exactly when the expansion of i carries the matching circular run."""
    rows = []
    ok = True
    for q in qs:
        for m in range(2, 9):
            n = q ** m - 1
            if n > max_n:
                continue
            for lam in range((m + 1) // 2, m):
                delta = q ** lam
                r = m - lam
                plus = zero_exponents(q, m, delta, "plus")
                minus = zero_exponents(q, m, delta, "minus")
                good = True
                for i in range(1, n):
                    seq = cosets.expand(i, q, m)
                    in_plus = cosets.run_scan(seq, 0, "circular") >= r
                    in_minus = cosets.run_scan(seq, q - 1, "circular") >= r
                    if (i in plus) != in_plus or (i in minus) != in_minus:
                        good = False
                ok &= good
                rows.append({"q": q, "m": m, "lambda": lam, "match": good})
    return ok, rows


SUITES = {
    "cosets": cosets_suite,
    "dimension": dimension_suite,
    "runs": runs_suite,
    "degree": degree_suite,
    "bounds": bounds_suite,
    "distance": distance_suite,
}
