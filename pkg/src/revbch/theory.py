"""Closed-form dimension results, degree formulas, dimension bounds, and the
sphere-packing trigger for the reversible codes.

Every closed form here has a constructive cross-check in the verification
sweeps; where a branch of a formula is known to fail (small even m with
q = 2, and the one degenerate q = 3, m = 2 cell where the half-size coset is
its own negation) the function refuses with FormulaNotApplicable rather
than extrapolate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cosets import coset_leader, cyclotomic_coset, run_count_l


class FormulaNotApplicable(ValueError):
    pass


@dataclass(frozen=True)
class DimensionReport:
    q: int
    m: int
    delta: int
    delta_q: int
    delta_0: int
    epsilon: int | None
    case_label: str
    k_closed: int
    k_constructed: int | None = None


@dataclass(frozen=True)
class DimensionBoundsReport:
    q: int
    m: int
    lam: int
    r: int
    lower: int
    upper: int
    n_size: int | None = None
    n_prime_size: int | None = None


def dimension_closed_form(q: int, m: int, delta: int) -> DimensionReport:
    """Dimension of the even-like reversible code, by the piecewise closed
    formula; raises FormulaNotApplicable outside every branch."""
    n = q ** m - 1
    if m < 2:
        raise FormulaNotApplicable("closed formula requires m >= 2")
    if not (2 <= delta and 2 * delta <= n + 2):
        raise FormulaNotApplicable(f"delta={delta} outside [2, (n+2)/2] for n={n}")
    dq, d0 = divmod(delta - 1, q)
    qm = q ** m

    if m % 2 == 1:
        b = q ** ((m + 1) // 2)
        if delta <= b - q:
            k = qm - 2 - 2 * m * (dq * (q - 1) + d0)
            label = "odd-generic"
        elif delta <= b + 1:
            k = qm - 2 - 2 * m * (q ** ((m - 1) // 2) - 1) * (q - 1)
            label = "odd-boundary"
        else:
            raise FormulaNotApplicable(f"delta={delta} beyond the odd-m range")
        return DimensionReport(q, m, delta, dq, d0, None, label, k)

    s = q ** (m // 2)
    epsilon = 0 if delta <= s + 1 else 1
    if q > 2:
        if delta > 2 * s + 1:
            raise FormulaNotApplicable(f"delta={delta} beyond the even-m range")
        if (delta >= s + 2
                and coset_leader(n - (s + 1), q, m) == coset_leader(s + 1, q, m)):
            # the half-size coset is its own negation (only at q=3, m=2);
            # the formula double-counts its correction there
            raise FormulaNotApplicable("degenerate self-negating half coset")
        A = dq * (q - 1) + d0
        if delta <= s - 1:
            c, label = 0, "even-generic"
        elif delta <= s + 1:
            c, label = 1, "even-half"
        elif delta <= 2 * s - 2:
            c, label = 2, "even-one-pair"
        elif delta == 2 * s - 1:
            c, label = 3, "even-two-pair"
        else:
            c, label = 5, "even-four-pair"
        k = qm - 2 - m * (2 * A - c)
        return DimensionReport(q, m, delta, dq, d0, epsilon, label, k)

    # q == 2, even m
    A = dq + d0
    if m >= 4 and delta <= s - 1:
        c, label = 0, "bin-generic"
    elif m >= 4 and delta <= s + 1:
        c, label = 1, "bin-half"
    elif m >= 4 and delta <= 2 * s - 3:
        c, label = 2, "bin-one-pair"
    elif m >= 6 and 2 * s - 2 <= delta <= 2 * s - 1:
        c, label = 4, "bin-three-pair"
    elif m >= 6 and 2 * s <= delta <= 2 * s + 1:
        c, label = 6, "bin-five-pair"
    else:
        raise FormulaNotApplicable(
            f"delta={delta} outside the stated binary even-m branches (m={m})")
    k = qm - 2 - m * (2 * A - c)
    return DimensionReport(q, m, delta, dq, d0, epsilon, label, k)


def closed_form_deltas(q: int, m: int):
    """All delta for which the closed formula has an applicable branch."""
    n = q ** m - 1
    out = []
    for delta in range(2, (n + 2) // 2 + 1):
        try:
            dimension_closed_form(q, m, delta)
        except FormulaNotApplicable:
            continue
        out.append(delta)
    return out


def _tail_sum(q: int, m: int, r: int) -> int:
    return sum((r - u - 1) * (q ** (m - r - u - 2) - run_count_l(r, m - r - u - 2, q))
               for u in range(r - 1))


def _check_lambda(q, m, lam):
    if not (m <= 2 * lam <= 2 * (m - 1)):
        raise ValueError(f"lambda={lam} outside [m/2, m-1] for m={m}")


def degree_formula(q: int, m: int, lam: int) -> int:
    """Degree of the one-sided generator for designed distance q^lambda."""
    _check_lambda(q, m, lam)
    r = m - lam
    return run_count_l(r, m, q) - 1 + (q - 1) ** 2 * _tail_sum(q, m, r)


def dimension_bounds(q: int, m: int, lam: int,
                     enumerate_limit: int = 6561) -> DimensionBoundsReport:
    """Dimension bounds for designed distance q^lambda.

    When n is within enumerate_limit, also enumerates the shared zero set N
    and reports |N| alongside |N'| = l_r(m-r) so the sandwich
    2|N'| <= |N| <= m|N'| can be audited.
    """
    _check_lambda(q, m, lam)
    r = m - lam
    base = q ** m - 2 * run_count_l(r, m, q) - 2 * (q - 1) ** 2 * _tail_sum(q, m, r)
    n_prime = run_count_l(r, m - r, q)
    lower = base + 2 * n_prime
    upper = base + m * n_prime
    n = q ** m - 1
    n_size = None
    if n <= enumerate_limit:
        delta = q ** lam
        plus: set[int] = set()
        minus: set[int] = set()
        for i in range(1, delta):
            plus.update(cyclotomic_coset(i, q, m).members)
            minus.update(cyclotomic_coset(n - i, q, m).members)
        n_size = len(plus & minus)
    return DimensionBoundsReport(q, m, lam, r, lower, upper, n_size, n_prime)


def sphere_packing_trigger(q: int, m: int, delta: int, k: int) -> bool:
    """True iff the ball-volume sum up to radius delta exceeds q^(n-k),
    which caps the minimum distance at 2*delta."""
    n = q ** m - 1
    if k > n:
        raise ValueError("dimension exceeds length")
    vol = sum(math.comb(n, i) * (q - 1) ** i for i in range(delta + 1))
    return vol > q ** (n - k)


def bch_lower_bound(delta: int) -> int:
    """Designed floor on the minimum distance of the even-like code."""
    return 2 * delta
