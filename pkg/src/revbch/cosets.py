"""Integer-side combinatorics for q-cyclotomic cosets modulo q^m - 1.

Covers q-ary expansions, straight/circular run scanning, coset leaders, the
negation-membership predicate, counting of distinct leader pairs (with the
closed piecewise formula where it applies), the catalogued digit-pattern
families behind those counts, and the run-count recursion l_r(s) with its
exhaustive enumeration oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

DEFAULT_ENUM_BUDGET = 1 << 20


class BudgetExceeded(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# Expansions and runs

@dataclass(frozen=True)
class ExpansionSequence:
    """q-ary digits of an integer, most significant first."""

    q: int
    m: int
    digits: tuple[int, ...]

    @property
    def value(self) -> int:
        v = 0
        for d in self.digits:
            v = v * self.q + d
        return v

    @property
    def weight(self) -> int:
        return sum(1 for d in self.digits if d)

    @property
    def q_weight(self) -> int:
        return sum(self.digits)

    @property
    def support(self) -> frozenset[int]:
        m = self.m
        return frozenset(m - 1 - i for i, d in enumerate(self.digits) if d)


def expand(s: int, q: int, m: int) -> ExpansionSequence:
    if not 0 <= s <= q ** m - 1:
        raise ValueError(f"{s} has no length-{m} expansion base {q}")
    digits = []
    for _ in range(m):
        digits.append(s % q)
        s //= q
    return ExpansionSequence(q, m, tuple(reversed(digits)))


def run_scan(seq, symbol: int, mode: str = "straight") -> int:
    """Longest run of `symbol`; `mode` is "straight" or "circular"."""
    digits = seq.digits if isinstance(seq, ExpansionSequence) else tuple(seq)
    if mode not in ("straight", "circular"):
        raise ValueError(f"unknown run mode {mode!r}")
    if not digits:
        return 0
    if all(d == symbol for d in digits):
        return len(digits)
    if mode == "circular":
        # rotate a non-symbol entry to the front so the circle splits cleanly
        pivot = next(i for i, d in enumerate(digits) if d != symbol)
        digits = digits[pivot:] + digits[:pivot]
    best = cur = 0
    for d in digits:
        cur = cur + 1 if d == symbol else 0
        best = max(best, cur)
    return best


# ---------------------------------------------------------------------------
# Cyclotomic cosets

@dataclass(frozen=True)
class CyclotomicCoset:
    n: int
    members: tuple[int, ...]

    @property
    def leader(self) -> int:
        return self.members[0]

    def __contains__(self, x: int) -> bool:
        return x % self.n in self.members

    def __len__(self) -> int:
        return len(self.members)


def cyclotomic_coset(i: int, q: int, m: int) -> CyclotomicCoset:
    n = q ** m - 1
    if not 0 <= i <= n - 1:
        raise ValueError(f"index {i} out of range [0, {n})")
    members = set()
    j = i
    while j not in members:
        members.add(j)
        j = j * q % n
    return CyclotomicCoset(n, tuple(sorted(members)))


def coset_leader(i: int, q: int, m: int) -> int:
    n = q ** m - 1
    i %= n
    best = i
    j = i * q % n
    while j != i:
        if j < best:
            best = j
        j = j * q % n
    return best


def negation_in_coset(i: int, j: int, q: int, m: int) -> bool:
    """True iff -j mod n lies in the coset of i."""
    n = q ** m - 1
    if i % n == 0 or j % n == 0:
        raise ValueError("indices must be nonzero modulo n")
    return coset_leader(n - j % n, q, m) == coset_leader(i, q, m)


# ---------------------------------------------------------------------------
# Leader pairs and the closed counting formula

def pair_range_bound(q: int, m: int) -> int:
    """Index range within which the pattern catalogue and counts are stated."""
    if m % 2 == 1:
        return q ** ((m + 1) // 2)
    return 2 * q ** (m // 2)


def negation_pairs(l: int, q: int, m: int) -> list[tuple[int, int]]:
    """All (i, j) with 1 <= i, j <= l and -j in C_i."""
    n = q ** m - 1
    top = min(l, n - 1)
    by_leader: dict[int, list[int]] = {}
    for i in range(1, top + 1):
        by_leader.setdefault(coset_leader(i, q, m), []).append(i)
    out = []
    for j in range(1, top + 1):
        lam = coset_leader(n - j, q, m)
        for i in by_leader.get(lam, ()):
            out.append((i, j))
    return out


def leader_pairs(l: int, q: int, m: int) -> set[tuple[int, int]]:
    """Distinct (cl(i), cl(j)) over all (i, j) with -j in C_i, i, j <= l."""
    n = q ** m - 1
    top = min(l, n - 1)
    in_range = {coset_leader(i, q, m) for i in range(1, top + 1)}
    pairs = set()
    for j in range(1, top + 1):
        lam = coset_leader(n - j, q, m)
        if lam in in_range:
            pairs.add((lam, coset_leader(j, q, m)))
    return pairs


def leader_pair_count_closed(l: int, q: int, m: int) -> int | None:
    """Closed piecewise count of distinct leader pairs; None where the
    formula does not apply.

    For q = 2 and even m the two largest count plateaus (3 and 5) only hold
    for m >= 6, and the whole formula fails at m = 2; enumeration shows the
    stated plateau values are wrong there, consistent with the m >= 4 /
    m >= 6 provisos attached to the matching dimension branches.
    """
    if m % 2 == 1:
        bound = q ** ((m + 1) // 2)
        if not 1 <= l <= bound:
            return None
        if l <= bound - q:
            return 0
        if l >= bound - 1:
            return 2 * (q - 1)
        return 2 * (l - (bound - q))
    if q > 2:
        s = q ** (m // 2)
        if not 1 <= l <= 2 * s:
            return None
        if l <= s - 2:
            return 0
        if l <= 2 * s - 3:
            return 1
        if l == 2 * s - 2:
            return 2
        return 4
    s = 2 ** (m // 2)
    if not 1 <= l <= 2 * s:
        return None
    if m >= 4:
        if l <= s - 2:
            return 0
        if l <= 2 * s - 4:
            return 1
    if m >= 6:
        if l <= 2 * s - 2:
            return 3
        return 5
    return None


@dataclass(frozen=True)
class LeaderPairCount:
    l: int
    q: int
    m: int
    enumerated: int
    closed: int | None

    @property
    def match(self) -> bool | None:
        return None if self.closed is None else self.closed == self.enumerated


def leader_pair_count(l: int, q: int, m: int) -> LeaderPairCount:
    return LeaderPairCount(l, q, m,
                           enumerated=len(leader_pairs(l, q, m)),
                           closed=leader_pair_count_closed(l, q, m))


# ---------------------------------------------------------------------------
# Pattern families behind the negation pairs

@dataclass(frozen=True)
class PatternForm:
    """One catalogued digit-pattern family, instantiated at (q, m, u).

    i_rep / j_rep carry the representative pair; a concrete pair (i, j)
    belongs to the family when its cosets match those of the representative.
    """

    family: str
    u: int | None
    i_rep: int
    j_rep: int


def pattern_catalog(q: int, m: int) -> list[PatternForm]:
    n = q ** m - 1
    forms: list[PatternForm] = []

    def add(family, u, i_rep, j_rep):
        if 1 <= i_rep <= n - 1 and 1 <= j_rep <= n - 1:
            forms.append(PatternForm(family, u, i_rep, j_rep))

    if m % 2 == 1:
        h = (m - 1) // 2
        for u in range(q):
            i_rep = q ** (h + 1) - q + u          # (0..0, q-1 x h, u)
            j_rep = (q - u) * q ** h - 1          # (0..0, q-1-u, q-1 x h)
            add("odd-tail-run", u, i_rep, j_rep)
            add("odd-head-run", u, j_rep, i_rep)
    elif q > 2:
        s = q ** (m // 2)
        add("even-matched-long", None, 2 * s - 2, 2 * s - 2)
        add("even-short-long", None, s - 2, 2 * s - 1)
        add("even-long-short", None, 2 * s - 1, s - 2)
        add("even-matched-half", None, s - 1, s - 1)
    else:
        s = 2 ** (m // 2)
        add("bin-short-long", None, s // 2 - 1, 2 * s - 1)
        add("bin-long-short", None, 2 * s - 1, s // 2 - 1)
        add("bin-matched-half", None, s - 1, s - 1)
        add("bin-gap-left", None, s + s // 2 - 1, 2 * s - 3)
        add("bin-gap-right", None, 2 * s - 3, s + s // 2 - 1)
    return forms


def classify_negation_pair(i: int, j: int, q: int, m: int) -> PatternForm | None:
    """Match a negation pair to its pattern family (by coset pair), or None.

    A None for an in-range pair would falsify the catalogue; the sweep in
    the verification suite treats it as a failure and reports the pair.
    """
    if not negation_in_coset(i, j, q, m):
        raise ValueError(f"-{j} is not in the coset of {i}")
    li, lj = coset_leader(i, q, m), coset_leader(j, q, m)
    for form in pattern_catalog(q, m):
        if (coset_leader(form.i_rep, q, m) == li
                and coset_leader(form.j_rep, q, m) == lj):
            return form
    return None


# ---------------------------------------------------------------------------
# Run counting: recursion and enumeration oracle

@lru_cache(maxsize=None)
def run_count_l(r: int, s: int, q: int) -> int:
    """Number of length-s q-ary sequences containing a straight run of at
    least r copies of the fixed symbol 0.

    The base case value 1 at s == r pins the fixed-symbol reading: a
    symbol-free count would be q there.
    """
    if r < 1:
        raise ValueError("run length r must be >= 1")
    if s < r:
        return 0
    if s == r:
        return 1
    return (q * run_count_l(r, s - 1, q)
            + (q - 1) * (q ** (s - r - 1) - run_count_l(r, s - r - 1, q)))


@lru_cache(maxsize=None)
def _max_zero_run_histogram(s: int, q: int) -> tuple[int, ...]:
    """hist[t] = number of length-s sequences whose longest straight 0-run
    is exactly t, computed by literal enumeration (numpy, chunked)."""
    total = q ** s
    hist = np.zeros(s + 1, dtype=np.int64)
    chunk = 1 << 18
    powers = q ** np.arange(s, dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        run = np.zeros(len(idx), dtype=np.int16)
        best = np.zeros(len(idx), dtype=np.int16)
        for pos in range(s):
            digit = (idx // powers[pos]) % q
            run = np.where(digit == 0, run + 1, 0).astype(np.int16)
            np.maximum(best, run, out=best)
        hist += np.bincount(best, minlength=s + 1)
    return tuple(int(x) for x in hist)


def run_count_oracle(r: int, s: int, q: int,
                     budget: int = DEFAULT_ENUM_BUDGET) -> int:
    """Exhaustive count of length-s sequences with a straight 0-run >= r."""
    if r < 1:
        raise ValueError("run length r must be >= 1")
    if s == 0:
        return 0
    if q ** s > budget:
        raise BudgetExceeded(f"q^s = {q ** s} exceeds enumeration budget {budget}")
    hist = _max_zero_run_histogram(s, q)
    return sum(hist[min(r, s + 1):])
