"""Minimum-distance certification.

A certificate pairs the designed lower bound with either an exact value
(bounded exhaustive search) or an explicit codeword witness for the upper
bound. Witness constructions: lifting a reversible codeword by (x-1),
subgroup-supported witnesses when delta divides n, and binary subspace
quadruples for delta = 2^r - 1.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

import numpy as np

from . import bch
from .bch import BchCode, build_code, encode, generator_matrix, membership, reverse_word
from .ffield import GF, build_field
from .qpoly import Poly

DEFAULT_SEARCH_BUDGET = 1 << 24


@dataclass(frozen=True)
class DistanceCertificate:
    kind: str  # "exact" | "upper-witness" | "lower-bound-only"
    d_lower: int
    d_upper: int | None
    witness: Poly | None
    method: str
    elapsed_ms: float = 0.0

    def to_json(self, code: BchCode | None = None) -> dict:
        out = {
            "kind": self.kind,
            "d_lower": self.d_lower,
            "d_upper": self.d_upper,
            "method": self.method,
            "witness": None if self.witness is None else self.witness.text(),
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        if code is not None:
            out["code"] = code.report()
        return out


def designed_floor(code: BchCode) -> int:
    return 2 * code.delta if code.variant in ("tilde", "overline") else code.delta


def _int_to_poly(field: GF, bits: int, n: int) -> Poly:
    return Poly(field, ((bits >> i) & 1 for i in range(n)))


def _min_weight_binary(code: BchCode) -> tuple[int, Poly]:
    g = code.generator.to_int_coeffs()
    gbits = sum(c << i for i, c in enumerate(g))
    rows = [gbits << i for i in range(code.k)]
    cw = 0
    best_w, best_cw = code.n + 1, 0
    for t in range(1, 1 << code.k):
        cw ^= rows[(t & -t).bit_length() - 1]
        w = cw.bit_count()
        if w < best_w:
            best_w, best_cw = w, cw
    return best_w, _int_to_poly(code.field, best_cw, code.n)


def _min_weight_qary(code: BchCode, chunk: int = 1 << 16) -> tuple[int, Poly]:
    q, k = code.q, code.k
    G = generator_matrix(code)
    total = q ** k
    powers = q ** np.arange(k, dtype=np.int64)
    best_w, best_idx = code.n + 1, None
    for start in range(1, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = ((idx[:, None] // powers) % q).astype(np.int64)
        cw = (digits @ G) % q
        w = np.count_nonzero(cw, axis=1)
        pos = int(np.argmin(w))
        if int(w[pos]) < best_w:
            best_w, best_idx = int(w[pos]), int(idx[pos])
    msg = Poly(code.field, ((best_idx // q ** i) % q for i in range(k)))
    return best_w, encode(msg, code)


def exact_min_distance(code: BchCode,
                       budget: int = DEFAULT_SEARCH_BUDGET) -> DistanceCertificate:
    """Exhaustive minimum weight over all q^k - 1 nonzero codewords.

    Falls back to a lower-bound-only certificate instead of failing when the
    enumeration would exceed the budget.
    """
    t0 = time.perf_counter()
    floor = designed_floor(code)
    if code.q ** code.k - 1 > budget:
        return DistanceCertificate("lower-bound-only", floor, None, None,
                                   "budget-exceeded",
                                   (time.perf_counter() - t0) * 1e3)
    if code.q == 2:
        w, witness = _min_weight_binary(code)
    else:
        w, witness = _min_weight_qary(code)
    return DistanceCertificate("exact", w, w, witness, "exhaustive-search",
                               (time.perf_counter() - t0) * 1e3)


def lift_reversible(c: Poly, code_plus: BchCode) -> DistanceCertificate:
    """Turn a reversible codeword of the one-sided code into an even-like
    witness (x-1)c(x); exact when the weight of c equals delta."""
    t0 = time.perf_counter()
    if not membership(c, code_plus):
        raise ValueError("polynomial is not a codeword of the one-sided code")
    if not membership(reverse_word(c, code_plus.n), code_plus):
        raise ValueError("codeword is not reversible")
    if c(1) == 0:
        raise ValueError("codeword vanishes at x = 1")
    code_bar = build_code(code_plus.q, code_plus.m, code_plus.delta, "overline",
                          field=code_plus.field)
    F = code_plus.field
    lifted = (Poly(F, (F.neg(1), 1)) * c) % Poly.x_pow_minus_one(F, code_plus.n)
    assert membership(lifted, code_bar)
    w = lifted.weight()
    floor = 2 * code_plus.delta
    if w > 2 * c.weight():
        raise AssertionError("lifted weight exceeds twice the witness weight")
    kind = "exact" if c.weight() == code_plus.delta else "upper-witness"
    return DistanceCertificate(kind, floor, w, lifted, "reversible-lift",
                               (time.perf_counter() - t0) * 1e3)


def _nullspace(matrix: list[list[int]], field: GF, width: int) -> list[list[int]]:
    """Nullspace basis of a matrix over the big field (Gauss-Jordan)."""
    rows = [list(r) for r in matrix]
    pivots: dict[int, list[int]] = {}
    for row in rows:
        for col in range(width):
            if row[col] == 0:
                continue
            if col in pivots:
                factor = row[col]
                piv = pivots[col]
                for j in range(width):
                    row[j] = field.sub(row[j], field.mul(factor, piv[j]))
            else:
                inv = field.inv(row[col])
                pivots[col] = [field.mul(inv, x) for x in row]
                break
    # back-reduce so every pivot row is zero in the other pivot columns
    for col in sorted(pivots, reverse=True):
        piv = pivots[col]
        for other_col, row in pivots.items():
            if other_col == col or row[col] == 0:
                continue
            factor = row[col]
            for j in range(width):
                row[j] = field.sub(row[j], field.mul(factor, piv[j]))
    basis = []
    free = [c for c in range(width) if c not in pivots]
    for fc in free:
        vec = [0] * width
        vec[fc] = 1
        for pc, prow in pivots.items():
            vec[pc] = field.neg(prow[fc])
        basis.append(vec)
    return basis


def subgroup_witness(q: int, m: int, delta: int,
                     field: GF | None = None, modulus=None) -> Poly:
    """Reversible weight-delta codeword supported on the index-n/delta
    subgroup exponents {0, n/delta, 2n/delta, ...}.

    Solved as the nullspace of the (delta-1) x delta root-constraint system
    over GF(q^m), then filtered for GF(q) coefficients, c(1) != 0, and
    reversibility; the lexicographically first survivor is returned.
    """
    n = q ** m - 1
    if n % delta != 0:
        raise ValueError(f"delta={delta} does not divide n={n}")
    code_plus = build_code(q, m, delta, "plus", field=field, modulus=modulus)
    F = code_plus.field
    step = n // delta
    exps = [step * i for i in range(delta)]
    matrix = [[F.exp(t * e) for e in exps] for t in range(1, delta)]
    basis = _nullspace(matrix, F, delta)

    rational = []
    for vec in basis:
        lead = next((v for v in vec if v), None)
        if lead is None:
            continue
        inv = F.inv(lead)
        scaled = [F.mul(inv, v) for v in vec]
        if all(F.in_subfield(v, q) for v in scaled):
            rational.append(scaled)
    scalars = sorted(s for s in F.subfield_elements(q) if s)
    candidates = []
    for combo in itertools.product([0] + scalars, repeat=len(rational)):
        if not any(combo):
            continue
        vec = [0] * delta
        for c, bvec in zip(combo, rational):
            if c:
                for i, v in enumerate(bvec):
                    vec[i] = F.add(vec[i], F.mul(c, v))
        candidates.append(tuple(vec))
    for vec in sorted(set(candidates)):
        coeffs = [0] * n
        for a, e in zip(vec, exps):
            coeffs[e] = a
        c = Poly(F, coeffs)
        if c.is_zero() or c(1) == 0:
            continue
        if not membership(c, code_plus):
            continue
        if not membership(reverse_word(c, n), code_plus):
            continue
        return c
    raise ValueError("no vector in the nullspace survives the filters")


# ---------------------------------------------------------------------------
# Subspace quadruples (binary, delta = 2^r - 1)

@dataclass(frozen=True)
class SubspaceQuadruple:
    h1: frozenset[int]
    h2: frozenset[int]
    h3: frozenset[int]
    h4: frozenset[int]

    def check(self, field: GF) -> bool:
        if self.h1 & self.h2 != {0} or self.h3 & self.h4 != {0}:
            return False
        union = (self.h1 | self.h2) - {0}
        inverted = {field.inv(x) for x in union}
        return inverted == (self.h3 | self.h4) - {0}


def _all_subspaces(m: int, r: int) -> list[frozenset[int]]:
    """Every r-dimensional GF(2)-subspace of GF(2^m) (elements packed),
    enumerated once via canonical row-echelon bases."""
    elements = list(range(1, 1 << m))
    seen = set()
    out = []
    for basis in itertools.combinations(elements, r):
        # distinct top bits <=> echelon basis; every subspace has exactly
        # one ordered basis of this shape up to row reduction
        if len({b.bit_length() for b in basis}) != r:
            continue
        span = {0}
        for b in basis:
            span |= {x ^ b for x in span}
        fs = frozenset(span)
        if fs not in seen:
            seen.add(fs)
            out.append(fs)
    out.sort(key=lambda s: tuple(sorted(s)))
    return out


def subspace_quadruple_witness(m: int, r: int, field: GF | None = None):
    """Search for a quadruple of r-dimensional subspaces certifying
    d = 2*(2^r - 1); returns (quadruple, witness, certificate) or None."""
    if r < 1 or 2 * r > m:
        raise ValueError("need 1 <= r <= m/2")
    if field is None:
        field = build_field(2, m)
    delta = (1 << r) - 1
    code_bar = build_code(2, m, delta, "overline", field=field)
    subspaces = _all_subspaces(m, r)
    index = set(subspaces)
    containing: dict[int, list[frozenset[int]]] = {}
    for sp in subspaces:
        for x in sp:
            if x:
                containing.setdefault(x, []).append(sp)

    t0 = time.perf_counter()
    for h1 in subspaces:
        for h2 in subspaces:
            if h1 & h2 != {0}:
                continue
            union = (h1 | h2) - {0}
            target = frozenset(field.inv(x) for x in union)
            t_min = min(target)
            for h3 in containing.get(t_min, ()):
                if not (h3 - {0}) <= target:
                    continue
                h4 = frozenset(target - (h3 - {0})) | {0}
                if h4 not in index:
                    continue
                quad = SubspaceQuadruple(h1, h2, h3, frozenset(h4))
                if not quad.check(field):
                    continue
                coeffs = [0] * code_bar.n
                for x in union:
                    coeffs[field.log(x)] = 1
                witness = Poly(field, coeffs)
                if not membership(witness, code_bar):
                    continue
                cert = DistanceCertificate(
                    "exact", 2 * delta, 2 * delta, witness,
                    "subspace-quadruple", (time.perf_counter() - t0) * 1e3)
                return quad, witness, cert
    return None


def low_weight_message_upper(code: BchCode, max_msg_weight: int = 4,
                             budget: int = DEFAULT_SEARCH_BUDGET) -> DistanceCertificate:
    """Best upper witness over all messages of Hamming weight up to the cap.

    A deterministic, cheap fallback for codes beyond exhaustive reach; the
    resulting bound is honest but not necessarily tight.
    """
    t0 = time.perf_counter()
    G = generator_matrix(code)
    q, k = code.q, code.k
    nonzero = list(range(1, q))
    best_w, best_cw = code.n + 1, None
    count = 0
    for t in range(1, max_msg_weight + 1):
        for positions in itertools.combinations(range(k), t):
            for values in itertools.product(nonzero, repeat=t):
                cw = np.zeros(code.n, dtype=np.int64)
                for pos, val in zip(positions, values):
                    cw += val * G[pos]
                cw %= q
                w = int(np.count_nonzero(cw))
                if w < best_w:
                    best_w, best_cw = w, cw
                count += 1
                if count > budget:
                    break
    witness = Poly(code.field, (int(c) for c in best_cw))
    floor = designed_floor(code)
    kind = "exact" if best_w == floor else "upper-witness"
    return DistanceCertificate(kind, floor, best_w, witness,
                               "low-weight-messages",
                               (time.perf_counter() - t0) * 1e3)


def certify(code: BchCode, budget: int = DEFAULT_SEARCH_BUDGET) -> DistanceCertificate:
    """Best available certificate: exhaustive search within budget, else the
    subgroup witness when delta | n, else a bounded witness search."""
    if code.q ** code.k - 1 <= budget:
        return exact_min_distance(code, budget)
    if code.variant == "overline" and code.n % code.delta == 0:
        c = subgroup_witness(code.q, code.m, code.delta, field=code.field)
        plus = build_code(code.q, code.m, code.delta, "plus", field=code.field)
        return lift_reversible(c, plus)
    return low_weight_message_upper(code)


def conjecture_probe(which: int, q: int, m: int, lam: int | None = None,
                     budget: int = DEFAULT_SEARCH_BUDGET) -> dict:
    """Empirical check of the two open minimum-distance statements; never
    claims anything beyond the instance probed."""
    if which == 1:
        if lam is None or not 1 <= lam <= m // 2:
            raise ValueError("conjecture 1 needs 1 <= lambda <= m/2")
        delta = q ** lam - 1
    elif which == 2:
        if q != 3 or m < 3 or m % 2 == 0:
            raise ValueError("conjecture 2 is about q=3 and odd m >= 3")
        delta = 4
    else:
        raise ValueError("which must be 1 or 2")
    expected = 2 * delta
    code = build_code(q, m, delta, "overline")
    cert = certify(code, budget)
    if cert.kind == "exact":
        status = "confirmed" if cert.d_upper == expected else "refuted"
    elif cert.d_upper == expected:
        status = "confirmed"  # witness meets the BCH floor
    else:
        status = "inconclusive"
    return {
        "conjecture": which,
        "q": q,
        "m": m,
        "delta": delta,
        "expected_d": expected,
        "status": status,
        "certificate": cert.to_json(code),
    }
