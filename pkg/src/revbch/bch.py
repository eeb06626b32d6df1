"""Construction of the four narrow-sense generator polynomials and the
corresponding cyclic codes of length q^m - 1.

Variants: "plus" takes consecutive roots alpha^1..alpha^(delta-1), "minus"
their negatives, "tilde" the union of both (always reversible), and
"overline" additionally forces the root 1, giving the even-like subcode.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .cosets import coset_leader, cyclotomic_coset
from .ffield import GF, build_field, prime_factors
from .qpoly import Poly, minimal_polynomial

VARIANTS = ("plus", "minus", "tilde", "overline")

_REGISTRY: dict[tuple, "BchCode"] = {}
_REGISTRY_LOCK = threading.Lock()
_MINPOLY_CACHE: dict[tuple, dict[int, Poly]] = {}


def split_prime_power(q: int) -> tuple[int, int]:
    """q = p^e with p prime; raises for anything else."""
    facs = prime_factors(q)
    if len(facs) != 1:
        raise ValueError(f"{q} is not a prime power")
    p = facs[0]
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    if q != 1:
        raise ValueError("not a prime power")
    return p, e


@dataclass(frozen=True)
class BchCode:
    q: int
    m: int
    delta: int
    variant: str
    field: GF
    generator: Poly
    zeros: frozenset[int]  # exponents i with g(alpha^i) = 0

    @property
    def n(self) -> int:
        return self.q ** self.m - 1

    @property
    def k(self) -> int:
        return self.n - self.generator.degree

    def report(self) -> dict:
        return {
            "q": self.q,
            "m": self.m,
            "n": self.n,
            "delta": self.delta,
            "variant": self.variant,
            "generator": self.generator.text(),
            "k": self.k,
            "self_reciprocal": self.generator.is_self_reciprocal(),
        }


def zero_exponents(q: int, m: int, delta: int, variant: str) -> set[int]:
    """Union of the cyclotomic cosets prescribed for the variant."""
    n = q ** m - 1
    zeros: set[int] = set()
    for i in range(1, delta):
        if variant in ("plus", "tilde", "overline"):
            zeros.update(cyclotomic_coset(i % n, q, m).members)
        if variant in ("minus", "tilde", "overline"):
            zeros.update(cyclotomic_coset((n - i) % n, q, m).members)
    if variant == "overline":
        zeros.add(0)
    return zeros


def _minimal_poly(leader: int, field: GF, q: int) -> Poly:
    key = (id(field), q)
    cache = _MINPOLY_CACHE.setdefault(key, {})
    f = cache.get(leader)
    if f is None:
        f = minimal_polynomial(leader, field, q)
        cache[leader] = f
    return f


def generator_from_zeros(zeros, field: GF, q: int) -> Poly:
    """Product of minimal polynomials over the distinct coset leaders.

    Skipping indices whose leader was already used keeps the product
    squarefree without any gcd work. For prime q the multiplication runs
    over integer coefficient vectors (numpy convolution mod q).
    """
    m = _ext_degree(field, q)
    leaders = sorted({coset_leader(i, q, m) for i in zeros})
    polys = [_minimal_poly(l, field, q) for l in leaders]
    if not polys:
        return Poly.one(field)
    if q == field.p:
        acc = np.array([1], dtype=np.int64)
        for f in polys:
            acc = np.convolve(acc, np.array(f.to_int_coeffs(), dtype=np.int64)) % q
        return Poly(field, (int(c) for c in acc))
    return reduce(lambda a, b: a * b, polys)


def _ext_degree(field: GF, q: int) -> int:
    """m with field = GF(q^m)."""
    p, e = split_prime_power(q)
    if p != field.p or field.k % e != 0:
        raise ValueError("field is not an extension of GF(q)")
    return field.k // e


def build_code(q: int, m: int, delta: int, variant: str,
               field: GF | None = None, modulus=None) -> BchCode:
    """Construct (and cache) the code with designed distance delta."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    n = q ** m - 1
    if delta < 2:
        raise ValueError("designed distance must be >= 2")
    if variant == "plus" or variant == "minus":
        if delta >= n:
            raise ValueError(f"designed distance {delta} out of range for n={n}")
    elif 2 * delta > n + 2:
        raise ValueError(f"designed distance {delta} exceeds (n+2)/2 for n={n}")
    p, e = split_prime_power(q)
    if field is None:
        field = build_field(p, e * m, modulus)
    elif field.p != p or field.k != e * m:
        raise ValueError("field does not match GF(q^m)")

    key = (q, m, delta, variant, field.modulus)
    with _REGISTRY_LOCK:
        code = _REGISTRY.get(key)
    if code is not None:
        return code

    zeros = zero_exponents(q, m, delta, variant)
    gen = generator_from_zeros(zeros, field, q)
    code = BchCode(q, m, delta, variant, field, gen, frozenset(zeros))
    with _REGISTRY_LOCK:
        _REGISTRY.setdefault(key, code)
    return code


def membership(c: Poly, code: BchCode) -> bool:
    """True iff c represents a codeword (the generator divides it)."""
    if c.degree >= code.n:
        raise ValueError(f"degree {c.degree} is not below the length {code.n}")
    if any(not code.field.in_subfield(x, code.q) for x in c.coeffs):
        raise ValueError("coefficients must lie in GF(q)")
    return code.generator.divides(c)


def encode(msg: Poly, code: BchCode) -> Poly:
    """Non-systematic encoding msg * g mod (x^n - 1)."""
    if msg.degree >= code.k:
        raise ValueError(f"message degree {msg.degree} is not below k={code.k}")
    prod = msg * code.generator
    if prod.degree >= code.n:
        prod = prod % Poly.x_pow_minus_one(code.field, code.n)
    return prod


def is_reversible(code: BchCode) -> bool:
    return code.generator.is_self_reciprocal()


def reverse_word(c: Poly, n: int) -> Poly:
    """Coordinate reversal (c_0..c_{n-1}) -> (c_{n-1}..c_0) as a polynomial."""
    coeffs = list(c.coeffs) + [0] * (n - len(c.coeffs))
    return Poly(c.field, reversed(coeffs))


def generator_matrix(code: BchCode) -> np.ndarray:
    """k x n matrix with rows x^i * g; requires prime q."""
    if code.q != code.field.p:
        raise ValueError("integer generator matrix requires prime q")
    g = code.generator.to_int_coeffs()
    k, n = code.k, code.n
    G = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        G[i, i:i + len(g)] = g
    return G


def random_codeword(code: BchCode, rng) -> Poly:
    if code.q != code.field.p:
        raise ValueError("random codewords require prime q")
    msg = Poly(code.field, (rng.randrange(code.q) for _ in range(code.k)))
    return encode(msg, code)
