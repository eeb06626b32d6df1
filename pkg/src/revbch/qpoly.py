"""Polynomial algebra over a finite field.

Coefficients are packed field integers in ascending order, trimmed so the
leading coefficient is nonzero (the zero polynomial has no coefficients).
Also provides minimal polynomials of alpha^i over a subfield GF(q) and the
caret text format used on the CLI ("x^13 + x^12 + 2x^11 + ... + 2").
"""

from __future__ import annotations

import re

from .ffield import GF, FieldError


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: GF, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (1,))

    @classmethod
    def x(cls, field):
        return cls(field, (0, 1))

    @classmethod
    def monomial(cls, field, degree, coeff=1):
        return cls(field, (0,) * degree + (coeff,))

    @classmethod
    def from_int_coeffs(cls, field, ints):
        """Ascending prime-subfield scalars (possibly negative) as coefficients."""
        return cls(field, (c % field.p for c in ints))

    @classmethod
    def x_pow_minus_one(cls, field, n):
        c = [0] * (n + 1)
        c[0] = field.neg(1)
        c[n] = 1
        return cls(field, c)

    # -- basic queries ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def weight(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # -- ring arithmetic ---------------------------------------------------------

    def _check(self, other: "Poly"):
        if self.field != other.field:
            raise FieldError("polynomials over different fields")

    def __add__(self, other):
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Poly(F, out)

    def __neg__(self):
        F = self.field
        return Poly(F, (F.neg(c) for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(F)
        out = [0] * (len(a) + len(b) - 1)
        add, mul = F.add, F.mul
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = add(out[i + j], mul(ai, bj))
        return Poly(F, out)

    def scale(self, c: int) -> "Poly":
        F = self.field
        return Poly(F, (F.mul(c, x) for x in self.coeffs))

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        db = other.degree
        quo = [0] * max(0, len(rem) - db)
        inv_lead = F.inv(other.coeffs[-1])
        sub, mul = F.sub, F.mul
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            c = mul(c, inv_lead)
            quo[i - db] = c
            for j, bj in enumerate(other.coeffs):
                if bj:
                    rem[i - db + j] = sub(rem[i - db + j], mul(c, bj))
        return Poly(F, quo), Poly(F, rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, point: int) -> int:
        """Evaluate at a packed field element (Horner)."""
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, point), c)
        return acc

    # -- structure ---------------------------------------------------------------

    def monic(self) -> "Poly":
        if self.is_zero() or self.coeffs[-1] == 1:
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def reciprocal(self) -> "Poly":
        """x^deg * f(1/x): the coefficient sequence reversed, then trimmed."""
        if self.is_zero():
            raise ValueError("reciprocal of the zero polynomial")
        return Poly(self.field, reversed(self.coeffs))

    def is_self_reciprocal(self) -> bool:
        """f equals its reciprocal up to canonical (monic) form."""
        return (not self.is_zero()
                and self.monic() == self.reciprocal().monic())

    def divides(self, other: "Poly") -> bool:
        return (other % self).is_zero()

    def to_int_coeffs(self) -> list[int]:
        """Project prime-subfield coefficients to ints in [0, p)."""
        p = self.field.p
        if any(c >= p for c in self.coeffs):
            raise FieldError("polynomial has coefficients outside the prime subfield")
        return list(self.coeffs)

    def text(self) -> str:
        """Canonical caret form (requires prime-subfield coefficients)."""
        return poly_to_text(self.to_int_coeffs())

    def __repr__(self):
        try:
            return f"Poly({self.text()})"
        except FieldError:
            return f"Poly(coeffs={list(self.coeffs)})"


def gcd(a: Poly, b: Poly) -> Poly:
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def lcm(a: Poly, b: Poly) -> Poly:
    g = gcd(a, b)
    return ((a * b) // g).monic()


def lcm_many(polys) -> Poly:
    acc = None
    for f in polys:
        acc = f.monic() if acc is None else lcm(acc, f)
    if acc is None:
        raise ValueError("lcm of an empty collection")
    return acc


def minimal_polynomial(i: int, field: GF, q: int) -> Poly:
    """Minimal polynomial of alpha^i over the subfield GF(q).

    Computed as the product over the q-cyclotomic coset of i; every
    coefficient is checked to lie in GF(q).
    """
    n = field.order - 1
    if not 0 <= i < n:
        raise ValueError(f"exponent {i} out of range [0, {n})")
    coset = set()
    j = i
    while j not in coset:
        coset.add(j)
        j = j * q % n
    f = Poly.one(field)
    for e in sorted(coset):
        f = f * Poly(field, (field.neg(field.exp(e)), 1))
    if any(not field.in_subfield(c, q) for c in f.coeffs):
        raise FieldError("minimal polynomial has coefficients outside GF(q)")
    return f


# ---------------------------------------------------------------------------
# Caret text format

_TERM_RE = re.compile(r"^(\d*)(?:(x)(?:\^(\d+))?)?$")


def poly_to_text(int_coeffs) -> str:
    """Ascending integer coefficients -> canonical descending caret notation."""
    coeffs = list(int_coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        return "0"
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        cs = "" if (c == 1 and e > 0) else str(c)
        if e == 0:
            terms.append(cs)
        elif e == 1:
            terms.append(f"{cs}x")
        else:
            terms.append(f"{cs}x^{e}")
    return " + ".join(terms)


def poly_from_text(s: str) -> list[int]:
    """Parse caret notation (either power order, minus signs allowed).

    Returns ascending integer coefficients, possibly negative; the caller
    reduces them modulo the characteristic.
    """
    compact = s.replace(" ", "").replace("−", "-").replace("*", "")
    if not compact:
        raise ValueError("empty polynomial text")
    compact = compact.replace("-", "+-")
    if compact.startswith("+"):
        compact = compact[1:]
    coeffs: dict[int, int] = {}
    for raw in compact.split("+"):
        if not raw:
            raise ValueError(f"malformed polynomial text: {s!r}")
        sign = 1
        if raw.startswith("-"):
            sign = -1
            raw = raw[1:]
        m = _TERM_RE.match(raw)
        if not m or (not m.group(1) and not m.group(2)):
            raise ValueError(f"malformed term {raw!r} in {s!r}")
        c = int(m.group(1)) if m.group(1) else 1
        if m.group(2):
            e = int(m.group(3)) if m.group(3) else 1
        else:
            e = 0
        coeffs[e] = coeffs.get(e, 0) + sign * c
    out = [0] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return out
