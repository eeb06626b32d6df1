"""Arithmetic in GF(p^k) with discrete-log tables and subfield membership.

Elements are packed integers: the element with polynomial-basis digits
(d_0, ..., d_{k-1}) over GF(p) is stored as d_0 + d_1*p + ... + d_{k-1}*p^{k-1}.
This keeps hot loops (generator products, distance search) on plain ints.
A thin FieldElement wrapper with operator overloading sits on top for
ergonomic use.
"""

from __future__ import annotations

import itertools

# Beyond this size we would fall back to direct polynomial multiplication;
# every field this library constructs stays far below it.
LOG_TABLE_LIMIT = 1 << 24

_FIELD_CACHE: dict[tuple, "GF"] = {}


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors by trial division."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# GF(p)[x] helpers on plain coefficient tuples (ascending powers, trimmed).
# Only used while constructing a field; element arithmetic uses tables.

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _pmod(a, f, p):
    a = list(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df and a:
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fi) % p
        a.pop()
    return _trim(a)


def _ppowmod(base, e, f, p):
    result = (1,)
    base = _pmod(base, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        e >>= 1
    return result


def _pgcd(a, b, p):
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible(coeffs, p: int) -> bool:
    """Irreducibility of a monic polynomial over GF(p).

    Checks x^(p^k) == x mod f together with gcd(x^(p^(k/t)) - x, f) = 1 for
    every prime t dividing k.
    """
    f = _trim(coeffs)
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = (0, 1)
    if _ppowmod(x, p ** k, f, p) != _pmod(x, f, p):
        return False
    for t in prime_factors(k):
        g = _ppowmod(x, p ** (k // t), f, p)
        diff = list(g) + [0] * max(0, 2 - len(g))
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(f, _trim(diff), p)
        if len(g) != 1:  # gcd must be a unit (nonzero constant)
            return False
    return True


class GF:
    """The field GF(p^k) defined by a monic irreducible modulus over GF(p)."""

    def __init__(self, p: int, k: int, modulus=None):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if k < 1:
            raise FieldError("extension degree must be >= 1")
        order = p ** k
        if order > LOG_TABLE_LIMIT:
            raise FieldError(f"field order {order} exceeds supported limit")
        explicit_modulus = modulus is not None
        if modulus is None:
            modulus = _canonical_primitive_modulus(p, k)
        else:
            modulus = _trim(modulus)
            if len(modulus) - 1 != k or modulus[-1] % p != 1:
                raise FieldError("modulus must be monic of degree k")
            modulus = tuple(c % p for c in modulus)
            if not is_irreducible(modulus, p):
                raise FieldError("modulus is reducible over GF(p)")

        self.p = p
        self.k = k
        self.order = order
        self.modulus = modulus

        self._build_add_tables()
        x = p if k > 1 else (-modulus[0]) % p  # residue class of the indeterminate
        if self._slow_order(x) == order - 1:
            self.alpha = x
        elif explicit_modulus and k > 1:
            # Caller supplied a non-primitive modulus: pick the first primitive
            # element in increasing packed-integer order.
            self.alpha = next(a for a in range(2, order)
                              if self._slow_order(a) == order - 1)
        elif k == 1:
            self.alpha = next(a for a in range(1, order)
                              if self._slow_order(a) == order - 1)
        else:
            raise FieldError("canonical modulus search produced a non-primitive root")
        self._build_log_tables()

    # -- construction helpers ----------------------------------------------

    def _build_add_tables(self):
        if self.p == 2:
            self._chunk = 0
            return
        p = self.p
        c = 1
        while c < self.k and p ** (c + 1) <= 512:
            c += 1
        chunk = p ** c
        self._chunk = chunk
        add = [0] * (chunk * chunk)
        neg = [0] * chunk
        for a in range(chunk):
            da = _digits(a, p, c)
            neg[a] = _pack([(p - d) % p for d in da], p)
            for b in range(chunk):
                db = _digits(b, p, c)
                add[a * chunk + b] = _pack([(x + y) % p for x, y in zip(da, db)], p)
        self._addtab = add
        self._negtab = neg

    def _mul_slow(self, a: int, b: int) -> int:
        p = self.p
        prod = _pmul(_digits(a, p, self.k), _digits(b, p, self.k), p)
        return _pack(_pmod(prod, self.modulus, p), p)

    def _slow_order(self, a: int) -> int:
        if a == 0:
            return 0
        n = self.order - 1
        order = n
        for f in prime_factors(n):
            while order % f == 0 and self._slow_pow(a, order // f) == 1:
                order //= f
        return order

    def _slow_pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._mul_slow(result, a)
            a = self._mul_slow(a, a)
            e >>= 1
        return result

    def _build_log_tables(self):
        n = self.order - 1
        exp = [0] * (2 * n)
        log = [0] * self.order
        a = 1
        for i in range(n):
            exp[i] = a
            exp[i + n] = a
            log[a] = i
            a = self._mul_slow(a, self.alpha)
        if a != 1:
            raise FieldError("alpha does not have full multiplicative order")
        log[1] = 0
        self._exp = exp
        self._log = log

    # -- arithmetic on packed ints -----------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        t, c = self._addtab, self._chunk
        r, shift = 0, 1
        while a or b:
            r += t[(a % c) * c + (b % c)] * shift
            a //= c
            b //= c
            shift *= c
        return r

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        t, c = self._negtab, self._chunk
        r, shift = 0, 1
        while a:
            r += t[a % c] * shift
            a //= c
            shift *= c
        return r

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        n = self.order - 1
        return self._exp[n - self._log[a]]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        n = self.order - 1
        return self._exp[(self._log[a] * e) % n]

    def exp(self, i: int) -> int:
        """alpha^i (i may be any integer)."""
        return self._exp[i % (self.order - 1)]

    def log(self, a: int) -> int:
        """Discrete log base alpha; requires a != 0."""
        if a == 0:
            raise ZeroDivisionError("discrete log of zero")
        return self._log[a]

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    # -- subfield support ----------------------------------------------------

    def _subfield_exponent(self, q: int) -> int:
        e = 0
        qq = q
        while qq % self.p == 0:
            qq //= self.p
            e += 1
        if qq != 1 or e == 0:
            raise FieldError(f"{q} is not a power of the characteristic {self.p}")
        if self.k % e != 0:
            raise FieldError(f"GF({q}) is not a subfield of GF({self.order})")
        return e

    def in_subfield(self, a: int, q: int) -> bool:
        """True iff a lies in the subfield GF(q), i.e. a^q == a."""
        self._subfield_exponent(q)
        if a == 0:
            return True
        return (self._log[a] * (q - 1)) % (self.order - 1) == 0

    def subfield_elements(self, q: int) -> list[int]:
        self._subfield_exponent(q)
        step = (self.order - 1) // (q - 1)
        return [0] + sorted(self.exp(step * i) for i in range(q - 1))

    # -- conversions ---------------------------------------------------------

    def digits(self, a: int) -> tuple[int, ...]:
        return tuple(_digits(a, self.p, self.k))

    def from_digits(self, ds) -> int:
        ds = list(ds)
        if len(ds) > self.k or any(not 0 <= d < self.p for d in ds):
            raise FieldError("invalid digit vector")
        return _pack(ds, self.p)

    def element(self, value: int) -> "FieldElement":
        if not 0 <= value < self.order:
            raise FieldError("element value out of range")
        return FieldElement(self, value)

    def __eq__(self, other):
        return (isinstance(other, GF)
                and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus))

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.k}, modulus={list(self.modulus)})"


def _digits(v: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(v % p)
        v //= p
    return out


def _pack(ds, p: int) -> int:
    v = 0
    for d in reversed(list(ds)):
        v = v * p + d
    return v


def _canonical_primitive_modulus(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic primitive polynomial of degree k.

    Coefficient vectors are compared from the constant term upward, so the
    choice is deterministic across runs.
    """
    n = p ** k - 1
    facs = prime_factors(n) if n > 1 else []
    for low in itertools.product(range(p), repeat=k):
        f = tuple(low) + (1,)
        if f[0] == 0 or not is_irreducible(f, p):
            continue
        # x must generate the multiplicative group
        if k == 1:
            root = (-f[0]) % p
            if all(pow(root, n // t, p) != 1 for t in facs):
                return f
            continue
        x = (0, 1)
        if all(_ppowmod(x, n // t, f, p) != (1,) for t in facs):
            return f
    raise FieldError(f"no primitive polynomial of degree {k} over GF({p})")


def build_field(p: int, k: int, modulus=None) -> GF:
    """Construct (and cache) GF(p^k); modulus defaults to the canonical one."""
    key = (p, k, None if modulus is None else _trim(tuple(c % p for c in modulus)))
    field = _FIELD_CACHE.get(key)
    if field is None:
        field = GF(p, k, modulus)
        _FIELD_CACHE[key] = field
    return field


class FieldElement:
    """Operator-overloaded view of a packed field element."""

    __slots__ = ("field", "value")

    def __init__(self, field: GF, value: int):
        self.field = field
        self.value = value

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("elements belong to different fields")
            return other.value
        if isinstance(other, int):
            return other % self.field.p  # prime-subfield scalar
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        return FieldElement(self.field, self.field.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        return FieldElement(self.field, self.field.sub(self.value, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        return FieldElement(self.field, self.field.sub(v, self.value))

    def __mul__(self, other):
        v = self._coerce(other)
        return FieldElement(self.field, self.field.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        return FieldElement(self.field, self.field.div(self.value, v))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p and self.value < self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((id(self.field), self.value))

    def __bool__(self):
        return self.value != 0

    def log(self) -> int:
        return self.field.log(self.value)

    def __repr__(self):
        if self.value == 0:
            return "0"
        i = self.field.log(self.value)
        return "1" if i == 0 else ("a" if i == 1 else f"a^{i}")
