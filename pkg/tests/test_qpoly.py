import pytest

from revbch.ffield import FieldError, build_field
from revbch.qpoly import (
    Poly,
    gcd,
    lcm,
    lcm_many,
    minimal_polynomial,
    poly_from_text,
    poly_to_text,
)

F2 = build_field(2, 4)
F3 = build_field(3, 3, [1, 2, 0, 1])  # x^3 - x + 1


def test_construction_trims_and_degree():
    p = Poly(F2, [1, 0, 1, 0, 0])
    assert p.coeffs == (1, 0, 1)
    assert p.degree == 2
    assert Poly.zero(F2).degree == -1
    assert Poly.one(F2).coeffs == (1,)
    assert Poly.monomial(F2, 3).coeffs == (0, 0, 0, 1)
    assert Poly.x_pow_minus_one(F3, 4)[0] == F3.neg(1)


def test_ring_axioms_small():
    polys = [Poly(F3, c) for c in ([1], [2, 1], [1, 0, 2], [0, 1, 1, 2])]
    for a in polys:
        for b in polys:
            assert a + b == b + a
            assert a * b == b * a
            assert a - b == -(b - a)
            q, r = divmod(a * b + Poly.one(F3), b)
            assert q * b + r == a * b + Poly.one(F3)
            assert r.degree < b.degree


def test_divmod_and_divides():
    a = Poly(F2, [1, 1, 0, 1])
    b = Poly(F2, [1, 1])
    q, r = divmod(a, b)
    assert q * b + r == a
    assert (a * b % b).is_zero()
    assert b.divides(a * b)
    assert not b.divides(a + Poly.one(F2)) or (a + Poly.one(F2)) % b == Poly.zero(F2)
    with pytest.raises(ZeroDivisionError):
        divmod(a, Poly.zero(F2))


def test_evaluation_horner():
    # p(x) = x^2 + 2x + 1 = (x + 1)^2 over GF(3^3)
    p = Poly(F3, [1, 2, 1])
    minus_one = F3.neg(1)
    assert p(minus_one) == 0
    assert p(0) == 1
    assert p(1) == F3.add(F3.add(1, 2), 1)


def test_monic_reciprocal_self_reciprocal():
    p = Poly(F3, [2, 1, 2])
    assert p.monic().coeffs[-1] == 1
    assert p.reciprocal().coeffs == (2, 1, 2)
    assert p.is_self_reciprocal()
    # self-reciprocal up to scalar: reversed = 2 * original
    q = Poly(F3, [2, 2, 0, 1, 1])
    assert q.reciprocal() == q.scale(2)
    assert q.is_self_reciprocal()
    assert not Poly(F3, [1, 1, 0, 2]).is_self_reciprocal()
    with pytest.raises(ValueError):
        Poly.zero(F3).reciprocal()


def test_gcd_lcm():
    a = Poly(F2, [1, 1])        # x + 1
    b = Poly(F2, [1, 1, 1])     # x^2 + x + 1
    c = a * b
    assert gcd(c, a) == a
    assert lcm(a, b) == c
    assert lcm_many([a, b, a]) == c
    with pytest.raises(ValueError):
        gcd(Poly.zero(F2), Poly.zero(F2))
    with pytest.raises(ValueError):
        lcm_many([])


def test_minimal_polynomial_binary_example():
    # with modulus x^5 + x^2 + 1, the minimal polynomial of alpha is x^5 + x^2 + 1
    F = build_field(2, 5, [1, 0, 1, 0, 0, 1])
    m1 = minimal_polynomial(1, F, 2)
    assert m1.text() == "x^5 + x^2 + 1"
    # coset {3,6,12,24,17} gives a degree-5 polynomial as well
    assert minimal_polynomial(3, F, 2).degree == 5
    assert minimal_polynomial(0, F, 2).text() == "x + 1"


def test_minimal_polynomial_ternary():
    m1 = minimal_polynomial(1, F3, 3)
    assert m1.text() == "x^3 + 2x + 1"  # x^3 - x + 1 canonicalized mod 3
    # constant-coset index 0 gives x - 1
    assert minimal_polynomial(0, F3, 3) == Poly(F3, [F3.neg(1), 1])
    # alpha^i is a root of its own minimal polynomial
    for i in (1, 2, 5, 13):
        assert minimal_polynomial(i, F3, 3)(F3.exp(i)) == 0


def test_minimal_polynomial_over_intermediate_subfield():
    F = build_field(2, 4)
    # over GF(4), the coset of 1 is {1, 4}: degree 2
    m = minimal_polynomial(1, F, 4)
    assert m.degree == 2
    assert m(F.exp(1)) == 0 and m(F.exp(4)) == 0


def test_to_int_coeffs_guard():
    F = build_field(2, 4)
    p = Poly(F, [F.exp(1), 1])  # coefficient outside GF(2)
    with pytest.raises(FieldError):
        p.to_int_coeffs()


def test_poly_to_text_forms():
    assert poly_to_text([0]) == "0"
    assert poly_to_text([]) == "0"
    assert poly_to_text([1]) == "1"
    assert poly_to_text([0, 1]) == "x"
    assert poly_to_text([0, 2]) == "2x"
    assert poly_to_text([2, 0, 0, 1]) == "x^3 + 2"
    assert poly_to_text([2, 2, 1, 1, 0, 2, 0, 0, 1, 0, 2, 2, 1, 1]) == (
        "x^13 + x^12 + 2x^11 + 2x^10 + x^8 + 2x^5 + x^3 + x^2 + 2x + 2")


def test_poly_from_text_round_trip():
    s = "x^13 + x^12 + 2x^11 + 2x^10 + x^8 + 2x^5 + x^3 + x^2 + 2x + 2"
    assert poly_to_text(poly_from_text(s)) == s
    assert poly_from_text("x^3-x+1") == [1, -1, 0, 1]
    assert poly_from_text("1 + x^2 + x^5") == [1, 0, 1, 0, 0, 1]
    assert poly_from_text("x") == [0, 1]
    assert poly_from_text("-3") == [-3]
    with pytest.raises(ValueError):
        poly_from_text("")
    with pytest.raises(ValueError):
        poly_from_text("x^")
    with pytest.raises(ValueError):
        poly_from_text("2y + 1")
