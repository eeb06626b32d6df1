import random

import numpy as np
import pytest

from revbch.bch import (
    build_code,
    encode,
    generator_matrix,
    is_reversible,
    membership,
    random_codeword,
    reverse_word,
    split_prime_power,
    zero_exponents,
)
from revbch.ffield import build_field
from revbch.qpoly import Poly, lcm


def test_split_prime_power():
    assert split_prime_power(2) == (2, 1)
    assert split_prime_power(9) == (3, 2)
    assert split_prime_power(32) == (2, 5)
    with pytest.raises(ValueError):
        split_prime_power(6)


def test_zero_exponents_variants():
    n = 15
    plus = zero_exponents(2, 4, 3, "plus")
    minus = zero_exponents(2, 4, 3, "minus")
    tilde = zero_exponents(2, 4, 3, "tilde")
    over = zero_exponents(2, 4, 3, "overline")
    assert plus == {1, 2, 4, 8}  # C_1 = C_2 for delta = 3
    assert minus == {n - e for e in plus}
    assert tilde == plus | minus
    assert over == tilde | {0}


def test_build_code_basic_parameters():
    code = build_code(2, 4, 3, "overline")
    assert (code.n, code.k) == (15, 6)
    assert code.generator.degree == 9
    assert is_reversible(code)
    rep = code.report()
    assert rep["self_reciprocal"] is True
    assert rep["k"] == 6 and rep["n"] == 15


def test_registry_caching():
    assert build_code(2, 4, 3, "overline") is build_code(2, 4, 3, "overline")
    a = build_code(3, 2, 2, "tilde")
    b = build_code(3, 2, 2, "overline")
    assert a is not b


def test_overline_is_x_minus_one_times_tilde():
    for q, m, delta in [(2, 4, 3), (2, 5, 5), (3, 3, 4), (3, 2, 3)]:
        tilde = build_code(q, m, delta, "tilde")
        over = build_code(q, m, delta, "overline")
        F = over.field
        x_minus_1 = Poly(F, [F.neg(1), 1])
        if tilde.generator(1) == 0:
            # root 1 already present: the overline generator is unchanged
            assert over.generator == tilde.generator
        else:
            assert over.generator == (x_minus_1 * tilde.generator).monic()


def test_tilde_is_lcm_of_one_sided():
    for q, m, delta in [(2, 4, 3), (3, 3, 4), (2, 6, 5)]:
        plus = build_code(q, m, delta, "plus")
        minus = build_code(q, m, delta, "minus")
        tilde = build_code(q, m, delta, "tilde")
        assert tilde.generator == lcm(plus.generator, minus.generator)
        assert plus.generator.degree == minus.generator.degree


def test_generator_vanishes_exactly_on_zero_set():
    for variant in ("plus", "minus", "tilde", "overline"):
        code = build_code(3, 2, 3, variant)
        F = code.field
        for i in range(code.n):
            is_root = code.generator(F.exp(i)) == 0
            assert is_root == (i in code.zeros), (variant, i)


def test_build_code_validation():
    with pytest.raises(ValueError):
        build_code(2, 4, 3, "sideways")
    with pytest.raises(ValueError):
        build_code(2, 4, 1, "overline")
    with pytest.raises(ValueError):
        build_code(2, 4, 9, "overline")  # 2*9 > 17
    with pytest.raises(ValueError):
        build_code(2, 4, 15, "plus")
    with pytest.raises(ValueError):
        build_code(2, 4, 3, "overline", field=build_field(2, 5))


def test_membership_and_encode():
    code = build_code(2, 4, 3, "overline")
    F = code.field
    assert membership(code.generator, code)
    assert not membership(Poly.one(F), code)
    msg = Poly(F, [1, 0, 1, 1])
    cw = encode(msg, code)
    assert membership(cw, code)
    with pytest.raises(ValueError):
        encode(Poly(F, [1] * code.k + [1]), code)
    with pytest.raises(ValueError):
        membership(Poly.monomial(F, code.n), code)
    with pytest.raises(ValueError):
        membership(Poly(F, [F.exp(1)]), code)  # coefficient outside GF(q)


def test_reversal_closure():
    rng = random.Random(7)
    for q, m, delta in [(2, 4, 3), (3, 2, 3), (3, 3, 4)]:
        code = build_code(q, m, delta, "overline")
        for _ in range(25):
            cw = random_codeword(code, rng)
            assert membership(cw, code)
            assert membership(reverse_word(cw, code.n), code)


def test_generator_matrix_rows_are_codewords():
    code = build_code(3, 2, 3, "overline")
    G = generator_matrix(code)
    assert G.shape == (code.k, code.n)
    for row in G:
        assert membership(Poly(code.field, (int(v) for v in row)), code)
    # rows are linearly independent by the staircase structure
    assert np.count_nonzero(G[:, : code.k].diagonal()) == code.k


def test_prime_power_q():
    # q = 4 over GF(2^4): coefficients live in GF(4)
    code = build_code(4, 2, 2, "overline")
    assert code.n == 15
    F = code.field
    assert all(F.in_subfield(c, 4) for c in code.generator.coeffs)
    assert is_reversible(code)
    with pytest.raises(ValueError):
        generator_matrix(code)
    with pytest.raises(ValueError):
        random_codeword(code, random.Random(0))
