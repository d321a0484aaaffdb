import itertools
import math
import random
from fractions import Fraction

import pytest

from ctseq.exactnum import ModulusMismatch, Residue
from ctseq.laurent import (LaurentPoly, VarCountMismatch, ZeroPolynomial,
                           ct_of_product, ct_sequence)

X = LaurentPoly.variable(0, 1)
XINV = LaurentPoly.monomial((-1,))
CATALAN_P = XINV + 2 + X          # x^-1 + 2 + x
CATALAN_Q = 1 - X


def brute_ct_power(coeffs_by_exp, n, pick_exp=0):
    """Multinomial-expansion oracle for [x^pick_exp] of a univariate
    Laurent polynomial power, independent of the package arithmetic."""
    exps = sorted(coeffs_by_exp)
    total = Fraction(0)
    for combo in itertools.product(exps, repeat=n):
        if sum(combo) == pick_exp:
            val = Fraction(1)
            for e in combo:
                val *= coeffs_by_exp[e]
            total += val
    return total


def test_ring_op_examples():
    assert XINV * X == LaurentPoly.one(1)
    assert (1 + X) * (1 - X) == 1 - X**2
    f = CATALAN_P * (3 - X**2)
    assert f + (-1) * f == LaurentPoly.zero(1)


def test_pow_examples():
    sq = CATALAN_P**2
    assert sq == XINV**2 + 4 * XINV + 6 + 4 * X + X**2
    assert (CATALAN_P**0) == LaurentPoly.one(1)
    assert LaurentPoly.zero(1) ** 0 == LaurentPoly.one(1)
    frob = ((1 + X) ** 4).reduce_mod(2)
    assert frob == (1 + X**4).reduce_mod(2)


def test_constant_term_examples():
    # ct[(x^-1+2+x)^2] = C(4,2): both via the package and the oracle
    assert (CATALAN_P**2).constant_term() == math.comb(4, 2) == 6
    oracle = brute_ct_power({-1: 1, 0: 2, 1: 1}, 3, 0) \
        - brute_ct_power({-1: 1, 0: 2, 1: 1}, 3, -1)
    assert oracle == math.comb(6, 3) - math.comb(6, 4) == 5
    assert (CATALAN_P**3 * CATALAN_Q).constant_term() == oracle
    two_vars = LaurentPoly(2, {(1, 0): 1, (0, 1): 1})     # x + y
    assert two_vars.constant_term() == 0


def test_degree():
    assert CATALAN_P.degree() == 1
    assert LaurentPoly.constant(7).degree() == 0
    with pytest.raises(ZeroPolynomial):
        LaurentPoly.zero(2).degree()
    assert (CATALAN_P**5).degree() == 5


def test_section_examples():
    assert (CATALAN_P**2).section(2) == XINV + 6 + X
    two_vars = LaurentPoly(2, {(1, 0): 1, (0, 1): 1})
    assert two_vars.section(3) == LaurentPoly.zero(2)
    f = CATALAN_P**3
    assert f.section(1) == f


def test_substitute_power_examples():
    assert (1 + X).substitute_power(2) == 1 + X**2
    c = LaurentPoly.constant(9)
    assert c.substitute_power(5) == c
    assert (XINV + X).substitute_power(3) == XINV**3 + X**3


def test_ct_sequence_examples():
    cat = ct_sequence(CATALAN_P, CATALAN_Q, 4)
    assert cat == [math.comb(2 * n, n) - math.comb(2 * n, n + 1)
                   for n in range(5)]
    assert ct_sequence(LaurentPoly.one(1), LaurentPoly.constant(3), 2) == \
        [3, 3, 3]
    assert ct_sequence(CATALAN_P, LaurentPoly.one(1), 6)[0] == 1


def test_ring_laws_random():
    rng = random.Random(42)

    def rand_poly(nvars):
        terms = {}
        for _ in range(rng.randint(1, 6)):
            e = tuple(rng.randint(-3, 3) for _ in range(nvars))
            terms[e] = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        return LaurentPoly(nvars, terms)

    for nvars in (1, 2, 3):
        for _ in range(25):
            f, g, h = rand_poly(nvars), rand_poly(nvars), rand_poly(nvars)
            assert (f * g) * h == f * (g * h)
            assert f * (g + h) == f * g + f * h
            assert f * g == g * f


def test_frobenius_congruence_random():
    # f^(p^r) = f(x^p)^(p^(r-1)) mod p^r, over random integer polynomials
    rng = random.Random(2024)
    for _ in range(40):
        nvars = rng.randint(1, 2)
        terms = {}
        for _ in range(rng.randint(1, 4)):
            e = tuple(rng.randint(-2, 2) for _ in range(nvars))
            terms[e] = rng.randint(-6, 6)
        f = LaurentPoly(nvars, terms)
        for p in (2, 3, 5, 7):
            for r in (1, 2):
                m = p**r
                lhs = f.reduce_mod(m) ** (p**r)
                rhs = f.substitute_power(p).reduce_mod(m) ** (p**(r - 1))
                assert lhs == rhs, (terms, p, r)


def test_section_substitution_adjunction():
    rng = random.Random(9)
    for _ in range(40):
        nvars = rng.randint(1, 2)

        def rand_poly():
            return LaurentPoly(nvars, {
                tuple(rng.randint(-3, 3) for _ in range(nvars)):
                    rng.randint(-5, 5)
                for _ in range(rng.randint(1, 5))})

        f, g = rand_poly(), rand_poly()
        p = rng.choice([2, 3, 5])
        assert f.substitute_power(p).section(p) == f
        lhs = ct_of_product(f, g.substitute_power(p))
        rhs = ct_of_product(f.section(p), g)
        assert lhs == rhs


def test_degree_subadditive():
    rng = random.Random(13)
    for _ in range(30):
        f = LaurentPoly(2, {(rng.randint(-3, 3), rng.randint(-3, 3)):
                            rng.randint(1, 5) for _ in range(3)})
        g = LaurentPoly(2, {(rng.randint(-3, 3), rng.randint(-3, 3)):
                            rng.randint(1, 5) for _ in range(3)})
        if f.is_zero or g.is_zero or (f * g).is_zero:
            continue
        assert (f * g).degree() <= f.degree() + g.degree()


def test_modular_and_exact_paths_agree():
    rng = random.Random(77)
    for _ in range(30):
        f = LaurentPoly(2, {(rng.randint(-2, 2), rng.randint(-2, 2)):
                            rng.randint(-9, 9) for _ in range(4)})
        g = LaurentPoly(2, {(rng.randint(-2, 2), rng.randint(-2, 2)):
                            rng.randint(-9, 9) for _ in range(4)})
        m = rng.choice([7, 121, 2209])
        assert (f * g).reduce_mod(m) == f.reduce_mod(m) * g.reduce_mod(m)
        assert (f**4).reduce_mod(m) == f.reduce_mod(m) ** 4


def test_modular_ct_sequence():
    vals = ct_sequence(CATALAN_P.reduce_mod(7), CATALAN_Q.reduce_mod(7), 6)
    exact = ct_sequence(CATALAN_P, CATALAN_Q, 6)
    assert vals == [Residue(int(v), 7) for v in exact]


def test_domain_mismatch_errors():
    with pytest.raises(VarCountMismatch):
        X + LaurentPoly.variable(0, 2)
    with pytest.raises(ModulusMismatch):
        CATALAN_P.reduce_mod(5) * CATALAN_P.reduce_mod(7)
    with pytest.raises(ModulusMismatch):
        CATALAN_P * CATALAN_P.reduce_mod(5)


def test_canonical_text_form():
    assert CATALAN_P.to_string() == "x^-1 + 2 + x"
    f = LaurentPoly(2, {(1, 2): Fraction(-3, 4), (0, 0): 1, (-1, 0): 2})
    assert f.to_string() == "2*x^-1 + 1 - 3/4*x*y^2"
    assert LaurentPoly.zero(1).to_string() == "0"


def test_immutability_and_hash():
    with pytest.raises(AttributeError):
        CATALAN_P.nvars = 3
    assert hash(CATALAN_P) == hash(XINV + 2 + X)
    assert len({CATALAN_P, XINV + 2 + X, CATALAN_Q}) == 2
