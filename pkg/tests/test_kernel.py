"""The compiled and pure multiplication kernels must agree exactly."""

import random
from fractions import Fraction

import pytest

from ctseq import _kernel, _pycore


def random_terms(rng, nvars, nterms, span=5, fractions=False):
    terms = {}
    for _ in range(nterms):
        e = tuple(rng.randint(-span, span) for _ in range(nvars))
        c = rng.randint(-99, 99)
        if fractions and rng.random() < 0.4:
            c = Fraction(c, rng.randint(1, 9))
        if c:
            terms[e] = c
    return terms


@pytest.mark.parametrize("nvars", [1, 2, 3])
def test_exact_kernels_agree(nvars):
    rng = random.Random(100 + nvars)
    for _ in range(30):
        t1 = random_terms(rng, nvars, rng.randint(1, 25), fractions=True)
        t2 = random_terms(rng, nvars, rng.randint(1, 25), fractions=True)
        got = _kernel.mul_terms(t1, t2, nvars)
        want = _pycore.mul_terms_exact(t1, t2)
        assert got == want


@pytest.mark.parametrize("modulus", [2, 7, 121, 2209])
def test_modular_kernels_agree(modulus):
    rng = random.Random(modulus)
    for _ in range(25):
        t1 = {e: c % modulus for e, c in
              random_terms(rng, 2, rng.randint(1, 30)).items()}
        t2 = {e: c % modulus for e, c in
              random_terms(rng, 2, rng.randint(1, 30)).items()}
        t1 = {e: c for e, c in t1.items() if c}
        t2 = {e: c for e, c in t2.items() if c}
        got = _kernel.mul_terms(t1, t2, 2, modulus)
        want = _pycore.mul_terms_mod(t1, t2, modulus)
        assert got == want


def test_huge_exponents_fall_back_to_pure():
    # exponent span too wide to pack into int64
    t1 = {(10**17,): 3, (-(10**17),): 2}
    t2 = {(10**17,): 5}
    got = _kernel.mul_terms(t1, t2, 1)
    assert got == {(2 * 10**17,): 15, (0,): 10}


def test_compiled_kernel_direct_paths():
    if _kernel.kernel_name() != "compiled":
        pytest.skip("extension not built")
    rng = random.Random(5)
    t1 = random_terms(rng, 3, 40)
    t2 = random_terms(rng, 3, 40)
    want = _pycore.mul_terms_exact(t1, t2)
    assert _kernel.mul_terms(t1, t2, 3) == want
    m = 97
    t1m = {e: c % m for e, c in t1.items() if c % m}
    t2m = {e: c % m for e, c in t2.items() if c % m}
    assert _kernel.mul_terms(t1m, t2m, 3, m) == \
        _pycore.mul_terms_mod(t1m, t2m, m)
