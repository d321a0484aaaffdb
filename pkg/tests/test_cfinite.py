import random
from fractions import Fraction as F

import pytest

from ctseq import unipoly
from ctseq.cfinite import CFiniteSeq, from_annihilator
from ctseq.exactnum import (NonInvertibleDenominator, Residue,
                            primes_in_range, rational_mod)

FIB = CFiniteSeq((1, 1), (0, 1))
LUCAS = CFiniteSeq((1, 1), (2, 1))
CONST1 = CFiniteSeq((1,), (1,))
POW2_PLUS1 = CFiniteSeq((-2, 3), (2, 3))         # 2^n + 1
N_TIMES_3N = CFiniteSeq((-9, 6), (0, 3))         # n * 3^n
FIVE_THEN_2N = CFiniteSeq((2,), (5, 2), offset=1)  # 5, 2, 4, 8, ...


def iter_mod_oracle(seq, index, modulus):
    """Step-by-step modular unrolling, independent of companion powering."""
    vals = [rational_mod(v, modulus).value for v in seq.initial]
    coeffs = [rational_mod(c, modulus).value for c in seq.coeffs]
    r = seq.order
    while len(vals) <= index:
        m = len(vals)
        vals.append(sum(c * vals[m - r + i] for i, c in enumerate(coeffs))
                    % modulus)
    return vals[index]


def hankel_minimal_degree(values, window):
    """Brute-force smallest d such that a monic degree-d relation holds on
    the whole window, via exact rank of the sliding value matrix."""
    from ctseq.exactnum import solve_linear
    for d in range(window + 1):
        if d == 0:
            if all(v == 0 for v in values[:window]):
                return 0
            continue
        matrix = [[values[n + i] for i in range(d)] for n in range(window)]
        rhs = [-values[n + d] for n in range(window)]
        if solve_linear(matrix, rhs) is not None:
            return d
    raise AssertionError


def test_terms_examples():
    assert FIB.terms(6) == [0, 1, 1, 2, 3, 5, 8]
    assert LUCAS.terms(4) == [2, 1, 3, 4, 7]
    assert CONST1.terms(3) == [1, 1, 1, 1]
    assert FIVE_THEN_2N.terms(4) == [5, 2, 4, 8, 16]


def test_term_mod_examples():
    assert FIB.term_mod(7, 7) == Residue(6, 7)      # F(7) = 13
    assert LUCAS.term_mod(5, 5) == Residue(1, 5)    # L(5) = 11
    assert FIB.term_mod(0, 97) == rational_mod(FIB.term(0), 97)


def test_term_mod_requires_coprime_denominators():
    half = CFiniteSeq((F(1, 2),), (1,))
    with pytest.raises(NonInvertibleDenominator):
        half.term_mod(10, 4)


def test_term_mod_matches_exact_oracle_small():
    rng = random.Random(3)
    for _ in range(25):
        order = rng.randint(1, 3)
        offset = rng.choice([0, 0, 1])
        seq = CFiniteSeq([rng.randint(-3, 3) or 1 for _ in range(order)],
                         [rng.randint(-5, 5) for _ in range(offset + order)],
                         offset)
        exact = seq.terms(300)
        for p in (7, 11, 121):
            for n in (0, 1, 5, 17, 40, 123, 299, 300):
                assert seq.term_mod(n, p) == rational_mod(exact[n], p)


def test_term_mod_huge_index_vs_iterative_oracle():
    rng = random.Random(31)
    for _ in range(10):
        order = rng.randint(1, 4)
        seq = CFiniteSeq([rng.randint(-4, 4) or 2 for _ in range(order)],
                         [rng.randint(-6, 6) for _ in range(order)])
        index = rng.randint(10**4, 10**5)
        modulus = rng.choice([49, 121, 101])
        assert seq.term_mod(index, modulus).value == \
            iter_mod_oracle(seq, index, modulus)


def test_minimal_annihilator_examples():
    assert FIB.minimal_annihilator() == (F(-1), F(-1), F(1))
    assert FIVE_THEN_2N.minimal_annihilator() == (F(0), F(-2), F(1))
    assert CONST1.minimal_annihilator() == (F(-1), F(1))
    zero = CFiniteSeq((1,), (0,))
    assert zero.minimal_annihilator() == (F(1),)


def test_minimal_annihilator_divides_defining():
    for seq in (FIB, LUCAS, POW2_PLUS1, N_TIMES_3N, FIVE_THEN_2N):
        # defining annihilator x^offset * (x^r - c_{r-1} x^{r-1} - ... - c_0)
        known = tuple([-c for c in seq.coeffs] + [F(1)])
        for _ in range(seq.offset):
            known = unipoly.mul(known, (F(0), F(1)))
        _, rem = unipoly.divmod_exact(known, seq.minimal_annihilator())
        assert rem == ()


def test_minimal_annihilator_vs_hankel_oracle():
    rng = random.Random(17)
    for _ in range(40):
        order = rng.randint(1, 4)
        offset = rng.choice([0, 0, 0, 1, 2])
        seq = CFiniteSeq([F(rng.randint(-3, 3), rng.randint(1, 2)) or 1
                          for _ in range(order)],
                         [rng.randint(-4, 4) for _ in range(offset + order)],
                         offset)
        window = offset + order
        values = seq.terms(2 * window - 1) if window else []
        ann = seq.minimal_annihilator()
        assert len(ann) - 1 == hankel_minimal_degree(values, window)


def test_characteristic_roots_examples():
    roots = POW2_PLUS1.characteristic_roots()
    assert roots.rational_roots == ((F(1), 1), (F(2), 1))
    assert roots.zero_multiplicity == 0 and roots.residual_degree == 0

    roots = FIB.characteristic_roots()
    assert roots.rational_roots == () and roots.zero_multiplicity == 0
    assert roots.residual_degree == 2

    roots = N_TIMES_3N.characteristic_roots()
    assert roots.rational_roots == ((F(3), 2),)
    assert roots.residual_degree == 0


def test_characteristic_roots_reassemble():
    for seq in (FIB, LUCAS, POW2_PLUS1, N_TIMES_3N, FIVE_THEN_2N,
                CFiniteSeq((0, 0, 0), (7, 0, 5))):
        roots = seq.characteristic_roots()
        poly = (F(1),)
        for _ in range(roots.zero_multiplicity):
            poly = unipoly.mul(poly, (F(0), F(1)))
        poly = unipoly.mul(poly, unipoly.from_roots(roots.rational_roots))
        poly = unipoly.mul(poly, roots.residual)
        assert poly == seq.minimal_annihilator()


def test_trace_decomposition_examples():
    dec = LUCAS.trace_decomposition()
    assert dec is not None
    assert dec.constant == 0
    assert dec.parts == ((F(1), (F(1), F(-1), F(-1))),)   # 1 - x - x^2

    assert FIB.trace_decomposition() is None

    dec = CFiniteSeq((2,), (1,)).trace_decomposition()     # 2^n
    assert dec is not None and dec.constant == 0
    assert dec.parts == ((F(1), (F(1), F(-2))),)           # 1 - 2x


def test_trace_decomposition_rejects_multiplicity():
    assert N_TIMES_3N.trace_decomposition() is None


def test_trace_sequence_satisfies_gauss():
    # traces of integer matrices: Gauss congruences at every prime
    for seq in (LUCAS, CFiniteSeq((2,), (1,)),
                CFiniteSeq((-3, 0, 2), (3, 0, 4))):
        if seq.trace_decomposition() is None:
            continue
        for p in primes_in_range(7, 40):
            for n in range(1, 21):
                assert seq.term_mod(p * n, p) == seq.term_mod(n, p)


def test_separable_part_examples():
    n_plus1_2n = CFiniteSeq((-4, 4), (1, 4))               # (n+1) 2^n
    sep = n_plus1_2n.separable_part()
    assert sep.terms(5) == [1, 2, 4, 8, 16, 32]

    assert LUCAS.separable_part() == LUCAS.minimized()

    delta = CFiniteSeq((0, 0, 0), (7, 0, 5))
    assert delta.separable_part().terms(4) == [7, 0, 0, 0, 0]


def test_separable_part_idempotent():
    rng = random.Random(23)
    cases = [CFiniteSeq((-4, 4), (1, 4)), LUCAS, FIB,
             CFiniteSeq((0, 0, 0), (7, 0, 5)), FIVE_THEN_2N]
    for _ in range(10):
        order = rng.randint(1, 3)
        cases.append(CFiniteSeq(
            [rng.randint(-3, 3) or 1 for _ in range(order)],
            [rng.randint(-4, 4) for _ in range(order)]))
    for seq in cases:
        sep = seq.separable_part()
        assert sep.separable_part() == sep


def test_generating_function_examples():
    num, den = FIB.generating_function()
    assert num == (F(0), F(1)) and den == (F(1), F(-1), F(-1))
    num, den = CONST1.generating_function()
    assert num == (F(1),) and den == (F(1), F(-1))
    num, den = FIVE_THEN_2N.generating_function()
    assert den == (F(1), F(-2))
    # series oracle: numerator = sequence * denominator, truncated
    vals = FIVE_THEN_2N.terms(6)
    series = [sum(vals[i] * (den[k - i] if k - i < len(den) else 0)
                  for i in range(k + 1)) for k in range(7)]
    assert list(num) + [0] * (7 - len(num)) == series
    assert num == (F(5), F(-8))


def test_generating_function_taylor_roundtrip():
    rng = random.Random(5)
    for _ in range(15):
        order = rng.randint(1, 3)
        offset = rng.choice([0, 1])
        seq = CFiniteSeq([rng.randint(-3, 3) or 1 for _ in range(order)],
                         [rng.randint(-5, 5) for _ in range(offset + order)],
                         offset)
        num, den = seq.generating_function()
        vals = seq.terms(12)
        # multiply the series back: (sum vals x^n) * den == num
        for k in range(13):
            conv = sum(vals[i] * (den[k - i] if k - i < len(den) else 0)
                       for i in range(k + 1))
            expect = num[k] if k < len(num) else 0
            assert conv == expect


def test_from_annihilator_roundtrip():
    for seq in (FIB, FIVE_THEN_2N, CFiniteSeq((0, 0, 0), (7, 0, 5))):
        ann = seq.minimal_annihilator()
        need = max(len(ann) - 1, 1)
        rebuilt = from_annihilator(ann, seq.terms(need - 1))
        assert rebuilt.terms(10) == seq.terms(10)
