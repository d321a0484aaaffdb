"""Acceptance criteria, one test per criterion, each printing a
pass/fail line (run pytest with -s to see them inline) and asserting its
runtime budget.
"""

import math
import random
import time
from fractions import Fraction as F

from ctseq.cfinite import CFiniteSeq, from_annihilator
from ctseq.congruence import (ALL_PASS, FALSIFIED, CFiniteEvaluator,
                              constant_c_falsifier, gauss_check)
from ctseq.ctkit import (Reason, build_witness, decide_combination,
                         decide_single_ct, verify_witness)
from ctseq.exactnum import primes_in_range, rational_mod, solve_linear
from ctseq.hypergeom import (christol_check, family_Am, family_B, phi,
                             residue_a, witness_Am)
from ctseq.laurent import LaurentPoly, ct_sequence

FIB = CFiniteSeq((1, 1), (0, 1))
LUCAS = CFiniteSeq((1, 1), (2, 1))


class Budget:
    def __init__(self, name, seconds):
        self.name = name
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, *rest):
        elapsed = time.perf_counter() - self.start
        status = "PASS" if exc_type is None else "FAIL"
        print(f"acceptance {self.name}: {status} ({elapsed:.2f}s)")
        if exc_type is None:
            assert elapsed < self.seconds, \
                f"{self.name} exceeded {self.seconds}s budget: {elapsed:.2f}s"
        return False


def test_criterion_01_catalan_witness():
    with Budget("1 catalan witness", 5):
        P = LaurentPoly(1, {(-1,): 1, (0,): 2, (1,): 1})
        Q = LaurentPoly(1, {(0,): 1, (1,): -1})
        got = ct_sequence(P, Q, 20)
        want = [math.comb(2 * n, n) - math.comb(2 * n, n + 1)
                for n in range(21)]
        assert got == want


def test_criterion_02_apery_witness():
    with Budget("2 apery witness", 60):
        x, y, z = (LaurentPoly.variable(i, 3) for i in range(3))
        inv = LaurentPoly(3, {(-1, -1, -1): 1})
        P = (x + y) * (z + 1) * (x + y + z) * (y + z + 1) * inv
        got = ct_sequence(P, LaurentPoly.one(3), 8)
        want = [sum(math.comb(n, k)**2 * math.comb(n + k, k)**2
                    for k in range(n + 1)) for n in range(9)]
        assert want[0] == 1 and want[1] == 5
        assert got == want


def test_criterion_03_fibonacci_falsified():
    with Budget("3 fibonacci falsified", 5):
        decision = decide_combination(FIB)
        assert not decision.representable
        assert decision.reason is Reason.IRRATIONAL_ROOTS_PRESENT
        report = constant_c_falsifier(CFiniteEvaluator(FIB, "fibonacci"),
                                      primes_in_range(7, 100))
        assert report.verdict == FALSIFIED
        for rec in report.checks:
            want = 1 if rec.p % 5 in (1, 4) else rec.p - 1
            assert rec.lhs == want, (rec.p, rec.lhs)


def test_criterion_04_lucas():
    with Budget("4 lucas", 30):
        dec = LUCAS.trace_decomposition()
        assert dec is not None
        assert dec.parts == ((F(1), (F(1), F(-1), F(-1))),)
        report = gauss_check(CFiniteEvaluator(LUCAS, "lucas"), 100, 2, 10)
        assert report.verdict == ALL_PASS
        decision = decide_combination(LUCAS)
        assert not decision.representable


def test_criterion_05_power2_plus_one():
    with Budget("5 2^n + 1", 1):
        seq = CFiniteSeq((-2, 3), (2, 3))
        assert not decide_single_ct(seq).representable
        assert decide_combination(seq).min_terms == 2
        w = build_witness(seq)
        report = verify_witness(seq, w, window=51)
        assert report.passed and report.certified and report.window >= 51


def test_criterion_06_am_witnesses():
    with Budget("6 A_m witnesses", 30):
        for m in (2, 3, 4, 6):
            w = witness_Am(m)
            got = ct_sequence(w.terms[0].P, w.terms[0].Q, 25)
            want = family_Am(m).terms(25)
            assert [F(v) for v in got] == want, m


def test_criterion_07_wilson_residues():
    with Budget("7 wilson residues", 60):
        for m in range(2, 13):
            seen = set()
            for p in primes_in_range(m + 1, 300):
                if m % p == 0:
                    continue
                a = residue_a(m, p, 1)
                exact = rational_mod(family_Am(m).term(p) * F(m)**(2 * p), p)
                assert exact.value == a * (m - a) % p, (m, p)
                seen.add(a * (m - a))
            # phi(m)/2 distinct values; ceiling because a = m-a when m = 2
            assert len(seen) == (phi(m) + 1) // 2, m


def test_criterion_08_b_sequence():
    with Budget("8 B sequence", 30):
        B = family_B()
        assert B.terms(4) == [1, 20, 1350, 115500, 10972500]
        for p in primes_in_range(7, 300):
            want = 20 if p % 5 in (1, 4) else 30
            assert B.term_mod(p, p) == rational_mod(F(want), p), p


def test_criterion_09_christol_dichotomy():
    with Budget("9 christol dichotomy", 60):
        for p in primes_in_range(11, 300):
            if p % 9 == 1:
                want = 20
            elif p % 9 == 8:
                want = 80
            else:
                continue
            chk = christol_check(p, mode="modular")
            assert chk.matches and chk.actual == rational_mod(F(want), p), p


def test_criterion_10_property_suites():
    with Budget("10 property suites", 120):
        _frobenius_congruence_suite()
        _eval_mod_oracle_suite()
        _minimal_annihilator_oracle_suite()
        _witness_round_trip_suite()


def _frobenius_congruence_suite():
    rng = random.Random(2718)
    combos = [(p, r) for p in (2, 3, 5, 7) for r in (1, 2)]
    for i in range(200):
        nvars = rng.randint(1, 2)
        terms = {}
        for _ in range(rng.randint(1, 4)):
            e = tuple(rng.randint(-2, 2) for _ in range(nvars))
            terms[e] = rng.randint(-6, 6)
        f = LaurentPoly(nvars, terms)
        p, r = combos[i % len(combos)]
        m = p**r
        lhs = f.reduce_mod(m) ** (p**r)
        rhs = f.substitute_power(p).reduce_mod(m) ** (p**(r - 1))
        assert lhs == rhs, (terms, p, r)


def _eval_mod_oracle_suite():
    rng = random.Random(314)
    for case in range(100):
        order = rng.randint(1, 4)
        seq = CFiniteSeq([rng.randint(-4, 4) or 1 for _ in range(order)],
                         [rng.randint(-6, 6) for _ in range(order)])
        p = rng.choice([7, 11])
        r = rng.choice([1, 2])
        modulus = p**r
        if case < 2:
            index = 10**6                 # exercise the top of the range
        else:
            index = int(10 ** rng.uniform(1, 6))
        got = seq.term_mod(index, modulus).value
        # oracle: straight-line modular unrolling
        vals = [int(v) % modulus for v in seq.initial]
        coeffs = [int(c) % modulus for c in seq.coeffs]
        while len(vals) <= index:
            n = len(vals)
            vals.append(sum(c * vals[n - order + i]
                            for i, c in enumerate(coeffs)) % modulus)
        assert got == vals[index], (seq, index, modulus)


def _minimal_annihilator_oracle_suite():
    rng = random.Random(1618)
    for _ in range(40):
        order = rng.randint(1, 4)
        offset = rng.choice([0, 0, 1, 2])
        seq = CFiniteSeq([F(rng.randint(-3, 3)) or F(1)
                          for _ in range(order)],
                         [rng.randint(-4, 4) for _ in range(offset + order)],
                         offset)
        window = offset + order
        values = seq.terms(2 * window - 1)
        # Hankel-window brute force: smallest monic relation degree
        want = None
        for d in range(window + 1):
            if d == 0:
                if all(v == 0 for v in values[:window]):
                    want = 0
                    break
                continue
            matrix = [[values[n + i] for i in range(d)]
                      for n in range(window)]
            rhs = [-values[n + d] for n in range(window)]
            if solve_linear(matrix, rhs) is not None:
                want = d
                break
        assert len(seq.minimal_annihilator()) - 1 == want


def _witness_round_trip_suite():
    rng = random.Random(137)
    pool = [F(1), F(2), F(3), F(-1), F(-2), F(1, 2), F(5), F(-3)]
    for _ in range(100):
        k = rng.randint(1, 3)
        roots = rng.sample(pool, k)
        mults = [rng.randint(1, 2) for _ in range(k)]
        m0 = rng.choice([0, 0, 1, 2])
        coeff_sets = [[F(rng.randint(-4, 4)) for _ in range(m - 1)]
                      + [F(rng.randint(1, 4))] for m in mults]
        deltas = [F(rng.randint(1, 5)) for _ in range(m0)]
        width = m0 + sum(mults)

        def value(n):
            total = F(0)
            for lam, cs in zip(roots, coeff_sets):
                total += sum(c * n**j for j, c in enumerate(cs)) * lam**n
            if n < m0:
                total += deltas[n]
            return total

        values = [value(n) for n in range(2 * width + 8)]
        from ctseq import unipoly
        ann = (F(1),)
        for _ in range(m0):
            ann = unipoly.mul(ann, (F(0), F(1)))
        for lam, mult in zip(roots, mults):
            ann = unipoly.mul(ann, unipoly.pow_int((-lam, F(1)), mult))
        seq = from_annihilator(ann, values)
        decision = decide_combination(seq)
        assert decision.representable
        assert decision.min_terms == k + (1 if m0 else 0)
        w = build_witness(seq)
        assert len(w.terms) == decision.min_terms
        assert verify_witness(seq, w).passed
