"""Decision procedures and explicit witnesses for constant-term
representability of C-finite sequences.

A representable sequence gets a witness A(n) = sum of w_i*ct(P_i^n Q_i)
built from the (x + root) kernels; verification certifies equality for
all n by window agreement of two sequences with a known common monic
recurrence.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .cfinite import CFiniteSeq
from .exactnum import NonInvertibleDenominator, rational_mod, solve_linear
from .laurent import LaurentPoly, ct_sequence, default_var_names


class NotRepresentable(ValueError):
    """Witness construction asked for a sequence that is not a
    combination of constant terms."""


class InvalidFactor(ValueError):
    """Binomial factor (a, b) must satisfy 1 <= b <= a."""


class Reason(enum.Enum):
    ZERO_SEQUENCE = "ZeroSequence"
    SINGLE_RATIONAL_ROOT = "SingleRationalRoot"
    MULTIPLE_RATIONAL_ROOTS = "MultipleRationalRoots"
    IRRATIONAL_ROOTS_PRESENT = "IrrationalRootsPresent"


@dataclass(frozen=True)
class Decision:
    representable: bool
    min_terms: int | None
    reason: Reason
    root_count: int | None = None


@dataclass(frozen=True)
class WitnessTerm:
    weight: Fraction
    P: LaurentPoly
    Q: LaurentPoly


@dataclass(frozen=True)
class CTWitness:
    """Asserts A(n) = sum over terms of weight * ct(P^n Q)."""

    terms: tuple

    def sequence(self, N: int) -> list:
        out = [Fraction(0)] * (N + 1)
        for t in self.terms:
            vals = ct_sequence(t.P, t.Q, N)
            out = [a + t.weight * v for a, v in zip(out, vals)]
        return [v if isinstance(v, int) or v.denominator != 1 else int(v)
                for v in out]

    def to_json_dict(self) -> dict:
        return {
            "terms": [{
                "weight": str(t.weight),
                "vars": list(default_var_names(t.P.nvars)),
                "P": t.P.to_string(),
                "Q": t.Q.to_string(),
            } for t in self.terms]
        }


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    window: int
    certified: bool
    first_mismatch: tuple | None = None   # (index, expected, got)


def decide_single_ct(seq: CFiniteSeq) -> Decision:
    """Is the sequence a single constant term?  Yes exactly when there is
    one characteristic root (0 counted) and it is rational."""
    if seq.is_zero():
        return Decision(True, 0, Reason.ZERO_SEQUENCE)
    roots = seq.characteristic_roots()
    if roots.residual_degree > 0:
        return Decision(False, None, Reason.IRRATIONAL_ROOTS_PRESENT)
    k = roots.distinct_count
    if k == 1:
        return Decision(True, 1, Reason.SINGLE_RATIONAL_ROOT)
    return Decision(False, None, Reason.MULTIPLE_RATIONAL_ROOTS, root_count=k)


def decide_combination(seq: CFiniteSeq) -> Decision:
    """Smallest number of constant-term summands, when one exists."""
    if seq.is_zero():
        return Decision(True, 0, Reason.ZERO_SEQUENCE)
    roots = seq.characteristic_roots()
    if roots.residual_degree > 0:
        return Decision(False, None, Reason.IRRATIONAL_ROOTS_PRESENT)
    k = roots.distinct_count
    reason = (Reason.SINGLE_RATIONAL_ROOT if k == 1
              else Reason.MULTIPLE_RATIONAL_ROOTS)
    return Decision(True, k, reason, root_count=k)


def build_witness(seq: CFiniteSeq) -> CTWitness:
    """One (x + root) term per distinct rational root, plus a pure-power
    term carrying the finite-support deviation when 0 is a root.

    ct((x + L)^n * (L/x)^r) = binom(n, r) * L^n, so the per-root Q encodes
    the binomial-basis expansion of that root's polynomial part.
    """
    decision = decide_combination(seq)
    if not decision.representable:
        raise NotRepresentable(decision.reason.value)
    if decision.reason is Reason.ZERO_SEQUENCE:
        return CTWitness(())
    roots = seq.characteristic_roots()
    m0 = roots.zero_multiplicity
    width = m0 + sum(m for _, m in roots.rational_roots)
    vals = seq.terms(width - 1)
    columns = []
    layout = []
    for j in range(m0):
        columns.append([Fraction(1 if n == j else 0) for n in range(width)])
        layout.append(("delta", j))
    for lam, mult in roots.rational_roots:
        for r in range(mult):
            columns.append([math.comb(n, r) * lam**n for n in range(width)])
            layout.append((lam, r))
    matrix = [[columns[c][n] for c in range(len(columns))]
              for n in range(width)]
    sol = solve_linear(matrix, vals)
    if sol is None:
        raise AssertionError("interpolation against root powers failed")
    terms = []
    for lam, mult in sorted(roots.rational_roots, reverse=True):
        q_terms = {}
        for (tag, r), b in zip(layout, sol):
            if tag == lam and b != 0:
                q_terms[(-r,)] = b * lam**r
        P = LaurentPoly(1, {(1,): 1, (0,): lam})
        terms.append(WitnessTerm(Fraction(1), P, LaurentPoly(1, q_terms)))
    if m0 > 0:
        q_terms = {}
        for (tag, j), b in zip(layout, sol):
            if tag == "delta" and b != 0:
                q_terms[(-j,)] = b
        terms.append(WitnessTerm(Fraction(1),
                                 LaurentPoly(1, {(1,): 1}),
                                 LaurentPoly(1, q_terms)))
    return CTWitness(tuple(terms))


def _term_order_bound(t: WitnessTerm) -> int | None:
    """Recurrence order of ct(P^n Q) when P = a*x + b; None otherwise."""
    if t.P.nvars != 1 or t.P.modulus is not None:
        return None
    if any(e[0] not in (0, 1) for e in t.P.terms):
        return None
    neg_span = max((-e[0] for e in t.Q.terms if e[0] <= 0), default=-1)
    return neg_span + 1 if neg_span >= 0 else 1


def verify_witness(subject, witness: CTWitness,
                   window: int | None = None) -> VerificationReport:
    """Check sum of weighted constant terms against the subject sequence.

    For a C-finite subject and linear-kernel witness terms the window is
    chosen so both sides satisfy a common monic recurrence of order below
    it; agreement then certifies equality for every n.  Other subjects or
    term shapes are compared on the given (or default) window only.
    """
    orders = [_term_order_bound(t) for t in witness.terms]
    certifiable = isinstance(subject, CFiniteSeq) and None not in orders
    if certifiable:
        d_seq = max(len(subject.minimal_annihilator()) - 1, 0)
        cert_window = d_seq + sum(orders) + 1
        window = max(window or 0, cert_window)
    elif window is None:
        window = 21
    if isinstance(subject, CFiniteSeq):
        expected = subject.terms(window - 1)
    else:
        expected = list(subject)[:window]
        window = len(expected)
    got = witness.sequence(window - 1) if window else []
    for n, (e, g) in enumerate(zip(expected, got)):
        if e != g:
            return VerificationReport(False, window, False, (n, e, g))
    return VerificationReport(True, window, certifiable)


def binomial_product_to_ct(factors, scale=1) -> LaurentPoly:
    """P with ct(P^n) = scale^n * prod binom(a_i*n, b_i*n), one variable
    per factor: P = scale * prod (1+x_i)^a_i / x_i^b_i."""
    factors = list(factors)
    for a, b in factors:
        if not (isinstance(a, int) and isinstance(b, int) and 1 <= b <= a):
            raise InvalidFactor(f"factor ({a}, {b}) needs 1 <= b <= a")
    nvars = max(len(factors), 1)
    out = LaurentPoly.constant(Fraction(scale), nvars)
    for i, (a, b) in enumerate(factors):
        base = LaurentPoly(nvars, {
            tuple(0 if j != i else 1 for j in range(nvars)): 1,
            (0,) * nvars: 1,
        })
        shift = LaurentPoly(nvars, {
            tuple(0 if j != i else -b for j in range(nvars)): 1})
        out = out * (base ** a) * shift
    return out


@dataclass(frozen=True)
class MintonAnalogReport:
    equality_holds: bool                 # A(n) = A(0) * ct(P^n)
    gauss_r1_holds: bool                 # A(pn) = A(n) mod p
    gauss_higher_holds: bool             # A(p^r n) = A(p^(r-1) n) mod p^r
    equality_failures: tuple = ()
    gauss_failures: tuple = ()
    skipped_primes: tuple = ()


def check_minton_analog(P: LaurentPoly, Q: LaurentPoly, N: int,
                        primes, r_max: int = 2) -> MintonAnalogReport:
    """Probe the three equivalent characterizations of Q-free constant
    terms on a finite range: exact equality with A(0)*ct(P^n), and the
    prime-power congruences A(p^r n) = A(p^(r-1) n)."""
    seq = ct_sequence(P, Q, N)
    pure = ct_sequence(P, LaurentPoly.one(P.nvars, P.modulus), N)
    eq_fail = tuple(n for n in range(N + 1)
                    if seq[n] != seq[0] * pure[n])
    gauss_fail = []
    skipped = []
    for p in primes:
        if N // p < 1:
            skipped.append((p, "index range too small"))
            continue
        try:
            for r in range(1, r_max + 1):
                step = p**r
                for n in range(1, N // step + 1):
                    lhs = rational_mod(Fraction(seq[step * n]), step)
                    rhs = rational_mod(Fraction(seq[step // p * n]), step)
                    if lhs != rhs:
                        gauss_fail.append((p, r, n, lhs.value, rhs.value))
        except NonInvertibleDenominator as exc:
            skipped.append((p, str(exc)))
    r1_fail = [f for f in gauss_fail if f[1] == 1]
    return MintonAnalogReport(
        equality_holds=not eq_fail,
        gauss_r1_holds=not r1_fail,
        gauss_higher_holds=not gauss_fail,
        equality_failures=eq_fail[:5],
        gauss_failures=tuple(gauss_fail[:5]),
        skipped_primes=tuple(skipped))


class IntegralRootsStatus(enum.Enum):
    CONSISTENT = "Consistent"
    VIOLATION = "Violation"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class IntegralRootsReport:
    status: IntegralRootsStatus
    detail: str


def integral_roots_check(seq: CFiniteSeq, window: int) -> IntegralRootsReport:
    """Integer sequences whose roots are all rational must have integer
    roots; a Violation verdict signals a bug, not new mathematics."""
    vals = seq.terms(window)
    if any(v.denominator != 1 for v in vals):
        return IntegralRootsReport(IntegralRootsStatus.NOT_APPLICABLE,
                                   "sequence terms are not all integral")
    roots = seq.characteristic_roots()
    if roots.residual_degree > 0:
        return IntegralRootsReport(IntegralRootsStatus.NOT_APPLICABLE,
                                   "irrational characteristic roots present")
    bad = [lam for lam, _ in roots.rational_roots if lam.denominator != 1]
    if bad:
        return IntegralRootsReport(
            IntegralRootsStatus.VIOLATION,
            f"integral sequence with non-integer roots {bad}")
    return IntegralRootsReport(IntegralRootsStatus.CONSISTENT,
                               "all rational roots are integers")
