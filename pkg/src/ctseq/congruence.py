"""Prime-sweep engines: Gauss congruences, the shifted constant-term
congruence A(p^r n + k) = A(k) ct(P^(p^(r-1) n)) mod p^r, its stability
corollary, the single-constant falsifier, and hypergeometric propagation.

Verdicts quantify only over admissible primes; every skipped prime is
recorded with its reason.  The falsifier is sound relative to a height
bound: "no constant" always means "no constant of bounded height".
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .cfinite import CFiniteSeq
from .exactnum import (NonInvertibleDenominator, Residue, crt,
                       primes_in_range, rational_mod, rational_reconstruct)
from .hypergeom import AlphaVanishes, HypergeomSeq, NotPAdicIntegral
from .laurent import LaurentPoly, ct_of_product, ct_sequence

ALL_PASS = "AllPass"
COUNTEREXAMPLE = "Counterexample"
FALSIFIED = "FalsifiedNoConstant"


class ZeroBase(ArithmeticError):
    """Every available base term A(k) is zero: no constant can be
    anchored (and no violation was found to falsify with)."""


@dataclass(frozen=True)
class CheckRecord:
    p: int
    r: int
    n: int
    k: int
    lhs: int | None
    rhs: int | None
    passed: bool


@dataclass
class CongruenceReport:
    subject: str
    grid: dict
    checks: list
    skipped: list
    verdict: str
    extra: dict = field(default_factory=dict)

    @property
    def all_pass(self) -> bool:
        return self.verdict == ALL_PASS

    def counterexample(self) -> CheckRecord | None:
        return next((c for c in self.checks if not c.passed), None)

    def to_json_dict(self) -> dict:
        return {
            "subject": self.subject,
            "grid": self.grid,
            "checks": [{
                "p": c.p, "r": c.r, "n": c.n, "k": c.k,
                "lhs": c.lhs, "rhs": c.rhs, "pass": c.passed,
            } for c in sorted(self.checks,
                              key=lambda c: (c.p, c.r, c.n, c.k))],
            "skipped": sorted(self.skipped,
                              key=lambda s: (s["p"], s.get("k", -1))),
            "verdict": self.verdict,
            "extra": {k: v for k, v in sorted(self.extra.items())},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=False,
                          default=str)


# -- evaluators ---------------------------------------------------------


class CFiniteEvaluator:
    """Exact terms by unrolling; huge-index residues by companion-matrix
    powering.  A prime is admissible when it exceeds the floor and
    divides no denominator of the recurrence data."""

    def __init__(self, seq: CFiniteSeq, description: str = "c-finite",
                 prime_floor: int = 5):
        self.seq = seq
        self.description = description
        self.prime_floor = prime_floor
        self._cache = list(seq.initial)
        self._denoms = {q.denominator
                        for q in list(seq.coeffs) + list(seq.initial)}

    def term(self, n: int) -> Fraction:
        if n >= len(self._cache):
            self._cache = self.seq.terms(max(n, 2 * len(self._cache)))
        return self._cache[n]

    def term_mod(self, n: int, p: int, r: int = 1) -> Residue:
        return self.seq.term_mod(n, p**r)

    def admissible(self, p: int) -> str | None:
        if p <= self.prime_floor:
            return f"p <= prime floor {self.prime_floor}"
        if any(d % p == 0 for d in self._denoms):
            return "p divides a denominator of the recurrence data"
        return None


class HypergeomEvaluator:
    def __init__(self, seq: HypergeomSeq, description: str = "hypergeometric",
                 prime_floor: int = 5):
        self.seq = seq
        self.description = description
        self.prime_floor = prime_floor

    def term(self, n: int) -> Fraction:
        return self.seq.term(n)

    def term_mod(self, n: int, p: int, r: int = 1) -> Residue:
        return self.seq.term_mod(n, p, r)

    def admissible(self, p: int) -> str | None:
        if p <= self.prime_floor:
            return f"p <= prime floor {self.prime_floor}"
        if self.seq.a0.denominator % p == 0:
            return "p divides the denominator of A(0)"
        return None


class CTEvaluator:
    """Explicit ct(P^n Q) subject: exact terms by iterated products,
    residues at huge indices by modular binary powering."""

    def __init__(self, P: LaurentPoly, Q: LaurentPoly,
                 description: str = "constant-term", prime_floor: int = 1):
        P._check_compat(Q)
        self.P = P
        self.Q = Q
        self.description = description
        self.prime_floor = prime_floor
        self._exact: list = []

    def term(self, n: int) -> Fraction:
        if n >= len(self._exact):
            self._exact = ct_sequence(self.P, self.Q,
                                      max(n, 2 * len(self._exact) + 4))
        return Fraction(self._exact[n])

    def term_mod(self, n: int, p: int, r: int = 1) -> Residue:
        m = p**r
        power = self.P.reduce_mod(m) ** n
        return ct_of_product(power, self.Q.reduce_mod(m))

    def admissible(self, p: int) -> str | None:
        if p <= self.prime_floor:
            return f"p <= prime floor {self.prime_floor}"
        for poly in (self.P, self.Q):
            for c in poly.terms.values():
                if Fraction(c).denominator % p == 0:
                    return "p divides a coefficient denominator"
        return None


# -- checkers -----------------------------------------------------------


def gauss_check(evaluator, p_max: int, r_max: int, n_max: int,
                primes=None) -> CongruenceReport:
    """A(p^r n) = A(p^(r-1) n) mod p^r over the admissible prime grid."""
    primes = list(primes) if primes is not None else primes_in_range(2, p_max)
    checks, skipped = [], []
    for p in primes:
        reason = evaluator.admissible(p)
        if reason:
            skipped.append({"p": p, "reason": reason})
            continue
        try:
            for r in range(1, r_max + 1):
                for n in range(n_max + 1):
                    lhs = evaluator.term_mod(p**r * n, p, r)
                    rhs = evaluator.term_mod(p**(r - 1) * n, p, r)
                    checks.append(CheckRecord(p, r, n, 0, lhs.value,
                                              rhs.value, lhs == rhs))
        except (NonInvertibleDenominator, NotPAdicIntegral) as exc:
            skipped.append({"p": p, "reason": str(exc)})
            checks = [c for c in checks if c.p != p]
    verdict = ALL_PASS if all(c.passed for c in checks) else COUNTEREXAMPLE
    report = CongruenceReport(
        subject=evaluator.description,
        grid={"primes": [p for p in primes
                         if not any(s["p"] == p for s in skipped)],
              "r_max": r_max, "n_max": n_max},
        checks=checks, skipped=skipped, verdict=verdict)
    if verdict == COUNTEREXAMPLE:
        c = report.counterexample()
        report.extra["counterexample"] = {"p": c.p, "r": c.r, "n": c.n,
                                          "lhs": c.lhs, "rhs": c.rhs}
    return report


def _shift_admissibility(P, Q, primes, k_max):
    """Exact per-k degree bounds deg(P^k Q) and coefficient checks."""
    pk_q = []
    cur = Q
    for k in range(k_max + 1):
        pk_q.append(cur)
        cur = cur * P
    degs = [0 if f.is_zero else f.degree() for f in pk_q]
    return pk_q, degs


def ct_shift_check(P: LaurentPoly, Q: LaurentPoly, primes, r_max: int,
                   n_max: int, k_max: int,
                   evaluator=None) -> CongruenceReport:
    """A(p^r n + k) = A(k) * ct(P^(p^(r-1) n)) mod p^r for admissible
    primes, with admissibility p > deg(P^k Q) computed exactly per k.

    The left side comes from `evaluator` when given (e.g. a C-finite
    backend with fast huge-index residues); otherwise it is computed by
    modular powering of the explicit (P, Q) pair.
    """
    subject = evaluator.description if evaluator else "constant-term"
    backend = evaluator or CTEvaluator(P, Q)
    pk_q, degs = _shift_admissibility(P, Q, primes, k_max)
    a_k = [f.constant_term() for f in pk_q]
    checks, skipped = [], []
    for p in primes:
        reason = backend.admissible(p)
        if reason:
            skipped.append({"p": p, "reason": reason})
            continue
        for k in range(k_max + 1):
            if p <= degs[k]:
                skipped.append({
                    "p": p, "k": k,
                    "reason": f"p <= deg(P^{k} Q) = {degs[k]}"})
                continue
            try:
                for r in range(1, r_max + 1):
                    m = p**r
                    ak_res = rational_mod(Fraction(a_k[k]), m)
                    p_mod = P.reduce_mod(m)
                    for n in range(n_max + 1):
                        lhs = backend.term_mod(p**r * n + k, p, r)
                        ct_pow = (p_mod ** (p**(r - 1) * n)).constant_term()
                        rhs = ak_res * ct_pow
                        checks.append(CheckRecord(p, r, n, k, lhs.value,
                                                  rhs.value, lhs == rhs))
            except (NonInvertibleDenominator, NotPAdicIntegral) as exc:
                skipped.append({"p": p, "k": k, "reason": str(exc)})
                checks = [c for c in checks if not (c.p == p and c.k == k)]
    verdict = ALL_PASS if all(c.passed for c in checks) else COUNTEREXAMPLE
    report = CongruenceReport(
        subject=subject,
        grid={"primes": list(primes), "r_max": r_max,
              "n_max": n_max, "k_max": k_max},
        checks=checks, skipped=skipped, verdict=verdict)
    if verdict == COUNTEREXAMPLE:
        c = report.counterexample()
        report.extra["counterexample"] = {"p": c.p, "r": c.r, "n": c.n,
                                          "k": c.k}
    return report


def stability_check(P: LaurentPoly, Q: LaurentPoly, primes, s: int, r: int,
                    n_max: int, k_max: int,
                    evaluator=None) -> CongruenceReport:
    """A(p^s n + k) = A(p^r n + k) mod p^r for s >= r >= 1."""
    if not s >= r >= 1:
        raise ValueError("need s >= r >= 1")
    subject = evaluator.description if evaluator else "constant-term"
    backend = evaluator or CTEvaluator(P, Q)
    _, degs = _shift_admissibility(P, Q, primes, k_max)
    checks, skipped = [], []
    for p in primes:
        reason = backend.admissible(p)
        if reason:
            skipped.append({"p": p, "reason": reason})
            continue
        for k in range(k_max + 1):
            if p <= degs[k]:
                skipped.append({
                    "p": p, "k": k,
                    "reason": f"p <= deg(P^{k} Q) = {degs[k]}"})
                continue
            try:
                for n in range(n_max + 1):
                    lhs = backend.term_mod(p**s * n + k, p, r)
                    rhs = backend.term_mod(p**r * n + k, p, r)
                    checks.append(CheckRecord(p, r, n, k, lhs.value,
                                              rhs.value, lhs == rhs))
            except (NonInvertibleDenominator, NotPAdicIntegral) as exc:
                skipped.append({"p": p, "k": k, "reason": str(exc)})
                checks = [c for c in checks if not (c.p == p and c.k == k)]
    verdict = ALL_PASS if all(c.passed for c in checks) else COUNTEREXAMPLE
    return CongruenceReport(
        subject=subject,
        grid={"primes": list(primes), "s": s, "r": r,
              "n_max": n_max, "k_max": k_max},
        checks=checks, skipped=skipped, verdict=verdict)


# -- the single-constant falsifier ---------------------------------------


def constant_c_falsifier(evaluator, primes, k_max: int = 0,
                         height_bound: int = 10**6) -> CongruenceReport:
    """Test whether some single rational c satisfies A(p+k) = c A(k) mod p
    for every admissible prime and every k <= k_max.

    Residues are combined by CRT and a candidate c is recovered by
    rational reconstruction (full prime set first, then leave-one-out so
    a prime dividing den(c) is excused).  The falsified verdict always
    means: no c with numerator and denominator below the height bound.
    """
    bases = [evaluator.term(k) for k in range(k_max + 1)]
    checks, skipped = [], []
    rho: dict[int, int] = {}
    conflicts = []
    zero_viol = []
    ratio_cells = {}
    for p in primes:
        reason = evaluator.admissible(p)
        if reason:
            skipped.append({"p": p, "reason": reason})
            continue
        seen = {}
        for k, base in enumerate(bases):
            try:
                lhs = evaluator.term_mod(p + k, p, 1)
            except (NonInvertibleDenominator, NotPAdicIntegral) as exc:
                skipped.append({"p": p, "k": k, "reason": str(exc)})
                continue
            if base == 0:
                passed = lhs.value == 0
                checks.append(CheckRecord(p, 1, 1, k, lhs.value, 0, passed))
                if not passed:
                    zero_viol.append((p, k, lhs.value))
                continue
            try:
                base_res = rational_mod(base, p)
            except NonInvertibleDenominator as exc:
                skipped.append({"p": p, "k": k, "reason": str(exc)})
                continue
            if base_res.value == 0:
                skipped.append({"p": p, "k": k,
                                "reason": "p divides the numerator of A(k)"})
                continue
            value = (lhs * base_res.inverse()).value
            seen[k] = value
            ratio_cells[(p, k)] = lhs.value
        if seen:
            values = set(seen.values())
            if len(values) > 1:
                conflicts.append((p, dict(seen)))
            rho[p] = min(values)
    if not rho and not zero_viol:
        raise ZeroBase(
            f"every base A(k), k <= {k_max}, is zero at all admissible "
            "primes; no constant can be anchored")
    c, c_skipped_prime = _reconstruct_constant(rho, height_bound) \
        if rho and not conflicts else (None, None)
    for (p, k), lhs_value in sorted(ratio_cells.items()):
        if c is None:
            checks.append(CheckRecord(p, 1, 1, k, lhs_value, None, False))
            continue
        try:
            rhs = rational_mod(c * bases[k], p)
        except NonInvertibleDenominator:
            skipped.append({"p": p, "k": k,
                            "reason": "p divides the denominator of c*A(k)"})
            continue
        checks.append(CheckRecord(p, 1, 1, k, lhs_value, rhs.value,
                                  lhs_value == rhs.value))
    ok = c is not None and not zero_viol and not conflicts \
        and all(r.passed for r in checks)
    extra = {"height_bound": height_bound}
    if ok:
        extra["c"] = str(c)
        if c_skipped_prime:
            extra["excused_prime"] = c_skipped_prime
            skipped.append({"p": c_skipped_prime,
                            "reason": "p divides the denominator of c"})
        verdict = ALL_PASS
    else:
        verdict = FALSIFIED
        if zero_viol:
            extra["zero_base_violations"] = zero_viol[:4]
        if conflicts:
            extra["same_prime_conflicts"] = conflicts[:2]
        pair = _incompatible_pair(rho)
        if pair:
            extra["incompatible_pair"] = pair
    report = CongruenceReport(
        subject=evaluator.description,
        grid={"primes": list(primes), "k_max": k_max},
        checks=checks, skipped=skipped, verdict=verdict, extra=extra)
    return report


def _reconstruct_constant(rho: dict[int, int], height_bound: int):
    """CRT + Wang reconstruction; returns (c, excused prime or None)."""
    plist = sorted(rho)
    x, m = crt([rho[p] for p in plist], plist)
    cand = rational_reconstruct(x, m, height_bound, height_bound)
    if cand is not None and _verify_constant(cand, rho):
        return cand, None
    for drop in plist:
        rest = [p for p in plist if p != drop]
        if not rest:
            continue
        x, m = crt([rho[p] for p in rest], rest)
        cand = rational_reconstruct(x, m, height_bound, height_bound)
        if cand is not None and cand.denominator % drop == 0 \
                and _verify_constant(cand, {p: rho[p] for p in rest}):
            return cand, drop
    return None, None


def _verify_constant(c: Fraction, rho: dict[int, int]) -> bool:
    for p, value in rho.items():
        try:
            if rational_mod(c, p).value != value:
                return False
        except NonInvertibleDenominator:
            return False
    return True


def _incompatible_pair(rho: dict[int, int]):
    """Two primes whose residues admit no common constant of the small
    pairwise height isqrt(p*q/2)."""
    plist = sorted(rho)[:12]
    for i, p in enumerate(plist):
        for q in plist[i + 1:]:
            x, m = crt([rho[p], rho[q]], [p, q])
            bound = max(math.isqrt(m // 2), 1)
            if rational_reconstruct(x, m, bound, bound) is None:
                return {"primes": [p, q], "height_bound": bound}
    return None


# -- hypergeometric propagation ------------------------------------------


def hypergeom_propagation_check(h: HypergeomSeq, primes, k_max: int,
                                c: Fraction | None = None,
                                prime_floor: int = 5,
                                height_bound: int = 10**6) -> CongruenceReport:
    """Once the base congruence A(p) = c A(0) holds at a prime, check that
    A(p+k) = c A(k) follows for 1 <= k <= k_max (skipping primes dividing
    alpha(k)).  Primes whose base residue disagrees with c are reported
    but their propagation rows are vacuous.

    Only hypergeometric sequences qualify; the first-order recurrence is
    what propagates the base case.
    """
    if not isinstance(h, HypergeomSeq):
        raise TypeError("propagation requires a HypergeomSeq")
    for k in range(k_max + 1):
        if h.alpha_at(k) == 0:
            raise AlphaVanishes(k)
    base_terms = h.terms(k_max)
    checks, skipped = [], []
    if h.a0 == 0:
        return CongruenceReport(
            subject="hypergeometric", grid={"primes": list(primes),
                                            "k_max": k_max},
            checks=[], skipped=[], verdict=ALL_PASS,
            extra={"c": "0", "note": "zero sequence"})
    rho = {}
    for p in primes:
        if p <= prime_floor:
            skipped.append({"p": p, "reason": f"p <= prime floor {prime_floor}"})
            continue
        if h.a0.denominator % p == 0 or h.a0.numerator % p == 0:
            skipped.append({"p": p, "reason": "p divides A(0)"})
            continue
        try:
            lhs = h.term_mod(p, p)
            rho[p] = (lhs * rational_mod(h.a0, p).inverse()).value
        except (NonInvertibleDenominator, NotPAdicIntegral) as exc:
            skipped.append({"p": p, "reason": str(exc)})
    if c is None:
        c = _derive_constant(rho, height_bound)
    if c is None:
        return CongruenceReport(
            subject="hypergeometric",
            grid={"primes": list(primes), "k_max": k_max},
            checks=[], skipped=skipped, verdict=FALSIFIED,
            extra={"note": "no base constant of bounded height found",
                   "height_bound": height_bound})
    base_fail = []
    for p, value in sorted(rho.items()):
        lhs_value = value * rational_mod(h.a0, p).value % p
        try:
            rhs_value = rational_mod(c * h.a0, p).value
        except NonInvertibleDenominator:
            rhs_value = None
        base_ok = rhs_value is not None and lhs_value == rhs_value
        checks.append(CheckRecord(p, 1, 1, 0, lhs_value, rhs_value, base_ok))
        if not base_ok:
            base_fail.append(p)
            continue
        for k in range(1, k_max + 1):
            if h.alpha_at(k) % p == 0:
                skipped.append({"p": p, "k": k,
                                "reason": "p divides alpha(k)"})
                continue
            try:
                lhs = h.term_mod(p + k, p)
                rhs = rational_mod(c * base_terms[k], p)
            except (NonInvertibleDenominator, NotPAdicIntegral) as exc:
                skipped.append({"p": p, "k": k, "reason": str(exc)})
                continue
            checks.append(CheckRecord(p, 1, 1, k, lhs.value, rhs.value,
                                      lhs == rhs))
    prop_fail = [r for r in checks if r.k >= 1 and not r.passed]
    verdict = ALL_PASS if not prop_fail else COUNTEREXAMPLE
    extra = {"c": str(c), "base_fail_primes": base_fail}
    return CongruenceReport(
        subject="hypergeometric",
        grid={"primes": list(primes), "k_max": k_max},
        checks=checks, skipped=skipped, verdict=verdict, extra=extra)


def _derive_constant(rho: dict[int, int],
                     height_bound: int) -> Fraction | None:
    """Best base constant supported by the residues.

    Tries the full prime set and leave-one-out first; failing that (the
    base may be constant only on residue classes of p), reconstructs a
    candidate from every prime pair at the pair's intrinsic height bound
    and keeps the one verified by the most primes, refined by Wang
    reconstruction over its whole supporting set.
    """
    if len(rho) < 2:
        return None
    plist = sorted(rho)
    candidates = []
    x, m = crt([rho[p] for p in plist], plist)
    candidates.append(rational_reconstruct(x, m, height_bound, height_bound))
    for drop in plist:
        rest = [p for p in plist if p != drop]
        x, m = crt([rho[p] for p in rest], rest)
        candidates.append(rational_reconstruct(x, m, height_bound,
                                               height_bound))
    for i, p in enumerate(plist):
        for q in plist[i + 1:]:
            x, m = crt([rho[p], rho[q]], [p, q])
            bound = min(height_bound, max(math.isqrt(m // 2), 1))
            candidates.append(rational_reconstruct(x, m, bound, bound))
    best, best_support = None, []
    for cand in candidates:
        if cand is None:
            continue
        support = [p for p in plist
                   if _verify_constant(cand, {p: rho[p]})]
        if len(support) > len(best_support) or (
                len(support) == len(best_support) and best is not None
                and _height(cand) < _height(best)):
            best, best_support = cand, support
    if best is None or len(best_support) < 2:
        return None
    x, m = crt([rho[p] for p in best_support], best_support)
    bound = min(height_bound, max(math.isqrt(m // 2), 1))
    refined = rational_reconstruct(x, m, bound, bound)
    return refined if refined is not None else best


def _height(q: Fraction) -> int:
    return max(abs(q.numerator), q.denominator)
