"""Hypergeometric sequences alpha(n) A(n+1) = beta(n) A(n): exact and
p-adically tracked modular evaluation, the two-parameter rising-factorial
family A_m, its Wilson-theorem residue prediction, the degree-9 example
sequence, and constant-term witnesses for m in {2, 3, 4, 6}.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from . import unipoly
from .ctkit import CTWitness, WitnessTerm, binomial_product_to_ct
from .exactnum import Residue, factorize, rational_mod
from .laurent import LaurentPoly, ct_sequence


class AlphaVanishes(ArithmeticError):
    """The leading recurrence coefficient vanishes at a needed index."""

    def __init__(self, n):
        super().__init__(f"alpha({n}) = 0; the sequence stops at n = {n}")
        self.n = n


class NotPAdicIntegral(ArithmeticError):
    """The requested term has negative p-adic valuation."""


class NotCoprime(ValueError):
    pass


class WrongResidueClass(ValueError):
    """The predicted residue is only defined for p = +-1 mod 9."""


class NotInFamily(ValueError):
    """Constant-term witnesses exist only for m in {2, 3, 4, 6}."""


def rising_factorial(x, n: int) -> Fraction:
    """(x)_n = x (x+1) ... (x+n-1); empty product for n = 0."""
    if n < 0:
        raise ValueError("rising factorial needs n >= 0")
    out = Fraction(1)
    x = Fraction(x)
    for i in range(n):
        out *= x + i
    return out


@dataclass(frozen=True)
class HypergeomSeq:
    """First-order recurrence alpha(n) A(n+1) = beta(n) A(n), A(0) = a0.

    alpha and beta are integer polynomials (ascending coefficients);
    alpha must not vanish at any nonnegative integer that is evaluated.
    """

    alpha: tuple
    beta: tuple
    a0: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(int(c) for c in self.alpha))
        object.__setattr__(self, "beta", tuple(int(c) for c in self.beta))
        object.__setattr__(self, "a0", Fraction(self.a0))
        if not any(self.alpha):
            raise ValueError("alpha must be a nonzero polynomial")

    def alpha_at(self, n: int) -> int:
        return sum(c * n**i for i, c in enumerate(self.alpha))

    def beta_at(self, n: int) -> int:
        return sum(c * n**i for i, c in enumerate(self.beta))

    def terms(self, N: int) -> list[Fraction]:
        """Exact A(0), ..., A(N)."""
        out = [self.a0]
        for n in range(N):
            a = self.alpha_at(n)
            if a == 0:
                raise AlphaVanishes(n)
            out.append(out[-1] * self.beta_at(n) / a)
        return out

    def term(self, n: int) -> Fraction:
        return self.terms(n)[n]

    def term_mod(self, n: int, p: int, r: int = 1) -> Residue:
        """A(n) mod p^r via the factored product, tracking the p-adic
        valuation and the unit part separately so indices well past the
        exact-bigint comfort zone stay cheap.

        Raises NotPAdicIntegral when the net valuation is negative.
        """
        modulus = p**r
        num, den = self.a0.numerator, self.a0.denominator
        if num == 0:
            return Residue(0, modulus)
        val, unit = _split_valuation(num, p)
        dval, dunit = _split_valuation(den, p)
        val -= dval
        unit = unit * pow(dunit, -1, modulus) % modulus
        for j in range(n):
            a = self.alpha_at(j)
            if a == 0:
                raise AlphaVanishes(j)
            b = self.beta_at(j)
            if b == 0:
                return Residue(0, modulus)
            bval, bunit = _split_valuation(b, p)
            aval, aunit = _split_valuation(a, p)
            val += bval - aval
            unit = unit * bunit % modulus * pow(aunit, -1, modulus) % modulus
        if val < 0:
            raise NotPAdicIntegral(
                f"term {n} has p-adic valuation {val} at p = {p}")
        return Residue(unit * pow(p, val, modulus), modulus)

    def scaled(self, s) -> "HypergeomSeq":
        """The sequence s^n * A(n) (same alpha up to denominator of s)."""
        s = Fraction(s)
        alpha = tuple(c * s.denominator for c in self.alpha)
        beta = tuple(c * s.numerator for c in self.beta)
        return HypergeomSeq(alpha, beta, self.a0)

    def nonvanishing_horizon(self) -> int | None:
        """Smallest nonnegative integer root of alpha, if any."""
        roots = [int(x) for x, _ in unipoly.rational_roots(
            tuple(Fraction(c) for c in self.alpha))
            if x.denominator == 1 and x >= 0]
        return min(roots) if roots else None


def _split_valuation(n: int, p: int) -> tuple[int, int]:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def family_Am(m: int) -> HypergeomSeq:
    """A_m(n) = (1/m)_n (1 - 1/m)_n / n!^2 as a first-order recurrence:
    m^2 (n+1)^2 A(n+1) = (mn+1)(mn+m-1) A(n)."""
    if m < 2:
        raise ValueError("family needs m >= 2")
    alpha = (m * m, 2 * m * m, m * m)                 # m^2 (n+1)^2
    beta = unipoly.mul((Fraction(1), Fraction(m)),
                       (Fraction(m - 1), Fraction(m)))
    return HypergeomSeq(alpha, tuple(int(c) for c in beta), Fraction(1))


def family_B() -> HypergeomSeq:
    """B(n) = 5^(3n) (1/5)_n (4/5)_n / n!^2 = 1, 20, 1350, ..."""
    return family_Am(5).scaled(125)


def christol_seq() -> HypergeomSeq:
    """(1/9)_n (4/9)_n (5/9)_n / (n!^2 (1/3)_n), the globally bounded
    sequence whose diagonal status is open."""
    beta = _poly_product((1, 9), (4, 9), (5, 9))
    alpha = tuple(243 * c for c in _poly_product((1, 1), (1, 1), (1, 3)))
    seq = HypergeomSeq(alpha, beta, Fraction(1))
    return seq


def _poly_product(*linear) -> tuple:
    out = (Fraction(1),)
    for c0, c1 in linear:
        out = unipoly.mul(out, (Fraction(c0), Fraction(c1)))
    return tuple(int(c) for c in out)


@functools.cache
def _christol_selftest() -> bool:
    # recurrence transcription check against the rising-factorial formula
    seq = christol_seq()
    vals = seq.terms(50)
    for n in range(51):
        direct = (rising_factorial(Fraction(1, 9), n)
                  * rising_factorial(Fraction(4, 9), n)
                  * rising_factorial(Fraction(5, 9), n)
                  / (math.factorial(n)**2
                     * rising_factorial(Fraction(1, 3), n)))
        if vals[n] != direct:
            raise AssertionError(f"recurrence transcription wrong at {n}")
    return True


def residue_a(m: int, p: int, r: int = 1) -> int:
    """The unique a in {1, ..., m-1} with a*p = r (mod m)."""
    if math.gcd(m, p) != 1:
        raise NotCoprime(f"gcd({m}, {p}) > 1")
    if math.gcd(r, m) != 1:
        raise NotCoprime(f"gcd({r}, {m}) > 1")
    return r * pow(p, -1, m) % m


def predicted_Am_residue(m: int, p: int) -> Residue:
    """Wilson-theorem prediction: m^(2p) A_m(p) = a(m-a) mod p."""
    if p <= m:
        raise ValueError("need p > m")
    a = residue_a(m, p, 1)
    return Residue(a * (m - a), p)


def phi(m: int) -> int:
    """Euler totient by trial factorization."""
    if m < 1:
        raise ValueError("totient needs m >= 1")
    out = m
    for q in factorize(m):
        out = out // q * (q - 1)
    return out


@dataclass(frozen=True)
class ChristolCheck:
    p: int
    residue_class: int            # p mod 9
    actual: Residue               # 3^(5p) A(p) mod p
    expected: Residue             # 20 or 80 mod p
    matches: bool


def christol_check(p: int, mode: str = "modular") -> ChristolCheck:
    """Compare 3^(5p) A(p) mod p against the proven 20 / 80 dichotomy.

    Only defined for p = +-1 (mod 9); other classes are refused rather
    than extrapolated.
    """
    cls = p % 9
    if p <= 9 or cls not in (1, 8):
        raise WrongResidueClass(f"p = {p} is not +-1 mod 9 (or too small)")
    _christol_selftest()
    seq = christol_seq()
    if mode == "exact":
        value = seq.term(p) * Fraction(3) ** (5 * p)
        actual = rational_mod(value, p)
    elif mode == "modular":
        actual = seq.scaled(243).term_mod(p, p)
    else:
        raise ValueError("mode must be 'exact' or 'modular'")
    expected = Residue(20 if cls == 1 else 80, p)
    return ChristolCheck(p, cls, actual, expected, actual == expected)


_WITNESS_DATA = {
    2: ([(2, 1), (2, 1)], Fraction(1, 16)),
    3: ([(3, 2), (2, 1)], Fraction(1, 27)),
    4: ([(4, 2), (2, 1)], Fraction(1, 64)),
    6: ([(6, 3), (3, 1)], Fraction(1, 432)),
}


def witness_Am(m: int) -> CTWitness:
    """Single-term witness ct(P^n) = A_m(n), from the binomial-product
    identities behind the m in {2, 3, 4, 6} classification."""
    if m not in _WITNESS_DATA:
        raise NotInFamily(f"m = {m} is not in {{2, 3, 4, 6}}")
    factors, scale = _WITNESS_DATA[m]
    P = binomial_product_to_ct(factors, scale)
    # transcription guard: the identity must hold at n = 1
    if ct_sequence(P, LaurentPoly.one(P.nvars), 1)[1] != family_Am(m).term(1):
        raise AssertionError(f"witness scale for m = {m} is wrong")
    return CTWitness((WitnessTerm(Fraction(1), P, LaurentPoly.one(P.nvars)),))
