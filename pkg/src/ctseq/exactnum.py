"""Exact arithmetic substrate: rationals, residue rings, primes, CRT.

Rationals are `fractions.Fraction` (eagerly normalized, denominator > 0),
re-exported as `Rational`.  Residues carry their modulus; mixing moduli is
a hard error, never a silent coercion.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

Rational = Fraction


class NonInvertibleDenominator(ArithmeticError):
    """The denominator shares a factor with the modulus (prime too small)."""


class ModulusMismatch(ValueError):
    """Arithmetic between residues of different moduli."""


_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:\s*/\s*\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse the canonical text form `a/b` or `a` (optional leading sign)."""
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(text.replace(" ", ""))


def format_rational(q: Fraction) -> str:
    return str(q)


class Residue:
    """Element of Z/m, with m carried along (a prime power in practice)."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        if modulus <= 0:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "value", value % modulus)
        object.__setattr__(self, "modulus", modulus)

    def __setattr__(self, name, val):
        raise AttributeError("Residue is immutable")

    def _other_value(self, other):
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ModulusMismatch(
                    f"moduli differ: {self.modulus} vs {other.modulus}")
            return other.value
        if isinstance(other, int):
            return other % self.modulus
        if isinstance(other, Fraction):
            return rational_mod(other, self.modulus).value
        return None

    def __add__(self, other):
        v = self._other_value(other)
        if v is None:
            return NotImplemented
        return Residue(self.value + v, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._other_value(other)
        if v is None:
            return NotImplemented
        return Residue(self.value - v, self.modulus)

    def __rsub__(self, other):
        v = self._other_value(other)
        if v is None:
            return NotImplemented
        return Residue(v - self.value, self.modulus)

    def __mul__(self, other):
        v = self._other_value(other)
        if v is None:
            return NotImplemented
        return Residue(self.value * v, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return Residue(pow(self.value, exponent, self.modulus), self.modulus)

    def inverse(self) -> "Residue":
        g = math.gcd(self.value, self.modulus)
        if g != 1:
            raise NonInvertibleDenominator(
                f"{self.value} not invertible mod {self.modulus}")
        return Residue(pow(self.value, -1, self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __repr__(self):
        return f"Residue({self.value}, mod {self.modulus})"


def rational_mod(q: Fraction | int, m: int) -> Residue:
    """Reduce a rational mod m: numerator times inverse denominator.

    Raises NonInvertibleDenominator when gcd(denominator, m) > 1, which
    signals that the prime is not large enough for this input.
    """
    if m <= 0:
        raise ValueError("modulus must be positive")
    if isinstance(q, int):
        return Residue(q, m)
    num, den = q.numerator, q.denominator
    if den == 1:
        return Residue(num, m)
    if math.gcd(den, m) != 1:
        raise NonInvertibleDenominator(f"denominator {den} not coprime to {m}")
    return Residue(num * pow(den, -1, m), m)


# Deterministic Miller-Rabin witness set, valid for all n < 3.3 * 10**24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_in_range(lo: int, hi: int) -> list[int]:
    """Exactly the primes in [lo, hi], ascending (segmented sieve)."""
    lo = max(lo, 2)
    if hi < lo:
        return []
    root = math.isqrt(hi)
    base = _sieve_upto(root)
    size = hi - lo + 1
    flags = bytearray([1]) * size
    for p in base:
        start = max(p * p, (lo + p - 1) // p * p)
        for k in range(start, hi + 1, p):
            flags[k - lo] = 0
    return [lo + i for i in range(size) if flags[i] and lo + i >= 2]


def _sieve_upto(n: int) -> list[int]:
    if n < 2:
        return []
    flags = bytearray([1]) * (n + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if flags[p]:
            for k in range(p * p, n + 1, p):
                flags[k] = 0
    return [i for i in range(2, n + 1) if flags[i]]


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (desk-scale inputs)."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of |n|, ascending."""
    n = abs(n)
    if n == 0:
        raise ValueError("0 has no finite divisor list")
    out = [1]
    for p, e in factorize(n).items():
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def crt(residues: list[int], moduli: list[int]) -> tuple[int, int]:
    """Combine pairwise-coprime congruences; returns (x, prod moduli)."""
    x, m = 0, 1
    for r, n in zip(residues, moduli):
        g = math.gcd(m, n)
        if g != 1:
            raise ValueError("moduli not pairwise coprime")
        # x' = x mod m, x' = r mod n
        x = (x + m * ((r - x) * pow(m, -1, n) % n)) % (m * n)
        m *= n
    return x, m


def rational_reconstruct(x: int, m: int, num_bound: int,
                         den_bound: int) -> Fraction | None:
    """Find a/b with a = b*x (mod m), |a| <= num_bound, 0 < b <= den_bound.

    Wang's algorithm: complete (finds the unique such fraction) whenever
    2 * num_bound * den_bound < m.  Returns None when no candidate exists.
    """
    x %= m
    r0, r1 = m, x
    s0, s1 = 0, 1
    while r1 > num_bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0:
        return None
    a, b = (r1, s1) if s1 > 0 else (-r1, -s1)
    if b > den_bound or math.gcd(a, b) != 1 or math.gcd(b, m) != 1:
        return None
    return Fraction(a, b)


def solve_linear(matrix: list[list[Fraction]],
                 rhs: list[Fraction]) -> list[Fraction] | None:
    """Solve M*x = rhs exactly over the rationals.

    Returns one solution (free variables set to 0), or None when the
    system is inconsistent.  Inputs are not modified.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    a = [[Fraction(v) for v in row] + [Fraction(rhs[i])]
         for i, row in enumerate(matrix)]
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [vi - f * vr for vi, vr in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if a[i][cols] != 0:
            return None
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = a[i][cols]
    return x
