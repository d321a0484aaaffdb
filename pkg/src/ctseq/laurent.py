"""Sparse multivariate Laurent polynomials over exact rationals or Z/m.

Terms live in a dict keyed by exponent tuples (negative exponents
allowed).  A polynomial either has exact coefficients (ints/Fractions)
or carries a modulus, in which case coefficients are ints in [1, m-1].
Values are immutable; all operations return new polynomials.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import _kernel
from .exactnum import ModulusMismatch, Residue, rational_mod


class VarCountMismatch(ValueError):
    """Operation between polynomials in different numbers of variables."""


class ZeroPolynomial(ValueError):
    """The zero polynomial has no degree."""


_DEFAULT_NAMES = ("x", "y", "z", "w")


def default_var_names(nvars: int) -> tuple[str, ...]:
    if nvars <= len(_DEFAULT_NAMES):
        return _DEFAULT_NAMES[:nvars]
    return tuple(f"x{i + 1}" for i in range(nvars))


def _norm_exact(c):
    # canonical form: integer-valued coefficients stored as int
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    return c


class LaurentPoly:
    __slots__ = ("nvars", "terms", "modulus")

    def __init__(self, nvars: int, terms=None, modulus: int | None = None):
        if nvars < 1:
            raise ValueError("need at least one variable")
        if modulus is not None and modulus < 1:
            raise ValueError("modulus must be positive")
        clean: dict = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars:
                raise VarCountMismatch(
                    f"exponent {e} has length {len(e)}, expected {nvars}")
            if modulus is not None:
                c = c % modulus if isinstance(c, int) else \
                    rational_mod(c, modulus).value
            else:
                c = _norm_exact(c)
            if c == 0:
                continue
            if e in clean:
                raise ValueError(f"duplicate exponent {e}")
            clean[e] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "modulus", modulus)

    def __setattr__(self, name, val):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------

    @classmethod
    def constant(cls, c, nvars: int = 1, modulus: int | None = None):
        return cls(nvars, {(0,) * nvars: c}, modulus)

    @classmethod
    def zero(cls, nvars: int = 1, modulus: int | None = None):
        return cls(nvars, {}, modulus)

    @classmethod
    def one(cls, nvars: int = 1, modulus: int | None = None):
        return cls.constant(1, nvars, modulus)

    @classmethod
    def variable(cls, index: int, nvars: int, modulus: int | None = None):
        e = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, {e: 1}, modulus)

    @classmethod
    def monomial(cls, exponents, coeff=1, modulus: int | None = None):
        exponents = tuple(exponents)
        return cls(len(exponents), {exponents: coeff}, modulus)

    # -- ring structure ----------------------------------------------

    def _check_compat(self, other: "LaurentPoly"):
        if self.nvars != other.nvars:
            raise VarCountMismatch(
                f"{self.nvars} variables vs {other.nvars}")
        if self.modulus != other.modulus:
            raise ModulusMismatch(
                f"modulus {self.modulus} vs {other.modulus}")

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            if isinstance(other, (int, Fraction)):
                other = LaurentPoly.constant(other, self.nvars, self.modulus)
            else:
                return NotImplemented
        self._check_compat(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly(self.nvars, terms, self.modulus)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.nvars,
                           {e: -c for e, c in self.terms.items()},
                           self.modulus)

    def __sub__(self, other):
        return self + (-other if isinstance(other, LaurentPoly) else -1 * other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            self._check_compat(other)
            terms = _kernel.mul_terms(self.terms, other.terms, self.nvars,
                                      self.modulus)
            return LaurentPoly(self.nvars, terms, self.modulus)
        if isinstance(other, Residue):
            if self.modulus != other.modulus:
                raise ModulusMismatch(
                    f"modulus {self.modulus} vs {other.modulus}")
            other = other.value
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return LaurentPoly.zero(self.nvars, self.modulus)
            return LaurentPoly(self.nvars,
                               {e: c * other for e, c in self.terms.items()},
                               self.modulus)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined here")
        result = LaurentPoly.one(self.nvars, self.modulus)
        if n == 0:
            return result
        if self.modulus is None:
            content, base = self._content_split()
            if content != 1:
                return (base ** n) * (Fraction(content) ** n)
        base = self
        while True:
            if n & 1:
                result = result * base
            n >>= 1
            if n == 0:
                return result
            base = base * base

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (self.nvars == other.nvars and self.modulus == other.modulus
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, self.modulus,
                     frozenset(self.terms.items())))

    # -- inspection --------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self):
        """Coefficient of the all-zero exponent vector (0 when absent)."""
        c = self.terms.get((0,) * self.nvars, 0)
        if self.modulus is not None:
            return Residue(c, self.modulus)
        return c

    def degree(self) -> int:
        """Largest |exponent| of any variable in any term."""
        if not self.terms:
            raise ZeroPolynomial("the zero polynomial has no degree")
        return max(abs(v) for e in self.terms for v in e)

    def coefficient(self, exponents):
        c = self.terms.get(tuple(exponents), 0)
        if self.modulus is not None:
            return Residue(c, self.modulus)
        return c

    # -- structural operators -----------------------------------------

    def section(self, p: int) -> "LaurentPoly":
        """Keep terms whose exponents are all divisible by p, divided by p."""
        if p < 1:
            raise ValueError("section index must be positive")
        terms = {
            tuple(v // p for v in e): c
            for e, c in self.terms.items()
            if all(v % p == 0 for v in e)
        }
        return LaurentPoly(self.nvars, terms, self.modulus)

    def substitute_power(self, p: int) -> "LaurentPoly":
        """x -> x^p in every variable (exponents multiplied by p)."""
        if p < 1:
            raise ValueError("substitution power must be positive")
        return LaurentPoly(self.nvars,
                           {tuple(v * p for v in e): c
                            for e, c in self.terms.items()},
                           self.modulus)

    def reduce_mod(self, m: int) -> "LaurentPoly":
        """Reduce an exact polynomial mod m (denominators must be units)."""
        if self.modulus is not None:
            raise ValueError("polynomial already modular")
        return LaurentPoly(self.nvars,
                           {e: rational_mod(Fraction(c), m).value
                            for e, c in self.terms.items()}, m)

    def _content_split(self):
        """Write self = content * primitive with integer primitive part."""
        if self.modulus is not None or not self.terms:
            return 1, self
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            if isinstance(c, int):
                num_gcd = math.gcd(num_gcd, c)
            else:
                num_gcd = math.gcd(num_gcd, c.numerator)
                den_lcm = den_lcm * c.denominator // math.gcd(
                    den_lcm, c.denominator)
        content = Fraction(num_gcd, den_lcm)
        if content == 1:
            return 1, self
        primitive = LaurentPoly(
            self.nvars,
            {e: int(c / content) for e, c in self.terms.items()})
        return content, primitive

    # -- formatting ----------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items())

    def to_string(self, names=None) -> str:
        if not self.terms:
            return "0"
        names = tuple(names) if names else default_var_names(self.nvars)
        pieces = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                n if v == 1 else f"{n}^{v}"
                for n, v in zip(names, e) if v != 0)
            neg = (not isinstance(c, Residue)) and c < 0
            mag = -c if neg else c
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append(("-" if neg else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        mod = f", mod {self.modulus}" if self.modulus is not None else ""
        return f"<LaurentPoly {self.to_string()}{mod}>"


def ct_of_product(f: LaurentPoly, g: LaurentPoly):
    """ct(f * g) as the dot product sum f[e] * g[-e], without forming
    the full product."""
    f._check_compat(g)
    small, big = (f, g) if len(f.terms) <= len(g.terms) else (g, f)
    acc = 0
    for e, c in small.terms.items():
        other = big.terms.get(tuple(-v for v in e))
        if other is not None:
            acc += c * other
    if f.modulus is not None:
        return Residue(acc, f.modulus)
    return _norm_exact(Fraction(acc)) if isinstance(acc, Fraction) else acc


def ct_sequence(P: LaurentPoly, Q: LaurentPoly, N: int) -> list:
    """[ct(P^0 Q), ct(P^1 Q), ..., ct(P^N Q)] by iterated multiplication.

    For exact polynomials the rational content of P and Q is factored out
    so the inner products run over primitive integer coefficients.
    """
    P._check_compat(Q)
    if N < 0:
        raise ValueError("N must be nonnegative")
    zero_exp = (0,) * P.nvars
    if P.modulus is not None:
        out = []
        cur = Q.terms
        for _ in range(N + 1):
            out.append(Residue(cur.get(zero_exp, 0), P.modulus))
            cur = _kernel.mul_terms(cur, P.terms, P.nvars, P.modulus)
        return out
    s, P0 = P._content_split()
    t, Q0 = Q._content_split()
    out = []
    cur = Q0.terms
    factor = t
    for _ in range(N + 1):
        out.append(_norm_exact(Fraction(factor) * cur.get(zero_exp, 0)))
        cur = _kernel.mul_terms(cur, P0.terms, P.nvars)
        factor = factor * s
    return out
