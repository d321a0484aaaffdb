"""Univariate polynomial helpers over the rationals.

Polynomials are tuples/lists of Fractions in ascending degree order;
the zero polynomial is the empty tuple.  Everything here is exact.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .exactnum import divisors

Poly = tuple


def trim(p) -> tuple:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def deg(p) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(trim(p)) - 1


def add(p, q) -> tuple:
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
                 for i in range(n)])


def neg(p) -> tuple:
    return tuple(-c for c in p)


def sub(p, q) -> tuple:
    return add(p, neg(q))


def scale(c, p) -> tuple:
    if c == 0:
        return ()
    return tuple(c * v for v in p)


def mul(p, q) -> tuple:
    p, q = trim(p), trim(q)
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def divmod_exact(p, q) -> tuple[tuple, tuple]:
    """Polynomial division with remainder over the rationals."""
    p, q = list(trim(p)), trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    dq = len(q) - 1
    lead = q[-1]
    quot = [Fraction(0)] * max(len(p) - dq, 0)
    while len(p) - 1 >= dq and p:
        k = len(p) - 1 - dq
        f = p[-1] / lead
        quot[k] = f
        for i in range(len(q)):
            p[k + i] -= f * q[i]
        p.pop()
        while p and p[-1] == 0:
            p.pop()
    return trim(quot), tuple(p)


def divides(q, p) -> bool:
    return deg(trim(p)) >= 0 and divmod_exact(p, q)[1] == ()


def monic(p) -> tuple:
    p = trim(p)
    if not p:
        return ()
    return tuple(c / p[-1] for c in p)


def gcd(p, q) -> tuple:
    """Monic greatest common divisor."""
    p, q = trim(p), trim(q)
    while q:
        p, q = q, divmod_exact(p, q)[1]
    return monic(p)


def derivative(p) -> tuple:
    return trim([i * c for i, c in enumerate(p)][1:])


def eval_at(p, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(trim(p)):
        acc = acc * x + c
    return acc


def pow_int(p, n: int) -> tuple:
    out = (Fraction(1),)
    base = trim(p)
    while n:
        if n & 1:
            out = mul(out, base)
        base = mul(base, base)
        n >>= 1
    return out


def x_power_split(p) -> tuple[int, tuple]:
    """Split p = x^m * rest with rest(0) != 0; returns (m, rest)."""
    p = trim(p)
    if not p:
        return 0, ()
    m = next(i for i, c in enumerate(p) if c != 0)
    return m, tuple(p[m:])


def reversal(p) -> tuple:
    """x^deg(p) * p(1/x); for monic p the result has constant term 1."""
    return trim(tuple(reversed(trim(p))))


def radical(p) -> tuple:
    """Square-free part p / gcd(p, p'), monic."""
    p = monic(p)
    if deg(p) <= 0:
        return p
    g = gcd(p, derivative(p))
    return monic(divmod_exact(p, g)[0])


def integer_primitive(p) -> tuple[Fraction, tuple]:
    """Write p = c * q with q a primitive integer polynomial, c > 0."""
    p = trim(p)
    if not p:
        return Fraction(1), ()
    lcm_den = 1
    for c in p:
        lcm_den = lcm_den * c.denominator // math.gcd(lcm_den, c.denominator)
    ints = [int(c * lcm_den) for c in p]
    content = 0
    for v in ints:
        content = math.gcd(content, v)
    return Fraction(content, lcm_den), tuple(Fraction(v // content) for v in ints)


def rational_roots(p) -> list[tuple[Fraction, int]]:
    """All rational roots with multiplicities, by the rational root theorem.

    Candidates a/b with a | trailing and b | leading coefficient of the
    primitive integer form; multiplicities by repeated exact division.
    """
    p = trim(p)
    roots = []
    m0, p = x_power_split(p)
    if m0:
        roots.append((Fraction(0), m0))
    if deg(p) < 1:
        return roots
    _, q = integer_primitive(p)
    lead = int(q[-1])
    trail = int(q[0])
    seen = set()
    for a in divisors(trail):
        for b in divisors(lead):
            for cand in (Fraction(a, b), Fraction(-a, b)):
                if cand in seen:
                    continue
                seen.add(cand)
                mult = 0
                while eval_at(p, cand) == 0:
                    p = divmod_exact(p, (-cand, Fraction(1)))[0]
                    mult += 1
                if mult:
                    roots.append((cand, mult))
    return roots


def from_roots(pairs) -> tuple:
    """Monic polynomial with the given (root, multiplicity) pairs."""
    out = (Fraction(1),)
    for root, mult in pairs:
        out = mul(out, pow_int((-Fraction(root), Fraction(1)), mult))
    return out


def _mignotte_bound(p) -> int:
    # any monic integer factor of p has coefficients bounded by
    # 2^deg(p) * (l2 norm of p); crude but safe at desk scale
    _, q = integer_primitive(p)
    norm2 = math.isqrt(sum(int(c) ** 2 for c in q)) + 1
    return (1 << deg(q)) * norm2


def factor_monic(p) -> list[tuple[tuple, int]]:
    """Factor a monic rational polynomial into monic irreducibles.

    Linear factors come from the rational root theorem.  A rootless
    residual of degree >= 4 is attacked by trial division with monic
    integer polynomials of degree up to deg/2, coefficients bounded by a
    Mignotte-style bound.  Residuals whose factors are not integer-monic
    are reported as irreducible (adequate for integral sequences, where
    annihilators are integer-monic).
    """
    p = monic(p)
    if deg(p) <= 0:
        return []
    factors: dict[tuple, int] = {}
    for root, mult in rational_roots(p):
        lin = (-Fraction(root), Fraction(1))
        factors[lin] = mult
        for _ in range(mult):
            p = divmod_exact(p, lin)[0]
    for q, mult in _factor_rootless(p):
        factors[q] = factors.get(q, 0) + mult
    return sorted(factors.items(), key=lambda kv: (len(kv[0]), kv[0]))


def _factor_rootless(p) -> list[tuple[tuple, int]]:
    p = monic(p)
    d = deg(p)
    if d <= 0:
        return []
    if d <= 3:
        # no rational roots, so degree 2 and 3 are irreducible
        return [(p, 1)]
    bound = _mignotte_bound(p)
    trail_divs = _trailing_divisors(p, bound)
    for k in range(2, d // 2 + 1):
        for g in _monic_integer_candidates(k, bound, trail_divs):
            if divides(g, p):
                q = divmod_exact(p, g)[0]
                out: dict[tuple, int] = {}
                for fac, m in _factor_rootless(g) + _factor_rootless(q):
                    out[fac] = out.get(fac, 0) + m
                return sorted(out.items())
    return [(p, 1)]


def _trailing_divisors(p, bound) -> list[int]:
    c0 = p[0]
    if c0.denominator != 1:
        return []
    out = []
    for v in divisors(int(c0)):
        if v <= bound:
            out.extend((v, -v))
    return out


def _monic_integer_candidates(k, bound, trail_divs):
    # monic x^k + a_{k-1} x^{k-1} + ... + a_0 with a_0 dividing the
    # trailing coefficient and middle coefficients in [-bound, bound]
    span = range(-bound, bound + 1)
    def rec(i, acc):
        if i == k - 1:
            yield tuple(Fraction(a) for a in acc) + (Fraction(1),)
            return
        for a in span:
            yield from rec(i + 1, acc + [a])
    for a0 in trail_divs:
        yield from rec(0, [a0])
