"""C-finite sequences: exact and modular evaluation, minimal annihilator,
characteristic roots (with the 0-root/offset convention), trace-sequence
detection, separable part, and rational generating functions.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from . import unipoly
from .exactnum import Residue, rational_mod, solve_linear


class DecompositionFailure(ArithmeticError):
    """The separable-part linear system was inconsistent (internal bug)."""


@dataclass(frozen=True)
class CFiniteSeq:
    """A(n+r) = coeffs[r-1]*A(n+r-1) + ... + coeffs[0]*A(n) for n >= offset.

    `initial` holds A(0), ..., A(offset + r - 1), enough to determine
    every term.  The recurrence supplied here need not be minimal.
    """

    coeffs: tuple
    initial: tuple
    offset: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeffs",
                           tuple(Fraction(c) for c in self.coeffs))
        object.__setattr__(self, "initial",
                           tuple(Fraction(v) for v in self.initial))
        if not self.coeffs:
            raise ValueError("recurrence order must be positive")
        if self.offset < 0:
            raise ValueError("offset must be nonnegative")
        if len(self.initial) != self.offset + len(self.coeffs):
            raise ValueError(
                f"need {self.offset + len(self.coeffs)} initial values, "
                f"got {len(self.initial)}")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    # -- evaluation ----------------------------------------------------

    def terms(self, N: int) -> list[Fraction]:
        """Exact values A(0), ..., A(N)."""
        vals = list(self.initial[:N + 1])
        r = self.order
        while len(vals) <= N:
            m = len(vals)
            vals.append(sum(c * vals[m - r + i]
                            for i, c in enumerate(self.coeffs)))
        return vals

    def term(self, n: int) -> Fraction:
        return self.terms(n)[n]

    def term_mod(self, index: int, modulus: int) -> Residue:
        """A(index) mod modulus via companion-matrix binary powering.

        Handles huge indices; raises NonInvertibleDenominator when the
        modulus is not coprime to some denominator of the data.
        """
        init = [rational_mod(v, modulus).value for v in self.initial]
        if index < len(init):
            return Residue(init[index], modulus)
        coeffs = [rational_mod(c, modulus).value for c in self.coeffs]
        r = self.order
        mat = [[0] * r for _ in range(r)]
        for i in range(r - 1):
            mat[i][i + 1] = 1
        mat[r - 1] = list(coeffs)
        power = _mat_pow(mat, index - self.offset, modulus)
        vec = init[self.offset:self.offset + r]
        value = sum(power[0][j] * vec[j] for j in range(r)) % modulus
        return Residue(value, modulus)

    # -- structure -----------------------------------------------------

    def minimal_annihilator(self) -> tuple:
        """Monic polynomial P of least degree with P(N)A = 0 for all n >= 0.

        Certified by checking P(N)A(n) = 0 on the window n < offset+order:
        the defect then satisfies the known monic recurrence and vanishes
        on a full window, hence everywhere.
        """
        return _minimal_annihilator(self)

    def characteristic_roots(self) -> "CharRoots":
        return _characteristic_roots(self)

    def trace_decomposition(self) -> "TraceDecomposition | None":
        return _trace_decomposition(self)

    def separable_part(self) -> "CFiniteSeq":
        return _separable_part(self)

    def generating_function(self) -> tuple[tuple, tuple]:
        """(numerator, denominator) with denominator(0) = 1, exact Taylor
        coefficients equal to the sequence."""
        ann = self.minimal_annihilator()
        den = unipoly.reversal(ann) if ann else (Fraction(1),)
        if not den:
            den = (Fraction(1),)
        d = len(ann) - 1
        vals = self.terms(d - 1) if d > 0 else []
        num = [Fraction(0)] * d
        for k in range(d):
            num[k] = sum(vals[i] * (den[k - i] if k - i < len(den) else 0)
                         for i in range(k + 1))
        return unipoly.trim(num), den

    def minimized(self) -> "CFiniteSeq":
        """Equivalent sequence in canonical minimal-recurrence form."""
        ann = self.minimal_annihilator()
        need = max(len(ann), 1)
        return from_annihilator(ann, self.terms(need - 1))

    def is_zero(self) -> bool:
        return self.minimal_annihilator() == (Fraction(1),)


def from_annihilator(ann, values) -> CFiniteSeq:
    """Build a CFiniteSeq from a monic annihilator and leading values."""
    ann = unipoly.trim(ann)
    if not ann:
        raise ValueError("zero polynomial is not an annihilator")
    m0, rest = unipoly.x_power_split(ann)
    r = unipoly.deg(rest)
    if r == 0:
        # annihilator x^m0: finite support (or the zero sequence)
        offset = max(m0 - 1, 0)
        init = list(values[:offset + 1]) + [0] * (offset + 1 - len(values))
        return CFiniteSeq((Fraction(0),), init, offset)
    coeffs = [-rest[i] / rest[-1] for i in range(r)]
    need = m0 + r
    init = list(values[:need])
    if len(init) < need:
        raise ValueError(f"need {need} leading values")
    return CFiniteSeq(coeffs, init, m0)


@dataclass(frozen=True)
class CharRoots:
    """Roots of the minimal annihilator: rational ones with multiplicity,
    the multiplicity of 0, and the rootless residual factor."""

    rational_roots: tuple          # ((root, multiplicity), ...)
    zero_multiplicity: int
    residual: tuple                # monic polynomial without rational roots

    @property
    def residual_degree(self) -> int:
        return max(unipoly.deg(self.residual), 0)

    @property
    def distinct_count(self) -> int:
        """Distinct characteristic roots, counting 0 when present."""
        return len(self.rational_roots) + (1 if self.zero_multiplicity else 0)


@dataclass(frozen=True)
class TraceDecomposition:
    """A(n) = constant * [n = 0] + sum of alpha * Tr(theta^n) over parts.

    Each part is (alpha, u) where u is the reversed minimal polynomial of
    theta, irreducible with u(0) = 1; the generating function equals
    A(0) plus a rational combination of x*u'(x)/u(x).
    """

    constant: Fraction
    parts: tuple                   # ((alpha, u-coefficients), ...)


@functools.cache
def _minimal_annihilator(seq: CFiniteSeq) -> tuple:
    window = seq.offset + seq.order
    vals = seq.terms(2 * window - 1) if window else []
    if all(v == 0 for v in vals[:window]):
        return (Fraction(1),)
    for d in range(1, window + 1):
        matrix = [[vals[n + i] for i in range(d)] for n in range(window)]
        rhs = [-vals[n + d] for n in range(window)]
        sol = solve_linear(matrix, rhs)
        if sol is not None:
            return tuple(sol) + (Fraction(1),)
    raise AssertionError("defining recurrence must annihilate")


@functools.cache
def _characteristic_roots(seq: CFiniteSeq) -> CharRoots:
    ann = seq.minimal_annihilator()
    m0, rest = unipoly.x_power_split(ann)
    roots = []
    for root, mult in unipoly.rational_roots(rest):
        roots.append((root, mult))
        for _ in range(mult):
            rest = unipoly.divmod_exact(rest, (-root, Fraction(1)))[0]
    return CharRoots(tuple(sorted(roots)), m0, unipoly.monic(rest))


def _power_sums(f, count: int) -> list[Fraction]:
    """Power sums of the roots of a monic polynomial (Newton, then the
    characteristic recurrence)."""
    f = unipoly.monic(f)
    d = unipoly.deg(f)
    p = [Fraction(d)]
    for k in range(1, min(d, count - 1) + 1):
        s = -k * f[d - k]
        for i in range(1, k):
            s -= f[d - i] * p[k - i]
        p.append(s)
    while len(p) < count:
        n = len(p)
        p.append(-sum(f[i] * p[n - d + i] for i in range(d)))
    return p[:count]


@functools.cache
def _trace_decomposition(seq: CFiniteSeq) -> TraceDecomposition | None:
    ann = seq.minimal_annihilator()
    if ann == (Fraction(1),):
        return TraceDecomposition(Fraction(0), ())
    m0, core = unipoly.x_power_split(ann)
    if m0 > 1:
        return None
    if unipoly.gcd(core, unipoly.derivative(core)) != (Fraction(1),):
        return None
    factors = [f for f, _ in unipoly.factor_monic(core)] if unipoly.deg(core) else []
    window = 2 * unipoly.deg(core) + 2
    traces = [_power_sums(f, window) for f in factors]
    vals = seq.terms(window - 1)
    # unknowns: delta weight at n = 0, then one alpha per irreducible factor
    matrix = [[Fraction(1 if n == 0 else 0)] + [t[n] for t in traces]
              for n in range(window)]
    sol = solve_linear(matrix, vals)
    if sol is None:
        return None
    parts = tuple((alpha, unipoly.reversal(f))
                  for alpha, f in zip(sol[1:], factors) if alpha != 0)
    return TraceDecomposition(sol[0], parts)


@functools.cache
def _separable_part(seq: CFiniteSeq) -> CFiniteSeq:
    ann = seq.minimal_annihilator()
    if ann == (Fraction(1),):
        return seq.minimized()
    _, core = unipoly.x_power_split(ann)
    # S lives in ker(x * rad(core)): one delta at 0 plus multiplicity-one
    # shadows of the nonzero roots
    g = unipoly.mul((Fraction(0), Fraction(1)), unipoly.radical(core))
    ds, da = unipoly.deg(g), unipoly.deg(ann)
    window = da + ds + 2
    vals = seq.terms(window - 1)
    s_rows = _recurrence_basis(g, window)
    t_rows = _recurrence_basis(ann, window)
    matrix = [s_rows[n] + [n * c for c in t_rows[n]] for n in range(window)]
    sol = solve_linear(matrix, vals)
    if sol is None:
        raise DecompositionFailure("separable decomposition inconsistent")
    return from_annihilator(g, sol[:ds]).minimized()


def _recurrence_basis(ann, window):
    """Rows of unknown-coefficient vectors for solutions of ann(N)y = 0,
    parameterized by the first deg(ann) values."""
    d = unipoly.deg(ann)
    rows = [[Fraction(1 if i == j else 0) for j in range(d)]
            for i in range(min(d, window))]
    while len(rows) < window:
        n = len(rows)
        new = [Fraction(0)] * d
        for i in range(d):
            if ann[i] == 0:
                continue
            prev = rows[n - d + i]
            for j in range(d):
                new[j] -= ann[i] * prev[j]
        rows.append(new)
    return rows


def _mat_mul(a, b, m):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) % m for j in range(n)]
            for i in range(n)]


def _mat_pow(mat, e, m):
    n = len(mat)
    result = [[1 % m if i == j else 0 for j in range(n)] for i in range(n)]
    base = [row[:] for row in mat]
    while e:
        if e & 1:
            result = _mat_mul(result, base, m)
        e >>= 1
        if e:
            base = _mat_mul(base, base, m)
    return result
