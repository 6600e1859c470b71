"""Exact rational polynomial arithmetic and certified real-root counting.

Everything in this module is exact: scalars are `fractions.Fraction`
(aliased `Rational`), polynomials are immutable coefficient tuples, and
root counting goes through Sturm chains so that every count is a proof,
not an approximation.  Floating-point evaluation exists only as a
convenience for plotting and diagnostics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import SingularSystem, ZeroPolynomial

Rational = Fraction

_RationalLike = Union[Fraction, int]


def rat_str(x: Rational) -> str:
    """Serialize a rational as ``p/q``, or ``p`` when the denominator is 1."""
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rat(s: str) -> Rational:
    """Inverse of :func:`rat_str`."""
    return Fraction(s.strip())


class Poly:
    """Univariate polynomial with exact rational coefficients.

    Coefficients are stored densely, index = monomial degree, with no
    trailing zeros; the zero polynomial has an empty coefficient tuple
    and degree -1.  Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[_RationalLike] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("Poly is immutable")

    # -- construction helpers ------------------------------------------------

    @classmethod
    def monomial(cls, degree: int, coeff: _RationalLike = 1) -> "Poly":
        return cls([0] * degree + [coeff])

    @classmethod
    def constant(cls, c: _RationalLike) -> "Poly":
        return cls([c])

    # -- basic queries -------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Rational:
        if self.is_zero:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> Rational:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def is_odd(self) -> bool:
        return all(c == 0 for i, c in enumerate(self.coeffs) if i % 2 == 0)

    def is_even(self) -> bool:
        return all(c == 0 for i, c in enumerate(self.coeffs) if i % 2 == 1)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: Union["Poly", _RationalLike]) -> "Poly":
        if isinstance(other, Poly):
            if self.is_zero or other.is_zero:
                return Poly()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        out[i + j] += a * b
            return Poly(out)
        return self.scale(other)

    def __rmul__(self, other: _RationalLike) -> "Poly":
        return self.scale(other)

    def scale(self, s: _RationalLike) -> "Poly":
        s = Fraction(s)
        return Poly([c * s for c in self.coeffs])

    def __pow__(self, n: int) -> "Poly":
        out = Poly([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def compose(self, inner: "Poly") -> "Poly":
        """Return self(inner(t)), expanded exactly (Horner over polynomials)."""
        out = Poly()
        for c in reversed(self.coeffs):
            out = out * inner + Poly([c])
        return out

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x: _RationalLike) -> Rational:
        """Exact Horner evaluation at a rational point."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_float(self, x: float) -> float:
        """Double-precision Horner; for plotting only, never certification."""
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero:
            raise ZeroPolynomial("division by the zero polynomial")
        q = [Fraction(0)] * max(0, len(self.coeffs) - len(other.coeffs) + 1)
        r = list(self.coeffs)
        lead = other.coeffs[-1]
        nb = len(other.coeffs)
        while len(r) >= nb:
            if r[-1] == 0:
                r.pop()
                continue
            k = len(r) - nb
            c = r[-1] / lead
            q[k] = c
            for i in range(nb - 1):
                r[k + i] -= c * other.coeffs[i]
            r.pop()
        return Poly(q), Poly(r)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        return self.scale(1 / self.leading)

    # -- misc ----------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeff(i)
            if c == 0:
                continue
            mag = c if c > 0 else -c
            if i == 0:
                body = rat_str(mag)
            else:
                var = "t" if i == 1 else f"t^{i}"
                body = var if mag == 1 else f"{rat_str(mag)}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


X = Poly([0, 1])


# -- gcd / squarefree --------------------------------------------------------


def _primitive(p: Poly) -> Poly:
    """Integer-primitive representative of p with positive leading scale.

    Multiplies by a positive rational so the coefficients become coprime
    integers; the sign pattern is unchanged.
    """
    if p.is_zero:
        return p
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return Poly([v // g for v in ints])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over the rationals (Euclid with primitive normalization)."""
    a, b = _primitive(a), _primitive(b)
    while not b.is_zero:
        a, b = b, _primitive(a % b)
    if a.is_zero:
        return a
    return a.monic()


def squarefree_part(p: Poly) -> Poly:
    """Return p / gcd(p, p'): same roots, all simple."""
    if p.is_zero:
        raise ZeroPolynomial("squarefree part of the zero polynomial")
    g = poly_gcd(p, p.derivative())
    if g.degree <= 0:
        return p
    q, r = divmod(p, g)
    assert r.is_zero
    return q


# -- Sturm chains and root isolation ------------------------------------------


def _sign(x: Rational) -> int:
    return (x > 0) - (x < 0)


class SturmChain:
    """Signed remainder sequence of p and p'.

    Elements after the first two are normalized to primitive integer
    polynomials by a positive scaling, which leaves every sign evaluation
    unchanged while keeping coefficient growth in check.

    `count(a, b)` returns the number of distinct real roots of the
    squarefree part of p in the half-open interval (a, b].  This is exact
    for any rational endpoints, including endpoints where p or a chain
    element vanishes: the sign-variation count ignores zeros, which makes
    it right-continuous.
    """

    def __init__(self, p: Poly):
        if p.is_zero:
            raise ZeroPolynomial("Sturm chain of the zero polynomial")
        chain = [p, p.derivative()]
        while not chain[-1].is_zero:
            r = chain[-2] % chain[-1]
            if r.is_zero:
                break
            chain.append(_primitive(-r))
        self.chain: tuple[Poly, ...] = tuple(chain)

    def variations(self, x: Rational) -> int:
        signs = [s for s in (_sign(q(x)) for q in self.chain) if s]
        return sum(1 for i in range(len(signs) - 1) if signs[i] != signs[i + 1])

    def count(self, a: Rational, b: Rational) -> int:
        """Distinct roots of squarefree_part(chain[0]) in (a, b]."""
        if not a < b:
            raise ValueError("need a < b")
        return self.variations(a) - self.variations(b)


@dataclass(frozen=True)
class IsolatingInterval:
    """Half-open interval (lo, hi] certified to contain exactly one root."""

    lo: Rational
    hi: Rational

    @property
    def width(self) -> Rational:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Rational:
        return (self.lo + self.hi) / 2


def count_roots(p: Poly, lo: Rational, hi: Rational) -> int:
    """Exact number of distinct real roots of p in the open interval (lo, hi).

    Counts via the Sturm chain of the squarefree part.  Roots exactly at
    either endpoint are excluded; no endpoint perturbation is needed
    because the half-open Sturm count (lo, hi] is already exact and a
    root at hi is detected by direct evaluation.
    """
    if p.is_zero:
        raise ZeroPolynomial("cannot count roots of the zero polynomial")
    lo, hi = Fraction(lo), Fraction(hi)
    q = squarefree_part(p)
    n = SturmChain(q).count(lo, hi)
    if q(hi) == 0:
        n -= 1
    return n


def isolate_roots(p: Poly, lo: Rational, hi: Rational) -> list[IsolatingInterval]:
    """Disjoint isolating intervals, one per distinct root of p in (lo, hi).

    Bisection on half-open Sturm counts; returned intervals (a, b] are
    sorted and each contains exactly one root.
    """
    if p.is_zero:
        raise ZeroPolynomial("cannot isolate roots of the zero polynomial")
    lo, hi = Fraction(lo), Fraction(hi)
    q = squarefree_part(p)
    deflated_hi = q(hi) == 0
    if deflated_hi:
        # exclude the root at hi: it is not in the open interval
        q = q // Poly([-hi, 1])
        if q.degree < 1:
            return []
    chain = SturmChain(q)
    out: list[IsolatingInterval] = []
    stack = [(lo, hi, chain.variations(lo), chain.variations(hi))]
    while stack:
        a, b, va, vb = stack.pop()
        n = va - vb
        if n == 0:
            continue
        if n == 1:
            out.append(IsolatingInterval(a, b))
            continue
        m = (a + b) / 2
        vm = chain.variations(m)
        stack.append((a, m, va, vm))
        stack.append((m, b, vm, vb))
    out.sort(key=lambda iv: iv.lo)
    if deflated_hi and out and out[-1].hi == hi:
        # the top interval must not also contain the deflated endpoint root,
        # or it would hold two roots of p; bisect until its ceiling drops
        a, b = out[-1].lo, out[-1].hi
        va = chain.variations(a)
        while b == hi:
            m = (a + b) / 2
            vm = chain.variations(m)
            if va - vm == 1:
                b = m
            else:
                a, va = m, vm
        out[-1] = IsolatingInterval(a, b)
    return out


def refine(p: Poly, iv: IsolatingInterval, width: Rational) -> IsolatingInterval:
    """Shrink an isolating interval by bisection until hi - lo <= width.

    Works on the squarefree part; after the first step that pins nonzero
    endpoint signs it switches to plain sign bisection, which needs one
    polynomial evaluation per step instead of a full chain evaluation.
    """
    q = squarefree_part(p)
    lo, hi = Fraction(iv.lo), Fraction(iv.hi)
    width = Fraction(width)
    if hi - lo <= width:
        return IsolatingInterval(lo, hi)
    f_hi = q(hi)
    if f_hi == 0:
        # the isolated root is exactly hi
        lo = max(lo, hi - width)
        return IsolatingInterval(lo, hi)
    if q(lo) == 0:
        # lo can sit exactly on the neighboring root (a bisection midpoint);
        # chain-counted bisection until a clean sign bracket appears.
        chain = SturmChain(q)
        while hi - lo > width:
            m = (lo + hi) / 2
            f_m = q(m)
            if f_m != 0 and _sign(f_m) != _sign(f_hi):
                lo = m
                break
            if chain.count(lo, m) == 1:
                hi, f_hi = m, f_m
            else:
                lo = m
            if f_hi == 0:
                return IsolatingInterval(max(lo, hi - width), hi)
        if hi - lo <= width:
            return IsolatingInterval(lo, hi)
    while hi - lo > width:
        m = (lo + hi) / 2
        f_m = q(m)
        if f_m == 0:
            return IsolatingInterval(max(lo, m - width), m)
        if _sign(f_m) == _sign(f_hi):
            hi, f_hi = m, f_m
        else:
            lo = m
    return IsolatingInterval(lo, hi)


# -- exact linear algebra ------------------------------------------------------


def solve_linear(matrix: Sequence[Sequence[Rational]], rhs: Sequence[Rational]) -> list[Rational]:
    """Solve an exact rational linear system by Gaussian elimination.

    Partial pivoting picks the largest-magnitude pivot, which keeps
    intermediate fractions smaller; exactness never depends on it.
    Raises SingularSystem when the matrix is singular.
    """
    n = len(matrix)
    a = [[Fraction(v) for v in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = max(range(col, n), key=lambda r: abs(a[r][col]))
        if a[piv][col] == 0:
            raise SingularSystem(f"singular at column {col}")
        a[col], a[piv] = a[piv], a[col]
        pivval = a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / pivval
            if f:
                for c in range(col, n + 1):
                    a[r][c] -= f * a[col][c]
    x = [Fraction(0)] * n
    for r in range(n - 1, -1, -1):
        s = a[r][n] - sum(a[r][c] * x[c] for c in range(r + 1, n))
        x[r] = s / a[r][r]
    return x


def bareiss_det(matrix: Sequence[Sequence[Rational]]) -> Rational:
    """Determinant by fraction-free (Bareiss) elimination.

    Exact over the rationals; the fraction-free pivoting pattern keeps
    entry growth polynomial instead of exponential.
    """
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    a = [[Fraction(v) for v in row] for row in matrix]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
            a[i][k] = Fraction(0)
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
