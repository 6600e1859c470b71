"""Monic Chebyshev bases and the divided-difference machinery.

Conventions (with t = 2 cos theta):

* ``T_n(t) = 2 cos(n theta)`` -- cosine family, monic, T_0 = 2, T_1 = t,
  T_{n+1} = t T_n - T_{n-1}.
* ``V_n(t) = sin((n+1) theta) / sin(theta)`` -- sine family, monic,
  V_0 = 1, V_1 = t, same recurrence.

The map at the heart of the construction sends T_k to eps_k V_{k-1},
where eps_k = V_{k-1}(1) is the period-6 sign table (1, 1, 0, -1, -1, 0).
For any s != t with T_3(s) = T_3(t) it computes the divided difference
(T_k(t) - T_k(s)) / (t - s) as a polynomial in u = s + t, which is what
turns coincidence questions about curves with cubic x into root counting
for a single univariate polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Mapping, Union

from .errors import NotInImage
from .exactpoly import Poly, Rational, rat_str

_CoeffMap = Mapping[int, Union[Rational, int]]

_EPS_TABLE = (0, 1, 1, 0, -1, -1)


def eps(k: int) -> int:
    """The sign eps_k = V_{k-1}(1): period 6 in k, pattern 1,1,0,-1,-1,0."""
    if k < 1:
        raise ValueError("eps is defined for k >= 1")
    return _EPS_TABLE[k % 6]


_T_CACHE = [Poly([2]), Poly([0, 1])]
_V_CACHE = [Poly([1]), Poly([0, 1])]


def t_poly(n: int) -> Poly:
    """Monic cosine polynomial T_n as an exact monomial-basis Poly."""
    if n < 0:
        raise ValueError("n must be >= 0")
    while len(_T_CACHE) <= n:
        _T_CACHE.append(Poly([0, 1]) * _T_CACHE[-1] - _T_CACHE[-2])
    return _T_CACHE[n]


def v_poly(n: int) -> Poly:
    """Monic sine polynomial V_n as an exact monomial-basis Poly."""
    if n < 0:
        raise ValueError("n must be >= 0")
    while len(_V_CACHE) <= n:
        _V_CACHE.append(Poly([0, 1]) * _V_CACHE[-1] - _V_CACHE[-2])
    return _V_CACHE[n]


def _normalize(coeffs: _CoeffMap) -> tuple[tuple[int, Fraction], ...]:
    items = []
    for k, c in coeffs.items():
        if k < 0:
            raise ValueError("basis indices must be >= 0")
        c = Fraction(c)
        if c:
            items.append((k, c))
    return tuple(sorted(items))


@dataclass(frozen=True)
class ChebT:
    """Polynomial expressed in the T basis; note T_0 is the constant 2."""

    items: tuple[tuple[int, Fraction], ...]

    @classmethod
    def of(cls, coeffs: _CoeffMap) -> "ChebT":
        return cls(_normalize(coeffs))

    def coeff(self, k: int) -> Fraction:
        return dict(self.items).get(k, Fraction(0))

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.items)

    @property
    def degree(self) -> int:
        return self.items[-1][0] if self.items else -1

    def to_poly(self) -> Poly:
        out = Poly()
        for k, c in self.items:
            out = out + t_poly(k) * c
        return out


@dataclass(frozen=True)
class ChebV:
    """Polynomial expressed in the V basis (V_0 = 1)."""

    items: tuple[tuple[int, Fraction], ...]

    @classmethod
    def of(cls, coeffs: _CoeffMap) -> "ChebV":
        return cls(_normalize(coeffs))

    def coeff(self, k: int) -> Fraction:
        return dict(self.items).get(k, Fraction(0))

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.items)

    @property
    def degree(self) -> int:
        return self.items[-1][0] if self.items else -1

    def to_poly(self) -> Poly:
        out = Poly()
        for k, c in self.items:
            out = out + v_poly(k) * c
        return out


def to_T(p: Poly) -> ChebT:
    """Exact change of basis, monomial -> T, by triangular back-substitution."""
    rem = list(p.coeffs)
    out: dict[int, Fraction] = {}
    for d in range(len(rem) - 1, 0, -1):
        c = rem[d]
        if c:
            out[d] = c
            for i, tc in enumerate(t_poly(d).coeffs):
                rem[i] -= c * tc
    if rem and rem[0]:
        out[0] = rem[0] / 2  # T_0 is the constant 2
    return ChebT.of(out)


def to_V(p: Poly) -> ChebV:
    """Exact change of basis, monomial -> V, by triangular back-substitution."""
    rem = list(p.coeffs)
    out: dict[int, Fraction] = {}
    for d in range(len(rem) - 1, -1, -1):
        c = rem[d]
        if c:
            out[d] = c
            for i, vc in enumerate(v_poly(d).coeffs):
                rem[i] -= c * vc
    return ChebV.of(out)


def from_T(c: ChebT) -> Poly:
    return c.to_poly()


def from_V(c: ChebV) -> Poly:
    return c.to_poly()


def divided_difference(y: ChebT) -> ChebV:
    """Map sum a_k T_k to sum eps_k a_k V_{k-1}.

    This is the exact polynomial identity behind coincidences of curves
    with x = T_3: whenever T_3(s) = T_3(t) with s != t,
    (y(t) - y(s)) / (t - s) equals the returned polynomial evaluated at
    s + t.  Constant terms (and every T_{3j}) lie in the kernel.
    """
    out: dict[int, Fraction] = {}
    for k, a in y.items:
        if k == 0:
            continue
        e = eps(k)
        if e:
            out[k - 1] = e * a
    return ChebV.of(out)


def lift_from_V(r: ChebV) -> ChebT:
    """Right inverse of :func:`divided_difference` with canonical kernel choice.

    Requires every V_{3j+2} coefficient of r to vanish (those indices are
    not in the image).  The lift sets all kernel coefficients a_{3j},
    including the constant term, to zero, which keeps degrees minimal.
    """
    out: dict[int, Fraction] = {}
    for j, c in r.items:
        e = eps(j + 1)
        if e == 0:
            raise NotInImage(f"V_{j} coefficient {rat_str(c)} obstructs the lift")
        # eps is +-1, so dividing equals multiplying
        out[j + 1] = e * c
    return ChebT.of(out)


def w_index(k: int) -> int:
    """V-index of W_k: the odd sub-basis W_{2j} = V_{6j+1}, W_{2j+1} = V_{6j+3}."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return 6 * (k // 2) + (1 if k % 2 == 0 else 3)


def wtilde_index(k: int) -> int:
    """V-index of the even sub-basis: Wt_{2j} = V_{6j}, Wt_{2j+1} = V_{6j+4}."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return 6 * (k // 2) + (0 if k % 2 == 0 else 4)


def w_poly(k: int) -> Poly:
    return v_poly(w_index(k))


def wtilde_poly(k: int) -> Poly:
    return v_poly(wtilde_index(k))


# -- numeric evaluation ---------------------------------------------------------


def eval_T_float(c: ChebT, x: float) -> float:
    """Evaluate a T-basis polynomial in doubles via the three-term recurrence.

    On [-2, 2] every T_k is bounded by 2, so this is far better
    conditioned than expanding to the monomial basis first.  Diagnostics
    only: certification never uses floats.
    """
    items = c.items
    if not items:
        return 0.0
    kmax = items[-1][0]
    coeffs = c.as_dict()
    t0, t1 = 2.0, x
    tot = float(coeffs.get(0, 0)) * t0 + float(coeffs.get(1, 0)) * t1
    for k in range(2, kmax + 1):
        t0, t1 = t1, x * t1 - t0
        ck = coeffs.get(k)
        if ck:
            tot += float(ck) * t1
    return tot


def eval_T_decimal(c: ChebT, x: Decimal) -> Decimal:
    """Like :func:`eval_T_float` but in `decimal` arithmetic.

    Needed because the height polynomials carry coefficients that reach
    1e22 by N = 21, where double precision loses the O(1) differences
    being verified; the caller picks the context precision.
    """
    items = c.items
    if not items:
        return Decimal(0)
    kmax = items[-1][0]
    coeffs = c.as_dict()
    t0, t1 = Decimal(2), x
    tot = Decimal(0)
    c0 = coeffs.get(0)
    if c0:
        tot += Decimal(c0.numerator) / Decimal(c0.denominator) * t0
    c1 = coeffs.get(1)
    if c1:
        tot += Decimal(c1.numerator) / Decimal(c1.denominator) * t1
    for k in range(2, kmax + 1):
        t0, t1 = t1, x * t1 - t0
        ck = coeffs.get(k)
        if ck:
            tot += Decimal(ck.numerator) / Decimal(ck.denominator) * t1
    return tot
