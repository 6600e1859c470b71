"""Synthesis and certification of the (2,N) torus-knot curves.

For odd N = 2n+1 the pipeline produces a space curve

    x(t) = T_3(t),  deg y = N + 2*floor(N/4) + 1,  deg z = N + 2*floor((N+1)/4)

whose plane projection has exactly N transverse double points with
parameters s_1 < ... < s_N < t_1 < ... < t_N and alternating over/under
signs (-1)^i.  The steps:

1.  Build the odd triangular basis C_0..C_n of span(W_0..W_n), where
    C_j = t^{2j+1} F_j and F_j has no root in [-2, 2].  Two independent
    constructions are implemented: substitution of the [k/l] rational
    approximants of phi (v Q(u) - P(u) with v = t^2, u = t^2(t^2-3)^2/4),
    and plain triangular elimination against the W rows; they must agree.
2.  Plant double-point abscissae {0, +-d_1, ..., +-d_n} by solving
    A = C_n + sum a_k C_k for the a_k (exact n x n solve), then certify
    by Sturm count that these are the only roots of A in [-2, 2].
3.  Lift A through the divided-difference map to get y; crossing
    parameters come from u_i = 2 cos(alpha_i) via s, t = 2 cos(alpha -+ pi/3).
4.  Interpolate B(u_i) = (-1)^i in the even basis Ct_0..Ct_n and lift to
    the height z, making the crossing signs alternate exactly.

Everything up to the trigonometric parameter values is exact rational
arithmetic; floats (and scaled-precision decimals, where coefficients
outgrow doubles) appear only in reports and rendering.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Optional, Sequence

from . import chebyshev as cb
from .errors import (
    CertificationFailed,
    EpsilonExhausted,
    InternalInconsistency,
    OrderingViolation,
    SignViolation,
    SingularSystem,
)
from .exactpoly import (
    Poly,
    Rational,
    count_roots,
    isolate_roots,
    rat_str,
    refine,
    solve_linear,
)
from .pade import pade
from .stieltjes import phi

ORDERING_MARGIN = 1e-8
COINCIDENCE_TOL = 1e-9
ROOT_WIDTH = Fraction(1, 2**48)


def plane_degree(n_crossings: int) -> int:
    """Degree of y for N crossings: N + 2*floor(N/4) + 1."""
    return n_crossings + 2 * (n_crossings // 4) + 1


def height_degree(n_crossings: int) -> int:
    """Degree of z for N crossings: N + 2*floor((N+1)/4)."""
    return n_crossings + 2 * ((n_crossings + 1) // 4)


# -- domain types ---------------------------------------------------------------


@dataclass(frozen=True)
class CnBasis:
    """The odd triangular basis C_0..C_n_max, stored monic.

    `cn[j] = t^{2j+1} F_j` with F_j root-free on [-2, 2]; `cn_w[j]` are
    the coordinates of C_j on W_0..W_j (last entry always 1).
    """

    n_max: int
    cn: tuple[Poly, ...]
    cn_w: tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class CnTildeBasis:
    """The even companions Ct_0 = 1, Ct_j = -(1/3) T_3 C_{j-1}."""

    n_max: int
    cn: tuple[Poly, ...]


@dataclass(frozen=True)
class NodeSet:
    """Planted positive double-point abscissae 0 < d_1 < ... < d_n < 1."""

    n: int
    delta: tuple[Fraction, ...]
    epsilon: Optional[Fraction] = None  # scale that produced the nodes, if any

    def __post_init__(self):
        if len(self.delta) != self.n:
            raise ValueError("need exactly n nodes")
        prev = Fraction(0)
        for d in self.delta:
            if not prev < d < 1:
                raise ValueError("nodes must satisfy 0 < d_1 < ... < d_n < 1")
            prev = d

    def all_roots(self) -> tuple[Fraction, ...]:
        """The full planted root set {-d_n, ..., -d_1, 0, d_1, ..., d_n}, sorted."""
        return tuple(sorted([-d for d in self.delta] + [Fraction(0)] + list(self.delta)))


@dataclass(frozen=True)
class PlaneCurve:
    x: Poly
    y: cb.ChebT
    r: cb.ChebV                      # divided-difference image of y
    a: tuple[Fraction, ...]          # deformation coefficients a_0..a_{n-1}


@dataclass(frozen=True)
class SpaceCurve:
    plane: PlaneCurve
    z: cb.ChebT
    b: tuple[Fraction, ...]          # height coefficients b_0..b_n


@dataclass(frozen=True)
class Crossing:
    u_lo: Fraction
    u_hi: Fraction
    u: float
    alpha: float
    s: float
    t: float
    sign: Optional[int] = None


@dataclass(frozen=True)
class CrossingReport:
    n_crossings: int
    crossings: tuple[Crossing, ...]
    count_certified: bool
    ordering_ok: bool
    ordering_margin: float
    signs_alternate: Optional[bool] = None
    sign_margin: Optional[float] = None
    x_coincidence: Optional[float] = None
    y_coincidence: Optional[float] = None
    epsilon: Optional[Fraction] = None
    nodes: Optional[tuple[Fraction, ...]] = None


# -- the C bases ------------------------------------------------------------------


def _validate_cn(j: int, c: Poly) -> tuple[Fraction, ...]:
    """Structural checks for a candidate C_j; returns its W-coordinates."""
    expected_deg = 2 * j + 2 * (j // 2) + 1
    if c.degree != expected_deg:
        raise InternalInconsistency(f"C_{j} has degree {c.degree}, expected {expected_deg}")
    if not c.is_odd():
        raise InternalInconsistency(f"C_{j} is not odd")
    if any(c.coeff(i) != 0 for i in range(2 * j + 1)):
        raise InternalInconsistency(f"t^{2*j+1} does not divide C_{j}")
    cofactor = Poly(c.coeffs[2 * j + 1:])
    if (
        count_roots(cofactor, Fraction(-2), Fraction(2)) != 0
        or cofactor(Fraction(-2)) == 0
        or cofactor(Fraction(2)) == 0
    ):
        raise InternalInconsistency(f"cofactor of C_{j} has a root in [-2, 2]")
    windex = {cb.w_index(i): i for i in range(j + 1)}
    coords = [Fraction(0)] * (j + 1)
    for k, coeff in cb.to_V(c).items:
        if k % 3 == 2:
            raise InternalInconsistency(f"C_{j} has a V_{k} component (index = 2 mod 3)")
        if k not in windex:
            raise InternalInconsistency(f"C_{j} has a V_{k} component outside W_0..W_{j}")
        coords[windex[k]] = coeff
    return tuple(coords)


def build_cn(n_max: int) -> CnBasis:
    """Build C_0..C_n_max from the rational approximants of phi.

    C_{2k+1} = t (v Q_k(u) - P_k(u)) and C_{2k} = t (v Q_{k-1}(u) - P_k(u))
    with the exact substitutions v = t^2, u = t^2 (t^2 - 3)^2 / 4, then
    normalized monic.  Every structural invariant is re-checked on the
    result; a failure raises InternalInconsistency rather than passing a
    bad basis downstream.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    t = Poly([0, 1])
    v_sub = t * t
    w = v_sub - Poly([3])
    u_sub = (v_sub * w * w).scale(Fraction(1, 4))
    cns: list[Poly] = []
    coords: list[tuple[Fraction, ...]] = []
    for j in range(n_max + 1):
        if j == 0:
            c = t
        else:
            k, l = ((j - 1) // 2, (j - 1) // 2) if j % 2 else (j // 2, j // 2 - 1)
            approx = pade(phi, k, l)
            c = t * (v_sub * approx.q.compose(u_sub) - approx.p.compose(u_sub))
            c = c.monic()
        coords.append(_validate_cn(j, c))
        cns.append(c)
    return CnBasis(n_max, tuple(cns), tuple(coords))


def build_cn_triangular(n_max: int) -> CnBasis:
    """Independent construction of the same basis by triangular elimination.

    C_j = W_j + sum_{i<j} c_i W_i with the c_i chosen to kill the
    coefficients of t, t^3, ..., t^{2j-1}.  Uniqueness of the triangular
    basis makes this bit-for-bit equal to :func:`build_cn`; the test
    suite cross-checks the two paths against each other.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    cns: list[Poly] = []
    coords: list[tuple[Fraction, ...]] = []
    for j in range(n_max + 1):
        wj = cb.w_poly(j)
        if j == 0:
            c = wj
            sol: list[Fraction] = []
        else:
            matrix = [[cb.w_poly(i).coeff(2 * row + 1) for i in range(j)] for row in range(j)]
            rhs = [-wj.coeff(2 * row + 1) for row in range(j)]
            sol = solve_linear(matrix, rhs)
            c = wj
            for i, ci in enumerate(sol):
                c = c + cb.w_poly(i) * ci
        coords.append(_validate_cn(j, c))
        cns.append(c)
    return CnBasis(n_max, tuple(cns), tuple(coords))


def build_cn_tilde(n_max: int, basis: Optional[CnBasis] = None) -> CnTildeBasis:
    """Build the even basis Ct_0 = 1, Ct_j = -(1/3) T_3 C_{j-1}.

    Ct_j = t^{2j} Ft_j; because T_3 divides every Ct_j with j >= 1, the
    cofactor Ft_j necessarily vanishes at +-sqrt(3), so root-freeness is
    checked on [-1, 1], which covers every admissible node.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if basis is None or basis.n_max < n_max - 1:
        basis = build_cn(max(n_max - 1, 0))
    third = Fraction(-1, 3)
    t3 = cb.t_poly(3)
    cns: list[Poly] = [Poly([1])]
    for j in range(1, n_max + 1):
        c = (t3 * basis.cn[j - 1]).scale(third)
        if not c.is_even():
            raise InternalInconsistency(f"Ct_{j} is not even")
        if any(c.coeff(i) != 0 for i in range(2 * j)):
            raise InternalInconsistency(f"t^{2*j} does not divide Ct_{j}")
        cofactor = Poly(c.coeffs[2 * j:])
        if (
            count_roots(cofactor, Fraction(-1), Fraction(1)) != 0
            or cofactor(Fraction(-1)) == 0
            or cofactor(Fraction(1)) == 0
        ):
            raise InternalInconsistency(f"cofactor of Ct_{j} has a root in [-1, 1]")
        allowed = {cb.wtilde_index(i) for i in range(j + 1)}
        for k, _ in cb.to_V(c).items:
            if k not in allowed:
                raise InternalInconsistency(f"Ct_{j} has a V_{k} component outside Wt_0..Wt_{j}")
        cns.append(c)
    return CnTildeBasis(n_max, tuple(cns))


# -- deformation ------------------------------------------------------------------


def solve_deformation(basis: CnBasis, nodes: NodeSet) -> tuple[tuple[Fraction, ...], Poly]:
    """Find the unique A = C_n + sum_{k<n} a_k C_k vanishing at the nodes.

    Oddness makes A vanish at 0 and at -d automatically, so the exact
    linear system only carries the n positive nodes.  Raises
    SingularSystem for node sets where uniqueness fails.
    """
    n = nodes.n
    if basis.n_max < n:
        raise ValueError(f"basis only reaches C_{basis.n_max}, need C_{n}")
    if n == 0:
        return (), basis.cn[0]
    matrix = [[basis.cn[k](d) for k in range(n)] for d in nodes.delta]
    rhs = [-basis.cn[n](d) for d in nodes.delta]
    a = solve_linear(matrix, rhs)
    poly = basis.cn[n]
    for k, ak in enumerate(a):
        poly = poly + basis.cn[k] * ak
    for d in nodes.all_roots():
        if poly(d) != 0:
            raise InternalInconsistency(f"deformation does not vanish at {rat_str(d)}")
    return tuple(a), poly


def certify_A(a_poly: Poly, n_crossings: int) -> bool:
    """Certify that A has exactly N roots in (-2, 2), all inside (-1, 1).

    Both counts are exact Sturm counts; together they are the hypothesis
    under which the lifted curve provably has exactly N crossings with
    the required parameter ordering.
    """
    if a_poly.is_zero:
        return False
    two, one = Fraction(2), Fraction(1)
    return (
        count_roots(a_poly, -two, two) == n_crossings
        and count_roots(a_poly, -one, one) == n_crossings
    )


def default_nodes(n: int, epsilon: Fraction) -> NodeSet:
    """Uniformly spaced nodes d_i = epsilon * i / (n + 1)."""
    return NodeSet(n, tuple(epsilon * Fraction(i, n + 1) for i in range(1, n + 1)), epsilon)


def auto_nodes(
    n: int,
    epsilon: Optional[Rational] = None,
    *,
    basis: Optional[CnBasis] = None,
    max_halvings: int = 40,
) -> NodeSet:
    """Find a node scale whose deformation passes the root certificate.

    Starts at epsilon = 1/4 (or the given value) and halves on a singular
    solve or a failed certificate.  Every accepted scale so far has been
    the first one tried; the loop exists because the underlying existence
    result is only an 'epsilon small enough' statement.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return NodeSet(0, (), Fraction(epsilon) if epsilon is not None else Fraction(1, 4))
    if basis is None:
        basis = build_cn(n)
    eps_val = Fraction(epsilon) if epsilon is not None else Fraction(1, 4)
    last: Optional[Poly] = None
    for _ in range(max_halvings + 1):
        nodes = default_nodes(n, eps_val)
        try:
            _, a_poly = solve_deformation(basis, nodes)
        except SingularSystem:
            eps_val /= 2
            continue
        last = a_poly
        if certify_A(a_poly, 2 * n + 1):
            return nodes
        eps_val /= 2
    raise EpsilonExhausted(
        f"no certified node set for n={n} after {max_halvings} halvings"
        + (f"; last deformation degree {last.degree}" if last is not None else "")
    )


# -- lifting to the curve -----------------------------------------------------------


def lift_plane(a_poly: Poly, n_crossings: int, a: tuple[Fraction, ...] = ()) -> PlaneCurve:
    """Lift a certified deformation to the plane curve (T_3(t), y(t))."""
    r = cb.to_V(a_poly)
    y = cb.lift_from_V(r)
    expected = plane_degree(n_crossings)
    if y.degree != expected:
        raise InternalInconsistency(f"deg y = {y.degree}, expected {expected}")
    return PlaneCurve(cb.t_poly(3), y, r, a)


def crossings(a_poly: Poly, n_crossings: int) -> CrossingReport:
    """Locate the N crossings of the lifted curve from the roots of A.

    Roots are isolated in (-2, 2) by Sturm bisection (isolation itself
    certifies the count) and refined to width 2^-48, then mapped through
    u = 2 cos(alpha), s = 2 cos(alpha + pi/3), t = 2 cos(alpha - pi/3).
    The 2N-way ordering s_1 < ... < s_N < t_1 < ... < t_N must hold with
    margin > 1e-8, else OrderingViolation.
    """
    two = Fraction(2)
    intervals = isolate_roots(a_poly, -two, two)
    certified = len(intervals) == n_crossings
    out = []
    for iv in intervals:
        iv = refine(a_poly, iv, ROOT_WIDTH)
        u = float(iv.midpoint)
        alpha = math.acos(max(-1.0, min(1.0, u / 2.0)))
        s = 2.0 * math.cos(alpha + math.pi / 3.0)
        t = 2.0 * math.cos(alpha - math.pi / 3.0)
        out.append(Crossing(iv.lo, iv.hi, u, alpha, s, t))
    seq = [c.s for c in out] + [c.t for c in out]
    margin = min((b - a for a, b in zip(seq, seq[1:])), default=math.inf)
    if len(out) != n_crossings or margin <= ORDERING_MARGIN:
        raise OrderingViolation(
            f"found {len(out)} crossings, ordering margin {margin:.3e} "
            f"(need {n_crossings} with margin > {ORDERING_MARGIN:.0e})"
        )
    return CrossingReport(
        n_crossings=n_crossings,
        crossings=tuple(out),
        count_certified=certified,
        ordering_ok=True,
        ordering_margin=margin,
    )


def solve_height(basis_tilde: CnTildeBasis, nodes: NodeSet) -> tuple[tuple[Fraction, ...], Poly]:
    """Interpolate B(u_i) = (-1)^i at the planted roots in the even basis.

    Evenness of the Ct_k and symmetry of the nodes collapse the N
    conditions to the n+1 nonnegative nodes {0, d_1, ..., d_n}; the node
    u_{n+1} = 0 carries the right-hand side (-1)^{n+1}.  The solve and
    the interpolation checks are exact since the nodes are rational.
    """
    n = nodes.n
    if basis_tilde.n_max < n:
        raise ValueError(f"basis only reaches Ct_{basis_tilde.n_max}, need Ct_{n}")
    points = [Fraction(0)] + list(nodes.delta)
    matrix = [[basis_tilde.cn[k](u) for k in range(n + 1)] for u in points]
    rhs = [Fraction((-1) ** (n + 1 + i)) for i in range(n + 1)]
    b = solve_linear(matrix, rhs)
    poly = Poly()
    for k, bk in enumerate(b):
        poly = poly + basis_tilde.cn[k] * bk
    for i, u in enumerate(nodes.all_roots(), start=1):
        if poly(u) != (-1) ** i:
            raise InternalInconsistency(f"B({rat_str(u)}) != {(-1) ** i}")
    return tuple(b), poly


def lift_height(b_poly: Poly) -> cb.ChebT:
    """Lift the interpolant B through the divided-difference map to z."""
    return cb.lift_from_V(cb.to_V(b_poly))


# -- verification -----------------------------------------------------------------


def _decimal_st(u_num: int, u_den: int) -> tuple[Decimal, Decimal]:
    """The crossing parameter pair for abscissa u: roots of X^2 - uX + (u^2 - 3)."""
    u = Decimal(u_num) / Decimal(u_den)
    disc = (Decimal(12) - 3 * u * u).sqrt()
    return (u - disc) / 2, (u + disc) / 2


def _coefficient_magnitude(c: cb.ChebT) -> float:
    return sum(abs(float(v)) for _, v in c.items) + 1.0


def verify_space(
    curve: SpaceCurve,
    report: CrossingReport,
    nodes: Optional[NodeSet] = None,
) -> CrossingReport:
    """Complete a crossing report with coincidence and sign certificates.

    Exact layer: the divided-difference image of y must equal r, and when
    the planted nodes are known, dd(z) evaluated at them must equal
    (-1)^i exactly (dd(y) must vanish there).  Numeric layer: x, y
    coincidences below 1e-9 and the alternating sign of z(t_i) - z(s_i),
    evaluated in decimal arithmetic at a precision that scales with the
    coefficient size, since the height coefficients outgrow doubles long
    before N reaches 21.
    """
    if cb.divided_difference(curve.plane.y) != curve.plane.r:
        raise InternalInconsistency("divided difference of y does not equal r")
    zv = cb.from_V(cb.divided_difference(curve.z))
    rv = cb.from_V(curve.plane.r)
    if nodes is not None:
        for i, u in enumerate(nodes.all_roots(), start=1):
            if zv(u) != (-1) ** i:
                raise SignViolation(f"dd(z)({rat_str(u)}) != {(-1) ** i}")
            if rv(u) != 0:
                raise InternalInconsistency(f"r({rat_str(u)}) != 0 at a planted node")
    prec = 40 + max(
        len(str(int(_coefficient_magnitude(curve.z)))),
        len(str(int(_coefficient_magnitude(curve.plane.y)))),
    )
    planted = nodes.all_roots() if nodes is not None else None
    x_err = y_err = 0.0
    sign_margin = math.inf
    completed = []
    with localcontext() as ctx:
        ctx.prec = prec
        for i, cr in enumerate(report.crossings, start=1):
            if planted is not None:
                u = planted[i - 1]
            else:
                u = cr.u_lo / 2 + cr.u_hi / 2
            s, t = _decimal_st(u.numerator, u.denominator)
            xs = s * s * s - 3 * s
            xt = t * t * t - 3 * t
            ys = cb.eval_T_decimal(curve.plane.y, s)
            yt = cb.eval_T_decimal(curve.plane.y, t)
            zd = cb.eval_T_decimal(curve.z, t) - cb.eval_T_decimal(curve.z, s)
            x_err = max(x_err, abs(float(xt - xs)))
            y_err = max(y_err, abs(float(yt - ys)))
            sign = 1 if zd > 0 else -1
            if sign != (-1) ** i:
                raise SignViolation(f"crossing {i}: z(t)-z(s) has sign {sign}, expected {(-1) ** i}")
            sign_margin = min(sign_margin, abs(float(zd)))
            completed.append(replace(cr, sign=sign))
    if x_err >= COINCIDENCE_TOL or y_err >= COINCIDENCE_TOL:
        raise InternalInconsistency(
            f"coincidence residuals too large: x {x_err:.3e}, y {y_err:.3e}"
        )
    return replace(
        report,
        crossings=tuple(completed),
        signs_alternate=True,
        sign_margin=sign_margin,
        x_coincidence=x_err,
        y_coincidence=y_err,
    )


# -- the full pipeline --------------------------------------------------------------


def synthesize(
    n_crossings: int,
    epsilon: Optional[Rational] = None,
    nodes: Optional[Sequence[Rational]] = None,
) -> tuple[SpaceCurve, CrossingReport]:
    """Produce a fully certified space curve with N alternating crossings.

    Parameters
    ----------
    n_crossings : odd N >= 1
    epsilon : starting node scale for the automatic search (default 1/4)
    nodes : explicit positive abscissae; skips the automatic search, and
        failure then raises CertificationFailed instead of retrying

    Returns the curve and its completed report.  EpsilonExhausted is the
    only expected failure of the automatic path.
    """
    if n_crossings < 1 or n_crossings % 2 == 0:
        raise ValueError("N must be an odd positive integer")
    n = (n_crossings - 1) // 2
    basis = build_cn(n)
    basis_tilde = build_cn_tilde(n, basis)

    if nodes is not None:
        node_set = NodeSet(n, tuple(sorted(Fraction(d) for d in nodes)),
                           Fraction(epsilon) if epsilon is not None else None)
        a, a_poly = solve_deformation(basis, node_set)
        if not certify_A(a_poly, n_crossings):
            raise CertificationFailed(
                f"supplied nodes leave extra roots of A in [-2, 2] (N={n_crossings})"
            )
        b, b_poly = solve_height(basis_tilde, node_set)
    else:
        eps_val = Fraction(epsilon) if epsilon is not None else Fraction(1, 4)
        for attempt in range(41):
            node_set = auto_nodes(n, eps_val, basis=basis, max_halvings=40 - attempt)
            try:
                a, a_poly = solve_deformation(basis, node_set)
                b, b_poly = solve_height(basis_tilde, node_set)
                break
            except SingularSystem:
                # height system can in principle go singular on its own;
                # shrink further and retry the whole node search
                eps_val = (node_set.epsilon or eps_val) / 2
        else:
            raise EpsilonExhausted(f"no node set solved both systems for N={n_crossings}")

    plane = lift_plane(a_poly, n_crossings, a)
    report = crossings(a_poly, n_crossings)
    z = lift_height(b_poly)
    if z.degree != height_degree(n_crossings):
        raise InternalInconsistency(
            f"deg z = {z.degree}, expected {height_degree(n_crossings)}"
        )
    curve = SpaceCurve(plane, z, b)
    report = replace(report, epsilon=node_set.epsilon, nodes=node_set.delta)
    return curve, verify_space(curve, report, node_set)


# -- independent crossing oracle ------------------------------------------------------


def crossing_oracle(x: Poly, y: Poly, grid: int = 800, box: float = 2.2) -> int:
    """Count plane double points by brute force, independent of the theory.

    For cubic x, x(s) = x(t) with s != t reduces to a quadratic in t, so
    the solution set splits into two branches t(s).  The oracle sweeps a
    dense s-grid along both branches, locates sign changes of
    g(s) = y(s) - y(t(s)), refines each by bisection with a final secant
    (Newton-type) polish, and deduplicates the ordered pairs at 1e-6.

    Evaluation runs in decimal arithmetic with precision scaled to the
    coefficient size: the deformed curves hide their coincidences at
    magnitudes far below double-precision noise.
    """
    if x.degree != 3:
        raise ValueError("oracle requires deg x = 3")
    mag = sum(abs(float(c)) * (box + 0.1) ** k for k, c in enumerate(y.coeffs)) + 2.0
    prec = 60 + int(math.log10(mag))
    with localcontext() as ctx:
        ctx.prec = prec
        c3 = Decimal(x.coeff(3).numerator) / Decimal(x.coeff(3).denominator)
        c2 = Decimal(x.coeff(2).numerator) / Decimal(x.coeff(2).denominator)
        c1 = Decimal(x.coeff(1).numerator) / Decimal(x.coeff(1).denominator)
        yd = [Decimal(c.numerator) / Decimal(c.denominator) for c in y.coeffs]

        def eval_y(v: Decimal) -> Decimal:
            acc = Decimal(0)
            for c in reversed(yd):
                acc = acc * v + c
            return acc

        def branch_t(s: Decimal, sgn: int) -> Optional[Decimal]:
            disc = (c3 * s + c2) ** 2 - 4 * c3 * (c3 * s * s + c2 * s + c1)
            if disc < 0:
                return None
            return (-(c3 * s + c2) + sgn * disc.sqrt()) / (2 * c3)

        # s-range where the divided difference of x has real solutions:
        # between the roots of the discriminant (a downward parabola)
        aa = -3 * c3 * c3
        bb = -2 * c3 * c2
        cc = c2 * c2 - 4 * c3 * c1
        par = bb * bb - 4 * aa * cc
        if par <= 0:
            return 0
        fold_lo, fold_hi = sorted(((-bb - par.sqrt()) / (2 * aa), (-bb + par.sqrt()) / (2 * aa)))
        lo = max(Decimal(-box), fold_lo)
        hi = min(Decimal(box), fold_hi)
        if lo >= hi:
            return 0
        samples = [lo + (hi - lo) * k / grid for k in range(grid + 1)]

        found: list[tuple[float, float]] = []
        for sgn in (1, -1):
            prev: Optional[tuple[Decimal, Decimal]] = None
            for s in samples:
                t = branch_t(s, sgn)
                if t is None:
                    prev = None
                    continue
                g = eval_y(s) - eval_y(t)
                if g == 0:
                    found.append((float(s), float(t)))
                    prev = (s, g)
                    continue
                if prev is not None and (prev[1] < 0) != (g < 0):
                    a, ga, bnd, gb = prev[0], prev[1], s, g
                    for _ in range(140):
                        if bnd - a < Decimal(10) ** (-30):
                            break
                        m = (a + bnd) / 2
                        tm = branch_t(m, sgn)
                        if tm is None:
                            break
                        gm = eval_y(m) - eval_y(tm)
                        if gm == 0:
                            a = bnd = m
                            break
                        if (gm < 0) == (ga < 0):
                            a, ga = m, gm
                        else:
                            bnd, gb = m, gm
                    root = (a + bnd) / 2
                    if gb != ga:
                        # one secant polish; keep it only if it stays bracketed
                        sec = (a * gb - bnd * ga) / (gb - ga)
                        if a <= sec <= bnd:
                            root = sec
                    t_root = branch_t(root, sgn)
                    if t_root is not None:
                        found.append((float(root), float(t_root)))
                prev = (s, g)

    pairs = []
    for s, t in found:
        if abs(s - t) <= 1e-6 or abs(s) > box or abs(t) > box:
            continue
        pairs.append((min(s, t), max(s, t)))
    pairs.sort()
    count = 0
    last: Optional[tuple[float, float]] = None
    for p in pairs:
        if last is None or abs(p[0] - last[0]) > 1e-6 or abs(p[1] - last[1]) > 1e-6:
            count += 1
            last = p
    return count
