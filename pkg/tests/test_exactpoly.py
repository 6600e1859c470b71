import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from knotforge.errors import SingularSystem, ZeroPolynomial
from knotforge.exactpoly import (
    IsolatingInterval,
    Poly,
    SturmChain,
    bareiss_det,
    count_roots,
    isolate_roots,
    parse_rat,
    poly_gcd,
    rat_str,
    refine,
    solve_linear,
    squarefree_part,
)

T = Poly([0, 1])


def poly_from_roots(roots):
    p = Poly([1])
    for r in roots:
        p = p * Poly([-F(r), 1])
    return p


class TestArithmetic:
    def test_mul_distributes(self):
        assert Poly([-2, 0, 1]) * T == Poly([0, -2, 0, 1])

    def test_additive_inverse(self):
        p = Poly([F(1, 3), -2, 5])
        assert (p + (-p)).is_zero

    def test_scale(self):
        assert Poly([0, 0, 0, 1]).scale(F(1, 3)) == Poly([0, 0, 0, F(1, 3)])

    def test_zero_poly_degree(self):
        assert Poly().degree == -1
        assert Poly([0, 0]).is_zero

    def test_pow(self):
        assert (T + Poly([1])) ** 2 == Poly([1, 2, 1])

    def test_str_roundtrippable_forms(self):
        assert str(Poly([0, F(-1, 64), 0, 1])) == "t^3 - 1/64*t"
        assert str(Poly()) == "0"

    def test_rat_str(self):
        assert rat_str(F(3)) == "3"
        assert rat_str(F(-8, 27)) == "-8/27"
        assert parse_rat("-8/27") == F(-8, 27)


class TestCompose:
    def test_square_of_cubic(self):
        # (x^2) o (t^3 - 3t) = t^6 - 6t^4 + 9t^2
        assert Poly([0, 0, 1]).compose(Poly([0, -3, 0, 1])) == Poly([0, 0, 9, 0, -6, 0, 1])

    def test_identity(self):
        p = Poly([F(1, 2), 3, 0, -7])
        assert p.compose(T) == p

    def test_substitution_collapses_variable_change(self):
        # x (x-3)^2 / 4 evaluated at x = t^2 equals t^2 (t^2-3)^2 / 4
        quartic = (Poly([0, 1]) * Poly([-3, 1]) * Poly([-3, 1])).scale(F(1, 4))
        tsq = T * T
        direct = (tsq * Poly([-3, 0, 1]) * Poly([-3, 0, 1])).scale(F(1, 4))
        assert quartic.compose(tsq) == direct


class TestEval:
    def test_cubic_values(self):
        p = Poly([0, -3, 0, 1])
        assert p(2) == 2
        assert p(0) == 0

    def test_fraction_point(self):
        assert Poly([-2, 0, 1])(F(1, 2)) == F(-7, 4)

    def test_eval_float(self):
        assert Poly([0, -3, 0, 1]).eval_float(2.0) == pytest.approx(2.0)


class TestSquarefree:
    def test_strips_multiplicity(self):
        p = Poly.monomial(5) * Poly([-6, 0, 1])
        sf = squarefree_part(p)
        assert sf.degree == 3
        assert sf(0) == 0 and sf.coeff(0) == 0
        assert count_roots(sf, -3, 3) == count_roots(p, -3, 3) == 3

    def test_cube(self):
        assert squarefree_part(Poly.monomial(3)) == T

    def test_squarefree_fixed(self):
        p = Poly([-2, 0, 1])
        assert squarefree_part(p) == p

    def test_zero_raises(self):
        with pytest.raises(ZeroPolynomial):
            squarefree_part(Poly())

    def test_gcd(self):
        a = poly_from_roots([1, 2]) * 3
        b = poly_from_roots([2, 5])
        assert poly_gcd(a, b) == Poly([-2, 1])


class TestCountRoots:
    def test_three_small_roots(self):
        assert count_roots(Poly([0, F(-1, 64), 0, 1]), -2, 2) == 3

    def test_no_real_roots(self):
        assert count_roots(Poly([1, 0, 1]), -2, 2) == 0

    def test_roots_beyond_interval(self):
        assert count_roots(Poly([-6, 0, 1]), -2, 2) == 0  # roots +-sqrt(6)

    def test_open_interval_excludes_endpoints(self):
        p = poly_from_roots([0, 1, 2])
        assert count_roots(p, 0, 2) == 1
        assert count_roots(p, F(-1, 2), 2) == 2
        assert count_roots(p, F(-1), F(5, 2)) == 3

    def test_zero_polynomial_raises(self):
        with pytest.raises(ZeroPolynomial):
            count_roots(Poly(), -1, 1)

    def test_multiplicities_do_not_double_count(self):
        p = poly_from_roots([F(1, 3), F(1, 3), -1])
        assert count_roots(p, -2, 2) == 2


class TestIsolation:
    def test_isolates_three(self):
        p = Poly([0, F(-1, 64), 0, 1])  # roots -1/8, 0, 1/8
        ivs = isolate_roots(p, -2, 2)
        assert len(ivs) == 3
        for iv, root in zip(ivs, [F(-1, 8), F(0), F(1, 8)]):
            assert iv.lo < root <= iv.hi

    def test_refine_width(self):
        p = Poly([0, F(-1, 64), 0, 1])
        iv = isolate_roots(p, 0, 2)[-1]
        tight = refine(p, iv, F(1, 2**10))
        assert tight.width <= F(1, 1024)
        assert tight.lo < F(1, 8) <= tight.hi

    def test_irrational_root(self):
        p = Poly([-2, 0, 1])
        ivs = isolate_roots(p, 0, 2)
        assert len(ivs) == 1
        tight = refine(p, ivs[0], F(1, 2**30))
        mid = float(tight.midpoint)
        assert abs(mid - 2**0.5) < 1e-8

    def test_refine_keeps_root_at_exact_midpoint_hit(self):
        # the bisection midpoint of (-2, 2) is the root 0 itself
        p = T
        ivs = isolate_roots(p, -2, 2)
        tight = refine(p, ivs[0], F(1, 2**20))
        assert tight.lo < 0 <= tight.hi
        assert tight.width <= F(1, 2**20)

    def test_sturm_chain_shape(self):
        p = Poly([0, F(-1, 64), 0, 1])
        chain = SturmChain(p).chain
        assert chain[0] == p
        assert chain[1] == p.derivative()
        assert chain[-1].degree == 0

    def test_root_exactly_at_hi_does_not_contaminate_last_interval(self):
        # regression: with a root exactly at the window ceiling, the top
        # isolating interval must not contain that excluded root as well
        p = poly_from_roots([F(-29, 16), F(-3, 2), F(9, 16), F(3, 2), F(2)])
        ivs = isolate_roots(p, -2, 2)
        assert len(ivs) == 4
        assert ivs[-1].hi < 2
        tight = refine(p, ivs[-1], F(1, 2**25))
        assert tight.lo < F(3, 2) <= tight.hi

    def test_isolation_fuzz_with_endpoint_roots(self):
        rng = random.Random(7)
        for _ in range(120):
            k = rng.randint(1, 5)
            roots = sorted(rng.sample([F(n, 16) for n in range(-32, 33)], k))
            p = Poly([1])
            for r in roots:
                for _ in range(rng.randint(1, 2)):
                    p = p * Poly([-r, 1])
            lo = rng.choice(roots) if rng.random() < 0.4 else F(-2)
            hi = lo + F(rng.randint(1, 24), 8)
            inside = [r for r in roots if lo < r < hi]
            ivs = isolate_roots(p, lo, hi)
            assert len(ivs) == len(inside)
            assert count_roots(p, lo, hi) == len(inside)
            for iv, r in zip(ivs, inside):
                tight = refine(p, iv, F(1, 2**22))
                assert tight.lo < r <= tight.hi
                assert tight.width <= F(1, 2**22)


small_rat = st.fractions(min_value=F(-2), max_value=F(2), max_denominator=16)


class TestProperties:
    @given(st.lists(small_rat, min_size=1, max_size=5, unique=True))
    @settings(max_examples=60, deadline=None)
    def test_count_exact_on_known_factors(self, roots):
        p = poly_from_roots(roots)
        inside = [r for r in roots if F(-2) < r < F(2)]
        assert count_roots(p, -2, 2) == len(inside)

    @given(st.lists(small_rat, min_size=1, max_size=5, unique=True), small_rat)
    @settings(max_examples=60, deadline=None)
    def test_count_additivity(self, roots, mid):
        p = poly_from_roots(roots)
        if p(mid) == 0 or not F(-2) < mid < F(2):
            return
        assert count_roots(p, -2, mid) + count_roots(p, mid, 2) == count_roots(p, -2, 2)

    @given(st.lists(small_rat, min_size=1, max_size=4, unique=True))
    @settings(max_examples=40, deadline=None)
    def test_square_has_same_squarefree_counts(self, roots):
        p = poly_from_roots(roots)
        assert count_roots(squarefree_part(p * p), -2, 2) == count_roots(
            squarefree_part(p), -2, 2
        )

    @given(
        st.lists(small_rat, min_size=1, max_size=4),
        st.lists(small_rat, min_size=1, max_size=4),
        small_rat,
    )
    @settings(max_examples=60, deadline=None)
    def test_compose_eval_consistency(self, pc, qc, a):
        p, q = Poly(pc), Poly(qc)
        assert p.compose(q)(a) == p(q(a))


class TestLinearAlgebra:
    def test_solve(self):
        sol = solve_linear([[F(2), F(1)], [F(1), F(3)]], [F(5), F(10)])
        assert sol == [F(1), F(3)]

    def test_singular_raises(self):
        with pytest.raises(SingularSystem):
            solve_linear([[F(1), F(2)], [F(2), F(4)]], [F(1), F(1)])

    def test_bareiss_matches_cofactor_expansion(self):
        m = [[F(1, 2), F(3), F(1)], [F(2), F(1, 5), F(0)], [F(1), F(1), F(4)]]

        def det3(a):
            return (
                a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
                - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
                + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
            )

        assert bareiss_det(m) == det3(m)

    def test_bareiss_singular(self):
        assert bareiss_det([[F(1), F(2)], [F(2), F(4)]]) == 0
