import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from knotforge.chebyshev import divided_difference, from_V, to_V
from knotforge.errors import NotInImage
from knotforge.exactpoly import Poly
from knotforge.knots import (
    NodeSet,
    auto_nodes,
    build_cn,
    build_cn_tilde,
    certify_A,
    crossings,
    default_nodes,
    height_degree,
    lift_height,
    lift_plane,
    plane_degree,
    solve_deformation,
    solve_height,
    synthesize,
    verify_space,
)

T = Poly([0, 1])


class TestDeformation:
    def test_n1_exact(self):
        basis = build_cn(1)
        a, poly = solve_deformation(basis, NodeSet(1, (F(1, 8),)))
        assert a == (F(-1, 64),)
        assert poly == Poly([0, F(-1, 64), 0, 1])
        assert poly(F(1, 8)) == 0 and poly(F(-1, 8)) == 0 and poly(0) == 0

    def test_n0_returns_c0(self):
        basis = build_cn(0)
        a, poly = solve_deformation(basis, NodeSet(0, ()))
        assert a == () and poly == T

    def test_n2_vanishes_at_all_five_nodes(self):
        basis = build_cn(2)
        nodes = NodeSet(2, (F(1, 16), F(1, 8)))
        _, poly = solve_deformation(basis, nodes)
        for u in nodes.all_roots():
            assert poly(u) == 0
        assert len(nodes.all_roots()) == 5

    def test_coefficients_shrink_like_eps_squared(self):
        # a_k(eps) = O(eps^(2(n-k))): consecutive halvings shrink by about
        # 4^-(n-k); the 1.5x slack absorbs the O(eps^2) correction
        for n in (3, 4):
            basis = build_cn(n)
            sols = {}
            for eps in (F(1, 4), F(1, 8), F(1, 16)):
                sols[eps], _ = solve_deformation(basis, default_nodes(n, eps))
            for k in range(n):
                bound = F(3, 2) / F(4) ** (n - k)
                assert abs(sols[F(1, 8)][k] / sols[F(1, 4)][k]) <= bound
                assert abs(sols[F(1, 16)][k] / sols[F(1, 8)][k]) <= bound


class TestCertify:
    def test_planted_roots_pass(self):
        assert certify_A(Poly([0, F(-1, 64), 0, 1]), 3)

    def test_roots_outside_band_fail(self):
        # t^3 - 6t has roots +-sqrt(6) outside [-2, 2]: only 1 root counted
        assert not certify_A(Poly([0, -6, 0, 1]), 3)

    def test_c2_has_single_root_in_band(self):
        assert certify_A(build_cn(2).cn[2], 1)

    def test_root_between_one_and_two_fails(self):
        # roots {0, +-3/2} are all in (-2, 2) but not all in (-1, 1)
        poly = Poly([0, F(-9, 4), 0, 1])
        assert not certify_A(poly, 3)
        assert certify_A(poly, 3) is False and poly(F(3, 2)) == 0

    def test_zero_polynomial(self):
        assert not certify_A(Poly(), 1)


class TestAutoNodes:
    def test_n1_first_epsilon(self):
        nodes = auto_nodes(1)
        assert nodes.delta == (F(1, 8),)
        assert nodes.epsilon == F(1, 4)

    def test_n4_first_epsilon(self):
        # pinned: the default scale certifies without any halving
        nodes = auto_nodes(4)
        assert nodes.epsilon == F(1, 4)
        assert nodes.delta == tuple(F(1, 4) * F(i, 5) for i in range(1, 5))

    def test_n0_trivial(self):
        nodes = auto_nodes(0)
        assert nodes.n == 0 and nodes.delta == ()


class TestPlaneLift:
    def test_trefoil_lift(self):
        poly = Poly([0, F(-1, 64), 0, 1])
        plane = lift_plane(poly, 3)
        assert plane.x == Poly([0, -3, 0, 1])
        assert plane.y.as_dict() == {2: F(127, 64), 4: F(-1)}
        assert plane.x.degree == 3 and plane.y.degree == 4

    def test_undeformed_cubic(self):
        plane = lift_plane(Poly([0, 0, 0, 1]), 3)
        assert plane.y.as_dict() == {2: F(2), 4: F(-1)}

    def test_divided_difference_inverts_lift(self):
        poly = Poly([0, F(-1, 64), 0, 1])
        plane = lift_plane(poly, 3)
        assert from_V(divided_difference(plane.y)) == poly

    def test_rejects_non_image(self):
        with pytest.raises(NotInImage):
            lift_plane(from_V(to_V(Poly([0, 0, 1]))), 1)  # even poly has V_2 part


class TestCrossings:
    def test_trefoil_middle_crossing(self):
        report = crossings(Poly([0, F(-1, 64), 0, 1]), 3)
        mid = report.crossings[1]
        assert mid.u == pytest.approx(0.0, abs=1e-12)
        assert mid.alpha == pytest.approx(math.pi / 2, abs=1e-12)
        assert mid.s == pytest.approx(-math.sqrt(3), abs=1e-12)
        assert mid.t == pytest.approx(math.sqrt(3), abs=1e-12)

    def test_x_coincidence_at_middle(self):
        report = crossings(T, 1)
        c = report.crossings[0]
        x = Poly([0, -3, 0, 1])
        assert abs(x.eval_float(c.s) - x.eval_float(c.t)) < 1e-12

    def test_ordering_flags(self):
        report = crossings(Poly([0, F(-1, 64), 0, 1]), 3)
        assert report.ordering_ok and report.count_certified
        seq = [c.s for c in report.crossings] + [c.t for c in report.crossings]
        assert seq == sorted(seq)


class TestHeight:
    def test_n3_exact_solution(self):
        tilde = build_cn_tilde(1)
        nodes = NodeSet(1, (F(1, 8),))
        b, poly = solve_height(tilde, nodes)
        assert tilde.cn[1](F(1, 8)) == F(191, 12288)
        assert b == (F(1), F(-24576, 191))
        assert poly(0) == 1 and poly(F(1, 8)) == -1 and poly(F(-1, 8)) == -1

    def test_b_evenness(self):
        tilde = build_cn_tilde(2)
        _, poly = solve_height(tilde, NodeSet(2, (F(1, 16), F(1, 8))))
        assert poly.is_even()

    def test_sign_pattern(self):
        tilde = build_cn_tilde(1)
        _, poly = solve_height(tilde, NodeSet(1, (F(1, 8),)))
        values = [poly(u) for u in (F(-1, 8), F(0), F(1, 8))]
        assert values == [-1, 1, -1]

    def test_lift_height_n3(self):
        tilde = build_cn_tilde(1)
        b, poly = solve_height(tilde, NodeSet(1, (F(1, 8),)))
        z = lift_height(poly)
        b1 = b[1]
        assert z.as_dict() == {1: 1 + b1 / 3, 5: b1 / 3}
        assert z.degree == 5


class TestSynthesize:
    def test_unknot_diagram(self):
        curve, report = synthesize(1)
        assert curve.plane.y.as_dict() == {2: F(1)}
        assert curve.z.as_dict() == {1: F(-1)}
        assert report.n_crossings == 1
        assert [c.sign for c in report.crossings] == [-1]

    def test_trefoil(self):
        curve, report = synthesize(3)
        assert (curve.plane.x.degree, curve.plane.y.degree, curve.z.degree) == (3, 4, 5)
        assert [c.sign for c in report.crossings] == [-1, 1, -1]
        assert report.count_certified and report.ordering_ok and report.signs_alternate

    def test_degrees_for_nine(self):
        curve, report = synthesize(9)
        assert curve.plane.y.degree == 14
        assert curve.z.degree == 13

    def test_degree_formulas(self):
        assert plane_degree(3) == 4 and height_degree(3) == 5
        assert plane_degree(9) == 14 and height_degree(9) == 13
        assert plane_degree(21) == 32 and height_degree(21) == 31

    def test_rejects_even(self):
        with pytest.raises(ValueError):
            synthesize(4)

    def test_explicit_nodes(self):
        curve, report = synthesize(3, nodes=[F(1, 8)])
        assert report.nodes == (F(1, 8),)
        assert curve.plane.y.as_dict() == {2: F(127, 64), 4: F(-1)}

    def test_large_explicit_nodes_still_certify(self):
        # the certified region is much larger than the 'small enough' scale
        # the existence argument needs; even nodes near 1 pass the Sturm gate
        curve, report = synthesize(5, nodes=[F(3, 4), F(9, 10)])
        assert report.count_certified and report.signs_alternate

    def test_wrong_node_count_rejected(self):
        with pytest.raises(ValueError):
            synthesize(5, nodes=[F(1, 8)])  # N=5 needs two positive nodes

    def test_exact_identities_and_margins(self):
        curve, report = synthesize(7)
        nodes = NodeSet(3, report.nodes)
        a_poly = from_V(divided_difference(curve.plane.y))
        b_poly = from_V(divided_difference(curve.z))
        for i, u in enumerate(nodes.all_roots(), start=1):
            assert a_poly(u) == 0
            assert b_poly(u) == (-1) ** i
        assert report.ordering_margin > 1e-8
        assert report.sign_margin > 1.0
        assert report.x_coincidence < 1e-9 and report.y_coincidence < 1e-9

    def test_verify_space_is_idempotent(self):
        curve, report = synthesize(5)
        again = verify_space(curve, report, NodeSet(2, report.nodes))
        assert again.signs_alternate
        assert [c.sign for c in again.crossings] == [c.sign for c in report.crossings]

    @given(
        n=st.integers(min_value=0, max_value=4),
        eps=st.fractions(min_value=F(1, 64), max_value=F(1, 2), max_denominator=64),
    )
    @settings(max_examples=15, deadline=None)
    def test_certifies_across_node_scales(self, n, eps):
        curve, report = synthesize(2 * n + 1, epsilon=eps)
        assert report.count_certified and report.ordering_ok and report.signs_alternate
        assert curve.plane.y.degree == plane_degree(2 * n + 1)
        assert curve.z.degree == height_degree(2 * n + 1)
