import json
from fractions import Fraction as F

import pytest

from knotforge.chebyshev import ChebT, ChebV, t_poly
from knotforge.exactpoly import Poly
from knotforge.knots import synthesize
from knotforge.serialize import (
    SchemaError,
    basis_from_json,
    basis_to_json,
    curve_to_dict,
    dumps,
    verify_curve,
)


class TestBasisJson:
    def test_monomial_roundtrip(self):
        p = Poly([0, F(-3), 0, 1])
        d = basis_to_json(p)
        assert d == {"basis": "monomial", "coeffs": ["0", "-3", "0", "1"]}
        assert basis_from_json(d) == p

    def test_t_roundtrip(self):
        c = ChebT.of({2: F(127, 64), 4: -1})
        d = basis_to_json(c)
        assert d == {"basis": "T", "coeffs": ["0", "0", "127/64", "0", "-1"]}
        assert basis_from_json(d) == c

    def test_v_roundtrip(self):
        c = ChebV.of({0: F(1, 3), 4: F(-1, 3)})
        d = basis_to_json(c)
        assert d["basis"] == "V"
        assert basis_from_json(d) == c

    def test_zero_poly(self):
        assert basis_to_json(Poly()) == {"basis": "monomial", "coeffs": ["0"]}

    def test_unknown_basis_rejected(self):
        with pytest.raises(SchemaError):
            basis_from_json({"basis": "chebyshev-2nd", "coeffs": ["1"]})

    def test_bad_coefficient_rejected(self):
        with pytest.raises(SchemaError):
            basis_from_json({"basis": "T", "coeffs": ["1/0x"]})


class TestCurveDict:
    def test_key_order_is_stable(self):
        curve, report = synthesize(3)
        doc = curve_to_dict(3, curve.plane.x, curve.plane.y, curve.z, report, True)
        assert list(doc.keys()) == ["N", "epsilon", "nodes", "x", "y", "z", "crossings", "certified"]
        assert doc["crossings"][0].keys() == {"u", "s", "t", "sign"}
        assert ".." in doc["crossings"][0]["u"]

    def test_dumps_deterministic(self):
        curve, report = synthesize(3)
        doc = curve_to_dict(3, curve.plane.x, curve.plane.y, curve.z, report, True)
        assert dumps(doc) == dumps(json.loads(dumps(doc)))


class TestVerifyCurve:
    def test_rejects_missing_keys(self):
        with pytest.raises(SchemaError):
            verify_curve({"N": 3})

    def test_rejects_even_n(self):
        with pytest.raises(SchemaError):
            verify_curve({"N": 4, "x": basis_to_json(t_poly(3)),
                          "y": basis_to_json(ChebT.of({2: 1}))})

    def test_rejects_wrong_x(self):
        ok, lines = verify_curve({
            "N": 1,
            "x": {"basis": "monomial", "coeffs": ["0", "0", "0", "1"]},  # t^3, not T_3
            "y": basis_to_json(ChebT.of({2: 1})),
        })
        assert not ok and any("FAIL" in ln for ln in lines)

    def test_accepts_monomial_y(self):
        # y may be stored in the monomial basis; T_2 = t^2 - 2
        ok, lines = verify_curve({
            "N": 1,
            "x": basis_to_json(t_poly(3)),
            "y": {"basis": "monomial", "coeffs": ["-2", "0", "1"]},
        })
        assert ok

    def test_wrong_count_fails(self):
        ok, lines = verify_curve({
            "N": 3,
            "x": basis_to_json(t_poly(3)),
            "y": basis_to_json(ChebT.of({2: 1})),  # only one crossing
        })
        assert not ok
        assert any("expected 3" in ln for ln in lines)

    def test_stored_node_must_be_root(self):
        curve, report = synthesize(3)
        doc = curve_to_dict(3, curve.plane.x, curve.plane.y, curve.z, report, True)
        doc["nodes"] = ["1/7"]  # not the planted node
        ok, lines = verify_curve(doc)
        assert not ok
