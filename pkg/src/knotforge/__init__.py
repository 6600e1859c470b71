"""Certified polynomial parametrizations of (2,N) torus knots.

For every odd N the package synthesizes an explicit space curve
(x(t), y(t), z(t)) of degree (3, N + 2*floor(N/4) + 1, N + 2*floor((N+1)/4))
whose plane projection has exactly N double points with torus-knot
crossing structure, and certifies every claim with exact rational
arithmetic (Sturm root counts, exact linear solves, exact interpolation
identities).  Floats appear only in reports and rendering.
"""

from .chebyshev import (
    ChebT,
    ChebV,
    divided_difference,
    eps,
    from_T,
    from_V,
    lift_from_V,
    t_poly,
    to_T,
    to_V,
    v_poly,
    w_index,
    wtilde_index,
)
from .errors import (
    CertificationFailed,
    DomainError,
    EpsilonExhausted,
    InternalInconsistency,
    KnotforgeError,
    NotInImage,
    OrderingViolation,
    SignViolation,
    SingularSystem,
    ZeroPolynomial,
)
from .exactpoly import (
    IsolatingInterval,
    Poly,
    Rational,
    SturmChain,
    count_roots,
    isolate_roots,
    rat_str,
    parse_rat,
    refine,
    squarefree_part,
)
from .knots import (
    CnBasis,
    CnTildeBasis,
    Crossing,
    CrossingReport,
    NodeSet,
    PlaneCurve,
    SpaceCurve,
    auto_nodes,
    build_cn,
    build_cn_tilde,
    build_cn_triangular,
    certify_A,
    crossing_oracle,
    crossings,
    lift_height,
    lift_plane,
    solve_deformation,
    solve_height,
    synthesize,
    verify_space,
)
from .pade import PadeApproximant, check_pole_locations, expand, pade
from .stieltjes import PhiSeries, difference, hankel_det, ode_residual, phi, phi_closed

__version__ = "0.1.0"

__all__ = [
    "ChebT", "ChebV", "divided_difference", "eps", "from_T", "from_V",
    "lift_from_V", "t_poly", "to_T", "to_V", "v_poly", "w_index", "wtilde_index",
    "CertificationFailed", "DomainError", "EpsilonExhausted", "InternalInconsistency",
    "KnotforgeError", "NotInImage", "OrderingViolation", "SignViolation",
    "SingularSystem", "ZeroPolynomial",
    "IsolatingInterval", "Poly", "Rational", "SturmChain", "count_roots",
    "isolate_roots", "rat_str", "parse_rat", "refine", "squarefree_part",
    "CnBasis", "CnTildeBasis", "Crossing", "CrossingReport", "NodeSet",
    "PlaneCurve", "SpaceCurve", "auto_nodes", "build_cn", "build_cn_tilde",
    "build_cn_triangular", "certify_A", "crossing_oracle", "crossings",
    "lift_height", "lift_plane", "solve_deformation", "solve_height",
    "synthesize", "verify_space",
    "PadeApproximant", "check_pole_locations", "expand", "pade",
    "PhiSeries", "difference", "hankel_det", "ode_residual", "phi", "phi_closed",
    "__version__",
]
