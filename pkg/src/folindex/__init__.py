"""Exact local indices and residues of singular holomorphic foliations.

Everything is computed over the rationals with no floating point: local
multiplicities via standard bases for a local monomial order, residues via
the transformation law, and several independently computed routes for each
index that are compared before a value is reported.
"""

from .errors import (
    DegenerateDecomposition,
    DegenerateMinors,
    DegreeMismatch,
    EulerConditionViolated,
    FolindexError,
    IncompleteSingularities,
    NotInvariant,
    NotLogarithmic,
    NotMember,
    NotZeroDimensional,
    ParseError,
    ResourceCap,
    RingMismatch,
    RouteConflict,
    SessionError,
    TruncationNotStabilized,
    UndeclaredName,
    UnsupportedIdentity,
)
from .polyring import (
    DiffForm,
    Poly,
    PolyMatrix,
    VectorField,
    char_poly_coeffs,
    contract,
    dual_form,
    exterior_derivative,
    field_from_dual,
    homogenize,
    jacobian,
    set_coordinate_one,
    translate_to_origin,
    wedge,
)
from .localalgebra import (
    DEFAULT_MAX_STEPS,
    INFINITE,
    IdealGens,
    MonomialOrder,
    exact_divide,
    monomial_power_bound,
    normal_form,
    order_along_curve,
    quotient_dim,
)
from .series import (
    BranchParam,
    InsufficientOrder,
    TruncSeries,
    laurent_residue,
    newton_lift,
    poly_on_branch,
    pullback_one_form,
)
from .jetoracle import (
    contraction_complex_euler,
    truncated_quotient_dim,
)
from .residues import (
    PhiSpec,
    ResidueResult,
    baum_bott_residue,
    grothendieck_residue,
    log_residue_det,
)
from .indices import (
    GermInput,
    IndexReport,
    cs_index,
    gsv_curve,
    gsv_pfaff_curve,
    homological_index,
    homology_dims,
    log_index,
    milnor_number,
    normal_bundle_extension_check,
    ph_index,
    radial_index,
    saito_decomposition,
    tangency_cofactor,
    tjurina_number,
    tjurina_vf,
    var_index,
)
from .chern import (
    ChernSeries,
    IdentitySpec,
    identity_rhs,
    pn_chern_integral,
)
from .projective import (
    CheckReport,
    CheckRow,
    ProjPoint,
    ProjectiveFoliation,
    affine_singular_audit,
    curve_in_chart,
    curve_to_homogeneous,
    run_global_check,
)
from .dsl import (
    parse_session,
    print_session,
    run_session,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "FolindexError", "ResourceCap", "NotZeroDimensional", "NotMember",
    "NotInvariant", "NotLogarithmic", "DegenerateDecomposition",
    "DegenerateMinors", "DegreeMismatch", "EulerConditionViolated",
    "IncompleteSingularities", "RouteConflict", "TruncationNotStabilized",
    "UnsupportedIdentity", "SessionError", "ParseError", "UndeclaredName",
    "RingMismatch", "InsufficientOrder",
    # polynomials, fields, forms
    "Poly", "VectorField", "DiffForm", "PolyMatrix", "contract", "wedge",
    "exterior_derivative", "dual_form", "field_from_dual",
    "char_poly_coeffs", "jacobian", "homogenize", "set_coordinate_one",
    "translate_to_origin",
    # local algebra
    "MonomialOrder", "IdealGens", "INFINITE", "DEFAULT_MAX_STEPS",
    "normal_form", "quotient_dim", "monomial_power_bound", "exact_divide",
    "order_along_curve",
    # series and branches
    "TruncSeries", "BranchParam", "laurent_residue", "newton_lift",
    "poly_on_branch", "pullback_one_form",
    # jet-truncation oracle
    "truncated_quotient_dim", "contraction_complex_euler",
    # residues
    "ResidueResult", "PhiSpec", "grothendieck_residue", "baum_bott_residue",
    "log_residue_det",
    # indices
    "IndexReport", "GermInput", "milnor_number", "tjurina_number",
    "ph_index", "tangency_cofactor", "tjurina_vf", "homology_dims",
    "homological_index", "saito_decomposition", "gsv_curve",
    "gsv_pfaff_curve", "cs_index", "var_index", "radial_index", "log_index",
    "normal_bundle_extension_check",
    # degree arithmetic on projective space
    "ChernSeries", "pn_chern_integral", "IdentitySpec", "identity_rhs",
    # projective foliations and global checks
    "ProjPoint", "ProjectiveFoliation", "curve_to_homogeneous",
    "curve_in_chart", "affine_singular_audit", "run_global_check",
    "CheckRow", "CheckReport",
    # session language
    "parse_session", "print_session", "run_session",
]
