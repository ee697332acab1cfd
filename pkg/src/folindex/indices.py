"""Local indices of vector fields and foliation germs at singular points.

Every operation returns an IndexReport carrying the value, the method that
produced it, and the outcome of whatever independent cross-checks were run.
A failed cross-check never passes silently: the report is flagged CONFLICT
and RouteConflict is raised with the report attached.

Points default to the origin; all computations translate their inputs there
first.  Curve branches are given in absolute coordinates (the branch passes
through the point at t == 0).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    DegenerateDecomposition,
    DegenerateMinors,
    NotInvariant,
    NotLogarithmic,
    NotZeroDimensional,
    RouteConflict,
    TruncationNotStabilized,
)
from .jetoracle import contraction_complex_euler
from .localalgebra import (
    INFINITE,
    IdealGens,
    MonomialOrder,
    exact_divide,
    normal_form,
    order_along_curve,
    quotient_dim,
)
from .polyring import (
    DiffForm,
    Poly,
    PolyMatrix,
    VectorField,
    dual_form,
    exterior_derivative,
    field_from_dual,
    translate_to_origin,
)
from .residues import grothendieck_residue
from .series import (
    InsufficientOrder,
    laurent_residue,
    poly_on_branch,
    pullback_one_form,
)

__all__ = [
    "IndexReport",
    "DecompositionTriple",
    "GermInput",
    "milnor_number",
    "tjurina_number",
    "ph_index",
    "tangency_cofactor",
    "tjurina_vf",
    "homology_dims",
    "homological_index",
    "saito_decomposition",
    "gsv_curve",
    "gsv_pfaff_curve",
    "cs_index",
    "var_index",
    "radial_index",
    "log_index",
    "normal_bundle_extension_check",
]


@dataclass
class IndexReport:
    value: object
    method: str
    crosschecks: list = field(default_factory=list)
    flags: list = field(default_factory=list)


def _finish(value, method, crosschecks=()):
    crosschecks = list(crosschecks)
    report = IndexReport(value=value, method=method, crosschecks=crosschecks)
    bad = [name for name, ok, _ in crosschecks if not ok]
    if bad:
        report.flags.append("CONFLICT")
        raise RouteConflict(
            "independent routes disagree (%s)" % ", ".join(bad), report=report)
    return report


def _at_point(p, point):
    return p if point is None else translate_to_origin(p, point)


def _field_at_point(v, point):
    if point is None:
        return v
    return VectorField(tuple(translate_to_origin(c, point)
                             for c in v.components))


def _local_dim(gens, n, max_steps, what):
    d = quotient_dim(IdealGens(tuple(gens), MonomialOrder.local(n)), max_steps)
    if d is INFINITE:
        raise NotZeroDimensional("%s is not isolated" % what)
    return d


# ---------------------------------------------------------------------------
# classical numbers


def milnor_number(f, point=None, max_steps=None):
    """Dimension of the local ring modulo the partials of f."""
    f0 = _at_point(f, point)
    n = f.nvars
    value = _local_dim([f0.diff(i) for i in range(n)], n, max_steps,
                       "critical point of the function")
    return _finish(value, "local-algebra")


def tjurina_number(f, point=None, max_steps=None):
    """Dimension of the local ring modulo f and its partials."""
    f0 = _at_point(f, point)
    n = f.nvars
    value = _local_dim([f0] + [f0.diff(i) for i in range(n)], n, max_steps,
                       "singular point of the hypersurface")
    return _finish(value, "local-algebra")


def ph_index(v, point=None, max_steps=None):
    """Index of an isolated zero of v in the ambient space: the dimension of
    the local ring modulo the components.  Cross-checked against the residue
    of the Jacobian determinant, which must agree exactly."""
    v0 = _field_at_point(v, point)
    n = v.nvars
    value = _local_dim(v0.components, n, max_steps, "zero of the vector field")
    res = grothendieck_residue(v0.jacobian().det(), v0, max_steps=max_steps)
    checks = [("jacobian-residue", res.value == value,
               "residue %s at power bound %d" % (res.value, res.bound))]
    return _finish(value, "local-algebra", checks)


# ---------------------------------------------------------------------------
# tangency and the induced data on a hypersurface


def tangency_cofactor(v, f):
    """The polynomial h with v(f) == h * f; NotInvariant when there is none."""
    assert v.nvars == f.nvars
    assert not f.is_zero()
    h = exact_divide(v.apply(f), f)
    if h is None:
        raise NotInvariant("vector field is not tangent to the hypersurface")
    return h


def tjurina_vf(v, f, point=None, max_steps=None):
    """Dimension of the local ring modulo f and the components of v."""
    f0 = _at_point(f, point)
    v0 = _field_at_point(v, point)
    value = _local_dim((f0,) + v0.components, f.nvars, max_steps,
                       "zero of the field on the hypersurface")
    return _finish(value, "local-algebra")


def homology_dims(v, f, point=None, max_steps=None):
    """The end dimensions (h_0, h_top, lam) of the contraction complex on the
    hypersurface f == 0, from closed module formulas.

    h_0 uses the components ideal, h_top the Jacobian ideal of f; lam is the
    middle correction term and is None when the hypersurface is a curve.
    """
    f0 = _at_point(f, point)
    v0 = _field_at_point(v, point)
    n = f.nvars
    h = tangency_cofactor(v0, f0)
    a = v0.components
    jac = [f0.diff(i) for i in range(n)]
    h0 = _local_dim((f0,) + a, n, max_steps, "zero of the field on the hypersurface")
    htop = _local_dim([f0] + jac, n, max_steps, "singular point of the hypersurface")
    lam = None
    if n - 1 >= 2:
        lam = (h0
               + _local_dim((h,) + a, n, max_steps, "cofactor locus")
               - _local_dim(a, n, max_steps, "ambient zero of the field"))
    return h0, htop, lam


def homological_index(v, f, point=None, oracle=False, max_steps=None):
    """Euler characteristic of the contraction complex on the hypersurface,
    out of closed module-dimension formulas split by the parity of the
    hypersurface dimension.  With oracle=True the truncation oracle recomputes
    the characteristic independently and must agree."""
    f0 = _at_point(f, point)
    v0 = _field_at_point(v, point)
    n = f.nvars
    h = tangency_cofactor(v0, f0)
    a = v0.components
    jac = [f0.diff(i) for i in range(n)]
    htop = _local_dim([f0] + jac, n, max_steps,
                      "singular point of the hypersurface")
    if (n - 1) % 2 == 1:
        h0 = _local_dim((f0,) + a, n, max_steps,
                        "zero of the field on the hypersurface")
        value = h0 - htop
    else:
        value = (_local_dim(a, n, max_steps, "ambient zero of the field")
                 - _local_dim((h,) + a, n, max_steps, "cofactor locus")
                 + htop)
    checks = []
    if oracle:
        chi, _ = contraction_complex_euler(v0, f0)
        checks.append(("truncation-oracle", chi == value,
                       "oracle characteristic %s" % chi))
    return _finish(value, "module-dimension-formula", checks)


# ---------------------------------------------------------------------------
# plane-curve decomposition and the indices built on it


@dataclass(frozen=True)
class DecompositionTriple:
    g: Poly
    xi: Poly
    eta: DiffForm
    variant: str


def _saito_triple(v, f, variant):
    """Build one decomposition variant and verify its defining identity
    g * omega_v == xi * df + f * eta exactly."""
    omega = dual_form(v)
    p_coeff = omega.coefficient((0,))
    q_coeff = omega.coefficient((1,))
    fx = f.diff(0)
    fy = f.diff(1)
    c = exact_divide(p_coeff * fy - q_coeff * fx, f)
    assert c is not None, "tangency guarantees this division"
    if variant == "fy":
        g, xi, eta = fy, q_coeff, DiffForm(2, 1, {(0,): c})
    else:
        g, xi, eta = fx, p_coeff, DiffForm(2, 1, {(1,): -c})
    lhs = g * omega
    rhs = DiffForm(2, 1, {(0,): xi * fx, (1,): xi * fy}) + f * eta
    assert lhs == rhs, "decomposition identity broke"
    return DecompositionTriple(g=g, xi=xi, eta=eta, variant=variant)


def _saito_valid_variants(v, f, max_steps):
    curve = IdealGens((f,), MonomialOrder.local(2))
    out = []
    for variant in ("fy", "fx"):
        triple = _saito_triple(v, f, variant)
        if (order_along_curve(triple.g, curve, max_steps) is not INFINITE
                and order_along_curve(triple.xi, curve, max_steps)
                is not INFINITE):
            out.append(triple)
    return out


def saito_decomposition(v, f, variant="auto", max_steps=None):
    """Decompose the dual form of v along the invariant curve f == 0:
    g * omega_v == xi * df + f * eta.

    variant "fy" or "fx" forces which partial plays g; "auto" returns the
    first variant whose g and xi have finite vanishing order along the curve
    and raises DegenerateDecomposition when neither does.
    """
    assert v.nvars == 2 and f.nvars == 2
    tangency_cofactor(v, f)
    if variant in ("fy", "fx"):
        return _saito_triple(v, f, variant)
    assert variant == "auto"
    valid = _saito_valid_variants(v, f, max_steps)
    if not valid:
        raise DegenerateDecomposition(
            "both decomposition variants vanish along the curve")
    return valid[0]


def gsv_curve(v, f, point=None, max_steps=None):
    """Index of v along the invariant plane curve f == 0, via vanishing
    orders of the decomposition data.  Every valid variant is computed and
    must agree, as must the homological route."""
    assert v.nvars == 2 and f.nvars == 2
    f0 = _at_point(f, point)
    v0 = _field_at_point(v, point)
    tangency_cofactor(v0, f0)
    valid = _saito_valid_variants(v0, f0, max_steps)
    if not valid:
        raise DegenerateDecomposition(
            "both decomposition variants vanish along the curve")
    curve = IdealGens((f0,), MonomialOrder.local(2))
    values = []
    for triple in valid:
        val = (order_along_curve(triple.xi, curve, max_steps)
               - order_along_curve(triple.g, curve, max_steps))
        values.append((triple.variant, val))
    value = values[0][1]
    checks = [("variant-" + variant, val == value, "order difference %s" % val)
              for variant, val in values[1:]]
    hom = homological_index(v0, f0, max_steps=max_steps)
    checks.append(("homological", hom.value == value,
                   "homological index %s" % hom.value))
    return _finish(value, "vanishing-orders", checks)


def cs_index(v, f, branch, point=None, max_steps=None, max_order=160):
    """Residue-type index of v along one parametrized branch of the invariant
    curve f == 0: minus the t-residue of the pulled-back eta over xi.

    The branch must lie on the curve and pass through the point.  The residue
    is exact once the working order suffices; extendable branches are re-lifted
    up to max_order before TruncationNotStabilized is raised."""
    assert v.nvars == 2 and f.nvars == 2
    f0 = _at_point(f, point)
    v0 = _field_at_point(v, point)
    tangency_cofactor(v0, f0)
    valid = _saito_valid_variants(v0, f0, max_steps)
    if not valid:
        raise DegenerateDecomposition(
            "both decomposition variants vanish along the curve")

    shift = (Fraction(0), Fraction(0)) if point is None else tuple(point)
    order = 20
    cap = branch.max_order()
    if cap is not None:
        order = min(order, cap)

    while True:
        br = branch.at_order(order)
        comps = tuple(s - shift[i] for i, s in enumerate(br.comps))
        if all(s.valuation() is None for s in comps):
            raise NotInvariant("branch is constant at the point")
        if any(s.coeffs[0] != 0 for s in comps):
            raise NotInvariant("branch does not pass through the point")
        if not poly_on_branch(f0, comps).is_zero():
            raise NotInvariant("branch does not lie on the curve")
        try:
            values = []
            for triple in valid:
                num = pullback_one_form(triple.eta, comps)
                den = poly_on_branch(triple.xi, comps).truncate(num.order)
                values.append((triple.variant, -laurent_residue(num, den)))
            break
        except InsufficientOrder:
            if cap is None and order < max_order:
                order = min(2 * order, max_order)
                continue
            raise TruncationNotStabilized(
                "branch order %d cannot resolve the residue" % order)

    value = values[0][1]
    checks = [("variant-" + variant, val == value, "residue %s" % val)
              for variant, val in values[1:]]
    return _finish(value, "branch-residue", checks)


def var_index(v, f, branch, point=None, max_steps=None):
    """Variation-type index along one branch: the curve index plus the
    branch residue index."""
    gsv = gsv_curve(v, f, point=point, max_steps=max_steps)
    cs = cs_index(v, f, branch, point=point, max_steps=max_steps)
    value = gsv.value + cs.value
    checks = [("gsv-part", True, "curve index %s" % gsv.value),
              ("cs-part", True, "branch residue %s" % cs.value)]
    return _finish(value, "sum-of-parts", checks)


def radial_index(v, f, point=None, max_steps=None):
    """Index with the Milnor-number defect removed: the homological index
    minus (-1)^dim(V) times the Milnor number of f."""
    dim_v = f.nvars - 1
    hom = homological_index(v, f, point=point, max_steps=max_steps)
    mu = milnor_number(f, point=point, max_steps=max_steps)
    sign = -1 if dim_v % 2 else 1
    value = hom.value - sign * mu.value
    checks = [("homological-part", True, "index %s" % hom.value),
              ("milnor-part", True, "milnor number %s" % mu.value)]
    return _finish(value, "defect-corrected", checks)


# ---------------------------------------------------------------------------
# complete intersection curves in higher dimension


def _curve_ideal(curve_polys, n):
    return IdealGens(tuple(curve_polys), MonomialOrder.local(n))


def gsv_pfaff_curve(data, curve_polys, point=None, max_steps=None):
    """Index along a complete-intersection curve in n-space cut out by n - 1
    polynomials, from the coefficient form and the Jacobian minors.

    data may be a vector field or its dual (n-1)-form.  Every minor index set
    with finite orders is evaluated; all of them must give the same value."""
    if isinstance(data, VectorField):
        v = data
        omega = dual_form(v)
    else:
        assert isinstance(data, DiffForm)
        omega = data
        v = field_from_dual(omega)
    n = v.nvars
    curve_polys = tuple(curve_polys)
    assert len(curve_polys) == n - 1
    assert all(g.nvars == n for g in curve_polys)

    f0s = tuple(_at_point(g, point) for g in curve_polys)
    v0 = _field_at_point(v, point)
    omega0 = dual_form(v0)
    curve = _curve_ideal(f0s, n)
    for g in f0s:
        if not normal_form(v0.apply(g), curve, max_steps).is_zero():
            raise NotInvariant(
                "vector field is not tangent to the curve")

    candidates = []
    for idx_set in itertools.combinations(range(n), n - 1):
        rows = [[f0s[i].diff(j) for j in idx_set] for i in range(n - 1)]
        minor = PolyMatrix(rows).det()
        ord_minor = order_along_curve(minor, curve, max_steps)
        if ord_minor is INFINITE:
            continue
        # coefficient of omega on dx_I
        a = omega0.coefficient(idx_set)
        ord_a = order_along_curve(a, curve, max_steps)
        if ord_a is INFINITE:
            continue
        candidates.append((idx_set, ord_a - ord_minor))
    if not candidates:
        raise DegenerateMinors(
            "no minor of the curve Jacobian has finite order along the curve")
    value = candidates[0][1]
    checks = [("minors-%s" % (idx_set,), val == value, "order difference %s" % val)
              for idx_set, val in candidates[1:]]
    return _finish(value, "minor-orders", checks)


# ---------------------------------------------------------------------------
# logarithmic index


def log_index(v, divisor, point=None, oracle=False, max_steps=None):
    """Index of v relative to the union of coordinate hyperplanes x_i == 0
    for i in divisor.  Components over the divisor must divide by their
    coordinate (NotLogarithmic otherwise); the value is the dimension of the
    local ring modulo the divided components and the untouched ones."""
    n = v.nvars
    divisor = tuple(sorted(set(divisor)))
    assert all(isinstance(i, int) and 0 <= i < n for i in divisor)
    v0 = _field_at_point(v, point)
    gens = []
    for i in range(n):
        if i in divisor:
            h = exact_divide(v0.components[i], Poly.var(n, i))
            if h is None:
                raise NotLogarithmic(
                    "component %d does not vanish on its hyperplane" % i)
            gens.append(h)
        else:
            gens.append(v0.components[i])
    value = _local_dim(gens, n, max_steps, "zero of the field relative to the divisor")
    checks = []
    if oracle:
        chi, _ = contraction_complex_euler(v0, divisor)
        checks.append(("truncation-oracle", chi == value,
                       "oracle characteristic %s" % chi))
    return _finish(value, "local-algebra", checks)


def normal_bundle_extension_check(index_value, n):
    """Divisibility obstruction: the curve index must be a multiple of
    (n - 1)! for the normal-bundle extension to exist."""
    assert n >= 1
    factorial = 1
    for k in range(2, n):
        factorial *= k
    return index_value % factorial == 0


# ---------------------------------------------------------------------------
# bundled germ input


@dataclass(frozen=True)
class GermInput:
    """One singular-point problem: ambient dimension, the point, the invariant
    data (hypersurface or curve ideal), and the field or its dual form.

    When both the field and the form are supplied they must be duals of each
    other; either one may be omitted and is reconstructed."""

    n: int
    point: tuple = None
    f: Poly = None
    curve: tuple = None
    v: VectorField = None
    omega: DiffForm = None

    def __post_init__(self):
        assert self.v is not None or self.omega is not None
        if self.v is not None and self.omega is not None:
            assert dual_form(self.v) == self.omega, \
                "field and form are not dual to each other"
        if self.point is not None:
            assert len(self.point) == self.n

    def the_field(self):
        return self.v if self.v is not None else field_from_dual(self.omega)

    def the_form(self):
        return self.omega if self.omega is not None else dual_form(self.v)
