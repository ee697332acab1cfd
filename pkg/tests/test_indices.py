"""Local index computations against hand-computed values."""

from fractions import Fraction

import pytest

from folindex.errors import (
    DegenerateDecomposition,
    DegenerateMinors,
    NotInvariant,
    NotLogarithmic,
    NotZeroDimensional,
)
from folindex.indices import (
    GermInput,
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
from folindex.polyring import DiffForm, Poly, VectorField, dual_form
from folindex.residues import log_residue_det
from folindex.series import BranchParam


def xy():
    return Poly.variables(2)


def branch_poly(*polys, order=12):
    return BranchParam.from_polys(polys, order)


def test_milnor():
    x, y = xy()
    assert milnor_number(x ** 3 - y ** 2).value == 2
    assert milnor_number(x ** 3 + y ** 3).value == 4
    moved = (x - 1) ** 3 - (y + 2) ** 2
    assert milnor_number(moved, point=(1, -2)).value == 2
    with pytest.raises(NotZeroDimensional):
        milnor_number(x ** 2)


def test_tjurina():
    x, y = xy()
    assert tjurina_number(x ** 3 - y ** 2).value == 2
    assert tjurina_number(x ** 4 + y ** 4).value == 9


def test_ph_index():
    x, y = xy()
    rep = ph_index(VectorField((y ** 2, -x ** 2)))
    assert rep.value == 4
    assert rep.crosschecks and all(ok for _, ok, _ in rep.crosschecks)
    assert ph_index(VectorField((x, Fraction(1, 2) * y))).value == 1
    with pytest.raises(NotZeroDimensional):
        ph_index(VectorField((x, x * y)))


def test_tangency_cofactor():
    x, y = xy()
    h = tangency_cofactor(VectorField((2 * x, 3 * y)), y ** 2 - x ** 3)
    assert h == Poly.const(2, 6)
    with pytest.raises(NotInvariant):
        tangency_cofactor(VectorField((x, x)), y)


def test_tjurina_vf():
    x, y = xy()
    cusp = y ** 2 - x ** 3
    assert tjurina_vf(VectorField((2 * x, 3 * y)), cusp).value == 1
    assert tjurina_vf(VectorField((2 * y, 3 * x ** 2)), cusp).value == 2
    assert tjurina_vf(VectorField((3 * x, 5 * y)), y).value == 1


def test_homology_dims():
    x, y = xy()
    cusp = y ** 2 - x ** 3
    assert homology_dims(VectorField((2 * x, 3 * y)), cusp) == (1, 2, None)
    assert homology_dims(VectorField((2 * y, 3 * x ** 2)), cusp) == (2, 2, None)
    X, Y, Z = Poly.variables(3)
    sphere = X ** 2 + Y ** 2 + Z ** 2
    assert homology_dims(VectorField((X, Y, Z)), sphere) == (1, 1, 0)


def test_homological_index_plane():
    x, y = xy()
    cusp = y ** 2 - x ** 3
    rep = homological_index(VectorField((2 * x, 3 * y)), cusp, oracle=True)
    assert rep.value == -1
    assert all(ok for _, ok, _ in rep.crosschecks)
    assert homological_index(VectorField((-y, x)), x ** 2 + y ** 2).value == 0
    assert homological_index(VectorField((x, -y)), x * y).value == 0


def test_homological_index_space():
    X, Y, Z = Poly.variables(3)
    radial = VectorField((X, Y, Z))
    assert homological_index(radial, X ** 2 + Y ** 2 + Z ** 2).value == 2
    assert homological_index(radial, X * Y - Z ** 2).value == 2


def test_saito_decomposition():
    x, y = xy()
    cusp = y ** 2 - x ** 3
    triple = saito_decomposition(VectorField((2 * x, 3 * y)), cusp)
    assert triple.variant == "fy"
    assert triple.g == 2 * y
    assert triple.xi == 2 * x
    assert triple.eta == DiffForm(2, 1, {(0,): Poly.const(2, -6)})

    triple = saito_decomposition(VectorField((3 * x, 5 * y)), y)
    assert (triple.g, triple.xi) == (Poly.const(2, 1), 3 * x)
    assert triple.eta == DiffForm(2, 1, {(0,): Poly.const(2, -5)})

    ham = saito_decomposition(VectorField((2 * y, 3 * x ** 2)), cusp)
    assert ham.g == ham.xi == 2 * y
    assert ham.eta.is_zero()

    forced = saito_decomposition(VectorField((2 * x, 3 * y)), cusp, variant="fx")
    assert forced.g == -3 * x ** 2

    with pytest.raises(DegenerateDecomposition):
        saito_decomposition(VectorField((x, -y)), x * y)


def test_gsv_curve():
    x, y = xy()
    cusp = y ** 2 - x ** 3
    rep = gsv_curve(VectorField((2 * x, 3 * y)), cusp)
    assert rep.value == -1
    assert all(ok for _, ok, _ in rep.crosschecks)
    assert gsv_curve(VectorField((x, 2 * y)), y).value == 1
    assert gsv_curve(VectorField((-y, x)), x ** 2 + y ** 2).value == 0
    assert gsv_curve(VectorField((x + y, y - x)), x ** 2 + y ** 2).value == 0
    assert gsv_curve(VectorField((Poly.const(2, 1), 2 * x)), y - x ** 2).value == 0


def test_gsv_quasihomogeneous_family():
    x, y = xy()
    for p, q in ((2, 3), (2, 5), (3, 4)):
        v = VectorField((q * x, p * y))
        f = x ** p - y ** q
        rep = gsv_curve(v, f)
        assert rep.value == p + q - p * q
        assert all(ok for _, ok, _ in rep.crosschecks)


def test_cs_index():
    x, y = xy()
    cusp = y ** 2 - x ** 3
    t = Poly.var(1, 0)
    rep = cs_index(VectorField((2 * x, 3 * y)), cusp, branch_poly(t ** 2, t ** 3))
    assert rep.value == 6
    assert rep.crosschecks and all(ok for _, ok, _ in rep.crosschecks)

    rep = cs_index(VectorField((3 * x, 5 * y)), y, branch_poly(t, Poly.zero(1)))
    assert rep.value == Fraction(5, 3)

    rep = cs_index(VectorField((-3 * x, -y)), x - y ** 3, branch_poly(t ** 3, t))
    assert rep.value == 3

    with pytest.raises(NotInvariant):
        cs_index(VectorField((2 * x, 3 * y)), cusp, branch_poly(t, t))


def test_cs_index_translated_point():
    x, y = xy()
    f = (y + 2) ** 2 - (x - 1) ** 3
    v = VectorField((2 * (x - 1), 3 * (y + 2)))
    t = Poly.var(1, 0)
    br = branch_poly(t ** 2 + 1, t ** 3 - 2)
    rep = cs_index(v, f, br, point=(1, -2))
    assert rep.value == 6


def test_var_index():
    x, y = xy()
    cusp = y ** 2 - x ** 3
    t = Poly.var(1, 0)
    rep = var_index(VectorField((2 * x, 3 * y)), cusp, branch_poly(t ** 2, t ** 3))
    assert rep.value == 5


def test_radial_index():
    x, y = xy()
    cusp = y ** 2 - x ** 3
    assert radial_index(VectorField((2 * x, 3 * y)), cusp).value == 1
    X, Y, Z = Poly.variables(3)
    cone = X * Y - Z ** 2
    assert radial_index(VectorField((X, Y, Z)), cone).value == 1


def test_gsv_pfaff_curve():
    X, Y, Z = Poly.variables(3)
    v = VectorField((2 * X, 3 * Y, 5 * Z))
    rep = gsv_pfaff_curve(v, (Y, Z))
    assert rep.value == 1

    v2 = VectorField((X, 2 * Y, 3 * Z))
    rep = gsv_pfaff_curve(v2, (Y - X ** 2, Z))
    assert rep.value == 1
    assert rep.crosschecks and all(ok for _, ok, _ in rep.crosschecks)

    rep_form = gsv_pfaff_curve(dual_form(v2), (Y - X ** 2, Z))
    assert rep_form.value == 1

    with pytest.raises(DegenerateMinors):
        gsv_pfaff_curve(v2, (Y ** 2, Z))
    with pytest.raises(NotInvariant):
        gsv_pfaff_curve(VectorField((Y, X, Z)), (Y, Z))


def test_log_index():
    x, y = xy()
    assert log_index(VectorField((2 * x, 3 * y)), (0,)).value == 0
    assert log_index(VectorField((2 * x, 3 * y)), (0, 1)).value == 0
    rep = log_index(VectorField((x ** 2, y)), (0,), oracle=True)
    assert rep.value == 1
    assert all(ok for _, ok, _ in rep.crosschecks)
    with pytest.raises(NotLogarithmic):
        log_index(VectorField((Poly.const(2, 1), y)), (0,))


def test_log_residue_det():
    x, y = xy()
    assert log_residue_det(VectorField((2 * x, 3 * y)), (0,)) == 0
    assert log_residue_det(VectorField((x ** 2, y)), (0,)) == 1
    with pytest.raises(NotLogarithmic):
        log_residue_det(VectorField((Poly.const(2, 1), y)), (0,))


def test_normal_bundle_extension_check():
    assert normal_bundle_extension_check(-1, 2)
    assert normal_bundle_extension_check(4, 3)
    assert not normal_bundle_extension_check(3, 3)
    assert normal_bundle_extension_check(6, 4)
    assert not normal_bundle_extension_check(-2, 4)


def test_germ_input():
    x, y = xy()
    v = VectorField((2 * x, 3 * y))
    germ = GermInput(n=2, f=y ** 2 - x ** 3, v=v)
    assert germ.the_field() == v
    assert germ.the_form() == dual_form(v)
    both = GermInput(n=2, v=v, omega=dual_form(v))
    assert both.the_field() == v
    with pytest.raises(AssertionError):
        GermInput(n=2, v=v, omega=dual_form(VectorField((x, y))))
    with pytest.raises(AssertionError):
        GermInput(n=2, f=y)
