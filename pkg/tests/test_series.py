"""Truncated series arithmetic, branch evaluation, and one-variable residues."""

import random
from fractions import Fraction

import pytest

from folindex.errors import TruncationNotStabilized
from folindex.polyring import DiffForm, Poly
from folindex.series import (
    BranchParam,
    InsufficientOrder,
    TruncSeries,
    laurent_residue,
    newton_lift,
    poly_on_branch,
    pullback_one_form,
)


def test_basic_arithmetic():
    t = TruncSeries.param(5)
    one = TruncSeries.const(1, 5)
    s = one - t
    assert (s * s.inverse()) == one
    assert s.inverse().coeffs == (1, 1, 1, 1, 1)
    assert (t * t).valuation() == 2
    assert (t - t).valuation() is None
    assert (2 * t + t * t).derivative().coeffs == (2, 2, 0, 0)
    assert (t * TruncSeries.param(3)).order == 3
    assert t.truncate(2).coeffs == (0, 1)


def test_inverse_random():
    rng = random.Random(3)
    for _ in range(10):
        coeffs = [Fraction(rng.randrange(1, 6))] + [
            Fraction(rng.randrange(-5, 6)) for _ in range(6)
        ]
        s = TruncSeries(7, coeffs)
        assert s * s.inverse() == TruncSeries.const(1, 7)


def test_shift_down():
    t = TruncSeries.param(6)
    cubed = t * t * t
    assert cubed.shift_down(3).coeffs[0] == 1
    with pytest.raises(AssertionError):
        (1 + t).shift_down(1)


def test_poly_on_branch():
    x, y = Poly.variables(2)
    t = TruncSeries.param(8)
    cusp = y ** 2 - x ** 3
    assert poly_on_branch(cusp, (t * t, t * t * t)).is_zero()
    s = poly_on_branch(cusp, (t, t))
    assert s.coeffs[2] == 1 and s.coeffs[3] == -1
    assert poly_on_branch(Poly.const(2, 7), (t, t)) == TruncSeries.const(7, 8)


def test_pullback_one_form():
    x, y = Poly.variables(2)
    t = TruncSeries.param(8)
    form = DiffForm(2, 1, {(1,): x})  # x dy
    s = pullback_one_form(form, (t * t, t * t * t))
    assert s.order == 7
    assert s.coeffs[4] == 3 and sum(1 for c in s.coeffs if c) == 1
    # d(f) pulled back along a branch of f == 0 vanishes
    from folindex.polyring import exterior_derivative
    assert pullback_one_form(exterior_derivative(y ** 2 - x ** 3),
                             (t * t, t * t * t)).is_zero()


def test_laurent_residue():
    t = TruncSeries.param(6)
    one = TruncSeries.const(1, 6)
    assert laurent_residue(one, t) == 1
    assert laurent_residue(t * t, t * t * t) == 1
    assert laurent_residue(one, 2 * t + t * t) == Fraction(1, 2)
    assert laurent_residue(t, one + t) == 0
    with pytest.raises(InsufficientOrder):
        laurent_residue(one, TruncSeries(6))
    with pytest.raises(InsufficientOrder):
        laurent_residue(TruncSeries.const(1, 1), TruncSeries(4, (0, 0, 1)))


def test_branch_param_extension():
    tp = Poly.var(1, 0)
    br = BranchParam.from_polys((tp ** 2, tp ** 3), 5)
    assert br.extendable and br.max_order() is None
    hi = br.at_order(9)
    assert hi.order == 9 and hi.comps[1].coeffs[3] == 1
    lo = br.at_order(3)
    assert lo.order == 3 and lo.extendable

    capped = BranchParam((TruncSeries.param(4), TruncSeries.param(4)))
    assert capped.max_order() == 4
    assert capped.at_order(2).order == 2
    with pytest.raises(TruncationNotStabilized):
        capped.at_order(8)


def test_newton_lift_parabola():
    x, y = Poly.variables(2)
    br = newton_lift(y - x ** 2, 6)
    assert br.comps[0] == TruncSeries.param(6)
    assert br.comps[1].coeffs == (0, 0, 1, 0, 0, 0)
    assert br.extendable
    assert br.at_order(10).comps[1].coeffs[2] == 1


def test_newton_lift_catalan():
    # y = x - y^2  gives  y = x - x^2 + 2x^3 - 5x^4 + 14x^5 - ...
    x, y = Poly.variables(2)
    br = newton_lift(y ** 2 + y - x, 6)
    assert br.comps[1].coeffs == (0, 1, -1, 2, -5, 14)


def test_newton_lift_swapped_axis():
    x, y = Poly.variables(2)
    br = newton_lift(x - y ** 2, 6)
    assert br.comps[1] == TruncSeries.param(6)
    assert br.comps[0].coeffs == (0, 0, 1, 0, 0, 0)
    assert poly_on_branch(x - y ** 2, br.comps).is_zero()


def test_newton_lift_rejects_singular_point():
    x, y = Poly.variables(2)
    with pytest.raises(AssertionError):
        newton_lift(y ** 2 - x ** 3, 5)
    with pytest.raises(AssertionError):
        newton_lift(y + Poly.const(2, 1), 5)
