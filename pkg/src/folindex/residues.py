"""Point residues of rational data at isolated zeros of a vector field.

The residue of h dx_1 ^ ... ^ dx_n / (v_1 ... v_n) at an isolated common
zero is computed through the transformation law: once every pure power
x_i^N lies in the component ideal, membership cofactors A with

    u_i * x_i^N == sum_j A[i][j] * v_j,     u_i a unit,

turn the residue into a coefficient extraction against the monomial
denominator (x_1^N, ..., x_n^N): the value is the coefficient of
x^(N-1, ..., N-1) in h * det(A) / (u_1 ... u_n), expanded in the quotient
ring where any single exponent reaching N is discarded.  The witness data
(N, units, cofactor matrix) is fingerprinted so runs can be compared.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction

from .localalgebra import (
    IdealGens,
    MonomialOrder,
    membership_with_cofactors,
    monomial_power_bound,
)
from .polyring import (
    Poly,
    PolyMatrix,
    VectorField,
    char_poly_coeffs,
    translate_to_origin,
)

__all__ = [
    "ResidueResult",
    "PhiSpec",
    "grothendieck_residue",
    "baum_bott_residue",
    "log_residue_det",
]


@dataclass(frozen=True)
class ResidueResult:
    value: Fraction
    bound: int
    certificate: str


def _box(p, N):
    return {e: c for e, c in p.terms.items() if max(e) < N}


def _box_mul(a, b, N):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(i + j for i, j in zip(e1, e2))
            if max(e) >= N:
                continue
            s = out.get(e, 0) + c1 * c2
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def _box_inverse(u, N, n):
    zero_exp = (0,) * n
    c = u.get(zero_exp, Fraction(0))
    assert c != 0, "box inverse of a non-unit"
    # u/c = 1 - w with w nilpotent in the box ring
    w = {e: -v / c for e, v in u.items() if e != zero_exp}
    inv = {zero_exp: Fraction(1) / c}
    power = dict(w)
    while power:
        for e, v in power.items():
            s = inv.get(e, 0) + v / c
            if s:
                inv[e] = s
            else:
                inv.pop(e, None)
        power = _box_mul(power, w, N)
    return inv


def _certificate(bound, units, rows):
    pieces = ["N=%d" % bound]
    pieces.extend("u%d=%s" % (i, u.format()) for i, u in enumerate(units))
    for i, row in enumerate(rows):
        pieces.append("A%d=%s" % (i, "|".join(q.format() for q in row)))
    return hashlib.sha256(";".join(pieces).encode()).hexdigest()


def grothendieck_residue(h, v, point=None, bound=None, max_steps=None):
    """Residue of h over the components of v at an isolated zero.

    point defaults to the origin.  bound overrides the computed pure-power
    exponent; NotMember surfaces if it is too small, NotZeroDimensional if
    the zero is not isolated.
    """
    n = v.nvars
    assert h.nvars == n
    if point is not None:
        h = translate_to_origin(h, point)
        v = VectorField(tuple(translate_to_origin(c, point)
                              for c in v.components))
    ideal = IdealGens(v.components, MonomialOrder.local(n))
    if bound is None:
        N = monomial_power_bound(ideal, max_steps)
    else:
        assert bound >= 1
        N = bound
    rows = []
    units = []
    for i in range(n):
        wit = membership_with_cofactors(Poly.var(n, i) ** N, ideal, max_steps)
        rows.append(wit.cofactors)
        units.append(wit.unit)
    det = PolyMatrix(rows).det()
    num = _box(h * det, N)
    u_prod = {(0,) * n: Fraction(1)}
    for u in units:
        u_prod = _box_mul(u_prod, _box(u, N), N)
    series = _box_mul(num, _box_inverse(u_prod, N, n), N)
    value = series.get((N - 1,) * n, Fraction(0))
    return ResidueResult(value=value, bound=N,
                         certificate=_certificate(N, units, rows))


class PhiSpec:
    """A weighted-homogeneous symmetric polynomial in the symbols c_1..c_n.

    terms is a sequence of (coefficient, exponents) pairs; exponents[i] is
    the power of c_(i+1), and each term must have weighted degree n with
    c_(i+1) carrying weight i+1.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n, terms):
        assert n >= 1
        clean = []
        for coeff, exps in terms:
            if isinstance(coeff, int):
                coeff = Fraction(coeff)
            assert isinstance(coeff, Fraction)
            exps = tuple(exps)
            assert len(exps) == n and all(e >= 0 for e in exps)
            weight = sum((i + 1) * e for i, e in enumerate(exps))
            assert weight == n, (
                "term weight %d differs from the dimension %d" % (weight, n))
            if coeff:
                clean.append((coeff, exps))
        self.n = n
        self.terms = tuple(clean)

    def apply(self, cs):
        """Evaluate at concrete polynomials cs = [c_1, ..., c_n]."""
        assert len(cs) == self.n
        nv = cs[0].nvars
        total = Poly.zero(nv)
        for coeff, exps in self.terms:
            piece = Poly.const(nv, coeff)
            for ci, e in zip(cs, exps):
                if e:
                    piece = piece * ci ** e
            total = total + piece
        return total

    def __repr__(self):
        body = " + ".join(
            "%s*%s" % (coeff, "*".join("c%d^%d" % (i + 1, e)
                                       for i, e in enumerate(exps) if e))
            for coeff, exps in self.terms) or "0"
        return "PhiSpec(%s)" % body


def baum_bott_residue(v, phi, point=None, max_steps=None):
    """Residue of phi(c_1, ..., c_n) of the Jacobian over the components
    of v, the local contribution of an isolated singular point."""
    n = v.nvars
    assert isinstance(phi, PhiSpec) and phi.n == n
    if point is not None:
        v = VectorField(tuple(translate_to_origin(c, point)
                              for c in v.components))
    cs = char_poly_coeffs(v.jacobian())
    return grothendieck_residue(phi.apply(cs), v, max_steps=max_steps)


def log_residue_det(v, divisor, point=None, max_steps=None):
    """Signed determinant-type residue along a union of coordinate
    hyperplanes: (-1)^n times the logarithmic index."""
    from .indices import log_index

    report = log_index(v, divisor, point=point, max_steps=max_steps)
    sign = -1 if v.nvars % 2 else 1
    return sign * report.value
