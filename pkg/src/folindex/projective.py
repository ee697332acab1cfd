"""Foliations on projective space: charts, degree bookkeeping, global checks.

A foliation by curves is stored as a homogeneous vector field T on the
n+1 homogeneous coordinates, considered modulo multiples of the radial
field.  Chart j is the affine piece {x_j = 1} with coordinates the
remaining variables in order; the affine representative there is
w_i = (T_i - u_i T_j)|_{x_j=1}, which is well defined modulo radial.

Global identity checks sum local indices over user-declared singular
points and compare against the closed-form right-hand side.  Because a
declared list can silently omit a point, every check first certifies
completeness chart by chart: the global affine quotient dimension of the
relevant ideal must equal the sum of the declared local multiplicities.
"""

from dataclasses import dataclass
from fractions import Fraction

from .chern import IdentitySpec, identity_rhs
from .errors import (
    DegreeMismatch,
    EulerConditionViolated,
    IncompleteSingularities,
    NotZeroDimensional,
    UnsupportedIdentity,
)
from .indices import (
    cs_index,
    gsv_curve,
    gsv_pfaff_curve,
    log_index,
    ph_index,
    var_index,
)
from .localalgebra import (
    INFINITE,
    IdealGens,
    MonomialOrder,
    quotient_dim,
)
from .polyring import (
    DiffForm,
    Poly,
    VectorField,
    contract,
    field_from_dual,
    homogenize,
    set_coordinate_one,
    translate_to_origin,
)
from .residues import PhiSpec, baum_bott_residue


class ProjPoint:
    """A rational point of P^n, normalized so the first nonzero
    homogeneous coordinate is 1."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = tuple(Fraction(c) for c in coords)
        assert len(coords) >= 2
        assert any(coords), "the zero tuple is not a projective point"
        for c in coords:
            if c:
                coords = tuple(q / c for q in coords)
                break
        self.coords = coords

    @classmethod
    def from_affine(cls, chart, coords):
        coords = tuple(coords)
        return cls(coords[:chart] + (Fraction(1),) + coords[chart:])

    @property
    def n(self):
        return len(self.coords) - 1

    def visible_in(self, chart):
        return self.coords[chart] != 0

    def affine_in(self, chart):
        c = self.coords[chart]
        assert c != 0, "point not visible in chart %d" % chart
        return tuple(q / c for i, q in enumerate(self.coords) if i != chart)

    def first_chart(self):
        for j, c in enumerate(self.coords):
            if c:
                return j
        raise AssertionError("unreachable")

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "[" + ":".join(str(c) for c in self.coords) + "]"


def _var_quotient(p, i):
    """p / x_i when every term of p is divisible by x_i, else None."""
    terms = {}
    for e, c in p.terms.items():
        if e[i] == 0:
            return None
        e2 = e[:i] + (e[i] - 1,) + e[i + 1:]
        terms[e2] = c
    return Poly._raw(p.nvars, terms)


class ProjectiveFoliation:
    """A one-dimensional foliation of P^n of degree d.

    field: homogeneous VectorField on the n+1 coordinates, components all
    homogeneous of one common degree, taken modulo the radial field.
    """

    __slots__ = ("n", "d", "field")

    def __init__(self, n, d, field):
        assert field.nvars == n + 1
        deg = None
        for c in field.components:
            if c.is_zero():
                continue
            if not c.is_homogeneous():
                raise DegreeMismatch("field components must be homogeneous")
            if deg is None:
                deg = c.degree()
            elif c.degree() != deg:
                raise DegreeMismatch("components of mixed degrees")
        if deg is None:
            raise DegreeMismatch("zero field")
        self.n = n
        self.d = d
        self.field = field

    @classmethod
    def from_affine_field(cls, v, degree=None):
        """Extend an affine polynomial field on chart 0 to P^n.

        The foliation degree is the top polynomial degree of the
        components, dropping by one exactly when the top homogeneous part
        is a multiple of the radial field.
        """
        n = v.nvars
        delta = max((c.degree() for c in v.components if not c.is_zero()),
                    default=-1)
        if delta < 0:
            raise DegreeMismatch("zero field")
        tops = [c.homogeneous_part(delta) for c in v.components]
        quotients = []
        for i, t in enumerate(tops):
            if t.is_zero():
                quotients = None
                break
            q = _var_quotient(t, i)
            if q is None:
                quotients = None
                break
            quotients.append(q)
        radial_top = quotients is not None and all(
            q == quotients[0] for q in quotients)
        d = delta - 1 if radial_top else delta
        if degree is not None and degree != d:
            raise DegreeMismatch(
                "declared degree %d, computed %d" % (degree, d))
        comps = [Poly.zero(n + 1)]
        comps += [homogenize(c, delta, 0) for c in v.components]
        return cls(n, d, VectorField(comps))

    @classmethod
    def from_homogeneous_field(cls, field, degree=None):
        n = field.nvars - 1
        trial = cls(n, 0, field)
        affine = trial.chart_restrict(0)
        if all(c.is_zero() for c in affine.components):
            raise DegreeMismatch("field is radial: no foliation")
        rebuilt = cls.from_affine_field(affine, degree)
        return cls(n, rebuilt.d, field)

    @classmethod
    def from_homogeneous_form(cls, omega):
        """P^2 foliation from a homogeneous 1-form A dx0 + A1 dx1 + A2 dx2
        with the Euler contraction x0 A0 + x1 A1 + x2 A2 = 0."""
        assert isinstance(omega, DiffForm) and omega.degree == 1
        assert omega.nvars == 3, "form input is a plane-foliation route"
        radial = VectorField(tuple(Poly.var(3, i) for i in range(3)))
        euler = contract(omega, radial)
        if not euler.as_poly().is_zero():
            raise EulerConditionViolated(
                "radial contraction of the form is %r" % euler.as_poly())
        a1 = set_coordinate_one(omega.coefficient((1,)), 0)
        a2 = set_coordinate_one(omega.coefficient((2,)), 0)
        if a1.is_zero() and a2.is_zero():
            raise DegreeMismatch("form restricts to zero on chart 0")
        return cls.from_affine_field(VectorField((a2, -a1)))

    def chart_restrict(self, chart):
        """Affine representative in {x_chart = 1}, coordinates in order
        with x_chart removed."""
        assert 0 <= chart <= self.n
        tj = set_coordinate_one(self.field.components[chart], chart)
        out = []
        pos = 0
        for i in range(self.n + 1):
            if i == chart:
                continue
            ti = set_coordinate_one(self.field.components[i], chart)
            out.append(ti - Poly.var(self.n, pos) * tj)
            pos += 1
        return VectorField(out)

    def __repr__(self):
        return "ProjectiveFoliation(n=%d, d=%d)" % (self.n, self.d)


def curve_to_homogeneous(f):
    """Homogenize an affine chart-0 curve polynomial; returns the
    homogeneous polynomial and its degree."""
    m = f.degree()
    assert m >= 1, "constant does not define a curve"
    return homogenize(f, m, 0), m


def curve_in_chart(curve_hom, chart):
    return set_coordinate_one(curve_hom, chart)


def affine_singular_audit(v, max_steps=None):
    """Number of affine singular points counted with multiplicity: the
    global quotient dimension of the component (or coefficient) ideal."""
    if isinstance(v, DiffForm):
        v = field_from_dual(v)
    n = v.nvars
    gens = [c for c in v.components if not c.is_zero()]
    assert gens, "zero field"
    dim = quotient_dim(IdealGens(gens, MonomialOrder.degrevlex(n)), max_steps)
    if dim is INFINITE:
        raise NotZeroDimensional("singular set is positive dimensional")
    return dim


@dataclass(frozen=True)
class CheckRow:
    point: ProjPoint
    chart: int
    quantity: str
    value: object


@dataclass(frozen=True)
class CheckReport:
    kind: str
    rows: tuple
    local_sum: object
    rhs: object
    verdict: str
    diagnostics: tuple

    def passed(self):
        return self.verdict == "PASS"


def _translated(polys, point_affine):
    return [translate_to_origin(p, point_affine) for p in polys]


def _local_mult(gens, point_affine, max_steps):
    n = gens[0].nvars
    moved = _translated(gens, point_affine)
    ideal = IdealGens(moved, MonomialOrder.local(n))
    return quotient_dim(ideal, max_steps)


def _certify(kind, gens_by_chart, points, max_steps):
    """Per-chart completeness: the global quotient dimension of the chart
    ideal must equal the sum of local multiplicities at the declared
    points visible there."""
    for j, gens in enumerate(gens_by_chart):
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            raise IncompleteSingularities(
                "%s: chart %d has identically singular data" % (kind, j))
        n = gens[0].nvars
        total = quotient_dim(
            IdealGens(gens, MonomialOrder.degrevlex(n)), max_steps)
        if total is INFINITE:
            raise IncompleteSingularities(
                "%s: chart %d meets the data in positive dimension" % (kind, j))
        declared = 0
        for p in points:
            if p.visible_in(j):
                local = _local_mult(gens, p.affine_in(j), max_steps)
                assert local is not INFINITE
                declared += local
        if declared != total:
            raise IncompleteSingularities(
                "%s: chart %d carries multiplicity %d, declared points "
                "cover %d" % (kind, j, total, declared))


def _group_branches(branches):
    grouped = {}
    for point, br in branches:
        grouped.setdefault(point, []).append(br)
    return grouped


def run_global_check(fol, kind, curve=None, points=(), branches=(),
                     divisor=(), oracle=False, max_steps=None,
                     truncation=None):
    """Evaluate one global identity: local indices at the declared
    singular points against the closed-form total.

    curve: affine chart-0 polynomial (plane identities) or a tuple of
    n-1 of them (complete intersection curve in P^n).  divisor: indices
    of homogeneous coordinates whose hyperplanes form the invariant
    normal crossing divisor.  branches: (ProjPoint, BranchParam) pairs,
    each branch written in the affine coordinates of the point's first
    visible chart.
    """
    n, d = fol.n, fol.d
    points = tuple(points)
    for p in points:
        assert p.n == n, "point lives in the wrong projective space"
    charts = range(n + 1)
    fields = [fol.chart_restrict(j) for j in charts]
    rows = []
    diagnostics = []
    grouped = _group_branches(branches)

    if kind in ("soares", "adjunction"):
        raise UnsupportedIdentity(
            "%s is a closed-form statement with no per-point table" % kind)

    if kind in ("milnor_total", "bb_total"):
        spec = (IdentitySpec("milnor_total", n=n, d=d) if kind == "milnor_total"
                else IdentitySpec("bb_total", d=d))
        if kind == "bb_total" and n != 2:
            raise UnsupportedIdentity("bb_total is the plane identity")
        _certify(kind, [f.components for f in fields], points, max_steps)
        total = 0
        for p in points:
            j = p.first_chart()
            w = fields[j]
            if kind == "milnor_total":
                value = ph_index(w, point=p.affine_in(j),
                                 max_steps=max_steps).value
                rows.append(CheckRow(p, j, "milnor", value))
            else:
                phi = PhiSpec(2, [(1, (2, 0))])
                value = baum_bott_residue(w, phi, point=p.affine_in(j),
                                          max_steps=max_steps).value
                rows.append(CheckRow(p, j, "bb_c1sq", value))
            total += value
    elif kind in ("brunella", "cs_total", "var_total"):
        assert isinstance(curve, Poly), "these identities need a plane curve"
        assert n == 2, "plane identities"
        curve_hom, m = curve_to_homogeneous(curve)
        spec_kind = {"brunella": "brunella", "cs_total": "cs_total",
                     "var_total": "var_total"}[kind]
        spec = (IdentitySpec("cs_total", m=m) if kind == "cs_total"
                else IdentitySpec(spec_kind, d=d, m=m))
        curves = [curve_in_chart(curve_hom, j) for j in charts]
        gens_by_chart = [list(fields[j].components) + [curves[j]]
                         for j in charts]
        _certify(kind, gens_by_chart, points, max_steps)
        total = 0
        for p in points:
            j = p.first_chart()
            w, fj = fields[j], curves[j]
            at = p.affine_in(j)
            if kind == "brunella":
                rep = gsv_curve(w, fj, point=at, max_steps=max_steps)
                value = rep.value
                if value < 0:
                    diagnostics.append(
                        "gsv %s at %r: a nondicritical separatrix would "
                        "force a nonnegative value" % (value, p))
                rows.append(CheckRow(p, j, "gsv", value))
            else:
                brs = grouped.get(p, ())
                value = Fraction(0)
                for br in brs:
                    if kind == "cs_total":
                        rep = cs_index(w, fj, br, point=at,
                                       max_steps=max_steps,
                                       max_order=truncation or 160)
                    else:
                        rep = var_index(w, fj, br, point=at,
                                        max_steps=max_steps)
                    value += rep.value
                tag = "cs" if kind == "cs_total" else "var"
                rows.append(CheckRow(p, j, tag, value))
            total += value
    elif kind == "pfaff_degree":
        assert isinstance(curve, (tuple, list)) and len(curve) == n - 1, \
            "needs n-1 affine curve equations"
        pairs = [curve_to_homogeneous(f) for f in curve]
        degrees = tuple(m for _, m in pairs)
        spec = IdentitySpec("pfaff_degree", n=n, d=d, degrees=degrees)
        curves = [[curve_in_chart(ch, j) for ch, _ in pairs] for j in charts]
        gens_by_chart = [list(fields[j].components) + curves[j]
                         for j in charts]
        _certify(kind, gens_by_chart, points, max_steps)
        total = 0
        for p in points:
            j = p.first_chart()
            rep = gsv_pfaff_curve(fields[j], curves[j], point=p.affine_in(j),
                                  max_steps=max_steps)
            if rep.value < 0:
                diagnostics.append(
                    "gsv %s at %r: a nondicritical separatrix would force "
                    "a nonnegative value" % (rep.value, p))
            rows.append(CheckRow(p, j, "gsv", rep.value))
            total += rep.value
    elif kind == "log_bb":
        divisor = tuple(sorted(set(divisor)))
        assert divisor and all(0 <= i <= n for i in divisor), \
            "divisor: indices of homogeneous coordinate hyperplanes"
        spec = IdentitySpec("log_bb", n=n, d=d,
                            divisor_degrees=(1,) * len(divisor))
        _certify(kind, [f.components for f in fields], points, max_steps)
        total = 0
        for p in points:
            j = p.first_chart()
            w = fields[j]
            at = p.affine_in(j)
            # divisor components through the point, as local coordinates
            local = []
            pos = 0
            for i in range(n + 1):
                if i == j:
                    continue
                if i in divisor and p.coords[i] == 0:
                    local.append(pos)
                pos += 1
            if local:
                value = log_index(w, tuple(local), point=at, oracle=oracle,
                                  max_steps=max_steps).value
                rows.append(CheckRow(p, j, "log", value))
            else:
                value = ph_index(w, point=at, max_steps=max_steps).value
                rows.append(CheckRow(p, j, "milnor", value))
            total += value
    else:
        raise UnsupportedIdentity(kind)

    rhs = identity_rhs(spec)
    verdict = "PASS" if total == rhs else "FAIL"
    return CheckReport(kind=kind, rows=tuple(rows), local_sum=total, rhs=rhs,
                       verdict=verdict, diagnostics=tuple(diagnostics))
