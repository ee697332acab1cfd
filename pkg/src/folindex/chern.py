"""Truncated characteristic-class arithmetic on projective space.

Everything lives in Q[h]/(h^{n+1}) with h the hyperplane class, so a class
is a tuple of n+1 exact rationals and the integral over the ambient space
is reading off the top coefficient.  The module also knows the closed-form
right-hand sides of the global index identities, keyed by name.
"""

from fractions import Fraction

from .errors import UnsupportedIdentity

IDENTITY_KINDS = (
    "brunella",
    "cs_total",
    "var_total",
    "bb_total",
    "milnor_total",
    "pfaff_degree",
    "log_bb",
    "soares",
    "adjunction",
)


class ChernSeries:
    """A class in Q[h]/(h^{n+1}), kept as exact coefficients c_0..c_n."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs):
        assert n >= 0
        coeffs = tuple(Fraction(c) for c in coeffs)
        assert len(coeffs) <= n + 1
        coeffs = coeffs + (Fraction(0),) * (n + 1 - len(coeffs))
        self.n = n
        self.coeffs = coeffs

    @classmethod
    def one(cls, n):
        return cls(n, (1,))

    @classmethod
    def from_roots(cls, n, roots):
        """Product of (1 + r*h) over the given Chern roots."""
        out = cls.one(n)
        for r in roots:
            out = out * cls(n, (1, r))
        return out

    def __eq__(self, other):
        if not isinstance(other, ChernSeries):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def __mul__(self, other):
        assert isinstance(other, ChernSeries) and other.n == self.n
        out = [Fraction(0)] * (self.n + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j > self.n:
                    break
                out[i + j] += a * b
        return ChernSeries(self.n, out)

    def inverse(self):
        a = self.coeffs
        assert a[0] != 0, "inverse of a series with zero constant term"
        inv = [1 / a[0]]
        for k in range(1, self.n + 1):
            acc = Fraction(0)
            for i in range(1, k + 1):
                acc += a[i] * inv[k - i]
            inv.append(-acc / a[0])
        return ChernSeries(self.n, inv)

    def __truediv__(self, other):
        return self * other.inverse()

    def integral(self):
        """Coefficient of h^n, the degree of the class on P^n."""
        top = self.coeffs[self.n]
        return int(top) if top.denominator == 1 else top

    def __repr__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c and parts:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("%s*h" % c)
            else:
                parts.append("%s*h^%d" % (c, i))
        return " + ".join(parts)


def pn_chern_integral(n, numerator_degrees, denominator_degrees=()):
    """Degree of the h^n part of prod(1+a_i h) / prod(1+b_j h) on P^n."""
    num = ChernSeries.from_roots(n, numerator_degrees)
    den = ChernSeries.from_roots(n, denominator_degrees)
    return (num / den).integral()


def _require(cond, kind, detail):
    if not cond:
        raise UnsupportedIdentity("%s: %s" % (kind, detail))


class IdentitySpec:
    """Parameter bundle for one named global identity.

    d is the foliation degree, m a hypersurface (curve) degree, degrees the
    multidegree of a complete intersection, divisor_degrees the component
    degrees of a normal crossing divisor.  Each kind checks exactly the
    parameters it consumes.
    """

    __slots__ = ("kind", "n", "d", "m", "degrees", "divisor_degrees")

    def __init__(self, kind, n=None, d=None, m=None, degrees=None,
                 divisor_degrees=None):
        _require(kind in IDENTITY_KINDS, kind, "unknown identity")
        self.kind = kind
        self.n = n
        self.d = d
        self.m = m
        self.degrees = None if degrees is None else tuple(degrees)
        self.divisor_degrees = (None if divisor_degrees is None
                                else tuple(divisor_degrees))
        need_d = kind not in ("cs_total",)
        if need_d:
            _require(d is not None and d >= 0, kind, "needs degree d >= 0")
        if kind in ("brunella", "cs_total", "var_total"):
            _require(m is not None and m >= 1, kind, "needs curve degree m >= 1")
        if kind in ("milnor_total", "pfaff_degree", "log_bb", "adjunction"):
            _require(n is not None and n >= 2, kind, "needs ambient dimension n >= 2")
        if kind in ("pfaff_degree", "adjunction"):
            _require(self.degrees and all(di >= 1 for di in self.degrees),
                     kind, "needs positive multidegrees")
            _require(len(self.degrees) <= self.n - 1, kind,
                     "codimension exceeds n-1")
            if kind == "adjunction":
                _require(len(self.degrees) == self.n - 1, kind,
                         "stated for complete intersection curves")
        if kind == "log_bb":
            _require(self.divisor_degrees is not None
                     and all(mi >= 1 for mi in self.divisor_degrees),
                     kind, "needs divisor component degrees")

    def __repr__(self):
        fields = []
        for name in self.__slots__[1:]:
            value = getattr(self, name)
            if value is not None:
                fields.append("%s=%r" % (name, value))
        return "IdentitySpec(%r, %s)" % (self.kind, ", ".join(fields))


def identity_rhs(spec):
    """Closed-form right-hand side of the named identity."""
    kind = spec.kind
    d, m, n = spec.d, spec.m, spec.n
    if kind == "brunella":
        return (d + 2) * m - m * m
    if kind == "cs_total":
        return m * m
    if kind == "var_total":
        return (d + 2) * m
    if kind == "bb_total":
        return (d + 2) ** 2
    if kind == "milnor_total":
        # c_n of the virtual bundle TP^n - TF, a geometric sum in d
        return pn_chern_integral(n, (1,) * (n + 1), (1 - d,))
    if kind == "pfaff_degree":
        total = sum(spec.degrees)
        prod = 1
        for di in spec.degrees:
            prod *= di
        return (d + len(spec.degrees) + 1 - total) * prod
    if kind == "log_bb":
        return pn_chern_integral(
            n, (1,) * (n + 1), spec.divisor_degrees + (1 - d,))
    if kind == "soares":
        # degree forced on a smooth invariant hypersurface when the
        # Poincare-type bound is attained
        return d + 1
    if kind == "adjunction":
        total = sum(spec.degrees)
        prod = 1
        for di in spec.degrees:
            prod *= di
        return (d + n - total) * prod
    raise UnsupportedIdentity(kind)
