"""Truncated power series in one parameter, used for pullbacks along
parametrized curve branches.

A TruncSeries of order N stores the first N coefficients and stands for the
class of a series mod t^N.  Everything is exact rational arithmetic; when an
operation needs more coefficients than are available it raises the internal
InsufficientOrder signal, which callers turn into a retry at a higher order
or into TruncationNotStabilized at their cap.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import TruncationNotStabilized
from .polyring import Poly


class InsufficientOrder(Exception):
    """Internal: the working truncation order cannot answer the question."""


def _rat(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError("rational coefficient expected, got %r" % (c,))


class TruncSeries:
    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs=()):
        assert order >= 1
        coeffs = [_rat(c) for c in coeffs]
        assert len(coeffs) <= order
        coeffs.extend([Fraction(0)] * (order - len(coeffs)))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def const(cls, c, order):
        return cls(order, (c,))

    @classmethod
    def param(cls, order):
        """The series t."""
        return cls(order, (0, 1))

    @classmethod
    def from_poly(cls, p, order):
        assert p.nvars == 1
        coeffs = [Fraction(0)] * order
        for (k,), c in p.terms.items():
            if k < order:
                coeffs[k] = c
        return cls(order, coeffs)

    def truncate(self, order):
        assert order <= self.order
        return TruncSeries(order, self.coeffs[:order])

    def is_zero(self):
        return not any(self.coeffs)

    def valuation(self):
        """Index of the first nonzero coefficient; None if zero to order."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order)
        return TruncSeries(n, (a + b for a, b in
                               zip(self.coeffs[:n], other.coeffs[:n])))

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.order, (-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _rat(other)
            return TruncSeries(self.order, (a * c for a in self.coeffs))
        n = min(self.order, other.order)
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs[:n]):
            if not a:
                continue
            for j, b in enumerate(other.coeffs[: n - i]):
                if b:
                    out[i + j] += a * b
        return TruncSeries(n, out)

    __rmul__ = __mul__

    def _coerce(self, other):
        if isinstance(other, TruncSeries):
            return other
        return TruncSeries.const(_rat(other), self.order)

    def derivative(self):
        assert self.order >= 2
        return TruncSeries(self.order - 1,
                           (k * self.coeffs[k] for k in range(1, self.order)))

    def inverse(self):
        a = self.coeffs
        assert a[0] != 0, "series with zero constant term has no inverse"
        b = [Fraction(1) / a[0]]
        for k in range(1, self.order):
            s = sum(a[j] * b[k - j] for j in range(1, k + 1) if a[j])
            b.append(-s / a[0])
        return TruncSeries(self.order, b)

    def shift_down(self, k):
        """Divide by t^k; the first k coefficients must vanish."""
        assert 0 <= k < self.order
        assert not any(self.coeffs[:k])
        return TruncSeries(self.order - k, self.coeffs[k:])

    def __eq__(self, other):
        return (isinstance(other, TruncSeries)
                and self.order == other.order and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if c:
                parts.append("%s*t^%d" % (c, k) if k else str(c))
        body = " + ".join(parts) if parts else "0"
        return "TruncSeries(%s + O(t^%d))" % (body, self.order)


def poly_on_branch(p, comps):
    """Evaluate the polynomial p at a tuple of series, one per variable."""
    comps = tuple(comps)
    assert len(comps) == p.nvars
    order = min(s.order for s in comps)
    pow_cache = [{0: TruncSeries.const(1, order)} for _ in comps]

    def power(i, k):
        cache = pow_cache[i]
        if k not in cache:
            cache[k] = power(i, k - 1) * comps[i]
        return cache[k]

    total = TruncSeries(order)
    for e, c in p.terms.items():
        piece = TruncSeries.const(c, order)
        for i, k in enumerate(e):
            if k:
                piece = piece * power(i, k)
        total = total + piece
    return total


def pullback_one_form(form, comps):
    """Pull a polynomial 1-form back along t -> (comps); returns a series of
    order one less than the branch (differentiation loses a coefficient)."""
    assert form.degree == 1
    comps = tuple(comps)
    assert len(comps) == form.nvars
    order = min(s.order for s in comps)
    total = TruncSeries(order - 1)
    for (i,), a in form.coeffs.items():
        total = total + poly_on_branch(a, comps).truncate(order - 1) \
            * comps[i].derivative().truncate(order - 1)
    return total


def laurent_residue(num, den):
    """Residue at t = 0 of (num / den) dt for truncated series num, den.

    Raises InsufficientOrder when the truncation cannot decide: the
    denominator is zero to working order, or the needed coefficient lies
    beyond it.
    """
    v = den.valuation()
    if v is None:
        raise InsufficientOrder("denominator vanishes to working order")
    if v == 0:
        # regular at t = 0 if only the residue is wanted
        return Fraction(0)
    unit = den.shift_down(v)
    n = min(num.order, unit.order)
    if v - 1 >= n:
        raise InsufficientOrder("residue coefficient beyond working order")
    prod = num.truncate(n) * unit.truncate(n).inverse()
    return prod.coeffs[v - 1]


class BranchParam:
    """A parametrized curve branch t -> (x_1(t), ..., x_n(t)).

    Branches built from exact polynomial components (or equipped with a lift
    callback) can be re-expanded to any order; hand-entered series branches
    are capped at the order they were given.
    """

    __slots__ = ("order", "comps", "_polys", "_lift")

    def __init__(self, comps, polys=None, lift=None):
        comps = tuple(comps)
        assert comps
        assert all(isinstance(s, TruncSeries) for s in comps)
        order = min(s.order for s in comps)
        self.order = order
        self.comps = tuple(s.truncate(order) for s in comps)
        self._polys = tuple(polys) if polys is not None else None
        self._lift = lift

    @classmethod
    def from_polys(cls, polys, order):
        polys = tuple(polys)
        assert all(p.nvars == 1 for p in polys)
        return cls(tuple(TruncSeries.from_poly(p, order) for p in polys),
                   polys=polys)

    @property
    def nvars(self):
        return len(self.comps)

    @property
    def extendable(self):
        return self._polys is not None or self._lift is not None

    def max_order(self):
        """The largest usable working order; None when unbounded."""
        return None if self.extendable else self.order

    def at_order(self, order):
        if order <= self.order:
            return BranchParam(tuple(s.truncate(order) for s in self.comps),
                               polys=self._polys, lift=self._lift)
        if self._polys is not None:
            return BranchParam.from_polys(self._polys, order)
        if self._lift is not None:
            return self._lift(order)
        raise TruncationNotStabilized(
            "branch is only known to order %d" % self.order)

    def __repr__(self):
        return "BranchParam(order=%d, nvars=%d)" % (self.order, self.nvars)


def newton_lift(f, order):
    """Parametrize the smooth curve f == 0 through the origin.

    Needs f(0,0) == 0 and at least one first partial nonzero at the origin.
    Solves the implicit equation by Newton iteration in the series ring; the
    returned branch re-lifts itself on demand at higher orders.
    """
    assert f.nvars == 2
    assert f.constant_term() == 0
    fx0 = f.diff(0)(0, 0)
    fy0 = f.diff(1)(0, 0)
    assert fx0 != 0 or fy0 != 0, "origin is a singular point of the curve"
    swap = fy0 == 0
    if swap:
        # solve for x in terms of y
        g = Poly(2, {(e[1], e[0]): c for e, c in f.terms.items()})
    else:
        g = f
    gy = g.diff(1)

    t = TruncSeries.param(order)
    phi = TruncSeries(order)
    steps = max(1, order.bit_length() + 1)
    for _ in range(steps):
        val = poly_on_branch(g, (t, phi))
        dval = poly_on_branch(gy, (t, phi))
        phi = phi - val * dval.inverse()
    assert poly_on_branch(g, (t, phi)).is_zero(), "Newton iteration stalled"
    comps = (phi, t) if swap else (t, phi)
    return BranchParam(comps, lift=lambda n: newton_lift(f, n))
