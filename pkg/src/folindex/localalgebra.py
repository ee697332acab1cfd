"""Standard bases in local and global monomial orders, with exact
unit-and-cofactor tracking.

The local order is antigraded reverse lexicographic: lower total degree wins,
ties broken by reverse lex on a significance permutation.  Leading monomials
then generate the tangent-cone ideal of leading terms, and weak normal forms
follow Mora's algorithm: when every eligible reducer has larger ecart than the
partial remainder, the partial remainder itself is pushed onto the reducer
stack.  Reductions against such stacked intermediates multiply the input by a
polynomial with constant term 1, which is a unit of the local ring, so every
normal-form run returns an exact identity

    u * p  ==  sum_k c_k * b_k  +  r,      u(0) == 1.

The global order is plain degree reverse lexicographic and the same driver
degenerates to the ordinary division algorithm with u == 1.

Every loop spends from an explicit step budget and raises ResourceCap when it
runs out; nothing here terminates silently with a wrong answer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotMember, NotZeroDimensional, ResourceCap
from .polyring import Poly

__all__ = [
    "LOCAL",
    "GLOBAL",
    "INFINITE",
    "DEFAULT_MAX_STEPS",
    "MonomialOrder",
    "IdealGens",
    "StandardBasis",
    "Cofactors",
    "StepBudget",
    "standard_basis",
    "normal_form",
    "membership_with_cofactors",
    "quotient_dim",
    "monomial_power_bound",
    "exact_divide",
    "order_along_curve",
]

LOCAL = "local-antigraded-revlex"
GLOBAL = "global-degrevlex"

DEFAULT_MAX_STEPS = 200_000


class _Infinite:
    """Sentinel for an infinite vector-space dimension.  Compare by identity."""

    __slots__ = ()

    def __repr__(self):
        return "INFINITE"


INFINITE = _Infinite()


class StepBudget:
    __slots__ = ("remaining",)

    def __init__(self, limit):
        assert limit > 0
        self.remaining = limit

    def spend(self, n=1):
        self.remaining -= n
        if self.remaining < 0:
            raise ResourceCap("step budget exhausted; raise max_steps to continue")


class MonomialOrder:
    """A monomial order on a fixed number of variables.

    ``perm`` lists variable indices from most to least significant for the
    revlex tie-break; the identity permutation gives the usual order where
    earlier variables are larger.
    """

    __slots__ = ("kind", "nvars", "perm")

    def __init__(self, kind, nvars, perm=None):
        assert kind in (LOCAL, GLOBAL), "unknown order kind %r" % (kind,)
        assert nvars >= 1
        if perm is None:
            perm = tuple(range(nvars))
        perm = tuple(perm)
        assert sorted(perm) == list(range(nvars))
        self.kind = kind
        self.nvars = nvars
        self.perm = perm

    @classmethod
    def local(cls, nvars, perm=None):
        return cls(LOCAL, nvars, perm)

    @classmethod
    def degrevlex(cls, nvars, perm=None):
        return cls(GLOBAL, nvars, perm)

    def is_local(self):
        return self.kind == LOCAL

    def key(self, exp):
        """Sort key; the maximum over a polynomial's terms is its leading
        monomial."""
        head = -sum(exp) if self.kind == LOCAL else sum(exp)
        pe = tuple(exp[i] for i in self.perm)
        return (head,) + tuple(-e for e in reversed(pe))

    def leading(self, p):
        """(exponent, coefficient) of the leading term.  p must be nonzero."""
        assert p.terms, "zero polynomial has no leading term"
        e = max(p.terms, key=self.key)
        return e, p.terms[e]

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder)
                and (self.kind, self.nvars, self.perm)
                == (other.kind, other.nvars, other.perm))

    def __hash__(self):
        return hash((self.kind, self.nvars, self.perm))

    def __repr__(self):
        return "MonomialOrder(%r, %d)" % (self.kind, self.nvars)


def _divides(e1, e2):
    return all(a <= b for a, b in zip(e1, e2))


def _ecart(p, order):
    e, _ = order.leading(p)
    return p.degree() - sum(e)


def _nf(p, basis_elems, order, budget):
    """Weak normal form of p against basis_elems.

    Returns (r, u, c) with the exact identity
        u * p == sum_k c[k] * basis_elems[k] + r
    where u has constant term 1 (u == 1 under a global order) and no leading
    monomial of the basis divides the leading monomial of r.
    """
    n = p.nvars
    u = Poly.const(n, 1)
    c = {}
    h = p
    leads = [order.leading(b) for b in basis_elems]

    if not order.is_local():
        while not h.is_zero():
            budget.spend()
            eh, ch = order.leading(h)
            hit = None
            for k, (eb, cb) in enumerate(leads):
                if _divides(eb, eh):
                    hit = (k, eb, cb)
                    break
            if hit is None:
                break
            k, eb, cb = hit
            m = Poly.monomial(tuple(a - b for a, b in zip(eh, eb)), ch / cb)
            h = h - m * basis_elems[k]
            c[k] = c.get(k, Poly.zero(n)) + m
        return h, u, c

    # Mora: reducers grow with stacked intermediates.  Each stacked entry
    # carries the representation it had when stacked, so reductions against it
    # fold into (u, c) exactly.
    reducers = [(b, ("basis", k)) for k, b in enumerate(basis_elems)]
    while not h.is_zero():
        budget.spend()
        eh, ch = order.leading(h)
        best = None
        for g, payload in reducers:
            eg, cg = order.leading(g)
            if not _divides(eg, eh):
                continue
            ec = _ecart(g, order)
            if best is None or ec < best[0]:
                best = (ec, g, eg, cg, payload)
        if best is None:
            break
        ec, g, eg, cg, payload = best
        if ec > _ecart(h, order):
            reducers.append((h, ("snap", u, dict(c))))
        m = Poly.monomial(tuple(a - b for a, b in zip(eh, eg)), ch / cg)
        h = h - m * g
        if payload[0] == "basis":
            k = payload[1]
            c[k] = c.get(k, Poly.zero(n)) + m
        else:
            _, u0, c0 = payload
            u = u - m * u0
            for k, c0k in c0.items():
                c[k] = c.get(k, Poly.zero(n)) - m * c0k
    return h, u, c


@dataclass(frozen=True)
class StandardBasis:
    """A standard (local) or Groebner (global) basis with exact expansions.

    expansions[k] is a cofactor vector over the original generators:
        elements[k] == sum_j expansions[k][j] * gens[j]
    holds as a polynomial identity.  Elements are monic with respect to the
    order; leading_exps[k] is the leading exponent of elements[k].
    """

    order: MonomialOrder
    gens: tuple
    elements: tuple
    expansions: tuple
    leading_exps: tuple


def standard_basis(gens, order, max_steps=None):
    gens = tuple(gens)
    assert gens, "empty generator list"
    n = gens[0].nvars
    assert all(g.nvars == n for g in gens) and order.nvars == n
    budget = StepBudget(max_steps or DEFAULT_MAX_STEPS)
    zero = Poly.zero(n)
    m = len(gens)

    elements = []
    expans = []
    sugars = []
    for j, g in enumerate(gens):
        if g.is_zero():
            continue
        _, lc = order.leading(g)
        elements.append(g / lc)
        row = [zero] * m
        row[j] = Poly.const(n, Fraction(1) / lc)
        expans.append(row)
        sugars.append(g.degree())

    pairs = set()

    def add_pairs(t):
        for s in range(t):
            pairs.add((s, t))

    for t in range(len(elements)):
        add_pairs(t)

    def pair_key(ij):
        i, j = ij
        ei, _ = order.leading(elements[i])
        ej, _ = order.leading(elements[j])
        lcm = tuple(max(a, b) for a, b in zip(ei, ej))
        if order.is_local():
            return (sum(lcm), order.key(lcm), i, j)
        sugar = max(sugars[i] + sum(lcm) - sum(ei),
                    sugars[j] + sum(lcm) - sum(ej))
        return (sugar, order.key(lcm), i, j)

    while pairs:
        budget.spend()
        ij = min(pairs, key=pair_key)
        pairs.discard(ij)
        i, j = ij
        ei, _ = order.leading(elements[i])
        ej, _ = order.leading(elements[j])
        if not order.is_local() and all(a == 0 or b == 0 for a, b in zip(ei, ej)):
            # product criterion: disjoint supports reduce to zero (global only)
            continue
        lcm = tuple(max(a, b) for a, b in zip(ei, ej))
        mi = Poly.monomial(tuple(a - b for a, b in zip(lcm, ei)))
        mj = Poly.monomial(tuple(a - b for a, b in zip(lcm, ej)))
        spoly = mi * elements[i] - mj * elements[j]
        if spoly.is_zero():
            continue
        r, u, c = _nf(spoly, elements, order, budget)
        if r.is_zero():
            continue
        row = [u * (mi * expans[i][k] - mj * expans[j][k]) for k in range(m)]
        for t, ct in c.items():
            for k in range(m):
                row[k] = row[k] - ct * expans[t][k]
        _, lc = order.leading(r)
        elements.append(r / lc)
        expans.append([q / lc for q in row])
        sugars.append(max(sugars[i] + sum(lcm) - sum(ei),
                          sugars[j] + sum(lcm) - sum(ej)))
        add_pairs(len(elements) - 1)

    for b, row in zip(elements, expans):
        acc = zero
        for q, g in zip(row, gens):
            acc = acc + q * g
        assert acc == b, "expansion bookkeeping broke"

    return StandardBasis(
        order=order,
        gens=gens,
        elements=tuple(elements),
        expansions=tuple(tuple(row) for row in expans),
        leading_exps=tuple(order.leading(b)[0] for b in elements),
    )


class IdealGens:
    """An ideal presented by generators together with a monomial order.

    The standard basis is computed on first use and cached.
    """

    __slots__ = ("gens", "order", "_basis")

    def __init__(self, gens, order):
        gens = tuple(gens)
        assert gens, "empty generator list"
        n = gens[0].nvars
        assert all(g.nvars == n for g in gens)
        assert order.nvars == n
        self.gens = gens
        self.order = order
        self._basis = None

    @property
    def nvars(self):
        return self.gens[0].nvars

    def basis(self, max_steps=None):
        if self._basis is None:
            self._basis = standard_basis(self.gens, self.order, max_steps)
        return self._basis

    def with_extra(self, extra):
        return IdealGens(self.gens + tuple(extra), self.order)

    def __repr__(self):
        return "IdealGens(%s; %r)" % (
            ", ".join(g.format() for g in self.gens), self.order.kind)


def normal_form(p, ideal, max_steps=None):
    """Weak normal form of p modulo the ideal (remainder only)."""
    sb = ideal.basis(max_steps)
    budget = StepBudget(max_steps or DEFAULT_MAX_STEPS)
    r, _, _ = _nf(p, sb.elements, ideal.order, budget)
    return r


@dataclass(frozen=True)
class Cofactors:
    """Witness of ideal membership:  unit * p == sum cofactors[j] * gens[j],
    with unit(0) == 1."""

    cofactors: tuple
    unit: Poly


def membership_with_cofactors(p, ideal, max_steps=None):
    """Express p in terms of the original generators, up to a unit.

    Raises NotMember when the normal form is nonzero.  The returned identity
    is checked exactly before returning.
    """
    sb = ideal.basis(max_steps)
    budget = StepBudget(max_steps or DEFAULT_MAX_STEPS)
    r, u, c = _nf(p, sb.elements, ideal.order, budget)
    if not r.is_zero():
        raise NotMember("polynomial is not in the ideal (normal form %s)"
                        % r.format())
    n = p.nvars
    q = [Poly.zero(n) for _ in ideal.gens]
    for k, ck in c.items():
        row = sb.expansions[k]
        for j in range(len(q)):
            q[j] = q[j] + ck * row[j]
    acc = Poly.zero(n)
    for qj, gj in zip(q, ideal.gens):
        acc = acc + qj * gj
    assert acc == u * p, "cofactor identity broke"
    return Cofactors(cofactors=tuple(q), unit=u)


def _minimal_exps(exps):
    out = []
    for e in sorted(exps, key=sum):
        if not any(_divides(f, e) for f in out):
            out.append(e)
    return out


def quotient_dim(ideal, max_steps=None):
    """Dimension of the quotient by the ideal of leading terms, hence of the
    quotient ring itself.  Returns INFINITE when the staircase is unbounded.

    Local order: dimension of O_0 / I as a vector space.
    Global order: number of standard monomials (degree of a 0-dim ideal).
    """
    sb = ideal.basis(max_steps)
    lms = _minimal_exps(sb.leading_exps)
    n = ideal.nvars
    if any(sum(e) == 0 for e in lms):
        return 0
    ks = []
    for i in range(n):
        pure = [e[i] for e in lms if all(e[j] == 0 for j in range(n) if j != i)]
        if not pure:
            return INFINITE
        ks.append(min(pure))
    count = 0
    for e in itertools.product(*(range(k) for k in ks)):
        if not any(_divides(f, e) for f in lms):
            count += 1
    return count


def monomial_power_bound(ideal, max_steps=None):
    """Smallest N with every pure power x_i^N in the ideal.

    Requires a local order and a finite quotient dimension d; the maximal
    ideal to the power d lies inside the ideal, so the search up to d always
    succeeds.
    """
    assert ideal.order.is_local()
    d = quotient_dim(ideal, max_steps)
    if d is INFINITE:
        raise NotZeroDimensional(
            "ideal does not cut out an isolated point; no power bound exists")
    n = ideal.nvars
    if d == 0:
        return 1
    for bound in range(1, d + 1):
        if all(normal_form(Poly.var(n, i) ** bound, ideal, max_steps).is_zero()
               for i in range(n)):
            return bound
    raise AssertionError("power bound exceeded the quotient dimension")


def exact_divide(p, f):
    """Quotient p / f when f divides p exactly in the polynomial ring,
    else None."""
    assert not f.is_zero()
    assert p.nvars == f.nvars
    if p.is_zero():
        return Poly.zero(p.nvars)
    order = MonomialOrder.degrevlex(p.nvars)
    ef, cf = order.leading(f)
    h = p
    q = Poly.zero(p.nvars)
    while not h.is_zero():
        eh, ch = order.leading(h)
        if not _divides(ef, eh):
            return None
        m = Poly.monomial(tuple(a - b for a, b in zip(eh, ef)), ch / cf)
        q = q + m
        h = h - m * f
    return q


def order_along_curve(g, curve, max_steps=None):
    """Vanishing order of g along the curve germ cut out by ``curve``:
    the local intersection number dim O_0 / (curve + g).

    Returns INFINITE when g vanishes on a whole component (and for g == 0).
    """
    assert curve.order.is_local()
    if g.is_zero():
        return INFINITE
    return quotient_dim(curve.with_extra((g,)), max_steps)
