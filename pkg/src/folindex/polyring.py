"""Sparse multivariate polynomials over the rationals and the exterior
algebra of polynomial differential forms and vector fields.

Every coefficient is a `fractions.Fraction`; nothing here ever rounds.
All values are immutable after construction and safe to share.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "Poly",
    "VectorField",
    "DiffForm",
    "PolyMatrix",
    "partial_derivative",
    "translate_to_origin",
    "contract",
    "wedge",
    "exterior_derivative",
    "dual_form",
    "char_poly_coeffs",
    "jacobian",
    "homogenize",
    "set_coordinate_one",
]


def _rat(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError("rational coefficient expected, got %r" % (c,))


class Poly:
    """Polynomial in ``nvars`` variables, stored as {exponent tuple: coefficient}.

    Zero coefficients are never stored; exponent tuples always have length
    ``nvars``.  Terms iterate in plain lexicographic key order, which fixes a
    canonical form for printing and hashing.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        assert nvars >= 0
        clean = {}
        if terms:
            for exp, c in terms.items():
                assert len(exp) == nvars and min(exp, default=0) >= 0
                c = _rat(c)
                if c:
                    clean[tuple(exp)] = c
        self.nvars = nvars
        self.terms = clean

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: _rat(c)})

    @classmethod
    def var(cls, nvars, i):
        assert 0 <= i < nvars
        exp = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(nvars, {exp: Fraction(1)})

    @classmethod
    def variables(cls, nvars):
        return tuple(cls.var(nvars, i) for i in range(nvars))

    @classmethod
    def monomial(cls, exp, c=1):
        return cls(len(exp), {tuple(exp): _rat(c)})

    # -- predicates / views ---------------------------------------------

    def is_zero(self):
        return not self.terms

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def low_degree(self):
        """Minimal total degree of a term; None for the zero polynomial."""
        return min((sum(e) for e in self.terms), default=None)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_part(self, k):
        return Poly(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == k})

    def sorted_terms(self):
        return sorted(self.terms.items())

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return self._raw(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return self._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _rat(other)
            if not c:
                return Poly.zero(self.nvars)
            return self._raw(self.nvars, {e: k * c for e, k in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        assert other.nvars == self.nvars, "polynomial rings differ"
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        return self._raw(self.nvars, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _rat(other)
            assert c != 0, "division by zero"
            return self * (Fraction(1) / c)
        return NotImplemented

    def __pow__(self, k):
        assert isinstance(k, int) and k >= 0
        result = Poly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def _coerce(self, other):
        if isinstance(other, Poly):
            assert other.nvars == self.nvars, "polynomial rings differ"
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.nvars, other)
        return NotImplemented

    @classmethod
    def _raw(cls, nvars, terms):
        # internal: terms already clean (no zeros, right arity)
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    # -- calculus / substitution ----------------------------------------

    def diff(self, i):
        assert 0 <= i < self.nvars
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = e[:i] + (e[i] - 1,) + e[i + 1:]
                s = terms.get(e2, 0) + c * e[i]
                if s:
                    terms[e2] = s
                else:
                    terms.pop(e2, None)
        return self._raw(self.nvars, terms)

    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (tuple, list)):
            point = tuple(point[0])
        assert len(point) == self.nvars
        point = [_rat(q) for q in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for q, k in zip(point, e):
                for _ in range(k):
                    v *= q
            total += v
        return total

    def subst(self, polys):
        """Substitute polys[i] for variable i; polys share an arbitrary ring."""
        assert len(polys) == self.nvars
        if not self.terms:
            target_n = polys[0].nvars if polys else 0
            return Poly.zero(target_n)
        target_n = polys[0].nvars
        assert all(p.nvars == target_n for p in polys)
        pow_cache = [{0: Poly.const(target_n, 1)} for _ in range(self.nvars)]

        def power(i, k):
            cache = pow_cache[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * polys[i]
            return cache[k]

        total = Poly.zero(target_n)
        for e, c in self.terms.items():
            piece = Poly.const(target_n, c)
            for i, k in enumerate(e):
                if k:
                    piece = piece * power(i, k)
            total = total + piece
        return total

    # -- equality / display ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.nvars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def format(self, names=None):
        if names is None:
            names = default_names(self.nvars)
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for name, k in zip(names, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append("%s^%d" % (name, k))
            if not factors:
                parts.append(str(c))
                continue
            body = "*".join(factors)
            if c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append("%s*%s" % (c, body))
        out = parts[0]
        for part in parts[1:]:
            out += " - " + part[1:] if part.startswith("-") else " + " + part
        return out

    def __repr__(self):
        return "Poly(%s)" % self.format()


def default_names(nvars):
    if nvars <= 3:
        return ("x", "y", "z")[:nvars]
    return tuple("x%d" % (i + 1) for i in range(nvars))


# ---------------------------------------------------------------------------
# vector fields, matrices


class VectorField:
    """A polynomial vector field: one component per variable."""

    __slots__ = ("components",)

    def __init__(self, components):
        components = tuple(components)
        assert components, "empty vector field"
        n = components[0].nvars
        assert all(p.nvars == n for p in components)
        assert len(components) == n, "a vector field needs one component per variable"
        self.components = components

    @property
    def nvars(self):
        return len(self.components)

    def apply(self, f):
        """Directional derivative: sum v_i * df/dx_i."""
        assert f.nvars == self.nvars
        total = Poly.zero(self.nvars)
        for i, vi in enumerate(self.components):
            total = total + vi * f.diff(i)
        return total

    def jacobian(self):
        return PolyMatrix([[vi.diff(j) for j in range(self.nvars)]
                           for vi in self.components])

    def __eq__(self, other):
        return isinstance(other, VectorField) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return "VectorField(%s)" % (", ".join(p.format() for p in self.components))


class PolyMatrix:
    """A rectangular matrix of polynomials in a common ring."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        assert rows and rows[0]
        width = len(rows[0])
        assert all(len(r) == width for r in rows), "ragged matrix"
        n = rows[0][0].nvars
        assert all(p.nvars == n for r in rows for p in r)
        self.rows = rows

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]))

    @property
    def nvars(self):
        return self.rows[0][0].nvars

    def entry(self, i, j):
        return self.rows[i][j]

    def submatrix(self, row_ids, col_ids):
        return PolyMatrix([[self.rows[i][j] for j in col_ids] for i in row_ids])

    def det(self):
        """Determinant by cofactor expansion (matrices here are tiny)."""
        nr, nc = self.shape
        assert nr == nc
        if nr == 1:
            return self.rows[0][0]
        total = Poly.zero(self.nvars)
        cols = list(range(nc))
        for j in range(nc):
            minor = PolyMatrix([[self.rows[i][c] for c in cols if c != j]
                                for i in range(1, nr)])
            piece = self.rows[0][j] * minor.det()
            total = total + (piece if j % 2 == 0 else -piece)
        return total

    def __repr__(self):
        return "PolyMatrix(%d x %d)" % self.shape


# ---------------------------------------------------------------------------
# differential forms


class DiffForm:
    """Polynomial exterior form of pure degree q.

    coeffs maps strictly increasing index tuples (i_1 < ... < i_q) to their
    Poly coefficients; a 0-form is the single coefficient at the empty tuple.
    """

    __slots__ = ("nvars", "degree", "coeffs")

    def __init__(self, nvars, degree, coeffs=None):
        assert 0 <= degree <= nvars
        clean = {}
        if coeffs:
            for idx, p in coeffs.items():
                idx = tuple(idx)
                assert len(idx) == degree
                assert all(0 <= i < nvars for i in idx)
                assert all(a < b for a, b in zip(idx, idx[1:])), \
                    "index tuples must be strictly increasing"
                assert p.nvars == nvars
                if not p.is_zero():
                    clean[idx] = p
        self.nvars = nvars
        self.degree = degree
        self.coeffs = clean

    @classmethod
    def from_poly(cls, p):
        return cls(p.nvars, 0, {(): p})

    @classmethod
    def dx(cls, nvars, i):
        return cls(nvars, 1, {(i,): Poly.const(nvars, 1)})

    @classmethod
    def volume(cls, nvars):
        return cls(nvars, nvars, {tuple(range(nvars)): Poly.const(nvars, 1)})

    def as_poly(self):
        assert self.degree == 0
        return self.coeffs.get((), Poly.zero(self.nvars))

    def is_zero(self):
        return not self.coeffs

    def coefficient(self, idx):
        return self.coeffs.get(tuple(idx), Poly.zero(self.nvars))

    def __add__(self, other):
        assert isinstance(other, DiffForm)
        assert (other.nvars, other.degree) == (self.nvars, self.degree)
        coeffs = dict(self.coeffs)
        for idx, p in other.coeffs.items():
            s = coeffs.get(idx, Poly.zero(self.nvars)) + p
            if s.is_zero():
                coeffs.pop(idx, None)
            else:
                coeffs[idx] = s
        return DiffForm(self.nvars, self.degree, coeffs)

    def __neg__(self):
        return DiffForm(self.nvars, self.degree,
                        {idx: -p for idx, p in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            scalar = Poly.const(self.nvars, scalar)
        assert isinstance(scalar, Poly)
        return DiffForm(self.nvars, self.degree,
                        {idx: p * scalar for idx, p in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, DiffForm)
                and (self.nvars, self.degree) == (other.nvars, other.degree)
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.nvars, self.degree, frozenset(self.coeffs.items())))

    def format(self, names=None):
        if names is None:
            names = default_names(self.nvars)
        if not self.coeffs:
            return "0"
        parts = []
        for idx in sorted(self.coeffs):
            body = " ^ ".join("d%s" % names[i] for i in idx)
            coef = self.coeffs[idx].format(names)
            if not idx:
                parts.append(coef)
            elif coef == "1":
                parts.append(body)
            else:
                parts.append("(%s) %s" % (coef, body))
        return " + ".join(parts)

    def __repr__(self):
        return "DiffForm(%s)" % self.format()


# ---------------------------------------------------------------------------
# free functions used by the index and residue layers


def partial_derivative(p, i):
    """Formal partial derivative of p with respect to variable i."""
    return p.diff(i)


def translate_to_origin(p, q):
    """p(x + q): the germ of p at the point q, presented at the origin."""
    assert len(q) == p.nvars
    xs = Poly.variables(p.nvars)
    return p.subst([xs[i] + _rat(q[i]) for i in range(p.nvars)])


def contract(omega, v):
    """Interior product i_v(omega).

    Sign convention: i_v(dx_{i1} ^ ... ^ dx_{iq}) =
    sum_j (-1)^{j-1} v_{i_j} dx_{i1} ^ ... (j-th factor removed) ... ^ dx_{iq}.
    """
    assert isinstance(omega, DiffForm) and isinstance(v, VectorField)
    assert omega.nvars == v.nvars
    assert omega.degree >= 1
    n = omega.nvars
    out = {}
    for idx, p in omega.coeffs.items():
        for pos, i in enumerate(idx):
            coeff = p * v.components[i]
            if pos % 2:
                coeff = -coeff
            rest = idx[:pos] + idx[pos + 1:]
            s = out.get(rest, Poly.zero(n)) + coeff
            if s.is_zero():
                out.pop(rest, None)
            else:
                out[rest] = s
    return DiffForm(n, omega.degree - 1, out)


def wedge(a, b):
    """Exterior product a ^ b."""
    assert isinstance(a, DiffForm) and isinstance(b, DiffForm)
    assert a.nvars == b.nvars
    n = a.nvars
    q = a.degree + b.degree
    assert q <= n, "wedge degree exceeds the number of variables"
    out = {}
    for ia, pa in a.coeffs.items():
        seta = set(ia)
        for ib, pb in b.coeffs.items():
            if seta & set(ib):
                continue
            # sign of the shuffle sorting ia + ib (each side already sorted)
            inversions = sum(1 for x in ia for y in ib if x > y)
            merged = tuple(sorted(ia + ib))
            coeff = pa * pb
            if inversions % 2:
                coeff = -coeff
            s = out.get(merged, Poly.zero(n)) + coeff
            if s.is_zero():
                out.pop(merged, None)
            else:
                out[merged] = s
    return DiffForm(n, q, out)


def exterior_derivative(form):
    """d(omega) for a form or a bare polynomial (treated as a 0-form)."""
    if isinstance(form, Poly):
        form = DiffForm.from_poly(form)
    n = form.nvars
    assert form.degree < n
    out = {}
    for idx, p in form.coeffs.items():
        for i in range(n):
            if i in idx:
                continue
            dp = p.diff(i)
            if dp.is_zero():
                continue
            below = sum(1 for j in idx if j < i)
            if below % 2:
                dp = -dp
            merged = tuple(sorted(idx + (i,)))
            s = out.get(merged, Poly.zero(n)) + dp
            if s.is_zero():
                out.pop(merged, None)
            else:
                out[merged] = s
    return DiffForm(n, form.degree + 1, out)


def dual_form(v):
    """omega_v := i_v(dx_1 ^ ... ^ dx_n), an (n-1)-form.

    For n = 2 and v = (v1, v2) this is v1 dy - v2 dx; the classical plane
    notation omega = P dx + Q dy therefore reads P = -v2, Q = v1.
    """
    return contract(DiffForm.volume(v.nvars), v)


def field_from_dual(omega):
    """Inverse of dual_form: recover v with omega = i_v(dx_1 ^ ... ^ dx_n)."""
    assert isinstance(omega, DiffForm)
    n = omega.nvars
    assert omega.degree == n - 1
    comps = []
    full = tuple(range(n))
    for j in range(n):
        rest = full[:j] + full[j + 1:]
        c = omega.coefficient(rest)
        comps.append(-c if j % 2 else c)
    return VectorField(comps)


def char_poly_coeffs(m):
    """Coefficients (c_1, ..., c_n) with det(I + t*M) = 1 + c_1 t + ... + c_n t^n.

    c_k is the sum of the principal k x k minors: division-free and valid
    over any commutative ring.
    """
    assert isinstance(m, PolyMatrix)
    nr, nc = m.shape
    assert nr == nc
    from itertools import combinations

    out = []
    for k in range(1, nr + 1):
        total = Poly.zero(m.nvars)
        for subset in combinations(range(nr), k):
            total = total + m.submatrix(subset, subset).det()
        out.append(total)
    return out


def jacobian(v):
    """Jacobian matrix of a vector field: entry (i, j) = d v_i / d x_j."""
    return v.jacobian()


# ---------------------------------------------------------------------------
# homogeneous-coordinate plumbing


def homogenize(p, degree, at=0):
    """Insert a homogenizing variable at position ``at`` so every term of the
    result has total degree ``degree``."""
    assert degree >= p.degree()
    terms = {}
    for e, c in p.terms.items():
        filler = degree - sum(e)
        exp = e[:at] + (filler,) + e[at:]
        terms[exp] = c
    return Poly(p.nvars + 1, terms)


def set_coordinate_one(p, at):
    """Evaluate variable ``at`` to 1, dropping it from the ring."""
    assert 0 <= at < p.nvars
    terms = {}
    for e, c in p.terms.items():
        exp = e[:at] + e[at + 1:]
        s = terms.get(exp, 0) + c
        if s:
            terms[exp] = s
        else:
            terms.pop(exp, None)
    return Poly(p.nvars - 1, terms)
