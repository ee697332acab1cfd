"""Brute-force truncation oracle for local dimensions and homological
Euler characteristics.

Everything here works in the finite window of monomials of total degree
below a truncation level N and reduces questions to exact integer ranks.
It shares no code with the standard-basis machinery, which is the point:
the two routes confirm each other.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import NotInvariant, NotLogarithmic, TruncationNotStabilized
from .localalgebra import exact_divide
from .polyring import DiffForm, Poly, VectorField, contract, exterior_derivative, wedge

__all__ = [
    "integer_rank",
    "truncated_quotient_dim",
    "contraction_complex_euler",
]


@lru_cache(maxsize=None)
def _monomials_below(n, N):
    return tuple(e for e in itertools.product(range(N), repeat=n) if sum(e) < N)


def _intify(row):
    den = 1
    for c in row:
        if c:
            den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in row]
    g = 0
    for a in ints:
        g = gcd(g, abs(a))
    if g > 1:
        ints = [a // g for a in ints]
    return ints


def integer_rank(rows):
    """Rank of a list of integer rows, by fraction-free elimination.

    Pivots are chosen with minimal absolute value to slow down coefficient
    growth; every division in the update is exact.
    """
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    assert all(len(r) == ncols for r in m)
    rank = 0
    row = 0
    prev = 1
    for col in range(ncols):
        piv = None
        best = None
        for i in range(row, len(m)):
            a = m[i][col]
            if a and (best is None or abs(a) < best):
                piv, best = i, abs(a)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        pivot_row = m[row]
        pa = pivot_row[col]
        for i in range(row + 1, len(m)):
            ri = m[i]
            a = ri[col]
            for j in range(col + 1, ncols):
                ri[j] = (pa * ri[j] - a * pivot_row[j]) // prev
            ri[col] = 0
        prev = pa
        rank += 1
        row += 1
        if row == len(m):
            break
    return rank


def truncated_quotient_dim(gens, N):
    """Naive local dimension estimate at truncation level N.

    Counts monomials of degree below N not caught by the span of all
    truncated monomial multiples of the generators.  Returns
    (value, stabilized) where stabilized means the same count recurs at
    N + 1; an unstable value is a lower-dimension artifact, not an answer.
    """
    gens = tuple(gens)
    assert gens
    n = gens[0].nvars

    def value(level):
        mons = _monomials_below(n, level)
        pos = {e: k for k, e in enumerate(mons)}
        rows = []
        for g in gens:
            if g.is_zero():
                continue
            # multiples reaching past the level are dropped whole: the
            # surviving head of a clipped product is not an ideal element
            # and one junk row can fake membership for honest monomials
            for a in _monomials_below(n, level - g.degree()):
                prod = g * Poly.monomial(a)
                row = [Fraction(0)] * len(mons)
                for e, c in prod.terms.items():
                    row[pos[e]] = c
                rows.append(_intify(row))
        return len(mons) - integer_rank(rows)

    v = value(N)
    return v, v == value(N + 1)


# ---------------------------------------------------------------------------
# contraction complex


def _basis(n, N, j):
    order = []
    idx = {}
    for I in itertools.combinations(range(n), j):
        for e in _monomials_below(n, N):
            idx[(I, e)] = len(order)
            order.append((I, e))
    return order, idx


def _form_to_row(form, idx, N, size):
    row = [Fraction(0)] * size
    for I, p in form.coeffs.items():
        for e, c in p.terms.items():
            if sum(e) < N:
                row[idx[(I, e)]] = c
    return row


def _zero_low_columns(rows, low_cols):
    out = []
    for r in rows:
        r2 = list(r)
        for k in low_cols:
            r2[k] = 0
        out.append(r2)
    return out


def _form_degree(form):
    return max((p.degree() for p in form.coeffs.values()), default=-1)


def _chi_at(cs, f, n, N, top, window, check):
    """Euler characteristic of the truncated contraction complex.

    Two precautions make the count honest.

    First, every generator row is kept whole or not at all.  Clipping a
    product at the truncation boundary leaves a head that is not a module
    element; a clipped tail of one relation can cancel the high part of an
    honest relation and the combination fakes a low-degree ideal member,
    which then poisons every rank below.  So a row whose image or product
    reaches degree N is dropped outright.  Dropping is safe for realization:
    deg(f*h) = deg f + deg h exactly, so any relation of degree below N only
    needs multiplier rows that survive the filter.

    Second, the low-order window.  A raw kernel-minus-image count in the
    truncated spaces is stably wrong: monomials near the truncation boundary
    are killed by truncation rather than by the differential and masquerade
    as homology at every N.  So homology is only counted on classes meeting
    the window U of coefficient degree below window = N - (1 + max input
    degree): the differential and the relation generators cannot push the
    window past the truncation boundary, hence within U nothing is lost.
    With

        K_j = preimage of S_{j-1} under phi_j        (cycles upstairs)
        B_j = phi_{j+1}(W_{j+1}) + S_j               (boundaries upstairs)

    the window count of homology at j is dim(K_j n U_j) - dim(B_j n U_j);
    the shared dim(S_j n U_j) cancels in the difference.  Both terms reduce
    to ranks:

        dim(K_j n U_j) = |U_j| - (rank(phi_j(U_j) stacked on S_{j-1})
                                   - rank(S_{j-1}))
        dim(B_j n U_j) = rank(B_j rows) - rank(B_j rows with the U columns
                                                zeroed out)
    """
    v = VectorField(tuple(cs))

    bases = {}
    idxs = {}
    for j in range(top + 1):
        bases[j], idxs[j] = _basis(n, N, j)

    def phi_image(j, k):
        I, e = bases[j][k]
        return contract(DiffForm(n, j, {I: Poly.monomial(e)}), v)

    phi_keep = {}
    for j in range(1, top + 1):
        size = len(bases[j - 1])
        kept = {}
        for k in range(len(bases[j])):
            image = phi_image(j, k)
            if _form_degree(image) < N:
                kept[k] = _intify(_form_to_row(image, idxs[j - 1], N, size))
        phi_keep[j] = kept

    def s_data(j):
        rows = []
        forms = []
        if f is None:
            return rows, forms
        size = len(bases[j])
        for I in itertools.combinations(range(n), j):
            for a in _monomials_below(n, N - f.degree()):
                form = DiffForm(n, j, {I: f * Poly.monomial(a)})
                rows.append(_form_to_row(form, idxs[j], N, size))
                forms.append(form)
        if j >= 1:
            df = exterior_derivative(f)
            for J in itertools.combinations(range(n), j - 1):
                for a in _monomials_below(n, N):
                    form = wedge(df, DiffForm(n, j - 1, {J: Poly.monomial(a)}))
                    if form.is_zero() or _form_degree(form) >= N:
                        continue
                    rows.append(_form_to_row(form, idxs[j], N, size))
                    forms.append(form)
        return rows, forms

    s_int = {}
    s_forms = {}
    for j in range(top + 1):
        rows, forms = s_data(j)
        s_int[j] = [_intify(r) for r in rows]
        s_forms[j] = forms
    u_positions = {
        j: [k for k, (I, e) in enumerate(bases[j]) if sum(e) < window]
        for j in range(top + 1)
    }
    for j in range(1, top + 1):
        assert all(k in phi_keep[j] for k in u_positions[j]), \
            "window element pushed past the truncation boundary"

    if check:
        for j in range(1, top + 1):
            # contraction maps the relation span into the relation span one
            # step down; verified exactly on every honest generator whose
            # image stays below the level
            pushed = []
            size = len(bases[j - 1])
            for form in s_forms[j]:
                image = contract(form, v)
                if image.is_zero() or _form_degree(image) >= N:
                    continue
                pushed.append(_intify(_form_to_row(image, idxs[j - 1], N, size)))
            base_rank = integer_rank(s_int[j - 1])
            assert integer_rank(s_int[j - 1] + pushed) == base_rank
        for j in range(2, top + 1):
            # contracting twice kills every basis form identically
            for k in range(len(bases[j])):
                assert contract(phi_image(j, k), v).is_zero()

    chi = 0
    rank_s = {j: integer_rank(s_int[j]) for j in range(top + 1)}
    for j in range(top + 1):
        nu = len(u_positions[j])
        if j == 0:
            dim_ku = nu
        else:
            stacked = [phi_keep[j][k] for k in u_positions[j]] + s_int[j - 1]
            dim_ku = nu - (integer_rank(stacked) - rank_s[j - 1])
        b_rows = list(s_int[j])
        if j < top:
            b_rows = list(phi_keep[j + 1].values()) + b_rows
        rb = integer_rank(b_rows)
        rb_high = integer_rank(_zero_low_columns(b_rows, u_positions[j]))
        dim_bu = rb - rb_high
        h = dim_ku - dim_bu
        chi += h if j % 2 == 0 else -h
    return chi


def contraction_complex_euler(v, germ, N=None, max_trunc=32):
    """Euler characteristic of the contraction complex of v, by truncation.

    germ may be a polynomial f (complex of differential forms on the
    hypersurface f == 0, length one less than the ambient dimension) or an
    iterable of variable indices D (complex of forms with logarithmic poles
    on the union of coordinate hyperplanes x_i == 0, i in D; the modified
    contraction coefficients v_i / x_i must divide exactly).

    Returns (value, stabilized), where stabilized means the value recurs at
    truncation N + 2.  With N omitted, the level is raised automatically
    until stable, and TruncationNotStabilized is raised past max_trunc.
    """
    n = v.nvars
    if isinstance(germ, Poly):
        f = germ
        assert f.nvars == n and not f.is_zero()
        cofactor = exact_divide(v.apply(f), f)
        if cofactor is None:
            raise NotInvariant(
                "vector field is not tangent to the hypersurface")
        cs = list(v.components)
        top = n - 1
        degs = [f.degree()] + [c.degree() for c in cs]
    else:
        divisor = sorted(set(germ))
        assert all(isinstance(i, int) and 0 <= i < n for i in divisor)
        cs = []
        for i in range(n):
            if i in divisor:
                h = exact_divide(v.components[i], Poly.var(n, i))
                if h is None:
                    raise NotLogarithmic(
                        "component %d does not vanish on its hyperplane" % i)
                cs.append(h)
            else:
                cs.append(v.components[i])
        f = None
        top = n
        degs = [c.degree() for c in v.components]
    buffer = 1 + max([d for d in degs if d >= 0] + [1])
    check = n <= 2

    def chi(level):
        return _chi_at(cs, f, n, level, top, level - buffer, check)

    if N is not None:
        assert N > buffer, "truncation level too small for the input degrees"
        value = chi(N)
        return value, value == chi(N + 2)

    level = max(8 if n <= 2 else 5, buffer + 2)
    while level <= max_trunc:
        value = chi(level)
        if value == chi(level + 2):
            return value, True
        level *= 2
    raise TruncationNotStabilized(
        "no stable Euler characteristic up to truncation %d" % max_trunc)
