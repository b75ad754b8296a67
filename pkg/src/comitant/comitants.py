"""Covariant and contravariant building blocks.

Everything here treats a designated subset of a Poly's variables as the
*form* variables; any remaining variables (pencil parameters, generic
coefficients, dual coordinates) ride along in the coefficient ring.  That one
convention lets a single engine compute parameterized Hessians, symbolic
transvectants, and chart restrictions without a coefficient-field tower.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .poly import Poly, binomial
from .scalars import QQ


class FormError(ValueError):
    pass


class BinaryForm:
    """Homogeneous form of known degree in two designated variables.

    The zero polynomial is allowed (degree still declared); extra variables
    of the underlying Poly act as symbolic coefficients.
    """

    def __init__(self, poly: Poly, degree: int, indices=(0, 1)):
        if len(indices) != 2:
            raise FormError("a binary form needs exactly 2 form variables")
        if not poly.is_homogeneous(indices):
            raise FormError("polynomial is not homogeneous in the form variables")
        if poly.terms and poly.degree_in(indices) != degree:
            raise FormError(
                f"declared degree {degree} but polynomial has degree "
                f"{poly.degree_in(indices)}")
        self.poly = poly
        self.degree = degree
        self.indices = tuple(indices)

    def __eq__(self, other):
        return (isinstance(other, BinaryForm) and self.poly == other.poly
                and self.degree == other.degree
                and self.indices == other.indices)

    def __repr__(self):
        return f"BinaryForm({self.poly!r}, degree={self.degree})"


class TernaryForm:
    """Homogeneous form of known degree in three designated variables."""

    def __init__(self, poly: Poly, degree: int, indices=(0, 1, 2)):
        if len(indices) != 3:
            raise FormError("a ternary form needs exactly 3 form variables")
        if not poly.is_homogeneous(indices):
            raise FormError("polynomial is not homogeneous in the form variables")
        if poly.terms and poly.degree_in(indices) != degree:
            raise FormError(
                f"declared degree {degree} but polynomial has degree "
                f"{poly.degree_in(indices)}")
        self.poly = poly
        self.degree = degree
        self.indices = tuple(indices)

    def __repr__(self):
        return f"TernaryForm({self.poly!r}, degree={self.degree})"


def hessian(p: Poly, indices=None) -> Poly:
    """Determinant of the matrix of second partials.

    indices selects the form variables (all by default); for a form of
    degree d in n variables the result is homogeneous of degree n(d-2) in
    them, and may vanish identically.
    """
    if indices is None:
        indices = list(range(len(p.vars)))
    if not p.is_homogeneous(indices):
        raise FormError("hessian requires a homogeneous input")
    firsts = [p.partial(i) for i in indices]
    rows = [[f.partial(j) for j in indices] for f in firsts]
    from .linalg import poly_det
    return poly_det(rows)


def jacobian(polys: list, indices=None) -> Poly:
    """Determinant of the matrix of first partials of n forms in n variables."""
    if not polys:
        raise FormError("jacobian of an empty list")
    if indices is None:
        indices = list(range(len(polys[0].vars)))
    if len(polys) != len(indices):
        raise FormError(
            f"jacobian needs as many forms ({len(polys)}) as variables "
            f"({len(indices)})")
    rows = [[f.partial(j) for j in indices] for f in polys]
    from .linalg import poly_det
    return poly_det(rows)


def transvectant(f: BinaryForm, g: BinaryForm, k: int) -> BinaryForm:
    """The k-th transvectant (f, g)_k in the factorial normalization.

    (f,g)_k = (m-k)!(n-k)!/(m! n!) * sum_i (-1)^i C(k,i)
              d^k f/dx^(k-i) dy^i * d^k g/dx^i dy^(k-i)
    for f of degree m and g of degree n; the result has degree m+n-2k.
    """
    if f.indices != g.indices or f.poly.vars != g.poly.vars:
        raise FormError("transvectant arguments live in different rings")
    m, n = f.degree, g.degree
    if k < 0 or k > min(m, n):
        raise FormError(f"transvectant index {k} out of range for degrees "
                        f"{m}, {n}")
    ix, iy = f.indices
    scale = Fraction(factorial(m - k) * factorial(n - k),
                     factorial(m) * factorial(n))

    def dk(p: Poly, dx: int, dy: int) -> Poly:
        for _ in range(dx):
            p = p.partial(ix)
        for _ in range(dy):
            p = p.partial(iy)
        return p

    acc = Poly.zero(f.poly.vars, f.poly.ring)
    for i in range(k + 1):
        term = dk(f.poly, k - i, i) * dk(g.poly, i, k - i)
        c = binomial(k, i)
        acc = acc + (term * c if i % 2 == 0 else term * (-c))
    return BinaryForm(acc * scale, m + n - 2 * k, f.indices)


def polar(f: TernaryForm, point_vars=("p1", "p2", "p3")) -> Poly:
    """First polar: sum_i p_i * df/dx_i in the 6-variable ring.

    The result is degree d-1 in the form variables and linear in the fresh
    point variables, which are appended to the variable list.
    """
    if f.degree < 1:
        raise FormError("polar of a constant form")
    for v in point_vars:
        if v in f.poly.vars:
            raise FormError(f"point variable {v!r} collides with {f.poly.vars}")
    big_vars = f.poly.vars + tuple(point_vars)
    acc = Poly.zero(big_vars, f.poly.ring)
    for pv, i in zip(point_vars, f.indices):
        d = f.poly.partial(i).extend_to(big_vars)
        acc = acc + d * Poly.variable(pv, big_vars, f.poly.ring)
    return acc


DUAL_VARS = ("u", "v", "w")


def restrict_to_line(f: TernaryForm, chart: int,
                     line_vars=("x", "y"), dual_vars=DUAL_VARS) -> BinaryForm:
    """Restrict f to the general line u*X + v*Y + w*Z = 0 in one chart.

    chart=2 substitutes (X,Y,Z) = (w*x, w*y, -u*x - v*y); charts 0 and 1 are
    the analogous eliminations of X resp. Y.  The output is a binary form of
    degree d in the line parameters whose coefficients are homogeneous of
    degree d in the dual variables.
    """
    if chart not in (0, 1, 2):
        raise FormError("chart must be 0, 1, or 2")
    for v in line_vars + tuple(dual_vars):
        if v in f.poly.vars:
            raise FormError(f"variable {v!r} collides with the form's ring")
    ring = f.poly.ring
    params = tuple(v for i, v in enumerate(f.poly.vars)
                   if i not in f.indices)
    out_vars = params + tuple(line_vars) + tuple(dual_vars)
    x = Poly.variable(line_vars[0], out_vars, ring)
    y = Poly.variable(line_vars[1], out_vars, ring)
    u = Poly.variable(dual_vars[0], out_vars, ring)
    v = Poly.variable(dual_vars[1], out_vars, ring)
    w = Poly.variable(dual_vars[2], out_vars, ring)
    if chart == 2:
        images3 = [w * x, w * y, -(u * x) - v * y]
    elif chart == 0:
        images3 = [-(v * x) - w * y, u * x, u * y]
    else:
        images3 = [v * x, -(u * x) - w * y, v * y]
    images = []
    for i, name in enumerate(f.poly.vars):
        if i in f.indices:
            images.append(images3[f.indices.index(i)])
        else:
            images.append(Poly.variable(name, out_vars, ring))
    n = len(params)
    return BinaryForm(f.poly.substitute(images), f.degree, (n, n + 1))
