from fractions import Fraction

import pytest

from comitant.linalg import (LinearSubstitution, Matrix, int_nullspace_mod_p,
                             poly_det, poly_solve_cramer)
from comitant.poly import Poly, poly_ring
from comitant.scalars import QQ


def _m(rows):
    return Matrix([[Fraction(v) for v in r] for r in rows], QQ)


def test_rank_and_rref():
    m = _m([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert m.rank() == 2


def test_det_inverse_roundtrip():
    m = _m([[2, 1], [5, 3]])
    assert m.det() == 1
    inv = m.inverse()
    assert (m * inv).entries == Matrix.identity(2, QQ).entries


def test_nullspace_dimension():
    m = _m([[1, 2, 3], [2, 4, 6]])
    basis = m.nullspace()
    assert len(basis) == 2
    for v in basis:
        assert all(sum(m[(i, j)] * v[j] for j in range(3)) == 0
                   for i in range(2))


def test_solve_consistent_and_inconsistent():
    m = _m([[1, 1], [1, -1]])
    sol = m.solve([Fraction(3), Fraction(1)])
    assert sol == [Fraction(2), Fraction(1)]
    bad = _m([[1, 1], [2, 2]])
    assert bad.solve([Fraction(0), Fraction(1)]) is None


def test_singular_inverse_rejected():
    with pytest.raises(ValueError):
        _m([[1, 1], [2, 2]]).inverse()


def test_poly_det_matches_scalar_det():
    x, y = poly_ring(("x", "y"), QQ)
    rows = [[x, y], [y, x]]
    assert poly_det(rows) == x**2 - y**2


def test_poly_det_vanishing_expansion():
    # every Laplace term dies: the zero determinant must come back as the
    # zero polynomial, not a lookup error
    x, y = poly_ring(("x", "y"), QQ)
    zero = Poly.zero(("x", "y"), QQ)
    assert poly_det([[x, zero], [y, zero]]).is_zero()
    assert poly_det([[zero, zero], [zero, zero]]).is_zero()


def test_poly_det_three_by_three():
    x, y, z = poly_ring(("x", "y", "z"), QQ)
    rows = [[x, y, z], [y, z, x], [z, x, y]]
    det = poly_det(rows)
    assert det == 3 * x * y * z - x**3 - y**3 - z**3


def test_poly_solve_cramer_square_only():
    x, y = poly_ring(("x", "y"), QQ)
    nums, den = poly_solve_cramer([[x, y], [y, x]], [x, y])
    # solution of [[x,y],[y,x]] v = (x,y): v = ((x^2-y^2)/(x^2-y^2), 0)
    assert den == x**2 - y**2
    assert nums[0] == x**2 - y**2
    assert nums[1].is_zero()


def test_solve_poly_rhs():
    x, y = poly_ring(("x", "y"), QQ)
    m = _m([[1, 0], [1, 1]])
    sol = m.solve_poly_rhs([x, x + y])
    assert sol == [x, y]


def test_int_nullspace_mod_p():
    rows = [[1, 2, 0], [0, 0, 1]]
    basis = int_nullspace_mod_p(rows, 3, 7)
    assert len(basis) == 1
    v = basis[0]
    assert (v[0] + 2 * v[1]) % 7 == 0 and v[2] % 7 == 0


def test_linear_substitution_apply_and_compose():
    g = LinearSubstitution([[0, 1], [1, 0]])
    x, y = poly_ring(("x", "y"), QQ)
    assert g.apply(x**2 + y) == y**2 + x
    h = LinearSubstitution([[1, 1], [0, 1]])
    # compose multiplies the matrices, so the left factor acts first
    gh = g.compose(h)
    assert gh.apply(x) == h.apply(g.apply(x))
    assert gh.apply(y) == h.apply(g.apply(y))


def test_linear_substitution_inverse():
    g = LinearSubstitution([[2, 1], [1, 1]])
    x, y = poly_ring(("x", "y"), QQ)
    p = x**3 - y
    assert g.inverse().apply(g.apply(p)) == p


def test_substitution_on_selected_indices():
    g = LinearSubstitution([[0, 1], [1, 0]])
    a, x, y = poly_ring(("a", "x", "y"), QQ)
    p = a * x**2 + y
    assert g.apply(p, indices=(1, 2)) == a * y**2 + x
