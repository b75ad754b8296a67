from fractions import Fraction

import pytest

from comitant.maps import (
    HAMMOND_VARS,
    HammondQuintic,
    MapError,
    QuinticImage,
    RationalMapP1,
    c35_jacobian,
    compose,
    descend_map,
    hammond_c35,
    hammond_image_polys,
    hammond_path_comparison,
    hammond_path_scalar,
    hammond_relations,
    hammond_relations_symbolic,
    hesse_cover,
    hesse_self_map,
    identity_map,
    map_degree,
    normalize_point,
    quartic_cover,
    quartic_self_map,
)
from comitant.comitants import BinaryForm
from comitant.poly import Poly, poly_ring
from comitant.scalars import GF, QQ, Fp


def pencil():
    return poly_ring(("t0", "t1"), QQ)


# ------------------------------------------------------------ RationalMapP1

def test_common_factor_is_cancelled():
    t0, t1 = pencil()
    m = RationalMapP1(t0**2 * t1, t0 * t1**2)
    assert m == RationalMapP1(t0, t1)
    assert m.degree == 1


def test_joint_primitive_normalization():
    t0, t1 = pencil()
    m = RationalMapP1(t0 * Fraction(-2, 3), t1 * Fraction(4, 3))
    # one scalar for the pair: integral, coprime, positive leading entry
    assert (str(m.num), str(m.den)) == ("t0", "-2*t1")


def test_map_validation_errors():
    t0, t1 = pencil()
    x, y, z = poly_ring(("x", "y", "z"), QQ)
    zero = Poly.zero(("t0", "t1"), QQ)
    with pytest.raises(MapError, match="zero map"):
        RationalMapP1(zero, zero)
    with pytest.raises(MapError, match="degrees differ"):
        RationalMapP1(t0**2, t1)
    with pytest.raises(MapError, match="homogeneous"):
        RationalMapP1(t0 + 1, t1)
    with pytest.raises(MapError, match="2-variable"):
        RationalMapP1(x, y)


def test_value_at_and_indeterminacy():
    t0, t1 = pencil()
    m = RationalMapP1(t0 * t1, t1**2)  # reduces to [t0 : t1]
    assert m.value_at((2, 4)) == (1, 2)
    m2 = RationalMapP1(t0**2, t1**2)
    assert m2.value_at((Fraction(1, 2), Fraction(1, 3))) == (9, 4)
    m3 = RationalMapP1(t0**2 - t1**2, t0 * t1)
    assert m3.value_at((1, 1)) == (0, 1)
    assert m3.value_at((0, 0)) == (0, 0)


def test_value_at_mod_p():
    t0, t1 = poly_ring(("t0", "t1"), GF(7))
    m = RationalMapP1(t0 + t1, t0 - t1)
    v = m.value_at((Fp(3, 7), Fp(1, 7)))
    assert v == (Fp(2, 7), Fp(1, 7))  # last coordinate normalized to 1


def test_normalize_point():
    assert normalize_point([Fraction(1, 2), Fraction(1, 3)], QQ) == (3, 2)
    assert normalize_point([-2, -4], QQ) == (1, 2)
    assert normalize_point([0, 0], QQ) == (0, 0)
    assert normalize_point([Fp(3, 5), Fp(2, 5)], GF(5)) == (Fp(4, 5),
                                                            Fp(1, 5))


def test_identity_and_compose_degrees():
    t0, t1 = pencil()
    m = RationalMapP1(t0**2 + t1**2, t0 * t1)
    assert compose(identity_map(), m) == m
    assert compose(m, identity_map()) == m
    assert map_degree(compose(m, m)) == 4


def test_compose_ring_mismatch():
    t0, t1 = pencil()
    s0, s1 = poly_ring(("t0", "t1"), GF(5))
    with pytest.raises(MapError, match="different rings"):
        compose(RationalMapP1(t0, t1), RationalMapP1(s0, s1))


# --------------------------------------------------------- the pencil maps

def test_hesse_self_map_is_the_hessian_reading():
    t0, t1 = pencil()
    m = hesse_self_map()
    assert m == RationalMapP1(6 * t0 * t1**2, -(t0**3) - 2 * t1**3)
    assert m.degree == 3


def test_quartic_self_map_is_the_hessian_reading():
    t0, t1 = pencil()
    m = quartic_self_map()
    assert m == RationalMapP1(6 * t0 * t1, t0**2 - 3 * t1**2)
    assert m.degree == 2


def test_cover_degrees():
    assert hesse_cover().degree == 12
    assert quartic_cover().degree == 6


def test_hesse_descent():
    composite = compose(hesse_cover(), hesse_self_map())
    assert composite.degree == 36
    r = descend_map(hesse_cover(), composite, 3)
    assert r.degree == 3
    assert compose(r, hesse_cover()) == composite


def test_quartic_descent_closed_form():
    t0, t1 = pencil()
    composite = compose(quartic_cover(), quartic_self_map())
    assert composite.degree == 12
    r = descend_map(quartic_cover(), composite, 2)
    assert r == RationalMapP1(27 * t0**2,
                              t0**2 - 108 * t0 * t1 + 2916 * t1**2)


def test_descend_identity():
    assert descend_map(quartic_cover(), quartic_cover(), 1) == identity_map()


def test_descend_failure_modes():
    with pytest.raises(MapError, match="does not factor"):
        descend_map(quartic_cover(), quartic_self_map(), 1)
    with pytest.raises(MapError, match="negative degree"):
        descend_map(quartic_cover(), quartic_cover(), -1)


# ------------------------------------------------------------- Hammond slice

def test_hammond_quintic_slots():
    t0, t1 = pencil()
    q = HammondQuintic(1, 2, 3, 4).quintic()
    assert q == t0**5 + 10 * t0**4 * t1 + 15 * t0 * t1**4 + 4 * t1**5


def test_hammond_rejects_zero():
    with pytest.raises(MapError, match="not all vanish"):
        HammondQuintic(0, 0, 0, 0)


def test_image_polys_frozen_formulas():
    a, b, e, f = poly_ring(HAMMOND_VARS, QQ)
    c5, c4, c3, c2, c1, c0 = hammond_image_polys()
    assert c5 == (a * f - 5 * b * e) * a
    assert c4 == (5 * a * f - 9 * b * e) * b
    assert c3 == 8 * b**2 * f
    assert c2 == -8 * a * e**2
    assert c1 == (5 * a * f - 9 * b * e) * e
    assert c0 == -(a * f - 5 * b * e) * f


def test_hammond_c35_matches_polys():
    B = HammondQuintic(2, -1, 3, 5)
    img = hammond_c35(B)
    vals = [p.evaluate([Fraction(2), Fraction(-1), Fraction(3), Fraction(5)])
            for p in hammond_image_polys()]
    assert list(img.coords()) == vals
    assert img.is_valid()


def test_hammond_c35_mod_p():
    B = HammondQuintic(Fp(2, 11), Fp(1, 11), Fp(3, 11), Fp(5, 11),
                       ring=GF(11))
    img = hammond_c35(B)
    assert img.ring == GF(11)
    assert all(isinstance(c, Fp) for c in img.coords())


def test_hammond_relations():
    B = HammondQuintic(3, 1, -2, 7)
    assert hammond_relations(B, hammond_c35(B))
    assert hammond_relations_symbolic()


def test_path_comparison_scalar_and_flip():
    cmp = hammond_path_comparison()
    assert cmp["scalar"] == 10
    assert cmp["flipped"] == ((1, 4),)
    # with a sign flip present, the strict-scalar accessor refuses
    with pytest.raises(MapError, match="sign flip"):
        hammond_path_scalar()


def test_c35_jacobian_degree_guard():
    x, y = poly_ring(("x", "y"), QQ)
    with pytest.raises(MapError, match="binary quintics"):
        c35_jacobian(BinaryForm(x**4 + y**4, 4))
    out = c35_jacobian(BinaryForm(x**5 + y**5, 5))
    assert out.degree == 5


def test_quintic_image_roundtrip():
    t0, t1 = pencil()
    img = QuinticImage(1, 0, 0, 0, 0, -1)
    assert img.quintic() == t0**5 - t1**5
    assert not QuinticImage(0, 0, 0, 0, 0, 0).is_valid()
