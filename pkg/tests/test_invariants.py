"""Invariant-basis computation and the named calibrated invariants."""

import random
from fractions import Fraction

import pytest

from comitant.grammar import parse_poly
from comitant.comitants import BinaryForm, TernaryForm
from comitant.invariants import (
    InvariantError,
    canonical_quartic,
    evaluate_invariant,
    find_invariants,
    generic_form,
    hesse_pencil,
    invariant_S_quartic,
    measured_weight,
    named_invariant,
    quartic_pencil,
    quintic_invariants,
    random_substitution,
    substituted_form,
)
from comitant.poly import Poly, poly_ring
from comitant.scalars import QQ


# ----------------------------------------------------------- space dimensions

def test_binary_quartic_invariant_dimensions():
    assert len(find_invariants(2, 4, 2)) == 1
    assert len(find_invariants(2, 4, 3)) == 1
    assert find_invariants(2, 4, 1) == []


def test_ternary_cubic_degree_four_dimension():
    assert len(find_invariants(3, 3, 4)) == 1


def test_binary_cubic_discriminant_dimension():
    # the degree-4 invariant of a binary cubic is the discriminant, dim 1
    assert len(find_invariants(2, 3, 4)) == 1


def test_size_guard():
    with pytest.raises(InvariantError, match="too large"):
        find_invariants(3, 6, 12)


def test_generic_form_shape():
    g = generic_form(2, 3)
    # 4 coefficient variables ahead of the two form variables
    assert len(g.vars) == 6
    assert g.is_homogeneous((4, 5))


# ------------------------------------------------------------ frozen values

def test_I2_I3_on_the_canonical_quartic():
    a = Poly.variable("alpha", ("alpha",), QQ)
    assert evaluate_invariant(named_invariant("I2", (2, 4)),
                              canonical_quartic()) == 1 + 3 * a**2
    assert evaluate_invariant(named_invariant("I3", (2, 4)),
                              canonical_quartic()) == a - a**3


def test_I2_I3_on_plain_forms():
    x, y = poly_ring(("x", "y"), QQ)
    f = BinaryForm(x**4 + y**4, 4)
    assert evaluate_invariant(named_invariant("I2", (2, 4)), f) == 1
    assert evaluate_invariant(named_invariant("I3", (2, 4)), f) == 0
    # x^3*y has a1 as its only nonzero binomial coefficient, which kills
    # every monomial of both invariants
    g = BinaryForm(x**3 * y, 4)
    assert evaluate_invariant(named_invariant("I2", (2, 4)), g) == 0
    assert evaluate_invariant(named_invariant("I3", (2, 4)), g) == 0


def test_S_and_T_on_the_hesse_pencil():
    t0, t1 = poly_ring(("t0", "t1"), QQ)
    S = evaluate_invariant(named_invariant("S", (3, 3)), hesse_pencil())
    T = evaluate_invariant(named_invariant("T", (3, 3)), hesse_pencil())
    assert S == t0**3 * t1 - t1**4
    assert T == t0**6 - 20 * t0**3 * t1**3 - 8 * t1**6


def test_S_T_on_fermat_cubic():
    # the pencil at (t0, t1) = (1, 0)
    f = TernaryForm(parse_poly("X^3 + Y^3 + Z^3", ("X", "Y", "Z")), 3)
    assert evaluate_invariant(named_invariant("S", (3, 3)), f) == 0
    assert evaluate_invariant(named_invariant("T", (3, 3)), f) == 1


def test_quartic_pencil_values():
    t0, t1 = poly_ring(("t0", "t1"), QQ)
    I2 = evaluate_invariant(named_invariant("I2", (2, 4)), quartic_pencil())
    I3 = evaluate_invariant(named_invariant("I3", (2, 4)), quartic_pencil())
    assert I2 == t0**2 + 3 * t1**2
    assert I3 == t0**2 * t1 - t1**3


def test_named_invariant_unknown():
    with pytest.raises(InvariantError, match="no invariant named"):
        named_invariant("J", (2, 4))
    with pytest.raises(InvariantError, match="no invariant named"):
        named_invariant("I2", (3, 3))


def test_degree_mismatch_rejected():
    x, y = poly_ring(("x", "y"), QQ)
    f = BinaryForm(x**3, 3)
    with pytest.raises(InvariantError, match="space mismatch"):
        evaluate_invariant(named_invariant("I2", (2, 4)), f)


# --------------------------------------------------------- quintic invariants

def test_quintic_trio_degrees_and_names():
    trio = quintic_invariants()
    assert [d.name for d in trio] == ["I4", "I8", "I12"]
    assert [d.degree for d in trio] == [4, 8, 12]
    assert all(d.space == (2, 5) for d in trio)


def test_quintic_invariants_vanish_on_pure_power():
    x, y = poly_ring(("x", "y"), QQ)
    f = BinaryForm(x**5, 5)
    for name in ("I4", "I8", "I12"):
        assert evaluate_invariant(named_invariant(name, (2, 5)), f) == 0


def test_quintic_invariants_unimodular_invariance():
    rng = random.Random(20240)
    x, y = poly_ring(("x", "y"), QQ)
    f = BinaryForm(x**5 - 2 * x**3 * y**2 + 3 * x * y**4 + y**5, 5)
    trio = quintic_invariants()
    base = [evaluate_invariant(d, f) for d in trio]
    for _ in range(3):
        g = random_substitution(2, rng, unimodular=True)
        moved = [evaluate_invariant(d, substituted_form(f, g)) for d in trio]
        det = g.matrix.det()
        assert moved == [det**d.weight() * b for d, b in zip(trio, base)]


# -------------------------------------------------------------------- weights

def test_measured_weight_matches_declared():
    rng = random.Random(7)
    x, y = poly_ring(("x", "y"), QQ)
    sample = BinaryForm(x**4 + x * y**3 - y**4, 4)
    for name, expect in (("I2", 4), ("I3", 6)):
        inv = named_invariant(name, (2, 4))
        assert inv.weight() == expect
        g = random_substitution(2, rng)
        while abs(g.matrix.det()) == 1:  # avoid the ambiguous det = +-1 case
            g = random_substitution(2, rng)
        assert measured_weight(inv, g, sample) == expect


def test_measured_weight_rejects_zero_locus():
    x, y = poly_ring(("x", "y"), QQ)
    inv = named_invariant("I3", (2, 4))
    g = random_substitution(2, random.Random(1))
    with pytest.raises(InvariantError, match="zero locus"):
        measured_weight(inv, g, BinaryForm(x**4 + y**4, 4))


def test_ternary_quartic_degree_three_invariant():
    inv = invariant_S_quartic()
    assert inv.degree == 3 and inv.space == (3, 4)
    X, Y, Z = poly_ring(("X", "Y", "Z"), QQ)
    fermat = TernaryForm(X**4 + Y**4 + Z**4, 4)
    assert evaluate_invariant(inv, fermat) != 0
