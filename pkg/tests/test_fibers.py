import numpy as np
import pytest

from comitant.fibers import (
    FiberCensus,
    FiberError,
    fiber_count,
    projective_points,
    sample_report,
)
from comitant.maps import RationalMapP1, quartic_self_map
from comitant.poly import poly_ring
from comitant.scalars import GF, QQ


def test_projective_point_counts():
    # |P^k(F_p)| = (p^(k+1) - 1)/(p - 1)
    assert projective_points(0, 5).shape == (1, 1)
    assert projective_points(1, 5).shape == (6, 2)
    assert projective_points(2, 5).shape == (31, 3)
    assert projective_points(3, 3).shape == (40, 4)


def test_projective_points_are_canonical():
    pts = projective_points(2, 3)
    # first nonzero coordinate of each representative is 1
    for row in pts:
        nz = [c for c in row if c]
        assert nz[0] == 1
    # and no row repeats
    assert len({tuple(r) for r in pts}) == pts.shape[0]


def test_source_dimension_guard():
    with pytest.raises(FiberError, match="0..3"):
        projective_points(4, 5)


def test_identity_census():
    t0, t1 = poly_ring(("t0", "t1"), QQ)
    census = FiberCensus([t0, t1], 11)
    assert census.total == 12
    assert census.max_fiber == 1
    assert census.image_size == 12
    assert census.indeterminate == 0
    assert census.conservation_holds()


def test_squaring_map_census():
    # [t0^2 : t1^2] on P^1 is 2:1 away from the two branch points
    t0, t1 = poly_ring(("t0", "t1"), QQ)
    census = FiberCensus([t0**2, t1**2], 11)
    assert census.max_fiber == 2
    assert census.indeterminate == 0
    assert census.conservation_holds()
    # fiber over [1 : 1] is {[1 : 1], [1 : -1]}
    assert census.fiber_size((1, 1)) == 2
    assert census.fiber_size((0, 1)) == 1
    # a non-residue of F_11 is not a square, so [nr : 1] has empty fiber
    assert census.fiber_size((2, 1)) == 0


def test_census_with_indeterminacy():
    # [t0^2 : t0*t1] as a raw pair is undefined at [0 : 1]
    t0, t1 = poly_ring(("t0", "t1"), QQ)
    census = FiberCensus([t0**2, t0 * t1], 7)
    assert census.indeterminate == 1
    assert census.conservation_holds()
    assert census.image_of((0, 1)) is None
    assert census.image_of((3, 6)) == (1, 2)


def test_census_accepts_gfp_polys():
    t0, t1 = poly_ring(("t0", "t1"), GF(7))
    census = FiberCensus([t0, t1], 7)
    assert census.max_fiber == 1
    s0, s1 = poly_ring(("t0", "t1"), GF(5))
    with pytest.raises(FiberError, match="does not match"):
        FiberCensus([s0, s1], 7)


def test_fiber_count_hand_checked():
    # x = t0/t1 with x^2 = 4 over F_7 gives x = 2 and x = 5
    t0, t1 = poly_ring(("t0", "t1"), QQ)
    assert fiber_count([t0**2, t1**2], (4, 1), 7) == 2
    assert fiber_count(RationalMapP1(t0**2, t1**2), (4, 1), 7) == 2


def test_fiber_count_accepts_rational_map():
    m = quartic_self_map()
    census = FiberCensus([m.num, m.den], 101)
    assert census.max_fiber <= m.degree
    assert fiber_count(m, (0, 1), 101) == census.fiber_size((0, 1))


def test_target_validation():
    t0, t1 = poly_ring(("t0", "t1"), QQ)
    census = FiberCensus([t0, t1], 7)
    with pytest.raises(FiberError, match="not zero"):
        census.fiber_size((0, 0))
    with pytest.raises(FiberError, match="not zero"):
        census.fiber_size((7, 14))  # zero mod 7


def test_map_shape_guard():
    with pytest.raises(FiberError, match="cannot read"):
        fiber_count(object(), (1, 1), 7)
    with pytest.raises(FiberError, match="at least one"):
        FiberCensus([], 7)


def test_sample_report_shape():
    t0, t1 = poly_ring(("t0", "t1"), QQ)
    rep = sample_report([t0, t1], 11, samples=5, seed=3)
    assert len(rep["lines"]) == 5
    assert all(line.startswith("target=[") and " fiber=1" in line
               for line in rep["lines"])
    assert rep["max_fiber"] == 1
    assert rep["indeterminate"] == 0
    assert rep["fraction_ones"] == 1.0


def test_sample_report_is_seeded():
    t0, t1 = poly_ring(("t0", "t1"), QQ)
    a = sample_report([t0**2, t1**2], 11, samples=8, seed=42)
    b = sample_report([t0**2, t1**2], 11, samples=8, seed=42)
    assert a["lines"] == b["lines"]
    c = sample_report([t0**2, t1**2], 11, samples=8, seed=43)
    assert a["lines"] != c["lines"]


def test_sample_report_needs_samples():
    with pytest.raises(FiberError, match="at least one sample"):
        t0, t1 = poly_ring(("t0", "t1"), QQ)
        sample_report([t0, t1], 7, samples=0, seed=0)
