from fractions import Fraction

import pytest

from ceviangeo.errors import (
    DegenerateInput,
    IdenticalLines,
    IdenticalPoints,
    InfiniteInput,
    NotCollinear,
    UndefinedRatio,
)
from ceviangeo.projective import (
    LINE_AT_INFINITY,
    HLine,
    HPoint,
    collinear,
    concurrent,
    cross_ratio,
    harmonic_conjugate,
    join,
    meet,
    midpoint,
    parallel,
    signed_ratio,
)


def test_canonical_form():
    assert HPoint(2, 4, 6) == HPoint(1, 2, 3)
    assert HPoint(-1, -2, -3) == HPoint(1, 2, 3)
    assert HPoint(Fraction(1, 2), Fraction(1, 3), 1) == HPoint(3, 2, 6)
    assert HPoint(0, -2, 4) == HPoint(0, 1, -2)
    assert hash(HPoint(2, 4, 6)) == hash(HPoint(1, 2, 3))


def test_zero_triple_rejected():
    with pytest.raises(DegenerateInput):
        HPoint(0, 0, 0)
    with pytest.raises(DegenerateInput):
        HLine(0, 0, 0)


def test_infinite_iff_z_zero():
    assert HPoint(1, 2, 0).is_infinite
    assert not HPoint(1, 2, 3).is_infinite
    with pytest.raises(InfiniteInput):
        HPoint(1, 2, 0).to_xy()


def test_join_oracle():
    # (0:0:1) and (2:3:1) span the line 3x - 2y = 0
    assert join(HPoint(0, 0, 1), HPoint(2, 3, 1)) == HLine(3, -2, 0)


def test_meet_oracle():
    l1 = HLine(3, -2, 0)
    l2 = HLine(1, 1, -5)
    assert meet(l1, l2) == HPoint(2, 3, 1)


def test_join_meet_degenerate():
    with pytest.raises(IdenticalPoints):
        join(HPoint(1, 2, 3), HPoint(2, 4, 6))
    with pytest.raises(IdenticalLines):
        meet(HLine(1, 2, 3), HLine(2, 4, 6))


def test_parallel_lines_meet_at_infinity():
    l1 = join(HPoint(0, 0, 1), HPoint(1, 1, 1))
    l2 = join(HPoint(0, 1, 1), HPoint(1, 2, 1))
    assert parallel(l1, l2)
    assert meet(l1, l2).is_infinite
    assert not parallel(l1, HLine(1, 0, 0))
    assert parallel(LINE_AT_INFINITY, LINE_AT_INFINITY)


def test_line_contains():
    l = join(HPoint(0, 0, 1), HPoint(2, 3, 1))
    assert l.contains(HPoint(4, 6, 1))
    assert l.contains(HPoint(2, 3, 0))
    assert not l.contains(HPoint(1, 1, 1))


def test_collinear_concurrent():
    assert collinear((HPoint(0, 0, 1), HPoint(1, 1, 1), HPoint(5, 5, 1)))
    assert not collinear((HPoint(0, 0, 1), HPoint(1, 1, 1), HPoint(5, 4, 1)))
    assert collinear((HPoint(0, 0, 1), HPoint(1, 1, 1)))
    ls = (HLine(1, 0, 0), HLine(0, 1, 0), HLine(1, 1, 0))
    assert concurrent(ls)
    assert not concurrent((HLine(1, 0, 0), HLine(0, 1, 0), HLine(1, 1, -1)))


def test_cross_ratio_oracle():
    # parameters 0, 1, 2, 3 on any line give 4/3
    pts = [HPoint(t, 0, 1) for t in range(4)]
    assert cross_ratio(*pts) == Fraction(4, 3)
    skew = [HPoint(2 + 5 * t, 1 - t, 1) for t in range(4)]
    assert cross_ratio(*skew) == Fraction(4, 3)


def test_cross_ratio_invariant_under_reparametrization():
    params = [Fraction(1, 3), Fraction(-2), Fraction(5, 7), Fraction(4)]
    pts = [HPoint(1 + 2 * t, 3 - t, 1) for t in params]
    expected = ((params[0] - params[2]) * (params[1] - params[3])) / (
        (params[1] - params[2]) * (params[0] - params[3]))
    assert cross_ratio(*pts) == expected


def test_cross_ratio_with_infinite_point():
    pts = [HPoint(0, 0, 1), HPoint(1, 0, 0), HPoint(1, 0, 1), HPoint(3, 0, 1)]
    # (a-c)(b-d)/((b-c)(a-d)) with b at infinity degenerates to (a-c)/(a-d)
    assert cross_ratio(*pts) == Fraction(1, 3)


def test_cross_ratio_degenerate():
    a, b, c = HPoint(0, 0, 1), HPoint(1, 0, 1), HPoint(2, 0, 1)
    with pytest.raises(UndefinedRatio):
        cross_ratio(a, a, b, c)
    with pytest.raises(UndefinedRatio):
        cross_ratio(a, b, c, c)
    with pytest.raises(UndefinedRatio):
        cross_ratio(a, b, b, c)
    with pytest.raises(NotCollinear):
        cross_ratio(a, b, c, HPoint(1, 1, 1))
    assert cross_ratio(a, b, a, c) == 0


def test_harmonic_conjugate_oracle():
    a, b, c = HPoint(0, 0, 1), HPoint(3, 0, 1), HPoint(1, 0, 1)
    d = harmonic_conjugate(a, b, c)
    assert d == HPoint(-3, 0, 1)
    assert cross_ratio(a, b, c, d) == -1


def test_harmonic_conjugate_of_midpoint_is_infinite():
    a, b = HPoint(0, 0, 1), HPoint(2, 2, 1)
    d = harmonic_conjugate(a, b, midpoint(a, b))
    assert d.is_infinite
    assert d == HPoint(1, 1, 0)


def test_harmonic_conjugate_involution():
    a, b = HPoint(-1, 4, 1), HPoint(5, 2, 1)
    c = HPoint(2, 3, 1)
    d = harmonic_conjugate(a, b, c)
    assert harmonic_conjugate(a, b, d) == c


def test_harmonic_degenerate():
    a, b = HPoint(0, 0, 1), HPoint(2, 0, 1)
    with pytest.raises(DegenerateInput):
        harmonic_conjugate(a, b, a)
    with pytest.raises(NotCollinear):
        harmonic_conjugate(a, b, HPoint(1, 1, 1))


def test_signed_ratio():
    a, b = HPoint(0, 0, 1), HPoint(3, 0, 1)
    assert signed_ratio(a, b, HPoint(1, 0, 1)) == Fraction(1, 2)
    assert signed_ratio(a, b, HPoint(6, 0, 1)) == -2
    assert signed_ratio(a, b, midpoint(a, b)) == 1
    with pytest.raises(UndefinedRatio):
        signed_ratio(a, b, b)
    with pytest.raises(InfiniteInput):
        signed_ratio(a, b, HPoint(1, 0, 0))


def test_signed_ratio_reconstructs_point():
    a, b = HPoint(1, 2, 1), HPoint(7, -4, 1)
    c = HPoint(Fraction(5, 2), Fraction(1, 2), 1)
    r = signed_ratio(a, b, c)
    ax, ay = a.to_xy()
    bx, by = b.to_xy()
    assert HPoint((ax + r * bx) / (1 + r), (ay + r * by) / (1 + r), 1) == c


def test_midpoint():
    assert midpoint(HPoint(0, 0, 1), HPoint(4, 2, 1)) == HPoint(2, 1, 1)
    with pytest.raises(InfiniteInput):
        midpoint(HPoint(1, 0, 0), HPoint(0, 0, 1))
