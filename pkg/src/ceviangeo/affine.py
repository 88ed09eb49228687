"""Exact affine maps of the rational plane and their fixed point structure.

An affine map is stored as a rational 2x2 matrix plus a translation vector;
this representation is unique, so map equality is entrywise equality.  The
map acts on ordinary points in Cartesian coordinates and on infinite points
through its linear part, so the line at infinity is always preserved.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    CollinearSource,
    CollinearTarget,
    InfiniteCenter,
    InfiniteInput,
)
from .projective import HLine, HPoint

Mat2 = tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]
Vec2 = tuple[Fraction, Fraction]


def _frac_mat(m: Sequence[Sequence[int | Fraction]]) -> Mat2:
    return (
        (Fraction(m[0][0]), Fraction(m[0][1])),
        (Fraction(m[1][0]), Fraction(m[1][1])),
    )


@dataclass(frozen=True)
class AffineMap:
    """x -> m x + t on Cartesian coordinates."""

    m: Mat2
    t: Vec2

    def __init__(self, m: Sequence[Sequence[int | Fraction]], t: Sequence[int | Fraction]):
        object.__setattr__(self, "m", _frac_mat(m))
        object.__setattr__(self, "t", (Fraction(t[0]), Fraction(t[1])))

    @classmethod
    def identity(cls) -> "AffineMap":
        return cls(((1, 0), (0, 1)), (0, 0))

    @property
    def det(self) -> Fraction:
        return self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]

    def apply(self, p: HPoint) -> HPoint:
        """Image of a projective point; infinite points map by the linear part."""
        x, y, z = p.coords
        nx = self.m[0][0] * x + self.m[0][1] * y + self.t[0] * z
        ny = self.m[1][0] * x + self.m[1][1] * y + self.t[1] * z
        return HPoint(nx, ny, z)

    def apply_line(self, l: HLine) -> HLine:
        """Image line; computed with the inverse transpose, hence exact."""
        inv = self._m_inverse()
        a, b, n = l.coeffs
        na = inv[0][0] * a + inv[1][0] * b
        nb = inv[0][1] * a + inv[1][1] * b
        nn = n - (self.t[0] * na + self.t[1] * nb)
        return HLine(na, nb, nn)

    def _m_inverse(self) -> Mat2:
        d = self.det
        if d == 0:
            raise CollinearTarget("affine map not invertible")
        return (
            (self.m[1][1] / d, -self.m[0][1] / d),
            (-self.m[1][0] / d, self.m[0][0] / d),
        )

    def compose(self, other: "AffineMap") -> "AffineMap":
        """self after other: (self.compose(other))(x) = self(other(x))."""
        a, b = self.m
        m = (
            (a[0] * other.m[0][0] + a[1] * other.m[1][0], a[0] * other.m[0][1] + a[1] * other.m[1][1]),
            (b[0] * other.m[0][0] + b[1] * other.m[1][0], b[0] * other.m[0][1] + b[1] * other.m[1][1]),
        )
        t = (
            a[0] * other.t[0] + a[1] * other.t[1] + self.t[0],
            b[0] * other.t[0] + b[1] * other.t[1] + self.t[1],
        )
        return AffineMap(m, t)

    def invert(self) -> "AffineMap":
        inv = self._m_inverse()
        t = (
            -(inv[0][0] * self.t[0] + inv[0][1] * self.t[1]),
            -(inv[1][0] * self.t[0] + inv[1][1] * self.t[1]),
        )
        return AffineMap(inv, t)


def from_correspondence(src: Sequence[HPoint], dst: Sequence[HPoint]) -> AffineMap:
    """The unique affine map sending three ordinary points to three others.

    Both triples must be non-collinear; the resulting map is invertible.
    """
    if len(src) != 3 or len(dst) != 3:
        raise CollinearSource("need exactly three source and target points")
    for p in (*src, *dst):
        if p.is_infinite:
            raise InfiniteInput(f"correspondence point {p} is infinite")
    s = [p.to_xy() for p in src]
    d = [p.to_xy() for p in dst]
    s10 = (s[1][0] - s[0][0], s[1][1] - s[0][1])
    s20 = (s[2][0] - s[0][0], s[2][1] - s[0][1])
    det_s = s10[0] * s20[1] - s10[1] * s20[0]
    if det_s == 0:
        raise CollinearSource(f"source points {src} collinear")
    d10 = (d[1][0] - d[0][0], d[1][1] - d[0][1])
    d20 = (d[2][0] - d[0][0], d[2][1] - d[0][1])
    det_d = d10[0] * d20[1] - d10[1] * d20[0]
    if det_d == 0:
        raise CollinearTarget(f"target points {dst} collinear")
    # m [s10 s20] = [d10 d20], solved columnwise by Cramer
    m00 = (d10[0] * s20[1] - d20[0] * s10[1]) / det_s
    m01 = (d20[0] * s10[0] - d10[0] * s20[0]) / det_s
    m10 = (d10[1] * s20[1] - d20[1] * s10[1]) / det_s
    m11 = (d20[1] * s10[0] - d10[1] * s20[0]) / det_s
    t0 = d[0][0] - (m00 * s[0][0] + m01 * s[0][1])
    t1 = d[0][1] - (m10 * s[0][0] + m11 * s[0][1])
    return AffineMap(((m00, m01), (m10, m11)), (t0, t1))


def homothety(center: HPoint, ratio: int | Fraction) -> AffineMap:
    """Scaling by ratio about an ordinary center (ratio -1 is the half turn)."""
    if center.is_infinite:
        raise InfiniteCenter(f"homothety center {center} is infinite")
    r = Fraction(ratio)
    cx, cy = center.to_xy()
    return AffineMap(((r, 0), (0, r)), ((1 - r) * cx, (1 - r) * cy))


def half_turn(center: HPoint) -> AffineMap:
    """Point reflection about an ordinary center; an exact involution."""
    if center.is_infinite:
        raise InfiniteCenter(f"half turn center {center} is infinite")
    return homothety(center, -1)


class FixedPointKind(enum.Enum):
    IDENTITY = "IDENTITY"
    UNIQUE_POINT = "UNIQUE_POINT"
    LINE_OF_FIXED_POINTS = "LINE_OF_FIXED_POINTS"
    NO_ORDINARY_FIXED_POINT = "NO_ORDINARY_FIXED_POINT"


@dataclass(frozen=True)
class FixedPointStructure:
    """Complete exact fixed point data of an affine map.

    point is set for UNIQUE_POINT, line for LINE_OF_FIXED_POINTS.  The
    infinite fixed points are the rational eigendirections of the linear
    part (every one of them, when the whole line at infinity is fixed,
    signalled by all_infinite_points_fixed).  irrational_directions_exist
    reports real eigendirections that leave the rational field.
    """

    kind: FixedPointKind
    point: HPoint | None
    line: HLine | None
    infinite_fixed_directions: tuple[tuple[HPoint, Fraction], ...]
    all_infinite_points_fixed: bool
    irrational_directions_exist: bool


def _rational_sqrt(f: Fraction) -> Fraction | None:
    if f < 0:
        return None
    num = math.isqrt(f.numerator)
    den = math.isqrt(f.denominator)
    if num * num == f.numerator and den * den == f.denominator:
        return Fraction(num, den)
    return None


def _eigendirections(m: Mat2) -> tuple[tuple[tuple[HPoint, Fraction], ...], bool, bool]:
    """Rational eigendirections of the linear part, as infinite points."""
    tr = m[0][0] + m[1][1]
    det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    disc = tr * tr - 4 * det
    if disc < 0:
        return (), False, False
    root = _rational_sqrt(disc)
    if root is None:
        return (), False, True
    eigenvalues = sorted({(tr + root) / 2, (tr - root) / 2})
    directions: list[tuple[HPoint, Fraction]] = []
    for lam in eigenvalues:
        a, b = m[0][0] - lam, m[0][1]
        c, d = m[1][0], m[1][1] - lam
        if a == 0 and b == 0 and c == 0 and d == 0:
            return (), True, False  # scalar matrix: every direction is fixed
        if a != 0 or b != 0:
            vec = (b, -a)
        else:
            vec = (d, -c)
        directions.append((HPoint(vec[0], vec[1], 0), lam))
    return tuple(directions), False, False


def fixed_points(f: AffineMap) -> FixedPointStructure:
    """Exact classification of the fixed locus of an affine map."""
    directions, all_inf, irrational = _eigendirections(f.m)
    a = f.m[0][0] - 1
    b = f.m[0][1]
    c = f.m[1][0]
    d = f.m[1][1] - 1
    rhs = (-f.t[0], -f.t[1])
    det = a * d - b * c
    if det != 0:
        x = (rhs[0] * d - b * rhs[1]) / det
        y = (a * rhs[1] - rhs[0] * c) / det
        return FixedPointStructure(
            FixedPointKind.UNIQUE_POINT, HPoint(x, y, 1), None,
            directions, all_inf, irrational)
    if a == 0 and b == 0 and c == 0 and d == 0:
        if f.t == (0, 0):
            return FixedPointStructure(
                FixedPointKind.IDENTITY, None, None, directions, True, False)
        return FixedPointStructure(
            FixedPointKind.NO_ORDINARY_FIXED_POINT, None, None,
            directions, True, False)
    # rank one: the two equations (m - 1) x = -t are proportional
    if a != 0 or b != 0:
        row, val = (a, b), rhs[0]
        other_row, other_val = (c, d), rhs[1]
    else:
        row, val = (c, d), rhs[1]
        other_row, other_val = (a, b), rhs[0]
    pivot = row[0] if row[0] != 0 else row[1]
    factor = (other_row[0] if row[0] != 0 else other_row[1]) / pivot
    if other_row[0] == factor * row[0] and other_row[1] == factor * row[1] and other_val == factor * val:
        line = HLine(row[0], row[1], -val)
        return FixedPointStructure(
            FixedPointKind.LINE_OF_FIXED_POINTS, None, line,
            directions, all_inf, irrational)
    return FixedPointStructure(
        FixedPointKind.NO_ORDINARY_FIXED_POINT, None, None,
        directions, all_inf, irrational)


class MapShape(enum.Enum):
    HOMOTHETY = "HOMOTHETY"
    TRANSLATION = "TRANSLATION"
    OTHER = "OTHER"


@dataclass(frozen=True)
class HomothetyClassification:
    shape: MapShape
    center: HPoint | None = None
    ratio: Fraction | None = None
    direction: HPoint | None = None


def classify_homothety(f: AffineMap) -> HomothetyClassification:
    """Detect scalar linear part: homothety (ratio != 1), translation, or other.

    The identity map is OTHER: it is neither a proper homothety nor a
    proper translation.
    """
    if f.m[0][1] != 0 or f.m[1][0] != 0 or f.m[0][0] != f.m[1][1]:
        return HomothetyClassification(MapShape.OTHER)
    lam = f.m[0][0]
    if lam == 1:
        if f.t == (0, 0):
            return HomothetyClassification(MapShape.OTHER)
        return HomothetyClassification(
            MapShape.TRANSLATION, direction=HPoint(f.t[0], f.t[1], 0))
    cx = f.t[0] / (1 - lam)
    cy = f.t[1] / (1 - lam)
    return HomothetyClassification(
        MapShape.HOMOTHETY, center=HPoint(cx, cy, 1), ratio=lam)
