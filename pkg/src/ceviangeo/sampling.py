"""Seeded random configurations, stratified by pivot degeneracy class.

Every sample satisfies the standing hypothesis by construction; each stratum
additionally pins the classification flags exactly, so e.g. a generic sample
is never accidentally on a median or on the circumscribed centroid ellipse.
"""

from __future__ import annotations

import enum
import random
from fractions import Fraction
from typing import Optional

from .configuration import Configuration, build_configuration
from .errors import DegenerateTriangle, SamplerExhausted
from .triangle import Bary, Degeneracy, Triangle, bary_to_point, classify_point

_COORD_RANGE = 10
_BARY_RANGE = 9
_ATTEMPTS = 400


class Stratum(enum.Enum):
    GENERIC = "generic"
    ON_STEINER = "on-steiner"
    P_INFINITE = "p-infinite"
    ON_MEDIAN = "on-median"


_REQUIRED_FLAGS = {
    Stratum.GENERIC: frozenset(),
    Stratum.ON_STEINER: frozenset({Degeneracy.ON_STEINER}),
    Stratum.P_INFINITE: frozenset({Degeneracy.AT_INFINITY}),
    Stratum.ON_MEDIAN: frozenset({Degeneracy.ON_MEDIAN}),
}


def _random_triangle(rng: random.Random) -> Optional[Triangle]:
    pts = [(rng.randint(-_COORD_RANGE, _COORD_RANGE),
            rng.randint(-_COORD_RANGE, _COORD_RANGE)) for _ in range(3)]
    try:
        return Triangle.from_xy(*pts)
    except DegenerateTriangle:
        return None


def _nonzero(rng: random.Random) -> int:
    value = 0
    while value == 0:
        value = rng.randint(-_BARY_RANGE, _BARY_RANGE)
    return value


def _candidate_bary(rng: random.Random, stratum: Stratum) -> Bary:
    if stratum is Stratum.GENERIC:
        return Bary(_nonzero(rng), _nonzero(rng), _nonzero(rng))
    if stratum is Stratum.ON_STEINER:
        # (1 : t : -t/(1+t)) parametrizes the ellipse; scale by 1+t.
        t = Fraction(_nonzero(rng), rng.randint(1, _BARY_RANGE))
        if t == -1:
            t = Fraction(2)
        return Bary(1 + t, t * (1 + t), -t)
    if stratum is Stratum.P_INFINITE:
        u, v = _nonzero(rng), _nonzero(rng)
        return Bary(u, v, -u - v)
    u, w = _nonzero(rng), _nonzero(rng)
    coords = [u, u, w]
    rng.shuffle(coords)
    return Bary(*coords)


def sample_configuration(rng: random.Random, stratum: Stratum,
                         seed: Optional[int] = None,
                         index: Optional[int] = None) -> Configuration:
    """One configuration whose pivot classification matches the stratum exactly."""
    required = _REQUIRED_FLAGS[stratum]
    for _ in range(_ATTEMPTS):
        t = _random_triangle(rng)
        if t is None:
            continue
        bary = _candidate_bary(rng, stratum)
        p = bary_to_point(t, bary)
        if classify_point(t, p) != required:
            continue
        return build_configuration(t, p, seed=seed, index=index)
    raise SamplerExhausted(
        f"no {stratum.value} configuration found in {_ATTEMPTS} attempts")


def sample_configurations(seed: int, n: int,
                          stratum: Stratum = Stratum.GENERIC) -> list[Configuration]:
    """n independent seeded configurations from one stratum."""
    rng = random.Random(seed)
    return [sample_configuration(rng, stratum, seed=seed, index=i) for i in range(n)]
