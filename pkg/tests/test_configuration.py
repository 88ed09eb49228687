import pytest

from ceviangeo.configuration import build_configuration
from ceviangeo.errors import HypothesisViolated
from ceviangeo.projective import HPoint, join, midpoint
from ceviangeo.triangle import Bary, Degeneracy, Triangle, bary_to_point

T0 = Triangle.from_xy((0, 0), (1, 0), (0, 1))
T1 = Triangle.from_xy((0, 0), (7, 1), (2, 6))


def _cfg(t, coords):
    return build_configuration(t, bary_to_point(t, Bary(*coords)))


def test_configuration_is_pure():
    a = _cfg(T1, (1, 2, 3))
    b = _cfg(T1, (1, 2, 3))
    assert a.Q == b.Q and a.T_P == b.T_P and a.D == b.D and a.O_a == b.O_a


def test_hypothesis_violation_names_flag():
    with pytest.raises(HypothesisViolated, match="ON_SIDELINE"):
        _cfg(T0, (0, 1, 2))
    with pytest.raises(HypothesisViolated, match="IS_VERTEX"):
        build_configuration(T0, T0.A)
    with pytest.raises(HypothesisViolated, match="ON_ANTICOMPLEMENTARY_SIDE"):
        _cfg(T0, (1, -1, 2))


def test_named_point_oracles():
    cfg = _cfg(T0, (1, 2, 3))
    assert cfg.Q_bary == Bary(5, 8, 9)
    assert cfg.Q_prime_bary == Bary(5, 4, 3)
    assert cfg.P_prime_bary == Bary(6, 3, 2)
    assert cfg.flags == frozenset()


def test_trace_families_sit_on_sides():
    cfg = _cfg(T1, (1, 2, 3))
    sides = (join(T1.B, T1.C), join(T1.C, T1.A), join(T1.A, T1.B))
    for family, side in zip((cfg.D, cfg.E, cfg.F), sides):
        for trace in family:
            assert trace is not None
            assert side.contains(trace)


def test_images_are_cevian_map_images():
    cfg = _cfg(T1, (3, 5, -2))
    for traces, images in ((cfg.D, cfg.Ai), (cfg.E, cfg.Bi), (cfg.F, cfg.Ci)):
        for trace, image in zip(traces, images):
            assert image == cfg.T_P.apply(trace)


def test_midpoints_and_hexagon_points():
    cfg = _cfg(T1, (1, 2, 3))
    assert cfg.M_d == midpoint(T1.A, cfg.D[1])
    assert cfg.N1 == midpoint(T1.A, cfg.D[0])
    assert cfg.R == midpoint(T1.A, cfg.P)
    assert cfg.M == midpoint(cfg.P, cfg.Q_prime)
    assert cfg.A0_prime == midpoint(cfg.E[3], cfg.F[3])


def test_infinite_pivot_fields():
    cfg = _cfg(T1, (2, 3, -5))
    assert cfg.flags == frozenset({Degeneracy.AT_INFINITY})
    assert cfg.P.is_infinite
    assert cfg.R is None and cfg.M is None
    assert not cfg.P_prime.is_infinite
    assert cfg.Q_prime == cfg.P


def test_steiner_pivot_fields():
    cfg = _cfg(T1, (6, 3, -2))
    assert Degeneracy.ON_STEINER in cfg.flags
    assert cfg.P_prime.is_infinite
    assert cfg.Q == cfg.P_prime
    assert cfg.R_prime is None
    assert cfg.X == cfg.G


def test_pi_swaps_b_and_c():
    cfg = _cfg(T1, (1, 2, 3))
    assert cfg.pi(T1.B) == T1.C
    assert cfg.pi(T1.C) == T1.B
    y = midpoint(T1.B, T1.C)
    assert cfg.pi(cfg.pi(y)) == y


def test_composed_map_matches_components():
    cfg = _cfg(T1, (1, 2, 3))
    p = HPoint(9, -4, 1)
    assert cfg.S.apply(p) == cfg.T_P.apply(cfg.T_P_prime.apply(p))
