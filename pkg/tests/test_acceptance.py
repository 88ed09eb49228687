"""Acceptance gate: the eight shipping criteria, each exact and zero-tolerance.

Every test prints exactly one ACCEPTANCE line (PASS or FAIL) so the gate can
be read off a plain pytest run.  Sampling is pinned to seed 7 throughout, so
the verdicts are reproducible bit for bit.
"""

import io
import random
import time

import pytest

from ceviangeo.affine import AffineMap, FixedPointKind, fixed_points, half_turn
from ceviangeo.cli import main
from ceviangeo.conic import circle_through_three
from ceviangeo.conjugacy import (
    ConjugacyContext,
    cyclocevian,
    formula_one,
    formula_two,
    isogonal,
    isotomic,
    isotomcomplement,
)
from ceviangeo.projective import HLine, HPoint, join, meet
from ceviangeo.sampling import Stratum, sample_configurations
from ceviangeo.theorems import Status, run_suite
from ceviangeo.triangle import Bary, Triangle, bary_to_point, classify_point


def _verdict(number, name, failures):
    ok = not failures
    print(f"ACCEPTANCE {number} {name}: {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {number} ({name}): " + "; ".join(failures[:3])


def _run_cli(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out=out, err=err)
    return code, out.getvalue()


@pytest.fixture(scope="module")
def generic200():
    return sample_configurations(7, 200)


@pytest.fixture(scope="module")
def steiner100():
    return sample_configurations(7, 100, Stratum.ON_STEINER)


def test_criterion_1_generic_sweep_clean_and_fast():
    start = time.monotonic()
    code, out = _run_cli(["check", "--stratum", "generic", "--seed", "7", "--n", "200"])
    elapsed = time.monotonic() - start
    failures = []
    if code != 0:
        failures.append(f"exit code {code}")
    summary = out.strip().splitlines()[-1]
    if " 0 FAIL" not in summary:
        failures.append(f"summary reports failures: {summary}")
    if elapsed >= 300:
        failures.append(f"sweep took {elapsed:.1f}s")
    _verdict(1, "generic sweep, 200 configurations", failures)


def test_criterion_2_steiner_locus_statements(generic200):
    code, out = _run_cli(["check", "--stratum", "on-steiner", "--seed", "7", "--n", "100"])
    failures = []
    if code != 0:
        failures.append(f"exit code {code}")
    lines = out.strip().splitlines()
    for theorem_id in ("T2_1", "R3_11", "T3_13", "C3_14"):
        passed = sum(1 for l in lines if l.startswith(f"{theorem_id} PASS"))
        if passed != 100:
            failures.append(f"{theorem_id}: {passed}/100 PASS")
    # off the locus the composite map must differ from the inverse complement
    for cfg in generic200:
        if cfg.S == cfg.K_inv_map:
            failures.append(f"S equals K inverse off the locus at index {cfg.index}")
            break
    _verdict(2, "Steiner locus statements", failures)


def test_criterion_3_three_constructions_of_q_agree(generic200):
    failures = []
    for cfg in generic200:
        formula = bary_to_point(cfg.triangle, isotomcomplement(cfg.ctx, cfg.P_bary))
        synthetic = meet(join(cfg.D[0], cfg.M_d), join(cfg.E[0], cfg.M_e))
        third = join(cfg.F[0], cfg.M_f)
        fp = fixed_points(cfg.T_P)
        if fp.kind is not FixedPointKind.UNIQUE_POINT:
            failures.append(f"index {cfg.index}: fixed point kind {fp.kind}")
            break
        if not (formula == synthetic == fp.point == cfg.Q and third.contains(synthetic)):
            failures.append(
                f"index {cfg.index}: formula={formula} synthetic={synthetic} fixed={fp.point}"
            )
            break
    _verdict(3, "isotomcomplement by formula, concurrence, fixed point", failures)


def test_criterion_4_cyclocevian_oracle_and_involution():
    t = Triangle.from_xy((0, 0), (4, 0), (1, 3))
    ctx = ConjugacyContext(t)
    failures = []

    # orthocenter from two altitudes, checked against the third
    (ax, ay), (bx, by), (cx, cy) = (0, 0), (4, 0), (1, 3)
    alt_a = HLine(cx - bx, cy - by, -((cx - bx) * ax + (cy - by) * ay))
    alt_b = HLine(cx - ax, cy - ay, -((cx - ax) * bx + (cy - ay) * by))
    alt_c = HLine(bx - ax, by - ay, -((bx - ax) * cx + (by - ay) * cy))
    orthocenter = meet(alt_a, alt_b)
    if not alt_c.contains(orthocenter):
        failures.append("altitudes do not concur")
    if orthocenter != HPoint(1, 1, 1):
        failures.append(f"orthocenter {orthocenter} is not (1, 1)")
    g_image = cyclocevian(ctx, Bary(1, 1, 1))
    if bary_to_point(t, g_image) != orthocenter:
        failures.append(f"cyclocevian of the centroid is {g_image}")

    rng = random.Random(7)
    checked = 0
    while checked < 100 and not failures:
        coords = tuple(rng.randint(-9, 9) for _ in range(3))
        if 0 in coords:
            continue
        b = Bary(*coords)
        if classify_point(t, bary_to_point(t, b)):
            continue
        image = cyclocevian(ctx, b)
        if formula_one(ctx, b) != image or formula_two(ctx, b) != image:
            failures.append(f"formulas disagree at {coords}")
        elif cyclocevian(ctx, image) != b:
            failures.append(f"not an involution at {coords}")
        checked += 1
    _verdict(4, "cyclocevian oracle, formulas, involution", failures)


def test_criterion_5_six_traces_on_one_circle(generic200):
    failures = []
    for cfg in generic200[:100]:
        circle = circle_through_three(cfg.D[1], cfg.E[1], cfg.F[1])
        u, v, w = cyclocevian(cfg.ctx, cfg.P_bary).coords
        partner = (
            bary_to_point(cfg.triangle, Bary(0, v, w)),
            bary_to_point(cfg.triangle, Bary(u, 0, w)),
            bary_to_point(cfg.triangle, Bary(u, v, 0)),
        )
        for trace in (cfg.D[1], cfg.E[1], cfg.F[1], *partner):
            if circle.residue(trace) != 0:
                failures.append(f"index {cfg.index}: residue {circle.residue(trace)} at {trace}")
                break
        if failures:
            break
    _verdict(5, "cevian traces and their partners are concyclic", failures)


def test_criterion_6_fixed_point_structure_by_stratum(generic200, steiner100):
    failures = []
    for cfg in generic200:
        fp = fixed_points(cfg.T_P)
        if fp.kind is not FixedPointKind.UNIQUE_POINT or fp.point != cfg.Q:
            failures.append(f"generic index {cfg.index}: {fp.kind}, point {fp.point}")
            break
    for cfg in steiner100:
        fp = fixed_points(cfg.T_P)
        if fp.kind is not FixedPointKind.NO_ORDINARY_FIXED_POINT:
            failures.append(f"locus index {cfg.index}: {fp.kind}")
            break
        invariant = join(cfg.G, cfg.T_P.apply(cfg.G))
        if cfg.T_P.apply_line(invariant) != invariant:
            failures.append(f"locus index {cfg.index}: {invariant} not invariant")
            break
    _verdict(6, "unique fixed point off the locus, none on it", failures)


def test_criterion_7_involutions_and_inverses(generic200):
    failures = []
    identity = AffineMap.identity()
    for cfg in generic200:
        b = cfg.P_bary
        if isotomic(cfg.ctx, isotomic(cfg.ctx, b)) != b:
            failures.append(f"index {cfg.index}: isotomic not involutive")
            break
        if isogonal(cfg.ctx, isogonal(cfg.ctx, b)) != b:
            failures.append(f"index {cfg.index}: isogonal not involutive")
            break
        if cfg.K_map.compose(cfg.K_inv_map) != identity:
            failures.append(f"index {cfg.index}: complement maps not inverse")
            break
        h = half_turn(cfg.N1)
        if h.compose(h) != identity:
            failures.append(f"index {cfg.index}: half turn not involutive")
            break
        side_points = (cfg.triangle.B, cfg.triangle.C, cfg.D[0], cfg.D[1], cfg.D[2])
        if any(cfg.pi(cfg.pi(y)) != y for y in side_points):
            failures.append(f"index {cfg.index}: side involution squared is not identity")
            break
    _verdict(7, "involutions square to the identity, complements invert", failures)


def test_criterion_8_infinite_pivot_statements_hold():
    reports = run_suite(
        sample_configurations(7, 100, Stratum.P_INFINITE),
        ids=("T2_1", "T2_4", "T3_2"),
    )
    failures = [
        f"{r.theorem_id} {r.status.value} at index {r.index}: {r.witness or r.reason}"
        for r in reports
        if r.status is not Status.PASS
    ]
    if len(reports) != 300:
        failures.append(f"expected 300 reports, got {len(reports)}")
    _verdict(8, "statements survive an infinite pivot", failures)
