"""End-to-end acceptance checks.

Each test prints exactly one ``ACCEPTANCE n: PASS/FAIL`` line so a full run
doubles as a short report.
"""

import math
import time

import numpy as np
import pytest

from normplane import (curve_from_radius, decompose, dual_length, iso_ledger,
                       lhuilier_check, measure_report, minkowski_gap,
                       mixed_area, polygonal_area, signed_area,
                       symmetrize_polygon, circumscribed_parallel_polygon)
from normplane import expressions as ex
from normplane.corpus import (corpus_balls, random_constant_width_convex_curve,
                              random_constant_width_zero_dual,
                              random_convex_curve, random_convex_polygon,
                              random_symmetric_convex_curve,
                              random_symmetric_convex_polygon,
                              random_symmetric_zero_dual, run_corpus)
from normplane.errors import DomainError

from conftest import rect_curve
from test_expressions import _random_expr


def _report(capsys, num, ok, detail):
    with capsys.disabled():
        print(f"\nACCEPTANCE {num}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, detail


def test_criterion_1_example_dual_length(capsys, example22):
    start = time.perf_counter()
    rep = measure_report(example22)
    elapsed = time.perf_counter() - start
    ok = abs(rep.dual_length - 13.58) <= 0.05 and elapsed < 1.0
    _report(capsys, 1, ok,
            f"L*={rep.dual_length:.4f} (want 13.58 +/- 0.05), "
            f"runtime {elapsed:.3f}s < 1s")


def test_criterion_2_figure_areas(capsys, example22):
    dec = decompose(example22)
    A_U = math.pi / 2 + 1
    A = signed_area(example22)
    lhs = dual_length(example22) ** 2 / (4 * A_U)
    residual = lhs - (A - 2 * dec.wc_area - dec.cwms_area)
    ok = (abs(dec.wc_area + 1.33) <= 0.02
          and abs(dec.cwms_area + 0.48) <= 0.02
          and abs(residual) <= 1e-6 * lhs)
    _report(capsys, 2, ok,
            f"A_WC={dec.wc_area:.4f} (want -1.33 +/- 0.02), "
            f"A_CWMS={dec.cwms_area:.4f} (want -0.48 +/- 0.02), "
            f"|residual|={abs(residual):.2e} <= 1e-6*lhs")


def test_criterion_3_identity_corpus(capsys):
    start = time.perf_counter()
    report = run_corpus(seed=2024, n=200, orthogonality_pairs=0)
    elapsed = time.perf_counter() - start
    identity = [v for v in report["violations"] if v["check"] == "identity"]
    ok = (report["curves_checked"] >= 200 and not identity
          and elapsed < 60.0)
    _report(capsys, 3, ok,
            f"{report['curves_checked']} curves on 4 balls, "
            f"{len(identity)} identity violations, runtime {elapsed:.1f}s")


def test_criterion_4_inequality_suite(capsys):
    report = run_corpus(seed=2024, n=200, orthogonality_pairs=0)
    gap_names = ("gap_sym", "gap_cw", "gap_busemann", "minkowski_gap")
    gap_violations = [v for v in report["violations"]
                      if v["check"] in gap_names]
    worst_eq = 0.0
    rng = np.random.default_rng(404)
    for ball in corpus_balls():
        for _ in range(3):
            led = iso_ledger(random_symmetric_convex_curve(ball, rng))
            worst_eq = max(worst_eq, abs(led.gap_sym) / led.scale)
            led = iso_ledger(random_constant_width_convex_curve(ball, rng))
            worst_eq = max(worst_eq, abs(led.gap_cw) / led.scale)
        c = float(rng.uniform(0.5, 2.0))
        ball_curve = curve_from_radius(
            ball, c, basepoint=c * ball.point(np.array(ball.t_start)))
        led = iso_ledger(ball_curve)
        for gap in (led.gap_sym, led.gap_cw, led.gap_busemann):
            worst_eq = max(worst_eq, abs(gap) / led.scale)
        mg = minkowski_gap(ball_curve)
        worst_eq = max(worst_eq, abs(mg) / max(led.dual_length ** 2, 1.0))
    ok = not gap_violations and worst_eq <= 1e-8
    _report(capsys, 4, ok,
            f"{len(gap_violations)} gap violations over 200 curves; "
            f"worst equality-case gap {worst_eq:.2e} <= 1e-8*scale")


def test_criterion_5_orthogonality(capsys):
    rng = np.random.default_rng(31415)
    balls = corpus_balls()
    worst = 0.0
    n_pairs = 500
    for j in range(n_pairs):
        ball = balls[j % len(balls)]
        sym = random_symmetric_zero_dual(ball, rng)
        cw = random_constant_width_zero_dual(ball, rng)
        m = mixed_area(sym, cw)
        scale = max(abs(signed_area(sym)), abs(signed_area(cw)),
                    sym.diameter * cw.diameter, 1e-12)
        worst = max(worst, abs(m) / scale)
    ok = worst <= 1e-9
    _report(capsys, 5, ok,
            f"{n_pairs} (symmetric, constant-width) pairs, "
            f"worst |mixed_area|/scale = {worst:.2e} <= 1e-9")


def test_criterion_6_rectangle_closed_forms(capsys, square):
    rng = np.random.default_rng(606)
    worst = 0.0
    for _ in range(20):
        a, b = sorted(rng.uniform(0.2, 3.0, size=2), reverse=True)
        led = iso_ledger(rect_curve(square, a, b))
        for got, want in ((led.dual_length, 4 * (a + b)),
                          (led.curve_area, 4 * a * b),
                          (led.cwms_area, -(a - b) ** 2),
                          (led.gap_cw, (a - b) ** 2)):
            worst = max(worst, abs(got - want) / max(abs(want), 1e-12))
    ok = worst <= 1e-10
    _report(capsys, 6, ok,
            f"20 random rectangles, worst relative error {worst:.2e} "
            "<= 1e-10")


def test_criterion_7_lhuilier(capsys):
    rng = np.random.default_rng(707)
    worst_gap = 0.0
    for _ in range(1000):
        K = random_convex_polygon(rng, int(rng.integers(5, 13)))
        rep = lhuilier_check(K)
        worst_gap = min(worst_gap, rep.gap / rep.scale)
    worst_eq = 0.0
    for _ in range(5):
        K0 = random_convex_polygon(rng, int(rng.integers(5, 13)))
        K1_0 = symmetrize_polygon(circumscribed_parallel_polygon(K0))
        rep = lhuilier_check(K1_0.scaled(float(rng.uniform(0.5, 2.0))))
        worst_eq = max(worst_eq, abs(rep.gap) / rep.scale)
    worst_sym = 0.0
    for _ in range(5):
        K = random_symmetric_convex_polygon(rng, int(rng.integers(3, 7)))
        rep = lhuilier_check(K)
        a = np.array(sorted(map(tuple, np.round(rep.K1.vertices, 9))))
        b = np.array(sorted(map(tuple, np.round(rep.K1_0.vertices, 9))))
        if a.shape != b.shape:
            worst_sym = float("inf")
        else:
            worst_sym = max(worst_sym, float(np.max(np.abs(a - b))))
    ok = worst_gap >= -1e-9 and worst_eq <= 1e-8 and worst_sym <= 1e-9
    _report(capsys, 7, ok,
            f"1000 polygons: min gap/scale {worst_gap:.2e} >= -1e-9; "
            f"equality cases {worst_eq:.2e} <= 1e-8; "
            f"parallel-sides K1^0=K1 within {worst_sym:.2e}")


def test_criterion_8_oracles(capsys, example22, rectangle, euclidean, mixed):
    rng = np.random.default_rng(808)
    curves = [example22, rectangle,
              curve_from_radius(euclidean, 1.5, basepoint=(1.5, 0)),
              random_convex_curve(mixed, rng)]
    worst_area = 0.0
    for curve in curves:
        quad = signed_area(curve)
        shoe = polygonal_area(curve, 100_000)
        worst_area = max(worst_area, abs(shoe - quad) / abs(quad))
    worst_fd = 0.0
    accepted = 0
    while accepted < 1000:
        e = _random_expr(rng)
        d = ex.differentiate(e)
        t = float(rng.uniform(-2, 2))
        try:
            exact = ex.evaluate(d, t)
            lo = ex.evaluate(e, t - 1e-6)
            hi = ex.evaluate(e, t + 1e-6)
        except DomainError:
            continue
        if not all(map(math.isfinite, (exact, lo, hi))):
            continue
        if max(abs(lo), abs(hi)) > 1e3:
            continue
        fd = (hi - lo) / 2e-6
        worst_fd = max(worst_fd, abs(exact - fd) / (1 + abs(exact)))
        accepted += 1
    ok = worst_area <= 1e-6 and worst_fd <= 1e-6
    _report(capsys, 8, ok,
            f"shoelace vs quadrature worst rel {worst_area:.2e} <= 1e-6; "
            f"1000 derivative probes worst {worst_fd:.2e} <= 1e-6")
