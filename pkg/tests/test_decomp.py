import numpy as np
import pytest

from normplane import (curve_from_radius, cwms, decompose, dual_length,
                       is_constant_width, is_symmetric, mixed_area,
                       signed_area, wigner_caustic)
from normplane.corpus import (random_constant_width_convex_curve,
                              random_convex_curve,
                              random_symmetric_convex_curve)


class TestKernels:
    def test_wc_of_scaled_ball_is_a_point(self, euclidean):
        c = curve_from_radius(euclidean, 2.0, basepoint=(2, 0))
        wc = wigner_caustic(c)
        ts = np.linspace(0, 4, 50)
        pts = wc.point(ts)
        assert np.max(np.abs(pts - pts[0])) < 1e-10
        np.testing.assert_allclose(wc.radius(ts), 0.0, atol=1e-12)

    def test_cwms_of_scaled_ball_is_a_point(self, mixed):
        base = 1.5 * mixed.point(np.array(0.0))
        c = curve_from_radius(mixed, 1.5, basepoint=base)
        cw = cwms(c)
        ts = np.linspace(0, 4, 50)
        np.testing.assert_allclose(cw.radius(ts), 0.0, atol=1e-10)
        pts = cw.point(ts)
        assert np.max(np.abs(pts - pts[0])) < 1e-9

    def test_symmetric_curve_has_point_wc(self, rectangle):
        wc = wigner_caustic(rectangle)
        ts = np.linspace(0, 4, 80)
        pts = wc.point(ts)
        assert np.max(np.abs(pts - pts[0])) < 1e-10

    def test_constant_width_curve_has_point_cwms(self, euclidean):
        rng = np.random.default_rng(7)
        c = random_constant_width_convex_curve(euclidean, rng)
        cw = cwms(c)
        ts = np.linspace(0, 4, 80)
        pts = cw.point(ts)
        assert np.max(np.abs(pts - pts[0])) < 1e-8


class TestExampleAreas:
    def test_example22_wc_area(self, example22):
        dec = decompose(example22)
        assert dec.wc_area == pytest.approx(-1.33, abs=0.02)
        assert dec.wc_area_raw == pytest.approx(2 * dec.wc_area, rel=1e-12)

    def test_example22_cwms_area(self, example22):
        dec = decompose(example22)
        assert dec.cwms_area == pytest.approx(-0.48, abs=0.02)

    def test_rectangle_cwms_bowtie_area(self, rectangle):
        # the CWMS of an a x b rectangle is a bowtie of area -(a - b)^2
        a, b = rectangle.ab
        dec = decompose(rectangle)
        assert dec.cwms_area == pytest.approx(-(a - b) ** 2, rel=1e-10)
        assert dec.wc_area == pytest.approx(0.0, abs=1e-12)


class TestDecomposition:
    def test_reconstruction_residual(self, example22, rectangle):
        for curve in (example22, rectangle):
            dec = decompose(curve)
            scale = max(curve.diameter, curve.ball.diameter)
            assert dec.residual <= 1e-9 * scale

    def test_mean_width_matches_measures(self, example22):
        dec = decompose(example22)
        assert dec.mean_width == pytest.approx(
            dual_length(example22) / example22.ball.area, rel=1e-12)

    def test_projections_are_idempotent(self, example22):
        ts = example22.sample_params(16, endpoints=False)
        wc = wigner_caustic(example22)
        wc2 = wigner_caustic(wc)
        np.testing.assert_allclose(wc2.radius(ts), wc.radius(ts),
                                   atol=1e-12)
        cw = cwms(example22)
        cw2 = cwms(cw)
        np.testing.assert_allclose(cw2.radius(ts), cw.radius(ts),
                                   atol=1e-10)

    def test_cross_projections_vanish(self, example22):
        # WC is anti-symmetric material, CWMS symmetric: projecting either
        # through the other kills the radius
        ts = example22.sample_params(16, endpoints=False)
        np.testing.assert_allclose(
            cwms(wigner_caustic(example22)).radius(ts), 0.0, atol=1e-10)
        np.testing.assert_allclose(
            wigner_caustic(cwms(example22)).radius(ts), 0.0, atol=1e-10)


class TestImageProperties:
    def test_wc_output_is_constant_width_zero(self, all_balls):
        rng = np.random.default_rng(13)
        for ball in all_balls.values():
            curve = random_convex_curve(ball, rng)
            wc = wigner_caustic(curve)
            res = is_constant_width(wc)
            assert res.constant
            assert res.value == pytest.approx(0.0, abs=1e-9)
            assert abs(dual_length(wc)) < 1e-9 * max(1.0, curve.diameter)

    def test_cwms_output_is_symmetric_zero_dual(self, all_balls):
        rng = np.random.default_rng(19)
        for ball in all_balls.values():
            curve = random_convex_curve(ball, rng)
            cw = cwms(curve)
            assert is_symmetric(cw)
            assert abs(dual_length(cw)) < 1e-9 * max(1.0, curve.diameter)

    def test_components_are_orthogonal(self, all_balls):
        rng = np.random.default_rng(29)
        for ball in all_balls.values():
            dec = decompose(random_convex_curve(ball, rng))
            m = mixed_area(dec.wc, dec.cwms)
            scale = max(abs(dec.wc_area), abs(dec.cwms_area), 1e-6)
            assert abs(m) < 1e-9 * max(scale, 1.0)


class TestSignCorollary:
    def test_component_areas_nonpositive(self, all_balls):
        rng = np.random.default_rng(37)
        for ball in all_balls.values():
            for _ in range(3):
                curve = random_convex_curve(ball, rng)
                dec = decompose(curve)
                scale = abs(signed_area(curve))
                assert dec.wc_area <= 1e-9 * scale
                assert dec.cwms_area <= 1e-9 * scale

    def test_equality_cases(self, all_balls):
        rng = np.random.default_rng(41)
        for ball in all_balls.values():
            sym = random_symmetric_convex_curve(ball, rng)
            assert decompose(sym).wc_area == pytest.approx(0.0, abs=1e-10)
            cw = random_constant_width_convex_curve(ball, rng)
            assert decompose(cw).cwms_area == pytest.approx(0.0, abs=1e-10)
