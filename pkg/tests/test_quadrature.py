import numpy as np
import pytest

from normplane import QuadratureConfig, builtin_ball, cross2
from normplane.errors import NoConvergence
from normplane.expressions import compile_fn
from normplane.quadrature import integrate, integrate_piecewise


def test_constant_over_partition():
    assert integrate_piecewise(lambda t: np.ones_like(t),
                               [0, 1, 2, 3, 4]) == pytest.approx(4.0)


def test_sin_panel():
    f = compile_fn("sin(pi/2*t)")
    assert integrate(f, 1.0, 2.0) == pytest.approx(2 / np.pi, rel=1e-12)


def test_example_dual_length_integrand():
    ball = builtin_ball("mixed_example21")
    radii = [compile_fn(e) for e in (
        "1", "16/sqrt((15*cos(pi/2*t)^2+1)^3)", "4",
        "16/sqrt((15*sin(pi/2*t)^2+1)^3)")]

    def f(t):
        u = ball.point(t)
        du = ball.velocity(t)
        i = int(ball.piece_index(np.atleast_1d(t))[0])
        return radii[i](t) * cross2(u, du)

    total = integrate_piecewise(f, ball.breaks)
    assert total == pytest.approx(13.58, abs=0.01)


def test_vector_valued_integrand():
    f = compile_fn("cos(pi/2*t)")
    g = compile_fn("sin(pi/2*t)")
    out = integrate(lambda t: np.stack([f(t), g(t)], axis=-1), 0.0, 1.0)
    np.testing.assert_allclose(out, [2 / np.pi, 2 / np.pi], rtol=1e-12)


def test_no_convergence_reports_worst_panel():
    config = QuadratureConfig(nodes_per_panel=4, rel_tol=1e-14, max_depth=3)
    step = lambda t: np.where(t < np.sqrt(2) / 2, 0.0, 1.0)
    with pytest.raises(NoConvergence):
        integrate(step, 0.0, 1.0, config)


def test_zero_integrand_converges():
    assert integrate(lambda t: np.zeros_like(t), 0.0, 1.0) == 0.0


def test_config_validation():
    with pytest.raises(ValueError):
        QuadratureConfig(rel_tol=-1)
    with pytest.raises(ValueError):
        QuadratureConfig(nodes_per_panel=1)
