"""Adaptive Gauss-Legendre quadrature for piecewise-smooth integrands."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import NoConvergence


@dataclass(frozen=True)
class QuadratureConfig:
    nodes_per_panel: int = 32
    rel_tol: float = 1e-10
    abs_tol: float = 1e-14  # floor for integrands that are essentially zero
    max_depth: int = 12

    def __post_init__(self):
        if self.rel_tol <= 0:
            raise ValueError("rel_tol must be positive")
        if self.nodes_per_panel < 2:
            raise ValueError("need at least 2 nodes per panel")


DEFAULT_CONFIG = QuadratureConfig()


@lru_cache(maxsize=32)
def gauss_legendre(n):
    """Nodes and weights on [-1, 1]."""
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def panel(f, a, b, n):
    """Fixed n-node Gauss-Legendre estimate of the integral of f over [a, b].

    f maps an array of parameters to an array whose first axis matches the
    input; trailing axes (e.g. vector components) are integrated
    componentwise.
    """
    x, w = gauss_legendre(n)
    ts = 0.5 * (a + b) + 0.5 * (b - a) * x
    vals = np.asarray(f(ts), dtype=float)
    return 0.5 * (b - a) * np.tensordot(w, vals, axes=(0, 0))


def _adapt(f, a, b, whole, config, depth):
    m = 0.5 * (a + b)
    left = panel(f, a, m, config.nodes_per_panel)
    right = panel(f, m, b, config.nodes_per_panel)
    refined = left + right
    err = np.max(np.abs(whole - refined))
    scale = max(np.max(np.abs(refined)), np.max(np.abs(whole)))
    if err <= max(config.rel_tol * scale, config.abs_tol):
        return refined
    if depth >= config.max_depth:
        raise NoConvergence(
            f"quadrature did not converge on [{a}, {b}] "
            f"(error {err:.3e}, scale {scale:.3e})")
    return (_adapt(f, a, m, left, config, depth + 1)
            + _adapt(f, m, b, right, config, depth + 1))


def integrate(f, a, b, config=DEFAULT_CONFIG):
    """Adaptive panel-halving integral of f over [a, b]."""
    if a == b:
        probe = np.asarray(f(np.array([a])), dtype=float)
        return np.zeros(probe.shape[1:])[()] if probe.ndim > 1 else 0.0
    whole = panel(f, a, b, config.nodes_per_panel)
    return _adapt(f, a, b, whole, config, 0)


def integrate_piecewise(f, partition, config=DEFAULT_CONFIG):
    """Integrate over consecutive intervals of a partition, summing results.

    The partition is the increasing sequence of breakpoints; the integrand
    must be smooth in the interior of each interval.
    """
    partition = np.asarray(partition, dtype=float)
    total = None
    for a, b in zip(partition[:-1], partition[1:]):
        part = integrate(f, a, b, config)
        total = part if total is None else total + part
    return total
