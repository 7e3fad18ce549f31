"""Admissible curves: closed curves with gamma'(t) = r(t) u'(t) per piece.

A curve is stored as its ball, a per-piece curvature-radius function and a
basepoint; points are recovered by integrating r u' (cached per piece).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import expressions as ex
from .ball import cross2
from .errors import NotAdmissible, NotClosed
from .quadrature import DEFAULT_CONFIG, gauss_legendre, integrate


def _coerce_radius(obj):
    """Turn an Expr, text, number, or callable into a vectorized callable."""
    if callable(obj) and not isinstance(obj, ex.Expr):
        return obj
    if isinstance(obj, (int, float)):
        c = float(obj)
        return lambda t: np.full(np.shape(t), c)
    return ex.compile_fn(ex.as_expr(obj))


class AdmissibleCurve:
    """A closed curve subordinate to a ball's piece partition."""

    def __init__(self, ball, radii, basepoint, quad=DEFAULT_CONFIG,
                 check_closure=True, tol_close=None):
        self.ball = ball
        if callable(radii) or isinstance(radii, (ex.Expr, str, int, float)):
            radii = [radii] * len(ball.pieces)
        if len(radii) != len(ball.pieces):
            raise ValueError(
                f"need one radius per ball piece ({len(ball.pieces)}), "
                f"got {len(radii)}")
        self.radii = [_coerce_radius(r) for r in radii]
        self.basepoint = np.asarray(basepoint, dtype=float)
        self.quad = quad

        # cumulative piece start points
        starts = [self.basepoint]
        for i, p in enumerate(ball.pieces):
            disp = integrate(self._piece_integrand(i), p.t0, p.t1, quad)
            starts.append(starts[-1] + disp)
        self.piece_starts = np.array(starts[:-1])
        self.closure_residual = float(np.linalg.norm(starts[-1]
                                                     - self.basepoint))
        self._diameter = None

        if check_closure:
            if tol_close is None:
                tol_close = 1e-8 * max(self.diameter, ball.diameter)
            if self.closure_residual > tol_close:
                raise NotClosed(
                    f"curve does not close: residual "
                    f"{self.closure_residual:.3e} > {tol_close:.3e}")

    def _piece_integrand(self, i):
        p = self.ball.pieces[i]
        r = self.radii[i]
        return lambda s: r(s)[..., None] * p.velocity(s)

    # -- evaluation ---------------------------------------------------------

    def radius(self, t):
        """Curvature radius r(t), vectorized (right piece at vertices)."""
        t = self.ball.reduce(t)
        scalar = t.ndim == 0
        t = np.atleast_1d(t)
        idx = self.ball.piece_index(t)
        out = np.empty(t.shape)
        for i in np.unique(idx):
            sel = idx == i
            out[sel] = self.radii[i](t[sel])
        return out[0] if scalar else out

    def point(self, t):
        """gamma(t) = basepoint + integral of r u' from the start."""
        t = self.ball.reduce(t)
        scalar = t.ndim == 0
        t = np.atleast_1d(t)
        idx = self.ball.piece_index(t)
        out = np.empty(t.shape + (2,))
        x, w = gauss_legendre(self.quad.nodes_per_panel)
        for i in np.unique(idx):
            sel = idx == i
            ts = t[sel]
            p = self.ball.pieces[i]
            # nodes from the piece start to each t
            half = 0.5 * (ts - p.t0)
            nodes = p.t0 + half[:, None] * (x[None, :] + 1.0)
            vals = (self.radii[i](nodes)[..., None]
                    * p.velocity(nodes))  # (m, nn, 2)
            seg = half[:, None] * np.tensordot(vals, w, axes=(1, 0))
            out[sel] = self.piece_starts[i] + seg
        return out[0] if scalar else out

    def velocity(self, t):
        return self.radius(t)[..., None] * self.ball.velocity(t)

    @property
    def diameter(self):
        if self._diameter is None:
            pts = self.sample_points(256)
            lo = pts.min(axis=0)
            hi = pts.max(axis=0)
            self._diameter = float(np.linalg.norm(hi - lo))
        return self._diameter

    def sample_params(self, per_piece=64, endpoints=True):
        """Quadrature nodes (plus optional endpoints) on every piece."""
        x, _ = gauss_legendre(per_piece)
        chunks = []
        for p in self.ball.pieces:
            ts = 0.5 * (p.t0 + p.t1) + 0.5 * (p.t1 - p.t0) * x
            if endpoints:
                ts = np.concatenate(([p.t0], ts, [p.t1 - 1e-12 * (p.t1 - p.t0)]))
            chunks.append(ts)
        return np.concatenate(chunks)

    def sample_points(self, per_piece=64):
        return self.point(self.sample_params(per_piece))

    # -- algebra ------------------------------------------------------------

    def translated(self, v):
        return AdmissibleCurve(self.ball, self.radii,
                               self.basepoint + np.asarray(v, float),
                               quad=self.quad, check_closure=False)

    def radius_scaled(self, c, basepoint=None):
        """The curve with radius c*r (displacements scale by c)."""
        radii = [(lambda t, r=r: c * r(t)) for r in self.radii]
        if basepoint is None:
            basepoint = self.basepoint
        return AdmissibleCurve(self.ball, radii, basepoint, quad=self.quad,
                               check_closure=False)


def pointwise_sum(c1, c2):
    """The curve t -> c1(t) + c2(t); radii add, basepoints add."""
    if c1.ball is not c2.ball:
        raise ValueError("curves must share a ball")
    radii = [(lambda t, a=a, b=b: a(t) + b(t))
             for a, b in zip(c1.radii, c2.radii)]
    return AdmissibleCurve(c1.ball, radii, c1.basepoint + c2.basepoint,
                           quad=c1.quad, check_closure=False)


def curve_from_radius(ball, radius, basepoint=(0.0, 0.0),
                      quad=DEFAULT_CONFIG):
    """Build a closed admissible curve from its curvature-radius function.

    radius is a single item or a per-piece list; each item may be an Expr,
    expression text, a constant, or a vectorized callable.
    """
    return AdmissibleCurve(ball, radius, basepoint, quad=quad)


def curve_from_explicit(ball, pieces, tol=1e-8, quad=DEFAULT_CONFIG):
    """Recover a curve from explicit per-piece coordinate expressions.

    pieces is one (x_expr, y_expr) pair per ball piece.  The radius is
    extracted by projecting gamma' on u'; if gamma' is not parallel to u'
    within tol (relative), the curve is rejected.
    """
    if len(pieces) != len(ball.pieces):
        raise ValueError(
            f"need one (x, y) pair per ball piece ({len(ball.pieces)})")
    radii = []
    x, _ = gauss_legendre(quad.nodes_per_panel)
    for bp, (x_expr, y_expr) in zip(ball.pieces, pieces):
        dx = ex.compile_fn(ex.differentiate(ex.as_expr(x_expr)))
        dy = ex.compile_fn(ex.differentiate(ex.as_expr(y_expr)))

        def r_fn(t, dx=dx, dy=dy, bp=bp):
            g = np.stack([dx(t), dy(t)], axis=-1)
            du = bp.velocity(t)
            return np.sum(g * du, axis=-1) / np.sum(du * du, axis=-1)

        ts = 0.5 * (bp.t0 + bp.t1) + 0.5 * (bp.t1 - bp.t0) * x
        g = np.stack([dx(ts), dy(ts)], axis=-1)
        du = bp.velocity(ts)
        r = r_fn(ts)
        resid = np.linalg.norm(g - r[:, None] * du, axis=-1)
        speed = np.linalg.norm(g, axis=-1)
        scale = max(float(np.max(speed)), 1e-300)
        if np.any(resid > tol * (speed + 1e-12 * scale)):
            worst = float(ts[np.argmax(resid / (speed + 1e-12 * scale))])
            raise NotAdmissible(
                f"gamma' is not parallel to u' near t={worst:.6g}")
        radii.append(r_fn)

    first = ball.pieces[0]
    fx = ex.compile_fn(ex.as_expr(pieces[0][0]))
    fy = ex.compile_fn(ex.as_expr(pieces[0][1]))
    basepoint = np.array([float(fx(np.array(first.t0))),
                          float(fy(np.array(first.t0)))])
    return AdmissibleCurve(ball, radii, basepoint, quad=quad)


# ---------------------------------------------------------------------------
# Convexity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConvexityResult:
    convex: bool
    sign: int            # +1 or -1 when convex, 0 otherwise
    witness: float | None  # a parameter near a sign flip when not convex


def _radius_samples(curve, per_piece=64):
    """(params, radii) at quadrature nodes plus one-sided piece endpoints."""
    ts = curve.sample_params(per_piece)
    return ts, curve.radius(ts)


def is_convex(curve, per_piece=64):
    """Classify by the sign pattern of the curvature radius."""
    ts, r = _radius_samples(curve, per_piece)
    scale = float(np.max(np.abs(r)))
    if scale == 0.0:
        return ConvexityResult(True, +1, None)  # point curve
    eps = 1e-10 * scale
    has_pos = bool(np.any(r > eps))
    has_neg = bool(np.any(r < -eps))
    if has_pos and has_neg:
        flip = int(np.argmax(np.abs(np.diff(np.sign(r)))))
        return ConvexityResult(False, 0, float(ts[flip]))
    return ConvexityResult(True, +1 if has_pos or not has_neg else -1, None)


def convexifying_shift(curve, per_piece=64):
    """Smallest K >= 0 (on the sampling grid) with min r + K >= 0."""
    _, r = _radius_samples(curve, per_piece)
    return float(max(0.0, -np.min(r)))


def shifted_by_ball(curve, K):
    """The curve gamma + K u (radius r + K)."""
    radii = [(lambda t, r=r, p=p, K=K: r(t) + K)
             for r, p in zip(curve.radii, curve.ball.pieces)]
    base = curve.basepoint + K * curve.ball.point(
        np.array(curve.ball.t_start))
    return AdmissibleCurve(curve.ball, radii, base, quad=curve.quad,
                           check_closure=False)
