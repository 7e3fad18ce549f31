"""Piecewise-smooth origin-symmetric unit balls and their dual points.

A ball boundary is an ordered, contiguous list of pieces over a parameter
range [t_start, t_start + 2T].  Each piece is either a strictly convex
smooth arc given by coordinate expressions or a straight segment.  Piece
i + n must be the antipodal copy of piece i, so u(t + T) = -u(t).
"""

from __future__ import annotations

import numpy as np

from . import expressions as ex
from .errors import (DegenerateDual, DegeneratePiece, NotClosed, NotConvex,
                     NotSymmetric, UnknownBuiltin, ValidationError)
from .quadrature import DEFAULT_CONFIG, gauss_legendre, integrate


def cross2(a, b):
    """z-component of the cross product of planar vectors (last axis = 2)."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return a[..., 0] * b[..., 1] - a[..., 1] * b[..., 0]


class Piece:
    """One boundary piece: a smooth arc or a straight segment."""

    def __init__(self, kind, x_expr, y_expr, t0, t1, p0=None, p1=None):
        if not t0 < t1:
            raise ValidationError(f"piece interval [{t0}, {t1}] is empty")
        self.kind = kind
        self.x_expr = x_expr
        self.y_expr = y_expr
        self.t0 = float(t0)
        self.t1 = float(t1)
        self.p0 = None if p0 is None else np.asarray(p0, dtype=float)
        self.p1 = None if p1 is None else np.asarray(p1, dtype=float)
        dx = ex.differentiate(x_expr)
        dy = ex.differentiate(y_expr)
        self._f = (ex.compile_fn(x_expr), ex.compile_fn(y_expr))
        self._df = (ex.compile_fn(dx), ex.compile_fn(dy))
        self._ddf = (ex.compile_fn(ex.differentiate(dx)),
                     ex.compile_fn(ex.differentiate(dy)))

    @classmethod
    def arc(cls, x_expr, y_expr, t0, t1):
        return cls("arc", ex.as_expr(x_expr), ex.as_expr(y_expr), t0, t1)

    @classmethod
    def segment(cls, p0, p1, t0, t1):
        p0 = np.asarray(p0, dtype=float)
        p1 = np.asarray(p1, dtype=float)
        exprs = []
        for k in range(2):
            # p0 + (t - t0) * (p1 - p0) / (t1 - t0)
            slope = (p1[k] - p0[k]) / (t1 - t0)
            e = ex.BinOp("+", ex.Num(float(p0[k])),
                         ex.BinOp("*", ex.Num(float(slope)),
                                  ex.BinOp("-", ex.Var(), ex.Num(float(t0)))))
            exprs.append(e)
        return cls("segment", exprs[0], exprs[1], t0, t1, p0=p0, p1=p1)

    def point(self, t):
        return np.stack([self._f[0](t), self._f[1](t)], axis=-1)

    def velocity(self, t):
        return np.stack([self._df[0](t), self._df[1](t)], axis=-1)

    def accel(self, t):
        return np.stack([self._ddf[0](t), self._ddf[1](t)], axis=-1)

    def negated_shifted(self, shift):
        """The antipodal copy: u_new(t) = -u(t - shift) on [t0+shift, t1+shift]."""
        if self.kind == "segment":
            return Piece.segment(-self.p0, -self.p1,
                                 self.t0 + shift, self.t1 + shift)
        repl = ex.BinOp("-", ex.Var(), ex.Num(float(shift)))
        return Piece.arc(ex.Neg(ex.substitute(self.x_expr, repl)),
                         ex.Neg(ex.substitute(self.y_expr, repl)),
                         self.t0 + shift, self.t1 + shift)

    def scaled(self, c):
        if self.kind == "segment":
            return Piece.segment(c * self.p0, c * self.p1, self.t0, self.t1)
        return Piece.arc(ex.BinOp("*", ex.Num(float(c)), self.x_expr),
                         ex.BinOp("*", ex.Num(float(c)), self.y_expr),
                         self.t0, self.t1)


class UnitBall:
    """A validated smooth-by-parts symmetric unit ball.

    Immutable after construction; use :func:`build_ball`.
    """

    def __init__(self, pieces, breaks, T, diameter, quad=DEFAULT_CONFIG):
        self.pieces = tuple(pieces)
        self.breaks = np.asarray(breaks, dtype=float)
        self.T = float(T)
        self.n_half = len(pieces) // 2
        self.t_start = float(self.breaks[0])
        self.diameter = float(diameter)
        self.eps_reg = 1e-9 * self.diameter
        self.tol_geom = 1e-9 * self.diameter
        self.quad = quad
        self._area = None

    # -- parameter bookkeeping ----------------------------------------------

    def reduce(self, t):
        """Map parameters into [t_start, t_start + 2T)."""
        t = np.asarray(t, dtype=float)
        return self.t_start + np.mod(t - self.t_start, 2 * self.T)

    def piece_index(self, t):
        """Index of the piece containing t (right piece at a vertex)."""
        t = self.reduce(t)
        idx = np.searchsorted(self.breaks, t, side="right") - 1
        return np.clip(idx, 0, len(self.pieces) - 1)

    def antipodal(self, i):
        return (i + self.n_half) % len(self.pieces)

    def _dispatch(self, t, method):
        t = self.reduce(t)
        scalar = t.ndim == 0
        t = np.atleast_1d(t)
        idx = self.piece_index(t)
        out = np.empty(t.shape + (2,))
        for i in np.unique(idx):
            sel = idx == i
            out[sel] = getattr(self.pieces[i], method)(t[sel])
        return out[0] if scalar else out

    def point(self, t):
        return self._dispatch(t, "point")

    def velocity(self, t):
        return self._dispatch(t, "velocity")

    def accel(self, t):
        return self._dispatch(t, "accel")

    def dual(self, t):
        """Dual-ball point v(t) = u'(t) / [u(t), u'(t)]."""
        u = self.point(t)
        du = self.velocity(t)
        denom = cross2(u, du)
        if np.any(np.abs(denom) < self.eps_reg):
            raise DegenerateDual("[u, u'] vanishes")
        return du / np.asarray(denom)[..., None]

    @property
    def area(self):
        """Enclosed area, A(U) = 1/2 * integral of [u, u']."""
        if self._area is None:
            total = 0.0
            for p in self.pieces:
                total += integrate(
                    lambda s, p=p: cross2(p.point(s), p.velocity(s)),
                    p.t0, p.t1, self.quad)
            self._area = 0.5 * float(total)
        return self._area

    def scaled(self, c):
        """The ball scaled by a positive factor about the origin."""
        if c <= 0:
            raise ValidationError("scale factor must be positive")
        return build_ball([p.scaled(c) for p in self.pieces], quad=self.quad)


def _check_nodes(n):
    x, _ = gauss_legendre(n)
    return np.concatenate(([-1.0], x, [1.0]))


def build_ball(pieces, auto_symmetrize=False, quad=DEFAULT_CONFIG):
    """Validate pieces and assemble a UnitBall.

    With auto_symmetrize, the given pieces cover only the first half period
    and their antipodal copies are appended automatically.
    """
    pieces = list(pieces)
    if not pieces:
        raise ValidationError("no pieces")
    if auto_symmetrize:
        span = pieces[-1].t1 - pieces[0].t0
        pieces = pieces + [p.negated_shifted(span) for p in pieces]
    if len(pieces) % 2 != 0:
        raise NotSymmetric(f"piece count {len(pieces)} is odd")

    breaks = [pieces[0].t0]
    for p in pieces:
        if abs(p.t0 - breaks[-1]) > 1e-12 * max(1.0, abs(breaks[-1])):
            raise ValidationError(
                f"pieces are not contiguous at t={breaks[-1]}")
        breaks.append(p.t1)
    breaks = np.array(breaks)
    T = 0.5 * (breaks[-1] - breaks[0])
    n = len(pieces) // 2

    # sample nodes per piece (interior Gauss nodes plus endpoints)
    ref = _check_nodes(quad.nodes_per_panel)
    samples = []
    for p in pieces:
        ts = 0.5 * (p.t0 + p.t1) + 0.5 * (p.t1 - p.t0) * ref
        samples.append((p, ts, p.point(ts), p.velocity(ts)))

    all_u = np.concatenate([s[2] for s in samples])
    diameter = 2.0 * float(np.max(np.linalg.norm(all_u, axis=-1)))
    if diameter == 0:
        raise ValidationError("degenerate ball")
    eps_reg = 1e-9 * diameter
    tol_geom = 1e-9 * diameter

    for p, ts, u, du in samples:
        if np.min(np.linalg.norm(du, axis=-1)) < eps_reg:
            raise DegeneratePiece(
                f"u' vanishes on piece [{p.t0}, {p.t1}]")
        if np.min(cross2(u, du)) <= eps_reg:
            raise NotConvex(
                f"[u, u'] is not strictly positive on piece [{p.t0}, {p.t1}]"
                " (origin not strictly inside or wrong orientation)")
        if p.kind == "arc":
            k = cross2(du, p.accel(ts))
            if np.min(k) <= 0:
                raise NotConvex(
                    f"[u', u''] changes sign or vanishes on arc "
                    f"[{p.t0}, {p.t1}]")

    # closure
    gap = np.linalg.norm(pieces[-1].point(np.array(breaks[-1]))
                         - pieces[0].point(np.array(breaks[0])))
    if gap > tol_geom:
        raise NotClosed(f"boundary gap {gap:.3e} exceeds tolerance")

    # antipodal pairing: intervals and values
    for i in range(n):
        p, q = pieces[i], pieces[i + n]
        if (abs(q.t0 - p.t0 - T) > 1e-9 * max(1.0, T)
                or abs(q.t1 - p.t1 - T) > 1e-9 * max(1.0, T)):
            raise NotSymmetric(
                f"piece {i + n} interval is not piece {i} shifted by T")
        _, ts, u, _ = samples[i]
        mismatch = np.max(np.linalg.norm(u + q.point(ts + T), axis=-1))
        if mismatch > tol_geom:
            raise NotSymmetric(
                f"u(t+T) != -u(t) on piece {i} (error {mismatch:.3e})")

    # convexity across vertices: left/right tangents must turn left
    for i in range(len(pieces)):
        prev = pieces[i - 1]
        cur = pieces[i]
        vl = prev.velocity(np.array(prev.t1))
        vr = cur.velocity(np.array(cur.t0 if i > 0 else cur.t0))
        turn = cross2(vl, vr)
        if turn < -eps_reg * max(1.0, float(np.linalg.norm(vl) *
                                            np.linalg.norm(vr))):
            raise NotConvex(f"right turn at vertex t={cur.t0}")

    return UnitBall(pieces, breaks, T, diameter, quad=quad)


# ---------------------------------------------------------------------------
# Builtins
# ---------------------------------------------------------------------------

def _euclidean():
    pieces = [Piece.arc("cos(pi/2*t)", "sin(pi/2*t)", i, i + 1)
              for i in range(4)]
    return build_ball(pieces)


def _square():
    verts = [(1, -1), (1, 1), (-1, 1), (-1, -1)]
    pieces = [Piece.segment(verts[i], verts[(i + 1) % 4], i, i + 1)
              for i in range(4)]
    return build_ball(pieces)


def _regular_2k_gon(k=3):
    k = int(k)
    if k < 2:
        raise ValidationError("regular_2k_gon needs k >= 2")
    ang = [np.pi * j / k for j in range(2 * k)]
    verts = [(np.cos(a), np.sin(a)) for a in ang]
    pieces = [Piece.segment(verts[j], verts[(j + 1) % (2 * k)], j, j + 1)
              for j in range(2 * k)]
    return build_ball(pieces)


def _mixed_example():
    return build_ball([
        Piece.segment((1, 0), (0, 1), 0, 1),
        Piece.arc("cos(pi/2*t)", "sin(pi/2*t)", 1, 2),
        Piece.segment((-1, 0), (0, -1), 2, 3),
        Piece.arc("cos(pi/2*t)", "sin(pi/2*t)", 3, 4),
    ])


_BUILTINS = {
    "euclidean": _euclidean,
    "square": _square,
    "regular_2k_gon": _regular_2k_gon,
    "mixed_example21": _mixed_example,
}


def builtin_ball(name, **params):
    """One of the shipped balls: euclidean, square, regular_2k_gon(k),
    mixed_example21."""
    try:
        factory = _BUILTINS[name]
    except KeyError:
        raise UnknownBuiltin(name) from None
    return factory(**params)
