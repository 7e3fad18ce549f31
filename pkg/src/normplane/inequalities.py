"""Isoperimetric identities and inequalities, and the polygonal
Lhuilier-type construction.

The central identity for a convex admissible curve is

    L*^2 / (4 A_U) = A_gamma - 2 A_WC - A_CWMS

with A_WC the once-around area of the Wigner caustic.  Dropping either
correction term weakens it to an inequality whose equality cases are the
symmetric and the constant-width curves; dropping both recovers the
isoperimetric inequality of the normed plane.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ball import Piece, build_ball, cross2
from .curve import AdmissibleCurve, is_convex
from .decomp import decompose
from .errors import (DegenerateIntersection, EmbeddingFailed,
                     NotConvexInput, ValidationError)
from .measures import dual_length, shoelace_area, signed_area


def minkowski_gap(curve, config=None):
    """L*(gamma)^2 - 4 A(gamma) A(U), non-negative for admissible curves."""
    L = dual_length(curve, config)
    return L * L - 4.0 * signed_area(curve, config) * curve.ball.area


@dataclass
class IsoLedger:
    dual_length: float
    ball_area: float
    curve_area: float
    wc_area: float        # once-around Wigner caustic area
    cwms_area: float
    lhs: float            # L*^2 / (4 A_U)
    identity_residual: float
    gap_sym: float        # lhs - (A - A_CWMS); zero for symmetric curves
    gap_cw: float         # lhs - (A - 2 A_WC); zero for constant width
    gap_busemann: float   # lhs - A; zero for multiples of u
    scale: float

    def to_dict(self):
        return {
            "dual_length": self.dual_length,
            "ball_area": self.ball_area,
            "curve_area": self.curve_area,
            "wc_area": self.wc_area,
            "cwms_area": self.cwms_area,
            "lhs": self.lhs,
            "identity_residual": self.identity_residual,
            "gap_sym": self.gap_sym,
            "gap_cw": self.gap_cw,
            "gap_busemann": self.gap_busemann,
        }


def iso_ledger(curve, config=None):
    """All terms of the isoperimetric identity and its weakened gaps."""
    conv = is_convex(curve)
    if not (conv.convex and conv.sign >= 0):
        raise NotConvexInput(
            "the isoperimetric identity requires a positively oriented "
            f"convex curve (witness t={conv.witness})")
    L = dual_length(curve, config)
    A_U = curve.ball.area
    A = signed_area(curve, config)
    dec = decompose(curve)
    lhs = L * L / (4.0 * A_U)
    return IsoLedger(
        dual_length=L,
        ball_area=A_U,
        curve_area=A,
        wc_area=dec.wc_area,
        cwms_area=dec.cwms_area,
        lhs=lhs,
        identity_residual=lhs - (A - 2.0 * dec.wc_area - dec.cwms_area),
        gap_sym=lhs - (A - dec.cwms_area),
        gap_cw=lhs - (A - 2.0 * dec.wc_area),
        gap_busemann=lhs - A,
        scale=max(abs(lhs), abs(A), 1e-300),
    )


# ---------------------------------------------------------------------------
# Polygons and the Lhuilier construction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Polygon:
    """Strictly convex polygon, counterclockwise vertices."""

    vertices: np.ndarray

    def __post_init__(self):
        verts = np.asarray(self.vertices, dtype=float)
        object.__setattr__(self, "vertices", verts)
        if len(verts) < 3:
            raise ValidationError("polygon needs at least 3 vertices")
        edges = np.roll(verts, -1, axis=0) - verts
        turns = cross2(edges, np.roll(edges, -1, axis=0))
        if np.any(turns <= 0):
            raise ValidationError(
                "vertices are not in strictly convex CCW position")

    @property
    def edges(self):
        return np.roll(self.vertices, -1, axis=0) - self.vertices

    @property
    def normals(self):
        """Unit outward normals, one per edge."""
        e = self.edges
        n = np.stack([e[:, 1], -e[:, 0]], axis=-1)
        return n / np.linalg.norm(n, axis=-1, keepdims=True)

    @property
    def area(self):
        return shoelace_area(self.vertices)

    def scaled(self, c):
        return Polygon(c * self.vertices)


def _tangent_polygon(normals):
    """Intersection of halfplanes <n_i, x> <= 1 over angle-sorted normals.

    Every halfplane boundary is tangent to the unit circle, so consecutive
    boundary lines meet in exactly the polygon's vertices.
    """
    angles = np.arctan2(normals[:, 1], normals[:, 0])
    order = np.argsort(angles)
    normals = normals[order]
    angles = angles[order]
    # neighbouring normals must span less than a half turn
    gaps = np.diff(np.concatenate([angles, [angles[0] + 2 * np.pi]]))
    if np.any(gaps >= np.pi - 1e-12):
        raise DegenerateIntersection(
            "normals leave a half-plane uncovered; intersection is unbounded")
    verts = []
    m = len(normals)
    for i in range(m):
        n1 = normals[i]
        n2 = normals[(i + 1) % m]
        det = cross2(n1, n2)
        if abs(det) < 1e-14:
            raise DegenerateIntersection("parallel consecutive normals")
        # solve n1.x = 1, n2.x = 1
        verts.append(((n2[1] - n1[1]) / det, (n1[0] - n2[0]) / det))
    return Polygon(np.array(verts))


def _dedupe_normals(normals, tol=1e-12):
    angles = np.mod(np.arctan2(normals[:, 1], normals[:, 0]), 2 * np.pi)
    order = np.argsort(angles)
    keep = []
    last = None
    for i in order:
        if last is None or angles[i] - last > tol:
            keep.append(i)
            last = angles[i]
    # wrap-around duplicate
    if len(keep) > 1 and (angles[keep[0]] + 2 * np.pi - last) <= tol:
        keep.pop(0)
    return normals[keep]


def circumscribed_parallel_polygon(K):
    """K1: circumscribed about the unit circle, sides parallel to K's."""
    return _tangent_polygon(K.normals)


def symmetrize_polygon(K1):
    """K1 intersected with -K1: the tangent polygon over normals +-n_i."""
    normals = np.concatenate([K1.normals, -K1.normals])
    return _tangent_polygon(_dedupe_normals(normals))


def polygon_ball(P, quad=None):
    """A symmetric polygon as a unit ball, one unit parameter per edge."""
    verts = P.vertices
    m = len(verts)
    if m % 2 != 0:
        raise ValidationError("polygonal ball needs an even vertex count")
    pieces = [Piece.segment(verts[j], verts[(j + 1) % m], j, j + 1)
              for j in range(m)]
    kwargs = {} if quad is None else {"quad": quad}
    return build_ball(pieces, **kwargs)


@dataclass
class LhuilierReport:
    K: Polygon
    K1: Polygon
    K1_0: Polygon
    dual_length: float
    area_K: float
    area_K1_0: float
    gap: float            # L*^2 / (4 A(K1_0)) - A(K)
    equality: bool        # K is a constant multiple of K1_0
    scale: float

    def to_dict(self):
        return {
            "K": self.K.vertices.tolist(),
            "K1": self.K1.vertices.tolist(),
            "K1_0": self.K1_0.vertices.tolist(),
            "L_star": self.dual_length,
            "A_K": self.area_K,
            "A_K1_0": self.area_K1_0,
            "gap": self.gap,
            "equality": self.equality,
        }


def embed_polygon(K, ball_poly, ball=None):
    """K as an admissible curve in the normed plane with polygonal ball.

    Each edge of K is matched to the ball edge with the same outward
    normal; the radius on that piece is the length ratio, and ball edges
    with no parallel K edge get radius zero.
    """
    if ball is None:
        ball = polygon_ball(ball_poly)
    ball_normals = ball_poly.normals
    ball_edges = ball_poly.edges
    k_normals = K.normals
    k_edges = K.edges
    k_verts = K.vertices

    radii = [0.0] * len(ball_edges)
    start_piece = None
    start_vertex = None
    for i, n in enumerate(k_normals):
        dots = ball_normals @ n
        j = int(np.argmax(dots))
        if dots[j] < 1.0 - 1e-9:
            raise EmbeddingFailed(
                f"edge {i} of K has no parallel ball edge; the construction "
                "guarantees one, so this indicates a bug")
        radii[j] = float(np.linalg.norm(k_edges[i])
                         / np.linalg.norm(ball_edges[j]))
        if start_piece is None or j < start_piece:
            start_piece = j
            start_vertex = k_verts[i]
    return AdmissibleCurve(ball, radii, start_vertex)


def lhuilier_check(K, tol_equal=1e-8):
    """The weak Lhuilier inequality: L*(K)^2 / (4 A(K1^0)) >= A(K)."""
    K1 = circumscribed_parallel_polygon(K)
    K1_0 = symmetrize_polygon(K1)
    ball = polygon_ball(K1_0)
    gamma = embed_polygon(K, K1_0, ball=ball)
    L = dual_length(gamma)
    A_K = K.area
    A_ball = K1_0.area
    gap = L * L / (4.0 * A_ball) - A_K
    # equality iff the radius is the same constant on every piece
    r = np.array([float(gamma.radii[i](np.full(1, 0.5 * (p.t0 + p.t1)))[0])
                  for i, p in enumerate(ball.pieces)])
    spread = float(np.max(r) - np.min(r))
    equality = spread <= tol_equal * max(float(np.max(np.abs(r))), 1e-300)
    return LhuilierReport(
        K=K, K1=K1, K1_0=K1_0,
        dual_length=L, area_K=A_K, area_K1_0=A_ball,
        gap=gap, equality=equality,
        scale=max(abs(L * L / (4.0 * A_ball)), abs(A_K), 1e-300),
    )
