"""JSON documents for balls, curves, and polygons.

Ball document::

    {"auto_symmetrize": false,
     "pieces": [{"kind": "arc", "x": "cos(pi/2*t)", "y": "sin(pi/2*t)",
                 "t0": 0, "t1": 1},
                {"kind": "segment", "p0": [1, 0], "p1": [0, 1],
                 "t0": 1, "t1": 2}]}

or simply a builtin name: {"builtin": "euclidean"} (with optional params).

Curve document::

    {"ball": <ball document or builtin name>,
     "basepoint": [x, y],
     "radius": [{"piece": 0, "expr": "1"}, ...]}       # one per piece
    or
    {"ball": ..., "explicit": [{"x": "...", "y": "..."}, ...]}

Polygon document::

    {"vertices": [[x, y], ...]}      # counterclockwise, strictly convex
"""

from __future__ import annotations

import json

import numpy as np

from .ball import Piece, build_ball, builtin_ball
from .curve import curve_from_explicit, curve_from_radius
from .errors import ValidationError
from .inequalities import Polygon


def _load(doc_or_path):
    if isinstance(doc_or_path, (str, bytes)) or hasattr(doc_or_path,
                                                        "__fspath__"):
        with open(doc_or_path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    return doc_or_path


def ball_from_doc(doc):
    if isinstance(doc, str):
        return builtin_ball(doc)
    if "builtin" in doc:
        params = {k: v for k, v in doc.items() if k != "builtin"}
        return builtin_ball(doc["builtin"], **params)
    pieces = []
    for pd in doc["pieces"]:
        kind = pd.get("kind")
        if kind == "arc":
            pieces.append(Piece.arc(pd["x"], pd["y"], pd["t0"], pd["t1"]))
        elif kind == "segment":
            pieces.append(Piece.segment(pd["p0"], pd["p1"],
                                        pd["t0"], pd["t1"]))
        else:
            raise ValidationError(f"unknown piece kind {kind!r}")
    return build_ball(pieces, auto_symmetrize=doc.get("auto_symmetrize",
                                                      False))


def load_ball(doc_or_path):
    return ball_from_doc(_load(doc_or_path))


def curve_from_doc(doc):
    ball = ball_from_doc(doc["ball"])
    if "explicit" in doc:
        pieces = [(pd["x"], pd["y"]) for pd in doc["explicit"]]
        return curve_from_explicit(ball, pieces)
    entries = doc["radius"]
    radii = [None] * len(ball.pieces)
    for k, entry in enumerate(entries):
        if isinstance(entry, dict):
            radii[int(entry.get("piece", k))] = entry["expr"]
        else:
            radii[k] = entry
    if any(r is None for r in radii):
        raise ValidationError("radius must cover every ball piece")
    basepoint = doc.get("basepoint", (0.0, 0.0))
    return curve_from_radius(ball, radii, basepoint=basepoint)


def load_curve(doc_or_path):
    return curve_from_doc(_load(doc_or_path))


def polygon_from_doc(doc):
    return Polygon(np.asarray(doc["vertices"], dtype=float))


def load_polygon(doc_or_path):
    return polygon_from_doc(_load(doc_or_path))


def _round12(x):
    # 12 significant digits for stable, diffable reports
    return float(f"{x:.12g}")


def clean(obj):
    """Round floats recursively so serialized reports are deterministic."""
    if isinstance(obj, float):
        return _round12(obj)
    if isinstance(obj, (np.floating,)):
        return _round12(float(obj))
    if isinstance(obj, np.ndarray):
        return clean(obj.tolist())
    if isinstance(obj, dict):
        return {k: clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [clean(v) for v in obj]
    if isinstance(obj, (np.integer,)):
        return int(obj)
    return obj


def dump_report(obj, fh=None, **kwargs):
    text = json.dumps(clean(obj), indent=2, sort_keys=True, **kwargs)
    if fh is not None:
        fh.write(text + "\n")
    return text
