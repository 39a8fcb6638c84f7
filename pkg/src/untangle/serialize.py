"""JSON interchange for graphs, drawings, and clustered instances.

Base schema: {"n": int, "edges": [[u,v],...],
              "drawing": {"<vid>": [xn, xd, yn, yd], ...}}
with every coordinate an exact numerator/denominator integer pair.
Instances extend it with "clusters", "family" and "points" (the convex
boundary in order).
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Optional

from .construction import (
    ClusteredInstance,
    ConvexPointSet,
    FAMILY_CHAIN,
    canonical_family,
)
from .errors import ValidationError
from .geometry import Point
from .graph import Drawing, PlanarGraph


def point_to_quad(p: Point) -> list[int]:
    return [p.x.numerator, p.x.denominator, p.y.numerator, p.y.denominator]


def point_from_quad(quad) -> Point:
    try:
        xn, xd, yn, yd = (int(v) for v in quad)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"malformed coordinate quadruple {quad!r}") from exc
    if xd == 0 or yd == 0:
        raise ValidationError("zero denominator in coordinate")
    return Point(Fraction(xn, xd), Fraction(yn, yd))


def drawing_to_dict(d: Drawing) -> dict[str, list[int]]:
    return {str(v): point_to_quad(d[v]) for v in range(d.n)}


def drawing_from_dict(n: int, data: dict) -> Drawing:
    positions = {}
    for key, quad in data.items():
        try:
            v = int(key)
        except ValueError as exc:
            raise ValidationError(f"bad vertex id {key!r}") from exc
        positions[v] = point_from_quad(quad)
    if set(positions) != set(range(n)):
        raise ValidationError("drawing is not total on vertex ids 0..n-1")
    return Drawing.from_map(n, positions)


def graph_to_dict(g: PlanarGraph) -> dict[str, Any]:
    return {"n": g.vertex_count, "edges": [list(e) for e in g.edge_list()]}


def instance_to_dict(inst: ClusteredInstance) -> dict[str, Any]:
    data = graph_to_dict(inst.graph)
    data["clusters"] = [list(c) for c in inst.clusters]
    family: dict[str, Any] = {
        "tag": inst.family,
        "k": inst.k,
        "m": inst.m,
        "style": inst.style,
    }
    if inst.s is not None:
        family["s"] = inst.s
    data["family"] = family
    if inst.points is not None:
        data["points"] = [point_to_quad(p) for p in inst.points.points]
    if inst.bad_drawing is not None:
        data["drawing"] = drawing_to_dict(inst.bad_drawing)
    return data


def _require(data: dict, key: str):
    if key not in data:
        raise ValidationError(f"missing {key!r} in interchange data")
    return data[key]


def graph_from_dict(data: dict) -> PlanarGraph:
    n = int(_require(data, "n"))
    edges = _require(data, "edges")
    try:
        return PlanarGraph.from_edges(n, edges)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"malformed edge list: {exc}") from exc


def instance_from_dict(data: dict) -> ClusteredInstance:
    g = graph_from_dict(data)
    family = _require(data, "family")
    clusters = tuple(tuple(int(v) for v in c) for c in _require(data, "clusters"))
    tag = canonical_family(str(_require(family, "tag")))
    k = int(_require(family, "k"))
    m = int(_require(family, "m"))
    s = int(family["s"]) if "s" in family and family["s"] is not None else None
    if tag == FAMILY_CHAIN and s is None:
        raise ValidationError("chain-family instance without s parameter")
    style = str(family.get("style", "stacked"))
    points = None
    if "points" in data:
        points = ConvexPointSet(tuple(point_from_quad(q) for q in data["points"]))
    drawing = None
    if "drawing" in data:
        drawing = drawing_from_dict(g.vertex_count, data["drawing"])
    return ClusteredInstance(
        graph=g, clusters=clusters, k=k, m=m, family=tag, s=s,
        style=style, points=points, bad_drawing=drawing,
    )


def loaded_from_dict(data: dict) -> tuple[PlanarGraph, Optional[Drawing], Optional[ClusteredInstance]]:
    """Load any interchange file: full instance, or bare graph+drawing."""
    if "family" in data and "clusters" in data:
        inst = instance_from_dict(data)
        return inst.graph, inst.bad_drawing, inst
    g = graph_from_dict(data)
    drawing = drawing_from_dict(g.vertex_count, data["drawing"]) if "drawing" in data else None
    return g, drawing, None


def redraw_to_dict(g: PlanarGraph, d: Drawing) -> dict[str, Any]:
    data = graph_to_dict(g)
    data["drawing"] = drawing_to_dict(d)
    return data


def load_file(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: not valid JSON ({exc})") from exc


def save_file(path: str, data: dict):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=1)
        fh.write("\n")
