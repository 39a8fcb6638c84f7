"""Adversarial instance builders.

Two families: the chain family on n = k(s+k) vertices (m = s+k clusters of
size k) and the square family on n = k^2 vertices (m = k clusters). Each
cluster induces a maximal planar graph with designated outer triangle
(locals 0,1,2); consecutive clusters are joined by a 2-matching between
outer-triangle vertices and the ring is closed by one more edge; extra
outer-triangle edges are added deterministically if the 3-connectivity
check ever fails. The bad drawing interleaves the clusters around a convex
point set so the boundary label sequence is exactly the block sequence on
(m, k).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Sequence

from .errors import ValidationError
from .geometry import Point, is_strictly_convex_ccw
from .graph import (
    Drawing,
    PlanarGraph,
    count_crossings,
    induced_subgraph,
    is_planar,
    is_three_connected,
    norm_edge,
    planar_rotation,
    trace_faces,
)

FAMILY_CHAIN = "theorem1"
FAMILY_SQUARE = "appendixA"

_FAMILY_ALIASES = {
    "theorem1": FAMILY_CHAIN,
    "chain": FAMILY_CHAIN,
    "appendixA": FAMILY_SQUARE,
    "appendixa": FAMILY_SQUARE,
    "square": FAMILY_SQUARE,
}


def canonical_family(name: str) -> str:
    try:
        return _FAMILY_ALIASES[name]
    except KeyError:
        raise ValidationError(f"unknown family {name!r}") from None


# ---------------------------------------------------------------------------
# Cluster triangulations
# ---------------------------------------------------------------------------


def build_cluster_triangulation(k: int, style: str = "stacked") -> PlanarGraph:
    """Maximal planar graph on k vertices whose triangle (0,1,2) is a face.

    `stacked` nests vertices over the edge (0,1); `strip` builds an
    antiprism tower, keeping every degree at most 6.
    """
    if k < 3:
        raise ValidationError("cluster triangulations need k >= 3")
    if style == "stacked":
        edges = [(0, 1), (1, 2), (0, 2)]
        for i in range(3, k):
            edges += [(0, i), (1, i), (i - 1, i)]
        return PlanarGraph.from_edges(k, edges)
    if style == "strip":
        layers = k // 3
        rem = k % 3
        edges = []
        for j in range(layers):
            a = 3 * j
            edges += [(a, a + 1), (a + 1, a + 2), (a, a + 2)]
            if j + 1 < layers:
                b = 3 * (j + 1)
                for i in range(3):
                    edges.append((a + i, b + i))
                    edges.append((a + i, b + (i + 1) % 3))
        t = 3 * (layers - 1)  # top face
        if rem >= 1:
            v = 3 * layers
            edges += [(t, v), (t + 1, v), (t + 2, v)]
        if rem == 2:
            w = 3 * layers + 1
            edges += [(3 * layers, w), (t, w), (t + 1, w)]
        return PlanarGraph.from_edges(k, edges)
    raise ValidationError(f"unknown cluster style {style!r}")


# ---------------------------------------------------------------------------
# Convex position point sets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConvexPointSet:
    """Rational points in strictly convex position, in ccw boundary order."""

    points: tuple[Point, ...]

    def __post_init__(self):
        if not is_strictly_convex_ccw(self.points):
            raise ValidationError(
                "points are not in strictly convex position in ccw boundary order"
            )

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    @staticmethod
    def from_points(points: Sequence[Point]) -> "ConvexPointSet":
        return ConvexPointSet(tuple(points))


def convex_positions(n: int) -> ConvexPointSet:
    """Default strictly convex set: integer points on the parabola y = x^2."""
    if n < 3:
        raise ValidationError("convex position needs at least 3 points")
    return ConvexPointSet(tuple(Point(i, i * i) for i in range(n)))


# ---------------------------------------------------------------------------
# Clustered instances
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClusteredInstance:
    """Adversarial graph + cluster partition (+ optional bad drawing).

    clusters[i] lists the k global vertex ids of cluster i; cluster i
    occupies ids [i*k, (i+1)*k) with its designated outer triangle on the
    first three.
    """

    graph: PlanarGraph
    clusters: tuple[tuple[int, ...], ...]
    k: int
    m: int
    family: str
    s: Optional[int] = None
    style: str = "stacked"
    points: Optional[ConvexPointSet] = None
    bad_drawing: Optional[Drawing] = None

    @property
    def n(self) -> int:
        return self.graph.vertex_count

    @property
    def family_tag(self) -> str:
        if self.family == FAMILY_CHAIN:
            return f"theorem1(k={self.k},s={self.s})"
        return f"appendixA(k={self.k})"

    def cluster_of(self, v: int) -> int:
        return v // self.k

    def with_bad_drawing(self, points: Optional[ConvexPointSet] = None) -> "ClusteredInstance":
        pts = points if points is not None else convex_positions(self.n)
        drawing = assign_bad_drawing(self, pts)
        return replace(self, points=pts, bad_drawing=drawing)


def _connect_clusters(k: int, m: int, style: str) -> tuple[PlanarGraph, tuple[tuple[int, ...], ...]]:
    cluster_graph = build_cluster_triangulation(k, style)
    n = k * m
    edges: list[tuple[int, int]] = []
    clusters = []
    for i in range(m):
        base = i * k
        clusters.append(tuple(range(base, base + k)))
        for u, v in cluster_graph.edges:
            edges.append((base + u, base + v))
    for i in range(m - 1):
        a = i * k
        b = (i + 1) * k
        edges.append((a + 0, b + 1))
        edges.append((a + 1, b + 2))
    edges.append(((m - 1) * k + 0, 2))  # close the ring with a single edge

    g = PlanarGraph.from_edges(n, edges)
    if not is_planar(g):
        raise ValidationError("internal error: base connection scheme is not planar")

    if not is_three_connected(g):
        # escalation: extra outer-triangle edges in deterministic order,
        # keeping planarity after each addition
        candidates = [((m - 1) * k + 1, 0), ((m - 1) * k + 2, 1)]
        for i in range(m - 1):
            candidates.append((i * k + 2, (i + 1) * k + 0))
        for u, v in candidates:
            e = norm_edge(u, v)
            if e in g.edges:
                continue
            g2 = PlanarGraph.from_edges(n, list(g.edges) + [e])
            if is_planar(g2):
                g = g2
            if is_three_connected(g):
                break
        else:
            raise ValidationError(
                "could not make the clustered graph 3-connected; "
                "escalation candidates exhausted"
            )
    return g, tuple(clusters)


def build_chain_graph(k: int, s: int, style: str = "stacked") -> ClusteredInstance:
    """Chain-family instance: m = s+k clusters of size k, n = k(s+k)."""
    if k < 3:
        raise ValidationError("chain family needs k >= 3")
    if s < 1:
        raise ValidationError("chain family needs s >= 1")
    m = s + k
    g, clusters = _connect_clusters(k, m, style)
    return ClusteredInstance(g, clusters, k=k, m=m, family=FAMILY_CHAIN, s=s, style=style)


def build_square_graph(k: int, style: str = "stacked") -> ClusteredInstance:
    """Square-family instance: m = k clusters of size k, n = k^2."""
    if k < 3:
        raise ValidationError("square family needs k >= 3")
    g, clusters = _connect_clusters(k, k, style)
    return ClusteredInstance(g, clusters, k=k, m=k, family=FAMILY_SQUARE, s=None, style=style)


def standard_instance(family: str, k: int, s: Optional[int] = None,
                      style: str = "stacked",
                      points: Optional[ConvexPointSet] = None) -> ClusteredInstance:
    """Builder + interleaved bad drawing in one step.

    The returned bad drawing is checked to be genuinely tangled.
    """
    fam = canonical_family(family)
    if fam == FAMILY_CHAIN:
        if s is None:
            raise ValidationError("chain family needs the block parameter s")
        inst = build_chain_graph(k, s, style)
    else:
        if s is not None:
            raise ValidationError("square family takes no s parameter")
        inst = build_square_graph(k, style)
    inst = inst.with_bad_drawing(points)
    if count_crossings(inst.graph, inst.bad_drawing) == 0:
        raise ValidationError("internal error: bad drawing is not tangled")
    return inst


def assign_bad_drawing(inst: ClusteredInstance, pts: ConvexPointSet) -> Drawing:
    """Interleave clusters around the convex boundary: the j-th member of
    cluster i goes to boundary point i + j*m. The induced label sequence is
    the block sequence on (m, k)."""
    n = inst.n
    if len(pts) != n:
        raise ValidationError(f"need {n} boundary points, got {len(pts)}")
    positions: dict[int, Point] = {}
    for i in range(inst.m):
        for j in range(inst.k):
            positions[i * inst.k + j] = pts[i + j * inst.m]
    return Drawing.from_map(n, positions)


# ---------------------------------------------------------------------------
# Reference embedding
# ---------------------------------------------------------------------------


def _induced_rotation(inst: ClusteredInstance, rotation, cluster_index: int):
    """Cluster's rotation system inherited from the full embedding (local ids)."""
    base = cluster_index * inst.k
    members = set(inst.clusters[cluster_index])
    local = []
    for v in inst.clusters[cluster_index]:
        order = [u - base for u in rotation[v] if u in members]
        local.append(tuple(order))
    return tuple(local)


def _face_of_directed_edge(faces: list[tuple[int, ...]]) -> dict[tuple[int, int], int]:
    owner: dict[tuple[int, int], int] = {}
    for fid, face in enumerate(faces):
        L = len(face)
        for idx in range(L):
            owner[(face[idx], face[(idx + 1) % L])] = fid
    return owner


def reference_embedding(inst: ClusteredInstance) -> PlanarGraph:
    """Rotation system of the defining embedding, with its structure verified.

    Checks: face tracing satisfies Euler's formula; every cluster's induced
    embedding has only triangular faces; and all inter-cluster edges attach
    inside one common face of each cluster, namely its designated outer
    triangle. The last condition is what places the clusters in the outer
    faces of each other.
    """
    embedded = planar_rotation(inst.graph)
    rotation = embedded.rotation
    assert rotation is not None
    faces = trace_faces(embedded)
    if inst.n - embedded.edge_count + len(faces) != 2:
        raise ValidationError("embedding fails the Euler face count")

    for ci in range(inst.m):
        base = ci * inst.k
        members = set(inst.clusters[ci])
        local_rot = _induced_rotation(inst, rotation, ci)
        sub, _ = induced_subgraph(inst.graph, inst.clusters[ci])
        sub = sub.with_rotation(local_rot)
        sub_faces = trace_faces(sub)
        if sub.vertex_count - sub.edge_count + len(sub_faces) != 2:
            raise ValidationError(f"cluster {ci} induced embedding fails Euler")
        non_triangles = [f for f in sub_faces if len(f) != 3]
        if non_triangles:
            raise ValidationError(f"cluster {ci} induced embedding has a non-triangle face")

        # map every external attachment corner to the induced face it lies in
        owner = _face_of_directed_edge(sub_faces)
        corner_faces = set()
        for v in inst.clusters[ci]:
            order = rotation[v]
            deg = len(order)
            for idx, u in enumerate(order):
                if u in members:
                    continue
                # first in-cluster neighbor after the external run
                for step in range(1, deg + 1):
                    w = order[(idx + step) % deg]
                    if w in members:
                        corner_faces.add(owner[(v - base, w - base)])
                        break
        if len(corner_faces) != 1:
            raise ValidationError(
                f"cluster {ci} attachments span {len(corner_faces)} faces; expected one"
            )
        attach_face = sub_faces[corner_faces.pop()]
        if set(attach_face) != {0, 1, 2}:
            raise ValidationError(
                f"cluster {ci} attaches on face {attach_face}, not its outer triangle"
            )
    return embedded
