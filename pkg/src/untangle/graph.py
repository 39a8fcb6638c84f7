"""Planar graphs and exact straight-line drawings.

Every geometric decision is made on exact rationals; crossing counts are
computed on cleared-denominator integer coordinates by the kernel layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

import networkx as nx

from . import kernels
from .errors import ValidationError
from .geometry import Point, scale_to_integers

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class PlanarGraph:
    """Simple undirected graph with optional rotation system.

    `rotation[v]` lists the neighbors of v in cyclic order; when present it
    must mention exactly the incident edges of every vertex.
    """

    vertex_count: int
    edges: frozenset[Edge]
    rotation: Optional[tuple[tuple[int, ...], ...]] = None

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValidationError("vertex_count must be positive")
        for u, v in self.edges:
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValidationError(f"edge ({u},{v}) out of range")
            if u > v:
                raise ValidationError("edges must be stored as (min, max) pairs")
        if self.rotation is not None:
            if len(self.rotation) != self.vertex_count:
                raise ValidationError("rotation must cover every vertex")
            adj = self.adjacency()
            for v, order in enumerate(self.rotation):
                if set(order) != adj[v] or len(order) != len(adj[v]):
                    raise ValidationError(f"rotation at {v} does not list its incident edges")

    @staticmethod
    def from_edges(n: int, edges: Iterable[Sequence[int]],
                   rotation: Optional[Sequence[Sequence[int]]] = None) -> "PlanarGraph":
        es = frozenset(norm_edge(int(u), int(v)) for u, v in edges)
        rot = tuple(tuple(order) for order in rotation) if rotation is not None else None
        return PlanarGraph(n, es, rot)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)

    def with_rotation(self, rotation: Sequence[Sequence[int]]) -> "PlanarGraph":
        return PlanarGraph.from_edges(self.vertex_count, self.edges, rotation)

    def to_networkx(self) -> "nx.Graph":
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.edges)
        return g


def induced_subgraph(g: PlanarGraph, vertices: Sequence[int]) -> tuple[PlanarGraph, dict[int, int]]:
    """Subgraph induced on `vertices`, relabeled 0..len-1; returns (graph, old->new map)."""
    vs = list(vertices)
    index = {v: i for i, v in enumerate(vs)}
    if len(index) != len(vs):
        raise ValidationError("duplicate vertices in induced_subgraph")
    edges = [
        (index[u], index[v])
        for u, v in g.edges
        if u in index and v in index
    ]
    return PlanarGraph.from_edges(len(vs), edges), index


@dataclass(frozen=True)
class Drawing:
    """Injective assignment of every vertex id 0..n-1 to an exact point."""

    points: tuple[Point, ...]

    def __post_init__(self):
        seen = {(p.x, p.y) for p in self.points}
        if len(seen) != len(self.points):
            raise ValidationError("drawing is not injective")

    @staticmethod
    def from_map(n: int, positions: Mapping[int, Point]) -> "Drawing":
        if set(positions) != set(range(n)):
            raise ValidationError("drawing must be total on vertex ids 0..n-1")
        return Drawing(tuple(positions[v] for v in range(n)))

    @property
    def n(self) -> int:
        return len(self.points)

    def __getitem__(self, v: int) -> Point:
        return self.points[v]

    def __iter__(self):
        return iter(self.points)

    def moved(self, v: int, p: Point) -> "Drawing":
        pts = list(self.points)
        pts[v] = p
        return Drawing(tuple(pts))

    def occupied(self, p: Point) -> Optional[int]:
        for v, q in enumerate(self.points):
            if q == p:
                return v
        return None

    def translate(self, dx, dy) -> "Drawing":
        return Drawing(tuple(p.translated(dx, dy) for p in self.points))


def _check_total(g: PlanarGraph, d: Drawing):
    if d.n != g.vertex_count:
        raise ValidationError(
            f"drawing covers {d.n} vertices, graph has {g.vertex_count}"
        )


def is_planar(g: PlanarGraph) -> bool:
    ok, _ = nx.check_planarity(g.to_networkx(), counterexample=False)
    return ok


def is_three_connected(g: PlanarGraph) -> bool:
    """No single vertex or vertex pair disconnects g (checked exhaustively)."""
    n = g.vertex_count
    if n < 4:
        raise ValidationError("3-connectivity is undefined for fewer than 4 vertices")
    adj = g.adjacency()

    def connected_without(removed: set[int]) -> bool:
        start = next(v for v in range(n) if v not in removed)
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in removed and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == n - len(removed)

    if not connected_without(set()):
        return False
    for a in range(n):
        if not connected_without({a}):
            return False
    for a in range(n):
        for b in range(a + 1, n):
            if not connected_without({a, b}):
                return False
    return True


def is_maximal_planar(g: PlanarGraph) -> bool:
    if g.vertex_count < 3:
        raise ValidationError("maximal planarity is undefined below 3 vertices")
    return g.edge_count == 3 * g.vertex_count - 6 and is_planar(g)


def count_crossings(g: PlanarGraph, d: Drawing, force_backend: str | None = None) -> int:
    """Crossing total per the package-wide semantics (see _pykernels docstring)."""
    _check_total(g, d)
    xs, ys = scale_to_integers(d.points)
    edges = g.edge_list()
    eu = [e[0] for e in edges]
    ev = [e[1] for e in edges]
    return kernels.count_crossings_ints(xs, ys, eu, ev, force=force_backend)


def crossing_report(g: PlanarGraph, d: Drawing) -> tuple[list[tuple[Edge, Edge]], list[tuple[int, Edge]]]:
    """Crossing edge pairs and vertex-on-edge incidences, for display."""
    _check_total(g, d)
    xs, ys = scale_to_integers(d.points)
    edges = g.edge_list()
    eu = [e[0] for e in edges]
    ev = [e[1] for e in edges]
    pairs, incidences = kernels.crossing_report(xs, ys, eu, ev)
    return (
        [(edges[i], edges[j]) for i, j in pairs],
        [(v, edges[j]) for v, j in incidences],
    )


def crossings_involving(g: PlanarGraph, d: Drawing, v: int) -> int:
    """Crossings that change when vertex v moves (edge pairs touching v plus
    incidences involving v or its edges)."""
    _check_total(g, d)
    xs, ys = scale_to_integers(d.points)
    edges = g.edge_list()
    eu = [e[0] for e in edges]
    ev = [e[1] for e in edges]
    return kernels.crossings_involving(xs, ys, eu, ev, v)


def is_plane_drawing(g: PlanarGraph, d: Drawing) -> bool:
    _check_total(g, d)
    return count_crossings(g, d) == 0


# ---------------------------------------------------------------------------
# Combinatorial embeddings
# ---------------------------------------------------------------------------


def planar_rotation(g: PlanarGraph) -> PlanarGraph:
    """g with a rotation system from a planar embedding; raises if non-planar."""
    ok, embedding = nx.check_planarity(g.to_networkx())
    if not ok:
        raise ValidationError("graph is not planar")
    rotation = []
    for v in range(g.vertex_count):
        nbrs = list(embedding.neighbors_cw_order(v)) if embedding.degree(v) else []
        rotation.append(tuple(nbrs))
    return g.with_rotation(rotation)


def trace_faces(g: PlanarGraph) -> list[tuple[int, ...]]:
    """Faces of the rotation system, each as a closed vertex cycle.

    Uses the next-edge rule: after entering v along (u, v), leave along the
    neighbor that follows u in rotation[v]. Every directed edge lies on
    exactly one face.
    """
    if g.rotation is None:
        raise ValidationError("graph carries no rotation system")
    succ = {}
    for v, order in enumerate(g.rotation):
        deg = len(order)
        for i, u in enumerate(order):
            succ[(v, u)] = order[(i + 1) % deg]
    faces: list[tuple[int, ...]] = []
    seen: set[tuple[int, int]] = set()
    for v, order in enumerate(g.rotation):
        for u in order:
            if (u, v) in seen:
                continue
            face = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                face.append(a)
                a, b = b, succ[(b, a)]
            faces.append(tuple(face))
    return faces


def euler_check(g: PlanarGraph) -> bool:
    """V - E + F == 2 for the rotation system's face tracing (connected g)."""
    faces = trace_faces(g)
    return g.vertex_count - g.edge_count + len(faces) == 2


def face_set(g: PlanarGraph) -> set[frozenset[int]]:
    return {frozenset(f) for f in trace_faces(g)}


def apply_affine(d: Drawing, a, b, c, dd, e, f) -> Drawing:
    """x' = a x + b y + c, y' = dd x + e y + f (exact rational input)."""
    A, B, C = Fraction(a), Fraction(b), Fraction(c)
    D, E, F = Fraction(dd), Fraction(e), Fraction(f)
    return Drawing(
        tuple(Point(A * p.x + B * p.y + C, D * p.x + E * p.y + F) for p in d.points)
    )
