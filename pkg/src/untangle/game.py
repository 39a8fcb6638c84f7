"""Planarity-Game engine.

A session is an immutable GameState; applying a move yields a new state
with the crossing count updated incrementally (only the pairs touching the
moved vertex are re-tested). Drawings stay injective at all times: moves
onto occupied points, including a vertex's own position, are rejected.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from typing import Optional

from .bounds import BoundCertificate, certified_fixed_upper_bound
from .construction import ClusteredInstance, standard_instance
from .embed import extract_moves, untangle_fixing_face
from .errors import OccupiedPointError, ValidationError
from .geometry import Point, orientation
from .graph import (
    Drawing,
    PlanarGraph,
    count_crossings,
    crossings_involving,
    is_maximal_planar,
)

STATUS_SOLVED = "solved"
STATUS_IN_PROGRESS = "in_progress"


@dataclass(frozen=True)
class GameState:
    graph: PlanarGraph
    start: Drawing
    current: Drawing
    history: tuple[tuple[int, Point], ...]
    crossings: int
    bound: Optional[BoundCertificate] = None
    instance: Optional[ClusteredInstance] = None
    source: Optional[dict] = None

    @property
    def status(self) -> str:
        return STATUS_SOLVED if self.crossings == 0 else STATUS_IN_PROGRESS

    @property
    def moves_used(self) -> int:
        return len(self.history)


def new_game_from_drawing(g: PlanarGraph, drawing: Drawing,
                          bound: Optional[BoundCertificate] = None,
                          instance: Optional[ClusteredInstance] = None,
                          source: Optional[dict] = None) -> GameState:
    if drawing.n != g.vertex_count:
        raise ValidationError("drawing does not cover the graph")
    return GameState(
        graph=g,
        start=drawing,
        current=drawing,
        history=(),
        crossings=count_crossings(g, drawing),
        bound=bound,
        instance=instance,
        source=source,
    )


def new_game_from_instance(inst: ClusteredInstance,
                           source: Optional[dict] = None) -> GameState:
    if inst.bad_drawing is None:
        raise ValidationError("instance carries no bad drawing")
    return new_game_from_drawing(
        inst.graph,
        inst.bad_drawing,
        bound=certified_fixed_upper_bound(inst),
        instance=inst,
        source=source,
    )


def new_game_generated(family: str, k: int, s: Optional[int] = None,
                       style: str = "stacked") -> GameState:
    inst = standard_instance(family, k, s, style)
    source = {"type": "generated", "family": inst.family, "k": k, "style": style}
    if s is not None:
        source["s"] = s
    return new_game_from_instance(inst, source=source)


def apply_move(state: GameState, v: int, p: Point) -> GameState:
    if not (0 <= v < state.graph.vertex_count):
        raise ValidationError(f"unknown vertex {v}")
    holder = state.current.occupied(p)
    if holder is not None:
        raise OccupiedPointError(
            f"point ({p.x}, {p.y}) is occupied by vertex {holder}"
        )
    before = crossings_involving(state.graph, state.current, v)
    moved = state.current.moved(v, p)
    after = crossings_involving(state.graph, moved, v)
    return replace(
        state,
        current=moved,
        history=state.history + ((v, p),),
        crossings=state.crossings - before + after,
    )


def undo_move(state: GameState) -> GameState:
    """Pop the last move and recompute; exact inverse of apply_move."""
    if not state.history:
        raise ValidationError("nothing to undo")
    history = state.history[:-1]
    d = state.start
    for v, p in history:
        d = d.moved(v, p)
    return replace(
        state,
        current=d,
        history=history,
        crossings=count_crossings(state.graph, d),
    )


def replay(state: GameState) -> Drawing:
    d = state.start
    for v, p in state.history:
        d = d.moved(v, p)
    return d


@dataclass(frozen=True)
class Hint:
    vertex: int
    point: Point
    remaining: int  # solver moves from the current position, this one included


def hint(state: GameState) -> Optional[Hint]:
    """Next move of the face-fixing solver's plan; None when already solved."""
    if state.status == STATUS_SOLVED:
        return None
    result = untangle_fixing_face(state.graph, state.current)
    plan = extract_moves(state.current, result.drawing)
    v, p = plan.moves[0]
    return Hint(v, p, len(plan))


@dataclass(frozen=True)
class ScoreReport:
    moves_used: int
    solved: bool
    certified_moved_lower: Optional[int]

    @property
    def meets_certificate(self) -> Optional[bool]:
        if not self.solved or self.certified_moved_lower is None:
            return None
        return self.moves_used >= self.certified_moved_lower


def score(state: GameState) -> ScoreReport:
    lower = state.bound.certified_moved_lower if state.bound else None
    return ScoreReport(state.moves_used, state.status == STATUS_SOLVED, lower)


# ---------------------------------------------------------------------------
# Random playable content (non-certified)
# ---------------------------------------------------------------------------


def random_maximal_planar(n: int, rng: random.Random) -> tuple[PlanarGraph, Drawing]:
    """Random maximal planar graph with a plane drawing: a triangulated
    random integer point set inside a big triangle."""
    from scipy.spatial import Delaunay

    if n < 4:
        raise ValidationError("random maximal planar graphs need n >= 4")
    span = 10 * n
    while True:
        pts = [
            Point(-span, -span),
            Point(4 * span, -span),
            Point(-span, 4 * span),
        ]
        while len(pts) < n:
            cand = Point(rng.randrange(0, span + 1), rng.randrange(0, span + 1))
            if any(cand == q for q in pts):
                continue
            if any(
                orientation(pts[i], pts[j], cand) == 0
                for i in range(len(pts))
                for j in range(i + 1, len(pts))
            ):
                continue
            pts.append(cand)
        tri = Delaunay([(float(p.x), float(p.y)) for p in pts])
        edges = set()
        for simplex in tri.simplices:
            a, b, c = map(int, simplex)
            edges.update({tuple(sorted((a, b))), tuple(sorted((b, c))), tuple(sorted((a, c)))})
        if len(edges) != 3 * n - 6:
            continue  # degenerate triangulation; resample
        g = PlanarGraph.from_edges(n, edges)
        drawing = Drawing(tuple(pts))
        if count_crossings(g, drawing) == 0 and is_maximal_planar(g):
            return g, drawing


def scrambled_random(n: int, seed: int) -> GameState:
    """Deterministic per seed: random triangulation, positions shuffled."""
    rng = random.Random(seed)
    g, plane = random_maximal_planar(n, rng)
    points = list(plane.points)
    for _ in range(50):
        rng.shuffle(points)
        drawing = Drawing(tuple(points))
        if count_crossings(g, drawing) > 0:
            break
    return new_game_from_drawing(
        g, drawing, source={"type": "random", "n": n, "seed": seed}
    )
