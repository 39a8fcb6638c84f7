"""Constructive untangling: barycentric (Tutte) embeddings and move plans.

The averaging system is solved exactly: fraction-free Bareiss elimination
over Python ints, with a back-substitution in rationals. An optional float
solve (numpy) is accepted only when the rationalized result passes the
exact plane check; otherwise the exact path runs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .bounds import FixReport, count_fixed
from .errors import ValidationError
from .geometry import Point, is_strictly_convex_polygon, orientation
from .graph import (
    Drawing,
    PlanarGraph,
    is_plane_drawing,
    is_planar,
    is_three_connected,
    planar_rotation,
    trace_faces,
)


# ---------------------------------------------------------------------------
# Exact linear algebra
# ---------------------------------------------------------------------------


def solve_integer_system(matrix: list[list[int]], rhs: list[list[int]]) -> list[list[Fraction]]:
    """Solve A x = b for every rhs column; A integer and nonsingular.

    Bareiss fraction-free forward elimination (all divisions exact), then a
    rational back-substitution. Raises ValidationError on singular input.
    """
    r = len(matrix)
    cols = len(rhs[0]) if r else 0
    m = [list(matrix[i]) + list(rhs[i]) for i in range(r)]
    width = r + cols
    prev = 1
    for p in range(r):
        pivot_row = next((q for q in range(p, r) if m[q][p] != 0), None)
        if pivot_row is None:
            raise ValidationError("singular averaging system")
        if pivot_row != p:
            m[p], m[pivot_row] = m[pivot_row], m[p]
        for i in range(p + 1, r):
            for j in range(p + 1, width):
                m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) // prev
            m[i][p] = 0
        prev = m[p][p]
    out = [[Fraction(0)] * cols for _ in range(r)]
    for c in range(cols):
        for i in reversed(range(r)):
            acc = Fraction(m[i][r + c])
            for j in range(i + 1, r):
                acc -= m[i][j] * out[j][c]
            out[i][c] = acc / m[i][i]
    return out


# ---------------------------------------------------------------------------
# Tutte embedding
# ---------------------------------------------------------------------------


def _cycle_canonical(cycle: Sequence[int]) -> tuple[int, ...]:
    """Canonical form of a cyclic sequence up to rotation and reflection."""
    cyc = tuple(cycle)
    n = len(cyc)
    variants = []
    for seq in (cyc, tuple(reversed(cyc))):
        doubled = seq + seq
        variants.extend(doubled[i:i + n] for i in range(n))
    return min(variants)


def _is_face(g: PlanarGraph, cycle: Sequence[int]) -> bool:
    embedded = planar_rotation(g)
    target = _cycle_canonical(cycle)
    return any(_cycle_canonical(f) == target for f in trace_faces(embedded))


def barycentric_embed(g: PlanarGraph, outer_face: Sequence[int],
                      outer_positions: Sequence[Point],
                      solver: str = "exact",
                      check: bool = True,
                      _skip_face_check: bool = False) -> Drawing:
    """Plane drawing with the outer face pinned and every interior vertex at
    the centroid of its neighbors.

    outer_face must be a face of (the unique) embedding of the planar
    3-connected graph g; outer_positions must be strictly convex in the
    matching cyclic order. solver: "exact", "float", or "auto".
    """
    n = g.vertex_count
    boundary = list(outer_face)
    if len(boundary) != len(outer_positions):
        raise ValidationError("outer face and outer positions differ in length")
    if len(set(boundary)) != len(boundary):
        raise ValidationError("outer face repeats a vertex")
    if any(not (0 <= v < n) for v in boundary):
        raise ValidationError("outer face vertex out of range")
    if len(boundary) >= 3 and not is_strictly_convex_polygon(outer_positions):
        raise ValidationError("outer positions are not strictly convex in cyclic order")
    if n < 4:
        raise ValidationError("barycentric embedding needs at least 4 vertices")
    if not is_planar(g):
        raise ValidationError("graph is not planar")
    if not is_three_connected(g):
        raise ValidationError("graph is not 3-connected")
    if not _skip_face_check and not _is_face(g, boundary):
        raise ValidationError("outer_face is not a face of the embedding")

    pos: dict[int, Point] = {v: p for v, p in zip(boundary, outer_positions)}
    interior = [v for v in range(n) if v not in pos]
    if not interior:
        return Drawing.from_map(n, pos)
    index = {v: i for i, v in enumerate(interior)}
    adj = g.adjacency()

    if solver not in ("exact", "float", "auto"):
        raise ValidationError(f"unknown solver {solver!r}")
    attempt_float = solver == "float" or (solver == "auto" and len(interior) > 60)
    if attempt_float:
        drawing = _float_solve(g, adj, pos, interior, index)
        if drawing is not None and is_plane_drawing(g, drawing):
            return drawing
        # fall through to the exact path

    rows = len(interior)
    matrix = [[0] * rows for _ in range(rows)]
    rhs_frac: list[list[Fraction]] = [[Fraction(0), Fraction(0)] for _ in range(rows)]
    for v in interior:
        i = index[v]
        matrix[i][i] = len(adj[v])
        for u in adj[v]:
            if u in index:
                matrix[i][index[u]] -= 1
            else:
                rhs_frac[i][0] += pos[u].x
                rhs_frac[i][1] += pos[u].y
    denom = 1
    for row in rhs_frac:
        for val in row:
            denom = denom * val.denominator // gcd(denom, val.denominator)
    rhs = [[int(val * denom) for val in row] for row in rhs_frac]
    solution = solve_integer_system(matrix, rhs)
    for v in interior:
        i = index[v]
        pos[v] = Point(solution[i][0] / denom, solution[i][1] / denom)
    drawing = Drawing.from_map(n, pos)
    if check and not is_plane_drawing(g, drawing):
        raise ValidationError("barycentric embedding failed the plane check")
    return drawing


def _float_solve(g, adj, pos, interior, index) -> Optional[Drawing]:
    import numpy as np

    rows = len(interior)
    a = np.zeros((rows, rows))
    b = np.zeros((rows, 2))
    for v in interior:
        i = index[v]
        a[i, i] = len(adj[v])
        for u in adj[v]:
            if u in index:
                a[i, index[u]] -= 1.0
            else:
                b[i, 0] += float(pos[u].x)
                b[i, 1] += float(pos[u].y)
    try:
        sol = np.linalg.solve(a, b)
    except np.linalg.LinAlgError:
        return None
    out = dict(pos)
    for v in interior:
        i = index[v]
        out[v] = Point(
            Fraction(float(sol[i, 0])).limit_denominator(10 ** 12),
            Fraction(float(sol[i, 1])).limit_denominator(10 ** 12),
        )
    try:
        return Drawing.from_map(g.vertex_count, out)
    except ValidationError:
        return None


# ---------------------------------------------------------------------------
# Untangling by fixing a face
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class UntangleResult:
    drawing: Drawing
    fix_report: FixReport
    face: tuple[int, ...]
    face_fixed: bool  # False = degenerate fallback, only 2 vertices kept


def _fresh_point(taken: set[tuple], start_x: int) -> Point:
    x = start_x
    while (Fraction(x), Fraction(0)) in taken:
        x += 1
    return Point(x, 0)


def _point_off_line(a: Point, b: Point, taken: set[tuple], start_x: int) -> Point:
    """Unoccupied point not collinear with a, b.

    A non-horizontal line meets each row y=const in one point, and the two
    rows tried cannot both coincide with a horizontal line, so the scan
    terminates quickly.
    """
    for y in (Fraction(1), Fraction(2)):
        x = Fraction(start_x)
        for _ in range(len(taken) + 2):
            cand = Point(x, y)
            if (x, y) not in taken and orientation(a, b, cand) != 0:
                return cand
            x += 1
    raise AssertionError("unreachable: two rows cannot both lie on one line")


def untangle_fixing_face(g: PlanarGraph, bad: Drawing,
                         solver: str = "exact") -> UntangleResult:
    """Crossing-free redrawing that keeps a facial triangle in place.

    Picks the lexicographically smallest facial triangle whose positions in
    `bad` are not collinear, pins it as the outer face, and embeds the rest
    barycentrically; at least 3 vertices stay fixed. When every facial
    triangle is degenerate, 2 vertices are kept and face_fixed is False.
    """
    n = g.vertex_count
    if bad.n != n:
        raise ValidationError("drawing does not cover the graph")
    if n == 3:
        if orientation(bad[0], bad[1], bad[2]) != 0:
            return UntangleResult(bad, count_fixed(bad, bad), (0, 1, 2), True)
        taken = {(p.x, p.y) for p in bad.points}
        p2 = _point_off_line(bad[0], bad[1], taken, int(max(p.x for p in bad.points)) + 1)
        out = bad.moved(2, p2)
        return UntangleResult(out, count_fixed(bad, out), (0, 1), False)

    embedded = planar_rotation(g)
    faces = trace_faces(embedded)
    triangles = sorted(
        (f for f in faces if len(f) == 3), key=lambda f: tuple(sorted(f))
    )
    for face in triangles:
        a, b, c = face
        if orientation(bad[a], bad[b], bad[c]) != 0:
            drawing = barycentric_embed(
                g, face, [bad[a], bad[b], bad[c]], solver=solver,
                _skip_face_check=True,
            )
            return UntangleResult(drawing, count_fixed(bad, drawing), face, True)

    # no usable triangle: keep 2 vertices of some face and synthesize the rest
    face = min(faces, key=lambda f: (len(f), tuple(sorted(f))))
    return _fallback_two_fixed(g, bad, face, solver)


def _fallback_two_fixed(g, bad, face, solver) -> UntangleResult:
    a, b = face[0], face[1]
    pa, pb = bad[a], bad[b]
    length = len(face)
    if length == 3:
        taken = {(p.x, p.y) for p in bad.points}
        q = _point_off_line(pa, pb, taken, int(max(p.x for p in bad.points)) + 1)
        positions = [pa, pb, q]
    else:
        # affine image of a convex template with the first edge pinned
        template = [Point(i, i * i) for i in range(length)]
        ex, ey = pb.x - pa.x, pb.y - pa.y
        # maps (0,0)->pa, (1,1)->pb, with a perpendicular shear for area
        positions = [
            Point(
                pa.x + t.x * ex - (t.y - t.x) * ey,
                pa.y + t.x * ey + (t.y - t.x) * ex,
            )
            for t in template
        ]
    drawing = barycentric_embed(g, face, positions, solver=solver, _skip_face_check=True)
    return UntangleResult(drawing, count_fixed(bad, drawing), (a, b), False)


# ---------------------------------------------------------------------------
# Move plans
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MoveSequence:
    """Ordered vertex moves; no move may land on a currently occupied point."""

    moves: tuple[tuple[int, Point], ...]

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self):
        return iter(self.moves)

    def apply_to(self, start: Drawing) -> Drawing:
        d = start
        for v, p in self.moves:
            if d.occupied(p) is not None:
                raise ValidationError("move lands on an occupied point")
            d = d.moved(v, p)
        return d


def extract_moves(start: Drawing, target: Drawing) -> MoveSequence:
    """Schedule per-vertex moves from start to target, staging around
    occupied destinations; at most one detour per blocking cycle."""
    if start.n != target.n:
        raise ValidationError("drawings cover different vertex sets")
    n = start.n
    current = {v: start[v] for v in range(n)}
    occupied = {(p.x, p.y): v for v, p in current.items()}
    remaining = {v for v in range(n) if start[v] != target[v]}
    moves: list[tuple[int, Point]] = []

    def do_move(v: int, p: Point):
        del occupied[(current[v].x, current[v].y)]
        occupied[(p.x, p.y)] = v
        current[v] = p
        moves.append((v, p))

    max_x = max(
        [int(p.x) + 1 for p in start.points] + [int(p.x) + 1 for p in target.points]
    )
    while remaining:
        progressed = False
        for v in sorted(remaining):
            tp = target[v]
            if (tp.x, tp.y) not in occupied:
                do_move(v, tp)
                remaining.discard(v)
                progressed = True
        if remaining and not progressed:
            # every pending target is occupied: break one cycle via staging
            v = min(remaining)
            taken = set(occupied)
            taken.update((target[u].x, target[u].y) for u in remaining)
            staging = _fresh_point(taken, max_x)
            max_x = int(staging.x) + 1
            do_move(v, staging)
    return MoveSequence(tuple(moves))


# ---------------------------------------------------------------------------
# Randomized redrawing attempts (the repository's randomized search)
# ---------------------------------------------------------------------------


def random_redraw_attempt(g: PlanarGraph, base: Drawing, rng: random.Random,
                          plane_pool: Sequence[Drawing] = ()) -> Drawing:
    """One heuristic redrawing attempt; the result may or may not be plane.

    Callers validate the outcome (crossing check, then bound checks). The
    strategies mix subset-keeping randomization with exact-crossing-
    preserving transforms of known plane drawings.
    """
    n = g.vertex_count
    span = 4 * n + 8
    strategies = ["subset", "random"]
    if plane_pool:
        strategies += ["affine", "nudge"]
    kind = rng.choice(strategies)

    if kind in ("subset", "random"):
        keep = set()
        if kind == "subset":
            keep = {v for v in range(n) if rng.random() < rng.random()}
        taken = {(base[v].x, base[v].y) for v in keep}
        positions: dict[int, Point] = {v: base[v] for v in keep}
        for v in range(n):
            if v in keep:
                continue
            while True:
                p = Point(rng.randrange(-span, span), rng.randrange(-span, span))
                if (p.x, p.y) not in taken:
                    taken.add((p.x, p.y))
                    positions[v] = p
                    break
        return Drawing.from_map(n, positions)

    source = plane_pool[rng.randrange(len(plane_pool))]
    if kind == "affine":
        while True:
            a, b, c, d = (Fraction(rng.randrange(-3, 4), rng.randrange(1, 4)) for _ in range(4))
            if a * d - b * c != 0:
                break
        e = Fraction(rng.randrange(-span, span))
        f = Fraction(rng.randrange(-span, span))
        return Drawing(
            tuple(Point(a * p.x + b * p.y + e, c * p.x + d * p.y + f) for p in source.points)
        )
    # nudge: move one random vertex of a plane drawing somewhere random
    v = rng.randrange(n)
    taken = {(p.x, p.y) for p in source.points}
    while True:
        p = Point(rng.randrange(-span, span), rng.randrange(-span, span))
        if (p.x, p.y) not in taken:
            return source.moved(v, p)
