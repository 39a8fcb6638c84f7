"""Pure-Python kernels over integer coordinates and integer labels.

This module is the fallback (and the semantic reference) for the compiled
extension `untangle._speedups`. Coordinates are plain Python ints of any
magnitude; callers clear rational denominators first.

Crossing semantics, shared by both implementations:

* an unordered edge pair counts as one crossing when the closed segments
  intersect at a point that is not an endpoint shared by both edges
  (proper crossings, endpoint touches, and collinear overlaps all count);
* additionally, every (vertex, non-incident edge) pair with the vertex in
  the open interior of the segment counts as one crossing.

A drawing is plane iff the total is zero.
"""

from __future__ import annotations


def _sgn(v: int) -> int:
    return (v > 0) - (v < 0)


def _orient(ax, ay, bx, by, cx, cy) -> int:
    return _sgn((bx - ax) * (cy - ay) - (by - ay) * (cx - ax))


def _on_closed(ax, ay, bx, by, px, py) -> bool:
    # collinearity must be established by the caller
    return (
        min(ax, bx) <= px <= max(ax, bx)
        and min(ay, by) <= py <= max(ay, by)
    )


def _edges_cross(ax, ay, bx, by, cx, cy, dx, dy) -> bool:
    """Closed segments ab, cd with all four endpoints distinct as points."""
    o1 = _orient(ax, ay, bx, by, cx, cy)
    o2 = _orient(ax, ay, bx, by, dx, dy)
    o3 = _orient(cx, cy, dx, dy, ax, ay)
    o4 = _orient(cx, cy, dx, dy, bx, by)
    if o1 != o2 and o3 != o4 and o1 * o2 <= 0 and o3 * o4 <= 0:
        # covers proper crossings and endpoint-on-segment touches
        return True
    if o1 == 0 and _on_closed(ax, ay, bx, by, cx, cy):
        return True
    if o2 == 0 and _on_closed(ax, ay, bx, by, dx, dy):
        return True
    if o3 == 0 and _on_closed(cx, cy, dx, dy, ax, ay):
        return True
    if o4 == 0 and _on_closed(cx, cy, dx, dy, bx, by):
        return True
    return False


def _shared_vertex_overlap(sx, sy, px, py, qx, qy) -> bool:
    """Edges sharing endpoint s, other ends p and q: they intersect beyond s
    iff the segments are collinear and leave s in the same direction."""
    if _orient(sx, sy, px, py, qx, qy) != 0:
        return False
    return (px - sx) * (qx - sx) + (py - sy) * (qy - sy) > 0


def _pair_crosses(xs, ys, a, b, c, d) -> bool:
    if a == c or a == d or b == c or b == d:
        if a == c:
            s, p, q = a, b, d
        elif a == d:
            s, p, q = a, b, c
        elif b == c:
            s, p, q = b, a, d
        else:
            s, p, q = b, a, c
        return _shared_vertex_overlap(xs[s], ys[s], xs[p], ys[p], xs[q], ys[q])
    return _edges_cross(xs[a], ys[a], xs[b], ys[b], xs[c], ys[c], xs[d], ys[d])


def _vertex_on_edge(xs, ys, v, a, b) -> bool:
    # injectivity means the vertex cannot equal an endpoint, so a closed
    # on-segment hit is an interior hit
    return (
        _orient(xs[a], ys[a], xs[b], ys[b], xs[v], ys[v]) == 0
        and _on_closed(xs[a], ys[a], xs[b], ys[b], xs[v], ys[v])
    )


def count_crossings(xs, ys, eu, ev) -> int:
    m = len(eu)
    n = len(xs)
    total = 0
    for i in range(m):
        a, b = eu[i], ev[i]
        for j in range(i + 1, m):
            if _pair_crosses(xs, ys, a, b, eu[j], ev[j]):
                total += 1
    for v in range(n):
        for j in range(m):
            a, b = eu[j], ev[j]
            if v != a and v != b and _vertex_on_edge(xs, ys, v, a, b):
                total += 1
    return total


def crossing_report(xs, ys, eu, ev):
    """Like count_crossings but returns the offending items.

    Returns (edge_pairs, incidences) where edge_pairs is a list of (i, j)
    edge-index pairs and incidences a list of (vertex, edge-index) pairs.
    """
    m = len(eu)
    n = len(xs)
    pairs = []
    incidences = []
    for i in range(m):
        a, b = eu[i], ev[i]
        for j in range(i + 1, m):
            if _pair_crosses(xs, ys, a, b, eu[j], ev[j]):
                pairs.append((i, j))
    for v in range(n):
        for j in range(m):
            a, b = eu[j], ev[j]
            if v != a and v != b and _vertex_on_edge(xs, ys, v, a, b):
                incidences.append((v, j))
    return pairs, incidences


def crossings_involving(xs, ys, eu, ev, v) -> int:
    """Crossings whose removal/recount is affected by moving vertex v.

    Counts edge pairs with at least one edge incident to v, plus
    vertex-on-edge incidences where the vertex is v or the edge is incident
    to v. count_crossings = unchanged part + crossings_involving(v).
    """
    m = len(eu)
    n = len(xs)
    incident = [j for j in range(m) if eu[j] == v or ev[j] == v]
    incident_set = set(incident)
    total = 0
    for i in incident:
        a, b = eu[i], ev[i]
        for j in range(m):
            if j == i or (j in incident_set and j < i):
                continue
            if _pair_crosses(xs, ys, a, b, eu[j], ev[j]):
                total += 1
    for j in range(m):
        a, b = eu[j], ev[j]
        if v != a and v != b and _vertex_on_edge(xs, ys, v, a, b):
            total += 1
    for u in range(n):
        if u == v:
            continue
        for j in incident:
            a, b = eu[j], ev[j]
            if u != a and u != b and _vertex_on_edge(xs, ys, u, a, b):
                total += 1
    return total


# ---------------------------------------------------------------------------
# xyxy pattern machinery.
#
# A sequence contains a subsequence x y x y (x != y) iff for some symbol pair
# the restriction of the sequence to those two symbols consists of >= 4
# maximal runs. The circular variant counts runs circularly (first and last
# runs merge when they carry the same symbol). These run counts are what the
# kernels track incrementally.
# ---------------------------------------------------------------------------


def compress_labels(labels) -> tuple[list[int], int]:
    """Map arbitrary hashable labels onto 0..k-1 preserving order of first use."""
    table: dict = {}
    out = []
    for t in labels:
        if t not in table:
            table[t] = len(table)
        out.append(table[t])
    return out, len(table)


def linear_has_xyxy(labels) -> bool:
    lab, k = compress_labels(labels)
    if k < 2 or len(lab) < 4:
        return False
    last = [[-1] * k for _ in range(k)]
    runs = [[0] * k for _ in range(k)]
    for t in lab:
        for x in range(k):
            if x == t:
                continue
            a, b = (x, t) if x < t else (t, x)
            if last[a][b] != t:
                runs[a][b] += 1
                if runs[a][b] >= 4:
                    return True
                last[a][b] = t
    return False


def circular_has_xyxy(labels) -> bool:
    """True iff some rotation of the sequence linearly contains x y x y."""
    lab, k = compress_labels(labels)
    n = len(lab)
    if k < 2 or n < 4:
        return False
    for x in range(k):
        for y in range(x + 1, k):
            restriction = [t for t in lab if t == x or t == y]
            if len(restriction) < 4:
                continue
            boundaries = sum(
                1
                for i in range(len(restriction))
                if restriction[i] != restriction[i - 1]
            )
            if boundaries >= 4:
                return True
    return False


def max_xyxy_free(labels) -> tuple[int, tuple[int, ...]]:
    """Longest circularly-xyxy-free subset of the sequence, by exhaustive
    depth-first enumeration with run-count pruning.

    Returns (length, witness positions into the given representative).
    """
    lab, k = compress_labels(labels)
    n = len(lab)
    if n == 0:
        return 0, ()
    if k < 2:
        return n, tuple(range(n))

    last = [[-1] * k for _ in range(k)]
    first = [[-1] * k for _ in range(k)]
    runs = [[0] * k for _ in range(k)]
    chosen: list[int] = []
    best = 0
    best_wit: tuple[int, ...] = ()

    def try_append(t):
        """Update pair run counts for appending symbol t; None if a linear
        x y x y would be completed, else an undo log."""
        log = []
        for x in range(k):
            if x == t:
                continue
            a, b = (x, t) if x < t else (t, x)
            if last[a][b] == t:
                continue
            if runs[a][b] + 1 >= 4:
                for (aa, bb, l0, f0, r0) in log:
                    last[aa][bb] = l0
                    first[aa][bb] = f0
                    runs[aa][bb] = r0
                return None
            log.append((a, b, last[a][b], first[a][b], runs[a][b]))
            if first[a][b] == -1:
                first[a][b] = t
            last[a][b] = t
            runs[a][b] += 1
        return log

    def undo(log):
        for (a, b, l0, f0, r0) in log:
            last[a][b] = l0
            first[a][b] = f0
            runs[a][b] = r0

    def circular_free() -> bool:
        for x in range(k):
            for y in range(x + 1, k):
                r = runs[x][y]
                if r >= 2 and first[x][y] == last[x][y]:
                    r -= 1
                if r >= 4:
                    return False
        return True

    def dfs(i: int):
        nonlocal best, best_wit
        if len(chosen) + (n - i) <= best:
            return
        if i == n:
            if circular_free():
                best = len(chosen)
                best_wit = tuple(chosen)
            return
        log = try_append(lab[i])
        if log is not None:
            chosen.append(i)
            dfs(i + 1)
            chosen.pop()
            undo(log)
        dfs(i + 1)

    dfs(0)
    return best, best_wit
