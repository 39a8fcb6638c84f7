"""Fix/shift accounting and the certified bounds for the standard instances.

Two certificate methods:

* circle_lemma — the boundary label sequence of a standard bad drawing is
  the block sequence on (m, k); any crossing-free redrawing keeps a label
  subsequence that, after the exceptional-outer-face relabeling, is an
  xyxy-free subsequence of the block sequence on (m+2, k). Hence
  fixed <= m + k + 1, uniformly over both cases.
* persistence — chain family only: at most k-1 clusters can keep two or
  more vertices, so moved >= s(k-1).

Certificates are only issued for instances that pass the standardness
audit; arbitrary instances get an UnsupportedInstanceError instead of an
unsound number.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .construction import FAMILY_CHAIN, FAMILY_SQUARE, ClusteredInstance
from .errors import UnsupportedInstanceError, ValidationError
from .geometry import Point, convex_hull, closed_segments_intersect, point_in_convex_polygon
from .graph import Drawing, induced_subgraph, is_maximal_planar, is_planar, is_three_connected
from .sequences import CircularSequence, make_block_sequence

METHOD_CIRCLE = "circle_lemma"
METHOD_PERSISTENCE = "persistence"


@dataclass(frozen=True)
class FixReport:
    fixed_count: int
    moved_count: int
    fixed_vertices: frozenset[int]

    def __post_init__(self):
        if len(self.fixed_vertices) != self.fixed_count:
            raise ValidationError("fixed_vertices size disagrees with fixed_count")


def count_fixed(before: Drawing, after: Drawing) -> FixReport:
    """Exact per-vertex equality of the two drawings."""
    if before.n != after.n:
        raise ValidationError("drawings cover different vertex sets")
    fixed = frozenset(v for v in range(before.n) if before[v] == after[v])
    return FixReport(len(fixed), before.n - len(fixed), fixed)


def _require_bad_drawing(inst: ClusteredInstance):
    if inst.bad_drawing is None or inst.points is None:
        raise ValidationError("instance carries no bad drawing on a convex point set")


def label_sequence(inst: ClusteredInstance) -> CircularSequence:
    """1-based cluster labels of the bad drawing in boundary order."""
    _require_bad_drawing(inst)
    at_point = {inst.bad_drawing[v]: v for v in range(inst.n)}
    labels = []
    for pt in inst.points.points:
        v = at_point.get(pt)
        if v is None:
            raise ValidationError("bad drawing does not sit on the instance's point set")
        labels.append(inst.cluster_of(v) + 1)
    return CircularSequence(labels)


def persistent_clusters(inst: ClusteredInstance, after: Drawing) -> frozenset[int]:
    """1-based indices i < m of clusters keeping >= 2 vertices in place.

    The last cluster is excluded by convention; it plays the role of the
    possible outer-face exception in the analysis.
    """
    _require_bad_drawing(inst)
    if after.n != inst.n:
        raise ValidationError("redrawing does not cover the instance")
    fixed = count_fixed(inst.bad_drawing, after).fixed_vertices
    out = set()
    for i in range(inst.m - 1):
        if sum(1 for v in inst.clusters[i] if v in fixed) >= 2:
            out.add(i + 1)
    return frozenset(out)


@dataclass(frozen=True)
class BoundCertificate:
    family: str
    k: int
    m: int
    n: int
    s: Optional[int]
    method: str
    label_seq: CircularSequence
    certified_fixed_upper: int
    certified_moved_lower: int

    def __post_init__(self):
        if self.certified_fixed_upper + self.certified_moved_lower != self.n:
            raise ValidationError("certificate sides must sum to n")


def validate_standard_instance(inst: ClusteredInstance) -> CircularSequence:
    """Audit that an instance matches the standard builders + interleaving.

    Returns the boundary label sequence. Raises UnsupportedInstanceError
    when any structural property fails; certificates for such instances
    would be unsound.
    """
    problems = []
    if inst.family not in (FAMILY_CHAIN, FAMILY_SQUARE):
        problems.append(f"unknown family {inst.family!r}")
    if inst.family == FAMILY_CHAIN:
        if inst.s is None or inst.m != inst.s + inst.k:
            problems.append("chain family needs m = s + k")
    if inst.family == FAMILY_SQUARE and inst.m != inst.k:
        problems.append("square family needs m = k")
    if inst.n != inst.k * inst.m:
        problems.append("vertex count is not k*m")
    expected = tuple(tuple(range(i * inst.k, (i + 1) * inst.k)) for i in range(inst.m))
    if inst.clusters != expected:
        problems.append("clusters are not the contiguous standard partition")
    if problems:
        raise UnsupportedInstanceError("; ".join(problems))

    for i, cluster in enumerate(inst.clusters):
        sub, _ = induced_subgraph(inst.graph, cluster)
        if not is_maximal_planar(sub):
            raise UnsupportedInstanceError(f"cluster {i + 1} is not maximal planar")
    if not is_planar(inst.graph):
        raise UnsupportedInstanceError("graph is not planar")
    if not is_three_connected(inst.graph):
        raise UnsupportedInstanceError("graph is not 3-connected")

    try:
        _require_bad_drawing(inst)
        seq = label_sequence(inst)
    except ValidationError as exc:
        raise UnsupportedInstanceError(str(exc)) from exc
    if seq != make_block_sequence(inst.m, inst.k):
        raise UnsupportedInstanceError(
            "bad drawing is not the standard interleaving on the convex boundary"
        )
    return seq


def certified_fixed_upper_bound(inst: ClusteredInstance,
                                method: Optional[str] = None) -> BoundCertificate:
    """Certificate for a standard instance.

    circle_lemma: fixed <= m + k + 1 (equals 2k+1 for the square family).
    persistence (chain only): moved >= s(k-1) = (1 - 1/k) n - k^2 + k.
    """
    seq = validate_standard_instance(inst)
    if method is None:
        method = METHOD_PERSISTENCE if inst.family == FAMILY_CHAIN else METHOD_CIRCLE
    if method == METHOD_CIRCLE:
        fixed_upper = inst.m + inst.k + 1
        moved_lower = inst.n - fixed_upper
    elif method == METHOD_PERSISTENCE:
        if inst.family != FAMILY_CHAIN:
            raise UnsupportedInstanceError(
                "the persistence bound applies to the chain family only"
            )
        moved_lower = inst.s * (inst.k - 1)
        fixed_upper = inst.n - moved_lower
    else:
        raise ValidationError(f"unknown certificate method {method!r}")
    return BoundCertificate(
        family=inst.family,
        k=inst.k,
        m=inst.m,
        n=inst.n,
        s=inst.s,
        method=method,
        label_seq=seq,
        certified_fixed_upper=fixed_upper,
        certified_moved_lower=moved_lower,
    )


@dataclass(frozen=True)
class BoundRow:
    k: int
    s: int
    n: int
    moved_lower: int  # persistence: s(k-1)
    fixed_upper: int  # circle lemma on (m+2, k): s + 2k + 1


def theorem_bound_table(kmax: int, smax: int) -> list[BoundRow]:
    """Instantiate the chain-family bound formulas over a parameter grid.

    Report generation only; k >= 2 is admitted here even though the
    geometric builders need k >= 3.
    """
    if kmax < 2:
        raise ValidationError("bound table needs kmax >= 2")
    if smax < 1:
        raise ValidationError("bound table needs smax >= 1 (s >= 1 required)")
    rows = []
    for k in range(2, kmax + 1):
        for s in range(1, smax + 1):
            n = k * (s + k)
            rows.append(BoundRow(k, s, n, s * (k - 1), s + 2 * k + 1))
    return rows


# ---------------------------------------------------------------------------
# Optional diagnostic (not part of any certificate)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClusterHullReport:
    hulls: tuple[tuple[Point, ...], ...]
    overlapping_pairs: tuple[tuple[int, int], ...]  # 1-based cluster indices

    @property
    def pairwise_disjoint(self) -> bool:
        return not self.overlapping_pairs


def _hulls_intersect(p: list[Point], q: list[Point]) -> bool:
    def edges(poly):
        if len(poly) < 2:
            return []
        if len(poly) == 2:
            return [(poly[0], poly[1])]
        return [(poly[i], poly[(i + 1) % len(poly)]) for i in range(len(poly))]

    for a, b in edges(p):
        for c, d in edges(q):
            if closed_segments_intersect(a, b, c, d):
                return True
    if any(point_in_convex_polygon(q, v) for v in p):
        return True
    if any(point_in_convex_polygon(p, v) for v in q):
        return True
    return False


def cluster_hulls_report(inst: ClusteredInstance, after: Drawing) -> ClusterHullReport:
    """Convex hulls of the clusters in a redrawing and which pairs overlap.

    Inspection aid for the proof's triangle picture; certificates never
    depend on it.
    """
    if after.n != inst.n:
        raise ValidationError("redrawing does not cover the instance")
    hulls = [convex_hull([after[v] for v in cluster]) for cluster in inst.clusters]
    overlapping = []
    for i in range(inst.m):
        for j in range(i + 1, inst.m):
            if _hulls_intersect(hulls[i], hulls[j]):
                overlapping.append((i + 1, j + 1))
    return ClusterHullReport(
        tuple(tuple(h) for h in hulls), tuple(overlapping)
    )
