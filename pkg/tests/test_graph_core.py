from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import complete_graph, cycle_graph
from untangle.construction import build_chain_graph
from untangle.errors import ValidationError
from untangle.geometry import Point
from untangle.graph import (
    Drawing,
    PlanarGraph,
    apply_affine,
    count_crossings,
    crossing_report,
    crossings_involving,
    euler_check,
    induced_subgraph,
    is_maximal_planar,
    is_planar,
    is_plane_drawing,
    is_three_connected,
    planar_rotation,
    trace_faces,
)

K3 = complete_graph(3)
K4 = complete_graph(4)
K5 = complete_graph(5)
C5 = cycle_graph(5)


def drawing(*coords) -> Drawing:
    return Drawing(tuple(Point(x, y) for x, y in coords))


# ---------------------------------------------------------------------------
# type invariants
# ---------------------------------------------------------------------------


def test_graph_rejects_self_loops_and_bad_ids():
    with pytest.raises(ValidationError):
        PlanarGraph.from_edges(3, [(0, 0)])
    with pytest.raises(ValidationError):
        PlanarGraph.from_edges(3, [(0, 5)])
    with pytest.raises(ValidationError):
        PlanarGraph(0, frozenset())


def test_parallel_edges_collapse():
    g = PlanarGraph.from_edges(3, [(0, 1), (1, 0), (0, 1)])
    assert g.edge_count == 1


def test_rotation_must_cover_incident_edges():
    with pytest.raises(ValidationError):
        PlanarGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)], rotation=[(1,), (0, 2), (1, 0)])
    g = PlanarGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)], rotation=[(1, 2), (0, 2), (1, 0)])
    assert g.rotation is not None


def test_drawing_must_be_injective_and_total():
    with pytest.raises(ValidationError):
        drawing((0, 0), (0, 0))
    with pytest.raises(ValidationError):
        Drawing.from_map(3, {0: Point(0, 0), 1: Point(1, 1)})


# ---------------------------------------------------------------------------
# planarity / connectivity / maximality
# ---------------------------------------------------------------------------


def test_is_planar_examples():
    assert is_planar(K4)
    assert not is_planar(K5)
    assert is_planar(build_chain_graph(3, 2).graph)


def test_is_three_connected_examples():
    assert is_three_connected(K4)
    assert not is_three_connected(C5)
    assert is_three_connected(build_chain_graph(3, 2).graph)
    with pytest.raises(ValidationError):
        is_three_connected(K3)


def test_is_maximal_planar_examples():
    assert is_maximal_planar(K3)
    assert is_maximal_planar(K4)
    assert not is_maximal_planar(C5)  # 5 edges < 3*5-6
    assert not is_maximal_planar(K5)  # 10 edges > 3*5-6
    with pytest.raises(ValidationError):
        is_maximal_planar(complete_graph(2))


def test_maximal_planar_implies_planar():
    for g in (K3, K4, build_chain_graph(3, 1).graph):
        if g.vertex_count >= 3 and is_maximal_planar(g):
            assert is_planar(g)


# ---------------------------------------------------------------------------
# crossings
# ---------------------------------------------------------------------------


def test_four_cycle_bowtie_has_one_crossing():
    g = cycle_graph(4)
    d = drawing((0, 0), (1, 1), (1, 0), (0, 1))
    assert count_crossings(g, d) == 1
    pairs, incidences = crossing_report(g, d)
    assert pairs == [((0, 1), (2, 3))]
    assert incidences == []


def test_k4_inside_vs_convex():
    inside = drawing((0, 0), (10, 0), (0, 10), (2, 2))
    convex = drawing((0, 0), (10, 0), (10, 10), (0, 10))
    assert count_crossings(K4, inside) == 0
    assert count_crossings(K4, convex) == 1  # the two diagonals
    assert is_plane_drawing(K4, inside)
    assert not is_plane_drawing(K4, convex)


def test_vertex_on_edge_counts_as_crossing():
    g = PlanarGraph.from_edges(3, [(0, 1)])
    d = drawing((0, 0), (4, 0), (2, 0))  # vertex 2 interior to edge (0,1)
    assert count_crossings(g, d) == 1
    assert not is_plane_drawing(g, d)


def test_collinear_overlap_counts_as_crossing():
    g = PlanarGraph.from_edges(4, [(0, 1), (2, 3)])
    d = drawing((0, 0), (3, 0), (1, 0), (5, 0))
    # overlap of the two segments, plus vertices 2 and 1 interior to the
    # other edge respectively
    assert count_crossings(g, d) == 3


def test_shared_endpoint_touch_is_not_a_crossing():
    g = PlanarGraph.from_edges(3, [(0, 1), (1, 2)])
    d = drawing((0, 0), (1, 0), (2, 1))
    assert count_crossings(g, d) == 0
    # but a collinear doubling-back overlap is
    d2 = drawing((0, 0), (2, 0), (1, 0))
    assert count_crossings(g, d2) > 0


def test_degenerate_drawings_have_no_tolerance():
    g = PlanarGraph.from_edges(3, [(0, 1)])
    eps = Fraction(1, 10 ** 30)
    d = Drawing((Point(0, 0), Point(4, 0), Point(2, eps)))
    assert count_crossings(g, d) == 0  # strictly off the segment
    d0 = Drawing((Point(0, 0), Point(4, 0), Point(2, 0)))
    assert count_crossings(g, d0) == 1  # exactly on it


@settings(max_examples=40, deadline=None)
@given(
    a=st.integers(min_value=1, max_value=5),
    b=st.integers(min_value=-3, max_value=3),
    d=st.integers(min_value=1, max_value=5),
    tx=st.integers(min_value=-50, max_value=50),
    ty=st.integers(min_value=-50, max_value=50),
)
def test_crossing_count_affine_invariant(a, b, d, tx, ty):
    # upper-triangular positive-determinant map: det = a*d > 0
    g = cycle_graph(6)
    base = drawing((0, 0), (5, 1), (2, 4), (6, 6), (1, 2), (4, 3))
    transformed = apply_affine(base, a, b, tx, 0, d, ty)
    assert count_crossings(g, base) == count_crossings(g, transformed)


def test_crossings_involving_matches_definition():
    g = K4
    d = drawing((0, 0), (10, 0), (10, 10), (0, 10))
    # the diagonal crossing involves vertices 0,2 (edge 0-2) and 1,3 (edge 1-3)
    for v in range(4):
        assert crossings_involving(g, d, v) == 1


# ---------------------------------------------------------------------------
# rotation systems and faces
# ---------------------------------------------------------------------------


def test_planar_rotation_euler_check_k4():
    g = planar_rotation(K4)
    faces = trace_faces(g)
    assert len(faces) == 4
    assert all(len(f) == 3 for f in faces)
    assert euler_check(g)


def test_planar_rotation_rejects_k5():
    with pytest.raises(ValidationError):
        planar_rotation(K5)


def test_euler_check_on_cycle():
    g = planar_rotation(C5)
    assert euler_check(g)
    assert len(trace_faces(g)) == 2


def test_induced_subgraph():
    sub, index = induced_subgraph(K4, [1, 2, 3])
    assert sub.vertex_count == 3
    assert sub.edge_count == 3
    assert set(index) == {1, 2, 3}
