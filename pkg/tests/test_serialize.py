import pytest

from untangle import serialize
from untangle.construction import standard_instance
from untangle.errors import ValidationError
from untangle.geometry import Point
from untangle.graph import Drawing, PlanarGraph


def test_point_quad_roundtrip():
    p = Point("22/7", "-3/5")
    assert serialize.point_from_quad(serialize.point_to_quad(p)) == p


def test_point_quad_rejects_zero_denominator():
    with pytest.raises(ValidationError):
        serialize.point_from_quad([1, 0, 1, 1])
    with pytest.raises(ValidationError):
        serialize.point_from_quad([1, 2, 3])


def test_instance_roundtrip():
    inst = standard_instance("chain", 3, 2)
    data = serialize.instance_to_dict(inst)
    back = serialize.instance_from_dict(data)
    assert back.graph.edges == inst.graph.edges
    assert back.clusters == inst.clusters
    assert back.bad_drawing == inst.bad_drawing
    assert back.points == inst.points
    assert back.family == inst.family
    assert back.k == inst.k and back.s == inst.s and back.m == inst.m


def test_instance_roundtrip_square_without_s():
    inst = standard_instance("square", 4)
    back = serialize.instance_from_dict(serialize.instance_to_dict(inst))
    assert back.s is None
    assert back.family == "appendixA"


def test_family_alias_accepted():
    inst = standard_instance("square", 3)
    data = serialize.instance_to_dict(inst)
    data["family"]["tag"] = "square"
    assert serialize.instance_from_dict(data).family == "appendixA"


def test_loaded_from_dict_bare_graph():
    g = PlanarGraph.from_edges(3, [(0, 1), (1, 2)])
    d = Drawing((Point(0, 0), Point(1, 0), Point(2, 1)))
    data = serialize.redraw_to_dict(g, d)
    g2, d2, inst = serialize.loaded_from_dict(data)
    assert inst is None
    assert g2.edges == g.edges
    assert d2 == d


def test_malformed_inputs_rejected():
    with pytest.raises(ValidationError):
        serialize.graph_from_dict({"edges": []})  # missing n
    with pytest.raises(ValidationError):
        serialize.graph_from_dict({"n": 2, "edges": [[0, 0]]})  # self loop
    with pytest.raises(ValidationError):
        serialize.drawing_from_dict(2, {"0": [0, 1, 0, 1]})  # not total
    with pytest.raises(ValidationError):
        serialize.drawing_from_dict(1, {"zero": [0, 1, 0, 1]})
    inst = standard_instance("chain", 3, 1)
    data = serialize.instance_to_dict(inst)
    del data["family"]["s"]
    with pytest.raises(ValidationError):
        serialize.instance_from_dict(data)


def test_file_roundtrip(tmp_path):
    inst = standard_instance("square", 3)
    path = tmp_path / "h9.json"
    serialize.save_file(str(path), serialize.instance_to_dict(inst))
    data = serialize.load_file(str(path))
    assert serialize.instance_from_dict(data).bad_drawing == inst.bad_drawing
    bad = tmp_path / "broken.json"
    bad.write_text("{not json")
    with pytest.raises(ValidationError):
        serialize.load_file(str(bad))
