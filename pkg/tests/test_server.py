import json

import pytest
from fastapi.testclient import TestClient

from untangle.construction import standard_instance
from untangle.serialize import instance_to_dict
from untangle.server import SessionRegistry, create_app


@pytest.fixture()
def client():
    return TestClient(create_app())


def create_preset(client, name="appendixA-3"):
    r = client.post("/api/games", json={"source": {"type": "preset", "name": name}})
    assert r.status_code == 201
    body = r.json()
    return body["id"], body["state"]


def test_presets_listing(client):
    r = client.get("/api/instances/presets")
    assert r.status_code == 200
    names = [p["name"] for p in r.json()["presets"]]
    assert "appendixA-3" in names and "theorem1-3-2" in names


def test_create_preset_game(client):
    sid, state = create_preset(client)
    assert state["n"] == 9
    assert state["crossings"] > 0
    assert state["status"] == "in_progress"
    assert state["bound"]["certified_fixed_upper"] == 7
    assert len(state["crossing_edges"]) == state["crossings"]
    # decimal convenience fields accompany the exact pairs
    pos = state["positions"]["0"]
    assert pos["x"][1] >= 1 and isinstance(pos["xd"], float)


def test_get_state_roundtrip(client):
    sid, state = create_preset(client)
    r = client.get(f"/api/games/{sid}")
    assert r.status_code == 200
    assert r.json() == state | {"id": sid}


def test_move_flow_and_409(client):
    sid, state = create_preset(client)
    r = client.post(f"/api/games/{sid}/moves", json={"v": 0, "x": -3, "y": -4})
    assert r.status_code == 200
    moved = r.json()
    assert moved["moves_used"] == 1
    assert moved["positions"]["0"]["x"] == [-3, 1]

    occupied = moved["positions"]["1"]
    r = client.post(
        f"/api/games/{sid}/moves",
        json={"v": 0, "x": occupied["x"], "y": occupied["y"]},
    )
    assert r.status_code == 409
    # state unchanged after the rejected move
    assert client.get(f"/api/games/{sid}").json()["moves_used"] == 1


def test_move_decimal_coordinates_rationalized(client):
    sid, _ = create_preset(client)
    r = client.post(f"/api/games/{sid}/moves", json={"v": 0, "x": -0.5, "y": "-1/3"})
    assert r.status_code == 200
    pos = r.json()["positions"]["0"]
    assert pos["x"] == [-1, 2]
    assert pos["y"] == [-1, 3]


def test_move_validation_errors(client):
    sid, _ = create_preset(client)
    assert client.post(f"/api/games/{sid}/moves", json={"v": 0, "x": 1}).status_code == 400
    assert client.post(f"/api/games/{sid}/moves", json={"v": 50, "x": 1, "y": 2}).status_code == 400
    assert client.post(f"/api/games/{sid}/moves", json={"v": 0, "x": [1, 0], "y": 2}).status_code == 400


def test_move_idempotency_key_not_reapplied(client):
    sid, _ = create_preset(client)
    body = {"v": 0, "x": -3, "y": -4, "key": "abc-123"}
    r1 = client.post(f"/api/games/{sid}/moves", json=body)
    assert r1.status_code == 200
    assert r1.json()["moves_used"] == 1
    # retransmission of the acknowledged move: state unchanged
    r2 = client.post(f"/api/games/{sid}/moves", json=body)
    assert r2.status_code == 200
    assert r2.json()["moves_used"] == 1
    assert r2.json()["positions"] == r1.json()["positions"]
    # a different key is a new move
    r3 = client.post(
        f"/api/games/{sid}/moves",
        json={"v": 0, "x": -4, "y": -4, "key": "abc-124"},
    )
    assert r3.json()["moves_used"] == 2


def test_unknown_session_404(client):
    assert client.get("/api/games/nope").status_code == 404
    assert client.post("/api/games/nope/moves", json={"v": 0, "x": 1, "y": 1}).status_code == 404
    assert client.post("/api/games/nope/undo").status_code == 404


def test_undo_roundtrip(client):
    sid, state0 = create_preset(client)
    client.post(f"/api/games/{sid}/moves", json={"v": 0, "x": -3, "y": -4})
    r = client.post(f"/api/games/{sid}/undo")
    assert r.status_code == 200
    assert r.json()["positions"] == state0["positions"]
    assert r.json()["crossings"] == state0["crossings"]
    assert client.post(f"/api/games/{sid}/undo").status_code == 400  # empty history


def test_hint_and_apply(client):
    sid, _ = create_preset(client)
    r = client.get(f"/api/games/{sid}/hint")
    assert r.status_code == 200
    h = r.json()
    r2 = client.get(f"/api/games/{sid}/hint")
    assert r2.json() == h  # deterministic without a move
    mv = client.post(
        f"/api/games/{sid}/moves", json={"v": h["v"], "x": h["x"], "y": h["y"]}
    )
    assert mv.status_code == 200
    r3 = client.get(f"/api/games/{sid}/hint")
    assert r3.status_code in (200, 204)
    if r3.status_code == 200:
        assert r3.json()["remaining"] == h["remaining"] - 1


def test_hint_204_when_solved(client):
    sid, _ = create_preset(client)
    while True:
        r = client.get(f"/api/games/{sid}/hint")
        if r.status_code == 204:
            break
        h = r.json()
        client.post(f"/api/games/{sid}/moves", json={"v": h["v"], "x": h["x"], "y": h["y"]})
    state = client.get(f"/api/games/{sid}").json()
    assert state["status"] == "solved"
    assert state["crossings"] == 0
    assert state["moves_used"] >= state["bound"]["certified_moved_lower"]


def test_log_replay_reproduces_state(client):
    sid, _ = create_preset(client)
    for move in ({"v": 0, "x": -3, "y": -4}, {"v": 4, "x": -9, "y": 1}):
        assert client.post(f"/api/games/{sid}/moves", json=move).status_code == 200
    client.post(f"/api/games/{sid}/undo")
    final = client.get(f"/api/games/{sid}").json()

    log_lines = client.get(f"/api/games/{sid}/log").text.strip().splitlines()
    entries = [json.loads(line) for line in log_lines]
    assert len(entries) == 1  # one move left after the undo

    sid2, _ = create_preset(client)
    for entry in entries:
        r = client.post(
            f"/api/games/{sid2}/moves",
            json={"v": entry["v"], "x": entry["x"], "y": entry["y"]},
        )
        assert r.status_code == 200
    replayed = client.get(f"/api/games/{sid2}").json()
    assert replayed["positions"] == final["positions"]
    assert replayed["crossings"] == final["crossings"]


def test_game_from_uploaded_instance(client):
    data = instance_to_dict(standard_instance("chain", 3, 1))
    r = client.post("/api/games", json={"source": {"type": "instance", "data": data}})
    assert r.status_code == 201
    state = r.json()["state"]
    assert state["n"] == 12
    assert state["bound"]["method"] == "persistence"


def test_game_from_random_source(client):
    r = client.post("/api/games", json={"source": {"type": "random", "n": 8, "seed": 3}})
    assert r.status_code == 201
    r2 = client.post("/api/games", json={"source": {"type": "random", "n": 8, "seed": 3}})
    assert r.json()["state"]["positions"] == r2.json()["state"]["positions"]


def test_bad_source_400(client):
    assert client.post("/api/games", json={"source": {"type": "bogus"}}).status_code == 400
    assert client.post("/api/games", json={"source": {"type": "preset", "name": "x"}}).status_code == 400


def test_session_ttl_eviction():
    fake_now = [0.0]
    registry = SessionRegistry(ttl=100.0, clock=lambda: fake_now[0])
    app = create_app(registry=registry)
    client = TestClient(app)
    sid, _ = create_preset(client)
    fake_now[0] = 50.0
    assert client.get(f"/api/games/{sid}").status_code == 200  # refreshes activity
    fake_now[0] = 149.0
    assert client.get(f"/api/games/{sid}").status_code == 200
    fake_now[0] = 260.0
    assert client.get(f"/api/games/{sid}").status_code == 404


def test_session_log_on_disk(tmp_path):
    registry = SessionRegistry(ttl=1000.0, log_dir=str(tmp_path))
    client = TestClient(create_app(registry=registry))
    sid, _ = create_preset(client)
    client.post(f"/api/games/{sid}/moves", json={"v": 0, "x": -3, "y": -4})
    client.post(f"/api/games/{sid}/undo")
    lines = (tmp_path / f"{sid}.jsonl").read_text().strip().splitlines()
    assert json.loads(lines[0])["v"] == 0
    assert json.loads(lines[1]) == {"undo": True}


def test_static_dir_serving(tmp_path):
    (tmp_path / "index.html").write_text("<html><body>untangle</body></html>")
    client = TestClient(create_app(static_dir=str(tmp_path)))
    r = client.get("/index.html")
    assert r.status_code == 200
    assert "untangle" in r.text
    # API still reachable alongside the static mount
    assert client.get("/api/instances/presets").status_code == 200
