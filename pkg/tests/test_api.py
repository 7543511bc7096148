import pytest
from fastapi.testclient import TestClient

from spcops.api import create_app
from spcops.io import graph_to_obj
from spcops.graph import Graph


@pytest.fixture
def client():
    return TestClient(create_app())


def make_game(client, g: Graph, exit_vertex=0):
    r = client.post("/games", json={"graph": graph_to_obj(g), "exit": exit_vertex})
    assert r.status_code == 201, r.text
    return r.json()


def test_health(client):
    assert client.get("/health").json() == {"status": "ok"}


def test_create_and_get(client, bowtie):
    view = make_game(client, bowtie)
    assert view["phase"] == "placing-free-cops"
    assert view["exit"] == 0
    assert view["graph"]["n"] == 5
    got = client.get(f"/games/{view['id']}")
    assert got.status_code == 200
    assert got.json()["phase"] == "placing-free-cops"


def test_create_rejects_k4(client, k4):
    r = client.post("/games", json={"graph": graph_to_obj(k4), "exit": 0})
    assert r.status_code == 400
    assert r.json()["code"] == "not-series-parallel"


def test_create_rejects_bad_exit(client, bowtie):
    r = client.post("/games", json={"graph": graph_to_obj(bowtie), "exit": 9})
    assert r.status_code == 400
    assert r.json()["code"] == "invalid-exit"


def test_placement_triggers_cop_reply(client, bowtie):
    view = make_game(client, bowtie)
    r = client.post(f"/games/{view['id']}/placement", json={"free_cop": 0, "robber": 4})
    assert r.status_code == 200
    body = r.json()
    # cops have already replied: it is the robber's turn (or the game ended)
    assert body["phase"] in ("robber-turn", "cops-won", "robber-won")
    assert len(body["cops"]) == 2


def test_full_game_and_legal_moves(client, bowtie):
    view = make_game(client, bowtie)
    sid = view["id"]
    body = client.post(f"/games/{sid}/placement", json={"free_cop": 0, "robber": 4}).json()
    moves = 0
    while body["phase"] == "robber-turn" and moves < 100:
        legal = body["legal_robber_moves"]
        assert body["robber"] in legal  # passing is always available
        body = client.post(f"/games/{sid}/robber-move", json={"to": legal[-1]}).json()
        moves += 1
    assert body["phase"] == "cops-won"  # the strategy wins whatever we do


def test_illegal_move_rejected_without_state_change(client, bowtie):
    view = make_game(client, bowtie)
    sid = view["id"]
    body = client.post(f"/games/{sid}/placement", json={"free_cop": 1, "robber": 4}).json()
    if body["phase"] != "robber-turn":
        pytest.skip("game over at placement")
    before = client.get(f"/games/{sid}").json()
    bad = [v for v in range(5) if v not in body["legal_robber_moves"]][0]
    r = client.post(f"/games/{sid}/robber-move", json={"to": bad})
    assert r.status_code == 400
    assert r.json()["code"] == "illegal-move"
    assert sorted(r.json()["legal_moves"]) == sorted(body["legal_robber_moves"])
    assert client.get(f"/games/{sid}").json() == before


def test_wrong_phase_conflict(client, bowtie):
    view = make_game(client, bowtie)
    r = client.post(f"/games/{view['id']}/robber-move", json={"to": 1})
    assert r.status_code == 409
    assert r.json()["code"] == "wrong-phase"


def test_audit_consistency(client, theta):
    view = make_game(client, theta, exit_vertex=1)
    sid = view["id"]
    body = client.post(f"/games/{sid}/placement", json={"free_cop": 3, "robber": 2}).json()
    steps = 0
    while body["phase"] == "robber-turn" and steps < 50:
        body = client.post(
            f"/games/{sid}/robber-move", json={"to": body["legal_robber_moves"][0]}
        ).json()
        steps += 1
    assert client.get(f"/games/{sid}/audit").json() == {"consistent": True}


def test_delete(client, bowtie):
    view = make_game(client, bowtie)
    sid = view["id"]
    assert client.delete(f"/games/{sid}").json() == {"deleted": sid}
    assert client.get(f"/games/{sid}").status_code == 404
    assert client.delete(f"/games/{sid}").status_code == 404


def test_snapshot_dir(tmp_path, bowtie):
    client = TestClient(create_app(snapshot_dir=str(tmp_path)))
    view = make_game(client, bowtie)
    assert (tmp_path / f"{view['id']}.json").exists()
